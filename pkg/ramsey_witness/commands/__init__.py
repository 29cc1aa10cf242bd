import io
import json
import logging
import functools
from logging import Formatter

from ramsey_witness import cli, __version__
from ramsey_witness.config import RwConfig
from ramsey_witness.logger import logger, stream_handler
from ramsey_witness.exceptions import (
    RwError,
    ValidationError,
    BudgetExceededError)
from ramsey_witness.constants import (
    EXIT_FOUND,
    EXIT_INPUT,
    EXIT_BUDGET)
from ramsey_witness.bipartite.formats import (
    read_document,
    to_text)
from ramsey_witness.bipartite.workflow import export_dot


class Settings(object):
    """Options shared by every subcommand, resolved once per run."""

    def __init__(self, config=None, budget=None, verbose=False, format=None):
        self.config = RwConfig(content=config, budget=budget)
        self.verbose = verbose
        self.format = format

    @property
    def budget(self):
        return self.config.budget

    @property
    def json(self):
        return self.format == 'json'


def format_json(format):
    if format == 'json':
        stream_handler.setFormatter(Formatter(fmt='%(message)s'))


@cli.group('rw')
@cli.options.config
@cli.options.budget
@cli.options.verbose
@cli.options.format
@cli.click.version_option(__version__.version)
@cli.click.pass_context
def rw(ctx, config, budget, verbose, format):
    """Certificates for (induced) bipartite Ramsey statements."""
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    format_json(format)
    try:
        ctx.obj = Settings(config, budget, verbose, format)
    except (RwError, OSError) as e:
        if verbose:
            raise e
        logger.error(str(e))
        ctx.exit(EXIT_INPUT)


def outcome(func):
    """Run a subcommand and turn its result or failure into an exit
    code: the returned code, 2 when the budget ran out, 3 for bad input.
    """
    @functools.wraps(func)
    @cli.click.pass_context
    def wrapper(ctx, *args, **kwargs):
        settings = ctx.find_object(Settings) or Settings()
        try:
            code = func(settings, *args, **kwargs)
        except BudgetExceededError as e:
            if settings.verbose:
                raise e
            logger.error(str(e))
            ctx.exit(EXIT_BUDGET)
        except (RwError, OSError) as e:
            if settings.verbose:
                raise e
            logger.error(str(e))
            ctx.exit(EXIT_INPUT)
        ctx.exit(EXIT_FOUND if code is None else code)
    return wrapper


def load_document(path, require_graph=True):
    document = read_document(path)
    if require_graph and document.graph is None:
        raise ValidationError('{} holds no graph'.format(path))
    return document


def load_coloring(path):
    document = load_document(path)
    if document.coloring is None:
        raise ValidationError('{} holds no coloring'.format(path))
    return document.coloring


def emit(settings, lines, record):
    if settings.json:
        cli.click.echo(json.dumps(record, sort_keys=True))
    else:
        cli.click.echo(to_text(lines), nl=False)


def write_text(path, text):
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info('Wrote {}'.format(path))


def write_dot(settings, path, graph, coloring=None, witness=None):
    if path:
        write_text(path, export_dot(
            graph, coloring, witness, attributes=settings.config.dot))


def _json_label(label):
    return list(label) if isinstance(label, tuple) else label


def witness_record(witness):
    return {
        'found': True,
        'color': witness.claimed_color.code
        if witness.claimed_color is not None else None,
        'left': list(witness.host_left),
        'right': [_json_label(r) for r in witness.host_right],
    }
