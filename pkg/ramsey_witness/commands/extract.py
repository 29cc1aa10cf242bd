import io

from ramsey_witness import cli
from ramsey_witness.logger import logger
from ramsey_witness.constants import (EXIT_FOUND, EXIT_ABSENT)
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.commands import (
    emit,
    outcome,
    write_dot,
    load_coloring,
    load_document,
    witness_record)
from ramsey_witness.bipartite.utils import Budget
from ramsey_witness.bipartite.formats import (
    dump_witness,
    parse_vertex_set)
from ramsey_witness.bipartite.graph_core import (
    verify_witness,
    find_monochromatic_copy)
from ramsey_witness.bipartite.constructions import embed_into_set_bipartite
from ramsey_witness.bipartite.pigeonhole import extract_monochromatic_complete
from ramsey_witness.bipartite.hyper_ramsey import derived_color_of
from ramsey_witness.bipartite.induced_extract import extract_induced
from ramsey_witness.bipartite.workflow import run_pipeline


def emit_witness(settings, witness, host_comment=None, **extra):
    lines = dump_witness(witness)
    if host_comment:
        lines.insert(0, '# host {}'.format(host_comment))
    record = witness_record(witness)
    record.update(extra)
    emit(settings, lines, record)


def emit_absent(settings, message):
    logger.info(message)
    if settings.json:
        emit(settings, [], {'found': False})
    return EXIT_ABSENT


@cli.command('embed')
@cli.options.pattern_path
@cli.options.dot
@outcome
def embed(settings, pattern_path, dot=None):
    """Embed a pattern as an induced subgraph of B_{a,b}."""
    pattern = load_document(pattern_path).graph
    result = embed_into_set_bipartite(pattern)
    logger.info('Pattern embeds into B_{{{},{}}}'.format(result.a, result.b))
    write_dot(settings, dot, result.host, witness=result.witness)
    emit_witness(settings, result.witness,
                 host_comment='setgraph {} {}'.format(result.a, result.b),
                 a=result.a, b=result.b)


@cli.command('extract-complete')
@cli.options.coloring_path
@cli.options.a
@cli.options.b
@cli.options.dot
@outcome
def extract_complete(settings, coloring_path, a, b, dot=None):
    """Monochromatic K_{a,b} inside a 2-colored K_{n,k}."""
    coloring = load_coloring(coloring_path)
    witness = extract_monochromatic_complete(coloring, a, b)
    write_dot(settings, dot, coloring.graph, coloring, witness)
    emit_witness(settings, witness)


def read_vertex_set(path):
    with io.open(path, 'r', encoding='utf-8') as f:
        return parse_vertex_set(f.read())


@cli.command('extract-induced')
@cli.options.coloring_path
@cli.options.a
@cli.options.b
@cli.options.homogeneous
@cli.options.dot
@outcome
def extract_induced_command(settings, coloring_path, a, b, homogeneous,
                            dot=None):
    """Induced monochromatic B_{a,b} from a homogeneous set of a colored
    B_{n,2b-1}."""
    coloring = load_coloring(coloring_path)
    vertices = sorted(read_vertex_set(homogeneous))
    if len(vertices) < 2 * b - 1:
        raise ValidationError(
            'homogeneous set needs at least {} vertices'.format(2 * b - 1))
    derived = derived_color_of(coloring, vertices[:2 * b - 1], b)
    logger.info('Homogeneous set carries {}'.format(derived.code))
    witness = extract_induced(
        vertices, derived, a, b, coloring.graph, coloring)
    write_dot(settings, dot, coloring.graph, coloring, witness)
    emit_witness(settings, witness, derived=derived.code)


@cli.command('find-induced')
@cli.options.pattern_path
@cli.options.coloring_path
@cli.options.oracle
@cli.options.not_induced
@cli.options.dot
@outcome
def find_induced(settings, pattern_path, coloring_path, oracle=False,
                 not_induced=False, dot=None):
    """Monochromatic induced copy of a pattern in a colored host."""
    pattern = load_document(pattern_path).graph
    coloring = load_coloring(coloring_path)
    budget = Budget(settings.budget, what='find-induced')
    if oracle or not_induced:
        witness = find_monochromatic_copy(
            coloring.graph, coloring, pattern,
            induced=not not_induced, budget=budget)
    else:
        result = run_pipeline(pattern, coloring, budget=budget)
        witness = result.witness
    if witness is None:
        return emit_absent(settings, 'No monochromatic copy found')
    logger.info('Found a {} copy after {} checks'.format(
        witness.claimed_color.name, budget.spent))
    write_dot(settings, dot, coloring.graph, coloring, witness)
    emit_witness(settings, witness)
    return EXIT_FOUND


@cli.command('verify')
@cli.options.witness_path
@cli.options.host
@cli.options.not_induced
@outcome
def verify(settings, witness_path, host, not_induced=False):
    """Check a witness document against a host graph or coloring."""
    document = load_document(host)
    witness = load_document(witness_path).witness(document.graph)
    if witness.claimed_color is not None and document.coloring is None:
        logger.warning('Host has no coloring, the claimed color is not '
                       'checked')
    valid = verify_witness(document.graph, document.coloring, witness,
                           induced=not not_induced)
    if settings.json:
        emit(settings, [], {'valid': valid})
    else:
        cli.click.echo('valid' if valid else 'invalid')
    return EXIT_FOUND if valid else EXIT_ABSENT
