import click

from ramsey_witness import helptexts
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.bipartite.models import Color

CLICK_CONTEXT_SETTINGS = dict(
    help_option_names=['-h', '--help'])


class ColorParamType(click.types.StringParamType):
    name = 'color'

    def convert(self, value, param, ctx):
        try:
            return Color.from_code(value)
        except ValidationError as e:
            self.fail(str(e), param, ctx)


def group(name):
    return click.group(name=name, context_settings=CLICK_CONTEXT_SETTINGS)


def command(*args, **kwargs):
    return click.command(*args, **kwargs)


def positive(name, help_text, required=True, default=None):
    return click.option(
        '--{}'.format(name.replace('_', '-')),
        name,
        required=required and default is None,
        default=default,
        type=click.IntRange(min=1),
        help=help_text)


class Options(object):
    def __init__(self):

        self.graph_path = click.argument(
            'graph-path',
            type=click.Path(dir_okay=False),
        )

        self.pattern_path = click.argument(
            'pattern-path',
            type=click.Path(dir_okay=False),
        )

        self.coloring_path = click.argument(
            'coloring-path',
            type=click.Path(dir_okay=False),
        )

        self.subset_coloring_path = click.argument(
            'subset-coloring-path',
            type=click.Path(dir_okay=False),
        )

        self.witness_path = click.argument(
            'witness-path',
            type=click.Path(dir_okay=False),
        )

        self.config = click.option(
            '-c',
            '--config',
            default=None,
            type=click.Path(),
            multiple=False,
            help=helptexts.c)

        self.budget = click.option(
            '--budget',
            default=None,
            type=click.IntRange(min=1),
            help=helptexts.budget)

        self.verbose = click.option(
            '-v',
            '--verbose',
            default=False,
            type=click.BOOL,
            is_flag=True,
            multiple=False,
            help=helptexts.v)

        self.format = click.option(
            '-f',
            '--format',
            default=None,
            type=click.Choice(['json']),
            multiple=False,
            help=helptexts.f)

        self.dot = click.option(
            '--dot',
            default=None,
            type=click.Path(dir_okay=False),
            help=helptexts.dot)

        self.n = positive('n', helptexts.n)
        self.k = positive('k', helptexts.k)
        self.a = positive('a', helptexts.a)
        self.b = positive('b', helptexts.b)
        self.s = positive('s', helptexts.s)
        self.arity = positive('arity', helptexts.arity)
        self.palette = positive('palette', helptexts.palette)
        self.size = positive('size', helptexts.size)
        self.max_n = positive('max_n', helptexts.max_n)
        self.workers = positive(
            'workers', helptexts.workers, required=False)

        self.explicit = click.option(
            '--explicit',
            default=False,
            is_flag=True,
            help=helptexts.explicit)

        self.confirm_next = click.option(
            '--confirm-next',
            default=False,
            is_flag=True,
            help=helptexts.confirm_next)

        self.counterexample = click.option(
            '--counterexample',
            default=None,
            type=click.Path(dir_okay=False),
            help=helptexts.counterexample)

        self.homogeneous = click.option(
            '--homogeneous',
            required=True,
            type=click.Path(dir_okay=False),
            help=helptexts.homogeneous)

        self.host = click.option(
            '--host',
            required=True,
            type=click.Path(dir_okay=False),
            help=helptexts.host)

        self.witness = click.option(
            '--witness',
            default=None,
            type=click.Path(dir_okay=False),
            help=helptexts.witness)

        self.color = click.option(
            '--color',
            default='R',
            type=ColorParamType(),
            help=helptexts.color)

        self.seed = click.option(
            '--seed',
            default=None,
            type=click.INT,
            help=helptexts.seed)

        self.not_induced = click.option(
            '--not-induced',
            default=False,
            is_flag=True,
            help=helptexts.not_induced)

        self.oracle = click.option(
            '--oracle',
            default=False,
            is_flag=True,
            help=helptexts.oracle)


options = Options()
