import sys

import click

from ramsey_witness.constants import EXIT_INPUT
from ramsey_witness.commands import rw
from ramsey_witness.commands.graphs import (
    build,
    color,
    params,
    dot)
from ramsey_witness.commands.extract import (
    embed,
    extract_complete,
    extract_induced_command,
    find_induced,
    verify)
from ramsey_witness.commands.hyper import (
    derive,
    find_homogeneous,
    ramsey_number)

for subcommand in (build, color, embed, extract_complete, derive,
                   find_homogeneous, extract_induced_command, find_induced,
                   verify, ramsey_number, params, dot):
    rw.add_command(subcommand)


def main(args=None):
    """Console entry point; usage errors exit with the input error code."""
    try:
        code = rw.main(args=args, prog_name='rw', standalone_mode=False)
    except click.exceptions.Exit as e:
        code = e.exit_code
    except click.ClickException as e:
        e.show()
        code = EXIT_INPUT
    except click.Abort:
        click.echo('Aborted!', err=True)
        code = EXIT_INPUT
    sys.exit(code or 0)


if __name__ == "__main__":
    main()
