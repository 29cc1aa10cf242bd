from ramsey_witness import cli
from ramsey_witness.logger import logger
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.constants import (EXIT_FOUND, EXIT_ABSENT)
from ramsey_witness.commands import (
    emit,
    outcome,
    write_text,
    load_document,
    load_coloring)
from ramsey_witness.bipartite.formats import (
    to_text,
    dump_subset_coloring)
from ramsey_witness.bipartite.hyper_ramsey import (
    DerivedColor,
    derive_coloring,
    ramsey_search,
    find_homogeneous_set)


def _value_record(value):
    if isinstance(value, DerivedColor):
        return value.code
    return value


@cli.command('derive-coloring')
@cli.options.coloring_path
@cli.options.b
@outcome
def derive(settings, coloring_path, b):
    """Color the (2b-1)-subsets of [n] from a colored B_{n,2b-1}."""
    derived = derive_coloring(load_coloring(coloring_path), b)
    emit(settings, dump_subset_coloring(derived), {
        'n': derived.n,
        'arity': derived.arity,
        'palette': derived.palette_size,
        'values': {','.join(str(x) for x in subset): _value_record(value)
                   for subset, value in derived.items()},
    })


@cli.command('find-homogeneous')
@cli.options.subset_coloring_path
@cli.options.s
@outcome
def find_homogeneous(settings, subset_coloring_path, s):
    """Lexicographically first homogeneous s-set of a subset coloring."""
    coloring = load_document(
        subset_coloring_path, require_graph=False).subset_coloring
    if coloring is None:
        raise ValidationError('{} holds no subset coloring'.format(
            subset_coloring_path))
    found = find_homogeneous_set(coloring, s, budget=settings.budget)
    if found is None:
        logger.info('No homogeneous set of size {} in [{}]'.format(
            s, coloring.n))
        if settings.json:
            emit(settings, [], {'found': False})
        return EXIT_ABSENT
    emit(settings,
         ['# value {}'.format(_value_record(found.value)),
          ' '.join(str(x) for x in found.vertices)],
         {'found': True,
          'vertices': list(found.vertices),
          'value': _value_record(found.value)})
    return EXIT_FOUND


@cli.command('ramsey-number')
@cli.options.arity
@cli.options.palette
@cli.options.size
@cli.options.max_n
@cli.options.workers
@cli.options.confirm_next
@cli.options.counterexample
@outcome
def ramsey_number(settings, arity, palette, size, max_n, workers=None,
                  confirm_next=False, counterexample=None):
    """Exact R_{arity,palette}(size) by exhaustive enumeration."""
    result = ramsey_search(
        arity, palette, size, max_n,
        budget=settings.budget,
        workers=workers or settings.config.workers,
        confirm_next=confirm_next)
    if counterexample and result.lower_bound_coloring is not None:
        write_text(counterexample, to_text(
            dump_subset_coloring(result.lower_bound_coloring)))
    record = {
        'arity': arity,
        'palette': palette,
        'size': size,
        'value': result.value,
        'examined': result.colorings_examined,
    }
    if result.value is None:
        logger.info('R_{{{},{}}}({}) exceeds {}'.format(
            arity, palette, size, max_n))
        if settings.json:
            emit(settings, [], record)
        return EXIT_ABSENT
    emit(settings, [str(result.value)], record)
    return EXIT_FOUND
