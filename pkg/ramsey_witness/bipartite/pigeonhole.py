from collections import defaultdict

from ramsey_witness.logger import logger
from ramsey_witness.exceptions import (ParameterError, ValidationError)
from ramsey_witness.bipartite.utils import check_positive
from ramsey_witness.bipartite.graph_core import verify_witness
from ramsey_witness.bipartite.constructions import complete_bipartite
from ramsey_witness.bipartite.models import (Color, InducedCopyWitness)


class ColorSignature(object):
    """The row of colors seen from one left vertex of K_{n,k}; entry p is
    the color of the edge to the p-th right vertex. Signatures order
    lexicographically with RED < BLUE."""

    def __init__(self, entries):
        self._entries = tuple(Color.from_code(c) for c in entries)

    @property
    def entries(self):
        return self._entries

    def count(self, color):
        return self._entries.count(color)

    def positions(self, color):
        """1-based positions carrying color, ascending."""
        return [p for p, c in enumerate(self._entries, 1) if c is color]

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, ColorSignature):
            return NotImplemented
        return self._entries == other.entries

    def __lt__(self, other):
        return self._entries < other.entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return 'ColorSignature({})'.format(
            ''.join(c.code for c in self._entries))


def _check_complete(graph):
    if not graph.is_complete:
        raise ValidationError(
            'signatures need a complete host, {!r} is not'.format(graph))


def signature_of(coloring, x):
    graph = coloring.graph
    _check_complete(graph)
    graph.left_index(x)
    return ColorSignature(
        coloring.color_of(x, r) for r in graph.right_labels)


def sufficient_parameters(a, b):
    """(n, k) = (a * 2^(2b), 2b): large enough for every 2-coloring of
    K_{n,k} to contain a monochromatic K_{a,b}."""
    check_positive(a=a, b=b)
    return a * 2 ** (2 * b), 2 * b


def signature_classes(coloring):
    classes = defaultdict(list)
    for x in coloring.graph.left_labels:
        classes[signature_of(coloring, x)].append(x)
    return classes


def extract_monochromatic_complete(coloring, a, b):
    """Pigeonhole extraction of a monochromatic K_{a,b} from K_{n,k}.

    Needs n >= a * 2^k and k >= 2b. Among the largest signature classes
    the lexicographically least signature wins; its a first left
    vertices and the b first positions of its majority color (RED on a
    tie) form the copy.
    """
    check_positive(a=a, b=b)
    graph = coloring.graph
    _check_complete(graph)
    n, k = graph.left_count, graph.right_count
    if k < 2 * b:
        raise ParameterError(
            'need k >= 2b, got k={} and b={}'.format(k, b))
    if n < a * 2 ** k:
        raise ParameterError(
            'need n >= a * 2^k = {}, got n={}'.format(a * 2 ** k, n))

    classes = signature_classes(coloring)
    signature = min(classes, key=lambda s: (-len(classes[s]), s))
    members = classes[signature]
    assert len(members) >= -(-n // 2 ** k) >= a
    logger.debug('signature class {!r} has {} of {} left vertices'.format(
        signature, len(members), n))

    color = Color.RED if signature.count(Color.RED) >= b else Color.BLUE
    positions = signature.positions(color)
    assert len(positions) >= b

    lefts = sorted(members, key=graph.left_index)[:a]
    rights = [graph.right_label(p) for p in positions[:b]]
    witness = InducedCopyWitness(
        complete_bipartite(a, b), lefts, rights, color)
    assert verify_witness(graph, coloring, witness)
    return witness
