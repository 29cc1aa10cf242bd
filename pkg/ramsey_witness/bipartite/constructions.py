from ramsey_witness.logger import logger
from ramsey_witness.exceptions import (ParameterError, ValidationError)
from ramsey_witness.bipartite.utils import check_positive
from ramsey_witness.bipartite.graph_core import verify_witness
from ramsey_witness.bipartite.models import (
    BipartiteGraph,
    SetBipartiteGraph,
    InducedCopyWitness)


def complete_bipartite(n, k):
    """K_{n,k} with lefts 1..n and opaque rights 1..k."""
    check_positive(n=n, k=k)
    return BipartiteGraph(
        n, k, [(x, r) for x in range(1, n + 1) for r in range(1, k + 1)])


def set_bipartite(n, k):
    """B_{n,k}: rights are the k-subsets of [n], edge (x, X) iff x in X."""
    check_positive(n=n, k=k)
    if k > n:
        raise ParameterError('B_{{n,k}} needs k <= n, got k={} > n={}'.format(
            k, n))
    return SetBipartiteGraph(n, k)


class EmbeddingResult(object):
    """An induced copy of a pattern with c lefts and d rights inside
    B_{a,b}, a = 2c + d and b = c + 1.

    Host lefts are numbered i -> i for the pattern lefts, i' -> c + i for
    the padding vertices and j'' -> 2c + j for the distinguishing ones.
    """

    def __init__(self, pattern, a, b, left_map, right_map, witness):
        self._pattern = pattern
        self._a = a
        self._b = b
        self._left_map = dict(left_map)
        self._right_map = dict(right_map)
        self._witness = witness

    @property
    def pattern(self):
        return self._pattern

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def c(self):
        return self._pattern.left_count

    @property
    def d(self):
        return self._pattern.right_count

    @property
    def left_map(self):
        return dict(self._left_map)

    @property
    def right_map(self):
        return dict(self._right_map)

    @property
    def witness(self):
        return self._witness

    @property
    def host(self):
        return SetBipartiteGraph(self._a, self._b)

    def __repr__(self):
        return 'EmbeddingResult(a={}, b={}, witness={!r})'.format(
            self._a, self._b, self._witness)


def embedding_set(neighbors, j, c):
    """The b-set standing for pattern right j: its neighbours, the
    distinguishing vertex j'' and padding 1', ..., (b-L-1)'."""
    b = c + 1
    fillers = b - len(neighbors) - 1
    assert fillers >= 0
    chosen = set(neighbors)
    chosen.add(2 * c + j)
    chosen.update(c + i for i in range(1, fillers + 1))
    assert len(chosen) == b
    return tuple(sorted(chosen))


def embed_into_set_bipartite(pattern):
    c = pattern.left_count
    d = pattern.right_count
    if c < 1 or d < 1:
        raise ValidationError(
            'pattern needs at least one vertex on each side, got '
            'c={}, d={}'.format(c, d))
    a = 2 * c + d
    b = c + 1

    left_map = {x: i for i, x in enumerate(pattern.left_labels, 1)}
    right_map = {}
    for j, r in enumerate(pattern.right_labels, 1):
        neighbors = [left_map[x] for x in pattern.right_neighbors(r)]
        right_map[r] = embedding_set(neighbors, j, c)

    witness = InducedCopyWitness(
        pattern,
        [left_map[x] for x in pattern.left_labels],
        [right_map[r] for r in pattern.right_labels])
    host = SetBipartiteGraph(a, b)
    assert verify_witness(host, None, witness), \
        'embedding of {!r} is not induced'.format(pattern)
    logger.debug('embedded {!r} into B_{{{},{}}}'.format(pattern, a, b))
    return EmbeddingResult(pattern, a, b, left_map, right_map, witness)
