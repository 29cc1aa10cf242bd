from math import comb
from multiprocessing import Pool
from itertools import (combinations, product)

from ramsey_witness.logger import logger
from ramsey_witness.exceptions import (ParameterError, ValidationError)
from ramsey_witness.bipartite.models import (
    Color,
    SetBipartiteGraph)
from ramsey_witness.bipartite.utils import (
    Budget,
    as_subset,
    k_subsets,
    rank_subset,
    unrank_subset,
    check_positive)


class DerivedColor(object):
    """The value (c, {i_1 < ... < i_b}) given to a (2b-1)-subset X: c
    is the majority color of the edges into X, i_1..i_b the positions
    (in sorted X) of the first b edges with that color."""

    def __init__(self, color, positions):
        self._color = Color.from_code(color)
        self._positions = as_subset(positions)
        b = len(self._positions)
        if b < 1 or self._positions[-1] > 2 * b - 1:
            raise ValidationError(
                'positions {} are not a b-subset of [2b-1]'.format(
                    list(self._positions)))

    @property
    def color(self):
        return self._color

    @property
    def positions(self):
        return self._positions

    @property
    def b(self):
        return len(self._positions)

    @property
    def code(self):
        return '{}:{}'.format(
            self._color.code, ','.join(str(p) for p in self._positions))

    @classmethod
    def parse(cls, text):
        try:
            color, positions = text.split(':')
        except ValueError:
            raise ValidationError(
                'derived color {!r} is not of the form R:1,3'.format(text))
        return cls(color, positions.split(','))

    @staticmethod
    def palette_size(b):
        return 2 * comb(2 * b - 1, b)

    def palette_index(self):
        """1-based index in the palette of 2 * C(2b-1, b) values."""
        b = self.b
        return self._color * comb(2 * b - 1, b) + \
            rank_subset(self._positions, 2 * b - 1)

    @classmethod
    def from_palette_index(cls, index, b):
        block = comb(2 * b - 1, b)
        if not 1 <= index <= 2 * block:
            raise ParameterError(
                'palette index {} outside 1..{}'.format(index, 2 * block))
        color, rank = divmod(index - 1, block)
        return cls(Color(color), unrank_subset(rank + 1, 2 * b - 1, b))

    def __eq__(self, other):
        if not isinstance(other, DerivedColor):
            return NotImplemented
        return (self._color, self._positions) == \
            (other.color, other.positions)

    def __hash__(self):
        return hash((self._color, self._positions))

    def __repr__(self):
        return 'DerivedColor({}, {})'.format(
            self._color.name, set(self._positions))


class SubsetColoring(object):
    """Total map from the arity-subsets of [n] to a palette.

    Values are positive integers up to palette_size, or DerivedColors
    whose palette index is within it. Dense colorings store one value
    per subset, indexed by lexicographic rank; lazy ones compute values
    through lookup.
    """

    def __init__(self, n, arity, palette_size, values=None, lookup=None):
        if not isinstance(n, int) or n < 0:
            raise ValidationError('n must be a non-negative integer')
        check_positive(arity=arity, palette_size=palette_size)
        if (values is None) == (lookup is None):
            raise ValidationError('pass exactly one of values or lookup')
        self._n = n
        self._arity = arity
        self._palette_size = palette_size
        self._lookup = lookup
        self._values = None
        if values is not None:
            self._values = self._dense(values)

    def _dense(self, values):
        size = comb(self._n, self._arity)
        if isinstance(values, dict):
            dense = [None] * size
            for subset, value in values.items():
                subset = self._check_subset(subset)
                dense[rank_subset(subset, self._n) - 1] = value
            if None in dense:
                missing = unrank_subset(
                    dense.index(None) + 1, self._n, self._arity)
                raise ValidationError(
                    'subset coloring is not total: {} has no value'.format(
                        set(missing)))
        else:
            dense = list(values)
            if len(dense) != size:
                raise ValidationError(
                    'expected {} values, got {}'.format(size, len(dense)))
        for value in dense:
            self._check_value(value)
        return dense

    def _check_value(self, value):
        if isinstance(value, DerivedColor):
            index = value.palette_index()
        elif isinstance(value, int) and not isinstance(value, bool):
            index = value
        else:
            raise ValidationError('invalid palette value {!r}'.format(value))
        if not 1 <= index <= self._palette_size:
            raise ValidationError(
                'palette value {!r} outside a palette of {}'.format(
                    value, self._palette_size))
        return value

    def _check_subset(self, subset):
        subset = as_subset(subset)
        if len(subset) != self._arity or (subset and subset[-1] > self._n):
            raise ValidationError(
                '{} is not a {}-subset of [{}]'.format(
                    set(subset), self._arity, self._n))
        return subset

    @property
    def n(self):
        return self._n

    @property
    def arity(self):
        return self._arity

    @property
    def palette_size(self):
        return self._palette_size

    @property
    def is_lazy(self):
        return self._values is None

    def value_of(self, subset):
        subset = self._check_subset(subset)
        if self._values is not None:
            return self._values[rank_subset(subset, self._n) - 1]
        return self._check_value(self._lookup(subset))

    def items(self):
        if self._values is not None:
            return zip(k_subsets(self._n, self._arity), self._values)
        return ((s, self._check_value(self._lookup(s)))
                for s in k_subsets(self._n, self._arity))

    def materialize(self):
        if self._values is not None:
            return self
        return SubsetColoring(
            self._n, self._arity, self._palette_size,
            values=[value for _, value in self.items()])

    def __repr__(self):
        return 'SubsetColoring(n={}, arity={}, palette={})'.format(
            self._n, self._arity, self._palette_size)


class HomogeneousSet(object):

    def __init__(self, vertices, value):
        self._vertices = tuple(vertices)
        self._value = value

    @property
    def vertices(self):
        return self._vertices

    @property
    def value(self):
        return self._value

    def __len__(self):
        return len(self._vertices)

    def __repr__(self):
        return 'HomogeneousSet({}, {!r})'.format(
            list(self._vertices), self._value)


def check_set_host(graph, k):
    """graph must be B_{n,k} with every k-subset present."""
    if isinstance(graph, SetBipartiteGraph):
        if graph.k != k:
            raise ValidationError(
                'host is B_{{{},{}}}, expected right vertices of size '
                '{}'.format(graph.n, graph.k, k))
        return graph.n
    n = graph.left_count
    if n < k or graph.right_count != comb(n, k) or \
            graph != SetBipartiteGraph(n, k):
        raise ValidationError(
            'host {!r} is not B_{{{},{}}}'.format(graph, n, k))
    return n


def derived_color_of(coloring, subset, b):
    colors = coloring.colors_into(subset)
    red = colors.count(Color.RED)
    blue = len(colors) - red
    # 2b-1 edges: exactly one color reaches b
    assert (red >= b) != (blue >= b)
    color = Color.RED if red >= b else Color.BLUE
    positions = [p for p, c in enumerate(colors, 1) if c is color][:b]
    return DerivedColor(color, positions)


def derive_coloring(coloring, b, lazy=False):
    """Color every (2b-1)-subset of [n] by its DerivedColor.

    lazy=True computes values on demand instead of storing all
    C(n, 2b-1) of them.
    """
    check_positive(b=b)
    k = 2 * b - 1
    n = check_set_host(coloring.graph, k)
    palette = DerivedColor.palette_size(b)
    if lazy:
        return SubsetColoring(
            n, k, palette,
            lookup=lambda subset: derived_color_of(coloring, subset, b))
    values = [derived_color_of(coloring, s, b) for s in k_subsets(n, k)]
    logger.debug('derived {} values over a palette of {}'.format(
        len(values), palette))
    return SubsetColoring(n, k, palette, values=values)


def _check_vertex_set(coloring, vertices):
    vertices = as_subset(vertices)
    if vertices and vertices[-1] > coloring.n:
        raise ValidationError(
            '{} is not a subset of [{}]'.format(set(vertices), coloring.n))
    return vertices


def is_homogeneous(coloring, vertices):
    vertices = _check_vertex_set(coloring, vertices)
    value = None
    for subset in combinations(vertices, coloring.arity):
        current = coloring.value_of(subset)
        if value is None:
            value = current
        elif current != value:
            return False
    return True


def find_homogeneous_set(coloring, s, budget=None):
    """Lexicographically first homogeneous s-subset of [n], or None.

    Depth-first over increasing vertices; a prefix that is already not
    homogeneous is abandoned since no superset can be.
    """
    check_positive(s=s)
    if s > coloring.n:
        raise ParameterError(
            'cannot find a set of size {} in [{}]'.format(s, coloring.n))
    if not isinstance(budget, Budget):
        budget = Budget(budget, what='homogeneous set search')
    n = coloring.n
    arity = coloring.arity

    def extend(chosen, start, value):
        if len(chosen) == s:
            return HomogeneousSet(chosen, value)
        for x in range(start, n - (s - len(chosen)) + 2):
            current = value
            for rest in combinations(chosen, arity - 1):
                budget.spend()
                found = coloring.value_of(rest + (x,))
                if current is None:
                    current = found
                elif found != current:
                    break
            else:
                result = extend(chosen + (x,), x + 1, current)
                if result is not None:
                    return result
        return None

    result = extend((), 1, None)
    logger.debug('homogeneous search for s={} on {!r}: {!r} '
                 '({} checks)'.format(s, coloring, result, budget.spent))
    return result


class RamseySearchResult(object):

    def __init__(self, arity, palette, size, max_n, value,
                 lower_bound_coloring, colorings_examined):
        self.arity = arity
        self.palette = palette
        self.size = size
        self.max_n = max_n
        self.value = value
        self.lower_bound_coloring = lower_bound_coloring
        self.colorings_examined = colorings_examined

    def __repr__(self):
        return 'RamseySearchResult(R_{{{},{}}}({})={}, examined={})'.format(
            self.arity, self.palette, self.size, self.value,
            self.colorings_examined)


def _blocks(n, arity, s):
    """For every s-subset of [n], the dense indices of its arity-subsets."""
    return [
        tuple(rank_subset(sub, n) - 1 for sub in combinations(block, arity))
        for block in k_subsets(n, s)]


def _has_homogeneous(colors, blocks):
    for block in blocks:
        if not block:
            return True
        first = colors[block[0]]
        for i in block[1:]:
            if colors[i] != first:
                break
        else:
            return True
    return False


def _scan_prefix(task):
    prefix, m, palette, blocks = task
    examined = 0
    for tail in product(range(1, palette + 1), repeat=m - len(prefix)):
        colors = prefix + tail
        examined += 1
        if not _has_homogeneous(colors, blocks):
            return colors, examined
    return None, examined


def _first_avoiding(m, palette, blocks, workers):
    """First coloring in odometer order (last subset varies fastest)
    without a homogeneous block, and the number of colorings examined.

    With several workers the colorings are split by their leading
    values; results are consumed in odometer order, so the answer does
    not depend on the split.
    """
    if workers <= 1 or m == 0:
        return _scan_prefix(((), m, palette, blocks))
    width = 0
    while width < m and palette ** width < 4 * workers:
        width += 1
    tasks = [(prefix, m, palette, blocks)
             for prefix in product(range(1, palette + 1), repeat=width)]
    examined = 0
    with Pool(workers) as pool:
        for colors, count in pool.imap(_scan_prefix, tasks):
            examined += count
            if colors is not None:
                return colors, examined
    return None, examined


def ramsey_search(arity, palette, s, max_n, budget=None, workers=1,
                  confirm_next=False):
    """Exhaustively compute R_{arity,palette}(s) if it is at most max_n.

    Every palette-coloring of the arity-subsets of [n] is enumerated for
    n = 1, 2, ...; the enumeration for one n is refused up front when
    its estimated number of checks exceeds the remaining budget.
    """
    check_positive(arity=arity, palette=palette, s=s, max_n=max_n,
                   workers=workers)
    if not isinstance(budget, Budget):
        budget = Budget(budget, what='Ramsey number enumeration')

    lower_bound = None
    examined = 0
    for n in range(1, max_n + 1):
        m = comb(n, arity)
        if n < s:
            lower_bound = SubsetColoring(n, arity, palette, values=[1] * m)
            continue
        blocks = _blocks(n, arity, s)
        estimate = palette ** m * len(blocks) * max(1, comb(s, arity))
        budget.refuse_above(estimate)
        colors, count = _first_avoiding(m, palette, blocks, workers)
        examined += count
        budget.spend(count * len(blocks))
        if colors is not None:
            logger.debug('n={}: coloring #{} avoids homogeneous '
                         '{}-sets'.format(n, count, s))
            lower_bound = SubsetColoring(
                n, arity, palette, values=list(colors))
            continue
        logger.info('R_{{{},{}}}({}) = {} ({} colorings examined)'.format(
            arity, palette, s, n, examined))
        if confirm_next and n < max_n:
            following = comb(n + 1, arity)
            next_blocks = _blocks(n + 1, arity, s)
            budget.refuse_above(
                palette ** following * len(next_blocks) *
                max(1, comb(s, arity)))
            colors, count = _first_avoiding(
                following, palette, next_blocks, workers)
            budget.spend(count * len(next_blocks))
            assert colors is None, \
                'a coloring of [{}] avoids homogeneous sets after [{}] ' \
                'could not'.format(n + 1, n)
        return RamseySearchResult(
            arity, palette, s, max_n, n, lower_bound, examined)
    logger.info('R_{{{},{}}}({}) exceeds {}'.format(arity, palette, s, max_n))
    return RamseySearchResult(
        arity, palette, s, max_n, None, lower_bound, examined)


def ramsey_number_exact(arity, palette, s, max_n, budget=None, workers=1):
    return ramsey_search(
        arity, palette, s, max_n, budget=budget, workers=workers).value
