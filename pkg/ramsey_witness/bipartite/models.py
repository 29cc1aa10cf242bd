import random
from enum import IntEnum
from math import comb

import networkx as nx

from ramsey_witness.exceptions import ValidationError
from ramsey_witness.bipartite.utils import (
    as_subset,
    k_subsets,
    rank_subset,
    unrank_subset)


class Color(IntEnum):
    """Edge colors. RED sorts before BLUE wherever ties are broken."""
    RED = 0
    BLUE = 1

    @property
    def code(self):
        return 'R' if self is Color.RED else 'B'

    @property
    def dot(self):
        return self.name.lower()

    @classmethod
    def from_code(cls, code):
        if isinstance(code, Color):
            return code
        normalized = str(code).strip().upper()
        if normalized in ('R', 'RED'):
            return cls.RED
        if normalized in ('B', 'BLUE'):
            return cls.BLUE
        raise ValidationError('unknown color {!r}, use R or B'.format(code))


def normalize_label(label):
    """Right labels are opaque ints or sorted tuples (k-subsets)."""
    if isinstance(label, bool):
        raise ValidationError('invalid vertex label {!r}'.format(label))
    if isinstance(label, int):
        return label
    if isinstance(label, (str, bytes)):
        raise ValidationError('invalid vertex label {!r}'.format(label))
    try:
        return as_subset(label)
    except TypeError:
        raise ValidationError('invalid vertex label {!r}'.format(label))


def format_label(label):
    if isinstance(label, tuple):
        return '{' + ','.join(str(x) for x in label) + '}'
    return str(label)


class BipartiteGraph(object):

    def __init__(self, left_count, right_labels, edges=(), left_labels=None):
        """
        :param left_count: size of the left class.
        :param right_labels: number of opaque right vertices (labelled
            1..right_labels) or an ordered sequence of distinct labels.
        :param edges: iterable of (left label, right label) pairs.
        :param left_labels: distinct integer left labels, 1..left_count
            when omitted.
        """
        if not isinstance(left_count, int) or left_count < 0:
            raise ValidationError(
                'left_count must be a non-negative integer: {!r}'.format(
                    left_count))
        if left_labels is None:
            left_labels = range(1, left_count + 1)
        self._left_labels = tuple(left_labels)
        if len(self._left_labels) != left_count:
            raise ValidationError(
                'expected {} left labels, got {}'.format(
                    left_count, len(self._left_labels)))
        for x in self._left_labels:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError('left labels must be integers')
        if len(set(self._left_labels)) != left_count:
            raise ValidationError('left labels are not pairwise distinct')

        if isinstance(right_labels, int) and \
                not isinstance(right_labels, bool):
            if right_labels < 0:
                raise ValidationError('right count must be non-negative')
            right_labels = range(1, right_labels + 1)
        self._right_labels = tuple(normalize_label(r) for r in right_labels)
        if len(set(self._right_labels)) != len(self._right_labels):
            raise ValidationError('right labels are not pairwise distinct')

        self._left_index = {x: i for i, x in enumerate(self._left_labels, 1)}
        self._right_index = {
            r: j for j, r in enumerate(self._right_labels, 1)}

        canonical = set()
        for edge in edges:
            try:
                x, r = edge
            except (TypeError, ValueError):
                raise ValidationError('malformed edge {!r}'.format(edge))
            r = normalize_label(r)
            if x not in self._left_index:
                raise ValidationError(
                    'edge {!r} references unknown left vertex {!r}'.format(
                        edge, x))
            if r not in self._right_index:
                raise ValidationError(
                    'edge {!r} references unknown right vertex {}'.format(
                        edge, format_label(r)))
            if (x, r) in canonical:
                raise ValidationError(
                    'duplicate edge ({}, {})'.format(x, format_label(r)))
            canonical.add((x, r))
        self._edges = frozenset(canonical)
        self._left_adjacency = None
        self._right_adjacency = None

    @property
    def left_count(self):
        return len(self._left_labels)

    @property
    def right_count(self):
        return len(self._right_labels)

    @property
    def left_labels(self):
        return self._left_labels

    @property
    def right_labels(self):
        return self._right_labels

    @property
    def edges(self):
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def is_complete(self):
        return self.edge_count == self.left_count * self.right_count

    def iter_right_labels(self):
        return iter(self._right_labels)

    def iter_edges(self):
        """Edges ordered by left position, then right position."""
        for x in self.left_labels:
            for r in self.iter_right_labels():
                if self.has_edge(x, r):
                    yield x, r

    def has_left(self, x):
        return x in self._left_index

    def has_right(self, label):
        try:
            return normalize_label(label) in self._right_index
        except ValidationError:
            return False

    def has_edge(self, x, label):
        return (x, normalize_label(label)) in self._edges

    def left_index(self, x):
        try:
            return self._left_index[x]
        except (KeyError, TypeError):
            raise ValidationError('unknown left vertex {!r}'.format(x))

    def right_index(self, label):
        try:
            return self._right_index[normalize_label(label)]
        except KeyError:
            raise ValidationError(
                'unknown right vertex {}'.format(format_label(label)))

    def left_label(self, index):
        if not 1 <= index <= self.left_count:
            raise ValidationError('left index {} out of range'.format(index))
        return self._left_labels[index - 1]

    def right_label(self, index):
        if not 1 <= index <= self.right_count:
            raise ValidationError('right index {} out of range'.format(index))
        return self._right_labels[index - 1]

    def left_neighbors(self, x):
        """Right labels adjacent to left vertex x."""
        if self._left_adjacency is None:
            adjacency = {y: set() for y in self._left_labels}
            for y, r in self._edges:
                adjacency[y].add(r)
            self._left_adjacency = {
                y: frozenset(rs) for y, rs in adjacency.items()}
        self.left_index(x)
        return self._left_adjacency[x]

    def right_neighbors(self, label):
        """Left labels adjacent to the right vertex."""
        if self._right_adjacency is None:
            adjacency = {r: set() for r in self._right_labels}
            for y, r in self._edges:
                adjacency[r].add(y)
            self._right_adjacency = {
                r: frozenset(ys) for r, ys in adjacency.items()}
        label = normalize_label(label)
        self.right_index(label)
        return self._right_adjacency[label]

    def to_networkx(self):
        """Undirected networkx graph, nodes tagged with their side."""
        graph = nx.Graph()
        for x in self.left_labels:
            graph.add_node(('L', x), bipartite=0, label=str(x))
        for r in self.iter_right_labels():
            graph.add_node(('R', r), bipartite=1, label=format_label(r))
        graph.add_edges_from(
            (('L', x), ('R', r)) for x, r in self.iter_edges())
        return graph

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self.left_labels == other.left_labels and \
            self.right_labels == other.right_labels and \
            self.edges == other.edges

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.left_labels, self.right_labels, self.edges))

    def __repr__(self):
        return 'BipartiteGraph(left={}, right={}, edges={})'.format(
            self.left_count, self.right_count, self.edge_count)


class SetBipartiteGraph(BipartiteGraph):
    """B_{n,k}: lefts [n], rights all k-subsets of [n] in lexicographic
    order, edge (x, X) iff x in X. Rights and edges are produced on
    demand."""

    def __init__(self, n, k):
        if not isinstance(n, int) or not isinstance(k, int) or \
                n < 1 or not 1 <= k <= n:
            raise ValidationError(
                'B_{{n,k}} needs 1 <= k <= n, got n={!r}, k={!r}'.format(n, k))
        self._n = n
        self._k = k
        self._left_labels = tuple(range(1, n + 1))
        self._left_index = {x: x for x in self._left_labels}
        self._right_cache = None
        self._edge_cache = None

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def right_count(self):
        return comb(self._n, self._k)

    @property
    def right_labels(self):
        if self._right_cache is None:
            self._right_cache = tuple(k_subsets(self._n, self._k))
        return self._right_cache

    @property
    def edges(self):
        if self._edge_cache is None:
            self._edge_cache = frozenset(
                (x, r) for r in self.iter_right_labels() for x in r)
        return self._edge_cache

    @property
    def edge_count(self):
        return self._k * self.right_count

    def iter_right_labels(self):
        return k_subsets(self._n, self._k)

    def has_right(self, label):
        try:
            label = normalize_label(label)
        except ValidationError:
            return False
        return isinstance(label, tuple) and len(label) == self._k and \
            label[-1] <= self._n

    def has_edge(self, x, label):
        return self.has_left(x) and self.has_right(label) and \
            x in normalize_label(label)

    def right_index(self, label):
        if not self.has_right(label):
            raise ValidationError(
                'unknown right vertex {}'.format(format_label(label)))
        return rank_subset(normalize_label(label), self._n)

    def right_label(self, index):
        if not 1 <= index <= self.right_count:
            raise ValidationError('right index {} out of range'.format(index))
        return unrank_subset(index, self._n, self._k)

    def left_neighbors(self, x):
        self.left_index(x)
        return frozenset(r for r in self.iter_right_labels() if x in r)

    def right_neighbors(self, label):
        self.right_index(label)
        return frozenset(normalize_label(label))

    def __eq__(self, other):
        if isinstance(other, SetBipartiteGraph):
            return (self._n, self._k) == (other.n, other.k)
        return super().__eq__(other)

    def __hash__(self):
        return super().__hash__()

    def __repr__(self):
        return 'SetBipartiteGraph(n={}, k={})'.format(self._n, self._k)


def same_graph(first, second):
    return first is second or first == second


class EdgeColoring(object):

    def __init__(self, graph, colors=None, rule=None):
        """Total map from the edges of graph to RED/BLUE.

        :param colors: mapping (left, right label) -> Color or R/B code,
            covering exactly the edge set.
        :param rule: callable (left, right label) -> color, total by
            construction.
        """
        if (colors is None) == (rule is None):
            raise ValidationError('pass exactly one of colors or rule')
        self._graph = graph
        self._rule = rule
        self._colors = None
        if colors is not None:
            normalized = {}
            for (x, r), color in colors.items():
                r = normalize_label(r)
                if not graph.has_edge(x, r):
                    raise ValidationError(
                        'colored pair ({}, {}) is not an edge'.format(
                            x, format_label(r)))
                normalized[(x, r)] = Color.from_code(color)
            if len(normalized) != graph.edge_count:
                missing = next(
                    e for e in graph.iter_edges() if e not in normalized)
                raise ValidationError(
                    'coloring is not total: edge ({}, {}) has no color'.format(
                        missing[0], format_label(missing[1])))
            self._colors = normalized

    @classmethod
    def from_rule(cls, graph, rule):
        return cls(graph, rule=rule)

    @classmethod
    def constant(cls, graph, color=Color.RED):
        color = Color.from_code(color)
        return cls(graph, rule=lambda x, r: color)

    @classmethod
    def random(cls, graph, seed=None):
        rng = random.Random(seed)
        return cls(graph, colors={
            edge: Color(rng.randrange(2)) for edge in graph.iter_edges()})

    @property
    def graph(self):
        return self._graph

    def color_of(self, x, label):
        label = normalize_label(label)
        if not self._graph.has_edge(x, label):
            raise ValidationError(
                '({}, {}) is not an edge of the colored graph'.format(
                    x, format_label(label)))
        if self._colors is not None:
            return self._colors[(x, label)]
        return Color.from_code(self._rule(x, label))

    def colors_into(self, label):
        """Colors of the edges into a set-labelled right vertex, in the
        order of its elements. The label is normalized once."""
        label = normalize_label(label)
        graph = self._graph
        if not isinstance(label, tuple):
            valid = False
        elif isinstance(graph, SetBipartiteGraph):
            valid = len(label) == graph.k and label[-1] <= graph.n
        else:
            valid = graph.has_right(label) and \
                all(graph.has_edge(z, label) for z in label)
        if not valid:
            raise ValidationError(
                '{} is not a set-labelled right vertex of {!r}'.format(
                    format_label(label), graph))
        if self._colors is not None:
            return [self._colors[(z, label)] for z in label]
        return [Color.from_code(self._rule(z, label)) for z in label]

    def items(self):
        for x, r in self._graph.iter_edges():
            yield (x, r), self.color_of(x, r)

    def __repr__(self):
        return 'EdgeColoring({!r})'.format(self._graph)


class InducedCopyWitness(object):
    """Certificate mapping pattern vertices onto host vertices.

    host_left[i] is the image of the i-th pattern left vertex (in the
    pattern's left order), host_right[j] that of the j-th pattern right.
    """

    def __init__(self, pattern, host_left, host_right, claimed_color=None):
        self._pattern = pattern
        self._host_left = tuple(host_left)
        self._host_right = tuple(normalize_label(r) for r in host_right)
        if claimed_color is not None:
            claimed_color = Color.from_code(claimed_color)
        self._claimed_color = claimed_color
        if len(self._host_left) != pattern.left_count:
            raise ValidationError(
                'witness maps {} left vertices, pattern has {}'.format(
                    len(self._host_left), pattern.left_count))
        if len(self._host_right) != pattern.right_count:
            raise ValidationError(
                'witness maps {} right vertices, pattern has {}'.format(
                    len(self._host_right), pattern.right_count))
        if len(set(self._host_left)) != len(self._host_left):
            raise ValidationError('witness repeats a host left vertex')
        if len(set(self._host_right)) != len(self._host_right):
            raise ValidationError('witness repeats a host right vertex')

    @property
    def pattern(self):
        return self._pattern

    @property
    def host_left(self):
        return self._host_left

    @property
    def host_right(self):
        return self._host_right

    @property
    def claimed_color(self):
        return self._claimed_color

    def left_image(self, pattern_left):
        return self._host_left[self._pattern.left_index(pattern_left) - 1]

    def right_image(self, pattern_right):
        return self._host_right[self._pattern.right_index(pattern_right) - 1]

    def pairs(self):
        """(pattern left, pattern right, host left, host right) for every
        pair of mapped vertices."""
        for x, hx in zip(self._pattern.left_labels, self._host_left):
            for r, hr in zip(self._pattern.right_labels, self._host_right):
                yield x, r, hx, hr

    def with_color(self, color):
        return InducedCopyWitness(
            self._pattern, self._host_left, self._host_right, color)

    def through(self, outer):
        """Compose with a witness whose pattern is this witness's host.

        self maps P into M, outer maps M into G; the result maps P into G
        and carries outer's claimed color.
        """
        return InducedCopyWitness(
            self._pattern,
            [outer.left_image(x) for x in self._host_left],
            [outer.right_image(r) for r in self._host_right],
            outer.claimed_color)

    def __eq__(self, other):
        if not isinstance(other, InducedCopyWitness):
            return NotImplemented
        return self._pattern == other.pattern and \
            self._host_left == other.host_left and \
            self._host_right == other.host_right and \
            self._claimed_color == other.claimed_color

    def __hash__(self):
        return hash((self._host_left, self._host_right, self._claimed_color))

    def __repr__(self):
        return 'InducedCopyWitness(left={}, right=[{}], color={})'.format(
            list(self._host_left),
            ', '.join(format_label(r) for r in self._host_right),
            self._claimed_color.name if self._claimed_color else None)
