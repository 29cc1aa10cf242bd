import os
import random

import pytest

from ramsey_witness.constants import SLOW_TESTS_ENV
from ramsey_witness.bipartite.models import (
    Color,
    EdgeColoring,
    BipartiteGraph,
    SetBipartiteGraph)

RESOURCES = os.path.join(os.path.dirname(__file__), 'resources')

slow = pytest.mark.skipif(
    not os.environ.get(SLOW_TESTS_ENV),
    reason='set {} to run slow tests'.format(SLOW_TESTS_ENV))
slow_marker = pytest.mark.slow


def resource_path(name):
    return os.path.join(RESOURCES, name)


def get_resource(name):
    with open(resource_path(name), 'r', encoding='utf-8') as f:
        return f.read()


def small_host():
    """Lefts 1, 2, 3 and rights 4, 5, 6 of the red/blue example."""
    return BipartiteGraph(
        3, [4, 5, 6],
        [(1, 4), (1, 5), (1, 6), (2, 5), (3, 4), (3, 5), (3, 6)])


def pattern(left_count, right_count, edges):
    return BipartiteGraph(left_count, right_count, edges)


def blue_pattern():
    return pattern(3, 2, [(1, 1), (1, 2), (2, 2), (3, 1), (3, 2)])


def red_pattern():
    return pattern(3, 2, [(1, 1), (2, 2), (3, 2)])


def five_vertex_pattern():
    """Three lefts, two rights; right 1 sees every left, right 2 sees
    lefts 1 and 3."""
    return pattern(3, 2, [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2)])


def single_edge():
    return pattern(1, 1, [(1, 1)])


def position_rule(colors):
    """Coloring rule for set graphs: the edge into the p-th smallest
    element of a right vertex gets colors[p - 1]."""
    colors = [Color.from_code(c) for c in colors]

    def rule(x, label):
        return colors[label.index(x)]
    return rule


def position_coloring(n, colors):
    graph = SetBipartiteGraph(n, len(colors))
    return EdgeColoring.from_rule(graph, position_rule(colors))


def random_pattern(rng, max_left=5, max_right=5):
    c = rng.randint(1, max_left)
    d = rng.randint(1, max_right)
    edges = [(x, r) for x in range(1, c + 1) for r in range(1, d + 1)
             if rng.random() < 0.5]
    # force the degree extremes to show up regularly
    if rng.random() < 0.2:
        edges = [e for e in edges if e[1] != 1]
    if rng.random() < 0.2:
        edges = [e for e in edges if e[1] != d] + \
            [(x, d) for x in range(1, c + 1)]
    return pattern(c, d, edges)


def seeded(seed):
    return random.Random(seed)
