from math import comb

import pytest
import networkx as nx

from . import (
    seeded,
    pattern,
    single_edge,
    random_pattern,
    five_vertex_pattern)
from ramsey_witness.exceptions import (
    ParameterError,
    ValidationError)
from ramsey_witness.bipartite.graph_core import verify_witness
from ramsey_witness.bipartite.models import (
    BipartiteGraph,
    SetBipartiteGraph,
    InducedCopyWitness)
from ramsey_witness.bipartite import constructions


def test_complete_bipartite():
    k33 = constructions.complete_bipartite(3, 3)
    assert k33.edge_count == 9
    assert k33.is_complete
    assert constructions.complete_bipartite(1, 1).edges == \
        frozenset([(1, 1)])
    k46 = constructions.complete_bipartite(4, 6)
    assert k46.edge_count == 24
    assert all(len(k46.left_neighbors(x)) == 6 for x in k46.left_labels)
    with pytest.raises(ParameterError):
        constructions.complete_bipartite(0, 3)
    with pytest.raises(ParameterError):
        constructions.complete_bipartite(2, -1)


def test_set_bipartite():
    b42 = constructions.set_bipartite(4, 2)
    assert b42.left_labels == (1, 2, 3, 4)
    assert b42.right_labels == (
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
    assert b42.edge_count == 12
    assert len(b42.edges) == 12
    assert all(len(b42.left_neighbors(x)) == 3 for x in b42.left_labels)
    assert b42.has_edge(3, (1, 3))
    assert not b42.has_edge(2, (1, 3))
    assert b42.right_index((2, 4)) == 5
    assert b42.right_label(5) == (2, 4)

    matching = constructions.set_bipartite(5, 1)
    assert matching.edges == frozenset((x, (x,)) for x in range(1, 6))

    for n in range(1, 8):
        for k in range(1, n + 1):
            graph = constructions.set_bipartite(n, k)
            assert graph.edge_count == k * comb(n, k)
            assert graph.right_count == comb(n, k)

    with pytest.raises(ParameterError):
        constructions.set_bipartite(3, 4)


def test_set_graph_equals_its_explicit_form():
    lazy = constructions.set_bipartite(5, 3)
    explicit = BipartiteGraph(
        5, list(lazy.iter_right_labels()), lazy.iter_edges())
    assert lazy == explicit
    assert explicit == lazy
    assert lazy == SetBipartiteGraph(5, 3)
    assert lazy != SetBipartiteGraph(5, 2)


def test_networkx_view():
    view = constructions.set_bipartite(4, 2).to_networkx()
    assert view.number_of_nodes() == 10
    assert view.number_of_edges() == 12
    assert nx.is_bipartite(view)
    assert view.nodes[('R', (1, 2))] == {'bipartite': 1, 'label': '{1,2}'}
    assert view.nodes[('L', 3)]['bipartite'] == 0
    assert view.has_edge(('L', 1), ('R', (1, 2)))
    assert not view.has_edge(('L', 3), ('R', (1, 2)))


def test_embed_five_vertex_pattern():
    result = constructions.embed_into_set_bipartite(five_vertex_pattern())
    assert (result.a, result.b) == (8, 4)
    assert (result.c, result.d) == (3, 2)
    assert result.right_map == {1: (1, 2, 3, 7), 2: (1, 3, 4, 8)}
    assert result.left_map == {1: 1, 2: 2, 3: 3}
    assert result.witness.host_left == (1, 2, 3)
    assert verify_witness(result.host, None, result.witness)


def test_hand_picked_witness_is_also_valid():
    # lefts 1, 2, 3, padding 1' = 4, 2' = 5, distinguishing 1'' = 7
    witness = InducedCopyWitness(
        five_vertex_pattern(), [1, 2, 3], [(1, 2, 3, 4), (1, 3, 5, 7)])
    assert verify_witness(SetBipartiteGraph(8, 4), None, witness)


def test_embed_single_edge():
    result = constructions.embed_into_set_bipartite(single_edge())
    assert (result.a, result.b) == (3, 2)
    assert result.right_map == {1: (1, 3)}


def test_embed_isolated_right():
    result = constructions.embed_into_set_bipartite(pattern(1, 1, []))
    assert (result.a, result.b) == (3, 2)
    assert result.right_map == {1: (2, 3)}
    assert verify_witness(result.host, None, result.witness)


def test_embed_full_degree_right_uses_no_filler():
    full = pattern(3, 1, [(1, 1), (2, 1), (3, 1)])
    result = constructions.embed_into_set_bipartite(full)
    assert result.right_map == {1: (1, 2, 3, 7)}


def test_embed_rejects_empty_sides():
    with pytest.raises(ValidationError):
        constructions.embed_into_set_bipartite(BipartiteGraph(0, 2))
    with pytest.raises(ValidationError):
        constructions.embed_into_set_bipartite(BipartiteGraph(2, 0))


def test_embed_random_patterns():
    rng = seeded(200)
    for _ in range(200):
        current = random_pattern(rng)
        c, d = current.left_count, current.right_count
        result = constructions.embed_into_set_bipartite(current)
        assert result.a == 2 * c + d
        assert result.b == c + 1
        images = list(result.witness.host_right)
        assert len(set(images)) == d
        assert all(len(image) == c + 1 for image in images)
        assert verify_witness(result.host, None, result.witness)
        for i, x in enumerate(current.left_labels, 1):
            seen = {r for r, image in zip(current.right_labels, images)
                    if i in image}
            assert seen == set(current.left_neighbors(x))


def test_embedding_set():
    assert constructions.embedding_set([1, 3], 2, 3) == (1, 3, 4, 8)
    assert constructions.embedding_set([], 1, 1) == (2, 3)
