import pytest
from mock import patch

from . import (
    seeded,
    small_host,
    red_pattern,
    blue_pattern,
    single_edge)
from ramsey_witness.exceptions import (
    ValidationError,
    BudgetExceededError)
from ramsey_witness.bipartite import graph_core
from ramsey_witness.bipartite.models import (
    Color,
    EdgeColoring,
    BipartiteGraph,
    InducedCopyWitness)
from ramsey_witness.bipartite.constructions import (
    complete_bipartite,
    set_bipartite)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValidationError):
        BipartiteGraph(2, 2, [(3, 1)])
    with pytest.raises(ValidationError):
        BipartiteGraph(2, 2, [(1, 3)])
    with pytest.raises(ValidationError):
        BipartiteGraph(2, 2, [(1, 1), (1, 1)])
    with pytest.raises(ValidationError):
        BipartiteGraph(2, [(1, 2), (2, 1)])
    with pytest.raises(ValidationError):
        BipartiteGraph(2, 1, left_labels=[5, 5])


def test_set_labels_are_sorted():
    graph = BipartiteGraph(3, [(3, 1), (2, 3)], [(1, [1, 3])])
    assert graph.right_labels == ((1, 3), (2, 3))
    assert graph.has_edge(1, (3, 1))
    assert graph.right_index([3, 2]) == 2


def test_coloring_must_be_total():
    graph = complete_bipartite(2, 2)
    with pytest.raises(ValidationError):
        EdgeColoring(graph, colors={(1, 1): 'R'})
    with pytest.raises(ValidationError):
        EdgeColoring(graph, colors={(1, 1): 'R', (1, 2): 'R',
                                    (2, 1): 'B', (2, 2): 'X'})
    coloring = EdgeColoring.constant(graph, 'B')
    assert coloring.color_of(2, 1) is Color.BLUE
    with pytest.raises(ValidationError):
        coloring.color_of(3, 1)


def test_verify_blue_subgraph_is_induced():
    host = small_host()
    witness = InducedCopyWitness(blue_pattern(), [1, 2, 3], [4, 5])
    assert graph_core.verify_witness(host, None, witness)


def test_verify_red_subgraph_is_not_induced():
    host = small_host()
    witness = InducedCopyWitness(red_pattern(), [1, 2, 3], [4, 5])
    assert not graph_core.verify_witness(host, None, witness)
    # (1, 5) and (3, 4) are the host edges the red pattern leaves out
    assert graph_core.verify_witness(host, None, witness, induced=False)


def test_verify_identity():
    host = small_host()
    witness = InducedCopyWitness(host, host.left_labels, host.right_labels)
    assert graph_core.verify_witness(host, None, witness)
    b42 = set_bipartite(4, 2)
    witness = InducedCopyWitness(b42, b42.left_labels, b42.right_labels)
    assert graph_core.verify_witness(b42, None, witness)


def test_verify_checks_claimed_color():
    host = small_host()
    red = {(1, 4), (2, 5), (3, 5)}
    coloring = EdgeColoring(host, colors={
        e: Color.RED if e in red else Color.BLUE for e in host.edges})
    witness = InducedCopyWitness(blue_pattern(), [1, 2, 3], [4, 5], 'B')
    assert not graph_core.verify_witness(host, coloring, witness)
    assert graph_core.verify_witness(host, None, witness)

    edge = InducedCopyWitness(single_edge(), [1], [6], 'B')
    assert graph_core.verify_witness(host, coloring, edge)
    assert not graph_core.verify_witness(
        host, coloring, edge.with_color('R'))


def test_verify_rejects_malformed_witnesses():
    host = small_host()
    with pytest.raises(ValidationError):
        InducedCopyWitness(blue_pattern(), [1, 2], [4, 5])
    with pytest.raises(ValidationError):
        InducedCopyWitness(blue_pattern(), [1, 1, 2], [4, 5])
    with pytest.raises(ValidationError):
        InducedCopyWitness(blue_pattern(), [1, 2, 3], [4, 4])
    dangling = InducedCopyWitness(blue_pattern(), [1, 2, 7], [4, 5])
    with pytest.raises(ValidationError):
        graph_core.verify_witness(host, None, dangling)
    dangling = InducedCopyWitness(blue_pattern(), [1, 2, 3], [4, 9])
    with pytest.raises(ValidationError):
        graph_core.verify_witness(host, None, dangling)


def test_verify_rejects_foreign_coloring():
    host = small_host()
    coloring = EdgeColoring.constant(complete_bipartite(3, 3))
    witness = InducedCopyWitness(single_edge(), [1], [4])
    with pytest.raises(ValidationError):
        graph_core.verify_witness(host, coloring, witness)


def test_induced_subgraph():
    host = small_host()
    sub = graph_core.induced_subgraph(host, {1, 2, 3}, {4, 5})
    assert sub.edge_count == 5
    assert sub.right_labels == (4, 5)
    assert sub.edges == frozenset(
        [(1, 4), (1, 5), (2, 5), (3, 4), (3, 5)])

    empty = graph_core.induced_subgraph(host, set(), set())
    assert empty.left_count == 0
    assert empty.right_count == 0
    assert empty.edge_count == 0

    b42 = set_bipartite(4, 2)
    sub = graph_core.induced_subgraph(b42, {1, 2}, {(1, 2)})
    assert sub.edges == frozenset([(1, (1, 2)), (2, (1, 2))])

    with pytest.raises(ValidationError):
        graph_core.induced_subgraph(host, {4}, set())
    with pytest.raises(ValidationError):
        graph_core.induced_subgraph(b42, {1}, {(1, 5)})


def test_induced_subgraph_is_idempotent():
    host = set_bipartite(6, 3)
    lefts = {2, 4, 5}
    rights = {(1, 2, 4), (2, 5, 6), (3, 4, 5), (1, 3, 6)}
    once = graph_core.induced_subgraph(host, lefts, rights)
    twice = graph_core.induced_subgraph(once, lefts, rights)
    assert once == twice
    assert once.left_labels == (2, 4, 5)


def test_complete_hosts_only_induce_complete_graphs():
    host = complete_bipartite(5, 4)
    sub = graph_core.induced_subgraph(host, {1, 3, 5}, {2, 4})
    assert sub.is_complete
    assert sub.edge_count == 6


def test_oracle_single_edge():
    host = complete_bipartite(2, 2)
    coloring = EdgeColoring.constant(host)
    witness = graph_core.find_induced_monochromatic(
        host, coloring, single_edge())
    assert witness.host_left == (1,)
    assert witness.host_right == (1,)
    assert witness.claimed_color is Color.RED
    assert graph_core.verify_witness(host, coloring, witness)


def test_oracle_prefers_red_then_blue():
    host = complete_bipartite(2, 2)
    coloring = EdgeColoring(host, colors={
        (1, 1): 'B', (1, 2): 'B', (2, 1): 'B', (2, 2): 'R'})
    witness = graph_core.find_induced_monochromatic(
        host, coloring, single_edge())
    assert witness.host_left == (1,)
    assert witness.host_right == (1,)
    assert witness.claimed_color is Color.BLUE
    witness = graph_core.find_induced_monochromatic(
        host, coloring, complete_bipartite(1, 2))
    assert witness.host_left == (1,)
    assert witness.claimed_color is Color.BLUE


def test_oracle_finds_b42_in_red_b93():
    host = set_bipartite(9, 3)
    coloring = EdgeColoring.constant(host)
    pattern = set_bipartite(4, 2)
    witness = graph_core.find_induced_monochromatic(host, coloring, pattern)
    assert witness is not None
    assert witness.host_left == (1, 2, 3, 4)
    assert witness.host_right[0] == (1, 2, 5)
    assert graph_core.verify_witness(host, coloring, witness)


def test_oracle_b42_absent_from_complete_hosts():
    pattern = set_bipartite(4, 2)
    rng = seeded(6)
    for n in range(1, 7):
        for k in range(1, 7):
            host = complete_bipartite(n, k)
            for _ in range(100):
                coloring = EdgeColoring.random(host, seed=rng.random())
                assert graph_core.find_induced_monochromatic(
                    host, coloring, pattern) is None


def test_oracle_path_absent_from_complete_hosts():
    # a path has a non-edge between its classes
    path = BipartiteGraph(2, 2, [(1, 1), (2, 1), (2, 2)])
    for n in range(2, 5):
        for k in range(2, 5):
            host = complete_bipartite(n, k)
            coloring = EdgeColoring.constant(host)
            assert graph_core.find_induced_monochromatic(
                host, coloring, path) is None
            assert graph_core.find_monochromatic_copy(
                host, coloring, path, induced=False) is not None


def test_oracle_pattern_larger_than_host():
    host = complete_bipartite(2, 2)
    coloring = EdgeColoring.constant(host)
    assert graph_core.find_induced_monochromatic(
        host, coloring, complete_bipartite(3, 1)) is None


def test_plain_copy_inside_complete_red_graph():
    host = complete_bipartite(4, 6)
    coloring = EdgeColoring.constant(host)
    pattern = set_bipartite(4, 2)
    witness = graph_core.find_monochromatic_copy(
        host, coloring, pattern, induced=False)
    assert witness is not None
    assert graph_core.verify_witness(host, coloring, witness, induced=False)
    assert not graph_core.verify_witness(host, coloring, witness)
    assert graph_core.find_induced_monochromatic(
        host, coloring, pattern) is None


def test_oracle_round_trip_random():
    rng = seeded(11)
    pattern = BipartiteGraph(2, 2, [(1, 1), (2, 2)])
    for _ in range(30):
        host = set_bipartite(5, 2)
        coloring = EdgeColoring.random(host, seed=rng.random())
        witness = graph_core.find_induced_monochromatic(
            host, coloring, pattern)
        if witness is not None:
            assert graph_core.verify_witness(host, coloring, witness)


def test_oracle_budget():
    host = complete_bipartite(6, 6)
    coloring = EdgeColoring.constant(host)
    with pytest.raises(BudgetExceededError):
        graph_core.find_induced_monochromatic(
            host, coloring, set_bipartite(4, 2), budget=50)


@patch.dict('os.environ', {'RW_BUDGET': '50'})
def test_oracle_budget_from_environment():
    host = complete_bipartite(6, 6)
    coloring = EdgeColoring.constant(host)
    with pytest.raises(BudgetExceededError):
        graph_core.find_induced_monochromatic(
            host, coloring, set_bipartite(4, 2))
