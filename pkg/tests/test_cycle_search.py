import pytest

from pygridcycles.CycleSearch import BruteForceSearch, DancingLinksSearch
from pygridcycles.CycleSearch.oracle import brute_cycles
from pygridcycles.errors import SizeLimitError
from pygridcycles.grid import GridSpec, check_hamiltonian, grid_graph


def dlx(spec, **kwargs):
    return DancingLinksSearch(*grid_graph(spec), **kwargs)


@pytest.mark.parametrize('rows, cols, expected', [
    (2, 2, 1),
    (3, 3, 0),
    (4, 4, 6),
    (2, 5, 1),
    (3, 4, 2),
])
def test_dancing_links_on_small_grids(rows, cols, expected):
    assert dlx(GridSpec(rows, cols)).search() == expected


def test_dancing_links_on_6x6():
    assert dlx(GridSpec(6, 6)).search() == 1072


def test_dancing_links_finds_the_brute_force_cycles():
    spec = GridSpec(4, 4)
    found = dlx(spec).cycles()
    assert len(found) == len(set(found)) == 6
    assert set(found) == {cycle.edges for cycle in brute_cycles(spec)}
    for edges in found:
        assert check_hamiltonian(spec.nodes(), edges)[0]


def test_without_the_loop_guard_it_counts_two_factors():
    spec = GridSpec(4, 4)
    two_factors = dlx(spec, loop_guard=False).search()
    # The 4x4 grid can also be covered by four separate 4-cycles, among others.
    assert two_factors > dlx(spec).search()
    assert dlx(GridSpec(2, 4), loop_guard=False).search() == 2


@pytest.mark.parametrize('limit', [None, 1, 3])
def test_search_restores_the_links(limit):
    search = dlx(GridSpec(4, 4))
    before = search.link_snapshot()
    found = search.search(limit=limit)
    assert search.link_snapshot() == before
    if limit is not None:
        assert found == limit


def test_callback_receives_sorted_edge_lists():
    seen = []
    dlx(GridSpec(3, 4)).search(seen.append)
    assert len(seen) == 2
    assert all(list(edges) == sorted(edges) for edges in seen)


@pytest.mark.parametrize('forced', [
    [((2, 2), (2, 3))],
    [((1, 1), (1, 2)), ((2, 2), (3, 2))],
    [((2, 1), (2, 2)), ((2, 2), (2, 3))],
])
def test_forced_edges_keep_only_the_cycles_through_them(forced):
    spec = GridSpec(4, 4)
    search = dlx(spec, forced_edges=forced)
    before = search.link_snapshot()
    found = search.cycles()
    assert search.link_snapshot() == before
    expected = {cycle.edges for cycle in brute_cycles(spec) if set(forced) <= set(cycle.edges)}
    assert set(found) == expected
    assert all(edge in edges for edges in found for edge in forced)


def test_forced_edges_must_fit_the_graph():
    with pytest.raises(ValueError):
        dlx(GridSpec(4, 4), forced_edges=[((1, 1), (2, 2))])
    three_at_one_node = [((1, 2), (2, 2)), ((2, 1), (2, 2)), ((2, 2), (2, 3))]
    assert dlx(GridSpec(4, 4), forced_edges=three_at_one_node).search() == 0
    # A node already fixed by its only two edges changes nothing.
    assert dlx(GridSpec(6, 6), forced_edges=[((1, 1), (1, 2)), ((1, 1), (2, 1))]).search() == 1072


def test_search_rejects_graphs_that_are_not_simple():
    with pytest.raises(ValueError):
        DancingLinksSearch([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        DancingLinksSearch([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        DancingLinksSearch([1, 2], [(1, 3)])


def test_brute_force_on_a_general_graph():
    # Every node of the complete graph on 4 nodes has degree 3.
    nodes = [0, 1, 2, 3]
    edges = [(a, b) for a in nodes for b in nodes if a < b]
    with pytest.raises(ValueError):
        BruteForceSearch(nodes, edges)

    # Removing one edge leaves two nodes of degree 2 and one cycle through them.
    edges.remove((0, 1))
    assert BruteForceSearch(nodes, edges).search() == 1
    assert DancingLinksSearch(nodes, edges).search() == 1


def test_brute_force_anchor_independence():
    spec = GridSpec(4, 4)
    nodes, edges = grid_graph(spec)
    anchored = {frozenset(c) for c in BruteForceSearch(nodes, edges, anchor=(1, 1)).cycles()}
    other = {frozenset(c) for c in BruteForceSearch(nodes, edges, anchor=(4, 1)).cycles()}
    assert anchored == other
    assert len(anchored) == 6


def test_brute_force_size_limit():
    with pytest.raises(SizeLimitError):
        brute_cycles(GridSpec(6, 8))
    nodes, edges = grid_graph(GridSpec(4, 4))
    with pytest.raises(SizeLimitError):
        BruteForceSearch(nodes, edges, max_nodes=10)
