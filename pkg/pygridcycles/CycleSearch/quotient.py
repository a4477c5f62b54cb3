"""
    This module contains the search for cycles with 90-degree rotational
    symmetry (count E).

    A cycle of the 2n x 2n square fixed by the quarter turn is determined by
    its top-left n x n quadrant. The edges crossing from one quadrant into
    the next fall into orbits of four under the rotation; each orbit is
    folded into one extra edge of the quadrant, joining (i, n) on its right
    side to (n, i) on its bottom side. The orbit through the centre (i = n)
    would fold into a self-loop and is left out.

    Following a quadrant cycle around the square, every extra edge moves on
    to the next quadrant, so the cycle lifts to a single cycle of the square
    exactly when it uses an odd number of extra edges. Checkerboard parity
    makes that automatic for odd n and impossible for even n.

"""

from dataclasses import dataclass
import logging

from pygridcycles.CycleSearch.DancingLinksSearch import DancingLinksSearch
from pygridcycles.errors import InvariantViolation
from pygridcycles.grid import Cycle, D4Op, GridSpec, format_edge_list, normalize_edges


@dataclass(frozen=True)
class QuotientGraph:
    """The n x n quadrant grid plus its extra (folded) edges."""

    n: int
    nodes: tuple
    edges: tuple
    extra_edges: frozenset

    def extra_edges_used(self, edges):
        return sum(1 for edge in edges if edge in self.extra_edges)


def build_quotient(n):
    if not isinstance(n, int) or n < 2:
        msg = f"The quotient grid needs n >= 2, not {n!r}."
        logging.error(msg)
        raise ValueError(msg)

    quadrant = GridSpec(n, n)
    extra = normalize_edges(((i, n), (n, i)) for i in range(1, n))
    return QuotientGraph(
        n=n,
        nodes=tuple(quadrant.nodes()),
        edges=normalize_edges(list(quadrant.edges()) + list(extra)),
        extra_edges=frozenset(extra),
    )


def corner_edges(n):
    """The two edges at (n, n), the quadrant corner next to the centre.

    That node has no extra edge, so every quadrant cycle uses both of its
    grid edges.

    """

    return normalize_edges([((n - 1, n), (n, n)), ((n, n - 1), (n, n))])


def _search(graph):
    return DancingLinksSearch(graph.nodes, graph.edges, forced_edges=corner_edges(graph.n))


def _orbit(edge, square):
    images = []
    for op in (D4Op.IDENTITY, D4Op.ROT90, D4Op.ROT180, D4Op.ROT270):
        a, b = (op.map_node(node, square.rows, square.cols) for node in edge)
        images.append((a, b))
    return images


def unfold(edges, n):
    """Copies a quadrant cycle to the four quadrants of the 2n x 2n square.

    Each extra edge (i, n)-(n, i) becomes the real edge (i, n)-(i, n+1),
    whose far end is the image of (n, i) under the quarter turn. Raises
    InvariantViolation unless the result is a Hamiltonian cycle.

    """

    graph = build_quotient(n)
    known = set(graph.edges)
    square = GridSpec.square(n)

    full = []
    for edge in normalize_edges(edges):
        if edge not in known:
            msg = f"Edge {edge} is not an edge of the {n}x{n} quotient grid."
            logging.error(msg)
            raise InvariantViolation(msg)
        if edge in graph.extra_edges:
            (i, _), _ = edge
            edge = ((i, n), (i, n + 1))
        full.extend(_orbit(edge, square))

    return Cycle.from_edges(square, full)


def _count_quotient_cycles(n, graph, callback=None):
    lifted = 0
    odd_required = n % 2 == 1

    def on_solution(solution):
        nonlocal lifted
        used = graph.extra_edges_used(solution)
        if used % 2 == 1:
            lifted += 1
        elif odd_required:
            msg = f"A quotient cycle for n={n} uses {used} extra edges, an even number."
            logging.error(msg)
            raise InvariantViolation(msg)
        if callback is not None:
            callback(solution)

    _search(graph).search(on_solution)
    return lifted


def count_E(n, verify_parity=False, callback=None):
    """Number of Hamiltonian cycles of the 2n x 2n square with 90-degree
    rotational symmetry.

    Even n gives 0 without searching, unless `verify_parity` asks for the
    search to be run anyway. `callback` receives the edge list of every
    quadrant cycle found.

    """

    if not isinstance(n, int) or n < 1:
        msg = f"The half-size n has to be a positive integer, not {n!r}."
        logging.error(msg)
        raise ValueError(msg)

    # The 2x2 ring is its own quadrant picture.
    if n == 1:
        return 1
    if n % 2 == 0 and not verify_parity:
        return 0

    graph = build_quotient(n)
    count = _count_quotient_cycles(n, graph, callback)
    logging.info("count=E n=%d value=%d", n, count)
    return count


def quotient_solutions(n):
    """All quadrant cycles of the quotient grid, as sorted edge lists."""
    graph = build_quotient(n)
    return _search(graph).cycles()


def format_solution(edges, graph):
    """One line of the solution dump, extra edges marked with `*`."""
    return format_edge_list(edges, graph.extra_edges)
