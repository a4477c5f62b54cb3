"""
    This module contains the brute-force oracle.

    It lists every Hamiltonian cycle of a small grid directly, without the
    transfer method, and sorts the cycles of a square into isomorphism
    classes under the eight symmetry operations. Its results are the ground
    truth the fast counts are tested against.

"""

from collections import Counter
from dataclasses import dataclass
import logging

from pygridcycles.CycleSearch.BruteForceSearch import BruteForceSearch
from pygridcycles.errors import SizeLimitError
from pygridcycles.grid import (
    ClassCounts, Cycle, D4Op, apply_symmetry, exact_symmetry_class, format_edge_list, grid_graph)

# Largest number of grid nodes the oracle accepts.
MAX_ORACLE_NODES = 40


def brute_cycles(spec, anchor=None):
    """Returns all Hamiltonian cycles of the grid `spec` as Cycle objects.

    The walk is anchored at the top-left corner unless another node of
    degree 2 is given.

    """

    if spec.rows * spec.cols > MAX_ORACLE_NODES:
        msg = f"The oracle handles grids of at most {MAX_ORACLE_NODES} nodes, not {spec.rows}x{spec.cols}."
        logging.error(msg)
        raise SizeLimitError(msg)

    if not spec.may_have_cycles:
        return []

    nodes, edges = grid_graph(spec)
    search = BruteForceSearch(nodes, edges, anchor=anchor or (1, 1), max_nodes=MAX_ORACLE_NODES)
    return [Cycle(spec, found) for found in search.cycles()]


def _symmetry_ops(grid):
    if grid.is_square:
        return tuple(D4Op)
    return (D4Op.IDENTITY, D4Op.ROT180, D4Op.FLIP_H, D4Op.FLIP_V)


def canonical_form(cycle):
    """The lexicographically smallest edge list among the images of `cycle`."""
    return min(apply_symmetry(cycle, op).edges for op in _symmetry_ops(cycle.grid))


@dataclass(frozen=True)
class CanonicalCycle:
    """A cycle together with the canonical form of its isomorphism class."""

    edges: tuple
    canonical_form: tuple

    @classmethod
    def of(cls, cycle):
        return cls(cycle.edges, canonical_form(cycle))


def classify(cycles):
    """Counts the isomorphism classes of `cycles` by exact symmetry.

    All cycles must lie on the same square grid. Returns ClassCounts.

    """

    cycles = list(cycles)
    grids = {cycle.grid for cycle in cycles}
    if len(grids) > 1 or any(not grid.is_square for grid in grids):
        msg = "Cycles to classify must all lie on one square grid."
        logging.error(msg)
        raise ValueError(msg)

    representatives = {}
    for cycle in cycles:
        representatives.setdefault(canonical_form(cycle), cycle)

    tally = Counter(exact_symmetry_class(cycle) for cycle in representatives.values())
    logging.info("cycles=%d classes=%d", len(cycles), len(representatives))
    return ClassCounts(*(tally[symbol] for symbol in ClassCounts._fields))


def dump_canonical_forms(cycles):
    """The sorted canonical forms of `cycles`, one dump line per class."""
    forms = sorted({canonical_form(cycle) for cycle in cycles})
    return '\n'.join(format_edge_list(form) for form in forms)
