"""
    This module contains the shared domain types of gridcycles.

    Nodes are addressed as (row, col) pairs, both 1-indexed, row 1 at the
    top. A cycle is stored as its sorted edge list, each edge being a sorted
    pair of nodes; two cycles are equal exactly when their edge lists are.

    The eight symmetry operations of the square act on nodes by an optional
    swap of the two coordinates followed by optional reversals of rows and
    of columns. Rotations are clockwise.

"""

import enum
import logging
import re
from dataclasses import dataclass
from typing import NamedTuple

from pygridcycles.errors import InvalidOperationError, InvariantViolation


@dataclass(frozen=True)
class GridSpec:
    """A rectangular grid graph of `rows` x `cols` nodes."""

    rows: int
    cols: int

    def __post_init__(self):
        is_correct, msg = self._check_inputs()

        if not is_correct:
            logging.error(msg)
            raise ValueError(msg)

    def _check_inputs(self):
        if not isinstance(self.rows, int) or not isinstance(self.cols, int):
            return False, "Grid dimensions must be integers."
        if self.rows < 1 or self.cols < 1:
            return False, "Grid dimensions must be at least 1."

        return True, ""

    @classmethod
    def square(cls, n):
        """The 2n x 2n grid."""
        return cls(2 * n, 2 * n)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def may_have_cycles(self):
        # Checkerboard parity, and a cycle needs two rows and two columns.
        return (self.rows * self.cols) % 2 == 0 and self.rows >= 2 and self.cols >= 2

    def nodes(self):
        return [(r, c) for r in range(1, self.rows + 1) for c in range(1, self.cols + 1)]

    def edges(self):
        result = []
        for r, c in self.nodes():
            if c < self.cols:
                result.append(((r, c), (r, c + 1)))
            if r < self.rows:
                result.append(((r, c), (r + 1, c)))
        return sorted(result)


def grid_graph(spec):
    """Returns (nodes, edges) of the grid graph described by `spec`."""
    return spec.nodes(), spec.edges()


def normalize_edges(edges):
    """Sorts each edge's endpoints and the edge list itself."""
    return tuple(sorted(tuple(sorted(edge)) for edge in edges))


class D4Op(enum.Enum):
    """The eight symmetry operations of the square.

    Each value is (swap, reverse_rows, reverse_cols): node (r, c) is first
    mapped to (c, r) when `swap` is set, then rows and/or columns are
    reversed.

    """

    IDENTITY = (False, False, False)
    ROT90 = (True, False, True)
    ROT180 = (False, True, True)
    ROT270 = (True, True, False)
    FLIP_H = (False, True, False)
    FLIP_V = (False, False, True)
    TRANSPOSE = (True, False, False)
    ANTI_TRANSPOSE = (True, True, True)

    @property
    def swaps_axes(self):
        return self.value[0]

    def map_node(self, node, rows, cols):
        swap, reverse_rows, reverse_cols = self.value
        r, c = node
        if swap:
            r, c = c, r
        if reverse_rows:
            r = rows + 1 - r
        if reverse_cols:
            c = cols + 1 - c
        return r, c

    def compose(self, other):
        """Returns self o other, i.e. `other` is applied first."""
        # The image of (1, 2) on a 4x4 grid tells all eight ops apart.
        probe = self.map_node(other.map_node((1, 2), 4, 4), 4, 4)
        return _PROBE_IMAGES[probe]

    def inverse(self):
        for op in D4Op:
            if op.compose(self) is D4Op.IDENTITY:
                return op
        raise InvariantViolation(f"{self} has no inverse.")


_PROBE_IMAGES = {op.map_node((1, 2), 4, 4): op for op in D4Op}

ROTATIONS = frozenset({D4Op.IDENTITY, D4Op.ROT90, D4Op.ROT180, D4Op.ROT270})
DIAGONAL_REFLECTIONS = frozenset({D4Op.TRANSPOSE, D4Op.ANTI_TRANSPOSE})


@dataclass(frozen=True)
class Cycle:
    """A Hamiltonian cycle of a grid, as a sorted edge list."""

    grid: GridSpec
    edges: tuple

    @classmethod
    def from_edges(cls, grid, edges):
        """Builds a cycle and checks that it is Hamiltonian on `grid`."""
        cycle = cls(grid, normalize_edges(edges))
        cycle.validate()
        return cycle

    def validate(self):
        nodes = set(self.grid.nodes())
        is_correct, msg = check_hamiltonian(nodes, self.edges)

        if not is_correct:
            logging.error(msg)
            raise InvariantViolation(msg)

    def nodes(self):
        return sorted({node for edge in self.edges for node in edge})


def check_hamiltonian(nodes, edges):
    """Checks that `edges` form one cycle through every node of `nodes`.

    Returns (is_correct, msg), like the `_check_inputs` methods.

    """

    neighbours = {node: [] for node in nodes}
    for a, b in edges:
        if a not in neighbours or b not in neighbours:
            return False, f"Edge {a}-{b} leaves the host graph."
        if a == b:
            return False, f"Edge {a}-{b} is a self-loop."
        neighbours[a].append(b)
        neighbours[b].append(a)

    for node, adjacent in neighbours.items():
        if len(adjacent) != 2:
            return False, f"Node {node} has degree {len(adjacent)}, not 2."

    # Walk the cycle from an arbitrary node.
    start = next(iter(neighbours))
    previous, current, length = start, neighbours[start][0], 1
    while current != start:
        a, b = neighbours[current]
        previous, current = current, (b if a == previous else a)
        length += 1

    if length != len(neighbours):
        return False, f"Edges form several cycles; the one through {start} has length {length}."

    return True, ""


def apply_symmetry(cycle, op):
    """Returns the image of `cycle` under `op`."""
    grid = cycle.grid

    if op.swaps_axes and not grid.is_square:
        msg = f"{op.name} is only defined on square grids, not on {grid.rows}x{grid.cols}."
        logging.error(msg)
        raise InvalidOperationError(msg)

    image = (
        (op.map_node(a, grid.rows, grid.cols), op.map_node(b, grid.rows, grid.cols))
        for a, b in cycle.edges
    )
    return Cycle(grid, normalize_edges(image))


def stabilizer(cycle):
    """Returns the set of symmetry operations fixing `cycle`."""
    ops = D4Op if cycle.grid.is_square else (D4Op.IDENTITY, D4Op.ROT180, D4Op.FLIP_H, D4Op.FLIP_V)
    return frozenset(op for op in ops if apply_symmetry(cycle, op) == cycle)


# Exact stabilizers that occur, keyed to the class symbols u..z. A cycle
# fixed by a diagonal reflection is fixed by everything (only the 2x2 ring).
EXACT_SYMMETRY_CLASSES = {
    frozenset({D4Op.IDENTITY}): 'u',
    frozenset({D4Op.IDENTITY, D4Op.FLIP_H}): 'v',
    frozenset({D4Op.IDENTITY, D4Op.FLIP_V}): 'v',
    frozenset({D4Op.IDENTITY, D4Op.ROT180}): 'w',
    frozenset({D4Op.IDENTITY, D4Op.ROT180, D4Op.FLIP_H, D4Op.FLIP_V}): 'x',
    ROTATIONS: 'y',
    frozenset(D4Op): 'z',
}


def exact_symmetry_class(cycle):
    """Returns the class symbol u..z of `cycle` from its exact stabilizer."""
    group = stabilizer(cycle)

    try:
        return EXACT_SYMMETRY_CLASSES[group]
    except KeyError:
        msg = f"Stabilizer {sorted(op.name for op in group)} is not one of the listed symmetry classes."
        logging.error(msg)
        raise InvariantViolation(msg)


class SymmetryCounts(NamedTuple):
    """Counts of cycles with at least the given symmetries."""

    A: int
    B: int
    C: int
    D: int
    E: int
    F: int

    def check_ordering(self):
        """Each stronger symmetry requirement counts a subset."""
        A, B, C, D, E, F = self
        return A >= B and A >= C >= D and C >= E >= F and B >= D >= F and F >= 0


class ClassCounts(NamedTuple):
    """Numbers of isomorphism classes with exactly the given symmetries."""

    u: int
    v: int
    w: int
    x: int
    y: int
    z: int

    @property
    def total(self):
        return sum(self)


_EDGE_ITEM = r'\((\d+),(\d+)\)-\((\d+),(\d+)\)(\*?)'
_EDGE_TEXT = re.compile(_EDGE_ITEM)
_EDGE_LINE = re.compile(rf'{_EDGE_ITEM}(?:,{_EDGE_ITEM})*')


def format_edge_list(edges, marked=frozenset()):
    """One line of a solution dump: `(r1,c1)-(r2,c2)` items separated by
    commas, with a `*` after each edge of `marked`."""
    items = []
    for a, b in normalize_edges(edges):
        star = '*' if (a, b) in marked else ''
        items.append(f"({a[0]},{a[1]})-({b[0]},{b[1]}){star}")
    return ','.join(items)


def parse_edge_list(line):
    """Reads a dump line back into (edges, marked edges)."""
    line = line.strip()
    if _EDGE_LINE.fullmatch(line) is None:
        msg = f"Cannot read edge list {line!r}."
        logging.error(msg)
        raise ValueError(msg)

    edges, marked = [], set()
    for match in _EDGE_TEXT.finditer(line):
        r1, c1, r2, c2 = (int(match.group(i)) for i in range(1, 5))
        edge = tuple(sorted(((r1, c1), (r2, c2))))
        edges.append(edge)
        if match.group(5):
            marked.add(edge)
    return normalize_edges(edges), frozenset(marked)
