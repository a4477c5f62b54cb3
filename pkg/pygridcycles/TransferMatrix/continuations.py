"""
    Generation of continuations by backtracking.

    A continuation takes a state to the next node column: it chooses that
    column's vertical edges so that every node in it has degree exactly 2,
    counting the horizontal edges coming in from the state on the left and
    the ones it sends on to the right. Paths may be joined, but no loop may
    be closed; the DestinationTable catches premature loops.

    Nodes are visited top to bottom. At each node the downward vertical
    edge is tried before its absence; the right-going edge then follows
    from the node's remaining degree.

"""

from dataclasses import dataclass
from functools import lru_cache

from pygridcycles.TransferMatrix.states import EMPTY, destination_table, encode


@dataclass(frozen=True)
class Continuation:
    """The vertical edges chosen in one node column and the state they lead to.

    `vertical_edges` holds (row, row + 1) pairs, 0-based.

    """

    vertical_edges: tuple
    result: str


def continuations(state):
    """Yields every continuation of `state` exactly once.

    `state` may be the empty state, whose continuations are the starting
    states. Closing the cycle in the last node column is not a continuation:
    `states.is_ending` decides which states that column can close.

    """

    rows = len(state)
    left = [char != EMPTY for char in state]
    table = destination_table(state)
    vertical = []
    right = [False] * rows

    def place(row, up):
        if row == rows:
            yield Continuation(tuple(vertical), encode(right, table))
            return

        need = 2 - left[row] - up

        if need >= 1 and row + 1 < rows:
            record = table.link(row, row + 1)
            if record is not None:
                vertical.append((row, row + 1))
                right[row] = need == 2
                yield from place(row + 1, 1)
                right[row] = False
                vertical.pop()
                table.unlink(record)

        if need <= 1:
            right[row] = need == 1
            yield from place(row + 1, 0)
            right[row] = False

    yield from place(0, 0)


def is_symmetric_continuation(continuation, rows):
    """True when the vertical edges are unchanged by reversing the rows."""
    edges = set(continuation.vertical_edges)
    return all((rows - 2 - upper, rows - 1 - upper) in edges for upper, _ in edges)


def symmetric_continuations_by_filter(state):
    """Continuations with mirror-symmetric vertical edges, by generate-then-reject."""
    rows = len(state)
    for continuation in continuations(state):
        if is_symmetric_continuation(continuation, rows):
            yield continuation


def symmetric_continuations(state):
    """Continuations with mirror-symmetric vertical edges, built symmetric.

    `state` must itself be symmetric in the horizontal axis and have an
    even number of rows. Only the top half of the column is decided; every
    edge below the centre is the mirror image of one above it, and the
    edge between the two middle rows is its own mirror. The degree of a
    lower node then equals that of its mirror automatically.

    """

    rows = len(state)
    half = rows // 2
    left = [char != EMPTY for char in state]
    table = destination_table(state)
    vertical = []
    right = [False] * rows

    def place(row, up):
        if row == half:
            yield Continuation(tuple(sorted(vertical)), encode(right, table))
            return

        need = 2 - left[row] - up
        lower = rows - 1 - row

        if need >= 1:
            if row + 1 < half:
                first = table.link(row, row + 1)
                if first is not None:
                    second = table.link(lower - 1, lower)
                    if second is not None:
                        vertical.append((row, row + 1))
                        vertical.append((lower - 1, lower))
                        right[row] = right[lower] = need == 2
                        yield from place(row + 1, 1)
                        right[row] = right[lower] = False
                        vertical.pop()
                        vertical.pop()
                        table.unlink(second)
                    table.unlink(first)
            else:
                record = table.link(row, row + 1)
                if record is not None:
                    vertical.append((row, row + 1))
                    right[row] = right[lower] = need == 2
                    yield from place(row + 1, 1)
                    right[row] = right[lower] = False
                    vertical.pop()
                    table.unlink(record)

        if need <= 1:
            right[row] = right[lower] = need == 1
            yield from place(row + 1, 0)
            right[row] = right[lower] = False

    yield from place(0, 0)


@lru_cache(maxsize=1 << 20)
def successor_states(state, reflective=False):
    """The result states of all continuations of `state`, with repetition.

    This is the cached form used by frontier steps; continuations are never
    stored in bulk, only the resulting state strings of recently seen
    sources.

    """

    generate = symmetric_continuations if reflective else continuations
    return tuple(continuation.result for continuation in generate(state))
