"""
    Connectivity states and the terminal vectors of the transfer method.

    A state describes the horizontal edges crossing the boundary between
    two node columns, and how the paths to the left of the boundary join
    them up. It is encoded as a string with one character per node row,
    top row first:

        '.'  no horizontal edge in this row
        '('  a path end whose partner is further down
        ')'  a path end whose partner is further up

    Planar paths cannot cross, so a bracket string is enough to recover the
    pairing. The encoding is canonical and doubles as the checkpoint form.

"""

import logging
from functools import lru_cache

from pygridcycles.destinations import DestinationTable
from pygridcycles.errors import InvalidStateError

EMPTY = '.'
OPEN = '('
CLOSE = ')'

_MIRROR = str.maketrans({OPEN: CLOSE, CLOSE: OPEN})


def check_state(state, allow_empty=False):
    """Checks a state encoding. Returns (is_correct, msg)."""
    if not isinstance(state, str) or not state:
        return False, "A state must be a non-empty string."

    depth = 0
    for row, char in enumerate(state):
        if char == OPEN:
            depth += 1
        elif char == CLOSE:
            depth -= 1
            if depth < 0:
                return False, f"Unmatched ')' in row {row + 1} of state {state!r}."
        elif char != EMPTY:
            return False, f"Unknown character {char!r} in state {state!r}."

    if depth != 0:
        return False, f"Unmatched '(' in state {state!r}."
    if not allow_empty and OPEN not in state:
        return False, f"State {state!r} has no horizontal edges."

    return True, ""


def validate_state(state, allow_empty=False):
    is_correct, msg = check_state(state, allow_empty)

    if not is_correct:
        logging.error(msg)
        raise InvalidStateError(msg)

    return state


def empty_state(rows):
    return EMPTY * rows


def pairs(state):
    """Returns the (upper, lower) row pairs linked by the state, 0-based."""
    stack = []
    result = []
    for row, char in enumerate(state):
        if char == OPEN:
            stack.append(row)
        elif char == CLOSE:
            result.append((stack.pop(), row))
    return sorted(result)


def partner_map(state):
    """Returns a dict row -> linked row over the occupied rows."""
    partner = {}
    for a, b in pairs(state):
        partner[a] = b
        partner[b] = a
    return partner


def destination_table(state):
    """A DestinationTable over the rows of the next node column."""
    return DestinationTable.from_pairs(len(state), pairs(state))


def encode(right_edges, table):
    """Encodes the rows with right-going edges, paired by `table`."""
    chars = []
    for row, has_edge in enumerate(right_edges):
        if not has_edge:
            chars.append(EMPTY)
        elif table[row] > row:
            chars.append(OPEN)
        else:
            chars.append(CLOSE)
    return ''.join(chars)


def occupied_rows(state):
    return tuple(row for row, char in enumerate(state) if char != EMPTY)


def mirror(state):
    """The state reflected in the horizontal axis."""
    return state[::-1].translate(_MIRROR)


def is_symmetric(state):
    return state == mirror(state)


def is_single_pair(state):
    return state.count(OPEN) == 1


def compositions(total, smallest=2):
    """All compositions of `total` into parts of at least `smallest`."""
    if total == 0:
        return [()]
    result = []
    for part in range(smallest, total + 1):
        for rest in compositions(total - part, smallest):
            result.append((part,) + rest)
    return result


def chain_state(parts):
    """The starting state whose first column holds vertical chains of the given lengths."""
    return ''.join(OPEN + EMPTY * (part - 2) + CLOSE for part in parts)


def starting_states(rows, symmetric=False):
    """Starting states for a column of `rows` nodes.

    Each vertical chain in the first column emits a horizontal edge from
    both of its ends, so the states correspond to compositions of `rows`
    into parts of at least 2. With `symmetric` only palindromic
    compositions are kept.

    """

    parts_list = compositions(rows)
    if symmetric:
        parts_list = [parts for parts in parts_list if parts == parts[::-1]]
    return [chain_state(parts) for parts in parts_list]


def single_loop_state(rows):
    return chain_state((rows,))


def unit_length_state(rows):
    return chain_state((2,) * (rows // 2))


def all_states(rows):
    """Every valid state of the given height, in lexicographic order."""
    result = []

    def extend(prefix, depth):
        remaining = rows - len(prefix)
        if remaining == 0:
            if depth == 0 and OPEN in prefix:
                result.append(prefix)
            return
        if depth < remaining - 1:
            extend(prefix + OPEN, depth + 1)
        if depth > 0:
            extend(prefix + CLOSE, depth - 1)
        if depth < remaining:
            extend(prefix + EMPTY, depth)

    extend('', 0)
    return sorted(result)


@lru_cache(maxsize=None)
def is_ending(state):
    """True when one final node column can close `state` into a single cycle.

    The final column has no right-going edges, so every node's vertical
    edges are forced: working down the column, a node takes a downward
    edge exactly when it still lacks one unit of degree. The state is
    ending when that succeeds and the only loop closed is closed by the
    last edge of the column.

    """

    rows = len(state)
    if OPEN not in state:
        return False

    table = destination_table(state)
    up = 0
    for row in range(rows):
        need = 2 - (state[row] != EMPTY) - up
        if need == 0:
            up = 0
            continue
        if need == 2 or row + 1 == rows:
            return False
        if table.closes_loop(row, row + 1):
            return row + 2 == rows
        table.link(row, row + 1)
        up = 1

    return False


def rotation_partner(state):
    """The pairing of the state rotated by 180 degrees about the grid centre.

    Returns a dict row -> row over the occupied rows, where the rotated
    copy links row i to rows-1-P(rows-1-i).

    """

    rows = len(state)
    partner = partner_map(state)
    return {row: rows - 1 - partner[rows - 1 - row] for row in partner}


@lru_cache(maxsize=None)
def rot180_closable(state):
    """True when the state, joined to its 180-degree rotated copy, is one cycle.

    The rotated copy fills the right half of the square. The horizontal
    edges must sit in rows that are symmetric about the centre, and
    following the links alternately on the two sides must visit every
    occupied row before returning to the start.

    """

    rows = len(state)
    occupied = occupied_rows(state)
    if not occupied:
        return False
    if set(occupied) != {rows - 1 - row for row in occupied}:
        return False

    partner = partner_map(state)
    rotated = rotation_partner(state)

    start = occupied[0]
    row, visited = start, 0
    while True:
        row = rotated[partner[row]]
        visited += 2
        if row == start:
            break

    return visited == len(occupied)
