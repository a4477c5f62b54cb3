"""
    This module contains the counts computed with the transfer method.

    For a 2n x 2n square, the frontier after the first node column holds
    the starting states. Applying 2n-2 steps reaches the boundary before
    the last column, where the ending states close the cycles (count A, or
    count B in reflective mode). Applying only n-1 steps reaches the
    central boundary, where each state's paths can be completed by a mirror
    image (single-pair states, count B) or by a rotated copy
    (rotation-closable states, count C; in reflective mode, count D).

"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
import logging

import pandas as pd

from pygridcycles.errors import InvalidStateError, MemoryBudgetExceeded
from pygridcycles.TransferMatrix.ReflectiveTransferMatrix import ReflectiveTransferMatrix
from pygridcycles.TransferMatrix.TransferMatrix import Mode
from pygridcycles.TransferMatrix.UnrestrictedTransferMatrix import UnrestrictedTransferMatrix
from pygridcycles.TransferMatrix.continuations import successor_states
from pygridcycles.TransferMatrix.states import (
    is_ending, is_single_pair, rot180_closable, single_loop_state, starting_states, unit_length_state)


def _check_half_size(n):
    if not isinstance(n, int) or n < 1:
        msg = f"The half-size n has to be a positive integer, not {n!r}."
        logging.error(msg)
        raise ValueError(msg)


def make_transfer_matrix(mode, rows, **options):
    """Returns the transfer matrix of the given mode for columns of `rows` nodes."""
    if Mode(mode) is Mode.REFLECTIVE:
        return ReflectiveTransferMatrix(rows, **options)
    return UnrestrictedTransferMatrix(rows, **options)


def starting_frontier(n, mode=Mode.UNRESTRICTED, **options):
    """The frontier of starting states of the 2n x 2n square, each counted once."""
    _check_half_size(n)
    return make_transfer_matrix(mode, 2 * n, **options).starting_frontier()


def _full_run(matrix, n):
    return matrix.run(matrix.starting_frontier(), 2 * n - 2)


def _half_run(matrix, n):
    return matrix.run(matrix.starting_frontier(), n - 1)


def count_A(n, **options):
    """Number of Hamiltonian cycles on the 2n x 2n square."""
    _check_half_size(n)
    matrix = UnrestrictedTransferMatrix(2 * n, **options)
    return _full_run(matrix, n).total(is_ending)


def count_B_edge(n, **options):
    """Number of cycles symmetric in the horizontal axis, from reflective states."""
    _check_half_size(n)
    matrix = ReflectiveTransferMatrix(2 * n, **options)
    return _full_run(matrix, n).total(is_ending)


def count_B_central(n, **options):
    """Number of cycles symmetric in the vertical axis, from single-pair central states."""
    _check_half_size(n)
    matrix = UnrestrictedTransferMatrix(2 * n, **options)
    return _half_run(matrix, n).total(is_single_pair)


def count_C(n, **options):
    """Number of cycles with 180-degree rotational symmetry."""
    _check_half_size(n)
    matrix = UnrestrictedTransferMatrix(2 * n, **options)
    return _half_run(matrix, n).total(rot180_closable)


def count_D(n, **options):
    """Number of cycles with both reflective symmetries."""
    _check_half_size(n)
    matrix = ReflectiveTransferMatrix(2 * n, **options)
    return _half_run(matrix, n).total(is_single_pair)


def count_D_rotational(n, **options):
    """Count D from rotation-closable reflective central states.

    In reflective mode these are the same states as the single-pair ones,
    so this always equals count_D.

    """

    _check_half_size(n)
    matrix = ReflectiveTransferMatrix(2 * n, **options)
    return _half_run(matrix, n).total(rot180_closable)


def count_rect(width, height, **options):
    """Number of Hamiltonian cycles on a grid of `height` rows and `width` columns."""
    if not isinstance(height, int) or height < 2 or height % 2 != 0:
        msg = f"The height has to be an even number of at least 2, not {height!r}."
        logging.error(msg)
        raise ValueError(msg)
    if not isinstance(width, int) or width < 1:
        msg = f"The width has to be a positive integer, not {width!r}."
        logging.error(msg)
        raise ValueError(msg)

    # A single column has no cycle.
    if width == 1:
        return 0

    matrix = UnrestrictedTransferMatrix(height, **options)
    return matrix.run(matrix.starting_frontier(), width - 2).total(is_ending)


def count_from_start(n, start, **options):
    """Number of cycles on the 2n x 2n square whose first column produces `start`."""
    _check_half_size(n)
    if start not in starting_states(2 * n):
        msg = f"State {start!r} is not a starting state of the {2 * n}x{2 * n} square."
        logging.error(msg)
        raise InvalidStateError(msg)

    matrix = UnrestrictedTransferMatrix(2 * n, **options)
    frontier = matrix.run(matrix.seeded_frontier({start: 1}), 2 * n - 2)
    return frontier.total(is_ending)


def per_start_counts(n, **options):
    """Returns a dict from each starting state to its number of cycles."""
    return {start: count_from_start(n, start, **options) for start in starting_states(2 * n)}


def success_ratios(n, **options):
    """Ratios between the cycle counts of different starting states.

    Returns (single-loop / unit-length, unit-length / least successful)
    as exact fractions.

    """

    if not isinstance(n, int) or n < 2:
        msg = "Success ratios need n >= 2."
        logging.error(msg)
        raise ValueError(msg)

    counts = per_start_counts(n, **options)
    unit = counts[unit_length_state(2 * n)]
    return Fraction(counts[single_loop_state(2 * n)], unit), Fraction(unit, min(counts.values()))


def ratio_series(n_max, **options):
    """Success ratios for n = 2..n_max as a DataFrame."""
    records = []
    for n in range(2, n_max + 1):
        max_over_unit, unit_over_min = success_ratios(n, **options)
        records.append({
            'n': n,
            'max_over_unit': max_over_unit,
            'unit_over_min': unit_over_min,
            'max_over_unit_float': float(max_over_unit),
            'unit_over_min_float': float(unit_over_min),
        })
    return pd.DataFrame.from_records(records)


def state_census(n, mode=Mode.UNRESTRICTED, **options):
    """Numbers of distinct states and continuations reached in a full run.

    The run applies 2n-1 steps, one more than the square needs, so that the
    last frontier also gives the 2n x (2n+1) count. Every distinct state in
    any of the frontiers is counted once, together with all of its
    continuations in this mode.

    """

    _check_half_size(n)
    matrix = make_transfer_matrix(mode, 2 * n, **options)
    seen = reachable_states(n, mode, **options)
    num_continuations = sum(len(matrix.successors(state)) for state in seen)
    return len(seen), num_continuations


def reachable_states(n, mode=Mode.UNRESTRICTED, **options):
    """Every distinct state in the frontiers of a 2n-1 step run.

    The set of seen states is held to the same memory limit as a frontier.

    """

    _check_half_size(n)
    matrix = make_transfer_matrix(mode, 2 * n, **options)

    frontier = matrix.starting_frontier()
    seen = set(frontier.entries)
    for _ in range(2 * n - 1):
        frontier = matrix.step(frontier)
        seen.update(frontier.entries)
        if len(seen) > matrix.memory_limit:
            msg = (f"{len(seen)} distinct states seen up to column {frontier.column_index}, "
                   f"above the memory limit of {matrix.memory_limit}.")
            logging.error(msg)
            raise MemoryBudgetExceeded(msg)

    return frozenset(seen)


@dataclass(frozen=True)
class StateDepth:
    """Where a state can occur in the 2n x 2n square.

    `min_steps_to_end` is None when no ending state can be reached.

    """

    min_steps_from_start: int
    min_steps_to_end: object
    completion_count_at_center: int
    ways_at_center: int


def reach_depths(n):
    """Distances of every reachable state from the starting and ending states.

    Explores the continuation relation breadth first from the starting
    states, then backwards from the ending states. Completion counts are
    the numbers of ways to finish a cycle from the central boundary, i.e.
    the sums over ending states after n-1 steps from a single-state vector.

    """

    _check_half_size(n)
    rows = 2 * n

    successors = {}
    from_start = {state: 0 for state in starting_states(rows)}
    queue = deque(from_start)
    while queue:
        state = queue.popleft()
        successors[state] = successor_states(state)
        for result in set(successors[state]):
            if result not in from_start:
                from_start[result] = from_start[state] + 1
                queue.append(result)

    predecessors = {state: set() for state in successors}
    for state, results in successors.items():
        for result in results:
            predecessors[result].add(state)

    to_end = {state: 0 for state in successors if is_ending(state)}
    queue = deque(to_end)
    while queue:
        state = queue.popleft()
        for source in predecessors[state]:
            if source not in to_end:
                to_end[source] = to_end[state] + 1
                queue.append(source)

    completions = {state: int(is_ending(state)) for state in successors}
    for _ in range(n - 1):
        completions = {
            state: sum(completions[result] for result in results)
            for state, results in successors.items()
        }

    central = _half_run(UnrestrictedTransferMatrix(rows), n)

    logging.info("reachable_states=%d ending_reachable=%d", len(successors), len(to_end))

    return {
        state: StateDepth(
            min_steps_from_start=from_start[state],
            min_steps_to_end=to_end.get(state),
            completion_count_at_center=completions[state],
            ways_at_center=central.entries.get(state, 0),
        )
        for state in sorted(successors)
    }
