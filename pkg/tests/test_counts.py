from collections import Counter
from fractions import Fraction

import pytest

from pygridcycles.CycleSearch.oracle import brute_cycles
from pygridcycles.errors import InvalidStateError, MemoryBudgetExceeded
from pygridcycles.grid import GridSpec
from pygridcycles.TransferMatrix.TransferMatrix import Mode
from pygridcycles.TransferMatrix.UnrestrictedTransferMatrix import UnrestrictedTransferMatrix
from pygridcycles.TransferMatrix.counts import (
    count_A, count_B_central, count_B_edge, count_C, count_D, count_D_rotational, count_from_start,
    count_rect, per_start_counts, ratio_series, reach_depths, reachable_states, starting_frontier, state_census,
    success_ratios)
from pygridcycles.TransferMatrix.states import (
    all_states, is_ending, is_symmetric, mirror, occupied_rows, single_loop_state, starting_states, unit_length_state)

A = {1: 1, 2: 6, 3: 1072, 4: 4638576, 5: 467260456608, 6: 1076226888605605706}
B = {1: 1, 2: 4, 3: 44, 4: 2828, 5: 564468, 6: 754425400, 7: 3079904455096}
C = {1: 1, 2: 2, 3: 28, 4: 1504, 5: 520176, 6: 696179102}
D = {1: 1, 2: 2, 3: 6, 4: 40, 5: 488, 6: 13782, 7: 757626, 8: 95835196}


@pytest.mark.parametrize('n', range(1, 6))
def test_count_A(n):
    assert count_A(n) == A[n]


@pytest.mark.slow
def test_count_A_for_12x12():
    assert count_A(6) == A[6]


@pytest.mark.parametrize('n', range(1, 6))
def test_count_B_by_both_routes(n):
    assert count_B_edge(n) == B[n]
    assert count_B_central(n) == B[n]


@pytest.mark.slow
@pytest.mark.parametrize('n', [6, 7])
def test_count_B_by_both_routes_on_larger_squares(n):
    assert count_B_edge(n) == B[n]
    assert count_B_central(n) == B[n]


@pytest.mark.parametrize('n', range(1, 6))
def test_count_C(n):
    assert count_C(n) == C[n]


@pytest.mark.slow
def test_count_C_for_12x12():
    assert count_C(6) == C[6]


@pytest.mark.parametrize('n', range(1, 7))
def test_count_D(n):
    assert count_D(n) == D[n]
    assert count_D_rotational(n) == D[n]


@pytest.mark.slow
@pytest.mark.parametrize('n', [7, 8])
def test_count_D_on_larger_squares(n):
    assert count_D(n) == D[n]


def test_bad_half_size():
    with pytest.raises(ValueError):
        count_A(0)
    with pytest.raises(ValueError):
        count_C(2.0)


def test_starting_frontier():
    assert len(starting_frontier(3)) == 5
    assert len(starting_frontier(3, Mode.REFLECTIVE)) == 3


def test_rectangles_of_height_two():
    for width in range(2, 9):
        assert count_rect(width, 2) == 1
    assert count_rect(1, 2) == 0
    assert count_rect(4, 4) == 6


@pytest.mark.parametrize('width, height', [(4, 6), (6, 4), (4, 8), (8, 4), (6, 8), (8, 6)])
def test_rectangle_transpose(width, height):
    assert count_rect(width, height) == count_rect(height, width)


@pytest.mark.parametrize('width, height', [(3, 4), (5, 4), (6, 4), (3, 6), (5, 6), (7, 4)])
def test_rectangles_against_brute_force(width, height):
    assert count_rect(width, height) == len(brute_cycles(GridSpec(height, width)))


def test_rectangle_height_must_be_even():
    with pytest.raises(ValueError):
        count_rect(4, 3)
    with pytest.raises(ValueError):
        count_rect(0, 4)


def test_per_start_counts_for_6x6():
    counts = per_start_counts(3)
    assert Counter(counts.values()) == Counter([397, 203, 203, 145, 124])
    assert counts[single_loop_state(6)] == 397
    assert counts[unit_length_state(6)] == 145
    assert counts["(..)()"] == counts["()(..)"]
    assert counts["(.)(.)"] == 124
    assert sum(counts.values()) == A[3]


def test_per_start_counts_for_8x8():
    counts = per_start_counts(4)
    assert len(counts) == 13
    assert sum(counts.values()) == A[4]
    assert max(counts.values()) == counts[single_loop_state(8)] == 909009
    for state, count in counts.items():
        assert counts[mirror(state)] == count
    assert sorted(set(counts.values()), reverse=True) == [
        909009, 510478, 483465, 337470, 322007, 268967, 253695, 149394, 111755]


def test_count_from_start_needs_a_starting_state():
    with pytest.raises(InvalidStateError):
        count_from_start(3, "(())()")


def test_success_ratios():
    assert success_ratios(3) == (Fraction(397, 145), Fraction(145, 124))
    single_over_unit, _ = success_ratios(2)
    assert single_over_unit >= 1
    with pytest.raises(ValueError):
        success_ratios(1)


def test_ratio_series():
    frame = ratio_series(4)
    assert list(frame['n']) == [2, 3, 4]
    row = frame[frame['n'] == 3].iloc[0]
    assert row['max_over_unit'] == Fraction(397, 145)
    assert row['unit_over_min_float'] == pytest.approx(145 / 124)


@pytest.mark.slow
def test_single_loop_advantage_grows():
    frame = ratio_series(5)
    assert list(frame['max_over_unit']) == [
        Fraction(2), Fraction(397, 145), Fraction(303003, 84565), Fraction(47001928863, 10204728761)]
    assert frame['max_over_unit_float'].is_monotonic_increasing


@pytest.mark.parametrize('n, mode, expected', [
    (1, Mode.UNRESTRICTED, (1, 1)),
    (1, Mode.REFLECTIVE, (1, 1)),
    (2, Mode.UNRESTRICTED, (6, 14)),
    (2, Mode.REFLECTIVE, (4, 6)),
    (3, Mode.UNRESTRICTED, (32, 162)),
    (3, Mode.REFLECTIVE, (12, 26)),
    (4, Mode.UNRESTRICTED, (182, 1966)),
    (4, Mode.REFLECTIVE, (32, 101)),
    (5, Mode.UNRESTRICTED, (1117, 25567)),
    (5, Mode.REFLECTIVE, (94, 422)),
    (6, Mode.REFLECTIVE, (244, 1560)),
    (7, Mode.REFLECTIVE, (734, 6701)),
])
def test_state_census(n, mode, expected):
    assert state_census(n, mode) == expected


@pytest.mark.parametrize('n', range(1, 6))
def test_reflective_states_are_symmetric_unrestricted_states(n):
    reflective = reachable_states(n, Mode.REFLECTIVE)
    unrestricted = reachable_states(n, Mode.UNRESTRICTED)
    assert reflective <= {state for state in unrestricted if is_symmetric(state)}


def test_six_rows_allow_twelve_symmetric_states():
    assert len([state for state in all_states(6) if is_symmetric(state)]) == 12
    assert state_census(3, Mode.REFLECTIVE)[0] <= 12


def test_census_holds_the_seen_states_to_the_memory_limit():
    matrix = UnrestrictedTransferMatrix(8)
    frontier = matrix.starting_frontier()
    largest = len(frontier)
    for _ in range(7):
        frontier = matrix.step(frontier)
        largest = max(largest, len(frontier))
    assert largest < 182

    with pytest.raises(MemoryBudgetExceeded, match='distinct states'):
        state_census(4, memory_limit=largest)
    assert state_census(4, memory_limit=182) == (182, 1966)


@pytest.mark.slow
def test_state_census_for_12x12():
    assert state_census(6, Mode.UNRESTRICTED) == (7280, 351880)


def test_reach_depths_for_6x6():
    depths = reach_depths(3)
    for state in starting_states(6):
        assert depths[state].min_steps_from_start == 0
    for state, depth in depths.items():
        if is_ending(state):
            assert depth.min_steps_to_end == 0

    # A state formed in exactly one way at the centre that cannot be completed.
    assert any(depth.ways_at_center == 1 and depth.completion_count_at_center == 0
               for depth in depths.values())

    central_total = sum(depth.ways_at_center * depth.completion_count_at_center for depth in depths.values())
    assert central_total == A[3]


@pytest.mark.slow
def test_pattern_that_only_occurs_at_the_centre_of_12x12():
    depths = reach_depths(6)
    by_pattern = {}
    for state, depth in depths.items():
        by_pattern.setdefault(occupied_rows(state), []).append(depth)
    assert any(
        all(depth.min_steps_from_start >= 5 for depth in group) and any(depth.ways_at_center for depth in group)
        for group in by_pattern.values())
