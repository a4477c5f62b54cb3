"""
    This module puts the counts together.

    Each symmetry count of the 2n x 2n square comes from its own route:
    A from an unrestricted run, B from a reflective run (or from the single
    pair states at the centre), C and D from the central frontiers, E from
    the quotient grid search. F is known outright. Class counts follow by
    inverting the inclusion matrix.

"""

import logging

from pygridcycles.CycleSearch.oracle import brute_cycles
from pygridcycles.CycleSearch.quotient import count_E
from pygridcycles.errors import CrossCheckError
from pygridcycles.grid import GridSpec, SymmetryCounts
from pygridcycles.symmetry import reduce
from pygridcycles.TransferMatrix.counts import (
    count_A, count_B_central, count_B_edge, count_C, count_D, count_D_rotational)

SYMMETRIES = SymmetryCounts._fields

# Largest n the brute-force oracle takes part in a check for.
ORACLE_MAX_N = 3


def count_F(n):
    """Only the 2x2 ring has every symmetry of the square."""
    return 1 if n == 1 else 0


def cross_check_B(n, **options):
    """Returns B after checking that both routes agree."""
    edge = count_B_edge(n, **options)
    central = count_B_central(n, **options)
    if edge != central:
        msg = f"B({n}) is {edge} from reflective states but {central} from single-pair states."
        logging.error(msg)
        raise CrossCheckError(msg)
    return edge


def cross_check_D(n, **options):
    single = count_D(n, **options)
    rotational = count_D_rotational(n, **options)
    if single != rotational:
        msg = f"D({n}) is {single} from single-pair states but {rotational} from rotation-closable states."
        logging.error(msg)
        raise CrossCheckError(msg)
    return single


def cross_check_oracle(n, A):
    """Compares A with the brute-force list of cycles, for small n."""
    if n > ORACLE_MAX_N:
        return
    listed = len(brute_cycles(GridSpec.square(n)))
    if listed != A:
        msg = f"A({n}) is {A} but brute force lists {listed} cycles."
        logging.error(msg)
        raise CrossCheckError(msg)


def symmetry_count(n, symbol, check=False, verify_parity=False, **options):
    """One of the counts A..F of the 2n x 2n square."""
    if symbol == 'A':
        value = count_A(n, **options)
        if check:
            cross_check_oracle(n, value)
    elif symbol == 'B':
        value = cross_check_B(n, **options) if check else count_B_edge(n, **options)
    elif symbol == 'C':
        value = count_C(n, **options)
    elif symbol == 'D':
        value = cross_check_D(n, **options) if check else count_D(n, **options)
    elif symbol == 'E':
        value = count_E(n, verify_parity=verify_parity)
    elif symbol == 'F':
        value = count_F(n)
    else:
        msg = f"Unknown symmetry count {symbol!r}; expected one of {', '.join(SYMMETRIES)}."
        logging.error(msg)
        raise ValueError(msg)

    logging.info("count=%s n=%d value=%d", symbol, n, value)
    return value


def symmetry_counts(n, symbols=SYMMETRIES, **options):
    """Returns a dict from each requested symbol to its count."""
    return {symbol: symmetry_count(n, symbol, **options) for symbol in symbols}


def all_symmetry_counts(n, **options):
    return SymmetryCounts(**symmetry_counts(n, SYMMETRIES, **options))


def class_counts(n, **options):
    """Returns (SymmetryCounts, ClassCounts) for the 2n x 2n square."""
    counts = all_symmetry_counts(n, **options)
    return counts, reduce(counts)
