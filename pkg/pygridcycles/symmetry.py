"""
    This module contains the algebra between symmetry counts and class
    counts.

    Counts A..F count cycles having at least some symmetry; class counts
    u..z count isomorphism classes having exactly some symmetry. A class
    with a stabilizer of order k has 8/k members, and each member is
    counted by every count whose symmetries it has, which gives the
    inclusion matrix below. The matrix is upper triangular with nonzero
    diagonal, so it can be inverted; the inverse has denominator 8.

"""

from fractions import Fraction
import logging

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix

from pygridcycles.errors import InconsistentCountsError, InvariantViolation
from pygridcycles.grid import ClassCounts, SymmetryCounts

# Rows A..F, columns u..z.
INCLUSION = np.array([
    [8, 4, 4, 2, 2, 1],
    [0, 2, 0, 2, 0, 1],
    [0, 0, 4, 2, 2, 1],
    [0, 0, 0, 2, 0, 1],
    [0, 0, 0, 0, 2, 1],
    [0, 0, 0, 0, 0, 1],
], dtype=object)

DENOMINATOR = 8

# Rows u..z, columns A..F, to be divided by DENOMINATOR.
INVERSE_NUMERATORS = np.array([
    [1, -2, -1, 2, 0, 0],
    [0, 4, 0, -4, 0, 0],
    [0, 0, 2, -2, -2, 2],
    [0, 0, 0, 4, 0, -4],
    [0, 0, 0, 0, 4, -4],
    [0, 0, 0, 0, 0, 8],
], dtype=object)


def invert_exactly(matrix):
    """Inverts a square integer matrix over the rationals. Returns a list
    of rows of Fractions."""
    square = sympy.Matrix([[int(value) for value in row] for row in matrix])
    if not square.is_square or square.det() == 0:
        msg = "The matrix is singular."
        logging.error(msg)
        raise ValueError(msg)

    inverse = DomainMatrix.from_Matrix(square).to_field().inv().to_Matrix()
    return [[Fraction(int(value.p), int(value.q)) for value in row] for row in inverse.tolist()]


def _check_inverse():
    derived = invert_exactly(INCLUSION)
    for i, row in enumerate(derived):
        for j, value in enumerate(row):
            if value * DENOMINATOR != INVERSE_NUMERATORS[i][j]:
                msg = f"Inverse inclusion matrix disagrees with the exact inverse at ({i}, {j})."
                logging.error(msg)
                raise InvariantViolation(msg)


_check_inverse()


def compose(classes):
    """Symmetry counts A..F of a population with the given class counts."""
    vector = np.array([int(value) for value in classes], dtype=object)
    return SymmetryCounts(*(int(value) for value in INCLUSION.dot(vector)))


def reduce(counts):
    """Class counts u..z from symmetry counts A..F.

    Raises InconsistentCountsError if a class count comes out fractional or
    negative, which no real population of cycles can produce.

    """

    vector = np.array([int(value) for value in counts], dtype=object)
    numerators = INVERSE_NUMERATORS.dot(vector)

    result = []
    for symbol, numerator in zip(ClassCounts._fields, numerators):
        numerator = int(numerator)
        if numerator % DENOMINATOR != 0:
            msg = f"Class count {symbol} = {numerator}/{DENOMINATOR} is not an integer for counts {tuple(counts)}."
            logging.error(msg)
            raise InconsistentCountsError(msg)
        if numerator < 0:
            msg = f"Class count {symbol} = {numerator // DENOMINATOR} is negative for counts {tuple(counts)}."
            logging.error(msg)
            raise InconsistentCountsError(msg)
        result.append(numerator // DENOMINATOR)

    return ClassCounts(*result)


def total_classes(classes, counts):
    '''
        Nonisomorphic Hamiltonian cycles on the 2n x 2n square.
    '''
    return classes.total


def unrestricted_cycles(classes, counts):
    return counts.A


def classes_of_eight(classes, counts):
    '''
        Classes with no symmetry, i.e. orbits of size 8.
    '''
    return classes.u


def classes_of_four(classes, counts):
    '''
        Classes with a stabilizer of order 2, i.e. orbits of size 4.
    '''
    return classes.v + classes.w


def classes_of_two(classes, counts):
    '''
        Classes with a stabilizer of order 4, i.e. orbits of size 2.
    '''
    return classes.x + classes.y


# OEIS sequences with their identifiers as the keys
OEIS_SEQUENCES = {
    'A003763': unrestricted_cycles,
    'A209077': total_classes,
    'A227301': classes_of_eight,
    'A227257': classes_of_four,
    'A227005': classes_of_two,
}


def oeis_row(n, classes, counts):
    """Values of the OEIS sequences at n, keyed by sequence identifier."""
    if compose(classes) != tuple(counts):
        msg = f"Class counts {tuple(classes)} do not give the symmetry counts {tuple(counts)} for n={n}."
        logging.error(msg)
        raise InconsistentCountsError(msg)

    return {name: function(classes, counts) for name, function in OEIS_SEQUENCES.items()}
