"""Shared sampling helpers for the test suite."""

from fractions import Fraction

from cubicmoduli.cyclo import cyclo, root_of_unity
from cubicmoduli.linalg import Matrix


def random_cyclo(rng, conductors=(1, 3, 4, 5, 8, 9, 12)):
    n = rng.choice(conductors)
    value = cyclo(0)
    for _ in range(rng.randrange(1, 4)):
        coeff = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
        value = value + cyclo(coeff) * root_of_unity(n, rng.randrange(n))
    return value


def random_matrix(rng, rows, cols, conductors=(1, 3, 4)):
    return Matrix([
        [random_cyclo(rng, conductors) for _ in range(cols)]
        for _ in range(rows)
    ])
