"""Shared test helpers.

The determinant oracle here is deliberately independent of the package: a
plain Fraction Laplace expansion over nested lists.
"""

from fractions import Fraction

import pytest


def bruteforce_det(rows):
    """Cofactor-expansion determinant over lists of Fractions."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if not rows[0][j]:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * bruteforce_det(sub)
    return total


def random_fraction_rows(rng, n, bound=9, denominators=(1, 1, 2, 3)):
    return [
        [Fraction(rng.randint(-bound, bound), rng.choice(denominators)) for _ in range(n)]
        for _ in range(n)
    ]


@pytest.fixture
def rng():
    import random

    return random.Random(20260808)
