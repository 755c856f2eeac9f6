"""Exact binomial coefficients with the vanishing convention.

Every count and inequality in this package is evaluated in exact integer
(or rational) arithmetic.  The convention is the one the closed-form size
formulas rely on: C(a, b) = 0 whenever b < 0 or b > a.  A negative top
argument is rejected outright, because inside a verified sweep it always
signals a range bug rather than a legitimate vanishing term.
"""

from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or b > a; a < 0 is an error."""
    if a < 0:
        raise ValueError(f"binom: negative top argument {a} (range bug?)")
    if b < 0 or b > a:
        return 0
    return comb(a, b)
