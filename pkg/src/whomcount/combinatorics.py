"""Exact binomial and trinomial coefficients.

Both functions return 0 outside their natural domain (negative lower
index, lower index above the top, negative top), so closed-form sums can
be written term by term without guarding each index.
"""

from math import comb

__all__ = ["binomial", "multinomial3", "ceil_div", "floor_div"]


def binomial(n: int, k: int) -> int:
    """C(n, k), or 0 when k < 0, k > n or n < 0.

    >>> binomial(3, 1)
    3
    >>> binomial(5, -1)
    0
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial3(a: int, b: int, c: int) -> int:
    """(a+b+c)! / (a! b! c!), or 0 if any argument is negative.

    >>> multinomial3(1, 1, 1)
    6
    >>> multinomial3(0, -1, 4)
    0
    """
    if a < 0 or b < 0 or c < 0:
        return 0
    return comb(a + b + c, a) * comb(b + c, b)


def floor_div(a: int, b: int) -> int:
    # Python's // already floors toward -inf for negative numerators.
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)
