"""Normal-form arithmetic in the first Weyl algebra over Q.

Elements are finite sums ``sum a_ij x^i y^j`` in the ordered basis with every
``x`` to the left of every ``y``.  The defining relation is ``yx - xy = 1``.
"""

from functools import lru_cache
from math import comb, factorial

from ._sparse import Bivariate


@lru_cache(maxsize=4096)
def swap_coefficients(m, n):
    """Expansion of ``y^m x^n`` as ``[(k, k! C(m,k) C(n,k)), ...]``.

    The term ``k`` contributes ``x^(n-k) y^(m-k)``.
    """
    return tuple((k, factorial(k) * comb(m, k) * comb(n, k)) for k in range(min(m, n) + 1))


class WeylElement(Bivariate):
    """Element of A_1(Q) in normal form.

    >>> x, y = WeylElement.generators()
    >>> y * x
    WeylElement('x*y + 1')
    """

    __slots__ = ()
    gens = ("x", "y")

    def _mul_monomials(self, left, right):
        a, b = left
        c, d = right
        for k, coeff in swap_coefficients(b, c):
            yield (a + c - k, b + d - k), coeff


X, Y = WeylElement.generators()


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def commutator(q, p):
    """``[q, p] = q*p - p*q``."""
    return q * p - p * q


def power(a, n):
    return a ** n
