"""Commutative bivariate polynomials over Q, written in ``X`` and ``Y``."""

from fractions import Fraction

from ._sparse import Bivariate, substitute


class PolyElement(Bivariate):
    __slots__ = ()
    gens = ("X", "Y")

    def _mul_monomials(self, left, right):
        yield (left[0] + right[0], left[1] + right[1]), 1

    def diff_x(self):
        return self._from_clean(
            {(i - 1, j): c * i for (i, j), c in self._terms.items() if i}
        )

    def diff_y(self):
        return self._from_clean(
            {(i, j - 1): c * j for (i, j), c in self._terms.items() if j}
        )

    def substitute(self, fx, fy):
        """Evaluate at ``X = fx, Y = fy`` (both PolyElements)."""
        return substitute(fx, fy, self)

    def univariate_coefficients(self, var=0):
        """Dense coefficient list when only one variable occurs (``var`` 0 is X)."""
        other = 1 - var
        if any(k[other] for k in self._terms):
            raise ValueError(f"{self} is not univariate in {self.gens[var]}")
        if not self._terms:
            return []
        top = max(k[var] for k in self._terms)
        coeffs = [Fraction(0)] * (top + 1)
        for k, c in self._terms.items():
            coeffs[k[var]] = c
        return coeffs


X, Y = PolyElement.generators()
