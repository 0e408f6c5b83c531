"""Sparse bivariate storage shared by Weyl and commutative polynomials.

An element is a dict ``{(i, j): Fraction}`` with no zero values.  Subclasses
supply the generator names and the product of two basis monomials; everything
linear lives here.
"""

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

Scalar = Fraction


def to_scalar(value):
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_scalar(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def canonical_key(exp):
    i, j = exp
    return (-(i + j), -i)


class Bivariate:
    """Immutable sparse element of a rank-two monomial basis over Q."""

    __slots__ = ("_terms", "_hash")
    gens = ("?", "?")

    def __init__(self, terms=None):
        clean = {}
        if terms is None:
            pass
        elif isinstance(terms, dict) or isinstance(terms, MappingProxyType):
            for (i, j), c in terms.items():
                i, j = int(i), int(j)
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in {(i, j)}")
                c = to_scalar(c)
                if c:
                    clean[(i, j)] = clean.get((i, j), 0) + c
            clean = {k: v for k, v in clean.items() if v}
        else:
            c = to_scalar(terms)
            if c:
                clean[(0, 0)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls._from_clean({})

    @classmethod
    def one(cls):
        return cls._from_clean({(0, 0): Fraction(1)})

    @classmethod
    def constant(cls, c):
        return cls(c)

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    @classmethod
    def generators(cls):
        return cls.monomial(1, 0), cls.monomial(0, 1)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order: descending total degree, then descending i."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def coefficient(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(k == (0, 0) for k in self._terms)

    def total_degree(self):
        if not self._terms:
            raise ValueError("zero element has no degree")
        return max(i + j for i, j in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- linear structure -------------------------------------------------

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, Bivariate):
            return NotImplemented
        try:
            return type(self)(to_scalar(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -v for k, v in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c):
        c = to_scalar(c)
        if not c:
            return self.zero()
        return self._from_clean({k: v * c for k, v in self._terms.items()})

    def __truediv__(self, c):
        try:
            c = to_scalar(c)
        except TypeError:
            return NotImplemented
        return self.scale(1 / c)

    # -- multiplication ---------------------------------------------------

    def _mul_monomials(self, left, right):
        """Yield ``((i, j), coeff)`` for the product of two basis monomials."""
        raise NotImplementedError

    def _mul(self, other):
        out = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                ab = va * vb
                for k, c in self._mul_monomials(ka, kb):
                    out[k] = out.get(k, 0) + ab * c
        return self._from_clean({k: v for k, v in out.items() if v})

    def __mul__(self, other):
        if type(other) is type(self):
            return self._mul(other)
        if isinstance(other, Bivariate):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        # only scalars reach here; they are central
        if isinstance(other, Bivariate):
            return NotImplemented
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _monomial_str(self, i, j):
        gx, gy = self.gens
        parts = []
        for g, e in ((gx, i), (gy, j)):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append(f"{g}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for n, ((i, j), c) in enumerate(self.items()):
            mono = self._monomial_str(i, j)
            mag = abs(c)
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            if n == 0:
                if c < 0:
                    # "-x^2" would parse as (-x)^2, which the grammar rejects
                    if mono and mag == 1 and "^" in mono.split("*")[0]:
                        body = "1*" + body
                    body = "-" + body
                out.append(body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class PowerCache:
    """Lazily computed powers of one element."""

    def __init__(self, base):
        self._powers = [base.one()]
        self._base = base

    def __getitem__(self, n):
        while len(self._powers) <= n:
            self._powers.append(self._powers[-1] * self._base)
        return self._powers[n]


def _plain_substitute(fx, fy, w):
    xp = PowerCache(fx)
    yp = PowerCache(fy)
    out = fx.zero()
    for (i, j), c in w.terms.items():
        out = out + (xp[i] * yp[j]).scale(c)
    return out


def _substitution_cost(fx, fy, w):
    dx = fx.total_degree() if fx else 0
    dy = fy.total_degree() if fy else 0
    return sum((dx * i + dy * j + 1) ** 4 for i, j in w.terms)


def substitute(fx, fy, w):
    """Image of ``w`` under the algebra map ``x -> fx, y -> fy``.

    Evaluates ``(f . tau)(tau^-1(w))`` for whichever shear ``tau`` (or the
    identity) is cheapest.  An element that is a polynomial in ``x - y``
    expands densely in the monomial basis, and substituting it directly
    builds huge intermediates that cancel only at the end.
    """
    cls = type(w)
    if not w or w.total_degree() < 3 or max(h.total_degree() if h else 0 for h in (fx, fy)) < 2:
        return _plain_substitute(fx, fy, w)
    x, y = cls.generators()
    shears = [
        ((x - y, y), (x + y, y)),
        ((x + y, y), (x - y, y)),
        ((x, y - x), (x, y + x)),
        ((x, y + x), (x, y - x)),
    ]
    best = (_substitution_cost(fx, fy, w), fx, fy, w)
    for (tx, ty), (ux, uy) in shears:
        w2 = _plain_substitute(ux, uy, w)
        gx = _plain_substitute(fx, fy, tx)
        gy = _plain_substitute(fx, fy, ty)
        cost = _substitution_cost(gx, gy, w2)
        if cost < best[0]:
            best = (cost, gx, gy, w2)
    return _plain_substitute(*best[1:])
