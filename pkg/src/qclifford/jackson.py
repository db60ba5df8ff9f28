"""One-dimensional Jackson calculus: q-derivative, q-integral and the two
q-exponentials, on univariate polynomials over Q(q).

The q-integral is exposed in closed form (term-wise geometric summation of
the defining series, a rational-function identity valid for formal q); the
series itself is kept as a numeric oracle, which is where the 0 < q < 1
convergence condition genuinely applies.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidArgument, InvalidParameter
from .qfield import ONE, Q, ZERO, QPoly, QScalar, q_bracket, q_factorial


class UniPoly:
    """Sparse polynomial in t with QScalar coefficients.

    >>> str(UniPoly({2: ONE, 0: ONE}))
    '1 + t^2'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                if not isinstance(c, QScalar):
                    c = QScalar(QPoly((c,)))
                if k < 0:
                    raise InvalidArgument("negative degree %d" % k)
                if not c.is_zero():
                    clean[k] = c
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: ONE})

    @classmethod
    def t(cls):
        return cls({1: ONE})

    @classmethod
    def monomial(cls, k, c=ONE):
        return cls({k: c})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs, default=-1)

    def coefficient(self, k):
        return self.coeffs.get(k, ZERO)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                k = ka + kb
                prod = ca * cb
                out[k] = out.get(k, ZERO) + prod
        return UniPoly(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (QScalar, int, Fraction)):
            return UniPoly({0: other})
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def dilate(self, power=1):
        """Substitute t -> q^power t (power may be negative)."""
        return UniPoly({k: c * Q ** (power * k) for k, c in self.coeffs.items()})

    def subst_neg(self):
        """Substitute t -> -t."""
        return UniPoly({k: -c if k & 1 else c for k, c in self.coeffs.items()})

    def evaluate(self, t0, q0):
        t0 = Fraction(t0)
        acc = Fraction(0)
        for k, c in self.coeffs.items():
            acc += c.evaluate(q0) * t0**k
        return acc

    def __str__(self):
        from .render import render_unipoly

        return render_unipoly(self)

    __repr__ = __str__


def jackson_derivative(f):
    """t^k -> [k]_q t^(k-1), extended linearly."""
    return UniPoly({k - 1: c * q_bracket(k) for k, c in f.coeffs.items() if k})


def q_integral(f, a, b):
    """Closed form of the q-integral of f over [a, b]:
    sum_k c_k (b^(k+1) - a^(k+1)) / [k+1]_q."""
    a = Fraction(a)
    b = Fraction(b)
    acc = ZERO
    for k, c in f.coeffs.items():
        weight = b ** (k + 1) - a ** (k + 1)
        if weight:
            acc = acc + c * QScalar(QPoly((weight,))) / q_bracket(k + 1)
    return acc


def q_integral_series_oracle(f, a, q0, terms):
    """Partial sum of the defining series (1-q) a sum_k f(a q^k) q^k at a
    numeric 0 < q0 < 1; used to validate the closed form."""
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise InvalidParameter("series form requires 0 < q0 < 1")
    a = Fraction(a)
    acc = Fraction(0)
    qk = Fraction(1)
    for _ in range(terms):
        acc += f.evaluate(a * qk, q0) * qk
        qk *= q0
    return (1 - q0) * a * acc


def q_exp(variant, order):
    """Truncation of a q-exponential to the given order.

    Variant "E" has coefficients 1/[j]_q!; variant "e" substitutes
    q -> 1/q in each coefficient (the two are inverse to each other up to
    the sign flip t -> -t).
    """
    if order < 0:
        raise InvalidArgument("truncation order must be nonnegative")
    if variant == "E":
        return UniPoly({j: ONE / q_factorial(j) for j in range(order + 1)})
    if variant == "e":
        return UniPoly(
            {j: ONE / q_factorial(j).subst_qinv() for j in range(order + 1)}
        )
    raise InvalidArgument("variant must be 'E' or 'e'")
