"""Clifford-valued polynomials in commuting variables x_1..x_m, optionally
extended by x_0.

A multi-index is a plain tuple of m+1 nonnegative integers whose slot 0 is
the x_0 exponent (0 unless the extension is in play).  A CliffordPoly is a
sparse map multi-index -> Multivector; the variables are central, so all
noncommutativity lives in the coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .clifford import Multivector
from .errors import AlgebraMismatch, InvalidArgument, InvalidVariable
from .qfield import ONE, Q, QPoly, QScalar


def _zero_alpha(m):
    return (0,) * (m + 1)


def term_sort_key(alpha):
    """Graded order: total degree ascending, then lexicographic with
    x_1 > x_2 > ... > x_m > x_0."""
    return (sum(alpha), tuple(-a for a in alpha[1:]) + (-alpha[0],))


class CliffordPoly:
    """Sparse Clifford-valued polynomial in canonical form (no zero terms).

    >>> x1 = CliffordPoly.variable(1, 2)
    >>> e1 = CliffordPoly.generator(1, 2)
    >>> str((x1 * e1) * (x1 * e1))
    '-x1^2'
    """

    __slots__ = ("m", "uses_x0", "uses_e0", "terms")

    def __init__(self, m, terms=None, uses_x0=False, uses_e0=False):
        if m < 1:
            raise InvalidArgument("dimension m must be positive")
        self.m = m
        clean = {}
        if terms:
            for alpha, mv in terms.items():
                if not isinstance(mv, Multivector):
                    mv = Multivector.scalar(mv, m)
                if mv.m != m:
                    raise AlgebraMismatch("coefficient over wrong algebra")
                if mv.is_zero():
                    continue
                if len(alpha) != m + 1 or any(a < 0 for a in alpha):
                    raise InvalidArgument("bad multi-index %r" % (alpha,))
                if alpha[0]:
                    uses_x0 = True
                if mv.uses_e0:
                    uses_e0 = True
                clean[alpha] = mv
        self.uses_x0 = uses_x0
        self.uses_e0 = uses_e0
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def scalar(cls, value, m):
        return cls(m, {_zero_alpha(m): Multivector.scalar(value, m)})

    @classmethod
    def one(cls, m):
        return cls.scalar(ONE, m)

    @classmethod
    def variable(cls, i, m):
        """The coordinate x_i (x_0 for i = 0)."""
        if i < 0 or i > m:
            raise InvalidVariable("variable index %d out of range" % i)
        alpha = tuple(1 if j == i else 0 for j in range(m + 1))
        return cls(m, {alpha: Multivector.scalar(ONE, m)}, uses_x0=(i == 0))

    @classmethod
    def generator(cls, i, m):
        """The constant polynomial e_i."""
        return cls.from_multivector(Multivector.basis(i, m))

    @classmethod
    def from_multivector(cls, mv):
        return cls(mv.m, {_zero_alpha(mv.m): mv}, uses_e0=mv.uses_e0)

    @classmethod
    def monomial(cls, m, alpha, coeff):
        return cls(m, {tuple(alpha): coeff})

    # -- structure -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), Multivector.zero(self.m))

    def support(self):
        return sorted(self.terms, key=term_sort_key)

    def total_degree(self):
        """Largest |alpha| present; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if mixed; None for 0."""
        degrees = {sum(a) for a in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self, k):
        return all(sum(a) == k for a in self.terms)

    def has_x0(self):
        return any(a[0] for a in self.terms)

    def has_e0(self):
        return any(mask & 1 for mv in self.terms.values() for mask in mv.terms)

    def constant_coefficient(self):
        return self.coefficient(_zero_alpha(self.m))

    def _compat(self, other):
        if self.m != other.m:
            raise AlgebraMismatch(
                "polynomials over dimensions %d and %d" % (self.m, other.m)
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        for alpha, mv in other.terms.items():
            cur = out.get(alpha)
            out[alpha] = mv if cur is None else cur + mv
        return CliffordPoly(
            self.m, out, self.uses_x0 or other.uses_x0, self.uses_e0 or other.uses_e0
        )

    __radd__ = __add__

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

    def __neg__(self):
        return CliffordPoly(
            self.m,
            {a: -mv for a, mv in self.terms.items()},
            self.uses_x0,
            self.uses_e0,
        )

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._compat(other)
        out = {}
        for aa, ma in self.terms.items():
            for ab, mb in other.terms.items():
                alpha = tuple(x + y for x, y in zip(aa, ab))
                mv = ma * mb
                cur = out.get(alpha)
                out[alpha] = mv if cur is None else cur + mv
        return CliffordPoly(
            self.m, out, self.uses_x0 or other.uses_x0, self.uses_e0 or other.uses_e0
        )

    def __rmul__(self, other):
        # called for scalar * poly and Multivector * poly; scalars are
        # central but a Multivector must multiply from the left
        if isinstance(other, Multivector):
            return CliffordPoly.from_multivector(other) * self
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        if n < 0:
            raise InvalidArgument("negative power of a polynomial")
        result = CliffordPoly.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, CliffordPoly):
            return other
        if isinstance(other, Multivector):
            return CliffordPoly.from_multivector(other)
        if isinstance(other, (QScalar, int, Fraction)):
            return CliffordPoly.scalar(other, self.m)
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QScalar, Multivector)):
            other = self._coerce(other)
        if not isinstance(other, CliffordPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __str__(self):
        from .render import render_poly

        return render_poly(self)

    __repr__ = __str__


def vector_variable(m):
    """The vector variable: sum of x_i e_i over i = 1..m."""
    acc = CliffordPoly.zero(m)
    for i in range(1, m + 1):
        acc = acc + CliffordPoly.variable(i, m) * CliffordPoly.generator(i, m)
    return acc


def norm_squared(m):
    """|x|^2 = x_1^2 + ... + x_m^2; equals minus the square of the vector
    variable."""
    acc = CliffordPoly.zero(m)
    for i in range(1, m + 1):
        acc = acc + CliffordPoly.variable(i, m) ** 2
    return acc


def homogeneous_part(P, k):
    """The degree-k part of P in the multi-index grading."""
    return CliffordPoly(
        P.m,
        {a: mv for a, mv in P.terms.items() if sum(a) == k},
        P.uses_x0,
        P.uses_e0,
    )


def q_shift(P, i):
    """Substitute x_i -> q x_i: each term picks up q^(alpha_i)."""
    if i < 0 or i > P.m:
        raise InvalidVariable("variable index %d out of range" % i)
    out = {}
    for alpha, mv in P.terms.items():
        e = alpha[i]
        out[alpha] = mv * Q**e if e else mv
    return CliffordPoly(P.m, out, P.uses_x0, P.uses_e0)


def evaluate_poly(P, point, q0):
    """Evaluate at a rational point and a rational q0.

    `point` lists x_1..x_m, or x_0..x_m when P involves x_0.  Returns a
    Multivector with constant coefficients.
    """
    q0 = Fraction(q0)
    if P.has_x0():
        if len(point) != P.m + 1:
            raise InvalidArgument("expected %d coordinates (x0..x%d)" % (P.m + 1, P.m))
        values = [Fraction(v) for v in point]
    else:
        if len(point) != P.m:
            raise InvalidArgument("expected %d coordinates" % P.m)
        values = [Fraction(0)] + [Fraction(v) for v in point]
    acc = Multivector.zero(P.m, P.uses_e0)
    for alpha, mv in P.terms.items():
        factor = Fraction(1)
        for v, e in zip(values, alpha):
            if e:
                factor *= v**e
        if not factor:
            continue
        evaluated = {
            mask: QScalar(QPoly((c.evaluate(q0) * factor,)))
            for mask, c in mv.terms.items()
        }
        acc = acc + Multivector(P.m, evaluated, mv.uses_e0)
    return acc
