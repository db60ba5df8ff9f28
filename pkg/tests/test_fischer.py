"""Fischer inner product, adjointness, and the constructive decomposition."""

import random

import pytest

from qclifford.clifford import Multivector
from qclifford.cpoly import CliffordPoly, vector_variable
from qclifford.errors import NotHomogeneous
from qclifford.fischer import (
    FischerSplit,
    fischer_adjoint_check,
    fischer_full,
    fischer_inner,
    fischer_inner_operator,
    fischer_step,
    monogenic_dimension,
    monomial_multi_indices,
    space_basis,
    space_dimension,
)
from qclifford.qfield import ONE, Q, ZERO, QScalar, q_factorial
from qclifford.qops import is_monogenic, q_dirac, q_partial
from qclifford.randpoly import random_homogeneous_poly


def x(i, m):
    return CliffordPoly.variable(i, m)


def e(i, m):
    return CliffordPoly.generator(i, m)


def dense_solve_split(P):
    """Independent oracle: plain Gaussian elimination over QScalar for the
    system q_dirac(P - x Q) = 0, no fraction-free tricks."""
    m = P.m
    k = P.homogeneous_degree()
    basis = space_basis(m, k - 1)
    index = {be: i for i, be in enumerate(basis)}
    n = len(basis)
    xv = vector_variable(m)
    rows = [[ZERO] * (n + 1) for _ in range(n)]
    for j, (alpha, mask) in enumerate(basis):
        image = q_dirac(xv * CliffordPoly.monomial(m, alpha, Multivector.blade(mask, m)))
        for beta, mv in image.terms.items():
            for bmask, c in mv.terms.items():
                rows[index[(beta, bmask)]][j] = c
    for beta, mv in q_dirac(P).terms.items():
        for bmask, c in mv.terms.items():
            rows[index[(beta, bmask)]][n] = c
    for col in range(n):
        piv = next(r for r in range(col, n) if not rows[r][col].is_zero())
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = ONE / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    terms = {}
    for (alpha, mask), row in zip(basis, rows):
        if row[n].is_zero():
            continue
        cur = terms.get(alpha, Multivector.zero(m))
        terms[alpha] = cur + Multivector(m, {mask: row[n]})
    Qp = CliffordPoly(m, terms)
    return FischerSplit(P - xv * Qp, Qp)


class TestInnerProduct:
    def test_x1_squared(self):
        assert fischer_inner(x(1, 1) ** 2, x(1, 1) ** 2, 2) == q_factorial(2)

    def test_disjoint_supports(self):
        assert fischer_inner(x(1, 2) * x(2, 2), x(1, 2) ** 2, 2) == ZERO

    def test_blade_coefficient(self):
        P = e(1, 2) * x(1, 2)
        assert fischer_inner(P, P, 1) == ONE

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneous):
            fischer_inner(x(1, 2) + ONE * CliffordPoly.one(2), x(1, 2), 1)
        with pytest.raises(NotHomogeneous):
            fischer_inner(x(1, 2), x(1, 2), 2)

    def test_operator_form_equivalence_random(self):
        rng = random.Random(41)
        for _ in range(30):
            m = rng.randint(1, 3)
            k = rng.randint(0, 4)
            R1 = random_homogeneous_poly(rng, m, k)
            R2 = random_homogeneous_poly(rng, m, k)
            assert fischer_inner(R1, R2, k) == fischer_inner_operator(R1, R2)

    def test_positive_definite_at_numeric_q(self):
        rng = random.Random(43)
        for _ in range(20):
            m = rng.randint(1, 3)
            k = rng.randint(0, 3)
            R = random_homogeneous_poly(rng, m, k)
            if R.is_zero():
                continue
            val = fischer_inner(R, R, k)
            for q0 in (1, 2):
                assert val.evaluate(q0) > 0
            from fractions import Fraction

            assert val.evaluate(Fraction(1, 2)) > 0

    def test_derivative_kernel_orthogonality(self):
        # (d^q)^alpha x^beta = [alpha]_q! when alpha == beta else 0
        from qclifford.fischer import multi_factorial

        for m in (1, 2, 3):
            idxs = [a for k in range(5) for a in monomial_multi_indices(m, k)]
            for alpha in idxs:
                mono_b = {}
                for beta in idxs:
                    g = CliffordPoly.monomial(m, beta, Multivector.scalar(1, m))
                    for i, a in enumerate(alpha):
                        for _ in range(a):
                            g = q_partial(g, i)
                    if alpha == beta:
                        assert g == CliffordPoly.scalar(multi_factorial(alpha), m)
                    elif sum(beta) <= sum(alpha):
                        assert g.is_zero() or sum(beta) > sum(alpha)


class TestAdjointness:
    def test_unit_and_vector(self):
        lhs, rhs = fischer_adjoint_check(CliffordPoly.one(2), x(1, 2) * e(1, 2))
        assert lhs == ONE and rhs == ONE

    def test_disjoint_supports(self):
        lhs, rhs = fischer_adjoint_check(x(1, 3), x(2, 3) ** 2)
        assert lhs == ZERO and rhs == ZERO

    def test_random_pairs(self):
        rng = random.Random(47)
        for _ in range(40):
            m = rng.randint(1, 3)
            k = rng.randint(0, 3)
            Qp = random_homogeneous_poly(rng, m, k)
            P = random_homogeneous_poly(rng, m, k + 1)
            lhs, rhs = fischer_adjoint_check(Qp, P)
            assert lhs == rhs

    def test_degree_mismatch(self):
        with pytest.raises(NotHomogeneous):
            fischer_adjoint_check(x(1, 2), x(1, 2))


class TestFischerStep:
    def test_monogenic_input(self):
        P = x(1, 2) * e(1, 2) - x(2, 2) * e(2, 2)
        s = fischer_step(P)
        assert s.monogenic == P
        assert s.cofactor.is_zero()

    def test_pure_x_multiple(self):
        rng = random.Random(53)
        for _ in range(10):
            m = rng.randint(1, 3)
            k = rng.randint(1, 3)
            R = random_homogeneous_poly(rng, m, k - 1)
            P = vector_variable(m) * R
            s = fischer_step(P)
            assert s.monogenic.is_zero()
            assert s.cofactor == R

    def test_degree_zero(self):
        P = CliffordPoly.scalar(5, 2)
        s = fischer_step(P)
        assert s.monogenic == P and s.cofactor.is_zero()

    def test_x1_squared_fixture(self):
        # regression fixture, derived by hand and double-checked by the
        # dense QScalar solver below
        P = x(1, 2) ** 2
        s = fischer_step(P)
        den = QScalar(3) + Q
        M = (x(1, 2) ** 2 - x(2, 2) ** 2 - (1 + Q) * x(1, 2) * x(2, 2) * e(1, 2) * e(2, 2)) * (
            ONE / den
        )
        Qexp = -((2 + Q) * x(1, 2) * e(1, 2) + x(2, 2) * e(2, 2)) * (ONE / den)
        assert s.monogenic == M
        assert s.cofactor == Qexp
        assert (
            str(s.monogenic)
            == "(1/(3 + q))*x1^2 + ((-1 - q)/(3 + q))*x1*x2*e1*e2 + (-1/(3 + q))*x2^2"
        )

    def test_against_dense_solver_oracle(self):
        rng = random.Random(59)
        for _ in range(8):
            m = rng.randint(1, 2)
            k = rng.randint(1, 3)
            P = random_homogeneous_poly(rng, m, k)
            if P.is_zero():
                continue
            s = fischer_step(P)
            o = dense_solve_split(P)
            assert s.monogenic == o.monogenic
            assert s.cofactor == o.cofactor

    def test_soundness_random(self):
        rng = random.Random(61)
        xvs = {m: vector_variable(m) for m in (1, 2, 3)}
        for _ in range(15):
            m = rng.randint(1, 3)
            k = rng.randint(1, 3)
            P = random_homogeneous_poly(rng, m, k)
            s = fischer_step(P)
            assert s.monogenic + xvs[m] * s.cofactor == P
            assert is_monogenic(s.monogenic)
            assert fischer_inner(s.monogenic, xvs[m] * s.cofactor, k) == ZERO

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneous):
            fischer_step(x(1, 2) + x(1, 2) ** 2)


class TestFischerFull:
    def test_degree_zero_tower(self):
        P = CliffordPoly.scalar(3, 2)
        tower = fischer_full(P)
        assert tower.components == (P,)

    def test_x_times_monogenic(self):
        M = x(1, 2) * e(1, 2) - x(2, 2) * e(2, 2)
        P = vector_variable(2) * M
        tower = fischer_full(P)
        assert tower.components[0].is_zero()
        assert tower.components[1] == M
        assert tower.recompose() == P

    def test_cube_tower(self):
        P = x(1, 2) ** 3
        tower = fischer_full(P)
        assert len(tower.components) == 4
        assert tower.recompose() == P
        for comp in tower.components:
            assert is_monogenic(comp)

    def test_random_towers(self):
        rng = random.Random(67)
        for _ in range(10):
            m = rng.randint(1, 3)
            k = rng.randint(0, 3)
            P = random_homogeneous_poly(rng, m, k)
            tower = fischer_full(P)
            assert tower.recompose() == P
            for comp in tower.components:
                assert is_monogenic(comp)


class TestDimensions:
    def test_monogenic_dimension_formula(self):
        for m in (1, 2):
            for k in range(1, 4):
                assert monogenic_dimension(m, k) == space_dimension(m, k) - space_dimension(
                    m, k - 1
                )

    def test_degree_zero(self):
        assert monogenic_dimension(3, 0) == 8

    def test_space_dimension(self):
        assert space_dimension(3, 2) == 6 * 8
        assert len(space_basis(3, 2)) == 48
