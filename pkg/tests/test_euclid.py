import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import ham_from_matrix, ham_matrix, mat_mul, rand_fraction
from splitfactor.errors import EmptyIntersection, Unsupported
from splitfactor.euclid import (
    DualNumber,
    DualQuaternion,
    DualQuaternionPolynomial,
    Quaternion,
    QuaternionPolynomial,
    SpecialCase,
    dq_conj,
    dq_mul,
    dq_norm,
    motion_factor_step,
    motion_factorize,
    special_zero_family,
    study_check,
)
from splitfactor.realpoly import QuadraticFactor, RealPolynomial

QI, QJ, QK = (Quaternion.unit(u) for u in (1, 2, 3))
EPS = DualQuaternion(0, 1)
T = RealPolynomial.t()
t = DualQuaternionPolynomial.t()
N_PLUS = QuadraticFactor(0, 1)

P4 = DualQuaternionPolynomial.from_parts(
    QuaternionPolynomial([-QK, 1, -QK, 1]),
    QuaternionPolynomial([-QJ, -(QI + QJ), -QI]),
)

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
quats = st.builds(Quaternion, fractions, fractions, fractions, fractions)
duals = st.builds(DualQuaternion, quats, quats)


def rand_quaternion(rng):
    return Quaternion(*(rand_fraction(rng) for _ in range(4)))


def rand_study_linear(rng):
    """t - (p + e d) with Sc(d) = 0 and Sc(p conj(d)) = 0, so the factor is a motion polynomial."""
    p = rand_quaternion(rng)
    v = Quaternion(0, *p.coeffs[1:])
    d = Quaternion(0, *rand_quaternion(rng).coeffs[1:])
    if v.norm():
        d = d - v.scale(v.scalar_product(d) / v.norm())
    return DualQuaternionPolynomial.linear(DualQuaternion(p, d))


def example_factors(lam, mu):
    h1 = t + QK - EPS * (QI.scale(lam) + QJ.scale(mu))
    h2 = t - QK + EPS * (QI.scale(lam - Fraction(1, 2)) + QJ.scale(mu + Fraction(1, 2)))
    h3 = t - QK - EPS * (QI.scale(Fraction(1, 2)) + QJ.scale(Fraction(1, 2)))
    return h1, h2, h3


class TestQuaternion:
    @given(quats, quats)
    def test_matrix_oracle(self, a, b):
        assert ham_matrix(a * b) == mat_mul(ham_matrix(a), ham_matrix(b))
        assert ham_from_matrix(ham_matrix(a)) == a

    def test_relations(self):
        assert QI * QI == QJ * QJ == QK * QK == QI * QJ * QK == Quaternion(-1)
        assert QI * QJ == QK and QJ * QI == -QK

    @given(quats)
    def test_norm(self, q):
        assert q.norm() == sum(c * c for c in q.coeffs)


class TestDual:
    def test_norm_example(self):
        assert dq_norm(DualQuaternion(QK, QI)) == DualNumber(1, 0)

    def test_identity_and_nilpotent(self):
        x = DualQuaternion(QI + 2, QJ)
        assert dq_mul(DualQuaternion(1), x) == x
        assert EPS * EPS == DualQuaternion()

    @given(duals, duals)
    def test_norm_multiplicative(self, x, y):
        assert dq_norm(x * y) == dq_norm(x) * dq_norm(y)

    @given(duals, duals)
    def test_conj_antihomomorphism(self, x, y):
        assert dq_conj(x * y) == dq_conj(y) * dq_conj(x)

    @given(duals, duals, duals)
    def test_associative(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(duals)
    def test_inverse(self, x):
        if x.is_invertible():
            assert x * x.inverse() == DualQuaternion(1)

    def test_coeffs(self):
        x = DualQuaternion.from_coeffs(range(8))
        assert x.coeffs == tuple(range(8))


class TestStudy:
    def test_example_polynomial(self):
        assert study_check(P4)
        assert P4.norm() == (T ** 2 + 1) ** 3

    def test_quaternion_only(self):
        assert study_check(QuaternionPolynomial([QI, QJ, 1]))
        assert study_check(DualQuaternionPolynomial.from_parts(QuaternionPolynomial([QI, 1])))

    def test_violation(self):
        m = DualQuaternionPolynomial.from_parts(QuaternionPolynomial([1]), QuaternionPolynomial([1]))
        assert not study_check(m)

    def test_closure(self):
        rng = random.Random(1)
        for _ in range(50):
            a, b = rand_study_linear(rng), rand_study_linear(rng)
            assert study_check(a) and study_check(b)
            assert study_check(a * b)
            assert (a * b).norm() == a.norm() * b.norm()


class TestStep:
    def test_generic_right_factor(self):
        right = t - QI
        m = (t - QK - EPS * QI) * right
        step = motion_factor_step(m, N_PLUS)
        assert not isinstance(step, SpecialCase)
        quo, rem = m.divmod_left(step)
        assert rem.is_zero() and quo * step == m

    def test_special_case(self):
        step = motion_factor_step(P4, T ** 2 + 1)
        assert isinstance(step, SpecialCase)
        expected = -(EPS * ((QI + QJ) * DualQuaternionPolynomial.t() - QI + QJ))
        assert step.remainder == expected


class TestFamily:
    def test_example_family(self):
        r = P4.rem(T ** 2 + 1)
        fam = special_zero_family(N_PLUS, r, "left")
        assert fam.names == ("λ", "μ")
        for lam, mu in [(0, 0), (1, -1), (Fraction(2, 3), 5)]:
            x = fam.member({"λ": lam, "μ": mu})
            assert x == DualQuaternion(-QK, QI.scale(lam) + QJ.scale(mu))
            assert fam.contains(x)
            assert r.eval_left(x) == DualQuaternion()

    def test_members_are_motion_factors(self):
        r = P4.rem(T ** 2 + 1)
        fam = special_zero_family(N_PLUS, r, "left")
        rng = random.Random(2)
        for _ in range(20):
            x = fam.member([rand_fraction(rng), rand_fraction(rng)])
            assert study_check(DualQuaternionPolynomial.linear(x))

    def test_empty_intersection(self):
        # R' = e(t - 2k): its zero 2k has norm 4, off the unit sphere of zeros of t^2 + 1
        r = EPS * (DualQuaternionPolynomial.t() - 2 * QK)
        with pytest.raises(EmptyIntersection):
            special_zero_family(N_PLUS, r, "left")

    def test_rejects_primal_remainder(self):
        with pytest.raises(ValueError):
            special_zero_family(N_PLUS, DualQuaternionPolynomial.t() - QK, "left")

    def test_parameter_validation(self):
        fam = special_zero_family(N_PLUS, P4.rem(T ** 2 + 1), "left")
        with pytest.raises(ValueError):
            fam.member({"ν": 1})
        with pytest.raises(ValueError):
            fam.member([1])


class TestFactorize:
    @pytest.mark.parametrize("lam,mu", [(0, 0), (1, -1), (Fraction(1, 2), 3), (-2, Fraction(-7, 3)), (5, 0)])
    def test_example_family(self, lam, mu):
        fz = motion_factorize(P4, params={"λ": lam, "μ": mu})
        assert fz.factors == example_factors(Fraction(lam), Fraction(mu))
        assert fz.product() == P4
        for f in fz.factors:
            assert study_check(f)

    def test_default_params(self):
        assert motion_factorize(P4).factors == example_factors(0, 0)

    def test_classical_quaternion_case(self):
        m = QuaternionPolynomial.linear(QI) * QuaternionPolynomial.linear(2 * QJ)
        fz = motion_factorize(m)
        assert len(fz.factors) == 2 and fz.product() == DualQuaternionPolynomial.from_parts(m)
        assert fz.family is None

    def test_random_generic_products(self):
        rng = random.Random(3)
        for _ in range(20):
            a, b = rand_study_linear(rng), rand_study_linear(rng)
            m = a * b
            fz = motion_factorize(m)
            assert fz.product() == m

    def test_rejects_non_study(self):
        m = DualQuaternionPolynomial.from_parts(QuaternionPolynomial([QI, 1]), QuaternionPolynomial([1]))
        with pytest.raises(ValueError):
            motion_factorize(m)

    def test_second_special_case_unsupported(self):
        # P4(t + 2) P4 hits a special remainder at both (t + 2)^2 + 1 and t^2 + 1
        shifted = DualQuaternionPolynomial()
        for c in reversed(P4.coeffs):
            shifted = shifted * (t + 2) + DualQuaternionPolynomial([c])
        with pytest.raises(Unsupported):
            motion_factorize(P4 * shifted)

    def test_not_reduced(self):
        with pytest.raises(ValueError, match="not reduced"):
            motion_factorize(P4 * (t + QK))
