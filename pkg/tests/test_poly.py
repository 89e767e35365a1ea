import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import rand_invertible, rand_split, rand_split_poly
from splitfactor.algebra import CRational, ComplexSplitQuaternion, I, J, K, SplitQuaternion
from splitfactor.errors import DivisorLeadingCoefficientNotInvertible, NormIdenticallyZero
from splitfactor.poly import (
    SplitPolynomial,
    from_json,
    linear,
    p_conj,
    p_divide,
    p_eval_left,
    p_eval_right,
    p_monicize,
    p_mul,
    p_norm,
    p_quo,
    p_reduce,
    p_rem,
    to_json,
)
from splitfactor.realpoly import RealPolynomial

t = SplitPolynomial.t()
T = RealPolynomial.t()
P1 = t ** 2 - (I + J) * t - K
P3 = t ** 3 - I * t ** 2 + K * t - J

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
quats = st.builds(SplitQuaternion, fractions, fractions, fractions, fractions)
spolys = st.lists(quats, max_size=4).map(SplitPolynomial)


class TestBasics:
    def test_product_of_linear_factors(self):
        assert linear(J) * linear(I) == P1
        assert p_mul(linear(I), linear(J)) == t ** 2 - (I + J) * t + K
        assert str(P1) == "t^2 - (i + j)*t - k"

    def test_norm(self):
        assert p_norm(P1) == T ** 4 - 1
        assert P3.norm() == T ** 6 + T ** 4 - T ** 2 - 1
        assert (t ** 2 + K).norm() == T ** 4 - 1

    def test_t_is_central(self):
        assert t * K == K * t

    def test_conj(self):
        assert p_conj(linear(I)) == t + I
        assert (linear(I) * linear(J)).conj() == linear(J).conj() * linear(I).conj()

    @given(spolys, spolys)
    def test_norm_multiplicative(self, a, b):
        assert (a * b).norm() == a.norm() * b.norm()

    @given(spolys, spolys, spolys)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_from_real(self):
        assert SplitPolynomial.from_real(T ** 2 + 1) == t ** 2 + 1
        assert (T ** 2 + 1) * linear(K) == linear(K) * (T ** 2 + 1)


class TestEvaluation:
    def test_right_zero(self):
        assert P1(I) == SplitQuaternion()
        assert P1(J) == SplitQuaternion(0, 0, 0, -2)
        assert p_eval_right(P1, I) == 0

    def test_left_evaluation(self):
        p = linear(I) * linear(J)
        assert p_eval_left(p, I) == 0
        assert p_eval_right(p, J) == 0

    def test_complex_argument(self):
        value = (t ** 2 + 1)(CRational(0, 1))
        assert isinstance(value, ComplexSplitQuaternion) and not value

    @given(spolys, spolys, quats)
    def test_evaluation_at_real_is_homomorphism(self, a, b, h):
        x = h.h0
        assert (a * b)(x) == a(x) * b(x)

    @given(spolys, quats)
    def test_factor_theorem(self, a, h):
        q, r = a.divmod_left(linear(h))
        assert r.degree <= 0
        value = r.coeffs[0] if r.coeffs else SplitQuaternion()
        assert value == a.eval_right(h)


class TestDivision:
    def test_remainders(self):
        assert P1.rem(T ** 2 + 1) == -(I + J) * t - (1 + K)
        assert p_rem(P1, T ** 2 - 1) == -(I + J) * t + (1 - K)
        assert p_rem(P3, T ** 2 - 1) == (1 + K) * t - (I + J)

    def test_left_quotient(self):
        assert P3.lquo(linear(I)) == t ** 2 + K
        assert P3.lrem(linear(I)).is_zero()

    def test_right_division_identity(self):
        rng = random.Random(2)
        for _ in range(100):
            p = rand_split_poly(rng, rng.randint(0, 5), monic=False)
            g = rand_split_poly(rng, rng.randint(1, 3), monic=False)
            q, r = p_divide(p, g, "right")
            assert g * q + r == p and r.degree < g.degree
            q, r = p_divide(p, g, "left")
            assert q * g + r == p and r.degree < g.degree

    def test_real_divisor(self):
        rng = random.Random(4)
        for _ in range(50):
            p = rand_split_poly(rng, 4)
            n = T ** 2 + rng.randint(-3, 3) * T + rng.randint(-3, 3)
            q, r = p_quo(p, n), p_rem(p, n)
            assert SplitPolynomial.from_real(n) * q + r == p
            assert p.divmod_right(n) == p.divmod_left(n)

    def test_non_invertible_divisor(self):
        with pytest.raises(DivisorLeadingCoefficientNotInvertible):
            P1.rquo((1 + J) * t)
        with pytest.raises(ZeroDivisionError):
            P1.rquo(SplitPolynomial())


class TestReduce:
    def test_content(self):
        p = (t ** 2 + 1) * linear(I + 2 * J) * 3
        reduced, content = p_reduce(p)
        assert content == T ** 2 + 1
        assert reduced * content == p

    def test_already_reduced(self):
        assert p_reduce(P1) == (P1, RealPolynomial([1]))

    def test_random_content(self):
        rng = random.Random(8)
        for _ in range(30):
            p = rand_split_poly(rng, 2)
            c = (T - rng.randint(-3, 3)) * (T ** 2 + rng.randint(1, 4))
            reduced, content = p_reduce(p * c)
            assert reduced * content == p * c
            assert c.divides(content) or content.divides(c)
            assert p_reduce(reduced)[1] == RealPolynomial([1])


class TestMonicize:
    def test_invertible_leading(self):
        p = (2 + K) * t - J
        q, rec = p_monicize(p)
        assert rec.identity and q.is_monic()
        assert (2 + K) * q == p

    def test_mobius(self):
        p = (1 + J) * t + I
        q, rec = p_monicize(p)
        assert q == linear(I + K) and rec.t0 == 0

    def test_zero_norm(self):
        with pytest.raises(NormIdenticallyZero):
            p_monicize((1 + J) * t + (1 + J))

    def test_random_norm_relation(self):
        rng = random.Random(6)
        for _ in range(20):
            p = SplitPolynomial([rand_split(rng), rand_split(rng), (1 + J) * rand_invertible(rng)])
            if p.norm().is_zero():
                continue
            q, rec = p_monicize(p)
            assert q.is_monic() and q.degree == p.degree


class TestJson:
    def test_round_trip(self):
        data = to_json(P1)
        assert data == {"coeffs": [["0", "0", "0", "-1"], ["0", "-1", "-1", "0"], ["1", "0", "0", "0"]]}
        assert from_json(data) == P1

    @given(spolys)
    def test_random_round_trip(self, p):
        assert from_json(to_json(p)) == p

    def test_fraction_strings(self):
        p = linear(SplitQuaternion(Fraction(1, 3)))
        assert to_json(p)["coeffs"][0][0] == "-1/3"
