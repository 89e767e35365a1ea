import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    left_factor_search,
    linear_norm,
    matrix_items,
    rand_fraction,
    rand_invertible,
    rand_nongeneric,
    rand_split,
)
from splitfactor.algebra import I, J, K, SplitQuaternion
from splitfactor.errors import NotGeneric, SearchExhausted
from splitfactor.factor import (
    FailureCertificate,
    Factorization,
    Verdict,
    allfactor,
    check_items,
    choose_H,
    default_tuple,
    factor_real_polynomial,
    gfactor,
    is_factorizable,
    ngfactor,
    one_family_obstruction,
    product,
    quadratic_zero,
    verify_factorization,
)
from splitfactor.geometry import LineKind
from splitfactor.poly import SplitPolynomial, linear, p_reduce
from splitfactor.realpoly import QuadraticFactor, RealPolynomial, factor_tuples, rational_factorization

t = SplitPolynomial.t()
T = RealPolynomial.t()
P1 = t ** 2 - (I + J) * t - K
P2 = t ** 2 + K
P3 = t ** 3 - I * t ** 2 + K * t - J
N_PLUS = QuadraticFactor(0, 1)
N_MINUS = QuadraticFactor(0, -1)
ONE = RealPolynomial([1])


def rand_product(rng: random.Random, n: int, repeated: bool = False):
    """Product of n monic linear factors; with ``repeated`` the norms come from a small pool."""
    pool = [I, J, K, I + 2 * J, 2 * I + J]
    hs = []
    for _ in range(n):
        if repeated:
            g = rand_invertible(rng)
            h = g * rng.choice(pool) * g.inverse() + rng.randint(-1, 1)
        else:
            h = rand_split(rng)
        hs.append(h)
    return hs, product(linear(h) for h in hs)


def exhaustive(p: SplitPolynomial) -> bool:
    return any(isinstance(ngfactor(p, f), Factorization) for f in factor_tuples(p.norm()))


class TestGFactor:
    def test_generic_quadratic(self):
        p = linear(I) * linear(2 * J)
        fz = gfactor(p)
        assert fz.product() == p and len(fz.factors) == 2 and fz.multiplier == ONE
        assert verify_factorization(p, fz)

    def test_degree_one(self):
        fz = gfactor(t - K)
        assert fz.factors == (t - K,)

    def test_null_remainder(self):
        with pytest.raises(NotGeneric):
            gfactor(P1)

    def test_random_generic(self):
        rng = random.Random(0)
        done = 0
        for _ in range(60):
            _, p = rand_product(rng, rng.randint(1, 3))
            if p_reduce(p)[1].degree > 0:
                continue
            try:
                fz = gfactor(p)
            except NotGeneric:
                continue
            assert verify_factorization(p, fz)
            done += 1
        assert done > 30


class TestNGFactor:
    def test_p1_success(self):
        fz = ngfactor(P1, (N_MINUS, N_PLUS))
        assert fz.factors == (t - J, t - I)

    def test_p1_left_ruling_failure(self):
        cert = ngfactor(P1, (N_PLUS, N_MINUS))
        assert isinstance(cert, FailureCertificate)
        assert cert.stage == 1 and cert.remainder_class.kind is LineKind.LEFT_RULING

    @pytest.mark.parametrize("f", [(N_PLUS, N_MINUS), (N_MINUS, N_PLUS)])
    def test_p2_points(self, f):
        cert = ngfactor(P2, f)
        assert cert.remainder_class.kind is LineKind.POINT_ON_QUADRIC

    def test_p3_stage_two(self):
        cert = ngfactor(P3, (N_PLUS, N_PLUS, N_MINUS))
        assert cert.stage == 2 and cert.right_factors == (t - J,)
        assert cert.remainder == (J - I) * t
        assert cert.remainder_class.kind is LineKind.POINT_ON_QUADRIC

    @pytest.mark.parametrize("f", [(N_PLUS, N_MINUS, N_PLUS), (N_MINUS, N_PLUS, N_PLUS)])
    def test_p3_other_tuples(self, f):
        cert = ngfactor(P3, f)
        assert cert.right_factors == (t - I,) and cert.quotient == P2

    def test_tuple_length_checked(self):
        with pytest.raises(ValueError):
            ngfactor(P1, (N_PLUS,))

    def test_round_trip_matching_tuple(self):
        rng = random.Random(1)
        done = 0
        for _ in range(120):
            hs, p = rand_product(rng, rng.randint(1, 4), repeated=rng.random() < 0.5)
            if p_reduce(p)[1].degree > 0:
                continue
            f = tuple(linear_norm(h) for h in hs)
            fz = ngfactor(p, f)
            assert isinstance(fz, Factorization), (p, f)
            assert verify_factorization(p, fz)
            for lin, n in zip(fz.factors, f):
                assert lin.norm() == n.polynomial
            done += 1
        assert done > 60

    def test_failure_soundness(self):
        rng = random.Random(2)
        failures = 0
        for _ in range(40):
            p = rand_nongeneric(rng) if rng.random() < 0.5 else rand_product(rng, 3, repeated=True)[1]
            if p_reduce(p)[1].degree > 0:
                continue
            for f in factor_tuples(p.norm(), limit=30):
                out = ngfactor(p, f)
                if isinstance(out, FailureCertificate):
                    failures += 1
                    assert out.remainder_class.kind in (LineKind.LEFT_RULING, LineKind.POINT_ON_QUADRIC)
                else:
                    for lin, n in zip(out.factors, f):
                        assert lin.norm() == n.polynomial
        assert failures > 20

    def test_left_mirror(self):
        rng = random.Random(3)
        agree = {True: 0, False: 0}
        cases = [P1, P2, P3] + [rand_nongeneric(rng) for _ in range(6)]
        cases += [rand_product(rng, rng.randint(2, 3), repeated=True)[1] for _ in range(15)]
        for p in cases:
            if p_reduce(p)[1].degree > 0:
                continue
            for f in factor_tuples(p.norm(), limit=20):
                right = isinstance(ngfactor(p.conj(), f), Factorization)
                left = left_factor_search(p, f) is not None
                assert right == left, (p, f)
                agree[right] += 1
        assert agree[True] and agree[False]


class TestDecision:
    def test_examples(self):
        assert is_factorizable(P1).verdict is Verdict.YES
        d = is_factorizable(P2)
        assert d.verdict is Verdict.NO and d.obstruction == "points"
        d = is_factorizable(P3)
        assert d.verdict is Verdict.NO

    @pytest.mark.parametrize("n", range(2, 7))
    def test_power_family(self, n):
        p = t ** n + I + K
        d = is_factorizable(p)
        assert d.verdict is Verdict.NO
        assert p.rem(T ** 2) == SplitPolynomial.constant(I + K)

    def test_p3_all_tuples_fail(self):
        tuples = list(factor_tuples(P3.norm()))
        assert len(tuples) == 3
        assert all(isinstance(ngfactor(P3, f), FailureCertificate) for f in tuples)

    def test_fast_path_agrees_with_search(self):
        rng = random.Random(4)
        verdicts = set()
        cases = [P1, P2, P3] + [t ** n + I + K for n in (2, 3)]
        cases += [rand_nongeneric(rng) for _ in range(12)]
        cases += [rand_product(rng, rng.randint(1, 3), repeated=True)[1] for _ in range(12)]
        for p in cases:
            if p.degree > 3 or p_reduce(p)[1].degree > 0:
                continue
            d = is_factorizable(p)
            assert (d.verdict is Verdict.YES) == exhaustive(p)
            family, _ = one_family_obstruction(p)
            if family is not None:
                assert not exhaustive(p)
            verdicts.add(d.verdict)
        assert verdicts == {Verdict.YES, Verdict.NO}

    def test_inconclusive_on_truncation(self):
        p = linear(I) * linear(J)
        d = is_factorizable(p, limit=1)
        assert d.verdict is Verdict.INCONCLUSIVE and len(d.certificates) == 1
        assert is_factorizable(p).verdict is Verdict.YES

    def test_incomplete_rational_factorization(self):
        # norm (t^2 - 2)(t - 1)(t - 3): pairing sqrt(2) with 1 or 3 is not rational
        p = linear(J + K) * linear(2 + J)
        assert not rational_factorization(p.norm()).complete
        d = is_factorizable(p)
        assert d.verdict is Verdict.YES and verify_factorization(p, d.factorization)


class TestVerify:
    def test_examples(self):
        assert verify_factorization(P1, Factorization((t - J, t - I)))
        assert not verify_factorization(P1, Factorization((t - I, t - J)))
        assert verify_factorization(SplitPolynomial.constant(1), Factorization(()))

    def test_rejects_non_monic(self):
        assert not verify_factorization(2 * t - 2 * K, Factorization((2 * t - 2 * K,)))


class TestChooseH:
    def test_example_candidate(self):
        report = check_items(P2, N_PLUS, 2 * I)
        assert report.ok
        assert linear_norm(2 * I).polynomial == T ** 2 + 4
        assert matrix_items(P2, N_PLUS, 2 * I) == (True, True, True)

    def test_reducible_rejected(self):
        report = check_items(P2, N_PLUS, J)
        assert not report.irreducible and not report.ok

    @pytest.mark.parametrize("seed", range(5))
    def test_seeded_choice(self, seed):
        H, report = choose_H(P2, N_PLUS, seed=seed)
        h = -H.coeffs[0]
        assert report.ok and h.norm() > h.h0 ** 2
        assert matrix_items(P2, N_PLUS, h) == (True, True, True)

    def test_deterministic(self):
        assert choose_H(P3, N_PLUS, seed=7)[0] == choose_H(P3, N_PLUS, seed=7)[0]

    def test_exhausted(self):
        with pytest.raises(SearchExhausted):
            choose_H(P2, N_PLUS, max_candidates=0)

    def test_item_failures_detected(self):
        # h = i shares the factor t^2 + 1 with the norm: Item 1 fails
        assert not check_items(P2, N_PLUS, I).item1
        rng = random.Random(5)
        seen = set()
        for _ in range(300):
            # conjugates of c*i shifted by a real keep Gaussian rational roots a +- c I
            g = rand_invertible(rng)
            h = g * (rng.randint(1, 3) * I) * g.inverse() + rng.randint(-1, 1)
            p, n = rng.choice([(P3, N_PLUS), (P3, N_MINUS), (P2, N_PLUS), (P1, N_PLUS)])
            report = check_items(p, n, h)
            key = (report.item1, report.item2, report.item3)
            assert key == matrix_items(p, n, h)
            seen.add(key)
        assert (True, True, True) in seen and len(seen) > 2


class TestAllFactor:
    def test_example_override(self):
        fz = allfactor(P3, h_override=[2 * I])
        assert fz.multiplier == T ** 2 + 4
        expected = (
            t + 2 * I,
            t - SplitQuaternion(0, Fraction(3, 4), Fraction(-5, 4)),
            t - SplitQuaternion(0, Fraction(-61, 60), Fraction(11, 60)),
            t - SplitQuaternion(0, Fraction(34, 15), Fraction(16, 15)),
            t - I,
        )
        assert fz.factors == expected
        assert verify_factorization(P3, fz)

    def test_override_as_polynomial(self):
        assert allfactor(P3, h_override=[t - 2 * I]).factors == allfactor(P3, h_override=[2 * I]).factors

    def test_bad_override(self):
        with pytest.raises(ValueError):
            allfactor(P3, h_override=[J])

    def test_factorable_input(self):
        fz = allfactor(P1)
        assert fz.multiplier == ONE and fz.factors == (t - J, t - I)

    @pytest.mark.parametrize("seed", range(4))
    def test_seeded_p2(self, seed):
        fz = allfactor(P2, seed=seed)
        assert fz.multiplier.degree == 2 and len(fz.factors) == 4
        assert verify_factorization(P2, fz)
        for step in fz.h_steps:
            assert step.items.ok

    def test_random_nongeneric(self):
        rng = random.Random(6)
        for k in range(8):
            p = rand_nongeneric(rng)
            fz = allfactor(p, seed=k)
            assert verify_factorization(p, fz)
            assert fz.multiplier.degree % 2 == 0
            assert len(fz.factors) == p.degree + fz.multiplier.degree

    def test_default_tuple(self):
        assert default_tuple(P1) == (N_MINUS, N_PLUS)
        # no tuple factors P3; the first one stuck at t^2 - 1 is chosen
        assert default_tuple(P3) == (N_PLUS, N_MINUS, N_PLUS)


class TestRealFactors:
    def test_quadratic_zero(self):
        rng = random.Random(7)
        for _ in range(50):
            n = QuadraticFactor(rand_fraction(rng), rand_fraction(rng))
            x = quadratic_zero(n)
            assert linear(x.conj()) * linear(x) == SplitPolynomial.from_real(n.polynomial)

    @given(st.lists(st.integers(-3, 3), max_size=3), st.lists(st.integers(1, 5), max_size=2))
    @settings(max_examples=40)
    def test_factor_real_polynomial(self, roots, cs):
        c = RealPolynomial.from_roots(roots)
        for v in cs:
            c = c * (T ** 2 + v)
        assert product(factor_real_polynomial(c)) == SplitPolynomial.from_real(c)
