"""
Factorization of monic, reduced split-quaternion polynomials into linear
factors, the factorizability decision, and factorization after
multiplication with a real polynomial.

All three algorithms peel off right factors ``t - h`` using one quadratic
factor ``N`` of the norm polynomial per step and the remainder
``R = rem(P, N)``:

* ``R conj(R) != 0``: ``h`` is the unique right zero of ``R``;
* ``R`` is a right ruling: ``h`` is the unique common right zero of ``N`` and ``R``;
* otherwise (left ruling or a single point) no right factor with norm ``N`` exists.
"""

from __future__ import annotations

import enum
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import CRational, ComplexSplitQuaternion, SplitQuaternion
from .errors import NoCommonZero, NormIdenticallyZero, NotGeneric, SearchExhausted
from .geometry import (
    LineClass,
    LineKind,
    classify_line,
    common_zero_on_ruling,
    linearly_dependent,
    unique_right_zero,
)
from .poly import SplitPolynomial, p_reduce
from .realpoly import (
    DEFAULT_TUPLE_LIMIT,
    FactorTuples,
    QuadraticFactor,
    RealPolynomial,
    factor_tuples,
    quadratic_splittings,
    rational_factorization,
    real_gcd,
)

__all__ = [
    "Decision",
    "FailureCertificate",
    "Factorization",
    "HStep",
    "ItemReport",
    "Verdict",
    "allfactor",
    "check_items",
    "choose_H",
    "default_tuple",
    "factor_real_polynomial",
    "gfactor",
    "is_factorizable",
    "ngfactor",
    "one_family_obstruction",
    "verify_factorization",
]

log = logging.getLogger(__name__)

ONE = RealPolynomial([1])
DEFAULT_MAX_CANDIDATES = 1000


def _linear(h: SplitQuaternion) -> SplitPolynomial:
    return SplitPolynomial.linear(h)


def _quadratic(n) -> QuadraticFactor:
    return n if isinstance(n, QuadraticFactor) else QuadraticFactor.from_polynomial(n)


def product(factors: Iterable[SplitPolynomial]) -> SplitPolynomial:
    out = SplitPolynomial([1])
    for f in factors:
        out = out * f
    return out


@dataclass(frozen=True)
class ItemReport:
    """Outcome of the three admissibility checks for a multiplier ``H = t - h``.

    ``item2_method`` / ``item3_method`` record how each check was evaluated:
    ``"rational"`` or ``"complex"`` evaluation at the roots, or ``"remainder"``
    when the roots are not Gaussian rationals and the equivalent test on the
    linear remainder is used.
    """

    irreducible: bool
    item1: bool
    item2: bool
    item3: bool
    item2_method: str = ""
    item3_method: str = ""
    z: CRational | None = None

    @property
    def ok(self) -> bool:
        return self.irreducible and self.item1 and self.item2 and self.item3


@dataclass(frozen=True)
class HStep:
    """One application of the real-multiplier trick to the stuck polynomial ``polynomial``."""

    h: SplitQuaternion
    quadratic: QuadraticFactor
    multiplier: RealPolynomial
    left_zero: SplitQuaternion
    right_zero: SplitQuaternion
    items: ItemReport
    candidates_tried: int = 1
    polynomial: SplitPolynomial | None = None


@dataclass(frozen=True)
class Factorization:
    """``multiplier * P == factors[0] * ... * factors[-1]``."""

    factors: tuple[SplitPolynomial, ...]
    multiplier: RealPolynomial = ONE
    tuple_used: tuple[QuadraticFactor, ...] | None = None
    h_steps: tuple[HStep, ...] = ()

    def product(self) -> SplitPolynomial:
        return product(self.factors)

    @property
    def zeros(self) -> tuple[SplitQuaternion, ...]:
        return tuple(-f.coeffs[0] for f in self.factors)

    def __str__(self):
        from .printing import format_factors

        return format_factors(self.factors)


@dataclass(frozen=True)
class FailureCertificate:
    """Why the right-factor search failed for a given tuple."""

    stage: int
    tuple_used: tuple[QuadraticFactor, ...]
    quadratic: QuadraticFactor
    quotient: SplitPolynomial
    remainder: SplitPolynomial
    remainder_class: LineClass
    right_factors: tuple[SplitPolynomial, ...] = ()

    def __str__(self):
        found = "".join(f"({f})" for f in self.right_factors) or "none"
        return (
            f"stage {self.stage}: rem({self.quotient}, {self.quadratic}) = {self.remainder} "
            f"parametrizes a {self.remainder_class}; right factors found: {found}"
        )


def _check_input(p: SplitPolynomial):
    if not p.is_monic():
        raise ValueError(f"{p} is not monic")
    if p.norm().is_zero():
        raise NormIdenticallyZero(f"{p} has zero norm polynomial")


def _right_zero_step(p: SplitPolynomial, n: QuadraticFactor):
    """Right zero of ``p`` with norm ``n``, or the remainder and its class on failure."""
    r = p.rem(n.polynomial)
    if r.is_zero():
        raise ValueError(f"{n} divides {p}; the polynomial is not reduced")
    if not r.norm().is_zero():
        return unique_right_zero(r), r, None
    r1 = r.coeffs[1] if r.degree >= 1 else SplitQuaternion()
    r0 = r.coeffs[0]
    if r1 * r0.conj():
        return common_zero_on_ruling(n, r, "right"), r, None
    return None, r, classify_line(r)


def _peel(p: SplitPolynomial, h: SplitQuaternion) -> SplitPolynomial:
    quo, rem = p.divmod_left(_linear(h))
    if not rem.is_zero():  # pragma: no cover - guarded by the zero computations
        raise AssertionError(f"t - ({h}) is not a right factor of {p}")
    return quo


def gfactor(p: SplitPolynomial) -> Factorization:
    """Generic factorization: fails with :class:`NotGeneric` on the first null remainder."""
    _check_input(p)
    factors: list[SplitPolynomial] = []
    used = []
    while p.degree > 0:
        n = quadratic_splittings(p.norm())[0][0]
        r = p.rem(n.polynomial)
        if r.is_zero() or r.norm().is_zero():
            raise NotGeneric(f"rem({p}, {n}) = {r} has no unique right zero", r)
        h = unique_right_zero(r)
        factors.insert(0, _linear(h))
        used.insert(0, n)
        p = _peel(p, h)
    return Factorization(tuple(factors), ONE, tuple(used))


def ngfactor(p: SplitPolynomial, f: Sequence) -> Factorization | FailureCertificate:
    """
    Factor ``p`` along the tuple ``f`` (consumed right to left) so that the
    i-th linear factor has norm ``f[i]``.  Returns a
    :class:`FailureCertificate` when no such factorization exists.
    """
    _check_input(p)
    f = tuple(_quadratic(x) for x in f)
    if len(f) != p.degree:
        raise ValueError(f"tuple has {len(f)} entries but {p} has degree {p.degree}")
    factors: list[SplitPolynomial] = []
    stage = 0
    for n in reversed(f):
        stage += 1
        h, r, cls = _right_zero_step(p, n)
        if h is None:
            return FailureCertificate(stage, f, n, p, r, cls, tuple(factors))
        factors.insert(0, _linear(h))
        p = _peel(p, h)
    return Factorization(tuple(factors), ONE, f)


def verify_factorization(p: SplitPolynomial, fz: Factorization) -> bool:
    if not all(f.degree == 1 and f.is_monic() for f in fz.factors):
        return False
    try:
        for f in fz.factors:
            f.norm()
    except AssertionError:
        return False
    return product(fz.factors) == SplitPolynomial.from_real(fz.multiplier) * p


# --- factorizability -------------------------------------------------------


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Decision:
    verdict: Verdict
    factorization: Factorization | None = None
    reason: str = ""
    obstruction: str | None = None
    remainder_classes: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict is Verdict.YES


def _distinct_quadratics(splittings) -> list[QuadraticFactor]:
    return sorted({q for s in splittings for q in s})


def one_family_obstruction(p: SplitPolynomial, splittings=None):
    """
    Classify ``rem(p, N)`` for every quadratic factor ``N``.  Returns
    ``(family, classes)`` where ``family`` is ``"left"``/``"right"``/``"points"``
    when all remainder sets lie in a single ruling family, else ``None``.
    """
    if splittings is None:
        splittings = quadratic_splittings(p.norm())
    classes = {}
    for n in _distinct_quadratics(splittings):
        classes[n] = classify_line(p.rem(n.polynomial))
    kinds = {c.kind for c in classes.values()}
    if kinds <= {LineKind.POINT_ON_QUADRIC}:
        return "points", classes
    if kinds <= {LineKind.LEFT_RULING, LineKind.POINT_ON_QUADRIC}:
        return "left", classes
    if kinds <= {LineKind.RIGHT_RULING, LineKind.POINT_ON_QUADRIC}:
        return "right", classes
    return None, classes


def is_factorizable(p: SplitPolynomial, limit: int = DEFAULT_TUPLE_LIMIT) -> Decision:
    """
    Decide whether ``p`` factors into linear factors.

    The one-family obstruction is tried first; otherwise every factor tuple
    (up to ``limit``) is run through :func:`ngfactor`.  ``NO`` is only
    reported when the enumeration of real quadratic factors was complete.
    """
    _check_input(p)
    norm = p.norm()
    fac = rational_factorization(norm)
    splittings = quadratic_splittings(norm)
    family, classes = one_family_obstruction(p, splittings)
    if family is not None and fac.complete:
        reason = {
            "points": "every remainder parametrizes a single point on the null quadric",
            "left": "all remainder lines lie in the left ruling family (or are points)",
            "right": "all remainder lines lie in the right ruling family (or are points)",
        }[family]
        return Decision(Verdict.NO, reason=reason, obstruction=family, remainder_classes=classes)
    tuples = FactorTuples(splittings, limit)
    certificates = []
    for f in tuples:
        out = ngfactor(p, f)
        if isinstance(out, Factorization):
            return Decision(Verdict.YES, out, reason="factorization found", remainder_classes=classes,
                            certificates=certificates)
        certificates.append(out)
    if tuples.truncated:
        return Decision(Verdict.INCONCLUSIVE, reason=f"tuple limit {limit} reached",
                        remainder_classes=classes, certificates=certificates)
    if not fac.complete:
        return Decision(Verdict.INCONCLUSIVE,
                        reason="norm polynomial has real quadratic factors with irrational coefficients",
                        remainder_classes=classes, certificates=certificates)
    return Decision(Verdict.NO, reason="the search fails for every factor tuple",
                    remainder_classes=classes, certificates=certificates)


# --- choosing the multiplier -----------------------------------------------


def _independent_complex(a: ComplexSplitQuaternion, b: ComplexSplitQuaternion) -> bool:
    x, y = a.coeffs, b.coeffs
    for u in range(4):
        for v in range(u + 1, 4):
            if x[u] * y[v] - x[v] * y[u]:
                return True
    return False


def _eval_product(h_poly: SplitPolynomial, p: SplitPolynomial, x):
    # t is central, so evaluating at a scalar is a ring homomorphism
    return h_poly(x) * p(x)


def check_items(p: SplitPolynomial, n: QuadraticFactor, h: SplitQuaternion) -> ItemReport:
    """Evaluate the three admissibility conditions for ``H = t - h``."""
    n = _quadratic(n)
    hh = h.norm()
    irreducible = hh > h.h0 * h.h0
    if not irreducible:
        return ItemReport(False, False, False, False)
    H = _linear(h)
    HH = QuadraticFactor(-2 * h.h0, hh)
    z_pair = HH.complex_roots()
    norm = p.norm()

    if z_pair is not None:
        z, zbar = z_pair
        item1 = bool(norm(z)) and bool(norm(zbar))
    else:
        item1 = real_gcd(HH.polynomial, norm).degree == 0

    roots = n.rational_roots()
    croots = n.complex_roots()
    if roots is not None and roots[0] != roots[1]:
        a1 = _eval_product(H, p, roots[0])
        a2 = _eval_product(H, p, roots[1])
        item2 = bool(a1) and bool(a2) and not linearly_dependent(a1, a2)
        method2 = "rational"
    elif croots is not None:
        a1 = _eval_product(H, p, croots[0])
        item2 = bool(a1) and _independent_complex(a1, a1.bar())
        method2 = "complex"
    else:
        r = (H * p).rem(n.polynomial)
        item2 = r.degree == 1 and not linearly_dependent(r.coeffs[0], r.coeffs[1])
        method2 = "remainder"

    if z_pair is not None:
        a = _eval_product(H, p, z_pair[0])
        abar = a.bar()
        item3 = bool(a) and _independent_complex(a, abar) and bool(a * abar.conj())
        method3 = "complex"
    else:
        item3 = _item3_by_remainder(p, n, h)
        method3 = "remainder"
    return ItemReport(True, item1, item2, item3, method2, method3, z_pair[0] if z_pair else None)


def _item3_by_remainder(p, n, h) -> bool:
    try:
        _, _, p1 = _left_extraction(p, n, h)
    except (NoCommonZero, NotGeneric, ValueError):
        return False
    HH = QuadraticFactor(-2 * h.h0, h.norm())
    r = p1.rem(HH.polynomial)
    if r.is_zero():
        return False
    cls = classify_line(r)
    return cls.kind in (LineKind.NON_NULL_LINE, LineKind.RIGHT_RULING)


def _left_extraction(p, n, h):
    H = _linear(h)
    hp = H * p
    r_l = hp.rem(n.polynomial)
    h_l = common_zero_on_ruling(n, r_l, "left")
    p1, rem = hp.divmod_right(_linear(h_l))
    if not rem.is_zero():  # pragma: no cover
        raise AssertionError(f"t - ({h_l}) is not a left factor of {hp}")
    return hp, h_l, p1


def _h_candidates(rng: random.Random) -> Iterator[SplitQuaternion]:
    """
    Small rational ``h`` with ``h1^2 - h2^2 - h3^2`` a positive rational square.

    The vector part comes from Euler's four-square parametrization
    ``(m^2+n^2+p^2+q^2)^2 = (m^2+n^2-p^2-q^2)^2 + 4(mq+np)^2 + 4(nq-mp)^2``,
    so the roots of ``(t - h)(t - conj(h))`` are Gaussian rationals.
    """
    while True:
        m, n_, p, q = (rng.randint(-2, 2) for _ in range(4))
        s = m * m + n_ * n_ - p * p - q * q
        if not s:
            continue
        h1 = m * m + n_ * n_ + p * p + q * q
        h2 = 2 * (m * q + n_ * p)
        h3 = 2 * (n_ * q - m * p)
        scale = Fraction(rng.randint(1, 2), rng.randint(1, 8)) * rng.choice((1, -1))
        h0 = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
        yield SplitQuaternion(h0, h1 * scale, h2 * scale, h3 * scale)


def choose_H(p: SplitPolynomial, n, seed=0, max_candidates: int = DEFAULT_MAX_CANDIDATES,
             rng: random.Random | None = None) -> tuple[SplitPolynomial, ItemReport]:
    """First seeded candidate ``H = t - h`` satisfying all admissibility checks."""
    n = _quadratic(n)
    rng = rng or random.Random(seed)
    gen = _h_candidates(rng)
    for _ in range(max_candidates):
        h = next(gen)
        report = check_items(p, n, h)
        if report.ok:
            return _linear(h), report
    raise SearchExhausted(f"no admissible multiplier among {max_candidates} candidates")


# --- real polynomials as products of linear split factors ------------------


def quadratic_zero(n: QuadraticFactor) -> SplitQuaternion:
    """A rational ``x`` with ``(t - x)(t - conj(x)) = n``."""
    d = 4 * n.c - n.b * n.b
    # x = (-b + h1 i + h2 j) / 2 with h1^2 - h2^2 = d
    return SplitQuaternion(-n.b / 2, (d + 1) / 4, (d - 1) / 4, 0)


def factor_real_polynomial(c: RealPolynomial) -> list[SplitPolynomial]:
    """Monic linear split factors whose product is the monic real polynomial ``c``."""
    c = c.monic()
    if c.degree <= 0:
        return []
    fac = rational_factorization(c)
    out = [_linear(SplitQuaternion(r)) for r in fac.roots]
    for q in fac.quadratics:
        x = quadratic_zero(q)
        out.extend([_linear(x.conj()), _linear(x)])
    return out


# --- factorization after multiplication with a real polynomial -------------


def default_tuple(p: SplitPolynomial, limit: int = DEFAULT_TUPLE_LIMIT) -> tuple[QuadraticFactor, ...]:
    """
    The tuple :func:`allfactor` uses when none is given: the first one that
    factors without a multiplier, else the first whose stuck quadratic has
    two distinct rational roots, else the first tuple.
    """
    tuples = factor_tuples(p.norm(), limit)
    stuck_real = None
    for cand in tuples:
        out = ngfactor(p, cand)
        if isinstance(out, Factorization):
            return cand
        roots = out.quadratic.rational_roots()
        if stuck_real is None and roots is not None and roots[0] != roots[1]:
            stuck_real = cand
    return stuck_real if stuck_real is not None else tuples[0]


def allfactor(p: SplitPolynomial, f: Sequence | None = None, *, h_override: Sequence = (),
              seed=0, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> Factorization:
    """
    Factor ``T p`` into linear factors for a real polynomial ``T``.

    Without ``f`` the first tuple admitting a plain factorization is used,
    falling back to the first tuple.  ``h_override`` supplies multipliers
    (quaternions ``h`` or polynomials ``t - h``) for the first stuck steps,
    in order; further stuck steps draw seeded candidates.
    """
    _check_input(p)
    if f is None:
        f = default_tuple(p)
        out = ngfactor(p, f)
        if isinstance(out, Factorization):
            return out
    f = [_quadratic(x) for x in f]
    if len(f) != p.degree:
        raise ValueError(f"tuple has {len(f)} entries but {p} has degree {p.degree}")
    used = tuple(f)
    overrides = [(-o.coeffs[0] if isinstance(o, SplitPolynomial) else o) for o in h_override]
    rng = random.Random(seed)
    left: list[SplitPolynomial] = []
    right: list[SplitPolynomial] = []
    multiplier = ONE
    steps: list[HStep] = []
    while p.degree > 0:
        n = f.pop()
        h, r, cls = _right_zero_step(p, n)
        if h is not None:
            right.insert(0, _linear(h))
            p = _peel(p, h)
            continue
        tried = 0
        while True:
            if overrides:
                h = overrides.pop(0)
                report = check_items(p, n, h)
                tried += 1
                if not report.ok:
                    raise ValueError(f"override t - ({h}) violates the admissibility checks: {report}")
            else:
                H, report = choose_H(p, n, max_candidates=max_candidates, rng=rng)
                h = -H.coeffs[0]
                tried += 1
            try:
                hp, h_l, p1 = _left_extraction(p, n, h)
                hh = QuadraticFactor(-2 * h.h0, h.norm())
                h_r = common_zero_on_ruling(hh, p1.rem(hh.polynomial), "right")
                break
            except (NoCommonZero, NotGeneric) as exc:
                log.warning("admissible multiplier t - (%s) failed to split: %s", h, exc)
                if tried >= max_candidates:
                    raise SearchExhausted("no multiplier produced a factor") from exc
        p2 = _peel(p1, h_r)
        multiplier = multiplier * hh.polynomial
        left.extend([_linear(h.conj()), _linear(h_l)])
        right.insert(0, _linear(h_r))
        steps.append(HStep(h, n, hh.polynomial, h_l, h_r, report, tried, p))
        p2, content = p_reduce(p2)
        if content.degree > 0:
            # content is central, so its linear factors can sit anywhere
            log.info("real content %s reappeared after extraction", content)
            left.extend(factor_real_polynomial(content))
            if p2.degree > 0:
                f = list(factor_tuples(p2.norm(), limit=1)[0])
            else:
                f = []
        p = p2
    return Factorization(tuple(left + right), multiplier, used, tuple(steps))
