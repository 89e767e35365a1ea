"""
Univariate polynomials over the rationals and the norm-polynomial splitting
machinery used by the factorization algorithms.

A norm polynomial is split into monic real quadratics by pairing its roots.
Only splittings with rational quadratic factors are produced: rational roots
are paired in every possible way, rational irreducible quadratics stay intact.
Real quadratic factors with irrational coefficients exist whenever an
irrational real root can be paired with a root other than its conjugate;
:class:`RationalFactorization` reports this through ``complete``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import as_fraction
from .errors import IrrationalSplitting, OddDegree

__all__ = [
    "DEFAULT_TUPLE_LIMIT",
    "FactorTuples",
    "QuadraticFactor",
    "RationalFactorization",
    "RealPolynomial",
    "factor_tuples",
    "quadratic_splittings",
    "rational_factorization",
    "rational_roots",
    "real_gcd",
    "squarefree_decomposition",
    "squarefree_part",
]

DEFAULT_TUPLE_LIMIT = 10_000


class RealPolynomial:
    """Immutable polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [as_fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs) -> "RealPolynomial":
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def constant(cls, c) -> "RealPolynomial":
        return cls([c])

    @classmethod
    def t(cls) -> "RealPolynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots) -> "RealPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "RealPolynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return RealPolynomial._raw(c / lc for c in self.coeffs)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, RealPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RealPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RealPolynomial._raw(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return RealPolynomial._raw(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RealPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RealPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = RealPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.leading
        if len(rem) <= db:
            return RealPolynomial(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lc
            quo[k] = q
            if q:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= q * b
        return RealPolynomial._raw(quo), RealPolynomial._raw(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "RealPolynomial") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial._raw(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, a) -> "RealPolynomial":
        """Return ``p(t + a)``."""
        a = as_fraction(a)
        out = RealPolynomial()
        lin = RealPolynomial([a, 1])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def __eq__(self, other):
        if isinstance(other, RealPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RealPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RealPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .printing import format_real_polynomial

        return format_real_polynomial(self)


def real_gcd(a: RealPolynomial, b: RealPolynomial) -> RealPolynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(a: RealPolynomial) -> list[tuple[RealPolynomial, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime ``(factor, multiplicity)``."""
    if a.degree < 1:
        return []
    a = a.monic()
    out = []
    b = a.derivative()
    c = real_gcd(a, b)
    w = a // c
    y = b // c
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = real_gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = w // g
        y = z // g
        i += 1
    return out


def squarefree_part(a: RealPolynomial) -> RealPolynomial:
    if a.degree < 1:
        return RealPolynomial([1])
    return (a // real_gcd(a, a.derivative())).monic()


def _primitive_integer_coeffs(a: RealPolynomial) -> list[int]:
    den = 1
    for c in a.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a.coeffs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(a: RealPolynomial, r: Fraction) -> RealPolynomial:
    return a // RealPolynomial([-r, 1])


def rational_roots(a: RealPolynomial) -> list[Fraction]:
    """All rational roots with multiplicity, in ascending order."""
    if a.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    # zero roots first keeps the constant term nonzero for the divisor search
    while a.degree > 0 and not a.coeffs[0]:
        roots.append(Fraction(0))
        a = RealPolynomial(a.coeffs[1:])
    for f, mult in squarefree_decomposition(a):
        ints = _primitive_integer_coeffs(f)
        cands = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                cands.add(Fraction(p, q))
                cands.add(Fraction(-p, q))
        for r in cands:
            if f.degree < 1:
                break
            if not f(r):
                roots.extend([r] * mult)
                f = _deflate(f, r)
    return sorted(roots)


def _find_quadratic_factor(a: RealPolynomial) -> RealPolynomial | None:
    """Monic rational quadratic dividing ``a`` (assumed free of rational roots)."""
    ints = _primitive_integer_coeffs(a)
    value_at_one = sum(ints)
    # by Gauss's lemma an integer factor u t^2 + v t + w has u | lead, w | const
    # and u + v + w | a(1), which is nonzero because a has no rational roots
    for u in _divisors(ints[-1]):
        for w0 in _divisors(ints[0]):
            for w in (w0, -w0):
                for d0 in _divisors(value_at_one):
                    for d in (d0, -d0):
                        v = d - u - w
                        cand = RealPolynomial([w, v, u])
                        if (a % cand).is_zero():
                            return cand.monic()
    return None


@dataclass(frozen=True, order=True)
class QuadraticFactor:
    """Monic real quadratic ``t^2 + b t + c``."""

    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "c", as_fraction(self.c))

    @classmethod
    def from_polynomial(cls, p: RealPolynomial) -> "QuadraticFactor":
        if p.degree != 2:
            raise ValueError(f"{p} is not quadratic")
        p = p.monic()
        return cls(p.coeffs[1], p.coeffs[0])

    @classmethod
    def from_roots(cls, r1, r2) -> "QuadraticFactor":
        r1, r2 = as_fraction(r1), as_fraction(r2)
        return cls(-(r1 + r2), r1 * r2)

    @property
    def polynomial(self) -> RealPolynomial:
        return RealPolynomial([self.c, self.b, 1])

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.c

    def is_irreducible(self) -> bool:
        """No real roots."""
        return self.discriminant < 0

    def rational_roots(self) -> tuple[Fraction, Fraction] | None:
        d = self.discriminant
        s = _rational_sqrt(d)
        if s is None:
            return None
        return ((-self.b - s) / 2, (-self.b + s) / 2)

    def complex_roots(self):
        """Roots ``z, conj(z)`` as Gaussian rationals when ``c - b^2/4`` is a rational square."""
        from .algebra import CRational

        d = self.discriminant
        if d >= 0:
            return None
        s = _rational_sqrt(-d)
        if s is None:
            return None
        return (CRational(-self.b / 2, s / 2), CRational(-self.b / 2, -s / 2))

    def __call__(self, x):
        return x * x + self.b * x + self.c

    def __str__(self):
        return str(self.polynomial)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class RationalFactorization:
    """``F = prod (t - r) * prod q`` over the rationals.

    ``roots`` are the rational roots with multiplicity; ``quadratics`` the
    rational irreducible quadratic factors with multiplicity.
    """

    roots: tuple[Fraction, ...]
    quadratics: tuple[QuadraticFactor, ...]

    @property
    def real_root_count(self) -> int:
        return len(self.roots) + 2 * sum(1 for q in self.quadratics if q.discriminant > 0)

    @property
    def complete(self) -> bool:
        """Whether every real quadratic factor of F has rational coefficients."""
        has_irrational_real = any(q.discriminant > 0 for q in self.quadratics)
        return not (has_irrational_real and self.real_root_count >= 4)


def rational_factorization(f: RealPolynomial) -> RationalFactorization:
    if f.is_zero():
        raise ValueError("cannot split the zero polynomial")
    roots = rational_roots(f)
    rest = f.monic() // RealPolynomial.from_roots(roots)
    quads = []
    for g, mult in squarefree_decomposition(rest):
        while g.degree > 2:
            q = _find_quadratic_factor(g)
            if q is None:
                raise IrrationalSplitting(
                    f"{g} has no rational quadratic factor; its real quadratic factors are irrational"
                )
            quads.extend([QuadraticFactor.from_polynomial(q)] * mult)
            g = g // q
        if g.degree == 2:
            quads.extend([QuadraticFactor.from_polynomial(g)] * mult)
        elif g.degree == 1:  # pragma: no cover - rational roots were removed
            raise AssertionError("linear factor left after root extraction")
    return RationalFactorization(tuple(roots), tuple(sorted(quads)))


def _root_pairings(roots: tuple[Fraction, ...]) -> set[tuple[QuadraticFactor, ...]]:
    """All perfect matchings of a multiset of roots, as sorted quadratic multisets."""
    if not roots:
        return {()}
    first, rest = roots[0], roots[1:]
    out = set()
    seen = set()
    for idx, partner in enumerate(rest):
        if partner in seen:
            continue
        seen.add(partner)
        q = QuadraticFactor.from_roots(first, partner)
        for tail in _root_pairings(rest[:idx] + rest[idx + 1:]):
            out.add(tuple(sorted((q,) + tail)))
    return out


def quadratic_splittings(f: RealPolynomial, *, strict: bool = False) -> list[tuple[QuadraticFactor, ...]]:
    """
    Every way to write ``f`` as a product of monic rational quadratics.

    Each splitting is a sorted tuple (a multiset); the list is sorted
    lexicographically by the ``(b, c)`` sequences.  With ``strict=True``
    :class:`IrrationalSplitting` is raised when ``f`` also has real quadratic
    factors with irrational coefficients.
    """
    if f.is_zero():
        raise ValueError("cannot split the zero polynomial")
    if f.degree % 2:
        raise OddDegree(f"{f} has odd degree {f.degree}")
    fac = rational_factorization(f)
    if strict and not fac.complete:
        raise IrrationalSplitting(f"{f} also splits into real quadratics with irrational coefficients")
    if len(fac.roots) % 2:  # pragma: no cover - degree parity forbids it
        raise AssertionError("odd number of rational roots")
    return sorted(
        tuple(sorted(fac.quadratics + pairing)) for pairing in _root_pairings(fac.roots)
    )


def _multiset_permutation_count(items: Sequence) -> int:
    counts = Counter(items)
    n = math.factorial(len(items))
    for c in counts.values():
        n //= math.factorial(c)
    return n


def _unrank_multiset_permutation(items: Sequence, rank: int) -> tuple:
    """The ``rank``-th distinct permutation of a sorted multiset, lexicographically."""
    counts = Counter(items)
    keys = sorted(counts)
    remaining = len(items)
    out = []
    while remaining:
        for key in keys:
            if not counts[key]:
                continue
            counts[key] -= 1
            block = math.factorial(remaining - 1)
            for c in counts.values():
                block //= math.factorial(c)
            if rank < block:
                out.append(key)
                remaining -= 1
                break
            rank -= block
            counts[key] += 1
    return tuple(out)


class FactorTuples(Sequence):
    """Indexable, deterministic sequence of ordered factor tuples of a norm polynomial.

    The i-th tuple is computed independently by unranking, so the sequence
    can be consumed from several workers.  ``truncated`` is set when
    ``limit`` cut the enumeration short.
    """

    def __init__(self, splittings, limit: int = DEFAULT_TUPLE_LIMIT):
        self.splittings = [tuple(s) for s in splittings]
        self._counts = [_multiset_permutation_count(s) for s in self.splittings]
        self.total = sum(self._counts)
        self.limit = limit
        self.truncated = self.total > limit

    def __len__(self):
        return min(self.total, self.limit)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError("factor tuple index out of range")
        for split, count in zip(self.splittings, self._counts):
            if index < count:
                return _unrank_multiset_permutation(split, index)
            index -= count
        raise IndexError(index)  # pragma: no cover

    def __iter__(self) -> Iterator[tuple[QuadraticFactor, ...]]:
        for i in range(len(self)):
            yield self[i]


def factor_tuples(f: RealPolynomial, limit: int = DEFAULT_TUPLE_LIMIT, *, strict: bool = False) -> FactorTuples:
    return FactorTuples(quadratic_splittings(f, strict=strict), limit)

