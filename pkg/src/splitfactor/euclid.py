"""
Dual quaternions and motion polynomials.

A motion polynomial ``P + e D`` (``e^2 = 0``, ``e`` central) has
Hamiltonian quaternion polynomials ``P, D`` satisfying the Study condition
``P conj(D) + D conj(P) = 0``; its norm polynomial is then ``P conj(P)``.

The factorization here peels off linear right factors from generic
remainders.  When a remainder has zero primal part, ``R = e R'``, the zeros
of ``R`` common with the quadratic ``N`` that also satisfy the Study
condition form an affine family ``q + e (lam d1 + mu d2 + ...)``, computed
by :func:`special_zero_family`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .algebra import CRational, _QuaternionBase, as_fraction, structure_table
from .errors import EmptyIntersection, NormIdenticallyZero, NotGeneric, NotInvertible, Unsupported
from .poly import QuaternionPolynomialBase
from .realpoly import QuadraticFactor, RealPolynomial, factor_tuples

__all__ = [
    "DualNumber",
    "DualQuaternion",
    "DualQuaternionPolynomial",
    "MotionFactorization",
    "MotionPolynomial",
    "Quaternion",
    "QuaternionPolynomial",
    "SpecialCase",
    "ZeroFamily",
    "dq_conj",
    "dq_mul",
    "dq_norm",
    "motion_factor_step",
    "motion_factorize",
    "special_zero_family",
    "study_check",
]

PARAM_NAMES = ("λ", "μ", "ν", "ρ")


class Quaternion(_QuaternionBase):
    """Hamiltonian quaternion, i^2 = j^2 = k^2 = ijk = -1."""

    __slots__ = ()
    TABLE = structure_table(-1, -1)


class DualNumber(NamedTuple):
    re: Fraction
    eps: Fraction

    def __mul__(self, other):
        return DualNumber(self.re * other.re, self.re * other.eps + self.eps * other.re)


def _as_quaternion(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, Fraction, str)):
        return Quaternion(x)
    if isinstance(x, (tuple, list)):
        return Quaternion(*x)
    raise TypeError(f"cannot interpret {x!r} as a quaternion")


class DualQuaternion:
    """``primal + e * dual``."""

    __slots__ = ("primal", "dual")

    TABLE = ("dual", Quaternion.TABLE)

    def __init__(self, primal=0, dual=0):
        self.primal = _as_quaternion(primal)
        self.dual = _as_quaternion(dual)

    @classmethod
    def scalar(cls, x):
        return cls(Quaternion(x))

    @classmethod
    def from_coeffs(cls, c):
        """From eight components: primal ``1, i, j, k`` then dual ``1, i, j, k``."""
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:8]))

    @property
    def coeffs(self) -> tuple:
        return self.primal.coeffs + self.dual.coeffs

    def _wrap(self, other):
        if isinstance(other, DualQuaternion):
            return other
        if isinstance(other, Quaternion):
            return DualQuaternion(other)
        if isinstance(other, (int, Fraction)):
            return DualQuaternion.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return DualQuaternion(self.primal + other.primal, self.dual + other.dual)

    __radd__ = __add__

    def __neg__(self):
        return DualQuaternion(-self.primal, -self.dual)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return DualQuaternion(
            self.primal * other.primal,
            self.primal * other.dual + self.dual * other.primal,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other * self

    def scale(self, s):
        return DualQuaternion(self.primal.scale(s), self.dual.scale(s))

    def conj(self):
        return DualQuaternion(self.primal.conj(), self.dual.conj())

    def norm(self) -> DualNumber:
        p, d = self.primal, self.dual
        return DualNumber(p.norm(), 2 * p.scalar_product(d))

    def is_invertible(self) -> bool:
        return bool(self.primal)

    def inverse(self):
        if not self.primal:
            raise NotInvertible(f"{self} has zero primal part")
        pi = self.primal.inverse()
        return DualQuaternion(pi, -(pi * self.dual * pi))

    def is_real(self) -> bool:
        return self.primal.is_real() and self.dual.is_real()

    def __bool__(self):
        return bool(self.primal) or bool(self.dual)

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return False
        return self.primal == other.primal and self.dual == other.dual

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DualQuaternion({self.primal!r}, {self.dual!r})"

    def __str__(self):
        if not self.dual:
            return str(self.primal)
        if not self.primal:
            return f"e*({self.dual})"
        return f"{self.primal} + e*({self.dual})"


def dq_mul(x: DualQuaternion, y: DualQuaternion) -> DualQuaternion:
    return x * y


def dq_conj(x: DualQuaternion) -> DualQuaternion:
    return x.conj()


def dq_norm(x: DualQuaternion) -> DualNumber:
    return x.norm()


class QuaternionPolynomial(QuaternionPolynomialBase):
    """Element of H[t]."""

    __slots__ = ()
    COEFF = Quaternion

    def norm(self) -> RealPolynomial:
        prod = self * self.conj()
        return prod.component(0)


class DualQuaternionPolynomial(QuaternionPolynomialBase):
    """Element of DH[t]."""

    __slots__ = ()
    COEFF = DualQuaternion

    @classmethod
    def _coerce_coeff(cls, x):
        if isinstance(x, (int, Fraction)):
            return DualQuaternion.scalar(x)
        if isinstance(x, CRational):
            return DualQuaternion.scalar(as_fraction(x))
        if isinstance(x, Quaternion):
            return DualQuaternion(x)
        if isinstance(x, (tuple, list)):
            return DualQuaternion.from_coeffs(x) if len(x) == 8 else DualQuaternion(Quaternion(*x))
        raise TypeError(f"cannot interpret {x!r} as a dual quaternion")

    def _coerce(self, other):
        if isinstance(other, QuaternionPolynomial):
            return self.from_parts(other, QuaternionPolynomial())
        if isinstance(other, Quaternion):
            return type(self)._raw([DualQuaternion(other)])
        return super()._coerce(other)

    @classmethod
    def from_parts(cls, primal, dual=None):
        primal = primal if isinstance(primal, QuaternionPolynomial) else QuaternionPolynomial(primal)
        dual = QuaternionPolynomial() if dual is None else dual
        dual = dual if isinstance(dual, QuaternionPolynomial) else QuaternionPolynomial(dual)
        n = max(len(primal.coeffs), len(dual.coeffs))
        zero = Quaternion()
        p = primal.coeffs + (zero,) * (n - len(primal.coeffs))
        d = dual.coeffs + (zero,) * (n - len(dual.coeffs))
        return cls._raw(DualQuaternion(a, b) for a, b in zip(p, d))

    @property
    def primal(self) -> QuaternionPolynomial:
        return QuaternionPolynomial._raw(c.primal for c in self.coeffs)

    @property
    def dual(self) -> QuaternionPolynomial:
        return QuaternionPolynomial._raw(c.dual for c in self.coeffs)

    def component(self, index: int) -> RealPolynomial:
        return RealPolynomial._raw(c.coeffs[index] for c in self.coeffs)

    def components(self) -> list[RealPolynomial]:
        return [self.component(u) for u in range(8)]

    def eval_right(self, x):
        x = self._coerce_coeff(x) if not isinstance(x, DualQuaternion) else x
        acc = DualQuaternion()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_left(self, x):
        x = self._coerce_coeff(x) if not isinstance(x, DualQuaternion) else x
        acc = DualQuaternion()
        for c in reversed(self.coeffs):
            acc = x * acc + c
        return acc

    def norm(self) -> RealPolynomial:
        """``P conj(P)`` of the primal part; equals the full norm when the Study condition holds."""
        return self.primal.norm()

    def __str__(self):
        p, d = self.primal, self.dual
        if d.is_zero():
            return str(p)
        ds = str(d.coeffs[0]) if d.degree == 0 else str(d)
        if p.is_zero():
            return f"e*({ds})"
        return f"{p} + e*({ds})"


MotionPolynomial = DualQuaternionPolynomial


def study_check(m) -> bool:
    """Whether ``P conj(D) + D conj(P)`` vanishes identically."""
    if isinstance(m, QuaternionPolynomial):
        return True
    p, d = m.primal, m.dual
    return (p * d.conj() + d * p.conj()).is_zero()


@dataclass(frozen=True)
class SpecialCase:
    """``rem(M, N) = e R'``: the remainder has no unique zero."""

    quadratic: QuadraticFactor
    remainder: DualQuaternionPolynomial

    def __str__(self):
        return f"rem(M, {self.quadratic}) = {self.remainder} has zero primal part"


def _linear_dq(x: DualQuaternion) -> DualQuaternionPolynomial:
    return DualQuaternionPolynomial.linear(x)


def _check_side(side):
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def motion_factor_step(m: DualQuaternionPolynomial, n, side: str = "right"):
    """Linear ``side`` factor ``t - x`` of ``m`` with norm ``n``, or a :class:`SpecialCase`."""
    _check_side(side)
    n = n if isinstance(n, QuadraticFactor) else QuadraticFactor.from_polynomial(n)
    if isinstance(m, QuaternionPolynomial):
        m = DualQuaternionPolynomial.from_parts(m)
    r = m.rem(n.polynomial)
    if r.is_zero():
        raise ValueError(f"{n} divides {m}; the polynomial is not reduced")
    if r.primal.is_zero():
        return SpecialCase(n, r)
    if r.degree < 1 or not r.coeffs[1].is_invertible():
        raise NotGeneric(f"rem(M, {n}) = {r} has no unique {side} zero", r)
    r1, r0 = r.coeffs[1], r.coeffs[0]
    x = -(r1.inverse() * r0) if side == "right" else -(r0 * r1.inverse())
    return _linear_dq(x)


@dataclass(frozen=True)
class ZeroFamily:
    """``base + e * sum(params[u] * directions[u])``: common ``side`` zeros of ``N`` and ``R``
    that satisfy the Study condition."""

    base: DualQuaternion
    directions: tuple[Quaternion, ...]
    side: str
    quadratic: QuadraticFactor
    remainder: DualQuaternionPolynomial

    @property
    def names(self) -> tuple[str, ...]:
        return PARAM_NAMES[: len(self.directions)]

    def member(self, params=None) -> DualQuaternion:
        values = _param_values(params, self.names)
        d = Quaternion()
        for v, e in zip(values, self.directions):
            d = d + e.scale(v)
        return self.base + DualQuaternion(Quaternion(), d)

    def contains(self, x: DualQuaternion) -> bool:
        n, r = self.quadratic, self.remainder
        on_r = r.eval_right(x) if self.side == "right" else r.eval_left(x)
        study = _linear_dq(x) * _linear_dq(x.conj())
        return not on_r and not (x * x + x.scale(n.b) + n.c) and all(c.is_real() for c in study.coeffs)

    def __str__(self):
        terms = " + ".join(f"{name}*({e})" for name, e in zip(self.names, self.directions))
        return f"{self.base.primal} + e*({terms or '0'})"


def _param_values(params, names) -> list[Fraction]:
    if params is None:
        return [Fraction(0)] * len(names)
    if isinstance(params, dict):
        unknown = set(params) - set(names)
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)}; family has {list(names)}")
        return [as_fraction(params.get(name, 0)) for name in names]
    values = [as_fraction(v) for v in params]
    if len(values) != len(names):
        raise ValueError(f"expected {len(names)} parameter values, got {len(values)}")
    return values


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the rational kernel, one vector per free column (reduced row echelon form)."""
    m = [list(r) for r in rows]
    pivots = []
    row = 0
    for col in range(ncols):
        pr = next((r for r in range(row, len(m)) if m[r][col]), None)
        if pr is None:
            continue
        m[row], m[pr] = m[pr], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][free]
        basis.append(v)
    return basis


def special_zero_family(n, r: DualQuaternionPolynomial, side: str = "left") -> ZeroFamily:
    """
    Common ``side`` zeros ``q + e d`` of ``n`` and ``r = e R'`` whose linear
    factor ``t - q - e d`` satisfies the Study condition.

    ``q`` is the unique zero of ``R'``; ``d`` ranges over the kernel of the
    linear conditions ``q d + d q + b d = 0``, ``d + conj(d) = 0`` and
    ``q conj(d) + d conj(q) = 0``.
    """
    _check_side(side)
    n = n if isinstance(n, QuadraticFactor) else QuadraticFactor.from_polynomial(n)
    if not r.primal.is_zero():
        raise ValueError(f"{r} has a nonzero primal part")
    rp = r.dual
    if rp.degree != 1:
        raise EmptyIntersection(f"{rp} has no unique {side} zero")
    r1, r0 = rp.coeffs[1], rp.coeffs[0]
    q = -(r1.inverse() * r0) if side == "right" else -(r0 * r1.inverse())
    if q * q + q.scale(n.b) + n.c:
        raise EmptyIntersection(f"the zero {q} of {rp} is not a zero of {n}")
    units = [Quaternion.unit(u) for u in range(4)]
    images = []
    for e in units:
        cyl = q * e + e * q + e.scale(n.b)
        study = q * e.conj() + e * q.conj()
        images.append(list(cyl.coeffs) + [e.h0, study.h0])
    rows = [[images[col][eq] for col in range(4)] for eq in range(6)]
    basis = _nullspace(rows, 4)
    directions = tuple(Quaternion(*v) for v in basis)
    if len(directions) > len(PARAM_NAMES):  # pragma: no cover - kernel has dimension at most 3
        raise Unsupported("family has too many free parameters")
    return ZeroFamily(DualQuaternion(q), directions, side, n, r)


@dataclass(frozen=True)
class MotionFactorization:
    factors: tuple[DualQuaternionPolynomial, ...]
    family: ZeroFamily | None = None
    params: tuple[Fraction, ...] = ()

    def product(self) -> DualQuaternionPolynomial:
        out = DualQuaternionPolynomial([1])
        for f in self.factors:
            out = out * f
        return out

    def __str__(self):
        return "".join(f"({f})" for f in self.factors) or "1"


def motion_factorize(m, f: Sequence | None = None, params=None) -> MotionFactorization:
    """
    Factor a monic motion polynomial into linear motion-polynomial factors.

    Right factors come from generic remainders.  At most one special
    remainder ``e R'`` is handled, by a left factor from
    :func:`special_zero_family` (right family as fallback) evaluated at
    ``params``.
    """
    if isinstance(m, QuaternionPolynomial):
        m = DualQuaternionPolynomial.from_parts(m)
    if not m.is_monic():
        raise ValueError(f"{m} is not monic")
    if not study_check(m):
        raise ValueError(f"{m} violates the Study condition")
    norm = m.norm()
    if norm.is_zero():
        raise NormIdenticallyZero(f"{m} has zero norm polynomial")
    if f is None:
        f = factor_tuples(norm, limit=1)[0]
    f = [x if isinstance(x, QuadraticFactor) else QuadraticFactor.from_polynomial(x) for x in f]
    left: list[DualQuaternionPolynomial] = []
    right: list[DualQuaternionPolynomial] = []
    family = None
    values: tuple = ()
    while m.degree > 0:
        n = f.pop()
        step = motion_factor_step(m, n, "right")
        if not isinstance(step, SpecialCase):
            m, rem = m.divmod_left(step)
            assert rem.is_zero(), f"{step} is not a right factor"
            right.insert(0, step)
            continue
        if family is not None:
            raise Unsupported(f"second special remainder at {n}: {step.remainder}")
        try:
            family = special_zero_family(n, step.remainder, "left")
        except EmptyIntersection:
            family = special_zero_family(n, step.remainder, "right")
        values = tuple(_param_values(params, family.names))
        h = _linear_dq(family.member(values))
        if family.side == "left":
            m, rem = m.divmod_right(h)
            left.append(h)
        else:
            m, rem = m.divmod_left(h)
            right.insert(0, h)
        if not rem.is_zero():
            raise EmptyIntersection(f"{h} does not divide the motion polynomial")
    return MotionFactorization(tuple(left + right), family, values)
