"""
Polynomials in a central indeterminate ``t`` over a quaternion algebra.

:class:`QuaternionPolynomialBase` is coefficient-agnostic; the split,
complexified split, Hamiltonian and dual-quaternion rings are thin
subclasses that only name their coefficient class.

Division conventions: *right* division of ``P`` by ``G`` yields ``P = G Q + R``,
*left* division yields ``P = Q G + R``.  ``t - h`` is a right factor of ``P``
exactly when ``h`` is a right zero, i.e. when ``lrem(P, t - h) == 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import ClassVar

from .algebra import CRational, ComplexSplitQuaternion, SplitQuaternion, as_fraction
from .errors import DivisorLeadingCoefficientNotInvertible, NormIdenticallyZero
from .realpoly import RealPolynomial, real_gcd

__all__ = [
    "ComplexSplitPolynomial",
    "MobiusRecord",
    "QuaternionPolynomialBase",
    "SplitPolynomial",
    "from_json",
    "linear",
    "p_conj",
    "p_divide",
    "p_eval_left",
    "p_eval_right",
    "p_monicize",
    "p_mul",
    "p_norm",
    "p_quo",
    "p_reduce",
    "p_rem",
    "to_json",
]


class QuaternionPolynomialBase:
    """Immutable polynomial with quaternion coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    COEFF: ClassVar[type]

    def __init__(self, coeffs=()):
        cls = self.COEFF
        c = [x if type(x) is cls else self._coerce_coeff(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _coerce_coeff(cls, x):
        if isinstance(x, (int, Fraction, CRational)):
            return cls.COEFF.scalar(x)
        if isinstance(x, (tuple, list)):
            return cls.COEFF(*x)
        return cls.COEFF(*x.coeffs)

    @classmethod
    def _raw(cls, coeffs):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def from_real(cls, p: RealPolynomial):
        return cls._raw(cls.COEFF.scalar(c) for c in p.coeffs)

    @classmethod
    def constant(cls, q):
        return cls([q])

    @classmethod
    def t(cls):
        return cls._raw([cls.COEFF.scalar(0), cls.COEFF.scalar(1)])

    @classmethod
    def linear(cls, h):
        """The monic linear polynomial ``t - h``."""
        if not isinstance(h, cls.COEFF):
            h = cls._coerce_coeff(h)
        return cls._raw([-h, cls.COEFF.scalar(1)])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.COEFF.scalar(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.COEFF.scalar(1)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, RealPolynomial):
            return self.from_real(other)
        if isinstance(other, (int, Fraction, CRational)):
            return type(self)([other])
        if isinstance(other, self.COEFF):
            return type(self)._raw([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(-c for c in self.coeffs)

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

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._raw(c.scale(other) for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._raw(())
        zero = self.COEFF.scalar(0)
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return self._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int):
        result = type(self)([1])
        for _ in range(n):
            result = result * self
        return result

    def scale(self, s):
        return self._raw(c.scale(s) for c in self.coeffs)

    def conj(self):
        return self._raw(c.conj() for c in self.coeffs)

    def component(self, index: int) -> RealPolynomial:
        return RealPolynomial._raw(as_fraction(c.coeffs[index]) for c in self.coeffs)

    def components(self) -> list[RealPolynomial]:
        return [self.component(u) for u in range(4)]

    @classmethod
    def from_components(cls, comps):
        n = max((len(c.coeffs) for c in comps), default=0)
        rows = []
        for d in range(n):
            rows.append(cls.COEFF(*(c.coeffs[d] if d < len(c.coeffs) else 0 for c in comps)))
        return cls._raw(rows)

    def eval_right(self, h):
        """``sum p_l h^l``: t is moved right of the coefficients, then replaced."""
        h = self._eval_arg(h)
        acc = h.scalar(0) if hasattr(h, "scalar") else h * 0
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    def eval_left(self, h):
        """``sum h^l p_l``."""
        h = self._eval_arg(h)
        acc = h.scalar(0) if hasattr(h, "scalar") else h * 0
        for c in reversed(self.coeffs):
            acc = h * acc + c
        return acc

    def _eval_arg(self, h):
        if isinstance(h, (int, Fraction)):
            return self.COEFF.scalar(h)
        if isinstance(h, CRational):
            return self._complex_coeff().scalar(h)
        return h

    def _complex_coeff(self):
        return ComplexSplitQuaternion

    def __call__(self, x):
        """Evaluate at a central scalar (rational or Gaussian rational)."""
        return self.eval_right(x)

    def _divide(self, g, side: str):
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = g.leading
        try:
            lead_inv = lead.inverse()
        except ArithmeticError as exc:
            raise DivisorLeadingCoefficientNotInvertible(
                f"leading coefficient {lead} of the divisor is not invertible"
            ) from exc
        rem = list(self.coeffs)
        dg = g.degree
        zero = self.COEFF.scalar(0)
        if len(rem) <= dg:
            return self._raw(()), self
        quo = [zero] * (len(rem) - dg)
        for k in range(len(rem) - 1 - dg, -1, -1):
            r = rem[k + dg]
            if not r:
                continue
            if side == "right":
                q = lead_inv * r
                for i, b in enumerate(g.coeffs):
                    rem[k + i] = rem[k + i] - b * q
            else:
                q = r * lead_inv
                for i, b in enumerate(g.coeffs):
                    rem[k + i] = rem[k + i] - q * b
            quo[k] = q
        return self._raw(quo), self._raw(rem[:dg])

    def divmod_right(self, g):
        """``(Q, R)`` with ``self = g Q + R``."""
        return self._divide(g, "right")

    def divmod_left(self, g):
        """``(Q, R)`` with ``self = Q g + R``."""
        return self._divide(g, "left")

    def rquo(self, g):
        return self._divide(g, "right")[0]

    def rrem(self, g):
        return self._divide(g, "right")[1]

    def lquo(self, g):
        return self._divide(g, "left")[0]

    def lrem(self, g):
        return self._divide(g, "left")[1]

    def quo(self, g: RealPolynomial):
        return self._divide(g, "left")[0]

    def rem(self, g: RealPolynomial):
        return self._divide(g, "left")[1]

    def __eq__(self, other):
        if isinstance(other, QuaternionPolynomialBase):
            return self.COEFF.TABLE == other.COEFF.TABLE and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == type(self)([other]).coeffs
        if isinstance(other, RealPolynomial):
            return self == self.from_real(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        from .printing import format_polynomial

        return format_polynomial(self)


class SplitPolynomial(QuaternionPolynomialBase):
    """Element of S[t]."""

    __slots__ = ()
    COEFF = SplitQuaternion

    def norm(self) -> RealPolynomial:
        """The real norm polynomial ``P conj(P)``."""
        prod = self * self.conj()
        for c in prod.coeffs:
            if not c.is_real():
                raise AssertionError(f"norm polynomial has a vector part: {prod}")
        return prod.component(0)

    def complexify(self) -> "ComplexSplitPolynomial":
        return ComplexSplitPolynomial._raw(ComplexSplitQuaternion.from_real(c) for c in self.coeffs)


class ComplexSplitPolynomial(QuaternionPolynomialBase):
    __slots__ = ()
    COEFF = ComplexSplitQuaternion

    def bar(self) -> "ComplexSplitPolynomial":
        return self._raw(c.bar() for c in self.coeffs)


def linear(h) -> SplitPolynomial:
    return SplitPolynomial.linear(h)


def p_mul(p, q):
    return p * q


def p_conj(p):
    return p.conj()


def p_norm(p: SplitPolynomial) -> RealPolynomial:
    return p.norm()


def p_eval_right(p, h):
    return p.eval_right(h)


def p_eval_left(p, h):
    return p.eval_left(h)


def p_divide(p, g, side: str = "right"):
    """``(quotient, remainder)``; ``side="right"`` means ``p = g Q + R``."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return p._divide(g, side)


def p_rem(p, g: RealPolynomial):
    return p.rem(g)


def p_quo(p, g: RealPolynomial):
    return p.quo(g)


def p_reduce(p: SplitPolynomial) -> tuple[SplitPolynomial, RealPolynomial]:
    """
    Split off the real content of ``p``.

    The content is the monic gcd of the four component polynomials.  A
    non-real complex factor ``C`` of ``p`` forces ``conj(C)`` to divide it as
    well, so removing the real content also removes all complex content.
    """
    if p.is_zero():
        raise ValueError("cannot reduce the zero polynomial")
    g = RealPolynomial()
    for comp in p.components():
        g = real_gcd(g, comp) if not g.is_zero() else comp.monic()
        if g.degree == 0:
            break
    if g.degree <= 0:
        return p, RealPolynomial([1])
    reduced = type(p).from_components([c // g for c in p.components()])
    return reduced, g


@dataclass(frozen=True)
class MobiusRecord:
    """Substitution ``t = t0 + 1/s`` applied before monicization; ``None`` means identity."""

    t0: Fraction | None = None

    @property
    def identity(self) -> bool:
        return self.t0 is None

    def __str__(self):
        return "identity" if self.t0 is None else f"t = {self.t0} + 1/s"


def _t0_candidates():
    yield Fraction(0)
    for n in count(1):
        yield Fraction(n)
        yield Fraction(-n)


def p_monicize(p: SplitPolynomial) -> tuple[SplitPolynomial, MobiusRecord]:
    """
    Make ``p`` monic.

    With an invertible leading coefficient this is a left multiplication by
    its inverse.  Otherwise ``t = t0 + 1/s`` is substituted for the first
    ``t0`` in 0, 1, -1, 2, -2, ... with ``norm(p)(t0) != 0``; the leading
    coefficient of ``s^n p(t0 + 1/s)`` is then ``p(t0)``, which is invertible.
    """
    norm = p.norm()
    if norm.is_zero():
        raise NormIdenticallyZero(f"{p} has identically zero norm polynomial")
    lead = p.leading
    if lead.is_invertible():
        return type(p)._raw(lead.inverse() * c for c in p.coeffs), MobiusRecord()
    t0 = next(x for x in _t0_candidates() if norm(x))
    n = p.degree
    # s^n p(t0 + 1/s) = sum_l p_l (t0 s + 1)^l s^(n - l)
    lin = RealPolynomial([1, t0])
    s = RealPolynomial.t()
    out = type(p)._raw(())
    for ell, c in enumerate(p.coeffs):
        out = out + (lin ** ell * s ** (n - ell)) * type(p).constant(c)
    inv = p.eval_right(t0).inverse()
    return type(p)._raw(inv * c for c in out.coeffs), MobiusRecord(t0)


def to_json(p: QuaternionPolynomialBase) -> dict:
    return {"coeffs": [[str(Fraction(x)) for x in c.coeffs] for c in p.coeffs]}


def from_json(data, cls=SplitPolynomial):
    if isinstance(data, str):
        data = json.loads(data)
    return cls([cls.COEFF(*(Fraction(x) for x in row)) for row in data["coeffs"]])
