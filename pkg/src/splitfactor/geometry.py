"""
Geometry of the null quadric: what a linear remainder polynomial
parametrizes, zero sets on rulings, and Clifford translations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import SplitQuaternion
from .errors import (
    AnnihilatedToZero,
    InternalAmbiguity,
    NoCommonZero,
    NotGeneric,
    NotOnCommonRuling,
    ZeroPolynomialError,
)
from .poly import SplitPolynomial
from .realpoly import QuadraticFactor

__all__ = [
    "AffineZeroPlane",
    "LineClass",
    "LineKind",
    "affine_zero_plane",
    "classify_line",
    "clifford_translate",
    "common_zero_on_ruling",
    "linearly_dependent",
    "unique_left_zero",
    "unique_right_zero",
]

_I = SplitQuaternion(0, 1, 0, 0)


class LineKind(enum.Enum):
    NON_NULL_LINE = "non-null line"
    LEFT_RULING = "left ruling"
    RIGHT_RULING = "right ruling"
    POINT_ON_QUADRIC = "point on quadric"
    POINT_OFF_QUADRIC = "point off quadric"


@dataclass(frozen=True)
class LineClass:
    kind: LineKind
    point: SplitQuaternion | None = None

    @property
    def is_point(self) -> bool:
        return self.kind in (LineKind.POINT_ON_QUADRIC, LineKind.POINT_OFF_QUADRIC)

    def __str__(self):
        if self.point is not None:
            return f"{self.kind.value} [{self.point}]"
        return self.kind.value


def linearly_dependent(a, b) -> bool:
    """Whether two quaternions span at most a line (all 2x2 minors vanish)."""
    x, y = a.coeffs, b.coeffs
    for u in range(4):
        for v in range(u + 1, 4):
            if x[u] * y[v] - x[v] * y[u]:
                return False
    return True


def _linear_coeffs(r: SplitPolynomial):
    if r.degree > 1:
        raise ValueError(f"expected a polynomial of degree at most one, got {r}")
    zero = SplitQuaternion()
    r0 = r.coeffs[0] if r.degree >= 0 else zero
    r1 = r.coeffs[1] if r.degree >= 1 else zero
    return r1, r0


def classify_line(r: SplitPolynomial) -> LineClass:
    """
    Classify ``R = r1 t + r0``: a single point when the coefficients are
    dependent, otherwise a non-null line or a left/right ruling.
    """
    if r.is_zero():
        raise ZeroPolynomialError("the zero polynomial parametrizes nothing")
    r1, r0 = _linear_coeffs(r)
    if linearly_dependent(r0, r1):
        point = r1 if r1 else r0
        if point.norm():
            return LineClass(LineKind.POINT_OFF_QUADRIC, point)
        return LineClass(LineKind.POINT_ON_QUADRIC, point)
    if not r.norm().is_zero():
        return LineClass(LineKind.NON_NULL_LINE)
    left = not (r1 * r0.conj())
    right = not (r1.conj() * r0)
    if left and right:
        raise InternalAmbiguity(f"{r} satisfies both ruling conditions")
    if left:
        return LineClass(LineKind.LEFT_RULING)
    if right:
        return LineClass(LineKind.RIGHT_RULING)
    raise InternalAmbiguity(f"{r} is a null line on neither ruling family")  # pragma: no cover


def unique_right_zero(r: SplitPolynomial) -> SplitQuaternion:
    r1, r0 = _linear_coeffs(r)
    if not r1.is_invertible():
        raise NotGeneric(f"leading coefficient of {r} is not invertible", r)
    return -(r1.inverse() * r0)


def unique_left_zero(r: SplitPolynomial) -> SplitQuaternion:
    r1, r0 = _linear_coeffs(r)
    if not r1.is_invertible():
        raise NotGeneric(f"leading coefficient of {r} is not invertible", r)
    return -(r0 * r1.inverse())


@dataclass(frozen=True)
class AffineZeroPlane:
    """``{base + lam * directions[0] + mu * directions[1]}``, all solutions of
    ``g = x h`` (side ``"left"``) or ``g = h x`` (side ``"right"``)."""

    base: SplitQuaternion
    directions: tuple[SplitQuaternion, SplitQuaternion]
    side: str
    h: SplitQuaternion
    g: SplitQuaternion

    def point(self, lam, mu) -> SplitQuaternion:
        d1, d2 = self.directions
        return self.base + d1.scale(lam) + d2.scale(mu)

    def satisfies(self, x: SplitQuaternion) -> bool:
        return (x * self.h if self.side == "left" else self.h * x) == self.g


def _check_side(side: str):
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def affine_zero_plane(h: SplitQuaternion, g: SplitQuaternion, side: str) -> AffineZeroPlane:
    """Solutions of ``g = x h`` (left) or ``g = h x`` (right) for ``[h], [g]`` on a common ruling."""
    _check_side(side)
    if type(h) is not SplitQuaternion or type(g) is not SplitQuaternion:
        raise TypeError("affine zero planes are only supported for rational split quaternions")
    if not h or not g:
        raise NotOnCommonRuling("both quaternions must be nonzero")
    if h.norm():
        raise NotOnCommonRuling(f"{h} is not on the null cone")
    if side == "left" and g * h.conj():
        raise NotOnCommonRuling(f"[{h}] and [{g}] do not span a left ruling")
    if side == "right" and h.conj() * g:
        raise NotOnCommonRuling(f"[{h}] and [{g}] do not span a right ruling")
    h01 = SplitQuaternion(h.h0, h.h1)
    g01 = SplitQuaternion(g.h0, g.h1)
    # h0 = h1 = 0 on the null cone would force h2^2 + h3^2 = 0
    assert h01.norm(), "h0 + h1 i vanishes for a nonzero null quaternion"
    hc = h.conj()
    if side == "left":
        base = g01 * h01.inverse()
        dirs = (hc, _I * hc)
    else:
        base = h01.inverse() * g01
        dirs = (hc, hc * _I)
    return AffineZeroPlane(base, dirs, side, h, g)


def _solve2(a11, a12, a21, a22, b1, b2):
    det = a11 * a22 - a12 * a21
    if not det:
        return None
    return (b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det


def _is_common_zero(n: QuadraticFactor, r: SplitPolynomial, x: SplitQuaternion, side: str) -> bool:
    on_r = r.eval_right(x) if side == "right" else r.eval_left(x)
    return not on_r and not n(x)


def common_zero_on_ruling(n: QuadraticFactor, r: SplitPolynomial, side: str) -> SplitQuaternion:
    """
    The unique common ``side`` zero ``h`` of ``n`` and ``r``.

    For a ruling the zeros of ``r`` form an affine plane whose directions
    span a totally isotropic subspace; on it ``n(h) = 0`` reduces to the two
    linear conditions ``Sc(h) = -b/2`` and ``h conj(h) = c``.
    """
    _check_side(side)
    if not isinstance(n, QuadraticFactor):
        n = QuadraticFactor.from_polynomial(n)
    cls = classify_line(r)
    if cls.kind is LineKind.NON_NULL_LINE:
        x = unique_right_zero(r) if side == "right" else unique_left_zero(r)
    elif (cls.kind is LineKind.RIGHT_RULING and side == "right") or (
        cls.kind is LineKind.LEFT_RULING and side == "left"
    ):
        r1, r0 = _linear_coeffs(r)
        plane = affine_zero_plane(r1, -r0, side)
        u = plane.base
        d1, d2 = plane.directions
        assert not (d1.norm() or d2.norm() or d1.scalar_product(d2))
        sol = _solve2(
            d1.h0, d2.h0,
            2 * u.scalar_product(d1), 2 * u.scalar_product(d2),
            -n.b / 2 - u.h0,
            n.c - u.norm(),
        )
        if sol is None:
            raise NoCommonZero(f"degenerate system for {n} and {r} ({side})")
        x = plane.point(*sol)
    else:
        raise NoCommonZero(f"{r} parametrizes a {cls}; no unique {side} zero")
    if not _is_common_zero(n, r, x, side):
        raise NoCommonZero(f"{x} is not a common {side} zero of {n} and {r}")
    return x


def clifford_translate(g: SplitQuaternion, x: SplitQuaternion, side: str) -> SplitQuaternion:
    """``g x`` (left translation) or ``x g`` (right translation) as a projective point."""
    _check_side(side)
    y = g * x if side == "left" else x * g
    if not y:
        raise AnnihilatedToZero(f"{x} is annihilated by the {side} translation with {g}")
    return y

