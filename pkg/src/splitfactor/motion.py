"""Hyperbolic-plane kinematics: rotations, quadrance, sampled trajectories."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .algebra import SplitQuaternion, as_fraction
from .errors import NormIdenticallyZero, NotInvertible, PointOnNullCircle
from .poly import SplitPolynomial

__all__ = [
    "HPoint",
    "INFINITY",
    "TrajectorySample",
    "quadrance",
    "rotate",
    "trajectory_sample",
    "trajectory_csv",
    "write_trajectory_csv",
]

INFINITY = "inf"


@dataclass(frozen=True, eq=False)
class HPoint:
    """Projective point ``[x]`` with ``Sc(x) = 0``; equality is up to scaling."""

    representative: SplitQuaternion

    def __post_init__(self):
        x = self.representative
        if not isinstance(x, SplitQuaternion):
            object.__setattr__(self, "representative", SplitQuaternion(*x))
            x = self.representative
        if x.h0:
            raise ValueError(f"{x} has nonzero scalar part")
        if not x:
            raise ValueError("the zero vector is not a point")

    @property
    def vector(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.representative.coeffs[1:]

    def normalized(self) -> SplitQuaternion:
        """Representative with first nonzero component equal to 1."""
        x = self.representative
        lead = next(c for c in x.coeffs if c)
        return x.scale(1 / lead)

    def on_null_circle(self) -> bool:
        return not self.representative.norm()

    def __eq__(self, other):
        if not isinstance(other, HPoint):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __str__(self):
        return f"[{self.representative}]"


def _point(x) -> HPoint:
    return x if isinstance(x, HPoint) else HPoint(x)


def rotate(h: SplitQuaternion, x) -> HPoint:
    """``[h x conj(h)]``."""
    if not h.norm():
        raise NotInvertible(f"{h} is not invertible")
    x = _point(x)
    return HPoint(h * x.representative * h.conj())


def quadrance(v, w) -> Fraction:
    """``1 - <v,w>^2 / (<v,v><w,w>)``; independent of the representatives."""
    a, b = _point(v).representative, _point(w).representative
    vv, ww = a.scalar_product(a), b.scalar_product(b)
    if not vv or not ww:
        raise PointOnNullCircle("quadrance is undefined for points on the null circle")
    vw = a.scalar_product(b)
    return 1 - vw * vw / (vv * ww)


@dataclass(frozen=True)
class TrajectorySample:
    """One sample; ``point`` is ``None`` when ``P x conj(P)`` vanishes (removable)."""

    t: Fraction | str
    point: HPoint | None

    @property
    def removable(self) -> bool:
        return self.point is None


def _parse_t(t):
    if isinstance(t, str) and t.strip().lower() in ("inf", "infinity", "∞"):
        return INFINITY
    return as_fraction(t)


def trajectory_sample(p: SplitPolynomial, x, ts: Iterable) -> list[TrajectorySample]:
    """Sample ``[P(t) x conj(P(t))]``; ``"inf"`` uses the leading coefficient."""
    if p.norm().is_zero():
        raise NormIdenticallyZero(f"{p} has zero norm polynomial")
    rep = _point(x).representative
    out = []
    for t in ts:
        t = _parse_t(t)
        a = p.leading if t == INFINITY else p(t)
        y = a * rep * a.conj()
        out.append(TrajectorySample(t, HPoint(y) if y else None))
    return out


def write_trajectory_csv(samples: Sequence[TrajectorySample], stream: TextIO):
    """Columns ``t, h1, h2, h3, flag``; flag is ``ok`` or ``removable``."""
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["t", "h1", "h2", "h3", "flag"])
    for s in samples:
        if s.point is None:
            w.writerow([str(s.t), "", "", "", "removable"])
        else:
            w.writerow([str(s.t), *(str(c) for c in s.point.vector), "ok"])


def trajectory_csv(samples: Sequence[TrajectorySample]) -> str:
    buf = io.StringIO()
    write_trajectory_csv(samples, buf)
    return buf.getvalue()
