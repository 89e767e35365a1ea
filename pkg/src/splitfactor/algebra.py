"""
Exact split-quaternion arithmetic.

Scalars are :class:`fractions.Fraction`; the complexified variant uses
:class:`CRational`, a Gaussian rational ``re + im*I``.  Quaternion products
are driven by a structure-constant table derived once from the generating
relations of a quaternion algebra, so the Hamiltonian quaternions in
:mod:`splitfactor.euclid` reuse the same machinery with other signs.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import ClassVar

from .errors import NotInvertible

__all__ = [
    "CRational",
    "ComplexSplitQuaternion",
    "SplitQuaternion",
    "as_fraction",
    "csq_bar",
    "structure_table",
    "sq_conj",
    "sq_cross",
    "sq_inverse",
    "sq_mul",
    "sq_norm",
    "sq_scalar_part",
    "sq_scalar_product",
    "sq_vector_part",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    if isinstance(x, CRational):
        if x.im:
            raise TypeError(f"expected a real scalar, got {x}")
        return x.re
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class CRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @classmethod
    def coerce(cls, x) -> "CRational":
        if isinstance(x, CRational):
            return x
        return cls(x, 0)

    def __add__(self, other):
        other = _as_crational(other)
        if other is NotImplemented:
            return other
        return CRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_crational(other)
        if other is NotImplemented:
            return other
        return CRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_crational(other)
        if other is NotImplemented:
            return other
        return CRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_crational(other)
        if other is NotImplemented:
            return other
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("complex division by zero")
        return self * CRational(other.re / d, -other.im / d)

    def __rtruediv__(self, other):
        return CRational.coerce(other) / self

    def conjugate(self) -> "CRational":
        return CRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _as_crational(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"CRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}I)"


def _as_crational(x):
    if isinstance(x, CRational):
        return x
    if isinstance(x, (int, Fraction)):
        return CRational(x, 0)
    return NotImplemented


def structure_table(i_square: int, j_square: int):
    """
    Multiplication table of the quaternion algebra with i^2 = a, j^2 = b, k = ij.

    Entry ``[u][v]`` is ``(sign, w)`` meaning ``e_u * e_v = sign * e_w``.
    """
    a, b = i_square, j_square
    # e0 = 1, e1 = i, e2 = j, e3 = k = ij
    return (
        ((1, 0), (1, 1), (1, 2), (1, 3)),
        ((1, 1), (a, 0), (1, 3), (a, 2)),      # i*j = k, i*k = a*j
        ((1, 2), (-1, 3), (b, 0), (-b, 1)),    # j*i = -k, j*k = -b*i
        ((1, 3), (-a, 2), (b, 1), (-a * b, 0)),  # k*i = -a*j, k*j = b*i, k^2 = -ab
    )


class _QuaternionBase:
    """Immutable 4-component element of a table-driven quaternion algebra."""

    __slots__ = ("_c",)

    TABLE: ClassVar[tuple]
    # sign of each squared component in h * conj(h)
    NORM_SIGNS: ClassVar[tuple]
    UNIT_NAMES: ClassVar[tuple] = ("", "i", "j", "k")

    def __init__(self, h0=0, h1=0, h2=0, h3=0):
        co = self._coerce
        self._c = (co(h0), co(h1), co(h2), co(h3))

    @staticmethod
    def _coerce(x):
        return as_fraction(x)

    @classmethod
    def _from_tuple(cls, c):
        obj = object.__new__(cls)
        obj._c = c
        return obj

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        table = cls.__dict__.get("TABLE")
        if table is not None:
            cls.NORM_SIGNS = tuple(
                1 if u == 0 else -table[u][u][0] for u in range(4)
            )

    @classmethod
    def scalar(cls, x):
        return cls(x, 0, 0, 0)

    @classmethod
    def unit(cls, index: int):
        c = [0, 0, 0, 0]
        c[index] = 1
        return cls(*c)

    @property
    def h0(self):
        return self._c[0]

    @property
    def h1(self):
        return self._c[1]

    @property
    def h2(self):
        return self._c[2]

    @property
    def h3(self):
        return self._c[3]

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __iter__(self):
        return iter(self._c)

    def __getitem__(self, index):
        return self._c[index]

    def _wrap(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Fraction, CRational)):
            return type(self).scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        return self._from_tuple((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        return self._from_tuple((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        a = self._c
        return self._from_tuple((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = [0, 0, 0, 0]
        table = self.TABLE
        b = other._c
        for u, x in enumerate(self._c):
            if not x:
                continue
            row = table[u]
            for v, y in enumerate(b):
                if not y:
                    continue
                sign, w = row[v]
                out[w] += sign * x * y
        co = self._coerce
        return self._from_tuple(tuple(co(x) for x in out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(other)
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CRational)):
            return self.scale(1 / self._coerce(other))
        return NotImplemented

    def scale(self, s):
        s = self._coerce(s)
        a = self._c
        return self._from_tuple((a[0] * s, a[1] * s, a[2] * s, a[3] * s))

    def conj(self):
        a = self._c
        return self._from_tuple((a[0], -a[1], -a[2], -a[3]))

    def norm(self):
        """The quadratic form ``h * conj(h)``; may be negative or zero."""
        a = self._c
        s = self.NORM_SIGNS
        return s[0] * a[0] * a[0] + s[1] * a[1] * a[1] + s[2] * a[2] * a[2] + s[3] * a[3] * a[3]

    def is_invertible(self) -> bool:
        return bool(self.norm())

    def inverse(self):
        n = self.norm()
        if not n:
            raise NotInvertible(f"{self} has zero norm")
        return self.conj().scale(1 / n)

    def scalar_part(self):
        return self._c[0]

    def vector_part(self):
        a = self._c
        zero = self._coerce(0)
        return self._from_tuple((zero, a[1], a[2], a[3]))

    def is_real(self) -> bool:
        return not (self._c[1] or self._c[2] or self._c[3])

    def scalar_product(self, other):
        """Symmetric bilinear form ``(h conj(g) + g conj(h)) / 2``."""
        a, b = self._c, other._c
        s = self.NORM_SIGNS
        return s[0] * a[0] * b[0] + s[1] * a[1] * b[1] + s[2] * a[2] * b[2] + s[3] * a[3] * b[3]

    def cross(self, other):
        return (self * other - other * self).scale(Fraction(1, 2))

    def __bool__(self):
        return any(self._c)

    def __eq__(self, other):
        if isinstance(other, _QuaternionBase):
            return type(self).TABLE == type(other).TABLE and self._c == other._c
        if isinstance(other, (int, Fraction, CRational)):
            return self._c == type(self).scalar(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(x) for x in self._c)})"

    def __str__(self):
        from .printing import format_quaternion

        return format_quaternion(self)


class SplitQuaternion(_QuaternionBase):
    """``h0 + h1 i + h2 j + h3 k`` with i^2 = -1, j^2 = k^2 = 1, ijk = 1."""

    __slots__ = ()
    TABLE = structure_table(-1, 1)


class ComplexSplitQuaternion(SplitQuaternion):
    """Split quaternion with Gaussian-rational coefficients.

    ``conj`` acts on the quaternion units only; :meth:`bar` conjugates the
    complex coefficients.
    """

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        return CRational.coerce(x) if not isinstance(x, str) else CRational(x)

    @classmethod
    def from_real(cls, h: SplitQuaternion) -> "ComplexSplitQuaternion":
        return cls(*h.coeffs)

    def _wrap(self, other):
        if isinstance(other, SplitQuaternion) and not isinstance(other, ComplexSplitQuaternion):
            return ComplexSplitQuaternion.from_real(other)
        return super()._wrap(other)

    def bar(self) -> "ComplexSplitQuaternion":
        return self._from_tuple(tuple(x.conjugate() for x in self._c))

    def real_part(self) -> SplitQuaternion:
        return SplitQuaternion(*(x.re for x in self._c))

    def imag_part(self) -> SplitQuaternion:
        return SplitQuaternion(*(x.im for x in self._c))


# Functional spellings of the algebra operations.

def sq_mul(a, b):
    return a * b


def sq_conj(h):
    return h.conj()


def sq_norm(h):
    return h.norm()


def sq_scalar_part(h):
    return h.scalar_part()


def sq_vector_part(h):
    return h.vector_part()


def sq_inverse(h):
    return h.inverse()


def sq_scalar_product(h, g):
    return h.scalar_product(g)


def sq_cross(h, g):
    return h.cross(g)


def csq_bar(h: ComplexSplitQuaternion) -> ComplexSplitQuaternion:
    return h.bar()


I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)
ONE = SplitQuaternion(1, 0, 0, 0)
