"""Exact Gaussian rationals Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


_FZERO = Fraction(0)


class QQi:
    """An element ``re + im*I`` of Q(i) with both parts stored as reduced Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QQi is immutable")

    @classmethod
    def coerce(cls, value) -> "QQi":
        if isinstance(value, QQi):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(value)

    # -- predicates ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return _mk(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "QQi":
        return _mk(-self.re, -self.im)

    def __sub__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return _mk(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return _mk(self.re * o.re, _FZERO)
        return _mk(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "QQi":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        if not self.im:
            return _mk(1 / self.re, _FZERO)
        norm = self.re * self.re + self.im * self.im
        return _mk(self.re / norm, -self.im / norm)

    def __truediv__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QQi":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "QQi":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QQi":
        return _mk(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"QQi({self.re}, {self.im})"

    def __str__(self) -> str:
        return format_scalar(self)


_new = object.__new__
_set = object.__setattr__


def _mk(re: Fraction, im: Fraction) -> "QQi":
    obj = _new(QQi)
    _set(obj, "re", re)
    _set(obj, "im", im)
    return obj


def _coerce_or_none(value):
    if isinstance(value, QQi):
        return value
    if isinstance(value, Fraction):
        return _mk(value, _FZERO)
    if isinstance(value, int):
        return _mk(Fraction(value), _FZERO)
    return None


ZERO = QQi(0)
ONE = QQi(1)
IMAG = QQi(0, 1)


def _format_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def format_scalar(c: QQi) -> str:
    """Canonical text for a scalar; re-parseable by the expression grammar."""
    if not c.im:
        return _format_rational(c.re)
    if not c.re:
        if c.im == 1:
            return "I"
        if c.im == -1:
            return "-I"
        return f"{_format_rational(c.im)}*I"
    sign = "+" if c.im > 0 else "-"
    mag = abs(c.im)
    imag = "I" if mag == 1 else f"{_format_rational(mag)}*I"
    return f"({_format_rational(c.re)}{sign}{imag})"
