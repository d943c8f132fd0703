"""Exact coefficient fields: the rationals and real quadratic extensions.

A `FieldSpec` fixes the ambient field once per computation: plain rationals
(`d is None`) or Q(sqrt(d)) for a context-fixed nonsquare positive integer d.
Elements are pairs (a, b) of exact rationals denoting a + b*sqrt(d); the
zero test a = b = 0 is exact because sqrt(d) is irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError

RationalLike = int | Fraction


@dataclass(frozen=True)
class FieldSpec:
    d: int | None = None

    def __post_init__(self):
        if self.d is not None:
            if self.d < 2 or math.isqrt(self.d) ** 2 == self.d:
                raise FieldError(f"d must be a nonsquare integer >= 2, got {self.d}")

    def __call__(self, a: RationalLike = 0, b: RationalLike = 0) -> "FieldElement":
        return FieldElement(self, Fraction(a), Fraction(b))

    @property
    def zero(self) -> "FieldElement":
        return self()

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def sqrt_d(self) -> "FieldElement":
        if self.d is None:
            raise FieldError("sqrt(d) needs a quadratic field, not plain rationals")
        return self(0, 1)


RATIONALS = FieldSpec()


@dataclass(frozen=True)
class FieldElement:
    """a + b*sqrt(d) with exact rational a, b; b = 0 over the plain rationals."""

    field: FieldSpec
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        if self.field.d is None and self.b != 0:
            raise FieldError("irrational part in a plain rational field element")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, Fraction(other))
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.d
        if d is None:
            return FieldElement(self.field, self.a * o.a)
        return FieldElement(
            self.field,
            self.a * o.a + d * self.b * o.b,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.field, self.a, -self.b)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero field element")
        d = self.field.d
        if d is None:
            return FieldElement(self.field, self.a / o.a)
        norm = o.a * o.a - d * o.b * o.b  # nonzero: sqrt(d) is irrational
        return (self * o.conjugate()) * FieldElement(self.field, 1 / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.field.one / self ** (-n)
        acc = self.field.one
        for _ in range(n):
            acc = acc * self
        return acc

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        parts = []
        if self.a != 0:
            parts.append(str(self.a))
        parts.append(f"{self.b}*sqrtd" if self.b != 1 else "sqrtd")
        return "+".join(parts).replace("+-", "-")
