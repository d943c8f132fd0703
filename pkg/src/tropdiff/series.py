"""Exact multivariate formal power series over a pluggable exact field.

A series is a finite exponent-to-coefficient map plus a precision tag:
`precision is None` means the value is an exact polynomial, and an integer
N means only the coefficients of total degree < N are authoritative.
Exact series lose nothing under any operation; truncated results carry the
worst-case sound precision.

The support and the tropicalization are only defined for exact series: a
truncated series cannot certify the absence of higher-degree terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ArityError, FieldError, PrecisionError
from .field import RATIONALS, FieldElement, FieldSpec
from .lattice import Point, as_point
from .supports import SupportSet
from .tropical import VertexSet


def _total(p: Point) -> int:
    return sum(p)


def factorial_of(p: Point) -> int:
    """Componentwise factorial product j_1! * ... * j_m!."""
    out = 1
    for j in p:
        out *= math.factorial(j)
    return out


@dataclass(frozen=True)
class PowerSeries:
    arity: int
    field: FieldSpec = RATIONALS
    terms: tuple[tuple[Point, FieldElement], ...] = ()
    precision: int | None = None  # None: exact; N: degrees < N authoritative

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"arity must be >= 1, got {self.arity}")
        if self.precision is not None and self.precision < 0:
            raise PrecisionError(f"negative precision {self.precision}")
        acc: dict[Point, FieldElement] = {}
        for exp, c in self.terms:
            p = as_point(exp, self.arity)
            if not isinstance(c, FieldElement):
                c = FieldElement(self.field, Fraction(c))
            if c.field != self.field:
                raise FieldError("coefficient from a different field")
            acc[p] = acc[p] + c if p in acc else c
        cleaned = tuple(
            (p, c)
            for p, c in sorted(acc.items())
            if not c.is_zero
            and (self.precision is None or _total(p) < self.precision)
        )
        object.__setattr__(self, "terms", cleaned)

    # ---------------------------------------------------------------- factories

    @classmethod
    def zero(cls, arity: int, field: FieldSpec = RATIONALS) -> "PowerSeries":
        return cls(arity, field)

    @classmethod
    def one(cls, arity: int, field: FieldSpec = RATIONALS) -> "PowerSeries":
        return cls.constant(arity, field.one, field)

    @classmethod
    def constant(cls, arity: int, c, field: FieldSpec = RATIONALS) -> "PowerSeries":
        if isinstance(c, FieldElement):
            field = c.field
        else:
            c = FieldElement(field, Fraction(c))
        return cls(arity, field, (((0,) * arity, c),))

    @classmethod
    def monomial(cls, arity: int, exponent: Iterable[int], c,
                 field: FieldSpec = RATIONALS) -> "PowerSeries":
        if isinstance(c, FieldElement):
            field = c.field
        else:
            c = FieldElement(field, Fraction(c))
        return cls(arity, field, ((as_point(exponent, arity), c),))

    @classmethod
    def variable(cls, arity: int, k: int, field: FieldSpec = RATIONALS) -> "PowerSeries":
        """The series t_k (1-based axis index)."""
        if not 1 <= k <= arity:
            raise ArityError(f"variable index {k} out of range for arity {arity}")
        exp = tuple(1 if i == k - 1 else 0 for i in range(arity))
        return cls.monomial(arity, exp, field.one, field)

    # ---------------------------------------------------------------- queries

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    @property
    def is_zero(self) -> bool:
        """No known terms; for exact series this is true vanishing."""
        return not self.terms

    def coeff(self, exponent: Iterable[int]) -> FieldElement:
        p = as_point(exponent, self.arity)
        if self.precision is not None and _total(p) >= self.precision:
            raise PrecisionError(
                f"coefficient of degree {_total(p)} beyond precision {self.precision}"
            )
        for q, c in self.terms:
            if q == p:
                return c
        return self.field.zero

    def min_total_degree(self) -> int | None:
        """Order of the known part (None when no terms are stored)."""
        if not self.terms:
            return None
        return min(_total(p) for p, _ in self.terms)

    # ---------------------------------------------------------------- arithmetic

    def _check(self, other: "PowerSeries") -> None:
        if self.arity != other.arity:
            raise ArityError(f"mixed arities {self.arity} and {other.arity}")
        if self.field != other.field:
            raise FieldError(f"mixed fields {self.field} and {other.field}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        prec = _min_prec(self.precision, other.precision)
        return PowerSeries(self.arity, self.field, self.terms + other.terms, prec)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(
            self.arity, self.field,
            tuple((p, -c) for p, c in self.terms), self.precision,
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check(other)
        acc: dict[Point, FieldElement] = {}
        for p, c in self.terms:
            for q, e in other.terms:
                r = tuple(a + b for a, b in zip(p, q))
                v = c * e
                acc[r] = acc[r] + v if r in acc else v
        prec = _prod_prec(self, other)
        return PowerSeries(self.arity, self.field, tuple(acc.items()), prec)

    def scalar_mul(self, c) -> "PowerSeries":
        if not isinstance(c, FieldElement):
            c = FieldElement(self.field, Fraction(c))
        elif c.field != self.field:
            raise FieldError("scalar from a different field")
        if c.is_zero:
            return PowerSeries.zero(self.arity, self.field)
        return PowerSeries(
            self.arity, self.field,
            tuple((p, c * v) for p, v in self.terms), self.precision,
        )

    def __pow__(self, n: int) -> "PowerSeries":
        if n < 0:
            raise ValueError("series powers require n >= 0")
        acc = PowerSeries.one(self.arity, self.field)
        for _ in range(n):
            acc = acc * self
        return acc

    def truncate(self, n: int) -> "PowerSeries":
        """Forget coefficients of total degree >= n."""
        prec = n if self.precision is None else min(self.precision, n)
        return PowerSeries(self.arity, self.field, self.terms, prec)

    # ---------------------------------------------------------------- calculus

    def derive(self, k: int) -> "PowerSeries":
        """Formal partial derivative along axis k (1-based)."""
        if not 1 <= k <= self.arity:
            raise ArityError(f"axis {k} out of range for arity {self.arity}")
        i = k - 1
        terms = []
        for p, c in self.terms:
            if p[i] == 0:
                continue
            q = p[:i] + (p[i] - 1,) + p[i + 1:]
            terms.append((q, c * p[i]))
        prec = None if self.precision is None else max(self.precision - 1, 0)
        return PowerSeries(self.arity, self.field, tuple(terms), prec)

    def theta(self, shift: Iterable[int]) -> "PowerSeries":
        """Iterated derivative: axis k applied shift[k] times."""
        j = as_point(shift, self.arity)
        out = self
        for k in range(self.arity):
            for _ in range(j[k]):
                out = out.derive(k + 1)
        return out

    # ---------------------------------------------------------------- tropical side

    def support(self) -> SupportSet:
        """Exponents with nonzero coefficient; exact series only."""
        if self.precision is not None:
            raise PrecisionError("the support of a truncated series is unknowable")
        return SupportSet(self.arity, tuple(p for p, _ in self.terms))

    def trop(self) -> VertexSet:
        """Vertex set of the support; exact series only."""
        if self.precision is not None:
            raise PrecisionError("the tropicalization of a truncated series is unknowable")
        return VertexSet(self.arity, tuple(p for p, _ in self.terms))

    # ---------------------------------------------------------------- coefficients

    def taylor_coefficients(self) -> dict[Point, FieldElement]:
        """The family a_J = J! * coeff(J), i.e. phi = sum a_J t^J / J!."""
        if self.precision is not None:
            raise PrecisionError("full Taylor data needs an exact series")
        return {p: c * factorial_of(p) for p, c in self.terms}

    def taylor_coefficient(self, exponent: Iterable[int]) -> FieldElement:
        """Single Taylor coefficient; honors the precision of truncated series."""
        p = as_point(exponent, self.arity)
        return self.coeff(p) * factorial_of(p)


def _min_prec(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _prod_prec(x: PowerSeries, y: PowerSeries) -> int | None:
    # error terms: err_x * known_y (>= px + ord_y), known_x * err_y, err * err
    cands = []
    ox, oy = x.min_total_degree(), y.min_total_degree()
    if x.precision is not None and oy is not None:
        cands.append(x.precision + oy)
    if y.precision is not None and ox is not None:
        cands.append(y.precision + ox)
    if x.precision is not None and y.precision is not None:
        cands.append(x.precision + y.precision)
    return min(cands) if cands else None
