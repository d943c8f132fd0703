"""Differential polynomials over exact power-series coefficients.

A differential polynomial in variables x_1..x_n over K[[t_1..t_m]] is a
finite sum of terms alpha_M * E_M, where E_M is a product of derivative
variables x_{i,J} with positive integer exponents and alpha_M is a series.
Derivations act by the Leibniz rule, shifting x_{i,J} to x_{i,J+e_k} and
differentiating the coefficients; evaluation substitutes the J-th
derivative of phi_i for x_{i,J}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ArityError, FieldError, PrecisionError
from .field import RATIONALS, FieldElement, FieldSpec
from .lattice import Point, as_point
from .series import PowerSeries


@dataclass(frozen=True, order=True)
class DerivativeKey:
    """The derivative variable x_{var, index} (var is 1-based)."""

    var: int
    index: Point

    def bump(self, k: int) -> "DerivativeKey":
        """Key of the derivative along axis k (1-based)."""
        idx = self.index[: k - 1] + (self.index[k - 1] + 1,) + self.index[k:]
        return DerivativeKey(self.var, idx)


@dataclass(frozen=True)
class DiffMonomial:
    """Sparse product of derivative variables: map key -> positive exponent."""

    exponents: tuple[tuple[DerivativeKey, int], ...] = ()

    def __post_init__(self):
        acc: dict[DerivativeKey, int] = {}
        for key, e in self.exponents:
            acc[key] = acc.get(key, 0) + e
        for key, e in acc.items():
            if e < 0:
                raise ValueError(f"negative exponent on {key}")
        object.__setattr__(
            self,
            "exponents",
            tuple((k, e) for k, e in sorted(acc.items()) if e > 0),
        )

    @classmethod
    def of(cls, mapping: Mapping[DerivativeKey, int] | Iterable[tuple[DerivativeKey, int]]
           ) -> "DiffMonomial":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(tuple(items))

    @classmethod
    def one(cls) -> "DiffMonomial":
        return cls()

    @classmethod
    def variable(cls, var: int, index: Iterable[int], power: int = 1) -> "DiffMonomial":
        return cls(((DerivativeKey(var, tuple(int(j) for j in index)), power),))

    @property
    def is_constant(self) -> bool:
        return not self.exponents

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def order(self) -> int:
        """Highest derivative order max ||J||_inf over the keys (0 if constant)."""
        return max((max(k.index) for k, _ in self.exponents), default=0)

    def __mul__(self, other: "DiffMonomial") -> "DiffMonomial":
        return DiffMonomial(self.exponents + other.exponents)

    def replace(self, key: DerivativeKey, delta: int) -> "DiffMonomial":
        """Monomial with the exponent of `key` changed by delta."""
        return DiffMonomial(self.exponents + ((key, delta),))


@dataclass(frozen=True)
class DiffPolynomial:
    """Finite sum of (series coefficient, differential monomial) terms."""

    arity: int
    nvars: int
    field: FieldSpec = RATIONALS
    terms: tuple[tuple[DiffMonomial, PowerSeries], ...] = ()

    def __post_init__(self):
        if self.nvars < 1:
            raise ArityError(f"nvars must be >= 1, got {self.nvars}")
        acc: dict[DiffMonomial, PowerSeries] = {}
        for mono, coef in self.terms:
            for key, _ in mono.exponents:
                if not 1 <= key.var <= self.nvars:
                    raise ArityError(
                        f"variable x{key.var} out of range for {self.nvars} variables"
                    )
                as_point(key.index, self.arity)
            if coef.arity != self.arity:
                raise ArityError("coefficient arity differs from polynomial arity")
            if coef.field != self.field:
                raise FieldError("coefficient from a different field")
            acc[mono] = acc[mono] + coef if mono in acc else coef
        object.__setattr__(
            self,
            "terms",
            tuple(
                (mono, coef)
                for mono, coef in sorted(acc.items(), key=lambda t: t[0].exponents)
                if not coef.is_zero
            ),
        )

    # ---------------------------------------------------------------- factories

    @classmethod
    def zero(cls, arity: int, nvars: int, field: FieldSpec = RATIONALS) -> "DiffPolynomial":
        return cls(arity, nvars, field)

    @classmethod
    def from_terms(cls, arity: int, nvars: int, field: FieldSpec,
                   terms: Iterable[tuple[DiffMonomial, PowerSeries]]) -> "DiffPolynomial":
        return cls(arity, nvars, field, tuple(terms))

    @classmethod
    def monomial_poly(cls, arity: int, nvars: int, mono: DiffMonomial,
                      coef: PowerSeries) -> "DiffPolynomial":
        return cls(arity, nvars, coef.field, ((mono, coef),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> tuple[DiffMonomial, ...]:
        return tuple(m for m, _ in self.terms)

    def coefficient(self, mono: DiffMonomial) -> PowerSeries:
        for m, c in self.terms:
            if m == mono:
                return c
        return PowerSeries.zero(self.arity, self.field)

    # ---------------------------------------------------------------- ring ops

    def _check(self, other: "DiffPolynomial") -> None:
        if (self.arity, self.nvars) != (other.arity, other.nvars):
            raise ArityError("mixed arities or variable counts")
        if self.field != other.field:
            raise FieldError("mixed coefficient fields")

    def __add__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        self._check(other)
        return DiffPolynomial(self.arity, self.nvars, self.field,
                              self.terms + other.terms)

    def __neg__(self) -> "DiffPolynomial":
        return DiffPolynomial(
            self.arity, self.nvars, self.field,
            tuple((m, -c) for m, c in self.terms),
        )

    def __sub__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        return self + (-other)

    def __mul__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        self._check(other)
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((m1 * m2, c1 * c2))
        return DiffPolynomial(self.arity, self.nvars, self.field, tuple(out))

    def mul_series(self, s: PowerSeries) -> "DiffPolynomial":
        return DiffPolynomial(
            self.arity, self.nvars, self.field,
            tuple((m, c * s) for m, c in self.terms),
        )

    # ---------------------------------------------------------------- derivations

    def derive(self, k: int) -> "DiffPolynomial":
        """One derivation along axis k: Leibniz over variables plus d(alpha)/dt_k."""
        out: list[tuple[DiffMonomial, PowerSeries]] = []
        for mono, coef in self.terms:
            out.append((mono, coef.derive(k)))
            for key, e in mono.exponents:
                shifted = mono.replace(key, -1).replace(key.bump(k), +1)
                out.append((shifted, coef.scalar_mul(e)))
        return DiffPolynomial(self.arity, self.nvars, self.field, tuple(out))

    def theta(self, shift: Iterable[int]) -> "DiffPolynomial":
        """Iterated derivations per the multi-index `shift`."""
        j = as_point(shift, self.arity)
        out = self
        for k in range(self.arity):
            for _ in range(j[k]):
                out = out.derive(k + 1)
        return out

    # ---------------------------------------------------------------- evaluation

    def evaluate(self, phis: Sequence[PowerSeries]) -> PowerSeries:
        """Substitute theta(J)(phi_i) for x_{i,J} and expand."""
        if len(phis) != self.nvars:
            raise ArityError(f"expected {self.nvars} series, got {len(phis)}")
        for s in phis:
            if s.arity != self.arity:
                raise ArityError("series arity differs from polynomial arity")
            if s.field != self.field:
                raise FieldError("series field differs from coefficient field")
        cache: dict[DerivativeKey, PowerSeries] = {}
        total = PowerSeries.zero(self.arity, self.field)
        for mono, coef in self.terms:
            prod = coef
            for key, e in mono.exponents:
                if key not in cache:
                    cache[key] = phis[key.var - 1].theta(key.index)
                prod = prod * cache[key] ** e
            total = total + prod
        return total

    def taylor_coeff_poly(self, shift: Iterable[int]) -> "DiffPolynomial":
        """The polynomial theta(shift)(P) with every coefficient evaluated at t = 0.

        The result has constant coefficients; terms whose coefficient has no
        constant part are dropped.  Truncated coefficients must still know
        their constant term after the differentiation.
        """
        q = self.theta(shift)
        out = []
        origin = (0,) * self.arity
        for mono, coef in q.terms:
            if coef.precision is not None and coef.precision < 1:
                raise PrecisionError(
                    "coefficient precision exhausted before evaluation at t = 0"
                )
            c0 = coef.coeff(origin)
            if not c0.is_zero:
                out.append((mono, PowerSeries.constant(self.arity, c0, self.field)))
        return DiffPolynomial(self.arity, self.nvars, self.field, tuple(out))

    def eval_at_constants(
        self,
        values: Mapping[tuple[int, Point], FieldElement]
        | Callable[[int, Point], FieldElement],
    ) -> FieldElement:
        """Evaluate a constant-coefficient polynomial at numbers x_{i,J} = a_{i,J}.

        `values` is a mapping keyed by (var, index) or a callable; missing
        keys count as zero.
        """
        if callable(values):
            lookup = values
        else:
            zero = self.field.zero
            lookup = lambda i, j: values.get((i, j), zero)  # noqa: E731
        origin = (0,) * self.arity
        total = self.field.zero
        for mono, coef in self.terms:
            if any(p != origin for p, _ in coef.terms):
                raise ValueError("eval_at_constants needs constant coefficients")
            v = coef.coeff(origin)
            for key, e in mono.exponents:
                v = v * lookup(key.var, key.index) ** e
                if v.is_zero:
                    break
            total = total + v
        return total


@dataclass(frozen=True)
class DiffSystem:
    """A non-empty list of differential polynomials sharing (m, n, field)."""

    polynomials: tuple[DiffPolynomial, ...]

    def __post_init__(self):
        if not self.polynomials:
            raise ValueError("a differential system must be non-empty")
        first = self.polynomials[0]
        for p in self.polynomials[1:]:
            first._check(p)

    @property
    def arity(self) -> int:
        return self.polynomials[0].arity

    @property
    def nvars(self) -> int:
        return self.polynomials[0].nvars

    @property
    def field(self) -> FieldSpec:
        return self.polynomials[0].field

    def derivative_sample(self, bound: int) -> tuple[DiffPolynomial, ...]:
        """All theta(I)(P) for polynomials P and multi-indices ||I||_inf <= bound."""
        if bound < 0:
            raise ValueError("derivative bound must be >= 0")
        out = []
        for p in self.polynomials:
            for idx in itertools.product(range(bound + 1), repeat=self.arity):
                out.append(p.theta(idx))
        return tuple(out)
