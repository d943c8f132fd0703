"""Tropical differential polynomials and the tropical vanishing condition.

A tropical differential polynomial is a finite sum of terms a_M (*) eps_M
with nonempty vertex-set coefficients a_M.  Evaluated at a tuple of support
sets, each tropical monomial eps_M contributes the tropical product of
Val_J(S_i) factors; a support tuple solves the polynomial when every vertex
of the evaluation is attained by at least two distinct monomial terms (or
the evaluation is empty).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityError, CandidateCapError
from .diffpoly import DiffMonomial, DiffPolynomial
from .lattice import Point, as_point
from .supports import SupportSet
from .tropical import VertexSet

# A tropical monomial eps_M carries exactly the exponent data of its
# classical counterpart E_M; only the evaluation semantics differ.
TropMonomial = DiffMonomial

DEFAULT_CANDIDATE_CAP = 100_000


@dataclass(frozen=True)
class TropPolynomial:
    """Finite map from tropical monomials to nonempty vertex-set coefficients."""

    arity: int
    nvars: int
    terms: tuple[tuple[TropMonomial, VertexSet], ...] = ()

    def __post_init__(self):
        if self.nvars < 1:
            raise ArityError(f"nvars must be >= 1, got {self.nvars}")
        acc: dict[TropMonomial, VertexSet] = {}
        for mono, coef in self.terms:
            for key, _ in mono.exponents:
                if not 1 <= key.var <= self.nvars:
                    raise ArityError(
                        f"variable x{key.var} out of range for {self.nvars} variables"
                    )
                as_point(key.index, self.arity)
            if coef.arity != self.arity:
                raise ArityError("coefficient arity differs from polynomial arity")
            if coef.is_empty:
                raise ValueError("tropical coefficients must be nonempty vertex sets")
            acc[mono] = acc[mono].oplus(coef) if mono in acc else coef
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(acc.items(), key=lambda t: t[0].exponents)),
        )

    @classmethod
    def zero(cls, arity: int, nvars: int) -> "TropPolynomial":
        return cls(arity, nvars)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> tuple[TropMonomial, ...]:
        return tuple(m for m, _ in self.terms)

    # ---------------------------------------------------------------- evaluation

    def _check_supports(self, supports: Sequence[SupportSet]) -> None:
        if len(supports) != self.nvars:
            raise ArityError(f"expected {self.nvars} support sets, got {len(supports)}")
        for s in supports:
            if s.arity != self.arity:
                raise ArityError("support arity differs from polynomial arity")

    def term_sets(self, supports: Sequence[SupportSet]) -> tuple[tuple[TropMonomial, VertexSet], ...]:
        """Per-term vertex sets a_M (*) eps_M(S), in canonical monomial order."""
        self._check_supports(supports)
        return tuple(
            (mono, coef.odot(eval_monomial(mono, supports, arity=self.arity)))
            for mono, coef in self.terms
        )

    def eval(self, supports: Sequence[SupportSet]) -> VertexSet:
        """Tropical sum over all terms of a_M (*) eps_M(S)."""
        acc = VertexSet.empty(self.arity)
        for _, ts in self.term_sets(supports):
            acc = acc.oplus(ts)
        return acc


def eval_monomial(mono: TropMonomial, supports: Sequence[SupportSet], *,
                  arity: int | None = None) -> VertexSet:
    """Evaluate a tropical monomial: product of Val_J(S_i) tropical powers.

    An empty factor annihilates the whole product; the constant monomial
    evaluates to the origin singleton.
    """
    if arity is None:
        if not supports:
            raise ArityError("cannot infer arity from an empty support tuple")
        arity = supports[0].arity
    acc = VertexSet.unit(arity)
    for key, e in mono.exponents:
        if not 1 <= key.var <= len(supports):
            raise ArityError(f"variable x{key.var} out of range")
        factor = supports[key.var - 1].val(key.index)
        if factor.is_empty:
            return VertexSet.empty(arity)
        acc = acc.odot(factor.odot_power(e))
    return acc


def eval_monomial_minkowski(mono: TropMonomial, supports: Sequence[SupportSet], *,
                            arity: int | None = None) -> VertexSet:
    """Independent route: vertices of the support-level Minkowski sum.

    Accumulates sum_{i,J} M_{i,J} * trop_derivative(J, S_i) inside the
    support semiring and takes vertices once at the end, bypassing the
    vertex-level products used by `eval_monomial`.
    """
    if arity is None:
        if not supports:
            raise ArityError("cannot infer arity from an empty support tuple")
        arity = supports[0].arity
    acc = SupportSet.origin(arity)
    for key, e in mono.exponents:
        shifted = supports[key.var - 1].trop_derivative(key.index)
        acc = acc.minkowski(shifted.n_fold(e))
    return acc.vertices()


def tropicalize(poly: DiffPolynomial) -> TropPolynomial:
    """Replace each coefficient series by its vertex set, monomials verbatim.

    Coefficients must be exact; they are nonzero by construction, so every
    tropical coefficient is a nonempty vertex set.
    """
    return TropPolynomial(
        poly.arity,
        poly.nvars,
        tuple((mono, coef.trop()) for mono, coef in poly.terms),
    )


def tropicalize_sample(polys: Iterable[DiffPolynomial], bound: int) -> tuple[TropPolynomial, ...]:
    """Tropicalizations of all theta(I)(P), P in polys, ||I||_inf <= bound."""
    if bound < 0:
        raise ValueError("derivative bound must be >= 0")
    out = []
    for p in polys:
        for idx in itertools.product(range(bound + 1), repeat=p.arity):
            out.append(tropicalize(p.theta(idx)))
    return tuple(out)


# -------------------------------------------------------------------- solutions


@dataclass(frozen=True)
class SolutionReport:
    """Evaluation of one tropical polynomial plus per-vertex witness counts.

    `witnesses` maps each vertex of the evaluation to the sorted indices of
    the monomials (in canonical term order) whose term set contains it; the
    verdict is true iff every vertex has at least two witnesses, or the
    evaluation is empty.
    """

    evaluation: VertexSet
    witnesses: tuple[tuple[Point, tuple[int, ...]], ...]
    solution: bool
    monomials: tuple[TropMonomial, ...]


def is_solution(poly: TropPolynomial, supports: Sequence[SupportSet]) -> SolutionReport:
    """Tropical vanishing test for one polynomial at a support tuple."""
    sets = poly.term_sets(supports)
    evaluation = VertexSet.empty(poly.arity)
    for _, ts in sets:
        evaluation = evaluation.oplus(ts)
    witnesses = []
    verdict = True
    for v in evaluation.points:
        found = tuple(i for i, (_, ts) in enumerate(sets) if ts.member(v))
        witnesses.append((v, found))
        if len(found) < 2:
            verdict = False
    return SolutionReport(
        evaluation=evaluation,
        witnesses=tuple(witnesses),
        solution=verdict,
        monomials=poly.monomials(),
    )


def is_solution_system(
    polys: Iterable[TropPolynomial], supports: Sequence[SupportSet]
) -> tuple[bool, tuple[SolutionReport, ...]]:
    """Conjunction of `is_solution` over a family; empty families hold trivially."""
    reports = tuple(is_solution(p, supports) for p in polys)
    return all(r.solution for r in reports), reports


# -------------------------------------------------------------------- enumeration


def count_candidates(box: Point, max_points: int | None, nvars: int) -> int:
    """Number of explicit-support tuples inside the box, before filtering."""
    grid = 1
    for b in box:
        grid *= b + 1
    top = grid if max_points is None else min(max_points, grid)
    per_component = sum(math.comb(grid, k) for k in range(top + 1))
    return per_component ** nvars


def enumerate_solutions(
    polys: Sequence[TropPolynomial],
    box: Iterable[int],
    max_points: int | None = None,
    *,
    nvars: int | None = None,
    max_candidates: int = DEFAULT_CANDIDATE_CAP,
) -> list[tuple[SupportSet, ...]]:
    """All explicit-support tuples inside [0, box]^m solving every polynomial.

    Candidates are finite point sets with at most `max_points` points per
    component (no cone generators).  The scan is refused up front when the
    candidate count exceeds `max_candidates`.  Output order is
    deterministic: per component, subsets by size then lexicographic point
    list, and tuples in product order (last component fastest).
    """
    box = tuple(int(b) for b in box)
    if any(b < 0 for b in box):
        raise ArityError("box bounds must be nonnegative")
    arity = len(box)
    polys = list(polys)
    if nvars is None:
        if not polys:
            raise ArityError("nvars is required when the system is empty")
        nvars = polys[0].nvars
    for p in polys:
        if p.nvars != nvars or p.arity != arity:
            raise ArityError("system members disagree on arity or variable count")

    estimate = count_candidates(box, max_points, nvars)
    if estimate > max_candidates:
        raise CandidateCapError(estimate, max_candidates)

    grid = sorted(itertools.product(*(range(b + 1) for b in box)))
    top = len(grid) if max_points is None else min(max_points, len(grid))
    component: list[SupportSet] = []
    for k in range(top + 1):
        for combo in itertools.combinations(grid, k):
            component.append(SupportSet(arity, combo))

    out = []
    for candidate in itertools.product(component, repeat=nvars):
        ok = all(is_solution(p, candidate).solution for p in polys)
        if ok:
            out.append(candidate)
    return out
