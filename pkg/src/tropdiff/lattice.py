"""Exact geometry of Newton polygons over the nonnegative integer lattice.

A finite point set C in Z^m_>=0 spans the Newton polygon N(C), the convex
hull of C + Z^m_>=0.  Membership of a lattice point in N(C) reduces to the
feasibility of an exact rational linear program: p lies in N(C) iff there
are nonnegative rationals lambda_c summing to 1 with

    sum_c lambda_c * c  <=  p   componentwise.

All arithmetic is done with `fractions.Fraction`; there are no tolerances
anywhere.  The vertex set of C consists of the points of C that do not lie
in the Newton polygon of the remaining points; it is always an antichain
under the componentwise order and spans the same Newton polygon as C.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import ArityError

Point = tuple[int, ...]


def as_point(coords: Iterable[int], arity: int | None = None) -> Point:
    """Validate and freeze a lattice point (nonnegative integer coordinates)."""
    p = tuple(int(c) for c in coords)
    if arity is not None and len(p) != arity:
        raise ArityError(f"expected a point of arity {arity}, got {p}")
    if not p:
        raise ArityError("points must have at least one coordinate")
    if any(c < 0 for c in p):
        raise ArityError(f"negative coordinate in lattice point {p}")
    return p


def canon(points: Iterable[Iterable[int]], arity: int | None = None) -> tuple[Point, ...]:
    """Deduplicated, lexicographically sorted tuple of points of equal arity."""
    pts = sorted({as_point(p) for p in points})
    if not pts:
        return ()
    m = arity if arity is not None else len(pts[0])
    for p in pts:
        if len(p) != m:
            raise ArityError(f"mixed arities: expected {m}, got point {p}")
    return tuple(pts)


def leq(p: Point, q: Point) -> bool:
    """Componentwise p <= q."""
    return all(a <= b for a, b in zip(p, q))


def add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def unit(arity: int, k: int) -> Point:
    """The k-th unit vector (1-based axis index)."""
    if not 1 <= k <= arity:
        raise ArityError(f"axis {k} out of range for arity {arity}")
    return tuple(1 if i == k - 1 else 0 for i in range(arity))


def minimal_elements(points: Iterable[Point]) -> tuple[Point, ...]:
    """The antichain of componentwise-minimal points."""
    pts = canon(points)
    return tuple(
        p for p in pts if not any(q != p and leq(q, p) for q in pts)
    )


def _phase1_feasible(cols: tuple[Point, ...], target: Point) -> bool:
    """Exact phase-1 simplex with Bland's rule.

    Decides feasibility of { lambda >= 0, sum lambda = 1,
    sum_j lambda_j cols[j] + v = target, v >= 0 }.  The m slack rows start
    basic; a single artificial variable covers the convexity row, and the
    system is feasible iff the artificial can be driven to zero.
    """
    m = len(target)
    n = len(cols)
    width = n + m + 1  # lambdas, slacks, artificial; rhs sits at index `width`
    zero = Fraction(0)
    rows: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(c[i]) for c in cols] + [zero] * (m + 1) + [Fraction(target[i])]
        row[n + i] = Fraction(1)
        rows.append(row)
    conv = [Fraction(1)] * n + [zero] * m + [Fraction(1), Fraction(1)]
    rows.append(conv)
    basis = list(range(n, n + m)) + [n + m]

    # Reduced-cost row for "minimize artificial", priced out of the basis.
    obj = [zero] * (width + 1)
    obj[n + m] = Fraction(1)
    obj = [o - r for o, r in zip(obj, conv)]

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            return obj[width] == 0
        leave = -1
        best_ratio = None
        best_var = None
        for i in range(m + 1):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][width] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < best_var)
                ):
                    best_ratio, best_var, leave = ratio, basis[i], i
        if leave < 0:  # objective bounded below by 0, so this cannot happen
            return False
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        prow = rows[leave]
        for i in range(m + 1):
            f = rows[i][enter]
            if i != leave and f:
                rows[i] = [v - f * w for v, w in zip(rows[i], prow)]
        f = obj[enter]
        if f:
            obj = [v - f * w for v, w in zip(obj, prow)]
        basis[leave] = enter


def member_newton(p: Iterable[int], points: Iterable[Iterable[int]]) -> bool:
    """Exact test for p in N(points), the Newton polygon of a finite set.

    The empty set has an empty Newton polygon.  Dominance (some c <= p) is
    checked first; the general case runs the exact rational LP.
    """
    pts = canon(points)
    if not pts:
        as_point(p)
        return False
    q = as_point(p, len(pts[0]))
    if any(leq(c, q) for c in pts):
        return True
    m = len(q)
    for k in range(m):
        if q[k] < min(c[k] for c in pts):
            return False
    return _phase1_feasible(pts, q)


@lru_cache(maxsize=1 << 16)
def _vertices_cached(points: tuple[Point, ...]) -> tuple[Point, ...]:
    mins = minimal_elements(points)
    return tuple(
        x
        for x in mins
        if not member_newton(x, tuple(y for y in mins if y != x))
    )


def vertices_of_finite(points: Iterable[Iterable[int]]) -> tuple[Point, ...]:
    """Vertex set of a finite point set: x in C with x not in N(C \\ {x}).

    Only componentwise-minimal points can be vertices, so candidates are
    pre-filtered to the minimal antichain before the LP tests run.
    """
    return _vertices_cached(canon(points))


def staircase_hull_2d(points: Iterable[Iterable[int]]) -> tuple[Point, ...]:
    """Planar vertex set by a monotone-chain sweep; LP-free cross-check.

    Sorts the minimal antichain by first coordinate (second then strictly
    decreases) and keeps exactly the points making a strictly convex
    lower-left turn.  Agrees with `vertices_of_finite` for arity 2.
    """
    pts = canon(points)
    if pts and len(pts[0]) != 2:
        raise ArityError("staircase_hull_2d requires arity 2")
    chain: list[Point] = []
    for q in minimal_elements(pts):
        while len(chain) >= 2 and not _convex_turn(chain[-2], chain[-1], q):
            chain.pop()
        chain.append(q)
    return tuple(sorted(chain))


def _convex_turn(a: Point, b: Point, c: Point) -> bool:
    # strict lower-left convexity at b; collinear points are not vertices
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) > 0
