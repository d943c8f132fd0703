"""Staircase subsets of Z^m_>=0: the computable slice of the support semiring.

A staircase set is a finite set of explicit points together with finitely
many cone generators g, each denoting the translated orthant g + Z^m_>=0.
The class is closed under union, Minkowski sum and the tropical derivative,
and it contains the support of every polynomial.

Values are normalized to a canonical representative of the denoted set:

  * duplicates removed, explicit points absorbed into cones, generator
    antichain minimized;
  * an explicit point whose whole upper orthant happens to lie in the set
    is promoted to a generator (e.g. explicit {(0,0)} with cones
    {(1,0),(0,1)} denotes the full orthant and normalizes to the single
    generator (0,0)).

After normalization, two values denote the same subset of the lattice iff
they are componentwise identical, so `==` is semantic equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import ArityError
from .lattice import (
    Point,
    add,
    as_point,
    canon,
    leq,
    member_newton,
    minimal_elements,
    unit,
)
from .tropical import VertexSet


def _member_raw(q: Point, explicit: frozenset[Point], cones: tuple[Point, ...]) -> bool:
    return q in explicit or any(leq(g, q) for g in cones)


def _orthant_contained(p: Point, explicit: frozenset[Point], cones: tuple[Point, ...]) -> bool:
    """Exact decision of (p + Z^m_>=0) subset-of (explicit + cones).

    Points beyond the componentwise bound B (max over all generator,
    explicit and p coordinates, plus one) can be capped back onto the
    boundary layer without leaving either side, so scanning the box [p, B]
    is a complete test.
    """
    if not cones:
        return False  # an orthant is infinite, the explicit part is not
    m = len(p)
    # cheap necessary condition before the box scan
    for k in range(m):
        q = list(p)
        q[k] += 1
        if not _member_raw(tuple(q), explicit, cones):
            return False
    hi = []
    for k in range(m):
        b = max(g[k] for g in cones)
        for e in explicit:
            b = max(b, e[k])
        hi.append(max(b, p[k]) + 1)
    for q in itertools.product(*(range(p[k], hi[k] + 1) for k in range(m))):
        if not _member_raw(q, explicit, cones):
            return False
    return True


def _normalize(
    arity: int, explicit: Iterable[Point], cones: Iterable[Point]
) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    gens = minimal_elements(canon(cones, arity))
    expl = tuple(
        p for p in canon(explicit, arity) if not any(leq(g, p) for g in gens)
    )
    if gens and expl:
        frozen = frozenset(expl)
        promoted = tuple(p for p in expl if _orthant_contained(p, frozen, gens))
        if promoted:
            gens = minimal_elements(gens + promoted)
            expl = tuple(p for p in expl if not any(leq(g, p) for g in gens))
    return expl, gens


@dataclass(frozen=True)
class SupportSet:
    """A normalized staircase subset of the lattice Z^arity_>=0."""

    arity: int
    explicit: tuple[Point, ...] = ()
    cones: tuple[Point, ...] = ()

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"arity must be >= 1, got {self.arity}")
        expl, gens = _normalize(self.arity, self.explicit, self.cones)
        object.__setattr__(self, "explicit", expl)
        object.__setattr__(self, "cones", gens)

    @classmethod
    def empty(cls, arity: int) -> "SupportSet":
        return cls(arity)

    @classmethod
    def origin(cls, arity: int) -> "SupportSet":
        """The singleton {(0,...,0)}, neutral for the Minkowski sum."""
        return cls(arity, ((0,) * arity,))

    @classmethod
    def of(cls, arity: int, explicit: Iterable[Iterable[int]] = (),
           cones: Iterable[Iterable[int]] = ()) -> "SupportSet":
        return cls(
            arity,
            tuple(as_point(p, arity) for p in explicit),
            tuple(as_point(g, arity) for g in cones),
        )

    @property
    def is_empty(self) -> bool:
        return not self.explicit and not self.cones

    def member(self, p: Iterable[int]) -> bool:
        """Membership of a point in the denoted set."""
        q = as_point(p, self.arity)
        return q in self.explicit or any(leq(g, q) for g in self.cones)

    def _check(self, other: "SupportSet") -> None:
        if self.arity != other.arity:
            raise ArityError(f"mixed arities {self.arity} and {other.arity}")

    def union(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(
            self.arity,
            self.explicit + other.explicit,
            self.cones + other.cones,
        )

    def minkowski(self, other: "SupportSet") -> "SupportSet":
        """Pointwise sums {x + y}; any block touching a cone stays a cone."""
        self._check(other)
        if self.is_empty or other.is_empty:
            return SupportSet.empty(self.arity)
        expl = tuple(add(p, q) for p in self.explicit for q in other.explicit)
        gens = (
            tuple(add(p, g) for p in self.explicit for g in other.cones)
            + tuple(add(g, q) for g in self.cones for q in other.explicit)
            + tuple(add(g, h) for g in self.cones for h in other.cones)
        )
        return SupportSet(self.arity, expl, gens)

    def n_fold(self, n: int) -> "SupportSet":
        """n-fold Minkowski power; the empty product is the origin singleton."""
        if n < 0:
            raise ValueError("Minkowski powers require n >= 0")
        acc = SupportSet.origin(self.arity)
        for _ in range(n):
            acc = acc.minkowski(self)
            if acc.is_empty:
                break
        return acc

    def trop_derivative(self, shift: Iterable[int]) -> "SupportSet":
        """Translate by -shift and keep the nonnegative part.

        Explicit points that would leave the lattice are dropped; a cone
        generator is clamped at zero componentwise, since the shifted
        orthant always meets the lattice.
        """
        j = as_point(shift, self.arity)
        expl = tuple(
            tuple(t[k] - j[k] for k in range(self.arity))
            for t in self.explicit
            if all(t[k] >= j[k] for k in range(self.arity))
        )
        gens = tuple(
            tuple(max(g[k] - j[k], 0) for k in range(self.arity))
            for g in self.cones
        )
        return SupportSet(self.arity, expl, gens)

    def vertices(self) -> VertexSet:
        """Vertex set of the denoted (possibly infinite) staircase set.

        A cone generator g contributes the finite surrogate {g+e_1,...,g+e_m}
        for the rest of its orthant: the punctured orthant is covered by the
        orthants over those points, so the Newton polygons agree.
        """
        candidates = minimal_elements(self.explicit + self.cones)
        cone_set = set(self.cones)
        out = []
        for x in candidates:
            rest = [y for y in self.explicit if y != x]
            rest += [g for g in self.cones if g != x]
            if x in cone_set:
                rest += [add(x, unit(self.arity, k)) for k in range(1, self.arity + 1)]
            if not member_newton(x, rest):
                out.append(x)
        return VertexSet(self.arity, tuple(out))

    def val(self, shift: Iterable[int]) -> VertexSet:
        """Vertex set of the tropical derivative: Val_J(S) = Vert(shift of S)."""
        return _val_cached(self, as_point(shift, self.arity))

    def bound(self) -> Point:
        """Componentwise max over all explicit points and generators (0 if empty)."""
        pts = self.explicit + self.cones
        if not pts:
            return (0,) * self.arity
        return tuple(max(p[k] for p in pts) for k in range(self.arity))


@lru_cache(maxsize=1 << 14)
def _val_cached(s: SupportSet, j: Point) -> VertexSet:
    return s.trop_derivative(j).vertices()


def val(shift: Iterable[int], s: SupportSet) -> VertexSet:
    return s.val(shift)
