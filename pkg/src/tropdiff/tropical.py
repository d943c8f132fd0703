"""The idempotent semiring of vertex sets (tropical formal power series).

A vertex set is a finite antichain in Z^m_>=0 that is fixed by the vertex
operator.  The semiring operations are

    S (+) T = Vert(S union T)        S (*) T = Vert(S + T)

with Minkowski sum on the right; the zero element is the empty set and the
unit is the origin singleton.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ArityError
from .lattice import Point, add, as_point, canon, vertices_of_finite


@dataclass(frozen=True)
class VertexSet:
    """A finite antichain of lattice points, canonicalized at construction."""

    arity: int
    points: tuple[Point, ...] = ()

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"arity must be >= 1, got {self.arity}")
        pts = canon(self.points)
        if pts and len(pts[0]) != self.arity:
            raise ArityError(
                f"points of arity {len(pts[0])} in a VertexSet of arity {self.arity}"
            )
        object.__setattr__(self, "points", vertices_of_finite(pts))

    @classmethod
    def empty(cls, arity: int) -> "VertexSet":
        return cls(arity)

    @classmethod
    def unit(cls, arity: int) -> "VertexSet":
        """The origin singleton, neutral for (*)."""
        return cls(arity, ((0,) * arity,))

    @property
    def is_empty(self) -> bool:
        return not self.points

    def member(self, p: Iterable[int]) -> bool:
        return as_point(p, self.arity) in self.points

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def _check(self, other: "VertexSet") -> None:
        if self.arity != other.arity:
            raise ArityError(f"mixed arities {self.arity} and {other.arity}")

    def oplus(self, other: "VertexSet") -> "VertexSet":
        """Tropical sum: vertex set of the union."""
        self._check(other)
        return VertexSet(self.arity, self.points + other.points)

    def odot(self, other: "VertexSet") -> "VertexSet":
        """Tropical product: vertex set of the Minkowski sum; empty annihilates."""
        self._check(other)
        if self.is_empty or other.is_empty:
            return VertexSet.empty(self.arity)
        sums = tuple(add(p, q) for p in self.points for q in other.points)
        return VertexSet(self.arity, sums)

    def odot_power(self, n: int) -> "VertexSet":
        """n-fold tropical product; n = 0 gives the unit."""
        if n < 0:
            raise ValueError("tropical powers require n >= 0")
        acc = VertexSet.unit(self.arity)
        for _ in range(n):
            acc = acc.odot(self)
            if acc.is_empty:
                break
        return acc
