"""Independent recomputation oracles used to cross-check the library.

`member_2d` decides Newton-polygon membership in the plane without any
simplex: the lower-left boundary of conv(C) + R^2_>=0 is a union of
segments between points of C, so it is enough to intersect, for every
pair, the interval of mixing weights that keeps the combination below the
query point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def member_2d(p, points) -> bool:
    pts = [tuple(q) for q in set(map(tuple, points))]
    if not pts:
        return False
    for b in pts:
        if b[0] <= p[0] and b[1] <= p[1]:
            return True
    for b1, b2 in combinations(pts, 2):
        lo, hi = Fraction(0), Fraction(1)
        feasible = True
        for k in (0, 1):
            c = b1[k] - b2[k]
            rhs = p[k] - b2[k]
            if c > 0:
                hi = min(hi, Fraction(rhs, c))
            elif c < 0:
                lo = max(lo, Fraction(rhs, c))
            elif rhs < 0:
                feasible = False
                break
        if feasible and lo <= hi:
            return True
    return False


def vertices_by_definition(points, member) -> tuple:
    """Replay of the vertex definition with a pluggable membership test."""
    pts = sorted(set(map(tuple, points)))
    return tuple(
        x for x in pts if not member(x, [y for y in pts if y != x])
    )


def grid_box(points, pad: int = 2):
    """All lattice points of [0, B]^m with B = max coordinate + pad."""
    from itertools import product

    pts = list(map(tuple, points))
    if not pts:
        return []
    m = len(pts[0])
    b = max(max(p[k] for p in pts) for k in range(m)) + pad
    return list(product(range(b + 1), repeat=m))
