import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropdiff import ArityError, member_newton, minimal_elements, staircase_hull_2d, vertices_of_finite

from gen import rand_point, rand_points
from oracles import grid_box, member_2d, vertices_by_definition

points_2d = st.lists(
    st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=0, max_size=8
)


class TestMemberNewton:
    def test_interior_combination(self):
        # (2,3) = 2/3*(1,4) + 1/3*(4,1)
        assert member_newton((2, 3), [(1, 4), (4, 1)]) is True

    def test_below_everything(self):
        assert member_newton((0, 0), [(1, 0)]) is False

    def test_dominated(self):
        assert member_newton((5, 2), [(1, 4), (4, 1)]) is True

    def test_empty_set(self):
        assert member_newton((3, 3), []) is False

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            member_newton((1, 2, 3), [(1, 2)])

    def test_against_planar_oracle(self):
        rng = random.Random(101)
        for _ in range(300):
            pts = rand_points(rng, 2, 8, 6)
            p = rand_point(rng, 2, 10)
            assert member_newton(p, pts) == member_2d(p, pts), (p, pts)


class TestVerticesOfFinite:
    def test_staircase_fixture(self):
        assert vertices_of_finite([(1, 4), (2, 3), (3, 3), (4, 1)]) == ((1, 4), (4, 1))

    def test_singleton(self):
        assert vertices_of_finite([(0, 0)]) == ((0, 0),)

    def test_midpoint_dropped(self):
        assert vertices_of_finite([(2, 0), (1, 1), (0, 2)]) == ((0, 2), (2, 0))

    def test_empty(self):
        assert vertices_of_finite([]) == ()

    def test_definition_replay_m2(self):
        rng = random.Random(55)
        for _ in range(100):
            pts = rand_points(rng, 2, 7, 6)
            assert vertices_of_finite(pts) == vertices_by_definition(pts, member_2d)


class TestStaircaseHull:
    def test_staircase_fixture(self):
        assert staircase_hull_2d([(1, 4), (2, 3), (3, 3), (4, 1)]) == ((1, 4), (4, 1))

    def test_two_incomparable(self):
        assert staircase_hull_2d([(0, 5), (5, 0)]) == ((0, 5), (5, 0))

    def test_collinear_dropped(self):
        assert staircase_hull_2d([(1, 4), (2, 3), (4, 1)]) == ((1, 4), (4, 1))

    def test_arity_error(self):
        with pytest.raises(ArityError):
            staircase_hull_2d([(1, 2, 3)])


class TestInvariants:
    def test_domination_shortcut(self):
        rng = random.Random(7)
        for _ in range(500):
            m = rng.choice([1, 2, 3])
            pts = rand_points(rng, m, 6, 5, kmin=1)
            base = rng.choice(pts)
            p = tuple(b + rng.randint(0, 3) for b in base)
            assert member_newton(p, pts) is True

    @settings(max_examples=100, deadline=None)
    @given(points_2d)
    def test_antichain(self, pts):
        v = vertices_of_finite(pts)
        for a in v:
            for b in v:
                if a != b:
                    assert not all(x <= y for x, y in zip(a, b))

    @settings(max_examples=100, deadline=None)
    @given(points_2d)
    def test_idempotence(self, pts):
        v = vertices_of_finite(pts)
        assert vertices_of_finite(v) == v

    def test_newton_polygon_preserved_on_grid(self):
        rng = random.Random(23)
        cases = [(1, 5, 20), (2, 5, 20), (3, 3, 10)]
        for m, hi, reps in cases:
            for _ in range(reps):
                pts = rand_points(rng, m, hi, 4)
                v = vertices_of_finite(pts)
                for p in grid_box(pts):
                    assert member_newton(p, pts) == member_newton(p, v)

    def test_oracle_equivalence_m2(self):
        rng = random.Random(99)
        for _ in range(200):
            pts = rand_points(rng, 2, 10, 6)
            assert staircase_hull_2d(pts) == vertices_of_finite(pts)

    def test_minimal_elements_antichain(self):
        rng = random.Random(3)
        for _ in range(100):
            m = rng.choice([1, 2, 3])
            pts = rand_points(rng, m, 5, 6)
            mins = minimal_elements(pts)
            assert all(
                not (a != b and all(x <= y for x, y in zip(a, b)))
                for a in mins for b in mins
            )
