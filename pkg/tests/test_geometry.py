import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wedgepower import (
    AffineUnimodularMap,
    DimensionError,
    PointConfig,
    Polytope,
    apply_map,
    are_equivalent,
    convex_hull_2d,
    exception_index,
    exceptional_triangle,
    lattice_points_of_polytope,
    point_in_hull,
    remove_vertex,
    vertex_set,
)
from wedgepower.geometry import cross

import oracles

FIRST_EXCEPTION = [(0, 1), (1, 0), (-1, -1), (0, 0)]

planar_points = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    min_size=1,
    max_size=8,
    unique=True,
)


def grid_config(n):
    return PointConfig.of([(x, y) for x in range(n) for y in range(n)])


class TestConvexHull:
    def test_triangle_with_interior_point(self):
        hull = convex_hull_2d(PointConfig.of(FIRST_EXCEPTION))
        assert hull.dim_intrinsic == 2
        assert set(hull.vertices) == {(-1, -1), (1, 0), (0, 1)}
        assert (0, 0) not in hull.vertices

    def test_ccw_and_strictly_convex(self):
        hull = convex_hull_2d(PointConfig.of([(0, 0), (1, 0), (0, 1), (1, 1)]))
        assert len(hull.vertices) == 4
        ring = hull.vertices
        for i in range(len(ring)):
            assert cross(ring[i - 2], ring[i - 1], ring[i]) > 0

    def test_collinear_input_gives_segment(self):
        hull = convex_hull_2d(PointConfig.of([(0, 0), (1, 0), (2, 0)]))
        assert hull.dim_intrinsic == 1
        assert set(hull.vertices) == {(0, 0), (2, 0)}

    def test_single_point(self):
        hull = convex_hull_2d(PointConfig.of([(5, -3)]))
        assert hull.dim_intrinsic == 0
        assert hull.vertices == ((5, -3),)

    def test_wrong_dimension_rejected(self):
        with pytest.raises(DimensionError):
            convex_hull_2d(PointConfig.of([(1, 2, 3)]))

    @given(planar_points)
    def test_ring_is_always_strictly_convex(self, raw):
        hull = convex_hull_2d(PointConfig.of(raw))
        ring = hull.vertices
        assert len(set(ring)) == len(ring)
        if hull.dim_intrinsic == 2:
            for i in range(len(ring)):
                assert cross(ring[i - 2], ring[i - 1], ring[i]) > 0


class TestLatticePoints:
    def test_third_exceptional_triangle(self):
        hull = convex_hull_2d(PointConfig.of([(0, 1), (3, 0), (-1, -1)]))
        pts = lattice_points_of_polytope(hull)
        assert pts.points == tuple(
            sorted([(0, 1), (3, 0), (-1, -1), (0, 0), (1, 0), (2, 0)])
        )

    def test_segment(self):
        hull = convex_hull_2d(PointConfig.of([(0, 0), (3, 0)]))
        assert lattice_points_of_polytope(hull).points == ((0, 0), (1, 0), (2, 0), (3, 0))

    def test_unit_triangle(self):
        hull = convex_hull_2d(PointConfig.of([(0, 0), (1, 0), (0, 1)]))
        assert len(lattice_points_of_polytope(hull)) == 3

    def test_dim3_rejected(self):
        poly = Polytope(3, 3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
        with pytest.raises(DimensionError):
            lattice_points_of_polytope(poly)

    @given(planar_points)
    def test_matches_brute_force(self, raw):
        hull = convex_hull_2d(PointConfig.of(raw))
        assert list(lattice_points_of_polytope(hull)) == oracles.hull_lattice_points(raw)


class TestVertexSet:
    def test_interior_point_dropped(self):
        assert set(vertex_set(PointConfig.of(FIRST_EXCEPTION))) == {(0, 1), (1, 0), (-1, -1)}

    def test_grid_corners(self):
        assert set(vertex_set(grid_config(3))) == {(0, 0), (0, 2), (2, 0), (2, 2)}

    def test_collinear_endpoints(self):
        assert set(vertex_set(PointConfig.of([(0, 0), (1, 0), (2, 0)]))) == {(0, 0), (2, 0)}

    def test_dim3_extremal_points(self):
        cloud = PointConfig.of([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)])
        # (1,1,0) is the midpoint of (2,0,0) and (0,2,0), hence not extremal
        assert set(vertex_set(cloud)) == {(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)}


class TestRemoveVertex:
    def test_removes_extremal(self):
        rest = remove_vertex(PointConfig.of(FIRST_EXCEPTION), (0, 1))
        assert set(rest) == {(1, 0), (-1, -1), (0, 0)}

    def test_grid_corner(self):
        assert len(remove_vertex(grid_config(3), (0, 0))) == 8

    def test_interior_rejected(self):
        with pytest.raises(ValueError):
            remove_vertex(grid_config(3), (1, 1))


class TestApplyMap:
    def test_identity(self):
        config = PointConfig.of(FIRST_EXCEPTION)
        assert apply_map(AffineUnimodularMap.identity(2), config) == config

    def test_translation(self):
        config = PointConfig.of(FIRST_EXCEPTION)
        moved = apply_map(AffineUnimodularMap.from_translation((1, 1)), config)
        assert set(moved) == {(1, 2), (2, 1), (0, 0), (1, 1)}
        assert all(0 <= x <= 2 and 0 <= y <= 2 for x, y in moved)

    def test_shear(self):
        shear = AffineUnimodularMap(((1, 1), (0, 1)), (0, 0))
        assert set(apply_map(shear, PointConfig.of([(0, 0), (0, 1)]))) == {(0, 0), (1, 1)}

    def test_bad_determinant_rejected(self):
        with pytest.raises(ValueError):
            AffineUnimodularMap(((2, 0), (0, 1)), (0, 0))
        with pytest.raises(ValueError):
            AffineUnimodularMap(((1, 1), (1, 1)), (0, 0))

    def test_inverse_and_compose(self):
        rng = random.Random(7)
        for _ in range(25):
            m = oracles.random_unimodular(rng)
            both = m.compose(m.inverse())
            assert both == AffineUnimodularMap.identity(2)


class TestEquivalence:
    def test_translation_witness(self):
        config = PointConfig.of(FIRST_EXCEPTION)
        target = apply_map(AffineUnimodularMap.from_translation((1, 1)), config)
        witness = are_equivalent(config, target)
        assert witness is not None
        assert apply_map(witness, config) == target

    def test_different_vertex_counts(self):
        square = PointConfig.of([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert are_equivalent(PointConfig.of(FIRST_EXCEPTION), square) is None

    def test_mirror_image_of_second_exception(self):
        config = exceptional_triangle(2)
        mirror_map = AffineUnimodularMap(((-1, 0), (0, 1)), (0, 0))
        assert mirror_map.det == -1
        target = apply_map(mirror_map, config)
        witness = are_equivalent(config, target)
        assert witness is not None
        assert apply_map(witness, config) == target

    def test_collinear_configurations(self):
        a = PointConfig.of([(0, 0), (1, 0), (3, 0)])
        # same gap pattern up to reversal, along the primitive direction (2,1)
        b = PointConfig.of([(0, 0), (4, 2), (6, 3)])
        witness = are_equivalent(a, b)
        assert witness is not None
        assert apply_map(witness, a) == b

    def test_collinear_gap_mismatch(self):
        a = PointConfig.of([(0, 0), (1, 0), (3, 0)])
        b = PointConfig.of([(0, 0), (1, 0), (4, 0)])
        assert are_equivalent(a, b) is None

    def test_equivalence_relation_on_random_corpus(self):
        rng = random.Random(2024)
        for _ in range(20):
            pts = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(1, 6))}
            base = PointConfig.of(pts)
            # reflexive: the identity is always a witness, and the search agrees
            assert apply_map(AffineUnimodularMap.identity(2), base) == base
            assert are_equivalent(base, base) is not None
            first = apply_map(oracles.random_unimodular(rng), base)
            second = apply_map(oracles.random_unimodular(rng), first)
            w1 = are_equivalent(base, first)
            assert w1 is not None and apply_map(w1, base) == first
            # symmetric: the inverse of a witness is a witness
            assert apply_map(w1.inverse(), first) == base
            # transitive: composition of witnesses is a witness
            w2 = are_equivalent(first, second)
            assert w2 is not None
            assert apply_map(w2.compose(w1), base) == second


class TestExceptionIndex:
    def test_first(self):
        assert exception_index(PointConfig.of(FIRST_EXCEPTION)) == 1

    def test_fourth(self):
        pts = lattice_points_of_polytope(
            convex_hull_2d(PointConfig.of([(0, 1), (4, 0), (-1, -1)]))
        )
        assert len(pts) == 7
        assert exception_index(pts) == 4

    def test_square_is_not_exceptional(self):
        assert exception_index(PointConfig.of([(0, 0), (1, 0), (0, 1), (1, 1)])) is None

    def test_detected_through_random_maps(self):
        rng = random.Random(99)
        for k in range(1, 7):
            base = exceptional_triangle(k)
            assert len(base) == k + 3
            for _ in range(4):
                moved = apply_map(oracles.random_unimodular(rng), base)
                assert exception_index(moved) == k


class TestPointInHull:
    def test_doubled_center_among_pair_sums(self):
        pair_sums = PointConfig.of(
            [(6, 5, 0), (7, 2, 1), (5, 1, 3), (3, 7, 1), (1, 6, 3), (2, 3, 4)]
        )
        assert point_in_hull(pair_sums, (4, 4, 2))

    def test_missing_origin_is_still_inside(self):
        wedge = PointConfig.of([(-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)])
        assert (0, 0) not in wedge
        assert point_in_hull(wedge, (0, 0))

    def test_outside_bounding_box(self):
        wedge = PointConfig.of([(-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)])
        assert not point_in_hull(wedge, (2, 0))

    @given(planar_points, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
    def test_agrees_with_brute_force_in_2d(self, raw, query):
        config = PointConfig.of(raw)
        assert point_in_hull(config, query) == oracles.hull_membership(query, raw)


class TestInvariants:
    @given(planar_points)
    def test_hull_idempotence(self, raw):
        config = PointConfig.of(raw)
        closure = lattice_points_of_polytope(convex_hull_2d(config))
        assert set(config).issubset(set(closure))
        # equality exactly when the configuration is lattice-convex
        assert (closure == config) == oracles.is_lattice_convex(raw)

    def test_unimodular_invariance_of_vertices(self):
        rng = random.Random(5)
        for _ in range(30):
            pts = {(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(1, 9))}
            config = PointConfig.of(pts)
            transform = oracles.random_unimodular(rng)
            moved = apply_map(transform, config)
            assert len(moved) == len(config)
            assert vertex_set(moved) == apply_map(transform, vertex_set(config))

    def test_exact_arithmetic_at_large_magnitudes(self):
        # integer arithmetic never wraps, whatever the coordinate size
        big = 10**18
        config = PointConfig.of([(0, 0), (big, 1), (-big, 1)])
        assert vertex_set(config) == config
        assert config.total() == (0, 2)
