import math
import random

import pytest

from geoph.alpha import (
    alpha_filtration,
    build_alpha_complex,
    delaunay_triangulation,
)
from geoph.complexes import all_faces_closure
from geoph.errors import DegenerateTriangulationError, NumericalError
from geoph.geometry import PointCloud
from geoph.homology import barcode_of, betti_oracle
from geoph.rips import build_vr_complex

from helpers import circumcircle_has_point_strictly, hull_point_count, naive_vr


def cloud(*pts):
    return PointCloud(points=tuple(pts))


def random_cloud(rng, n, scale=10.0):
    return cloud(*[(rng.uniform(0, scale), rng.uniform(0, scale)) for _ in range(n)])


class TestDelaunay:
    def test_three_points_one_triangle(self):
        tri = delaunay_triangulation(cloud((0, 0), (4, 0), (0, 3)))
        assert tri.triangles == ((0, 1, 2),)
        assert tri.boundary_edges() == {(0, 1), (0, 2), (1, 2)}

    def test_two_points_edge_only(self):
        tri = delaunay_triangulation(cloud((0, 0), (2, 0)))
        assert tri.triangles == ()
        assert tri.edges() == {(0, 1)}

    def test_collinear_raises(self):
        with pytest.raises(DegenerateTriangulationError):
            delaunay_triangulation(cloud((0, 0), (1, 0), (2, 0), (3, 0)))

    def test_duplicates_raise(self):
        with pytest.warns(UserWarning):
            pc = cloud((0, 0), (0, 0), (1, 0), (0, 1))
        with pytest.raises(NumericalError):
            delaunay_triangulation(pc)

    def test_square_breaks_tie_toward_lex_smallest_diagonal(self):
        # all four labelings of a unit square must give the 0-2 diagonal
        corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
        for shift in range(4):
            pts = corners[shift:] + corners[:shift]
            tri = delaunay_triangulation(cloud(*pts))
            diagonals = set()
            for t in tri.triangles:
                diagonals.update(
                    e for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))
                )
            assert len(tri.triangles) == 2
            assert (0, 2) in diagonals
            assert (1, 3) not in diagonals

    def test_regular_grid_is_deterministic_and_delaunay(self):
        pts = [(float(c), float(r)) for r in range(4) for c in range(4)]
        tri1 = delaunay_triangulation(cloud(*pts))
        tri2 = delaunay_triangulation(cloud(*pts))
        assert tri1.triangles == tri2.triangles
        assert len(tri1.triangles) == 18  # 2 per grid square
        for t in tri1.triangles:
            for q in range(len(pts)):
                if q not in t:
                    assert not circumcircle_has_point_strictly(pts, t, q)

    def test_random_clouds_verified_and_complete(self):
        rng = random.Random(29)
        for _ in range(25):
            n = rng.randrange(3, 30)
            pc = random_cloud(rng, n)
            tri = delaunay_triangulation(pc)
            pts = pc.points
            for t in tri.triangles:
                for q in range(n):
                    if q not in t:
                        assert not circumcircle_has_point_strictly(pts, t, q)
            # Euler: a triangulation of n points with h on the hull
            # has 2n - 2 - h triangles and 3n - 3 - h edges.
            h = hull_point_count(pts)
            assert len(tri.triangles) == 2 * n - 2 - h
            assert len(tri.edges()) == 3 * n - 3 - h


class TestAlphaFiltration:
    def test_equilateral_values(self):
        height = math.sqrt(3.0) / 2.0
        fc = build_alpha_complex(cloud((0, 0), (1, 0), (0.5, height)))
        assert fc.value_of((0, 1)) == pytest.approx(0.5, abs=1e-9)
        assert fc.value_of((0, 1, 2)) == pytest.approx(1 / math.sqrt(3.0), abs=1e-9)
        loops = barcode_of(fc).rendered(1)
        assert len(loops) == 1
        assert loops[0].birth == pytest.approx(0.5, abs=1e-9)
        assert loops[0].death == pytest.approx(1 / math.sqrt(3.0), abs=1e-9)

    def test_right_triangle_hypotenuse_is_not_gabriel(self):
        fc = build_alpha_complex(cloud((0, 0), (3, 0), (0, 4)))
        assert fc.value_of((0, 1)) == pytest.approx(1.5)  # leg, Gabriel
        assert fc.value_of((0, 2)) == pytest.approx(2.0)  # leg, Gabriel
        # diametral circle of the hypotenuse passes through the right angle
        assert fc.value_of((1, 2)) == pytest.approx(2.5)
        assert fc.value_of((0, 1, 2)) == pytest.approx(2.5)

    def test_two_points_edge_at_half_distance(self):
        fc = build_alpha_complex(cloud((0, 0), (2, 0)))
        assert fc.value_of((0, 1)) == pytest.approx(1.0)

    def test_single_point(self):
        assert list(build_alpha_complex(cloud((7, 7)))) == [((0,), 0.0)]

    def test_vertices_enter_at_zero(self):
        rng = random.Random(31)
        fc = build_alpha_complex(random_cloud(rng, 12))
        for v in range(12):
            assert fc.value_of((v,)) == 0.0

    def test_complex_is_closure_of_triangulation(self):
        rng = random.Random(37)
        for _ in range(10):
            pc = random_cloud(rng, rng.randrange(3, 25))
            tri = delaunay_triangulation(pc)
            fc = alpha_filtration(tri, pc)
            assert set(fc.simplices()) == all_faces_closure(tri.triangles)

    def test_contained_in_rips_at_double_radius(self):
        rng = random.Random(41)
        for _ in range(10):
            n = rng.randrange(3, 12)
            pc = random_cloud(rng, n, scale=5.0)
            try:
                fc = build_alpha_complex(pc)
            except DegenerateTriangulationError:
                continue
            reference = naive_vr(list(pc.points), 2.0 * fc.max_value())
            for s, value in fc:
                assert s in reference
                assert reference[s] <= 2.0 * value + 1e-9

    def test_betti_profile_matches_oracle(self):
        rng = random.Random(43)
        for _ in range(10):
            fc = build_alpha_complex(random_cloud(rng, 15))
            bc = barcode_of(fc)
            for t in fc.distinct_values():
                assert bc.bars_alive_at(t) == betti_oracle(fc.complex_at(t))

    def test_mismatched_cloud_rejected(self):
        pc = cloud((0, 0), (1, 0), (0, 1))
        tri = delaunay_triangulation(pc)
        with pytest.raises(ValueError):
            alpha_filtration(tri, cloud((0, 0), (2, 0), (0, 2)))
