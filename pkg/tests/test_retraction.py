"""Tests for retraction builders and the window verifier."""

from dataclasses import dataclass
from unittest.mock import patch

import pytest

from digiplane.catalog import (make_block_u, make_diamond_disk, make_edge_union_triangles, make_rectangle,
                               make_tee, make_wedge_45_45)
from digiplane.convexity import decompose_disk, is_convex, octagon_bounds
from digiplane.core import DigitalImage, Point, Window, chessboard_distance
from digiplane.exceptions import (CrossAdjacency, GlueMismatch, IntersectionNotSingleton, NotConvexDisk,
                                  SharedSetNotEdge, WindowTooSmall)
from digiplane.lines import DigitalLine, HalfPlane, Orientation
from digiplane.retraction import (Retraction, SlantedScheme, TableScheme, build_axis_retraction,
                                  build_edge_union_retraction, build_slanted_retraction, build_wedge_retraction,
                                  check_wedge, verify_retraction, verify_retraction_on)


@dataclass(frozen=True)
class OverrideScheme:
    """Another retraction with one value replaced."""

    base: Retraction
    point: Point
    value: Point

    name = "override"

    def evaluate(self, p: Point) -> Point:
        return self.value if p == self.point else self.base(p)


class TestAxisRetraction:
    def test_clamps_to_east_face(self):
        r = build_axis_retraction(make_rectangle(0, 2, 0, 1))
        assert r((5, 5)) == Point(2, 1)

    def test_clamps_into_column(self):
        r = build_axis_retraction(make_rectangle(0, 4, 2, 4))
        assert r((0, 0)) == Point(0, 2)

    def test_identity_on_target(self):
        X = make_diamond_disk(2)
        r = build_axis_retraction(X)
        assert all(r(p) == p for p in X)

    def test_rows(self):
        r = build_axis_retraction(make_diamond_disk(2), Orientation.HORIZONTAL)
        assert r((0, 5)) == Point(0, 2)
        assert r((5, 1)) == Point(1, 1)

    def test_square_verifies(self):
        X = make_rectangle(0, 4, 0, 4)
        report = verify_retraction(build_axis_retraction(X), Window(-3, 7, -3, 7), check_boundary=True)
        assert report.passed
        assert report.checked == 121

    def test_rejects_block_u(self):
        with pytest.raises(NotConvexDisk):
            build_axis_retraction(make_block_u(3))

    def test_table(self):
        frame = build_axis_retraction(make_rectangle(0, 1, 0, 1)).table(Window(-1, 2, 0, 0))
        assert list(frame.columns) == ["x", "y", "rx", "ry"]
        assert frame["rx"].tolist() == [0, 0, 1, 1]


class TestSlantedRetraction:
    def test_perpendicular_foot(self):
        r = build_slanted_retraction(make_diamond_disk(2))
        assert r((3, 3)) == Point(1, 1)

    def test_nearest_endpoint(self):
        r = build_slanted_retraction(make_diamond_disk(2))
        assert r((4, 0)) == Point(2, 0)

    def test_diamond_is_exact(self):
        assert build_slanted_retraction(make_diamond_disk(2)).scheme.exact_sides

    def test_square_corner_is_not_exact(self):
        assert not build_slanted_retraction(make_rectangle(0, 3, 0, 3)).scheme.exact_sides

    def test_segment_face_is_not_exact(self):
        X = DigitalImage.of(p for p in make_rectangle(0, 2, 0, 5) if 1 <= p.x + p.y <= 6)
        nearest = Retraction(X, SlantedScheme(octagon_bounds(X), decompose_disk(X).curve.points))
        assert nearest((3, 3)) == Point(2, 4)
        assert nearest((3, 2)) == Point(2, 3)
        assert nearest((2, 1)) == Point(2, 1)
        assert not verify_retraction(nearest, Window.around(X, 3)).passed

        r = build_slanted_retraction(X)
        assert not r.scheme.exact_sides
        assert verify_retraction(r, Window.around(X, 3), check_boundary=True).passed

    def test_half_planes_land_on_their_side(self):
        X = make_diamond_disk(2)
        r = build_slanted_retraction(X)
        window = Window(-6, 6, -6, 6)
        for offset, side in ((2, 1), (-2, -1)):
            line = DigitalLine(Orientation.SLOPE_MINUS, offset)
            sigma = [p for p in X if line.contains(p)]
            for p in window:
                if HalfPlane(line, side).contains(p):
                    assert r(p) in sigma
            for p in line.points_in(window):
                nearest = min(chessboard_distance(p, q) for q in sigma)
                assert chessboard_distance(p, r(p)) == nearest

    def test_slope_plus(self):
        X = make_diamond_disk(2)
        r = build_slanted_retraction(X, slope=1)
        assert r((-3, 3)) == Point(-1, 1)
        assert verify_retraction(r, Window.around(X, 4)).passed

    def test_rejects_block_u(self):
        with pytest.raises(NotConvexDisk):
            build_slanted_retraction(make_block_u(3))


class TestRandomDisks:
    @pytest.mark.parametrize("build", [
        build_axis_retraction,
        lambda X: build_axis_retraction(X, Orientation.HORIZONTAL),
        build_slanted_retraction,
        lambda X: build_slanted_retraction(X, 1),
    ])
    def test_verifies_with_boundary(self, octagons, build):
        for X in octagons:
            r = build(X)
            report = verify_retraction(r, Window.around(X, 3), check_boundary=True)
            assert report.passed, report.message

    def test_idempotent(self, octagons):
        for X in octagons[:5]:
            r = build_slanted_retraction(X)
            for p in Window.around(X, 3):
                assert r(r(p)) == r(p)


class TestEdgeUnion:
    def test_triangles(self):
        X1, X2 = make_edge_union_triangles()
        r = build_edge_union_retraction(X1, X2)
        assert r.name == "edge-union"
        assert verify_retraction(r, Window(-4, 6, -4, 6)).passed
        for p in [(0, 0), (1, 1), (2, 2)]:
            assert r(p) == Point(*p)

    def test_glued_pieces_meet_only_in_the_edge(self):
        X1, X2 = make_edge_union_triangles()
        r = build_edge_union_retraction(X1, X2)
        assert {r.scheme.first(p) for p in Window(-4, 6, -4, 6) if p.y < p.x} <= {
            Point(0, 0), Point(1, 1), Point(2, 2)}

    def test_tee_shares_a_partial_edge(self):
        tee = make_tee()
        with pytest.raises(SharedSetNotEdge):
            build_edge_union_retraction(tee.X1, tee.X2)

    def test_squares_sharing_a_side(self):
        r = build_edge_union_retraction(make_rectangle(0, 2, 0, 2), make_rectangle(2, 4, 0, 2))
        assert verify_retraction(r, Window(-3, 7, -3, 5)).passed

    def test_non_convex_input(self):
        with pytest.raises(NotConvexDisk):
            build_edge_union_retraction(make_block_u(3), make_rectangle(3, 5, -3, 3))


class TestSplitOctagons:
    @pytest.mark.parametrize("cut", ["antidiagonal", "vertical"])
    def test_union_retracts(self, split_octagons, cut):
        assert len(split_octagons[cut]) >= 10
        for X, X1, X2 in split_octagons[cut]:
            r = build_edge_union_retraction(X1, X2)
            assert r.target.points == X.points
            report = verify_retraction(r, Window.around(X, 3))
            assert report.passed, report.message

    def test_square_cut_along_its_antidiagonal(self):
        square = make_rectangle(0, 3, 0, 3)
        X1 = DigitalImage.of(p for p in square if p.x + p.y <= 3)
        X2 = DigitalImage.of(p for p in square if p.x + p.y >= 3)
        r = build_edge_union_retraction(X1, X2)
        assert r.target.points == square.points
        assert verify_retraction(r, Window(-3, 6, -3, 6)).passed

    def test_slanted_edge_of_a_convex_union_falls_back_to_one_disk(self):
        square = make_rectangle(0, 3, 0, 3)
        X1 = DigitalImage.of(p for p in square if p.x + p.y <= 3)
        X2 = DigitalImage.of(p for p in square if p.x + p.y >= 3)
        with patch("digiplane.retraction._glue", side_effect=GlueMismatch("pieces disagree")):
            r = build_edge_union_retraction(X1, X2)
        assert r.name == "axis"
        assert verify_retraction(r, Window(-3, 6, -3, 6), check_boundary=True).passed

    def test_axis_edge_keeps_the_glue_error(self):
        with patch("digiplane.retraction._glue", side_effect=GlueMismatch("pieces disagree")):
            with pytest.raises(GlueMismatch):
                build_edge_union_retraction(make_rectangle(0, 2, 0, 2), make_rectangle(2, 4, 0, 2))

    def test_non_convex_union_keeps_the_glue_error(self):
        X1 = DigitalImage.of(p for p in make_rectangle(0, 2, 0, 4) if p.y >= p.x)
        X2 = DigitalImage.of(p for p in make_rectangle(0, 4, 0, 2) if p.y <= p.x)
        with patch("digiplane.retraction._glue", side_effect=GlueMismatch("pieces disagree")):
            with pytest.raises(GlueMismatch, match="pieces disagree"):
                build_edge_union_retraction(X1, X2)


class TestWedge:
    def test_wedge_point(self):
        X1, X2 = make_wedge_45_45()
        info = check_wedge(X1, X2)
        assert info.point == Point(0, 0)
        assert info.endpoint_of_both

    def test_corner_touching_squares(self):
        with pytest.raises(CrossAdjacency) as err:
            check_wedge(make_rectangle(-2, 0, -2, 0), make_rectangle(0, 2, 0, 2))
        p, q = err.value.pair
        assert chessboard_distance(p, q) == 1

    def test_same_block(self):
        block = make_rectangle(0, 1, 0, 1)
        with pytest.raises(IntersectionNotSingleton):
            check_wedge(block, block)

    def test_retraction(self):
        X1, X2 = make_wedge_45_45()
        r = build_wedge_retraction(X1, X2)
        assert r.name == "wedge"
        assert r((0, 0)) == Point(0, 0)
        assert verify_retraction(r, Window(-6, 6, -6, 6)).passed

    def test_far_side_lands_in_own_piece(self):
        X1, X2 = make_wedge_45_45()
        r = build_wedge_retraction(X1, X2)
        for p in Window(-6, 6, -6, 6):
            if p.x < 0:
                assert r(p) in X2
            if p.x <= 0:
                assert r.scheme.first(p) == Point(0, 0)


class TestVerifier:
    def test_window_too_small(self):
        r = build_axis_retraction(make_rectangle(0, 4, 0, 4))
        with pytest.raises(WindowTooSmall):
            verify_retraction(r, Window(-1, 5, -1, 5))

    def test_corrupted_entry_breaks_continuity(self):
        X = make_rectangle(0, 4, 0, 4)
        broken = Retraction(X, OverrideScheme(build_axis_retraction(X), Point(0, 6), Point(4, 4)))
        report = verify_retraction(broken, Window(-2, 6, -2, 6))
        assert not report.passed
        assert report.failure == "continuity"
        assert Point(0, 6) in report.counterexample

    def test_tee_table_is_not_continuous(self):
        tee = make_tee()
        report = verify_retraction(tee.R, Window(0, 4, 0, 4), min_pad=0)
        assert not report.passed
        assert report.counterexample == (Point(0, 2), Point(1, 1))

    def test_tee_table_values(self):
        R = make_tee().R
        assert R((0, 1)) == Point(1, 2)
        assert R((0, 0)) == Point(2, 2)
        assert R((1, 0)) == Point(2, 1)
        assert R((1, 1)) == Point(2, 2)

    def test_verify_on_finite_domain(self):
        X = DigitalImage.of([(0, 0), (1, 0), (2, 0)])
        U = DigitalImage.of([(0, 0), (1, 0)])
        r = Retraction(U, TableScheme({Point(2, 0): Point(1, 0)}, domain=X.points))
        assert verify_retraction_on(r, X).passed

    def test_boundary_check_catches_interior_images(self):
        X = make_rectangle(0, 2, 0, 2)
        centre = Retraction(X, OverrideScheme(build_axis_retraction(X), Point(-1, 1), Point(1, 1)))
        report = verify_retraction(centre, Window(-2, 4, -2, 4), check_boundary=True)
        assert report.failure == "boundary"
        assert report.counterexample == (Point(-1, 1),)


def test_boundary_points_map_to_the_curve():
    X = make_rectangle(0, 3, 0, 2)
    curve = decompose_disk(X).curve.points
    r = build_axis_retraction(X)
    assert all(r(p) in curve for p in Window.around(X) if p not in X)
    assert is_convex(X).is_convex_disk
