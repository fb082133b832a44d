"""Tests for digital segments, lines, half-planes and separation."""

import pytest

from digiplane.catalog import (make_diamond_disk, make_edge_union_triangles, make_rectangle, make_tee,
                               make_wedge_45_45)
from digiplane.core import Point, Window
from digiplane.exceptions import BadSlope, NoSeparation, NotCollinear, NotConnected, NotConvexDisk
from digiplane.lines import (DigitalLine, HalfPlane, Orientation, classify_segment, half_plane_contains,
                             is_separation_line, linear_form, sandwich_lines, separation_line)


class TestClassifySegment:
    def test_diagonal(self):
        seg = classify_segment([(2, 2), (0, 0), (1, 1)])
        assert seg.orientation is Orientation.SLOPE_PLUS
        assert seg.endpoints == (Point(0, 0), Point(2, 2))

    def test_horizontal(self):
        seg = classify_segment([(0, 0), (1, 0), (2, 0)])
        assert seg.orientation is Orientation.HORIZONTAL
        assert len(seg) == 3

    def test_anti_diagonal(self):
        seg = classify_segment([(0, 2), (1, 1), (2, 0)])
        assert seg.orientation is Orientation.SLOPE_MINUS
        assert seg.line() == DigitalLine(Orientation.SLOPE_MINUS, 2)

    def test_gap(self):
        with pytest.raises(NotConnected):
            classify_segment([(0, 0), (2, 2)])

    def test_not_collinear(self):
        with pytest.raises(NotCollinear):
            classify_segment([(0, 0), (1, 0), (1, 1)])

    def test_bad_slope(self):
        with pytest.raises(BadSlope):
            classify_segment([(0, 0), (2, 1)])

    def test_single_point_is_degenerate(self):
        seg = classify_segment([(7, 7)])
        assert seg.is_degenerate
        assert seg.start == seg.end == Point(7, 7)


class TestHalfPlanes:
    def test_boundary_is_included(self):
        assert half_plane_contains(HalfPlane(DigitalLine(Orientation.HORIZONTAL, 2), 1), (0, 2))

    def test_wrong_side(self):
        assert not half_plane_contains(HalfPlane(DigitalLine(Orientation.SLOPE_MINUS, 0), -1), (3, 3))

    def test_slope_plus_side(self):
        assert half_plane_contains(HalfPlane(DigitalLine(Orientation.SLOPE_PLUS, -2), 1), (1, 1))

    @pytest.mark.parametrize("orientation", list(Orientation))
    def test_opposite_half_planes_meet_in_the_line(self, orientation):
        line = DigitalLine(orientation, 1)
        h = HalfPlane(line, 1)
        window = Window(-4, 4, -4, 4)
        for p in window:
            inside = h.contains(p), h.opposite().contains(p)
            assert any(inside)
            assert all(inside) == line.contains(p)

    def test_points_in_window(self):
        line = DigitalLine(Orientation.SLOPE_MINUS, 0)
        assert line.points_in(Window(-1, 1, -1, 1)) == [Point(-1, 1), Point(0, 0), Point(1, -1)]
        assert str(line) == "x+y=0"


class TestSandwichLines:
    def test_rectangle_columns(self):
        low, high = sandwich_lines(make_rectangle(0, 4, 2, 4), Orientation.VERTICAL)
        assert (low.offset, high.offset) == (0, 4)

    def test_diamond_diagonals(self):
        X = make_diamond_disk(2)
        low, high = sandwich_lines(X, Orientation.SLOPE_MINUS)
        assert (low.offset, high.offset) == (-2, 2)
        values = [linear_form(Orientation.SLOPE_MINUS, p) for p in X]
        assert (min(values), max(values)) == (-2, 2)

    def test_segment_is_not_a_disk(self):
        with pytest.raises(NotConvexDisk):
            sandwich_lines(make_rectangle(0, 1, 0, 0), Orientation.HORIZONTAL)


class TestSeparationLine:
    def test_tee(self):
        tee = make_tee()
        assert separation_line(tee.X1, tee.X2) == DigitalLine(Orientation.HORIZONTAL, 2)

    def test_triangles_share_the_diagonal(self):
        X1, X2 = make_edge_union_triangles()
        assert separation_line(X1, X2) == DigitalLine(Orientation.SLOPE_PLUS, 0)

    def test_shifted_triangles(self):
        X1, X2 = (X.translate(2, 0) for X in make_edge_union_triangles())
        line = separation_line(X1, X2)
        assert line == DigitalLine(Orientation.SLOPE_PLUS, -2)
        assert is_separation_line(line, X1, X2)

    def test_wedge_prefers_vertical(self):
        X1, X2 = make_wedge_45_45()
        assert separation_line(X1, X2) == DigitalLine(Orientation.VERTICAL, 0)
        assert is_separation_line(DigitalLine(Orientation.SLOPE_MINUS, 0), X1, X2)
        assert not is_separation_line(DigitalLine(Orientation.HORIZONTAL, 0), X1, X2)

    def test_disjoint_images(self):
        with pytest.raises(NoSeparation):
            separation_line(make_rectangle(0, 1, 0, 1), make_rectangle(5, 6, 5, 6))

    def test_overlapping_squares(self):
        with pytest.raises(NoSeparation):
            separation_line(make_rectangle(0, 2, 0, 2), make_rectangle(1, 3, 1, 3))
