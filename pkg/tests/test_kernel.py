from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from triblock.kernel import (HLine, HPoint, Overlap, Point2, PointHit, Seg,
                             concurrent, dual_line, dual_point, incident,
                             line_join, line_meet, on_segment, orient,
                             parse_hcoords, pt, rat_str, seg,
                             seg_intersection)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=64)
points = st.builds(Point2, rationals, rationals)


def test_orient_examples():
    assert orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(q, p, r) == -orient(p, r, q)


def test_seg_intersection_examples():
    hit = seg_intersection(seg(0, 0, 2, 2), seg(0, 2, 2, 0))
    assert isinstance(hit, PointHit)
    assert hit.point == pt(1, 1)
    assert hit.kind_a == hit.kind_b == "interior"

    hit = seg_intersection(seg(0, 0, 1, 0), seg(1, 0, 2, 1))
    assert hit.point == pt(1, 0)
    assert hit.kind_a == hit.kind_b == "endpoint"

    assert seg_intersection(seg(0, 0, 1, 0), seg(0, 1, 1, 1)) is None


def test_seg_intersection_overlap():
    hit = seg_intersection(seg(0, 0, 4, 0), seg(1, 0, 6, 0))
    assert isinstance(hit, Overlap)
    assert hit.seg.key() == seg(1, 0, 4, 0).key()
    touch = seg_intersection(seg(0, 0, 2, 0), seg(2, 0, 5, 0))
    assert isinstance(touch, PointHit) and touch.point == pt(2, 0)


segments = st.builds(Seg, points, points).filter(lambda s: True)


@given(points, points, points, points)
def test_seg_intersection_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    s, t = Seg(a, b), Seg(c, d)
    h1, h2 = seg_intersection(s, t), seg_intersection(t, s)
    if h1 is None or isinstance(h1, Overlap):
        assert type(h1) == type(h2)
    else:
        assert h1.point == h2.point
        assert (h1.kind_a, h1.kind_b) == (h2.kind_b, h2.kind_a)
        assert on_segment(s, h1.point) and on_segment(t, h1.point)


def test_join_meet_examples():
    l = line_join(pt(0, 0), pt(1, 0))
    assert incident(HPoint(5, 0, 1), l)
    assert not incident(HPoint(5, 1, 1), l)

    vertical0 = line_join(pt(0, 0), pt(0, 1))
    vertical1 = line_join(pt(1, 0), pt(1, 1))
    inf = line_meet(vertical0, vertical1)
    assert inf.is_infinite()
    assert inf == HPoint(0, 1, 0)

    diag = line_join(pt(0, 0), pt(1, 1))
    anti = line_join(pt(1, 0), pt(0, 1))
    assert line_meet(diag, anti).to_affine() == pt(F(1, 2), F(1, 2))


def test_join_meet_errors():
    with pytest.raises(ValueError):
        line_join(pt(1, 2), pt(1, 2))
    l = line_join(pt(0, 0), pt(1, 1))
    with pytest.raises(ValueError):
        line_meet(l, HLine(*l.coords))


def test_concurrent_examples():
    x1 = HLine(1, 0, -1)
    y1 = HLine(0, 1, -1)
    assert concurrent(x1, y1, HLine(1, 1, -2))
    assert not concurrent(x1, y1, HLine(1, 1, -3))
    with pytest.raises(ValueError):
        concurrent(x1, x1, y1)


@given(rationals, rationals, rationals)
def test_concurrent_iff_sum(a, b, c):
    lines = {HLine(1, 0, -a), HLine(0, 1, -b), HLine(1, 1, -c)}
    if len(lines) != 3:
        return
    assert concurrent(*lines) == (a + b == c)


h_coords = st.tuples(rationals, rationals, rationals).filter(
    lambda t: any(v != 0 for v in t))


@given(h_coords)
def test_duality_involution(coords):
    p = HPoint(*coords)
    assert dual_line(dual_point(p)) == p


@given(h_coords, h_coords)
def test_duality_preserves_incidence(pc, lc):
    p, l = HPoint(*pc), HLine(*lc)
    assert incident(p, l) == incident(dual_line(l), dual_point(p))


def test_serialization():
    assert rat_str(F(-3, 7)) == "-3/7"
    assert rat_str(F(5)) == "5/1"
    h = HPoint(F(2), F(4), F(6))
    assert str(h) == "[1/1 : 2/1 : 3/1]"
    assert parse_hcoords("[1/1 : 2/1 : 3/1]") == (F(1), F(2), F(3))
    with pytest.raises(ValueError):
        parse_hcoords("1 : 2 : 3")
    with pytest.raises(ValueError):
        parse_hcoords("[1 : 2]")


def test_degenerate_segment_rejected():
    with pytest.raises(ValueError):
        Seg(pt(1, 1), pt(1, 1))
