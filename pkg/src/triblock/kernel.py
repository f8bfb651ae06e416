"""Exact rational primitives for plane and projective geometry.

Everything is built on ``fractions.Fraction``; no floats, no epsilons.
Homogeneous triples are canonicalized (first nonzero coordinate scaled
to 1) so they can be compared and used as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union


Rat = Fraction

RatLike = Union[Rat, int, str]


def rat(v: RatLike) -> Rat:
    """Coerce ints / 'num/den' strings to an exact rational."""
    return v if isinstance(v, Fraction) else Fraction(v)


def rat_str(q: Rat) -> str:
    """Serialize as 'num/den' in lowest terms, denominator always present."""
    return f"{q.numerator}/{q.denominator}"


class Point2(NamedTuple):
    x: Rat
    y: Rat

    def __str__(self) -> str:
        return f"({rat_str(self.x)}, {rat_str(self.y)})"


def pt(x: RatLike, y: RatLike) -> Point2:
    return Point2(rat(x), rat(y))


@dataclass(frozen=True, order=True)
class Seg:
    """Closed segment with distinct endpoints."""

    a: Point2
    b: Point2

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    def key(self) -> tuple:
        """Canonical (endpoint-order-free) identity."""
        return tuple(sorted((self.a, self.b)))

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


def seg(ax, ay, bx, by) -> Seg:
    return Seg(pt(ax, ay), pt(bx, by))


def same_seg(s: Seg, t: Seg) -> bool:
    return s.key() == t.key()


def orient(p: Point2, q: Point2, r: Point2) -> int:
    """Sign of the signed area of triangle pqr; +1 = counterclockwise."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def on_segment(s: Seg, p: Point2) -> bool:
    """Exact closed-segment membership."""
    if orient(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def _endpoint_kind(s: Seg, p: Point2) -> str:
    return "endpoint" if p == s.a or p == s.b else "interior"


class PointHit(NamedTuple):
    point: Point2
    kind_a: str  # endpoint | interior, relative to first segment
    kind_b: str


class Overlap(NamedTuple):
    seg: Seg


SegIntersection = Optional[Union[PointHit, Overlap]]


def seg_intersection(s: Seg, t: Seg) -> SegIntersection:
    """Exact closed intersection of two segments.

    Returns None (disjoint), a PointHit (single common point, tagged
    endpoint/interior per segment), or an Overlap (collinear with a
    common sub-segment of positive length).
    """
    d1 = orient(s.a, s.b, t.a)
    d2 = orient(s.a, s.b, t.b)
    d3 = orient(t.a, t.b, s.a)
    d4 = orient(t.a, t.b, s.b)

    if d1 == 0 and d2 == 0:
        # collinear: compare 1D parameters along s's direction
        dx, dy = s.b.x - s.a.x, s.b.y - s.a.y

        def param(p: Point2) -> Rat:
            return (p.x - s.a.x) * dx + (p.y - s.a.y) * dy

        lo_s, hi_s = sorted((param(s.a), param(s.b)))
        lo_t, hi_t = sorted((param(t.a), param(t.b)))
        lo, hi = max(lo_s, lo_t), min(hi_s, hi_t)
        if lo > hi:
            return None
        pts = {p for p in (s.a, s.b, t.a, t.b) if lo <= param(p) <= hi}
        if lo == hi:
            (p,) = {p for p in pts if param(p) == lo}
            return PointHit(p, _endpoint_kind(s, p), _endpoint_kind(t, p))
        ordered = sorted(pts, key=param)
        return Overlap(Seg(ordered[0], ordered[-1]))

    if d1 * d2 > 0 or d3 * d4 > 0:
        return None

    # proper or touching transversal intersection: solve the 2x2 system
    rx, ry = s.b.x - s.a.x, s.b.y - s.a.y
    qx, qy = t.b.x - t.a.x, t.b.y - t.a.y
    denom = rx * qy - ry * qx
    if denom == 0:
        return None  # parallel, not collinear
    u = ((t.a.x - s.a.x) * qy - (t.a.y - s.a.y) * qx) / denom
    if not (0 <= u <= 1):
        return None
    p = Point2(s.a.x + u * rx, s.a.y + u * ry)
    if not on_segment(t, p):
        return None
    return PointHit(p, _endpoint_kind(s, p), _endpoint_kind(t, p))


def point_in_triangle(p: Point2, a: Point2, b: Point2, c: Point2,
                      strict: bool = False) -> bool:
    s1, s2, s3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    if strict:
        return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


# --- homogeneous projective layer ------------------------------------------

def _canon(a: Rat, b: Rat, c: Rat) -> tuple:
    for lead in (a, b, c):
        if lead != 0:
            return (a / lead, b / lead, c / lead)
    raise ValueError("zero homogeneous triple")


@dataclass(frozen=True)
class HPoint:
    a: Rat
    b: Rat
    c: Rat

    def __post_init__(self):
        a, b, c = _canon(rat(self.a), rat(self.b), rat(self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def coords(self) -> tuple:
        return (self.a, self.b, self.c)

    def is_infinite(self) -> bool:
        return self.c == 0

    def to_affine(self) -> Point2:
        if self.c == 0:
            raise ValueError(f"point at infinity has no affine image: {self}")
        return Point2(self.a / self.c, self.b / self.c)

    def __str__(self) -> str:
        return f"[{rat_str(self.a)} : {rat_str(self.b)} : {rat_str(self.c)}]"


@dataclass(frozen=True)
class HLine:
    a: Rat
    b: Rat
    c: Rat

    def __post_init__(self):
        a, b, c = _canon(rat(self.a), rat(self.b), rat(self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def coords(self) -> tuple:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"[{rat_str(self.a)} : {rat_str(self.b)} : {rat_str(self.c)}]"


def hpoint(p: Point2) -> HPoint:
    return HPoint(p.x, p.y, Fraction(1))


def incident(p: HPoint, l: HLine) -> bool:
    return p.a * l.a + p.b * l.b + p.c * l.c == 0


def _cross(u: tuple, v: tuple) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def line_join(p: Union[HPoint, Point2], q: Union[HPoint, Point2]) -> HLine:
    """Line through two distinct points (cross product of triples)."""
    hp = p if isinstance(p, HPoint) else hpoint(p)
    hq = q if isinstance(q, HPoint) else hpoint(q)
    if hp == hq:
        raise ValueError(f"join of identical points {hp}")
    return HLine(*_cross(hp.coords, hq.coords))


def line_meet(l: HLine, m: HLine) -> HPoint:
    """Common point of two distinct lines; may be at infinity."""
    if l == m:
        raise ValueError(f"meet of identical lines {l}")
    return HPoint(*_cross(l.coords, m.coords))


def det3(r1: tuple, r2: tuple, r3: tuple) -> Rat:
    return (r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
            - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
            + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0]))


def concurrent(l1: HLine, l2: HLine, l3: HLine) -> bool:
    """True iff three pairwise distinct lines share a common point."""
    if l1 == l2 or l1 == l3 or l2 == l3:
        raise ValueError("concurrent() requires pairwise distinct lines")
    return det3(l1.coords, l2.coords, l3.coords) == 0


def collinear_h(p1: HPoint, p2: HPoint, p3: HPoint) -> bool:
    return det3(p1.coords, p2.coords, p3.coords) == 0


def dual_point(p: HPoint) -> HLine:
    return HLine(*p.coords)


def dual_line(l: HLine) -> HPoint:
    return HPoint(*l.coords)


def line_of_seg(s: Seg) -> HLine:
    return line_join(s.a, s.b)


def parse_rat(text: str) -> Rat:
    return Fraction(text.strip())


def parse_hcoords(text: str) -> tuple:
    """Parse '[a/b : c/d : e/f]' into a rational triple."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"expected '[a : b : c]', got {text!r}")
    parts = t[1:-1].split(":")
    if len(parts) != 3:
        raise ValueError(f"expected three homogeneous coordinates in {text!r}")
    return tuple(parse_rat(p) for p in parts)


def convex_hull_area2(points: Iterable[Point2]) -> Rat:
    """Twice the signed area of a polygon given by its vertex cycle."""
    pts = list(points)
    total = Fraction(0)
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        total += p.x * q.y - p.y * q.x
    return total
