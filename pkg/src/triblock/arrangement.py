"""Triangle arrangements: the (T, S, B) data model and its subdivisions.

S holds the proper initial segments, B the blocking segments; ``sbar``
is S plus the three triangle edges.  Faces of the subdivision by any
subset of sbar are extracted by leftmost-turn walking with exact
angular comparisons, so every face is a convex rational polygon.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .kernel import (Overlap, Point2, PointHit, Rat, Seg, convex_hull_area2,
                     on_segment, orient, seg_intersection)


class BuildError(ValueError):
    """Structural invariant violated while assembling an arrangement."""

    def __init__(self, message: str, witness: Optional[Point2] = None):
        super().__init__(message + (f" at {witness}" if witness is not None else ""))
        self.witness = witness


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class TriangleArrangement:
    corners: Tuple[Point2, Point2, Point2]
    initial: Tuple[Seg, ...]   # proper initial segments
    blocking: Tuple[Seg, ...]

    @property
    def size(self) -> int:
        return len(self.initial) + len(self.blocking)

    def edges(self) -> Tuple[Seg, Seg, Seg]:
        c = self.corners
        return (Seg(c[0], c[1]), Seg(c[1], c[2]), Seg(c[2], c[0]))

    def sbar(self) -> Tuple[Seg, ...]:
        return self.edges() + self.initial

    def area2(self) -> Rat:
        return convex_hull_area2(self.corners)


def _check_on_boundary(arr_edges: Sequence[Seg], s: Seg, kind: str) -> None:
    for p in (s.a, s.b):
        if not any(on_segment(e, p) for e in arr_edges):
            raise BuildError(f"{kind} segment endpoint off boundary", p)
    for e in arr_edges:
        hit = seg_intersection(s, e)
        if hit is None:
            continue
        if isinstance(hit, Overlap):
            raise BuildError(f"{kind} segment overlaps a triangle edge", hit.seg.a)
        if hit.kind_a == "interior":
            raise BuildError(f"interior of {kind} segment touches boundary", hit.point)


def build(corners: Sequence[Point2], initial: Iterable[Seg],
          blocking: Iterable[Seg]) -> TriangleArrangement:
    """Assemble and structurally validate an arrangement.

    Raises BuildError naming the violated invariant and a witness point.
    The intersection conditions proper are the validator's job, not
    build's.
    """
    if len(corners) != 3:
        raise BuildError("exactly three corners required")
    c = tuple(corners)
    turn = orient(*c)
    if turn == 0:
        raise BuildError("collinear corners", c[0])
    if turn < 0:
        raise BuildError("corners must be in counterclockwise order", c[0])

    def canon(segs: Iterable[Seg]) -> Tuple[Seg, ...]:
        return tuple(sorted((Seg(*sorted((s.a, s.b))) for s in segs),
                            key=lambda s: s.key()))

    arr = TriangleArrangement(c, canon(initial), canon(blocking))
    edges = arr.edges()

    seen_keys: Dict[tuple, str] = {}
    for s in arr.initial:
        k = s.key()
        if k in seen_keys:
            raise BuildError("duplicate initial segment", s.a)
        seen_keys[k] = "S"
        _check_on_boundary(edges, s, "initial")
        for p in (s.a, s.b):
            if p in c:
                raise BuildError("proper initial segment ends at a corner", p)
    for s in arr.blocking:
        k = s.key()
        if k in seen_keys:
            kind = seen_keys[k]
            raise BuildError("duplicate blocking segment" if kind == "B"
                             else "segment listed as both initial and blocking", s.a)
        seen_keys[k] = "B"
        _check_on_boundary(edges, s, "blocking")
    return arr


# --- planar subdivision -----------------------------------------------------

def _dir_cmp(d1: Tuple[Rat, Rat], d2: Tuple[Rat, Rat]) -> int:
    """Counterclockwise angular order starting from the +x axis."""
    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1
    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    return 0 if cross == 0 else (-1 if cross > 0 else 1)


@dataclass
class Region:
    """One convex face: vertex cycle with the carrier of each outgoing edge.

    A cycle point is a region-vertex only when its incoming and outgoing
    boundary edges lie on different carriers; collinear pass-through
    points are not counted.
    """

    cycle: Tuple[Tuple[Point2, Seg], ...]  # (point, carrier of edge leaving it)
    vertex_flags: Tuple[bool, ...] = field(default=())

    def __post_init__(self):
        if not self.vertex_flags:
            n = len(self.cycle)
            flags = []
            for i in range(n):
                prev_carrier = self.cycle[i - 1][1]
                flags.append(self.cycle[i][1].key() != prev_carrier.key())
            self.vertex_flags = tuple(flags)

    def points(self) -> Tuple[Point2, ...]:
        return tuple(p for p, _ in self.cycle)

    def region_vertices(self) -> Tuple[Point2, ...]:
        return tuple(p for (p, _), f in zip(self.cycle, self.vertex_flags) if f)

    def vertex_stretches(self) -> Tuple[Tuple[Point2, Seg], ...]:
        """Region-vertices with the carrier running to the next one."""
        return tuple((p, carrier) for (p, carrier), f
                     in zip(self.cycle, self.vertex_flags) if f)

    def area2(self) -> Rat:
        return convex_hull_area2(self.points())

    def is_convex(self) -> bool:
        pts = self.points()
        n = len(pts)
        return all(orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) >= 0
                   for i in range(n))

    def contains_open(self, p: Point2) -> bool:
        pts = self.points()
        n = len(pts)
        return all(orient(pts[i], pts[(i + 1) % n], p) > 0 for i in range(n))


@dataclass
class Subdivision:
    corners: Tuple[Point2, Point2, Point2]
    carriers: Tuple[Seg, ...]              # generating subset plus edges
    vertices: Tuple[Point2, ...]
    faces: Tuple[Region, ...]
    carriers_at: Dict[Point2, Tuple[Seg, ...]] = field(repr=False, default_factory=dict)


def subdivision(arr: TriangleArrangement, subset: Iterable[Seg]) -> Subdivision:
    """Faces of the subdivision of T by the subset (edges always included)."""
    carriers: List[Seg] = list(arr.edges())
    keys = {s.key() for s in carriers}
    sset = {s.key() for s in arr.initial}
    for s in subset:
        if s.key() not in sset:
            raise GeometryError(f"subset member is not a proper initial segment: {s}")
        if s.key() not in keys:
            carriers.append(s)
            keys.add(s.key())

    pts_on: List[List[Point2]] = [[] for _ in carriers]
    for i in range(len(carriers)):
        for j in range(i + 1, len(carriers)):
            hit = seg_intersection(carriers[i], carriers[j])
            if hit is None:
                continue
            if isinstance(hit, Overlap):
                raise GeometryError("overlapping carriers in subdivision")
            pts_on[i].append(hit.point)
            pts_on[j].append(hit.point)

    adjacency: Dict[Point2, List[Tuple[Point2, Seg]]] = {}
    carriers_at: Dict[Point2, List[Seg]] = {}
    for carrier, pts in zip(carriers, pts_on):
        d = (carrier.b.x - carrier.a.x, carrier.b.y - carrier.a.y)
        uniq = sorted(set(pts) | {carrier.a, carrier.b},
                      key=lambda p: (p.x - carrier.a.x) * d[0] + (p.y - carrier.a.y) * d[1])
        for p in uniq:
            carriers_at.setdefault(p, []).append(carrier)
        for u, v in zip(uniq, uniq[1:]):
            adjacency.setdefault(u, []).append((v, carrier))
            adjacency.setdefault(v, []).append((u, carrier))

    cmp = functools.cmp_to_key(
        lambda e1, e2: _dir_cmp(e1[2], e2[2]))
    out_sorted: Dict[Point2, List[Tuple[Point2, Seg, tuple]]] = {}
    for u, nbrs in adjacency.items():
        entries = [(v, carrier, (v.x - u.x, v.y - u.y)) for v, carrier in nbrs]
        entries.sort(key=cmp)
        out_sorted[u] = entries

    visited = set()
    faces: List[Region] = []
    outer_seen = 0
    for u0, entries in out_sorted.items():
        for v0, carrier0, _ in entries:
            if (u0, v0) in visited:
                continue
            cycle: List[Tuple[Point2, Seg]] = []
            u, v, carrier = u0, v0, carrier0
            while (u, v) not in visited:
                visited.add((u, v))
                cycle.append((u, carrier))
                entries_v = out_sorted[v]
                back = next(i for i, (w, _, _) in enumerate(entries_v) if w == u)
                # previous edge in ccw order = leftmost turn, interior on the left
                nv, ncarrier, _ = entries_v[(back - 1) % len(entries_v)]
                u, v, carrier = v, nv, ncarrier
            region = Region(tuple(cycle))
            if region.area2() > 0:
                faces.append(region)
            else:
                outer_seen += 1
    assert outer_seen == 1, "expected exactly one outer face"

    total = sum(f.area2() for f in faces)
    assert total == arr.area2(), "face areas must sum to the triangle area"
    assert all(f.is_convex() for f in faces)

    faces.sort(key=lambda f: min(f.points()))
    return Subdivision(arr.corners, tuple(carriers),
                       tuple(sorted(adjacency.keys())), tuple(faces),
                       {p: tuple(cs) for p, cs in carriers_at.items()})


def minimal_regions(arr: TriangleArrangement) -> Tuple[Region, ...]:
    """Faces of the subdivision by the full sbar."""
    return subdivision(arr, arr.initial).faces


@dataclass(frozen=True)
class VertexRecord:
    location: Point2
    carriers_s: Tuple[Seg, ...]
    carriers_b: Tuple[Seg, ...]


def sbar_vertex_map(arr: TriangleArrangement) -> Dict[Point2, VertexRecord]:
    """All pairwise intersection points of sbar members, with incidences."""
    members = arr.sbar()
    points: Dict[Point2, None] = {}
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            hit = seg_intersection(members[i], members[j])
            if isinstance(hit, PointHit):
                points[hit.point] = None
            elif isinstance(hit, Overlap):
                raise GeometryError("overlapping sbar members")
    out = {}
    for p in points:
        cs = tuple(sorted((s for s in members if on_segment(s, p)),
                          key=lambda s: s.key()))
        cb = tuple(sorted((s for s in arr.blocking if on_segment(s, p)),
                          key=lambda s: s.key()))
        out[p] = VertexRecord(p, cs, cb)
    return out


class AmbiguousBlocking(GeometryError):
    pass


def beta(arr: TriangleArrangement, v: Point2) -> Optional[Seg]:
    """The unique blocking segment through a vertex, None if there is none.

    None is only legitimate at triangle corners; the validator reports
    missing blockers elsewhere.  Two or more blockers raise.
    """
    carriers = [s for s in arr.sbar() if on_segment(s, v)]
    if len(carriers) < 2:
        raise GeometryError(f"{v} is not a vertex (lies on {len(carriers)} sbar members)")
    through = [b for b in arr.blocking if on_segment(b, v)]
    if len(through) > 1:
        raise AmbiguousBlocking(f"{len(through)} blocking segments through {v}")
    return through[0] if through else None


def segment_meets_open_region(s: Seg, region: Region) -> bool:
    """Exact test: does the segment intersect the open convex face?"""
    pts = region.points()
    n = len(pts)
    lo, hi = Fraction(0), Fraction(1)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        # f(t) = orient(p, q, s.a + t*(s.b - s.a)) is linear in t
        fa = (q.x - p.x) * (s.a.y - p.y) - (q.y - p.y) * (s.a.x - p.x)
        fb = (q.x - p.x) * (s.b.y - p.y) - (q.y - p.y) * (s.b.x - p.x)
        df = fb - fa
        if df == 0:
            if fa < 0:
                return False
            continue
        t_zero = -fa / df
        if df > 0:
            lo = max(lo, t_zero)
        else:
            hi = min(hi, t_zero)
        if lo > hi:
            return False
    if lo >= hi:
        return False
    tm = (lo + hi) / 2
    mid = Point2(s.a.x + tm * (s.b.x - s.a.x), s.a.y + tm * (s.b.y - s.a.y))
    return region.contains_open(mid)


def blocks_internally(arr: TriangleArrangement, region: Region, v: Point2) -> bool:
    """Is v internally blocked in the region (its blocker meets the interior)?"""
    b = beta(arr, v)
    if b is None:
        return False
    return segment_meets_open_region(b, region)


def _clip_to_triangle(s: Seg, tri: Tuple[Point2, Point2, Point2]) -> Optional[Seg]:
    lo, hi = Fraction(0), Fraction(1)
    for i in range(3):
        p, q = tri[i], tri[(i + 1) % 3]
        fa = (q.x - p.x) * (s.a.y - p.y) - (q.y - p.y) * (s.a.x - p.x)
        fb = (q.x - p.x) * (s.b.y - p.y) - (q.y - p.y) * (s.b.x - p.x)
        df = fb - fa
        if df == 0:
            if fa < 0:
                return None
            continue
        t_zero = -fa / df
        if df > 0:
            lo = max(lo, t_zero)
        else:
            hi = min(hi, t_zero)
        if lo >= hi:
            return None
    def at(t: Rat) -> Point2:
        return Point2(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y))
    return Seg(at(lo), at(hi))


def induce(arr: TriangleArrangement, tri: Sequence[Point2]) -> TriangleArrangement:
    """Sub-arrangement obtained by clipping everything to an inner triangle.

    Each edge of the inner triangle must ride on an sbar member; S clips
    equal to inner edges are discarded, degenerate clips are dropped.
    """
    tri = tuple(tri)
    if len(tri) != 3 or orient(*tri) == 0:
        raise GeometryError("inner triangle must have three non-collinear corners")
    if orient(*tri) < 0:
        tri = (tri[0], tri[2], tri[1])
    for p in tri:
        if not point_in_triangle_arr(arr, p):
            raise GeometryError(f"inner corner {p} outside the arrangement triangle")
    members = arr.sbar()
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        if not any(on_segment(s, a) and on_segment(s, b) for s in members):
            raise GeometryError(f"inner edge {a}-{b} not carried by an sbar member")
    edge_keys = {Seg(tri[i], tri[(i + 1) % 3]).key() for i in range(3)}
    new_s, new_b = [], []
    for s in arr.initial:
        c = _clip_to_triangle(s, tri)
        if c is not None and c.key() not in edge_keys:
            new_s.append(c)
    for b in arr.blocking:
        c = _clip_to_triangle(b, tri)
        if c is not None and c.key() not in edge_keys:
            new_b.append(c)
    return build(tri, new_s, new_b)


def point_in_triangle_arr(arr: TriangleArrangement, p: Point2) -> bool:
    c = arr.corners
    return (orient(c[0], c[1], p) >= 0 and orient(c[1], c[2], p) >= 0
            and orient(c[2], c[0], p) >= 0)
