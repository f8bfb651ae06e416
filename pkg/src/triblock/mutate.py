"""Seeded mutations used by the fuzz driver and the mutation test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .arrangement import BuildError, TriangleArrangement, build
from .kernel import Point2, Seg, on_segment

PERTURB = Fraction(1, 1009)


def delete_blocking(arr: TriangleArrangement, idx: int) -> TriangleArrangement:
    keep = [b for i, b in enumerate(arr.blocking) if i != idx]
    return build(arr.corners, arr.initial, keep)


def delete_initial(arr: TriangleArrangement, idx: int) -> TriangleArrangement:
    keep = [s for i, s in enumerate(arr.initial) if i != idx]
    return build(arr.corners, keep, arr.blocking)


def _shift_on_edge(arr: TriangleArrangement, p: Point2,
                   delta: Fraction) -> Optional[Point2]:
    """Move a boundary point along its hosting edge; None if neither
    direction stays strictly inside the edge."""
    for e in arr.edges():
        if not on_segment(e, p):
            continue
        d = (e.b.x - e.a.x, e.b.y - e.a.y)
        for sign in (1, -1):
            q = Point2(p.x + sign * delta * d[0], p.y + sign * delta * d[1])
            if on_segment(e, q) and q != e.a and q != e.b:
                return q
    return None


def perturb_endpoint(arr: TriangleArrangement, kind: str, idx: int, end: int,
                     delta: Fraction = PERTURB) -> Optional[TriangleArrangement]:
    """Shift one endpoint of one segment by a fraction of its edge vector.

    Returns None when no legal shift exists; raises BuildError when the
    shifted arrangement no longer assembles.
    """
    pool = arr.initial if kind == "S" else arr.blocking
    seg = pool[idx]
    p = (seg.a, seg.b)[end]
    q = _shift_on_edge(arr, p, delta)
    if q is None or q == (seg.b, seg.a)[end]:
        return None
    new = Seg(q, seg.b) if end == 0 else Seg(seg.a, q)
    repl = [new if i == idx else s for i, s in enumerate(pool)]
    if kind == "S":
        return build(arr.corners, repl, arr.blocking)
    return build(arr.corners, arr.initial, repl)


def reroute_blocking(arr: TriangleArrangement, idx: int,
                     rng: random.Random) -> TriangleArrangement:
    """Reattach one end of a blocking segment at a random boundary spot."""
    seg = arr.blocking[idx]
    edge = arr.edges()[rng.randrange(3)]
    t = Fraction(rng.randint(1, 30), 31)
    q = Point2(edge.a.x + t * (edge.b.x - edge.a.x),
               edge.a.y + t * (edge.b.y - edge.a.y))
    if q == seg.a or q == seg.b:
        t = Fraction(rng.randint(31, 60), 61)
        q = Point2(edge.a.x + t * (edge.b.x - edge.a.x),
                   edge.a.y + t * (edge.b.y - edge.a.y))
    repl = [Seg(seg.a, q) if i == idx else b for i, b in enumerate(arr.blocking)]
    return build(arr.corners, arr.initial, repl)
