"""Intersection-condition checks and the parity audit.

Condition I: no three sbar members concurrent, and every sbar x sbar
intersection carries exactly one blocking segment (optional at the
triangle corners).  Condition II: every sbar x blocking intersection
lies on exactly two sbar members.  Condition A: the five-consecutive-
vertex concurrency condition on minimal regions, checked over cyclic
windows in both orientations (wrapping for faces with fewer than five
region-vertices).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .arrangement import (AmbiguousBlocking, Region, TriangleArrangement,
                          beta, blocks_internally, minimal_regions,
                          sbar_vertex_map, subdivision)
from .kernel import (Overlap, Point2, Seg, det3, line_of_seg, on_segment,
                     seg_intersection)


@dataclass(frozen=True)
class ViolationReport:
    condition: str                       # I | II | A | PARITY
    message: str
    points: Tuple[Point2, ...] = ()
    segs: Tuple[Seg, ...] = ()
    wrapped: bool = False

    def __str__(self) -> str:
        loc = f" AT {self.points[0]}" if self.points else ""
        tail = " [wrapped window]" if self.wrapped else ""
        return f"COND {self.condition}{loc} {self.message}{tail}"


def check_condition_i(arr: TriangleArrangement) -> List[ViolationReport]:
    reports: List[ViolationReport] = []
    corners = set(arr.corners)
    for p, rec in sorted(sbar_vertex_map(arr).items()):
        if len(rec.carriers_s) >= 3:
            reports.append(ViolationReport(
                "I", f"{len(rec.carriers_s)} sbar members concurrent",
                (p,), rec.carriers_s))
        nblock = len(rec.carriers_b)
        if p in corners:
            if nblock > 1:
                reports.append(ViolationReport(
                    "I", f"{nblock} blocking segments through a corner",
                    (p,), rec.carriers_b))
        elif nblock == 0:
            reports.append(ViolationReport("I", "vertex has no blocking segment", (p,)))
        elif nblock > 1:
            reports.append(ViolationReport(
                "I", f"{nblock} blocking segments through a vertex",
                (p,), rec.carriers_b))
    return reports


def check_condition_ii(arr: TriangleArrangement) -> List[ViolationReport]:
    reports: List[ViolationReport] = []
    members = arr.sbar()
    seen: Dict[Point2, None] = {}
    for b in arr.blocking:
        for s in members:
            hit = seg_intersection(b, s)
            if hit is None:
                continue
            if isinstance(hit, Overlap):
                reports.append(ViolationReport(
                    "II", "blocking segment overlaps an sbar member",
                    (hit.seg.a,), (b, s)))
                continue
            p = hit.point
            if p in seen:
                continue
            seen[p] = None
            count = sum(1 for m in members if on_segment(m, p))
            if count != 2:
                reports.append(ViolationReport(
                    "II", f"{count} sbar members through a blocking intersection"
                          " (need exactly 2)", (p,), (b,)))
    return sorted(reports, key=lambda r: r.points)


def _window_checks(arr: TriangleArrangement, region: Region,
                   order: Tuple[Tuple[Point2, Seg], ...]) -> List[ViolationReport]:
    """Run all five-vertex windows along one orientation of the cycle.

    ``order`` holds (vertex, carrier-of-stretch-to-next-vertex) pairs.
    """
    reports = []
    m = len(order)
    for i in range(m):
        idx = [(i + d) % m for d in range(5)]
        v = [order[j][0] for j in idx]
        carrier12 = order[idx[0]][1]
        carrier45 = order[idx[3]][1]
        wrapped = m < 5
        b3 = beta(arr, v[2])
        if b3 is None:
            continue
        if seg_intersection(carrier12, b3) is None:
            continue
        if not blocks_internally(arr, region, v[2]):
            continue
        l1 = line_of_seg(carrier12)
        lb = line_of_seg(b3)
        l45 = line_of_seg(carrier45)
        lines = {l1, lb, l45}
        if len(lines) < 3:
            continue  # repeated line: concurrency holds wherever the premise does
        if det3(l1.coords, lb.coords, l45.coords) != 0:
            reports.append(ViolationReport(
                "A", f"window {v[0]},{v[1]},{v[2]},{v[3]},{v[4]} not concurrent",
                tuple(v), (carrier12, b3, carrier45), wrapped=wrapped))
    return reports


def check_condition_a(arr: TriangleArrangement) -> List[ViolationReport]:
    reports: List[ViolationReport] = []
    for region in minimal_regions(arr):
        stretches = region.vertex_stretches()
        if len(stretches) < 3:
            continue
        try:
            reports.extend(_window_checks(arr, region, stretches))
            rev = _reverse_stretches(stretches)
            reports.extend(_window_checks(arr, region, rev))
        except AmbiguousBlocking as exc:
            reports.append(ViolationReport(
                "A", f"precondition broken: {exc}", (stretches[0][0],)))
    # forward/backward runs may find the same witness set; keep unique
    uniq = {(r.points, r.message): r for r in reports}
    return sorted(uniq.values(), key=lambda r: (r.points, r.message))


def _reverse_stretches(stretches):
    """Same vertex cycle traversed backwards, carriers re-attached."""
    m = len(stretches)
    out = []
    for i in range(m - 1, -1, -1):
        v = stretches[i][0]
        carrier = stretches[i - 1][1]  # stretch to the previous vertex
        out.append((v, carrier))
    return tuple(out)


@dataclass
class Verdict:
    ok: bool
    level: str
    reports: Tuple[ViolationReport, ...]

    def __str__(self) -> str:
        if self.ok:
            return f"PASS {self.level}"
        lines = [f"FAIL {self.level} ({len(self.reports)} violations)"]
        lines += [str(r) for r in self.reports]
        return "\n".join(lines)


def validate(arr: TriangleArrangement, level: str = "TBA") -> Verdict:
    """Check intersection conditions; level is 'TBA' or 'STRONG'."""
    if level not in ("TBA", "STRONG"):
        raise ValueError(f"unknown level {level!r}")
    reports = check_condition_i(arr) + check_condition_ii(arr)
    if level == "STRONG" and not reports:
        reports += check_condition_a(arr)
    return Verdict(not reports, level, tuple(reports))


@dataclass
class ParityReport:
    seed: int
    samples: int
    faces_checked: int
    violations: Tuple[ViolationReport, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        head = (f"parity audit seed={self.seed} samples={self.samples} "
                f"faces={self.faces_checked}: ")
        if self.ok:
            return head + "all even"
        return head + f"{len(self.violations)} odd faces\n" + "\n".join(
            str(v) for v in self.violations)


def parity_audit(arr: TriangleArrangement, seed: int, samples: int) -> ParityReport:
    """Count internally blocked region-vertices per face; all must be even.

    Audits the full subdivision plus ``samples`` random subsets of the
    initial segments (each kept with probability 1/2, seeded).
    """
    rng = random.Random(seed)
    subsets = [tuple(arr.initial)]
    for _ in range(samples):
        subsets.append(tuple(s for s in arr.initial if rng.getrandbits(1)))
    violations: List[ViolationReport] = []
    faces_checked = 0
    beta_cache: Dict[Point2, Optional[Seg]] = {}
    from .arrangement import segment_meets_open_region

    for subset in subsets:
        sub = subdivision(arr, subset)
        for face in sub.faces:
            faces_checked += 1
            count = 0
            for v in face.region_vertices():
                try:
                    if v not in beta_cache:
                        beta_cache[v] = beta(arr, v)
                except AmbiguousBlocking as exc:
                    violations.append(ViolationReport(
                        "PARITY", f"precondition broken: {exc}", (v,)))
                    break
                b = beta_cache[v]
                if b is not None and segment_meets_open_region(b, face):
                    count += 1
            else:
                if count % 2 != 0:
                    violations.append(ViolationReport(
                        "PARITY", f"face with {count} internally blocked vertices",
                        face.points()))
    return ParityReport(seed, samples, faces_checked, tuple(violations))
