"""Point/line blocking configurations and the projective dual pipeline.

The primal side verifies blocked point sets and the counting bound; the
regular-polygon construction is certified in its combinatorial group
model (chord class = index sum mod n).  The dual side finds a minimal
triangle of initial lines, maps each complementary region to a bounded
affine triangle through an exact projective chart, and classifies the
induced arrangements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .arrangement import BuildError, build
from .kernel import (HLine, HPoint, Point2, Rat, Seg, collinear_h, det3,
                     dual_line, dual_point, line_join, line_meet, orient, pt)
from .taxonomy import TagB1, classify
from .validator import validate

F = Fraction


@dataclass(frozen=True)
class PrimalConfig:
    points: Tuple[HPoint, ...]
    blockers: Tuple[HPoint, ...]


@dataclass(frozen=True)
class BlockingConfig:
    lines: Tuple[HLine, ...]
    blockers: Tuple[HLine, ...]


def _dot(p: HPoint, l: HLine) -> Rat:
    return p.a * l.a + p.b * l.b + p.c * l.c


def counting_lower_bound(n: int) -> int:
    """ceil(C(n,2) / floor(n/2)): blockers needed by pure counting."""
    pairs = n * (n - 1) // 2
    cap = n // 2
    return -(-pairs // cap) if cap else 0


@dataclass
class PrimalBlockingReport:
    n: int
    general_position: bool
    collinear_witness: Optional[Tuple[HPoint, HPoint, HPoint]]
    lower_bound: int
    meets_lower_bound: bool
    unblocked: Tuple[Tuple[HPoint, HPoint], ...]
    per_blocker: Tuple[int, ...]

    @property
    def fully_blocked(self) -> bool:
        return self.general_position and not self.unblocked

    def __str__(self) -> str:
        lines = [f"points={self.n} blockers={len(self.per_blocker)} "
                 f"bound>={self.lower_bound}"]
        if not self.general_position:
            lines.append(f"NOT in general position: {self.collinear_witness}")
        if not self.meets_lower_bound:
            lines.append("blocker count below the counting bound")
        if self.unblocked:
            lines.append(f"{len(self.unblocked)} unblocked spanned lines")
            lines += [f"  unblocked {p} {q}" for p, q in self.unblocked]
        else:
            lines.append("all spanned lines blocked")
        lines.append("per-blocker line counts: "
                     + " ".join(str(c) for c in self.per_blocker))
        return "\n".join(lines)


def verify_primal_blocking(cfg: PrimalConfig) -> PrimalBlockingReport:
    pts = cfg.points
    n = len(pts)
    if len(set(pts)) != n or set(pts) & set(cfg.blockers):
        raise ValueError("points must be distinct and disjoint from blockers")
    witness = None
    for trio in itertools.combinations(pts, 3):
        if collinear_h(*trio):
            witness = trio
            break
    unblocked: List[Tuple[HPoint, HPoint]] = []
    per_blocker = [0] * len(cfg.blockers)
    for p, q in itertools.combinations(pts, 2):
        line = line_join(p, q)
        hits = [i for i, b in enumerate(cfg.blockers) if _dot(b, line) == 0]
        for i in hits:
            per_blocker[i] += 1
        if not hits:
            unblocked.append((p, q))
    bound = counting_lower_bound(n)
    return PrimalBlockingReport(
        n, witness is None, witness, bound, len(cfg.blockers) >= bound,
        tuple(unblocked), tuple(per_blocker))


def quadrangle_example() -> PrimalConfig:
    """Four points in general position blocked by their three diagonal points."""
    pts = (HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(0, 1, 1), HPoint(1, 1, 1))
    blockers = (HPoint(F(1, 2), F(1, 2), 1),   # the two diagonals meet here
                HPoint(1, 0, 0),               # direction shared by y=0, y=1
                HPoint(0, 1, 0))               # direction shared by x=0, x=1
    return PrimalConfig(pts, blockers)


@dataclass
class NgonReport:
    n: int
    class_sizes: Tuple[int, ...]
    covered: bool

    @property
    def balanced(self) -> bool:
        return len(set(self.class_sizes)) == 1

    def __str__(self) -> str:
        status = "covered" if self.covered else "NOT covered"
        return (f"n={self.n}: {sum(self.class_sizes)} chords in {self.n} "
                f"classes {list(self.class_sizes)} ({status})")


def ngon_certificate(n: int) -> NgonReport:
    """Chord classes of the regular n-gon in the index-sum group model.

    The chord through vertices i and j belongs to class (i+j) mod n; one
    blocker per class covers every chord.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    sizes = [0] * n
    covered = True
    for i, j in itertools.combinations(range(n), 2):
        sizes[(i + j) % n] += 1
    covered = sum(sizes) == n * (n - 1) // 2
    return NgonReport(n, tuple(sizes), covered)


def dualize_config(cfg: PrimalConfig) -> BlockingConfig:
    report = verify_primal_blocking(cfg)
    if not report.fully_blocked:
        raise ValueError(f"not a blocked configuration in general position:\n{report}")
    return BlockingConfig(tuple(dual_point(p) for p in cfg.points),
                          tuple(dual_point(b) for b in cfg.blockers))


def config_violations(cfg: BlockingConfig) -> List[str]:
    """Structural checks for an n-blocking line configuration."""
    out = []
    lines, blockers = cfg.lines, cfg.blockers
    if len(set(lines)) != len(lines):
        out.append("duplicate initial lines")
    if set(lines) & set(blockers):
        out.append("initial and blocking line sets overlap")
    if len(blockers) != len(lines) - 1:
        out.append(f"|blockers| = {len(blockers)} != |lines| - 1 = {len(lines) - 1}")
    for trio in itertools.combinations(lines, 3):
        if det3(*(l.coords for l in trio)) == 0:
            out.append(f"three concurrent initial lines {trio[0]} {trio[1]} {trio[2]}")
            break
    for l1, l2 in itertools.combinations(lines, 2):
        v = line_meet(l1, l2)
        hits = [b for b in blockers if _dot(v, b) == 0]
        if len(hits) != 1:
            out.append(f"meet {v} of {l1}, {l2} lies on {len(hits)} blocking lines")
    return out


# --- exact projective charts -------------------------------------------------

class Chart:
    """Projective change of coordinates sending a chosen line to infinity."""

    def __init__(self, at_infinity: HLine):
        self.at_infinity = at_infinity
        lam = at_infinity.coords
        rows = None
        basis = ((F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1)))
        for r1, r2 in itertools.combinations(basis, 2):
            if det3(r1, r2, lam) != 0:
                rows = (r1, r2, lam)
                break
        assert rows is not None
        self.m = rows
        self.m_inv = _invert3(rows)

    def point(self, p: HPoint) -> Point2:
        x, y, z = (sum(r[i] * p.coords[i] for i in range(3)) for r in self.m)
        if z == 0:
            raise ValueError(f"{p} lies on the chart's infinity line")
        return Point2(x / z, y / z)

    def line(self, l: HLine) -> Tuple[Rat, Rat, Rat]:
        """Affine covector (a, b, c): a x + b y + c = 0 in chart coordinates."""
        cov = tuple(sum(l.coords[i] * self.m_inv[i][j] for i in range(3))
                    for j in range(3))
        if cov[0] == 0 and cov[1] == 0:
            raise ValueError(f"{l} is the chart's infinity line")
        return cov


def _invert3(rows) -> Tuple[Tuple[Rat, Rat, Rat], ...]:
    d = det3(*rows)
    if d == 0:
        raise ValueError("singular matrix")
    (a, b, c), (p, q, r), (u, v, w) = rows
    cof = ((q * w - r * v, c * v - b * w, b * r - c * q),
           (r * u - p * w, a * w - c * u, c * p - a * r),
           (p * v - q * u, b * u - a * v, a * q - b * p))
    return tuple(tuple(x / d for x in row) for row in cof)


def _candidate_lines():
    seen = set()
    bound = 1
    while bound <= 24:
        rng = range(-bound, bound + 1)
        for a in rng:
            for b in rng:
                for c in rng:
                    if (a, b, c) == (0, 0, 0):
                        continue
                    if max(abs(a), abs(b), abs(c)) != bound:
                        continue
                    line = HLine(a, b, c)
                    if line not in seen:
                        seen.add(line)
                        yield line
        bound += 1
    raise RuntimeError("chart line search exhausted")


def _norm_signs(raw: Sequence[int]) -> Tuple[int, ...]:
    for s in raw:
        if s != 0:
            return tuple(x * s for x in raw)
    raise ValueError("point lies on every line")


def _compatible(raw: Sequence[int], sigma: Sequence[int]) -> bool:
    """Could raw (with zeros) be a closure point of the sigma cell?"""
    for flip in (1, -1):
        if all(r == 0 or r == flip * s for r, s in zip(raw, sigma)):
            return True
    return False


def _point_on_line_param(line: HLine, t, base: HPoint, direc: HPoint) -> HPoint:
    if t is None:   # the parameter at infinity
        return direc
    return HPoint(base.a + t * direc.a, base.b + t * direc.b, base.c + t * direc.c)


def _line_points(l: HLine) -> Tuple[HPoint, HPoint]:
    a, b, c = l.coords
    if a != 0 or b != 0:
        direc = HPoint(b, -a, 0)
        base = HPoint(-c / a, 0, 1) if a != 0 else HPoint(0, -c / b, 1)
    else:
        direc = HPoint(1, 0, 0)
        base = HPoint(0, 1, 0)
    return base, direc


def line_avoids_cell(lam: HLine, cell_lines: Sequence[HLine],
                     sigma: Sequence[int]) -> bool:
    """Exact test that lam misses the closed cell with sign class sigma."""
    base, direc = _line_points(lam)
    params: List[Optional[Rat]] = []
    for l in cell_lines:
        if l == lam:
            return False
        num = _dot(base, l)
        den = _dot(direc, l)
        if den == 0:
            t = None
        else:
            t = -num / den
        if t not in params:
            params.append(t)

    def signs(p: HPoint) -> Tuple[int, ...]:
        return tuple((d > 0) - (d < 0) for d in (_dot(p, l) for l in cell_lines))

    for t in params:
        if _compatible(signs(_point_on_line_param(lam, t, base, direc)), sigma):
            return False
    finite = sorted(t for t in params if t is not None)
    reps: List[Optional[Rat]] = []
    for t1, t2 in zip(finite, finite[1:]):
        reps.append((t1 + t2) / 2)
    if None in params:
        if finite:
            reps.append(finite[-1] + 1)
            reps.append(finite[0] - 1)
    else:
        reps.append(None)   # the wrap arc through lam's infinity point
    if not reps:
        reps.append(F(0))
    for t in reps:
        p = _point_on_line_param(lam, t, base, direc)
        raw = signs(p)
        try:
            if _norm_signs(raw) == tuple(sigma):
                return False
        except ValueError:
            return False
    return True


def find_chart(avoid_points: Iterable[HPoint], forbidden: Iterable[HLine],
               cell: Optional[Tuple[Sequence[HLine], Sequence[int]]] = None) -> Chart:
    """Deterministic search for a chart line clear of the given data."""
    avoid = list(avoid_points)
    taboo = set(forbidden)
    for lam in _candidate_lines():
        if lam in taboo:
            continue
        if any(_dot(p, lam) == 0 for p in avoid):
            continue
        if cell is not None and not line_avoids_cell(lam, cell[0], cell[1]):
            continue
        return Chart(lam)
    raise RuntimeError("no chart line found")


def _all_meets(lines: Sequence[HLine]) -> List[HPoint]:
    out: List[HPoint] = []
    seen: Set[HPoint] = set()
    for l1, l2 in itertools.combinations(lines, 2):
        if l1 == l2:
            continue
        v = line_meet(l1, l2)
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


@dataclass
class MinTriangleResult:
    lines: Tuple[HLine, HLine, HLine]
    chart: Chart
    corners: Tuple[Point2, Point2, Point2]   # in chart coordinates


def find_min_triangle(lines: Sequence[HLine],
                      extra_lines: Sequence[HLine] = ()) -> MinTriangleResult:
    """Three initial lines bounding a cell no other initial line crosses.

    Starts from any triple and repeatedly replaces it with the corner
    triangle cut off by a crossing line; the chart area shrinks every
    step, so this terminates.
    """
    lines = list(lines)
    if len(lines) < 3:
        raise ValueError("need at least three lines")
    for trio in itertools.combinations(lines, 3):
        if det3(*(l.coords for l in trio)) == 0:
            raise ValueError("three concurrent lines")
    everything = list(lines) + [l for l in extra_lines if l not in lines]
    chart = find_chart(_all_meets(everything), everything)
    aff = {l: chart.line(l) for l in lines}

    def meet_aff(l1: HLine, l2: HLine) -> Point2:
        return chart.point(line_meet(l1, l2))

    def value(cov, p: Point2) -> Rat:
        return cov[0] * p.x + cov[1] * p.y + cov[2]

    trio = list(lines[:3])
    while True:
        corners = {l: meet_aff(*(m for m in trio if m is not l)) for l in trio}
        crossing = None
        for l in lines:
            if l in trio:
                continue
            vals = {m: value(aff[l], corners[m]) for m in trio}
            pos = [m for m in trio if vals[m] > 0]
            neg = [m for m in trio if vals[m] < 0]
            if pos and neg:
                crossing = (l, pos if len(pos) == 1 else neg)
                break
        if crossing is None:
            break
        l, lone = crossing
        # corners[m] is the corner opposite line m: keep the lone corner's
        # two lines and replace the line it sits opposite to
        trio = [m for m in trio if m is not lone[0]] + [l]
    corner_pts = tuple(meet_aff(*(m for m in trio if m is not l)) for l in trio)
    if orient(*corner_pts) < 0:
        corner_pts = (corner_pts[0], corner_pts[2], corner_pts[1])
    return MinTriangleResult(tuple(trio), chart, corner_pts)


def _clip_affine_line(cov, corners: Tuple[Point2, Point2, Point2]) -> Optional[Seg]:
    hits: List[Point2] = []
    for i in range(3):
        a, b = corners[i], corners[(i + 1) % 3]
        fa = cov[0] * a.x + cov[1] * a.y + cov[2]
        fb = cov[0] * b.x + cov[1] * b.y + cov[2]
        if fa == 0 and fb == 0:
            return None   # rides an edge: nothing to clip
        if fa == 0:
            hits.append(a)
        elif fb == 0:
            hits.append(b)
        elif (fa > 0) != (fb > 0):
            t = fa / (fa - fb)
            hits.append(Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    uniq = []
    for h in hits:
        if h not in uniq:
            uniq.append(h)
    if len(uniq) != 2:
        return None
    return Seg(uniq[0], uniq[1])


def _triple_cell_classes() -> List[Tuple[int, ...]]:
    return [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]


@dataclass
class RegionOutcome:
    sigma: Tuple[int, ...]
    ok: bool
    detail: str
    n: Optional[int] = None


@dataclass
class PipelineReport:
    ok: bool
    reason: str
    regions: Tuple[RegionOutcome, ...] = ()
    r: Optional[int] = None
    collinear_ok: Optional[bool] = None

    def __str__(self) -> str:
        lines = [("PASS" if self.ok else "FAIL") + f": {self.reason}"]
        for reg in self.regions:
            lines.append(f"  region {reg.sigma}: "
                         + ("ok " if reg.ok else "FAIL ") + reg.detail)
        if self.r is not None:
            lines.append(f"  common side count r={self.r} "
                         f"collinearity={'ok' if self.collinear_ok else 'FAIL'}")
        return "\n".join(lines)


def pipeline_classify(cfg: BlockingConfig) -> PipelineReport:
    """Classify the three regions beside a minimal triangle of initial lines.

    For a genuine blocking configuration every region is an odd nest of
    one level (n = 1) and the three outer crossings are collinear.
    """
    if len(cfg.lines) < 4:
        return PipelineReport(False, "need at least 4 initial lines")
    violations = config_violations(cfg)
    if violations:
        return PipelineReport(False, "not a blocking configuration: "
                              + "; ".join(violations))
    mt = find_min_triangle(cfg.lines, cfg.blockers)
    trio = mt.lines
    everything = list(cfg.lines) + list(cfg.blockers)
    avoid = _all_meets(everything)
    centroid = _unchart(mt.chart,
                        Point2(sum(p.x for p in mt.corners) / 3,
                               sum(p.y for p in mt.corners) / 3))
    min_sigma = _norm_signs(tuple(
        (v > 0) - (v < 0) for v in (_dot(centroid, l) for l in trio)))
    outcomes: List[RegionOutcome] = []
    ns: List[Optional[int]] = []
    for sigma in _triple_cell_classes():
        if sigma == min_sigma:
            continue
        chart = find_chart(avoid, everything, cell=(trio, sigma))
        corners = _cell_polygon(trio, sigma, chart)
        if len(corners) != 3:
            outcomes.append(RegionOutcome(sigma, False,
                                          f"cell has {len(corners)} corners"))
            ns.append(None)
            continue
        initial = []
        for l in cfg.lines:
            if l in trio:
                continue
            clip = _clip_affine_line(chart.line(l), corners)
            if clip is not None:
                initial.append(clip)
        blocking = []
        for bl in cfg.blockers:
            clip = _clip_affine_line(chart.line(bl), corners)
            if clip is not None:
                blocking.append(clip)
        try:
            arr = build(corners, initial, blocking)
        except BuildError as exc:
            outcomes.append(RegionOutcome(sigma, False, f"build failed: {exc}"))
            ns.append(None)
            continue
        verdict = validate(arr, "STRONG")
        if not verdict.ok:
            outcomes.append(RegionOutcome(
                sigma, False, f"validation failed: {verdict.reports[0]}"))
            ns.append(None)
            continue
        result = classify(arr)
        if result is None or not isinstance(result.tag, TagB1):
            got = "no type" if result is None else str(result.tag)
            outcomes.append(RegionOutcome(sigma, False, f"classified as {got}"))
            ns.append(None)
            continue
        outcomes.append(RegionOutcome(sigma, True, str(result.tag), result.tag.n))
        ns.append(result.tag.n)
    if any(n is None for n in ns) or len(set(ns)) != 1:
        return PipelineReport(False,
                              "regions are not a common-size nest family",
                              tuple(outcomes))
    r = ns[0]
    collinear_ok: Optional[bool] = None
    if r == 1:
        others = [l for l in cfg.lines if l not in trio]
        crossings = [[line_meet(m, l) for l in others] for m in trio]
        flat = [v for vs in crossings for v in vs]
        collinear_ok = (len(flat) == 3 and collinear_h(*flat))
    ok = (r == 1 and bool(collinear_ok))
    reason = (f"three nests of size r={r}" if ok
              else f"unexpected side count r={r}")
    return PipelineReport(ok, reason, tuple(outcomes), r, collinear_ok)


def _affine_value(cov, p: Point2) -> Rat:
    return cov[0] * p.x + cov[1] * p.y + cov[2]


def _cell_polygon(lines: Sequence[HLine], sigma: Sequence[int],
                  chart: Chart) -> Tuple[Point2, ...]:
    """Vertex cycle (counterclockwise, chart coordinates) of one cell."""
    lines = list(lines)
    verts: List[Point2] = []
    for i, j in itertools.combinations(range(len(lines)), 2):
        v = line_meet(lines[i], lines[j])
        raw = tuple((d > 0) - (d < 0) for d in (_dot(v, l) for l in lines))
        if _compatible(raw, sigma):
            verts.append(chart.point(v))
    if len(verts) < 3:
        return tuple(verts)
    cx = sum(p.x for p in verts) / len(verts)
    cy = sum(p.y for p in verts) / len(verts)
    import functools

    from .arrangement import _dir_cmp
    key = functools.cmp_to_key(
        lambda p, q: _dir_cmp((p.x - cx, p.y - cy), (q.x - cx, q.y - cy)))
    verts.sort(key=key)
    if orient(verts[0], verts[1], verts[2]) < 0:
        verts.reverse()
    return tuple(verts)


@dataclass
class CellAudit:
    sigma: Tuple[int, ...]
    k: int
    internal: Tuple[bool, ...]
    ok: bool
    detail: str


@dataclass
class RegionAuditReport:
    ok: bool
    cells: Tuple[CellAudit, ...]
    violations: Tuple[str, ...]

    def __str__(self) -> str:
        lines = [("PASS" if self.ok else "FAIL")
                 + f": {len(self.cells)} minimal regions audited"]
        for c in self.cells:
            status = "ok" if c.ok else "FAIL"
            mode = ("internal" if all(c.internal)
                    else "external" if not any(c.internal) else "MIXED")
            lines.append(f"  cell {c.sigma}: k={c.k} {mode} {status} {c.detail}")
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def enumerate_cells(lines: Sequence[HLine]) -> List[Tuple[int, ...]]:
    """Sign classes of all cells of the projective line arrangement."""
    chart = find_chart(_all_meets(lines), lines)
    aff = [chart.line(l) for l in lines]
    cells: Set[Tuple[int, ...]] = set()
    meets = _all_meets(lines)
    for vp in meets:
        v = chart.point(vp)
        dirs = []
        for cov in aff:
            if _affine_value(cov, v) == 0:
                dirs.append((-cov[1], cov[0]))
        for sx, sy in itertools.product((1, -1), repeat=2):
            d = (sx * dirs[0][0] + sy * dirs[1][0],
                 sx * dirs[0][1] + sy * dirs[1][1])
            ts = []
            for cov in aff:
                f0 = _affine_value(cov, v)
                df = cov[0] * d[0] + cov[1] * d[1]
                if df == 0:
                    continue
                t = -f0 / df
                if t > 0:
                    ts.append(t)
            step = min(ts) / 2 if ts else F(1)
            sample = _unchart(chart, Point2(v.x + step * d[0], v.y + step * d[1]))
            raw = tuple((x > 0) - (x < 0)
                        for x in (_dot(sample, l) for l in lines))
            if 0 in raw:
                continue
            cells.add(_norm_signs(raw))
    return sorted(cells)


def region_blocking_audit(cfg: BlockingConfig) -> RegionAuditReport:
    """Check every minimal region: blocked all-or-none, and internally
    blocked regions pair opposite vertices by blocking lines with the
    sliding concurrency family."""
    violations = [v for v in config_violations(cfg)
                  if "concurrent" in v or "duplicate" in v]
    if violations:
        return RegionAuditReport(False, (), tuple(violations))
    lines = list(cfg.lines)
    everything = lines + list(cfg.blockers)
    avoid = _all_meets(everything)
    audits: List[CellAudit] = []
    problems: List[str] = []
    for sigma in enumerate_cells(lines):
        chart = find_chart(avoid, everything, cell=(lines, sigma))
        poly = _cell_polygon(lines, sigma, chart)
        k = len(poly)
        if k < 3:
            problems.append(f"cell {sigma}: degenerate polygon")
            continue
        proj = [_unchart(chart, p) for p in poly]
        betas: List[Optional[HLine]] = []
        internal: List[bool] = []
        ok = True
        detail = ""
        for v, hv in zip(poly, proj):
            through = [b for b in cfg.blockers if _dot(hv, b) == 0]
            if len(through) != 1:
                ok = False
                detail = f"{len(through)} blocking lines through a vertex"
                betas.append(None)
                internal.append(False)
                continue
            b = through[0]
            betas.append(b)
            cov = chart.line(b)
            vals = [_affine_value(cov, p) for p in poly]
            internal.append(any(x > 0 for x in vals) and any(x < 0 for x in vals))
        if ok and any(internal) and not all(internal):
            ok = False
            detail = "mixed internal/external blocking"
        if ok and all(internal):
            if k % 2 != 0:
                ok = False
                detail = f"internally blocked region with odd k={k}"
            else:
                half = k // 2
                for i in range(k):
                    expect = line_join(proj[i], proj[(i + half) % k])
                    if betas[i] != expect or expect not in cfg.blockers:
                        ok = False
                        detail = f"vertex {i}: blocker is not the main diagonal"
                        break
                if ok:
                    for i in range(k):
                        for j in range(1, half + 1):
                            l_a = line_join(proj[(i - j - 1) % k], proj[(i - j) % k])
                            l_b = betas[i]
                            l_c = line_join(proj[(i + j) % k], proj[(i + j + 1) % k])
                            if det3(l_a.coords, l_b.coords, l_c.coords) != 0:
                                ok = False
                                detail = f"sliding concurrency fails at i={i}, j={j}"
                                break
                        if not ok:
                            break
        audits.append(CellAudit(sigma, k, tuple(internal), ok, detail))
        if not ok:
            problems.append(f"cell {sigma}: {detail}")
    return RegionAuditReport(not problems, tuple(audits), tuple(problems))


def _unchart(chart: Chart, p: Point2) -> HPoint:
    coords = (p.x, p.y, F(1))
    orig = tuple(sum(chart.m_inv[i][j] * coords[j] for j in range(3))
                 for i in range(3))
    return HPoint(*orig)


# --- serialization -----------------------------------------------------------

def emit_primal(cfg: PrimalConfig) -> str:
    lines = [f"P {p}" for p in cfg.points] + [f"B {b}" for b in cfg.blockers]
    return "\n".join(lines) + "\n"


def emit_lineconfig(cfg: BlockingConfig) -> str:
    lines = [f"L {l}" for l in cfg.lines] + [f"BL {b}" for b in cfg.blockers]
    return "\n".join(lines) + "\n"


def parse_dual_file(text: str):
    """Parse either a primal (P/B) or a line (L/BL) configuration."""
    from .kernel import parse_hcoords
    pts, pblk, lns, lblk = [], [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tag, rest = line.split(None, 1)
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'TAG [a : b : c]'")
        coords = parse_hcoords(rest)
        if tag == "P":
            pts.append(HPoint(*coords))
        elif tag == "B":
            pblk.append(HPoint(*coords))
        elif tag == "L":
            lns.append(HLine(*coords))
        elif tag == "BL":
            lblk.append(HLine(*coords))
        else:
            raise ValueError(f"line {lineno}: unknown tag {tag!r}")
    if (pts or pblk) and (lns or lblk):
        raise ValueError("file mixes primal points and line configuration")
    if pts or pblk:
        return PrimalConfig(tuple(pts), tuple(pblk))
    return BlockingConfig(tuple(lns), tuple(lblk))
