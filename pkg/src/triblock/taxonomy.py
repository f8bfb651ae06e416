"""Type taxonomy: constructive generators, the recognizer, hexagonal grids.

Seven schemas are supported.  Basic types hang nested families of
segments off one, two or three corners; intersecting types add crossing
fans whose pair-crossings ride a fixed transversal; the triangular type
is an affine three-pencil lattice.  Generators build exact rational
instances (seeded jitter on every free choice) and post-validate them;
``classify`` pattern-matches a validated arrangement back to its schema
over all corner orderings.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import (GeometryError, TriangleArrangement, build, induce,
                          sbar_vertex_map)
from .kernel import (Point2, PointHit, Rat, Seg, line_join, det3, on_segment,
                     orient, pt, seg_intersection)
from .validator import validate

F = Fraction
CORNER_NAMES = ("x1", "x2", "x3")
Labeling = Dict[str, Point2]


class GenerationError(RuntimeError):
    """A generator produced an invalid instance; this is a bug."""


# --- tags -------------------------------------------------------------------

@dataclass(frozen=True)
class TagB0:
    kind = "B0"

    def __str__(self):
        return "B0"


@dataclass(frozen=True)
class TagB1:
    first: int           # corner index playing the nest corner
    n: int
    kind = "B1"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("B1 needs n >= 1")

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"

    def __str__(self):
        return (f"B1{{first={CORNER_NAMES[self.first]},n={self.n},"
                f"parity={self.parity}}}")


@dataclass(frozen=True)
class TagB2:
    corner_a: int
    n_a: int
    corner_b: int
    n_b: int
    kind = "B2"

    def __post_init__(self):
        if self.corner_a == self.corner_b:
            raise ValueError("B2 needs two distinct corners")
        if self.n_a < 2 or self.n_b < 2 or self.n_a % 2 or self.n_b % 2:
            raise ValueError("B2 sizes must be even and >= 2")
        if self.corner_a > self.corner_b:
            a, na, b, nb = self.corner_b, self.n_b, self.corner_a, self.n_a
            object.__setattr__(self, "corner_a", a)
            object.__setattr__(self, "n_a", na)
            object.__setattr__(self, "corner_b", b)
            object.__setattr__(self, "n_b", nb)

    def __str__(self):
        return (f"B2{{a={CORNER_NAMES[self.corner_a]},n={self.n_a},"
                f"b={CORNER_NAMES[self.corner_b]},m={self.n_b}}}")


@dataclass(frozen=True)
class TagB3:
    sizes: Tuple[int, int, int]   # family size at each corner, by corner index
    kind = "B3"

    def __post_init__(self):
        k, l, m = self.sizes
        if min(self.sizes) < 1:
            raise ValueError("B3 needs all three families nonempty")
        if len({v % 2 for v in self.sizes}) != 1:
            raise ValueError("B3 sizes must share parity")

    @property
    def parity(self) -> str:
        return "even" if self.sizes[0] % 2 == 0 else "odd"

    def __str__(self):
        s = self.sizes
        return f"B3{{s1={s[0]},s2={s[1]},s3={s[2]}}}"


def _check_inner(n: int) -> None:
    if n != 0 and (n < 2 or n % 2):
        raise ValueError("inner arrangement must be empty or even-sized")


@dataclass(frozen=True)
class TagI1:
    y1: int              # corner holding the inner arrangement
    y2: int              # corner the crossing fan hangs off
    k: int
    inner: int           # 0 for empty, else even nest size
    kind = "I1"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("I1 needs k >= 1")
        if self.y1 == self.y2:
            raise ValueError("I1 corners must differ")
        _check_inner(self.inner)

    def __str__(self):
        inner = "B0" if self.inner == 0 else f"B1n{self.inner}"
        return (f"I1{{y1={CORNER_NAMES[self.y1]},y2={CORNER_NAMES[self.y2]},"
                f"k={self.k},inner={inner}}}")


@dataclass(frozen=True)
class TagI2:
    y1: int
    fan_a: Tuple[int, int]   # (corner, pair count)
    fan_b: Tuple[int, int]
    inner: int
    variant: str             # cross | straight
    kind = "I2"

    def __post_init__(self):
        ca, ka = self.fan_a
        cb, kb = self.fan_b
        if len({self.y1, ca, cb}) != 3:
            raise ValueError("I2 needs three distinct corners")
        if ka < 1 or kb < 1:
            raise ValueError("I2 needs k, l >= 1")
        if self.variant not in ("cross", "straight"):
            raise ValueError(f"unknown I2 variant {self.variant!r}")
        _check_inner(self.inner)
        if ca > cb:
            object.__setattr__(self, "fan_a", (cb, kb))
            object.__setattr__(self, "fan_b", (ca, ka))

    def __str__(self):
        inner = "B0" if self.inner == 0 else f"B1n{self.inner}"
        return (f"I2{{y1={CORNER_NAMES[self.y1]},a={CORNER_NAMES[self.fan_a[0]]},"
                f"ka={self.fan_a[1]},b={CORNER_NAMES[self.fan_b[0]]},"
                f"lb={self.fan_b[1]},inner={inner},bprime={self.variant}}}")


@dataclass(frozen=True)
class TagT:
    k: int
    inners: Tuple[int, int, int]   # corner sub-arrangement sizes, by corner
    kind = "T"

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("T needs k >= 2")
        for n in self.inners:
            _check_inner(n)

    def __str__(self):
        names = ["B0" if n == 0 else f"B1n{n}" for n in self.inners]
        return f"T{{k={self.k},i1={names[0]},i2={names[1]},i3={names[2]}}}"


TypeTag = object  # union of the Tag* dataclasses

_KIND_ORDER = {"B0": 0, "B1": 1, "B2": 2, "B3": 3, "I1": 4, "I2": 5, "T": 6}


def parse_tag(text: str) -> TypeTag:
    """Parse the textual tag form, e.g. 'B1{first=x1,n=4,parity=even}'."""
    text = text.strip()
    if "{" in text:
        if not text.endswith("}"):
            raise ValueError(f"malformed tag {text!r}")
        kind, body = text[:text.index("{")], text[text.index("{") + 1:-1]
    else:
        kind, body = text, ""
    fields: Dict[str, str] = {}
    if body.strip():
        for part in body.split(","):
            if "=" not in part:
                raise ValueError(f"malformed tag field {part!r} in {text!r}")
            key, val = part.split("=", 1)
            fields[key.strip()] = val.strip()

    def corner(name: str, default: int) -> int:
        val = fields.get(name)
        if val is None:
            return default
        if val not in CORNER_NAMES:
            raise ValueError(f"unknown corner {val!r}")
        return CORNER_NAMES.index(val)

    def num(name: str, default: Optional[int] = None) -> int:
        if name not in fields:
            if default is None:
                raise ValueError(f"tag {text!r} missing field {name!r}")
            return default
        return int(fields[name])

    def inner(name: str) -> int:
        val = fields.get(name, "B0")
        if val == "B0":
            return 0
        if val.startswith("B1n"):
            return int(val[3:])
        raise ValueError(f"unknown inner spec {val!r}")

    if kind == "B0":
        return TagB0()
    if kind == "B1":
        tag = TagB1(corner("first", 0), num("n"))
        want = fields.get("parity")
        if want and want != tag.parity:
            raise ValueError(f"parity {want!r} inconsistent with n={tag.n}")
        return tag
    if kind == "B2":
        return TagB2(corner("a", 0), num("n"), corner("b", 2), num("m"))
    if kind == "B3":
        return TagB3((num("s1"), num("s2"), num("s3")))
    if kind == "I1":
        return TagI1(corner("y1", 0), corner("y2", 1), num("k"), inner("inner"))
    if kind == "I2":
        return TagI2(corner("y1", 0), (corner("a", 1), num("ka")),
                     (corner("b", 2), num("lb")), inner("inner"),
                     fields.get("bprime", "cross"))
    if kind == "T":
        return TagT(num("k"), (inner("i1"), inner("i2"), inner("i3")))
    raise ValueError(f"unknown tag kind {kind!r}")


# --- seeded rational helpers ------------------------------------------------

def _rnd_fracs(rng: random.Random, count: int, lo: Rat, hi: Rat) -> List[Rat]:
    """Strictly increasing rationals in the open interval (lo, hi)."""
    den = 8 * (count + 3)
    numerators = sorted(rng.sample(range(1, den), count))
    return [lo + (hi - lo) * F(q, den) for q in numerators]


def _rnd_frac(rng: random.Random, lo: Rat, hi: Rat) -> Rat:
    den = 64
    return lo + (hi - lo) * F(rng.randint(1, den - 1), den)


class _Affine:
    """Exact affine map: p -> M p + t."""

    def __init__(self, m00, m01, m10, m11, t0, t1):
        self.m = (F(m00), F(m01), F(m10), F(m11))
        self.t = (F(t0), F(t1))
        if self.m[0] * self.m[3] - self.m[1] * self.m[2] == 0:
            raise GeometryError("singular affine map")

    def __call__(self, p: Point2) -> Point2:
        return Point2(self.m[0] * p.x + self.m[1] * p.y + self.t[0],
                      self.m[2] * p.x + self.m[3] * p.y + self.t[1])

    def seg(self, s: Seg) -> Seg:
        return Seg(self(s.a), self(s.b))

    @staticmethod
    def from_triangles(src: Sequence[Point2], dst: Sequence[Point2]) -> "_Affine":
        """Unique affine map sending src[i] to dst[i]."""
        a, b, c = src
        ex, ey = b.x - a.x, c.x - a.x
        fx, fy = b.y - a.y, c.y - a.y
        det = ex * fy - ey * fx
        if det == 0:
            raise GeometryError("degenerate source triangle")
        # columns of M in the (b-a, c-a) basis mapped to (dst basis)
        da, db, dc = dst
        ux, uy = db.x - da.x, db.y - da.y
        vx, vy = dc.x - da.x, dc.y - da.y
        m00 = (ux * fy - vx * fx) / det
        m01 = (vx * ex - ux * ey) / det
        m10 = (uy * fy - vy * fx) / det
        m11 = (vy * ex - uy * ey) / det
        t0 = da.x - m00 * a.x - m01 * a.y
        t1 = da.y - m10 * a.x - m11 * a.y
        out = _Affine.__new__(_Affine)
        out.m = (m00, m01, m10, m11)
        out.t = (t0, t1)
        return out


def _seeded_triangle(rng: random.Random) -> Tuple[Point2, Point2, Point2]:
    """A mildly jittered counterclockwise triangle."""
    def j():
        return F(rng.randint(-8, 8), 64)
    scale = F(rng.randint(1, 3))
    base = (pt(0, 0), pt(1, 0), pt(0, 1))
    m = _Affine(1 + j(), j(), j(), 1 + j(),
                F(rng.randint(0, 8), 8), F(rng.randint(0, 8), 8))
    corners = tuple(Point2(scale * q.x, scale * q.y) for q in map(m, base))
    if orient(*corners) <= 0:
        corners = (corners[0], corners[2], corners[1])
    return corners


# --- structure builders (role frame) ----------------------------------------

def _nest_segments(y1: Point2, y2: Point2, y3: Point2,
                   pa: Sequence[Rat], pb: Sequence[Rat], prefix: str,
                   labels: Labeling) -> Tuple[List[Seg], List[Seg]]:
    """A nested family at corner y1: i-th points along y1y2 / y1y3 joined.

    Blocking pairs swap neighbours; odd families finish at the far
    corners y2, y3.  Parameters are fractions of the edge vectors.
    """
    n = len(pa)
    v = [Point2(y1.x + t * (y2.x - y1.x), y1.y + t * (y2.y - y1.y)) for t in pa]
    u = [Point2(y1.x + t * (y3.x - y1.x), y1.y + t * (y3.y - y1.y)) for t in pb]
    for i, (vp, up) in enumerate(zip(v, u), 1):
        labels[f"{prefix}v{i}"] = vp
        labels[f"{prefix}u{i}"] = up
    initial = [Seg(vi, ui) for vi, ui in zip(v, u)]
    vv = v + [y2] if n % 2 else v
    uu = u + [y3] if n % 2 else u
    blocking = []
    for i in range(0, len(vv) - 1, 2):
        blocking.append(Seg(vv[i], uu[i + 1]))
        blocking.append(Seg(vv[i + 1], uu[i]))
    return initial, blocking


def _fan_skeleton(rng: random.Random, pairs: int):
    """Diagonal-block fan in the slope-1 frame.

    Returns (pivots, a_vals, b_vals): the line through (a, 0) and (0, b)
    of each matched pair passes through (s_i, s_i).  Both value lists
    are strictly increasing; pair i pairs a[2i-2] with b[2i-1] and
    a[2i-1] with b[2i-2].
    """
    pivots, a_vals, b_vals = [], [], []
    for i in range(1, pairs + 1):
        s = F(4) ** i
        r1 = F(5, 4) + F(rng.randint(-1, 1), 64)
        r2 = F(4, 3) + F(rng.randint(-1, 1), 64)
        pivots.append(s)
        a_vals.extend([r1 * s, r2 * s])
        b_vals.extend([s * r2 / (r2 - 1), s * r1 / (r1 - 1)])
    assert all(x < y for x, y in zip(a_vals, a_vals[1:]))
    assert all(x < y for x, y in zip(b_vals, b_vals[1:]))
    return pivots, a_vals, b_vals


def _fan_pair_segments(xpts: Sequence[Point2], ypts: Sequence[Point2]):
    """Crossing-fan segment sets given matched boundary points.

    xpts/ypts are ordered outward; S joins 2i-1 with 2i across sides,
    B joins equals at the nest bottom and bridges between blocks.
    """
    k2 = len(xpts)
    initial = []
    for i in range(0, k2, 2):
        initial.append(Seg(xpts[i], ypts[i + 1]))
        initial.append(Seg(xpts[i + 1], ypts[i]))
    blocking = [Seg(xpts[0], ypts[0])]
    for i in range(2, k2, 2):
        blocking.append(Seg(xpts[i - 1], ypts[i]))
        blocking.append(Seg(xpts[i], ypts[i - 1]))
    return initial, blocking


def _b1_unit(rng: random.Random, n: int, prefix: str, labels: Labeling,
             frame: Tuple[Point2, Point2, Point2]):
    pa = _rnd_fracs(rng, n, F(1, 16), F(7, 8))
    pb = _rnd_fracs(rng, n, F(1, 16), F(7, 8))
    return _nest_segments(*frame, pa, pb, prefix, labels)


# --- generators -------------------------------------------------------------

def _gen_b1(tag: TagB1, rng: random.Random, roles, labels):
    y1, y2, y3 = roles
    return _b1_unit(rng, tag.n, "", labels, (y1, y2, y3))


def _gen_b2(tag: TagB2, rng: random.Random, roles, labels):
    # families at y1 and y3, sharing the edge y1-y3
    y1, y2, y3 = roles
    s1, b1 = _nest_segments(y1, y2, y3,
                            _rnd_fracs(rng, tag.n_a, F(1, 16), F(2, 5)),
                            _rnd_fracs(rng, tag.n_a, F(1, 16), F(2, 5)),
                            "", labels)
    s2, b2 = _nest_segments(y3, y1, y2,
                            _rnd_fracs(rng, tag.n_b, F(1, 16), F(2, 5)),
                            _rnd_fracs(rng, tag.n_b, F(1, 16), F(2, 5)),
                            "w.", labels)
    return s1 + s2, b1 + b2


def _gen_b3(tag: TagB3, rng: random.Random, roles, labels):
    y1, y2, y3 = roles
    k, l, m = tag.sizes
    lim = F(5, 16)
    fams = []
    for corner, (nxt, prv), size, prefix in (
            (y1, (y2, y3), k, "f1."), (y2, (y3, y1), l, "f2."),
            (y3, (y1, y2), m, "f3.")):
        pa = _rnd_fracs(rng, size, F(1, 16), lim)
        pb = _rnd_fracs(rng, size, F(1, 16), lim)
        nexts = [Point2(corner.x + t * (nxt.x - corner.x),
                        corner.y + t * (nxt.y - corner.y)) for t in pa]
        prevs = [Point2(corner.x + t * (prv.x - corner.x),
                        corner.y + t * (prv.y - corner.y)) for t in pb]
        for i, (a, b) in enumerate(zip(nexts, prevs), 1):
            labels[f"{prefix}n{i}"] = a
            labels[f"{prefix}p{i}"] = b
        fams.append((nexts, prevs))
    initial, blocking = [], []
    for nexts, prevs in fams:
        size = len(nexts)
        initial += [Seg(a, b) for a, b in zip(nexts, prevs)]
        top = size if size % 2 == 0 else size - 1
        for i in range(0, top, 2):
            blocking.append(Seg(nexts[i], prevs[i + 1]))
            blocking.append(Seg(nexts[i + 1], prevs[i]))
    if k % 2 == 1:
        # hexagon main diagonals block the leftover outermost vertices
        (n1, p1), (n2, p2), (n3, p3) = fams
        blocking += [Seg(n1[-1], p3[-1]), Seg(p2[-1], n3[-1]), Seg(n2[-1], p1[-1])]
    return initial, blocking


def _scaled_fan(rng, pairs, x_extent, y_extent):
    """Fan points on the two axes plus pivot points, exactly scaled."""
    pivots, a_vals, b_vals = _fan_skeleton(rng, pairs)
    dx = x_extent / a_vals[-1]
    cy = y_extent / b_vals[-1]
    xs = [dx * a for a in a_vals]
    ys = [cy * b for b in b_vals]
    piv = [(dx * s, cy * s) for s in pivots]
    return xs, ys, piv, cy / dx  # slope of the pivot ray


def _gen_i1(tag: TagI1, rng: random.Random, roles, labels):
    # natural frame: y2 at the origin, y3 = (1,0), y1 = (0,1)
    y1, y2, y3 = pt(0, 1), pt(0, 0), pt(1, 0)
    xs, ys, piv, slope = _scaled_fan(rng, tag.k, F(1, 2), F(1, 4))
    u = [Point2(x, F(0)) for x in xs]
    v = [Point2(F(0), y) for y in ys]
    z3 = Point2(1 / (1 + slope), slope / (1 + slope))
    zeta = _rnd_frac(rng, F(5, 16), F(7, 8))
    z2 = Point2(F(0), zeta)
    initial, blocking = _fan_pair_segments(u, v)
    blocking += [Seg(y2, z3), Seg(y3, v[-1]), Seg(z2, u[-1])]
    initial.append(Seg(z2, z3))
    inner_s, inner_b = ([], [])
    if tag.inner:
        inner_s, inner_b = _b1_unit(rng, tag.inner, "in.", labels, (y1, z2, z3))
    for i, p in enumerate(u, 1):
        labels[f"u{i}"] = p
    for i, p in enumerate(v, 1):
        labels[f"v{i}"] = p
    for i, (px, py) in enumerate(piv, 1):
        labels[f"p{i}"] = Point2(px, py)
    labels["z2"], labels["z3"] = z2, z3
    frame = {"y1": y1, "y2": y2, "y3": y3}
    return initial + inner_s, blocking + inner_b, frame


def _gen_i2(tag: TagI2, rng: random.Random, roles, labels):
    y1, y2, y3 = pt(0, 1), pt(0, 0), pt(1, 0)
    k, l = tag.fan_a[1], tag.fan_b[1]
    h = F(1, 5)
    # fan at y2: free side on the bottom edge, computed side up the left edge
    vx, uy, piv1, slope1 = _scaled_fan(rng, k, F(2, 5), h)
    v = [Point2(x, F(0)) for x in vx]
    u = [Point2(F(0), y) for y in uy]
    t_top = Point2(1 / (1 + slope1), slope1 / (1 + slope1))
    xi = slope1 / (1 + slope1)
    # fan at y3 in local coordinates (origin y3, x toward y2, y toward y1)
    slope2 = h / (1 - h)
    piv2_sk, a2, b2 = _fan_skeleton(rng, l)
    cy2 = xi / b2[-1]
    dx2 = cy2 / slope2
    if dx2 * a2[-1] >= F(1, 2):
        raise GenerationError("fan at the far corner does not fit")
    w = [Point2(1 - dx2 * a, F(0)) for a in a2]
    t = [Point2(1 - cy2 * b, cy2 * b) for b in b2]
    assert t[-1] == t_top
    q_pts = [Point2(1 - dx2 * s - cy2 * s, cy2 * s) for s in piv2_sk]
    s1, b1 = _fan_pair_segments(u, v)
    s2, b2seg = _fan_pair_segments(w, t)
    zeta = _rnd_frac(rng, F(1, 4), F(3, 4))
    z2 = Point2(F(0), zeta)
    sigma = t_top.x * _rnd_frac(rng, F(1, 4), F(3, 4))
    z3 = Point2(sigma, 1 - sigma)
    initial = s1 + s2 + [Seg(z2, z3)]
    blocking = b1 + b2seg + [Seg(u[-1], y3), Seg(t[-1], y2)]
    if tag.variant == "cross":
        blocking += [Seg(v[-1], z3), Seg(w[-1], z2)]
    else:
        blocking += [Seg(v[-1], z2), Seg(w[-1], z3)]
    inner_s, inner_b = ([], [])
    if tag.inner:
        inner_s, inner_b = _b1_unit(rng, tag.inner, "in.", labels, (y1, z2, z3))
    for name, pts_ in (("u", u), ("v", v), ("w", w), ("t", t)):
        for i, p in enumerate(pts_, 1):
            labels[f"{name}{i}"] = p
    for i, p in enumerate(piv1, 1):
        labels[f"p{i}"] = Point2(*p)
    for i, p in enumerate(q_pts, 1):
        labels[f"q{i}"] = p
    labels["z2"], labels["z3"] = z2, z3
    frame = {"y1": y1, "y2": y2, "y3": y3}
    return initial + inner_s, blocking + inner_b, frame


def _gen_t(tag: TagT, rng: random.Random, labels):
    k = tag.k
    m = 2 * k + 1
    x1, x2, x3 = pt(0, 0), pt(m, 0), pt(0, m)
    u = [pt(a, 0) for a in range(1, 2 * k + 1)]
    v = [pt(m - b, b) for b in range(1, 2 * k + 1)]
    w = [pt(0, m - c) for c in range(1, 2 * k + 1)]
    initial, blocking = [], []
    for i in range(1, k + 1):
        initial += [Seg(u[2 * i - 2], w[2 * k + 1 - 2 * i]),
                    Seg(v[2 * i - 2], u[2 * k + 1 - 2 * i]),
                    Seg(w[2 * i - 2], v[2 * k + 1 - 2 * i])]
        blocking += [Seg(u[2 * i - 1], w[2 * k - 2 * i]),
                     Seg(v[2 * i - 1], u[2 * k - 2 * i]),
                     Seg(w[2 * i - 1], v[2 * k - 2 * i])]
    corner_tris = ((x1, u[0], w[-1]), (x2, v[0], u[-1]), (x3, w[0], v[-1]))
    for idx, (tri, n_inner) in enumerate(zip(corner_tris, tag.inners), 1):
        if n_inner:
            s_i, b_i = _b1_unit(rng, n_inner, f"T{idx}.", labels, tri)
            initial += s_i
            blocking += b_i
    for name, pts_ in (("u", u), ("v", v), ("w", w)):
        for i, p in enumerate(pts_, 1):
            labels[f"{name}{i}"] = p
    return (x1, x2, x3), initial, blocking


def generate(tag: TypeTag, seed: int = 0) -> Tuple[TriangleArrangement, Labeling]:
    """Build a concrete rational instance of the given type.

    The seed drives every free choice (boundary parameters, the final
    affine placement).  The output is post-validated at STRONG level;
    failure is a generator bug and raises GenerationError.
    """
    rng = random.Random(("triblock", str(tag), seed).__repr__())
    labels: Labeling = {}
    corners_final = _seeded_triangle(rng)

    if isinstance(tag, TagT):
        frame_corners, initial, blocking = _gen_t(tag, rng, labels)
        role_to_index = {0: 0, 1: 1, 2: 2}
        frame_pts = frame_corners
    else:
        unit = (pt(0, 0), pt(1, 0), pt(0, 1))
        if isinstance(tag, TagB0):
            roles_idx = (0, 1, 2)
            initial, blocking, frame = [], [], None
        elif isinstance(tag, TagB1):
            roles_idx = (tag.first, (tag.first + 1) % 3, (tag.first + 2) % 3)
            initial, blocking = _gen_b1(tag, rng, unit, labels)
        elif isinstance(tag, TagB2):
            other = ({0, 1, 2} - {tag.corner_a, tag.corner_b}).pop()
            roles_idx = (tag.corner_a, other, tag.corner_b)
            initial, blocking = _gen_b2(tag, rng, unit, labels)
        elif isinstance(tag, TagB3):
            roles_idx = (0, 1, 2)
            initial, blocking = _gen_b3(tag, rng, unit, labels)
        elif isinstance(tag, TagI1):
            roles_idx = (tag.y1, tag.y2, ({0, 1, 2} - {tag.y1, tag.y2}).pop())
            initial, blocking, frame = _gen_i1(tag, rng, unit, labels)
            unit = (frame["y1"], frame["y2"], frame["y3"])
        elif isinstance(tag, TagI2):
            roles_idx = (tag.y1, tag.fan_a[0], tag.fan_b[0])
            initial, blocking, frame = _gen_i2(tag, rng, unit, labels)
            unit = (frame["y1"], frame["y2"], frame["y3"])
        else:
            raise ValueError(f"unknown tag {tag!r}")
        role_to_index = {r: i for r, i in zip(range(3), roles_idx)}
        frame_pts = unit

    if isinstance(tag, TagT):
        dst = corners_final
    else:
        dst = tuple(corners_final[role_to_index[r]] for r in range(3))
    mapping = _Affine.from_triangles(frame_pts, dst)
    arr = build(corners_final,
                [mapping.seg(s) for s in initial],
                [mapping.seg(s) for s in blocking])
    labeling = {name: mapping(p) for name, p in labels.items()}
    for r, ci in (role_to_index.items() if not isinstance(tag, TagT)
                  else {0: 0, 1: 1, 2: 2}.items()):
        labeling[f"y{r + 1}"] = corners_final[ci]
    verdict = validate(arr, "STRONG")
    if not verdict.ok:
        raise GenerationError(
            f"generator for {tag} produced an invalid instance:\n{verdict}")
    return arr, labeling


# --- classification ---------------------------------------------------------

@dataclass
class ClassifyResult:
    tag: TypeTag
    labeling: Labeling
    ambiguities: Tuple[TypeTag, ...] = ()


class _Ctx:
    """Boundary bookkeeping for the recognizers."""

    def __init__(self, arr: TriangleArrangement):
        self.arr = arr
        self.corners = arr.corners
        self.s_keys = {s.key() for s in arr.initial}
        self.b_keys = {b.key() for b in arr.blocking}
        edges = arr.edges()
        # point -> (s segment, b segment) for non-corner boundary points
        self.bpt_s: Dict[Point2, Seg] = {}
        self.bpt_b: Dict[Point2, Seg] = {}
        self.corner_blockers: Dict[Point2, List[Seg]] = {c: [] for c in arr.corners}
        ok = True
        for s in arr.initial:
            for p in (s.a, s.b):
                if p in self.bpt_s:
                    ok = False
                self.bpt_s[p] = s
        for b in arr.blocking:
            for p in (b.a, b.b):
                if p in self.corner_blockers:
                    self.corner_blockers[p].append(b)
                elif p in self.bpt_b:
                    ok = False
                else:
                    self.bpt_b[p] = b
        self.consistent = ok
        self.edge_pts: Dict[Tuple[int, int], List[Point2]] = {}
        for i in range(3):
            a, b = arr.corners[i], arr.corners[(i + 1) % 3]
            pts = [p for p in set(self.bpt_s) | set(self.bpt_b)
                   if on_segment(Seg(a, b), p)]
            d = (b.x - a.x, b.y - a.y)
            pts.sort(key=lambda p: (p.x - a.x) * d[0] + (p.y - a.y) * d[1])
            self.edge_pts[(i, (i + 1) % 3)] = pts
            self.edge_pts[((i + 1) % 3, i)] = list(reversed(pts))
        # interior meeting points of sbar x sbar and sbar x blocking
        self.sxs_interior: set = set()
        self.sxb_interior: set = set()
        members = arr.sbar()
        boundary = [Seg(arr.corners[i], arr.corners[(i + 1) % 3]) for i in range(3)]

        def interior(p: Point2) -> bool:
            return not any(on_segment(e, p) for e in boundary)

        for p in sbar_vertex_map(arr):
            if interior(p):
                self.sxs_interior.add(p)
        for b in arr.blocking:
            for s in members:
                hit = seg_intersection(b, s)
                if isinstance(hit, PointHit) and interior(hit.point):
                    self.sxb_interior.add(hit.point)

    def points_from(self, ci: int, cj: int) -> List[Point2]:
        return self.edge_pts[(ci, cj)]

    def edge_index(self, p: Point2) -> Optional[int]:
        for i in range(3):
            e = Seg(self.corners[i], self.corners[(i + 1) % 3])
            if on_segment(e, p):
                return i
        return None


def _skey(a: Point2, b: Point2) -> tuple:
    return Seg(a, b).key()


def _induce_inner(arr: TriangleArrangement, tri) -> Optional[TriangleArrangement]:
    try:
        return induce(arr, tri)
    except (GeometryError, ValueError):
        return None


def _recognize_inner(sub: TriangleArrangement, first_pt: Point2) -> Optional[int]:
    """Match an induced sub-arrangement as empty or an even nest."""
    if sub.size == 0:
        return 0
    if not validate(sub, "TBA").ok:
        return None
    ctx = _Ctx(sub)
    first = next((i for i, c in enumerate(sub.corners) if c == first_pt), None)
    if first is None:
        return None
    for o2 in ((first + 1) % 3, (first + 2) % 3):
        o3 = ({0, 1, 2} - {first, o2}).pop()
        got = _match_b1(ctx, (first, o2, o3))
        if got is not None:
            n, _ = got
            if n % 2 == 0:
                return n
    return None


def _match_b0(ctx: _Ctx):
    if ctx.arr.initial or ctx.arr.blocking:
        return None
    return TagB0(), {f"y{i+1}": c for i, c in enumerate(ctx.corners)}


def _match_b1(ctx: _Ctx, perm) -> Optional[Tuple[int, Labeling]]:
    """Nested family at corner perm[0]; returns (n, labeling)."""
    c1, c2, c3 = perm
    if ctx.points_from(c2, c3):
        return None
    v = ctx.points_from(c1, c2)
    u = ctx.points_from(c1, c3)
    n = len(v)
    if n == 0 or len(u) != n:
        return None
    if ctx.sxs_interior or ctx.sxb_interior:
        return None
    s_exp = {_skey(a, b) for a, b in zip(v, u)}
    vv = v + [ctx.corners[c2]] if n % 2 else v
    uu = u + [ctx.corners[c3]] if n % 2 else u
    b_exp = set()
    for i in range(0, len(vv) - 1, 2):
        b_exp.add(_skey(vv[i], uu[i + 1]))
        b_exp.add(_skey(vv[i + 1], uu[i]))
    if ctx.s_keys != s_exp or ctx.b_keys != b_exp:
        return None
    labels = {"y1": ctx.corners[c1], "y2": ctx.corners[c2], "y3": ctx.corners[c3]}
    for i, p in enumerate(v, 1):
        labels[f"v{i}"] = p
    for i, p in enumerate(u, 1):
        labels[f"u{i}"] = p
    return n, labels


def _match_b2(ctx: _Ctx, perm):
    c1, c2, c3 = perm
    v = ctx.points_from(c1, c2)
    mixed = ctx.points_from(c1, c3)
    w = ctx.points_from(c3, c2)
    n = len(v)
    m = len(w)
    if n < 2 or m < 2 or n % 2 or m % 2 or len(mixed) != n + m:
        return None
    if ctx.sxs_interior or ctx.sxb_interior:
        return None
    u = mixed[:n]
    uprime = list(reversed(mixed[n:]))   # u'_1 is nearest c3
    s_exp = ({_skey(a, b) for a, b in zip(v, u)}
             | {_skey(a, b) for a, b in zip(uprime, w)})
    b_exp = set()
    for i in range(0, n - 1, 2):
        b_exp.add(_skey(v[i], u[i + 1]))
        b_exp.add(_skey(v[i + 1], u[i]))
    for i in range(0, m - 1, 2):
        b_exp.add(_skey(uprime[i], w[i + 1]))
        b_exp.add(_skey(uprime[i + 1], w[i]))
    if ctx.s_keys != s_exp or ctx.b_keys != b_exp:
        return None
    labels = {"y1": ctx.corners[c1], "y2": ctx.corners[c2], "y3": ctx.corners[c3]}
    for base, pts_ in (("v", v), ("u", u), ("u'", uprime), ("w", w)):
        for i, p in enumerate(pts_, 1):
            labels[f"{base}{i}"] = p
    return TagB2(c1, n, c3, m), labels


def _match_b3(ctx: _Ctx):
    if ctx.sxs_interior or ctx.sxb_interior:
        return None
    # group initial segments by the corner their endpoint edges share
    fams: Dict[int, List[Seg]] = {0: [], 1: [], 2: []}
    for s in ctx.arr.initial:
        ea, eb = ctx.edge_index(s.a), ctx.edge_index(s.b)
        if ea is None or eb is None or ea == eb:
            return None
        shared = ({ea, (ea + 1) % 3} & {eb, (eb + 1) % 3})
        if len(shared) != 1:
            return None
        fams[shared.pop()].append(s)
    sizes = tuple(len(fams[c]) for c in range(3))
    if min(sizes) < 1 or len({s % 2 for s in sizes}) != 1:
        return None
    # orient each family outward from its corner
    details = {}
    for c in range(3):
        nxt_edge = (c, (c + 1) % 3)       # edge leaving the corner
        prv_edge = (c, (c - 1) % 3)       # other edge at the corner, outward
        on_next = ctx.points_from(*nxt_edge)
        on_prev = ctx.points_from(*prv_edge)
        k = sizes[c]
        nexts, prevs = on_next[:k], on_prev[:k]
        pair = {}
        for s in fams[c]:
            pa, pb = s.a, s.b
            if pa in set(prevs):
                pa, pb = pb, pa
            pair[pa] = pb
        if set(pair) != set(nexts):
            return None
        if [pair[p] for p in nexts] != prevs:
            return None
        details[c] = (nexts, prevs)
    s_exp = set()
    b_exp = set()
    for c in range(3):
        nexts, prevs = details[c]
        k = sizes[c]
        s_exp |= {_skey(a, b) for a, b in zip(nexts, prevs)}
        top = k if k % 2 == 0 else k - 1
        for i in range(0, top, 2):
            b_exp.add(_skey(nexts[i], prevs[i + 1]))
            b_exp.add(_skey(nexts[i + 1], prevs[i]))
    if sizes[0] % 2 == 1:
        (n1, p1), (n2, p2), (n3, p3) = (details[0], details[1], details[2])
        b_exp |= {_skey(n1[-1], p3[-1]), _skey(p2[-1], n3[-1]),
                  _skey(n2[-1], p1[-1])}
    if ctx.s_keys != s_exp or ctx.b_keys != b_exp:
        return None
    labels = {f"y{c+1}": ctx.corners[c] for c in range(3)}
    for c, base in ((0, "f1"), (1, "f2"), (2, "f3")):
        nexts, prevs = details[c]
        for i, p in enumerate(nexts, 1):
            labels[f"{base}.n{i}"] = p
        for i, p in enumerate(prevs, 1):
            labels[f"{base}.p{i}"] = p
    return TagB3(sizes), labels


def _fan_expected(xpts, ypts):
    k2 = len(xpts)
    s_exp, b_exp = set(), set()
    for i in range(0, k2, 2):
        s_exp.add(_skey(xpts[i], ypts[i + 1]))
        s_exp.add(_skey(xpts[i + 1], ypts[i]))
    b_exp.add(_skey(xpts[0], ypts[0]))
    for i in range(2, k2, 2):
        b_exp.add(_skey(xpts[i - 1], ypts[i]))
        b_exp.add(_skey(xpts[i], ypts[i - 1]))
    return s_exp, b_exp


def _fan_pivots(arr, xpts, ypts, transversal: Seg) -> Optional[List[Point2]]:
    """Crossing points of matched fan pairs; all must ride the transversal."""
    piv = []
    for i in range(0, len(xpts), 2):
        hit = seg_intersection(Seg(xpts[i], ypts[i + 1]),
                               Seg(xpts[i + 1], ypts[i]))
        if not isinstance(hit, PointHit) or hit.kind_a != "interior":
            return None
        if not on_segment(transversal, hit.point):
            return None
        piv.append(hit.point)
    return piv


def _match_i1(ctx: _Ctx, perm):
    c1, c2, c3 = perm
    y1, y2, y3 = (ctx.corners[c] for c in perm)
    u = ctx.points_from(c2, c3)
    k2 = len(u)
    if k2 < 2 or k2 % 2:
        return None
    from_y2 = ctx.points_from(c2, c1)
    if len(from_y2) < k2 + 1:
        return None
    v, z2 = from_y2[:k2], from_y2[k2]
    zseg = ctx.bpt_s.get(z2)
    if zseg is None:
        return None
    z3 = zseg.b if zseg.a == z2 else zseg.a
    from_y3 = ctx.points_from(c3, c1)
    if z3 not in from_y3 or from_y3.index(z3) != 0:
        return None
    s_exp, b_exp = _fan_expected(u, v)
    b_exp |= {_skey(y2, z3), _skey(y3, v[-1]), _skey(z2, u[-1])}
    s_exp.add(_skey(z2, z3))
    sub = _induce_inner(ctx.arr, (y1, z2, z3))
    if sub is None:
        return None
    inner_s = {s.key() for s in sub.initial}
    inner_b = {b.key() for b in sub.blocking}
    if ctx.s_keys != s_exp | inner_s or ctx.b_keys != b_exp | inner_b:
        return None
    inner = _recognize_inner(sub, y1)
    if inner is None:
        return None
    piv = _fan_pivots(ctx.arr, u, v, Seg(y2, z3))
    if piv is None:
        return None
    allowed = set(piv)
    if not (ctx.sxs_interior <= allowed and ctx.sxb_interior <= allowed):
        return None
    labels = {"y1": y1, "y2": y2, "y3": y3, "z2": z2, "z3": z3}
    for base, pts_ in (("u", u), ("v", v), ("p", piv)):
        for i, p in enumerate(pts_, 1):
            labels[f"{base}{i}"] = p
    return TagI1(c1, c2, k2 // 2, inner), labels


def _match_i2(ctx: _Ctx, perm):
    c1, c2, c3 = perm
    y1, y2, y3 = (ctx.corners[c] for c in perm)
    bottom = ctx.points_from(c2, c3)
    if len(bottom) < 4:
        return None

    def partner_edge(p: Point2) -> Optional[int]:
        s = ctx.bpt_s.get(p)
        if s is None:
            return None
        other = s.b if s.a == p else s.a
        return ctx.edge_index(other) if other not in ctx.corners else None

    v: List[Point2] = []
    w: List[Point2] = []
    edge_y1y2 = next(i for i in range(3)
                     if {ctx.corners[i], ctx.corners[(i + 1) % 3]} == {y1, y2})
    edge_y1y3 = next(i for i in range(3)
                     if {ctx.corners[i], ctx.corners[(i + 1) % 3]} == {y1, y3})
    state = 0
    for p in bottom:
        pe = partner_edge(p)
        if pe == edge_y1y2 and state == 0:
            v.append(p)
        elif pe == edge_y1y3:
            state = 1
            w.append(p)
        else:
            return None
    k2, l2 = len(v), len(w)
    if k2 < 2 or l2 < 2 or k2 % 2 or l2 % 2:
        return None
    w = list(reversed(w))                      # w_1 is nearest y3
    from_y2 = ctx.points_from(c2, c1)
    from_y3 = ctx.points_from(c3, c1)
    if len(from_y2) < k2 + 1 or len(from_y3) < l2 + 1:
        return None
    u, z2 = from_y2[:k2], from_y2[k2]
    t, z3 = from_y3[:l2], from_y3[l2]
    if _skey(z2, z3) not in ctx.s_keys:
        return None
    s_exp1, b_exp1 = _fan_expected(u, v)
    s_exp2, b_exp2 = _fan_expected(w, t)
    s_exp = s_exp1 | s_exp2 | {_skey(z2, z3)}
    b_base = b_exp1 | b_exp2 | {_skey(u[-1], y3), _skey(t[-1], y2)}
    variants = {"cross": {_skey(v[-1], z3), _skey(w[-1], z2)},
                "straight": {_skey(v[-1], z2), _skey(w[-1], z3)}}
    sub = _induce_inner(ctx.arr, (y1, z2, z3))
    if sub is None:
        return None
    inner_s = {s.key() for s in sub.initial}
    inner_b = {b.key() for b in sub.blocking}
    if ctx.s_keys != s_exp | inner_s:
        return None
    variant = None
    for name, extra in variants.items():
        if ctx.b_keys == b_base | extra | inner_b:
            variant = name
            break
    if variant is None:
        return None
    inner = _recognize_inner(sub, y1)
    if inner is None:
        return None
    piv_p = _fan_pivots(ctx.arr, u, v, Seg(y2, t[-1]))
    piv_q = _fan_pivots(ctx.arr, w, t, Seg(y3, u[-1]))
    if piv_p is None or piv_q is None:
        return None
    allowed = set(piv_p) | set(piv_q)
    if not (ctx.sxs_interior <= allowed and ctx.sxb_interior <= allowed):
        return None
    labels = {"y1": y1, "y2": y2, "y3": y3, "z2": z2, "z3": z3}
    for base, pts_ in (("u", u), ("v", v), ("w", w), ("t", t),
                       ("p", piv_p), ("q", piv_q)):
        for i, p in enumerate(pts_, 1):
            labels[f"{base}{i}"] = p
    return TagI2(c1, (c2, k2 // 2), (c3, l2 // 2), inner, variant), labels


def _match_t(ctx: _Ctx):
    # split each edge's points into corner-local (both partners on one
    # adjacent edge) and main (one partner on each of the other edges)
    mains: Dict[int, List[Point2]] = {0: [], 1: [], 2: []}
    for e in range(3):
        pts = ctx.points_from(e, (e + 1) % 3)
        stage = 0   # 0: inner at start corner, 1: mains, 2: inner at end corner
        for p in pts:
            s, b = ctx.bpt_s.get(p), ctx.bpt_b.get(p)
            if s is None or b is None:
                return None
            so = s.b if s.a == p else s.a
            bo = b.b if b.a == p else b.a
            if bo in ctx.corners:
                return None
            es, eb = ctx.edge_index(so), ctx.edge_index(bo)
            if es is None or eb is None:
                return None
            if es == eb != e:
                want_corner = ({e, (e + 1) % 3} & {es, (es + 1) % 3})
                if len(want_corner) != 1:
                    return None
                c = want_corner.pop()
                if c == e and stage == 0:
                    continue          # inner of the corner at the edge start
                if c == (e + 1) % 3 and stage >= 1:
                    stage = 2
                    continue
                return None
            if {es, eb} == {0, 1, 2} - {e}:
                if stage == 2:
                    return None
                stage = 1
                mains[e].append(p)
            else:
                return None
    counts = {len(mains[e]) for e in range(3)}
    if len(counts) != 1:
        return None
    k2 = counts.pop()
    if k2 < 4 or k2 % 2:
        return None
    k = k2 // 2
    u, v, w = mains[0], mains[1], mains[2]
    s_exp, b_exp = set(), set()
    for i in range(1, k + 1):
        s_exp |= {_skey(u[2 * i - 2], w[2 * k + 1 - 2 * i]),
                  _skey(v[2 * i - 2], u[2 * k + 1 - 2 * i]),
                  _skey(w[2 * i - 2], v[2 * k + 1 - 2 * i])}
        b_exp |= {_skey(u[2 * i - 1], w[2 * k - 2 * i]),
                  _skey(v[2 * i - 1], u[2 * k - 2 * i]),
                  _skey(w[2 * i - 1], v[2 * k - 2 * i])}
    tris = ((ctx.corners[0], u[0], w[-1]), (ctx.corners[1], v[0], u[-1]),
            (ctx.corners[2], w[0], v[-1]))
    inners = []
    inner_s, inner_b = set(), set()
    for c, tri in enumerate(tris):
        sub = _induce_inner(ctx.arr, tri)
        if sub is None:
            return None
        n = _recognize_inner(sub, ctx.corners[c])
        if n is None:
            return None
        inners.append(n)
        inner_s |= {s.key() for s in sub.initial}
        inner_b |= {b.key() for b in sub.blocking}
    if ctx.s_keys != s_exp | inner_s or ctx.b_keys != b_exp | inner_b:
        return None
    # concurrency pattern: all index triples summing right must concur
    pivots = set()
    for a in range(1, 2 * k + 1):
        for b in range(1, 2 * k + 1):
            c = 4 * k + 2 - a - b
            if not (1 <= c <= 2 * k):
                continue
            if a % 2 == 0 and b % 2 == 0 and c % 2 == 0:
                continue
            l1 = line_join(u[a - 1], w[2 * k - a])
            l2 = line_join(v[b - 1], u[2 * k - b])
            l3 = line_join(w[c - 1], v[2 * k - c])
            if det3(l1.coords, l2.coords, l3.coords) != 0:
                return None
            hit = seg_intersection(Seg(u[a - 1], w[2 * k - a]),
                                   Seg(v[b - 1], u[2 * k - b]))
            if not isinstance(hit, PointHit):
                return None
            pivots.add(hit.point)
    if not (ctx.sxs_interior <= pivots and ctx.sxb_interior <= pivots):
        return None
    labels = {f"y{c+1}": ctx.corners[c] for c in range(3)}
    for base, pts_ in (("u", u), ("v", v), ("w", w)):
        for i, p in enumerate(pts_, 1):
            labels[f"{base}{i}"] = p
    return TagT(k, tuple(inners)), labels


def classify(arr: TriangleArrangement) -> Optional[ClassifyResult]:
    """Match a validated arrangement against the seven schemas.

    Returns the first match in the canonical kind order together with
    any other schemas that also matched; None when the arrangement is
    not a valid TBA or fits no schema.
    """
    if not validate(arr, "TBA").ok:
        return None
    ctx = _Ctx(arr)
    if not ctx.consistent:
        return None
    perms = list(itertools.permutations(range(3)))
    found: List[Tuple[TypeTag, Labeling]] = []

    def add(res):
        if res is not None:
            tag, labels = res
            if all(tag != t for t, _ in found):
                found.append((tag, labels))

    add(_match_b0(ctx))
    for perm in perms:
        got = _match_b1(ctx, perm)
        if got is not None:
            add((TagB1(perm[0], got[0]), got[1]))
    for perm in perms:
        add(_match_b2(ctx, perm))
    add(_match_b3(ctx))
    for perm in perms:
        add(_match_i1(ctx, perm))
    for perm in perms:
        add(_match_i2(ctx, perm))
    add(_match_t(ctx))
    if not found:
        return None
    found.sort(key=lambda pair: (_KIND_ORDER[pair[0].kind], str(pair[0])))
    tag, labels = found[0]
    return ClassifyResult(tag, labels, tuple(t for t, _ in found[1:]))


# --- hexagonal grids --------------------------------------------------------

@dataclass
class HexGridResult:
    k: Optional[int]
    witness: Optional[Point2] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.k is not None


def hexgrid_example(k: int, scale: int = 1) -> Tuple[Tuple[Point2, ...], List[Seg]]:
    """The three-pencil lattice of size k in a triangle of side k+1."""
    m = k + 1
    c = F(scale)
    corners = (pt(0, 0), Point2(c * m, F(0)), Point2(F(0), c * m))
    segs = []
    for i in range(1, k + 1):
        segs.append(Seg(Point2(c * i, F(0)), Point2(c * i, c * (m - i))))
        segs.append(Seg(Point2(F(0), c * i), Point2(c * (m - i), c * i)))
        segs.append(Seg(Point2(c * i, F(0)), Point2(F(0), c * i)))
    return corners, segs


def hexagrid_recognize(corners: Sequence[Point2],
                       segments: Sequence[Seg]) -> HexGridResult:
    """Decide whether segments form a complete three-family triangular grid.

    Stage one checks the triple-point property at every intersection
    (corner excepted); stage two checks the family sizes, the boundary
    pairings and the full interior concurrency pattern.
    """
    try:
        arr = build(corners, segments, [])
    except (ValueError, GeometryError) as exc:
        return HexGridResult(None, getattr(exc, "witness", None), str(exc))
    if not segments:
        return HexGridResult(0)
    cset = set(arr.corners)
    for p, rec in sorted(sbar_vertex_map(arr).items()):
        if p in cset:
            continue
        if len(rec.carriers_s) != 3:
            return HexGridResult(None, p,
                                 f"{len(rec.carriers_s)} members through a "
                                 "crossing (need exactly 3)")
    edges = arr.edges()

    def edge_of(p: Point2) -> Optional[int]:
        for i, e in enumerate(edges):
            if on_segment(e, p):
                return i
        return None

    fams: Dict[frozenset, List[Seg]] = {}
    for s in segments:
        ea, eb = edge_of(s.a), edge_of(s.b)
        if ea is None or eb is None or ea == eb:
            return HexGridResult(None, s.a, "segment not between two edges")
        fams.setdefault(frozenset((ea, eb)), []).append(s)
    sizes = {key: len(val) for key, val in fams.items()}
    if len(fams) != 3 or len(set(sizes.values())) != 1:
        return HexGridResult(None, segments[0].a,
                             f"family sizes {sorted(sizes.values())} unequal")
    k = len(segments) // 3

    def pts_from(ci: int, cj: int) -> List[Point2]:
        a, b = arr.corners[ci], arr.corners[cj]
        pts = [p for s in segments for p in (s.a, s.b)
               if on_segment(Seg(a, b), p)]
        d = (b.x - a.x, b.y - a.y)
        out = sorted(set(pts), key=lambda p: (p.x - a.x) * d[0] + (p.y - a.y) * d[1])
        return out

    bottom = pts_from(0, 1)
    left = pts_from(0, 2)
    hyp = pts_from(1, 2)
    if not (len(bottom) == len(left) == len(hyp) == k):
        return HexGridResult(None, arr.corners[0], "boundary point counts differ")

    def seg_at(p: Point2, fam_key: frozenset) -> Optional[Seg]:
        hits = [s for s in fams[fam_key] if p in (s.a, s.b)]
        return hits[0] if len(hits) == 1 else None

    fam_x = fams.get(frozenset((0, 1)))     # bottom <-> hyp
    fam_y = fams.get(frozenset((1, 2)))     # hyp <-> left
    fam_d = fams.get(frozenset((0, 2)))     # bottom <-> left
    if fam_x is None or fam_y is None or fam_d is None:
        return HexGridResult(None, segments[0].a, "missing a family direction")
    X, Y, D = [], [], []
    for i in range(k):
        sx = seg_at(bottom[i], frozenset((0, 1)))
        sd = seg_at(bottom[i], frozenset((0, 2)))
        if sx is None or sd is None:
            return HexGridResult(None, bottom[i], "bad boundary pairing")
        X.append(sx)
        D.append(sd)
        other = sd.b if sd.a == bottom[i] else sd.a
        if other != left[i]:
            return HexGridResult(None, bottom[i], "diagonal family misaligned")
        sy = seg_at(left[i], frozenset((1, 2)))
        if sy is None:
            return HexGridResult(None, left[i], "bad boundary pairing")
        Y.append(sy)
        ox = sx.b if sx.a == bottom[i] else sx.a
        if ox != hyp[k - 1 - i]:
            return HexGridResult(None, bottom[i], "cross family misaligned")
        oy = sy.b if sy.a == left[i] else sy.a
        if oy != hyp[i]:
            return HexGridResult(None, left[i], "cross family misaligned")
    for fam in (X, Y, D):
        for i in range(k):
            for j in range(i + 1, k):
                hit = seg_intersection(fam[i], fam[j])
                if hit is not None:
                    p = hit.point if isinstance(hit, PointHit) else hit.seg.a
                    return HexGridResult(None, p, "same-family members meet")
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            hit = seg_intersection(X[i - 1], Y[j - 1])
            if i + j <= k:
                if not isinstance(hit, PointHit):
                    return HexGridResult(None, X[i - 1].a, "missing crossing")
                if not on_segment(D[i + j - 1], hit.point):
                    return HexGridResult(None, hit.point,
                                         "crossing off the third family")
            elif i + j > k + 1:
                if hit is not None:
                    return HexGridResult(None, hit.point, "unexpected crossing")
            hit = seg_intersection(X[i - 1], D[j - 1])
            if j > i and not isinstance(hit, PointHit):
                return HexGridResult(None, X[i - 1].a, "missing crossing")
            if j > i and not on_segment(Y[j - i - 1], hit.point):
                return HexGridResult(None, hit.point, "crossing off the third family")
            if j < i and hit is not None:
                return HexGridResult(None, X[i - 1].a, "unexpected crossing")
            hit = seg_intersection(Y[i - 1], D[j - 1])
            if j > i and not isinstance(hit, PointHit):
                return HexGridResult(None, Y[i - 1].a, "missing crossing")
            if j > i and not on_segment(X[j - i - 1], hit.point):
                return HexGridResult(None, hit.point, "crossing off the third family")
            if j < i and hit is not None:
                return HexGridResult(None, Y[i - 1].a, "unexpected crossing")
    return HexGridResult(k)
