"""The tba text format: exact, diffable, round-trip stable.

    tba 1
    T x1 y1 x2 y2 x3 y3
    S <count>
    ax ay bx by     (one line per initial segment)
    B <count>
    ax ay bx by     (one line per blocking segment)

All coordinates are rationals written num/den.  Comment lines start
with '#'.  Emit writes segments in canonical sorted order, so
parse(emit(arr)) reproduces the arrangement exactly.
"""

from __future__ import annotations

from typing import List, Tuple

from .arrangement import TriangleArrangement, build
from .kernel import Point2, Rat, Seg, parse_rat, rat_str


class TbaParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class _Lines:
    def __init__(self, text: str):
        self.rows = [(i + 1, row) for i, row in enumerate(text.splitlines())
                     if row.strip() and not row.lstrip().startswith("#")]
        self.pos = 0

    def next(self, expect: str) -> Tuple[int, str]:
        if self.pos >= len(self.rows):
            last = self.rows[-1][0] if self.rows else 1
            raise TbaParseError(last, 1, f"unexpected end of file, expected {expect}")
        row = self.rows[self.pos]
        self.pos += 1
        return row

    @property
    def exhausted(self) -> bool:
        return self.pos >= len(self.rows)


def _rats(lineno: int, row: str, count: int, what: str) -> List[Rat]:
    parts = row.split()
    body = parts[1:] if parts and not _is_rat(parts[0]) else parts
    if len(body) != count:
        raise TbaParseError(lineno, 1,
                            f"expected {count} rationals for {what}, got {len(body)}")
    out = []
    for tok in body:
        try:
            out.append(parse_rat(tok))
        except (ValueError, ZeroDivisionError):
            col = row.index(tok) + 1
            raise TbaParseError(lineno, col, f"bad rational {tok!r}")
    return out


def _is_rat(tok: str) -> bool:
    try:
        parse_rat(tok)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def parse_tba(text: str) -> TriangleArrangement:
    lines = _Lines(text)
    lineno, row = lines.next("header 'tba 1'")
    if row.split() != ["tba", "1"]:
        raise TbaParseError(lineno, 1, f"expected header 'tba 1', got {row.strip()!r}")
    lineno, row = lines.next("corner line 'T ...'")
    if not row.split() or row.split()[0] != "T":
        raise TbaParseError(lineno, 1, "expected corner line starting with 'T'")
    vals = _rats(lineno, row, 6, "corners")
    corners = [Point2(vals[0], vals[1]), Point2(vals[2], vals[3]),
               Point2(vals[4], vals[5])]
    segments = {}
    for section in ("S", "B"):
        lineno, row = lines.next(f"section header '{section} <count>'")
        parts = row.split()
        if len(parts) != 2 or parts[0] != section or not parts[1].isdigit():
            raise TbaParseError(lineno, 1,
                                f"expected '{section} <count>', got {row.strip()!r}")
        count = int(parts[1])
        segs = []
        for i in range(count):
            lineno, row = lines.next(f"segment line {i + 1} of {count} in {section}")
            vals = _rats(lineno, row, 4, "segment endpoints")
            try:
                segs.append(Seg(Point2(vals[0], vals[1]), Point2(vals[2], vals[3])))
            except ValueError as exc:
                raise TbaParseError(lineno, 1, str(exc))
        segments[section] = segs
    if not lines.exhausted:
        lineno, row = lines.rows[lines.pos]
        raise TbaParseError(lineno, 1, f"unexpected trailing line {row.strip()!r}")
    return build(corners, segments["S"], segments["B"])


def _seg_line(s: Seg) -> str:
    return " ".join(rat_str(v) for v in (s.a.x, s.a.y, s.b.x, s.b.y))


def emit_tba(arr: TriangleArrangement) -> str:
    out = ["tba 1",
           "T " + " ".join(rat_str(v) for c in arr.corners for v in (c.x, c.y)),
           f"S {len(arr.initial)}"]
    out += [_seg_line(s) for s in arr.initial]
    out.append(f"B {len(arr.blocking)}")
    out += [_seg_line(s) for s in arr.blocking]
    return "\n".join(out) + "\n"
