#!/usr/bin/env python3
"""Render one SVG per schema into an output directory.

Usage: python scripts/render_types.py [--out DIR] [--seed N]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from triblock.render import render_svg
from triblock.taxonomy import (TagB0, TagB1, TagB2, TagB3, TagI1, TagI2, TagT,
                               generate)

SHOWCASE = [
    TagB0(),
    TagB1(0, 3),
    TagB2(0, 2, 2, 4),
    TagB3((1, 1, 1)),
    TagB3((2, 2, 2)),
    TagI1(0, 1, 2, 2),
    TagI2(0, (1, 1), (2, 1), 0, "cross"),
    TagT(2, (0, 0, 0)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("out"))
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for tag in SHOWCASE:
        arr, _ = generate(tag, args.seed)
        name = str(tag).replace("{", "_").replace("}", "").replace(",", "_") \
                       .replace("=", "")
        path = args.out / f"{name}.svg"
        path.write_text(render_svg(arr))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
