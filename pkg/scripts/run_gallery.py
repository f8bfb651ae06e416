#!/usr/bin/env python3
"""Generate the full type gallery, validate, classify, and tabulate.

Usage: python scripts/run_gallery.py [--seed N] [--out DIR]

With --out, each instance is also written as a .tba file.
"""

import argparse
import itertools
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from triblock.fileio import emit_tba
from triblock.taxonomy import (TagB0, TagB1, TagB2, TagB3, TagI1, TagI2, TagT,
                               classify, generate)
from triblock.validator import parity_audit, validate


def gallery_tags():
    tags = [TagB0()]
    tags += [TagB1(n % 3, n) for n in (1, 2, 3, 4)]
    tags += [TagB2(0, n, 2, m) for n, m in itertools.product((2, 4), repeat=2)]
    tags += [TagB3(s) for s in itertools.product((2, 4), repeat=3)]
    tags += [TagB3(s) for s in itertools.product((1, 3), repeat=3)]
    tags += [TagI1(0, 1, k, inner) for k in (1, 2) for inner in (0, 2)]
    tags += [TagI2(0, (1, k), (2, l), 0, v)
             for (k, l) in ((1, 1), (2, 1)) for v in ("cross", "straight")]
    tags += [TagT(k, (0, 0, 0)) for k in (2, 3)]
    return tags


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=17)
    ap.add_argument("--out", type=pathlib.Path, default=None)
    ap.add_argument("--parity-samples", type=int, default=0,
                    help="additionally run the subset parity audit")
    args = ap.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    t0 = time.time()
    for i, tag in enumerate(gallery_tags()):
        arr, _ = generate(tag, args.seed)
        verdict = validate(arr, "STRONG")
        result = classify(arr)
        round_trip = result is not None and result.tag == tag
        ok = verdict.ok and round_trip
        failures += not ok
        extra = ""
        if args.parity_samples:
            audit = parity_audit(arr, args.seed, args.parity_samples)
            extra = f" parity={'ok' if audit.ok else 'ODD'}"
            failures += not audit.ok
        print(f"{'ok ' if ok else 'FAIL'} |S|={len(arr.initial):2d} "
              f"|B|={len(arr.blocking):2d} {tag}{extra}")
        if args.out:
            (args.out / f"{i:02d}_{tag.kind}.tba").write_text(emit_tba(arr))
    print(f"{time.time() - t0:.1f}s, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
