#!/usr/bin/env python3
"""Walk the dual side end to end at desk scale.

Verifies the four-point example, dualizes it, runs the minimal-triangle
pipeline and the per-region audit, and prints polygon chord certificates.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from triblock.duality import (counting_lower_bound, dualize_config,
                              emit_lineconfig, ngon_certificate,
                              pipeline_classify, quadrangle_example,
                              region_blocking_audit, verify_primal_blocking)


def main():
    cfg = quadrangle_example()
    print("== four points, three blockers ==")
    print(verify_primal_blocking(cfg))
    dual = dualize_config(cfg)
    print("\n== dual line configuration ==")
    print(emit_lineconfig(dual), end="")
    print("\n== minimal-triangle pipeline ==")
    print(pipeline_classify(dual))
    print("\n== per-region blocking audit ==")
    print(region_blocking_audit(dual))
    print("\n== counting bound (odd sizes need n blockers) ==")
    for n in range(5, 22, 2):
        print(f"  n={n}: bound {counting_lower_bound(n)}")
    print("\n== polygon chord certificates ==")
    for n in (3, 5, 8, 17, 30):
        print(" ", ngon_certificate(n))
    return 0


if __name__ == "__main__":
    sys.exit(main())
