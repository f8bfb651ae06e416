"""Acceptance criteria, one test per criterion, one PASS line each."""

import random
from fractions import Fraction as F

from triblock.arrangement import BuildError, GeometryError, build
from triblock.duality import (PrimalConfig, counting_lower_bound,
                              dualize_config, ngon_certificate,
                              pipeline_classify, quadrangle_example,
                              verify_primal_blocking)
from triblock.fileio import emit_tba
from triblock.fuzz import fuzz_driver
from triblock.kernel import Point2, Seg
from triblock.mutate import delete_blocking, delete_initial, perturb_endpoint
from triblock.render import render_svg
from triblock.taxonomy import (TagB3, classify, generate, hexagrid_recognize,
                               hexgrid_example)
from triblock.validator import check_condition_a, parity_audit, validate


def report(criterion, text):
    print(f"PASS criterion {criterion}: {text}")


def test_criterion_1_type_gallery(gallery):
    for tag, (arr, _labels) in gallery:
        verdict = validate(arr, "STRONG")
        assert verdict.ok, f"{tag} failed validation:\n{verdict}"
        result = classify(arr)
        assert result is not None, f"{tag} unrecognized"
        assert result.tag == tag, f"{tag} classified as {result.tag}"
    report(1, f"{len(gallery)} gallery instances validate STRONG and "
              "classify back to their tags")


def test_criterion_2_parity_lemma(gallery):
    total_faces = 0
    for tag, (arr, _labels) in gallery:
        audit = parity_audit(arr, seed=2026, samples=100)
        assert audit.ok, f"{tag}: {audit}"
        total_faces += audit.faces_checked
    report(2, f"0 odd faces across {total_faces} audited faces "
              f"(100 samples per instance)")


def _mutations(arr, rng):
    kinds = []
    if arr.blocking:
        kinds.append("delete_blocking")
    if arr.initial:
        kinds.append("delete_initial")
    if arr.initial or arr.blocking:
        kinds.append("perturb")
    if not kinds:
        return None
    kind = rng.choice(kinds)
    if kind == "delete_blocking":
        return lambda a: delete_blocking(a, rng.randrange(len(a.blocking)))
    if kind == "delete_initial":
        return lambda a: delete_initial(a, rng.randrange(len(a.initial)))
    which = "S" if arr.initial and (not arr.blocking or rng.getrandbits(1)) \
        else "B"
    pool = arr.initial if which == "S" else arr.blocking
    idx = rng.randrange(len(pool))
    end = rng.getrandbits(1)
    return lambda a: perturb_endpoint(a, which, idx, end, F(1, 1009))


def test_criterion_3_mutation_suite(gallery):
    redrawn = 0
    tested = 0
    for tag, (arr, _labels) in gallery:
        rng = random.Random(f"mutants:{tag}")
        if arr.size == 0:
            continue
        for _ in range(50):
            rejected = False
            for _attempt in range(6):
                fn = _mutations(arr, rng)
                try:
                    mutant = fn(arr)
                except (BuildError, GeometryError, ValueError):
                    rejected = True
                    break
                if mutant is None:
                    redrawn += 1
                    continue
                if not validate(mutant, "STRONG").ok:
                    rejected = True
                    break
                result = classify(mutant)
                if result is None or result.tag != tag:
                    rejected = True
                    break
                redrawn += 1
            assert rejected, f"{tag}: no rejected mutant after redraws"
            tested += 1
    report(3, f"{tested} mutants rejected by validation or classification "
              f"({redrawn} redrawn)")


def test_criterion_4_small_diagonal_detected():
    arr, lab = generate(TagB3((1, 1, 1)), 0)
    hexagon = (lab["f1.n1"], lab["f2.p1"], lab["f2.n1"],
               lab["f3.p1"], lab["f3.n1"], lab["f1.p1"])
    a, b, c, d, e, f = hexagon
    bad = build(arr.corners, arr.initial, [Seg(a, c), Seg(b, e), Seg(d, f)])
    assert validate(bad, "TBA").ok
    reports = check_condition_a(bad)
    assert reports, "small-diagonal blocking slipped past the check"
    witness = reports[0]
    assert witness.condition == "A"
    assert len(witness.points) == 5           # a concrete five-vertex window
    assert set(witness.points) <= set(hexagon)
    report(4, f"small-diagonal hexagon rejected with witness window "
              f"({len(reports)} failing windows)")


def test_criterion_5_quadrangle_boundary():
    cfg = quadrangle_example()
    rep = verify_primal_blocking(cfg)
    assert rep.fully_blocked
    assert len(cfg.blockers) == 3 == len(cfg.points) - 1
    for i in range(3):
        partial = PrimalConfig(cfg.points, tuple(
            b for j, b in enumerate(cfg.blockers) if j != i))
        partial_rep = verify_primal_blocking(partial)
        assert len(partial_rep.unblocked) == 2
    report(5, "4 points blocked by 3 = n-1 blockers; every blocker removal "
              "unblocks exactly 2 lines")


def test_criterion_6_counting_bound():
    for n in range(5, 22, 2):
        assert counting_lower_bound(n) == n
    report(6, "counting bound equals n for every odd n in 5..21")


def test_criterion_7_ngon_certificate():
    for n in range(3, 31):
        rep = ngon_certificate(n)
        assert rep.covered, f"n={n} chord class not covered"
        if n % 2 == 1:
            assert set(rep.class_sizes) == {(n - 1) // 2}
    report(7, "chord classes covered for n in 3..30; odd n balanced at (n-1)/2")


def test_criterion_8_pipeline():
    dual = dualize_config(quadrangle_example())
    rep = pipeline_classify(dual)
    assert rep.ok, str(rep)
    assert rep.r == 1
    assert len(rep.regions) == 3 and all(r.ok and r.n == 1 for r in rep.regions)
    assert rep.collinear_ok
    report(8, "dualized quadrangle gives three odd nests with r=1")


def test_criterion_9_hexgrid():
    for k in (1, 2, 3):
        corners, segs = hexgrid_example(k)
        res = hexagrid_recognize(corners, segs)
        assert res.ok and res.k == k
        for i in range(len(segs)):
            shifted = list(segs)
            s = shifted[i]
            shifted[i] = Seg(Point2(s.a.x + F(1, 7), s.a.y),
                             Point2(s.b.x + F(1, 7), s.b.y))
            bad = hexagrid_recognize(corners, shifted)
            assert not bad.ok, f"k={k}: shifted segment {i} accepted"
    report(9, "grids of size 1..3 recognized; every single-line shift rejected")


def test_criterion_10_determinism(gallery):
    tag, (arr, _labels) = gallery[7]
    arr2, _ = generate(tag, seed=17)
    assert emit_tba(arr) == emit_tba(arr2)
    assert render_svg(arr) == render_svg(arr2)
    assert str(fuzz_driver(seed=11, iters=5)) == str(fuzz_driver(seed=11, iters=5))
    report(10, "emit, render and fuzz summaries are byte-identical "
               "across equal-seed runs")
