import itertools

import pytest

from triblock.duality import (BlockingConfig, PrimalConfig, config_violations,
                              counting_lower_bound, dualize_config,
                              emit_lineconfig, emit_primal, enumerate_cells,
                              find_min_triangle, ngon_certificate,
                              parse_dual_file, pipeline_classify,
                              quadrangle_example, region_blocking_audit,
                              verify_primal_blocking)
from triblock.kernel import HLine, HPoint, dual_point, incident, line_meet


def test_counting_bound_odd_is_n():
    for n in range(5, 100, 2):
        assert counting_lower_bound(n) == n
    for n in range(6, 100, 2):
        assert counting_lower_bound(n) == n - 1


def test_quadrangle_fully_blocked():
    cfg = quadrangle_example()
    report = verify_primal_blocking(cfg)
    assert report.fully_blocked
    assert len(cfg.points) == 4 and len(cfg.blockers) == 3
    assert report.per_blocker == (2, 2, 2)
    assert report.meets_lower_bound


def test_quadrangle_blocker_removal():
    cfg = quadrangle_example()
    for i in range(3):
        partial = PrimalConfig(cfg.points,
                               tuple(b for j, b in enumerate(cfg.blockers)
                                     if j != i))
        report = verify_primal_blocking(partial)
        assert len(report.unblocked) == 2


def test_three_points_no_blockers():
    cfg = PrimalConfig((HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(0, 1, 1)), ())
    report = verify_primal_blocking(cfg)
    assert len(report.unblocked) == 3


def test_bound_flag_for_small_blocker_sets():
    pts = tuple(HPoint(i, i * i, 1) for i in range(5))     # on a parabola
    cfg = PrimalConfig(pts, tuple(HPoint(99 + i, 3, 1) for i in range(4)))
    report = verify_primal_blocking(cfg)
    assert report.general_position
    assert not report.meets_lower_bound   # 4 < bound 5


def test_ngon_certificate():
    r5 = ngon_certificate(5)
    assert r5.covered and r5.class_sizes == (2,) * 5
    r3 = ngon_certificate(3)
    assert r3.covered and r3.class_sizes == (1,) * 3
    r17 = ngon_certificate(17)
    assert r17.covered and set(r17.class_sizes) == {8}
    for n in range(3, 31):
        rep = ngon_certificate(n)
        assert rep.covered
        if n % 2:
            assert rep.balanced and rep.class_sizes[0] == (n - 1) // 2
    with pytest.raises(ValueError):
        ngon_certificate(2)


def test_dualize_quadrangle():
    cfg = quadrangle_example()
    dual = dualize_config(cfg)
    assert config_violations(dual) == []
    # incidence preservation: spanned lines through blockers dualize to
    # meets on blocking lines
    for p, q in itertools.combinations(cfg.points, 2):
        v = line_meet(dual_point(p), dual_point(q))
        hits = [b for b in dual.blockers if incident(v, b)]
        assert len(hits) == 1


def test_dualize_rejects_unblocked():
    cfg = PrimalConfig((HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(0, 1, 1)), ())
    with pytest.raises(ValueError):
        dualize_config(cfg)


def test_find_min_triangle_three_lines():
    lines = (HLine(1, 0, 0), HLine(0, 1, 0), HLine(1, 1, -1))
    result = find_min_triangle(lines)
    assert set(result.lines) == set(lines)


def _min_triangle_is_empty(lines, result):
    cov = {l: result.chart.line(l) for l in lines}
    for l in lines:
        if l in result.lines:
            continue
        vals = [cov[l][0] * p.x + cov[l][1] * p.y + cov[l][2]
                for p in result.corners]
        assert not (any(v > 0 for v in vals) and any(v < 0 for v in vals))


def test_find_min_triangle_quadrangle_dual():
    dual = dualize_config(quadrangle_example())
    result = find_min_triangle(dual.lines, dual.blockers)
    _min_triangle_is_empty(dual.lines, result)


def test_find_min_triangle_six_lines():
    lines = (HLine(1, 0, -1), HLine(0, 1, -2), HLine(1, 1, -7),
             HLine(1, -1, 4), HLine(2, 1, -3), HLine(1, 3, -5))
    result = find_min_triangle(lines)
    _min_triangle_is_empty(lines, result)


def test_pipeline_quadrangle():
    dual = dualize_config(quadrangle_example())
    report = pipeline_classify(dual)
    assert report.ok, str(report)
    assert report.r == 1
    assert report.collinear_ok
    assert len(report.regions) == 3
    assert all(reg.ok and reg.n == 1 for reg in report.regions)


def test_pipeline_rejects_small_configs():
    dual = dualize_config(quadrangle_example())
    small = BlockingConfig(dual.lines[:3], dual.blockers[:2])
    report = pipeline_classify(small)
    assert not report.ok
    assert "at least 4" in report.reason


def test_pipeline_rejects_mutations():
    dual = dualize_config(quadrangle_example())
    broken = BlockingConfig(dual.lines, dual.blockers[:2])
    report = pipeline_classify(broken)
    assert not report.ok
    assert "not a blocking configuration" in report.reason


def test_region_audit_quadrangle():
    dual = dualize_config(quadrangle_example())
    report = region_blocking_audit(dual)
    assert report.ok, str(report)
    ks = sorted(c.k for c in report.cells)
    assert ks == [3, 3, 3, 3, 4, 4, 4]
    for cell in report.cells:
        if cell.k == 4:
            assert all(cell.internal)    # diagonal-blocked squares
        else:
            assert not any(cell.internal)


def test_region_audit_detects_deleted_blocker():
    dual = dualize_config(quadrangle_example())
    broken = BlockingConfig(dual.lines, dual.blockers[1:])
    report = region_blocking_audit(broken)
    assert not report.ok


def test_enumerate_cells_counts():
    dual = dualize_config(quadrangle_example())
    assert len(enumerate_cells(dual.lines)) == 7   # cells of 4 generic lines


def test_dual_file_round_trip():
    cfg = quadrangle_example()
    back = parse_dual_file(emit_primal(cfg))
    assert back == cfg
    dual = dualize_config(cfg)
    back2 = parse_dual_file(emit_lineconfig(dual))
    assert back2 == dual
    with pytest.raises(ValueError):
        parse_dual_file("P [1/1 : 0/1 : 1/1]\nL [1/1 : 0/1 : 0/1]\n")
    with pytest.raises(ValueError):
        parse_dual_file("Q [1/1 : 0/1 : 1/1]\n")
