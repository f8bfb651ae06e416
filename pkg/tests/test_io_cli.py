import subprocess
import sys

import pytest

from triblock.cli import main
from triblock.fileio import TbaParseError, emit_tba, parse_tba
from triblock.fuzz import fuzz_driver
from triblock.kernel import pt
from triblock.arrangement import build
from triblock.mutate import delete_blocking
from triblock.render import RenderSpec, render_svg
from triblock.taxonomy import (TagB1, TagB3, TagT, generate,
                               hexgrid_example)

TRI = (pt(0, 0), pt(12, 0), pt(0, 12))


def test_emit_empty_four_lines():
    arr = build(TRI, [], [])
    text = emit_tba(arr)
    rows = text.strip().split("\n")
    assert rows == ["tba 1",
                    "T 0/1 0/1 12/1 0/1 0/1 12/1",
                    "S 0",
                    "B 0"]
    assert parse_tba(text) == arr


def test_round_trip_gallery(gallery):
    for tag, (arr, _labels) in gallery:
        assert parse_tba(emit_tba(arr)) == arr, str(tag)


def test_parse_supports_comments():
    arr, _ = generate(TagB1(0, 2), 3)
    text = emit_tba(arr)
    commented = "# a comment\n" + text.replace("S 2", "# inner\nS 2")
    assert parse_tba(commented) == arr


def test_parse_errors():
    with pytest.raises(TbaParseError, match="header"):
        parse_tba("nope\n")
    with pytest.raises(TbaParseError, match="segment line"):
        parse_tba("tba 1\nT 0/1 0/1 12/1 0/1 0/1 12/1\nS 1\n")
    with pytest.raises(TbaParseError, match="bad rational"):
        parse_tba("tba 1\nT 0/1 zero 12/1 0/1 0/1 12/1\nS 0\nB 0\n")
    with pytest.raises(TbaParseError, match="trailing"):
        parse_tba("tba 1\nT 0/1 0/1 12/1 0/1 0/1 12/1\nS 0\nB 0\nextra\n")
    err = None
    try:
        parse_tba("tba 1\nT 0/1 0/1 12/1 x 0/1 12/1\nS 0\nB 0\n")
    except TbaParseError as exc:
        err = exc
    assert err is not None and err.line == 2 and err.col > 1


def test_render_empty():
    arr = build(TRI, [], [])
    svg = render_svg(arr)
    assert svg.count("<path") == 3
    assert svg.count("<circle") == 3
    assert svg.startswith("<?xml")
    assert "</svg>" in svg


def test_render_b3_counts():
    arr, _ = generate(TagB3((1, 1, 1)), 2)
    svg = render_svg(arr)
    assert svg.count("<path") == 9
    assert svg.count("stroke-dasharray") == 3


def test_render_deterministic():
    arr, _ = generate(TagT(2, (0, 0, 0)), 9)
    assert render_svg(arr) == render_svg(arr)
    wide = render_svg(arr, RenderSpec(width=960))
    assert wide != render_svg(arr)


def test_fuzz_deterministic_and_empty():
    s0 = fuzz_driver(seed=0, iters=0)
    assert s0.generated == 0 and s0.ok
    a = str(fuzz_driver(seed=5, iters=4))
    b = str(fuzz_driver(seed=5, iters=4))
    assert a == b


def test_fuzz_rejects_mutants():
    s = fuzz_driver(seed=1, iters=5)
    assert s.ok, str(s)
    assert s.mutants_rejected == 5


def run_cli(*argv):
    return main(list(argv))


def test_cli_gen_validate_classify(tmp_path):
    f = tmp_path / "a.tba"
    assert run_cli("gen", "--type", "B1{first=x1,n=2}", "--seed", "4",
                   "-o", str(f)) == 0
    assert run_cli("validate", str(f)) == 0
    assert run_cli("validate", str(f), "--strong") == 0
    assert run_cli("classify", str(f)) == 0
    assert run_cli("regions", str(f)) == 0
    assert run_cli("audit-parity", str(f), "--samples", "5", "--seed", "1") == 0


def test_cli_validate_failure(tmp_path):
    arr, _ = generate(TagB1(0, 2), 4)
    broken = delete_blocking(arr, 0)
    f = tmp_path / "broken.tba"
    f.write_text(emit_tba(broken))
    assert run_cli("validate", str(f)) == 1
    assert run_cli("classify", str(f)) == 1


def test_cli_parse_error_exit_code(tmp_path):
    f = tmp_path / "bad.tba"
    f.write_text("tba 2\n")
    assert run_cli("validate", str(f)) == 2
    assert run_cli("validate", str(tmp_path / "missing.tba")) == 2
    assert run_cli("gen", "--type", "Q{z=1}") == 2


def test_cli_render(tmp_path):
    f = tmp_path / "a.tba"
    out = tmp_path / "a.svg"
    run_cli("gen", "--type", "B3{s1=1,s2=1,s3=1}", "-o", str(f))
    assert run_cli("render", str(f), "-o", str(out)) == 0
    assert out.read_text().count("<path") == 9


def test_cli_hexgrid(tmp_path):
    corners, segs = hexgrid_example(2)
    arr = build(corners, segs, [])
    f = tmp_path / "grid.tba"
    f.write_text(emit_tba(arr))
    assert run_cli("hexgrid", str(f)) == 0
    arrb, _ = generate(TagB1(0, 2), 1)
    f2 = tmp_path / "nest.tba"
    f2.write_text(emit_tba(build(arrb.corners, arrb.initial, [])))
    assert run_cli("hexgrid", str(f2)) == 1
    arrc, _ = generate(TagB3((1, 1, 1)), 1)
    f3 = tmp_path / "blockers.tba"
    f3.write_text(emit_tba(arrc))
    assert run_cli("hexgrid", str(f3)) == 2   # blocking segments present


def test_cli_dual(tmp_path):
    assert run_cli("dual", "ngon", "--n", "7") == 0
    lines_file = tmp_path / "quad.lines"
    assert run_cli("dual", "quadrangle", "--lines", "-o", str(lines_file)) == 0
    assert run_cli("dual", "pipeline", str(lines_file)) == 0
    assert run_cli("dual", "audit", str(lines_file)) == 0
    primal_file = tmp_path / "quad.primal"
    assert run_cli("dual", "quadrangle", "-o", str(primal_file)) == 0
    assert run_cli("dual", "verify", str(primal_file)) == 0
    assert run_cli("dual", "verify") == 2
    assert run_cli("dual", "pipeline", str(primal_file)) == 2  # wrong kind


def test_cli_fuzz():
    assert run_cli("fuzz", "--seed", "2", "--iters", "3") == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "triblock.cli", "dual",
                           "ngon", "--n", "5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "n=5" in proc.stdout
