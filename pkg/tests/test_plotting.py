"""Figure rendering and report files."""

import math

from quiverlab import cartan_of, companion_from_cvectors, fuzz, initial_seed
from quiverlab.fixtures import FIX_A3, FIX_K4
from quiverlab.plotting import circular_layout, save_diagram, write_report_files


def test_circular_layout_deterministic():
    a = circular_layout(4)
    b = circular_layout(4)
    assert a == b
    # vertex 1 on top, unit circle
    assert math.isclose(a[0][1], 1.0, abs_tol=1e-9)
    for x, y in a:
        assert math.isclose(x * x + y * y, 1.0, abs_tol=1e-9)


def test_save_diagram(tmp_path):
    comp = companion_from_cvectors(cartan_of(FIX_A3), initial_seed(FIX_A3))
    out = tmp_path / "diagram.png"
    save_diagram(FIX_A3, out, companion=comp)
    assert out.stat().st_size > 0
    out2 = tmp_path / "k4.png"
    save_diagram(FIX_K4, out2)
    assert out2.stat().st_size > 0


def test_write_report_files_walk_mode(tmp_path):
    from quiverlab import verify_walk

    report = verify_walk(FIX_A3, [1, 0])
    written = write_report_files(report, tmp_path / "out", B=FIX_A3)
    names = {p.rsplit("/", 1)[-1] for p in written}
    assert names == {"report.json", "checks.tsv", "summary.tsv",
                     "diagram.png", "checks.png"}
    checks = (tmp_path / "out" / "checks.tsv").read_text().splitlines()
    assert checks[0] == "trial\tstep\tk\tcheck\tstatus\tdetail"
    # per-step rows present in walk mode
    assert any(line.startswith("0\t1\t2\t") for line in checks[1:])


def test_write_report_files_fuzz_mode(tmp_path):
    report = fuzz(FIX_A3, 3, 5, 9)
    written = write_report_files(report, tmp_path / "out")
    names = {p.rsplit("/", 1)[-1] for p in written}
    assert "diagram.png" not in names  # no matrix passed
    assert "summary.tsv" in names
