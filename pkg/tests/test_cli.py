import csv
import math
import subprocess
import sys

import pytest

from oscmoment import DEFAULT_CONFIG
from oscmoment.cli import BENCH_COLUMNS, SWEEP_COLUMNS, bench_cell, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse(line):
    return dict(tok.split("=", 1) for tok in line.split())


def test_moment1(capsys):
    code, out, _ = run(capsys, "moment1", "--n", "0", "--m", "0", "--kappa", "1", "--b", "1", "--check")
    fields = parse(out)
    assert code == 0
    assert float(fields["value"]) == pytest.approx(0.9197304101, abs=1e-10)
    assert float(fields["oracle_delta"]) <= 1e-14


def test_moment1_zero(capsys):
    code, out, _ = run(capsys, "moment1", "--n", "0", "--m", "0", "--kappa", "10", "--b", "0")
    assert code == 0 and float(parse(out)["value"]) == 0.0


def test_moment1_forced_method(capsys):
    code, out, _ = run(capsys, "moment1", "--n", "5", "--m", "3", "--kappa", "100", "--b", "1",
                       "--method", "m2")
    assert parse(out)["method"] == "m2/asymptotic"


def test_moment2(capsys):
    from oscmoment import i2_diag
    code, out, _ = run(capsys, "moment2", "--n", "0", "--m", "0", "--kappa", "10", "--b", "1")
    v = i2_diag(0, 10.0, 1.0).value
    f = parse(out)
    assert code == 0
    assert float(f["re"]) == v.real and float(f["im"]) == v.imag


def test_invalid_args(capsys):
    code, _, err = run(capsys, "moment1", "--n", "-1", "--m", "0", "--kappa", "1", "--b", "1")
    assert code != 0 and "usage" in err
    with pytest.raises(SystemExit) as exc:
        main(["moment1", "--n", "x"])
    assert exc.value.code != 0


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "c.txt"
    cfg.write_text("kb_hybrid=200\n", encoding="utf-8")
    args = ["moment1", "--n", "0", "--m", "0", "--kappa", "100", "--b", "1", "--config", str(cfg)]
    assert parse(run(capsys, *args)[1])["method"].startswith("m3")
    assert parse(run(capsys, *args, "--kb-hybrid", "60")[1])["method"].startswith("m2")


def read_csv(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.reader(fh))


def test_sweep_base_integral(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code, _, _ = run(capsys, "accuracy-sweep", "--n", "0", "--m", "0", "--kappa", "1,10,100",
                     "--b-range", "0.1", "1", "0.01", "--methods", "m3", "--output", str(out))
    rows = read_csv(out)
    assert code == 0
    assert rows[0] == SWEEP_COLUMNS
    assert len(rows) == 1 + 3 * 91
    assert all(float(r[-1]) <= 1e-14 for r in rows[1:])
    assert b"\r\n" not in out.read_bytes()


def test_sweep_degradation_at_small_kappa(tmp_path, capsys):
    out = tmp_path / "s.csv"
    run(capsys, "accuracy-sweep", "--n", "5", "--m", "6", "--kappa", "1",
        "--b-range", "0.5", "1", "0.05", "--methods", "m3", "--output", str(out))
    errs = [float(r[-1]) for r in read_csv(out)[1:]]
    assert max(errs) > 1e-14


def test_sweep_reproducible_and_sorted(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["accuracy-sweep", "--family", "i2", "--n", "2,0", "--m", "1", "--kappa", "20,5",
            "--b-range", "0.5", "0.7", "0.1", "--methods", "oracle,m3,hybrid"]
    run(capsys, *args, "--output", str(a))
    run(capsys, *args, "--output", str(b))
    assert a.read_bytes() == b.read_bytes()
    rows = read_csv(a)[1:]
    keys = [(int(r[1]), int(r[2]), float(r[3]), float(r[4]), r[5]) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 2 * 2 * 3 * 3


def test_sweep_empty_grid(tmp_path, capsys):
    out = tmp_path / "e.csv"
    code, _, _ = run(capsys, "accuracy-sweep", "--n", "", "--m", "0", "--kappa", "1",
                     "--output", str(out))
    assert code == 0 and out.read_text(encoding="utf-8") == ",".join(SWEEP_COLUMNS) + "\n"


def test_sweep_failure_exit_status(tmp_path, capsys):
    out = tmp_path / "f.csv"
    code, _, _ = run(capsys, "accuracy-sweep", "--n", "0", "--m", "0", "--kappa", "10",
                     "--b-range", "0", "0", "1", "--methods", "m2", "--output", str(out))
    rows = read_csv(out)
    assert code == 1 and rows[1][6] == "nan"


def test_unwritable_path(capsys):
    code, _, err = run(capsys, "accuracy-sweep", "--n", "0", "--m", "0", "--kappa", "1",
                       "--b-range", "1", "1", "1", "--output", "/nonexistent/dir/x.csv")
    assert code != 0 and "error" in err


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--n", "0", "--m", "0", "--kappa", "100",
                     "--methods", "m1,m2", "--repeats", "3", "--output", str(out))
    rows = read_csv(out)
    assert code == 0 and rows[0] == BENCH_COLUMNS
    assert {r[3] for r in rows[1:]} == {"m1", "m2"}


def test_bench_reports_unreached_as_inf():
    c = bench_cell(0, 0, 5.0, 1.0, "m2", 2, DEFAULT_CONFIG)
    assert not c.reached and math.isinf(c.median_time_ns)


def test_bench_n0_m0_kappa100():
    m2 = bench_cell(0, 0, 100.0, 1.0, "m2", 3, DEFAULT_CONFIG)
    m1 = bench_cell(0, 0, 100.0, 1.0, "m1", 3, DEFAULT_CONFIG)
    assert m2.reached
    assert not m1.reached


def test_bench_n16_m16_kappa1():
    m1 = bench_cell(16, 16, 1.0, 1.0, "m1", 3, DEFAULT_CONFIG)
    m3 = bench_cell(16, 16, 1.0, 1.0, "m3", 3, DEFAULT_CONFIG)
    assert m1.reached
    assert not m3.reached


def test_rules_dump(capsys):
    code, out, _ = run(capsys, "rules-dump", "--kind", "legendre", "--n-points", "2")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "j,node,weight" and len(lines) == 3


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "oscmoment", "moment1", "--n", "1", "--m", "0",
                          "--kappa", "2", "--b", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("value=")
