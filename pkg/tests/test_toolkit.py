import json
from fractions import Fraction

import pytest
from hypothesis import given

from twostage import Instance, oracle_solve, solve_dp1
from twostage.bench import bench, format_table
from twostage.cli import run_cli
from twostage.gen import GenSpec, SplitMix64, generate
from twostage.io import (
    FormatError, load_instance, result_to_dict, save_instance, schedule_from_dict,
)

from conftest import instances


def test_load_examples():
    assert load_instance('{"m":2,"jobs":[[1,2],[2,1]]}') == Instance([(1, 2), (2, 1)], 2)
    assert load_instance('{"m":1,"jobs":[]}') == Instance([], 1)
    with pytest.raises(FormatError, match="m must be ≥ 1"):
        load_instance('{"m":0,"jobs":[]}')


@pytest.mark.parametrize("text, match", [
    ('{"m": 2,\n "jobs": [[1, 2],]}', "line 2"),
    ('{"jobs": []}', "'m'"),
    ('{"m": 2, "jobs": [[1, -2]]}', r"jobs\[0\].t"),
    ('{"m": 2, "jobs": [[1.5, 2]]}', r"jobs\[0\].r"),
    ('{"m": 2, "jobs": [[1, 2, 3]]}', r"jobs\[0\]"),
    ('{"m": 2, "jobs": [[9223372036854775808, 0]]}', "63-bit"),
    ('[1, 2]', "object"),
])
def test_load_errors(text, match):
    with pytest.raises(FormatError, match=match):
        load_instance(text)


@given(instances(max_n=10, max_dur=1000, ms=(1, 2, 5)))
def test_instance_roundtrip(inst):
    assert load_instance(save_instance(inst)) == inst


@given(instances(max_n=7, max_dur=9))
def test_schedule_roundtrip(inst):
    sched = oracle_solve(inst)
    doc = json.loads(json.dumps(result_to_dict(sched, algo="oracle", optimal=True)))
    assert schedule_from_dict(doc) == sched


def test_splitmix64_reference_stream():
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4


def test_generate_deterministic():
    spec = GenSpec(20, 3, 9, 50, Fraction(1, 4), 42)
    a, b = generate(spec), generate(spec)
    assert a == b
    assert a.m == 3 and a.n == 20
    assert all(0 <= j.r <= 9 and 0 <= j.t <= 50 for j in a.jobs)
    assert all(j.r == 0 for j in a.jobs[:5])
    assert generate(GenSpec(20, 3, 9, 50, Fraction(1, 4), 43)) != a


def test_generate_edge_cases():
    assert all(j.r == 0 for j in generate(GenSpec(15, 2, 9, 9, Fraction(1), 1)).jobs)
    assert generate(GenSpec(0, 2, 9, 9, Fraction(0), 1)) == Instance([], 2)
    with pytest.raises(ValueError):
        GenSpec(3, 0, 1, 1)
    with pytest.raises(ValueError):
        GenSpec(3, 1, 1, 1, Fraction(3, 2))


@pytest.fixture
def inst_file(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text('{"m": 2, "jobs": [[2, 1], [1, 2], [2, 2]]}', encoding="utf-8")
    return path


def run(argv, capsys):
    code = run_cli([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("algo", ["dp1", "dp2", "auto"])
def test_cli_solve(inst_file, capsys, algo):
    code, out, _ = run(["solve", "--algo", algo, "--in", inst_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["makespan"] == 4
    assert doc["optimal"] is True and doc["ratio_bound"] is None
    assert sorted(i for s in doc["shops"] for i in s["order"]) == [0, 1, 2]
    assert doc["algo"] in ("dp1", "dp2")


def test_cli_value_only(inst_file, capsys):
    code, out, _ = run(["solve", "--algo", "dp1", "--value-only", "--canonical", "--in", inst_file], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["makespan"] == 4 and doc["assignment"] is None and doc["shops"] is None


def test_cli_approx(inst_file, capsys):
    code, out, _ = run(["approx", "--eps", "1/4", "--in", inst_file], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["ratio_bound"] == "5/4"
    assert 4 * doc["makespan"] <= 5 * 4


def test_cli_oracle_budget(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"m": 3, "jobs": [[1, 1]] * 20}), encoding="utf-8")
    code, out, err = run(["oracle", "--in", path, "--budget", "1000"], capsys)
    assert code == 2 and out == ""
    assert str(3**20) in err


def test_cli_oracle(inst_file, capsys):
    code, out, _ = run(["oracle", "--in", inst_file], capsys)
    assert code == 0 and json.loads(out)["makespan"] == 4


@pytest.mark.parametrize("argv", [
    [],
    ["solve"],
    ["solve", "--algo", "dp9", "--in", "x"],
    ["solve", "--in", "/nonexistent/inst.json"],
    ["approx", "--eps", "0", "--in", "{inst}"],
    ["solve", "--algo", "dp2", "--value-only", "--in", "{inst}"],
])
def test_cli_usage_errors(argv, inst_file, capsys):
    argv = [a.replace("{inst}", str(inst_file)) for a in argv]
    code, out, err = run(argv, capsys)
    assert code == 1 and out == "" and err


def test_cli_bad_instance(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"m": 0, "jobs": []}', encoding="utf-8")
    code, _, err = run(["solve", "--in", path], capsys)
    assert code == 1 and "m must be ≥ 1" in err


def test_cli_overflow(tmp_path, capsys):
    path = tmp_path / "huge.json"
    path.write_text(json.dumps({"m": 2, "jobs": [[2**62, 0], [0, 2**62]]}), encoding="utf-8")
    code, _, err = run(["solve", "--algo", "dp1", "--in", path], capsys)
    assert code == 2 and "63-bit" in err


def test_cli_gen(tmp_path, capsys):
    out_path = tmp_path / "g.json"
    code, _, _ = run(["gen", "--n", 6, "--m", 2, "--rmax", 3, "--tmax", 9, "--zero-r", "1/2",
                      "--seed", 7, "--out", out_path], capsys)
    assert code == 0
    inst = load_instance(out_path.read_text(encoding="utf-8"))
    assert inst == generate(GenSpec(6, 2, 3, 9, Fraction(1, 2), 7))
    code, out, _ = run(["solve", "--in", out_path], capsys)
    assert json.loads(out)["makespan"] == solve_dp1(inst).makespan


def test_bench_empty_grid():
    assert bench({"n": []}) == []
    assert format_table([]) == ""


def test_bench_cells(tmp_path, capsys):
    grid = {"n": [8], "m": [2], "ranges": [[2, 200], [10, 10]], "seeds": [3], "eps": "1/2", "timeout": 60}
    rows = bench(grid)
    assert len(rows) == 2
    asym, sym = rows
    assert asym["dp2_peak"] < asym["dp1_peak"]
    assert sym["dp1_makespan"] == sym["dp2_makespan"]
    for row in rows:
        assert row["dp1_makespan"] <= row["approx_makespan"]
    grid_path, out_path = tmp_path / "grid.json", tmp_path / "report.json"
    grid_path.write_text(json.dumps(grid), encoding="utf-8")
    code, out, _ = run(["bench", "--grid", grid_path, "--out", out_path], capsys)
    assert code == 0 and "dp1_peak" in out
    assert len(json.loads(out_path.read_text(encoding="utf-8"))["cells"]) == 2


def test_bench_timeout_recorded():
    rows = bench({"n": [10], "m": [3], "ranges": [[30, 30]], "seeds": [1], "timeout": 0})
    assert rows[0]["dp1_makespan"] == "timeout"
