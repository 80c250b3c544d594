import csv
import io
import json
import math
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("OPTBENCH_CLI", "optbench")
DOCS = Path(os.environ.get("OPTBENCH_DOCS", Path(__file__).resolve().parents[2] / "docs"))


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("OPTBENCH_DATA_DIR", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=full_env)


def ok(*args):
    p = run(*args)
    assert p.returncode == 0, p.stderr
    return p.stdout


def validate(doc, name):
    schema = json.loads((DOCS / f"{name}.schema.json").read_text())
    jsonschema.Draft202012Validator(schema).validate(doc)


@pytest.mark.parametrize(
    "args, code",
    [
        (["eval", "vincent", "--x", "-1,1"], 3),
        (["verify", "cola"], 5),
        (["eval", "cola", "--x", "1,2"], 5),
        (["grid", "sphere", "--resolution", "1"], 2),
        (["run", "de", "sphere"], 2),
        (["eval", "no-such-function", "--x", "0"], 2),
        (["eval", "booth", "--x", "1,2,3"], 2),
        (["eval", "sphere", "--x", "1,abc"], 2),
        (["eval", "dynamic-deceptive-basin", "--x", "0,0"], 2),
        (["frobnicate"], 2),
    ],
)
def test_exit_codes(args, code):
    p = run(*args)
    assert p.returncode == code, p.stderr
    assert p.stderr.strip()


def test_unwritable_output(tmp_path):
    target = tmp_path / "missing-dir" / "out.json"
    assert run("export-metadata", "--out", target).returncode == 4


def test_eval_values():
    assert float(ok("eval", "booth", "--x", "1,3")) == 0.0
    assert float(ok("eval", "easom", "--x", f"{math.pi:.17g},{math.pi:.17g}")) == pytest.approx(-1.0, abs=1e-12)
    assert float(ok("eval", "sphere", "--x", "1,2,3")) == 14.0
    assert float(ok("eval", "de-jong", "--x", "2")) == 4.0


def test_eval_seeded_dynamic_repeats():
    a = ok("eval", "dynamic-deceptive-basin", "--x", "0.5,0.5", "--seed", "3")
    b = ok("eval", "dynamic-deceptive-basin", "--x", "0.5,0.5", "--seed", "3")
    assert a == b


def test_grid_csv(tmp_path):
    out = tmp_path / "g.csv"
    ok("grid", "himmelblau", "--resolution", "7", "--out", out)
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["x0", "x1", "f"]
    assert len(rows) == 1 + 49
    x0, x1, f = map(float, rows[1])
    assert (x0, x1) == (-6.0, -6.0)
    assert f == (x0 * x0 + x1 - 11) ** 2 + (x0 + x1 * x1 - 7) ** 2
    assert [float(r[0]) for r in rows[1:8]] == sorted(float(r[0]) for r in rows[1:8])


def test_grid_rejects_wrong_dimension():
    assert run("grid", "booth", "--resolution", "5", "--dim", "3").returncode == 2


def test_list_filters():
    names = lambda *a: [line.split("\t")[0] for line in ok("list", *a).splitlines()]
    unimodal_sep = names("--modality", "unimodal", "--separable")
    assert "sphere" in unimodal_sep and "rosenbrock" not in unimodal_sep
    assert sorted(names("--dynamic")) == ["complex-dynamic-deceptive-basin", "dynamic-deceptive-basin"]
    assert len(names("--tier", "1")) == 27
    assert "booth" not in names("--dim", "3")
    listing = json.loads(ok("list", "--tier", "1", "--format", "json"))
    assert len(listing) == 27
    validate(listing, "list")


def test_info():
    doc = json.loads(ok("info", "banana"))
    assert doc["name"] == "rosenbrock"


def test_run_de_sphere():
    doc = json.loads(ok("run", "de", "sphere", "--dim", "10", "--budget", "10000", "--seed", "1", "--history"))
    validate(doc, "run")
    assert doc["best_f"] <= 1e-6
    assert doc["evals_used"] == 10000
    hist = [h[1] for h in doc["history"]]
    assert hist == sorted(hist, reverse=True)


def test_run_nelder_mead_from_point():
    doc = json.loads(ok("run", "nm", "rosenbrock", "--seed", "1", "--budget", "2000", "--x0", "-1.2,1"))
    validate(doc, "run")
    assert doc["best_f"] <= 1e-8


def test_run_rejects_bad_config():
    assert run("run", "de", "sphere", "--seed", "1", "--pop", "3").returncode == 2
    assert run("run", "de", "sphere", "--seed", "1", "--CR", "1.5").returncode == 2


def test_export_metadata_round_trip(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    ok("export-metadata", "--out", a)
    ok("export-metadata", "--from", a, "--out", b)
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["count"] >= 300
    validate(doc, "metadata")


def test_export_metadata_rejects_garbage(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("export-metadata", "--from", bad).returncode == 2


def test_default_output_dir(tmp_path):
    p = run("export-metadata", env={"OPTBENCH_DATA_DIR": str(tmp_path)})
    assert p.returncode == 0, p.stderr
    assert (tmp_path / "metadata.json").exists()


def test_verify_single_report():
    doc = json.loads(ok("verify", "drop-wave", "--out", "-"))
    validate(doc, "verification")
    assert doc["claims"][0]["verdict"] == "refuted"
    assert doc["claims"][0]["witness_f"] < 0


def test_verify_all_ledger(tmp_path):
    out = tmp_path / "ledger.json"
    ok("verify", "--all", "--dim", "2", "--budget", "2000", "--out", out)
    doc = json.loads(out.read_text())
    validate(doc, "ledger")
    refuted = {r["function"] for r in doc["refuted"]}
    assert {"drop-wave", "dixon-price"} <= refuted
    assert doc["tier3"] and all(t["reason"] for t in doc["tier3"])


def test_suite_from_spec(tmp_path):
    spec = tmp_path / "run.ini"
    out = tmp_path / "results.json"
    spec.write_text(
        "[suite]\noptimizer = nm\nbudget = 300\nfunctions = sphere, booth\ndims = 2, 3\nseeds = 4, 5\n"
        f"output = {out}\n"
    )
    ok("suite", "--spec", spec)
    doc = json.loads(out.read_text())
    validate(doc, "results")
    assert len(doc["runs"]) == 8
    assert sum("error" in r for r in doc["runs"]) == 2


def test_suite_spec_errors(tmp_path):
    spec = tmp_path / "bad.ini"
    spec.write_text("[suite]\noptimizer = de\nbudget = 10\nfunctions = sphere\ndims = 2\n")
    p = run("suite", "--spec", spec)
    assert p.returncode == 2
    assert "seeds" in p.stderr


def test_suite_flags_reproducible():
    args = ["suite", "--optimizer", "de", "--functions", "sphere,ackley", "--dims", "2", "--seeds", "1,2"]
    a, b = json.loads(ok(*args)), json.loads(ok(*args, "--jobs", "2"))
    for doc in (a, b):
        validate(doc, "results")
        for r in doc["runs"]:
            r.pop("wall_time", None)
    assert a == b
