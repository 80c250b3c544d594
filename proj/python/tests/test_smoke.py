import math

import pytest

import optbench


def test_evaluate_and_problem():
    assert optbench.evaluate("booth", [1.0, 3.0]) == 0.0
    p = optbench.Problem("rosenbrock", 2)
    assert p([1.0, 1.0]) == 0.0
    assert p.evaluations == 1
    assert len(p.lower) == 2 and all(lo < hi for lo, hi in zip(p.lower, p.upper))
    g = p.gradient([0.0, 0.0])
    assert g[0] == pytest.approx(-2.0, abs=1e-6)


def test_errors_carry_codes():
    with pytest.raises(optbench.OptbenchError) as e:
        optbench.Problem("cola", 2)
    assert e.value.code == "Tier3Unimplementable"
    with pytest.raises(optbench.OptbenchError) as e:
        optbench.evaluate("vincent", [-1.0, 1.0])
    assert e.value.code == "DomainError"
    with pytest.raises(ValueError):
        optbench.Problem("booth", 3)


def test_catalog_queries():
    assert len(optbench.list_functions(tier=1)) == 27
    assert "sphere" in optbench.list_functions(modality="unimodal", separable=True)
    assert optbench.info("banana")["name"] == "rosenbrock"
    assert optbench.metadata()["count"] >= 300


def test_probes():
    assert optbench.count_grid_minima("himmelblau", 101) == 4
    assert optbench.is_separable("sphere", 4)
    assert not optbench.is_separable("matyas")
    rep = optbench.verify("drop-wave")
    assert rep["claims"][0]["verdict"] == "refuted"


def test_optimizers():
    r = optbench.run("de", "sphere", 10, seed=1, budget=10000)
    assert r["best_f"] <= 1e-6
    r = optbench.run("nm", "rosenbrock", 2, seed=1, budget=2000, x0=[-1.2, 1.0])
    assert r["best_f"] <= 1e-8
    a = optbench.suite("rs", "sphere,ackley", [2], [1, 2], budget=200)
    b = optbench.suite("rs", "sphere,ackley", [2], [1, 2], budget=200, jobs=2)
    assert len(a["runs"]) == 4
    strip = lambda d: [{k: v for k, v in r.items() if k != "wall_time"} for r in d["runs"]]
    assert strip(a) == strip(b)
    assert not math.isnan(a["summaries"][0]["mean"])
