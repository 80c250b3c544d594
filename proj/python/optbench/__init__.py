"""Benchmark function catalog, verification and baseline optimizers."""

import json

from ._optbench import (
    OptbenchError,
    Problem,
    count_grid_minima,
    evaluate,
    is_separable,
    list_functions,
)
from . import _optbench

__all__ = [
    "OptbenchError",
    "Problem",
    "count_grid_minima",
    "evaluate",
    "info",
    "is_separable",
    "list_functions",
    "metadata",
    "run",
    "suite",
    "verify",
]


def info(name):
    """Metadata of one entry as a dict."""
    return json.loads(_optbench._info(name))


def metadata():
    """Metadata export document for the whole catalog."""
    return json.loads(_optbench._metadata())


def verify(name, dim=2, seed=1, budget=10000):
    """Verification report for one entry."""
    return json.loads(_optbench._verify(name, dim, seed, budget))


def run(optimizer, name, dim, seed, budget=1000, population=50, F=0.5, CR=0.9,
        synchronous=False, x0=None, history=False):
    """One optimizer run; optimizer is "de", "nm" or "rs"."""
    return json.loads(_optbench._run(optimizer, name, dim, seed, budget, population, F, CR,
                                     synchronous, x0, history))


def suite(optimizer, functions, dims, seeds, budget=1000, jobs=1):
    """Runs over functions x dims, one trial per seed."""
    return json.loads(_optbench._suite(optimizer, functions, list(dims), list(seeds), budget, jobs))
