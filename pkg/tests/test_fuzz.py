import json

import pytest

from logent.fuzz import (SUITES, fuzz_bound, fuzz_bridge, fuzz_measurement,
                         fuzz_mixing, fuzz_schmidt, run_suite)


def test_all_suites_clean_on_small_runs():
    assert fuzz_bound(25, 4, 3, seed=0)["failures"] == 0
    assert fuzz_measurement(25, 8, seed=1)["failures"] == 0
    assert fuzz_mixing(25, 5, seed=2)["failures"] == 0
    assert fuzz_schmidt(25, 4, 4, seed=3)["failures"] == 0
    assert fuzz_bridge(25, 10, seed=4)["failures"] == 0


def test_identical_runs_are_identical():
    a = run_suite("all", 10, 4, 3, seed=7)
    b = run_suite("all", 10, 4, 3, seed=7)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_trivial_dimension_one():
    for suite in SUITES:
        summary = run_suite(suite, 1, 1, 1, seed=0)
        assert summary["failures"] == 0


def test_trials_split_by_seed():
    # trial t uses seed + t, so a two-trial run decomposes exactly
    pair = fuzz_bound(2, 4, 3, seed=10)
    first = fuzz_bound(1, 4, 3, seed=10)
    second = fuzz_bound(1, 4, 3, seed=11)
    assert pair["worst_slack"] == min(first["worst_slack"],
                                      second["worst_slack"])


def test_zero_trials_has_null_worst():
    summary = fuzz_bound(0, 4, 3, seed=0)
    assert summary["trials"] == 0
    assert summary["worst_slack"] is None


def test_summary_shape():
    summary = fuzz_measurement(5, 6, seed=9)
    assert set(summary) == {"suite", "trials", "failures", "worst_slack",
                            "seed", "failed_trials"}
    assert summary["suite"] == "prop1"
    assert summary["seed"] == 9


def test_aggregate_counts_every_suite():
    combined = run_suite("all", 4, 4, 3, seed=5)
    assert combined["trials"] == 4 * len(SUITES)
    assert len(combined["suites"]) == len(SUITES)
    assert combined["failures"] == sum(r["failures"] for r in combined["suites"])


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nonsense", 5, 4, 3, seed=0)
