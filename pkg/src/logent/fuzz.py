"""Randomized verification campaigns.

Each suite replays one identity or inequality across many seeded random
instances. Determinism contract: trial t of a campaign with root seed s
uses exactly numpy's default_rng(s + t), so any failing trial can be
regenerated from the summary alone, and trials could be farmed out in
parallel without changing the outcome.

Suite names follow the command-line interface: "theorem" (the off-block
bound), "prop1" (measurement purity bookkeeping), "prop2" (the mixing
bound), "schmidt" (equal entropies of the two reductions of a bipartite
pure state), "bridge" (classical partition entropy vs measurement).

Summaries are plain dicts: {suite, trials, failures, worst_slack, seed,
failed_trials}. worst_slack is the most adverse value seen of the
suite's primary quantity: the minimum slack for inequality suites, the
largest residual for identity suites.
"""
from __future__ import annotations

import numpy as np

from .channels import CouplingModel, verify_entropy_bound
from .classical import partition_entropy, random_distribution, random_partition
from .linalg import partial_trace
from .measurement import (entropy_gain, entropy_nondecreasing, project,
                          projectors_from_partition, purity_decomposition)
from .mixing import mixing_bound_report, random_ensemble, schmidt_entropy_pair
from .serialization import matrix_to_json, model_to_json
from .states import (density_from_pure, logical_entropy, purity,
                     random_density, random_pure_state, random_unitary)

_MAX_RECORDED = 3  # failing trials kept in the summary, with full inputs


def _dim(rng: np.random.Generator, dim_max: int) -> int:
    """Per-trial dimension in {2..dim_max}, or 1 when dim_max is 1."""
    if dim_max < 1:
        raise ValueError(f"dimension bound must be >= 1, got {dim_max}")
    lo = 2 if dim_max >= 2 else 1
    return int(rng.integers(lo, dim_max + 1))


def fuzz_bound(trials: int, dim_s_max: int, dim_e_max: int, seed: int) -> dict:
    """Off-block bound on Haar-random couplings of random pure states.

    Checks per trial: slack >= -1e-9, the projected state's entropy
    equals the bound within 1e-9, and the output entropy does not exceed
    the projected entropy plus 1e-9.
    """
    failures = 0
    worst = np.inf
    recorded = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        ds = _dim(rng, dim_s_max)
        de = _dim(rng, dim_e_max)
        model = CouplingModel(random_unitary(ds * de, rng), dim_s=ds, dim_e=de)
        psi = random_pure_state(ds, rng)
        report = verify_entropy_bound(density_from_pure(psi), model)
        worst = min(worst, report.slack)
        bad = []
        if report.slack < -1e-9:
            bad.append(f"slack {report.slack!r} < -1e-9")
        if abs(report.projected_entropy - report.bound) > 1e-9:
            bad.append(f"projected {report.projected_entropy!r} != bound {report.bound!r}")
        if report.entropy > report.projected_entropy + 1e-9:
            bad.append(f"entropy {report.entropy!r} > projected {report.projected_entropy!r}")
        if bad:
            failures += 1
            if len(recorded) < _MAX_RECORDED:
                recorded.append({"trial": t, "seed": seed + t, "checks": bad,
                                 "state": matrix_to_json(density_from_pure(psi)),
                                 "model": model_to_json(model)})
    return {"suite": "theorem", "trials": trials, "failures": failures,
            "worst_slack": None if trials == 0 else float(worst),
            "seed": seed, "failed_trials": recorded}


def fuzz_measurement(trials: int, dim_max: int, seed: int) -> dict:
    """Purity bookkeeping under basis-aligned measurements.

    Even trials use mixed states, odd trials pure ones (whose projected
    entropy must equal the erased off-block weight outright). Checks:
    purity identity within 1e-10, entropy gain == off-block weight within
    1e-10, entropy never decreases within 1e-9.
    """
    failures = 0
    worst = 0.0
    recorded = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        dim = _dim(rng, dim_max)
        if t % 2 == 0:
            rho = random_density(dim, rng)
        else:
            rho = density_from_pure(random_pure_state(dim, rng))
        blocks = random_partition(dim, rng)
        ps = projectors_from_partition(blocks, dim)
        projected_purity, mass = purity_decomposition(rho, ps)
        residual = abs(purity(rho) - (projected_purity + mass))
        gain = entropy_gain(rho, ps)
        gain_residual = abs(gain - mass)
        worst = max(worst, residual, gain_residual)
        bad = []
        if residual > 1e-10:
            bad.append(f"purity identity residual {residual!r}")
        if gain_residual > 1e-10:
            bad.append(f"entropy gain {gain!r} != off-block weight {mass!r}")
        if not entropy_nondecreasing(rho, ps, tol=1e-9):
            bad.append("entropy decreased under measurement")
        if t % 2 == 1:
            pure_residual = abs((1.0 - projected_purity) - mass)
            worst = max(worst, pure_residual)
            if pure_residual > 1e-10:
                bad.append(f"pure-state projected entropy residual {pure_residual!r}")
        if bad:
            failures += 1
            if len(recorded) < _MAX_RECORDED:
                recorded.append({"trial": t, "seed": seed + t, "checks": bad,
                                 "state": matrix_to_json(rho),
                                 "partition": {"blocks": blocks}})
    return {"suite": "prop1", "trials": trials, "failures": failures,
            "worst_slack": None if trials == 0 else float(worst),
            "seed": seed, "failed_trials": recorded}


def fuzz_mixing(trials: int, dim_max: int, seed: int, max_components: int = 6) -> dict:
    """Mixing bound on random ensembles (pure members on even trials,
    mixed on odd; slack >= -1e-9 either way)."""
    failures = 0
    worst = np.inf
    recorded = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        dim = _dim(rng, dim_max)
        n = int(rng.integers(2, max_components + 1))
        ens = random_ensemble(dim, n, rng, pure=(t % 2 == 0))
        report = mixing_bound_report(ens)
        worst = min(worst, report.slack)
        if report.slack < -1e-9:
            failures += 1
            if len(recorded) < _MAX_RECORDED:
                recorded.append({"trial": t, "seed": seed + t,
                                 "checks": [f"slack {report.slack!r} < -1e-9"],
                                 "ensemble": {"weights": [float(w) for w in ens.weights],
                                              "states": [matrix_to_json(s) for s in ens.states]}})
    return {"suite": "prop2", "trials": trials, "failures": failures,
            "worst_slack": None if trials == 0 else float(worst),
            "seed": seed, "failed_trials": recorded}


def fuzz_schmidt(trials: int, dim_a_max: int, dim_b_max: int, seed: int) -> dict:
    """Reduced-state entropies of random bipartite pure states agree
    within 1e-10, and each equals 1 - purity of its reduction."""
    failures = 0
    worst = 0.0
    recorded = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        da = _dim(rng, dim_a_max)
        db = _dim(rng, dim_b_max)
        psi = random_pure_state(da * db, rng)
        h_a, h_b = schmidt_entropy_pair(psi, da, db)
        diff = abs(h_a - h_b)
        worst = max(worst, diff)
        if diff > 1e-10:
            failures += 1
            if len(recorded) < _MAX_RECORDED:
                recorded.append({"trial": t, "seed": seed + t,
                                 "checks": [f"reduction entropies differ by {diff!r}"],
                                 "psi": matrix_to_json(psi.reshape(-1, 1)),
                                 "dims": [da, db]})
    return {"suite": "schmidt", "trials": trials, "failures": failures,
            "worst_slack": None if trials == 0 else float(worst),
            "seed": seed, "failed_trials": recorded}


def fuzz_bridge(trials: int, n_max: int, seed: int) -> dict:
    """Classical partition entropy vs quantum measurement entropy on the
    amplitude encoding, within 1e-10."""
    failures = 0
    worst = 0.0
    recorded = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        n = _dim(rng, n_max)
        probs = random_distribution(n, rng)
        blocks = random_partition(n, rng)
        amps = np.sqrt(probs).astype(np.complex128)
        rho = np.outer(amps, amps.conj())
        measured = project(rho, projectors_from_partition(blocks, n))
        diff = abs(logical_entropy(measured) - partition_entropy(probs, blocks))
        worst = max(worst, diff)
        if diff > 1e-10:
            failures += 1
            if len(recorded) < _MAX_RECORDED:
                recorded.append({"trial": t, "seed": seed + t,
                                 "checks": [f"bridge residual {diff!r}"],
                                 "distribution": {"probs": [float(p) for p in probs]},
                                 "partition": {"blocks": blocks}})
    return {"suite": "bridge", "trials": trials, "failures": failures,
            "worst_slack": None if trials == 0 else float(worst),
            "seed": seed, "failed_trials": recorded}


SUITES = ("theorem", "prop1", "prop2", "schmidt", "bridge")


def run_suite(suite: str, trials: int, dim_s_max: int, dim_e_max: int, seed: int) -> dict:
    """Dispatch one suite (or "all") with the CLI's dimension knobs.

    dim_s_max is the primary dimension bound (system side, measured
    dimension, distribution size); dim_e_max the secondary one where a
    suite has two.
    """
    if suite == "theorem":
        return fuzz_bound(trials, dim_s_max, dim_e_max, seed)
    if suite == "prop1":
        return fuzz_measurement(trials, dim_s_max, seed)
    if suite == "prop2":
        return fuzz_mixing(trials, dim_s_max, seed)
    if suite == "schmidt":
        return fuzz_schmidt(trials, dim_s_max, dim_e_max, seed)
    if suite == "bridge":
        return fuzz_bridge(trials, dim_s_max, seed)
    if suite == "all":
        subs = [run_suite(s, trials, dim_s_max, dim_e_max, seed) for s in SUITES]
        slacks = [r["worst_slack"] for r in subs
                  if r["suite"] in ("theorem", "prop2") and r["worst_slack"] is not None]
        return {"suite": "all",
                "trials": sum(r["trials"] for r in subs),
                "failures": sum(r["failures"] for r in subs),
                "worst_slack": min(slacks) if slacks else None,
                "seed": seed,
                "suites": subs}
    raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
