"""Mixtures, the mixing entropy bound, and purifications.

The logical entropy of a mixture sum_i p_i rho_i never exceeds

    h(p) + sum_i p_i^2 h(rho_i),

with equality exactly when the components live on mutually orthogonal
supports. The proof route is constructive and checkable: purify an
ensemble of pure states into |SB> = sum_i sqrt(p_i) |psi_i>|i>, note the
two reduced states share a spectrum (so equal entropy), and compare the
B-side reduction against its measured diagonal, whose entropy is h(p).
Every link of that chain is verified numerically here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, partial_trace
from .measurement import project, projectors_from_partition
from .states import density_from_pure, logical_entropy, validate_density


@dataclass(frozen=True)
class Ensemble:
    """Weighted collection of density matrices on one space.

    Weights must be nonnegative and sum to 1 within 1e-9; they are then
    renormalized exactly so downstream identities hold at full precision.
    """

    weights: np.ndarray
    states: tuple

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        states = tuple(validate_density(s) for s in self.states)
        if w.shape[0] != len(states):
            raise ValueError(f"{w.shape[0]} weights for {len(states)} states")
        if w.shape[0] == 0:
            raise ValueError("empty ensemble")
        if np.any(w < 0):
            raise ValueError(f"negative weight {float(w.min()):.3e}")
        total = float(w.sum())
        if abs(total - 1.0) > DEFAULT_TOL:
            raise ValueError(f"weights sum to {total:.12g}, deviating from 1 beyond 1e-09")
        dim = states[0].shape[0]
        for k, s in enumerate(states):
            if s.shape != (dim, dim):
                raise ValueError(f"state {k} has shape {s.shape}, expected {(dim, dim)}")
        w = w / total
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "states", states)

    @property
    def dim(self) -> int:
        return self.states[0].shape[0]

    def __len__(self) -> int:
        return len(self.states)


def mix(ensemble: Ensemble) -> np.ndarray:
    """The mixture sum_i p_i rho_i."""
    out = np.zeros((ensemble.dim, ensemble.dim), dtype=np.complex128)
    for p, s in zip(ensemble.weights, ensemble.states):
        out += p * s
    return out


def weight_entropy(weights) -> float:
    """1 - sum p_i^2, the logical entropy of the weight distribution."""
    w = np.asarray(weights, dtype=float)
    return float(1.0 - np.sum(w * w))


@dataclass(frozen=True)
class MixReport:
    """Mixing-bound measurement: mixture_entropy <= bound up to slack >= 0.

    orthogonal_support is True when every pair of components satisfies
    tr(rho_i rho_j) < 1e-10; the bound is then an equality.
    """

    mixture_entropy: float
    bound: float
    slack: float
    weight_entropy: float
    orthogonal_support: bool


def orthogonal_support(ensemble: Ensemble, tol: float = 1e-10) -> bool:
    """Whether all component pairs overlap less than tol in tr(rho_i rho_j)."""
    for i in range(len(ensemble)):
        for j in range(i + 1, len(ensemble)):
            if abs(complex(np.vdot(ensemble.states[j], ensemble.states[i]))) >= tol:
                return False
    return True


def mixing_bound_report(ensemble: Ensemble) -> MixReport:
    """Evaluate both sides of the mixing entropy bound."""
    lhs = logical_entropy(mix(ensemble))
    w = ensemble.weights
    h_w = weight_entropy(w)
    rhs = h_w + float(sum(p * p * logical_entropy(s) for p, s in zip(w, ensemble.states)))
    return MixReport(
        mixture_entropy=lhs,
        bound=rhs,
        slack=rhs - lhs,
        weight_entropy=h_w,
        orthogonal_support=orthogonal_support(ensemble),
    )


def purify(rho) -> np.ndarray:
    """A pure vector on S (x) B (B a copy of S) reducing to rho on S.

    Built from the eigendecomposition, largest eigenvalue first, as
    sum_k sqrt(lam_k) |v_k>|k> with the S index slowest; a pure input
    therefore purifies to |psi>|0>.
    """
    rho = validate_density(rho)
    d = rho.shape[0]
    evals, evecs = np.linalg.eigh(rho)
    order = np.argsort(evals)[::-1]
    lam = np.clip(evals[order], 0.0, None)
    vecs = evecs[:, order]
    psi = np.zeros(d * d, dtype=np.complex128)
    for k in range(d):
        psi += np.sqrt(lam[k]) * np.kron(vecs[:, k], _basis_vec(d, k))
    return psi


def _basis_vec(dim: int, k: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[k] = 1.0
    return v


def purify_ensemble(ensemble: Ensemble, tol: float = DEFAULT_TOL) -> np.ndarray:
    """|SB> = sum_i sqrt(p_i) |psi_i>|i> for an ensemble of pure states.

    The B register has one dimension per component and records which
    member was drawn; tracing it out returns mix(ensemble), while the
    B-side reduction has entries <psi_j|psi_i> sqrt(p_i p_j). Members
    must be pure (largest eigenvalue within tol of 1).
    """
    n = len(ensemble)
    d = ensemble.dim
    psi = np.zeros(d * n, dtype=np.complex128)
    for i, (p, s) in enumerate(zip(ensemble.weights, ensemble.states)):
        evals, evecs = np.linalg.eigh(s)
        if 1.0 - float(evals[-1]) > tol:
            raise ValueError(f"ensemble member {i} is not pure: largest eigenvalue {float(evals[-1]):.12g}")
        psi += np.sqrt(p) * np.kron(evecs[:, -1], _basis_vec(n, i))
    return psi


def schmidt_entropy_pair(psi, dim_a: int, dim_b: int) -> tuple[float, float]:
    """Logical entropies of the two reductions of a bipartite pure state.

    They coincide (shared Schmidt spectrum), which makes the pair a
    useful self-test.
    """
    rho = density_from_pure(psi)
    h_a = logical_entropy(partial_trace(rho, dim_a, dim_b, keep="a"))
    h_b = logical_entropy(partial_trace(rho, dim_a, dim_b, keep="b"))
    return h_a, h_b


def purification_chain_check(ensemble: Ensemble, tol: float = DEFAULT_TOL) -> bool:
    """Verify the mixing bound's proof chain link by link.

    h(mix) == h(rho_B)  (shared Schmidt spectrum of |SB>),
    h(rho_B) <= h(diag(rho_B))  (measuring in the record basis),
    h(diag(rho_B)) == h(p)  (the diagonal of rho_B is exactly p).
    """
    n = len(ensemble)
    d = ensemble.dim
    psi = purify_ensemble(ensemble, tol=tol)
    rho_sb = density_from_pure(psi)
    h_mix = logical_entropy(mix(ensemble))
    rho_b = partial_trace(rho_sb, d, n, keep="b")
    h_b = logical_entropy(rho_b)
    measured = project(rho_b, projectors_from_partition([[i] for i in range(n)], n))
    h_diag = logical_entropy(measured)
    h_w = weight_entropy(ensemble.weights)
    return (abs(h_mix - h_b) <= tol) and (h_b <= h_diag + tol) and (abs(h_diag - h_w) <= tol)


def random_ensemble(dim: int, n: int, seed, pure: bool = True) -> Ensemble:
    """Random ensemble with Dirichlet-uniform weights.

    pure=True draws Gaussian unit vectors; otherwise Ginibre mixed states.
    """
    from .states import random_density, random_pure_state

    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    w = rng.dirichlet(np.ones(n))
    if pure:
        states = [density_from_pure(random_pure_state(dim, rng)) for _ in range(n)]
    else:
        states = [random_density(dim, rng) for _ in range(n)]
    return Ensemble(weights=w, states=tuple(states))
