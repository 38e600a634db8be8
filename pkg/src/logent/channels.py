"""Noise channels from system-environment couplings, and the off-block
entropy bound.

A noise process is modeled as a unitary U acting jointly on the system S
and an environment E prepared in a basis state |e0>. Throughout, the
joint space is ordered environment-major: the environment index varies
slowest, so joint index = e * dim_s + s and the joint matrix splits into
a dim_e x dim_e grid of dim_s x dim_s blocks indexed by environment
basis pairs.

With that layout the coupled state U (|e0><e0| (x) rho) U† has blocks

    B[i][j] = E_i rho E_j†,   E_i = <i| U |e0>,

where the E_i are the Kraus operators of the induced channel. The
central inequality: for *pure* input rho, the logical entropy of the
noisy output tr_E(...) is at most the total Frobenius weight of the
off-diagonal blocks,

    h(rho_out) <= sum_{i != j} tr(B[i][j] B[i][j]†).

Equality analysis splits into two steps, both reported by
verify_entropy_bound: projecting the coupled state onto its diagonal
blocks yields entropy exactly equal to the bound (pure input), and the
traced output never exceeds the projected entropy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, as_complex_matrix, partial_trace
from .states import logical_entropy, purity, validate_density


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class CouplingModel:
    """A system-environment coupling: joint unitary plus dimension split.

    Parameters
    ----------
    unitary : ndarray
        (dim_s*dim_e) x (dim_s*dim_e) unitary on E (x) S, environment-major.
    dim_s, dim_e : int
        System and environment dimensions.
    env_init : int
        Environment initial basis state index, default 0.
    """

    unitary: np.ndarray
    dim_s: int
    dim_e: int
    env_init: int = 0

    def __post_init__(self):
        u = as_complex_matrix(self.unitary)
        n = self.dim_s * self.dim_e
        if self.dim_s < 1 or self.dim_e < 1:
            raise ValueError(f"dimensions must be positive, got dim_s={self.dim_s} dim_e={self.dim_e}")
        if u.shape != (n, n):
            raise ValueError(f"dimension mismatch: unitary is {u.shape}, dims imply {(n, n)}")
        defect = float(np.max(np.abs(u @ u.conj().T - np.eye(n))))
        if defect > DEFAULT_TOL:
            raise ValueError(f"matrix is not unitary: U U† deviates from I by {defect:.3e}")
        if not 0 <= self.env_init < self.dim_e:
            raise ValueError(f"env_init {self.env_init} outside [0, {self.dim_e})")
        object.__setattr__(self, "unitary", _readonly(u))


def couple(rho, model: CouplingModel) -> np.ndarray:
    """Joint state U (|e0><e0| (x) rho) U† on E (x) S (environment-major)."""
    rho = as_complex_matrix(rho)
    if rho.shape != (model.dim_s, model.dim_s):
        raise ValueError(f"dimension mismatch: state is {rho.shape}, model system side is {model.dim_s}")
    e_proj = np.zeros((model.dim_e, model.dim_e), dtype=np.complex128)
    e_proj[model.env_init, model.env_init] = 1.0
    joint = np.kron(e_proj, rho)
    u = model.unitary
    return u @ joint @ u.conj().T


def extract_kraus(model: CouplingModel) -> list[np.ndarray]:
    """Kraus operators E_i = <i| U |e0> of the induced channel.

    E_i is the dim_s x dim_s slice of U at block row i, block column
    env_init. Completeness sum_i E_i† E_i = I is checked (it follows
    from unitarity, so a violation means the model is corrupt).
    """
    ds = model.dim_s
    col = model.env_init * ds
    ops = [model.unitary[i * ds:(i + 1) * ds, col:col + ds].copy() for i in range(model.dim_e)]
    defect = completeness_defect(ops)
    if defect > DEFAULT_TOL:
        raise ValueError(f"Kraus completeness violated: sum E†E deviates from I by {defect:.3e}")
    return ops


def completeness_defect(ops) -> float:
    """Largest entrywise deviation of sum_i E_i† E_i from the identity."""
    ops = [as_complex_matrix(e) for e in ops]
    if not ops:
        raise ValueError("empty operator list")
    acc = sum(e.conj().T @ e for e in ops)
    return float(np.max(np.abs(acc - np.eye(ops[0].shape[1]))))


def apply_channel(rho, ops) -> np.ndarray:
    """sum_i E_i rho E_i†. Trace-preserving when ops are complete."""
    rho = as_complex_matrix(rho)
    out = np.zeros_like(rho)
    for e in ops:
        e = as_complex_matrix(e)
        if e.shape[1] != rho.shape[0]:
            raise ValueError(f"dimension mismatch: operator {e.shape} against state {rho.shape}")
        out += e @ rho @ e.conj().T
    return out


@dataclass(frozen=True)
class BlockMatrix:
    """Environment-indexed block grid of a joint density matrix."""

    blocks: tuple
    dim_s: int
    dim_e: int

    def block(self, i: int, j: int) -> np.ndarray:
        return self.blocks[i][j]

    def reassemble(self) -> np.ndarray:
        """Stitch the grid back into the full matrix (bit-exact)."""
        return np.block([[self.blocks[i][j] for j in range(self.dim_e)] for i in range(self.dim_e)])

    def diagonal_projection(self) -> np.ndarray:
        """The joint state with every off-diagonal block zeroed.

        This is sum_i (I (x) |i><i|) J (I (x) |i><i|), the post-measurement
        state of an environment-basis measurement.
        """
        n = self.dim_s * self.dim_e
        out = np.zeros((n, n), dtype=np.complex128)
        ds = self.dim_s
        for i in range(self.dim_e):
            out[i * ds:(i + 1) * ds, i * ds:(i + 1) * ds] = self.blocks[i][i]
        return out


def block_decompose(joint, dim_s: int, dim_e: int) -> BlockMatrix:
    """Cut a joint density matrix into its environment-indexed blocks.

    The source must look like a density matrix (Hermitian within 1e-9,
    unit trace within 1e-9); B[j][i] is then the dagger of B[i][j].
    """
    joint = as_complex_matrix(joint)
    n = dim_s * dim_e
    if joint.shape != (n, n):
        raise ValueError(f"dimension mismatch: expected {(n, n)}, got {joint.shape}")
    defect = float(np.max(np.abs(joint - joint.conj().T)))
    if defect > DEFAULT_TOL:
        raise ValueError(f"joint state not Hermitian: defect {defect:.3e}")
    tr_dev = abs(complex(np.trace(joint)) - 1.0)
    if tr_dev > DEFAULT_TOL:
        raise ValueError(f"joint state trace deviates from 1 by {tr_dev:.3e}")
    rows = []
    for i in range(dim_e):
        rows.append(tuple(joint[i * dim_s:(i + 1) * dim_s, j * dim_s:(j + 1) * dim_s]
                          for j in range(dim_e)))
    return BlockMatrix(blocks=tuple(rows), dim_s=dim_s, dim_e=dim_e)


def off_block_bound(blocks: BlockMatrix) -> float:
    """Total Frobenius weight of the off-diagonal blocks,
    sum_{i != j} tr(B_ij B_ij†)."""
    total = 0.0
    for i in range(blocks.dim_e):
        for j in range(blocks.dim_e):
            if i != j:
                b = blocks.blocks[i][j]
                total += float(np.vdot(b, b).real)
    return total


@dataclass(frozen=True)
class BoundReport:
    """Everything verify_entropy_bound measures about one (state, model) pair.

    slack = bound - entropy; >= 0 is the inequality. The two proof-step
    fields record whether the diagonal-block projection has entropy equal
    to the bound (true exactly when the coupled state is pure) and whether
    the traced output's entropy stays below the projection's (always).
    """

    entropy: float
    bound: float
    slack: float
    projected_entropy: float
    hypothesis_pure: bool
    projected_equals_bound: bool
    entropy_le_projected: bool


def verify_entropy_bound(rho, model: CouplingModel, tol: float = DEFAULT_TOL) -> BoundReport:
    """Couple rho to the environment and compare output entropy with the
    off-block bound.

    The inequality h(out) <= bound is guaranteed for pure rho. Mixed
    inputs are processed all the same, with hypothesis_pure=False in the
    report; their slack may legitimately be negative.
    """
    rho = validate_density(rho, tol=tol)
    joint = couple(rho, model)
    out = partial_trace(joint, model.dim_e, model.dim_s, keep="b")
    blocks = block_decompose(joint, model.dim_s, model.dim_e)
    bound = off_block_bound(blocks)
    entropy = logical_entropy(out)
    projected = logical_entropy(blocks.diagonal_projection())
    return BoundReport(
        entropy=entropy,
        bound=bound,
        slack=bound - entropy,
        projected_entropy=projected,
        hypothesis_pure=purity(rho) >= 1.0 - tol,
        projected_equals_bound=abs(projected - bound) <= tol,
        entropy_le_projected=entropy <= projected + tol,
    )


def rotate_env_init(model: CouplingModel, env_state) -> CouplingModel:
    """Fold a pure environment preparation |w> into the unitary.

    Returns a model with U' = U (W (x) I_S) where W maps |env_init> to
    |w>; coupling with the new model is coupling the old one to |w>.
    """
    w = np.asarray(env_state, dtype=np.complex128).reshape(-1)
    if w.shape[0] != model.dim_e:
        raise ValueError(f"dimension mismatch: env state has {w.shape[0]} entries, dim_e={model.dim_e}")
    norm = float(np.linalg.norm(w))
    if abs(norm - 1.0) > 1e-6:
        raise ValueError(f"environment state norm {norm:.9g} deviates from 1 by more than 1e-6")
    w = w / norm
    # Complete w to an orthonormal basis, phase-fixed so column 0 is w itself,
    # then swap that column into position env_init.
    q, r = np.linalg.qr(w.reshape(-1, 1), mode="complete")
    q = np.asarray(q, dtype=np.complex128)
    q[:, 0] *= r[0, 0] / abs(r[0, 0])
    perm = list(range(model.dim_e))
    perm[0], perm[model.env_init] = perm[model.env_init], perm[0]
    w_full = q[:, perm]
    u2 = model.unitary @ np.kron(w_full, np.eye(model.dim_s))
    return CouplingModel(u2, dim_s=model.dim_s, dim_e=model.dim_e, env_init=model.env_init)


def embed_reference(model: CouplingModel, dim_r: int) -> CouplingModel:
    """Lift a coupling on S to one on R (x) S acting trivially on R.

    Block (i, j) of the lifted unitary is I_R (x) U_ij with U_ij the
    corresponding system block of the original; the induced Kraus
    operators are I_R (x) E_i.
    """
    ds, de = model.dim_s, model.dim_e
    eye_r = np.eye(dim_r)
    rows = []
    for i in range(de):
        row = [np.kron(eye_r, model.unitary[i * ds:(i + 1) * ds, j * ds:(j + 1) * ds])
               for j in range(de)]
        rows.append(row)
    u2 = np.block(rows)
    return CouplingModel(u2, dim_s=dim_r * ds, dim_e=de, env_init=model.env_init)


@dataclass(frozen=True)
class ExchangeReport:
    """Exchange entropy of (rho, model) and the off-block bound that caps it."""

    exchange_entropy: float
    bound: float
    slack: float
    dim_r: int


def exchange_entropy(rho, model: CouplingModel, tol: float = DEFAULT_TOL) -> ExchangeReport:
    """Entropy the environment gains, measured through a reference system.

    rho is purified against a reference R of dimension rank(rho); the
    coupling acts on the S side of the pure state |RS>, and the reported
    entropy is that of the surviving R (x) S state after tracing out E.
    Because |RS> is pure, the off-block bound applies unconditionally.

    The model may act either on R (x) S directly (dim_s == dim_r * d) or
    on S alone (dim_s == d), in which case it is lifted with
    embed_reference. Anything else is a dimension error.
    """
    rho = validate_density(rho, tol=tol)
    d = rho.shape[0]
    evals, evecs = np.linalg.eigh(rho)
    keep = evals > tol
    lam = evals[keep]
    vecs = evecs[:, keep]
    dim_r = int(lam.shape[0])
    # |RS> = sum_k sqrt(lam_k) |k>_R |v_k>_S, reference index slowest.
    psi = (np.sqrt(lam)[None, :] * vecs).T.reshape(-1)
    rho_rs = np.outer(psi, psi.conj())

    if model.dim_s == dim_r * d:
        lifted = model
    elif model.dim_s == d:
        lifted = embed_reference(model, dim_r)
    else:
        raise ValueError(
            f"dimension mismatch: model system side {model.dim_s} matches neither "
            f"dim_r*dim_s={dim_r * d} nor dim_s={d}")

    report = verify_entropy_bound(rho_rs, lifted, tol=tol)
    return ExchangeReport(
        exchange_entropy=report.entropy,
        bound=report.bound,
        slack=report.slack,
        dim_r=dim_r,
    )
