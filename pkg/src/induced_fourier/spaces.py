"""Weighted sequence norms on spectral fields.

For finite p, ``||Phi||_p^p = sum_sigma d_sigma sum_ij ||Phi(sigma)[i, j]||_A^p``.
For p = inf, ``||Phi||_inf = max_sigma ||Phi(sigma)||`` where the block norm is
the largest entry norm ``max_ij ||Phi(sigma)[i, j]||_A`` by default.  This is
the block norm for which ``||Phi||_inf <= ||Phi||_p`` holds for every p; the
sesquilinear operator norm (``kind="op"``) can exceed ``||Phi||_p`` when
p > 2 and is kept for the continuity estimate of the transform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidP, ShapeMismatch
from .transform import SpectralBlock, SpectralField

OP_TOL = 1e-10
OP_MAXITER = 100


@dataclass(frozen=True)
class SNorm:
    p: float
    value: float


def _parse_p(p) -> float:
    if isinstance(p, str):
        if p.strip().lower() in ("inf", "infinity", "∞"):
            return np.inf
        p = float(p)
    p = float(p)
    if np.isnan(p) or p < 1:
        raise InvalidP(f"p must lie in [1, inf], got {p}")
    return p


def operator_norm(coeffs: np.ndarray, tol: float = OP_TOL, maxiter: int = OP_MAXITER, starts: int = 4) -> float:
    """``sup ||sum_ij u_i conj(v_j) C[i, j]||_A`` over unit vectors u, v.

    Exact (largest singular value) for ``d_A = 1``.  Otherwise alternating
    maximization of ``|sum u_i conj(v_j) conj(w_a) C_ija|`` over unit (u, v, w),
    started once from the leading singular vectors of the unfoldings and
    ``starts - 1`` times from seeded random points; each run stops when the
    value moves by less than ``tol`` or after ``maxiter`` sweeps.  The result
    is capped by the Frobenius norm, which bounds the supremum from above.
    """
    C = np.asarray(coeffs, dtype=complex)
    N1, N2, dA = C.shape
    if not np.any(C):
        return 0.0
    if dA == 1:
        return float(np.linalg.norm(C[:, :, 0], 2))
    rng = np.random.default_rng(12345)
    u = np.empty((starts, N1), dtype=complex)
    w = np.empty((starts, dA), dtype=complex)
    u[0] = np.linalg.svd(C.reshape(N1, N2 * dA))[0][:, 0].conj()
    w[0] = np.linalg.svd(C.transpose(2, 0, 1).reshape(dA, N1 * N2))[0][:, 0]
    u[1:] = rng.standard_normal((starts - 1, N1)) + 1j * rng.standard_normal((starts - 1, N1))
    w[1:] = rng.standard_normal((starts - 1, dA)) + 1j * rng.standard_normal((starts - 1, dA))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    # all starts advance together; stop once every run has settled
    prev = np.full(starts, -1.0)
    for _ in range(maxiter):
        y = np.einsum("si,sa,ija->sj", u, w.conj(), C)
        v = y / np.maximum(np.linalg.norm(y, axis=1, keepdims=True), 1e-300)
        z = np.einsum("si,sj,ija->sa", u, v.conj(), C)
        w = z / np.maximum(np.linalg.norm(z, axis=1, keepdims=True), 1e-300)
        x = np.einsum("sj,sa,ija->si", v.conj(), w.conj(), C)
        val = np.linalg.norm(x, axis=1)
        u = x.conj() / np.maximum(val, 1e-300)[:, None]
        if np.all(np.abs(val - prev) <= tol):
            break
        prev = val
    best = float(val.max())
    return min(best, float(np.linalg.norm(C)))


def block_norm(block: SpectralBlock | np.ndarray, kind: str = "entry") -> float:
    C = block.coeffs if isinstance(block, SpectralBlock) else np.asarray(block)
    if kind == "entry":
        return float(np.max(np.linalg.norm(C, axis=2), initial=0.0))
    if kind == "op":
        return operator_norm(C)
    raise ValueError(f"unknown block norm {kind!r}")


def snorm(field: SpectralField, p, kind: str = "entry") -> SNorm:
    p = _parse_p(p)
    if np.isinf(p):
        vals = [block_norm(b, kind) for _, b in field]
        return SNorm(p, max(vals, default=0.0))
    total = 0.0
    for _, b in field:
        total += b.d_sigma * float(np.sum(np.linalg.norm(b.coeffs, axis=2) ** p))
    return SNorm(p, total ** (1 / p))


@dataclass
class Membership:
    member: bool
    witness: object


def membership(field: SpectralField, cls: str, epsilon: float = 0.0, p=None, kind: str = "entry") -> Membership:
    """Membership of a (finite) field in S00, S0, Sp or Sinf, with a witness.

    S00: the labels of blocks with norm above ``epsilon``.  S0: the labels of
    blocks with norm above ``epsilon`` (the exceedance set).  Sp / Sinf: the
    norm value.  Every finite field belongs to every class; the witness is
    what carries information.
    """
    norms = {label: block_norm(b, kind) for label, b in field}
    if cls == "S00":
        return Membership(True, sorted(k for k, v in norms.items() if v > epsilon))
    if cls == "S0":
        if epsilon <= 0:
            raise ValueError("S0 membership needs epsilon > 0")
        return Membership(True, sorted(k for k, v in norms.items() if v > epsilon))
    if cls == "Sp":
        value = snorm(field, p if p is not None else 2).value
        return Membership(bool(np.isfinite(value)), value)
    if cls == "Sinf":
        value = snorm(field, np.inf, kind).value
        return Membership(bool(np.isfinite(value)), value)
    raise ValueError(f"unknown class {cls!r}")


def monotonicity_check(field: SpectralField, p, q, kind: str = "entry", slack: float = 1e-12):
    """Return ``(||Phi||_q <= ||Phi||_p + slack, ||Phi||_p, ||Phi||_q)`` for ``p <= q``."""
    p, q = _parse_p(p), _parse_p(q)
    if p > q:
        raise InvalidP(f"need p <= q, got p={p}, q={q}")
    a = snorm(field, p, kind).value
    b = snorm(field, q, kind).value
    return b <= a + slack * max(1.0, a), a, b


def s2_inner(phi: SpectralField, psi: SpectralField) -> complex:
    """``sum_sigma d_sigma sum_ij <Phi[i, j], Psi[i, j]>_A``, linear in ``phi``."""
    if phi.labels() != psi.labels():
        raise ShapeMismatch("fields have different sigma labels")
    total = 0j
    for label, b in phi:
        c = psi[label]
        if b.coeffs.shape != c.coeffs.shape or b.d_sigma != c.d_sigma:
            raise ShapeMismatch(f"block {label!r}: shapes {b.coeffs.shape} and {c.coeffs.shape}")
        total += b.d_sigma * np.vdot(c.coeffs, b.coeffs)
    return complex(total)


def truncate(field: SpectralField, n: int, kind: str = "entry") -> SpectralField:
    """Zero every block whose norm is below ``1/n``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = {}
    for label, b in field:
        if block_norm(b, kind) < 1.0 / n:
            out[label] = SpectralBlock(np.zeros_like(b.coeffs), b.d_sigma, b.rep)
        else:
            out[label] = b
    return SpectralField(out)
