"""Representations of G induced from a unitary representation sigma of K.

The representation space consists of functions ``u: G -> C^d`` with
``u(gk) = sigma(k)^-1 u(g)``, with inner product
``<u, v> = sum_r mu_r <u(g_r), v(g_r)>`` over coset representatives, and G
acting by ``(U_t u)(g) = u(t^-1 g)``.

The canonical orthonormal basis is ``theta_(r,s)(g) = [g in g_r K] sigma((g_r^-1 g)^-1) xi_s``,
flattened row-major so basis index ``i = r*d + s`` (0-based internally).
"""
from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NotIrreducibleWarning, ShapeMismatch
from .group import CosetStructure, FiniteGroup, Subgroup, coset_decompose, haar_weights
from .reps import UnitaryRep, is_irreducible

DEFAULT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class EquivariantFunction:
    rep: UnitaryRep
    values: np.ndarray          # shape (|G|, d)

    def __call__(self, g: int) -> np.ndarray:
        return self.values[g]

    def equivariance_residual(self) -> float:
        """max_{g,k} |u(gk) - sigma(k)^-1 u(g)|."""
        K = self.rep.group
        G = K.parent
        worst = 0.0
        for k in K.members:
            kinv = self.rep.mat(k).conj().T
            moved = self.values[G.table[:, k]]
            worst = max(worst, float(np.max(np.abs(moved - self.values @ kinv.T), initial=0.0)))
        return worst


@dataclass(eq=False)
class InducedRep:
    sigma: UnitaryRep
    cosets: CosetStructure
    label: str = ""
    _opcache: dict = field(default_factory=dict, repr=False)
    _stacked: np.ndarray | None = field(default=None, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def group(self) -> FiniteGroup:
        return self.cosets.group

    @property
    def subgroup(self) -> Subgroup:
        return self.cosets.subgroup

    @property
    def d_sigma(self) -> int:
        return self.sigma.dim

    @property
    def N(self) -> int:
        return self.cosets.n * self.sigma.dim

    def index(self, r: int, s: int) -> int:
        return r * self.d_sigma + s

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.d_sigma)

    def basis_values(self, i: int) -> np.ndarray:
        """Values of theta_i at every element of G, shape (|G|, d)."""
        r, s = self.pair(i)
        G, cs = self.group, self.cosets
        out = np.zeros((G.order, self.d_sigma), dtype=complex)
        for g in np.flatnonzero(cs.coset == r):
            k = int(cs.kpart[g])
            out[g] = self.sigma.mat(G.inv(k))[:, s]
        return out

    @property
    def basis(self) -> list[EquivariantFunction]:
        return [EquivariantFunction(self.sigma, self.basis_values(i)) for i in range(self.N)]

    def operator(self, t: int) -> np.ndarray:
        """Matrix of U_t; memoized per element."""
        M = self._opcache.get(t)
        if M is None:
            M = self._build_operator(t)
            with self._lock:
                M = self._opcache.setdefault(t, M)
        return M

    def _build_operator(self, t: int) -> np.ndarray:
        G, cs, d = self.group, self.cosets, self.d_sigma
        M = np.zeros((self.N, self.N), dtype=complex)
        tinv = G.inv(t)
        for r, gr in enumerate(cs.reps):
            x = G.mul(tinv, gr)
            r2, k = cs.factor(x)
            # block (r, r2) = sigma(k^-1)
            M[r * d:(r + 1) * d, r2 * d:(r2 + 1) * d] = self.sigma.mat(G.inv(k))
        M.setflags(write=False)
        return M

    def operators(self) -> np.ndarray:
        """All U_t stacked, shape (|G|, N, N); entry [t, i, j] = u_ij(t)."""
        if self._stacked is None:
            ops = np.stack([self.operator(t) for t in range(self.group.order)])
            ops.setflags(write=False)
            with self._lock:
                if self._stacked is None:
                    self._stacked = ops
        return self._stacked

    def character(self) -> np.ndarray:
        return np.array([np.trace(self.operator(t)) for t in range(self.group.order)])

    @property
    def irreducibility_index(self) -> float:
        chi = self.character()
        return float(np.vdot(chi, chi).real / self.group.order)

    @property
    def irreducible(self) -> bool:
        return abs(self.irreducibility_index - 1.0) <= 1e-9

    def __repr__(self):
        return f"InducedRep({self.label or self.sigma.label or '?'}, N={self.N}, |G|={self.group.order})"


def induce(G: FiniteGroup, K: Subgroup, sigma: UnitaryRep, label: str | None = None) -> InducedRep:
    """Induce ``sigma`` from K up to G on the canonical coset basis.

    A reducible ``sigma`` only triggers :class:`NotIrreducibleWarning`; the
    construction itself does not need irreducibility.
    """
    if K.parent is not G or sigma.group is not K:
        raise ShapeMismatch("sigma must be a representation of a subgroup K of G")
    if not is_irreducible(sigma):
        warnings.warn(f"inducing from reducible representation {sigma.label or sigma}",
                      NotIrreducibleWarning, stacklevel=2)
    return InducedRep(sigma, coset_decompose(G, K), label if label is not None else sigma.label)


def induced_operator(U: InducedRep, t: int) -> np.ndarray:
    """``N x N`` matrix with entries ``<U_t theta_j, theta_i>``."""
    return U.operator(t)


def apply_operator(U: InducedRep, t: int, values: np.ndarray) -> np.ndarray:
    """(U_t u)(g) = u(t^-1 g), acting on value arrays of shape (|G|, d)."""
    G = U.group
    return values[G.table[G.inv(t)]]


def inner(U: InducedRep, u: np.ndarray, v: np.ndarray) -> complex:
    """<u, v> = sum_r mu_r <u(g_r), v(g_r)> on value arrays."""
    reps = list(U.cosets.reps)
    mu = haar_weights(U.group, U.subgroup).mu_array()
    return complex(np.sum(mu * np.sum(u[reps] * v[reps].conj(), axis=1)))


def project_equivariant(sigma: UnitaryRep, eta: Callable[[int], np.ndarray] | np.ndarray) -> EquivariantFunction:
    """u_eta(g) = sum_k nu sigma(k) eta(gk)."""
    K = sigma.group
    G = K.parent
    if callable(eta):
        eta = np.array([eta(g) for g in range(G.order)], dtype=complex)
    eta = np.asarray(eta, dtype=complex).reshape(G.order, sigma.dim)
    out = np.zeros_like(eta)
    for k in K.members:
        out += eta[G.table[:, k]] @ sigma.mat(k).T
    out /= K.order
    return EquivariantFunction(sigma, out)


def induced_coefficient(U: InducedRep, t: int, i: int, j: int) -> complex:
    """u_ij(t) = sum_r mu_r <theta_j(t^-1 g_r), theta_i(g_r)>, 1-based i, j.

    Evaluated directly from the basis functions, independently of
    :func:`induced_operator`.
    """
    if not (1 <= i <= U.N and 1 <= j <= U.N):
        raise IndexError(f"indices ({i}, {j}) out of range 1..{U.N}")
    return inner(U, apply_operator(U, t, U.basis_values(j - 1)), U.basis_values(i - 1))


@dataclass(frozen=True, eq=False)
class AlphaTable:
    values: np.ndarray          # [i, s, g] = alpha_is(g), 0-based i, s

    def __call__(self, i: int, s: int, g: int) -> complex:
        return complex(self.values[i, s, g])

    def theta(self, i: int, g: int) -> np.ndarray:
        return self.values[i, :, g]


def alpha(U: InducedRep) -> AlphaTable:
    """Coordinates of each basis function in the standard basis of C^d."""
    vals = np.stack([U.basis_values(i).T for i in range(U.N)])
    vals.setflags(write=False)
    return AlphaTable(vals)


def _coefficients_from_alpha(U: InducedRep, A: AlphaTable) -> np.ndarray:
    """P[t, i, j] = sum_r mu sum_s alpha_js(t^-1 g_r) conj(alpha_is(g_r))."""
    G = U.group
    reps = np.array(U.cosets.reps)
    mu = haar_weights(G, U.subgroup).mu_array()
    shifted = G.table[G.inverse][:, reps]                     # [t, r] = t^-1 g_r
    a_shift = A.values[:, :, shifted]                         # [j, s, t, r]
    a_here = A.values[:, :, reps].conj()                      # [i, s, r]
    return np.einsum("jstr,isr,r->tij", a_shift, a_here, mu)


def c_tensor_all(U: InducedRep, A: AlphaTable | None = None) -> np.ndarray:
    """c[i, j, l, m] for all 0-based quadruples, from the alpha functions.

    ``c_ijlm = d * sum_t lam(t) sum_{r,s} sum_{g,h}
    alpha_js(t^-1 g) conj(alpha_is(g)) conj(alpha_mr(t^-1 h)) alpha_lr(h)``
    with g, h running over coset representatives.
    """
    A = alpha(U) if A is None else A
    P = _coefficients_from_alpha(U, A)
    lam = haar_weights(U.group, U.subgroup).lam_array()
    return U.d_sigma * np.einsum("t,tij,tlm->ijlm", lam, P, P.conj())


def c_tensor(U: InducedRep, i: int, j: int, l: int, m: int, A: AlphaTable | None = None) -> complex:
    """Single entry of :func:`c_tensor_all` by explicit summation (1-based indices)."""
    A = alpha(U) if A is None else A
    G, d = U.group, U.d_sigma
    reps = U.cosets.reps
    lam = haar_weights(G, U.subgroup).lam_array()
    i, j, l, m = i - 1, j - 1, l - 1, m - 1
    total = 0j
    for t in range(G.order):
        tinv = G.inv(t)
        for r in range(d):
            for s in range(d):
                for g in reps:
                    x = A.values[j, s, G.mul(tinv, g)] * np.conj(A.values[i, s, g])
                    if x == 0:
                        continue
                    for h in reps:
                        total += lam[t] * x * np.conj(A.values[m, r, G.mul(tinv, h)]) * A.values[l, r, h]
    return d * total


def coefficient_integrals(U: InducedRep, V: InducedRep) -> np.ndarray:
    """X[i, j, l, m] = int_G u_ij conj(v_lm) dlam (0-based)."""
    if U.group is not V.group or U.subgroup is not V.subgroup:
        raise ShapeMismatch("inductions must share (G, K)")
    lam = haar_weights(U.group, U.subgroup).lam_array()
    return np.einsum("t,tij,tlm->ijlm", lam, U.operators(), V.operators().conj())


def inductions_equivalent(U: InducedRep, V: InducedRep, tol: float = 1e-9) -> bool:
    """Equivalence of two inductions from their characters.

    Only conclusive when at least one is irreducible; otherwise compares characters.
    """
    a, b = U.character(), V.character()
    if U.irreducible or V.irreducible:
        return abs(np.vdot(b, a) / U.group.order) > 0.5
    return bool(np.allclose(a, b, atol=tol))


@dataclass
class OrthogonalityReport:
    same_sigma: bool
    irreducible: tuple[bool, bool]
    equivalent: bool
    claims: dict[str, tuple[str, float]]    # claim -> (status, residual)
    integrals: np.ndarray = field(repr=False, default=None)

    @property
    def max_residual(self) -> float:
        return max((r for _, r in self.claims.values()), default=0.0)


def induced_orthogonality_check(U: InducedRep, V: InducedRep, tol: float = DEFAULT_TOL) -> OrthogonalityReport:
    """Compare the cross integrals of coefficient functions with the orthogonality relations.

    Same sigma: ``int u_ij conj(u_lm) = c_ijlm / d`` always, and ``= delta delta / d``
    when U is irreducible.  Different sigma: the relation ``= 0`` is evaluated and
    reported; it is expected to fail when the two inductions are equivalent.
    """
    X = coefficient_integrals(U, V)
    same = U is V or (U.sigma.mats.shape == V.sigma.mats.shape
                      and np.max(np.abs(U.sigma.mats - V.sigma.mats)) <= 1e-12)
    equivalent = inductions_equivalent(U, V)
    claims = {}
    if same:
        c = c_tensor_all(U)
        r_ctensor = float(np.max(np.abs(X - c / U.d_sigma)))
        claims["ctensor"] = ("PASS" if r_ctensor <= tol else "FAIL", r_ctensor)
        if U.irreducible:
            eye = np.eye(U.N)
            target = np.einsum("il,jm->ijlm", eye, eye) / U.d_sigma
            r_orth = float(np.max(np.abs(X - target)))
            claims["induced-orthonormal"] = ("PASS" if r_orth <= tol else "FAIL", r_orth)
        else:
            claims["induced-orthonormal"] = ("NOT-APPLICABLE", 0.0)
    else:
        r_cross = float(np.max(np.abs(X)))
        claims["cross-sigma"] = ("PASS" if r_cross <= tol else "FAIL", r_cross)
    return OrthogonalityReport(same, (U.irreducible, V.irreducible), equivalent, claims, X)
