"""Unitary matrix representations of a subgroup K.

A :class:`UnitaryRep` stores one ``d x d`` complex matrix per member of K, in
the order of ``K.members``.  Averages over K use the normalized Haar weight
``1/|K|``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    BadIdentity,
    NotHomomorphism,
    NotUnitary,
    PreconditionNotIrreducible,
    RepresentationError,
    ShapeMismatch,
)
from .group import Subgroup

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class UnitaryRep:
    group: Subgroup
    mats: np.ndarray
    label: str = ""

    @property
    def dim(self) -> int:
        return self.mats.shape[1]

    def mat(self, k: int) -> np.ndarray:
        """Matrix of the element ``k`` (an index into the parent group)."""
        return self.mats[self.group.rank[k]]

    def __repr__(self):
        return f"UnitaryRep({self.label or '?'}, dim={self.dim}, |K|={self.group.order})"


@dataclass
class IrrepFamily:
    """Pairwise inequivalent irreducible representations of one subgroup, keyed by label."""

    group: Subgroup
    reps: dict[str, UnitaryRep] = field(default_factory=dict)

    def __post_init__(self):
        for label, L in self.reps.items():
            if L.group is not self.group:
                raise ShapeMismatch(f"{label} is defined on a different subgroup")
            if not is_irreducible(L):
                raise PreconditionNotIrreducible(f"{label} is reducible")
        for (a, L), (b, M) in itertools.combinations(self.reps.items(), 2):
            if equivalence_check(L, M) is not None:
                raise RepresentationError(f"{a} and {b} are equivalent")

    def __iter__(self):
        return iter(self.reps.items())

    def __len__(self):
        return len(self.reps)


def validate_unitary_rep(K: Subgroup, mats: Mapping[int, np.ndarray] | Sequence | np.ndarray,
                         label: str = "", tol: float = 1e-10) -> UnitaryRep:
    """Build a :class:`UnitaryRep` after checking identity, unitarity and the homomorphism law.

    ``mats`` is either a mapping from element index (of the parent group) to a
    matrix, or a sequence aligned with ``K.members``.
    """
    if isinstance(mats, Mapping):
        missing = [k for k in K.members if k not in mats]
        if missing:
            raise RepresentationError(f"no matrix given for elements {missing}")
        extra = [k for k in mats if k not in K]
        if extra:
            raise RepresentationError(f"elements {extra} are not in the subgroup")
        arr = [np.atleast_2d(np.asarray(mats[k], dtype=complex)) for k in K.members]
    else:
        arr = [np.atleast_2d(np.asarray(m, dtype=complex)) for m in mats]
        if len(arr) != K.order:
            raise RepresentationError(f"expected {K.order} matrices, got {len(arr)}")
    d = arr[0].shape[0]
    for k, m in zip(K.members, arr):
        if m.shape != (d, d):
            raise RepresentationError(f"matrix of element {k} has shape {m.shape}, expected ({d}, {d})")
    M = np.stack(arr)

    G = K.parent
    eye = np.eye(d)
    if np.max(np.abs(M[K.rank[G.identity]] - eye)) > tol:
        raise BadIdentity("identity element is not sent to the identity matrix")
    for k, m in zip(K.members, M):
        res = np.max(np.abs(m @ m.conj().T - eye))
        if res > tol:
            raise NotUnitary(k, res)
    for a, ma in zip(K.members, M):
        prod = ma @ M                       # prod[j] = L(a) L(members[j])
        target = M[[K.rank[G.mul(a, b)] for b in K.members]]
        err = np.max(np.abs(prod - target), axis=(1, 2))
        j = int(np.argmax(err))
        if err[j] > tol:
            raise NotHomomorphism(a, K.members[j], float(err[j]))
    M.setflags(write=False)
    return UnitaryRep(K, M, label)


def conjugate_rep(L: UnitaryRep) -> UnitaryRep:
    label = f"conj({L.label})" if L.label else ""
    mats = L.mats.conj()
    mats.setflags(write=False)
    return UnitaryRep(L.group, mats, label)


def direct_sum(*reps: UnitaryRep, label: str = "") -> UnitaryRep:
    K = reps[0].group
    d = sum(L.dim for L in reps)
    out = np.zeros((K.order, d, d), dtype=complex)
    o = 0
    for L in reps:
        out[:, o:o + L.dim, o:o + L.dim] = L.mats
        o += L.dim
    out.setflags(write=False)
    return UnitaryRep(K, out, label)


def change_basis(L: UnitaryRep, B: np.ndarray, label: str = "") -> UnitaryRep:
    """The conjugated representation ``k -> B L(k) B^-1``."""
    B = np.asarray(B, dtype=complex)
    mats = B @ L.mats @ np.linalg.inv(B)
    mats.setflags(write=False)
    return UnitaryRep(L.group, mats, label)


def matrix_coefficient(L: UnitaryRep, k: int, i: int, j: int) -> complex:
    """``<L(k) xi_j, xi_i>`` with 1-based indices ``i, j``."""
    if not (1 <= i <= L.dim and 1 <= j <= L.dim):
        raise IndexError(f"indices ({i}, {j}) out of range 1..{L.dim}")
    return complex(L.mat(k)[i - 1, j - 1])


def character(L: UnitaryRep) -> dict[int, complex]:
    tr = np.trace(L.mats, axis1=1, axis2=2)
    return {k: complex(t) for k, t in zip(L.group.members, tr)}


def character_inner(L: UnitaryRep, M: UnitaryRep) -> complex:
    a = np.trace(L.mats, axis1=1, axis2=2)
    b = np.trace(M.mats, axis1=1, axis2=2)
    return complex(np.vdot(b, a) / L.group.order)


def irreducibility_index(L: UnitaryRep) -> float:
    """Normalized character norm ``sum_k nu |chi(k)|^2``; equals 1 exactly for irreducible L."""
    return float(character_inner(L, L).real)


def is_irreducible(L: UnitaryRep, tol: float = DEFAULT_TOL) -> bool:
    return abs(irreducibility_index(L) - 1.0) <= tol


def equivalence_check(L: UnitaryRep, M: UnitaryRep, rng=None, tol: float = DEFAULT_TOL,
                      tries: int = 3) -> np.ndarray | None:
    """Search for an invertible intertwiner ``T`` with ``T L(k) = M(k) T``.

    Averages ``M(k) X L(k)^-1`` over K for random seed matrices ``X``; returns the
    first invertible result, or ``None`` after ``tries`` failures.
    """
    if L.group is not M.group:
        raise ShapeMismatch("representations live on different subgroups")
    if L.dim != M.dim:
        return None
    rng = np.random.default_rng(0) if rng is None else rng
    d = L.dim
    Linv = L.mats.conj().transpose(0, 2, 1)
    for _ in range(tries):
        X = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        T = np.mean(M.mats @ X @ Linv, axis=0)
        s = np.linalg.svd(T, compute_uv=False)
        if s[-1] <= tol * max(1.0, s[0]):
            continue
        res = np.max(np.abs(T @ L.mats - M.mats @ T))
        if res <= tol * max(1.0, s[0]):
            return T
    return None


def schur_integrals(L: UnitaryRep, M: UnitaryRep) -> np.ndarray:
    """``S[i, j, l, m] = sum_k nu L_ij(k) conj(M_lm(k))`` (0-based indices)."""
    return np.einsum("kij,klm->ijlm", L.mats, M.mats.conj()) / L.group.order


def schur_check(L: UnitaryRep, M: UnitaryRep, tol: float = DEFAULT_TOL) -> float:
    """Largest deviation of the Schur integrals from ``delta_il delta_jm / d`` (same rep) or 0.

    Both arguments must be irreducible.  They are treated as the same
    representation when their matrices agree to ``tol``; distinct but
    equivalent realizations are rejected since neither target applies.
    """
    for R in (L, M):
        if not is_irreducible(R, tol):
            raise PreconditionNotIrreducible(f"{R.label or R} has irreducibility index "
                                             f"{irreducibility_index(R):.6g}")
    S = schur_integrals(L, M)
    same = L is M or (L.mats.shape == M.mats.shape and np.max(np.abs(L.mats - M.mats)) <= tol)
    if same:
        d = L.dim
        eye = np.eye(d)
        target = np.einsum("il,jm->ijlm", eye, eye) / d
    else:
        if abs(character_inner(L, M)) > 0.5:
            raise RepresentationError("representations are equivalent but not identical")
        target = np.zeros_like(S)
    return float(np.max(np.abs(S - target)))
