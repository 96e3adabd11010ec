"""Vector-valued Fourier-Stieltjes transform over induced representations.

Measures and functions take values in a finite-dimensional Hilbert space
``A = C^{d_A}`` and are stored as arrays of shape ``(|G|, d_A)``.

Conventions (fixed so that the transform of a coefficient function and the
inversion formula agree):

* ``m_hat(sigma)(theta_i, theta_j) = sum_t conj(u_ji(t)) m({t})``, i.e. the
  block entry ``[i, j]`` pairs with ``conj(u_ji)``;
* for ``f = u_ij a`` with U irreducible, the only nonzero entry is
  ``f_hat[j, i] = a / d_sigma``;
* synthesis is ``f(t) = sum_sigma d_sigma sum_ij f_hat[j, i] u_ij(t)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import NotIrreducibleWarning, ShapeMismatch
from .group import FiniteGroup, haar_weights
from .induce import InducedRep, inductions_equivalent


@dataclass(frozen=True)
class CoefficientSpace:
    dim: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("coefficient space dimension must be >= 1")

    @staticmethod
    def inner(x, y) -> complex:
        """Hermitian product, linear in the first slot."""
        return complex(np.vdot(y, x))


def _as_values(G: FiniteGroup, values, d_A: int | None) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.shape[0] != G.order:
        raise ShapeMismatch(f"expected {G.order} values, got {arr.shape[0]}")
    if d_A is not None and arr.shape[1] != d_A:
        raise ShapeMismatch(f"values have dimension {arr.shape[1]}, space has {d_A}")
    return arr


@dataclass(frozen=True, eq=False)
class VectorMeasure:
    """Atomic A-valued measure: ``atoms[t]`` is the mass at element t."""

    group: FiniteGroup
    atoms: np.ndarray

    @classmethod
    def from_values(cls, G: FiniteGroup, atoms) -> "VectorMeasure":
        return cls(G, _as_values(G, atoms, None))

    @classmethod
    def from_dict(cls, G: FiniteGroup, atoms: Mapping[int, object], d_A: int) -> "VectorMeasure":
        arr = np.zeros((G.order, d_A), dtype=complex)
        for t, a in atoms.items():
            arr[int(t)] = np.asarray(a, dtype=complex).reshape(d_A)
        return cls(G, arr)

    @classmethod
    def dirac(cls, G: FiniteGroup, t: int, a) -> "VectorMeasure":
        a = np.atleast_1d(np.asarray(a, dtype=complex))
        arr = np.zeros((G.order, a.size), dtype=complex)
        arr[t] = a
        return cls(G, arr)

    @property
    def space(self) -> CoefficientSpace:
        return CoefficientSpace(self.atoms.shape[1])

    def norm(self) -> float:
        """Total variation ``sum_t ||m({t})||_A``."""
        return float(np.sum(np.linalg.norm(self.atoms, axis=1)))

    def __add__(self, other):
        return VectorMeasure(self.group, self.atoms + other.atoms)

    def __mul__(self, c):
        return VectorMeasure(self.group, c * self.atoms)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class VectorFunction:
    group: FiniteGroup
    values: np.ndarray
    lam: np.ndarray = field(repr=False)

    @classmethod
    def from_values(cls, G: FiniteGroup, values, lam) -> "VectorFunction":
        return cls(G, _as_values(G, values, None), np.asarray(lam, dtype=float))

    @property
    def space(self) -> CoefficientSpace:
        return CoefficientSpace(self.values.shape[1])

    def norm(self, p: float = 2) -> float:
        pointwise = np.linalg.norm(self.values, axis=1)
        if np.isinf(p):
            return float(pointwise.max())
        return float(np.sum(self.lam * pointwise ** p) ** (1 / p))

    def inner(self, other: "VectorFunction") -> complex:
        """<f, g> = sum_t lam <f(t), g(t)>_A."""
        return complex(np.sum(self.lam * np.sum(self.values * other.values.conj(), axis=1)))

    def as_measure(self) -> VectorMeasure:
        """The measure ``f dlam``."""
        return VectorMeasure(self.group, self.lam[:, None] * self.values)

    def __add__(self, other):
        return VectorFunction(self.group, self.values + other.values, self.lam)

    def __sub__(self, other):
        return VectorFunction(self.group, self.values - other.values, self.lam)

    def __mul__(self, c):
        return VectorFunction(self.group, c * self.values, self.lam)

    __rmul__ = __mul__


def lam_weights(U: InducedRep) -> np.ndarray:
    return haar_weights(U.group, U.subgroup).lam_array()


def coefficient_function(U: InducedRep, i: int, j: int, a) -> VectorFunction:
    """The A-valued function ``t -> u_ij(t) a`` (1-based i, j)."""
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    u = U.operators()[:, i - 1, j - 1]
    return VectorFunction(U.group, u[:, None] * a[None, :], lam_weights(U))


@dataclass(eq=False)
class SpectralBlock:
    """Coefficient table ``coeffs[i, j] = Phi(sigma)(theta_i, theta_j)`` in A."""

    coeffs: np.ndarray                  # (N, N, d_A)
    d_sigma: int
    rep: InducedRep | None = None

    @property
    def N(self) -> int:
        return self.coeffs.shape[0]

    def __call__(self, u, v) -> np.ndarray:
        """Sesquilinear evaluation on coordinate vectors: linear in u, antilinear in v."""
        return np.einsum("i,j,ija->a", np.asarray(u), np.conj(v), self.coeffs)

    def __add__(self, other):
        return SpectralBlock(self.coeffs + other.coeffs, self.d_sigma, self.rep)

    def __mul__(self, c):
        return SpectralBlock(c * self.coeffs, self.d_sigma, self.rep)

    __rmul__ = __mul__


@dataclass(eq=False)
class SpectralField:
    blocks: dict[str, SpectralBlock] = field(default_factory=dict)

    def __getitem__(self, label):
        return self.blocks[label]

    def __iter__(self):
        return iter(self.blocks.items())

    def __len__(self):
        return len(self.blocks)

    def labels(self):
        return list(self.blocks)

    def _combine(self, other, op):
        if self.labels() != other.labels():
            raise ShapeMismatch("fields have different sigma labels")
        return SpectralField({k: SpectralBlock(op(b.coeffs, other.blocks[k].coeffs), b.d_sigma, b.rep)
                              for k, b in self.blocks.items()})

    def __add__(self, other):
        return self._combine(other, np.add)

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __mul__(self, c):
        return SpectralField({k: b * c for k, b in self.blocks.items()})

    __rmul__ = __mul__


def _check_group(G, U: InducedRep):
    if G is not U.group:
        raise ShapeMismatch("measure/function and representation live on different groups")


def fourier_stieltjes(m: VectorMeasure, U: InducedRep) -> SpectralBlock:
    """``m_hat(sigma)[i, j] = sum_t conj(u_ji(t)) m({t})``."""
    _check_group(m.group, U)
    coeffs = np.einsum("tji,ta->ija", U.operators().conj(), m.atoms)
    return SpectralBlock(coeffs, U.d_sigma, U)


def fourier_function(f: VectorFunction, U: InducedRep) -> SpectralBlock:
    """``f_hat(sigma)[i, j] = sum_t lam(t) conj(u_ji(t)) f(t)``."""
    _check_group(f.group, U)
    coeffs = np.einsum("t,tji,ta->ija", lam_weights(U), U.operators().conj(), f.values)
    return SpectralBlock(coeffs, U.d_sigma, U)


def fourier_field(x: VectorFunction | VectorMeasure, reps: Mapping[str, InducedRep]) -> SpectralField:
    transform = fourier_function if isinstance(x, VectorFunction) else fourier_stieltjes
    return SpectralField({label: transform(x, U) for label, U in reps.items()})


def spectral_decompose(block: SpectralBlock) -> np.ndarray:
    """Matrix ``a[i, j]`` with ``Phi = sum_ij d_sigma a_ij u_ij_hat``.

    Since ``u_ij_hat[m, l] = delta_li delta_mj / d_sigma`` this is ``a[i, j] = Phi[j, i]``.
    """
    if block.rep is not None and not block.rep.irreducible:
        warnings.warn("decomposing a block over a reducible induction", NotIrreducibleWarning, stacklevel=2)
    return block.coeffs.transpose(1, 0, 2).copy()


def synthesize(field: SpectralField) -> VectorFunction:
    """``f(t) = sum_sigma d_sigma sum_ij Phi(sigma)[j, i] u_ij(t)``."""
    blocks = list(field.blocks.values())
    if not blocks:
        raise ValueError("cannot synthesize an empty field")
    U0 = blocks[0].rep
    G = U0.group
    out = None
    for b in blocks:
        if b.rep is None or b.rep.group is not G:
            raise ShapeMismatch("every block needs an induced representation over the same group")
        term = b.d_sigma * np.einsum("tij,jia->ta", b.rep.operators(), b.coeffs)
        out = term if out is None else out + term
    return VectorFunction(G, out, lam_weights(U0))


def inequivalent_irreducible(reps: Mapping[str, InducedRep]) -> dict[str, InducedRep]:
    """Keep the irreducible inductions, dropping any equivalent to one kept earlier."""
    kept: dict[str, InducedRep] = {}
    for label, U in reps.items():
        if not U.irreducible:
            continue
        if any(inductions_equivalent(U, V) for V in kept.values()):
            continue
        kept[label] = U
    return kept


def project_span(f: VectorFunction, reps: Mapping[str, InducedRep]) -> tuple[VectorFunction, float]:
    """Orthogonal projection onto span{u_ij a : sigma in reps} and the L2 distance to it.

    Exact as a projection when ``reps`` are pairwise inequivalent irreducible inductions.
    """
    fp = synthesize(fourier_field(f, reps))
    return fp, (f - fp).norm(2)


def plancherel_gap(f: VectorFunction, reps: Mapping[str, InducedRep]) -> float:
    """| ||f||_2^2 - ||f_hat||_S2^2 |; zero on the coefficient span."""
    from .spaces import snorm
    return abs(f.norm(2) ** 2 - snorm(fourier_field(f, reps), 2).value ** 2)


def parseval_inner(f: VectorFunction, g: VectorFunction, reps: Mapping[str, InducedRep]) -> tuple[complex, complex]:
    """(<f, g>_L2, <f_hat, g_hat>_S2)."""
    from .spaces import s2_inner
    return f.inner(g), s2_inner(fourier_field(f, reps), fourier_field(g, reps))


@dataclass
class NormBoundReport:
    measure_norm: float
    transform_norm: float           # sup over sigma of the max-entry block norm
    transform_op_norm: float        # sup over sigma of the sesquilinear operator norm
    linearity_residual: float
    injectivity_residual: float
    tol: float

    @property
    def holds(self) -> bool:
        return (self.transform_norm <= self.measure_norm + self.tol
                and self.transform_op_norm <= self.measure_norm + self.tol)


def norm_bound_check(m: VectorMeasure, reps: Mapping[str, InducedRep], rng=None, tol: float = 1e-10) -> NormBoundReport:
    """Check ``||m_hat||_inf <= ||m||``, linearity of ``m -> m_hat`` and injectivity on the span.

    Linearity is tested against one random measure and scalar.  Injectivity:
    the span part of ``m`` (density w.r.t. lam, projected) is recovered from
    its transform by synthesis.
    """
    from .spaces import snorm
    rng = np.random.default_rng(0) if rng is None else rng
    mh = fourier_field(m, reps)
    sup = snorm(mh, np.inf).value
    sup_op = snorm(mh, np.inf, kind="op").value

    other = VectorMeasure(m.group, rng.standard_normal(m.atoms.shape) + 1j * rng.standard_normal(m.atoms.shape))
    c = complex(rng.standard_normal(), rng.standard_normal())
    lhs = fourier_field(m + c * other, reps)
    rhs = mh + c * fourier_field(other, reps)
    lin = max(float(np.max(np.abs(lhs[k].coeffs - rhs[k].coeffs))) for k in lhs.labels())

    span = inequivalent_irreducible(reps)
    inj = 0.0
    if span:
        U0 = next(iter(span.values()))
        lam = lam_weights(U0)
        density = VectorFunction(m.group, m.atoms / lam[:, None], lam)
        fp, _ = project_span(density, span)
        back = synthesize(fourier_field(fp.as_measure(), span))
        inj = (back - fp).norm(2)
    return NormBoundReport(m.norm(), sup, sup_op, lin, inj, tol)
