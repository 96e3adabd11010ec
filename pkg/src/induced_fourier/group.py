"""Finite groups given by Cayley tables, subgroups, left cosets and Haar weights.

Elements are integer indices ``0..order-1``.  A :class:`FiniteGroup` wraps a
validated multiplication table; :class:`Subgroup` and :class:`CosetStructure`
describe ``K`` and ``G/K``; :class:`HaarWeights` holds the three invariant
measures (``lam`` on G, ``nu`` on K, ``mu`` on G/K) as exact rationals.

Normalization: ``nu(K) = 1``, ``mu`` counts cosets and ``lam = mu * nu``, so
every element of G carries weight ``1/|K|`` and ``lam(G) = [G:K]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NoIdentity, NotAssociative, NotLatinSquare, NotSubgroup

MAX_ORDER = 256


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity: int
    inverse: np.ndarray
    name: str = ""
    labels: tuple | None = None

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.table[x, a]
            n += 1
        return n

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return str(self.labels[a])

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def validate_group(table, name: str = "", labels: Sequence | None = None) -> FiniteGroup:
    """Check the group axioms on a Cayley table and build a :class:`FiniteGroup`.

    ``table[a][b]`` is the index of ``a*b``.  Raises :class:`NotLatinSquare`,
    :class:`NoIdentity` or :class:`NotAssociative` naming the offending indices.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if not np.issubdtype(t.dtype, np.integer):
        if not np.all(np.equal(np.mod(t, 1), 0)):
            raise ValueError("table entries must be integers")
    t = t.astype(np.int64)
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise ValueError(f"entry table[{bad[0]}][{bad[1]}] = {t[bad[0], bad[1]]} out of range 0..{n - 1}")

    full = np.arange(n)
    for a in range(n):
        if not np.array_equal(np.sort(t[a]), full):
            raise NotLatinSquare("row", a)
    for b in range(n):
        if not np.array_equal(np.sort(t[:, b]), full):
            raise NotLatinSquare("column", b)

    candidates = [e for e in range(n) if np.array_equal(t[e], full) and np.array_equal(t[:, e], full)]
    if not candidates:
        raise NoIdentity("no element e with e*a = a*e = a for all a")
    e = candidates[0]

    # Latin rows guarantee a unique right inverse; two-sidedness follows from associativity
    inverse = np.argmax(t == e, axis=1)

    for a in range(n):
        lhs = t[t[a]]          # lhs[b, c] = (a*b)*c
        rhs = t[a][t]          # rhs[b, c] = a*(b*c)
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            raise NotAssociative(a, int(b), int(c))

    t.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(t, int(e), inverse, name, tuple(labels) if labels is not None else None)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]
    rank: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, g) -> bool:
        return g in self.rank

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def make_subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Wrap an explicit list of elements as a subgroup after checking closure."""
    members = tuple(int(m) for m in members)
    if len(set(members)) != len(members):
        raise NotSubgroup("duplicate members")
    mset = set(members)
    if G.identity not in mset:
        raise NotSubgroup("identity missing from subgroup")
    for a in members:
        if G.inv(a) not in mset:
            raise NotSubgroup(f"inverse of {a} missing")
        for b in members:
            if G.mul(a, b) not in mset:
                raise NotSubgroup(f"product {a}*{b} = {G.mul(a, b)} leaves the subgroup")
    if G.order % len(members):
        raise NotSubgroup(f"|K| = {len(members)} does not divide |G| = {G.order}")
    return Subgroup(G, members, {m: i for i, m in enumerate(members)})


def subgroup_closure(G: FiniteGroup, generators: Iterable[int] = ()) -> Subgroup:
    """Smallest subgroup containing ``generators``.

    Members are listed breadth-first from the identity; each BFS layer is sorted
    by element index, so the ordering is reproducible.
    """
    gens = sorted({int(g) for g in generators})
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"generator {g} out of range 0..{G.order - 1}")
    seen = {G.identity}
    members = [G.identity]
    frontier = [G.identity]
    while frontier:
        nxt = set()
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    nxt.add(y)
        frontier = sorted(nxt)
        seen.update(frontier)
        members.extend(frontier)
    return make_subgroup(G, members)


@dataclass(frozen=True, eq=False)
class CosetStructure:
    """Left cosets ``g_r K`` with ``g = reps[coset[g]] * kpart[g]``."""

    group: FiniteGroup
    subgroup: Subgroup
    reps: tuple[int, ...]
    coset: np.ndarray
    kpart: np.ndarray

    @property
    def n(self) -> int:
        return len(self.reps)

    def factor(self, g: int) -> tuple[int, int]:
        return int(self.coset[g]), int(self.kpart[g])


def coset_decompose(G: FiniteGroup, K: Subgroup) -> CosetStructure:
    """Split G into left cosets of K.

    The identity represents K itself; every other coset is represented by its
    smallest element index, and cosets are numbered by ascending representative.
    """
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = [G.identity]
    for k in K.members:
        coset[k] = 0
    for g in range(G.order):
        if coset[g] >= 0:
            continue
        r = len(reps)
        reps.append(g)
        for k in K.members:
            coset[G.mul(g, k)] = r
    kpart = np.array([G.mul(G.inv(reps[coset[g]]), g) for g in range(G.order)], dtype=np.int64)
    coset.setflags(write=False)
    kpart.setflags(write=False)
    return CosetStructure(G, K, tuple(reps), coset, kpart)


@dataclass(frozen=True)
class HaarWeights:
    nu: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.lam, Fraction(0))

    def lam_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.lam])

    def nu_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.nu])

    def mu_array(self) -> np.ndarray:
        return np.array([float(x) for x in self.mu])


def haar_weights(G: FiniteGroup, K: Subgroup) -> HaarWeights:
    nu = Fraction(1, K.order)
    index = G.order // K.order
    return HaarWeights(nu=(nu,) * K.order, mu=(Fraction(1),) * index, lam=(nu,) * G.order)


def _values(G: FiniteGroup, f) -> list:
    if callable(f):
        return [f(g) for g in range(G.order)]
    vals = list(f)
    if len(vals) != G.order:
        raise ValueError(f"function has {len(vals)} values, group has {G.order} elements")
    return vals


def _weighted_sum(weights: Sequence[Fraction], values: Sequence):
    if all(isinstance(v, Rational) for v in values):
        return sum((w * v for w, v in zip(weights, values)), Fraction(0))
    arr = np.asarray(values, dtype=complex)
    w = np.array([float(x) for x in weights])
    out = np.tensordot(w, arr, axes=(0, 0))
    if np.all(np.isreal(arr)):
        out = out.real
    return out


def integrate(G: FiniteGroup, w: HaarWeights, f: Callable[[int], object] | Sequence):
    """Integral of ``f`` over G against ``lam``.

    ``f`` is a callable on element indices or a sequence indexed by element.
    Rational-valued functions integrate exactly to a :class:`Fraction`.
    """
    return _weighted_sum(w.lam, _values(G, f))


def weil_check(G: FiniteGroup, K: Subgroup, f) -> float | Fraction:
    """|int_G f dlam - sum_r mu_r sum_k nu_k f(g_r k)|, zero when the weights are consistent."""
    vals = _values(G, f)
    w = haar_weights(G, K)
    cs = coset_decompose(G, K)
    lhs = _weighted_sum(w.lam, vals)
    inner = [_weighted_sum(w.nu, [vals[G.mul(gr, k)] for k in K.members]) for gr in cs.reps]
    rhs = _weighted_sum(w.mu, inner) if all(isinstance(x, Fraction) for x in inner) else \
        np.tensordot(w.mu_array(), np.asarray(inner, dtype=complex), axes=(0, 0))
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return abs(lhs - rhs)
    return float(np.linalg.norm(np.atleast_1d(np.asarray(lhs, dtype=complex) - np.asarray(rhs, dtype=complex))))
