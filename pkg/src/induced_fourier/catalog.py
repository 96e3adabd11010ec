"""Built-in groups, irreducible representations and (G, K, sigma) instances.

Representation names have the form ``family:n:which``:

``cyclic:n:chiJ``
    character of a cyclic K of order n sending the generator to ``exp(2 pi i J / n)``.
``dihedral:n:chiAB``
    one-dimensional character of a dihedral K of order 2n; ``A`` and ``B`` are
    ``+``/``-`` giving the value on the rotation r and the reflection s
    (``-`` on r only exists for even n).
``dihedral:n:rhoH``
    two-dimensional irrep, r acting as rotation by ``2 pi H / n``, s as ``diag(1, -1)``.
``symmetric:3:{trivial,sign,standard}``
    the irreps of S3, realized through S3 = D3.

The generator of a cyclic K is its smallest-index element of full order; for a
dihedral K, r is the smallest-index element of order n and s the smallest-index
element outside <r>.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .group import FiniteGroup, Subgroup, subgroup_closure, validate_group
from .reps import UnitaryRep, validate_unitary_rep


def cyclic_group(n: int) -> FiniteGroup:
    a = np.arange(n)
    return validate_group((a[:, None] + a[None, :]) % n, name=f"Z{n}", labels=range(n))


def dihedral_group(n: int) -> FiniteGroup:
    """Order-2n dihedral group; element ``a + n*b`` is ``r^a s^b``."""
    N = 2 * n
    table = np.empty((N, N), dtype=np.int64)
    for x in range(N):
        a, b = x % n, x // n
        for y in range(N):
            c, d = y % n, y // n
            table[x, y] = (a + (-1) ** b * c) % n + n * ((b + d) % 2)
    labels = [f"r^{x % n}" + (" s" if x >= n else "") for x in range(N)]
    return validate_group(table, name=f"D{n}", labels=labels)


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of ``range(n)`` in lexicographic order; ``(p*q)(x) = p(q(x))``."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return validate_group(table, name=f"S{n}", labels=perms)


def builtin_group(name: str) -> FiniteGroup:
    """``cyclic:n``, ``dihedral:n`` or ``symmetric:n`` (also ``Zn``, ``Dn``, ``Sn``)."""
    name = name.strip()
    if ":" in name:
        family, n = name.split(":", 1)
    else:
        family, n = name[0], name[1:]
    family = {"Z": "cyclic", "D": "dihedral", "S": "symmetric"}.get(family, family)
    makers = {"cyclic": cyclic_group, "dihedral": dihedral_group, "symmetric": symmetric_group}
    if family not in makers or not n.isdigit():
        raise KeyError(f"unknown built-in group {name!r}")
    return makers[family](int(n))


def _power_table(K: Subgroup, g: int) -> dict[int, int]:
    G = K.parent
    out, x, e = {}, G.identity, 0
    while x not in out:
        out[x] = e
        x = G.mul(x, g)
        e += 1
    return out


def _cyclic_generator(K: Subgroup, n: int) -> int:
    if K.order != n:
        raise ValueError(f"subgroup has order {K.order}, expected cyclic of order {n}")
    G = K.parent
    for k in sorted(K.members):
        if G.element_order(k) == n:
            return k
    raise ValueError(f"subgroup of order {n} is not cyclic")


def _dihedral_coords(K: Subgroup, n: int) -> dict[int, tuple[int, int]]:
    """Map each member to ``(a, b)`` with member = r^a s^b."""
    if K.order != 2 * n:
        raise ValueError(f"subgroup has order {K.order}, expected dihedral of order {2 * n}")
    G = K.parent
    cands = [k for k in sorted(K.members) if G.element_order(k) == n]
    if n == 1:
        cands = [G.identity]
    for r in cands:
        powers = _power_table(K, r)
        outside = [k for k in sorted(K.members) if k not in powers]
        if not outside:
            continue
        s = outside[0]
        if G.mul(s, s) != G.identity or G.mul(G.mul(s, r), s) != G.inv(r):
            continue
        coords = {}
        for x, a in powers.items():
            coords[x] = (a, 0)
            coords[G.mul(x, s)] = (a, 1)
        return coords
    raise ValueError(f"subgroup of order {2 * n} is not dihedral")


def catalog_rep(name: str, K: Subgroup) -> UnitaryRep:
    """Instantiate a named built-in representation on the subgroup ``K``."""
    try:
        family, n, which = name.split(":")
        n = int(n)
    except ValueError:
        raise KeyError(f"malformed representation name {name!r}") from None

    if family == "symmetric":
        if n != 3:
            raise KeyError("only symmetric:3 irreps are built in")
        alias = {"trivial": "chi++", "sign": "chi+-", "standard": "rho1"}
        if which not in alias:
            raise KeyError(f"unknown S3 irrep {which!r}")
        rep = catalog_rep(f"dihedral:3:{alias[which]}", K)
        return UnitaryRep(K, rep.mats, name)

    if family == "cyclic":
        if not which.startswith("chi"):
            raise KeyError(f"unknown cyclic representation {which!r}")
        j = int(which[3:])
        powers = _power_table(K, _cyclic_generator(K, n))
        mats = {k: [[np.exp(2j * np.pi * j * e / n)]] for k, e in powers.items()}
        return validate_unitary_rep(K, mats, label=name)

    if family == "dihedral":
        coords = _dihedral_coords(K, n)
        if which.startswith("chi") and len(which) == 5:
            sr = {"+": 1, "-": -1}[which[3]]
            ss = {"+": 1, "-": -1}[which[4]]
            if sr == -1 and n % 2:
                raise KeyError(f"{name}: r -> -1 needs even n")
            mats = {k: [[sr ** a * ss ** b]] for k, (a, b) in coords.items()}
        elif which.startswith("rho"):
            h = int(which[3:])
            if not 1 <= h <= (n - 1) // 2:
                raise KeyError(f"{name}: h must lie in 1..{(n - 1) // 2}")
            c, s = np.cos(2 * np.pi * h / n), np.sin(2 * np.pi * h / n)
            R = np.array([[c, -s], [s, c]])
            S = np.diag([1.0, -1.0])
            mats = {k: np.linalg.matrix_power(R, a) @ np.linalg.matrix_power(S, b)
                    for k, (a, b) in coords.items()}
        else:
            raise KeyError(f"unknown dihedral representation {which!r}")
        return validate_unitary_rep(K, mats, label=name)

    raise KeyError(f"unknown representation family {family!r}")


def irrep_names(family: str, n: int) -> list[str]:
    """Names of the complete set of built-in irreps for ``cyclic:n`` / ``dihedral:n`` / ``symmetric:3``."""
    if family == "cyclic":
        return [f"cyclic:{n}:chi{j}" for j in range(n)]
    if family == "dihedral":
        signs = ["++", "+-"] + (["-+", "--"] if n % 2 == 0 else [])
        return [f"dihedral:{n}:chi{s}" for s in signs] + [f"dihedral:{n}:rho{h}" for h in range(1, (n - 1) // 2 + 1)]
    if family == "symmetric" and n == 3:
        return ["symmetric:3:trivial", "symmetric:3:sign", "symmetric:3:standard"]
    raise KeyError(f"no built-in irreps for {family}:{n}")


@dataclass
class Instance:
    """A group, a subgroup and a list of representations of the subgroup."""

    name: str
    G: FiniteGroup
    K: Subgroup
    sigmas: dict[str, UnitaryRep]


_INSTANCES = {
    # name: (group, subgroup generators, irrep family of K)
    "Z4>Z2": ("cyclic:4", [2], ("cyclic", 2)),
    "S3>A3": ("symmetric:3", [3], ("cyclic", 3)),
    "S3>C2": ("symmetric:3", [1], ("cyclic", 2)),
    "D4>C4": ("dihedral:4", [1], ("cyclic", 4)),
    "Z6>Z3": ("cyclic:6", [2], ("cyclic", 3)),
    "S3>S3": ("symmetric:3", None, ("symmetric", 3)),
    "D4>D4": ("dihedral:4", None, ("dihedral", 4)),
}

WEIL_PAIRS = ("Z4>Z2", "S3>A3", "S3>C2", "D4>C4", "Z6>Z3")


def instance_names() -> list[str]:
    return list(_INSTANCES)


def builtin_instance(name: str) -> Instance:
    gname, gens, (family, n) = _INSTANCES[name]
    G = builtin_group(gname)
    K = subgroup_closure(G, range(G.order) if gens is None else gens)
    sigmas = {s: catalog_rep(s, K) for s in irrep_names(family, n)}
    return Instance(name, G, K, sigmas)
