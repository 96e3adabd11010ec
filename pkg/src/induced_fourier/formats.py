"""JSON readers and writers for groups, subgroups, representations, measures and spectra.

Complex numbers are written as ``[re, im]`` pairs; element indices are 0-based
and appear as string keys in JSON objects.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .group import FiniteGroup, Subgroup, subgroup_closure, validate_group
from .reps import UnitaryRep, validate_unitary_rep
from .transform import SpectralField, VectorMeasure

SCHEMA_VERSION = 1


class FormatError(ValueError):
    def __init__(self, source, field, message):
        self.source = source
        self.field = field
        where = f"{source}: " if source else ""
        where += f"field '{field}': " if field else ""
        super().__init__(where + message)


def read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(str(path), None, f"cannot read file ({exc.strerror})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(str(path), None,
                          f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _require(doc, key, source, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(source, key, "missing")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(source, key, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _complex(x, source, field) -> complex:
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return complex(x[0], x[1])
    raise FormatError(source, field, f"expected [re, im], got {x!r}")


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def group_from_dict(doc: dict, source: str = "") -> FiniteGroup:
    table = _require(doc, "table", source, list)
    order = doc.get("order", len(table))
    if order != len(table):
        raise FormatError(source, "order", f"order {order} but table has {len(table)} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != order:
            raise FormatError(source, f"table[{i}]", f"row must be a list of {order} indices")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise FormatError(source, f"table[{i}][{j}]", f"expected integer, got {x!r}")
    return validate_group(table, name=doc.get("name", ""))


def group_to_dict(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": G.table.tolist(), "name": G.name}


def load_group(path) -> FiniteGroup:
    return group_from_dict(read_json(path), str(path))


def subgroup_from_dict(G: FiniteGroup, doc: dict, source: str = "") -> Subgroup:
    gens = _require(doc, "generators", source, list)
    for i, g in enumerate(gens):
        if not isinstance(g, int) or not 0 <= g < G.order:
            raise FormatError(source, f"generators[{i}]", f"expected index in 0..{G.order - 1}, got {g!r}")
    return subgroup_closure(G, gens)


def rep_from_dict(K: Subgroup, doc: dict, source: str = "", label: str = "") -> UnitaryRep:
    dim = _require(doc, "dim", source, int)
    raw = _require(doc, "matrices", source, dict)
    mats = {}
    for key, m in raw.items():
        field = f"matrices.{key}"
        try:
            k = int(key)
        except ValueError:
            raise FormatError(source, field, "keys must be element indices") from None
        if not isinstance(m, list) or len(m) != dim or any(not isinstance(r, list) or len(r) != dim for r in m):
            raise FormatError(source, field, f"expected a {dim}x{dim} matrix")
        mats[k] = np.array([[_complex(x, source, field) for x in row] for row in m])
    return validate_unitary_rep(K, mats, label=doc.get("label", label))


def rep_to_dict(L: UnitaryRep) -> dict:
    return {
        "dim": L.dim,
        "label": L.label,
        "matrices": {str(k): [[_pair(z) for z in row] for row in L.mat(k)] for k in L.group.members},
    }


def measure_from_dict(G: FiniteGroup, doc: dict, source: str = "") -> VectorMeasure:
    d_A = _require(doc, "space_dim", source, int)
    if d_A < 1:
        raise FormatError(source, "space_dim", "must be >= 1")
    atoms = _require(doc, "atoms", source, dict)
    arr = np.zeros((G.order, d_A), dtype=complex)
    for key, vec in atoms.items():
        field = f"atoms.{key}"
        try:
            t = int(key)
        except ValueError:
            raise FormatError(source, field, "keys must be element indices") from None
        if not 0 <= t < G.order:
            raise FormatError(source, field, f"element index out of range 0..{G.order - 1}")
        if not isinstance(vec, list) or len(vec) != d_A:
            raise FormatError(source, field, f"expected {d_A} [re, im] pairs")
        arr[t] = [_complex(x, source, field) for x in vec]
    return VectorMeasure(G, arr)


def measure_to_dict(m: VectorMeasure) -> dict:
    return {
        "space_dim": int(m.atoms.shape[1]),
        "atoms": {str(t): [_pair(z) for z in m.atoms[t]] for t in range(m.group.order) if np.any(m.atoms[t])},
    }


def field_to_dict(field: SpectralField, group_name: str = "") -> dict:
    blocks = {}
    for label, b in field:
        blocks[label] = {
            "N": b.N,
            "d_sigma": b.d_sigma,
            "coefficients": [[[_pair(z) for z in b.coeffs[i, j]] for j in range(b.N)] for i in range(b.N)],
        }
    d_A = next((int(b.coeffs.shape[2]) for _, b in field), 0)
    return {"schema_version": SCHEMA_VERSION, "group": group_name, "space_dim": d_A, "sigmas": blocks}


def field_from_dict(doc: dict, source: str = "") -> SpectralField:
    from .transform import SpectralBlock
    out = {}
    for label, b in _require(doc, "sigmas", source, dict).items():
        coeffs = np.array([[[_complex(x, source, f"sigmas.{label}") for x in cell] for cell in row]
                           for row in b["coefficients"]], dtype=complex)
        out[label] = SpectralBlock(coeffs, int(b["d_sigma"]))
    return SpectralField(out)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
