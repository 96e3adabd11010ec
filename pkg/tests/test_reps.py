import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from induced_fourier import (
    NotHomomorphism,
    NotUnitary,
    PreconditionNotIrreducible,
    RepresentationError,
    builtin_group,
    catalog_rep,
    character,
    equivalence_check,
    irreducibility_index,
    irrep_names,
    matrix_coefficient,
    schur_check,
    subgroup_closure,
    validate_unitary_rep,
)
from induced_fourier.reps import IrrepFamily, change_basis, conjugate_rep, direct_sum, schur_integrals

OMEGA = np.exp(2j * np.pi / 3)


def z3():
    G = builtin_group("cyclic:3")
    return subgroup_closure(G, range(3))


def char_z3(K, j):
    return validate_unitary_rep(K, {k: [[OMEGA ** (j * k)]] for k in range(3)})


def random_unitary(rng, d):
    q, r = np.linalg.qr(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
    return q * (np.diag(r) / abs(np.diag(r)))


def test_trivial_rep_valid():
    K = subgroup_closure(builtin_group("dihedral:3"), range(6))
    L = validate_unitary_rep(K, {k: [[1]] for k in K.members})
    assert L.dim == 1
    assert irreducibility_index(L) == pytest.approx(1.0)


def test_z3_character_and_conjugate():
    K = z3()
    L = char_z3(K, 1)
    assert matrix_coefficient(L, 1, 1, 1) == pytest.approx(OMEGA)
    C = conjugate_rep(L)
    assert np.allclose(C.mats, char_z3(K, 2).mats)


def test_non_unitary_rejected():
    K = z3()
    with pytest.raises(NotUnitary) as exc:
        validate_unitary_rep(K, {0: [[1]], 1: [[2 * OMEGA]], 2: [[OMEGA ** 2]]})
    assert exc.value.element == 1


def test_non_homomorphism_rejected():
    K = z3()
    with pytest.raises(NotHomomorphism):
        validate_unitary_rep(K, {0: [[1]], 1: [[OMEGA]], 2: [[OMEGA]]})


def test_rotation_rep_of_z4():
    K = subgroup_closure(builtin_group("cyclic:4"), range(4))
    R = np.array([[0.0, -1.0], [1.0, 0.0]])
    L = validate_unitary_rep(K, {k: np.linalg.matrix_power(R, k) for k in range(4)})
    expected = [[np.cos(np.pi / 2), -np.sin(np.pi / 2)], [np.sin(np.pi / 2), np.cos(np.pi / 2)]]
    for i, j in itertools.product((1, 2), repeat=2):
        assert matrix_coefficient(L, 1, i, j) == pytest.approx(expected[i - 1][j - 1], abs=1e-15)
        assert matrix_coefficient(L, 0, i, j) == (1 if i == j else 0)
    # reducible over C: splits into the characters i and -i
    assert irreducibility_index(L) == pytest.approx(2.0)


def test_s3_standard_character_table():
    G = builtin_group("symmetric:3")
    K = subgroup_closure(G, range(6))
    chi = character(catalog_rep("symmetric:3:standard", K))
    for g in range(6):
        expected = {1: 2, 2: 0, 3: -1}[G.element_order(g)]
        assert chi[g] == pytest.approx(expected, abs=1e-12)
    assert irreducibility_index(catalog_rep("symmetric:3:standard", K)) == pytest.approx(1.0)


def test_direct_sum_index_two():
    K = z3()
    assert irreducibility_index(direct_sum(char_z3(K, 1), char_z3(K, 2))) == pytest.approx(2.0)


def test_equivalence(rng):
    K = z3()
    assert equivalence_check(char_z3(K, 1), char_z3(K, 2), rng) is None
    T = equivalence_check(char_z3(K, 1), char_z3(K, 1), rng)
    assert T is not None and T.shape == (1, 1)

    D = subgroup_closure(builtin_group("dihedral:4"), range(8))
    L = catalog_rep("dihedral:4:rho1", D)
    B = random_unitary(rng, 2)
    M = change_basis(L, B)
    T = equivalence_check(L, M, rng)
    assert T is not None
    # T is B up to a scalar
    s = T[np.unravel_index(np.argmax(abs(B)), B.shape)] / B[np.unravel_index(np.argmax(abs(B)), B.shape)]
    assert np.allclose(T, s * B, atol=1e-10)


def test_schur_z3():
    K = z3()
    L, M = char_z3(K, 1), char_z3(K, 2)
    assert schur_integrals(L, L)[0, 0, 0, 0] == pytest.approx(1.0)
    assert schur_check(L, L) <= 1e-15
    assert schur_check(L, M) <= 1e-15


def test_schur_rejects_reducible_and_equivalent_copies(rng):
    K = z3()
    with pytest.raises(PreconditionNotIrreducible):
        schur_check(direct_sum(char_z3(K, 0), char_z3(K, 1)), char_z3(K, 1))
    D = subgroup_closure(builtin_group("dihedral:4"), range(8))
    L = catalog_rep("dihedral:4:rho1", D)
    with pytest.raises(RepresentationError):
        schur_check(L, change_basis(L, random_unitary(rng, 2)))


def _builtin_irrep_sets(max_order=48):
    for n in range(1, max_order + 1):
        yield "cyclic", n, f"cyclic:{n}"
    for n in range(2, max_order // 2 + 1):
        yield "dihedral", n, f"dihedral:{n}"
    yield "symmetric", 3, "symmetric:3"


@pytest.mark.parametrize("family,n,gname", list(_builtin_irrep_sets()))
def test_schur_all_builtin_irreps(family, n, gname):
    G = builtin_group(gname)
    K = subgroup_closure(G, range(G.order))
    reps = [catalog_rep(name, K) for name in irrep_names(family, n)]
    # completeness: sum of squared dimensions equals |K|
    assert sum(L.dim ** 2 for L in reps) == K.order
    for L in reps:
        assert schur_check(L, L) <= 1e-10
    for L, M in itertools.combinations(reps, 2):
        assert schur_check(L, M) <= 1e-10


def test_irrep_family_rejects_duplicates(rng):
    K = z3()
    IrrepFamily(K, {"a": char_z3(K, 1), "b": char_z3(K, 2)})
    with pytest.raises(RepresentationError):
        IrrepFamily(K, {"a": char_z3(K, 1), "b": char_z3(K, 1)})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_conjugated_irrep_stays_irreducible_and_equivalent(seed):
    r = np.random.default_rng(seed)
    K = subgroup_closure(builtin_group("dihedral:5"), range(10))
    L = catalog_rep("dihedral:5:rho2", K)
    M = change_basis(L, random_unitary(r, 2))
    assert irreducibility_index(M) == pytest.approx(1.0, abs=1e-12)
    assert equivalence_check(L, M, r) is not None
