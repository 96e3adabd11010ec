from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import perm_table
from induced_fourier import (
    NotAssociative,
    NotLatinSquare,
    NotSubgroup,
    builtin_group,
    coset_decompose,
    haar_weights,
    integrate,
    make_subgroup,
    subgroup_closure,
    validate_group,
    weil_check,
)
from induced_fourier.catalog import WEIL_PAIRS, builtin_instance
from induced_fourier.errors import NoIdentity


def test_builtin_s3_matches_permutation_composition():
    table, perms = perm_table(3)
    G = builtin_group("symmetric:3")
    assert G.table.tolist() == table
    orders = sorted(G.element_order(g) for g in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_identity_and_inverses():
    G = builtin_group("dihedral:5")
    for g in range(G.order):
        assert G.mul(g, G.inv(g)) == G.identity == G.mul(G.inv(g), g)


def test_trivial_group():
    G = validate_group([[0]])
    assert G.order == 1 and G.identity == 0


def test_not_latin_square_names_row():
    table, _ = perm_table(3)
    table[2][1] = table[2][0]
    with pytest.raises(NotLatinSquare) as exc:
        validate_group(table)
    assert exc.value.index == 2


def test_no_identity():
    # a*b = a+b+1 mod 3 is a group with identity 2
    table = [[(a + b + 1) % 3 for b in range(3)] for a in range(3)]
    assert validate_group(table).identity == 2
    bad = [[1, 0, 2], [0, 2, 1], [2, 1, 0]]
    with pytest.raises(NoIdentity):
        validate_group(bad)


def test_nonassociative_latin_square():
    # a Latin square with a two-sided identity that is not a group (smallest loop of order 5)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        validate_group(table)


def test_subgroup_closure_a3():
    G = builtin_group("symmetric:3")
    K = subgroup_closure(G, [3])
    assert sorted(K.members) == [0, 3, 4]
    assert K.index == 2


def test_make_subgroup_rejects_non_closed():
    G = builtin_group("symmetric:3")
    with pytest.raises(NotSubgroup):
        make_subgroup(G, [0, 1, 2])


def test_cosets_partition_and_factor():
    G = builtin_group("dihedral:4")
    K = subgroup_closure(G, [4])
    cs = coset_decompose(G, K)
    assert cs.reps[0] == G.identity
    assert cs.n == G.order // K.order
    for g in range(G.order):
        r, k = cs.factor(g)
        assert k in K
        assert G.mul(cs.reps[r], k) == g


def test_haar_weights_exact():
    G = builtin_group("symmetric:3")
    K = subgroup_closure(G, [3])
    w = haar_weights(G, K)
    assert w.nu == (Fraction(1, 3),) * 3
    assert w.total == 2
    assert integrate(G, w, lambda g: 1) == Fraction(2)


@pytest.mark.parametrize("name", WEIL_PAIRS)
def test_weil_exact_on_rationals(name):
    inst = builtin_instance(name)
    f = [Fraction(g * g - 3, g + 1) for g in range(inst.G.order)]
    assert weil_check(inst.G, inst.K, f) == 0


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(WEIL_PAIRS), st.integers(0, 2 ** 32 - 1))
def test_weil_random_complex(name, seed):
    inst = builtin_instance(name)
    r = np.random.default_rng(seed)
    f = r.standard_normal(inst.G.order) + 1j * r.standard_normal(inst.G.order)
    assert weil_check(inst.G, inst.K, f) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10))
def test_cyclic_subgroups_have_dividing_order(n, g):
    G = builtin_group(f"cyclic:{n}")
    K = subgroup_closure(G, [g % n])
    assert n % K.order == 0
    assert K.order == n // np.gcd(g % n, n) if g % n else K.order == 1
