import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import induced_all
from induced_fourier import (
    ShapeMismatch,
    SpectralField,
    VectorFunction,
    VectorMeasure,
    builtin_instance,
    fourier_field,
    fourier_stieltjes,
    induce,
    induced_coefficient,
    instance_names,
    norm_bound_check,
    s2_inner,
    snorm,
    spectral_decompose,
    synthesize,
)
from induced_fourier.transform import (
    coefficient_function,
    inequivalent_irreducible,
    lam_weights,
    plancherel_gap,
    project_span,
)


def complex_normal(r, shape):
    return r.standard_normal(shape) + 1j * r.standard_normal(shape)


def span_element(span, r, d_A):
    G = next(iter(span.values())).group
    out = np.zeros((G.order, d_A), dtype=complex)
    for U in span.values():
        out += np.einsum("tij,ija->ta", U.operators(), complex_normal(r, (U.N, U.N, d_A)))
    return VectorFunction(G, out, lam_weights(next(iter(span.values()))))


def test_transform_matches_direct_sum(s3_a3, rng):
    U = induce(s3_a3.G, s3_a3.K, s3_a3.sigmas["cyclic:3:chi1"])
    m = VectorMeasure(s3_a3.G, complex_normal(rng, (6, 3)))
    block = fourier_stieltjes(m, U)
    for i, j in itertools.product(range(1, U.N + 1), repeat=2):
        direct = sum(np.conj(induced_coefficient(U, t, j, i)) * m.atoms[t] for t in range(6))
        assert np.allclose(block.coeffs[i - 1, j - 1], direct)


@pytest.mark.parametrize("name", instance_names())
def test_dirac_at_identity_gives_identity_pattern(name):
    inst = builtin_instance(name)
    a = np.array([1.0, -2.0 + 1j])
    m = VectorMeasure.dirac(inst.G, inst.G.identity, a)
    for U in induced_all(inst).values():
        block = fourier_stieltjes(m, U)
        expected = np.einsum("ij,a->ija", np.eye(U.N), a)
        assert np.array_equal(block.coeffs, expected)


def test_zero_measure_gives_zero_blocks(s3_a3):
    m = VectorMeasure(s3_a3.G, np.zeros((6, 2)))
    for _, b in fourier_field(m, induced_all(s3_a3)):
        assert not np.any(b.coeffs)


def test_norm_bound_equality_at_dirac(s3_a3):
    m = VectorMeasure.dirac(s3_a3.G, 0, [3.0, 4.0])
    rep = norm_bound_check(m, induced_all(s3_a3))
    assert rep.measure_norm == pytest.approx(5.0)
    assert rep.transform_norm == pytest.approx(5.0)
    assert rep.transform_op_norm == pytest.approx(5.0)
    assert rep.holds


@pytest.mark.parametrize("name", ["S3>A3", "D4>C4", "S3>S3", "D4>D4"])
def test_coefficient_function_transforms_to_single_entry(name):
    inst = builtin_instance(name)
    a = np.array([0.5 - 1j, 2.0])
    for U in induced_all(inst).values():
        if not U.irreducible:
            continue
        for i, j in itertools.product(range(1, U.N + 1), repeat=2):
            block = fourier_field(coefficient_function(U, i, j, a), {"u": U})["u"]
            expected = np.zeros((U.N, U.N, 2), dtype=complex)
            expected[j - 1, i - 1] = a / U.d_sigma
            assert np.abs(block.coeffs - expected).max() <= 1e-10
            # and back: the decomposition recovers the coefficient matrix e_ij / d_sigma
            dec = spectral_decompose(block)
            assert np.allclose(dec[i - 1, j - 1], a / U.d_sigma)


def test_sign_character_is_orthogonal_to_induced_span(s3_a3):
    G = s3_a3.G
    sign = np.array([1 if G.element_order(g) != 2 else -1 for g in range(6)], dtype=complex)
    f = VectorFunction(G, sign[:, None], lam_weights(induce(G, s3_a3.K, s3_a3.sigmas["cyclic:3:chi1"])))
    span = inequivalent_irreducible(induced_all(s3_a3))
    fhat = fourier_field(f, span)
    assert snorm(fhat, 2).value <= 1e-14
    _, dist = project_span(f, span)
    assert dist == pytest.approx(f.norm(2))
    assert plancherel_gap(f, span) == pytest.approx(f.norm(2) ** 2)


@pytest.mark.parametrize("name,order", [("S3>S3", 6), ("D4>D4", 8)])
def test_complete_system_inverts_everything(name, order, rng):
    inst = builtin_instance(name)
    span = inequivalent_irreducible(induced_all(inst))
    assert sum(U.N ** 2 for U in span.values()) == order
    # the coefficient functions span all of C^G
    coeffs = np.concatenate([U.operators().reshape(order, -1) for U in span.values()], axis=1)
    assert np.linalg.matrix_rank(coeffs) == order
    f = VectorFunction(inst.G, complex_normal(rng, (order, 2)), lam_weights(next(iter(span.values()))))
    assert (synthesize(fourier_field(f, span)) - f).norm(2) <= 1e-12
    assert plancherel_gap(f, span) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(instance_names()), st.sampled_from([1, 3]), st.integers(0, 2 ** 32 - 1))
def test_inversion_plancherel_parseval_on_span(name, d_A, seed):
    r = np.random.default_rng(seed)
    inst = builtin_instance(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        span = inequivalent_irreducible(induced_all(inst))
    if not span:
        return
    f, g = span_element(span, r, d_A), span_element(span, r, d_A)
    fhat, ghat = fourier_field(f, span), fourier_field(g, span)
    assert (synthesize(fhat) - f).norm(2) <= 1e-9
    assert abs(f.norm(2) ** 2 - snorm(fhat, 2).value ** 2) <= 1e-9 * max(1, f.norm(2) ** 2)
    assert abs(f.inner(g) - s2_inner(fhat, ghat)) <= 1e-9 * max(1, f.norm(2) * g.norm(2))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(instance_names()), st.integers(0, 2 ** 32 - 1))
def test_transform_is_linear_and_bounded(name, seed):
    r = np.random.default_rng(seed)
    inst = builtin_instance(name)
    reps = induced_all(inst)
    m = VectorMeasure(inst.G, complex_normal(r, (inst.G.order, 2)))
    rep = norm_bound_check(m, reps, r)
    assert rep.holds
    assert rep.linearity_residual <= 1e-10


def test_function_transform_is_transform_of_its_measure(s3_a3, rng):
    reps = induced_all(s3_a3)
    U0 = next(iter(reps.values()))
    f = VectorFunction(s3_a3.G, complex_normal(rng, (6, 2)), lam_weights(U0))
    a, b = fourier_field(f, reps), fourier_field(f.as_measure(), reps)
    for label in a.labels():
        assert np.allclose(a[label].coeffs, b[label].coeffs)


def test_measure_norm_is_total_variation():
    inst = builtin_instance("Z4>Z2")
    m = VectorMeasure.from_dict(inst.G, {0: [3, 4], 2: [0, 1j]}, 2)
    assert m.norm() == pytest.approx(6.0)


def test_synthesize_rejects_mixed_groups():
    a, b = builtin_instance("S3>A3"), builtin_instance("Z6>Z3")
    Ua = induce(a.G, a.K, a.sigmas["cyclic:3:chi1"])
    Ub = induce(b.G, b.K, b.sigmas["cyclic:3:chi1"])
    fa = fourier_field(VectorMeasure.dirac(a.G, 0, [1.0]), {"a": Ua})
    fb = fourier_field(VectorMeasure.dirac(b.G, 0, [1.0]), {"b": Ub})
    with pytest.raises(ShapeMismatch):
        synthesize(SpectralField({**fa.blocks, **fb.blocks}))


def test_decompose_recovers_coefficient_on_s3_a3(s3_a3):
    U = induce(s3_a3.G, s3_a3.K, s3_a3.sigmas["cyclic:3:chi1"])
    a = np.array([2.0 - 1j])
    block = fourier_field(coefficient_function(U, 1, 1, a), {"u": U})["u"]
    dec = spectral_decompose(block)
    expected = np.zeros((2, 2, 1), dtype=complex)
    expected[0, 0] = a
    assert np.allclose(dec, expected)
    f = coefficient_function(U, 1, 1, a)
    assert f.norm(2) ** 2 == pytest.approx(abs(a[0]) ** 2 / U.d_sigma)
    assert plancherel_gap(f, {"u": U}) <= 1e-10
