import itertools
import math

import numpy as np
import pytest

from genbloch.coords import AntisymTensor, antisym
from genbloch.errors import DimensionMismatch, GradeMismatch, UnknownName, UnsupportedM
from genbloch.invariants import (
    InvariantSet,
    det_identity_check,
    dual_identity_residual,
    dual_tensor,
    epsilon_D3,
    epsilon_sum_D3,
    frobenius_r,
    perm_sign,
    pfaffian,
    pseudo_vector_V,
    scale_dimension,
    trace_T4,
    two_tensor_invariants,
    vector_invariants,
)
from genbloch.symmetry import orthogonal_from_generator

from conftest import random_tensor


def test_frobenius_r_examples():
    assert frobenius_r(antisym(2, 2, {})) == 0.0
    g = antisym(2, 2, {(1, 2): 0.6, (3, 4): 0.8})
    assert abs(frobenius_r(g) - 1.0) < 1e-15


def test_frobenius_rotation_invariance(rng):
    g = random_tensor(rng, 2, 2)
    alpha = random_tensor(rng, 2, 2)
    el = orthogonal_from_generator(alpha)
    rotated = AntisymTensor.from_matrix(2, el @ g.as_matrix() @ el.T)
    assert abs(frobenius_r(rotated) - frobenius_r(g)) < 1e-10


def test_trace_T4_block():
    g = antisym(2, 2, {(1, 2): 0.7, (3, 4): -0.4})
    assert abs(trace_T4(g) - (2 * 0.7 ** 4 + 2 * 0.4 ** 4)) < 1e-14


def test_trace_T4_frozen():
    g = antisym(2, 2, {(1, 2): 0.6, (3, 4): 0.3})
    assert abs(trace_T4(g) - 0.2754) < 1e-14
    assert trace_T4(antisym(2, 2, {})) == 0.0


def test_grade_checks():
    with pytest.raises(GradeMismatch):
        frobenius_r(antisym(2, 1, {(1,): 1.0}))


def test_D3_canonical_block():
    g = antisym(3, 2, {(1, 2): 1.0, (3, 4): 1.0, (5, 6): 1.0})
    assert epsilon_D3(g) == 48.0
    assert epsilon_sum_D3(g) == 48.0


def test_D3_single_pair_vanishes():
    assert epsilon_D3(antisym(3, 2, {(1, 2): 1.0})) == 0.0


def test_D3_scaled_block():
    a = 1 / math.sqrt(3)
    g = antisym(3, 2, {(1, 2): a, (3, 4): a, (5, 6): a})
    assert abs(epsilon_D3(g) - 48 / 3 ** 1.5) < 1e-12
    assert abs(epsilon_D3(g) - 16 / math.sqrt(3)) < 1e-12


def test_D3_brute_vs_pfaffian(rng):
    for _ in range(50):
        g = random_tensor(rng, 3, 2)
        brute = epsilon_sum_D3(g)
        fast = 48.0 * pfaffian(g.as_matrix())
        assert abs(brute - fast) < 1e-10 * max(1.0, abs(brute))


def test_D3_needs_six_indices():
    with pytest.raises(DimensionMismatch):
        epsilon_D3(antisym(2, 2, {(1, 2): 1.0}))


def test_dual_m2_two_block():
    a, b = 0.8, -0.5
    g = antisym(2, 2, {(1, 2): a, (3, 4): b})
    dual = dual_tensor(g)
    assert abs(dual.get((1, 2)) - 2 * b) < 1e-14
    assert abs(dual.get((3, 4)) - 2 * a) < 1e-14
    trace = np.trace(dual.as_matrix() @ g.as_matrix())
    lhs = 2 * frobenius_r(g) ** 2 - trace_T4(g)
    assert abs(trace ** 2 / 16 - 4 * a * a * b * b) < 1e-12
    assert abs(lhs - 4 * a * a * b * b) < 1e-12


def test_dual_m2_single_block_degenerate():
    g = antisym(2, 2, {(1, 2): 1.0})
    assert abs(2 * frobenius_r(g) ** 2 - trace_T4(g)) < 1e-14
    assert abs(np.trace(dual_tensor(g).as_matrix() @ g.as_matrix())) < 1e-14


def test_dual_identity_m2_random(rng):
    for _ in range(100):
        assert dual_identity_residual(random_tensor(rng, 2, 2)) < 1e-10


def test_dual_identity_m3_random(rng):
    for _ in range(100):
        assert dual_identity_residual(random_tensor(rng, 3, 2)) < 1e-10


def test_dual_unsupported_side():
    with pytest.raises(UnsupportedM):
        dual_tensor(random_tensor(np.random.default_rng(0), 4, 2))


def test_det_identity_frozen():
    g = antisym(2, 2, {(1, 2): 0.6, (3, 4): 0.3})
    lhs, rhs = det_identity_check(g)
    assert abs(lhs - 0.1296) < 1e-14
    assert abs(rhs - 0.1296) < 1e-14
    assert det_identity_check(antisym(2, 2, {})) == (0.0, 0.0)


def test_det_identity_random(rng):
    for _ in range(100):
        lhs, rhs = det_identity_check(random_tensor(rng, 2, 2))
        assert abs(lhs - rhs) < 1e-10


def test_pseudo_vector_reduction_to_D3():
    g = antisym(3, 2, {(1, 2): 1.0, (3, 4): 1.0, (5, 6): 1.0}, side=7)
    v = pseudo_vector_V(g)
    assert np.allclose(v, [0, 0, 0, 0, 0, 0, 48.0], atol=1e-12)
    assert np.array_equal(pseudo_vector_V(antisym(3, 2, {}, side=7)), np.zeros(7))


def test_pseudo_vector_O7_invariance(rng):
    from scipy.linalg import expm

    g = random_tensor(rng, 3, 2, side=7)
    base = pseudo_vector_V(g)
    for _ in range(10):
        a = rng.normal(size=(7, 7))
        q = expm(a - a.T)
        gm = q @ g.as_matrix() @ q.T
        rotated = AntisymTensor.from_matrix(3, gm, side=7)
        v = pseudo_vector_V(rotated)
        assert abs(np.sum(v ** 2) - np.sum(base ** 2)) < 1e-9 * max(1.0, np.sum(base ** 2))
        # V transforms as a vector under SO(7)
        assert np.max(np.abs(v - q @ base)) < 1e-9 * max(1.0, float(np.max(np.abs(base))))


def test_pseudo_vector_needs_side7():
    with pytest.raises(DimensionMismatch):
        pseudo_vector_V(antisym(3, 2, {(1, 2): 1.0}))


def test_scale_dimensions():
    assert scale_dimension("r") == 2
    assert scale_dimension("D3") == 3
    assert scale_dimension("T4") == 4
    assert scale_dimension("r^2") == 4
    assert scale_dimension("scalar") == 1
    with pytest.raises(UnknownName):
        scale_dimension("bogus")


def test_homogeneity_degrees(rng):
    g = random_tensor(rng, 3, 2)
    s = 0.5
    gs = g.scaled(s)
    assert abs(frobenius_r(gs) - s ** 2 * frobenius_r(g)) < 1e-12
    assert abs(epsilon_D3(gs) - s ** 3 * epsilon_D3(g)) < 1e-12
    assert abs(trace_T4(gs) - s ** 4 * trace_T4(g)) < 1e-12


def test_T4_cauchy_schwarz_bound(rng):
    for m in (2, 3, 4):
        for _ in range(333):
            g = random_tensor(rng, m, 2)
            r = frobenius_r(g)
            assert trace_T4(g) <= 2 * r * r + 1e-10 * max(1.0, r * r)


def test_D3_sign_under_reflection(rng):
    g = random_tensor(rng, 3, 2)
    flip = np.diag([-1.0, 1, 1, 1, 1, 1])
    reflected = AntisymTensor.from_matrix(3, flip @ g.as_matrix() @ flip.T)
    assert abs(epsilon_D3(reflected) + epsilon_D3(g)) < 1e-10


def test_all_invariants_rotation_invariant_m3(rng):
    for _ in range(10):
        g = random_tensor(rng, 3, 2)
        el = orthogonal_from_generator(random_tensor(rng, 3, 2))
        rotated = AntisymTensor.from_matrix(3, el @ g.as_matrix() @ el.T)
        assert abs(frobenius_r(rotated) - frobenius_r(g)) < 1e-9
        assert abs(trace_T4(rotated) - trace_T4(g)) < 1e-9
        # proper rotations preserve D3 itself, not just its magnitude
        assert abs(epsilon_D3(rotated) - epsilon_D3(g)) < 1e-9


def test_invariant_set_builders(rng):
    g = random_tensor(rng, 3, 2)
    inv = two_tensor_invariants(g)
    assert inv.r >= 0 and inv.T4 >= 0 and inv.D3 is not None
    assert abs(inv.extras["pfaffian"] - inv.D3 / 48.0) < 1e-12
    v = vector_invariants(antisym(2, 1, {(1,): 0.6}), pseudoscalar=0.8)
    assert abs(v.r - 1.0) < 1e-15
    with pytest.raises(ValueError):
        InvariantSet(r=-1.0, T4=0.0)


def test_perm_sign_basics():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((2, 0, 1)) == 1
    # parity is multiplicative over all 4! permutations
    total = sum(perm_sign(p) for p in itertools.permutations(range(4)))
    assert total == 0
