import numpy as np
import pytest

from genbloch.clifford import cached_basis, full_basis
from genbloch.coords import (
    AntisymTensor,
    alt_expand,
    alt_project,
    antisym,
    coords_from_json,
    coords_to_json,
    decode,
    encode,
    state_coords,
    tensor_config,
    vector,
)
from genbloch.errors import BadIndex, GradeOutOfRange, ModeMismatch, NonUnitTrace, NotHermitian
from genbloch.linalg import hermitian_eigenvalues

from conftest import SIGMA1, SIGMA3, random_coords, random_unit_trace_hermitian


def test_antisym_normalizes_keys():
    t = antisym(2, 2, {(3, 1): 0.5})
    assert t.values == {(1, 3): -0.5}
    assert t.get((3, 1)) == 0.5
    with pytest.raises(BadIndex):
        antisym(2, 2, {(1, 1): 1.0})


def test_encode_maximally_mixed():
    coords = state_coords(2)
    assert np.allclose(encode(coords), np.eye(4) / 4, atol=1e-15)


def test_encode_m1_projector():
    coords = state_coords(1, grades={1: {(1,): 1.0}})
    rho = encode(coords)
    assert np.allclose(rho, (np.eye(2) + SIGMA1) / 2, atol=1e-15)
    # rank-1 projector
    assert np.allclose(rho @ rho, rho, atol=1e-14)


def test_encode_m2_grade2_spectrum():
    coords = state_coords(2, grades={2: {(1, 2): 0.6}})
    vals = hermitian_eigenvalues(encode(coords))
    assert np.allclose(vals, [0.1, 0.1, 0.4, 0.4], atol=1e-12)


def test_decode_maximally_mixed():
    coords = decode(np.eye(4) / 4)
    assert abs(coords.scalar - 1.0) < 1e-12
    for k in range(1, 5):
        assert all(abs(v) < 1e-12 for v in coords.grade(k).values.values())


def test_decode_m1_pseudoscalar():
    coords = decode((np.eye(2) + SIGMA3) / 2)
    assert abs(coords.grade(2).get((1, 2)) - (-1.0)) < 1e-12
    assert coords.grade(1).norm_sq() < 1e-24


def test_roundtrip_random(rng):
    for m in (1, 2, 3):
        basis = cached_basis(m)
        for _ in range(20):
            rho = random_unit_trace_hermitian(rng, 2 ** m)
            coords = decode(rho, basis)
            assert np.max(np.abs(encode(coords, basis) - rho)) < 1e-10


def test_decode_rejects_bad_input():
    with pytest.raises(NonUnitTrace):
        decode(np.eye(4))
    bad = np.eye(2, dtype=complex) / 2
    bad[0, 1] = 0.3
    with pytest.raises(NotHermitian):
        decode(bad)


def test_decode_linearity(rng):
    rho1 = random_unit_trace_hermitian(rng, 4)
    rho2 = random_unit_trace_hermitian(rng, 4)
    a = 0.3
    mix = decode(a * rho1 + (1 - a) * rho2)
    c1, c2 = decode(rho1), decode(rho2)
    for idx in cached_basis(2).elements:
        want = a * c1.coefficient(idx) + (1 - a) * c2.coefficient(idx)
        assert abs(mix.coefficient(idx) - want) < 1e-10


def test_coordinate_count():
    for m in (1, 2, 3):
        basis = cached_basis(m)
        non_scalar = [idx for idx in basis.elements if idx]
        assert len(non_scalar) == 4 ** m - 1


def test_tensor_config_zero():
    g = AntisymTensor(2, 1, 4, {})
    assert np.allclose(tensor_config(2, 1, g), np.eye(4) / 4, atol=1e-15)


def test_tensor_config_vector_m2():
    rho = tensor_config(2, 1, vector(2, [0, 0, 0, 1]))
    vals = hermitian_eigenvalues(rho)
    assert np.allclose(vals, [0.0, 0.0, 0.5, 0.5], atol=1e-12)


def test_tensor_config_m3_unit_r():
    a = 1 / np.sqrt(3)
    g = antisym(3, 2, {(1, 2): a, (3, 4): a, (5, 6): a})
    rho = tensor_config(3, 2, g)
    assert rho.shape == (8, 8)
    assert abs(np.trace(rho) - 1.0) < 1e-14
    assert abs(g.norm_sq() - 1.0) < 1e-14


def test_tensor_config_grade_range():
    with pytest.raises(GradeOutOfRange):
        tensor_config(2, 5, AntisymTensor(2, 5, 4, {}))
    with pytest.raises(GradeOutOfRange):
        tensor_config(2, 3, AntisymTensor(2, 3, 5, {}), mode="extended")


def test_alt_expand_scalar_only():
    coords = state_coords(2, mode="extended")
    assert np.allclose(alt_expand(coords), np.eye(4) / 4, atol=1e-15)


def test_alt_expand_chirality_direction():
    # extended vector along the 5th generator equals the standard pseudoscalar state
    ext = state_coords(2, mode="extended", grades={1: {(5,): 1.0}})
    std = state_coords(2, grades={4: {(1, 2, 3, 4): 1.0}})
    assert np.max(np.abs(alt_expand(ext) - encode(std))) < 1e-14


def test_alt_expand_mode_check():
    with pytest.raises(ModeMismatch):
        alt_expand(state_coords(2))


def test_encode_basis_mismatch():
    from genbloch.errors import DimensionMismatch

    with pytest.raises(ModeMismatch):
        encode(state_coords(2), cached_basis(2, "extended"))
    with pytest.raises(DimensionMismatch):
        encode(state_coords(2), cached_basis(3))


def test_alt_project_reconstructs_everything(rng):
    # grades 0..m over 2m+1 indices are 4^m orthogonal elements: a complete
    # basis, so the projection residual vanishes for arbitrary states
    for m in (1, 2, 3):
        rho = random_unit_trace_hermitian(rng, 2 ** m)
        coords, residual = alt_project(rho)
        assert coords.mode == "extended"
        assert np.max(np.abs(residual)) < 1e-12
        assert np.max(np.abs(alt_expand(coords) - rho)) < 1e-12


def test_alt_roundtrip_on_extended_configs(rng):
    coords = random_coords(rng, 2, mode="extended")
    rho = alt_expand(coords)
    back, residual = alt_project(rho)
    assert np.max(np.abs(residual)) < 1e-12
    for idx in cached_basis(2, "extended").elements:
        assert abs(back.coefficient(idx) - coords.coefficient(idx)) < 1e-10


def test_coords_json_roundtrip():
    coords = state_coords(2, grades={2: {(1, 2): 0.6}})
    obj = coords_to_json(coords)
    assert obj == {
        "m": 2,
        "mode": "standard",
        "scalar": 1.0,
        "grades": {"2": [{"idx": [1, 2], "val": 0.6}]},
    }
    back = coords_from_json(obj)
    assert back.grade(2).get((1, 2)) == 0.6


def test_full_basis_extended_certificate():
    b = full_basis(2, "extended", verify=True)
    assert b.certificate["max_orthogonality_residual"] < 1e-12
