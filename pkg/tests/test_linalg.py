import numpy as np
import pytest

from genbloch.errors import DegreeMismatch, NoConvergence, NotHermitian
from genbloch.linalg import (
    char_poly,
    exp_i_hermitian,
    hermitian_eigenvalues,
    kron,
    matrix_from_json,
    matrix_to_json,
    polyval,
    quartic_roots,
)

from conftest import SIGMA1, SIGMA2, SIGMA3, random_hermitian


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_sigma1_sigma1():
    # direct index expansion: (kron)[2i+k, 2j+l] = s1[i,j] s1[k,l]
    expected = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    expected[2 * i + k, 2 * j + l] = SIGMA1[i, j] * SIGMA1[k, l]
    got = kron(SIGMA1, SIGMA1)
    assert np.array_equal(got, expected)
    assert np.array_equal(got, np.fliplr(np.eye(4)))


def test_kron_sigma3_identity():
    assert np.array_equal(kron(SIGMA3, np.eye(2)), np.diag([1.0, 1.0, -1.0, -1.0]))


def test_kron_associative_bitwise_on_unit_entries():
    # entries in {0, +-1, +-i} multiply exactly, so association is bit-for-bit
    assert np.array_equal(kron(kron(SIGMA1, SIGMA2), SIGMA3), kron(SIGMA1, kron(SIGMA2, SIGMA3)))


def test_kron_associative_random(rng):
    a = random_hermitian(rng, 2)
    b = random_hermitian(rng, 3)
    c = random_hermitian(rng, 2)
    lhs = kron(kron(a, b), c)
    rhs = kron(a, kron(b, c))
    assert np.max(np.abs(lhs - rhs)) < 1e-15 * np.max(np.abs(lhs))


def test_eigenvalues_maximally_mixed():
    vals = hermitian_eigenvalues(np.eye(4) / 4)
    assert np.allclose(vals, [0.25] * 4, atol=1e-14)


def test_eigenvalues_projector():
    vals = hermitian_eigenvalues((np.eye(2) + SIGMA1) / 2)
    assert np.allclose(vals, [0.0, 1.0], atol=1e-14)


def _bisection_roots(coeffs, n_roots, lo, hi, samples=20000):
    """Independent root finder: sign-change scan plus bisection."""
    xs = np.linspace(lo, hi, samples)
    ys = np.array([polyval(coeffs, float(x)).real for x in xs])
    roots = []
    for i in range(samples - 1):
        if ys[i] == 0.0:
            roots.append(xs[i])
        elif ys[i] * ys[i + 1] < 0:
            a, b = xs[i], xs[i + 1]
            fa = polyval(coeffs, float(a)).real
            for _ in range(200):
                mid = (a + b) / 2
                fm = polyval(coeffs, float(mid)).real
                if fa * fm <= 0:
                    b = mid
                else:
                    a, fa = mid, fm
            roots.append((a + b) / 2)
    assert len(roots) == n_roots, f"bisection found {len(roots)} of {n_roots} roots"
    return np.sort(np.array(roots))


def test_jacobi_vs_charpoly_bisection(rng):
    h = random_hermitian(rng, 8, scale=0.25)
    vals = hermitian_eigenvalues(h)
    p = char_poly(h)
    bound = 1.0 + float(np.max(np.abs(p[:-1])))
    roots = _bisection_roots(p, 8, -bound, bound)
    assert np.max(np.abs(vals - roots)) < 1e-9


def test_jacobi_vs_numpy(rng):
    for n in (2, 5, 16):
        h = random_hermitian(rng, n)
        assert np.max(np.abs(hermitian_eigenvalues(h) - np.linalg.eigvalsh(h))) < 1e-10


def test_eigenvalue_sum_is_trace(rng):
    for n in (3, 8, 32):
        h = random_hermitian(rng, n)
        vals = hermitian_eigenvalues(h)
        assert abs(np.sum(vals) - np.trace(h).real) < 1e-9 * max(1, abs(np.trace(h).real))


def test_not_hermitian_rejected():
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotHermitian):
        exp_i_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_no_convergence_when_sweeps_exhausted(rng, monkeypatch):
    import genbloch.linalg as linalg_mod

    h = random_hermitian(rng, 4)
    monkeypatch.setattr(linalg_mod, "JACOBI_MAX_SWEEPS", 0)
    with pytest.raises(NoConvergence):
        hermitian_eigenvalues(h)
    # diagonal input needs no sweeps at all
    assert np.allclose(hermitian_eigenvalues(np.diag([1.0, 2.0])), [1.0, 2.0])


def test_durand_kerner_direct(rng):
    # keep the fallback path honest even though Ferrari handles most inputs
    from genbloch.linalg import _durand_kerner

    rts = np.array([-1.5, -0.25, 0.5, 2.0])
    monic = np.array([1.0])
    for r in rts:
        monic = np.convolve(monic, [-r, 1.0])
    got = np.sort(_durand_kerner(monic).real)
    assert np.max(np.abs(got - rts)) < 1e-10


def test_char_poly_identity():
    assert np.allclose(char_poly(np.eye(2)), [1.0, -2.0, 1.0], atol=1e-14)


def test_char_poly_diag10():
    assert np.allclose(char_poly(np.diag([1.0, 0.0])), [0.0, -1.0, 1.0], atol=1e-14)


def test_char_poly_at_eigenvalues(rng):
    for n in (4, 8, 16):
        h = random_hermitian(rng, n, scale=1.0 / n)
        p = char_poly(h)
        for lam in hermitian_eigenvalues(h):
            assert abs(polyval(p, float(lam))) < 1e-8


def test_char_poly_requires_hermitian():
    with pytest.raises(NotHermitian):
        char_poly(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_quartic_fourth_roots_of_unity():
    roots = quartic_roots([-1.0, 0.0, 0.0, 0.0, 1.0])
    expected = sorted([1, -1, 1j, -1j], key=lambda z: (z.real, z.imag))
    assert np.allclose(roots, expected, atol=1e-12)


def test_quartic_quadruple_root():
    # (lam - 1/4)^4; the cluster refinement recovers full accuracy
    coeffs = [1.0 / 256, -4.0 / 64, 6.0 / 16, -1.0, 1.0]
    roots = quartic_roots(coeffs)
    assert np.max(np.abs(roots - 0.25)) < 1e-12


def test_quartic_random_real_roots(rng):
    for _ in range(50):
        rts = np.sort(rng.uniform(-2, 2, size=4))
        coeffs = np.array([1.0])
        for r in rts:
            coeffs = np.convolve(coeffs, [-r, 1.0])
        got = quartic_roots(coeffs)
        assert np.max(np.abs(got.imag)) < 1e-9
        assert np.max(np.abs(np.sort(got.real) - rts)) < 1e-9


def test_quartic_vieta(rng):
    for _ in range(20):
        coeffs = rng.uniform(-2, 2, size=5)
        coeffs[4] = coeffs[4] if abs(coeffs[4]) > 0.1 else 1.0
        roots = quartic_roots(coeffs)
        monic = coeffs / coeffs[4]
        assert abs(np.sum(roots) + monic[3]) < 1e-9
        prod = np.prod(roots)
        assert abs(prod - monic[0]) < 1e-9


def test_quartic_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        quartic_roots([1.0, 2.0, 3.0])
    with pytest.raises(DegreeMismatch):
        quartic_roots([1.0, 2.0, 3.0, 4.0, 0.0])


def test_exp_zero_is_identity():
    assert np.allclose(exp_i_hermitian(np.zeros((3, 3))), np.eye(3), atol=1e-14)


def test_exp_pauli_rotation():
    u = exp_i_hermitian((np.pi / 2) * SIGMA2, sign=-1)
    assert np.max(np.abs(u - (-1j) * SIGMA2)) < 1e-12
    assert np.max(np.abs(u @ u.conj().T - np.eye(2))) < 1e-12


def test_exp_unitary_random(rng):
    h = random_hermitian(rng, 8)
    u = exp_i_hermitian(h)
    assert np.max(np.abs(u @ u.conj().T - np.eye(8))) < 1e-10
    assert abs(abs(np.linalg.det(u)) - 1.0) < 1e-10


def test_matrix_json_roundtrip(rng):
    a = random_hermitian(rng, 3)
    obj = matrix_to_json(a)
    assert obj["dim"] == 3 and len(obj["entries"]) == 9
    assert np.array_equal(matrix_from_json(obj), a)
