"""Dense complex linear algebra kernels.

Kronecker products, a cyclic Jacobi eigensolver for hermitian matrices,
Faddeev-LeVerrier characteristic polynomials and closed-form low-degree
root solvers. Everything operates on plain ``complex128`` numpy arrays.

The Jacobi solver is the ground-truth oracle used to validate every
closed-form spectrum elsewhere in the package, so it deliberately shares
no code with the characteristic-polynomial or quartic-root paths: the two
routes stay independently checkable against each other.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DegreeMismatch, NoConvergence, NotHermitian

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def as_matrix(a) -> np.ndarray:
    """Coerce to a square complex128 array, validating shape and finiteness."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix has non-finite entries")
    return m


def hermiticity_residual(a: np.ndarray) -> float:
    """Max-norm of a - a^dagger."""
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def require_hermitian(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    a = as_matrix(a)
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    res = hermiticity_residual(a)
    if res >= tol * scale:
        raise NotHermitian(f"hermiticity residual {res:.3e} exceeds {tol:.1e} * {scale:.3e}")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product with block layout (i*dimB + k, j*dimB + l) = A[i,j] B[k,l]."""
    return np.kron(as_matrix(a), as_matrix(b))


def _jacobi(h: np.ndarray, tol: float):
    """Cyclic-by-row complex Jacobi diagonalization.

    Each (p, q) rotation is the unitary J = Phi(p) . R(theta) that zeroes
    H[p, q]:  Phi strips the phase of the pivot, R is the classical real
    rotation with tan(theta) the stable root of t^2 + 2*tau*t - 1 = 0,
    tau = (H[q,q] - H[p,p]) / (2 |H[p,q]|).

    Returns (eigenvalues ascending, eigenvector columns in matching order).
    """
    n = h.shape[0]
    a = h.astype(complex).copy()
    v = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([a[0, 0].real]), v
    scale = max(1.0, float(np.linalg.norm(h)))
    target = tol * scale

    def off_norm():
        return math.sqrt(2.0 * sum(abs(a[i, j]) ** 2 for i in range(n) for j in range(i + 1, n)))

    cap = JACOBI_MAX_SWEEPS
    sweeps = 0
    while off_norm() >= target:
        if sweeps >= cap:
            raise NoConvergence(
                f"Jacobi did not reach off-norm {target:.3e} in {cap} sweeps"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = a[p, q]
                mag = abs(hpq)
                if mag < 1e-300:
                    continue
                phi = hpq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 if tau == 0.0 else math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                app = a[p, p].real - t * mag
                aqq = a[q, q].real + t * mag
                # columns: col_p' = phi*c*col_p - s*col_q ; col_q' = phi*s*col_p + c*col_q
                colp, colq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = phi * c * colp - s * colq
                a[:, q] = phi * s * colp + c * colq
                # rows (left-multiply by J^dagger)
                rowp, rowq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = np.conj(phi) * c * rowp - s * rowq
                a[q, :] = np.conj(phi) * s * rowp + c * rowq
                a[p, p] = app
                a[q, q] = aqq
                a[p, q] = 0.0
                a[q, p] = 0.0
                colp, colq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = phi * c * colp - s * colq
                v[:, q] = phi * s * colp + c * colq
    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigensystem(h, tol: float = JACOBI_TOL):
    """Eigenvalues (ascending) and eigenvectors of a hermitian matrix."""
    h = as_matrix(h)
    scale = max(1.0, float(np.max(np.abs(h))) if h.size else 0.0)
    if hermiticity_residual(h) >= tol * scale:
        raise NotHermitian("matrix is not hermitian within tol")
    return _jacobi(h, tol)


def hermitian_eigenvalues(h, tol: float = JACOBI_TOL) -> np.ndarray:
    """Ascending real eigenvalues of a hermitian matrix via cyclic Jacobi."""
    return hermitian_eigensystem(h, tol)[0]


def char_poly(a, herm_tol: float = 1e-10) -> np.ndarray:
    """Coefficients of det(A - lambda I), ascending powers of lambda.

    Faddeev-LeVerrier recursion; requires hermitian input so the
    coefficients are real.  The imaginary residue of every coefficient is
    checked against 1e-10 (relative to the coefficient scale) before
    truncating to real.
    """
    a = require_hermitian(a, herm_tol)
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = 1.0
    m = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        am = a @ m
        c = -np.trace(am) / k
        coeffs[n - k] = c
        m = am + c * np.eye(n, dtype=complex)
    # Faddeev-LeVerrier yields det(lambda I - A); det(A - lambda I) flips by (-1)^n.
    if n % 2 == 1:
        coeffs = -coeffs
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    imag_res = float(np.max(np.abs(coeffs.imag)))
    if imag_res > 1e-10 * scale:
        raise NotHermitian(f"characteristic polynomial has imaginary residue {imag_res:.3e}")
    return coeffs.real.copy()


def polyval(coeffs, x):
    """Evaluate a polynomial given ascending coefficients (Horner)."""
    total = 0.0j
    for c in reversed(list(coeffs)):
        total = total * x + c
    return total


def _cubic_real_roots(b2: float, b1: float, b0: float):
    """All real roots of x^3 + b2 x^2 + b1 x + b0 (Cardano / trigonometric)."""
    p = b1 - b2 * b2 / 3.0
    q = 2.0 * b2 ** 3 / 27.0 - b2 * b1 / 3.0 + b0
    shift = -b2 / 3.0
    disc = -4.0 * p ** 3 - 27.0 * q ** 2
    if disc >= 0.0 and p < 0.0:
        # three real roots
        rho = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * rho)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg)
        return [shift + rho * math.cos((theta - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    # one real root via Cardano (disc < 0 implies inner > 0; disc = -108*inner)
    inner = q * q / 4.0 + p ** 3 / 27.0
    s = math.sqrt(max(inner, 0.0))
    return [shift + float(np.cbrt(-q / 2.0 + s)) + float(np.cbrt(-q / 2.0 - s))]


def _durand_kerner(monic: np.ndarray) -> np.ndarray:
    """Simultaneous iteration for all roots of a monic polynomial."""
    deg = len(monic) - 1
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = np.array([radius * (0.4 + 0.9j) ** k for k in range(1, deg + 1)], dtype=complex)
    for _ in range(200):
        step = 0.0
        for i in range(deg):
            denom = 1.0 + 0.0j
            for j in range(deg):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = 1e-300
            d = polyval(monic, z[i]) / denom
            z[i] -= d
            step = max(step, abs(d))
        if step < 1e-15 * max(1.0, radius):
            break
    return z


def _newton_polish(monic: np.ndarray, roots: np.ndarray, iters: int = 2) -> np.ndarray:
    deriv = np.array([k * monic[k] for k in range(1, len(monic))])
    out = roots.astype(complex).copy()
    for _ in range(iters):
        for i, z in enumerate(out):
            dp = polyval(deriv, z)
            if abs(dp) > 1e-300:
                out[i] = z - polyval(monic, z) / dp
    return out


def _poly_derivative(coeffs: np.ndarray) -> np.ndarray:
    return np.array([k * coeffs[k] for k in range(1, len(coeffs))])


def _refine_multiple_roots(monic: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Sharpen root clusters: a k-fold root is a simple root of the (k-1)-th
    derivative, so refining the cluster centroid there recovers the accuracy
    that any coefficient-based solver loses near multiple roots."""
    out = roots.astype(complex).copy()
    scale = 1.0 + float(np.max(np.abs(out)))
    tol = 1e-5 * scale
    used = np.zeros(len(out), dtype=bool)
    for i in range(len(out)):
        if used[i]:
            continue
        cluster = [j for j in range(len(out)) if not used[j] and abs(out[j] - out[i]) <= tol]
        for j in cluster:
            used[j] = True
        k = len(cluster)
        if k < 2:
            continue
        p = monic
        for _ in range(k - 1):
            p = _poly_derivative(p)
        dp = _poly_derivative(p)
        z = complex(np.mean(out[cluster]))
        for _ in range(40):
            d = polyval(dp, z)
            if abs(d) < 1e-300:
                break
            step = polyval(p, z) / d
            z -= step
            if abs(step) < 1e-16 * scale:
                break
        for j in cluster:
            out[j] = z
    return out


def quartic_roots(coeffs) -> np.ndarray:
    """The four complex roots of a real quartic (ascending coefficients).

    Ferrari's factorization into two quadratics via the resolvent cubic,
    with a Durand-Kerner fallback when the resolvent degenerates
    (within 1e-12 of zero), plus a Newton polish pass.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.shape != (5,) or c[4] == 0.0:
        raise DegreeMismatch("quartic_roots expects 5 real coefficients with nonzero leading term")
    monic = c / c[4]
    e0, e1, e2, e3, _ = monic
    # depress: lam = y - e3/4
    sh = e3 / 4.0
    alpha = e2 - 6.0 * sh * sh
    beta = e1 - 2.0 * e2 * sh + 8.0 * sh ** 3
    gamma = e0 - e1 * sh + e2 * sh * sh - 3.0 * sh ** 4
    scale = max(1.0, abs(alpha), abs(beta), abs(gamma))

    if abs(beta) < 1e-14 * scale:
        # biquadratic
        disc = alpha * alpha - 4.0 * gamma
        sq = cmath.sqrt(complex(disc))
        ys = []
        for y2 in ((-alpha + sq) / 2.0, (-alpha - sq) / 2.0):
            s = cmath.sqrt(y2)
            ys.extend([s, -s])
        roots = np.array(ys, dtype=complex) - sh
    else:
        # resolvent cubic in U = u^2: U^3 + 2 alpha U^2 + (alpha^2 - 4 gamma) U - beta^2 = 0
        reals = _cubic_real_roots(2.0 * alpha, alpha * alpha - 4.0 * gamma, -beta * beta)
        u2 = max(reals)
        if u2 < 1e-12 * scale:
            roots = _durand_kerner(monic)
        else:
            u = math.sqrt(u2)
            v = (alpha + u2 - beta / u) / 2.0
            w = (alpha + u2 + beta / u) / 2.0
            roots = []
            for (b, cq) in ((u, v), (-u, w)):
                sq = cmath.sqrt(complex(b * b - 4.0 * cq))
                roots.extend([(-b + sq) / 2.0, (-b - sq) / 2.0])
            roots = np.array(roots, dtype=complex) - sh
    roots = _newton_polish(monic, np.asarray(roots, dtype=complex))
    roots = _refine_multiple_roots(monic, roots)
    order = np.lexsort((roots.imag, roots.real))
    return roots[order]


def exp_i_hermitian(h, sign: int = 1, tol: float = JACOBI_TOL) -> np.ndarray:
    """exp(sign * i * H) for hermitian H via the Jacobi eigendecomposition."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w, v = hermitian_eigensystem(h, tol)
    phases = np.exp(1j * sign * w)
    return (v * phases) @ v.conj().T


def matrix_to_json(a) -> dict:
    """Wire format: {"dim": n, "entries": [[re, im], ...]} row-major."""
    m = as_matrix(a)
    entries = [[float(z.real), float(z.imag)] for z in m.ravel(order="C")]
    return {"dim": int(m.shape[0]), "entries": entries}


def matrix_from_json(obj: dict) -> np.ndarray:
    dim = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    return as_matrix(flat.reshape(dim, dim))
