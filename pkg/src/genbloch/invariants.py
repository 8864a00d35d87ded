"""Rotation invariants of graded tensor coordinates.

For a grade-2 tensor G (antisymmetric matrix) the spectrum-determining
invariants are

    r  = sum_{i<j} G_ij^2          (degree 2)
    T4 = trace((G^T G)^2)          (degree 4)
    D3 = eps_{i1..i6} G_{i1 i2} G_{i3 i4} G_{i5 i6}   (degree 3, six indices)

D3 equals 48 times the Pfaffian of G; both routes are computed and compared
on every call.  The dual-tensor constructions tie 2 r^2 - T4 to quadratic
functions of the dual, which is what makes the z variable of the domains
module computable directly from the coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .coords import AntisymTensor, StateCoords
from .errors import DimensionMismatch, GradeMismatch, UnknownName, UnsupportedM


def perm_sign(perm) -> int:
    """Parity of a permutation of 0..n-1 (+1 even, -1 odd)."""
    p = list(perm)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple:
    """All (permutation, sign) pairs of 0..n-1."""
    return tuple((p, perm_sign(p)) for p in itertools.permutations(range(n)))


def pfaffian(a: np.ndarray) -> float:
    """Pfaffian of a real antisymmetric matrix by perfect-matching expansion.

    Exact recursion along the first row; 15 terms at dimension 6.  Intended
    for the small dimensions used here (<= 10).
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch("pfaffian requires a square matrix")
    if n == 0:
        return 1.0
    if n % 2 == 1:
        return 0.0
    if n == 2:
        return float(a[0, 1])
    total = 0.0
    rest = list(range(1, n))
    for pos, j in enumerate(rest):
        sub = [k for k in rest if k != j]
        minor = a[np.ix_(sub, sub)]
        total += (-1.0) ** pos * a[0, j] * pfaffian(minor)
    return total


def _require_grade2(g: AntisymTensor) -> AntisymTensor:
    if g.k != 2:
        raise GradeMismatch(f"expected a grade-2 tensor, got grade {g.k}")
    return g


def frobenius_r(g: AntisymTensor) -> float:
    """r = sum_{i<j} G_ij^2 (half the squared Frobenius norm of the full matrix)."""
    return _require_grade2(g).norm_sq()


def trace_T4(g: AntisymTensor) -> float:
    """T4 = trace((G^T G)^2) on the full antisymmetric matrix."""
    mat = _require_grade2(g).as_matrix()
    gtg = mat.T @ mat
    return float(np.trace(gtg @ gtg))


def epsilon_sum_D3(g: AntisymTensor) -> float:
    """Brute-force eps contraction over all 720 index permutations (m = 3)."""
    _require_grade2(g)
    if g.side != 6:
        raise DimensionMismatch("the triple eps contraction needs 6 indices (m = 3)")
    mat = g.as_matrix()
    total = 0.0
    for perm, sign in signed_permutations(6):
        total += sign * mat[perm[0], perm[1]] * mat[perm[2], perm[3]] * mat[perm[4], perm[5]]
    return total


def epsilon_D3(g: AntisymTensor) -> float:
    """The cubic invariant D3; eps-sum with the 48*Pfaffian fast path cross-checked."""
    brute = epsilon_sum_D3(g)
    fast = 48.0 * pfaffian(_require_grade2(g).as_matrix())
    scale = max(1.0, abs(brute))
    if abs(brute - fast) > 1e-10 * scale:
        raise ArithmeticError(f"eps-sum {brute} and 48*Pf {fast} disagree")
    return brute


def dual_tensor(g: AntisymTensor) -> AntisymTensor:
    """Dual grade-2 tensor.

    m=2:  Gd_{ij} = eps_{ijkl} G_{kl}     (linear dual)
    m=3:  Ad_{ij} = eps_{ij k1..k4} G_{k1 k2} G_{k3 k4}  (quadratic dual)

    Both sums run over all orders of the contracted indices, matching the
    repeated-index convention of the defining expressions.
    """
    _require_grade2(g)
    if g.side not in (4, 6):
        raise UnsupportedM(f"dual_tensor supports sides 4 and 6, got {g.side}")
    mat = g.as_matrix()
    n = g.side
    vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            rest = [x for x in range(n) if x not in (i, j)]
            total = 0.0
            for p in itertools.permutations(rest):
                if n == 4:
                    total += perm_sign((i, j) + p) * mat[p[0], p[1]]
                else:
                    total += perm_sign((i, j) + p) * mat[p[0], p[1]] * mat[p[2], p[3]]
            if total != 0.0:
                vals[(i + 1, j + 1)] = total
    return AntisymTensor(g.m, 2, n, vals)


def dual_identity_residual(g: AntisymTensor) -> float:
    """|2r^2 - T4 - quadratic-dual expression|; zero in exact arithmetic.

    m=2: 2r^2 - T4 = (trace(Gd G))^2 / 16
    m=3: 2r^2 - T4 = trace(Ad^T Ad) / 32
    """
    r = frobenius_r(g)
    t4 = trace_T4(g)
    lhs = 2.0 * r * r - t4
    dual = dual_tensor(g)
    if g.side == 4:
        rhs = float(np.trace(dual.as_matrix() @ g.as_matrix())) ** 2 / 16.0
    else:
        dm = dual.as_matrix()
        rhs = float(np.trace(dm.T @ dm)) / 32.0
    return abs(lhs - rhs)


def det_identity_check(g: AntisymTensor) -> tuple[float, float]:
    """(2r^2 - T4, 4 det G) for a 4x4 grade-2 tensor; equal up to rounding."""
    _require_grade2(g)
    if g.side != 4:
        raise UnsupportedM("the determinant identity is specific to side 4 (m = 2)")
    lhs = 2.0 * frobenius_r(g) ** 2 - trace_T4(g)
    rhs = 4.0 * float(np.linalg.det(g.as_matrix()))
    return lhs, rhs


def pseudo_vector_V(g: AntisymTensor) -> np.ndarray:
    """V_i = eps_{i,i1..i6} G_{i1 i2} G_{i3 i4} G_{i5 i6} over 7 indices.

    When G is supported on indices 1..6, V_7 reduces to the 6-index D3 and
    the other components vanish.
    """
    _require_grade2(g)
    if g.side != 7:
        raise DimensionMismatch("pseudo_vector_V needs a side-7 grade-2 tensor")
    mat = g.as_matrix()
    out = np.zeros(7)
    for i in range(7):
        rest = [x for x in range(7) if x != i]
        total = 0.0
        # eps_{i, j1..j6} = (-1)^i * parity of (j1..j6) within the sorted complement of i
        for p, sign_rest in signed_permutations(6):
            perm = [rest[x] for x in p]
            sign = sign_rest * (-1) ** i
            total += sign * mat[perm[0], perm[1]] * mat[perm[2], perm[3]] * mat[perm[4], perm[5]]
        out[i] = total
    return out


SCALE_DIMENSIONS = {
    "scalar": 1,
    "r": 2,
    "D3": 3,
    "T4": 4,
    "r^2": 4,
}


def scale_dimension(name: str) -> int:
    """Homogeneity degree of a named invariant under G -> s G."""
    try:
        return SCALE_DIMENSIONS[name]
    except KeyError:
        raise UnknownName(name) from None


@dataclass(frozen=True)
class InvariantSet:
    """Named invariants with their scale dimensions fixed by construction."""

    r: float
    T4: float
    D3: float | None = None
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.r < -1e-12 or self.T4 < -1e-12:
            raise ValueError("r and T4 are sums of squares and must be nonnegative")

    def to_dict(self) -> dict:
        return {"r": self.r, "T4": self.T4, "D3": self.D3, "extras": dict(self.extras)}


def two_tensor_invariants(g: AntisymTensor) -> InvariantSet:
    """InvariantSet for a grade-2 tensor; D3 only exists at side 6."""
    r = frobenius_r(g)
    t4 = trace_T4(g)
    if t4 > 2.0 * r * r + 1e-9 * max(1.0, r * r):
        raise ArithmeticError(f"T4 = {t4} exceeds the Cauchy-Schwarz bound 2 r^2 = {2 * r * r}")
    d3 = None
    extras = {}
    if g.side == 4:
        extras["pfaffian"] = float(pfaffian(g.as_matrix()))
    if g.side == 6:
        d3 = epsilon_D3(g)
        extras["pfaffian"] = d3 / 48.0
    return InvariantSet(r=r, T4=t4, D3=d3, extras=extras)


def vector_invariants(g: AntisymTensor, pseudoscalar: float | None = None) -> InvariantSet:
    """Quadratic invariant of a vector configuration (optionally with pseudoscalar)."""
    if g.k != 1:
        raise GradeMismatch(f"expected a grade-1 tensor, got grade {g.k}")
    norm_sq = g.norm_sq()
    extras = {"vector_norm_sq": norm_sq}
    if pseudoscalar is not None:
        norm_sq += float(pseudoscalar) ** 2
        extras["pseudoscalar"] = float(pseudoscalar)
    return InvariantSet(r=norm_sq, T4=0.0, D3=None, extras=extras)


def coords_invariants(coords: StateCoords) -> InvariantSet:
    """Invariants of whatever grades a coordinate set carries.

    Grade 2 provides (r, T4, D3); grade 1 and the top grade are reported in
    extras so the CLI can describe mixed inputs.
    """
    side = 2 * coords.m if coords.mode == "standard" else 2 * coords.m + 1
    g2 = coords.grade(2)
    if g2.values:
        inv = two_tensor_invariants(g2)
    else:
        inv = InvariantSet(r=0.0, T4=0.0, D3=(0.0 if side == 6 else None))
    extras = dict(inv.extras)
    g1 = coords.grade(1)
    if g1.values:
        extras["vector_norm_sq"] = g1.norm_sq()
    if coords.mode == "standard":
        top = coords.grade(2 * coords.m)
        if top.values:
            extras["pseudoscalar"] = top.get(tuple(range(1, 2 * coords.m + 1)))
    return InvariantSet(r=inv.r, T4=inv.T4, D3=inv.D3, extras=extras)
