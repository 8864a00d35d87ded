"""Codec between density matrices and graded antisymmetric tensor coordinates.

A state is expanded as

    rho = 2^{-m} * sum_k sum_{i1<..<ik} G_{i1..ik} E_{i1..ik}

with each increasing multi-index summed once.  Because the basis satisfies
trace(E_A E_B) = 2^m delta_AB, the inverse map is the plain trace projection
G_A = trace(rho E_A), which is real for hermitian rho.  The scalar
coordinate equals the trace, so unit-trace states have scalar 1.
Positivity is deliberately NOT validated here; deciding it is the job of
the domains module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import clifford
from .errors import (
    BadIndex,
    DimensionMismatch,
    GradeOutOfRange,
    ModeMismatch,
    NonUnitTrace,
    NotHermitian,
)
from .linalg import as_matrix, hermiticity_residual

HERM_TOL = 1e-10
TRACE_TOL = 1e-8


def normalize_key(indices) -> tuple[tuple, int]:
    """Sort a multi-index, returning (increasing tuple, permutation sign)."""
    idx = [int(i) for i in indices]
    sign = 1
    # insertion sort, counting swaps
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    if any(idx[i] == idx[i + 1] for i in range(len(idx) - 1)):
        raise BadIndex(f"repeated index in {tuple(indices)}")
    return tuple(idx), sign


@dataclass(frozen=True, eq=False)
class AntisymTensor:
    """Grade-k totally antisymmetric real array over indices 1..side.

    Only strictly increasing index tuples are stored; odd permutations are
    implied by sign, absent keys are zero.
    """

    m: int
    k: int
    side: int
    values: dict = field(repr=False)

    def __post_init__(self):
        if self.side not in (2 * self.m, 2 * self.m + 1):
            raise DimensionMismatch(f"side {self.side} invalid for m={self.m}")
        for key, val in self.values.items():
            if len(key) != self.k:
                raise BadIndex(f"key {key} has grade {len(key)}, expected {self.k}")
            if any(not (1 <= i <= self.side) for i in key):
                raise BadIndex(f"key {key} out of bounds 1..{self.side}")
            if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                raise BadIndex(f"key {key} is not strictly increasing")
            if not np.isfinite(val):
                raise ValueError(f"non-finite value at {key}")

    def get(self, indices) -> float:
        """Signed component for an arbitrary index order."""
        key, sign = normalize_key(indices)
        return sign * self.values.get(key, 0.0)

    def items(self):
        return self.values.items()

    def norm_sq(self) -> float:
        """Sum of squares over increasing tuples (the paper-style squared norm)."""
        return float(sum(v * v for v in self.values.values()))

    def scaled(self, s: float) -> "AntisymTensor":
        return AntisymTensor(self.m, self.k, self.side,
                             {key: s * v for key, v in self.values.items()})

    def as_matrix(self) -> np.ndarray:
        """Full antisymmetric side x side matrix (grade 2 only)."""
        if self.k != 2:
            raise GradeOutOfRange("as_matrix is defined for grade-2 tensors")
        mat = np.zeros((self.side, self.side))
        for (i, j), v in self.values.items():
            mat[i - 1, j - 1] = v
            mat[j - 1, i - 1] = -v
        return mat

    @staticmethod
    def from_matrix(m: int, mat, side: int | None = None) -> "AntisymTensor":
        mat = np.asarray(mat, dtype=float)
        side = mat.shape[0] if side is None else side
        if mat.shape != (side, side):
            raise DimensionMismatch(f"matrix shape {mat.shape} != ({side},{side})")
        if np.max(np.abs(mat + mat.T)) > 1e-12 * max(1.0, np.max(np.abs(mat))):
            raise ValueError("matrix is not antisymmetric")
        vals = {}
        for i in range(side):
            for j in range(i + 1, side):
                if mat[i, j] != 0.0:
                    vals[(i + 1, j + 1)] = float(mat[i, j])
        return AntisymTensor(m, 2, side, vals)


def antisym(m: int, k: int, entries: dict | None = None, side: int | None = None) -> AntisymTensor:
    """Build an AntisymTensor from possibly unordered index keys."""
    side = 2 * m if side is None else side
    vals: dict = {}
    for key, v in (entries or {}).items():
        norm, sign = normalize_key(key if isinstance(key, (tuple, list)) else (key,))
        vals[norm] = vals.get(norm, 0.0) + sign * float(v)
    return AntisymTensor(m, k, side, vals)


def vector(m: int, components, side: int | None = None) -> AntisymTensor:
    """Grade-1 tensor from a dense component list."""
    side = 2 * m if side is None else side
    comps = list(components)
    if len(comps) != side:
        raise DimensionMismatch(f"expected {side} components, got {len(comps)}")
    return AntisymTensor(m, 1, side,
                         {(i + 1,): float(c) for i, c in enumerate(comps) if c != 0.0})


@dataclass(frozen=True, eq=False)
class StateCoords:
    """Scalar plus one antisymmetric tensor per grade: the dual coordinates of a state."""

    m: int
    mode: str
    scalar: float
    grades: dict = field(repr=False)  # grade k -> AntisymTensor

    def __post_init__(self):
        max_k = 2 * self.m if self.mode == "standard" else self.m
        side = 2 * self.m if self.mode == "standard" else 2 * self.m + 1
        for k, tensor in self.grades.items():
            if not (1 <= k <= max_k):
                raise GradeOutOfRange(f"grade {k} out of range 1..{max_k} for mode {self.mode!r}")
            if tensor.k != k or tensor.side != side or tensor.m != self.m:
                raise DimensionMismatch(f"tensor at grade {k} has wrong shape metadata")

    def grade(self, k: int) -> AntisymTensor:
        side = 2 * self.m if self.mode == "standard" else 2 * self.m + 1
        return self.grades.get(k, AntisymTensor(self.m, k, side, {}))

    def coefficient(self, indices) -> float:
        if len(indices) == 0:
            return self.scalar
        return self.grade(len(indices)).get(indices)


def state_coords(m: int, mode: str = "standard", scalar: float = 1.0,
                 grades: dict | None = None) -> StateCoords:
    """Convenience constructor; grade values may be AntisymTensor or {key: val} dicts."""
    side = 2 * m if mode == "standard" else 2 * m + 1
    built = {}
    for k, val in (grades or {}).items():
        k = int(k)
        if isinstance(val, AntisymTensor):
            built[k] = val
        else:
            built[k] = antisym(m, k, val, side=side)
    return StateCoords(m=m, mode=mode, scalar=float(scalar), grades=built)


def _check_modes(coords: StateCoords, basis: clifford.CliffordBasis) -> None:
    if coords.mode != basis.mode:
        raise ModeMismatch(f"coords mode {coords.mode!r} != basis mode {basis.mode!r}")
    if coords.m != basis.m:
        raise DimensionMismatch(f"coords m={coords.m} != basis m={basis.m}")


def encode(coords: StateCoords, basis: clifford.CliffordBasis | None = None) -> np.ndarray:
    """Density-matrix representation: 2^{-m} sum of G_A E_A over increasing indices."""
    if basis is None:
        basis = clifford.cached_basis(coords.m, coords.mode)
    _check_modes(coords, basis)
    dim = basis.dim
    rho = coords.scalar * np.eye(dim, dtype=complex)
    for k, tensor in coords.grades.items():
        for idx, val in tensor.items():
            if val != 0.0:
                rho = rho + val * basis.elements[idx]
    return rho / dim


def decode(rho, basis: clifford.CliffordBasis | None = None, m: int | None = None,
           mode: str = "standard") -> StateCoords:
    """Trace-project a hermitian unit-trace matrix onto the graded coordinates."""
    rho = as_matrix(rho)
    if basis is None:
        if m is None:
            m = int(round(np.log2(rho.shape[0])))
        basis = clifford.cached_basis(m, mode)
    if rho.shape[0] != basis.dim:
        raise DimensionMismatch(f"matrix dim {rho.shape[0]} != basis dim {basis.dim}")
    scale = max(1.0, float(np.max(np.abs(rho))))
    if hermiticity_residual(rho) > HERM_TOL * scale:
        raise NotHermitian("decode requires a hermitian matrix")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_TOL:
        raise NonUnitTrace(f"trace {tr} differs from 1 by more than {TRACE_TOL}")

    order, stack = clifford.element_stack(basis)
    proj = np.einsum("aij,ji->a", stack, rho)
    imag = float(np.max(np.abs(proj.imag)))
    if imag > HERM_TOL * scale:
        raise NotHermitian(f"projections have imaginary residue {imag:.3e}")
    coeffs = proj.real
    grades: dict[int, dict] = {}
    scalar = 1.0
    for idx, val in zip(order, coeffs):
        if len(idx) == 0:
            scalar = float(val)
        elif val != 0.0:
            grades.setdefault(len(idx), {})[idx] = float(val)
    side = basis.side
    built = {k: AntisymTensor(basis.m, k, side, v) for k, v in grades.items()}
    return StateCoords(m=basis.m, mode=basis.mode, scalar=scalar, grades=built)


def tensor_config(m: int, k: int, tensor: AntisymTensor, mode: str = "standard",
                  basis: clifford.CliffordBasis | None = None) -> np.ndarray:
    """Pure tensor configuration rho = 2^{-m} (I + G o E^{(k)})."""
    max_k = 2 * m if mode == "standard" else m
    if not (1 <= k <= max_k):
        raise GradeOutOfRange(f"grade {k} out of range 1..{max_k} for mode {mode!r}")
    if tensor.k != k:
        raise GradeOutOfRange(f"tensor grade {tensor.k} != requested {k}")
    coords = state_coords(m, mode=mode, scalar=1.0, grades={k: tensor})
    return encode(coords, basis)


def alt_expand(coords: StateCoords, basis: clifford.CliffordBasis | None = None) -> np.ndarray:
    """Expansion over the 2m+1-generator family, grades 0..m."""
    if coords.mode != "extended":
        raise ModeMismatch("alt_expand requires extended-mode coordinates")
    return encode(coords, basis)


def alt_project(rho, basis: clifford.CliffordBasis | None = None,
                m: int | None = None):
    """Project onto the extended family; returns (coords, residual matrix).

    The grades 0..m over 2m+1 indices count 4^m orthogonal elements, so the
    family spans all hermitian matrices and the residual is zero to rounding
    for any valid input; it is returned anyway so callers can see exactly
    what the reconstruction missed.
    """
    rho = as_matrix(rho)
    if basis is None:
        if m is None:
            m = int(round(np.log2(rho.shape[0])))
        basis = clifford.cached_basis(m, "extended")
    if basis.mode != "extended":
        raise ModeMismatch("alt_project requires an extended-mode basis")
    coords = decode(rho, basis)
    residual = rho - encode(coords, basis)
    return coords, residual


# ---------------------------------------------------------------------------
# wire format


def tensor_entries_to_json(tensor: AntisymTensor) -> list:
    return [{"idx": [int(i) for i in key], "val": float(v)} for key, v in sorted(tensor.items())]


def coords_to_json(coords: StateCoords) -> dict:
    return {
        "m": coords.m,
        "mode": coords.mode,
        "scalar": coords.scalar,
        "grades": {str(k): tensor_entries_to_json(t) for k, t in sorted(coords.grades.items())},
    }


def coords_from_json(obj: dict) -> StateCoords:
    m = int(obj["m"])
    mode = obj.get("mode", "standard")
    grades = {}
    for key, entries in (obj.get("grades") or {}).items():
        grades[int(key)] = {tuple(e["idx"]): float(e["val"]) for e in entries}
    return state_coords(m, mode=mode, scalar=float(obj.get("scalar", 1.0)), grades=grades)
