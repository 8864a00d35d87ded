"""Rotations of tensor coordinates and their unitary lift on states.

Conventions (fixed once, verified by the compatibility identity below):

* A generator is a grade-2 antisymmetric parameter array alpha_{ij}, i < j.
  Its orthogonal matrix is L = exp(A) with A[j, i] = +alpha_{ij}, so a
  single alpha_{12} = theta rotates axis 1 toward axis 2 by theta
  (L = [[cos, -sin], [sin, cos]] on that plane) and det L = +1.

* The unitary lift is U = exp(-(i/4) sum_{i,j} alpha_{ij} * i Gamma_i Gamma_j)
  with the sum over both index orders, i.e. exp(-(i/2) sum_{i<j} ...).

* These satisfy  U Gamma_i U^dag = sum_k L[i, k] Gamma_k, and the normative
  compatibility identity

      encode(rotate_coords(G, L)) = U^dag encode(G) U .

* Grade-k coordinates transform through the k-th compound (exterior power)
  of L:  G'_I = sum_J det(L[I, J]) G_J over increasing k-tuples, which is
  the antisymmetrized k-fold product L x ... x L.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy.linalg import expm

from . import clifford
from .coords import AntisymTensor, StateCoords
from .errors import DimensionMismatch, GradeMismatch, ModeMismatch, NotUnitary
from .linalg import as_matrix, exp_i_hermitian

ORTHO_TOL = 1e-10


def generator_matrix(alpha: AntisymTensor) -> np.ndarray:
    """Antisymmetric matrix A with A[j, i] = +alpha_{ij} for i < j."""
    if alpha.k != 2:
        raise GradeMismatch("a rotation generator is a grade-2 tensor")
    a = np.zeros((alpha.side, alpha.side))
    for (i, j), v in alpha.items():
        a[j - 1, i - 1] = v
        a[i - 1, j - 1] = -v
    return a


def orthogonal_from_generator(alpha: AntisymTensor) -> np.ndarray:
    """L = exp(A) in SO(side); orthogonality is validated before returning."""
    el = expm(generator_matrix(alpha))
    res = np.max(np.abs(el.T @ el - np.eye(el.shape[0])))
    if res > ORTHO_TOL:
        raise ArithmeticError(f"exponential lost orthogonality: residual {res:.3e}")
    return el


def check_orthogonal(el, side: int | None = None) -> np.ndarray:
    el = np.asarray(el, dtype=float)
    if el.ndim != 2 or el.shape[0] != el.shape[1]:
        raise DimensionMismatch("rotation matrix must be square")
    if side is not None and el.shape[0] != side:
        raise DimensionMismatch(f"rotation matrix dim {el.shape[0]} != {side}")
    if np.max(np.abs(el.T @ el - np.eye(el.shape[0]))) > ORTHO_TOL:
        raise NotUnitary("matrix is not orthogonal within 1e-10")
    return el


def spin_lift(alpha: AntisymTensor, basis: clifford.CliffordBasis | None = None) -> np.ndarray:
    """Unitary implementing the rotation generated by alpha on the state space."""
    if alpha.k != 2:
        raise GradeMismatch("a rotation generator is a grade-2 tensor")
    m = alpha.m
    if alpha.side != 2 * m:
        raise ModeMismatch("spin_lift rotates the 2m standard generators")
    if basis is None:
        basis = clifford.cached_basis(m, "standard")
    if basis.m != m or basis.mode != "standard":
        raise ModeMismatch("basis must be the standard basis for the same m")
    gams = basis.gammas
    dim = basis.dim
    h = np.zeros((dim, dim), dtype=complex)
    # both index orders of the repeated-index sum double each stored i<j term
    for (i, j), v in alpha.items():
        h = h + v * (1j * (gams[i - 1] @ gams[j - 1]))
    return exp_i_hermitian(0.5 * h, sign=-1)


def rotate_coords(coords: StateCoords, el) -> StateCoords:
    """Apply an orthogonal matrix grade-wise; scalar untouched."""
    side = 2 * coords.m if coords.mode == "standard" else 2 * coords.m + 1
    el = check_orthogonal(el, side)
    new_grades = {}
    for k, tensor in coords.grades.items():
        vals = {}
        source = list(tensor.items())
        for out_idx in itertools.combinations(range(1, side + 1), k):
            rows = [i - 1 for i in out_idx]
            total = 0.0
            for in_idx, v in source:
                cols = [j - 1 for j in in_idx]
                sub = el[np.ix_(rows, cols)]
                total += float(np.linalg.det(sub)) * v
            if total != 0.0:
                vals[out_idx] = total
        new_grades[k] = AntisymTensor(coords.m, k, side, vals)
    return StateCoords(m=coords.m, mode=coords.mode, scalar=coords.scalar, grades=new_grades)


def conjugate_state(rho, u) -> np.ndarray:
    """U^dag rho U; the spectrum is preserved by similarity."""
    rho = as_matrix(rho)
    u = as_matrix(u)
    if u.shape != rho.shape:
        raise DimensionMismatch("state and unitary dimensions differ")
    res = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if res > 1e-8:
        raise NotUnitary(f"conjugating matrix is not unitary: residual {res:.3e}")
    return u.conj().T @ rho @ u
