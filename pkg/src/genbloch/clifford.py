"""Hermitian matrix representations of the Clifford algebra on 2m generators.

The generators are built by the Pauli iteration: starting from
{sigma1, sigma2} each step maps every existing generator G to kron(G, sigma1)
and appends kron(I, sigma2), kron(I, sigma3).  All entries stay in
{0, +-1, +-i}, so the anticommutation relations hold exactly in floating
point.  The graded basis elements are

    E_{i1..ik} = i^{k(k-1)/2} * Gamma_{i1} ... Gamma_{ik},   i1 < ... < ik,

hermitian by construction (the phase compensates the sign picked up when
reversing k anticommuting factors) and trace-orthogonal with
trace(E_A E_B) = 2^m delta_AB.

"extended" mode appends the top element Gamma_{2m+1} (the phased product of
all generators, which anticommutes with each of them) to the generator set
and builds the grades 0..m over the 2m+1 indices; that family has the same
size 4^m and the same orthogonality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import BadIndex, ModeMismatch, ResourceLimit

MAX_M = 6

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

_PHASES = (1.0 + 0.0j, 1j, -1.0 + 0.0j, -1j)


def grade_phase(k: int) -> complex:
    """Hermiticity phase i^{k(k-1)/2} for a grade-k product."""
    return _PHASES[(k * (k - 1) // 2) % 4]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _check_m(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise BadIndex(f"m must be a positive integer, got {m!r}")
    if m > MAX_M:
        raise ResourceLimit(f"m = {m} exceeds the supported maximum {MAX_M}")


@lru_cache(maxsize=None)
def generate_gammas(m: int) -> tuple:
    """The 2m generators for m qubits: hermitian, traceless, dim 2^m."""
    _check_m(m)
    gams = [SIGMA1, SIGMA2]
    for _ in range(m - 1):
        eye = np.eye(gams[0].shape[0], dtype=complex)
        gams = [np.kron(g, SIGMA1) for g in gams] + [np.kron(eye, SIGMA2), np.kron(eye, SIGMA3)]
    return tuple(_freeze(g.copy()) for g in gams)


@lru_cache(maxsize=None)
def chirality(m: int) -> np.ndarray:
    """Gamma_{2m+1} = (-i)^m Gamma_1 ... Gamma_{2m}; squares to I, anticommutes with all generators."""
    gams = generate_gammas(m)
    prod = np.eye(2 ** m, dtype=complex)
    for g in gams:
        prod = prod @ g
    return _freeze((-1j) ** m * prod)


@lru_cache(maxsize=None)
def extended_gammas(m: int) -> tuple:
    """The 2m+1 mutually anticommuting elements: generators plus chirality."""
    return generate_gammas(m) + (chirality(m),)


def _validate_index(m: int, indices, mode: str) -> tuple:
    # single elements may use any grade the index range allows; only the
    # orthogonal *family* of full_basis stops at grade m in extended mode
    side = 2 * m if mode == "standard" else 2 * m + 1
    idx = tuple(int(i) for i in indices)
    if any(i < 1 or i > side for i in idx):
        raise BadIndex(f"indices {idx} out of bounds 1..{side}")
    if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
        raise BadIndex(f"indices {idx} must be strictly increasing")
    return idx


def basis_element(m: int, indices, mode: str = "standard") -> np.ndarray:
    """Graded basis element for a strictly increasing multi-index (1-based)."""
    _check_m(m)
    if mode not in ("standard", "extended"):
        raise ModeMismatch(f"unknown mode {mode!r}")
    idx = _validate_index(m, indices, mode)
    gams = generate_gammas(m) if mode == "standard" else extended_gammas(m)
    prod = np.eye(2 ** m, dtype=complex)
    for i in idx:
        prod = prod @ gams[i - 1]
    return grade_phase(len(idx)) * prod


@dataclass(frozen=True, eq=False)
class CliffordBasis:
    """All graded basis elements for a given m, keyed by increasing multi-index."""

    m: int
    mode: str
    gammas: tuple
    chirality_element: np.ndarray
    elements: dict = field(repr=False)
    certificate: dict | None = None

    @property
    def dim(self) -> int:
        return 2 ** self.m

    @property
    def side(self) -> int:
        return 2 * self.m if self.mode == "standard" else 2 * self.m + 1

    @property
    def max_grade(self) -> int:
        return 2 * self.m if self.mode == "standard" else self.m

    def indices_of_grade(self, k: int):
        return [idx for idx in self.elements if len(idx) == k]

    def element(self, indices) -> np.ndarray:
        idx = tuple(int(i) for i in indices)
        if idx not in self.elements:
            raise BadIndex(f"no basis element with index {idx}")
        return self.elements[idx]


def full_basis(m: int, mode: str = "standard", verify: str | bool = "auto") -> CliffordBasis:
    """Construct every graded basis element (4^m of them in either mode).

    verify: True forces the pairwise orthogonality certificate, False skips
    it, "auto" verifies exhaustively for m <= 4 and spot-checks 200 random
    pairs at m = 5.
    """
    _check_m(m)
    if mode not in ("standard", "extended"):
        raise ModeMismatch(f"unknown mode {mode!r}")
    if verify is True and m > 5:
        raise ResourceLimit("full pairwise verification is limited to m <= 5")
    gams = generate_gammas(m) if mode == "standard" else extended_gammas(m)
    side = 2 * m if mode == "standard" else 2 * m + 1
    max_k = 2 * m if mode == "standard" else m
    dim = 2 ** m
    eye = np.eye(dim, dtype=complex)

    # raw products cached by prefix so each element costs one matmul
    raw: dict[tuple, np.ndarray] = {(): eye}
    elements: dict[tuple, np.ndarray] = {}
    for k in range(0, max_k + 1):
        for idx in itertools.combinations(range(1, side + 1), k):
            if k == 0:
                prod = eye
            else:
                prod = raw[idx[:-1]] @ gams[idx[-1] - 1]
            raw[idx] = prod
            elements[idx] = _freeze(grade_phase(k) * prod)

    expected = 4 ** m
    assert len(elements) == expected, (len(elements), expected)
    basis = CliffordBasis(m=m, mode=mode, gammas=gams, chirality_element=chirality(m),
                          elements=elements)
    if verify is True or (verify == "auto" and m <= 5):
        # verify=True forces the exhaustive pair check even at m = 5
        cap = expected * expected if verify is True else 65536
        cert = verify_algebra(basis, max_pairs=cap)
        basis = CliffordBasis(m=m, mode=mode, gammas=gams, chirality_element=chirality(m),
                              elements=elements, certificate=cert)
    return basis


@lru_cache(maxsize=None)
def cached_basis(m: int, mode: str = "standard") -> CliffordBasis:
    """Shared immutable basis (construction is deterministic, so caching is safe)."""
    return full_basis(m, mode, verify=False)


def element_stack(basis: CliffordBasis) -> tuple:
    """(ordered index list, stacked element array) for vectorized projections."""
    order = list(basis.elements)
    stack = np.stack([basis.elements[idx] for idx in order])
    return order, stack


def verify_algebra(basis: CliffordBasis, max_pairs: int = 65536, seed: int = 0) -> dict:
    """Residual report: anticommutators, hermiticity, pairwise trace-orthogonality.

    Orthogonality is exhaustive while the pair count stays below max_pairs,
    otherwise a seeded random sample of 200 pairs is checked.
    """
    gams = basis.gammas
    dim = basis.dim
    n_gen = len(gams)
    anti = 0.0
    for i in range(n_gen):
        for j in range(i, n_gen):
            target = 2.0 * np.eye(dim) if i == j else 0.0
            anti = max(anti, float(np.max(np.abs(gams[i] @ gams[j] + gams[j] @ gams[i] - target))))
    herm = max(float(np.max(np.abs(e - e.conj().T))) for e in basis.elements.values())

    order, stack = element_stack(basis)
    n = len(order)
    ortho = 0.0
    if n * n <= max_pairs:
        gram = np.einsum("aij,bji->ab", stack, stack)
        ortho = float(np.max(np.abs(gram - dim * np.eye(n))))
        pairs = n * n
    else:
        rng = np.random.default_rng(seed)
        pairs = 200
        for _ in range(pairs):
            a, b = rng.integers(0, n, size=2)
            val = np.trace(stack[a] @ stack[b])
            target = dim if a == b else 0.0
            ortho = max(ortho, float(abs(val - target)))
    return {
        "m": basis.m,
        "mode": basis.mode,
        "n_elements": n,
        "pairs_checked": int(pairs),
        "max_anticommutator_residual": anti,
        "max_hermiticity_residual": herm,
        "max_orthogonality_residual": ortho,
    }
