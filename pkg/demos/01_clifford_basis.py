"""Build the hermitian Clifford generators and their graded basis.

Walks through the Pauli iteration, the anticommutation relations, the
chirality element, and the trace-orthogonal graded elements used as the
coordinate basis for states.
"""

import numpy as np

from genbloch import (
    basis_element,
    chirality,
    extended_gammas,
    full_basis,
    generate_gammas,
    verify_algebra,
)

np.set_printoptions(precision=3, suppress=True, linewidth=120)

# --- generators -----------------------------------------------------------
# m = 1 starts from the first two Pauli matrices; every further step tensors
# the existing generators with sigma1 and appends I (x) sigma2, I (x) sigma3.
for m in (1, 2):
    gams = generate_gammas(m)
    print(f"m = {m}: {len(gams)} generators of dimension {2**m}")
    for i, g in enumerate(gams, start=1):
        print(f"  Gamma_{i} =\n{g}")

# the relations Gamma_i Gamma_j + Gamma_j Gamma_i = 2 delta_ij hold exactly,
# because every entry is 0, +-1 or +-i
g = generate_gammas(3)
worst = max(
    float(np.max(np.abs(g[i] @ g[j] + g[j] @ g[i] - (2.0 * np.eye(8) if i == j else 0))))
    for i in range(6) for j in range(6)
)
print(f"\nm = 3 anticommutator residual: {worst} (exact zero)")

# --- chirality ------------------------------------------------------------
# the phased product of all generators anticommutes with each of them and
# squares to the identity; appending it gives 2m+1 anticommuting elements
for m in (1, 2, 3):
    chi = chirality(m)
    gams = generate_gammas(m)
    anti = max(float(np.max(np.abs(chi @ g + g @ chi))) for g in gams)
    print(f"m = {m}: chirality anticommutes (residual {anti}), square = I:",
          np.array_equal(chi @ chi, np.eye(2 ** m) + 0j))
print("extended set sizes:", [len(extended_gammas(m)) for m in (1, 2, 3)])

# --- graded elements ------------------------------------------------------
# products over increasing multi-indices with the phase i^{k(k-1)/2} are
# hermitian; at m = 1 the full basis is I, sigma1, sigma2, -sigma3
b1 = full_basis(1)
for idx, el in b1.elements.items():
    print(f"m=1 element {idx}:\n{el}")

print("\nm=1 grade-2 element (the pseudoscalar direction):")
print(basis_element(1, (1, 2)))

# --- orthogonality certificate ---------------------------------------------
# trace(E_A E_B) = 2^m delta_AB across all pairs
for m in (2, 3):
    report = verify_algebra(full_basis(m, verify=False))
    print(f"\nm = {m} residual report: {report}")
