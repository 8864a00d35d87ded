"""Admissibility of parameter configurations: generalized Bloch spheres.

Vector configurations are admissible on the unit ball of the (2m- or
2m+1-dimensional) coordinate norm.  Grade-2 configurations at m = 2 are
governed by the two-invariant region

    max((r + 1)^2 - 2, 0) <= T4 <= 2 r^2,     0 <= r <= 1,

equivalently, in the variable z = 1/2 - sqrt(2 r^2 - T4), the wedge
|r - 1/2| <= z <= 1/2.  The three-parameter slice (G_12, G_34, G_23) =
(x, y, z) is the intersection of two orthogonal elliptic tunnels
alpha_pm = sqrt((x +- y)^2 + z^2) <= 1.  Beyond pure tensor
configurations, positivity of any hermitian unit-trace matrix is decided
from its characteristic polynomial: writing P(lambda) =
sum_i (-1)^i a_i lambda^i, the state is positive semidefinite exactly when
every a_i is nonnegative (all roots are real, so the sign rule is exact).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .coords import AntisymTensor, antisym, tensor_config
from .errors import (
    BadResolution,
    GradeMismatch,
    GradeOutOfRange,
    NegativeDiscriminant,
    ResourceLimit,
    UnsupportedM,
)
from .invariants import (
    InvariantSet,
    dual_tensor,
    pfaffian,
    trace_T4,
    two_tensor_invariants,
    vector_invariants,
)
from .linalg import hermitian_eigenvalues
from .spectra import quartet_eigenvalues

DEFAULT_TOL = 1e-9
ORACLE_TOL = 1e-9


@dataclass(frozen=True)
class DomainVerdict:
    """Admissibility decision with the active/violated constraint named."""

    admissible: bool
    boundary: bool
    violated: str | None
    invariants_used: InvariantSet | None
    tol: float

    def __post_init__(self):
        if self.admissible and self.violated is not None:
            raise ValueError("admissible verdicts cannot carry a violated constraint")

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "boundary": self.boundary,
            "violated": self.violated,
            "invariants_used": self.invariants_used.to_dict() if self.invariants_used else None,
            "tol": self.tol,
        }


def vector_domain(g1: AntisymTensor, pseudoscalar: float | None = None,
                  tol: float = DEFAULT_TOL) -> DomainVerdict:
    """Bloch-ball membership: norm of (vector, pseudoscalar) at most 1."""
    if g1.k != 1:
        raise GradeMismatch("vector_domain needs a grade-1 tensor")
    inv = vector_invariants(g1, pseudoscalar)
    norm = math.sqrt(inv.r)
    admissible = norm <= 1.0 + tol
    return DomainVerdict(
        admissible=admissible,
        boundary=admissible and abs(norm - 1.0) <= tol,
        violated=None if admissible else "bloch_ball",
        invariants_used=inv,
        tol=tol,
    )


def rT4_domain(r: float, t4: float, tol: float = DEFAULT_TOL) -> DomainVerdict:
    """The (r, T4) region for grade-2 configurations at m = 2."""
    inv = InvariantSet(r=max(r, 0.0), T4=max(t4, 0.0))
    lower = max((r + 1.0) ** 2 - 2.0, 0.0)
    upper = 2.0 * r * r
    violated = None
    if r < -tol:
        violated = "r_negative"
    elif r > 1.0 + tol:
        violated = "r_upper"
    elif t4 > upper + tol:
        violated = "T4_upper"
    elif t4 < lower - tol:
        violated = "T4_lower"
    admissible = violated is None
    boundary = admissible and (
        abs(r - 1.0) <= tol or abs(t4 - upper) <= tol or abs(t4 - lower) <= tol
    )
    return DomainVerdict(admissible=admissible, boundary=boundary, violated=violated,
                         invariants_used=inv, tol=tol)


def z_variable(r: float, t4: float) -> float:
    """z = 1/2 - sqrt(2 r^2 - T4); raises if the discriminant is genuinely negative."""
    disc = 2.0 * r * r - t4
    if disc < -1e-12:
        raise NegativeDiscriminant(f"2 r^2 - T4 = {disc} < 0")
    return 0.5 - math.sqrt(max(disc, 0.0))


def z_from_coords(g2: AntisymTensor) -> float:
    """z computed directly from the tensor components (not through r, T4).

    side 4: z = 1/2 - 2 |G_12 G_34 - G_13 G_24 + G_14 G_23|  (the Pfaffian)
    side 6: z = 1/2 - sqrt(sum_{i<j} Ad_ij^2) / 4 via the quadratic dual.
    """
    if g2.k != 2:
        raise GradeMismatch("z_from_coords needs a grade-2 tensor")
    if g2.side == 4:
        return 0.5 - 2.0 * abs(pfaffian(g2.as_matrix()))
    if g2.side == 6:
        dual = dual_tensor(g2)
        return 0.5 - math.sqrt(dual.norm_sq()) / 4.0
    raise UnsupportedM(f"z_from_coords supports sides 4 and 6, got {g2.side}")


def tunnel_membership(x: float, y: float, z: float, tol: float = DEFAULT_TOL) -> DomainVerdict:
    """Intersection of the two elliptic tunnels alpha_pm <= 1."""
    ap = math.hypot(x + y, z)
    am = math.hypot(x - y, z)
    r = x * x + y * y + z * z
    inv = InvariantSet(r=r, T4=_tunnel_t4(x, y, z))
    violated = None
    if ap > 1.0 + tol:
        violated = "tunnel_plus"
    elif am > 1.0 + tol:
        violated = "tunnel_minus"
    admissible = violated is None
    boundary = admissible and (abs(ap - 1.0) <= tol or abs(am - 1.0) <= tol)
    return DomainVerdict(admissible=admissible, boundary=boundary, violated=violated,
                         invariants_used=inv, tol=tol)


def _tunnel_t4(x: float, y: float, z: float) -> float:
    g = antisym(2, 2, {(1, 2): x, (3, 4): y, (2, 3): z})
    return trace_T4(g)


def descartes_positivity(poly, tol: float = DEFAULT_TOL) -> DomainVerdict:
    """Sign-rule verdict for a real-rooted characteristic polynomial.

    After making the polynomial monic, a_i = (-1)^{n-i} c_i are the
    elementary symmetric functions of the roots; the state is positive
    semidefinite iff all a_i >= 0 (> 0 strictly for definiteness).  The
    test runs in the rescaled variable z = n * lambda, which places the
    roots of an n-dimensional density matrix at order one, so the -tol
    relaxation admits boundary rank-deficient states while anything with
    an eigenvalue meaningfully below zero still fails.  (On the raw
    lambda coefficients an absolute tolerance would be useless: the
    determinant compresses a clearly negative eigenvalue by the product
    of the remaining ones, each about 1/n.)
    """
    c = np.asarray(poly, dtype=float)
    if c.ndim != 1 or c.size < 2 or c[-1] == 0.0:
        raise GradeMismatch("expected polynomial coefficients with nonzero leading term")
    q = c / c[-1]
    n = q.size - 1
    a = np.array([(-1.0) ** (n - i) * q[i] * float(n) ** (n - i) for i in range(n + 1)])
    violated = None
    for i in range(n + 1):
        if a[i] < -tol:
            violated = f"coeff_{i}"
            break
    admissible = violated is None
    boundary = admissible and bool(np.min(a) <= tol)
    return DomainVerdict(admissible=admissible, boundary=boundary, violated=violated,
                         invariants_used=None, tol=tol)


def closed_form_min_eigenvalue(m: int, k: int, tensor: AntisymTensor,
                               pseudoscalar: float | None = None) -> float:
    """Smallest closed-form eigenvalue of a pure tensor configuration."""
    if k == 1:
        norm = math.sqrt(vector_invariants(tensor, pseudoscalar).r)
        return (1.0 - norm) / 2 ** m
    if k == 2:
        return float(np.min(quartet_eigenvalues(m, two_tensor_invariants(tensor))))
    raise GradeOutOfRange("closed forms exist for grades 1 and 2 only")


@dataclass(frozen=True)
class SampleRecord:
    index: int
    coefficients: tuple
    closed_admissible: bool
    oracle_admissible: bool
    boundary_margin: float


@dataclass(frozen=True)
class SampleSet:
    m: int
    k: int
    n: int
    seed: int
    box: float
    records: list = field(repr=False)

    def disagreements(self, margin: float = 1e-8) -> list:
        return [rec for rec in self.records
                if rec.closed_admissible != rec.oracle_admissible
                and rec.boundary_margin > margin]

    def admissible_fraction(self) -> float:
        if not self.records:
            return 0.0
        return sum(r.closed_admissible for r in self.records) / len(self.records)


def sample_domain(m: int, k: int, n: int, seed: int, box: float = 1.2) -> SampleSet:
    """Monte-Carlo atlas: n grade-k tensors uniform in [-box, box]^dim, each
    classified by the closed-form domain and by the eigenvalue oracle."""
    if k not in (1, 2):
        raise GradeOutOfRange("sampling covers tensor grades 1 and 2")
    if k == 2 and m not in (2, 3):
        raise UnsupportedM("grade-2 closed forms are sampled at m = 2 and 3")
    if n < 0 or n > 10 ** 6:
        raise ResourceLimit(f"sample count {n} out of range")
    side = 2 * m
    keys = ([(i,) for i in range(1, side + 1)] if k == 1
            else [(i, j) for i in range(1, side + 1) for j in range(i + 1, side + 1)])
    rng = np.random.default_rng(seed)
    draws = rng.uniform(-box, box, size=(n, len(keys)))
    records = []
    for idx in range(n):
        vals = {key: float(v) for key, v in zip(keys, draws[idx])}
        tensor = AntisymTensor(m, k, side, vals)
        min_closed = closed_form_min_eigenvalue(m, k, tensor)
        closed_ok = min_closed >= -ORACLE_TOL
        rho = tensor_config(m, k, tensor)
        oracle_ok = float(np.min(hermitian_eigenvalues(rho))) >= -ORACLE_TOL
        records.append(SampleRecord(
            index=idx,
            coefficients=tuple(float(v) for v in draws[idx]),
            closed_admissible=bool(closed_ok),
            oracle_admissible=bool(oracle_ok),
            boundary_margin=abs(min_closed),
        ))
    return SampleSet(m=m, k=k, n=n, seed=seed, box=box, records=records)


def _fig1(resolution: int) -> dict:
    rs = np.linspace(0.0, 1.0, resolution)
    t4s = np.linspace(0.0, 2.0, resolution)
    grid = []
    for r in rs:
        for t4 in t4s:
            verdict = rT4_domain(float(r), float(t4))
            grid.append((float(r), float(t4), verdict.admissible, verdict.boundary))
    curve_upper = [(float(r), float(2.0 * r * r)) for r in rs]
    lo = math.sqrt(2.0) - 1.0
    curve_lower = [(float(r), float((r + 1.0) ** 2 - 2.0))
                   for r in np.linspace(lo, 1.0, resolution)]
    return {
        "which": "fig1",
        "resolution": resolution,
        "grid_columns": ["r", "T4", "admissible", "on_boundary"],
        "grid": grid,
        "curve_upper": curve_upper,
        "curve_lower": curve_lower,
    }


def _tunnel_surface_points(kind: str, level: float, resolution: int, box: float):
    """Parametric points of alpha_kind = level inside the box."""
    thetas = np.linspace(0.0, 2.0 * math.pi, 2 * resolution, endpoint=False)
    ts = np.linspace(-2.0 * box, 2.0 * box, 3 * resolution + 1)
    pts = []
    for theta in thetas:
        u = level * math.cos(theta)   # x + y (plus) or x - y (minus)
        z = level * math.sin(theta)
        for t in ts:
            if kind == "alpha_plus":
                x, y = (u + t) / 2.0, (u - t) / 2.0
            else:
                x, y = (t + u) / 2.0, (t - u) / 2.0
            if abs(x) <= box and abs(y) <= box and abs(z) <= box:
                pts.append((float(x), float(y), float(z)))
    return pts


def _fig2(resolution: int) -> dict:
    rows = []
    for kind in ("alpha_plus", "alpha_minus"):
        for x, y, z in _tunnel_surface_points(kind, 1.0, resolution, box=1.5):
            rows.append((x, y, z, f"{kind}=1"))
    return {
        "which": "fig2",
        "resolution": resolution,
        "columns": ["x", "y", "z", "surface_id"],
        "points": rows,
    }


def _fig3(resolution: int, paper_cube: bool) -> dict:
    surfaces = [("alpha_plus", 1.0), ("alpha_plus", 0.1),
                ("alpha_minus", 1.0), ("alpha_minus", 0.01)]
    rows = []
    for kind, level in surfaces:
        tag = f"{kind}={level:g}"
        for x, y, z in _tunnel_surface_points(kind, level, resolution, box=1.5):
            if not tunnel_membership(x, y, z).admissible:
                continue
            if paper_cube and not (-1e-12 <= x <= 1 + 1e-12
                                   and -1e-12 <= y <= 1 + 1e-12
                                   and -1e-12 <= z <= 1 + 1e-12):
                continue
            rows.append((x, y, z, tag))
    return {
        "which": "fig3",
        "resolution": resolution,
        "paper_cube": paper_cube,
        "columns": ["x", "y", "z", "surface_id"],
        "points": rows,
    }


def figure_data(which: str, resolution: int, paper_cube: bool = False) -> dict:
    """Datasets behind the three diagnostic figures.

    fig1: (r, T4) grid with verdicts plus the two boundary curves.
    fig2: point clouds of the iso-surfaces alpha_pm = 1 over [-1.5, 1.5]^3.
    fig3: surface points alpha_plus in {1, 0.1}, alpha_minus in {1, 0.01}
          clipped to the admissible intersection (optionally to the paper's
          unit cube).
    """
    if not isinstance(resolution, (int, np.integer)) or resolution < 2:
        raise BadResolution(f"resolution must be an integer >= 2, got {resolution!r}")
    if which == "fig1":
        return _fig1(int(resolution))
    if which == "fig2":
        return _fig2(int(resolution))
    if which == "fig3":
        return _fig3(int(resolution), paper_cube)
    raise BadResolution(f"unknown figure {which!r}")
