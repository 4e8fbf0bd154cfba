"""The boundary knot method proper.

The homogeneous part v is collocated on translates of the non-singular
general solution of the split operator (J0 for the Helmholtz split used
by every built-in problem); the dual-reciprocity particular solution u_p
absorbs the inhomogeneous term; the full field is u = v + u_p, evaluable
anywhere without meshes or integrals.

Two drivers are provided.  ``solve_boundary_only`` needs Dirichlet data at
every knot, which keeps even a nonlinear remaining operator explicit - one
interpolation solve plus one collocation solve, no iteration.  For linear
remaining operators, ``solve_mixed_linear`` couples the collocation rows
with the particular solution's dependence on the unknown boundary/interior
values and solves once for coefficients and unknown u values together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .drm import (
    DrmExpansion,
    interp_matrix,
    particular_matrix,
    solve_alpha,
    u_p_at,
)
from .geometry import BoundaryKnot, Point, dist, ellipse_knots
from .kernels import RadialKernel, helmholtz2d, mq_pair, normal_derivative
from .linalg import cond_estimate_1norm, lu_solve
from .problems import ProblemSpec

__all__ = [
    "UnsupportedConfigurationError",
    "BoundaryCondition",
    "BkmSolution",
    "Diagnostics",
    "assemble_bkm_matrix",
    "solve_boundary_only",
    "solve_mixed_linear",
    "evaluate",
]

_BC_KINDS = ("dirichlet", "neumann")

# Linear rho kinds expressible as a scalar multiple of u; these are the
# only ones a coupled (mixed/interior) solve can fold into the matrix.
_LINEAR_RHO_SCALE = {"zero": 0.0, "identity": 1.0, "scaled_identity": None}


class UnsupportedConfigurationError(ValueError):
    """The requested solve shape is outside this driver's contract."""


@dataclass(frozen=True)
class BoundaryCondition:
    """One knot's boundary condition: Dirichlet value or Neumann flux."""

    kind: str
    value: float

    def __post_init__(self) -> None:
        if self.kind not in _BC_KINDS:
            raise ValueError(f"unknown boundary kind {self.kind!r}, expected {_BC_KINDS}")


@dataclass(frozen=True)
class BkmSolution:
    """Collocation coefficients plus the particular-solution expansion."""

    lam: np.ndarray
    expansion: DrmExpansion
    kernel: RadialKernel
    knots: tuple[BoundaryKnot, ...]
    interior_u: np.ndarray | None = None


@dataclass(frozen=True)
class Diagnostics:
    """Conditioning and residual of the two dense solves."""

    cond_interp: float
    cond_bkm: float
    residual_inf: float


def assemble_bkm_matrix(
    knots: Sequence[BoundaryKnot],
    kernel: RadialKernel,
    bc: Sequence[BoundaryCondition],
) -> np.ndarray:
    """Collocation matrix: row i is kernel values (Dirichlet) or normal
    derivatives (Neumann) of the kernel centered at each knot.

    Raises
    ------
    ValueError
        If knots (nearly) coincide or bc does not match the knots.
    """
    n = len(knots)
    if n < 1:
        raise ValueError("at least one boundary knot is required")
    if len(bc) != n:
        raise ValueError(f"expected {n} boundary conditions, got {len(bc)}")
    positions = [k.position for k in knots]
    for i in range(n):
        for j in range(i + 1, n):
            if dist(positions[i], positions[j]) < 1e-12:
                raise ValueError(f"duplicate boundary knots at indices {i} and {j}")
    a = np.empty((n, n))
    for i, (knot, cond) in enumerate(zip(knots, bc)):
        for k, source in enumerate(positions):
            if cond.kind == "dirichlet":
                a[i, k] = kernel.eval(dist(knot.position, source))
            else:
                a[i, k] = normal_derivative(kernel, source, knot.position, knot.normal)
    return a


def _dirichlet_path(
    problem: ProblemSpec, knots: Sequence[BoundaryKnot], u_bc: np.ndarray
) -> tuple[BkmSolution, Diagnostics]:
    """Shared all-Dirichlet pipeline: DRM expansion, then one collocation solve."""
    knots = tuple(knots)
    positions = [k.position for k in knots]
    pair = mq_pair(problem.mq_shape_c)
    kernel = helmholtz2d(problem.split_wavenumber)
    f = np.array([problem.forcing(p) for p in positions], dtype=float)
    expansion = solve_alpha(positions, pair, f, problem.rho, u_bc)
    bc = [BoundaryCondition("dirichlet", float(v)) for v in u_bc]
    a = assemble_bkm_matrix(knots, kernel, bc)
    rhs = u_bc - u_p_at(expansion, positions)
    lam = lu_solve(a, rhs)
    diagnostics = Diagnostics(
        cond_interp=cond_estimate_1norm(interp_matrix(positions, pair)),
        cond_bkm=cond_estimate_1norm(a),
        residual_inf=float(np.abs(a @ lam - rhs).max()),
    )
    return BkmSolution(lam, expansion, kernel, knots), diagnostics


def solve_boundary_only(
    problem: ProblemSpec, n_knots: int
) -> tuple[BkmSolution, Diagnostics]:
    """Solve with Dirichlet data at every boundary knot and no interior knots.

    Because u is known on the whole collocation set, the rho term is
    evaluated explicitly - even the nonlinear Burger remainder - and the
    whole solve stays a single linear pass: one interpolation solve for
    alpha, one collocation solve for lambda.

    Raises
    ------
    SingularMatrixError
        Propagated from either dense solve.
    """
    knots = ellipse_knots(problem.ellipse, n_knots)
    u_bc = np.array([problem.dirichlet(k.position) for k in knots], dtype=float)
    return _dirichlet_path(problem, knots, u_bc)


def solve_mixed_linear(
    problem: ProblemSpec,
    boundary_knots: Sequence[BoundaryKnot],
    interior_points: Sequence[Point] = (),
    bc: Sequence[BoundaryCondition] | None = None,
) -> tuple[BkmSolution, Diagnostics]:
    """Coupled solve for mixed Dirichlet/Neumann boundaries and interior knots.

    Unknowns are ordered lambda first, then u at the non-Dirichlet boundary
    knots (in knot order), then u at interior knots, so the all-Dirichlet
    block coincides with the boundary-only matrix.  Each Dirichlet knot
    contributes a value row, each Neumann knot a flux row plus a
    representation-consistency row tying its unknown u to v + u_p, and each
    interior knot a representation row; the particular solution's linear
    dependence on the unknown u values is folded into the matrix, so there
    is no iteration.

    When ``bc`` is omitted, every knot gets a Dirichlet condition from the
    problem's boundary data.  With no Neumann knots and no interior points
    this reduces exactly to the boundary-only pipeline.

    Raises
    ------
    UnsupportedConfigurationError
        If the problem's rho is not linear (zero/identity/scaled_identity).
    SingularMatrixError
        Propagated if the coupled system is singular.
    """
    if problem.rho.kind not in _LINEAR_RHO_SCALE:
        raise UnsupportedConfigurationError(
            f"coupled solve needs a linear rho term, got {problem.rho.kind!r}; "
            f"use solve_boundary_only with full Dirichlet data instead"
        )
    knots = tuple(boundary_knots)
    interior = tuple(interior_points)
    if bc is None:
        bc = [BoundaryCondition("dirichlet", problem.dirichlet(k.position)) for k in knots]
    bc = list(bc)
    if len(bc) != len(knots):
        raise ValueError(f"expected {len(knots)} boundary conditions, got {len(bc)}")

    unknown_idx = [i for i, cond in enumerate(bc) if cond.kind == "neumann"]
    if not unknown_idx and not interior:
        u_bc = np.array([cond.value for cond in bc], dtype=float)
        return _dirichlet_path(problem, knots, u_bc)

    n = len(knots)
    n_unknown = len(unknown_idx)
    n_int = len(interior)
    positions = [k.position for k in knots]
    all_points = positions + list(interior)
    pair = mq_pair(problem.mq_shape_c)
    kernel = helmholtz2d(problem.split_wavenumber)

    rho_scale = _LINEAR_RHO_SCALE[problem.rho.kind]
    if rho_scale is None:
        rho_scale = problem.rho.scale

    # u over all points is affine in the unknown vector w: u = d + P w.
    d = np.zeros(n + n_int)
    for i, cond in enumerate(bc):
        if cond.kind == "dirichlet":
            d[i] = cond.value
    p_map = np.zeros((n + n_int, n_unknown + n_int))
    for col, i in enumerate(unknown_idx):
        p_map[i, col] = 1.0
    for l in range(n_int):
        p_map[n + l, n_unknown + l] = 1.0

    # alpha = A_phi^-1 (f + rho_scale u) = alpha0 + K w, solved in one pass.
    a_phi = interp_matrix(all_points, pair)
    f = np.array([problem.forcing(p) for p in all_points], dtype=float)
    stacked = np.column_stack([f + rho_scale * d, rho_scale * p_map])
    solved = lu_solve(a_phi, stacked)
    alpha0 = solved[:, 0]
    alpha_of_w = solved[:, 1:]

    # Collocation rows of the kernel and u_p at every point; flux rows at knots.
    j_rows = np.empty((n + n_int, n))
    for i, point in enumerate(all_points):
        for k, source in enumerate(positions):
            j_rows[i, k] = kernel.eval(dist(point, source))
    phi_rows = particular_matrix(all_points, all_points, pair)

    def flux_rows(i: int) -> tuple[np.ndarray, np.ndarray]:
        knot = knots[i]
        dj = np.array(
            [normal_derivative(kernel, source, knot.position, knot.normal) for source in positions]
        )
        dphi = np.array(
            [
                normal_derivative(pair.phi_hat, source, knot.position, knot.normal)
                for source in all_points
            ]
        )
        return dj, dphi

    size = n + n_unknown + n_int
    system = np.zeros((size, size))
    rhs = np.zeros(size)
    row = 0
    for i, cond in enumerate(bc):
        if cond.kind == "dirichlet":
            system[row, :n] = j_rows[i]
            system[row, n:] = phi_rows[i] @ alpha_of_w
            rhs[row] = cond.value - phi_rows[i] @ alpha0
        else:
            dj, dphi = flux_rows(i)
            system[row, :n] = dj
            system[row, n:] = dphi @ alpha_of_w
            rhs[row] = cond.value - dphi @ alpha0
        row += 1
    # Representation consistency closes the system: u at each unknown point
    # must equal v + u_p there.
    for col, i in enumerate(unknown_idx):
        system[row, :n] = j_rows[i]
        system[row, n:] = phi_rows[i] @ alpha_of_w
        system[row, n + col] -= 1.0
        rhs[row] = -(phi_rows[i] @ alpha0)
        row += 1
    for l in range(n_int):
        i = n + l
        system[row, :n] = j_rows[i]
        system[row, n:] = phi_rows[i] @ alpha_of_w
        system[row, n + n_unknown + l] -= 1.0
        rhs[row] = -(phi_rows[i] @ alpha0)
        row += 1

    solution = lu_solve(system, rhs)
    lam = solution[:n]
    w = solution[n:]
    alpha = alpha0 + alpha_of_w @ w
    expansion = DrmExpansion(tuple(all_points), pair, alpha)
    interior_u = w[n_unknown:].copy() if n_int else None
    diagnostics = Diagnostics(
        cond_interp=cond_estimate_1norm(a_phi),
        cond_bkm=cond_estimate_1norm(system),
        residual_inf=float(np.abs(system @ solution - rhs).max()),
    )
    return BkmSolution(lam, expansion, kernel, knots, interior_u), diagnostics


def evaluate(sol: BkmSolution, points: Sequence[Point]) -> np.ndarray:
    """Evaluate u = v + u_p = sum_k lambda_k kernel(||x - x_k||) + u_p(x)."""
    points = list(points)
    v = np.empty((len(points), len(sol.knots)))
    for i, p in enumerate(points):
        for k, knot in enumerate(sol.knots):
            v[i, k] = sol.kernel.eval(dist(p, knot.position))
    return v @ sol.lam + u_p_at(sol.expansion, points)
