"""Dual-reciprocity particular solutions.

The inhomogeneous term f + rho{u} is interpolated at the knots with the
operator image ``phi`` of a kernel pair; the same coefficients alpha then
sum the approximate particular solutions ``phi_hat``, so that applying the
operator to u_p reproduces the interpolant exactly at the knots.  The
module also hosts the rho pathways (how the remaining operator acts on an
interpolant of u) and a constrained RBF interpolation driver used with
kernels that need a side condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import Point, dist
from .kernels import KernelPair, RadialKernel, normal_derivative
from .linalg import lu_solve

__all__ = [
    "RhoSpec",
    "DrmExpansion",
    "RbfInterpolant",
    "interp_matrix",
    "particular_matrix",
    "rho_matrix",
    "solve_alpha",
    "u_p_at",
    "u_p_normal_at",
    "rbf_interpolate",
]

_RHO_KINDS = ("zero", "identity", "scaled_identity", "burger")

# Radial interpolation matrices are exactly rank-deficient under repeated
# knots, so near-coincident knots are rejected outright.
_DUPLICATE_TOL = 1e-12


@dataclass(frozen=True)
class RhoSpec:
    """The remaining operator rho{u} after the split L{u} = f + rho{u}.

    ``zero`` drops the term, ``identity`` keeps u itself,
    ``scaled_identity`` keeps scale*u, and ``burger`` keeps u - u_x * u
    (the nonlinear remainder of the Burger split), evaluated through the
    interpolant of u.
    """

    kind: str
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _RHO_KINDS:
            raise ValueError(f"unknown rho kind {self.kind!r}, expected {_RHO_KINDS}")

    @classmethod
    def zero(cls) -> "RhoSpec":
        return cls("zero")

    @classmethod
    def identity(cls) -> "RhoSpec":
        return cls("identity")

    @classmethod
    def scaled_identity(cls, scale: float) -> "RhoSpec":
        return cls("scaled_identity", float(scale))

    @classmethod
    def burger(cls) -> "RhoSpec":
        return cls("burger")


@dataclass(frozen=True)
class DrmExpansion:
    """Coefficients alpha over a knot set, summing phi_hat into u_p."""

    knots: tuple[Point, ...]
    pair: KernelPair
    alpha: np.ndarray


def _check_distinct(points: Sequence[Point]) -> None:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if dist(points[i], points[j]) < _DUPLICATE_TOL:
                raise ValueError(
                    f"duplicate knots at indices {i} and {j}: radial interpolation "
                    f"matrix would be rank-deficient"
                )


def _kernel_matrix(
    rows: Sequence[Point], cols: Sequence[Point], kernel: RadialKernel
) -> np.ndarray:
    out = np.empty((len(rows), len(cols)))
    for i, p in enumerate(rows):
        for j, q in enumerate(cols):
            out[i, j] = kernel.eval(dist(p, q))
    return out


def interp_matrix(knots: Sequence[Point], pair: KernelPair) -> np.ndarray:
    """Symmetric interpolation matrix A_phi with entries phi(||x_i - x_j||).

    Raises
    ------
    ValueError
        If no knots are given or two knots (nearly) coincide.
    """
    if len(knots) == 0:
        raise ValueError("at least one knot is required")
    _check_distinct(knots)
    return _kernel_matrix(knots, knots, pair.phi)


def particular_matrix(
    eval_points: Sequence[Point], knots: Sequence[Point], pair: KernelPair
) -> np.ndarray:
    """Evaluation matrix with entries phi_hat(||x - x_j||), rows = eval points."""
    return _kernel_matrix(eval_points, knots, pair.phi_hat)


def _x_derivative_matrix(knots: Sequence[Point], kernel: RadialKernel) -> np.ndarray:
    """Entries d/dx_i kernel(||x_i - x_j||) = kernel'(r) (x_i - x_j)_x / r, diagonal 0."""
    n = len(knots)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            r = dist(knots[i], knots[j])
            out[i, j] = kernel.deriv(r) * (knots[i].x - knots[j].x) / r
    return out


def rho_matrix(
    rho: RhoSpec,
    knots: Sequence[Point],
    pair: KernelPair,
    u_at_knots: Sequence[float] | None,
) -> np.ndarray:
    """Evaluate the rho term at the knots from known u values.

    For the linear kinds this is 0, u, or scale*u directly (the identity
    pathway is exact because interpolating u and evaluating the interpolant
    back at the knots is the identity).  For ``burger`` the u_x factor is
    taken from the phi-interpolant of u: u - (D_x A_phi^-1 u) * u with D_x
    the x-derivative evaluation matrix of phi.

    Raises
    ------
    ValueError
        If u values are required but missing.
    SingularMatrixError
        Propagated from a singular interpolation matrix.
    """
    n = len(knots)
    if rho.kind == "zero":
        return np.zeros(n)
    if u_at_knots is None:
        raise ValueError(f"rho kind {rho.kind!r} needs u values at the knots")
    u = np.asarray(u_at_knots, dtype=float)
    if u.shape != (n,):
        raise ValueError(f"expected {n} u values, got shape {u.shape}")
    if rho.kind == "identity":
        return u.copy()
    if rho.kind == "scaled_identity":
        return rho.scale * u
    a_phi = interp_matrix(knots, pair)
    beta = lu_solve(a_phi, u)
    u_x = _x_derivative_matrix(knots, pair.phi) @ beta
    return u - u_x * u


def solve_alpha(
    knots: Sequence[Point],
    pair: KernelPair,
    f_at_knots: Sequence[float],
    rho: RhoSpec,
    u_at_knots: Sequence[float] | None = None,
) -> DrmExpansion:
    """Solve A_phi alpha = f + rho-term for the particular-solution coefficients."""
    knots = tuple(knots)
    a_phi = interp_matrix(knots, pair)
    rhs = np.asarray(f_at_knots, dtype=float) + rho_matrix(rho, knots, pair, u_at_knots)
    alpha = lu_solve(a_phi, rhs)
    return DrmExpansion(knots, pair, alpha)


def u_p_at(expansion: DrmExpansion, points: Sequence[Point]) -> np.ndarray:
    """Particular solution u_p = sum_j alpha_j phi_hat(||x - x_j||) at the points."""
    return particular_matrix(points, expansion.knots, expansion.pair) @ expansion.alpha


def u_p_normal_at(expansion: DrmExpansion, boundary_knots) -> np.ndarray:
    """Outward-normal derivative of u_p at boundary knots (0-limit at r = 0)."""
    phi_hat = expansion.pair.phi_hat
    out = np.empty(len(boundary_knots))
    for i, knot in enumerate(boundary_knots):
        total = 0.0
        for alpha_j, source in zip(expansion.alpha, expansion.knots):
            total += alpha_j * normal_derivative(phi_hat, source, knot.position, knot.normal)
        out[i] = total
    return out


@dataclass(frozen=True)
class RbfInterpolant:
    """RBF interpolant sum_k beta_k kernel(||x - x_k||) + offset.

    ``offset`` is the coefficient of the constant constraint function when
    the interpolation was solved with the side condition sum_k beta_k = 0;
    it is 0 otherwise.
    """

    points: tuple[Point, ...]
    kernel: RadialKernel
    beta: np.ndarray
    offset: float

    def at(self, eval_points: Sequence[Point]) -> np.ndarray:
        values = _kernel_matrix(eval_points, self.points, self.kernel) @ self.beta
        return values + self.offset


def rbf_interpolate(
    points: Sequence[Point],
    values: Sequence[float],
    kernel: RadialKernel,
    side_condition: bool = True,
) -> RbfInterpolant:
    """Interpolate scattered data with a radial kernel.

    With ``side_condition`` the representation is augmented by a constant
    term and the constraint sum_k beta_k = 0 (one extra row and column),
    which restores solvability for conditionally positive definite kernels
    such as the modified thin plate spline.

    Raises
    ------
    ValueError
        If points and values disagree in length or knots coincide.
    """
    points = tuple(points)
    vals = np.asarray(values, dtype=float)
    if vals.shape != (len(points),):
        raise ValueError(f"expected {len(points)} values, got shape {vals.shape}")
    _check_distinct(points)
    a = _kernel_matrix(points, points, kernel)
    if not side_condition:
        beta = lu_solve(a, vals)
        return RbfInterpolant(points, kernel, beta, 0.0)
    n = len(points)
    system = np.zeros((n + 1, n + 1))
    system[:n, :n] = a
    system[:n, n] = 1.0
    system[n, :n] = 1.0
    rhs = np.concatenate([vals, [0.0]])
    solution = lu_solve(system, rhs)
    return RbfInterpolant(points, kernel, solution[:n], float(solution[n]))
