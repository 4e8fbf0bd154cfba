"""Radial kernel catalog for boundary knot collocation.

Houses the non-singular general solutions of the common 2D/3D operators
(Helmholtz and modified Helmholtz in the plane and in space, biharmonic
pairs, steady convection-diffusion), the multiquadric pair used to build
dual-reciprocity particular solutions, the general-solution RBF factory
with its pre-wavelet variant, and the singular log pair used in
completeness studies.

Every radial kernel carries its analytic radial derivative so collocation
rows never fall back to numerical differentiation; the lone exception is
the factory's modes whose derivative would need second derivatives of the
wrapped kernel, which use a high-order finite-difference stencil instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .geometry import Point, dist
from .specfun import bessel_i0, bessel_i1, bessel_j0, bessel_j1

__all__ = [
    "RadialKernel",
    "DisplacementKernel",
    "KernelPair",
    "helmholtz2d",
    "modified_helmholtz2d",
    "helmholtz3d",
    "modified_helmholtz3d",
    "biharmonic2d",
    "biharmonic3d",
    "convection_diffusion2d",
    "mq_pair",
    "gsr_kernel",
    "biharmonic_mfs_pair",
    "normal_derivative",
]

_GSR_MODES = ("plain", "forcing", "dirichlet", "neumann")


@dataclass(frozen=True)
class RadialKernel:
    """A radial function r -> value together with its radial derivative.

    Attributes
    ----------
    eval : callable
        Kernel value at radius r >= 0.
    deriv : callable
        d(eval)/dr at radius r >= 0.
    label : str
        Short identifier used in diagnostics and CLI output.
    params : mapping
        Named parameters (wavenumber, shape, exponent) for reporting.
    """

    eval: Callable[[float], float]
    deriv: Callable[[float], float]
    label: str
    params: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class DisplacementKernel:
    """A kernel of the displacement vector, not only of its norm."""

    eval: Callable[[tuple[float, float]], float]
    label: str
    params: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class KernelPair:
    """Approximate particular solution ``phi_hat`` and its operator image ``phi``.

    ``phi`` is (lap + 1){phi_hat}; right-hand sides are interpolated with
    ``phi`` while particular solutions are summed with ``phi_hat``, so that
    applying the operator to the particular solution reproduces the
    interpolant exactly.
    """

    phi_hat: RadialKernel
    phi: RadialKernel


def _require_positive(value: float, name: str) -> float:
    value = float(value)
    if value <= 0.0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def helmholtz2d(lam: float) -> RadialKernel:
    """Non-singular general solution J0(lam*r) of the 2D operator lap + lam^2."""
    lam = _require_positive(lam, "wavenumber")

    def ev(r: float) -> float:
        return bessel_j0(lam * r)

    def dv(r: float) -> float:
        return -lam * bessel_j1(lam * r)

    return RadialKernel(ev, dv, "j0", {"lambda": lam})


def modified_helmholtz2d(lam: float) -> RadialKernel:
    """Non-singular general solution I0(lam*r) of the 2D operator lap - lam^2."""
    lam = _require_positive(lam, "wavenumber")

    def ev(r: float) -> float:
        return bessel_i0(lam * r)

    def dv(r: float) -> float:
        return lam * bessel_i1(lam * r)

    return RadialKernel(ev, dv, "i0", {"lambda": lam})


def _sinc(s: float) -> float:
    """sin(s)/s with the removable singularity filled in."""
    if s < 1e-4:
        s2 = s * s
        return 1.0 - s2 / 6.0 + s2 * s2 / 120.0
    return math.sin(s) / s


def _dsinc(s: float) -> float:
    """d/ds of sin(s)/s; series near 0 avoids cancellation."""
    if s < 2e-2:
        s2 = s * s
        return s * (-1.0 / 3.0 + s2 / 30.0 - s2 * s2 / 840.0)
    return (s * math.cos(s) - math.sin(s)) / (s * s)


def _sinhc(s: float) -> float:
    """sinh(s)/s with the removable singularity filled in."""
    if s < 1e-4:
        s2 = s * s
        return 1.0 + s2 / 6.0 + s2 * s2 / 120.0
    return math.sinh(s) / s


def _dsinhc(s: float) -> float:
    """d/ds of sinh(s)/s; series near 0 avoids cancellation."""
    if s < 2e-2:
        s2 = s * s
        return s * (1.0 / 3.0 + s2 / 30.0 + s2 * s2 / 840.0)
    return (s * math.cosh(s) - math.sinh(s)) / (s * s)


def helmholtz3d(lam: float) -> RadialKernel:
    """Non-singular general solution sin(lam*r)/(lam*r) of the 3D operator lap + lam^2."""
    lam = _require_positive(lam, "wavenumber")

    def ev(r: float) -> float:
        return _sinc(lam * r)

    def dv(r: float) -> float:
        return lam * _dsinc(lam * r)

    return RadialKernel(ev, dv, "sinc3d", {"lambda": lam})


def modified_helmholtz3d(lam: float) -> RadialKernel:
    """Non-singular general solution sinh(lam*r)/(lam*r) of the 3D operator lap - lam^2."""
    lam = _require_positive(lam, "wavenumber")

    def ev(r: float) -> float:
        return _sinhc(lam * r)

    def dv(r: float) -> float:
        return lam * _dsinhc(lam * r)

    return RadialKernel(ev, dv, "sinh3d", {"lambda": lam})


def biharmonic2d(lam: float) -> tuple[RadialKernel, RadialKernel]:
    """Independent pair {J0(lam*r), I0(lam*r)} spanning 2D biharmonic solutions.

    Each component is annihilated by one factor of
    lap^2 - lam^4 = (lap + lam^2)(lap - lam^2), so the pair spans the
    non-singular solutions of the fourth-order operator.  Downstream
    collocation allocates two coefficient sets per knot.
    """
    return helmholtz2d(lam), modified_helmholtz2d(lam)


def biharmonic3d(lam: float) -> tuple[RadialKernel, RadialKernel]:
    """Independent pair {sin(lam*r)/(lam*r), sinh(lam*r)/(lam*r)} for 3D biharmonics."""
    return helmholtz3d(lam), modified_helmholtz3d(lam)


def convection_diffusion2d(
    D: float, v: tuple[float, float], k: float
) -> DisplacementKernel:
    """Non-singular general solution of 2D steady convection-diffusion.

    eval(delta) = exp(-(v . delta) / (2D)) * J0(mu * ||delta||) with
    mu = sqrt((|v|/2D)^2 + k/D), where ``delta`` is the displacement
    response - source.

    Raises
    ------
    ValueError
        If D <= 0 or the wavenumber would be imaginary (mu^2 < 0).
    """
    D = _require_positive(D, "diffusivity")
    vx, vy = float(v[0]), float(v[1])
    half = math.hypot(vx, vy) / (2.0 * D)
    mu_sq = half * half + k / D
    if mu_sq < 0.0:
        raise ValueError(f"imaginary wavenumber out of scope: mu^2 = {mu_sq}")
    mu = math.sqrt(mu_sq)

    def ev(delta: tuple[float, float]) -> float:
        dx, dy = delta
        drift = math.exp(-(vx * dx + vy * dy) / (2.0 * D))
        return drift * bessel_j0(mu * math.hypot(dx, dy))

    return DisplacementKernel(
        ev, "convection2d", {"D": D, "vx": vx, "vy": vy, "k": k, "mu": mu}
    )


def mq_pair(c: float) -> KernelPair:
    """Multiquadric pair: phi_hat = (r^2+c^2)^(3/2) and phi = (lap + 1){phi_hat}.

    The 2D radial Laplacian of phi_hat is 6*sqrt(r^2+c^2) + 3r^2/sqrt(r^2+c^2),
    so phi(r) = 6*sqrt(r^2+c^2) + 3r^2/sqrt(r^2+c^2) + (r^2+c^2)^(3/2).

    Raises
    ------
    ValueError
        If the shape parameter ``c`` <= 0.
    """
    c = _require_positive(c, "shape parameter")
    c_sq = c * c

    def hat(r: float) -> float:
        return (r * r + c_sq) ** 1.5

    def hat_d(r: float) -> float:
        return 3.0 * r * math.sqrt(r * r + c_sq)

    def phi(r: float) -> float:
        s = math.sqrt(r * r + c_sq)
        return 6.0 * s + 3.0 * r * r / s + s * s * s

    def phi_d(r: float) -> float:
        s = math.sqrt(r * r + c_sq)
        return 12.0 * r / s - 3.0 * r**3 / s**3 + 3.0 * r * s

    return KernelPair(
        RadialKernel(hat, hat_d, "mq_phi_hat", {"c": c}),
        RadialKernel(phi, phi_d, "mq_phi", {"c": c}),
    )


def _fd_radial_deriv(f: Callable[[float], float], r: float) -> float:
    """Fourth-order central derivative of f at r, clamped away from r < 0."""
    h = 1e-5 * max(1.0, abs(r))
    if r < 2.0 * h:
        h = max(r / 4.0, 1e-12)
    return (f(r - 2 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2 * h)) / (12.0 * h)


def gsr_kernel(
    g: RadialKernel,
    m: int = 0,
    mode: str = "plain",
    *,
    value: float = 1.0,
    rho: Callable[[float], float] | None = None,
    prewavelet_c: float | None = None,
) -> RadialKernel:
    """Build an RBF from a general solution ``g`` of the target operator.

    Parameters
    ----------
    g : RadialKernel
        General solution of the operator the RBF should serve.
    m : int
        Smoothing exponent; the kernel carries an r^(2m) factor.  With
        m >= 1 the factor crushes any logarithmic singularity of ``g``,
        and eval/deriv are defined as 0 at r = 0 by that limit.
    mode : str
        ``plain``      -> r^(2m) g(r)
        ``forcing``    -> [value + rho(r)] r^(2m) g(r)   (interior source)
        ``dirichlet``  -> value * r^(2m) dg/dr           (boundary source)
        ``neumann``    -> value * r^(2m) g(r)            (boundary source)
        ``value`` is the source-location factor (forcing term, Dirichlet
        datum, or Neumann datum evaluated at the source point); ``rho`` is
        the optional remaining-operator image of g, included only when
        supplied.
    prewavelet_c : float, optional
        When set, every occurrence of r is replaced by sqrt(r^2 + c^2),
        turning the kernel into its pre-wavelet variant.

    Returns
    -------
    RadialKernel
        With m = 0, plain mode and no pre-wavelet, ``g`` itself.

    Raises
    ------
    ValueError
        If ``m`` < 0 or ``mode`` is unknown.
    """
    if m < 0:
        raise ValueError(f"smoothing exponent must be >= 0, got m={m}")
    if mode not in _GSR_MODES:
        raise ValueError(f"unknown gsr mode {mode!r}, expected one of {_GSR_MODES}")
    if mode == "plain" and m == 0 and prewavelet_c is None:
        return g

    pc_sq = None if prewavelet_c is None else float(prewavelet_c) ** 2

    def radius(r: float) -> float:
        if pc_sq is None:
            return r
        return math.sqrt(r * r + pc_sq)

    def base(s: float) -> float:
        if mode == "dirichlet":
            core = g.deriv(s)
        else:
            core = g.eval(s)
        if mode == "forcing":
            core *= value + (rho(s) if rho is not None else 0.0)
        elif mode in ("dirichlet", "neumann"):
            core *= value
        return s ** (2 * m) * core

    def ev(r: float) -> float:
        if pc_sq is None and r == 0.0 and m >= 1:
            return 0.0
        return base(radius(r))

    # Analytic derivative needs only g and g'; modes that would require g''
    # (dirichlet) or the derivative of a caller-supplied rho fall back to a
    # high-order finite-difference stencil on their own eval.
    analytic = mode in ("plain", "neumann") or (mode == "forcing" and rho is None)

    def dv(r: float) -> float:
        if pc_sq is None and r == 0.0 and m >= 1:
            return 0.0
        if not analytic:
            return _fd_radial_deriv(ev, r)
        s = radius(r)
        scale = value if mode in ("neumann", "forcing") else 1.0
        inner = 2 * m * s ** (2 * m - 1) * g.eval(s) + s ** (2 * m) * g.deriv(s)
        chain = 1.0 if pc_sq is None else r / s
        return scale * inner * chain

    suffix = ",prewavelet" if prewavelet_c is not None else ""
    params = {"m": float(m), "value": float(value)}
    if prewavelet_c is not None:
        params["prewavelet_c"] = float(prewavelet_c)
    params.update(g.params)
    return RadialKernel(ev, dv, f"gsr[{mode},m={m}{suffix}]({g.label})", params)


def biharmonic_mfs_pair() -> tuple[RadialKernel, RadialKernel]:
    """Singular log pair {ln(r)+1, r^2(ln(r)+1)} for completeness studies.

    Intended for distinct source/response points only; both kernels raise
    at r <= 0 because of the logarithmic singularity.
    """

    def _check(r: float) -> float:
        if r <= 0.0:
            raise ValueError(f"kernel singular at r = 0, got r={r}")
        return r

    def ln1(r: float) -> float:
        return math.log(_check(r)) + 1.0

    def ln1_d(r: float) -> float:
        return 1.0 / _check(r)

    def r2ln1(r: float) -> float:
        r = _check(r)
        return r * r * (math.log(r) + 1.0)

    def r2ln1_d(r: float) -> float:
        r = _check(r)
        return r * (2.0 * math.log(r) + 3.0)

    return (
        RadialKernel(ln1, ln1_d, "mfs_ln", {}),
        RadialKernel(r2ln1, r2ln1_d, "mfs_r2ln", {}),
    )


def normal_derivative(
    kernel: RadialKernel,
    source: Point,
    response: Point,
    normal: tuple[float, float],
) -> float:
    """Directional derivative of kernel(||x - source||) at x = response along ``normal``.

    Equal to kernel.deriv(r) * ((response - source) . normal) / r with
    r the source-response distance; the r -> 0 limit is 0 for every kernel
    whose deriv(r)/r stays bounded, so coincident points return 0.
    """
    r = dist(source, response)
    if r == 0.0:
        return 0.0
    proj = (response.x - source.x) * normal[0] + (response.y - source.y) * normal[1]
    return kernel.deriv(r) * proj / r
