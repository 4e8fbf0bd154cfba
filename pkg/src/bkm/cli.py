"""Command-line front end: benchmark solves, convergence sweeps, kernel checks.

Output contract: ``table`` format mirrors the benchmark tables (x, y,
Exact, BKM(n), err%) at 3-4 digits for visual diffing; ``csv`` format
emits machine-readable rows at 12 significant digits with diagnostics on
stderr so stdout stays parseable.  Exit codes: 0 success, 1 numerical
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bkm import UnsupportedConfigurationError, evaluate, solve_boundary_only, solve_mixed_linear
from .geometry import Ellipse, Point, ellipse_knots, interior_grid
from .kernels import (
    DisplacementKernel,
    RadialKernel,
    biharmonic2d,
    biharmonic3d,
    convection_diffusion2d,
    helmholtz2d,
    helmholtz3d,
    modified_helmholtz2d,
    modified_helmholtz3d,
)
from .linalg import SingularMatrixError
from .problems import burger_benchmark, helmholtz_benchmark, laplace_benchmark

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

_PROBLEMS = {
    "laplace": laplace_benchmark,
    "helmholtz": helmholtz_benchmark,
    "burger": burger_benchmark,
}

_KERNEL_NAMES = (
    "j0",
    "i0",
    "sinc3d",
    "sinh3d",
    "biharmonic2d",
    "biharmonic3d",
    "convection2d",
)

# Residual threshold echoed by the kernels command; matches the operator
# residual the test suite enforces.
_RESIDUAL_GATE = 1e-5

# Spacing of the dense lattice the --interior flag subsamples from.
_INTERIOR_SPACING = 0.25


@dataclass(frozen=True)
class RunConfig:
    """Validated arguments of a ``solve`` run."""

    problem: str
    n_boundary: int
    n_interior: int = 0
    shape_c: float | None = None
    format: str = "table"
    output: str | None = None


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code instead of raising."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors via SystemExit
        code = exc.code if exc.code is not None else 0
        return int(code) if isinstance(code, int) else EXIT_USAGE
    return args.handler(args)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkm",
        description="Boundary knot method: boundary-only meshless PDE solves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a built-in problem and print its table")
    solve.add_argument("--problem", required=True, help="laplace | helmholtz | burger")
    solve.add_argument("--n", type=int, default=5, help="number of boundary knots")
    solve.add_argument("--interior", type=int, default=0, help="number of interior knots")
    solve.add_argument("--c", type=float, default=None, help="override the MQ shape parameter")
    solve.add_argument("--format", choices=("table", "csv"), default="table")
    solve.add_argument("--out", default=None, help="write output to this path")
    solve.set_defaults(handler=_cmd_solve)

    conv = sub.add_parser("convergence", help="sweep knot counts and shape parameters")
    conv.add_argument("--problem", required=True)
    conv.add_argument("--n", default="3,5,7", help="comma-separated knot counts")
    conv.add_argument("--c", default=None, help="comma-separated shape parameters")
    conv.add_argument("--out", default=None)
    conv.set_defaults(handler=_cmd_convergence)

    kern = sub.add_parser("kernels", help="print kernel values and operator residuals")
    kern.add_argument("name", help=" | ".join(_KERNEL_NAMES))
    kern.add_argument("--lambda", dest="lam", type=float, default=1.0)
    kern.add_argument("--r", type=float, default=None, help="evaluate at this radius only")
    kern.add_argument("--D", type=float, default=1.0, help="diffusivity (convection2d)")
    kern.add_argument("--vx", type=float, default=0.0, help="velocity x (convection2d)")
    kern.add_argument("--vy", type=float, default=0.0, help="velocity y (convection2d)")
    kern.add_argument("--k", type=float, default=1.0, help="reaction (convection2d)")
    kern.set_defaults(handler=_cmd_kernels)
    return parser


class _Output:
    """Collects lines, then emits them to stdout or a file."""

    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []

    def add(self, line: str) -> None:
        self.lines.append(line)

    def emit(self) -> None:
        text = "\n".join(self.lines) + "\n"
        if self.path is None:
            sys.stdout.write(text)
        else:
            with open(self.path, "w", encoding="utf-8") as handle:
                handle.write(text)


def _rel_err_pct(computed: float, exact: float) -> float:
    """Error in percent, relative to exact; absolute when exact vanishes."""
    scale = abs(exact) if abs(exact) > 1e-12 else 1.0
    return 100.0 * (computed - exact) / scale


def _interior_points(ellipse: Ellipse, count: int) -> list[Point]:
    """Deterministic interior knots: an even-stride subsample of a dense lattice."""
    lattice = interior_grid(ellipse, _INTERIOR_SPACING)
    if count > len(lattice):
        raise ValueError(f"requested {count} interior knots, lattice has {len(lattice)}")
    idx = np.linspace(0, len(lattice) - 1, count).astype(int)
    return [lattice[i] for i in idx]


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.problem not in _PROBLEMS:
        print(f"error: unknown problem: {args.problem!r}", file=sys.stderr)
        return EXIT_USAGE
    config = RunConfig(
        problem=args.problem,
        n_boundary=args.n,
        n_interior=args.interior,
        shape_c=args.c,
        format=args.format,
        output=args.out,
    )
    problem = _PROBLEMS[config.problem]()
    if config.shape_c is not None:
        problem = dataclasses.replace(problem, mq_shape_c=config.shape_c)
    try:
        if config.n_interior > 0:
            knots = ellipse_knots(problem.ellipse, config.n_boundary)
            interior = _interior_points(problem.ellipse, config.n_interior)
            sol, diag = solve_mixed_linear(problem, knots, interior)
        else:
            sol, diag = solve_boundary_only(problem, config.n_boundary)
        points = problem.table_points
        computed = evaluate(sol, points)
    except (SingularMatrixError, UnsupportedConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    exact = np.array([problem.exact(p) for p in points])
    if not (np.all(np.isfinite(computed)) and np.all(np.isfinite(exact))):
        print("error: non-finite solution values", file=sys.stderr)
        return EXIT_NUMERICAL

    out = _Output(config.output)
    footer = [
        f"# cond_interp {diag.cond_interp:.3e}",
        f"# cond_bkm {diag.cond_bkm:.3e}",
        f"# residual_inf {diag.residual_inf:.3e}",
    ]
    if config.format == "csv":
        out.add("x,y,exact,computed,rel_err_pct")
        for p, ex, co in zip(points, exact, computed):
            err = _rel_err_pct(co, ex)
            out.add(f"{p.x:.12g},{p.y:.12g},{ex:.12g},{co:.12g},{err:.12g}")
        for line in footer:
            print(line, file=sys.stderr)
        if problem.notes:
            print(f"# note: {problem.notes}", file=sys.stderr)
    else:
        out.add(f"{'x':>8} {'y':>8} {'Exact':>10} {f'BKM({config.n_boundary})':>10} {'err%':>8}")
        for p, ex, co in zip(points, exact, computed):
            err = _rel_err_pct(co, ex)
            out.add(f"{p.x:8.3f} {p.y:8.3f} {ex:10.3f} {co:10.3f} {err:8.2f}")
        for line in footer:
            out.add(line)
        if problem.notes:
            out.add(f"# note: {problem.notes}")
    out.emit()
    return EXIT_OK


def _parse_float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _cmd_convergence(args: argparse.Namespace) -> int:
    if args.problem not in _PROBLEMS:
        print(f"error: unknown problem: {args.problem!r}", file=sys.stderr)
        return EXIT_USAGE
    problem = _PROBLEMS[args.problem]()
    try:
        n_list = [int(part) for part in str(args.n).split(",") if part.strip()]
        c_list = _parse_float_list(args.c) if args.c else [problem.mq_shape_c]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = _Output(args.out)
    out.add("n,c,max_err,cond_bkm")
    for c in c_list:
        run_problem = dataclasses.replace(problem, mq_shape_c=c)
        for n in n_list:
            try:
                sol, diag = solve_boundary_only(run_problem, n)
                computed = evaluate(sol, run_problem.table_points)
            except (SingularMatrixError, ValueError) as exc:
                print(f"error: n={n} c={c}: {exc}", file=sys.stderr)
                return EXIT_NUMERICAL
            exact = np.array([run_problem.exact(p) for p in run_problem.table_points])
            max_err = float(np.abs(computed - exact).max())
            if not math.isfinite(max_err):
                print(f"error: non-finite error at n={n} c={c}", file=sys.stderr)
                return EXIT_NUMERICAL
            out.add(f"{n},{c:.12g},{max_err:.12g},{diag.cond_bkm:.12g}")
    out.emit()
    return EXIT_OK


def _radial_laplacian(f: Callable[[float], float], r: float, h: float, dim: int) -> float:
    """FD radial Laplacian f'' + (dim-1)/r f' at r."""
    d2 = (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h)
    d1 = (f(r + h) - f(r - h)) / (2.0 * h)
    return d2 + (dim - 1) * d1 / r


def _biharmonic_residual(f: Callable[[float], float], lam: float, r: float, dim: int) -> float:
    """FD (lap^2 - lam^4) f at r, Richardson-extrapolated nested Laplacian."""

    def nested(h: float) -> float:
        def lap(s: float) -> float:
            return _radial_laplacian(f, s, h, dim)

        return _radial_laplacian(lap, r, h, dim)

    fine, coarse = nested(0.02), nested(0.04)
    return (4.0 * fine - coarse) / 3.0 - lam**4 * f(r)


def _operator_residual(name: str, kernel, lam: float, r: float) -> float:
    if name == "j0":
        return _radial_laplacian(kernel.eval, r, 1e-4, 2) + lam * lam * kernel.eval(r)
    if name == "i0":
        return _radial_laplacian(kernel.eval, r, 1e-4, 2) - lam * lam * kernel.eval(r)
    if name == "sinc3d":
        return _radial_laplacian(kernel.eval, r, 1e-4, 3) + lam * lam * kernel.eval(r)
    if name == "sinh3d":
        return _radial_laplacian(kernel.eval, r, 1e-4, 3) - lam * lam * kernel.eval(r)
    raise ValueError(name)


def _convection_residual(kernel: DisplacementKernel, delta: tuple[float, float]) -> float:
    """FD residual of D lap(phi) + v . grad(phi) + (k + |v|^2/(4D) + ... ) phi.

    The kernel annihilates the operator with effective reaction
    k_eff = k + |v|^2 / (2D); at v = 0 this is the plain reaction k.
    """
    D = kernel.params["D"]
    vx, vy = kernel.params["vx"], kernel.params["vy"]
    k = kernel.params["k"]
    k_eff = k + (vx * vx + vy * vy) / (2.0 * D)
    h = 1e-4
    dx, dy = delta

    def ev(ax: float, ay: float) -> float:
        return kernel.eval((ax, ay))

    lap = (
        ev(dx + h, dy) + ev(dx - h, dy) + ev(dx, dy + h) + ev(dx, dy - h) - 4.0 * ev(dx, dy)
    ) / (h * h)
    gx = (ev(dx + h, dy) - ev(dx - h, dy)) / (2.0 * h)
    gy = (ev(dx, dy + h) - ev(dx, dy - h)) / (2.0 * h)
    return D * lap + vx * gx + vy * gy + k_eff * ev(dx, dy)


def _cmd_kernels(args: argparse.Namespace) -> int:
    name = args.name
    if name not in _KERNEL_NAMES:
        print(f"error: unknown kernel: {name!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if name == "convection2d":
            kernels: tuple = (convection_diffusion2d(args.D, (args.vx, args.vy), args.k),)
        elif name == "biharmonic2d":
            kernels = biharmonic2d(args.lam)
        elif name == "biharmonic3d":
            kernels = biharmonic3d(args.lam)
        else:
            factory = {
                "j0": helmholtz2d,
                "i0": modified_helmholtz2d,
                "sinc3d": helmholtz3d,
                "sinh3d": modified_helmholtz3d,
            }[name]
            kernels = (factory(args.lam),)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.r is not None:
        for kernel in kernels:
            if isinstance(kernel, DisplacementKernel):
                value = kernel.eval((args.r, 0.0))
            else:
                value = kernel.eval(args.r)
            print(f"{kernel.label} value {value:.12g}")
        return EXIT_OK

    radii = np.linspace(0.1, 5.0, 50)
    max_residual = 0.0
    for kernel in kernels:
        print(f"kernel {kernel.label}  params {dict(kernel.params)}")
        for r in radii[::7]:
            if isinstance(kernel, DisplacementKernel):
                value = kernel.eval((float(r), 0.0))
            else:
                value = kernel.eval(float(r))
            print(f"  r={r:7.4f}  value={value: .10g}")
        for r in radii:
            r = float(r)
            if name == "convection2d":
                residual = _convection_residual(kernels[0], (r / math.sqrt(2.0), r / math.sqrt(2.0)))
                value = kernels[0].eval((r / math.sqrt(2.0), r / math.sqrt(2.0)))
            elif name in ("biharmonic2d", "biharmonic3d"):
                dim = 2 if name == "biharmonic2d" else 3
                residual = _biharmonic_residual(kernel.eval, args.lam, r, dim)
                value = kernel.eval(r)
            else:
                residual = _operator_residual(name, kernel, args.lam, r)
                value = kernel.eval(r)
            max_residual = max(max_residual, abs(residual) / (1.0 + abs(value)))
    verdict = "<" if max_residual < _RESIDUAL_GATE else ">="
    print(f"max_residual {max_residual:.3e} {verdict} {_RESIDUAL_GATE:g}")
    return EXIT_OK if max_residual < _RESIDUAL_GATE else EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
