"""Elliptical boundary geometry: knot placement, outward normals, interior lattices.

Boundary knots are placed uniformly in the parametric angle t starting at
t = 0; this is the simplest reproducible placement and every consumer of
the knots treats the choice as opaque.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "Point",
    "BoundaryKnot",
    "Ellipse",
    "ellipse_knots",
    "interior_grid",
    "dist",
]

# Lattice points this close to the boundary (in level-function units) are
# treated as boundary points and excluded from interior sets.
_INTERIOR_MARGIN = 1e-9


class Point(NamedTuple):
    """A point in the plane."""

    x: float
    y: float


@dataclass(frozen=True)
class BoundaryKnot:
    """A boundary collocation point with its unit outward normal."""

    position: Point
    normal: tuple[float, float]


@dataclass(frozen=True)
class Ellipse:
    """Axis-aligned ellipse; ``semi_major`` runs along x, ``semi_minor`` along y."""

    center: Point
    semi_major: float
    semi_minor: float

    def __post_init__(self) -> None:
        if not (self.semi_major >= self.semi_minor > 0.0):
            raise ValueError(
                f"ellipse requires semi_major >= semi_minor > 0, got "
                f"({self.semi_major}, {self.semi_minor})"
            )

    def level(self, p: Point) -> float:
        """Level function ((x-cx)/a)^2 + ((y-cy)/b)^2; equals 1 on the boundary."""
        dx = (p.x - self.center.x) / self.semi_major
        dy = (p.y - self.center.y) / self.semi_minor
        return dx * dx + dy * dy


def ellipse_knots(e: Ellipse, n: int) -> list[BoundaryKnot]:
    """Place ``n`` boundary knots uniformly in parametric angle, starting at t = 0.

    Parameters
    ----------
    e : Ellipse
        Target boundary.
    n : int
        Number of knots, n >= 1.

    Returns
    -------
    list of BoundaryKnot
        Knot i sits at angle t_i = 2*pi*i/n with position
        center + (a*cos t_i, b*sin t_i) and unit outward normal
        proportional to (cos t_i / a, sin t_i / b).

    Raises
    ------
    ValueError
        If ``n`` < 1.
    """
    if n < 1:
        raise ValueError(f"need at least one boundary knot, got n={n}")
    knots = []
    for i in range(n):
        t = 2.0 * math.pi * i / n
        ct, st = math.cos(t), math.sin(t)
        position = Point(e.center.x + e.semi_major * ct, e.center.y + e.semi_minor * st)
        nx, ny = ct / e.semi_major, st / e.semi_minor
        norm = math.hypot(nx, ny)
        knots.append(BoundaryKnot(position, (nx / norm, ny / norm)))
    return knots


def interior_grid(e: Ellipse, spacing: float) -> list[Point]:
    """Axis-aligned lattice points strictly inside the ellipse.

    The lattice is anchored at the ellipse center with the given spacing
    and scanned row-major (y ascending, then x ascending), so the result
    order is deterministic.  Points with level >= 1 - 1e-9 are excluded.

    Raises
    ------
    ValueError
        If ``spacing`` <= 0.
    """
    if spacing <= 0.0:
        raise ValueError(f"grid spacing must be positive, got {spacing}")
    ni = int(math.floor(e.semi_major / spacing))
    nj = int(math.floor(e.semi_minor / spacing))
    points = []
    for j in range(-nj, nj + 1):
        for i in range(-ni, ni + 1):
            p = Point(e.center.x + i * spacing, e.center.y + j * spacing)
            if e.level(p) < 1.0 - _INTERIOR_MARGIN:
                points.append(p)
    return points


def dist(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)
