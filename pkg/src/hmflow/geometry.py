"""Stereographic charts, conformal factor, and regions on the unit 2-sphere.

Conventions
-----------
The sphere is the unit sphere in R^3.  Two stereographic charts cover it:

    North:  z |-> (2 Re z, 2 Im z, 1 - |z|^2) / (1 + |z|^2)
    South:  w |-> (2 Re w, -2 Im w, |w|^2 - 1) / (1 + |w|^2)

The sign flip in the South chart's second coordinate makes the transition
map w = 1/z holomorphic, so both charts induce the same orientation.  The
conformal factor is sigma(z) = 2 / (1 + |z|^2) and the spherical area
element is sigma^2 dx dy.

Disk radii are always *stereographic* radii r: the disk of radius r about
a center x is the geodesic ball of radius 2*arctan(r).  Conversion helpers
are provided but every interface takes r.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import PoleSingular

POLE_TOL = 1e-9


class ChartId(Enum):
    NORTH = "north"
    SOUTH = "south"

    @property
    def pole(self) -> np.ndarray:
        """The sphere point this chart cannot represent (its z -> infinity limit)."""
        return np.array([0.0, 0.0, -1.0]) if self is ChartId.NORTH else np.array([0.0, 0.0, 1.0])


def sphere_point(x: float, y: float, z: float) -> np.ndarray:
    """Build a unit-norm sphere point, normalizing away rounding error."""
    p = np.array([x, y, z], dtype=float)
    n = np.linalg.norm(p)
    if n == 0.0:
        raise ValueError("zero vector is not a sphere point")
    return p / n


def stereo_to_sphere(z, chart: ChartId = ChartId.NORTH) -> np.ndarray:
    """Chart map: complex coordinate(s) -> unit vector(s) in R^3.

    Vectorized: z may be any complex array; the result has shape z.shape + (3,).
    """
    z = np.asarray(z, dtype=complex)
    d = 1.0 + z.real**2 + z.imag**2
    if chart is ChartId.NORTH:
        return np.stack([2 * z.real / d, 2 * z.imag / d, (2.0 - d) / d], axis=-1)
    return np.stack([2 * z.real / d, -2 * z.imag / d, (d - 2.0) / d], axis=-1)


def sphere_to_stereo(p: np.ndarray, chart: ChartId = ChartId.NORTH):
    """Inverse chart map.  Raises PoleSingular within POLE_TOL of the excluded pole."""
    p = np.asarray(p, dtype=float)
    if chart is ChartId.NORTH:
        den = 1.0 + p[..., 2]
        num = p[..., 0] + 1j * p[..., 1]
    else:
        den = 1.0 - p[..., 2]
        num = p[..., 0] - 1j * p[..., 1]
    if np.any(np.abs(den) <= POLE_TOL):
        raise PoleSingular(f"point too close to the {chart.value} chart's excluded pole")
    return num / den


def conformal_factor(z) -> np.ndarray:
    """sigma(z) = 2 / (1 + |z|^2), in (0, 2]."""
    z = np.asarray(z, dtype=complex)
    return 2.0 / (1.0 + z.real**2 + z.imag**2)


def chart_transition(z, chart_from: ChartId = ChartId.NORTH):
    """Transition to the other chart: w = 1/z.  Involutive away from poles."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) <= POLE_TOL):
        raise PoleSingular("chart transition undefined at the chart center")
    return 1.0 / z


def stereo_radius_to_geodesic(r: float) -> float:
    """D_r(x) = B_{2 arctan r}(x): stereographic radius -> geodesic radius."""
    return 2.0 * np.arctan(r)


def geodesic_radius_to_stereo(theta: float) -> float:
    return float(np.tan(theta / 2.0))


class RegionKind(Enum):
    DISK = "disk"
    ANNULUS = "annulus"
    DISK_COMPLEMENT = "disk_complement"
    WHOLE_SPHERE = "whole_sphere"


@dataclass(frozen=True)
class Region:
    """A region of the sphere described by stereographic radii about a center.

    Disk(center, r): closed geodesic ball B_{2 arctan r}(center).
    Annulus(center, r1, r2): D_{r2} minus the *closed* D_{r1}  (r1 < d <= r2).
    DiskComplement: complement of a union of closed disks (centers, radii).
    """

    kind: RegionKind
    center: np.ndarray | None = None
    inner_radius: float = 0.0
    outer_radius: float = 0.0
    holes: Sequence[tuple[np.ndarray, float]] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind is RegionKind.ANNULUS and not self.inner_radius < self.outer_radius:
            raise ValueError("annulus requires inner_radius < outer_radius")
        if self.kind in (RegionKind.DISK, RegionKind.ANNULUS) and self.outer_radius <= 0:
            raise ValueError("radius must be positive")
        if self.kind is RegionKind.DISK_COMPLEMENT:
            holes = list(self.holes)
            for i in range(len(holes)):
                for j in range(i + 1, len(holes)):
                    ci, ri = holes[i]
                    cj, rj = holes[j]
                    # doubled disks must stay disjoint: geodesic separation test
                    gap = np.arccos(np.clip(np.dot(ci, cj), -1, 1))
                    if gap <= stereo_radius_to_geodesic(2 * ri) + stereo_radius_to_geodesic(2 * rj):
                        warnings.warn("disk complement holes: doubled disks overlap", stacklevel=2)


def whole_sphere() -> Region:
    return Region(RegionKind.WHOLE_SPHERE)


def disk(center: np.ndarray, r: float) -> Region:
    return Region(RegionKind.DISK, center=np.asarray(center, dtype=float), outer_radius=float(r))


def annulus(center: np.ndarray, r_inner: float, r_outer: float) -> Region:
    return Region(
        RegionKind.ANNULUS,
        center=np.asarray(center, dtype=float),
        inner_radius=float(r_inner),
        outer_radius=float(r_outer),
    )


def disk_complement(holes: Sequence[tuple[np.ndarray, float]]) -> Region:
    return Region(RegionKind.DISK_COMPLEMENT, holes=tuple((np.asarray(c, float), float(r)) for c, r in holes))


def _geodesic_angle(center: np.ndarray, p: np.ndarray) -> np.ndarray:
    dot = np.clip(np.tensordot(np.asarray(p, float), center, axes=([-1], [0])), -1.0, 1.0)
    return np.arccos(dot)


def region_contains(region: Region, p: np.ndarray):
    """Membership test, vectorized over leading axes of p (shape ... x 3).

    Closed disks contain their boundary; complements and annulus inner
    boundaries exclude it.
    """
    p = np.asarray(p, dtype=float)
    if region.kind is RegionKind.WHOLE_SPHERE:
        return np.ones(p.shape[:-1], dtype=bool)
    if region.kind is RegionKind.DISK:
        ang = _geodesic_angle(region.center, p)
        return ang <= stereo_radius_to_geodesic(region.outer_radius)
    if region.kind is RegionKind.ANNULUS:
        ang = _geodesic_angle(region.center, p)
        return (ang > stereo_radius_to_geodesic(region.inner_radius)) & (
            ang <= stereo_radius_to_geodesic(region.outer_radius)
        )
    inside = np.ones(p.shape[:-1], dtype=bool)
    for c, r in region.holes:
        inside &= _geodesic_angle(c, p) > stereo_radius_to_geodesic(r)
    return inside


def rotation_to_point(target: np.ndarray) -> np.ndarray:
    """SO(3) matrix taking the north pole (0,0,1) to `target`.

    Rotates along the connecting geodesic; for target ~ -pole the axis
    degenerates and the x-axis is used.  Deterministic.
    """
    t = np.asarray(target, dtype=float)
    t = t / np.linalg.norm(t)
    n = np.array([0.0, 0.0, 1.0])
    axis = np.cross(n, t)
    s = np.linalg.norm(axis)
    c = float(np.dot(n, t))
    if s < 1e-14:
        if c > 0:
            return np.eye(3)
        return np.diag([1.0, -1.0, -1.0])  # pi rotation about x-axis
    axis = axis / s
    K = np.array(
        [[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]]
    )
    return np.eye(3) + s * K + (1 - c) * (K @ K)
