"""Directions on the unit circle, discs, and disjoint translation frames.

A frame places one base disc at the origin and one translated copy per
direction, all of radius ``v1``, at distance ``|m|`` from the origin.  The
separation threshold is the magnitude beyond which every pair of frame discs
is strictly disjoint.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Direction",
    "DirectionSet",
    "Disc",
    "TranslationFrame",
    "unit_direction",
    "min_pair_gap",
    "separation_threshold",
    "frame_discs",
    "discs_pairwise_disjoint",
    "disc_mesh",
]


@dataclass(frozen=True)
class Direction:
    """An angle theta in [0, 1), understood as the unit vector e^(2*pi*i*theta)."""

    theta: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.theta < 1.0):
            raise ValueError(f"direction angle must lie in [0, 1), got {self.theta!r}")


@dataclass(frozen=True)
class DirectionSet:
    """An ordered tuple of distinct directions; prefixes select the first n."""

    directions: tuple[Direction, ...]

    def __post_init__(self) -> None:
        thetas = [d.theta for d in self.directions]
        if len(set(thetas)) != len(thetas):
            raise ValueError("directions must be distinct")

    def __len__(self) -> int:
        return len(self.directions)

    def __iter__(self):
        return iter(self.directions)

    def prefix(self, n: int) -> "DirectionSet":
        if not (1 <= n <= len(self.directions)):
            raise ValueError(f"prefix length {n} outside 1..{len(self.directions)}")
        return DirectionSet(self.directions[:n])


@dataclass(frozen=True)
class Disc:
    """Closed disc {z : |z - center| <= radius}."""

    center: complex
    radius: float

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError("disc radius must be nonnegative")


@dataclass(frozen=True)
class TranslationFrame:
    """Base disc D(0, v1) plus translated discs D(m * u_j, v1) per direction."""

    v1: float
    m: complex
    directions: tuple[Direction, ...]

    def __post_init__(self) -> None:
        if self.v1 <= 0:
            raise ValueError("frame radius v1 must be positive")
        if not self.directions:
            raise ValueError("frame needs at least one direction")


def unit_direction(direction: Direction) -> complex:
    """The unit vector e^(2*pi*i*theta)."""
    return cmath.exp(2j * math.pi * direction.theta)


def min_pair_gap(dirs: DirectionSet) -> float:
    """Smallest chord distance |u_i - u_j| over distinct direction pairs.

    Needs at least two directions; with two antipodal directions the gap is 2,
    and it shrinks toward 0 as angles cluster.
    """
    units = [unit_direction(d) for d in dirs]
    if len(units) < 2:
        raise ValueError("min_pair_gap needs at least two directions")
    return min(
        abs(units[i] - units[j]) for i in range(len(units)) for j in range(i + 1, len(units))
    )


def separation_threshold(v1: float, gap: float) -> float:
    """Magnitude bound max(2*v1, 2*v1/gap) guaranteeing a disjoint frame.

    Above it, the base-to-translate distance |m| exceeds 2*v1 and every
    translate-to-translate distance |m|*gap exceeds 2*v1 as well.
    """
    if v1 <= 0:
        raise ValueError("v1 must be positive")
    if gap <= 0:
        raise ValueError("direction gap must be positive")
    return max(2.0 * v1, 2.0 * v1 / gap)


def frame_discs(frame: TranslationFrame) -> list[Disc]:
    """The frame's discs: base first, then one translate per direction, in order."""
    discs = [Disc(0j, frame.v1)]
    discs.extend(Disc(frame.m * unit_direction(d), frame.v1) for d in frame.directions)
    return discs


def discs_pairwise_disjoint(discs: list[Disc]) -> bool:
    """Strict pairwise disjointness; tangent discs count as intersecting."""
    for i in range(len(discs)):
        for j in range(i + 1, len(discs)):
            if abs(discs[i].center - discs[j].center) <= discs[i].radius + discs[j].radius:
                return False
    return True


def disc_mesh(center: complex, radius: float, grid: int) -> np.ndarray:
    """Deterministic grid x grid polar mesh of a closed disc.

    grid radii (0 up to and including the boundary) crossed with grid equal
    angles, so both the interior and the full boundary circle are sampled.
    """
    if grid < 2:
        raise ValueError("mesh needs at least a 2 x 2 grid")
    radii = np.linspace(0.0, radius, grid)
    angles = np.exp(2j * np.pi * np.arange(grid) / grid)
    return center + np.outer(radii, angles).ravel()
