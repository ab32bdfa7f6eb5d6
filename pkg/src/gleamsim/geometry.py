"""Poses, SE(2) actions, and world/grid coordinate conversions.

Conventions used across the package:

* world coordinates are continuous (x, y) in meters, grids are dense numpy
  arrays indexed ``arr[iy, ix]`` (row = y, column = x),
* a cell (ix, iy) of a frame with origin (ox, oy) covers the half-open square
  ``[ox + ix*cs, ox + (ix+1)*cs) x [oy + iy*cs, oy + (iy+1)*cs)``,
* headings are radians, counter-clockwise, 0 along +x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    r = math.fmod(theta, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    elif r > math.pi:
        r -= TWO_PI
    return r


def norm_heading(theta: float) -> float:
    """Normalize a heading into [0, 2*pi)."""
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    return r


@dataclass(frozen=True)
class Pose:
    """Agent pose in world coordinates: position (m) and heading (rad)."""

    x: float
    y: float
    theta: float

    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Action:
    """Relative SE(2) goal: displacement in the agent's local frame.

    ``dx`` points along the current heading, ``dy`` to its left; ``dtheta``
    is applied to the heading once the goal is reached.
    """

    dx: float
    dy: float
    dtheta: float

    def validate(self, radius: float) -> None:
        if not (abs(self.dx) <= radius and abs(self.dy) <= radius):
            raise ValueError(
                f"action displacement ({self.dx}, {self.dy}) exceeds radius {radius}"
            )
        if not (-math.pi < self.dtheta <= math.pi):
            raise ValueError(f"action dtheta {self.dtheta} outside (-pi, pi]")


def apply_action(pose: Pose, action: Action) -> Pose:
    """Compose a pose with a local-frame action, returning the goal pose."""
    c = math.cos(pose.theta)
    s = math.sin(pose.theta)
    gx = pose.x + action.dx * c - action.dy * s
    gy = pose.y + action.dx * s + action.dy * c
    return Pose(gx, gy, norm_heading(pose.theta + action.dtheta))


def world_to_local(pose: Pose, wx: float, wy: float) -> tuple[float, float]:
    """Express a world point in the pose's local frame."""
    dx = wx - pose.x
    dy = wy - pose.y
    c = math.cos(pose.theta)
    s = math.sin(pose.theta)
    return (dx * c + dy * s, -dx * s + dy * c)


@dataclass(frozen=True)
class GridFrame:
    """Geometry of a dense grid embedded in the world plane."""

    width: int
    height: int
    cell_size: float
    origin_x: float
    origin_y: float

    @classmethod
    def centered(cls, width: int, height: int, cell_size: float) -> "GridFrame":
        """Frame whose grid is centered on the world origin."""
        return cls(
            width,
            height,
            cell_size,
            -0.5 * width * cell_size,
            -0.5 * height * cell_size,
        )

    def world_to_cell(self, x: float, y: float) -> tuple[int, int]:
        ix = int(math.floor((x - self.origin_x) / self.cell_size))
        iy = int(math.floor((y - self.origin_y) / self.cell_size))
        return (ix, iy)

    def cell_center(self, ix: int, iy: int) -> tuple[float, float]:
        return (
            self.origin_x + (ix + 0.5) * self.cell_size,
            self.origin_y + (iy + 0.5) * self.cell_size,
        )

    def contains_cell(self, ix: int, iy: int) -> bool:
        return 0 <= ix < self.width and 0 <= iy < self.height

    def contains_point(self, x: float, y: float) -> bool:
        ix, iy = self.world_to_cell(x, y)
        return self.contains_cell(ix, iy)
