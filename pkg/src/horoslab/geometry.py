"""Coordinates and metric quantities in the upper half-plane model.

The metric is ``ds^2 = (dx^2 + dy^2) / y^2``.  Polar coordinates are taken
about the origin ``O = (0, 1)`` with the angle measured counterclockwise from
the upward vertical ray ``{x = 0, y >= 1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from horoslab.errors import DomainError

TWO_PI = 2.0 * math.pi


class CartesianPoint(NamedTuple):
    x: float
    y: float


class PolarPoint(NamedTuple):
    """Hyperbolic polar coordinates about ``(0, 1)``."""

    rho: float
    theta: float


@dataclass(frozen=True)
class CircleData:
    """A Euclidean circle centered on the y-axis at height ``center_height``.

    When the circle lies strictly inside the half-plane it is a geodesic
    circle; ``hyper_center_height`` and ``hyper_radius`` are then filled in.
    """

    center_height: float
    euclid_radius: float
    hyper_center_height: float | None = None
    hyper_radius: float | None = None


@dataclass(frozen=True)
class EquidistantData:
    """Circle of Euclidean radius ``r > 1`` about ``(0, 1)``.

    It is an equidistant curve at distance ``rho`` from the geodesic
    ``x^2 + y^2 = r^2 - 1`` and meets it at angle ``alpha``.
    """

    euclid_radius: float
    alpha: float
    rho: float

    @property
    def axis_radius(self) -> float:
        """Euclidean radius of the axis geodesic, ``sqrt(r^2 - 1) = cot(alpha)``."""
        return math.sqrt(self.euclid_radius**2 - 1.0)


def polar_to_cartesian(p: PolarPoint) -> CartesianPoint:
    rho, theta = p
    denom = math.cosh(rho) - math.sinh(rho) * math.cos(theta)
    return CartesianPoint(math.sinh(rho) * math.sin(theta) / denom, 1.0 / denom)


def hyperbolic_distance(p: CartesianPoint, q: CartesianPoint) -> float:
    """Distance between two points of the half-plane.

    Vertically aligned points use ``|ln(y2/y1)|`` directly; the general case
    uses ``2 asinh(|p - q| / (2 sqrt(y1 y2)))``, which avoids the cancellation
    in the ``arccosh`` form for nearby points.
    """
    (x1, y1), (x2, y2) = p, q
    if y1 <= 0.0 or y2 <= 0.0:
        raise DomainError("points must satisfy y > 0")
    if x1 == x2:
        return abs(math.log(y2 / y1))
    chord = math.hypot(x2 - x1, y2 - y1)
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(y1 * y2)))


def circle_arc_length(rho: float, beta: float) -> float:
    """Length of the arc of central angle ``beta`` on a circle of hyperbolic radius ``rho``."""
    if rho < 0.0 or beta < 0.0:
        raise DomainError("rho and beta must be non-negative")
    return beta * math.sinh(rho)


def sector_area(rho: float, beta: float) -> float:
    """Area of the sector of central angle ``beta`` in a disk of hyperbolic radius ``rho``."""
    if rho < 0.0 or beta < 0.0:
        raise DomainError("rho and beta must be non-negative")
    # cosh(rho) - 1 written to keep accuracy for small rho
    return beta * 2.0 * math.sinh(0.5 * rho) ** 2


def circle_to_hyperbolic(center_height: float, euclid_radius: float) -> CircleData:
    """Hyperbolic center and radius of the circle about ``(0, center_height)``.

    Raises:
        DomainError: if the circle touches or crosses ``{y = 0}``; such a circle
            is a horocycle or an equidistant curve, not a geodesic circle.
    """
    y0, r = center_height, euclid_radius
    if y0 <= 0.0:
        raise DomainError("center_height must be positive")
    if not 0.0 <= r < y0:
        raise DomainError(f"need 0 <= r < y0 for a geodesic circle, got r={r!r}, y0={y0!r}")
    h = math.sqrt((y0 - r) * (y0 + r))
    rho = 0.5 * math.log((y0 + r) / (y0 - r))
    return CircleData(y0, r, h, rho)


def contact_angle(euclid_radius: float, center_height: float) -> float:
    """Half the central angle of the arc cut off by the horocycle through the Euclidean center.

    Returns ``arccos(r / y0)``: ``pi/2`` for a degenerate circle, ``0`` in the
    horocycle limit ``r = y0``.
    """
    r, y0 = euclid_radius, center_height
    if y0 <= 0.0 or not 0.0 <= r <= y0:
        raise DomainError(f"need 0 <= r <= y0, got r={r!r}, y0={y0!r}")
    return math.acos(r / y0)


def equidistant_from_radius(euclid_radius: float) -> EquidistantData:
    r = euclid_radius
    if not r > 1.0:
        raise DomainError(f"equidistant circles about (0, 1) need r > 1, got {r!r}")
    rho = 0.5 * math.log((r + 1.0) / (r - 1.0))
    alpha = math.asin(1.0 / r)
    return EquidistantData(r, alpha, rho)
