"""Candidate regions in the slab and their closed-form measures.

Perimeter always means free-boundary perimeter: the parts of the boundary
lying on the horocycles ``{y = 1}`` and ``{y = c}`` are never counted.

Halfdisks are parametrized by an intrinsic angle, so their measures do not
depend on ``c``:

* ``GeodesicHalfdiskLower(theta1)`` sits on ``{y = 1}``, Euclidean radius ``cos(theta1)``.
* ``GeodesicHalfdiskUpper(theta2)`` hangs below ``{y = c}``, Euclidean radius ``c cos(theta2)``.
* ``HorocycleHalfdisk()`` is the unit semicircle about ``(0, 1)``.
* ``EquidistantHalfdisk(alpha)`` sits on ``{y = 1}``, Euclidean radius ``1 / sin(alpha)``.
* ``GeodesicDisk(theta)`` is a full disk with ``sinh(rho) = cot(theta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from horoslab.errors import DomainError

HALF_PI = 0.5 * math.pi
HOROCYCLE_AREA = 4.0 - math.pi
HOROCYCLE_PERIMETER = 2.0


def _check_angle(name: str, value: float) -> None:
    if not 0.0 < value < HALF_PI:
        raise DomainError(f"{name} must lie in (0, pi/2), got {value!r}")


@dataclass(frozen=True)
class SlabConfig:
    """The strip ``1 <= y <= c`` of hyperbolic width ``d = ln c``."""

    c: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and self.c > 1.0):
            raise DomainError(f"c must exceed 1, got {self.c!r}")

    @property
    def d(self) -> float:
        return math.log(self.c)

    @classmethod
    def from_width(cls, d: float) -> SlabConfig:
        if not d > 0.0:
            raise DomainError(f"width d must be positive, got {d!r}")
        return cls(math.exp(d))

    @property
    def section_perimeter(self) -> float:
        return 2.0 * self.d


@dataclass(frozen=True)
class Section:
    width: float
    kind = "section"

    def __post_init__(self) -> None:
        if not self.width > 0.0:
            raise DomainError(f"section width must be positive, got {self.width!r}")


@dataclass(frozen=True)
class GeodesicHalfdiskLower:
    theta1: float
    kind = "geodesic_halfdisk"

    def __post_init__(self) -> None:
        _check_angle("theta1", self.theta1)

    @property
    def euclid_radius(self) -> float:
        return math.cos(self.theta1)


@dataclass(frozen=True)
class GeodesicHalfdiskUpper:
    theta2: float
    kind = "geodesic_halfdisk_upper"

    def __post_init__(self) -> None:
        _check_angle("theta2", self.theta2)

    def euclid_radius(self, c: float) -> float:
        return c * math.cos(self.theta2)


@dataclass(frozen=True)
class HorocycleHalfdisk:
    kind = "horocycle_halfdisk"

    @property
    def euclid_radius(self) -> float:
        return 1.0


@dataclass(frozen=True)
class EquidistantHalfdisk:
    alpha: float
    kind = "equidistant_halfdisk"

    def __post_init__(self) -> None:
        _check_angle("alpha", self.alpha)

    @property
    def euclid_radius(self) -> float:
        return 1.0 / math.sin(self.alpha)


@dataclass(frozen=True)
class GeodesicDisk:
    theta: float
    kind = "geodesic_disk"

    def __post_init__(self) -> None:
        _check_angle("theta", self.theta)

    @property
    def hyper_radius(self) -> float:
        return math.asinh(1.0 / math.tan(self.theta))


Region = Union[
    Section,
    GeodesicHalfdiskLower,
    GeodesicHalfdiskUpper,
    HorocycleHalfdisk,
    EquidistantHalfdisk,
    GeodesicDisk,
]


class Measures(NamedTuple):
    """Free-boundary perimeter and area of a region."""

    perimeter: float
    area: float


def section_measures(slab: SlabConfig, width: float) -> Measures:
    if not width > 0.0:
        raise DomainError(f"section width must be positive, got {width!r}")
    return Measures(2.0 * slab.d, width * (1.0 - 1.0 / slab.c))


# Unchecked formula kernels.  The root finders evaluate these at bracket
# endpoints (including pi/2), where the public functions would reject.


def _lower_halfdisk(t: float) -> Measures:
    return Measures(2.0 * t / math.tan(t), 2.0 * t / math.sin(t) - math.pi + 2.0 * math.cos(t))


def _upper_halfdisk(t: float) -> Measures:
    w = math.pi - t
    return Measures(2.0 * w / math.tan(t), 2.0 * w / math.sin(t) - math.pi - 2.0 * math.cos(t))


def _equidistant_log(alpha: float) -> float:
    # ln(1/sin a + cot a) == asinh(cot a); the asinh form stays accurate as a -> pi/2
    return math.asinh(1.0 / math.tan(alpha))


def _equidistant_halfdisk(a: float) -> Measures:
    lg = _equidistant_log(a)
    return Measures(2.0 * lg / math.cos(a), 2.0 / math.sin(a) - math.pi + 2.0 * math.tan(a) * lg)


def geodesic_halfdisk_lower_measures(theta1: float) -> Measures:
    _check_angle("theta1", theta1)
    return _lower_halfdisk(theta1)


def geodesic_halfdisk_upper_measures(slab: SlabConfig | None, theta2: float) -> Measures:
    """Measures of the geodesic halfdisk below ``{y = c}``.

    ``slab`` is accepted for symmetry with the other families; the measures
    are homothety invariant and ignore it.  Whether the halfdisk fits above
    ``{y = 1}`` is not checked here.
    """
    _check_angle("theta2", theta2)
    return _upper_halfdisk(theta2)


def horocycle_halfdisk_measures() -> Measures:
    return Measures(HOROCYCLE_PERIMETER, HOROCYCLE_AREA)


def equidistant_halfdisk_measures(alpha: float) -> Measures:
    _check_angle("alpha", alpha)
    return _equidistant_halfdisk(alpha)


def geodesic_disk_measures(theta: float) -> Measures:
    _check_angle("theta", theta)
    return Measures(
        2.0 * math.pi / math.tan(theta),
        2.0 * math.pi / math.sin(theta) - 2.0 * math.pi,
    )


def region_measures(slab: SlabConfig, r: Region) -> Measures:
    if isinstance(r, Section):
        return section_measures(slab, r.width)
    if isinstance(r, GeodesicHalfdiskLower):
        return geodesic_halfdisk_lower_measures(r.theta1)
    if isinstance(r, GeodesicHalfdiskUpper):
        return geodesic_halfdisk_upper_measures(slab, r.theta2)
    if isinstance(r, HorocycleHalfdisk):
        return horocycle_halfdisk_measures()
    if isinstance(r, EquidistantHalfdisk):
        return equidistant_halfdisk_measures(r.alpha)
    if isinstance(r, GeodesicDisk):
        return geodesic_disk_measures(r.theta)
    raise TypeError(f"not a region: {r!r}")


def fits_in_slab(slab: SlabConfig, r: Region) -> bool:
    """Whether the region lies inside the closed slab ``1 <= y <= c``."""
    c = slab.c
    if isinstance(r, Section):
        return True
    if isinstance(r, (GeodesicHalfdiskLower, HorocycleHalfdisk, EquidistantHalfdisk)):
        return 1.0 + r.euclid_radius <= c
    if isinstance(r, GeodesicHalfdiskUpper):
        return r.euclid_radius(c) <= c - 1.0
    if isinstance(r, GeodesicDisk):
        return 2.0 * r.hyper_radius <= slab.d
    raise TypeError(f"not a region: {r!r}")
