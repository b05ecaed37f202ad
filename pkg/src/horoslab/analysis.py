"""Inversions, matching equations, area gaps and thresholds.

Every map inverted here is strictly monotone on its bracket, so plain
bisection is used throughout.  Angles are bisected in ``log`` space over
``[ANGLE_FLOOR, pi/2]``: the solutions for large perimeters or areas are
tiny angles, and a logarithmic bracket keeps their relative precision.

The matching equations pair two families with equal perimeter; the gap
functions return the resulting area difference (halved where the
inequality is stated for half areas).  Positivity of a gap means the
halfdisk above ``{y = 1}`` encloses more area for the same perimeter.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

from horoslab.errors import ConvergenceError, DomainError
from horoslab.regions import (
    HALF_PI,
    HOROCYCLE_AREA,
    SlabConfig,
    _equidistant_halfdisk,
    _equidistant_log,
    _lower_halfdisk,
    _upper_halfdisk,
)

# smallest angle handed to the formulas; the equidistant perimeter there is ~1383
ANGLE_FLOOR = 1e-300
_LOG_FLOOR = math.log(ANGLE_FLOOR)
_LOG_HALF_PI = math.log(HALF_PI)
_BELOW_HALF_PI = math.nextafter(HALF_PI, 0.0)

REGIME_TOL = 1e-12


@dataclass(frozen=True)
class RootSettings:
    abs_tol: float = 1e-15
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


DEFAULT_ROOT = RootSettings()


def bisect(f: Callable[[float], float], lo: float, hi: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Root of ``f`` in ``[lo, hi]`` given a sign change between the endpoints.

    Stops when the bracket is narrower than ``abs_tol`` or cannot be split
    further in floating point, and returns the endpoint with the smaller
    residual.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise DomainError(f"root not bracketed in [{lo!r}, {hi!r}]")
    for _ in range(settings.max_iter):
        if hi - lo <= settings.abs_tol:
            break
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    else:
        raise ConvergenceError(f"bisection exceeded {settings.max_iter} iterations")
    return lo if abs(flo) <= abs(fhi) else hi


def _solve_angle(g: Callable[[float], float], target: float, settings: RootSettings) -> float:
    """Angle in ``(0, pi/2)`` where the monotone map ``g`` equals ``target``."""

    def residual(u: float) -> float:
        return g(min(math.exp(u), HALF_PI)) - target

    u = bisect(residual, _LOG_FLOOR, _LOG_HALF_PI, settings)
    return min(math.exp(u), _BELOW_HALF_PI)


def _lower_perimeter(t: float) -> float:
    return _lower_halfdisk(t).perimeter


def _lower_area(t: float) -> float:
    return _lower_halfdisk(t).area


def _equidistant_perimeter(a: float) -> float:
    return _equidistant_halfdisk(a).perimeter


def _equidistant_area(a: float) -> float:
    return _equidistant_halfdisk(a).area


def _upper_area(t: float) -> float:
    return _upper_halfdisk(t).area


def _upper_cot_weight(t: float) -> float:
    """``(pi - t) cot t``, half the perimeter of the geodesic halfdisk below ``{y = c}``."""
    return (math.pi - t) / math.tan(t)


def solve_theta1_from_perimeter(P: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    if not 0.0 < P < 2.0:
        raise DomainError(f"geodesic halfdisk perimeters lie in (0, 2), got {P!r}")
    return _solve_angle(_lower_perimeter, P, settings)


def solve_alpha_from_perimeter(P: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    if not P > 2.0:
        raise DomainError(f"equidistant halfdisk perimeters exceed 2, got {P!r}")
    if P >= _equidistant_perimeter(ANGLE_FLOOR):
        raise DomainError(f"perimeter {P!r} is beyond the representable range")
    return _solve_angle(_equidistant_perimeter, P, settings)


def solve_theta1_from_area(A: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    if not 0.0 < A < HOROCYCLE_AREA:
        raise DomainError(f"geodesic halfdisk areas lie in (0, 4 - pi), got {A!r}")
    return _solve_angle(_lower_area, A, settings)


def solve_alpha_from_area(A: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    if not A > HOROCYCLE_AREA:
        raise DomainError(f"equidistant halfdisk areas exceed 4 - pi, got {A!r}")
    if A >= _equidistant_area(ANGLE_FLOOR):
        raise DomainError(f"area {A!r} is beyond the representable range")
    return _solve_angle(_equidistant_area, A, settings)


def solve_theta2_from_area(A: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Angle of the geodesic halfdisk below ``{y = c}`` with area ``A``."""
    if not A > 0.0:
        raise DomainError(f"area must be positive, got {A!r}")
    if A >= _upper_area(ANGLE_FLOOR):
        raise DomainError(f"area {A!r} is beyond the representable range")
    return _solve_angle(_upper_area, A, settings)


def solve_disk_theta_from_area(A: float) -> float:
    """Angle of the geodesic disk with area ``A``: ``sin(theta) = 2 pi / (A + 2 pi)``."""
    if not A > 0.0:
        raise DomainError(f"area must be positive, got {A!r}")
    return math.asin(2.0 * math.pi / (A + 2.0 * math.pi))


def match_disk(theta1: float) -> float:
    """Angle of the full geodesic disk with the same perimeter as the halfdisk ``theta1``."""
    if not 0.0 < theta1 < HALF_PI:
        raise DomainError(f"theta1 must lie in (0, pi/2), got {theta1!r}")
    return math.atan2(math.pi, theta1 / math.tan(theta1))


def area_gap_disk(theta1: float) -> float:
    """Area of the lower geodesic halfdisk minus the area of the disk of equal perimeter."""
    if not 0.0 < theta1 < HALF_PI:
        raise DomainError(f"theta1 must lie in (0, pi/2), got {theta1!r}")
    t = theta1
    q = t / math.sin(t)
    return 2.0 * q + 2.0 * math.cos(t) - math.pi - 2.0 * math.sqrt(q * q - t * t + math.pi**2) + 2.0 * math.pi


def match_upper(theta1: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Angle of the geodesic halfdisk below ``{y = c}`` with the perimeter of the one above ``{y = 1}``.

    Solves ``theta1 cot(theta1) = (pi - theta2) cot(theta2)``.  The right-hand
    side falls strictly from infinity to 0 on ``(0, pi/2]``.
    """
    if not 0.0 < theta1 <= HALF_PI:
        raise DomainError(f"theta1 must lie in (0, pi/2], got {theta1!r}")
    if theta1 == HALF_PI:
        return HALF_PI
    return _solve_angle(_upper_cot_weight, theta1 / math.tan(theta1), settings)


def _upper_half_area_shifted(t: float) -> float:
    # (|S2-| + pi) / 2
    return (math.pi - t) / math.sin(t) - math.cos(t)


def area_gap_upper(theta1: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Half the area excess of the halfdisk above ``{y = 1}`` over the equal-perimeter one below ``{y = c}``."""
    theta2 = match_upper(theta1, settings)
    t = theta1
    return t / math.sin(t) + math.cos(t) - _upper_half_area_shifted(theta2)


def match_equidistant(alpha: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Angle of the geodesic halfdisk below ``{y = c}`` with the perimeter of the equidistant halfdisk."""
    if not 0.0 < alpha < HALF_PI:
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    return _solve_angle(_upper_cot_weight, _equidistant_log(alpha) / math.cos(alpha), settings)


def area_gap_equidistant(alpha: float, settings: RootSettings = DEFAULT_ROOT) -> float:
    """Half the area excess of the equidistant halfdisk over the equal-perimeter halfdisk below ``{y = c}``."""
    theta2 = match_equidistant(alpha, settings)
    return 1.0 / math.sin(alpha) + math.tan(alpha) * _equidistant_log(alpha) - _upper_half_area_shifted(theta2)


class Regime(str, Enum):
    NARROW = "d<1"
    CRITICAL = "d=1"
    WIDE = "d>1"


def regime_of(slab: SlabConfig, tol: float = REGIME_TOL) -> Regime:
    """Compare the slab width ``d = ln c`` with 1; widths within ``tol`` of 1 are critical."""
    d = slab.d
    if abs(d - 1.0) <= tol:
        return Regime.CRITICAL
    return Regime.NARROW if d < 1.0 else Regime.WIDE


@dataclass(frozen=True)
class Thresholds:
    """Areas where the minimizer changes family.

    ``A0`` ends the geodesic halfdisk branch.  ``A1`` exists only for wide
    slabs and ends the equidistant branch.
    """

    c: float
    section_perimeter: float
    A0: float
    A1: float | None
    regime: Regime

    @property
    def d(self) -> float:
        return math.log(self.c)


def compute_thresholds(slab: SlabConfig, settings: RootSettings = DEFAULT_ROOT) -> Thresholds:
    regime = regime_of(slab)
    p = slab.section_perimeter
    if regime is Regime.NARROW:
        a0 = _lower_area(solve_theta1_from_perimeter(p, settings))
        return Thresholds(slab.c, p, a0, None, regime)
    if regime is Regime.CRITICAL:
        return Thresholds(slab.c, p, HOROCYCLE_AREA, None, regime)
    a1 = _equidistant_area(solve_alpha_from_perimeter(p, settings))
    return Thresholds(slab.c, p, HOROCYCLE_AREA, a1, regime)
