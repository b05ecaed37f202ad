"""Brute-force numerical oracles for the closed-form measures.

Areas are integrals of the hyperbolic area element ``dx dy / y^2`` and
lengths integrals of the parametric speed ``|gamma'| / y``, evaluated by
adaptive Simpson quadrature.  A discretized polyline length gives a second,
quadrature-free route to curve lengths.

Naming follows the horocycle the halfdisk is attached to: ``upper_halfdisk``
is the part of a circle about ``(0, c)`` above ``{y = c}`` and
``lower_halfdisk`` the part below it.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from horoslab.errors import ConvergenceError, DomainError

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSettings:
    abs_tol: float = 1e-10
    max_depth: int = 40
    # panels are always split this many times before the error test may accept,
    # so a coarse panel cannot pass by an accidental agreement of estimates
    min_depth: int = 4

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise ValueError("abs_tol must be positive")
        if not 1 <= self.max_depth <= 200:
            raise ValueError("max_depth must lie in [1, 200]")
        if not 0 <= self.min_depth <= self.max_depth:
            raise ValueError("min_depth must lie in [0, max_depth]")


DEFAULT_QUAD = QuadratureSettings()


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    settings: QuadratureSettings = DEFAULT_QUAD,
) -> float:
    """Integrate ``f`` over ``[a, b]`` by adaptive Simpson subdivision.

    Each panel is accepted once the two half-panel estimates agree with the
    whole-panel estimate to ``15 * tol`` (the tolerance is halved with each
    split), or once the disagreement is at rounding level for the panel.

    Raises:
        ConvergenceError: if a panel is still unresolved at ``max_depth``.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, settings)

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_panel(f, a, b, fa, fm, fb, whole, settings.abs_tol, settings.max_depth, settings.min_depth)


def _simpson_panel(f, a, b, fa, fm, fb, whole, tol, depth, forced):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    # widths from the rounded nodes: with large integrands an ulp of width mismatch dominates delta
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if forced <= 0 and (abs(delta) <= 15.0 * tol or abs(delta) <= 64.0 * _EPS * (abs(left) + abs(right))):
        return left + right + delta / 15.0
    if depth <= 0 or not (a < lm < m < rm < b):
        raise ConvergenceError(f"adaptive Simpson did not converge on [{a!r}, {b!r}]")
    return _simpson_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, forced - 1) + _simpson_panel(
        f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, forced - 1
    )


def _check_radius(c: float, r: float) -> None:
    if not c > 0.0:
        raise DomainError(f"c must be positive, got {c!r}")
    if not 0.0 <= r < c:
        raise DomainError(f"need 0 <= r < c, got r={r!r}, c={c!r}")


def quad_area_upper_halfdisk(c: float, r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Area of the part of the disk about ``(0, c)`` of radius ``r`` above ``{y = c}``.

    Integrates ``(2/c) sqrt(r^2 - x^2) / (c + sqrt(r^2 - x^2))`` over
    ``[0, r]`` after substituting ``x = r sin u``.
    """
    _check_radius(c, r)
    if r == 0.0:
        return 0.0

    def integrand(u: float) -> float:
        s = r * math.cos(u)
        return s * s / (c + s)

    return 2.0 / c * adaptive_simpson(integrand, 0.0, 0.5 * math.pi, settings)


def quad_area_lower_halfdisk(c: float, r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Area of the part of the disk about ``(0, c)`` of radius ``r`` below ``{y = c}``.

    After ``x = r sin u`` the integrand is ``s^2 / (c - s)`` with
    ``s = r cos u``; its peak at ``u = 0`` sharpens as ``r -> c``.  The
    denominator is evaluated as ``(c - r) + 2 r sin^2(u/2)`` to avoid the
    cancellation in ``c - r cos u``.
    """
    _check_radius(c, r)
    if r == 0.0:
        return 0.0
    gap = c - r

    def integrand(u: float) -> float:
        s = r * math.cos(u)
        return s * s / (gap + 2.0 * r * math.sin(0.5 * u) ** 2)

    return 2.0 / c * adaptive_simpson(integrand, 0.0, 0.5 * math.pi, settings)


def quad_perimeter_upper_halfdisk(c: float, r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Hyperbolic length of the arc of the circle about ``(0, c)`` lying above ``{y = c}``.

    Valid for any ``r > 0``; the arc is ``(r cos t, c + r sin t)``, ``t in [0, pi]``.
    """
    if not (c > 0.0 and r > 0.0):
        raise DomainError("c and r must be positive")
    return 2.0 * adaptive_simpson(lambda t: r / (c + r * math.sin(t)), 0.0, 0.5 * math.pi, settings)


def quad_perimeter_lower_halfdisk(c: float, r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Hyperbolic length of the arc of the circle about ``(0, c)`` lying below ``{y = c}``."""
    _check_radius(c, r)
    if r == 0.0:
        return 0.0
    gap = c - r

    def speed(v: float) -> float:
        # v measured from the lowest point, so y = c - r cos v = (c - r) + 2 r sin^2(v/2)
        return r / (gap + 2.0 * r * math.sin(0.5 * v) ** 2)

    return 2.0 * adaptive_simpson(speed, 0.0, 0.5 * math.pi, settings)


def quad_perimeter_equidistant(r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Length of the equidistant arc ``x^2 + (y - 1)^2 = r^2`` above ``{y = 1}``."""
    if not r > 1.0:
        raise DomainError(f"equidistant halfdisks need r > 1, got {r!r}")
    return quad_perimeter_upper_halfdisk(1.0, r, settings)


def quad_area_equidistant(r: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Area of the equidistant halfdisk of Euclidean radius ``r`` above ``{y = 1}``.

    Same integrand as :func:`quad_area_upper_halfdisk` with ``c = 1``; the
    ``r < c`` restriction does not apply because the region stays above
    ``{y = 1}``.
    """
    if not r > 1.0:
        raise DomainError(f"equidistant halfdisks need r > 1, got {r!r}")

    def integrand(u: float) -> float:
        s = r * math.cos(u)
        return s * s / (1.0 + s)

    return 2.0 * adaptive_simpson(integrand, 0.0, 0.5 * math.pi, settings)


def quad_section_area(c: float, width: float, settings: QuadratureSettings = DEFAULT_QUAD) -> float:
    """Area of ``[0, width] x [1, c]`` by nested quadrature of ``1 / y^2``.

    The inner integral runs over ``s = ln y``, where the integrand becomes
    the smooth ``exp(-s)`` and needs far fewer panels.
    """
    if not c > 1.0:
        raise DomainError(f"c must exceed 1, got {c!r}")
    if width < 0.0:
        raise DomainError(f"width must be non-negative, got {width!r}")
    if width == 0.0:
        return 0.0
    inner = QuadratureSettings(settings.abs_tol / (4.0 * width), settings.max_depth, settings.min_depth)

    def column(_x: float) -> float:
        return adaptive_simpson(lambda s: math.exp(-s), 0.0, math.log(c), inner)

    return adaptive_simpson(column, 0.0, width, settings)


def quad_2d(
    f: Callable[[float, float], float],
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    settings: QuadratureSettings = DEFAULT_QUAD,
) -> float:
    """Iterated adaptive Simpson over a rectangle, ``f(x, y)`` with ``y`` innermost."""
    (x0, x1), (y0, y1) = x_range, y_range
    span = max(abs(x1 - x0), 1.0)
    inner = QuadratureSettings(settings.abs_tol / (4.0 * span), settings.max_depth, settings.min_depth)
    return adaptive_simpson(
        lambda x: adaptive_simpson(lambda y: f(x, y), y0, y1, inner), x0, x1, settings
    )


def polyline_hyperbolic_length(
    sampler: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    n: int,
) -> float:
    """Hyperbolic length of the polyline through ``n`` uniform samples of a curve.

    ``sampler`` maps an array of parameters in ``[0, 1]`` to arrays
    ``(x, y)``.  Each chord is scaled by the mean height of its endpoints,
    which makes the estimate second-order accurate.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    t = np.linspace(0.0, 1.0, n)
    x, y = (np.asarray(v, dtype=float) for v in sampler(t))
    if np.any(y <= 0.0):
        raise DomainError("curve leaves the upper half-plane")
    chords = np.hypot(np.diff(x), np.diff(y))
    heights = 0.5 * (y[1:] + y[:-1])
    return math.fsum(chords / heights)


def circle_arc_sampler(
    center_height: float,
    radius: float,
    t0: float,
    t1: float,
    *,
    equalize: bool = False,
    fine: int = 1 << 18,
) -> Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]:
    """Sampler for the arc ``(r cos t, y0 + r sin t)``, ``t`` from ``t0`` to ``t1``.

    With ``equalize`` the parameter is redistributed so that samples are
    roughly equally spaced in hyperbolic length, using a trapezoid sum of
    the speed on ``fine`` points.  This only moves the nodes along the
    circle; the polyline still measures the true curve.  It matters for
    arcs that pass close to ``{y = 0}`` relative to their radius.
    """
    y0, r = center_height, radius
    if equalize:
        t_fine = np.linspace(t0, t1, fine)
        speed = r / (y0 + r * np.sin(t_fine))
        cum = np.concatenate(([0.0], np.cumsum(0.5 * (speed[1:] + speed[:-1]) * np.diff(t_fine))))
        cum /= cum[-1]

    def sample(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        t = np.interp(s, cum, t_fine) if equalize else t0 + (t1 - t0) * s
        return r * np.cos(t), y0 + r * np.sin(t)

    return sample
