"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line (shown in the terminal summary
and, with ``-s``, inline) and then asserts on the same condition.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest
from scipy import integrate, optimize

from horoslab import analysis, oracle
from horoslab.analysis import Regime, compute_thresholds
from horoslab.geometry import contact_angle, equidistant_from_radius
from horoslab.profile import PROFILE_KINDS, classify, profile_curve, section_for_area
from horoslab.regions import (
    HALF_PI,
    HOROCYCLE_AREA,
    EquidistantHalfdisk,
    GeodesicDisk,
    GeodesicHalfdiskLower,
    GeodesicHalfdiskUpper,
    SlabConfig,
    equidistant_halfdisk_measures,
    fits_in_slab,
    geodesic_halfdisk_lower_measures,
    geodesic_halfdisk_upper_measures,
    horocycle_halfdisk_measures,
    region_measures,
    section_measures,
)

SLABS = (1.5, 2.0, math.e, 5.0, math.e**2, 20.0)


# -- 1 ----------------------------------------------------------------------


def test_c01_horocycle_constants(acceptance_report):
    m = horocycle_halfdisk_measures()
    err = max(abs(m.perimeter - 2.0), abs(m.area - (4.0 - math.pi)))
    ok = err < 1e-12
    acceptance_report("C1 horocycle halfdisk (2, 4 - pi)", ok, f"max error {err:.2e} < 1e-12")
    assert ok


# -- 2 ----------------------------------------------------------------------


def _family_residuals() -> dict[str, tuple[float, float]]:
    """Largest |closed form - quadrature| for perimeter and area, per family."""
    angles = np.linspace(1e-3, HALF_PI - 1e-3, 50)
    out: dict[str, tuple[float, float]] = {}

    per, area = [], []
    for th in angles:
        r = math.cos(th)
        m = geodesic_halfdisk_lower_measures(contact_angle(r, 1.0))
        per.append(abs(m.perimeter - oracle.quad_perimeter_upper_halfdisk(1.0, r)))
        area.append(abs(m.area - oracle.quad_area_upper_halfdisk(1.0, r)))
    out["geodesic halfdisk above y=1"] = (max(per), max(area))

    per, area = [], []
    for th in angles:
        c = 3.0
        r = c * math.cos(th)
        m = geodesic_halfdisk_upper_measures(None, contact_angle(r, c))
        per.append(abs(m.perimeter - oracle.quad_perimeter_lower_halfdisk(c, r)))
        area.append(abs(m.area - oracle.quad_area_lower_halfdisk(c, r)))
    out["geodesic halfdisk below y=c"] = (max(per), max(area))

    per, area = [], []
    for a in angles:
        eq = equidistant_from_radius(1.0 / math.sin(a))
        m = equidistant_halfdisk_measures(eq.alpha)
        per.append(abs(m.perimeter - oracle.quad_perimeter_equidistant(eq.euclid_radius)))
        area.append(abs(m.area - oracle.quad_area_equidistant(eq.euclid_radius)))
    out["equidistant halfdisk"] = (max(per), max(area))

    per, area = [], []
    for c, w in zip(np.linspace(1.0 + 1e-3, 20.0, 50), np.linspace(1e-3, 10.0, 50)):
        m = section_measures(SlabConfig(c), w)
        per.append(abs(m.perimeter - 2.0 * oracle.adaptive_simpson(lambda y: 1.0 / y, 1.0, c)))
        area.append(abs(m.area - oracle.quad_section_area(c, w)))
    out["section"] = (max(per), max(area))
    return out


def test_c02_oracle_equivalence(acceptance_report):
    start = time.perf_counter()
    residuals = _family_residuals()
    elapsed = time.perf_counter() - start
    worst = max(max(v) for v in residuals.values())
    ok = worst < 1e-8 and elapsed < 10.0
    detail = ", ".join(f"{k} {max(v):.1e}" for k, v in residuals.items())
    acceptance_report("C2 closed forms vs quadrature (50-point grids)", ok, f"{detail}; {elapsed:.1f} s")
    assert ok


def test_c02_polyline_oracle(acceptance_report):
    """Polyline cross-check at n = 1e5 on every arc family.

    The arc below ``{y = c}`` reaches hyperbolic length ~6e3 at the grid end,
    where the second-order polyline error is ~4e-7 relative; that family is
    therefore held to a relative bound.
    """
    angles = np.linspace(1e-3, HALF_PI - 1e-3, 50)
    n = 100_000
    lower, upper_rel, equi = [], [], []
    for th in angles:
        r = math.cos(th)
        t = contact_angle(r, 1.0)
        arc = oracle.circle_arc_sampler(1.0, r, 0.0, math.pi, equalize=True)
        lower.append(abs(geodesic_halfdisk_lower_measures(t).perimeter - oracle.polyline_hyperbolic_length(arc, n)))
        arc = oracle.circle_arc_sampler(1.0, r, math.pi, 2.0 * math.pi, equalize=True)
        p = geodesic_halfdisk_upper_measures(None, t).perimeter
        upper_rel.append(abs(p - oracle.polyline_hyperbolic_length(arc, n)) / p)
        eq = equidistant_from_radius(1.0 / math.sin(th))
        arc = oracle.circle_arc_sampler(1.0, eq.euclid_radius, 0.0, math.pi, equalize=True)
        equi.append(abs(equidistant_halfdisk_measures(eq.alpha).perimeter - oracle.polyline_hyperbolic_length(arc, n)))
    ok = max(lower) < 1e-6 and max(equi) < 1e-6 and max(upper_rel) < 1e-6
    acceptance_report(
        "C2 closed forms vs polyline (n=1e5)",
        ok,
        f"above y=1 {max(lower):.1e}, equidistant {max(equi):.1e} (abs, < 1e-6); below y=c {max(upper_rel):.1e} (rel, < 1e-6)",
    )
    assert ok


# -- 3 ----------------------------------------------------------------------


def test_c03_junction_continuity(acceptance_report):
    g = geodesic_halfdisk_lower_measures(1e-6)
    e = equidistant_halfdisk_measures(HALF_PI - 1e-6)
    err = max(
        abs(g.perimeter - 2.0), abs(g.area - HOROCYCLE_AREA), abs(e.perimeter - 2.0), abs(e.area - HOROCYCLE_AREA)
    )
    ok = err < 1e-5
    acceptance_report("C3 junction continuity at the horocycle", ok, f"max distance {err:.2e} < 1e-5")
    assert ok


# -- 4 ----------------------------------------------------------------------


def test_c04_halfdisk_beats_disk(acceptance_report):
    grid = np.linspace(1e-4, HALF_PI - 1e-4, 1000)
    gaps = np.array([analysis.area_gap_disk(t) for t in grid])
    positive = bool(np.all(gaps > 0.0))
    decreasing = bool(np.all(np.diff(gaps) < 0.0))
    limit = 4.0 + math.pi - 2.0 * math.sqrt(math.pi**2 + 1.0)
    lim_err = abs(analysis.area_gap_disk(1e-8) - limit)
    stated_err = abs(limit - 0.547777)
    ok = positive and decreasing and lim_err < 1e-6 and stated_err < 1e-6
    acceptance_report(
        "C4 halfdisk vs disk gap",
        ok,
        f"min gap {gaps.min():.2e} > 0, strictly decreasing={decreasing}, limit error {lim_err:.1e} < 1e-6",
    )
    assert ok


# -- 5 ----------------------------------------------------------------------


def test_c05_halfdisk_above_beats_below(acceptance_report):
    grid = np.pi * np.arange(1, 1001) / 2000.0
    gaps = np.array([analysis.area_gap_upper(t) for t in grid])
    residual = max(
        abs(t / math.tan(t) - (math.pi - t2) / math.tan(t2)) for t, t2 in ((t, analysis.match_upper(t)) for t in grid)
    )
    small = grid[gaps < 1e-9]
    ok = bool(np.all(gaps >= 0.0)) and list(small) == [grid[-1]] and residual < 1e-12
    acceptance_report(
        "C5 halfdisk above vs below y=c",
        ok,
        f"min gap {gaps.min():.1e} >= 0, gap < 1e-9 only at {small.tolist()}, matching residual {residual:.1e} < 1e-12",
    )
    assert ok


# -- 6 ----------------------------------------------------------------------


def test_c06_horocycle_vs_halfdisk_below(acceptance_report):
    theta2 = analysis.match_upper(1e-300)  # theta1 cot theta1 -> 1
    value = (math.pi - theta2) / math.sin(theta2) - math.cos(theta2)
    ref_theta = optimize.brentq(lambda t: (math.pi - t) / math.tan(t) - 1.0, 0.5, 1.5, xtol=1e-15)
    ref_value = (math.pi - ref_theta) / math.sin(ref_theta) - math.cos(ref_theta)
    ok = abs(theta2 - 1.1128) < 1e-3 and abs(value - ref_value) < 1e-3 and abs(value - 1.8197) < 1e-3 and value < 2.0
    acceptance_report(
        "C6 root of (pi - t) cot t = 1",
        ok,
        f"theta2 {theta2:.10f} (ref {ref_theta:.10f}), value {value:.10f} (ref {ref_value:.10f}) < 2",
    )
    assert ok


# -- 7 ----------------------------------------------------------------------


def test_c07_equidistant_beats_halfdisk_below(acceptance_report):
    grid = np.linspace(1e-4, HALF_PI - 1e-4, 1000)
    gaps = np.array([analysis.area_gap_equidistant(a) for a in grid])
    rise = float(np.diff(gaps).max())
    ok = bool(np.all(gaps > 0.0)) and rise <= 1e-12
    acceptance_report(
        "C7 equidistant vs halfdisk below y=c",
        ok,
        f"min gap {gaps.min():.4f} > 0, largest forward difference {rise:.1e} <= 1e-12",
    )
    assert ok


# -- 8 ----------------------------------------------------------------------


def _scipy_lower_threshold(c: float) -> float:
    """Area of the halfdisk above y=1 whose arc length is 2 ln c, from scipy only."""

    def length(r: float) -> float:
        return integrate.quad(lambda t: r / (1.0 + r * math.sin(t)), 0.0, math.pi, epsabs=1e-13, epsrel=1e-13)[0]

    r = optimize.brentq(lambda r: length(r) - 2.0 * math.log(c), 1e-9, 1.0 - 1e-15, xtol=1e-15)
    return integrate.dblquad(
        lambda y, x: 1.0 / (y * y), -r, r, lambda x: 1.0, lambda x: 1.0 + math.sqrt(r * r - x * x),
        epsabs=1e-12, epsrel=1e-12,
    )[0]


def _scipy_upper_threshold(c: float) -> float:
    """Area of the equidistant halfdisk whose arc length is 2 ln c, from scipy only."""

    def length(r: float) -> float:
        return integrate.quad(lambda t: r / (1.0 + r * math.sin(t)), 0.0, math.pi, epsabs=1e-13, epsrel=1e-13)[0]

    r = optimize.brentq(lambda r: length(r) - 2.0 * math.log(c), 1.0 + 1e-12, 1e3, xtol=1e-14)
    return integrate.dblquad(
        lambda y, x: 1.0 / (y * y), -r, r, lambda x: 1.0, lambda x: 1.0 + math.sqrt(r * r - x * x),
        epsabs=1e-12, epsrel=1e-12,
    )[0]


def test_c08_thresholds(acceptance_report):
    exact = compute_thresholds(SlabConfig(math.e))
    ref_a0 = _scipy_lower_threshold(2.0)
    ref_a1 = _scipy_upper_threshold(math.e**2)
    a0 = compute_thresholds(SlabConfig(2.0)).A0
    a1 = compute_thresholds(SlabConfig(math.e**2)).A1

    tie_err = 0.0
    for c in (1.5, 2.0, 5.0, math.e**2, 20.0):
        slab = SlabConfig(c)
        th = compute_thresholds(slab)
        mark = th.A1 if th.A1 is not None else th.A0
        cls = classify(slab, mark)
        assert cls.tie
        for r in cls.minimizers:
            tie_err = max(tie_err, abs(region_measures(slab, r).perimeter - 2.0 * math.log(c)))

    ok = (
        exact.regime is Regime.CRITICAL
        and exact.A0 == 4.0 - math.pi
        and abs(a0 - ref_a0) < 1e-3
        and abs(0.3739 - ref_a0) < 1e-3
        and abs(a1 - ref_a1) < 1e-3
        and abs(4.9458 - ref_a1) < 1e-3
        and tie_err < 1e-9
    )
    acceptance_report(
        "C8 thresholds",
        ok,
        f"A0(e) = 4 - pi exactly; A0(2) {a0:.10f} (ref {ref_a0:.10f}); "
        f"A1(e^2) {a1:.10f} (ref {ref_a1:.10f}); tie perimeter error {tie_err:.1e} < 1e-9",
    )
    assert ok


# -- 9 ----------------------------------------------------------------------

ORDER = {
    Regime.NARROW: ["geodesic", "tie", "section"],
    Regime.CRITICAL: ["geodesic", "tie", "section"],
    Regime.WIDE: ["geodesic", "horocycle", "equidistant", "tie", "section"],
}


def _areas(th, n: int = 100) -> list[float]:
    marks = [th.A0] if th.A1 is None else [th.A0, th.A1]
    top = 2.0 * marks[-1]
    return sorted(set(np.linspace(top / n, top, n - len(marks)).tolist()) | set(marks))


def _feasible_competitors(slab: SlabConfig, A: float) -> list:
    cands = [section_for_area(slab, A), GeodesicHalfdiskUpper(analysis.solve_theta2_from_area(A))]
    cands.append(GeodesicDisk(analysis.solve_disk_theta_from_area(A)))
    if A < HOROCYCLE_AREA:
        cands.append(GeodesicHalfdiskLower(analysis.solve_theta1_from_area(A)))
    elif A > HOROCYCLE_AREA:
        cands.append(EquidistantHalfdisk(analysis.solve_alpha_from_area(A)))
    return [r for r in cands if fits_in_slab(slab, r)]


def test_c09_classifier_trichotomy(acceptance_report):
    start = time.perf_counter()
    bad_order, worst_dominance, samples = [], 0.0, 0
    for c in SLABS:
        slab = SlabConfig(c)
        th = compute_thresholds(slab)
        kinds = []
        for A in _areas(th):
            cls = classify(slab, A, thresholds=th)
            samples += 1
            kind = "tie" if cls.tie else PROFILE_KINDS[type(cls.minimizers[0])]
            if not kinds or kinds[-1] != kind:
                kinds.append(kind)
            for r in _feasible_competitors(slab, A):
                worst_dominance = max(worst_dominance, cls.minimal_perimeter - region_measures(slab, r).perimeter)
        if kinds != ORDER[th.regime]:
            bad_order.append((c, kinds))
    elapsed = time.perf_counter() - start
    ok = not bad_order and worst_dominance <= 1e-9 and elapsed < 30.0
    acceptance_report(
        "C9 classifier trichotomy and dominance",
        ok,
        f"{samples} samples over 6 slabs, order violations {bad_order or 'none'}, "
        f"worst excess over a competitor {worst_dominance:.1e} <= 1e-9, {elapsed:.1f} s",
    )
    assert ok


# -- 10 ---------------------------------------------------------------------


def test_c10_profile_monotone_and_flat(acceptance_report):
    worst_drop, worst_flat = 0.0, 0.0
    for c in SLABS:
        slab = SlabConfig(c)
        th = compute_thresholds(slab)
        top = 2.0 * (th.A1 if th.A1 is not None else th.A0)
        samples = profile_curve(slab, top / 200.0, top, 200)
        perims = np.array([s.min_perimeter for s in samples])
        worst_drop = max(worst_drop, float(-np.diff(perims).min()))
        flat = [abs(s.min_perimeter - 2.0 * math.log(c)) for s in samples if s.region_kind == "section"]
        worst_flat = max([worst_flat, *flat])
    ok = worst_drop <= 0.0 and worst_flat <= 1e-12
    acceptance_report(
        "C10 profile non-decreasing, flat on the section branch",
        ok,
        f"largest decrease {worst_drop:.1e} <= 0, section branch deviation {worst_flat:.1e} <= 1e-12",
    )
    assert ok


# -- 11 ---------------------------------------------------------------------


def _semicircle(t: np.ndarray):
    u = math.pi * t
    return np.cos(u), 1.0 + np.sin(u)


def test_c11_polyline_convergence(acceptance_report):
    errors = {n: abs(oracle.polyline_hyperbolic_length(_semicircle, n) - 2.0) for n in (1_000, 10_000, 100_000)}
    doubling = {n: abs(oracle.polyline_hyperbolic_length(_semicircle, 2 * n) - 2.0) for n in errors}
    shrinking = all(doubling[n] < errors[n] for n in errors)
    ok = errors[100_000] < 1e-6 and shrinking
    acceptance_report(
        "C11 polyline length of the unit semicircle",
        ok,
        f"error at n=1e5 {errors[100_000]:.1e} < 1e-6, halves under n -> 2n: {shrinking}",
    )
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
