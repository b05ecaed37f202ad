"""Grid verification suites run by ``horoslab verify``.

Each check reports the largest residual it observed and whether that stays
within its tolerance.  Passing ``tol`` overrides every tolerance at once,
which is how the harness is made to fail on purpose.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np

from horoslab import analysis, oracle
from horoslab.analysis import Regime, compute_thresholds
from horoslab.geometry import contact_angle, equidistant_from_radius
from horoslab.profile import (
    PROFILE_KINDS,
    classify,
    section_for_area,
)
from horoslab.regions import (
    HALF_PI,
    HOROCYCLE_AREA,
    EquidistantHalfdisk,
    GeodesicDisk,
    GeodesicHalfdiskLower,
    GeodesicHalfdiskUpper,
    SlabConfig,
    _equidistant_log,
    equidistant_halfdisk_measures,
    fits_in_slab,
    geodesic_halfdisk_lower_measures,
    geodesic_halfdisk_upper_measures,
    horocycle_halfdisk_measures,
    region_measures,
    section_measures,
)

SUITES = ("formulas", "lemmas", "profile")
PROFILE_SLABS = (1.5, 2.0, math.e, 5.0, math.e**2, 20.0)
POLYLINE_N = 100_000
UPPER_GRID = 1000
_ANY_SLAB = SlabConfig(math.e)  # disk measures do not depend on c


@dataclass(frozen=True)
class Check:
    name: str
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def _override(tol: float | None) -> Callable[[float], float]:
    """Tolerance picker: the check's own default unless an override is given."""
    return (lambda default: default) if tol is None else (lambda _default: tol)


def _grid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.linspace(lo, hi, n)


def _max_abs(values) -> float:
    return max((abs(v) for v in values), default=0.0)


# -- formulas ---------------------------------------------------------------


def formulas_suite(grid: int, tol: float | None = None) -> Iterator[Check]:
    t = _override(tol)
    angles = _grid(1e-3, HALF_PI - 1e-3, grid)
    poly_angles = angles[:: max(1, grid // 10)]

    h = horocycle_halfdisk_measures()
    yield Check("horocycle halfdisk = (2, 4 - pi)", max(abs(h.perimeter - 2.0), abs(h.area - (4.0 - math.pi))), t(1e-12))

    area_res, per_res = [], []
    for th in angles:
        r = math.cos(th)
        m = geodesic_halfdisk_lower_measures(contact_angle(r, 1.0))
        area_res.append(m.area - oracle.quad_area_upper_halfdisk(1.0, r))
        per_res.append(m.perimeter - oracle.quad_perimeter_upper_halfdisk(1.0, r))
    yield Check("geodesic halfdisk above y=1: area vs quadrature", _max_abs(area_res), t(1e-8))
    yield Check("geodesic halfdisk above y=1: perimeter vs quadrature", _max_abs(per_res), t(1e-8))

    area_res, per_res = [], []
    for th in angles:
        r = math.cos(th)
        m = geodesic_halfdisk_upper_measures(None, contact_angle(r, 1.0))
        area_res.append(m.area - oracle.quad_area_lower_halfdisk(1.0, r))
        per_res.append(m.perimeter - oracle.quad_perimeter_lower_halfdisk(1.0, r))
    yield Check("geodesic halfdisk below y=c: area vs quadrature", _max_abs(area_res), t(1e-8))
    yield Check("geodesic halfdisk below y=c: perimeter vs quadrature", _max_abs(per_res), t(1e-8))

    area_res, per_res = [], []
    for a in angles:
        eq = equidistant_from_radius(1.0 / math.sin(a))
        m = equidistant_halfdisk_measures(eq.alpha)
        area_res.append(m.area - oracle.quad_area_equidistant(eq.euclid_radius))
        per_res.append(m.perimeter - oracle.quad_perimeter_equidistant(eq.euclid_radius))
    yield Check("equidistant halfdisk: area vs quadrature", _max_abs(area_res), t(1e-8))
    yield Check("equidistant halfdisk: perimeter vs quadrature", _max_abs(per_res), t(1e-8))

    area_res, per_res = [], []
    for c, w in zip(_grid(1.0 + 1e-3, 20.0, grid), _grid(1e-3, 10.0, grid)):
        slab = SlabConfig(c)
        m = section_measures(slab, w)
        area_res.append(m.area - oracle.quad_section_area(c, w))
        per_res.append(m.perimeter - 2.0 * oracle.adaptive_simpson(lambda y: 1.0 / y, 1.0, c))
    yield Check("section: area vs quadrature", _max_abs(area_res), t(1e-8))
    yield Check("section: perimeter vs quadrature", _max_abs(per_res), t(1e-8))

    lower, upper_rel, equi = [], [], []
    for th in poly_angles:
        r = math.cos(th)
        th_r = contact_angle(r, 1.0)
        arc = oracle.circle_arc_sampler(1.0, r, 0.0, math.pi, equalize=True)
        lower.append(geodesic_halfdisk_lower_measures(th_r).perimeter - oracle.polyline_hyperbolic_length(arc, POLYLINE_N))
        arc = oracle.circle_arc_sampler(1.0, r, math.pi, 2.0 * math.pi, equalize=True)
        p = geodesic_halfdisk_upper_measures(None, th_r).perimeter
        upper_rel.append((p - oracle.polyline_hyperbolic_length(arc, POLYLINE_N)) / p)
        eq = equidistant_from_radius(1.0 / math.sin(th))
        arc = oracle.circle_arc_sampler(1.0, eq.euclid_radius, 0.0, math.pi, equalize=True)
        equi.append(equidistant_halfdisk_measures(eq.alpha).perimeter - oracle.polyline_hyperbolic_length(arc, POLYLINE_N))
    yield Check("geodesic halfdisk above y=1: perimeter vs polyline", _max_abs(lower), t(1e-6))
    yield Check("geodesic halfdisk below y=c: perimeter vs polyline (relative)", _max_abs(upper_rel), t(1e-6))
    yield Check("equidistant halfdisk: perimeter vs polyline", _max_abs(equi), t(1e-6))

    g = geodesic_halfdisk_lower_measures(1e-6)
    e = equidistant_halfdisk_measures(HALF_PI - 1e-6)
    junction = max(abs(g.perimeter - 2.0), abs(g.area - HOROCYCLE_AREA), abs(e.perimeter - 2.0), abs(e.area - HOROCYCLE_AREA))
    yield Check("junction continuity at the horocycle", junction, t(1e-5))


# -- lemmas -----------------------------------------------------------------


def _decrease_violation(values) -> float:
    """Largest increase between consecutive values (0 when strictly decreasing)."""
    diffs = np.diff(np.asarray(values))
    return max(0.0, float(diffs.max()))


def lemmas_suite(grid: int, tol: float | None = None) -> Iterator[Check]:
    t = _override(tol)
    inner = _grid(1e-4, HALF_PI - 1e-4, grid)

    gaps = [analysis.area_gap_disk(th) for th in inner]
    yield Check("halfdisk beats disk: gap > 0", max(0.0, -min(gaps)), t(0.0))
    yield Check("halfdisk beats disk: gap decreasing", _decrease_violation(gaps), t(0.0))
    limit = 4.0 + math.pi - 2.0 * math.sqrt(math.pi**2 + 1.0)
    yield Check("halfdisk beats disk: limit at theta1 -> 0", abs(analysis.area_gap_disk(1e-8) - limit), t(1e-6))
    consistency = []
    for th in inner:
        pair = geodesic_halfdisk_lower_measures(th).area - region_measures(
            _ANY_SLAB, GeodesicDisk(analysis.match_disk(th))
        ).area
        consistency.append(pair - analysis.area_gap_disk(th))
    yield Check("halfdisk vs disk: gap matches composed measures", _max_abs(consistency), t(1e-10))

    # fixed grid k pi / 2000: the gap vanishes like (pi/2 - theta)^3, so a finer
    # grid would push near-endpoint gaps under the 1e-9 floor of the check below
    closed = HALF_PI * np.arange(1, UPPER_GRID + 1) / UPPER_GRID
    gaps, resid, order = [], [], []
    for th in closed:
        th2 = analysis.match_upper(th)
        gaps.append(analysis.area_gap_upper(th))
        resid.append(th / math.tan(th) - (math.pi - th2) / math.tan(th2))
        order.append(max(0.0, th - th2))
    yield Check("halfdisk above beats below: gap >= 0", max(0.0, -min(gaps)), t(0.0))
    near_zero = [g for th, g in zip(closed, gaps) if th != HALF_PI and g < 1e-9]
    yield Check(
        "halfdisk above beats below: gap < 1e-9 only at pi/2",
        float(len(near_zero)) + (0.0 if abs(gaps[-1]) < 1e-9 else 1.0),
        t(0.0),
    )
    yield Check("halfdisk above vs below: matching residual", _max_abs(resid), t(1e-12))
    yield Check("halfdisk above vs below: theta1 <= theta2", max(order), t(0.0))

    th2 = analysis.match_upper(1e-300)
    value = (math.pi - th2) / math.sin(th2) - math.cos(th2)
    yield Check("horocycle vs halfdisk below: root of (pi - t) cot t = 1", abs(th2 - 1.1128), t(1e-3))
    yield Check("horocycle vs halfdisk below: half area plus pi/2 below 2", max(0.0, value - 2.0), t(0.0))

    gaps, resid = [], []
    for a in inner:
        th2 = analysis.match_equidistant(a)
        gaps.append(analysis.area_gap_equidistant(a))
        lhs = _equidistant_log(a) / math.cos(a)
        rhs = (math.pi - th2) / math.tan(th2)
        resid.append((lhs - rhs) / max(1.0, lhs))
    yield Check("equidistant beats halfdisk below: gap > 0", max(0.0, -min(gaps)), t(0.0))
    yield Check("equidistant beats halfdisk below: gap decreasing", max(0.0, _decrease_violation(gaps) - 1e-12), t(0.0))
    yield Check("equidistant vs halfdisk below: matching residual", _max_abs(resid), t(1e-12))

    consistency = []
    for th in inner:
        th2 = analysis.match_upper(th)
        below = geodesic_halfdisk_upper_measures(None, th2).area if th2 < HALF_PI else 0.0
        half = 0.5 * (geodesic_halfdisk_lower_measures(th).area - below)
        consistency.append(half - analysis.area_gap_upper(th))
    yield Check("halfdisk above vs below: gap matches composed measures", _max_abs(consistency), t(1e-10))

    upper_areas = [geodesic_halfdisk_upper_measures(None, th).area for th in inner]
    yield Check("halfdisk below: area strictly decreasing in theta2", _decrease_violation(upper_areas), t(0.0))

    worst = 0.0
    for A in _grid(1e-3, HOROCYCLE_AREA - 1e-3, grid):
        above = geodesic_halfdisk_lower_measures(analysis.solve_theta1_from_area(A)).perimeter
        below = geodesic_halfdisk_upper_measures(None, analysis.solve_theta2_from_area(A)).perimeter
        worst = max(worst, above - below)
    yield Check("equal area: halfdisk above no longer than halfdisk below", worst, t(0.0))


# -- profile ----------------------------------------------------------------

CANONICAL_ORDER = ("geodesic", "horocycle", "equidistant", "tie", "section")


def areas_for_slab(slab: SlabConfig, n: int) -> list[float]:
    """``n`` areas covering every branch of the slab's profile, thresholds included.

    The range ``(0, 2 * last threshold]`` is cut at the thresholds and each
    piece gets an equal share of uniformly spaced interior samples, so even
    coarse grids visit every branch.
    """
    th = compute_thresholds(slab)
    marks = [th.A0] if th.A1 is None else [th.A0, th.A1]
    edges = [0.0, *marks, 2.0 * marks[-1]]
    per_piece = max(1, (n - len(marks)) // (len(edges) - 1))
    areas = set(marks)
    for lo, hi in zip(edges, edges[1:]):
        areas.update(np.linspace(lo, hi, per_piece + 2)[1:-1].tolist())
    areas.add(edges[-1])
    return sorted(areas)


def sample_kind(cls) -> str:
    return "tie" if cls.tie else PROFILE_KINDS[type(cls.minimizers[0])]


def kinds_in_order(kinds: list[str]) -> bool:
    ranks = [CANONICAL_ORDER.index(k) for k in kinds]
    return all(a <= b for a, b in zip(ranks, ranks[1:]))


def expected_kinds(regime: Regime) -> set[str]:
    return {
        Regime.NARROW: {"geodesic", "tie", "section"},
        Regime.CRITICAL: {"geodesic", "tie", "section"},
        Regime.WIDE: {"geodesic", "horocycle", "equidistant", "tie", "section"},
    }[regime]


def competitors(slab: SlabConfig, A: float) -> list:
    """Every feasible candidate of area ``A`` from the single-component families."""
    cands = [section_for_area(slab, A)]
    if A < HOROCYCLE_AREA:
        cands.append(GeodesicHalfdiskLower(analysis.solve_theta1_from_area(A)))
    elif A > HOROCYCLE_AREA:
        cands.append(EquidistantHalfdisk(analysis.solve_alpha_from_area(A)))
    cands.append(GeodesicHalfdiskUpper(analysis.solve_theta2_from_area(A)))
    cands.append(GeodesicDisk(analysis.solve_disk_theta_from_area(A)))
    return [r for r in cands if fits_in_slab(slab, r)]


def profile_suite(grid: int, tol: float | None = None, slabs=PROFILE_SLABS) -> Iterator[Check]:
    t = _override(tol)
    strict = t(0.0)
    for c in slabs:
        slab = SlabConfig(c)
        th = compute_thresholds(slab)
        areas = areas_for_slab(slab, grid)
        classes = [classify(slab, A, thresholds=th) for A in areas]
        kinds = [sample_kind(cl) for cl in classes]
        label = f"c={c:.6g}"

        bad_order = 0.0 if kinds_in_order(kinds) and set(kinds) == expected_kinds(th.regime) else 1.0
        yield Check(f"{label}: minimizer kinds follow the regime order", bad_order, strict)

        dominance, infeasible, area_err = 0.0, 0.0, 0.0
        for A, cl in zip(areas, classes):
            for r in cl.minimizers:
                if not fits_in_slab(slab, r):
                    infeasible += 1.0
                m = region_measures(slab, r)
                area_err = max(area_err, abs(m.area - A), abs(m.perimeter - cl.minimal_perimeter))
            for r in competitors(slab, A):
                dominance = max(dominance, cl.minimal_perimeter - region_measures(slab, r).perimeter)
        yield Check(f"{label}: minimizer no longer than any feasible competitor", dominance, t(1e-9))
        yield Check(f"{label}: minimizers fit in the slab", infeasible, strict)
        yield Check(f"{label}: minimizers realize the area and perimeter", area_err, t(1e-9))

        perims = [cl.minimal_perimeter for cl in classes]
        yield Check(f"{label}: profile non-decreasing", _decrease_violation([-p for p in perims]), strict)
        flat = [cl.minimal_perimeter - slab.section_perimeter for cl, k in zip(classes, kinds) if k == "section"]
        yield Check(f"{label}: section branch equals 2 ln c", _max_abs(flat), t(1e-12))

        jumps = []
        for mark in [th.A0] + ([th.A1] if th.A1 is not None else []):
            below = classify(slab, mark - 1e-11, tie_tol=0.0, thresholds=th).minimal_perimeter
            above = classify(slab, mark + 1e-11, tie_tol=0.0, thresholds=th).minimal_perimeter
            jumps.append(abs(above - below))
        yield Check(f"{label}: profile continuous at thresholds", _max_abs(jumps), t(1e-9))


SUITE_FUNCS: dict[str, Callable[..., Iterator[Check]]] = {
    "formulas": formulas_suite,
    "lemmas": lemmas_suite,
    "profile": profile_suite,
}


def run(suite: str, grid: int, tol: float | None = None) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITE_FUNCS[name](grid, tol))
    return checks
