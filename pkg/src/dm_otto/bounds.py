"""Analytic reference quantities, regime predicates and second-law scans.

Covers the Carnot efficiency, the closed-form efficiency ceiling for the
field protocol, the level-ordering predicate 2B > |J| sqrt(1 + D^2), the
DM threshold where the global efficiency falls to the local value, and a
grid scanner that flags any Clausius violation.

The threshold search is defined on G(D) = eta(D) - eta_local rather than
on any printed population grouping: the crossing is located by bracketing
plus bisection, and the two closed-form candidates (the printed
4 B1^2/J^2 - 1 and its square-rooted variant) are reported alongside for
comparison, never assumed.
"""

import math
from dataclasses import dataclass

from .cycle import (
    IDLE_TOL,
    BathSpec,
    Classification,
    OttoProtocol,
    VaryField,
    run_cycle,
)
from .errors import InvalidParameterError, RegimeError

__all__ = [
    "carnot",
    "eta_upper_bound",
    "level_ordering_check",
    "CrossingSearch",
    "crossing_threshold",
    "Violation",
    "second_law_scan",
    "BoundsReport",
    "bounds_report",
]

#: |G| at the returned crossing must not exceed this.
_CROSSING_RESIDUAL = 1e-10


def carnot(t_hot: float, t_cold: float) -> float:
    """Two-bath efficiency ceiling 1 - T_cold/T_hot."""
    if not (t_hot > t_cold > 0.0):
        raise InvalidParameterError(
            f"need T_hot > T_cold > 0, got T_hot={t_hot!r}, T_cold={t_cold!r}"
        )
    return 1.0 - t_cold / t_hot


def eta_upper_bound(b1: float, b2: float, j: float, d: float) -> float:
    """Efficiency ceiling (1 - B2/B1) / (1 - J sqrt(D^2+1) / (2 B1)).

    Valid in the regime B1 > B2 > 0 with 2 B1 > J sqrt(D^2 + 1); outside
    the latter the denominator is not positive and a RegimeError is
    raised.
    """
    if not (b1 > b2 > 0.0):
        raise InvalidParameterError(f"need B1 > B2 > 0, got B1={b1!r}, B2={b2!r}")
    denominator = 1.0 - j * math.sqrt(d * d + 1.0) / (2.0 * b1)
    if denominator <= 0.0:
        raise RegimeError(
            f"2*B1 = {2.0 * b1!r} does not exceed J*sqrt(D^2+1) = "
            f"{j * math.sqrt(d * d + 1.0)!r}; the bound is undefined here"
        )
    return (1.0 - b2 / b1) / denominator


def level_ordering_check(b: float, j: float, d: float) -> bool:
    """True iff the field doublet brackets the interaction doublet:
    -2B < -|J| sqrt(D^2+1) < |J| sqrt(D^2+1) < 2B."""
    return 2.0 * b > abs(j) * math.sqrt(1.0 + d * d)


@dataclass(frozen=True)
class CrossingSearch:
    """Result of the eta(D) = eta_local threshold search.

    ``d_root`` is None when no crossing exists on [0, d_max]; the two
    candidate fields carry the closed-form guesses for comparison
    (``corrected_candidate`` is None when the printed expression is
    negative and has no real square root).
    """

    d_root: float | None
    g_at_root: float | None
    printed_candidate: float
    corrected_candidate: float | None
    d_max: float
    detail: str


def _bisect_sign_change(f, a, b, fa, fb, *, residual, max_iter=240):
    """Bisection on a bracketing interval; returns (x, f(x)).

    Stops once |f| drops below ``residual`` or the interval reaches float
    resolution.  ``f`` may return None (point fell off the function's
    domain); such midpoints are folded toward ``a``.
    """
    best_x, best_f = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = f(m)
        if fm is None:
            b = m
            continue
        if abs(fm) < abs(best_f):
            best_x, best_f = m, fm
        if abs(fm) <= residual:
            return m, fm
        if (fm > 0.0) == (fa > 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return best_x, best_f


def crossing_threshold(
    b1: float,
    b2: float,
    j: float,
    t_hot: float,
    t_cold: float,
    *,
    d_max: float | None = None,
    scan_points: int = 2001,
) -> CrossingSearch:
    """Locate the DM strength where the global efficiency meets the local one.

    Scans D in [0, d_max] (default: twice the square-rooted candidate),
    brackets a sign change of G(D) = eta(D) - eta_local inside the engine
    region, refines the engine boundary first when the change hides next
    to it, and bisects until |G| <= 1e-10.  Absence of a sign change is a
    result, not an error.
    """
    if not (b1 > b2 > 0.0):
        raise InvalidParameterError(f"need B1 > B2 > 0, got B1={b1!r}, B2={b2!r}")
    eta_local = 1.0 - b2 / b1

    if j != 0.0:
        printed = 4.0 * b1 * b1 / (j * j) - 1.0
        corrected = math.sqrt(printed) if printed >= 0.0 else None
    else:
        printed = math.inf
        corrected = None
    if d_max is None:
        d_max = 2.0 * corrected if corrected is not None and math.isfinite(corrected) else 20.0

    baths = BathSpec(T_hot=t_hot, T_cold=t_cold)

    def cycle_at(d):
        return run_cycle(VaryField(J=j, D=d, B_hot=b1, B_cold=b2), baths)

    def g_of(d):
        res = cycle_at(d)
        if res.classification is not Classification.ENGINE:
            return None
        return res.eta - eta_local

    def w_of(d):
        return cycle_at(d).W

    step = d_max / (scan_points - 1)
    grid = [i * step for i in range(scan_points - 1)] + [d_max]
    g_vals = [g_of(d) for d in grid]

    # Engine segments: maximal runs of consecutive grid indices with G defined.
    segments = []
    start = None
    for i, g in enumerate(g_vals):
        if g is not None and start is None:
            start = i
        elif g is None and start is not None:
            segments.append((start, i - 1))
            start = None
    if start is not None:
        segments.append((start, len(grid) - 1))

    if not segments:
        return CrossingSearch(
            d_root=None,
            g_at_root=None,
            printed_candidate=printed,
            corrected_candidate=corrected,
            d_max=d_max,
            detail="no engine regime on the scanned interval",
        )

    def refined_boundary_point(d_engine, d_outside):
        # Walk the engine boundary (W = 0) down to float resolution and
        # come back with a point still strictly inside the engine region.
        a, b = d_engine, d_outside
        wa = w_of(a)
        for _ in range(200):
            m = 0.5 * (a + b)
            if m == a or m == b:
                break
            wm = w_of(m)
            if wm > IDLE_TOL and g_of(m) is not None:
                a, wa = m, wm
            else:
                b = m
        return a

    all_zero = all(abs(g) <= _CROSSING_RESIDUAL for g in g_vals if g is not None)
    if all_zero:
        return CrossingSearch(
            d_root=None,
            g_at_root=None,
            printed_candidate=printed,
            corrected_candidate=corrected,
            d_max=d_max,
            detail="eta equals eta_local across the whole engine region",
        )

    for lo, hi in segments:
        pts = [(grid[i], g_vals[i]) for i in range(lo, hi + 1)]
        if lo > 0:
            d_in = refined_boundary_point(grid[lo], grid[lo - 1])
            g_in = g_of(d_in)
            if g_in is not None:
                pts.insert(0, (d_in, g_in))
        if hi < len(grid) - 1:
            d_in = refined_boundary_point(grid[hi], grid[hi + 1])
            g_in = g_of(d_in)
            if g_in is not None:
                pts.append((d_in, g_in))

        for (da, ga), (db, gb) in zip(pts, pts[1:]):
            if abs(ga) <= _CROSSING_RESIDUAL:
                return CrossingSearch(
                    d_root=da,
                    g_at_root=ga,
                    printed_candidate=printed,
                    corrected_candidate=corrected,
                    d_max=d_max,
                    detail="crossing located",
                )
            if (ga > 0.0) != (gb > 0.0):
                root, g_root = _bisect_sign_change(
                    g_of, da, db, ga, gb, residual=_CROSSING_RESIDUAL
                )
                return CrossingSearch(
                    d_root=root,
                    g_at_root=g_root,
                    printed_candidate=printed,
                    corrected_candidate=corrected,
                    d_max=d_max,
                    detail="crossing located",
                )

    return CrossingSearch(
        d_root=None,
        g_at_root=None,
        printed_candidate=printed,
        corrected_candidate=corrected,
        d_max=d_max,
        detail="no sign change of eta - eta_local on the scanned engine region",
    )


@dataclass(frozen=True)
class Violation:
    """One second-law breach found by the scanner (expected never)."""

    index: int
    protocol: OttoProtocol
    baths: BathSpec
    kind: str
    value: float
    limit: float


def second_law_scan(points) -> list[Violation]:
    """Check every (protocol, baths) grid point against the Clausius limits.

    Engine points must satisfy eta <= 1 - T_cold/T_hot + 1e-12; an engine
    with T_hot <= T_cold is itself a violation.  Refrigerator points must
    satisfy COP = Q_cold/|W| <= T_cold/(T_hot - T_cold) + 1e-9.  Returns
    the violations found; an empty list is the expected outcome.
    """
    violations = []
    for index, (protocol, baths) in enumerate(points):
        result = run_cycle(protocol, baths)
        if result.classification is Classification.ENGINE:
            if baths.T_hot <= baths.T_cold:
                violations.append(
                    Violation(index, protocol, baths, "engine-without-gradient", result.eta, 0.0)
                )
            else:
                limit = carnot(baths.T_hot, baths.T_cold) + 1e-12
                if result.eta > limit:
                    violations.append(
                        Violation(index, protocol, baths, "efficiency-above-carnot", result.eta, limit)
                    )
        elif result.classification is Classification.REFRIGERATOR:
            if baths.T_hot > baths.T_cold:
                cop = result.Q_cold / abs(result.W)
                limit = baths.T_cold / (baths.T_hot - baths.T_cold) + 1e-9
                if cop > limit:
                    violations.append(
                        Violation(index, protocol, baths, "cop-above-carnot", cop, limit)
                    )
    return violations


@dataclass(frozen=True)
class BoundsReport:
    """Reference quantities for one field-protocol configuration."""

    eta_carnot: float
    eta_local_ref: float
    eta_ub: float | None
    d_m_numeric: float | None
    d_m_printed_candidate: float
    d_m_corrected_candidate: float | None
    ordering_ok_hot: bool
    ordering_ok_cold: bool


def bounds_report(
    b1: float,
    b2: float,
    j: float,
    d: float,
    t_hot: float,
    t_cold: float,
    **crossing_kwargs,
) -> BoundsReport:
    """Assemble every analytic reference for one (B1, B2, J, D, baths) point."""
    try:
        eta_ub = eta_upper_bound(b1, b2, j, d)
    except RegimeError:
        eta_ub = None
    search = crossing_threshold(b1, b2, j, t_hot, t_cold, **crossing_kwargs)
    return BoundsReport(
        eta_carnot=carnot(t_hot, t_cold),
        eta_local_ref=1.0 - b2 / b1,
        eta_ub=eta_ub,
        d_m_numeric=search.d_root,
        d_m_printed_candidate=search.printed_candidate,
        d_m_corrected_candidate=search.corrected_candidate,
        ordering_ok_hot=level_ordering_check(b1, j, d),
        ordering_ok_cold=level_ordering_check(b2, j, d),
    )
