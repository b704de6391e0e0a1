"""Quasi-static four-stroke Otto cycle over the two-spin working substance.

The cycle alternates two isochores (full thermalization at fixed spectrum)
and two adiabats (spectrum changes, populations frozen).  Two stroke
protocols exist: VaryDM changes the DM strength D between the isochores at
fixed field, VaryField changes the field B at fixed D.

Sign conventions: Q > 0 is heat absorbed by the working substance on that
isochore; W > 0 is net work performed by the system per cycle.  With hot
side spectrum E^h, cold side E^c, and Gibbs populations p^h, p^c at the
respective bath temperatures,

    Q_hot  = sum_i E^h_i (p^h_i - p^c_i)
    Q_cold = sum_i E^c_i (p^c_i - p^h_i)
    W      = sum_i (E^h_i - E^c_i)(p^h_i - p^c_i)

summed over canonical labels.  W is computed independently of the heats
and checked against Q_hot + Q_cold to 1e-12 on every call.

Tolerances here are absolute (1e-12).  Energies of interest are O(1) to
O(16), so no relative scaling is applied; feeding energies orders of
magnitude larger will tighten these checks past float64 headroom.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    FirstLawViolationError,
    InvalidParameterError,
    InvalidTemperatureError,
    UndefinedEfficiencyError,
)
from .spectrum import SystemParams, analytic_spectrum, gibbs_state

__all__ = [
    "VaryDM",
    "VaryField",
    "BathSpec",
    "Classification",
    "CycleResult",
    "run_cycle",
    "printed_form_cycle",
    "classify",
    "efficiency",
    "IDLE_TOL",
]

#: |W| at or below this is an idle cycle; also the slack for sign checks.
IDLE_TOL = 1e-12
#: Allowed disagreement between W and Q_hot + Q_cold (independent sums).
FIRST_LAW_TOL = 1e-12


def _finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidParameterError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class VaryDM:
    """Protocol varying the DM strength: D_hot on the hot isochore, D_cold
    on the cold one; J and B are common to both sides."""

    J: float
    B: float
    D_hot: float
    D_cold: float

    def __post_init__(self):
        for name in ("J", "B", "D_hot", "D_cold"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))

    def hot_params(self) -> SystemParams:
        return SystemParams(J=self.J, D=self.D_hot, B=self.B)

    def cold_params(self) -> SystemParams:
        return SystemParams(J=self.J, D=self.D_cold, B=self.B)


@dataclass(frozen=True)
class VaryField:
    """Protocol varying the field: B_hot on the hot isochore, B_cold on the
    cold one; J and D are common to both sides."""

    J: float
    D: float
    B_hot: float
    B_cold: float

    def __post_init__(self):
        for name in ("J", "D", "B_hot", "B_cold"):
            object.__setattr__(self, name, _finite(name, getattr(self, name)))

    def hot_params(self) -> SystemParams:
        return SystemParams(J=self.J, D=self.D, B=self.B_hot)

    def cold_params(self) -> SystemParams:
        return SystemParams(J=self.J, D=self.D, B=self.B_cold)


OttoProtocol = VaryDM | VaryField


@dataclass(frozen=True)
class BathSpec:
    """Bath temperatures.  T_hot > T_cold is deliberately NOT enforced:
    sweeps and audits probe both orderings and classification handles all
    sign patterns."""

    T_hot: float
    T_cold: float

    def __post_init__(self):
        for name in ("T_hot", "T_cold"):
            value = _finite(name, getattr(self, name))
            if value <= 0.0:
                raise InvalidTemperatureError(f"{name} must be positive, got {value}")
            object.__setattr__(self, name, value)


class Classification(enum.Enum):
    ENGINE = "Engine"
    REFRIGERATOR = "Refrigerator"
    HEATER = "Heater"
    IDLE = "Idle"

    def __str__(self):  # CSV and CLI print the plain word
        return self.value


@dataclass(frozen=True, eq=False)
class CycleResult:
    """Heats, work, efficiency and operating mode of one full cycle.

    ``eta`` is populated only for Engine cycles.  ``provenance`` is
    "canonical" for first-principles sums and "printed-form" for the
    as-printed formula variants evaluated for auditing.
    """

    protocol: OttoProtocol
    baths: BathSpec
    Q_hot: float
    Q_cold: float
    W: float
    eta: float | None
    hot_populations: np.ndarray
    cold_populations: np.ndarray
    classification: Classification
    provenance: str = "canonical"


def _classify_values(w: float, q_hot: float, q_cold: float) -> Classification:
    if abs(w) <= IDLE_TOL:
        return Classification.IDLE
    if w > IDLE_TOL and q_hot > 0.0 and q_cold < 0.0:
        return Classification.ENGINE
    if w < -IDLE_TOL and q_cold > 0.0 and q_hot < 0.0:
        return Classification.REFRIGERATOR
    return Classification.HEATER


def classify(result: CycleResult) -> Classification:
    """Re-derive the operating mode from the stored heats and work."""
    return _classify_values(result.W, result.Q_hot, result.Q_cold)


def efficiency(result: CycleResult) -> float:
    """W / Q_hot, defined for Engine cycles only."""
    if _classify_values(result.W, result.Q_hot, result.Q_cold) is not Classification.ENGINE:
        raise UndefinedEfficiencyError(
            f"efficiency undefined for a {result.classification.value} cycle "
            f"(W={result.W!r}, Q_hot={result.Q_hot!r})"
        )
    return result.W / result.Q_hot


def _sides(protocol: OttoProtocol, baths: BathSpec):
    if not isinstance(protocol, (VaryDM, VaryField)):
        raise InvalidParameterError(f"unknown protocol object {protocol!r}")
    hot = analytic_spectrum(protocol.hot_params())
    cold = analytic_spectrum(protocol.cold_params())
    p_hot = gibbs_state(hot, baths.T_hot).populations
    p_cold = gibbs_state(cold, baths.T_cold).populations
    return hot, cold, p_hot, p_cold


def run_cycle(protocol: OttoProtocol, baths: BathSpec) -> CycleResult:
    """Evaluate one cycle from first principles (canonical sums)."""
    hot, cold, p_hot, p_cold = _sides(protocol, baths)
    eh = hot.energies
    ec = cold.energies

    q_hot = 0.0
    q_cold = 0.0
    w = 0.0
    for i in range(4):
        dp = p_hot[i] - p_cold[i]
        q_hot += eh[i] * dp
        q_cold += ec[i] * (p_cold[i] - p_hot[i])
        w += (eh[i] - ec[i]) * dp
    q_hot = float(q_hot)
    q_cold = float(q_cold)
    w = float(w)

    if abs(w - (q_hot + q_cold)) > FIRST_LAW_TOL:
        raise FirstLawViolationError(
            f"independent sums disagree: W={w!r} vs Q_hot+Q_cold={q_hot + q_cold!r} "
            f"at {protocol!r}, {baths!r}"
        )

    mode = _classify_values(w, q_hot, q_cold)
    eta = w / q_hot if mode is Classification.ENGINE else None
    return CycleResult(
        protocol=protocol,
        baths=baths,
        Q_hot=q_hot,
        Q_cold=q_cold,
        W=w,
        eta=eta,
        hot_populations=p_hot,
        cold_populations=p_cold,
        classification=mode,
    )


def printed_form_cycle(protocol: OttoProtocol, baths: BathSpec) -> CycleResult:
    """Evaluate the as-printed closed-form groupings, verbatim.

    The printed right-hand sides bind p'_i to hot-bath populations and p_i
    to cold-bath populations under canonical labels.  They group the
    population differences differently from the canonical sums, so the
    returned values are audit material, not ground truth; results carry
    provenance "printed-form".
    """
    hot, cold, p_hot, p_cold = _sides(protocol, baths)

    # x3 multiplies the interaction coefficient, x24 the field coefficient,
    # exactly as printed: (p3 - p'3 + p'1 - p1) and (p4 - p'4 + p'2 - p2).
    x3 = float(p_cold[2] - p_hot[2] + p_hot[0] - p_cold[0])
    x24 = float(p_cold[3] - p_hot[3] + p_hot[1] - p_cold[1])

    if isinstance(protocol, VaryDM):
        k1 = protocol.J * math.sqrt(protocol.D_hot**2 + 1.0)
        k2 = protocol.J * math.sqrt(protocol.D_cold**2 + 1.0)
        q_hot = k1 * x3 + 2.0 * protocol.B * x24
        q_cold = -k2 * x3 - 2.0 * protocol.B * x24
        w = (k1 - k2) * x3
    else:
        k = protocol.J * math.sqrt(protocol.D**2 + 1.0)
        q_hot = k * x3 + 2.0 * protocol.B_hot * x24
        q_cold = -k * x3 - 2.0 * protocol.B_cold * x24
        w = 2.0 * (protocol.B_hot - protocol.B_cold) * x24

    if abs(w - (q_hot + q_cold)) > FIRST_LAW_TOL:
        raise FirstLawViolationError(
            f"printed-form sums disagree: W={w!r} vs Q_hot+Q_cold={q_hot + q_cold!r}"
        )

    mode = _classify_values(w, q_hot, q_cold)
    eta = w / q_hot if mode is Classification.ENGINE else None
    return CycleResult(
        protocol=protocol,
        baths=baths,
        Q_hot=float(q_hot),
        Q_cold=float(q_cold),
        W=float(w),
        eta=eta,
        hot_populations=p_hot,
        cold_populations=p_cold,
        classification=mode,
        provenance="printed-form",
    )
