"""Exact thermodynamics and a verification harness for two-spin quantum
Otto engines with Dzyaloshinskii-Moriya coupling.

The package computes closed-form spectra and Gibbs states of the two-spin
working substance, evaluates quasi-static Otto cycles for the DM-stroke
and field-stroke protocols, derives per-spin local thermodynamics by
partial trace, provides analytic bounds and threshold searches, runs
parameter sweeps with deterministic CSV output, and adjudicates a fixed
ledger of reference claims (C1..C8) numerically.
"""

from ._version import __version__
from .audit import (
    CLAIM_IDS,
    AuditArtifact,
    AuditConfig,
    ClaimReport,
    Verdict,
    audit_artifact,
    audit_claim,
    full_audit,
)
from .bounds import (
    BoundsReport,
    CrossingSearch,
    Violation,
    bounds_report,
    carnot,
    crossing_threshold,
    eta_upper_bound,
    level_ordering_check,
    second_law_scan,
)
from .cycle import (
    IDLE_TOL,
    BathSpec,
    Classification,
    CycleResult,
    OttoProtocol,
    VaryDM,
    VaryField,
    classify,
    efficiency,
    printed_form_cycle,
    run_cycle,
)
from .errors import (
    ConfigError,
    ConfigSyntaxError,
    DmOttoError,
    EigensolverError,
    FirstLawViolationError,
    InvalidParameterError,
    InvalidStateError,
    InvalidTemperatureError,
    NonHermitianError,
    RegimeError,
    UndefinedEfficiencyError,
    UnknownClaimError,
    UnsupportedProtocolError,
)
from .jacobi import jacobi_eigh
from .local import (
    DirectionReport,
    LocalCycleResult,
    ReducedState,
    heat_direction_report,
    local_cycle,
    local_field_hamiltonian,
    partial_trace,
)
from .spectrum import (
    Spectrum,
    SystemParams,
    ThermalState,
    analytic_spectrum,
    build_hamiltonian,
    gibbs_state,
    numeric_spectrum,
    params_from_hamiltonian,
)
from .sweep import (
    COLUMNS,
    FIGURE_IDS,
    RunArtifact,
    SweepAxis,
    SweepSpec,
    config_echo,
    emit,
    extract_config,
    figure_spec,
    grid_protocols,
    parse_config,
    run_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
