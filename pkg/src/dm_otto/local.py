"""Per-spin (local) thermodynamics for the field-varying protocol.

Each spin sees the local field Hamiltonian H_l(B) = diag(-B, +B) in the
declared basis (the two local energies then add up to the field part of
the joint Hamiltonian, which is what makes W = 2w an identity).  Local
heats are defined through the reduced states of the joint thermal states:

    q1 = Tr[(rho1_hot - rho1_cold) H_l(B_hot)]
    q2 = Tr[(rho1_cold - rho1_hot) H_l(B_cold)]
    w  = q1 + q2

with q1 > 0 meaning heat absorbed locally at the hot-side field.  The two
reduced states are equal for both spins on every thermal state of this
working substance, so spin 1 stands for either.

The DM-varying protocol keeps the local field Hamiltonian constant, which
makes local work identically zero under this definition; those calls are
rejected rather than answered with a trivial zero.
"""

from dataclasses import dataclass

import numpy as np

from .cycle import (
    IDLE_TOL,
    BathSpec,
    Classification,
    OttoProtocol,
    VaryField,
    run_cycle,
)
from .errors import InvalidParameterError, InvalidStateError, UnsupportedProtocolError
from .spectrum import analytic_spectrum, gibbs_state

__all__ = [
    "ReducedState",
    "LocalCycleResult",
    "DirectionReport",
    "local_field_hamiltonian",
    "partial_trace",
    "local_cycle",
    "heat_direction_report",
]


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Single-spin density matrix with its local-basis populations."""

    matrix: np.ndarray
    p_low: float
    p_high: float


@dataclass(frozen=True, eq=False)
class LocalCycleResult:
    """Local heats/work per spin plus the local/global direction signs.

    ``direction_flags`` holds the signs (-1, 0, +1) of (q1, q2, Q_hot,
    Q_cold); ``eta_local`` is defined only when the local cycle performs
    positive work.
    """

    q1: float
    q2: float
    w: float
    eta_local: float | None
    direction_flags: tuple[int, int, int, int]


@dataclass(frozen=True, eq=False)
class DirectionReport:
    """Outcome of the local-vs-global heat direction comparison.

    ``opposed`` is True when both local heats run against their global
    counterparts, None when the cycle is idle (no work, nothing to
    compare).
    """

    flags: tuple[int, int, int, int]
    opposed: bool | None
    classification: Classification


def local_field_hamiltonian(b: float) -> np.ndarray:
    """diag(-B, +B): local energies of |0> and |1> in field B."""
    return np.array([[-b, 0.0], [0.0, b]], dtype=float)


def partial_trace(rho: np.ndarray, which: int) -> ReducedState:
    """Reduced state of spin ``which`` (1 or 2) from a two-spin density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise InvalidStateError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > 1e-10:
        raise InvalidStateError(f"density matrix trace {trace!r} is not 1 within 1e-10")
    if which not in (1, 2):
        raise InvalidParameterError(f"spin index must be 1 or 2, got {which!r}")

    r = rho.reshape(2, 2, 2, 2)
    if which == 1:
        reduced = np.einsum("abcb->ac", r)
    else:
        reduced = np.einsum("abad->bd", r)
    return ReducedState(
        matrix=reduced,
        p_low=float(reduced[0, 0].real),
        p_high=float(reduced[1, 1].real),
    )


def _sign(x: float, tol: float = IDLE_TOL) -> int:
    if x > tol:
        return 1
    if x < -tol:
        return -1
    return 0


def _local_and_global(protocol: OttoProtocol, baths: BathSpec):
    if not isinstance(protocol, VaryField):
        raise UnsupportedProtocolError(
            "local thermodynamics is defined for the field-varying protocol only; "
            "a DM stroke leaves the local field Hamiltonian constant"
        )
    rho_hot = gibbs_state(analytic_spectrum(protocol.hot_params()), baths.T_hot).density
    rho_cold = gibbs_state(analytic_spectrum(protocol.cold_params()), baths.T_cold).density
    r_hot = partial_trace(rho_hot, 1)
    r_cold = partial_trace(rho_cold, 1)

    h_hot = local_field_hamiltonian(protocol.B_hot)
    h_cold = local_field_hamiltonian(protocol.B_cold)
    q1 = float(np.trace((r_hot.matrix - r_cold.matrix) @ h_hot).real)
    q2 = float(np.trace((r_cold.matrix - r_hot.matrix) @ h_cold).real)
    w = q1 + q2

    if w > IDLE_TOL and protocol.B_hot > protocol.B_cold:
        eta_local = w / q1
    elif w > IDLE_TOL and protocol.B_hot < protocol.B_cold:
        eta_local = w / q2
    else:
        eta_local = None

    glob = run_cycle(protocol, baths)
    flags = (_sign(q1), _sign(q2), _sign(glob.Q_hot), _sign(glob.Q_cold))
    local = LocalCycleResult(q1=q1, q2=q2, w=w, eta_local=eta_local, direction_flags=flags)
    return local, glob


def local_cycle(protocol: OttoProtocol, baths: BathSpec) -> LocalCycleResult:
    """Local heats, work and efficiency of one spin over the cycle."""
    local, _ = _local_and_global(protocol, baths)
    return local


def heat_direction_report(protocol: OttoProtocol, baths: BathSpec) -> DirectionReport:
    """Compare local and global heat flow directions for one cycle."""
    local, glob = _local_and_global(protocol, baths)
    if glob.classification is Classification.IDLE:
        opposed = None
    else:
        s_q1, s_q2, s_qh, s_qc = local.direction_flags
        opposed = (s_q1 != s_qh) and (s_q2 != s_qc)
    return DirectionReport(
        flags=local.direction_flags,
        opposed=opposed,
        classification=glob.classification,
    )
