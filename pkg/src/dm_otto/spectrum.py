"""Two-spin working substance: Hamiltonian, exact spectrum, Gibbs states.

Conventions, fixed once for the whole package:

* product basis ordered (|00>, |01>, |10>, |11>), first slot = spin 1;
* sigma_z |0> = -|0>, so the field term B (sigma_z^1 + sigma_z^2) gives the
  aligned product state |00> the energy -2B;
* canonical level labels L1..L4 are tied to the closed forms

      L1 = -2B,  L2 = +2B,  L3 = +J sqrt(1 + D^2),  L4 = -J sqrt(1 + D^2),

  never to sorted order: L3 carries the sign of J, and the labels stay put
  through every sweep.  Downstream heat/work sums rely on this;
* theta = arctan(D).  Under the conventions above the L3 eigenvector is
  (|01> + e^{+i theta}|10>)/sqrt(2) and L4 takes the minus sign.  Swapping
  the two tensor slots maps theta -> -theta and leaves energies, Gibbs
  weights and every derived thermodynamic quantity unchanged, so the phase
  sign is a pure bookkeeping choice.

All functions are pure; returned objects are frozen and safe to share.
"""

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EigensolverError,
    InvalidParameterError,
    InvalidTemperatureError,
)
from .jacobi import jacobi_eigh

__all__ = [
    "SystemParams",
    "Spectrum",
    "ThermalState",
    "build_hamiltonian",
    "analytic_spectrum",
    "numeric_spectrum",
    "params_from_hamiltonian",
    "gibbs_state",
]


def _require_finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidParameterError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise InvalidParameterError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class SystemParams:
    """One thermodynamic configuration of the working substance.

    J is the exchange coupling (J > 0 antiferromagnetic, J < 0
    ferromagnetic), D the z-directed DM strength, B the magnetic field.
    Units: energy with k_B = 1; D is dimensionless.
    """

    J: float
    D: float
    B: float

    def __post_init__(self):
        object.__setattr__(self, "J", _require_finite("J", self.J))
        object.__setattr__(self, "D", _require_finite("D", self.D))
        object.__setattr__(self, "B", _require_finite("B", self.B))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigensystem in canonical labeling.

    ``energies[i]`` is level L(i+1); ``vectors[:, i]`` the matching
    unit-norm eigenvector in the product basis; ``theta = arctan(D)``.
    """

    energies: tuple[float, float, float, float]
    vectors: np.ndarray
    theta: float


@dataclass(frozen=True, eq=False)
class ThermalState:
    """Gibbs state of a Spectrum at temperature T (k_B = 1).

    Boltzmann weights are evaluated after subtracting ``energy_shift``
    (the lowest level) from every energy, which keeps exp() in range for
    arbitrary sweeps; ``partition_shifted`` is the partition sum of those
    shifted energies.  Populations are invariant under the shift.
    """

    temperature: float
    populations: np.ndarray
    partition_shifted: float
    energy_shift: float
    density: np.ndarray

    @property
    def log_partition(self) -> float:
        """log Z for the unshifted energies."""
        return math.log(self.partition_shifted) - self.energy_shift / self.temperature


def build_hamiltonian(params: SystemParams) -> np.ndarray:
    """4x4 Hermitian matrix J[(1+iD) s1+ s2- + (1-iD) s1- s2+] + B(sz1+sz2).

    In the declared basis the field part is diag(-2B, 0, 0, +2B) and the
    exchange/DM part couples only |01> and |10>, with <10|H|01> = J(1+iD).
    """
    if not isinstance(params, SystemParams):
        params = SystemParams(*params)
    h = np.zeros((4, 4), dtype=complex)
    h[0, 0] = -2.0 * params.B
    h[3, 3] = 2.0 * params.B
    h[2, 1] = params.J * (1.0 + 1.0j * params.D)
    h[1, 2] = params.J * (1.0 - 1.0j * params.D)
    return h


def analytic_spectrum(params: SystemParams) -> Spectrum:
    """Closed-form eigensystem in canonical labeling.

    L1/L2 are the product states |00>, |11> at -2B/+2B; L3/L4 the
    interaction doublet (|01> +- e^{i theta}|10>)/sqrt(2) at
    +-J sqrt(1 + D^2), theta = arctan(D).
    """
    if not isinstance(params, SystemParams):
        params = SystemParams(*params)
    k = params.J * math.sqrt(1.0 + params.D * params.D)
    theta = math.atan(params.D)
    phase = cmath.exp(1.0j * theta)
    amp = 1.0 / math.sqrt(2.0)

    vectors = np.zeros((4, 4), dtype=complex)
    vectors[0, 0] = 1.0                 # |psi1> = |00>
    vectors[3, 1] = 1.0                 # |psi2> = |11>
    vectors[1, 2] = amp                 # |psi3> = (|01> + e^{i theta}|10>)/sqrt2
    vectors[2, 2] = amp * phase
    vectors[1, 3] = amp                 # |psi4> = (|01> - e^{i theta}|10>)/sqrt2
    vectors[2, 3] = -amp * phase

    energies = (-2.0 * params.B, 2.0 * params.B, k, -k)
    return Spectrum(energies=energies, vectors=vectors, theta=theta)


def params_from_hamiltonian(h: np.ndarray, tol: float = 1e-10) -> SystemParams:
    """Recover (J, D, B) from a matrix of the form built above.

    Rejects Hermitian matrices outside that sparsity pattern: canonical
    labeling is only defined for this working substance.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (4, 4):
        raise InvalidParameterError(f"expected a 4x4 matrix, got shape {h.shape}")
    scale = max(1.0, float(np.max(np.abs(h))))
    bound = tol * scale

    must_vanish = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 1), (2, 2)]
    for i, j in must_vanish:
        if abs(h[i, j]) > bound:
            raise InvalidParameterError(
                f"entry ({i},{j}) = {h[i, j]:.3e} breaks the two-spin DM form"
            )
    if abs(h[0, 0] + h[3, 3]) > bound or abs(h[0, 0].imag) > bound:
        raise InvalidParameterError("diagonal field entries must be real with -2B, +2B")

    z = complex(h[2, 1])
    if abs(z.real) <= bound and abs(z.imag) > bound:
        # J(1+iD) cannot be purely imaginary with J = 0.
        raise InvalidParameterError("coupling entry is purely imaginary; not DM form")
    j = z.real
    d = z.imag / z.real if abs(z.real) > bound else 0.0
    b = -h[0, 0].real / 2.0
    return SystemParams(J=j, D=d, B=b)


def _overlap_sq(analytic_col, numeric_vec):
    acc = 0.0j
    for k in range(4):
        acc += analytic_col[k].conjugate() * numeric_vec[k]
    return abs(acc) ** 2


def numeric_spectrum(h: np.ndarray) -> Spectrum:
    """Eigensystem of a DM-form Hamiltonian from the Jacobi solver.

    Eigenvalues come out of the iterative solver; they are then attached
    to canonical labels by eigenvector overlap against the closed-form
    vectors, never by value ordering.  Degenerate levels (for example
    2B = |J| sqrt(1+D^2)) fall back to requiring at least 0.5 projection
    onto the matching degenerate subspace.
    """
    params = params_from_hamiltonian(h)
    reference = analytic_spectrum(params)

    h_list = [[complex(h[i, j]) for j in range(4)] for i in range(4)]
    eigenvalues, eigenvectors = jacobi_eigh(h_list)

    ref_cols = [[complex(reference.vectors[k, i]) for k in range(4)] for i in range(4)]
    overlap = [
        [_overlap_sq(ref_cols[i], eigenvectors[j]) for j in range(4)] for i in range(4)
    ]

    best_perm = None
    best_score = -1.0
    for perm in itertools.permutations(range(4)):
        score = overlap[0][perm[0]] + overlap[1][perm[1]] + overlap[2][perm[2]] + overlap[3][perm[3]]
        if score > best_score + 1e-15:
            best_score = score
            best_perm = perm

    # Degenerate analytic levels are interchangeable: validate against the
    # whole degenerate subspace, not the individual vector.
    e_ref = reference.energies
    deg_tol = 1e-8 * max(1.0, max(abs(e) for e in e_ref))
    for i in range(4):
        group = [k for k in range(4) if abs(e_ref[k] - e_ref[i]) <= deg_tol]
        proj = sum(overlap[k][best_perm[i]] for k in group)
        if proj < 0.5:
            raise EigensolverError(
                f"could not attach numeric eigenvector to canonical label L{i + 1} "
                f"(subspace projection {proj:.3f})"
            )

    energies = tuple(float(eigenvalues[best_perm[i]]) for i in range(4))
    vectors = np.empty((4, 4), dtype=complex)
    for i in range(4):
        vec = eigenvectors[best_perm[i]]
        for k in range(4):
            vectors[k, i] = vec[k]
    return Spectrum(energies=energies, vectors=vectors, theta=reference.theta)


def gibbs_state(spectrum: Spectrum, temperature: float) -> ThermalState:
    """Thermal equilibrium state exp(-H/T)/Z over the given spectrum."""
    try:
        temperature = float(temperature)
    except (TypeError, ValueError) as exc:
        raise InvalidTemperatureError(f"temperature must be a number, got {temperature!r}") from exc
    if not math.isfinite(temperature) or temperature <= 0.0:
        raise InvalidTemperatureError(f"temperature must be positive and finite, got {temperature}")

    energies = spectrum.energies
    shift = min(energies)
    weights = [math.exp(-(e - shift) / temperature) for e in energies]
    z = weights[0] + weights[1] + weights[2] + weights[3]
    populations = np.array([w / z for w in weights], dtype=float)

    v = spectrum.vectors
    density = (v * populations) @ v.conj().T
    return ThermalState(
        temperature=temperature,
        populations=populations,
        partition_shifted=z,
        energy_shift=shift,
        density=density,
    )
