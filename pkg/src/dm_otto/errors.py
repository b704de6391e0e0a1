"""Exception types shared across the package.

Validation problems (bad user input, out-of-regime requests) derive from
ValueError so callers can catch them generically; internal invariant
breaches derive from RuntimeError and map to a distinct CLI exit code.
"""


class DmOttoError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(DmOttoError, ValueError):
    """A physical parameter is non-finite or outside its documented domain."""


class InvalidTemperatureError(InvalidParameterError):
    """A bath temperature is not a finite positive number."""


class NonHermitianError(DmOttoError, ValueError):
    """A matrix that must be Hermitian is not, beyond tolerance."""


class InvalidStateError(DmOttoError, ValueError):
    """A density matrix fails its basic sanity checks (trace, shape)."""


class RegimeError(DmOttoError, ValueError):
    """A closed-form bound was requested outside its validity domain."""


class UndefinedEfficiencyError(DmOttoError, ValueError):
    """Efficiency requested for a cycle that is not an engine."""


class UnsupportedProtocolError(DmOttoError, TypeError):
    """Operation defined only for one protocol variant got the other one."""


class UnknownClaimError(DmOttoError, KeyError):
    """Audit request named a claim id outside the fixed ledger."""


class ConfigError(DmOttoError, ValueError):
    """Sweep configuration rejected; message names the offending key."""


class ConfigSyntaxError(ConfigError):
    """Sweep configuration text is not valid TOML (message has line/column)."""


class EigensolverError(DmOttoError, RuntimeError):
    """The iterative eigensolver failed to converge or to match labels."""


class FirstLawViolationError(DmOttoError, RuntimeError):
    """Independent heat and work summations disagree beyond tolerance."""
