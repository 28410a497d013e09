"""Exception types shared across the package.

ConfigError covers malformed or out-of-range user input; DomainError and
its subclasses cover mathematically ill-posed evaluations; OracleMismatchError
signals disagreement between a closed form and its brute-force cross-check.
The CLI maps these families to distinct exit codes.
"""

from __future__ import annotations


class ConfigError(ValueError):
    """Invalid configuration: unknown key, wrong type, or out-of-range value."""


class DomainError(ValueError):
    """Evaluation requested outside the mathematically valid domain."""


class SingularSeparationError(DomainError):
    """Dipole-dipole coupling requested at zero separation."""


class UnsupportedShellError(DomainError):
    """Neighbor shell index outside the supported range."""


class FlatBandError(DomainError):
    """Band curvature vanishes, so the effective mass is undefined."""


class DegenerateModesError(DomainError):
    """Exciton and photon are degenerate and uncoupled; branches coincide."""


class PoleOnAxisError(DomainError):
    """Response evaluated exactly at an undamped pole."""


class NoPeaksError(DomainError):
    """Peak analysis found no interior local maximum."""


class OracleBudgetError(DomainError):
    """Brute-force cross-check would exceed its size budget."""


class OracleMismatchError(RuntimeError):
    """Closed-form result disagrees with its independent cross-check."""
