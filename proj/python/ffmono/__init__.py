"""Scattering monodromy of focus-focus fibrations: normal forms, action
integrals, per-fiber scattering phases, and winding certification."""

from ._core import (
    ComplexPair,
    DomainError,
    Model,
    MonodromyResult,
    NumericalError,
    PhasePoint,
    ScatteringRecord,
    Term,
    eta_section,
    loop_action_standard,
    mu,
    oscillator_deflection,
    scattering_phase_standard,
    scattering_phase_standard_numerical,
    transit_time_standard,
    unwrap_phases,
    winding_from_phases,
    xi_section,
)

__all__ = [
    "ComplexPair",
    "DomainError",
    "Model",
    "MonodromyResult",
    "NumericalError",
    "PhasePoint",
    "ScatteringRecord",
    "Term",
    "eta_section",
    "loop_action_standard",
    "mu",
    "oscillator_deflection",
    "scattering_phase_standard",
    "scattering_phase_standard_numerical",
    "transit_time_standard",
    "unwrap_phases",
    "winding_from_phases",
    "xi_section",
]
