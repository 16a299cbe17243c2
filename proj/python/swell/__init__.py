"""s-wave scattering by an attractive square well."""

from ._core import (
    NumericalError,
    PoleKind,
    PotentialWell,
    alpha_sweep,
    bound_states,
    find_poles,
    first_resonance,
    phase_resonant,
    resonance_report,
    resonant_cross_section,
    run_cli,
    s_matrix,
    scaling_check,
    scatter_sample,
    scatter_scan,
    table1,
    time_delay,
    trapping_probability,
    trapping_probability_quadrature,
    traversal_distance,
)

__all__ = [
    "NumericalError",
    "PoleKind",
    "PotentialWell",
    "alpha_sweep",
    "bound_states",
    "find_poles",
    "first_resonance",
    "phase_resonant",
    "resonance_report",
    "resonant_cross_section",
    "run_cli",
    "s_matrix",
    "scaling_check",
    "scatter_sample",
    "scatter_scan",
    "table1",
    "time_delay",
    "trapping_probability",
    "trapping_probability_quadrature",
    "traversal_distance",
]
