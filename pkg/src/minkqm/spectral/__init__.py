from .dynamics import (
    Wavefunction1D,
    accurate_time_step,
    continuity_residual,
    current_density,
    from_samples,
    gaussian_packet,
    operator_norm_bound,
    propagate,
)
from .exact import BoxSpec, box_spectrum, box_zero_modes, poschl_teller_exact, sphere_reference_exact
from .solver import (
    Spectrum,
    hamiltonian,
    hermiticity_check,
    lowest_levels,
    solve_bound_states,
    solve_window,
    sphere_effective_solve,
    sphere_problem,
    tridiagonal,
)

__all__ = [
    "BoxSpec",
    "Spectrum",
    "Wavefunction1D",
    "accurate_time_step",
    "box_spectrum",
    "box_zero_modes",
    "continuity_residual",
    "current_density",
    "from_samples",
    "gaussian_packet",
    "hamiltonian",
    "hermiticity_check",
    "lowest_levels",
    "operator_norm_bound",
    "poschl_teller_exact",
    "propagate",
    "solve_bound_states",
    "solve_window",
    "sphere_effective_solve",
    "sphere_problem",
    "sphere_reference_exact",
    "tridiagonal",
]
