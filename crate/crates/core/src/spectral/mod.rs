//! Effective one-dimensional eigenproblems: finite-difference assembly,
//! bound states and spectral windows, closed-form reference spectra and
//! unitary time evolution.

pub mod exact;
pub mod problem;
pub mod propagate;
pub mod solve;
pub mod tridiag;

pub use exact::{box_spectrum, poschl_teller_exact, sphere_reference_exact, zero_energy_modes, BoxSpec};
pub use problem::{EffectiveProblem1D, Grid1D, Wall, MIN_GRID_POINTS};
pub use propagate::{continuity_residual, propagate, recommended_dt, Wavefunction1D};
pub use solve::{
    hermiticity_check, solve_bound_states, solve_window, sphere_effective_solve, sphere_effective_solve_with,
    Spectrum, SpectrumKind,
};
