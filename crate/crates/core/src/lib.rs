//! Partial waves of a circular well in the non-commutative plane.
//!
//! The well occupies the Fock levels `n <= N`; its radius is
//! `R = sqrt(θ(2N + 1))`. Units have `µ = ħ = 1`.

pub mod bound;
pub mod cross;
mod error;
pub mod fock;
mod region;
pub mod scatter;
pub mod selftest;
pub mod wave;
mod well;

pub use bound::{bound_state_solution, find_bound_states, matching_residual_bound, BoundState, DEFAULT_GRID_POINTS};
pub use cross::{
    cross_section_differential, cross_section_total, cross_section_total_with, CrossSectionPoint, WaveSet,
};
pub use error::{Error, Result};
pub use fock::fock_element;
pub use region::{Region, RegionSolution};
pub use scatter::{
    phase_shift, phase_shift_sweep, scattering_coeffs, unwrap_phases, PhaseShiftPoint, ScatteringSolution,
};
pub use specfun::LogScaled;
pub use wave::wavefunction_eval;
pub use well::WellSpec;
