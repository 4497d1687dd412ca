//! Numerical laboratory for the energetics of the dilute Bose gas in a
//! periodic box.
//!
//! The crate is organized around the objects that appear in second-order
//! (Lee-Huang-Yang) expansions of the ground state energy:
//!
//! * [`scattering`] — zero-energy two-body scattering in d = 2, 3: scattering
//!   length, scattering profiles φ, ω, g and their radial Fourier transforms.
//! * [`bogoliubov`] — exact diagonalization identities for quadratic pair
//!   Hamiltonians and the resulting dispersion relation.
//! * [`lhy`] — Bogoliubov/LHY integrals, the G_d renormalization, and
//!   dual-lattice sum-versus-integral comparisons.
//! * [`fock`] — occupation-number bases on finite mode sets, sparse operator
//!   assembly for the box Hamiltonian and its renormalized potential split,
//!   ground states, and localization of large matrices.
//! * [`params`] — the parameter ledger: explicit parameter choices and the
//!   slack of every scale relation they must satisfy.
//!
//! All computations are deterministic: reductions are ordered or compensated,
//! and iterative solvers use fixed starting vectors.

pub mod bogoliubov;
pub mod error;
pub mod fock;
pub mod lhy;
pub mod params;
mod parallel;
pub mod quadrature;
pub mod scattering;
pub mod special;

pub use error::{Error, Result};

/// Euler-Mascheroni constant Γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Number of worker threads to use, honoring the `BOSEGAS_THREADS`
/// environment variable. Returns `None` when the variable is unset or
/// unparsable, in which case the rayon default applies.
pub fn configured_threads() -> Option<usize> {
    std::env::var("BOSEGAS_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
}
