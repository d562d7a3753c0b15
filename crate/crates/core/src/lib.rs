//! Exact lattice computations attached to Arnold's 14 exceptional unimodal
//! singularities.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: arbitrary-precision integer matrices and polynomials
//!   (Bareiss determinants, Smith invariant factors, inertia, characteristic
//!   and cyclotomic polynomials, permutation congruence).
//! * [`singularities`]: the dataset of weight systems with Dolgachev and
//!   Gabrielov numbers, plus weight-system arithmetic.
//! * [`diagrams`]: the marked graphs and quivers the lattices are built from.
//! * [`ktheory`]: Euler forms, Mukai vectors and pairing, reflections,
//!   Coxeter elements, and the numerical Grothendieck lattice.
//! * [`verify`]: the check registry `C1`..`C9` and the JSON report.
//! * [`cli`]: the command-line front end used by the `strange-duality` binary.

pub mod cli;
pub mod diagrams;
mod error;
pub mod exactalg;
pub mod ktheory;
pub mod singularities;
pub mod verify;

pub use error::{Error, Result};
