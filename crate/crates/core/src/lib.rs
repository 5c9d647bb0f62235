//! Spherical polygons with all but two corner angles integer multiples of `pi`.
//!
//! * [`combinatorics`] counts metrics exactly (Kostka numbers, chord diagrams).
//! * [`feasibility`] decides existence and produces the integer degree data.
//! * [`wronski`] constructs developing maps `z^alpha P/Q` numerically.
//! * [`ode`] builds the Fuchsian equation and certifies its monodromy.

pub mod combinatorics;
pub mod error;
pub mod feasibility;
pub mod ode;
pub mod polynomial;
pub mod wronski;

pub use error::{Error, Result};
pub use polynomial::{CPoly, Polynomial};
