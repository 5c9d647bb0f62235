//! Second-order Fuchsian equations attached to a developing map, their
//! monodromy along loops, and the numerics behind both.

pub mod dop853;
mod dop853_tableau;
mod fuchsian;
mod monodromy;
pub mod numeric;
mod rational;

pub use dop853::{integrate, Tolerances};
pub use fuchsian::{build_fuchsian, FuchsianEquation};
pub use monodromy::{
    certify_lassos, default_base_point, integrate_monodromy, local_monodromies,
    unitarizability_check, LocalMonodromy, Loop, MonodromyMatrix, Segment, Unitarizability,
    UnitarizabilityReport,
};
pub use rational::{
    pair_schwarzian_at, schwarzian_of_pair, schwarzian_parts, schwarzian_with, RationalFunction,
};
