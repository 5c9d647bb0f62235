//! Exact counting: two-row Kostka numbers, non-crossing chord diagrams and
//! their reflection-symmetric ("odd") variants.

mod diagram;
mod odd;
mod tableau;

pub use diagram::{enumerate_diagrams, ChordDiagram};
pub use odd::{
    enumerate_odd_diagrams, kostka_for, odd_count_formula, reduction_at, reduction_params,
    AxisPosition, KostkaReduction, OddDiagram, Parity,
};
pub use tableau::{
    binom, binomial_count, catalan, enumerate_ssyt, kostka, MultiplicityVector, Tableau,
};
