//! Element-wise deciders with explicit witnesses, the constructive
//! decompositions, and ring-level classification.

mod classify;
mod constructive;
mod search;
mod unique;
mod witness;

pub use classify::*;
pub use constructive::*;
pub use search::*;
pub use unique::*;
pub use witness::{
    ExchangeWitness, PiRegularWitness, StrongPiWitness, StronglyRegularWitness, SumKind, SumWitness, WitnessForm,
    WnclWitness,
};
