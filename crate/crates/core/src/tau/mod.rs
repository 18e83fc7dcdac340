//! τ-tilting theory over the path algebra of `1 -> 2 -> ... -> n`.

pub mod module;
pub mod oracle;
pub mod pairs;
pub mod theorems;

pub use module::{DecoratedModule, Interval, LinearA, ModuleSum};
pub use pairs::{MutationSide, PairMutation, Summand, TauTiltingPair};
