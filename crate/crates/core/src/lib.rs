//! Lie complexity of infinite and finite words.
//!
//! Words come from a [`WordSpec`]: a finite word, a periodic word `u^ω`,
//! a fixed point of a morphism (optionally coded), or an automatic sequence
//! given by a DFAO. The [`complexity`] module counts factors, Lie classes and
//! prefix Lie classes, [`rauzy`] works with Rauzy graphs and their circuits,
//! and [`verify`] checks the known upper bounds on concrete words.

pub mod cli;
pub mod complexity;
pub mod dfao;
pub mod error;
pub mod par;
pub mod rauzy;
pub mod source;
pub mod verify;
pub mod word;

pub use complexity::{
    complexity_table, delta_prefix_lie, extended_lie_complexity, lie_complexity, prefix_lie,
    primitive_lie, ComplexityRow, TableOptions,
};
pub use dfao::{Dfao, DigitOrder};
pub use error::{Error, Result};
pub use par::Strategy;
pub use rauzy::{build_rauzy_graph, Circuit, CircuitKind, RauzyGraph};
pub use source::{
    choose_horizon, materialize_prefix, Alphabet, Horizon, HorizonMode, HorizonPolicy, Morphism,
    Prefix, WordKind, WordSpec,
};
pub use word::{
    canonical_rotation, class_power_set, conjugacy_class, factor_set, is_primitive,
    power_to_length, ConjugacyClass, FactorSet, Sym,
};
