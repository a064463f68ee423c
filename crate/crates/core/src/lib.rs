//! Stochastic attribute-value grammars via random fields.
//!
//! A grammar with re-entrancy constraints generates a language of dags, and
//! context dependencies make per-rule weighting (the expected-rule-frequency
//! recipe that is exact for context-free grammars) systematically wrong.
//! This crate models such languages with random fields instead: a dag's
//! probability is proportional to an initial distribution times a product of
//! property weights raised to property counts. It provides
//!
//! * grammar, dag and unification machinery ([`grammar`]),
//! * weighted context-free models, disambiguation and ERF estimation
//!   ([`scfg`]),
//! * field models: property matching, normalization, divergence ([`field`]),
//! * field induction: property selection and iterative weight scaling
//!   ([`induction`]),
//! * Metropolis-Hastings sampling with the context-free analogue as the
//!   proposal ([`mcmc`]),
//! * brute-force reference implementations for validating every estimator
//!   ([`oracle`]),
//! * a command-line interface over text formats ([`cli`]).
//!
//! The book under `book/` walks through the concepts with runnable
//! examples; its code blocks are compiled and run as doctests below.

pub mod cli;
pub mod field;
pub mod fixtures;
pub mod grammar;
pub mod induction;
pub mod mcmc;
pub mod oracle;
pub mod scfg;
pub mod weight;

pub use field::{Distribution, FieldModel, InitialMode, Property};
pub use grammar::{AvGrammar, Dag, Derivation};
pub use scfg::{CfModel, EmpiricalDistribution};
pub use weight::Weight;

/// Book chapters double as doctests so the guide can never drift from the
/// API (see <https://github.com/rust-lang/mdBook/issues/706>).
#[cfg(doctest)]
mod booktest {
    macro_rules! booktest {
        ($name:ident, $path:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $path))]
            mod $name {}
        };
    }
    booktest!(ch01, "ch01_grammars_and_dags.md");
    booktest!(ch02, "ch02_weighted_grammars.md");
    booktest!(ch03, "ch03_random_fields.md");
    booktest!(ch04, "ch04_field_induction.md");
    booktest!(ch05, "ch05_sampling.md");
}
