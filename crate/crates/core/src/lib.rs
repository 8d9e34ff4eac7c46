//! Exact-arithmetic toolkit for cooperative games with coalition structures.
//!
//! The crate models TU-games over dense coalition lattices with
//! arbitrary-precision rationals, computes Harsanyi dividends, the Shapley
//! value and the Owen value by two independent routes, decides the player-
//! and union-level relations those values are axiomatized with, and checks
//! fifteen axioms against a catalogue of allocation rules over deterministic
//! game families, reporting concrete witnesses for every violation.
//!
//! Exact rationals are load-bearing: the predicates test exact zeros of
//! marginal contributions, so floating point would make every axiom verdict
//! unsound. All types are immutable after construction and every operation
//! is a pure function.

pub mod axioms;
pub mod family;
pub mod format;
pub mod game;
pub mod independence;
pub mod oracle;
pub mod predicates;
pub mod rational;
pub mod structure;
pub mod values;

pub use axioms::{check_axiom, verify_witness, Axiom, AxiomVerdict, Outcome, Witness};
pub use family::{generate_family, FamilySpec, GameFamily};
pub use format::{parse_game_file, GameFileDoc, GameFileParams};
pub use game::{Coalition, DividendTable, Game, PlayerId};
pub use independence::{run_independence, IndependenceReport, Theorem};
pub use rational::{format_rational, parse_rational};
pub use structure::{all_partitions, CoalitionStructure, CsGame};
pub use values::{Allocation, UnionChoice, ValueRule, WeightScheme, Weights};
