//! Bireversible Mealy automata, their groups and square complexes.
//!
//! The crate is organised bottom-up: [`word`] and [`automaton`] hold the
//! data types, [`ops`] the dual/inverse calculus, [`action`] the group
//! action and word problem, [`pi1`] the complex side, [`rf`] the
//! residual-finiteness machinery, [`coset`] a Todd-Coxeter enumerator and
//! [`catalog`] the enumeration and experiment runner.

pub mod error;
pub mod word;
pub mod automaton;
pub mod ops;
pub mod action;
pub mod pi1;
pub mod rf;
pub mod record;
pub mod complex;
pub mod corpus;
pub mod par;
pub mod coset;
pub mod canon;
pub mod catalog;
pub mod reproduce;

pub use automaton::{Arrow, Automaton};
pub use error::{Error, Result};
pub use word::{Kind, MixedWord, Names, Sym, Word};
