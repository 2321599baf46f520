//! Monads, monad morphisms and distributive laws over finite categories.
//!
//! Every structure exists in two presentations: the classical one built from
//! functors and multiplications, and the no-iteration one built from
//! extension operations (Kleisli triples, left and right extension systems).
//! The checkers in this crate evaluate both exhaustively on small categories,
//! and the [`oracle`] enumerators provide the candidate spaces over which
//! their verdicts are compared.

pub mod cli;
pub mod distlaw;
pub mod error;
pub mod fincat;
pub mod monadcore;
pub mod morphisms;
pub mod oracle;
pub mod probes;
pub mod report;

pub use error::{Error, Result};
pub use report::{Check, Report};
