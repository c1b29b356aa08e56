//! Exact arithmetic on spectral parameters, root multisets and `q`-strings.

mod dominance;
mod multiset;
mod param;
mod strings;

use thiserror::Error;

pub use dominance::{dominates, dominates_by_strings, dominates_factored, Dominance, DominanceWitness};
pub use multiset::{HTuple, RootMultiset};
pub use param::{ratio, Monomial, Ratio, SpectralParam, Symbol};
pub use strings::{factorize, in_special_position, QString, StringDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QpolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("multiset {0} has a negative multiplicity and no string factorization")]
    NotDominant(String),
    #[error("string step must be positive")]
    ZeroStep,
}
