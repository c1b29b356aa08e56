//! The relation `π > π'` under which `W(π) ⊗ V(π')` is highest weight.
//!
//! In root form: `π > π'` iff no root `c` of `π` and string `(m', a')` of
//! `π'` satisfy `c / a' = q^{d(-1-m')}`. The string-pair form
//! `a_j / a'_k ≠ q^{d(m_j - m'_k - 2p)}, 1 ≤ p ≤ m_j` is equivalent and is
//! kept as [`dominates_by_strings`] for cross-checking.
//!
//! The `sl_2` statement about `W(π)` prints this exponent as `-1-s` with `s`
//! the root index; the root form above (with `m'`) is the one implemented.

use super::multiset::RootMultiset;
use super::param::{ratio, Ratio, SpectralParam};
use super::strings::{factorize, QString, StringDecomposition};
use super::QpolyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceWitness {
    /// Offending root of the left polynomial.
    pub root: SpectralParam,
    /// Index of the offending string in the right factorization.
    pub string_index: usize,
    pub string: QString,
    /// The exponent `e` with `root / center = q^e`, equal to `d(-1-m')`.
    pub exponent: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dominance {
    Holds,
    Fails(DominanceWitness),
}

impl Dominance {
    pub fn holds(&self) -> bool {
        matches!(self, Dominance::Holds)
    }
}

/// Root-form check against an already factorized right-hand side.
///
/// Roots are scanned in canonical order, then strings in decomposition
/// order; the first hit is reported. `left` must be dominant.
pub fn dominates_factored(left: &RootMultiset, right: &StringDecomposition) -> Dominance {
    let d = right.step() as i32;
    for (c, _) in left.iter() {
        for (k, s) in right.strings().iter().enumerate() {
            let forbidden = d * (-1 - s.m as i32);
            if ratio(c, &s.center) == Ratio::QPower(forbidden) {
                return Dominance::Fails(DominanceWitness {
                    root: c.clone(),
                    string_index: k,
                    string: s.clone(),
                    exponent: forbidden,
                });
            }
        }
    }
    Dominance::Holds
}

pub fn dominates(left: &RootMultiset, right: &RootMultiset, d: u32) -> Result<Dominance, QpolyError> {
    if !left.is_dominant() {
        return Err(QpolyError::NotDominant(left.to_string()));
    }
    let right = factorize(right, d)?;
    Ok(dominates_factored(left, &right))
}

/// String-pair formulation: factorize both sides and require
/// `a_j / a'_k ≠ q^{d(m_j - m'_k - 2p)}` for `1 ≤ p ≤ m_j`.
pub fn dominates_by_strings(
    left: &RootMultiset,
    right: &RootMultiset,
    d: u32,
) -> Result<bool, QpolyError> {
    let left = factorize(left, d)?;
    let right = factorize(right, d)?;
    let d = d as i32;
    for x in left.strings() {
        for y in right.strings() {
            if let Ratio::QPower(e) = ratio(&x.center, &y.center) {
                let (m, m2) = (x.m as i32, y.m as i32);
                if (1..=m).any(|p| e == d * (m - m2 - 2 * p)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
