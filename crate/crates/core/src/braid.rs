//! The braid group action on tuples of log-series `𝐡 = (h_1, .., h_n)`.
//!
//! `T_i` acts by
//!
//! ```text
//! (T_i h)_i = -h_i(q_i^2 u)
//! (T_i h)_j = h_j(u) + Σ_{s=0}^{|a_ji|-1} h_i(q^{d_i + d_j(|a_ji|-1-2s)} u)    (j ≠ i)
//! ```
//!
//! which is the power-series form of `T_i e_j = e_j - q_i^r [r a_ji]_j / [r]_j e_i`
//! on the degree-`r` coefficients. When `j` is short the neighbour shifts
//! are `q`, `q^3, q` or `q^5, q^3, q` for `a_ji = -1, -2, -3`; across an
//! edge between two long nodes the single shift is `q_i`, not `q`.
//! On root multisets the substitution `u ↦ q^k u` multiplies every root by
//! `q^k`.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::cartan::CartanData;
use crate::qpoly::{HTuple, Monomial, RootMultiset, SpectralParam, Symbol};
use crate::weyl::{ElementId, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("node {node} is not an ascent of the element with word {word:?}")]
    NotAscent { node: usize, word: Vec<usize> },
    #[error("internal invariant violated: {0}")]
    PositivityViolation(String),
}

pub fn apply_generator(c: &CartanData, i: usize, h: &HTuple) -> HTuple {
    let hi = h.component(i);
    let components = c
        .nodes()
        .map(|j| {
            if j == i {
                return Arc::new(hi.shift(2 * c.symmetrizer(i) as i32).negate());
            }
            let a = c.entry(j, i).unsigned_abs() as i32;
            if a == 0 || hi.is_empty() {
                return h.shared(j).clone();
            }
            let (di, dj) = (c.symmetrizer(i) as i32, c.symmetrizer(j) as i32);
            let mut out = h.component(j).clone();
            for s in 0..a {
                out.add_shifted(hi, di + dj * (a - 1 - 2 * s));
            }
            Arc::new(out)
        })
        .collect();
    HTuple::from_shared(components)
}

/// `T_{i_1} T_{i_2} ⋯ T_{i_k} h`, applying the rightmost generator first.
/// The word need not be reduced.
pub fn apply_word(c: &CartanData, word: &[usize], h: &HTuple) -> HTuple {
    word.iter().rev().fold(h.clone(), |acc, &i| apply_generator(c, i, &acc))
}

/// `T_w h` for every element of the group, indexed by [`ElementId`].
#[derive(Debug, Clone)]
pub struct Orbit {
    tuples: Vec<HTuple>,
}

impl Orbit {
    pub fn get(&self, w: ElementId) -> &HTuple {
        &self.tuples[w.index()]
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, &HTuple)> {
        self.tuples.iter().enumerate().map(|(k, t)| (ElementId(k as u32), t))
    }
}

/// Computes `T_w h` for all `w`, one generator application per BFS edge.
pub fn orbit(c: &CartanData, g: &WeylGroup, h: &HTuple) -> Orbit {
    let mut tuples: Vec<HTuple> = Vec::with_capacity(g.order());
    for w in g.ids() {
        let t = match g.parent(w) {
            None => h.clone(),
            // BFS parents always precede their children
            Some((p, j)) => apply_generator(c, j, &tuples[p.index()]),
        };
        tuples.push(t);
    }
    Orbit { tuples }
}

/// Coefficients `p_{r,j}` with `(T_w h)_i = Σ_j Σ_r p_{r,j} h_j(q^r u)`,
/// keyed by `(j, r)`.
pub type TwistPolynomial = BTreeMap<(usize, u32), u64>;

/// Tuple whose node `j` carries the single root `b_{j+1}`.
pub fn tautological_tuple(rank: usize) -> (HTuple, Vec<Symbol>) {
    let symbols: Vec<Symbol> = (1..=rank)
        .map(|j| Symbol::new(&format!("b{j}")).expect("valid symbol"))
        .collect();
    let components = symbols
        .iter()
        .map(|s| RootMultiset::singleton(SpectralParam::symbol(s)))
        .collect();
    (HTuple::from_components(components), symbols)
}

/// Reads off the non-negative integers `p_{r,j}` describing component `i`
/// of `T_w` for an ascent `i` of `w`.
pub fn twist_polynomial(
    c: &CartanData,
    g: &WeylGroup,
    w: ElementId,
    i: usize,
) -> Result<TwistPolynomial, BraidError> {
    let word = g.word(w);
    if !g.ascents(w).contains(i) {
        return Err(BraidError::NotAscent { node: i, word });
    }
    let (taut, symbols) = tautological_tuple(c.rank());
    let image = apply_word(c, &word, &taut);
    let bases: Vec<Monomial> = symbols
        .iter()
        .map(|s| SpectralParam::symbol(s).base().clone())
        .collect();
    let mut out = TwistPolynomial::new();
    for (root, mult) in image.component(i).iter() {
        let j = bases.iter().position(|b| b == root.base()).ok_or_else(|| {
            BraidError::PositivityViolation(format!("unexpected root {root}"))
        })?;
        if mult < 0 || root.qexp() < 0 {
            return Err(BraidError::PositivityViolation(format!(
                "component {} of T_w for word {word:?} contains {root} with multiplicity {mult}",
                i + 1
            )));
        }
        out.insert((j, root.qexp() as u32), mult as u64);
    }
    Ok(out)
}
