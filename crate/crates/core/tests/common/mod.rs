//! Independent oracles and random generators shared by the integration
//! tests. Nothing here calls the code paths it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use qaffine::braid::apply_generator;
use qaffine::cartan::CartanData;
use qaffine::qpoly::{HTuple, RootMultiset, SpectralParam};
use rand::Rng;

pub const SYMBOLS: [&str; 3] = ["a", "b", "c"];

pub fn param(symbol: &str, qexp: i32) -> SpectralParam {
    format!("{symbol}*q^{qexp}").parse().unwrap()
}

/// Signed multiset: up to `max_roots` roots, qexp in `qrange`, over the
/// first `symbols` symbols.
pub fn random_multiset(rng: &mut impl Rng, max_roots: usize, qrange: (i32, i32), symbols: usize, signed: bool) -> RootMultiset {
    let n = rng.gen_range(0..=max_roots);
    let mut out = RootMultiset::new();
    for _ in 0..n {
        let s = SYMBOLS[rng.gen_range(0..symbols)];
        let e = rng.gen_range(qrange.0..=qrange.1);
        let mult = if signed && rng.gen_bool(0.3) { -1 } else { 1 };
        out.insert(param(s, e), mult);
    }
    out
}

pub fn random_tuple(rng: &mut impl Rng, rank: usize, signed: bool) -> HTuple {
    HTuple::from_components((0..rank).map(|_| random_multiset(rng, 6, (-5, 5), 3, signed)).collect())
}

// ---------------------------------------------------------------------------
// Strings as integer intervals: (lowest qexp, length) over one symbol.

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: i32,
    pub m: u32,
}

impl Interval {
    pub fn hi(&self, d: i32) -> i32 {
        self.lo + 2 * d * (self.m as i32 - 1)
    }

    pub fn center(&self, d: i32) -> i32 {
        (self.lo + self.hi(d)) / 2
    }

    fn points(&self, d: i32) -> BTreeSet<i32> {
        (0..self.m as i32).map(|k| self.lo + 2 * d * k).collect()
    }
}

/// Set-theoretic special position: the union of the two root sets is a
/// string and neither set contains the other.
pub fn intervals_linked(x: Interval, y: Interval, d: i32) -> bool {
    if (x.lo - y.lo).rem_euclid(2 * d) != 0 {
        return false;
    }
    let (px, py) = (x.points(d), y.points(d));
    if px.is_subset(&py) || py.is_subset(&px) {
        return false;
    }
    let union: BTreeSet<i32> = px.union(&py).copied().collect();
    let lo = *union.first().unwrap();
    let hi = *union.last().unwrap();
    union.len() as i32 == (hi - lo) / (2 * d) + 1
}

/// Every way to write the multiset of exponents as a multiset of strings
/// with step `2d`, each decomposition sorted.
pub fn all_string_partitions(exps: &BTreeMap<i32, u32>, d: i32) -> BTreeSet<Vec<Interval>> {
    let mut out = BTreeSet::new();
    let mut counts = exps.clone();
    let mut chosen = Vec::new();
    partitions_rec(&mut counts, d, &mut chosen, &mut out);
    out
}

fn partitions_rec(
    counts: &mut BTreeMap<i32, u32>,
    d: i32,
    chosen: &mut Vec<Interval>,
    out: &mut BTreeSet<Vec<Interval>>,
) {
    let Some((&lo, _)) = counts.iter().find(|(_, &c)| c > 0) else {
        let mut v = chosen.clone();
        v.sort();
        out.insert(v);
        return;
    };
    let mut m = 0u32;
    loop {
        let next = lo + 2 * d * m as i32;
        if counts.get(&next).copied().unwrap_or(0) == 0 {
            break;
        }
        m += 1;
        for k in 0..m as i32 {
            *counts.get_mut(&(lo + 2 * d * k)).unwrap() -= 1;
        }
        chosen.push(Interval { lo, m });
        partitions_rec(counts, d, chosen, out);
        chosen.pop();
        for k in 0..m as i32 {
            *counts.get_mut(&(lo + 2 * d * k)).unwrap() += 1;
        }
    }
}

/// Decompositions in which no two strings are linked.
pub fn generic_partitions(exps: &BTreeMap<i32, u32>, d: i32) -> Vec<Vec<Interval>> {
    all_string_partitions(exps, d)
        .into_iter()
        .filter(|p| {
            (0..p.len()).all(|j| (j + 1..p.len()).all(|l| !intervals_linked(p[j], p[l], d)))
        })
        .collect()
}

/// All multisets of size at most `max_size` drawn from `lo..=hi`.
pub fn all_multisets(lo: i32, hi: i32, max_size: usize) -> Vec<BTreeMap<i32, u32>> {
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    multisets_rec(lo, hi, max_size, &mut cur, &mut out);
    out
}

fn multisets_rec(from: i32, hi: i32, room: usize, cur: &mut BTreeMap<i32, u32>, out: &mut Vec<BTreeMap<i32, u32>>) {
    out.push(cur.clone());
    if room == 0 {
        return;
    }
    for x in from..=hi {
        *cur.entry(x).or_insert(0) += 1;
        multisets_rec(x, hi, room - 1, cur, out);
        let c = cur.get_mut(&x).unwrap();
        *c -= 1;
        if *c == 0 {
            cur.remove(&x);
        }
    }
}

// ---------------------------------------------------------------------------
// The sl_2 pairwise condition for strings (m_r, a_r): for r < s,
// a_r / a_s ≠ q^{m_r - m_s - 2p} for 1 ≤ p ≤ m_r. Exponents only, one symbol.

pub fn sl2_pair_ok(m_r: i32, e_r: i32, m_s: i32, e_s: i32) -> bool {
    (1..=m_r).all(|p| e_r - e_s != m_r - m_s - 2 * p)
}

// ---------------------------------------------------------------------------
// Exact Laurent polynomials in q with integer coefficients.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(pub BTreeMap<i32, i64>);

impl Laurent {
    pub fn monomial(e: i32, c: i64) -> Self {
        let mut l = Laurent::default();
        l.add_term(e, c);
        l
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`, for any integer `n`.
pub fn q_integer(n: i32, d: i32) -> Laurent {
    let mut out = Laurent::default();
    let sign = n.signum() as i64;
    let n = n.abs();
    for k in 0..n {
        out.add_term(d * (n - 1 - 2 * k), sign);
    }
    out
}

/// `Σ mult · q^{r e}` over the roots `a q^e` of `s`.
fn series_coefficient(s: &RootMultiset, r: i32) -> Laurent {
    let mut out = Laurent::default();
    for (root, mult) in s.iter() {
        out.add_term(r * root.qexp(), mult);
    }
    out
}

/// Compares the series action of each `T_i` with the eigenvalue formula
/// `T_i e_j = e_j - q_i^r [r a_ji]_j / [r]_j e_i` for `r = 1..=max_r`.
pub fn generator_matches_eigenvalue_formula(c: &CartanData, max_r: i32) -> Result<usize, String> {
    let t = c.lie_type();
    let mut compared = 0;
    for i in c.nodes() {
        let di = c.symmetrizer(i) as i32;
        let h = HTuple::single(c.rank(), i, "{a}".parse().unwrap());
        let image = apply_generator(c, i, &h);
        for j in c.nodes() {
            let dj = c.symmetrizer(j) as i32;
            for r in 1..=max_r {
                let got = series_coefficient(image.component(j), r);
                // both sides multiplied by [r]_j
                let (lhs, rhs) = if j == i {
                    (got.mul(&q_integer(r, di)), q_integer(r, di).add(&Laurent::monomial(r * di, -1).mul(&q_integer(2 * r, di))))
                } else {
                    (got.mul(&q_integer(r, dj)), Laurent::monomial(r * di, -1).mul(&q_integer(r * c.entry(j, i), dj)))
                };
                if lhs != rhs {
                    return Err(format!("{t}: T_{} on node {} at r={r}: {lhs:?} vs {rhs:?}", i + 1, j + 1));
                }
                compared += 1;
            }
        }
    }
    Ok(compared)
}
