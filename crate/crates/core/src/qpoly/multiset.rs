//! Signed multisets of roots and the tuples the braid group acts on.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::param::SpectralParam;
use super::QpolyError;

/// A signed multiset of spectral parameters.
///
/// Stands for `∏_c (1 - c·u)^{mult(c)}`, or equivalently for the series
/// `-Σ_c mult(c)·ln(1 - c·u)`. Zero multiplicities are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RootMultiset {
    entries: BTreeMap<SpectralParam, i64>,
}

impl RootMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(c: SpectralParam) -> Self {
        let mut s = Self::new();
        s.insert(c, 1);
        s
    }

    /// Adds `mult` copies of `c` (negative values remove).
    pub fn insert(&mut self, c: SpectralParam, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.entries.entry(c) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += mult;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
        }
    }

    pub fn multiplicity(&self, c: &SpectralParam) -> i64 {
        self.entries.get(c).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct roots.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// `Σ mult`, the degree of the polynomial.
    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    /// True when every multiplicity is positive, i.e. the multiset is an
    /// honest polynomial.
    pub fn is_dominant(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpectralParam, i64)> {
        self.entries.iter().map(|(c, &m)| (c, m))
    }

    /// Roots repeated by multiplicity. Only meaningful for dominant multisets.
    pub fn roots(&self) -> impl Iterator<Item = &SpectralParam> {
        self.entries
            .iter()
            .flat_map(|(c, &m)| std::iter::repeat_n(c, m.max(0) as usize))
    }

    pub fn add_assign(&mut self, other: &RootMultiset) {
        self.add_scaled(other, 1);
    }

    pub fn add_scaled(&mut self, other: &RootMultiset, factor: i64) {
        for (c, m) in other.iter() {
            self.insert(c.clone(), m * factor);
        }
    }

    /// Adds `other` with every root multiplied by `q^k`.
    pub fn add_shifted(&mut self, other: &RootMultiset, k: i32) {
        for (c, m) in other.iter() {
            self.insert(c.times_q(k), m);
        }
    }

    pub fn negate(&self) -> Self {
        RootMultiset {
            entries: self.entries.iter().map(|(c, &m)| (c.clone(), -m)).collect(),
        }
    }

    /// Substitution `u ↦ q^k u`: each root `c` becomes `c·q^k`.
    pub fn shift(&self, k: i32) -> Self {
        RootMultiset {
            entries: self.entries.iter().map(|(c, &m)| (c.times_q(k), m)).collect(),
        }
    }

    /// Normalized reversal `u^deg π(1/u)`: each root `c` becomes `c^{-1}`.
    pub fn invert_reverse(&self) -> Self {
        RootMultiset {
            entries: self.entries.iter().map(|(c, &m)| (c.inverse(), m)).collect(),
        }
    }

    pub fn union(&self, other: &RootMultiset) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

impl FromIterator<(SpectralParam, i64)> for RootMultiset {
    fn from_iter<I: IntoIterator<Item = (SpectralParam, i64)>>(iter: I) -> Self {
        let mut s = RootMultiset::new();
        for (c, m) in iter {
            s.insert(c, m);
        }
        s
    }
}

impl FromIterator<SpectralParam> for RootMultiset {
    fn from_iter<I: IntoIterator<Item = SpectralParam>>(iter: I) -> Self {
        iter.into_iter().map(|c| (c, 1)).collect()
    }
}

impl fmt::Debug for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{a*q, b:2}`; an all-negative multiset prints as `-{a*q^3}`.
impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let negative = !self.is_empty() && self.entries.values().all(|&m| m < 0);
        let sign = if negative { -1 } else { 1 };
        if negative {
            f.write_str("-")?;
        }
        f.write_str("{")?;
        for (k, (c, m)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            match m * sign {
                1 => write!(f, "{c}")?,
                m => write!(f, "{c}:{m}")?,
            }
        }
        f.write_str("}")
    }
}

impl FromStr for RootMultiset {
    type Err = QpolyError;

    /// Parses `{a*q, a*q^-1}`, `{a:2, b:-1}`, `-{a*q^3}` or `{}`.
    /// Repeated roots accumulate.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1, rest.trim()),
            None => (1, text),
        };
        let inner = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| QpolyError::Parse(format!("expected `{{...}}`, got `{text}`")))?;
        let mut out = RootMultiset::new();
        if inner.trim().is_empty() {
            return Ok(out);
        }
        for item in inner.split(',') {
            let (root, mult) = match item.split_once(':') {
                Some((root, mult)) => {
                    let mult: i64 = mult.trim().parse().map_err(|_| {
                        QpolyError::Parse(format!("bad multiplicity `{}`", mult.trim()))
                    })?;
                    if mult == 0 {
                        return Err(QpolyError::Parse(format!("zero multiplicity in `{item}`")));
                    }
                    (root, mult)
                }
                None => (item, 1),
            };
            out.insert(root.parse()?, sign * mult);
        }
        Ok(out)
    }
}

/// One root multiset per Dynkin node.
///
/// Components are reference counted, so tuples produced by the braid
/// action share every component they leave untouched.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HTuple {
    components: Vec<Arc<RootMultiset>>,
}

impl HTuple {
    pub fn empty(rank: usize) -> Self {
        let e = Arc::new(RootMultiset::new());
        HTuple { components: vec![e; rank] }
    }

    pub fn from_components(components: Vec<RootMultiset>) -> Self {
        HTuple { components: components.into_iter().map(Arc::new).collect() }
    }

    pub(crate) fn from_shared(components: Vec<Arc<RootMultiset>>) -> Self {
        HTuple { components }
    }

    /// Tuple with `c` at `node` and nothing elsewhere.
    pub fn single(rank: usize, node: usize, component: RootMultiset) -> Self {
        let mut t = HTuple::empty(rank);
        t.components[node] = Arc::new(component);
        t
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &RootMultiset {
        &self.components[i]
    }

    pub(crate) fn shared(&self, i: usize) -> &Arc<RootMultiset> {
        &self.components[i]
    }

    pub fn components(&self) -> impl Iterator<Item = &RootMultiset> {
        self.components.iter().map(|c| c.as_ref())
    }

    pub fn set_component(&mut self, i: usize, component: RootMultiset) {
        self.components[i] = Arc::new(component);
    }

    pub fn is_dominant(&self) -> bool {
        self.components.iter().all(|c| c.is_dominant())
    }

    /// Componentwise sum (product of the polynomial tuples).
    pub fn add(&self, other: &HTuple) -> HTuple {
        assert_eq!(self.rank(), other.rank(), "tuples over different index sets");
        HTuple::from_components(
            self.components().zip(other.components()).map(|(a, b)| a.union(b)).collect(),
        )
    }

    pub fn negate(&self) -> HTuple {
        HTuple::from_components(self.components().map(|c| c.negate()).collect())
    }
}

impl fmt::Debug for HTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.components().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
