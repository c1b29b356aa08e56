//! `q`-strings and the unique factorization of a split polynomial into
//! strings in general position.

use std::fmt;

use super::multiset::RootMultiset;
use super::param::{ratio, Monomial, Ratio, SpectralParam};
use super::QpolyError;

/// The string `∏_{r=1}^{m} (1 - a·q^{d(m-2r+1)} u)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QString {
    pub m: u32,
    pub center: SpectralParam,
    pub step: u32,
}

impl QString {
    pub fn new(m: u32, center: SpectralParam, step: u32) -> Self {
        assert!(m > 0 && step > 0, "string length and step must be positive");
        QString { m, center, step }
    }

    /// Roots from top to bottom: `a·q^{d(m-1)}, a·q^{d(m-3)}, .., a·q^{-d(m-1)}`.
    pub fn roots(&self) -> impl Iterator<Item = SpectralParam> + '_ {
        let (m, d) = (self.m as i32, self.step as i32);
        (1..=m).map(move |r| self.center.times_q(d * (m - 2 * r + 1)))
    }

    pub fn expand(&self) -> RootMultiset {
        self.roots().collect()
    }

    fn lowest(&self) -> i32 {
        self.center.qexp() - self.step as i32 * (self.m as i32 - 1)
    }

    fn highest(&self) -> i32 {
        self.center.qexp() + self.step as i32 * (self.m as i32 - 1)
    }

    /// Builds the string with roots `base·q^lo, base·q^{lo+2d}, .., base·q^hi`.
    fn spanning(base: &Monomial, lo: i32, hi: i32, step: u32) -> QString {
        let d = step as i32;
        debug_assert!(hi >= lo && (hi - lo) % (2 * d) == 0);
        let m = ((hi - lo) / (2 * d) + 1) as u32;
        QString::new(m, SpectralParam::new(base.clone(), (lo + hi) / 2), step)
    }
}

/// Two strings are in special position when their union is a longer
/// string and neither contains the other:
/// `a/a' = q^{±d(m + m' - 2p)}` for some `0 ≤ p < min(m, m')`.
pub fn in_special_position(x: &QString, y: &QString) -> bool {
    debug_assert_eq!(x.step, y.step);
    let Ratio::QPower(e) = ratio(&x.center, &y.center) else {
        return false;
    };
    let d = x.step as i32;
    let (m, m2) = (x.m as i32, y.m as i32);
    (0..m.min(m2)).any(|p| e.abs() == d * (m + m2 - 2 * p))
}

impl fmt::Debug for QString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, {})", self.m, self.center)
    }
}

/// Canonical factorization of a dominant multiset into pairwise generic
/// strings, all with the same step.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StringDecomposition {
    step: u32,
    strings: Vec<QString>,
}

impl StringDecomposition {
    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn strings(&self) -> &[QString] {
        &self.strings
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn expand(&self) -> RootMultiset {
        let mut out = RootMultiset::new();
        for s in &self.strings {
            out.add_assign(&s.expand());
        }
        out
    }

    pub fn is_pairwise_generic(&self) -> bool {
        self.strings.iter().enumerate().all(|(j, x)| {
            self.strings[j + 1..].iter().all(|y| !in_special_position(x, y))
        })
    }
}

impl fmt::Debug for StringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for StringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strings.is_empty() {
            return f.write_str("()");
        }
        for (k, s) in self.strings.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Sort key: center (base, then `qexp`), then longer strings first.
pub(crate) fn canonical_sort(strings: &mut [QString]) {
    strings.sort_by(|x, y| x.center.cmp(&y.center).then(y.m.cmp(&x.m)));
}

/// Splits a dominant multiset into its unique pairwise generic
/// decomposition into `q^d`-strings.
///
/// Starting from singletons, any pair in special position is replaced by
/// the union and intersection of the two strings until none remain.
pub fn factorize(s: &RootMultiset, d: u32) -> Result<StringDecomposition, QpolyError> {
    if d == 0 {
        return Err(QpolyError::ZeroStep);
    }
    if !s.is_dominant() {
        return Err(QpolyError::NotDominant(s.to_string()));
    }
    let mut strings: Vec<QString> = Vec::with_capacity(s.degree() as usize);
    // roots with different bases never interact, so merge per base
    let mut group: Vec<QString> = Vec::new();
    let mut current: Option<&Monomial> = None;
    for (c, mult) in s.iter() {
        if current != Some(c.base()) {
            merge_group(&mut group);
            strings.append(&mut group);
            current = Some(c.base());
        }
        for _ in 0..mult {
            group.push(QString::new(1, c.clone(), d));
        }
    }
    merge_group(&mut group);
    strings.append(&mut group);
    canonical_sort(&mut strings);
    Ok(StringDecomposition { step: d, strings })
}

fn merge_group(group: &mut Vec<QString>) {
    'outer: loop {
        for j in 0..group.len() {
            for l in j + 1..group.len() {
                if in_special_position(&group[j], &group[l]) {
                    let (x, y) = (&group[j], &group[l]);
                    let base = x.center.base().clone();
                    let step = x.step;
                    let union = QString::spanning(
                        &base,
                        x.lowest().min(y.lowest()),
                        x.highest().max(y.highest()),
                        step,
                    );
                    let (lo, hi) = (x.lowest().max(y.lowest()), x.highest().min(y.highest()));
                    group.swap_remove(l);
                    group[j] = union;
                    if lo <= hi {
                        group.push(QString::spanning(&base, lo, hi, step));
                    }
                    continue 'outer;
                }
            }
        }
        return;
    }
}
