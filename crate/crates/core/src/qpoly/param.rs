//! Spectral parameters `a·q^e`: a Laurent monomial in free symbols times a
//! power of `q`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::QpolyError;

/// Name of an abstract spectral symbol. `q` is reserved.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self, QpolyError> {
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(QpolyError::Parse(format!("invalid symbol name `{name}`")));
        }
        if name == "q" {
            return Err(QpolyError::Parse("`q` is reserved and cannot be a symbol".into()));
        }
        Ok(Symbol(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Laurent monomial in symbols, sorted by symbol with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Arc<[(Symbol, i32)]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Arc::from(Vec::new()))
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Symbol, i32)>) -> Self {
        let mut v: Vec<(Symbol, i32)> = factors.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Symbol, i32)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match merged.last_mut() {
                Some((last, acc)) if *last == s => *acc += e,
                _ => merged.push((s, e)),
            }
        }
        merged.retain(|(_, e)| *e != 0);
        Monomial(Arc::from(merged))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Symbol, i32)] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|(s, e)| (s.clone(), -e)).collect())
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.0.iter().map(|(s, _)| s)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A formal spectral value `base · q^qexp`.
///
/// Ordered by base, then by `qexp`; this is the canonical order used for
/// multisets and string decompositions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralParam {
    base: Monomial,
    qexp: i32,
}

/// Outcome of comparing two spectral parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ratio {
    /// The quotient is exactly `q^e`.
    QPower(i32),
    /// The bases differ, so the quotient is never a power of `q`.
    Generic,
}

impl SpectralParam {
    pub fn new(base: Monomial, qexp: i32) -> Self {
        SpectralParam { base, qexp }
    }

    /// The parameter `1`.
    pub fn one() -> Self {
        SpectralParam::new(Monomial::one(), 0)
    }

    pub fn symbol(s: &Symbol) -> Self {
        SpectralParam::new(Monomial::from_factors([(s.clone(), 1)]), 0)
    }

    pub fn base(&self) -> &Monomial {
        &self.base
    }

    pub fn qexp(&self) -> i32 {
        self.qexp
    }

    /// `self · q^k`.
    pub fn times_q(&self, k: i32) -> Self {
        SpectralParam { base: self.base.clone(), qexp: self.qexp + k }
    }

    pub fn inverse(&self) -> Self {
        SpectralParam { base: self.base.inverse(), qexp: -self.qexp }
    }
}

/// Decides whether `c / c2` is a power of `q`.
///
/// Symbols are algebraically independent over `C(q)`, so the quotient is a
/// `q`-power exactly when the bases cancel.
pub fn ratio(c: &SpectralParam, c2: &SpectralParam) -> Ratio {
    if c.base == c2.base {
        Ratio::QPower(c.qexp - c2.qexp)
    } else {
        Ratio::Generic
    }
}

impl fmt::Debug for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.qexp {
            0 => None,
            1 => Some("q".to_string()),
            e => Some(format!("q^{e}")),
        };
        match (self.base.is_one(), q) {
            (true, None) => f.write_str("1"),
            (true, Some(q)) => f.write_str(&q),
            (false, None) => write!(f, "{}", self.base),
            (false, Some(q)) => write!(f, "{}*{q}", self.base),
        }
    }
}

impl FromStr for SpectralParam {
    type Err = QpolyError;

    /// Parses products such as `a^2*b*q^-3`, `q`, or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.is_empty() {
            return Err(QpolyError::Parse("empty spectral parameter".into()));
        }
        let mut factors = Vec::new();
        let mut qexp = 0i32;
        for raw in text.split('*') {
            let part = raw.trim();
            if part.is_empty() {
                return Err(QpolyError::Parse(format!("empty factor in `{text}`")));
            }
            if part == "1" {
                continue;
            }
            let (name, exp) = match part.split_once('^') {
                Some((name, exp)) => {
                    let exp: i32 = exp.trim().parse().map_err(|_| {
                        QpolyError::Parse(format!("bad exponent `{}` in `{text}`", exp.trim()))
                    })?;
                    (name.trim(), exp)
                }
                None => (part, 1),
            };
            if name == "q" {
                qexp += exp;
            } else {
                factors.push((Symbol::new(name)?, exp));
            }
        }
        Ok(SpectralParam::new(Monomial::from_factors(factors), qexp))
    }
}
