//! Cartan matrices and symmetrizers for the finite simple Lie types.
//!
//! Nodes use the Bourbaki numbering. Internally every node index is
//! zero-based, so Bourbaki node `k` is index `k - 1`; all textual
//! surfaces (problem files, reduced words in reports) use the one-based
//! labels.
//!
//! Entries follow `a_ij = 2 (α_i, α_j) / (α_i, α_i)`, and the symmetrizer
//! is `d_i = (α_i, α_i) / 2` normalized so that short roots have `d_i = 1`.
//! With these conventions `d_i a_ij = d_j a_ji`.
//!
//! | type | long nodes      | short nodes     | `d`                |
//! |------|-----------------|-----------------|--------------------|
//! | A_n  | all             |                 | `(1, .., 1)`       |
//! | B_n  | `1 .. n-1`      | `n`             | `(2, .., 2, 1)`    |
//! | C_n  | `n`             | `1 .. n-1`      | `(1, .., 1, 2)`    |
//! | D_n  | all             |                 | `(1, .., 1)`       |
//! | E_n  | all             |                 | `(1, .., 1)`       |
//! | F_4  | `1, 2`          | `3, 4`          | `(2, 2, 1, 1)`     |
//! | G_2  | `2`             | `1`             | `(1, 3)`           |
//!
//! D_n branches at node `n - 2` (nodes `n - 1` and `n` are the spin
//! nodes). E_n has node 2 attached to node 4 and the chain
//! `1 - 3 - 4 - 5 - .. - n`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("unknown Lie type `{0}` (expected e.g. A2, B3, G2)")]
    UnknownType(String),
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A finite simple Lie type such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CartanError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(CartanError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every type with rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        let mut out = Vec::new();
        for family in families {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || CartanError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(unknown()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        LieType::new(family, rank)
    }
}

/// Cartan matrix, symmetrizer and type of a finite simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    lie_type: LieType,
    a: Vec<Vec<i32>>,
    d: Vec<u32>,
}

impl CartanData {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.a
    }

    /// `d_i`, so that `q_i = q^{d_i}`.
    #[inline]
    pub fn symmetrizer(&self, i: usize) -> u32 {
        self.d[i]
    }

    pub fn symmetrizers(&self) -> &[u32] {
        &self.d
    }
}

pub fn build_cartan(t: LieType) -> CartanData {
    let n = t.rank;
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    let d: Vec<u32> = match t.family {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            // a_{n,n-1} = -2: the short node sees the long one twice
            a[n - 1][n - 2] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            a[n - 2][n - 1] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::F => {
            a[2][1] = -2;
            vec![2, 2, 1, 1]
        }
        Family::G => {
            a[0][1] = -3;
            vec![1, 3]
        }
    };
    CartanData { lie_type: t, a, d }
}

/// The involution `i ↦ ī` of the Dynkin diagram given by `-w₀`.
pub fn bar_automorphism(t: LieType) -> Vec<usize> {
    let n = t.rank;
    let mut bar: Vec<usize> = (0..n).collect();
    match t.family {
        Family::A => bar.reverse(),
        Family::D if n % 2 == 1 => bar.swap(n - 2, n - 1),
        Family::E if n == 6 => {
            bar.swap(0, 5);
            bar.swap(2, 4);
        }
        _ => {}
    }
    bar
}
