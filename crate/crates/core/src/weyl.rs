//! Finite Weyl groups: breadth-first enumeration with lengths, one reduced
//! word per element, ascent sets and reduced-word enumeration.
//!
//! Elements are identified by the integer matrix of their action on the
//! simple-root basis. Column `j` of that matrix is `w(α_j)`, a root, so all
//! entries fit in an `i8`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use thiserror::Error;

use crate::cartan::CartanData;

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("Weyl group exceeds the cap of {cap} elements ({partial} enumerated before stopping)")]
    CapExceeded { cap: usize, partial: usize },
}

/// Position of an element in BFS order. The identity is always `ElementId(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of Dynkin nodes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NodeSet(u64);

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        NodeSet(if rank >= 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = NodeSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Owned snapshot of one group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub id: ElementId,
    pub length: u32,
    /// The first reduced word found by BFS, `w = s_{word[0]} ⋯ s_{word[k-1]}`.
    pub word: Vec<usize>,
    pub ascents: NodeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWords {
    pub words: Vec<Vec<usize>>,
    pub truncated: bool,
}

/// A fully enumerated finite Weyl group with its left Cayley graph.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    lengths: Vec<u32>,
    /// `w = s_gen · parent` for the BFS discovery edge.
    parents: Vec<Option<(ElementId, u8)>>,
    /// `left[w * rank + i] = s_i · w`.
    left: Vec<ElementId>,
    ascents: Vec<NodeSet>,
    longest: ElementId,
}

fn reflect_row(c: &CartanData, m: &mut [i8], i: usize) {
    let n = c.rank();
    for col in 0..n {
        let pairing: i32 = (0..n).map(|k| c.entry(i, k) * m[k * n + col] as i32).sum();
        m[i * n + col] = (m[i * n + col] as i32 - pairing) as i8;
    }
}

/// Enumerates `W` by breadth-first closure under left multiplication.
pub fn enumerate(c: &CartanData, cap: usize) -> Result<WeylGroup, WeylError> {
    let n = c.rank();
    let mut identity = vec![0i8; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    let identity: Rc<[i8]> = Rc::from(identity);
    let mut matrices: Vec<Rc<[i8]>> = vec![identity.clone()];
    let mut index: HashMap<Rc<[i8]>, u32> = HashMap::from([(identity, 0)]);
    let mut lengths = vec![0u32];
    let mut parents: Vec<Option<(ElementId, u8)>> = vec![None];
    let mut left: Vec<ElementId> = Vec::new();

    let mut cursor = 0usize;
    while cursor < matrices.len() {
        for i in 0..n {
            let mut m = matrices[cursor].to_vec();
            reflect_row(c, &mut m, i);
            let id = match index.get(m.as_slice()) {
                Some(&id) => id,
                None => {
                    if matrices.len() >= cap {
                        return Err(WeylError::CapExceeded { cap, partial: matrices.len() });
                    }
                    let id = matrices.len() as u32;
                    let m: Rc<[i8]> = Rc::from(m);
                    matrices.push(m.clone());
                    index.insert(m, id);
                    lengths.push(lengths[cursor] + 1);
                    parents.push(Some((ElementId(cursor as u32), i as u8)));
                    id
                }
            };
            left.push(ElementId(id));
        }
        cursor += 1;
    }

    let ascents: Vec<NodeSet> = (0..matrices.len())
        .map(|w| {
            (0..n)
                .filter(|&i| lengths[left[w * n + i].index()] > lengths[w])
                .collect()
        })
        .collect();
    let longest = ElementId(matrices.len() as u32 - 1);
    Ok(WeylGroup { rank: n, lengths, parents, left, ascents, longest })
}

impl WeylGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + ExactSizeIterator {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    /// The unique element of maximal length, `w₀`.
    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, w: ElementId) -> u32 {
        self.lengths[w.index()]
    }

    /// `s_i · w`.
    pub fn left_mul(&self, i: usize, w: ElementId) -> ElementId {
        self.left[w.index() * self.rank + i]
    }

    /// The BFS discovery edge: `w = s_i · parent`.
    pub fn parent(&self, w: ElementId) -> Option<(ElementId, usize)> {
        self.parents[w.index()].map(|(p, i)| (p, i as usize))
    }

    /// Nodes `i` with `ℓ(s_i w) = ℓ(w) + 1`.
    pub fn ascents(&self, w: ElementId) -> NodeSet {
        self.ascents[w.index()]
    }

    pub fn word(&self, w: ElementId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w) as usize);
        let mut cur = w;
        while let Some((p, i)) = self.parent(cur) {
            word.push(i);
            cur = p;
        }
        word
    }

    pub fn element(&self, w: ElementId) -> WeylElement {
        WeylElement { id: w, length: self.length(w), word: self.word(w), ascents: self.ascents(w) }
    }

    /// Element reached from the identity by the word, read right to left.
    pub fn from_word(&self, word: &[usize]) -> ElementId {
        word.iter().rev().fold(self.identity(), |w, &i| self.left_mul(i, w))
    }

    /// All reduced words of `w` in lexicographic order, at most `limit` of
    /// them; `truncated` is set when more exist.
    pub fn all_reduced_words(&self, w: ElementId, limit: usize) -> ReducedWords {
        let mut words = Vec::new();
        let mut prefix = Vec::with_capacity(self.length(w) as usize);
        self.collect_words(w, &mut prefix, &mut words, limit + 1);
        let truncated = words.len() > limit;
        words.truncate(limit);
        ReducedWords { words, truncated }
    }

    fn collect_words(&self, w: ElementId, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, max: usize) {
        if out.len() >= max {
            return;
        }
        if self.length(w) == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in 0..self.rank {
            let v = self.left_mul(i, w);
            if self.length(v) < self.length(w) {
                prefix.push(i);
                self.collect_words(v, prefix, out, max);
                prefix.pop();
            }
        }
    }
}

/// Matrix of `s_{word[0]} ⋯ s_{word[k-1]}` on simple-root coordinates;
/// column `j` is the image of `α_j`.
pub fn action_matrix(c: &CartanData, word: &[usize]) -> Vec<Vec<i32>> {
    let n = c.rank();
    let mut m: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i32).collect()).collect();
    for &i in word.iter().rev() {
        for col in 0..n {
            let pairing: i32 = (0..n).map(|k| c.entry(i, k) * m[k][col]).sum();
            m[i][col] -= pairing;
        }
    }
    m
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under all simple reflections.
pub fn positive_roots(c: &CartanData) -> Vec<Vec<i32>> {
    let n = c.rank();
    let simple: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i32).collect()).collect();
    let mut seen: HashSet<Vec<i32>> = simple.iter().cloned().collect();
    let mut frontier = simple;
    while let Some(v) = frontier.pop() {
        for i in 0..n {
            let pairing: i32 = (0..n).map(|k| c.entry(i, k) * v[k]).sum();
            let mut r = v.clone();
            r[i] -= pairing;
            if seen.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    let mut pos: Vec<Vec<i32>> = seen.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    pos.sort();
    pos
}
