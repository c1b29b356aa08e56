//! Verdict reports, as text and as JSON.
//!
//! Node labels and pair indices in reports are 1-based; reduced words are
//! space-separated node labels (`""` for the identity).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cyclicity::{KashiwaraWitness, MainWitness, Verdict};
use crate::qpoly::{ratio, QpolyError, Ratio, SpectralParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    CriterionSatisfied,
    CriterionViolated,
}

pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `[j, ℓ]` with `j < ℓ`.
    pub pair: [usize; 2],
    pub word: String,
    pub node: usize,
    pub root: String,
    pub string_m: u32,
    pub string_center: String,
    pub step: u32,
    pub exponent: i32,
}

impl From<&MainWitness> for WitnessReport {
    fn from(w: &MainWitness) -> Self {
        WitnessReport {
            pair: [w.left + 1, w.right + 1],
            word: format_word(&w.word),
            node: w.node + 1,
            root: w.root.to_string(),
            string_m: w.string.m,
            string_center: w.string.center.to_string(),
            step: w.string.step,
            exponent: w.exponent,
        }
    }
}

impl WitnessReport {
    /// Re-parses the root and string center and confirms
    /// `root / center = q^{step·(-1-m)} = q^exponent`.
    pub fn revalidate(&self) -> Result<bool, QpolyError> {
        let root: SpectralParam = self.root.parse()?;
        let center: SpectralParam = self.string_center.parse()?;
        let forbidden = self.step as i32 * (-1 - self.string_m as i32);
        Ok(self.exponent == forbidden && ratio(&root, &center) == Ratio::QPower(forbidden))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainReport {
    pub status: Status,
    pub witnesses: Vec<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KashiwaraEntry {
    pub pair: [usize; 2],
    pub exponent: i32,
    pub bound: i32,
}

impl From<&KashiwaraWitness> for KashiwaraEntry {
    fn from(w: &KashiwaraWitness) -> Self {
        KashiwaraEntry { pair: [w.left + 1, w.right + 1], exponent: w.exponent, bound: w.bound }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KashiwaraReport {
    pub status: Status,
    pub witnesses: Vec<KashiwaraEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub factors: usize,
    pub weyl_order: Option<usize>,
    pub main: MainReport,
    pub kashiwara: Option<KashiwaraReport>,
}

impl CheckReport {
    pub fn main_report(verdict: &Verdict<MainWitness>) -> MainReport {
        Self::main_from_witnesses(verdict.witness().into_iter())
    }

    pub fn main_from_witnesses<'a>(ws: impl Iterator<Item = &'a MainWitness>) -> MainReport {
        let witnesses: Vec<WitnessReport> = ws.map(WitnessReport::from).collect();
        let status = if witnesses.is_empty() { Status::CriterionSatisfied } else { Status::CriterionViolated };
        MainReport { status, witnesses }
    }

    pub fn kashiwara_from_witnesses<'a>(ws: impl Iterator<Item = &'a KashiwaraWitness>) -> KashiwaraReport {
        let witnesses: Vec<KashiwaraEntry> = ws.map(KashiwaraEntry::from).collect();
        let status = if witnesses.is_empty() { Status::CriterionSatisfied } else { Status::CriterionViolated };
        KashiwaraReport { status, witnesses }
    }

    pub fn certified(&self) -> bool {
        self.main.status == Status::CriterionSatisfied
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let order = self.weyl_order.map(|n| format!(", |W| = {n}")).unwrap_or_default();
        let _ = writeln!(out, "type {}, {} factor(s){order}", self.lie_type, self.factors);
        let _ = writeln!(out, "main criterion: {}", status_word(self.main.status));
        for w in &self.main.witnesses {
            let word = if w.word.is_empty() { "identity".to_string() } else { format!("word {}", w.word) };
            let _ = writeln!(
                out,
                "  pair {} < {}, {word}, node {}: root {} against string (m={}, {}) hits q^{}",
                w.pair[0], w.pair[1], w.node, w.root, w.string_m, w.string_center, w.exponent
            );
        }
        if let Some(k) = &self.kashiwara {
            let _ = writeln!(out, "KR closed-form criterion: {}", status_word(k.status));
            for w in &k.witnesses {
                let _ = writeln!(
                    out,
                    "  pair {} < {}: a ratio q^{} <= bound {}",
                    w.pair[0], w.pair[1], w.exponent, w.bound
                );
            }
        }
        let verdict = if self.certified() {
            "cyclic: the tensor product of highest weight vectors generates"
        } else {
            "not certified: the sufficient criterion fails (no claim of reducibility)"
        };
        let _ = writeln!(out, "verdict: {verdict}");
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::CriterionSatisfied => "satisfied",
        Status::CriterionViolated => "violated",
    }
}
