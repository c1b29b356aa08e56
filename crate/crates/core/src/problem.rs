//! TOML problem files.
//!
//! ```toml
//! type = "B3"
//! symbols = ["a", "b"]
//!
//! [options]          # all optional
//! weyl_cap = 100000
//! kappa = 0          # ω-twist shift
//! cshift = 0         # dual shift
//!
//! [[factors]]
//! kind = "kr"
//! node = 1           # Bourbaki label, 1-based
//! m = 2
//! a = "a*q^-1"
//!
//! [[factors]]
//! kind = "tuple"     # one list per node
//! components = [[{ root = "b", mult = 2 }], [], []]
//! ```

use std::collections::BTreeSet;

use serde::Deserialize;
use thiserror::Error;

use crate::cartan::{build_cartan, CartanData, LieType};
use crate::cyclicity::{kr_tuple, KrFactor, TensorProblem};
use crate::qpoly::{HTuple, RootMultiset, SpectralParam, Symbol};
use crate::weyl::DEFAULT_WEYL_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ProblemError {
    ProblemError::Field { field: field.into(), message: message.into() }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(rename = "type")]
    lie_type: String,
    #[serde(default)]
    symbols: Vec<String>,
    #[serde(default)]
    factors: Vec<RawFactor>,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    weyl_cap: Option<usize>,
    kappa: Option<i32>,
    cshift: Option<i32>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawFactor {
    Kr { node: i64, m: i64, a: String },
    Tuple { components: Vec<Vec<RawRoot>> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRoot {
    root: String,
    #[serde(default = "one")]
    mult: i64,
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub weyl_cap: usize,
    pub kappa: Option<i32>,
    pub cshift: Option<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Kr(KrFactor),
    Tuple(HTuple),
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub cartan: CartanData,
    pub symbols: Vec<Symbol>,
    pub factors: Vec<Factor>,
    pub options: Options,
}

impl Problem {
    /// Parses and validates a problem; `type_override` replaces the file's type.
    pub fn parse(text: &str, type_override: Option<LieType>) -> Result<Problem, ProblemError> {
        let raw: RawProblem = toml::from_str(text).map_err(|e| ProblemError::Syntax(e.to_string()))?;
        let lie_type = match type_override {
            Some(t) => t,
            None => raw.lie_type.parse().map_err(|e| field_err("type", format!("{e}")))?,
        };
        let cartan = build_cartan(lie_type);

        let mut symbols = Vec::new();
        for (k, name) in raw.symbols.iter().enumerate() {
            let s = Symbol::new(name).map_err(|e| field_err(format!("symbols[{k}]"), e.to_string()))?;
            if symbols.contains(&s) {
                return Err(field_err(format!("symbols[{k}]"), format!("duplicate symbol `{name}`")));
            }
            symbols.push(s);
        }
        let declared: BTreeSet<&Symbol> = symbols.iter().collect();
        let param = |field: String, text: &str| -> Result<SpectralParam, ProblemError> {
            let p: SpectralParam = text.parse().map_err(|e| field_err(&field, format!("{e}")))?;
            if let Some(s) = p.base().symbols().find(|s| !declared.contains(s)) {
                return Err(field_err(field, format!("undeclared symbol `{s}`")));
            }
            Ok(p)
        };

        let rank = cartan.rank();
        let mut factors = Vec::with_capacity(raw.factors.len());
        for (k, f) in raw.factors.iter().enumerate() {
            let factor = match f {
                RawFactor::Kr { node, m, a } => {
                    if *node < 1 || *node as usize > rank {
                        return Err(field_err(
                            format!("factors[{k}].node"),
                            format!("node {node} outside 1..={rank} for {lie_type}"),
                        ));
                    }
                    if *m < 1 || *m > u32::MAX as i64 {
                        return Err(field_err(format!("factors[{k}].m"), "m must be a positive integer"));
                    }
                    let a = param(format!("factors[{k}].a"), a)?;
                    Factor::Kr(KrFactor::new(*node as usize - 1, *m as u32, a))
                }
                RawFactor::Tuple { components } => {
                    if components.len() != rank {
                        return Err(field_err(
                            format!("factors[{k}].components"),
                            format!("expected {rank} node lists for {lie_type}, found {}", components.len()),
                        ));
                    }
                    let mut parts = Vec::with_capacity(rank);
                    for (i, roots) in components.iter().enumerate() {
                        let mut ms = RootMultiset::new();
                        for (r, root) in roots.iter().enumerate() {
                            let field = format!("factors[{k}].components[{i}][{r}]");
                            if root.mult < 1 {
                                return Err(field_err(
                                    format!("{field}.mult"),
                                    format!("multiplicity must be positive, got {}", root.mult),
                                ));
                            }
                            ms.insert(param(format!("{field}.root"), &root.root)?, root.mult);
                        }
                        parts.push(ms);
                    }
                    Factor::Tuple(HTuple::from_components(parts))
                }
            };
            factors.push(factor);
        }
        if let Some(0) = raw.options.weyl_cap {
            return Err(field_err("options.weyl_cap", "cap must be positive"));
        }
        let options = Options {
            weyl_cap: raw.options.weyl_cap.unwrap_or(DEFAULT_WEYL_CAP),
            kappa: raw.options.kappa,
            cshift: raw.options.cshift,
        };
        Ok(Problem { cartan, symbols, factors, options })
    }

    /// The factors as KR data, if every factor is given in KR form.
    pub fn kr_factors(&self) -> Option<Vec<KrFactor>> {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Kr(k) => Some(k.clone()),
                Factor::Tuple(_) => None,
            })
            .collect()
    }

    pub fn tuples(&self) -> Vec<HTuple> {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Kr(k) => kr_tuple(&self.cartan, k),
                Factor::Tuple(t) => t.clone(),
            })
            .collect()
    }

    pub fn tensor_problem(&self) -> TensorProblem {
        TensorProblem::new(self.cartan.clone(), self.tuples())
            .expect("validated factors are dominant and of the right rank")
    }
}
