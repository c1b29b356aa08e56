//! Command-line front end. [`run`] never exits the process; it returns the
//! exit code and captured output so the binary stays a thin shim.
//!
//! Exit codes: `0` criterion satisfied (or command succeeded), `1` criterion
//! violated, `2` input, configuration or cap error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::braid::{apply_word, orbit};
use crate::cartan::{build_cartan, LieType};
use crate::cyclicity::{check_main_in, kashiwara_violations, main_violations, Verdict};
use crate::problem::Problem;
use crate::qpoly::{factorize, RootMultiset};
use crate::report::{format_word, CheckReport};
use crate::weyl::{enumerate, DEFAULT_WEYL_CAP};

#[derive(Debug, Parser)]
#[command(name = "qaffine", version, about = "Cyclicity criteria for tensor products of quantum affine modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide the cyclicity criterion for the tensor product in a problem file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Skip the closed-form KR criterion.
        #[arg(long)]
        pairs_only: bool,
        /// Report every violation instead of the first.
        #[arg(long)]
        witness_all: bool,
    },
    /// Print T_w of the single factor in a problem file.
    BraidOrbit {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
        /// Space-separated 1-based node labels, e.g. "2 1".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Print the whole orbit, one row per group element.
        #[arg(long, conflicts_with = "word")]
        full: bool,
    },
    /// Factor a multiset such as "{a*q, a*q^-1}" into q^d-strings.
    Factorize {
        component: String,
        #[arg(short, long, default_value_t = 1)]
        d: u32,
    },
    /// Weyl group utilities.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
}

#[derive(Debug, Subcommand)]
enum WeylCommand {
    /// Print |W|, the length of w0 and the number of generators.
    Info {
        #[arg(value_name = "TYPE")]
        lie_type: LieType,
        #[arg(long)]
        weyl_cap: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Override the type named in the file.
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: Option<LieType>,
    /// Maximum Weyl group size to enumerate.
    #[arg(long)]
    weyl_cap: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match cli.command {
        Command::Check { file, common, json, pairs_only, witness_all } => {
            check(&file, &common, json, pairs_only, witness_all)
        }
        Command::BraidOrbit { file, common, word, full } => braid_orbit(&file, &common, &word, full),
        Command::Factorize { component, d } => factorize_cmd(&component, d),
        Command::Weyl { command: WeylCommand::Info { lie_type, weyl_cap } } => weyl_info(lie_type, weyl_cap),
    }
}

fn load(file: &PathBuf, common: &CommonArgs) -> Result<Problem, Outcome> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Outcome::error(format!("cannot read {}: {e}", file.display())))?;
    let mut problem = Problem::parse(&text, common.lie_type)
        .map_err(|e| Outcome::error(format!("{}: {e}", file.display())))?;
    if let Some(cap) = common.weyl_cap {
        problem.options.weyl_cap = cap;
    }
    Ok(problem)
}

fn check(file: &PathBuf, common: &CommonArgs, json: bool, pairs_only: bool, witness_all: bool) -> Outcome {
    let problem = match load(file, common) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let tensor = problem.tensor_problem();
    let (main, weyl_order) = if tensor.factors().len() < 2 {
        (CheckReport::main_report(&Verdict::CriterionSatisfied), None)
    } else {
        let group = match enumerate(&problem.cartan, problem.options.weyl_cap) {
            Ok(g) => g,
            Err(e) => return Outcome::error(e),
        };
        let main = if witness_all {
            main_violations(&tensor, &group).map(|ws| CheckReport::main_from_witnesses(ws.iter()))
        } else {
            check_main_in(&tensor, &group).map(|v| CheckReport::main_report(&v))
        };
        match main {
            Ok(m) => (m, Some(group.order())),
            Err(e) => return Outcome::error(e),
        }
    };
    let kashiwara = match (pairs_only, problem.kr_factors()) {
        (false, Some(krs)) => {
            let mut ws = kashiwara_violations(&problem.cartan, &krs);
            if !witness_all {
                ws.truncate(1);
            }
            Some(CheckReport::kashiwara_from_witnesses(ws.iter()))
        }
        _ => None,
    };
    let report = CheckReport {
        lie_type: problem.cartan.lie_type().to_string(),
        factors: tensor.factors().len(),
        weyl_order,
        main,
        kashiwara,
    };
    let stdout = if json { report.to_json() + "\n" } else { report.render() };
    Outcome { code: if report.certified() { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>, String> {
    text.split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(format!("bad node `{tok}` in word (expected 1..={rank})")),
        })
        .collect()
}

fn braid_orbit(file: &PathBuf, common: &CommonArgs, word: &str, full: bool) -> Outcome {
    let problem = match load(file, common) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let tuples = problem.tuples();
    if tuples.len() != 1 {
        return Outcome::error(format!("braid-orbit needs exactly one factor, found {}", tuples.len()));
    }
    let c = &problem.cartan;
    let h = &tuples[0];
    if !full {
        return match parse_word(word, c.rank()) {
            Ok(w) => Outcome::ok(format!("{}\n", apply_word(c, &w, h))),
            Err(e) => Outcome::error(e),
        };
    }
    let group = match enumerate(c, problem.options.weyl_cap) {
        Ok(g) => g,
        Err(e) => return Outcome::error(e),
    };
    let o = orbit(c, &group, h);
    let mut out = String::from("length\tword\ttuple\n");
    for (w, t) in o.iter() {
        out.push_str(&format!("{}\t{}\t{}\n", group.length(w), format_word(&group.word(w)), t));
    }
    Outcome::ok(out)
}

fn factorize_cmd(component: &str, d: u32) -> Outcome {
    let ms: RootMultiset = match component.parse() {
        Ok(m) => m,
        Err(e) => return Outcome::error(e),
    };
    match factorize(&ms, d) {
        Ok(f) => Outcome::ok(format!("{f}\n")),
        Err(e) => Outcome::error(e),
    }
}

fn weyl_info(t: LieType, cap: Option<usize>) -> Outcome {
    let c = build_cartan(t);
    match enumerate(&c, cap.unwrap_or(DEFAULT_WEYL_CAP)) {
        Ok(g) => Outcome::ok(format!(
            "type {t}\n|W| = {}\nl(w0) = {}\ngenerators = {}\n",
            g.order(),
            g.length(g.longest()),
            g.rank()
        )),
        Err(e) => Outcome::error(e),
    }
}
