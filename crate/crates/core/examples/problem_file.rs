//! Loads a TOML problem file, runs both criteria and prints the JSON report
//! that `qaffine check --json` emits.
//!
//!     cargo run --example problem_file -- problems/g2_tuples.toml

use qaffine::cyclicity::{check_main, kashiwara_violations};
use qaffine::problem::Problem;
use qaffine::report::CheckReport;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/problems/b3_kr.toml").into());
    let problem = Problem::parse(&std::fs::read_to_string(&path)?, None)?;
    let tensor = problem.tensor_problem();
    for (k, t) in tensor.factors().iter().enumerate() {
        println!("factor {}: {t}", k + 1);
    }
    let verdict = check_main(&tensor, problem.options.weyl_cap)?;
    let kashiwara = problem
        .kr_factors()
        .map(|krs| CheckReport::kashiwara_from_witnesses(kashiwara_violations(&problem.cartan, &krs).iter()));
    let report = CheckReport {
        lie_type: problem.cartan.lie_type().to_string(),
        factors: tensor.factors().len(),
        weyl_order: None,
        main: CheckReport::main_report(&verdict),
        kashiwara,
    };
    println!("{}", report.to_json());

    // field paths point at the offending entry
    let bad = "type = \"A2\"\n[[factors]]\nkind = \"tuple\"\ncomponents = [[{ root = \"a\", mult = -1 }], []]\n";
    println!("invalid file: {}", Problem::parse(bad, None).unwrap_err());
    Ok(())
}
