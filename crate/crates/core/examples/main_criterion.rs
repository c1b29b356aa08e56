//! The Weyl-orbit cyclicity criterion on a few tensor products, including
//! one that fails in one order and holds in the other.
//!
//!     cargo run --example main_criterion

use qaffine::cartan::build_cartan;
use qaffine::cyclicity::{check_main, main_violations, KrFactor, TensorProblem, Verdict};
use qaffine::report::format_word;
use qaffine::weyl::{enumerate, DEFAULT_WEYL_CAP};

fn describe(p: &TensorProblem) -> Result<(), Box<dyn std::error::Error>> {
    match check_main(p, DEFAULT_WEYL_CAP)? {
        Verdict::CriterionSatisfied => println!("  satisfied: the product is cyclic on the tensor of highest weight vectors"),
        Verdict::CriterionViolated(w) => {
            assert!(w.recheck());
            println!(
                "  violated at pair ({}, {}), w = [{}], node {}: root {} vs string {} (q^{})",
                w.left + 1,
                w.right + 1,
                format_word(&w.word),
                w.node + 1,
                w.root,
                w.string,
                w.exponent
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a1 = build_cartan("A1".parse()?);
    let adjacent = TensorProblem::from_kr(a1, &[KrFactor::new(0, 1, "a".parse()?), KrFactor::new(0, 1, "a*q^2".parse()?)]);
    println!("A1: V(a) (x) V(a q^2)");
    describe(&adjacent)?;
    println!("A1: V(a q^2) (x) V(a)");
    describe(&adjacent.reversed())?;

    let b3 = build_cartan("B3".parse()?);
    let factors = [
        KrFactor::new(2, 2, "a*q^-6".parse()?),
        KrFactor::new(1, 1, "a".parse()?),
        KrFactor::new(0, 3, "a*q^9".parse()?),
    ];
    let p = TensorProblem::from_kr(b3.clone(), &factors);
    println!("B3: three KR factors, increasing parameters");
    describe(&p)?;
    let g = enumerate(&b3, DEFAULT_WEYL_CAP)?;
    println!("  {} violations in total", main_violations(&p, &g)?.len());
    println!("B3: same factors reversed");
    describe(&p.reversed())?;
    Ok(())
}
