//! The dominance test `left > right` in both formulations.
//!
//!     cargo run --example dominance

use qaffine::qpoly::{dominates, dominates_by_strings, Dominance, RootMultiset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("{a}", "{a*q^2}", 1),
        ("{a*q^2}", "{a}", 1),
        ("{a*q^-3}", "{a*q^-1, a*q}", 1),
        ("{a*q^-6}", "{a}", 2),
        ("{a}", "{b}", 1),
    ];
    for (left, right, d) in cases {
        let l: RootMultiset = left.parse()?;
        let r: RootMultiset = right.parse()?;
        let by_strings = dominates_by_strings(&l, &r, d)?;
        match dominates(&l, &r, d)? {
            Dominance::Holds => println!("{l} > {r} (d={d}): holds"),
            Dominance::Fails(w) => println!(
                "{l} > {r} (d={d}): fails, root {} against {} hits q^{}",
                w.root, w.string, w.exponent
            ),
        }
        assert_eq!(by_strings, dominates(&l, &r, d)?.holds());
    }
    Ok(())
}
