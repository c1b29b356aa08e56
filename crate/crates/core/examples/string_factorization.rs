//! Unique factorization of a root multiset into q-strings in general
//! position.
//!
//!     cargo run --example string_factorization -- "{a*q^2, a, a, a*q^-2}" 1

use qaffine::qpoly::{factorize, in_special_position, QString, RootMultiset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let ms: RootMultiset = args.next().unwrap_or_else(|| "{a*q^2, a, a, a*q^-2, b*q, b*q^-1}".into()).parse()?;
    let d: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let f = factorize(&ms, d)?;
    println!("{ms} with step q^{d}");
    println!("  = {f}");
    for s in f.strings() {
        println!("  {s}: roots {}", s.expand());
    }
    assert_eq!(f.expand(), ms);

    // the two strings that merge into {a q^2, a, a q^-2} + {a}
    let x = QString::new(2, "a*q".parse()?, 1);
    let y = QString::new(2, "a*q^-1".parse()?, 1);
    println!("{x} and {y} in special position: {}", in_special_position(&x, &y));
    Ok(())
}
