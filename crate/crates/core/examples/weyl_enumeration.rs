//! Enumerates a Weyl group and lists the reduced words of a few elements.
//!
//!     cargo run --example weyl_enumeration -- B3

use qaffine::cartan::{build_cartan, LieType};
use qaffine::report::format_word;
use qaffine::weyl::{enumerate, positive_roots, DEFAULT_WEYL_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: LieType = std::env::args().nth(1).unwrap_or_else(|| "B3".into()).parse()?;
    let c = build_cartan(t);
    let g = enumerate(&c, DEFAULT_WEYL_CAP)?;
    let w0 = g.longest();
    println!("{t}: |W| = {}, positive roots = {}, l(w0) = {}", g.order(), positive_roots(&c).len(), g.length(w0));

    let by_length = g.ids().fold(vec![0usize; g.length(w0) as usize + 1], |mut acc, w| {
        acc[g.length(w) as usize] += 1;
        acc
    });
    println!("elements by length: {by_length:?}");

    for w in g.ids().step_by((g.order() / 5).max(1)).chain([w0]) {
        let e = g.element(w);
        let rw = g.all_reduced_words(w, 8);
        let ascents: Vec<usize> = e.ascents.iter().map(|i| i + 1).collect();
        println!("w = [{}], length {}, ascents {ascents:?}", format_word(&e.word), e.length);
        for word in &rw.words {
            println!("    {}", if word.is_empty() { "e".into() } else { format_word(word) });
        }
        if rw.truncated {
            println!("    ...");
        }
    }
    Ok(())
}
