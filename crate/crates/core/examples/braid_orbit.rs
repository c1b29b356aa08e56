//! The braid group action on tuples and the orbit of a tuple under the
//! Weyl group.
//!
//!     cargo run --example braid_orbit -- B2

use qaffine::braid::{apply_word, orbit};
use qaffine::cartan::{build_cartan, LieType};
use qaffine::qpoly::{HTuple, RootMultiset};
use qaffine::report::format_word;
use qaffine::weyl::{enumerate, DEFAULT_WEYL_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: LieType = std::env::args().nth(1).unwrap_or_else(|| "A2".into()).parse()?;
    let c = build_cartan(t);
    let g = enumerate(&c, DEFAULT_WEYL_CAP)?;

    let mut components = vec![RootMultiset::new(); c.rank()];
    components[0] = "{a}".parse()?;
    let h = HTuple::from_components(components);

    for (w, image) in orbit(&c, &g, &h).iter() {
        let ascents: Vec<usize> = g.ascents(w).iter().map(|i| i + 1).collect();
        println!("{:>2} [{:<11}] ascents {ascents:?}  {image}", g.length(w), format_word(&g.word(w)));
    }

    // T_w depends only on w, not on the reduced word
    let words = g.all_reduced_words(g.longest(), 4).words;
    for word in &words {
        println!("w0 via [{}]: {}", format_word(word), apply_word(&c, word, &h));
    }
    Ok(())
}
