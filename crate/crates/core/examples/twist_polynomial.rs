//! Reads off `(T_w h)_i` as a non-negative combination of shifted
//! components of `h`, for every ascent `i` of every `w`.
//!
//!     cargo run --example twist_polynomial -- G2

use qaffine::braid::twist_polynomial;
use qaffine::cartan::{build_cartan, LieType};
use qaffine::report::format_word;
use qaffine::weyl::{enumerate, DEFAULT_WEYL_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: LieType = std::env::args().nth(1).unwrap_or_else(|| "G2".into()).parse()?;
    let c = build_cartan(t);
    let g = enumerate(&c, DEFAULT_WEYL_CAP)?;
    for w in g.ids() {
        for i in g.ascents(w).iter() {
            let p = twist_polynomial(&c, &g, w, i)?;
            let terms: Vec<String> = p
                .iter()
                .map(|(&(j, r), &n)| {
                    let coeff = if n == 1 { String::new() } else { format!("{n}·") };
                    format!("{coeff}h{}(q^{r} u)", j + 1)
                })
                .collect();
            println!("(T_[{}] h)_{} = {}", format_word(&g.word(w)), i + 1, terms.join(" + "));
        }
    }
    Ok(())
}
