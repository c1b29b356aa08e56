//! Cartan matrices, symmetrizers and the bar involution for every type up
//! to rank 4.
//!
//!     cargo run --example cartan_tables

use qaffine::cartan::{bar_automorphism, build_cartan, LieType};

fn main() {
    for t in LieType::all_up_to_rank(4) {
        let c = build_cartan(t);
        println!("{t}: d = {:?}, bar = {:?}", c.symmetrizers(), bar_automorphism(t));
        for row in c.matrix() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            println!("  {}", cells.join(""));
        }
    }
}
