//! The ω twist and the dual, with the type-dependent shifts passed in
//! explicitly.
//!
//!     cargo run --example twists

use qaffine::cartan::{bar_automorphism, build_cartan};
use qaffine::cyclicity::{dual_transform, omega_twist};
use qaffine::qpoly::HTuple;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for t in ["A3", "D5", "E6", "B3"] {
        let c = build_cartan(t.parse()?);
        let mut components = vec![Default::default(); c.rank()];
        components[0] = "{a*q^-1, a*q}".parse()?;
        components[1] = "{b}".parse()?;
        let h = HTuple::from_components(components);
        println!("{t}: bar = {:?}", bar_automorphism(c.lie_type()));
        println!("  h           = {h}");
        println!("  omega (k=2) = {}", omega_twist(&c, &h, 2));
        println!("  dual  (c=3) = {}", dual_transform(&c, &h, 3));
        // bar is an involution, so dualizing twice is a plain shift
        let shifted = HTuple::from_components(h.components().map(|x| x.shift(6)).collect());
        assert_eq!(dual_transform(&c, &dual_transform(&c, &h, 3), 3), shifted);
    }
    Ok(())
}
