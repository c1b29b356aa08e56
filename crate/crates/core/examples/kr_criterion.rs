//! The closed-form criterion for Kirillov-Reshetikhin factors and the
//! irreducibility certificate for factors sharing one parameter.
//!
//!     cargo run --example kr_criterion

use qaffine::cartan::build_cartan;
use qaffine::cyclicity::{certify_irreducible, check_kashiwara, check_main, KrFactor, TensorProblem};
use qaffine::weyl::DEFAULT_WEYL_CAP;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = build_cartan("G2".parse()?);
    let factors = [
        KrFactor::new(1, 1, "a*q^8".parse()?),
        KrFactor::new(0, 2, "a*q^2".parse()?),
        KrFactor::new(0, 1, "a".parse()?),
    ];
    let closed_form = check_kashiwara(&c, &factors);
    let main = check_main(&TensorProblem::from_kr(c.clone(), &factors), DEFAULT_WEYL_CAP)?;
    println!("G2 closed form: {:?}", closed_form.witness().map_or("satisfied".into(), |w| format!("{w:?}")));
    println!("G2 Weyl-orbit criterion satisfied: {}", main.is_satisfied());

    // same parameter everywhere: order by d_i m to get a cyclic product
    let same = [
        KrFactor::new(1, 2, "a".parse()?),
        KrFactor::new(0, 1, "a".parse()?),
        KrFactor::new(0, 3, "a".parse()?),
    ];
    let cert = certify_irreducible(&c, &same)?;
    println!("certificate order (original indices): {:?}", cert.order);
    for m in &cert.margins {
        println!("  sorted pair ({}, {}): bound {}, margin {}", m.left + 1, m.right + 1, m.bound, m.margin);
    }
    println!("  {}", cert.reversed_leg);
    Ok(())
}
