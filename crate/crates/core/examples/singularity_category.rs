//! Modules over R = S/(x^n): the cokernel functor, its agreement on stable
//! Hom dimensions, the closed-form table and preimages of modules.
//!
//! ```bash
//! cargo run --example singularity_category
//! ```

use stablemon::singcat::{
    check_t_full_faithful, closed_form_verified, density_preimage, functor_t,
    rmod_stable_hom_dimension, rmod_syzygy, SyzygyDirection,
};
use stablemon::{FieldSpec, MonObject, OmegaSpec, RModuleObject, Result};

fn main() -> Result<()> {
    let n = 5;
    let w = OmegaSpec::x_pow(FieldSpec::Rationals, n)?;
    println!("closed form checked against the oracle: {}", closed_form_verified());

    print!("stable Hom table for n = {n}:\n    ");
    for b in 1..n {
        print!("{b:>3}");
    }
    println!();
    for a in 1..n {
        print!("{a:>3} ");
        for b in 1..n {
            let d = rmod_stable_hom_dimension(&RModuleObject::new(n, vec![a])?, &RModuleObject::new(n, vec![b])?)?;
            print!("{d:>3}");
        }
        println!();
    }

    let m = RModuleObject::new(n, vec![1, 2, 5])?;
    println!("M = {:?}, stable part {:?}", m.exponents, m.stable_part().exponents);
    println!("syzygy {:?}", rmod_syzygy(&m, SyzygyDirection::Omega).exponents);
    let x = density_preimage(&m, &w)?;
    println!("preimage {} maps back: {}", x.matrix(), functor_t(&x) == m);

    let y = MonObject::from_exponents(&[2, 3], &w)?;
    println!("{:?}", check_t_full_faithful(&x, &y)?);
    Ok(())
}
