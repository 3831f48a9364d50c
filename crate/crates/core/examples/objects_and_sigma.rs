//! Objects of the monomorphism category: validation, the partner matrix
//! f_sigma with f f_sigma = f_sigma f = omega I, and cokernel exponents.
//!
//! ```bash
//! cargo run --example objects_and_sigma
//! ```

use stablemon::text::parse_matrix;
use stablemon::{FieldSpec, MonObject, OmegaSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let w = OmegaSpec::x_pow(q, 3)?;
    let x = MonObject::new(parse_matrix(q, "[[x, 1], [0, x^2]]")?, &w)?;
    println!("f       = {}", x.matrix());
    println!("f_sigma = {}", x.sigma());
    println!("exponents {:?}", x.exponents());
    println!("(f_sigma)_sigma = {}", x.sigma_object().sigma());

    // omega need not be monic
    let w2 = OmegaSpec::new(stablemon::text::parse_scalar(q, "x^2 + x^3")?)?;
    let y = MonObject::new(parse_matrix(q, "[[x]]")?, &w2)?;
    println!("over omega = {w2}: sigma of [[x]] is {}", y.sigma());

    // rejected inputs
    for (text, n) in [("[[x, -1], [0, x]]", 1), ("[[x, x], [x, x]]", 2), ("[[x^4]]", 3)] {
        let err = MonObject::new(parse_matrix(q, text)?, &OmegaSpec::x_pow(q, n)?).unwrap_err();
        println!("{text} with omega = x^{n}: {err}");
    }
    Ok(())
}
