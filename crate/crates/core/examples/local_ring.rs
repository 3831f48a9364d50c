//! Arithmetic in k[x] localized at (x): fractions with unit denominators,
//! valuations and unit parts, over Q and F7.
//!
//! ```bash
//! cargo run --example local_ring
//! ```

use stablemon::text::parse_scalar;
use stablemon::{FieldSpec, Result};

fn main() -> Result<()> {
    for field in [FieldSpec::Rationals, FieldSpec::prime(7)?] {
        let a = parse_scalar(field, "(x^2 + x^3)/(1 - x)")?;
        let b = parse_scalar(field, "2 + x")?;
        println!("over {field}");
        println!("  a = {a}, valuation {:?}", a.valuation());
        println!("  b = {b}, unit: {}", b.is_unit());
        println!("  a / b = {}", a.div(&b)?);
        let (u, k) = a.unit_part().expect("nonzero");
        println!("  a = ({u}) * x^{k}");
        println!("  a mod x^4 = {:?}", a.truncated_coeffs(4).iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    // dividing by a non-unit leaves S
    let field = FieldSpec::Rationals;
    let err = parse_scalar(field, "1")?.div(&parse_scalar(field, "x")?).unwrap_err();
    println!("1 / x: {err}");
    Ok(())
}
