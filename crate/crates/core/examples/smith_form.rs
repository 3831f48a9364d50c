//! Smith normal form over the discrete valuation ring and the exact solvers
//! built on it.
//!
//! ```bash
//! cargo run --example smith_form
//! ```

use stablemon::linalg::{cokernel_exponents, kernel_basis, snf, solve_linear, solve_mod_omega};
use stablemon::text::parse_matrix;
use stablemon::{FieldSpec, OmegaSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let a = parse_matrix(q, "[[x, 1 + x], [x^3, (x^2)/(1+x)]]")?;
    let s = snf(&a)?;
    println!("A = {a}");
    println!("U A V = {}", s.d);
    println!("invariant factors x^{:?}", s.exponents);
    assert_eq!(s.u.mul(&a)?.mul(&s.v)?, s.d);

    let w = OmegaSpec::x_pow(q, 4)?;
    println!("cokernel exponents {:?}", cokernel_exponents(&a, &w)?);

    let b = parse_matrix(q, "[[x], [x^3]]")?;
    match solve_linear(&a, &b)? {
        Some(x) => println!("A X = B has the solution X = {x}"),
        None => println!("A X = B has no solution over S"),
    }
    if let Some((x, k)) = solve_mod_omega(&a, &parse_matrix(q, "[[1], [0]]")?, &w)? {
        println!("A X = e1 mod x^4: X = {x}, cofactor {k}");
    }

    let wide = parse_matrix(q, "[[1, x, x^2]]")?;
    println!("kernel of {wide}: {}", kernel_basis(&wide)?);
    Ok(())
}
