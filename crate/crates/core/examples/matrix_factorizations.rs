//! Matrix factorizations of omega: the comparison functor from monomorphisms,
//! contractibility and Krull-Schmidt decomposition.
//!
//! ```bash
//! cargo run --example matrix_factorizations
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablemon::moncat::random::random_object_with_exponents;
use stablemon::paircat::{
    functor_f, functor_f_inverse, pair_decompose, pair_is_contractible, pair_make,
    pair_stable_hom_dimension,
};
use stablemon::text::parse_matrix;
use stablemon::{FieldSpec, OmegaSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let w = OmegaSpec::x_pow(q, 4)?;

    let p = pair_make(parse_matrix(q, "[[x, 1], [0, x^3]]")?, parse_matrix(q, "[[x^3, -1], [0, x]]")?, &w)?;
    println!("({}, {}) decomposes as {:?}", p.rho1(), p.rho0(), pair_decompose(&p));
    println!("contractible: {}", pair_is_contractible(&p)?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = random_object_with_exponents(&mut rng, &w, &[1, 3, 2, 4]);
    let fx = functor_f(&x);
    println!("F X = ({}, {})", fx.rho1(), fx.rho0());
    println!("decomposition {:?}", pair_decompose(&fx));
    println!("F^-1 F X = X: {}", functor_f_inverse(&fx) == x);
    println!("dim stable End(F X) = {}", pair_stable_hom_dimension(&fx, &fx)?);

    let bad = pair_make(parse_matrix(q, "[[x]]")?, parse_matrix(q, "[[x^2]]")?, &w).unwrap_err();
    println!("([[x]], [[x^2]]): {bad}");
    Ok(())
}
