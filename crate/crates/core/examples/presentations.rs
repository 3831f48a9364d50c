//! Enough projectives and injectives: presentations with middle terms built
//! from (1) and (omega), and the projectivity test.
//!
//! ```bash
//! cargo run --example presentations
//! ```

use stablemon::moncat::{injective_presentation, is_projective_object, projective_presentation};
use stablemon::text::parse_matrix;
use stablemon::{FieldSpec, MonObject, OmegaSpec, Result};

fn main() -> Result<()> {
    let q = FieldSpec::Rationals;
    let w = OmegaSpec::x_pow(q, 3)?;
    let x = MonObject::new(parse_matrix(q, "[[x, 1], [0, x]]")?, &w)?;

    let p = projective_presentation(&x)?;
    println!("projective presentation  Omega X = {} >-> {:?} ->> X", p.left.matrix(), p.middle.exponents());
    let i = injective_presentation(&x)?;
    println!("injective presentation   X >-> {:?} ->> {} = Omega^-1 X", i.middle.exponents(), i.right.matrix());

    for text in ["[[1]]", "[[x^3]]", "[[x]]", "[[1, 0], [0, x^3]]", "[[x, 1], [0, x^2]]"] {
        let y = MonObject::new(parse_matrix(q, text)?, &w)?;
        println!("{text:>20}  exponents {:?}  projective {}", y.exponents(), is_projective_object(&y)?);
    }
    Ok(())
}
