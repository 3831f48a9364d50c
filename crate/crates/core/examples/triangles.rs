//! The shift and standard triangles in the stable category.
//!
//! ```bash
//! cargo run --example triangles
//! ```

use stablemon::moncat::{cone, is_projective_object, shift, stable_hom_dimension};
use stablemon::{FieldSpec, MonMorphism, MonObject, OmegaSpec, Result};

fn main() -> Result<()> {
    let w = OmegaSpec::x_pow(FieldSpec::Rationals, 4)?;
    let x = MonObject::from_exponents(&[1, 2], &w)?;
    let y = MonObject::from_exponents(&[3], &w)?;

    let sx = shift(&x);
    println!("shift X = {}, exponents {:?}", sx.matrix(), sx.exponents());
    println!("shift shift X = X: {}", shift(&sx) == x);

    let c = cone(&MonMorphism::identity(&x))?;
    println!("cone(id_X) = {} is projective: {}", c.object.matrix(), is_projective_object(&c.object)?);

    let c0 = cone(&MonMorphism::zero(&x, &y))?.object;
    let d = y.direct_sum(&sx)?;
    println!(
        "cone(0: X -> Y) vs Y + shift X: dim End {} and {}, dim Hom between {} and {}",
        stable_hom_dimension(&c0, &c0)?,
        stable_hom_dimension(&d, &d)?,
        stable_hom_dimension(&c0, &d)?,
        stable_hom_dimension(&d, &c0)?,
    );
    Ok(())
}
