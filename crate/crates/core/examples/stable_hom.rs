//! Null-homotopies with explicit witnesses and stable Hom spaces with a
//! basis of representatives.
//!
//! ```bash
//! cargo run --example stable_hom
//! ```

use stablemon::moncat::{is_null_homotopic, stable_hom_space};
use stablemon::{FieldSpec, MonMorphism, MonObject, OmegaSpec, Result};

fn main() -> Result<()> {
    let w = OmegaSpec::x_pow(FieldSpec::Rationals, 5)?;
    let x2 = MonObject::from_exponents(&[2], &w)?;
    let x3 = MonObject::from_exponents(&[3], &w)?;

    let id = MonMorphism::identity(&x2);
    println!("id of (x^2) null-homotopic: {}", is_null_homotopic(&id)?.is_some());
    let wid = MonMorphism::omega_identity(&x2);
    if let Some(h) = is_null_homotopic(&wid)? {
        println!("omega * id: s0 = {}, s1 = {}, certified {}", h.s0, h.s1, h.certifies(&wid)?);
    }

    for (name, a, b) in [("x^2 -> x^2", &x2, &x2), ("x^2 -> x^3", &x2, &x3), ("x^3 -> x^2", &x3, &x2)] {
        let space = stable_hom_space(a, b)?;
        let reps: Vec<String> = space.stable_representatives().iter().map(ToString::to_string).collect();
        println!(
            "Hom({name}): {} morphisms mod omega, {} null, stable dimension {}, basis {reps:?}",
            space.morphism_dimension(),
            space.null_dimension(),
            space.dimension()
        );
    }
    Ok(())
}
