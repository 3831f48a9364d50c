//! Conflations, pushouts, pullbacks and splittings, followed by a short run
//! of the randomized exact-structure checks.
//!
//! ```bash
//! cargo run --release --example exact_structure
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablemon::moncat::random::random_conflation;
use stablemon::moncat::{axioms, find_retraction, kernel_of_deflation, pullback_deflation, pushout_inflation};
use stablemon::{FieldSpec, MonMorphism, OmegaSpec, Result};

fn main() -> Result<()> {
    let w = OmegaSpec::x_pow(FieldSpec::Rationals, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = random_conflation(&mut rng, &w, 2)?;
    println!("left   {} exponents {:?}", c.left.matrix(), c.left.exponents());
    println!("middle {} exponents {:?}", c.middle.matrix(), c.middle.exponents());
    println!("right  {} exponents {:?}", c.right.matrix(), c.right.exponents());
    println!("lengths {:?}", c.lengths());

    let (k, _) = kernel_of_deflation(&c.deflation)?;
    println!("kernel of the deflation has exponents {:?}", k.exponents());

    let po = pushout_inflation(&c.inflation, &MonMorphism::omega_identity(&c.left))?;
    let split = find_retraction(&po.from_other)?.is_some();
    println!("pushout along omega * id splits: {split}");

    let pb = pullback_deflation(&c.deflation, &MonMorphism::identity(&c.right))?;
    println!("pullback along id has size {}", pb.object.size());

    let report = axioms::axiom_suite(1, 25, &w, 2);
    println!(
        "axiom suite: {} trials, {} checks, {} violations",
        report.trials,
        report.checks,
        report.violations.len()
    );
    Ok(())
}
