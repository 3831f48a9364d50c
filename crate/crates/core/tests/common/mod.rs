#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablemon::moncat::random::random_object;
use stablemon::{FieldSpec, MonObject, OmegaSpec};

pub fn f7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The twelve desk-scale settings: `omega = x^n`, `n <= 6`, over Q and F7.
pub fn settings() -> Vec<OmegaSpec> {
    [FieldSpec::Rationals, f7()]
        .into_iter()
        .flat_map(|f| (1..=6).map(move |n| OmegaSpec::x_pow(f, n).unwrap()))
        .collect()
}

/// Seeded corpus cycling through [`settings`].
pub fn corpus(seed: u64, count: usize, size_bound: usize) -> Vec<MonObject> {
    let ws = settings();
    let mut r = rng(seed);
    (0..count)
        .map(|i| random_object(&mut r, &ws[i % ws.len()], size_bound))
        .collect()
}

/// Seeded pairs `(X, Y)` over a common omega.
pub fn pairs(seed: u64, count: usize, size_bound: usize) -> Vec<(MonObject, MonObject)> {
    let ws = settings();
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let w = &ws[i % ws.len()];
            (random_object(&mut r, w, size_bound), random_object(&mut r, w, size_bound))
        })
        .collect()
}
