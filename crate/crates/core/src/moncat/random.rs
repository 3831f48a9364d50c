//! Seeded random objects, morphisms and conflations.
//!
//! Objects are `U diag(x^a_i) V` with `U`, `V` random unit matrices
//! (permutation times unipotent, polynomial entries of degree at most 2), so
//! validity holds by construction while the matrices are far from diagonal.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::linalg::{truncated_exponents, LocalMatrix};
use crate::moncat::exact::Conflation;
use crate::moncat::stable::stable_hom_space;
use crate::moncat::{MonMorphism, MonObject};
use crate::poly::Poly;
use crate::scalar::{LocalScalar, OmegaSpec};

fn small_coeff<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> i64 {
    match field {
        FieldSpec::Rationals => rng.gen_range(-2..=2),
        FieldSpec::PrimeField(p) => rng.gen_range(0..p as i64),
    }
}

/// A polynomial of degree at most `max_deg` with small coefficients.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, max_deg: usize) -> LocalScalar {
    let coeffs: Vec<i64> = (0..=max_deg).map(|_| small_coeff(rng, field)).collect();
    LocalScalar::from_poly(Poly::from_i64s(field, &coeffs))
}

/// A random element of `GL_m(S)`: a permutation times a unipotent
/// triangular matrix with entries of degree at most 1, with an occasional
/// diagonal unit `1 + c x`.
pub fn random_unit_matrix<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, m: usize) -> LocalMatrix {
    unit_matrix(rng, field, m, 1)
}

/// Same shape as [`random_unit_matrix`]; `deg = 0` gives an element of
/// `GL_m(k)`.
fn unit_matrix<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, m: usize, deg: usize) -> LocalMatrix {
    let mut perm: Vec<usize> = (0..m).collect();
    perm.shuffle(rng);
    let upper = rng.gen_bool(0.5);
    let mut t = LocalMatrix::identity(field, m);
    for i in 0..m {
        for j in 0..m {
            if (upper && i < j) || (!upper && i > j) {
                t.set(i, j, random_poly(rng, field, deg));
            }
        }
        if deg > 0 && rng.gen_bool(0.2) {
            // 1 + c x is a unit of S but not of k[x]
            let c = LocalScalar::from_poly(Poly::from_i64s(field, &[1, small_coeff(rng, field)]));
            t.set(i, i, c);
        }
    }
    let p = LocalMatrix::from_fn(field, m, m, |i, j| {
        if perm[i] == j {
            LocalScalar::one(field)
        } else {
            LocalScalar::zero(field)
        }
    });
    p.mul(&t).expect("square factors of equal size")
}

/// Random object of size exactly `m` with exponents drawn from `0..=n`.
pub fn random_object_of_size<R: Rng + ?Sized>(rng: &mut R, w: &OmegaSpec, m: usize) -> MonObject {
    let exps: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=w.n())).collect();
    random_object_with_exponents(rng, w, &exps)
}

/// Random object of size in `1..=size_bound` (empty when the bound is 0).
pub fn random_object<R: Rng + ?Sized>(rng: &mut R, w: &OmegaSpec, size_bound: usize) -> MonObject {
    let m = if size_bound == 0 {
        0
    } else {
        rng.gen_range(1..=size_bound)
    };
    random_object_of_size(rng, w, m)
}

/// `U diag(x^a) V` for the given exponents (each at most `n`).
pub fn random_object_with_exponents<R: Rng + ?Sized>(
    rng: &mut R,
    w: &OmegaSpec,
    exponents: &[u32],
) -> MonObject {
    let field = w.field();
    let m = exponents.len();
    let d = LocalMatrix::diag_x_powers(field, exponents);
    let u = random_unit_matrix(rng, field, m);
    let v = random_unit_matrix(rng, field, m);
    let f = u.mul(&d).and_then(|a| a.mul(&v)).expect("square factors");
    MonObject::new(f, w).expect("exponents bounded by n")
}

/// Random matrix with polynomial entries of degree `< deg`.
pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    field: FieldSpec,
    rows: usize,
    cols: usize,
    deg: usize,
) -> LocalMatrix {
    LocalMatrix::from_fn(field, rows, cols, |_, _| {
        if deg == 0 {
            LocalScalar::zero(field)
        } else {
            random_poly(rng, field, deg - 1)
        }
    })
}

/// Random morphism `X -> Y`: a random combination of a k-basis of morphisms
/// modulo omega, plus omega times a random matrix.
pub fn random_morphism<R: Rng + ?Sized>(
    rng: &mut R,
    x: &MonObject,
    y: &MonObject,
) -> Result<MonMorphism> {
    let field = x.field();
    let space = stable_hom_space(x, y)?;
    let mut psi0 = random_matrix(rng, field, y.size(), x.size(), 2).scale(x.omega().omega())?;
    for rep in space.morphism_representatives() {
        let c = LocalScalar::from_i64(field, small_coeff(rng, field));
        psi0 = psi0.add(&rep.scale(&c)?)?;
    }
    MonMorphism::from_psi0(x, y, psi0)
}

/// A conflation with the given end terms. The middle term is
/// `[[f_left, c], [0, f_right]]` for a random `c` (falling back to the split
/// extension `c = 0` when a few draws all leave the category), conjugated by
/// random invertible constant matrices.
pub fn random_conflation_between<R: Rng + ?Sized>(
    rng: &mut R,
    left: &MonObject,
    right: &MonObject,
) -> Result<Conflation> {
    let w = left.omega();
    let field = left.field();
    let (a, b) = (left.size(), right.size());
    let mut middle = None;
    for attempt in 0..4 {
        let c = if attempt == 3 {
            LocalMatrix::zeros(field, a, b)
        } else {
            random_matrix(rng, field, a, b, w.n() as usize)
        };
        let top = left.matrix().hstack(&c)?;
        let bottom = LocalMatrix::zeros(field, b, a).hstack(right.matrix())?;
        let m = top.vstack(&bottom)?;
        // cheap pre-check so rejected draws skip the exact error analysis
        if truncated_exponents(&m, w.n() as usize + 1).len() == a + b {
            middle = Some(MonObject::new(m, w)?);
            break;
        }
    }
    let block = middle.expect("the split extension is always valid");
    // constant conjugation keeps entry degrees down when conflations are chained
    let u = unit_matrix(rng, field, a + b, 0);
    let v = unit_matrix(rng, field, a + b, 0);
    let v_inv = v.invert()?;
    let mid = MonObject::new(u.mul(block.matrix())?.mul(&v)?, w)?;

    let incl = LocalMatrix::identity(field, a).vstack(&LocalMatrix::zeros(field, b, a))?;
    let proj = LocalMatrix::zeros(field, b, a).hstack(&LocalMatrix::identity(field, b))?;
    let inflation = MonMorphism::new(left, &mid, v_inv.mul(&incl)?, u.mul(&incl)?)?;
    let deflation = MonMorphism::new(&mid, right, proj.mul(&v)?, proj.mul(&u.invert()?)?)?;
    Conflation::new(inflation, deflation)
}

/// A conflation with random end terms of size at most `size_bound`.
pub fn random_conflation<R: Rng + ?Sized>(
    rng: &mut R,
    w: &OmegaSpec,
    size_bound: usize,
) -> Result<Conflation> {
    let left = random_object(rng, w, size_bound);
    let right = random_object(rng, w, size_bound);
    random_conflation_between(rng, &left, &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_data_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for field in [FieldSpec::Rationals, FieldSpec::prime(7).unwrap()] {
            let w = OmegaSpec::x_pow(field, 3).unwrap();
            for _ in 0..10 {
                let u = random_unit_matrix(&mut rng, field, 3);
                assert!(u.det().unwrap().is_unit());
                let c = random_conflation(&mut rng, &w, 2).unwrap();
                let (l, m, r) = c.lengths();
                assert_eq!(l + r, m);
                let m = random_morphism(&mut rng, &c.left, &c.middle).unwrap();
                m.verify().unwrap();
            }
        }
    }

    #[test]
    fn same_seed_same_objects() {
        let w = OmegaSpec::x_pow(FieldSpec::Rationals, 2).unwrap();
        let a = random_object(&mut ChaCha8Rng::seed_from_u64(5), &w, 3);
        let b = random_object(&mut ChaCha8Rng::seed_from_u64(5), &w, 3);
        assert_eq!(a, b);
    }
}
