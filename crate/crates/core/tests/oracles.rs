//! Brute-force stable Hom over F2 and F3 by enumerating all matrices modulo
//! omega, compared with the linear-algebra computation.

mod common;

use std::collections::HashSet;

use common::rng;
use stablemon::linalg::solve_mod_omega;
use stablemon::moncat::random::{random_matrix, random_object};
use stablemon::moncat::stable_hom_dimension;
use stablemon::paircat::{
    functor_f, functor_f_inverse, pair_cone, pair_make, pair_shift, pair_stable_hom_dimension,
    PairMorphism,
};
use stablemon::text::parse_matrix;
use stablemon::{FieldSpec, LocalMatrix, LocalScalar, MonObject, OmegaSpec};

/// All `rows x cols` matrices with entries of degree `< deg` over F_p.
fn all_matrices(field: FieldSpec, p: u64, rows: usize, cols: usize, deg: usize) -> Vec<LocalMatrix> {
    let slots = rows * cols * deg;
    let total = p.pow(slots as u32);
    (0..total)
        .map(|mut code| {
            let mut digits = Vec::with_capacity(slots);
            for _ in 0..slots {
                digits.push((code % p) as i64);
                code /= p;
            }
            LocalMatrix::from_fn(field, rows, cols, |i, j| {
                let base = (i * cols + j) * deg;
                (0..deg).fold(LocalScalar::zero(field), |acc, k| {
                    let term = LocalScalar::from_i64(field, digits[base + k])
                        .mul(&LocalScalar::x_pow(field, k))
                        .unwrap();
                    acc.add(&term).unwrap()
                })
            })
        })
        .collect()
}

type Key = Vec<Vec<stablemon::field::Coeff>>;

fn key(m: &LocalMatrix, n: u32) -> Key {
    m.entries().iter().map(|e| e.truncated_coeffs(n as usize)).collect()
}

/// One representative per class modulo omega.
fn distinct(ms: impl Iterator<Item = LocalMatrix>, n: u32) -> Vec<LocalMatrix> {
    let mut seen = HashSet::new();
    ms.filter(|m| seen.insert(key(m, n))).collect()
}

fn log_p(count: usize, p: u64) -> usize {
    let mut k = 0;
    let mut c = 1usize;
    while c < count {
        c *= p as usize;
        k += 1;
    }
    assert_eq!(c, count, "{count} is not a power of {p}");
    k
}

/// `dim Hom(X, Y) - dim Null(X, Y)`, counting `psi0` modulo omega.
/// `psi0` is a morphism iff `f'^-1 psi0 f` is integral, i.e.
/// `g' psi0 f = 0 (mod omega)`; it is null iff `psi0 = f' s0 + s1 g`.
fn brute_dimension(x: &MonObject, y: &MonObject, p: u64, null_degree: usize) -> usize {
    let w = x.omega();
    let n = w.n();
    let field = x.field();
    let (f, g) = (x.matrix(), x.sigma());
    let (ft, gt) = (y.matrix(), y.sigma());
    let (a, b) = (x.size(), y.size());
    let all = all_matrices(field, p, b, a, n as usize);
    let morphisms = all
        .iter()
        .filter(|psi0| {
            let t = gt.mul(psi0).unwrap().mul(f).unwrap();
            t.entries().iter().all(|e| e.valuation().is_none_or(|v| v >= n))
        })
        .count();
    let left = distinct(all_matrices(field, p, b, a, null_degree).iter().map(|s| ft.mul(s).unwrap()), n);
    let right = distinct(all_matrices(field, p, b, a, null_degree).iter().map(|s| s.mul(g).unwrap()), n);
    let mut null = HashSet::new();
    for l in &left {
        for r in &right {
            null.insert(key(&l.add(r).unwrap(), n));
        }
    }
    log_p(morphisms, p) - log_p(null.len(), p)
}

fn check(p: u64, n: u32, size_bound: usize, trials: usize, seed: u64) {
    let field = FieldSpec::prime(p).unwrap();
    let w = OmegaSpec::x_pow(field, n).unwrap();
    let mut r = rng(seed);
    for t in 0..trials {
        let x = random_object(&mut r, &w, size_bound);
        let y = random_object(&mut r, &w, size_bound);
        let brute = brute_dimension(&x, &y, p, n as usize);
        let computed = stable_hom_dimension(&x, &y).unwrap();
        assert_eq!(brute, computed, "F{p} n={n} trial {t}: {x:?} -> {y:?}");
        let pair = pair_stable_hom_dimension(&functor_f(&x), &functor_f(&y)).unwrap();
        assert_eq!(pair, computed, "F{p} n={n} trial {t}: pair side");
    }
}

#[test]
fn brute_force_f2() {
    for n in 1..=3 {
        check(2, n, 2, 8, u64::from(n));
    }
}

#[test]
fn brute_force_f3() {
    for n in 1..=3 {
        check(3, n, 1, 8, 10 + u64::from(n));
    }
    check(3, 1, 2, 6, 20);
}

/// Homotopies of degree `< n` already reach every null `psi0` modulo omega.
#[test]
fn homotopy_degree_bound() {
    for (p, n, size_bound) in [(2u64, 2u32, 2usize), (3, 2, 1), (2, 3, 1)] {
        let field = FieldSpec::prime(p).unwrap();
        let w = OmegaSpec::x_pow(field, n).unwrap();
        let mut r = rng(30 + u64::from(n));
        for _ in 0..4 {
            let x = random_object(&mut r, &w, size_bound);
            let y = random_object(&mut r, &w, size_bound);
            assert_eq!(
                brute_dimension(&x, &y, p, n as usize),
                brute_dimension(&x, &y, p, n as usize + 1)
            );
        }
    }
}

#[test]
fn mod_omega_solver_against_enumeration() {
    let field = FieldSpec::prime(2).unwrap();
    let mut r = rng(50);
    for n in 1..=3u32 {
        let w = OmegaSpec::x_pow(field, n).unwrap();
        for rows in 1..=2 {
            for cols in 1..=2 {
                for _ in 0..6 {
                    let a = random_matrix(&mut r, field, rows, cols, 3);
                    let b = random_matrix(&mut r, field, rows, 1, 3);
                    let target = key(&b, n);
                    let brute = all_matrices(field, 2, cols, 1, n as usize)
                        .iter()
                        .any(|x| key(&a.mul(x).unwrap(), n) == target);
                    let fast = solve_mod_omega(&a, &b, &w).unwrap();
                    assert_eq!(brute, fast.is_some(), "A = {a}, B = {b}, n = {n}");
                }
            }
        }
    }
}

/// Cone of multiplication by x on `(x, x)` over `x^2`, compared with the
/// enumeration rather than with a predicted answer.
#[test]
fn cone_of_multiplication_by_x() {
    let field = FieldSpec::prime(2).unwrap();
    let w = OmegaSpec::x_pow(field, 2).unwrap();
    let p = pair_make(parse_matrix(field, "[[x]]").unwrap(), parse_matrix(field, "[[x]]").unwrap(), &w).unwrap();
    let x = parse_matrix(field, "[[x]]").unwrap();
    let m = PairMorphism::new(&p, &p, x.clone(), x).unwrap();
    let c = pair_cone(&m).unwrap();
    let d = p.direct_sum(&pair_shift(&p)).unwrap();
    let (mc, md) = (functor_f_inverse(&c), functor_f_inverse(&d));
    for (s, t) in [(&mc, &mc), (&mc, &md), (&md, &mc), (&md, &md)] {
        let brute = brute_dimension(s, t, 2, 2);
        let computed = stable_hom_dimension(s, t).unwrap();
        assert_eq!(brute, computed);
    }
    assert_eq!(
        pair_stable_hom_dimension(&c, &c).unwrap(),
        pair_stable_hom_dimension(&d, &d).unwrap()
    );
}
