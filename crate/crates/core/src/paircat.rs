//! Matrix factorizations `(rho1, rho0)` of omega, their homotopy category and
//! the comparison functor `F` from the monomorphism category.
//!
//! `F` sends `(P --f--> Q)` to `(f, f_sigma)` and leaves morphisms alone; its
//! inverse forgets `rho0`, which is recovered as the partner of `rho1`.

use crate::error::{Error, Result};
use crate::linalg::{solve_mod_omega, truncated_exponents, LocalMatrix};
use crate::moncat::{self, MonMorphism, MonObject, StableHomSpace};
use crate::scalar::OmegaSpec;

/// A matrix factorization: `rho1 rho0 = rho0 rho1 = omega I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairObject {
    rho1: LocalMatrix,
    rho0: LocalMatrix,
    omega: OmegaSpec,
}

impl PairObject {
    pub fn new(rho1: LocalMatrix, rho0: LocalMatrix, omega: &OmegaSpec) -> Result<Self> {
        for m in [&rho1, &rho0] {
            if !m.is_square() {
                return Err(Error::NotSquare {
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.field() != omega.field() {
                return Err(Error::FieldMismatch);
            }
        }
        if rho1.rows() != rho0.rows() {
            return Err(Error::DimensionMismatch(format!(
                "rho1 is {0}x{0} but rho0 is {1}x{1}",
                rho1.rows(),
                rho0.rows()
            )));
        }
        let w = LocalMatrix::scalar_identity(omega.omega(), rho1.rows());
        for residual in [rho1.mul(&rho0)?.sub(&w)?, rho0.mul(&rho1)?.sub(&w)?] {
            if !residual.is_zero() {
                return Err(Error::ProductNotOmega {
                    residual: residual.to_string(),
                });
            }
        }
        Ok(PairObject {
            rho1,
            rho0,
            omega: omega.clone(),
        })
    }

    pub fn rho1(&self) -> &LocalMatrix {
        &self.rho1
    }

    pub fn rho0(&self) -> &LocalMatrix {
        &self.rho0
    }

    pub fn omega(&self) -> &OmegaSpec {
        &self.omega
    }

    pub fn size(&self) -> usize {
        self.rho1.rows()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        check_same_omega(self, other)?;
        Ok(PairObject {
            rho1: self.rho1.direct_sum(&other.rho1),
            rho0: self.rho0.direct_sum(&other.rho0),
            omega: self.omega.clone(),
        })
    }
}

/// Validates a pair; see [`PairObject::new`].
pub fn pair_make(rho1: LocalMatrix, rho0: LocalMatrix, w: &OmegaSpec) -> Result<PairObject> {
    PairObject::new(rho1, rho0, w)
}

fn check_same_omega(a: &PairObject, b: &PairObject) -> Result<()> {
    if a.omega != b.omega {
        Err(Error::OmegaMismatch)
    } else {
        Ok(())
    }
}

/// `(psi1, psi0): (rho1, rho0) -> (q1, q0)` with `q1 psi1 = psi0 rho1` and
/// `psi1 rho0 = q0 psi0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMorphism {
    source: PairObject,
    target: PairObject,
    psi1: LocalMatrix,
    psi0: LocalMatrix,
}

impl PairMorphism {
    pub fn new(
        source: &PairObject,
        target: &PairObject,
        psi1: LocalMatrix,
        psi0: LocalMatrix,
    ) -> Result<Self> {
        check_same_omega(source, target)?;
        let (m, mt) = (source.size(), target.size());
        for (name, psi) in [("psi1", &psi1), ("psi0", &psi0)] {
            if psi.rows() != mt || psi.cols() != m {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {mt}x{m}",
                    psi.rows(),
                    psi.cols()
                )));
            }
        }
        let first = target.rho1.mul(&psi1)?.sub(&psi0.mul(&source.rho1)?)?;
        let second = psi1.mul(&source.rho0)?.sub(&target.rho0.mul(&psi0)?)?;
        for residual in [first, second] {
            if !residual.is_zero() {
                return Err(Error::PairSquareNotCommuting {
                    residual: residual.to_string(),
                });
            }
        }
        Ok(PairMorphism {
            source: source.clone(),
            target: target.clone(),
            psi1,
            psi0,
        })
    }

    pub fn identity(p: &PairObject) -> Self {
        let id = LocalMatrix::identity(p.omega.field(), p.size());
        PairMorphism {
            source: p.clone(),
            target: p.clone(),
            psi1: id.clone(),
            psi0: id,
        }
    }

    pub fn zero(source: &PairObject, target: &PairObject) -> Self {
        let z = LocalMatrix::zeros(source.omega.field(), target.size(), source.size());
        PairMorphism {
            source: source.clone(),
            target: target.clone(),
            psi1: z.clone(),
            psi0: z,
        }
    }

    pub fn source(&self) -> &PairObject {
        &self.source
    }

    pub fn target(&self) -> &PairObject {
        &self.target
    }

    pub fn psi1(&self) -> &LocalMatrix {
        &self.psi1
    }

    pub fn psi0(&self) -> &LocalMatrix {
        &self.psi0
    }

    pub fn scale(&self, s: &crate::scalar::LocalScalar) -> Result<Self> {
        Ok(PairMorphism {
            psi1: self.psi1.scale(s)?,
            psi0: self.psi0.scale(s)?,
            ..self.clone()
        })
    }

    pub fn then(&self, other: &PairMorphism) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::DimensionMismatch(
                "composable pair morphisms need matching objects".into(),
            ));
        }
        Ok(PairMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            psi1: other.psi1.mul(&self.psi1)?,
            psi0: other.psi0.mul(&self.psi0)?,
        })
    }
}

/// Null-homotopy for pairs: `psi0 = q1 s0 + s1 rho0`, `psi1 = s0 rho1 + q0 s1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHomotopyWitness {
    pub s0: LocalMatrix,
    pub s1: LocalMatrix,
}

impl PairHomotopyWitness {
    pub fn certifies(&self, m: &PairMorphism) -> Result<bool> {
        let (p, q) = (&m.source, &m.target);
        let psi0 = q.rho1.mul(&self.s0)?.add(&self.s1.mul(&p.rho0)?)?;
        let psi1 = self.s0.mul(&p.rho1)?.add(&q.rho0.mul(&self.s1)?)?;
        Ok(psi0 == m.psi0 && psi1 == m.psi1)
    }
}

/// `F(f) = (f, f_sigma)`.
pub fn functor_f(x: &MonObject) -> PairObject {
    PairObject {
        rho1: x.matrix().clone(),
        rho0: x.sigma().clone(),
        omega: x.omega().clone(),
    }
}

/// `F` on morphisms: the matrices are unchanged; the second pair equation
/// follows from the first because `rho1` of the target is injective.
pub fn functor_f_morphism(m: &MonMorphism) -> PairMorphism {
    PairMorphism {
        source: functor_f(m.source()),
        target: functor_f(m.target()),
        psi1: m.psi1().clone(),
        psi0: m.psi0().clone(),
    }
}

/// Drops `rho0`. Always valid: `rho1` is injective because `rho1 rho0` is,
/// and `omega` kills its cokernel because `omega Q = rho1 rho0 Q`.
pub fn functor_f_inverse(p: &PairObject) -> MonObject {
    MonObject::with_sigma(p.rho1.clone(), p.rho0.clone(), &p.omega)
}

pub fn functor_f_inverse_morphism(m: &PairMorphism) -> MonMorphism {
    MonMorphism::new(
        &functor_f_inverse(&m.source),
        &functor_f_inverse(&m.target),
        m.psi1.clone(),
        m.psi0.clone(),
    )
    .expect("the first pair equation is the commuting square")
}

/// Decides null-homotopy by solving the two witness equations at once.
///
/// With column-major vectorization the unknown `(vec s0, vec s1)` satisfies
///
/// ```text
/// [ I kron q1       rho0^T kron I ] [vec s0]   [vec psi0]
/// [ rho1^T kron I   I kron q0     ] [vec s1] = [vec psi1]
/// ```
///
/// The system is solved modulo omega. That loses nothing: if `(s0, s1)`
/// leaves residuals `omega (E0, E1)`, then `(E1, E0)` is itself a morphism
/// and `(s0 + q0 E0, s1)` solves the system exactly.
pub fn pair_is_null_homotopic(m: &PairMorphism) -> Result<Option<PairHomotopyWitness>> {
    let (p, q) = (&m.source, &m.target);
    let field = p.omega.field();
    let (a, b) = (p.size(), q.size());
    let id_src = LocalMatrix::identity(field, a);
    let id_tgt = LocalMatrix::identity(field, b);
    let top = id_src
        .kron(&q.rho1)?
        .hstack(&p.rho0.transpose().kron(&id_tgt)?)?;
    let bottom = p
        .rho1
        .transpose()
        .kron(&id_tgt)?
        .hstack(&id_src.kron(&q.rho0)?)?;
    let system = top.vstack(&bottom)?;
    let rhs = m.psi0.vectorize().vstack(&m.psi1.vectorize())?;
    let Some((sol, residual)) = solve_mod_omega(&system, &rhs, &p.omega)? else {
        return Ok(None);
    };
    let k = a * b;
    let s0 = LocalMatrix::unvectorize(&sol.submatrix(0..k, 0..1), b, a);
    let s1 = LocalMatrix::unvectorize(&sol.submatrix(k..2 * k, 0..1), b, a);
    let e0 = LocalMatrix::unvectorize(&residual.submatrix(0..k, 0..1), b, a);
    let s0 = s0.add(&q.rho0.mul(&e0)?)?;
    Ok(Some(PairHomotopyWitness { s0, s1 }))
}

/// True iff the identity of `p` is null-homotopic.
pub fn pair_is_contractible(p: &PairObject) -> Result<bool> {
    Ok(pair_is_null_homotopic(&PairMorphism::identity(p))?.is_some())
}

/// `(rho1, rho0) |-> (-rho0, -rho1)`.
pub fn pair_shift(p: &PairObject) -> PairObject {
    PairObject {
        rho1: p.rho0.neg(),
        rho0: p.rho1.neg(),
        omega: p.omega.clone(),
    }
}

pub fn pair_shift_morphism(m: &PairMorphism) -> PairMorphism {
    PairMorphism {
        source: pair_shift(&m.source),
        target: pair_shift(&m.target),
        psi1: m.psi0.clone(),
        psi0: m.psi1.clone(),
    }
}

/// Cone by transport: `F(cone(F^-1 m))`.
pub fn pair_cone(m: &PairMorphism) -> Result<PairObject> {
    let c = moncat::cone(&functor_f_inverse_morphism(m))?;
    Ok(functor_f(&c.object))
}

/// Exponents `a_i` with `(rho1, rho0) = sum (x^a_i, unit x^(n - a_i))` up to
/// isomorphism, ascending. `0` and `n` mark contractible summands.
pub fn pair_decompose(p: &PairObject) -> Vec<u32> {
    // every exponent is at most n, so they are all visible modulo x^(n+1)
    truncated_exponents(&p.rho1, p.omega.n() as usize + 1)
}

/// Stable Hom dimension between pairs, from degree `< n` representatives.
pub fn pair_stable_hom_dimension(p: &PairObject, q: &PairObject) -> Result<usize> {
    Ok(pair_stable_hom_space(p, q)?.dimension())
}

pub fn pair_stable_hom_space(p: &PairObject, q: &PairObject) -> Result<StableHomSpace> {
    check_same_omega(p, q)?;
    StableHomSpace::compute((&q.rho1, &q.rho0), (&p.rho1, &p.rho0), p.omega.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::scalar::LocalScalar;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    fn m(rows: &[Vec<&[i64]>]) -> LocalMatrix {
        LocalMatrix::from_int_polys(Q, rows)
    }

    fn pair(r1: &[i64], r0: &[i64], n: u32) -> PairObject {
        pair_make(m(&[vec![r1]]), m(&[vec![r0]]), &w(n)).unwrap()
    }

    #[test]
    fn make_examples() {
        pair(&[0, 1], &[0, 1], 2);
        pair(&[1], &[0, 0, 1], 2);
        assert!(matches!(
            pair_make(m(&[vec![&[0, 1]]]), m(&[vec![&[0, 1]]]), &w(3)),
            Err(Error::ProductNotOmega { .. })
        ));
    }

    #[test]
    fn functor_examples() {
        let one = MonObject::new(m(&[vec![&[1]]]), &w(2)).unwrap();
        assert_eq!(functor_f(&one), pair(&[1], &[0, 0, 1], 2));
        let om = MonObject::new(m(&[vec![&[0, 0, 1]]]), &w(2)).unwrap();
        assert_eq!(functor_f(&om), pair(&[0, 0, 1], &[1], 2));
        let x = MonObject::new(m(&[vec![&[0, 1]]]), &w(2)).unwrap();
        assert_eq!(functor_f(&x), pair(&[0, 1], &[0, 1], 2));
        assert_eq!(functor_f_inverse(&functor_f(&x)), x);
    }

    #[test]
    fn null_homotopy_examples() {
        let p = pair(&[0, 1], &[0, 1], 2);
        let omega_id = PairMorphism::identity(&p)
            .scale(&LocalScalar::x_pow(Q, 2))
            .unwrap();
        let wit = pair_is_null_homotopic(&omega_id).unwrap().unwrap();
        assert!(wit.certifies(&omega_id).unwrap());
        let x2 = pair(&[1], &[0, 0, 1], 2);
        let id = PairMorphism::identity(&x2);
        assert!(pair_is_null_homotopic(&id).unwrap().unwrap().certifies(&id).unwrap());
        assert!(pair_is_null_homotopic(&PairMorphism::identity(&p))
            .unwrap()
            .is_none());
        assert!(pair_is_contractible(&pair(&[1], &[0, 0, 1], 2)).unwrap());
    }

    #[test]
    fn shift_examples() {
        let p = pair(&[0, 1], &[0, 1], 2);
        assert_eq!(pair_shift(&p), pair(&[0, -1], &[0, -1], 2));
        assert_eq!(pair_shift(&pair_shift(&p)), p);
        let x = MonObject::new(m(&[vec![&[0, 1]]]), &w(2)).unwrap();
        assert_eq!(functor_f(&moncat::shift(&x)), pair_shift(&functor_f(&x)));
    }

    #[test]
    fn decompose_examples() {
        let d = MonObject::from_exponents(&[1, 2], &w(3)).unwrap();
        assert_eq!(pair_decompose(&functor_f(&d)), vec![1, 2]);
        let h = MonObject::new(m(&[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]), &w(3)).unwrap();
        assert_eq!(pair_decompose(&functor_f(&h)), vec![0, 3]);
        let p = MonObject::standard_projective(2, 1, &w(3));
        assert_eq!(pair_decompose(&functor_f(&p)), vec![0, 0, 3]);
    }

    #[test]
    fn stable_hom_examples() {
        let p = pair(&[0, 1], &[0, 1], 2);
        assert_eq!(pair_stable_hom_dimension(&p, &p).unwrap(), 1);
        let c = pair(&[1], &[0, 0, 1], 2);
        assert_eq!(pair_stable_hom_dimension(&p, &c).unwrap(), 0);
        let a = pair(&[0, 1], &[0, 0, 1], 3);
        let b = pair(&[0, 0, 1], &[0, 1], 3);
        assert_eq!(pair_stable_hom_dimension(&a, &b).unwrap(), 1);
        assert_eq!(
            pair_stable_hom_dimension(&p, &a),
            Err(Error::OmegaMismatch)
        );
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let p = pair(&[0, 1], &[0, 0, 1], 3);
        let c = pair_cone(&PairMorphism::identity(&p)).unwrap();
        assert!(pair_is_contractible(&c).unwrap());
    }
}
