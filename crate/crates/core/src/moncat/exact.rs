//! The exact structure: conflations, kernels of deflations, cokernels of
//! inflations, pushouts and pullbacks. Everything is computed componentwise
//! on the two rows `P' -> P -> P''` and `Q' -> Q -> Q''`.

use crate::error::{Error, Result};
use crate::linalg::{
    is_split_injective, is_surjective, kernel_basis, solve_linear, split_cokernel, LocalMatrix,
};
use crate::moncat::{MonMorphism, MonObject};

/// An admissible short exact sequence `left >-> middle ->> right`.
#[derive(Clone, Debug)]
pub struct Conflation {
    pub left: MonObject,
    pub middle: MonObject,
    pub right: MonObject,
    pub inflation: MonMorphism,
    pub deflation: MonMorphism,
}

impl Conflation {
    /// Checks both component rows for exactness.
    pub fn new(inflation: MonMorphism, deflation: MonMorphism) -> Result<Self> {
        if inflation.target().matrix() != deflation.source().matrix() {
            return Err(Error::NotConflation("maps are not composable".into()));
        }
        let comp = inflation.then(&deflation)?;
        if !comp.is_zero() {
            return Err(Error::NotConflation("deflation . inflation != 0".into()));
        }
        let (a, b, c) = (
            inflation.source().size(),
            inflation.target().size(),
            deflation.target().size(),
        );
        if a + c != b {
            return Err(Error::NotConflation(format!("ranks {a} + {c} != {b}")));
        }
        for (name, i, d) in [
            ("first", inflation.psi1(), deflation.psi1()),
            ("second", inflation.psi0(), deflation.psi0()),
        ] {
            if !is_split_injective(i)? {
                return Err(Error::NotConflation(format!(
                    "{name} component of the inflation is not split injective"
                )));
            }
            if !is_surjective(d)? {
                return Err(Error::NotConflation(format!(
                    "{name} component of the deflation is not surjective"
                )));
            }
        }
        Ok(Conflation {
            left: inflation.source().clone(),
            middle: inflation.target().clone(),
            right: deflation.target().clone(),
            inflation,
            deflation,
        })
    }

    /// Total length of the cokernels is additive along a conflation.
    pub fn lengths(&self) -> (u32, u32, u32) {
        let len = |x: &MonObject| x.exponents().iter().sum::<u32>();
        (len(&self.left), len(&self.middle), len(&self.right))
    }
}

/// Cokernel of an inflation, with the projection onto it.
///
/// The morphism must be componentwise split injective and its cokernel
/// (computed in the morphism category) must be a valid object.
pub fn cokernel_of_inflation(phi: &MonMorphism) -> Result<(MonObject, MonMorphism)> {
    let y = phi.target();
    let mut parts = Vec::with_capacity(2);
    for (name, comp) in [("first", phi.psi1()), ("second", phi.psi0())] {
        if !is_split_injective(comp)? {
            return Err(Error::NotInflation(format!(
                "{name} component is not split injective"
            )));
        }
        parts.push(split_cokernel(comp)?.expect("split injective"));
    }
    let (c1, r1) = parts.remove(0);
    let (c0, _) = parts.remove(0);
    let l = c0.mul(y.matrix())?.mul(&r1)?;
    let coker = MonObject::new(l, y.omega())
        .map_err(|e| Error::NotInflation(format!("cokernel is not an object: {e}")))?;
    let proj = MonMorphism::new(y, &coker, c1, c0)?;
    Ok((coker, proj))
}

/// Kernel of a deflation, with its inclusion. Both components must be
/// surjective; the kernel is then always an object again.
pub fn kernel_of_deflation(d: &MonMorphism) -> Result<(MonObject, MonMorphism)> {
    let x = d.source();
    for (name, comp) in [("first", d.psi1()), ("second", d.psi0())] {
        if !is_surjective(comp)? {
            return Err(Error::NotDeflation(format!("{name} component is not surjective")));
        }
    }
    let k1 = kernel_basis(d.psi1())?;
    let k0 = kernel_basis(d.psi0())?;
    let rhs = x.matrix().mul(&k1)?;
    let l = solve_linear(&k0, &rhs)?
        .ok_or_else(|| Error::NotDeflation("f does not map ker into ker".into()))?;
    let kernel = MonObject::new(l, x.omega())
        .map_err(|e| Error::NotDeflation(format!("kernel is not an object: {e}")))?;
    let incl = MonMorphism::new(&kernel, x, k1, k0)?;
    Ok((kernel, incl))
}

/// Completes an inflation to a conflation.
pub fn conflation_of_inflation(phi: &MonMorphism) -> Result<Conflation> {
    let (_, proj) = cokernel_of_inflation(phi)?;
    Conflation::new(phi.clone(), proj)
}

/// Completes a deflation to a conflation.
pub fn conflation_of_deflation(d: &MonMorphism) -> Result<Conflation> {
    let (_, incl) = kernel_of_deflation(d)?;
    Conflation::new(incl, d.clone())
}

/// Result of a pushout `Y <-phi- X -theta-> Z`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: MonObject,
    /// `Y -> E`
    pub from_target: MonMorphism,
    /// `Z -> E`, again an inflation
    pub from_other: MonMorphism,
    cokernel_projections: [LocalMatrix; 2],
    right_inverses: [LocalMatrix; 2],
}

impl Pushout {
    /// Given a cokernel map `beta: Y -> L` of `phi`, returns the induced
    /// deflation `E -> L` of the pushed-out conflation.
    pub fn induced_deflation(&self, beta: &MonMorphism) -> Result<MonMorphism> {
        let mz = self.from_other.source().size();
        let f = self.object.field();
        let comp = |b: &LocalMatrix, r: &LocalMatrix| -> Result<LocalMatrix> {
            b.hstack(&LocalMatrix::zeros(f, b.rows(), mz))?.mul(r)
        };
        let psi1 = comp(beta.psi1(), &self.right_inverses[0])?;
        let psi0 = comp(beta.psi0(), &self.right_inverses[1])?;
        MonMorphism::new(&self.object, beta.target(), psi1, psi0)
    }

    /// The projection `Y + Z -> E` in component `i` (0: first, 1: second).
    pub fn projection(&self, i: usize) -> &LocalMatrix {
        &self.cokernel_projections[i]
    }
}

/// Pushout of an inflation `phi: X -> Y` along an arbitrary `theta: X -> Z`,
/// computed as `E = Coker [phi; -theta]` componentwise.
pub fn pushout_inflation(phi: &MonMorphism, theta: &MonMorphism) -> Result<Pushout> {
    if phi.source().matrix() != theta.source().matrix() {
        return Err(Error::DimensionMismatch("pushout: sources differ".into()));
    }
    // Checks admissibility of phi (componentwise split, valid cokernel).
    cokernel_of_inflation(phi)?;
    let (y, z) = (phi.target(), theta.target());
    let my = y.size();
    let mut cs = Vec::with_capacity(2);
    let mut rs = Vec::with_capacity(2);
    for (p, t) in [(phi.psi1(), theta.psi1()), (phi.psi0(), theta.psi0())] {
        let stacked = p.vstack(&t.neg())?;
        let (c, r) = split_cokernel(&stacked)?
            .ok_or_else(|| Error::NotInflation("pushout cokernel has torsion".into()))?;
        cs.push(c);
        rs.push(r);
    }
    let yz = y.matrix().direct_sum(z.matrix());
    let e = cs[1].mul(&yz)?.mul(&rs[0])?;
    let object = MonObject::new(e, y.omega())?;
    let split = |c: &LocalMatrix| {
        (
            c.submatrix(0..c.rows(), 0..my),
            c.submatrix(0..c.rows(), my..c.cols()),
        )
    };
    let (a1, b1) = split(&cs[0]);
    let (a0, b0) = split(&cs[1]);
    let from_target = MonMorphism::new(y, &object, a1, a0)?;
    let from_other = MonMorphism::new(z, &object, b1, b0)?;
    let c0 = cs.pop().unwrap();
    let c1 = cs.pop().unwrap();
    let r0 = rs.pop().unwrap();
    let r1 = rs.pop().unwrap();
    Ok(Pushout {
        object,
        from_target,
        from_other,
        cokernel_projections: [c1, c0],
        right_inverses: [r1, r0],
    })
}

/// Result of a pullback `Y -phi-> Z <-theta- W`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: MonObject,
    /// `E -> Y`
    pub to_source: MonMorphism,
    /// `E -> W`, again a deflation
    pub to_other: MonMorphism,
}

/// Pullback of a deflation `phi: Y -> Z` along `theta: W -> Z`, computed as
/// `E = ker [phi, -theta]` componentwise.
pub fn pullback_deflation(phi: &MonMorphism, theta: &MonMorphism) -> Result<Pullback> {
    if phi.target().matrix() != theta.target().matrix() {
        return Err(Error::DimensionMismatch("pullback: targets differ".into()));
    }
    for (name, comp) in [("first", phi.psi1()), ("second", phi.psi0())] {
        if !is_surjective(comp)? {
            return Err(Error::NotDeflation(format!("{name} component is not surjective")));
        }
    }
    let (y, w) = (phi.source(), theta.source());
    let my = y.size();
    let k1 = kernel_basis(&phi.psi1().hstack(&theta.psi1().neg())?)?;
    let k0 = kernel_basis(&phi.psi0().hstack(&theta.psi0().neg())?)?;
    let rhs = y.matrix().direct_sum(w.matrix()).mul(&k1)?;
    let e = solve_linear(&k0, &rhs)?
        .ok_or_else(|| Error::NotDeflation("pullback matrix does not exist".into()))?;
    let object = MonObject::new(e, y.omega())?;
    let top = |k: &LocalMatrix| k.submatrix(0..my, 0..k.cols());
    let bottom = |k: &LocalMatrix| k.submatrix(my..k.rows(), 0..k.cols());
    let to_source = MonMorphism::new(&object, y, top(&k1), top(&k0))?;
    let to_other = MonMorphism::new(&object, w, bottom(&k1), bottom(&k0))?;
    Ok(Pullback {
        object,
        to_source,
        to_other,
    })
}

/// Searches for `r: E -> Z` with `r . j = id_Z`, i.e. a splitting of the
/// inflation `j: Z -> E`. Solved as one linear system in the entries of
/// `(r1, r0)`:
///
/// `r1 j1 = I`, `r0 j0 = I`, `r0 e - h r1 = 0`.
pub fn find_retraction(j: &MonMorphism) -> Result<Option<MonMorphism>> {
    let (z, e) = (j.source(), j.target());
    let f = z.field();
    let (mz, me) = (z.size(), e.size());
    let iz = LocalMatrix::identity(f, mz);
    let ie = LocalMatrix::identity(f, me);
    let n = mz * me;
    let zero = LocalMatrix::zeros(f, mz * mz, n);
    let row1 = j.psi1().transpose().kron(&iz)?.hstack(&zero)?;
    let row2 = zero.hstack(&j.psi0().transpose().kron(&iz)?)?;
    let row3 = ie
        .kron(z.matrix())?
        .neg()
        .hstack(&e.matrix().transpose().kron(&iz)?)?;
    let a = row1.vstack(&row2)?.vstack(&row3)?;
    let id_vec = iz.vectorize();
    let b = id_vec
        .vstack(&id_vec)?
        .vstack(&LocalMatrix::zeros(f, n, 1))?;
    let Some(sol) = solve_linear(&a, &b)? else {
        return Ok(None);
    };
    let r1 = LocalMatrix::unvectorize(&sol.submatrix(0..n, 0..1), mz, me);
    let r0 = LocalMatrix::unvectorize(&sol.submatrix(n..2 * n, 0..1), mz, me);
    Ok(Some(MonMorphism::new(e, z, r1, r0)?))
}

/// Searches for `s: Z -> E` with `d . s = id_Z` for a deflation `d: E -> Z`.
pub fn find_section(d: &MonMorphism) -> Result<Option<MonMorphism>> {
    let (e, z) = (d.source(), d.target());
    let f = z.field();
    let (mz, me) = (z.size(), e.size());
    let iz = LocalMatrix::identity(f, mz);
    let n = me * mz;
    let zero = LocalMatrix::zeros(f, mz * mz, n);
    // d1 s1 = I, d0 s0 = I, s0 h - e s1 = 0
    let row1 = iz.kron(d.psi1())?.hstack(&zero)?;
    let row2 = zero.hstack(&iz.kron(d.psi0())?)?;
    let row3 = iz
        .kron(e.matrix())?
        .neg()
        .hstack(&z.matrix().transpose().kron(&LocalMatrix::identity(f, me))?)?;
    let a = row1.vstack(&row2)?.vstack(&row3)?;
    let id_vec = iz.vectorize();
    let b = id_vec
        .vstack(&id_vec)?
        .vstack(&LocalMatrix::zeros(f, n, 1))?;
    let Some(sol) = solve_linear(&a, &b)? else {
        return Ok(None);
    };
    let s1 = LocalMatrix::unvectorize(&sol.submatrix(0..n, 0..1), me, mz);
    let s0 = LocalMatrix::unvectorize(&sol.submatrix(n..2 * n, 0..1), me, mz);
    Ok(Some(MonMorphism::new(z, e, s1, s0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::scalar::OmegaSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    fn obj(exps: &[u32], n: u32) -> MonObject {
        MonObject::from_exponents(exps, &w(n)).unwrap()
    }

    #[test]
    fn kernel_of_biproduct_projection() {
        let x = obj(&[1], 2);
        let y = obj(&[0, 2], 2);
        let (_, py) = MonMorphism::projections(&x, &y).unwrap();
        let (k, incl) = kernel_of_deflation(&py).unwrap();
        assert_eq!(k.exponents(), x.exponents());
        Conflation::new(incl, py).unwrap();
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let x = obj(&[1, 2], 3);
        let (k, _) = kernel_of_deflation(&MonMorphism::identity(&x)).unwrap();
        assert_eq!(k.size(), 0);
        let (c, _) = cokernel_of_inflation(&MonMorphism::identity(&x)).unwrap();
        assert_eq!(c.size(), 0);
    }

    #[test]
    fn not_a_deflation() {
        let x = obj(&[1], 2);
        let m = MonMorphism::omega_identity(&x);
        assert!(matches!(kernel_of_deflation(&m), Err(Error::NotDeflation(_))));
        assert!(matches!(cokernel_of_inflation(&m), Err(Error::NotInflation(_))));
    }

    #[test]
    fn pushout_along_identity() {
        let x = obj(&[1], 2);
        let y = obj(&[0, 2], 2);
        let (ix, _) = MonMorphism::injections(&x, &y).unwrap();
        let po = pushout_inflation(&ix, &MonMorphism::identity(&x)).unwrap();
        assert_eq!(po.object.exponents(), ix.target().exponents());
        // square commutes
        let lhs = ix.then(&po.from_target).unwrap();
        let rhs = MonMorphism::identity(&x).then(&po.from_other).unwrap();
        assert!(lhs.same_maps(&rhs));
    }

    #[test]
    fn pullback_of_biproduct_projection() {
        let x = obj(&[1], 3);
        let z = obj(&[2], 3);
        let wobj = obj(&[1, 3], 3);
        let (_, pz) = MonMorphism::projections(&x, &z).unwrap();
        let theta = MonMorphism::zero(&wobj, &z);
        let pb = pullback_deflation(&pz, &theta).unwrap();
        let mut expect = x.direct_sum(&wobj).unwrap().exponents();
        expect.sort();
        assert_eq!(pb.object.exponents(), expect);
        conflation_of_deflation(&pb.to_other).unwrap();
    }

    #[test]
    fn split_conflation_has_retraction_and_section() {
        let x = obj(&[1], 2);
        let y = obj(&[2], 2);
        let (ix, _) = MonMorphism::injections(&x, &y).unwrap();
        let (_, py) = MonMorphism::projections(&x, &y).unwrap();
        let r = find_retraction(&ix).unwrap().unwrap();
        assert!(ix.then(&r).unwrap().psi0().is_identity());
        let s = find_section(&py).unwrap().unwrap();
        assert!(s.then(&py).unwrap().psi1().is_identity());
    }
}
