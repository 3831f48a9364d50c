//! The stable category: null-homotopies, the shift, standard triangles and
//! stable Hom spaces.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::linalg::{solve_mod_omega, KMatrix, KSpace, LocalMatrix};
use crate::moncat::exact::{pushout_inflation, Conflation};
use crate::moncat::frobenius::injective_presentation;
use crate::moncat::{MonMorphism, MonObject};
use crate::scalar::LocalScalar;

/// Certificate that a morphism `(psi1, psi0): X -> Y` factors through a
/// projective: `psi0 f - f' s0 f = omega s1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness {
    pub s1: LocalMatrix,
    pub s0: LocalMatrix,
}

impl HomotopyWitness {
    /// Checks `psi0 f - f' s0 f = omega s1` exactly.
    pub fn certifies(&self, m: &MonMorphism) -> Result<bool> {
        let (f, ft) = (m.source().matrix(), m.target().matrix());
        let lhs = m.psi0().mul(f)?.sub(&ft.mul(&self.s0)?.mul(f)?)?;
        Ok(lhs == self.s1.scale(m.source().omega().omega())?)
    }

    /// The other form of the relation, `f' psi1 - f' s0 f = omega s1`.
    pub fn certifies_via_psi1(&self, m: &MonMorphism) -> Result<bool> {
        let (f, ft) = (m.source().matrix(), m.target().matrix());
        let lhs = ft.mul(m.psi1())?.sub(&ft.mul(&self.s0)?.mul(f)?)?;
        Ok(lhs == self.s1.scale(m.source().omega().omega())?)
    }
}

/// Decides whether `m` is null-homotopic.
///
/// The unknown `s0` enters linearly: `vec(f' s0 f) = (f^T kron f') vec(s0)`,
/// so the congruence `f' s0 f = psi0 f (mod omega)` is one call to the
/// mod-omega solver; `s1` is then the exact quotient by omega.
pub fn is_null_homotopic(m: &MonMorphism) -> Result<Option<HomotopyWitness>> {
    let (x, y) = (m.source(), m.target());
    let (f, ft) = (x.matrix(), y.matrix());
    let w = x.omega();
    let a = f.transpose().kron(ft)?;
    let rhs = m.psi0().mul(f)?;
    let Some((s0_vec, _)) = solve_mod_omega(&a, &rhs.vectorize(), w)? else {
        return Ok(None);
    };
    let s0 = LocalMatrix::unvectorize(&s0_vec, y.size(), x.size());
    let s1 = rhs.sub(&ft.mul(&s0)?.mul(f)?)?.div_scalar(w.omega())?;
    Ok(Some(HomotopyWitness { s1, s0 }))
}

/// An explicit factorization `X -> P -> Y` through a standard projective.
#[derive(Clone, Debug)]
pub struct ProjectiveFactorization {
    pub projective: MonObject,
    pub into: MonMorphism,
    pub out_of: MonMorphism,
    /// Rank of the identity block of `projective`.
    pub id_rank: usize,
}

/// Turns a witness into a factorization through
/// `standard_projective(m', m')`, where `m'` is the size of the target:
/// `X -> P` is `([s0 f; s1], [s0; s1 f_sigma])` and `P -> Y` is
/// `([id, f'_sigma], [f', id])`.
pub fn factor_through_projective(
    m: &MonMorphism,
    witness: &HomotopyWitness,
) -> Result<ProjectiveFactorization> {
    let (x, y) = (m.source(), m.target());
    let field = x.field();
    let k = y.size();
    let p = MonObject::standard_projective(k, k, x.omega());
    let s0f = witness.s0.mul(x.matrix())?;
    let into = MonMorphism::new(
        x,
        &p,
        s0f.vstack(&witness.s1)?,
        witness.s0.vstack(&witness.s1.mul(x.sigma())?)?,
    )?;
    let id = LocalMatrix::identity(field, k);
    let out_of = MonMorphism::new(
        &p,
        y,
        id.hstack(y.sigma())?,
        y.matrix().hstack(&id)?,
    )?;
    Ok(ProjectiveFactorization {
        projective: p,
        into,
        out_of,
        id_rank: k,
    })
}

/// Reads a witness off a factorization through a standard projective whose
/// first `id_rank` coordinates form the identity block.
pub fn witness_from_factorization(fac: &ProjectiveFactorization) -> Result<HomotopyWitness> {
    let a = fac.id_rank;
    let total = fac.projective.size();
    let (alpha, beta) = (&fac.into, &fac.out_of);
    let rows_a = |m: &LocalMatrix, r: std::ops::Range<usize>| m.submatrix(r, 0..m.cols());
    let cols_a = |m: &LocalMatrix, c: std::ops::Range<usize>| m.submatrix(0..m.rows(), c);
    let s0 = cols_a(beta.psi1(), 0..a).mul(&rows_a(alpha.psi0(), 0..a))?;
    let s1 = cols_a(beta.psi0(), a..total).mul(&rows_a(alpha.psi1(), a..total))?;
    Ok(HomotopyWitness { s1, s0 })
}

/// True iff the identity of `x` is null-homotopic.
pub fn is_projective_object(x: &MonObject) -> Result<bool> {
    Ok(is_null_homotopic(&MonMorphism::identity(x))?.is_some())
}

/// The shift `(P --f--> Q) |-> (Q --(-f_sigma)--> P)`. Applying it twice
/// returns `f` on the nose.
pub fn shift(x: &MonObject) -> MonObject {
    MonObject::with_sigma(x.sigma().neg(), x.matrix().neg(), x.omega())
}

/// The shift on morphisms: `(psi1, psi0) |-> (psi0, psi1)`.
pub fn shift_morphism(m: &MonMorphism) -> Result<MonMorphism> {
    MonMorphism::new(
        &shift(m.source()),
        &shift(m.target()),
        m.psi0().clone(),
        m.psi1().clone(),
    )
}

/// The standard triangle `X -> Y -> C -> shift X` of a morphism.
#[derive(Clone, Debug)]
pub struct Cone {
    pub object: MonObject,
    pub from_target: MonMorphism,
    pub to_shift: MonMorphism,
    /// `Y >-> C ->> shift X`
    pub conflation: Conflation,
}

/// Cone of `m: X -> Y`: the pushout of the injective hull `X >-> I(X)` along
/// `m`.
pub fn cone(m: &MonMorphism) -> Result<Cone> {
    let hull = injective_presentation(m.source())?;
    let po = pushout_inflation(&hull.inflation, m)?;
    let to_shift = po.induced_deflation(&hull.deflation)?;
    let conflation = Conflation::new(po.from_other.clone(), to_shift.clone())?;
    Ok(Cone {
        object: po.object.clone(),
        from_target: po.from_other,
        to_shift,
        conflation,
    })
}

/// Finite-dimensional description of a stable Hom space.
///
/// Morphisms are parametrized by `psi0` modulo omega. With target `(f', g')`
/// (`f' g' = omega`) and source `(f, g)`:
///
/// - `psi0` underlies a morphism iff `g' psi0 f = 0 (mod omega)`;
/// - null-homotopic morphisms have `psi0 = f' s + t g`;
/// - every `psi0` in `omega * Mat` is null-homotopic, so representatives of
///   degree `< n` suffice and everything lives in `(k[x]/x^n)^{rows x cols}`.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    n: usize,
    morphisms: Vec<Vec<Coeff>>,
    null: KSpace,
    stable_basis: Vec<Vec<Coeff>>,
}

type Truncated = Vec<Coeff>;

fn truncate_matrix(m: &LocalMatrix, n: usize) -> Truncated {
    m.entries()
        .iter()
        .flat_map(|e| e.truncated_coeffs(n))
        .collect()
}

fn times_x_pow(v: &Truncated, n: usize, k: usize) -> Truncated {
    let mut out = vec![Coeff::zero(); v.len()];
    for (entry, chunk) in v.chunks(n).enumerate() {
        for (t, c) in chunk.iter().enumerate() {
            if t + k < n {
                out[entry * n + t + k] = c.clone();
            }
        }
    }
    out
}

impl StableHomSpace {
    /// `target = (f', g')`, `source = (f, g)` as matrix pairs with
    /// `f g = g f = omega I`.
    pub fn compute(
        target: (&LocalMatrix, &LocalMatrix),
        source: (&LocalMatrix, &LocalMatrix),
        n: u32,
    ) -> Result<Self> {
        let (tf, tg) = target;
        let (sf, sg) = source;
        let field = tf.field();
        let n = n as usize;
        let (rows, cols) = (tf.rows(), sf.rows());
        let dim = rows * cols * n;

        let mut condition_columns = Vec::with_capacity(dim);
        let mut null = KSpace::new(field, dim);
        for i in 0..rows {
            for j in 0..cols {
                // g' E_ij f, f' E_ij and E_ij g
                let cond = tg
                    .submatrix(0..rows, i..i + 1)
                    .mul(&sf.submatrix(j..j + 1, 0..cols))?;
                let left = LocalMatrix::from_fn(field, rows, cols, |r, c| {
                    if c == j {
                        tf.get(r, i).clone()
                    } else {
                        LocalScalar::zero(field)
                    }
                });
                let right = LocalMatrix::from_fn(field, rows, cols, |r, c| {
                    if r == i {
                        sg.get(j, c).clone()
                    } else {
                        LocalScalar::zero(field)
                    }
                });
                let (cond, left, right) = (
                    truncate_matrix(&cond, n),
                    truncate_matrix(&left, n),
                    truncate_matrix(&right, n),
                );
                for k in 0..n {
                    condition_columns.push((i, j, k, times_x_pow(&cond, n, k)));
                    null.insert(times_x_pow(&left, n, k));
                    null.insert(times_x_pow(&right, n, k));
                }
            }
        }
        // Columns are indexed like the coefficient vector of psi0.
        condition_columns.sort_by_key(|&(i, j, k, _)| (i * cols + j) * n + k);
        let cols_vec: Vec<Vec<Coeff>> = condition_columns.into_iter().map(|c| c.3).collect();
        let morphisms = KMatrix::from_columns(field, dim, &cols_vec).nullspace();

        let mut extended = null.clone();
        let mut stable_basis = Vec::new();
        for v in &morphisms {
            if extended.insert(v.clone()) {
                stable_basis.push(v.clone());
            }
        }
        Ok(StableHomSpace {
            field,
            rows,
            cols,
            n,
            morphisms,
            null,
            stable_basis,
        })
    }

    pub fn dimension(&self) -> usize {
        self.stable_basis.len()
    }

    /// Dimension of `Hom(X, Y) / omega Hom`-representatives, i.e. of the
    /// image of Hom in matrices mod omega.
    pub fn morphism_dimension(&self) -> usize {
        self.morphisms.len()
    }

    pub fn null_dimension(&self) -> usize {
        self.null.dimension()
    }

    /// Lifts a coefficient vector to a polynomial `psi0` matrix.
    pub fn lift(&self, v: &[Coeff]) -> LocalMatrix {
        let n = self.n;
        LocalMatrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            let start = (i * self.cols + j) * n;
            LocalScalar::from_coeffs(self.field, v[start..start + n].to_vec())
        })
    }

    /// `psi0` representatives of a k-basis of the stable Hom space.
    pub fn stable_representatives(&self) -> Vec<LocalMatrix> {
        self.stable_basis.iter().map(|v| self.lift(v)).collect()
    }

    /// `psi0` representatives spanning all morphisms modulo omega.
    pub fn morphism_representatives(&self) -> Vec<LocalMatrix> {
        self.morphisms.iter().map(|v| self.lift(v)).collect()
    }

    /// Whether a `psi0` (of a genuine morphism) is null-homotopic.
    pub fn is_null(&self, psi0: &LocalMatrix) -> bool {
        self.null.contains(&truncate_matrix(psi0, self.n))
    }
}

/// Stable Hom space between two objects of the monomorphism category.
pub fn stable_hom_space(x: &MonObject, y: &MonObject) -> Result<StableHomSpace> {
    x.check_same_omega(y)?;
    StableHomSpace::compute(
        (y.matrix(), y.sigma()),
        (x.matrix(), x.sigma()),
        x.omega().n(),
    )
}

/// `dim_k` of morphisms `X -> Y` modulo null-homotopic ones.
pub fn stable_hom_dimension(x: &MonObject, y: &MonObject) -> Result<usize> {
    Ok(stable_hom_space(x, y)?.dimension())
}

/// Objects are regarded in different ambient categories; only used for error
/// reporting symmetry with the pair side.
pub fn check_omegas(x: &MonObject, y: &MonObject) -> Result<()> {
    if x.omega() != y.omega() {
        return Err(Error::OmegaMismatch);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::OmegaSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    fn obj(exps: &[u32], n: u32) -> MonObject {
        MonObject::from_exponents(exps, &w(n)).unwrap()
    }

    #[test]
    fn omega_identity_is_null_homotopic_via_sigma() {
        let x = MonObject::new(
            LocalMatrix::from_int_polys(Q, &[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]),
            &w(3),
        )
        .unwrap();
        let m = MonMorphism::omega_identity(&x);
        let canonical = HomotopyWitness {
            s0: x.sigma().clone(),
            s1: LocalMatrix::zeros(Q, 2, 2),
        };
        assert!(canonical.certifies(&m).unwrap());
        let found = is_null_homotopic(&m).unwrap().unwrap();
        assert!(found.certifies(&m).unwrap());
        assert!(found.certifies_via_psi1(&m).unwrap());
    }

    #[test]
    fn identity_on_simple_object_is_not_null_homotopic() {
        let x = obj(&[1], 2);
        assert!(is_null_homotopic(&MonMorphism::identity(&x)).unwrap().is_none());
        assert!(!is_projective_object(&x).unwrap());
        let p = MonObject::standard_projective(2, 3, &w(2));
        assert!(is_projective_object(&p).unwrap());
    }

    #[test]
    fn factorization_round_trip() {
        let x = obj(&[1, 2], 3);
        let m = MonMorphism::omega_identity(&x);
        let wit = is_null_homotopic(&m).unwrap().unwrap();
        let fac = factor_through_projective(&m, &wit).unwrap();
        let comp = fac.into.then(&fac.out_of).unwrap();
        assert!(comp.same_maps(&m));
        let back = witness_from_factorization(&fac).unwrap();
        assert!(back.certifies(&m).unwrap());
    }

    #[test]
    fn shift_examples() {
        let x = obj(&[1], 2);
        let s = shift(&x);
        assert_eq!(s.matrix(), &LocalMatrix::from_int_polys(Q, &[vec![&[0, -1]]]));
        assert_eq!(shift(&s).matrix(), x.matrix());
        let p = MonObject::standard_projective(1, 0, &w(2));
        let sp = shift(&p);
        assert_eq!(sp.matrix(), &LocalMatrix::from_int_polys(Q, &[vec![&[0, 0, -1]]]));
        assert!(sp.has_projective_exponents());
    }

    #[test]
    fn stable_hom_examples() {
        assert_eq!(stable_hom_dimension(&obj(&[1], 2), &obj(&[1], 2)).unwrap(), 1);
        assert_eq!(stable_hom_dimension(&obj(&[1], 3), &obj(&[2], 3)).unwrap(), 1);
        let p = MonObject::standard_projective(1, 1, &w(3));
        assert_eq!(stable_hom_dimension(&p, &obj(&[1, 2], 3)).unwrap(), 0);
        assert_eq!(
            stable_hom_dimension(&obj(&[1], 2), &obj(&[1], 3)),
            Err(Error::OmegaMismatch)
        );
    }

    #[test]
    fn cone_of_identity_is_projective() {
        let x = obj(&[1, 2], 3);
        let c = cone(&MonMorphism::identity(&x)).unwrap();
        assert!(c.object.has_projective_exponents());
        assert!(is_projective_object(&c.object).unwrap());
    }
}
