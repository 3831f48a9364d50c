use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{scaled_inverse, truncated_exponents, LocalMatrix};
use crate::scalar::{LocalScalar, OmegaSpec};

/// Which monomorphism category an object is regarded in.
///
/// Over the discrete valuation ring every Gorenstein projective module is
/// free, so both categories have the same objects and morphisms. The tag is
/// carried so that the inclusion functor is an explicit operation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ambient {
    #[default]
    Projective,
    Gorenstein,
}

/// An object `(P --f--> Q)`: a square injective matrix over S whose cokernel
/// is killed by omega.
///
/// The partner matrix `f_sigma` with `f f_sigma = f_sigma f = omega I` is
/// computed once during validation and cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonObject {
    f: LocalMatrix,
    sigma: LocalMatrix,
    omega: OmegaSpec,
    ambient: Ambient,
}

impl MonObject {
    /// Validates `f` against omega: square, injective, and every Smith
    /// exponent at most `n`.
    pub fn new(f: LocalMatrix, omega: &OmegaSpec) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::NotSquare {
                rows: f.rows(),
                cols: f.cols(),
            });
        }
        if f.field() != omega.field() {
            return Err(Error::FieldMismatch);
        }
        // all exponents are at most n iff all of them show up modulo x^(n+1)
        let n = omega.n();
        if truncated_exponents(&f, n as usize + 1).len() < f.cols() {
            let Some(v) = f.det()?.valuation() else {
                return Err(Error::NotInjective);
            };
            let exps = truncated_exponents(&f, v as usize + 1);
            let e = exps.into_iter().find(|&e| e > n).unwrap_or(v);
            return Err(Error::CokerNotAnnihilated { exponent: e, n });
        }
        let sigma = scaled_inverse(&f, omega.omega())?
            .expect("omega I lies in the image of f once exponents are bounded by n");
        Ok(MonObject {
            f,
            sigma,
            omega: omega.clone(),
            ambient: Ambient::Projective,
        })
    }

    /// Builds an object whose partner is already known; only checked in debug
    /// builds.
    pub(crate) fn with_sigma(f: LocalMatrix, sigma: LocalMatrix, omega: &OmegaSpec) -> Self {
        debug_assert!({
            let w = LocalMatrix::scalar_identity(omega.omega(), f.rows());
            f.mul(&sigma).unwrap() == w && sigma.mul(&f).unwrap() == w
        });
        MonObject {
            f,
            sigma,
            omega: omega.clone(),
            ambient: Ambient::Projective,
        }
    }

    /// The zero object.
    pub fn empty(omega: &OmegaSpec) -> Self {
        let z = LocalMatrix::zeros(omega.field(), 0, 0);
        Self::with_sigma(z.clone(), z, omega)
    }

    /// `(S^a --id--> S^a) + (S^b --omega--> S^b)` as one block-diagonal object.
    pub fn standard_projective(id_rank: usize, omega_rank: usize, omega: &OmegaSpec) -> Self {
        let field = omega.field();
        let one = LocalScalar::one(field);
        let mut diag = vec![one.clone(); id_rank];
        diag.extend(std::iter::repeat_n(omega.omega().clone(), omega_rank));
        let mut part = vec![omega.omega().clone(); id_rank];
        part.extend(std::iter::repeat_n(one, omega_rank));
        Self::with_sigma(
            LocalMatrix::diagonal(field, &diag),
            LocalMatrix::diagonal(field, &part),
            omega,
        )
    }

    /// `diag(x^{a_1}, ..., x^{a_r})`; every exponent must lie in `0..=n`.
    pub fn from_exponents(exponents: &[u32], omega: &OmegaSpec) -> Result<Self> {
        Self::new(LocalMatrix::diag_x_powers(omega.field(), exponents), omega)
    }

    pub fn matrix(&self) -> &LocalMatrix {
        &self.f
    }

    /// The unique `f_sigma` with `f f_sigma = f_sigma f = omega I`.
    pub fn sigma(&self) -> &LocalMatrix {
        &self.sigma
    }

    pub fn omega(&self) -> &OmegaSpec {
        &self.omega
    }

    pub fn field(&self) -> FieldSpec {
        self.omega.field()
    }

    pub fn size(&self) -> usize {
        self.f.rows()
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Image under the inclusion into the Gorenstein monomorphism category.
    pub fn include_gorenstein(&self) -> Self {
        MonObject {
            ambient: Ambient::Gorenstein,
            ..self.clone()
        }
    }

    /// The object `(f_sigma, omega)`, whose own partner is `f` again.
    pub fn sigma_object(&self) -> Self {
        Self::with_sigma(self.sigma.clone(), self.f.clone(), &self.omega)
    }

    pub(crate) fn check_same_omega(&self, other: &Self) -> Result<()> {
        if self.omega != other.omega {
            Err(Error::OmegaMismatch)
        } else {
            Ok(())
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_omega(other)?;
        Ok(Self::with_sigma(
            self.f.direct_sum(&other.f),
            self.sigma.direct_sum(&other.sigma),
            &self.omega,
        ))
    }

    /// Smith exponents of `f`, including zeros, ascending. Length equals the size.
    pub fn exponents(&self) -> Vec<u32> {
        truncated_exponents(&self.f, self.omega.n() as usize + 1)
    }

    /// True iff every Smith exponent is `0` or `n`, i.e. the object is a
    /// direct summand of a standard projective.
    pub fn has_projective_exponents(&self) -> bool {
        let n = self.omega.n();
        self.exponents().iter().all(|&e| e == 0 || e == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    fn m(rows: &[Vec<&[i64]>]) -> LocalMatrix {
        LocalMatrix::from_int_polys(Q, rows)
    }

    #[test]
    fn validation_examples() {
        assert!(MonObject::new(m(&[vec![&[0, 1]]]), &w(2)).is_ok());
        assert!(MonObject::new(m(&[vec![&[1]]]), &w(2)).is_ok());
        let horseshoe = m(&[vec![&[0, 1], &[-1]], vec![&[0], &[0, 1]]]);
        assert_eq!(
            MonObject::new(horseshoe, &w(1)),
            Err(Error::CokerNotAnnihilated { exponent: 2, n: 1 })
        );
        assert_eq!(
            MonObject::new(m(&[vec![&[0, 1], &[1]]]), &w(2)),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
        assert_eq!(
            MonObject::new(LocalMatrix::zeros(Q, 1, 1), &w(2)),
            Err(Error::NotInjective)
        );
    }

    #[test]
    fn sigma_examples() {
        let x = MonObject::new(m(&[vec![&[1]]]), &w(2)).unwrap();
        assert_eq!(x.sigma(), &m(&[vec![&[0, 0, 1]]]));
        let x = MonObject::new(m(&[vec![&[0, 1]]]), &w(2)).unwrap();
        assert_eq!(x.sigma(), &m(&[vec![&[0, 1]]]));
        let x = MonObject::new(m(&[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]), &w(3)).unwrap();
        assert_eq!(x.sigma(), &m(&[vec![&[0, 0, 1], &[-1]], vec![&[0], &[0, 1]]]));
        let w3 = LocalMatrix::scalar_identity(w(3).omega(), 2);
        assert_eq!(x.matrix().mul(x.sigma()).unwrap(), w3);
        assert_eq!(x.sigma().mul(x.matrix()).unwrap(), w3);
    }

    #[test]
    fn direct_sums() {
        let a = MonObject::new(m(&[vec![&[0, 1]]]), &w(3)).unwrap();
        let b = MonObject::new(m(&[vec![&[0, 0, 1]]]), &w(3)).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.matrix(), &LocalMatrix::diag_x_powers(Q, &[1, 2]));
        assert_eq!(a.direct_sum(&MonObject::empty(&w(3))).unwrap(), a);
        let other = MonObject::new(m(&[vec![&[0, 1]]]), &w(2)).unwrap();
        assert_eq!(a.direct_sum(&other), Err(Error::OmegaMismatch));
    }

    #[test]
    fn standard_projectives() {
        let p = MonObject::standard_projective(1, 0, &w(2));
        assert_eq!(p.matrix(), &m(&[vec![&[1]]]));
        let p = MonObject::standard_projective(0, 1, &w(2));
        assert_eq!(p.matrix(), &m(&[vec![&[0, 0, 1]]]));
        let p = MonObject::standard_projective(1, 1, &w(2));
        assert_eq!(p.matrix(), &LocalMatrix::diag_x_powers(Q, &[0, 2]));
        assert_eq!(MonObject::new(p.matrix().clone(), &w(2)).unwrap(), p);
    }
}
