use crate::error::{Error, Result};
use crate::linalg::LocalMatrix;
use crate::moncat::MonObject;
use crate::scalar::LocalScalar;

/// A morphism `(psi1, psi0): (P --f--> Q) -> (P' --f'--> Q')` with
/// `psi0 f = f' psi1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonMorphism {
    source: MonObject,
    target: MonObject,
    psi1: LocalMatrix,
    psi0: LocalMatrix,
}

impl MonMorphism {
    pub fn new(
        source: &MonObject,
        target: &MonObject,
        psi1: LocalMatrix,
        psi0: LocalMatrix,
    ) -> Result<Self> {
        source.check_same_omega(target)?;
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
        let residual = psi0
            .mul(source.matrix())?
            .sub(&target.matrix().mul(&psi1)?)?;
        if !residual.is_zero() {
            return Err(Error::SquareNotCommuting {
                residual: residual.to_string(),
            });
        }
        Ok(MonMorphism {
            source: source.clone(),
            target: target.clone(),
            psi1,
            psi0,
        })
    }

    /// Builds the morphism determined by `psi0`, solving for `psi1`. Fails
    /// when `psi0 f` does not factor through `f'`.
    pub fn from_psi0(source: &MonObject, target: &MonObject, psi0: LocalMatrix) -> Result<Self> {
        let rhs = psi0.mul(source.matrix())?;
        // f' psi1 = psi0 f  <=>  omega psi1 = f'_sigma psi0 f
        let psi1 = target
            .sigma()
            .mul(&rhs)?
            .div_scalar(source.omega().omega())
            .map_err(|_| Error::SquareNotCommuting {
                residual: "psi0 f is not in the image of f'".into(),
            })?;
        Self::new(source, target, psi1, psi0)
    }

    pub fn identity(x: &MonObject) -> Self {
        let i = LocalMatrix::identity(x.field(), x.size());
        MonMorphism {
            source: x.clone(),
            target: x.clone(),
            psi1: i.clone(),
            psi0: i,
        }
    }

    pub fn zero(source: &MonObject, target: &MonObject) -> Self {
        let z = LocalMatrix::zeros(source.field(), target.size(), source.size());
        MonMorphism {
            source: source.clone(),
            target: target.clone(),
            psi1: z.clone(),
            psi0: z,
        }
    }

    /// `omega * id_X`.
    pub fn omega_identity(x: &MonObject) -> Self {
        Self::identity(x)
            .scale(x.omega().omega())
            .expect("scaling by omega stays in bounds")
    }

    pub fn source(&self) -> &MonObject {
        &self.source
    }

    pub fn target(&self) -> &MonObject {
        &self.target
    }

    pub fn psi1(&self) -> &LocalMatrix {
        &self.psi1
    }

    pub fn psi0(&self) -> &LocalMatrix {
        &self.psi0
    }

    /// `other . self`.
    pub fn then(&self, other: &MonMorphism) -> Result<Self> {
        if self.target.matrix() != other.source.matrix() {
            return Err(Error::DimensionMismatch(
                "composition: target and source differ".into(),
            ));
        }
        Ok(MonMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            psi1: other.psi1.mul(&self.psi1)?,
            psi0: other.psi0.mul(&self.psi0)?,
        })
    }

    pub fn scale(&self, s: &LocalScalar) -> Result<Self> {
        Ok(MonMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            psi1: self.psi1.scale(s)?,
            psi0: self.psi0.scale(s)?,
        })
    }

    pub fn add(&self, other: &MonMorphism) -> Result<Self> {
        if self.source.matrix() != other.source.matrix()
            || self.target.matrix() != other.target.matrix()
        {
            return Err(Error::DimensionMismatch("sum of unrelated morphisms".into()));
        }
        Ok(MonMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            psi1: self.psi1.add(&other.psi1)?,
            psi0: self.psi0.add(&other.psi0)?,
        })
    }

    pub fn neg(&self) -> Self {
        MonMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            psi1: self.psi1.neg(),
            psi0: self.psi0.neg(),
        }
    }

    pub fn sub(&self, other: &MonMorphism) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.psi1.is_zero() && self.psi0.is_zero()
    }

    /// Same components (sources and targets are assumed to agree).
    pub fn same_maps(&self, other: &MonMorphism) -> bool {
        self.psi1 == other.psi1 && self.psi0 == other.psi0
    }

    /// Canonical injections `X -> X + Y` and `Y -> X + Y`.
    pub fn injections(x: &MonObject, y: &MonObject) -> Result<(Self, Self)> {
        let sum = x.direct_sum(y)?;
        let f = x.field();
        let (a, b) = (x.size(), y.size());
        let ix = LocalMatrix::identity(f, a).vstack(&LocalMatrix::zeros(f, b, a))?;
        let iy = LocalMatrix::zeros(f, a, b).vstack(&LocalMatrix::identity(f, b))?;
        Ok((
            Self::new(x, &sum, ix.clone(), ix)?,
            Self::new(y, &sum, iy.clone(), iy)?,
        ))
    }

    /// Canonical projections `X + Y -> X` and `X + Y -> Y`.
    pub fn projections(x: &MonObject, y: &MonObject) -> Result<(Self, Self)> {
        let sum = x.direct_sum(y)?;
        let f = x.field();
        let (a, b) = (x.size(), y.size());
        let px = LocalMatrix::identity(f, a).hstack(&LocalMatrix::zeros(f, a, b))?;
        let py = LocalMatrix::zeros(f, b, a).hstack(&LocalMatrix::identity(f, b))?;
        Ok((
            Self::new(&sum, x, px.clone(), px)?,
            Self::new(&sum, y, py.clone(), py)?,
        ))
    }

    /// Re-validates the commuting square; used by checkers.
    pub fn verify(&self) -> Result<()> {
        Self::new(&self.source, &self.target, self.psi1.clone(), self.psi0.clone()).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::scalar::OmegaSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn obj(c: &[i64], n: u32) -> MonObject {
        MonObject::new(
            LocalMatrix::from_int_polys(Q, &[vec![c]]),
            &OmegaSpec::x_pow(Q, n).unwrap(),
        )
        .unwrap()
    }

    fn one() -> LocalMatrix {
        LocalMatrix::identity(Q, 1)
    }

    #[test]
    fn commuting_square_examples() {
        let x = obj(&[0, 1], 2);
        assert!(MonMorphism::new(&x, &x, one(), one()).is_ok());
        MonMorphism::identity(&x).verify().unwrap();
        let y = obj(&[0, 0, 1], 2);
        assert!(matches!(
            MonMorphism::new(&x, &y, one(), one()),
            Err(Error::SquareNotCommuting { .. })
        ));
    }

    #[test]
    fn composition_laws() {
        let x = obj(&[0, 1], 3);
        let y = obj(&[0, 0, 1], 3);
        // psi0 = x: x * x = x^2 * 1
        let m = MonMorphism::from_psi0(&x, &y, LocalMatrix::from_int_polys(Q, &[vec![&[0, 1]]]))
            .unwrap();
        let id_x = MonMorphism::identity(&x);
        let id_y = MonMorphism::identity(&y);
        assert!(id_x.then(&m).unwrap().same_maps(&m));
        assert!(m.then(&id_y).unwrap().same_maps(&m));
        m.then(&id_y).unwrap().verify().unwrap();
    }

    #[test]
    fn biproduct_maps() {
        let x = obj(&[0, 1], 2);
        let y = obj(&[1], 2);
        let (ix, iy) = MonMorphism::injections(&x, &y).unwrap();
        let (px, py) = MonMorphism::projections(&x, &y).unwrap();
        assert!(ix.then(&px).unwrap().psi0().is_identity());
        assert!(iy.then(&px).unwrap().is_zero());
        assert!(iy.then(&py).unwrap().psi1().is_identity());
    }
}
