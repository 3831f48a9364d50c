//! Enough projectives and injectives.
//!
//! For `X = (G --g--> P)` with `G` free, the projective cover is
//! `(G + P --id+omega--> G + P) ->> X` with components `[id, g_sigma]` and
//! `[g, id]`; the injective hull is `X >-> (G + P --omega+id--> G + P)` with
//! components `[id; g]` and `[g_sigma; id]`.

use crate::error::Result;
use crate::linalg::LocalMatrix;
use crate::moncat::exact::{kernel_of_deflation, Conflation};
use crate::moncat::{MonMorphism, MonObject};

/// `K >-> P(X) ->> X` with `P(X) = standard_projective(m, m)`.
pub fn projective_presentation(x: &MonObject) -> Result<Conflation> {
    let f = x.field();
    let m = x.size();
    let cover = MonObject::standard_projective(m, m, x.omega());
    let id = LocalMatrix::identity(f, m);
    let phi1 = id.hstack(x.sigma())?;
    let phi0 = x.matrix().hstack(&id)?;
    let deflation = MonMorphism::new(&cover, x, phi1, phi0)?;
    let (_, incl) = kernel_of_deflation(&deflation)?;
    Conflation::new(incl, deflation)
}

/// `X >-> I(X) ->> C` with `I(X) = (omega I_m) + (I_m)`. The cokernel is
/// written in the explicit basis `[-g, id]`, `[id, -g_sigma]`, which makes
/// `C` literally the shift `(P --(-g_sigma)--> G)`.
pub fn injective_presentation(x: &MonObject) -> Result<Conflation> {
    let f = x.field();
    let m = x.size();
    let w = x.omega().omega();
    let hull_f = LocalMatrix::scalar_identity(w, m).direct_sum(&LocalMatrix::identity(f, m));
    let hull_sigma = LocalMatrix::identity(f, m).direct_sum(&LocalMatrix::scalar_identity(w, m));
    let hull = MonObject::with_sigma(hull_f, hull_sigma, x.omega());
    let id = LocalMatrix::identity(f, m);
    let inflation = MonMorphism::new(
        x,
        &hull,
        id.vstack(x.matrix())?,
        x.sigma().vstack(&id)?,
    )?;
    let shifted = super::stable::shift(x);
    let deflation = MonMorphism::new(
        &hull,
        &shifted,
        x.matrix().neg().hstack(&id)?,
        id.hstack(&x.sigma().neg())?,
    )?;
    Conflation::new(inflation, deflation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::moncat::exact::{find_retraction, find_section};
    use crate::scalar::OmegaSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    #[test]
    fn presentations_of_a_simple_object() {
        let x = MonObject::from_exponents(&[1], &w(2)).unwrap();
        let p = projective_presentation(&x).unwrap();
        assert_eq!(p.middle.exponents(), vec![0, 2]);
        assert!(p.middle.has_projective_exponents());
        assert_eq!(p.left.exponents(), vec![1]);
        let i = injective_presentation(&x).unwrap();
        assert_eq!(i.middle.exponents(), vec![0, 2]);
        assert_eq!(i.right.matrix(), &x.sigma().neg());
    }

    #[test]
    fn presentations_of_projectives_split() {
        let p = MonObject::standard_projective(1, 1, &w(2));
        let pres = projective_presentation(&p).unwrap();
        assert!(find_section(&pres.deflation).unwrap().is_some());
        let inj = injective_presentation(&p).unwrap();
        assert!(find_retraction(&inj.inflation).unwrap().is_some());
    }

    #[test]
    fn presentation_of_non_projective_does_not_split() {
        let x = MonObject::from_exponents(&[1], &w(2)).unwrap();
        let pres = projective_presentation(&x).unwrap();
        assert!(find_section(&pres.deflation).unwrap().is_none());
    }
}
