//! Modules over `R = S/(omega)`, kept in the form `sum S/(x^a_i)`, and the
//! cokernel functor `T` from the monomorphism category.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::linalg::{cokernel_exponents, KMatrix, KSpace};
use crate::moncat::{stable_hom_dimension, MonObject};
use crate::scalar::OmegaSpec;

/// `sum_i S/(x^a_i)` with `1 <= a_i <= n`, exponents ascending. Summands with
/// `a_i = n` are free over R.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RModuleObject {
    pub n: u32,
    pub exponents: Vec<u32>,
}

impl RModuleObject {
    pub fn new(n: u32, mut exponents: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exponents.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidExponent { exponent: e, n });
        }
        exponents.sort_unstable();
        Ok(RModuleObject { n, exponents })
    }

    /// Drops free summands.
    pub fn stable_part(&self) -> Self {
        RModuleObject {
            n: self.n,
            exponents: self.exponents.iter().copied().filter(|&a| a < self.n).collect(),
        }
    }

    pub fn is_stably_zero(&self) -> bool {
        self.exponents.iter().all(|&a| a == self.n)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// `T(P --f--> Q) = Coker f`.
pub fn functor_t(x: &MonObject) -> RModuleObject {
    let exponents = cokernel_exponents(x.matrix(), x.omega()).expect("validated object");
    RModuleObject::new(x.omega().n(), exponents).expect("exponents of a valid object are at most n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SyzygyDirection {
    Omega,
    OmegaInverse,
}

/// Syzygy or cosyzygy. Over `S/(x^n)` both send `S/(x^a)` to `S/(x^(n-a))`
/// and kill free summands.
pub fn rmod_syzygy(m: &RModuleObject, _direction: SyzygyDirection) -> RModuleObject {
    let n = m.n;
    RModuleObject::new(
        n,
        m.exponents
            .iter()
            .filter(|&&a| a < n)
            .map(|&a| n - a)
            .collect(),
    )
    .expect("n - a lies in 1..n")
}

/// How stable Hom dimensions between R-modules are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HomMethod {
    /// `min(a, b, n - a, n - b)` per pair of summands, once it has been checked
    /// against the oracle on every cell with `n <= 5`.
    #[default]
    ClosedForm,
    /// Linear algebra over Q on the module matrices.
    Oracle,
}

/// Largest `n` for which the closed form is checked against the oracle.
pub const VERIFIED_UP_TO: u32 = 5;

pub fn closed_form_cell(a: u32, b: u32, n: u32) -> usize {
    a.min(b).min(n - a).min(n - b) as usize
}

/// Whether the closed form agrees with [`oracle_cell`] for all
/// `1 <= a, b <= n <= VERIFIED_UP_TO`. Computed once.
pub fn closed_form_verified() -> bool {
    static VERIFIED: OnceLock<bool> = OnceLock::new();
    *VERIFIED.get_or_init(|| {
        (1..=VERIFIED_UP_TO).all(|n| {
            (1..=n).all(|a| (1..=n).all(|b| closed_form_cell(a, b, n) == oracle_cell(a, b, n)))
        })
    })
}

/// Nilpotent shift: the action of `x` on `S/(x^a)` in the basis
/// `1, x, ..., x^(a-1)`.
fn shift_matrix(a: usize) -> Vec<Vec<Coeff>> {
    let mut j = vec![vec![Coeff::zero(); a]; a];
    for i in 1..a {
        j[i][i - 1] = Coeff::one();
    }
    j
}

/// Basis of `Hom_R(S/(x^a), S/(x^b))` as `b x a` matrices over Q: the
/// solutions of `J_b A = A J_a`.
fn hom_basis(a: usize, b: usize) -> Vec<Vec<Vec<Coeff>>> {
    let (ja, jb) = (shift_matrix(a), shift_matrix(b));
    // unknown A[r][c] has index r * a + c; one equation per entry (r, c)
    let unknowns = a * b;
    let mut columns = vec![vec![Coeff::zero(); a * b]; unknowns];
    for r in 0..b {
        for c in 0..a {
            let eq = r * a + c;
            // (J_b A)[r][c] = sum_k J_b[r][k] A[k][c]
            for (k, jrk) in jb[r].iter().enumerate() {
                if !jrk.is_zero() {
                    columns[k * a + c][eq] += jrk;
                }
            }
            // (A J_a)[r][c] = sum_k A[r][k] J_a[k][c]
            for (k, row) in ja.iter().enumerate() {
                if !row[c].is_zero() {
                    columns[r * a + k][eq] -= &row[c];
                }
            }
        }
    }
    KMatrix::from_columns(FieldSpec::Rationals, a * b, &columns)
        .nullspace()
        .into_iter()
        .map(|v| v.chunks(a.max(1)).map(|row| row.to_vec()).collect())
        .collect()
}

fn mat_mul(x: &[Vec<Coeff>], y: &[Vec<Coeff>], inner: usize, cols: usize) -> Vec<Coeff> {
    let mut out = Vec::with_capacity(x.len() * cols);
    for row in x {
        for c in 0..cols {
            let mut acc = Coeff::zero();
            for k in 0..inner {
                acc += &row[k] * &y[k][c];
            }
            out.push(acc);
        }
    }
    out
}

/// Stable Hom dimension between `S/(x^a)` and `S/(x^b)` over `S/(x^n)`:
/// all R-linear maps modulo those factoring through R. Every map through a
/// free module is a sum of maps through copies of R, so the span of the
/// composites `M -> R -> N` is the whole null part.
pub fn oracle_cell(a: u32, b: u32, n: u32) -> usize {
    let (a, b, n) = (a as usize, b as usize, n as usize);
    let homs = hom_basis(a, b);
    let into_r = hom_basis(a, n);
    let out_of_r = hom_basis(n, b);
    let mut null = KSpace::new(FieldSpec::Rationals, a * b);
    for h in &out_of_r {
        for g in &into_r {
            null.insert(mat_mul(h, g, n, a));
        }
    }
    homs.len() - null.dimension()
}

/// `sum` over pairs of summands of the cell dimension.
pub fn rmod_stable_hom_dimension(m: &RModuleObject, n: &RModuleObject) -> Result<usize> {
    rmod_stable_hom_dimension_with(m, n, HomMethod::default())
}

pub fn rmod_stable_hom_dimension_with(
    m: &RModuleObject,
    n: &RModuleObject,
    method: HomMethod,
) -> Result<usize> {
    m.check_rank(n)?;
    let use_closed = method == HomMethod::ClosedForm && closed_form_verified();
    let cell = |a, b| {
        if use_closed {
            closed_form_cell(a, b, m.n)
        } else {
            oracle_cell(a, b, m.n)
        }
    };
    Ok(m.exponents
        .iter()
        .flat_map(|&a| n.exponents.iter().map(move |&b| (a, b)))
        .map(|(a, b)| cell(a, b))
        .sum())
}

/// `diag(x^a_i)` over `w`; `T` of it is `m` again.
pub fn density_preimage(m: &RModuleObject, w: &OmegaSpec) -> Result<MonObject> {
    if w.n() != m.n {
        return Err(Error::RankMismatch {
            left: m.n,
            right: w.n(),
        });
    }
    MonObject::from_exponents(&m.exponents, w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StableHomReport {
    pub dim_mon_side: usize,
    pub dim_module_side: usize,
    pub agree: bool,
}

/// Compares stable Hom on both sides of `T`.
pub fn check_t_full_faithful(x: &MonObject, y: &MonObject) -> Result<StableHomReport> {
    let dim_mon_side = stable_hom_dimension(x, y)?;
    let dim_module_side = rmod_stable_hom_dimension(&functor_t(x), &functor_t(y))?;
    Ok(StableHomReport {
        dim_mon_side,
        dim_module_side,
        agree: dim_mon_side == dim_module_side,
    })
}
