use crate::error::Result;
use crate::linalg::LocalMatrix;
use crate::scalar::LocalScalar;

/// Smith normal form `U * A * V = D` over the discrete valuation ring.
///
/// `D` carries the monic powers `x^{a_1}, ..., x^{a_r}` (ascending) on its
/// diagonal followed by zeros. The inverses of `U` and `V` are tracked along
/// the way since kernels and cokernels need them.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: LocalMatrix,
    pub u_inv: LocalMatrix,
    pub d: LocalMatrix,
    pub v: LocalMatrix,
    pub v_inv: LocalMatrix,
    pub exponents: Vec<u32>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }
}

/// Computes the Smith normal form of `a`.
///
/// Pivot: the entry of minimal valuation in the remaining block (row-major
/// ties), scaled to a monic power of `x`. Because the pivot valuation is
/// minimal, every elimination quotient lies in S.
pub fn snf(a: &LocalMatrix) -> Result<SnfResult> {
    let field = a.field();
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = LocalMatrix::identity(field, m);
    let mut u_inv = LocalMatrix::identity(field, m);
    let mut v = LocalMatrix::identity(field, n);
    let mut v_inv = LocalMatrix::identity(field, n);
    let mut exponents = Vec::new();

    for t in 0..m.min(n) {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if let Some(val) = d.get(i, j).valuation() {
                    if best.is_none_or(|(b, _, _)| val < b) {
                        best = Some((val, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };

        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        let (unit, e) = d.get(t, t).unit_part().expect("pivot is nonzero");
        if !unit.is_one() {
            let unit_inv = unit.inverse()?;
            d.scale_row(t, &unit_inv)?;
            u.scale_row(t, &unit_inv)?;
            u_inv.scale_col(t, &unit)?;
        }
        let pivot = LocalScalar::x_pow(field, e as usize);

        for r in t + 1..m {
            if d.get(r, t).is_zero() {
                continue;
            }
            let c = d.get(r, t).div(&pivot)?;
            d.add_row_multiple(r, t, &c.neg())?;
            u.add_row_multiple(r, t, &c.neg())?;
            u_inv.add_col_multiple(t, r, &c)?;
        }
        for j in t + 1..n {
            if d.get(t, j).is_zero() {
                continue;
            }
            let c = d.get(t, j).div(&pivot)?;
            d.add_col_multiple(j, t, &c.neg())?;
            v.add_col_multiple(j, t, &c.neg())?;
            v_inv.add_row_multiple(t, j, &c)?;
        }
        exponents.push(e);
    }

    Ok(SnfResult {
        u,
        u_inv,
        d,
        v,
        v_inv,
        exponents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn check(a: &LocalMatrix, expected: &[u32]) -> SnfResult {
        let r = snf(a).unwrap();
        assert_eq!(r.exponents, expected);
        let uav = r.u.mul(a).unwrap().mul(&r.v).unwrap();
        assert_eq!(uav, r.d);
        assert!(r.u.mul(&r.u_inv).unwrap().is_identity());
        assert!(r.v.mul(&r.v_inv).unwrap().is_identity());
        assert!(r.u.det().unwrap().is_unit());
        assert!(r.v.det().unwrap().is_unit());
        r
    }

    #[test]
    fn diagonal_input_is_fixed() {
        let a = LocalMatrix::diag_x_powers(Q, &[1, 2]);
        let r = check(&a, &[1, 2]);
        assert!(r.u.is_identity() && r.v.is_identity());
    }

    #[test]
    fn unit_pivot_example() {
        // [[x, 1], [0, x^2]]: the unit entry becomes the first pivot.
        let a = LocalMatrix::from_int_polys(Q, &[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]);
        let r = check(&a, &[0, 3]);
        assert_eq!(r.d, LocalMatrix::diag_x_powers(Q, &[0, 3]));
    }

    #[test]
    fn zero_and_empty() {
        check(&LocalMatrix::zeros(Q, 2, 2), &[]);
        check(&LocalMatrix::zeros(Q, 0, 3), &[]);
        check(&LocalMatrix::zeros(Q, 3, 0), &[]);
    }

    #[test]
    fn unit_parts_are_stripped() {
        // diag(2x(1+x), 3) over Q
        let a = LocalMatrix::from_int_polys(Q, &[vec![&[0, 2, 2], &[0]], vec![&[0], &[3]]]);
        let r = check(&a, &[0, 1]);
        assert_eq!(r.d, LocalMatrix::diag_x_powers(Q, &[0, 1]));
    }
}
