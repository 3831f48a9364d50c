use crate::error::{Error, Result};
use crate::linalg::trunc::{solve_truncated, truncated_exponents};
use crate::linalg::{snf, LocalMatrix, SnfResult};
use crate::poly::Poly;
use crate::scalar::{LocalScalar, OmegaSpec};

/// Solves `A X = B` over S. Returns `None` when no solution exists.
pub fn solve_linear(a: &LocalMatrix, b: &LocalMatrix) -> Result<Option<LocalMatrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    // Split injective: the solution, if any, is determined by an invertible
    // block of rows.
    let rows = a.residue().transpose().pivot_columns();
    if rows.len() == a.cols() {
        let block = select_rows(a, &rows);
        let x = solve_square(&block, &select_rows(b, &rows))?
            .expect("a unit block is invertible over S");
        return Ok((a.mul(&x)? == *b).then_some(x));
    }
    if a.is_square() {
        if let Some(x) = solve_square(a, b)? {
            return Ok(Some(x));
        }
        if !a.det()?.is_zero() {
            return Ok(None);
        }
    }
    let s = snf(a)?;
    solve_with_snf(a, &s, b)
}

fn select_rows(a: &LocalMatrix, rows: &[usize]) -> LocalMatrix {
    LocalMatrix::from_fn(a.field(), rows.len(), a.cols(), |i, j| a.get(rows[i], j).clone())
}

fn select_cols(a: &LocalMatrix, cols: &[usize]) -> LocalMatrix {
    LocalMatrix::from_fn(a.field(), a.rows(), cols.len(), |i, j| a.get(i, cols[j]).clone())
}

/// `s A^-1` for square `A`, or `None` when `A` is singular or the result
/// leaves S.
///
/// Denominators are cleared first, then fraction-free Gauss-Jordan over
/// k[x] gives `d A^-1` with `d = det A` up to sign, so the only gcds are the
/// final per-entry reductions.
pub(crate) fn scaled_inverse(a: &LocalMatrix, s: &LocalScalar) -> Result<Option<LocalMatrix>> {
    let field = a.field();
    let n = a.rows();
    let mut dens: Vec<&Poly> = Vec::new();
    for e in a.entries() {
        if !e.denominator().is_one() && !dens.contains(&e.denominator()) {
            dens.push(e.denominator());
        }
    }
    let common = dens.iter().fold(Poly::one(field), |acc, d| acc.mul(d));
    let w = 2 * n;
    let mut m: Vec<Poly> = vec![Poly::zero(field); n * w];
    for i in 0..n {
        for j in 0..n {
            let e = a.get(i, j);
            m[i * w + j] = if e.denominator().is_one() {
                e.numerator().mul(&common)
            } else {
                e.numerator().mul(&common.div_rem(e.denominator()).0)
            };
        }
        m[i * w + n + i] = Poly::one(field);
    }
    let mut prev = Poly::one(field);
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !m[i * w + k].is_zero())
            .min_by_key(|&i| m[i * w + k].degree());
        let Some(p) = pivot else { return Ok(None) };
        if p != k {
            for j in 0..w {
                m.swap(p * w + j, k * w + j);
            }
        }
        let piv = m[k * w + k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let factor = m[i * w + k].clone();
            for j in (0..w).filter(|&j| j != k) {
                let t = piv.mul(&m[i * w + j]).sub(&factor.mul(&m[k * w + j]));
                m[i * w + j] = if prev.is_one() { t } else { t.div_rem(&prev).0 };
            }
            m[i * w + k] = Poly::zero(field);
        }
        prev = piv;
    }
    // now m = [d I | d A'^-1] with A' = common * A
    let v = prev.valuation().expect("nonzero pivot");
    let unit = prev.shift_down(v).mul(s.denominator());
    let scale = s.numerator().mul(&common);
    let mut out = LocalMatrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let num = scale.mul(&m[i * w + n + j]);
            if num.is_zero() {
                continue;
            }
            if num.valuation().expect("nonzero") < v {
                return Ok(None);
            }
            out.set(i, j, LocalScalar::normalize(num.shift_down(v), unit.clone())?);
        }
    }
    Ok(Some(out))
}

/// Solves `A X = B` for square `A`. Returns `None` when `A` is singular or
/// the (unique) solution over the fraction field does not lie in S.
pub(crate) fn solve_square(a: &LocalMatrix, b: &LocalMatrix) -> Result<Option<LocalMatrix>> {
    let n = a.rows();
    let (mut a, mut b) = (a.clone(), b.clone());
    for col in 0..n {
        let pivot = (col..n)
            .filter_map(|i| a.get(i, col).valuation().map(|v| (v, i)))
            .min();
        let Some((_, p)) = pivot else { return Ok(None) };
        a.swap_rows(col, p);
        b.swap_rows(col, p);
        for r in col + 1..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let q = a.get(r, col).div(a.get(col, col))?.neg();
            a.add_row_multiple(r, col, &q)?;
            b.add_row_multiple(r, col, &q)?;
        }
    }
    let field = a.field();
    let mut x = LocalMatrix::zeros(field, n, b.cols());
    for c in 0..b.cols() {
        for i in (0..n).rev() {
            let mut acc = b.get(i, c).clone();
            for j in i + 1..n {
                if !a.get(i, j).is_zero() {
                    acc = acc.sub(&a.get(i, j).mul(x.get(j, c))?)?;
                }
            }
            match acc.div(a.get(i, i)) {
                Ok(q) => x.set(i, c, q),
                Err(Error::NotDivisible) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Some(x))
}

/// Same as [`solve_linear`] with a precomputed Smith form of `a`.
pub fn solve_with_snf(
    a: &LocalMatrix,
    s: &SnfResult,
    b: &LocalMatrix,
) -> Result<Option<LocalMatrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let field = a.field();
    let y = s.u.mul(b)?;
    let r = s.rank();
    for i in r..y.rows() {
        for j in 0..y.cols() {
            if !y.get(i, j).is_zero() {
                return Ok(None);
            }
        }
    }
    let mut z = LocalMatrix::zeros(field, a.cols(), b.cols());
    for (i, &e) in s.exponents.iter().enumerate() {
        let pivot = LocalScalar::x_pow(field, e as usize);
        for j in 0..b.cols() {
            match y.get(i, j).div(&pivot) {
                Ok(q) => z.set(i, j, q),
                Err(Error::NotDivisible) => return Ok(None),
                Err(other) => return Err(other),
            }
        }
    }
    Ok(Some(s.v.mul(&z)?))
}

/// Solves `A X = B (mod omega)`, returning `X` and the cofactor `K` with
/// `A X + omega K = B` exactly. Solvability is the same as for
/// `[A | omega I] (X; K) = B` over S; the congruence only depends on
/// `k[x]/(x^n)`, where it is solved without fractions.
pub fn solve_mod_omega(
    a: &LocalMatrix,
    b: &LocalMatrix,
    w: &OmegaSpec,
) -> Result<Option<(LocalMatrix, LocalMatrix)>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve_mod_omega: A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let Some(x) = solve_truncated(a, b, w.n() as usize) else {
        return Ok(None);
    };
    let k = b.sub(&a.mul(&x)?)?.div_scalar(w.omega())?;
    Ok(Some((x, k)))
}

/// Invariant-factor exponents of `Coker A` for square injective `A`, with the
/// zero exponents (trivial summands) removed.
pub fn cokernel_exponents(a: &LocalMatrix, _w: &OmegaSpec) -> Result<Vec<u32>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let Some(v) = a.det()?.valuation() else {
        return Err(Error::NotInjective);
    };
    // the exponents sum to v, so they are all visible modulo x^(v+1)
    Ok(truncated_exponents(a, v as usize + 1)
        .into_iter()
        .filter(|&e| e > 0)
        .collect())
}

/// Columns spanning `ker A`; they span a direct summand of the source.
pub fn kernel_basis(a: &LocalMatrix) -> Result<LocalMatrix> {
    let field = a.field();
    let pivots = a.residue().pivot_columns();
    if pivots.len() == a.rows() {
        // surjective: ker A = {(-A_J^-1 A_K y, y)} in the J and K coordinates
        let inv = select_cols(a, &pivots).invert()?;
        let others: Vec<usize> = (0..a.cols()).filter(|j| !pivots.contains(j)).collect();
        let t = inv.mul(&select_cols(a, &others))?.neg();
        let mut k = LocalMatrix::zeros(field, a.cols(), others.len());
        for (c, &j) in others.iter().enumerate() {
            k.set(j, c, LocalScalar::one(field));
            for (r, &p) in pivots.iter().enumerate() {
                k.set(p, c, t.get(r, c).clone());
            }
        }
        return Ok(k);
    }
    let s = snf(a)?;
    Ok(s.v.submatrix(0..a.cols(), s.rank()..a.cols()))
}

/// For `A` whose image is a direct summand (all invariant factors units):
/// returns `(C, R)` where `C` is a cokernel projection (`C A = 0`, `C`
/// surjective) and `R` a right inverse of `C`. `None` if the cokernel has
/// torsion.
pub fn split_cokernel(a: &LocalMatrix) -> Result<Option<(LocalMatrix, LocalMatrix)>> {
    let field = a.field();
    let pivots = a.residue().transpose().pivot_columns();
    if pivots.len() == a.cols() {
        // C = [-A_K A_I^-1 | I] in the I and K row coordinates, R selects K
        let inv = select_rows(a, &pivots).invert()?;
        let others: Vec<usize> = (0..a.rows()).filter(|i| !pivots.contains(i)).collect();
        let t = select_rows(a, &others).mul(&inv)?.neg();
        let mut c = LocalMatrix::zeros(field, others.len(), a.rows());
        let mut right = LocalMatrix::zeros(field, a.rows(), others.len());
        for (r, &i) in others.iter().enumerate() {
            c.set(r, i, LocalScalar::one(field));
            right.set(i, r, LocalScalar::one(field));
            for (q, &p) in pivots.iter().enumerate() {
                c.set(r, p, t.get(r, q).clone());
            }
        }
        return Ok(Some((c, right)));
    }
    let s = snf(a)?;
    if s.exponents.iter().any(|&e| e > 0) {
        return Ok(None);
    }
    let (m, r) = (a.rows(), s.rank());
    let c = s.u.submatrix(r..m, 0..m);
    let right = s.u_inv.submatrix(0..m, r..m);
    Ok(Some((c, right)))
}

/// True when `A` (rows x cols) is surjective over S.
pub fn is_surjective(a: &LocalMatrix) -> Result<bool> {
    // Nakayama: surjective iff surjective modulo x
    Ok(a.residue().rank() == a.rows())
}

/// True when `A` is injective with saturated image, i.e. split injective.
pub fn is_split_injective(a: &LocalMatrix) -> Result<bool> {
    Ok(a.residue().rank() == a.cols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn m(rows: &[Vec<&[i64]>]) -> LocalMatrix {
        LocalMatrix::from_int_polys(Q, rows)
    }

    fn w(n: u32) -> OmegaSpec {
        OmegaSpec::x_pow(Q, n).unwrap()
    }

    #[test]
    fn solve_linear_examples() {
        let x = solve_linear(&m(&[vec![&[0, 1]]]), &m(&[vec![&[0, 0, 0, 1]]]))
            .unwrap()
            .unwrap();
        assert_eq!(x, m(&[vec![&[0, 0, 1]]]));
        assert!(solve_linear(&m(&[vec![&[0, 0, 1]]]), &m(&[vec![&[0, 1]]]))
            .unwrap()
            .is_none());
        let a = m(&[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]);
        // x^2 X2 = 0 forces X2 = 0, then x X1 = 1 has no solution.
        let b = m(&[vec![&[1]], vec![&[0]]]);
        assert!(solve_linear(&a, &b).unwrap().is_none());
        let b = m(&[vec![&[1]], vec![&[0, 0, 1]]]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        assert_eq!(x, m(&[vec![&[0]], vec![&[1]]]));
    }

    #[test]
    fn solve_linear_dimension_mismatch() {
        let a = LocalMatrix::identity(Q, 2);
        let b = LocalMatrix::identity(Q, 3);
        assert!(matches!(
            solve_linear(&a, &b),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn solve_mod_omega_examples() {
        let (x, k) = solve_mod_omega(&m(&[vec![&[0, 1]]]), &m(&[vec![&[0, 0, 1]]]), &w(3))
            .unwrap()
            .unwrap();
        let a = m(&[vec![&[0, 1]]]);
        let lhs = a
            .mul(&x)
            .unwrap()
            .add(&k.scale(w(3).omega()).unwrap())
            .unwrap();
        assert_eq!(lhs, m(&[vec![&[0, 0, 1]]]));
        assert!(solve_mod_omega(&m(&[vec![&[0, 0, 1]]]), &m(&[vec![&[0, 1]]]), &w(2))
            .unwrap()
            .is_none());
        // x X + x K = 1 + x has no solution: 1 is not in (x).
        assert!(solve_mod_omega(&m(&[vec![&[0, 1]]]), &m(&[vec![&[1, 1]]]), &w(1))
            .unwrap()
            .is_none());
    }

    #[test]
    fn cokernel_exponent_examples() {
        let a = LocalMatrix::diag_x_powers(Q, &[1, 2]);
        assert_eq!(cokernel_exponents(&a, &w(3)).unwrap(), vec![1, 2]);
        let b = m(&[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]);
        assert_eq!(cokernel_exponents(&b, &w(3)).unwrap(), vec![3]);
        assert!(cokernel_exponents(&m(&[vec![&[1]]]), &w(3))
            .unwrap()
            .is_empty());
        assert_eq!(
            cokernel_exponents(&LocalMatrix::zeros(Q, 1, 1), &w(3)),
            Err(Error::NotInjective)
        );
    }

    #[test]
    fn kernel_and_cokernel_helpers() {
        // [1, x]: kernel spanned by (-x, 1).
        let a = m(&[vec![&[1], &[0, 1]]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).unwrap().is_zero());
        assert!(is_surjective(&a).unwrap());
        let col = a.transpose();
        assert!(is_split_injective(&col).unwrap());
        let (c, r) = split_cokernel(&col).unwrap().unwrap();
        assert!(c.mul(&col).unwrap().is_zero());
        assert!(c.mul(&r).unwrap().is_identity());
        assert!(split_cokernel(&m(&[vec![&[0, 1]]])).unwrap().is_none());
    }
}
