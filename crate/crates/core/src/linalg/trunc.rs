//! Linear algebra over the chain ring `k[x]/(x^n)`, used for congruences
//! modulo omega. Entries are coefficient vectors of length `n`.

use num_traits::Zero;

use crate::field::{Coeff, FieldSpec};
use crate::linalg::LocalMatrix;
use crate::scalar::LocalScalar;

type Series = Vec<Coeff>;

struct Ring {
    field: FieldSpec,
    n: usize,
}

impl Ring {
    fn zero(&self) -> Series {
        vec![Coeff::zero(); self.n]
    }

    fn one(&self) -> Series {
        let mut s = self.zero();
        if self.n > 0 {
            s[0] = self.field.one();
        }
        s
    }

    fn valuation(&self, a: &Series) -> Option<usize> {
        a.iter().position(|c| !c.is_zero())
    }

    fn mul(&self, a: &Series, b: &Series) -> Series {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(self.n - i) {
                if !bj.is_zero() {
                    out[i + j] = self.field.add(&out[i + j], &self.field.mul(ai, bj));
                }
            }
        }
        out
    }

    /// `a -= q * b`
    fn sub_mul(&self, a: &mut Series, q: &Series, b: &Series) {
        let prod = self.mul(q, b);
        for (x, y) in a.iter_mut().zip(prod) {
            if !y.is_zero() {
                *x = self.field.sub(x, &y);
            }
        }
    }

    fn shift_down(&self, a: &Series, k: usize) -> Series {
        let mut out = self.zero();
        out[..self.n - k].clone_from_slice(&a[k..self.n]);
        out
    }

    /// Inverse of a series with nonzero constant term.
    fn unit_inverse(&self, u: &Series) -> Series {
        let inv0 = self.field.inv(&u[0]);
        let mut out = self.zero();
        out[0] = inv0.clone();
        for k in 1..self.n {
            let mut acc = Coeff::zero();
            for i in 1..=k {
                if !u[i].is_zero() {
                    acc = self.field.add(&acc, &self.field.mul(&u[i], &out[k - i]));
                }
            }
            out[k] = self.field.neg(&self.field.mul(&acc, &inv0));
        }
        out
    }
}

struct Grid {
    rows: usize,
    cols: usize,
    data: Vec<Series>,
}

impl Grid {
    fn from_local(m: &LocalMatrix, n: usize) -> Self {
        Grid {
            rows: m.rows(),
            cols: m.cols(),
            data: m.entries().iter().map(|e| e.truncated_coeffs(n)).collect(),
        }
    }

    fn identity(ring: &Ring, k: usize) -> Self {
        let mut data = vec![ring.zero(); k * k];
        for i in 0..k {
            data[i * k + i] = ring.one();
        }
        Grid {
            rows: k,
            cols: k,
            data,
        }
    }

    fn at(&self, i: usize, j: usize) -> &Series {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn scale_row(&mut self, ring: &Ring, r: usize, s: &Series) {
        for j in 0..self.cols {
            let v = ring.mul(&self.data[r * self.cols + j], s);
            self.data[r * self.cols + j] = v;
        }
    }

    /// `row[dst] -= q * row[src]`
    fn row_op(&mut self, ring: &Ring, dst: usize, src: usize, q: &Series) {
        for j in 0..self.cols {
            let b = self.data[src * self.cols + j].clone();
            ring.sub_mul(&mut self.data[dst * self.cols + j], q, &b);
        }
    }

    /// `col[dst] -= q * col[src]`
    fn col_op(&mut self, ring: &Ring, dst: usize, src: usize, q: &Series) {
        for i in 0..self.rows {
            let b = self.data[i * self.cols + src].clone();
            ring.sub_mul(&mut self.data[i * self.cols + dst], q, &b);
        }
    }
}

/// Valuations of the invariant factors of `A` that are nonzero modulo
/// `x^n`, in ascending order. Entries equal to `n` or more are not seen.
pub fn truncated_exponents(a: &LocalMatrix, n: usize) -> Vec<u32> {
    let ring = Ring { field: a.field(), n };
    let mut am = Grid::from_local(a, n);
    let mut out = Vec::new();
    for t in 0..a.rows().min(a.cols()) {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..am.rows {
            for j in t..am.cols {
                if let Some(val) = ring.valuation(am.at(i, j)) {
                    if best.is_none_or(|(_, _, bv)| val < bv) {
                        best = Some((i, j, val));
                    }
                }
            }
        }
        let Some((i, j, val)) = best else { break };
        am.swap_rows(t, i);
        am.swap_cols(t, j);
        let unit = ring.shift_down(am.at(t, t), val);
        let inv = ring.unit_inverse(&unit);
        am.scale_row(&ring, t, &inv);
        for r in t + 1..am.rows {
            if ring.valuation(am.at(r, t)).is_some() {
                let q = ring.shift_down(am.at(r, t), val);
                am.row_op(&ring, r, t, &q);
            }
        }
        // the column operations only touch row t past this point
        for c in t + 1..am.cols {
            am.data[t * am.cols + c] = ring.zero();
        }
        out.push(val as u32);
    }
    out
}

/// Finds `X` with `A X = B (mod x^n)`, returned with polynomial entries of
/// degree `< n`, or `None` when the congruence has no solution.
///
/// Diagonalizes `A` over `k[x]/(x^n)` by row and column operations, applying
/// the row operations to `B` and accumulating the column operations.
pub fn solve_truncated(a: &LocalMatrix, b: &LocalMatrix, n: usize) -> Option<LocalMatrix> {
    let field = a.field();
    let ring = Ring { field, n };
    let mut am = Grid::from_local(a, n);
    let mut bm = Grid::from_local(b, n);
    let mut v = Grid::identity(&ring, a.cols());
    let mut pivots = Vec::new();
    for t in 0..a.rows().min(a.cols()) {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..am.rows {
            for j in t..am.cols {
                if let Some(val) = ring.valuation(am.at(i, j)) {
                    if best.is_none_or(|(_, _, bv)| val < bv) {
                        best = Some((i, j, val));
                    }
                }
            }
        }
        let Some((i, j, val)) = best else { break };
        am.swap_rows(t, i);
        bm.swap_rows(t, i);
        am.swap_cols(t, j);
        v.swap_cols(t, j);
        let unit = ring.shift_down(am.at(t, t), val);
        let inv = ring.unit_inverse(&unit);
        am.scale_row(&ring, t, &inv);
        bm.scale_row(&ring, t, &inv);
        for r in t + 1..am.rows {
            if ring.valuation(am.at(r, t)).is_some() {
                let q = ring.shift_down(am.at(r, t), val);
                am.row_op(&ring, r, t, &q);
                bm.row_op(&ring, r, t, &q);
            }
        }
        for c in t + 1..am.cols {
            if ring.valuation(am.at(t, c)).is_some() {
                let q = ring.shift_down(am.at(t, c), val);
                am.col_op(&ring, c, t, &q);
                v.col_op(&ring, c, t, &q);
            }
        }
        pivots.push(val);
    }
    // D z = y with D = diag(x^pivots)
    let k = bm.cols;
    let mut z = vec![ring.zero(); a.cols() * k];
    for r in 0..bm.rows {
        for c in 0..k {
            let y = bm.at(r, c);
            match (pivots.get(r), ring.valuation(y)) {
                (_, None) => {}
                (Some(&p), Some(vy)) if vy >= p => z[r * k + c] = ring.shift_down(y, p),
                _ => return None,
            }
        }
    }
    let x = LocalMatrix::from_fn(field, a.cols(), k, |i, c| {
        let mut acc = ring.zero();
        for (l, zl) in (0..a.cols()).map(|l| (l, &z[l * k + c])) {
            if ring.valuation(zl).is_some() {
                let prod = ring.mul(v.at(i, l), zl);
                for (s, p) in acc.iter_mut().zip(prod) {
                    *s = field.add(s, &p);
                }
            }
        }
        LocalScalar::from_coeffs(field, acc)
    });
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn m(rows: &[Vec<&[i64]>]) -> LocalMatrix {
        LocalMatrix::from_int_polys(Q, rows)
    }

    #[test]
    fn congruences() {
        // x X = x^2 mod x^3
        let x = solve_truncated(&m(&[vec![&[0, 1]]]), &m(&[vec![&[0, 0, 1]]]), 3).unwrap();
        assert_eq!(x, m(&[vec![&[0, 1]]]));
        // x^2 X = x mod x^2 has no solution
        assert!(solve_truncated(&m(&[vec![&[0, 0, 1]]]), &m(&[vec![&[0, 1]]]), 2).is_none());
        // x^2 X = x^3 mod x^2: anything works
        assert!(solve_truncated(&m(&[vec![&[0, 0, 1]]]), &m(&[vec![&[0, 0, 0, 1]]]), 2).is_some());
    }

    #[test]
    fn exponents_modulo_a_power() {
        // diag(1, x, x^3) disguised by a row operation
        let a = m(&[
            vec![&[1], &[0, 1], &[0]],
            vec![&[0], &[0, 1], &[0]],
            vec![&[2], &[0], &[0, 0, 0, 1]],
        ]);
        assert_eq!(truncated_exponents(&a, 5), vec![0, 1, 3]);
        assert_eq!(truncated_exponents(&a, 3), vec![0, 1]);
    }

    #[test]
    fn unit_pivots_with_denominators() {
        let f = FieldSpec::prime(5).unwrap();
        let a = LocalMatrix::from_int_polys(f, &[vec![&[1, 1], &[0, 1]], vec![&[2], &[3, 0, 1]]]);
        let b = LocalMatrix::from_int_polys(f, &[vec![&[1]], vec![&[0, 1]]]);
        let x = solve_truncated(&a, &b, 4).unwrap();
        let r = a.mul(&x).unwrap().sub(&b).unwrap();
        for e in r.entries() {
            assert!(e.valuation().is_none_or(|v| v >= 4));
        }
    }
}
