use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::KMatrix;
use crate::scalar::LocalScalar;

/// Dense matrix over S, row-major. Empty shapes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<LocalScalar>,
}

/// Operations exposed through [`LocalMatrix::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixOp {
    Mul,
    Add,
    Sub,
    DirectSum,
    Transpose,
    Det,
    Invert,
}

/// Result of [`LocalMatrix::apply`]: either a matrix or a scalar (for `Det`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixOrScalar {
    Matrix(LocalMatrix),
    Scalar(LocalScalar),
}

impl LocalMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        LocalMatrix {
            field,
            rows,
            cols,
            data: vec![LocalScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, LocalScalar::one(field));
        }
        m
    }

    pub fn scalar_identity(s: &LocalScalar, n: usize) -> Self {
        Self::diagonal(s.field(), &vec![s.clone(); n])
    }

    pub fn diagonal(field: FieldSpec, entries: &[LocalScalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(field, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// `diag(x^{e_1}, ..., x^{e_r})`.
    pub fn diag_x_powers(field: FieldSpec, exponents: &[u32]) -> Self {
        let entries: Vec<_> = exponents
            .iter()
            .map(|&e| LocalScalar::x_pow(field, e as usize))
            .collect();
        Self::diagonal(field, &entries)
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<LocalScalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<LocalScalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(LocalMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LocalScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        LocalMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from small integer polynomial coefficient lists,
    /// e.g. `[[&[0, 1], &[1]], ...]` for `[[x, 1], ...]`.
    pub fn from_int_polys(field: FieldSpec, rows: &[Vec<&[i64]>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| LocalScalar::from_poly(crate::poly::Poly::from_i64s(field, c)))
                    .collect()
            })
            .collect();
        Self::from_rows(field, rows).expect("well-formed literal")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LocalScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LocalScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[LocalScalar] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<LocalScalar>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(self.with_data(data))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<LocalScalar>) -> Self {
        LocalMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        LocalMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &LocalScalar) -> Result<Self> {
        let data = self.data.iter().map(|e| e.mul(s)).collect::<Result<_>>()?;
        Ok(LocalMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Entrywise exact division by `s`; fails if any quotient leaves S.
    pub fn div_scalar(&self, s: &LocalScalar) -> Result<Self> {
        let data = self.data.iter().map(|e| e.div(s)).collect::<Result<_>>()?;
        Ok(LocalMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(self.field, r + other.rows, c + other.cols, |i, j| {
            if i < r && j < c {
                self.get(i, j).clone()
            } else if i >= r && j >= c {
                other.get(i - r, j - c).clone()
            } else {
                LocalScalar::zero(self.field)
            }
        })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        let c = self.cols;
        Ok(Self::from_fn(self.field, self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j).clone()
            } else {
                other.get(i, j - c).clone()
            }
        }))
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let r = self.rows;
        Ok(Self::from_fn(self.field, r + other.rows, self.cols, |i, j| {
            if i < r {
                self.get(i, j).clone()
            } else {
                other.get(i - r, j).clone()
            }
        }))
    }

    pub fn submatrix(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    /// Column-major vectorization, so that `vec(A X B) = (B^T kron A) vec(X)`.
    pub fn vectorize(&self) -> Self {
        Self::from_fn(self.field, self.rows * self.cols, 1, |k, _| {
            self.get(k % self.rows, k / self.rows).clone()
        })
    }

    /// Inverse of [`vectorize`](Self::vectorize).
    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows, rows * cols);
        Self::from_fn(v.field, rows, cols, |i, j| v.get(j * rows + i, 0).clone())
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.set(i * r2 + k, j * c2 + l, a.mul(other.get(k, l))?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduction modulo `x`, a matrix over k.
    pub fn residue(&self) -> KMatrix {
        let columns: Vec<Vec<_>> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).residue()).collect())
            .collect();
        KMatrix::from_columns(self.field, self.rows, &columns)
    }

    /// Determinant by elimination with minimal-valuation pivots; every
    /// division stays inside S.
    pub fn det(&self) -> Result<LocalScalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = LocalScalar::one(self.field);
        for col in 0..n {
            let pivot = (col..n)
                .filter_map(|r| a.get(r, col).valuation().map(|v| (v, r)))
                .min();
            let Some((_, pr)) = pivot else {
                return Ok(LocalScalar::zero(self.field));
            };
            if pr != col {
                a.swap_rows(pr, col);
                det = det.neg();
            }
            let p = a.get(col, col).clone();
            det = det.mul(&p)?;
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).div(&p)?;
                a.add_row_multiple(r, col, &factor.neg())?;
            }
        }
        Ok(det)
    }

    /// Two-sided inverse over S; requires a unit determinant.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(self.field, n);
        for col in 0..n {
            let pr = (col..n)
                .find(|&r| a.get(r, col).is_unit())
                .ok_or(Error::NotInvertibleOverS)?;
            a.swap_rows(pr, col);
            inv.swap_rows(pr, col);
            let p_inv = a.get(col, col).inverse()?;
            a.scale_row(col, &p_inv)?;
            inv.scale_row(col, &p_inv)?;
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).neg();
                a.add_row_multiple(r, col, &factor)?;
                inv.add_row_multiple(r, col, &factor)?;
            }
        }
        Ok(inv)
    }

    pub fn apply(&self, other: Option<&Self>, op: MatrixOp) -> Result<MatrixOrScalar> {
        let need = |o: Option<&Self>| {
            o.cloned()
                .ok_or_else(|| Error::DimensionMismatch("missing second operand".into()))
        };
        Ok(match op {
            MatrixOp::Mul => MatrixOrScalar::Matrix(self.mul(&need(other)?)?),
            MatrixOp::Add => MatrixOrScalar::Matrix(self.add(&need(other)?)?),
            MatrixOp::Sub => MatrixOrScalar::Matrix(self.sub(&need(other)?)?),
            MatrixOp::DirectSum => MatrixOrScalar::Matrix(self.direct_sum(&need(other)?)),
            MatrixOp::Transpose => MatrixOrScalar::Matrix(self.transpose()),
            MatrixOp::Det => MatrixOrScalar::Scalar(self.det()?),
            MatrixOp::Invert => MatrixOrScalar::Matrix(self.invert()?),
        })
    }

    // Elementary operations used by elimination routines.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, s: &LocalScalar) -> Result<()> {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].mul(s)?;
        }
        Ok(())
    }

    pub(crate) fn scale_col(&mut self, c: usize, s: &LocalScalar) -> Result<()> {
        for i in 0..self.rows {
            let idx = i * self.cols + c;
            self.data[idx] = self.data[idx].mul(s)?;
        }
        Ok(())
    }

    /// `row[target] += factor * row[source]`.
    pub(crate) fn add_row_multiple(
        &mut self,
        target: usize,
        source: usize,
        factor: &LocalScalar,
    ) -> Result<()> {
        if factor.is_zero() {
            return Ok(());
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = s.mul(factor)?;
            let idx = target * self.cols + j;
            self.data[idx] = self.data[idx].add(&v)?;
        }
        Ok(())
    }

    /// `col[target] += factor * col[source]`.
    pub(crate) fn add_col_multiple(
        &mut self,
        target: usize,
        source: usize,
        factor: &LocalScalar,
    ) -> Result<()> {
        if factor.is_zero() {
            return Ok(());
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = s.mul(factor)?;
            let idx = i * self.cols + target;
            self.data[idx] = self.data[idx].add(&v)?;
        }
        Ok(())
    }
}

impl fmt::Display for LocalMatrix {
    /// `[[a, b],[c, d]]`; the empty matrix prints as `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[]");
        }
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn invert_unipotent() {
        let a = LocalMatrix::from_int_polys(Q, &[vec![&[1], &[0, 1]], vec![&[0], &[1]]]);
        let inv = a.invert().unwrap();
        let expect = LocalMatrix::from_int_polys(Q, &[vec![&[1], &[0, -1]], vec![&[0], &[1]]]);
        assert_eq!(inv, expect);
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn det_and_non_invertible() {
        let a = LocalMatrix::from_int_polys(Q, &[vec![&[0, 1], &[1]], vec![&[0], &[0, 0, 1]]]);
        assert_eq!(a.det().unwrap(), LocalScalar::x_pow(Q, 3));
        let x = LocalMatrix::from_int_polys(Q, &[vec![&[0, 1]]]);
        assert_eq!(x.invert(), Err(Error::NotInvertibleOverS));
    }

    #[test]
    fn vectorization_identity() {
        let a = LocalMatrix::from_int_polys(Q, &[vec![&[1], &[0, 1]], vec![&[2], &[3]]]);
        let x = LocalMatrix::from_int_polys(Q, &[vec![&[0, 0, 1], &[5]], vec![&[1, 1], &[0]]]);
        let b = LocalMatrix::from_int_polys(Q, &[vec![&[1], &[7]], vec![&[0, 2], &[1]]]);
        let lhs = a.mul(&x).unwrap().mul(&b).unwrap().vectorize();
        let rhs = b.transpose().kron(&a).unwrap().mul(&x.vectorize()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(LocalMatrix::unvectorize(&x.vectorize(), 2, 2), x);
    }

    #[test]
    fn empty_matrices() {
        let e = LocalMatrix::zeros(Q, 0, 0);
        assert_eq!(e.det().unwrap(), LocalScalar::one(Q));
        assert_eq!(e.invert().unwrap(), e);
        assert_eq!(e.to_string(), "[]");
        let a = LocalMatrix::identity(Q, 2);
        assert_eq!(a.direct_sum(&e), a);
    }
}
