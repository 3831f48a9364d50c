use num_traits::Zero;

use crate::field::{Coeff, FieldSpec};

/// Dense matrix over the residue field k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl KMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        KMatrix {
            field,
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Coeff>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col));
            for j in 0..self.cols {
                let idx = row * self.cols + j;
                self.data[idx] = f.mul(&self.data[idx], &inv);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in 0..self.cols {
                    let src = &self.data[row * self.cols + j];
                    if src.is_zero() {
                        continue;
                    }
                    let v = f.mul(src, &factor);
                    let idx = r * self.cols + j;
                    self.data[idx] = f.sub(&self.data[idx], &v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Indices of a maximal set of linearly independent columns (the first
    /// ones in left-to-right order).
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.clone().rref()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let f = self.field;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Coeff::zero(); self.cols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// A subspace of k^dim given by spanning vectors, kept in echelon form.
#[derive(Clone, Debug)]
pub struct KSpace {
    field: FieldSpec,
    dim: usize,
    basis: Vec<Vec<Coeff>>,
}

impl KSpace {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        KSpace {
            field,
            dim,
            basis: Vec::new(),
        }
    }

    pub fn spanned_by(field: FieldSpec, dim: usize, vectors: &[Vec<Coeff>]) -> Self {
        let mut s = Self::new(field, dim);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the stored basis; the remainder is zero iff `v`
    /// lies in the span.
    fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        let f = self.field;
        for b in &self.basis {
            let lead = b.iter().position(|c| !c.is_zero()).unwrap();
            if v[lead].is_zero() {
                continue;
            }
            let factor = v[lead].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Coeff>) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let r = self.reduce(v);
        let Some(lead) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[lead]);
        let r: Vec<Coeff> = r.iter().map(|c| f.mul(c, &inv)).collect();
        for b in self.basis.iter_mut() {
            if b[lead].is_zero() {
                continue;
            }
            let factor = b[lead].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        self.basis.push(r);
        true
    }

    pub fn basis(&self) -> &[Vec<Coeff>] {
        &self.basis
    }
}
