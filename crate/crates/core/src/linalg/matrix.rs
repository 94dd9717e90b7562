use std::fmt;

use super::field::Field;
use crate::error::Error;

/// Dense row-major matrix over a field configuration.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row-echelon form together with its pivot data.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from equally long rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, data).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self, Error> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` to the entry at `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: &F::Elem) {
        let idx = r * self.cols + c;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add_scaled(&out.data[idx], a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add_scaled(&acc, a, b))
            })
            .collect())
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<F>) -> Result<Matrix<F>, Error> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form; the pivot is the topmost row with a nonzero
    /// entry in the leftmost unprocessed column, and each pivot row is scaled to 1.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = f.inv(m.get(pivot_row, col)).expect("nonzero pivot");
            for c in col..m.cols {
                let v = f.mul(m.get(pivot_row, c), &inv);
                m.set(pivot_row, c, v);
            }
            let pivot: Vec<F::Elem> = m.row(pivot_row)[col..].to_vec();
            for r in 0..m.rows {
                if r == pivot_row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = f.neg(m.get(r, col));
                for (offset, p) in pivot.iter().enumerate() {
                    if f.is_zero(p) {
                        continue;
                    }
                    let c = col + offset;
                    let v = f.add_scaled(m.get(r, c), &factor, p);
                    m.set(r, c, v);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        Rref {
            reduced: m,
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminating along the shorter side is cheaper and gives the same rank.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Basis of the right null space, one vector per free column (in
    /// increasing order) with that free variable set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref {
            reduced,
            pivot_cols,
            ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(row, free));
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(out, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Whether `v` is a linear combination of `basis`.
pub fn member_of_span<F: Field>(field: &F, v: &[F::Elem], basis: &[Vec<F::Elem>]) -> Result<bool, Error> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                found: b.len(),
            });
        }
    }
    let base_rank = Matrix::from_rows(field, v.len(), basis.to_vec())?.rank();
    let mut extended = basis.to_vec();
    extended.push(v.to_vec());
    let ext_rank = Matrix::from_rows(field, v.len(), extended)?.rank();
    Ok(ext_rank == base_rank)
}

/// Reduces `v` against the rows of an RREF matrix, zeroing every pivot coordinate.
///
/// The result represents the class of `v` modulo the row space.
pub fn reduce_against_rref<F: Field>(field: &F, v: &mut [F::Elem], rref: &Rref<F>) {
    for (row, &pc) in rref.pivot_cols.iter().enumerate() {
        if field.is_zero(&v[pc]) {
            continue;
        }
        let factor = field.neg(&v[pc]);
        for (c, p) in rref.reduced.row(row).iter().enumerate() {
            if !field.is_zero(p) {
                v[c] = field.add_scaled(&v[c], &factor, p);
            }
        }
    }
}
