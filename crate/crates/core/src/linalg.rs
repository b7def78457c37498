//! Exact dense matrices over Q(zeta8) and a sparse incremental row reducer.
//!
//! Pivoting is deterministic (first non-zero column, rows in insertion
//! order), so every derived basis is reproducible.

use crate::scalars::CycScalar;
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycScalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![CycScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = CycScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &CycScalar) -> Matrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = &*x * s;
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(r, c)] += &p;
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self[(r1, c1)];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = &other[(r2, c2)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn trace(&self) -> CycScalar {
        assert_eq!(self.rows, self.cols);
        let mut t = CycScalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn col(&self, c: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![CycScalar::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] += &(a * &v[c]);
            }
        }
        out
    }

    /// Deterministic reduced row echelon form; returns pivot column list.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inv().expect("pivot nonzero");
            for c in col..self.cols {
                self[(row, c)] = &self[(row, c)] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for c in col..self.cols {
                        let sub = &self[(row, c)] * &f;
                        self[(r, c)] -= &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = CycScalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Unsupported("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(n, n, |r, c| aug[(r, n + c)].clone()))
    }

    /// A basis of the right kernel, one column vector per element.
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![CycScalar::zero(); self.cols];
            v[fc] = CycScalar::one();
            for (prow, &pcol) in pivots.iter().enumerate().take(rank) {
                v[pcol] = -&m[(prow, fc)];
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| {
                let cells: Vec<serde_json::Value> =
                    (0..self.cols).map(|c| self[(r, c)].to_json()).collect();
                serde_json::Value::Array(cells)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycScalar;
    fn index(&self, (r, c): (usize, usize)) -> &CycScalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut CycScalar {
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format!("{}", self[(r, c)]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incremental row reducer for large sparse homogeneous systems.
///
/// Rows are fed one at a time as sparse (column, value) lists; at most one
/// reduced row per pivot column is kept, so memory stays O(cols^2) even for
/// systems with very many rows.
pub struct SparseReducer {
    cols: usize,
    // pivot column -> reduced row (normalized so the pivot entry is 1)
    rows: Vec<Option<Vec<(usize, CycScalar)>>>,
    rank: usize,
}

impl SparseReducer {
    pub fn new(cols: usize) -> Self {
        SparseReducer {
            cols,
            rows: vec![None; cols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce `row` against the current pivots; if a remainder survives it
    /// becomes a new pivot row. Returns true if the rank increased.
    pub fn add_row(&mut self, row: Vec<(usize, CycScalar)>) -> bool {
        let mut work: Vec<(usize, CycScalar)> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        work.sort_by_key(|&(c, _)| c);
        loop {
            let Some(&(lead, _)) = work.first() else {
                return false;
            };
            match &self.rows[lead] {
                None => {
                    let inv = work[0].1.inv().expect("lead nonzero");
                    for (_, v) in work.iter_mut() {
                        *v = &*v * &inv;
                    }
                    self.rows[lead] = Some(work);
                    self.rank += 1;
                    return true;
                }
                Some(pivot_row) => {
                    let factor = work[0].1.clone();
                    work = sparse_axpy(&work, pivot_row, &factor);
                }
            }
        }
    }

    /// Basis of the solution space of the accumulated homogeneous system.
    pub fn kernel_basis(&self) -> Vec<Vec<CycScalar>> {
        // Back-substitute to full RREF first.
        let mut reduced: Vec<Option<Vec<(usize, CycScalar)>>> = self.rows.clone();
        for c in (0..self.cols).rev() {
            let Some(row) = reduced[c].clone() else {
                continue;
            };
            let mut acc = row;
            // eliminate later pivots from this row
            while let Some((col, factor)) = acc
                .iter()
                .skip(1)
                .find(|(col, _)| reduced[*col].is_some())
                .map(|(col, val)| (*col, val.clone()))
            {
                let prow = reduced[col].clone().unwrap();
                acc = sparse_axpy(&acc, &prow, &factor);
            }
            reduced[c] = Some(acc);
        }
        let pivot_cols: Vec<usize> = (0..self.cols).filter(|&c| reduced[c].is_some()).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if reduced[free].is_some() {
                continue;
            }
            let mut v = vec![CycScalar::zero(); self.cols];
            v[free] = CycScalar::one();
            for &p in &pivot_cols {
                let row = reduced[p].as_ref().unwrap();
                if let Some((_, val)) = row.iter().find(|(c, _)| *c == free) {
                    v[p] = -val;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// work - factor * pivot_row, dropping the cancelled lead entry.
fn sparse_axpy(
    work: &[(usize, CycScalar)],
    pivot: &[(usize, CycScalar)],
    factor: &CycScalar,
) -> Vec<(usize, CycScalar)> {
    let mut out = Vec::with_capacity(work.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < work.len() || j < pivot.len() {
        if j >= pivot.len() || (i < work.len() && work[i].0 < pivot[j].0) {
            out.push(work[i].clone());
            i += 1;
        } else if i >= work.len() || pivot[j].0 < work[i].0 {
            let v = -&(&pivot[j].1 * factor);
            if !v.is_zero() {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = &work[i].1 - &(&pivot[j].1 * factor);
            if !v.is_zero() {
                out.push((work[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    #[test]
    fn rref_and_rank() {
        let mut m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(1), s(0), s(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_singular_map() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2), s(3)], vec![s(0), s(1), s(1)]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![vec![s(1), CycScalar::i()], vec![s(0), s(2)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn sparse_reducer_matches_dense_kernel() {
        let rows = vec![
            vec![(0, s(1)), (1, s(2)), (3, s(1))],
            vec![(1, s(1)), (2, s(1))],
            vec![(0, s(1)), (1, s(1)), (2, -s(1)), (3, s(1))],
        ];
        let mut red = SparseReducer::new(4);
        for r in rows.clone() {
            red.add_row(r);
        }
        let dense = Matrix::from_fn(3, 4, |r, c| {
            rows[r]
                .iter()
                .find(|(col, _)| *col == c)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(CycScalar::zero)
        });
        let k1 = red.kernel_basis();
        let k2 = dense.kernel();
        assert_eq!(k1.len(), k2.len());
        for v in &k1 {
            assert!(dense.apply(v).iter().all(|x| x.is_zero()));
        }
    }
}
