//! Dense matrices over GF(p) and the Gaussian elimination routines used on
//! leading and constant coefficient matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};

#[derive(Clone, PartialEq, Eq)]
pub struct ConstMat {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl ConstMat {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        ConstMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = ConstMat::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing modulo `p`.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| p.reduce(v)).collect();
        Ok(ConstMat { p, rows: r, cols: c, data })
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v % self.p.value();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> ConstMat {
        let mut t = ConstMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ConstMat) -> Result<ConstMat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.p;
        let mut out = ConstMat::zeros(p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = p.add(out.data[idx], p.mul(a, rhs.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &ConstMat) -> Result<ConstMat> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = ConstMat::zeros(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn select_cols(&self, idx: &[usize]) -> ConstMat {
        let mut out = ConstMat::zeros(self.p, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.set(i, k, self.get(i, j));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row-echelon elimination in place; returns (rank, determinant sign and
    /// pivot product) with pivots chosen as the first nonzero entry scanning
    /// rows from the lowest index.
    fn eliminate(&mut self) -> (usize, FieldElement) {
        let p = self.p;
        let mut rank = 0;
        let mut det = 1;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                det = 0;
                continue;
            };
            if piv != rank {
                self.swap_rows(piv, rank);
                det = p.neg(det);
            }
            let pv = self.get(rank, col);
            det = p.mul(det, pv);
            let inv = p.inv(pv).expect("nonzero pivot");
            for r in rank + 1..self.rows {
                let f = p.mul(self.get(r, col), inv);
                if f == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = p.sub(self.get(r, c), p.mul(f, self.get(rank, c)));
                    self.set(r, c, v);
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn det(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(1);
        }
        let (rank, det) = self.clone().eliminate();
        Ok(if rank < self.rows { 0 } else { det })
    }

    /// Gauss–Jordan inverse.
    pub fn inv(&self) -> Result<ConstMat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let p = self.p;
        let mut aug = self.hstack(&ConstMat::identity(p, n))?;
        for col in 0..n {
            let piv = (col..n).find(|&r| aug.get(r, col) != 0).ok_or(Error::Singular)?;
            aug.swap_rows(piv, col);
            let inv = p.inv(aug.get(col, col))?;
            for c in 0..2 * n {
                let v = p.mul(aug.get(col, c), inv);
                aug.set(col, c, v);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = aug.get(r, col);
                if f == 0 {
                    continue;
                }
                for c in 0..2 * n {
                    let v = p.sub(aug.get(r, c), p.mul(f, aug.get(col, c)));
                    aug.set(r, c, v);
                }
            }
        }
        Ok(aug.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Column transform `T` (nonsingular, `cols x cols`) carrying `self` to
    /// reduced column echelon form, together with the pivot count.
    ///
    /// For a full row rank `m x n` input this gives `self * T = [I_m | 0]`.
    pub fn column_echelon_transform(&self) -> (ConstMat, usize) {
        let p = self.p;
        let n = self.cols;
        let mut work = self.clone();
        let mut t = ConstMat::identity(p, n);
        let mut rank = 0;
        let col_op = |m: &mut ConstMat, dst: usize, src: usize, f: FieldElement| {
            for r in 0..m.rows {
                let v = p.sub(m.get(r, dst), p.mul(f, m.get(r, src)));
                m.set(r, dst, v);
            }
        };
        let col_swap = |m: &mut ConstMat, a: usize, b: usize| {
            for r in 0..m.rows {
                let (va, vb) = (m.get(r, a), m.get(r, b));
                m.set(r, a, vb);
                m.set(r, b, va);
            }
        };
        let col_scale = |m: &mut ConstMat, a: usize, f: FieldElement| {
            for r in 0..m.rows {
                let v = p.mul(m.get(r, a), f);
                m.set(r, a, v);
            }
        };
        for row in 0..work.rows {
            if rank == n {
                break;
            }
            let Some(piv) = (rank..n).find(|&c| work.get(row, c) != 0) else {
                continue;
            };
            col_swap(&mut work, piv, rank);
            col_swap(&mut t, piv, rank);
            let inv = p.inv(work.get(row, rank)).expect("nonzero pivot");
            col_scale(&mut work, rank, inv);
            col_scale(&mut t, rank, inv);
            for c in 0..n {
                if c == rank {
                    continue;
                }
                let f = work.get(row, c);
                if f != 0 {
                    col_op(&mut work, c, rank, f);
                    col_op(&mut t, c, rank, f);
                }
            }
            rank += 1;
        }
        (t, rank)
    }
}

/// Nonsingular completion of a constant kernel basis.
///
/// Given `ur` (`n x k`, rank `k`) and `vu` (`m x n`, `k + m = n`), returns
/// `ul` (`n x m`) such that `[ul | ur]` is nonsingular. The first `m` columns
/// of the transform taking `vu` to reduced column echelon form are used; when
/// `vu` is unrelated to `ur` and those columns do not complete it, unit
/// vectors outside the row echelon pivots of `ur` are used instead.
pub fn completion(ur: &ConstMat, vu: &ConstMat) -> Result<ConstMat> {
    let n = ur.rows();
    let k = ur.cols();
    let m = vu.rows();
    if vu.cols() != n || k + m != n {
        return Err(Error::DimensionMismatch(format!(
            "completion of {}x{} kernel with {}x{} right factor",
            n,
            k,
            vu.rows(),
            vu.cols()
        )));
    }
    if ur.rank() < k {
        return Err(Error::Structural("constant kernel basis is rank deficient".into()));
    }
    let (t, rank) = vu.column_echelon_transform();
    if rank == m {
        let ul = t.select_cols(&(0..m).collect::<Vec<_>>());
        if ul.hstack(ur)?.det()? != 0 {
            return Ok(ul);
        }
    }
    unit_completion(ur)
}

/// Completes `ur` with the unit vectors `e_i` for the rows `i` that are not
/// pivots of a row echelon form of `ur^T`.
fn unit_completion(ur: &ConstMat) -> Result<ConstMat> {
    let p = ur.modulus();
    let n = ur.rows();
    let k = ur.cols();
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis = ur.clone();
    for i in 0..n {
        if chosen.len() == n - k {
            break;
        }
        let mut e = ConstMat::zeros(p, n, 1);
        e.set(i, 0, 1);
        let cand = basis.hstack(&e)?;
        if cand.rank() == cand.cols() {
            basis = cand;
            chosen.push(i);
        }
    }
    if chosen.len() != n - k {
        return Err(Error::Structural("could not complete the kernel basis".into()));
    }
    let mut ul = ConstMat::zeros(p, n, n - k);
    for (c, &i) in chosen.iter().enumerate() {
        ul.set(i, c, 1);
    }
    Ok(ul)
}

impl fmt::Debug for ConstMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ConstMat {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
