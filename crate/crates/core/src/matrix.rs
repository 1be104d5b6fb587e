//! Polynomial matrices and shifted degrees.
//!
//! For a shift `s` the `s`-column degree of a column `p` is
//! `max_i (deg p_i + s_i)`; the shifted row degree is defined symmetrically.
//! Shifts are plain integer tuples and are applied arithmetically, the
//! diagonal matrix `x^s` is never formed.

use std::fmt;
use std::ops::Index;

use crate::constmat::ConstMat;
use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::poly::{Poly, NEG_INF};

/// Integer degree shift; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Shift(Vec<i64>);

impl Shift {
    pub fn new(v: Vec<i64>) -> Self {
        Shift(v)
    }

    pub fn zeros(n: usize) -> Self {
        Shift(vec![0; n])
    }

    pub fn uniform(n: usize, v: i64) -> Self {
        Shift(vec![v; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn neg(&self) -> Shift {
        Shift(self.0.iter().map(|v| -v).collect())
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.iter().copied().min()
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::ShiftLength { expected: n, found: self.0.len() });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Shift {
    fn from(v: Vec<i64>) -> Self {
        Shift(v)
    }
}

impl Index<usize> for Shift {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

/// An `m x n` matrix of polynomials over a common prime field.
///
/// Zero dimensions are allowed so that empty kernel bases can be represented.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    p: Prime,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        PolyMat { p, rows, cols, entries: vec![Poly::zero(p); rows * cols] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = PolyMat::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(p));
        }
        m
    }

    /// Diagonal matrix from polynomial entries.
    pub fn diagonal(p: Prime, diag: &[Poly]) -> Self {
        let mut m = PolyMat::zeros(p, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix from rows of polynomials; all must share the modulus `p`.
    pub fn from_rows(p: Prime, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|e| e.modulus() != p) {
            return Err(Error::ModulusMismatch(p.value(), bad.modulus().value()));
        }
        Ok(PolyMat { p, rows: r, cols: c, entries })
    }

    /// Builds a matrix from rows of signed ascending coefficient lists.
    pub fn from_coeff_rows(p: Prime, rows: &[Vec<Vec<i64>>]) -> Result<Self> {
        let polys = rows
            .iter()
            .map(|row| row.iter().map(|c| Poly::from_signed(p, c)).collect())
            .collect();
        PolyMat::from_rows(p, polys)
    }

    /// Lifts a constant matrix.
    pub fn from_const(m: &ConstMat) -> Self {
        let p = m.modulus();
        let mut out = PolyMat::zeros(p, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Poly::constant(p, m.get(i, j)));
            }
        }
        out
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        debug_assert_eq!(v.modulus(), self.p);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Maximal entry degree ([`NEG_INF`] for the zero matrix).
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(Poly::degree).max().unwrap_or(NEG_INF)
    }

    fn check_same_field(&self, other: &PolyMat) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.value(), other.p.value()));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &PolyMat) -> Result<PolyMat> {
        self.check_same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = PolyMat::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.get_mut(i, j).add_scaled_shifted(1, 0, &prod);
                }
            }
        }
        Ok(out)
    }

    /// Product with a constant matrix on the right.
    pub fn mul_const(&self, rhs: &ConstMat) -> Result<PolyMat> {
        if self.cols != rhs.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times constant {}x{}",
                self.rows,
                self.cols,
                rhs.rows(),
                rhs.cols()
            )));
        }
        let mut out = PolyMat::zeros(self.p, self.rows, rhs.cols());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols() {
                    let c = rhs.get(k, j);
                    if c != 0 {
                        out.get_mut(i, j).add_scaled_shifted(c, 0, a);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &PolyMat) -> Result<PolyMat> {
        self.check_same_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("sum of differently sized matrices".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(PolyMat { p: self.p, rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: FieldElement) -> PolyMat {
        PolyMat {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMat {
        let mut t = PolyMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> PolyMat {
        let mut out = PolyMat::zeros(self.p, idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> PolyMat {
        let mut out = PolyMat::zeros(self.p, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                out.set(i, c, self.get(i, j).clone());
            }
        }
        out
    }

    /// Contiguous block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> PolyMat {
        let rows: Vec<usize> = (r0..r1).collect();
        let cols: Vec<usize> = (c0..c1).collect();
        self.select_rows(&rows).select_cols(&cols)
    }

    pub fn hstack(&self, rhs: &PolyMat) -> Result<PolyMat> {
        self.check_same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = PolyMat::zeros(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, rhs: &PolyMat) -> Result<PolyMat> {
        Ok(self.transpose().hstack(&rhs.transpose())?.transpose())
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Column-major copy of all columns.
    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Builds an `rows x cols.len()` matrix from columns.
    pub fn from_columns(p: Prime, rows: usize, cols: &[Vec<Poly>]) -> PolyMat {
        let mut out = PolyMat::zeros(p, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, e) in col.iter().enumerate() {
                out.set(i, j, e.clone());
            }
        }
        out
    }

    /// Column degrees (zero columns give [`NEG_INF`]).
    pub fn cdeg(&self) -> Vec<i64> {
        self.cdeg_shifted(&Shift::zeros(self.rows)).expect("length matches")
    }

    /// Row degrees (zero rows give [`NEG_INF`]).
    pub fn rdeg(&self) -> Vec<i64> {
        self.rdeg_shifted(&Shift::zeros(self.cols)).expect("length matches")
    }

    /// `s`-column degrees, where `s` has one entry per row.
    pub fn cdeg_shifted(&self, s: &Shift) -> Result<Vec<i64>> {
        s.check_len(self.rows)?;
        Ok((0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .filter(|&i| !self.get(i, j).is_zero())
                    .map(|i| self.get(i, j).degree() + s[i])
                    .max()
                    .unwrap_or(NEG_INF)
            })
            .collect())
    }

    /// `s`-row degrees, where `s` has one entry per column.
    pub fn rdeg_shifted(&self, s: &Shift) -> Result<Vec<i64>> {
        s.check_len(self.cols)?;
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self.get(i, j).is_zero())
                    .map(|j| self.get(i, j).degree() + s[j])
                    .max()
                    .unwrap_or(NEG_INF)
            })
            .collect())
    }

    /// `s`-leading column coefficient matrix: entry `(i, j)` is the coefficient
    /// of `x^(d_j - s_i)` in entry `(i, j)`, with `d` the `s`-column degrees.
    /// Zero columns give zero columns.
    pub fn leading_matrix(&self, s: &Shift) -> Result<ConstMat> {
        let d = self.cdeg_shifted(s)?;
        let mut lm = ConstMat::zeros(self.p, self.rows, self.cols);
        for j in 0..self.cols {
            if d[j] == NEG_INF {
                continue;
            }
            for i in 0..self.rows {
                lm.set(i, j, self.get(i, j).coeff_at(d[j] - s[i]));
            }
        }
        Ok(lm)
    }

    /// True if the `s`-leading matrix has full column rank.
    pub fn is_column_reduced(&self, s: &Shift) -> Result<bool> {
        Ok(self.leading_matrix(s)?.rank() == self.cols)
    }

    /// Evaluation at `x = 0`.
    pub fn constant(&self) -> ConstMat {
        let mut c = ConstMat::zeros(self.p, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                c.set(i, j, self.get(i, j).coeff(0));
            }
        }
        c
    }

    /// Multiplies row `i` by `x^k`.
    pub fn shift_row(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            let e = self.get(i, j).shl(k);
            self.set(i, j, e);
        }
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMat {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
