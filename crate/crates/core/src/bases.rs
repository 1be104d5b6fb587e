//! Approximant, kernel and column bases.
//!
//! Approximant bases are computed order by order with a deterministic pivot
//! (smallest shifted degree, then smallest column index). Kernel bases are
//! read off an approximant basis at an order large enough that every
//! low-degree approximant is an exact kernel vector. Column bases come from
//! weak Popov reduction, and right factors from division by a reduced basis.

use crate::constmat::ConstMat;
use crate::error::{Error, Result};
use crate::matrix::{PolyMat, Shift};
use crate::poly::{Poly, NEG_INF};
use crate::reduce::{axpy, column_reduce_tracked, identity_columns, weak_popov, Column};

/// Column basis `b1`, kernel basis `ur` and right factor `vu` of a full row
/// rank matrix `Au`, with `b1 * vu = Au` and `Au * ur = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnBasisExt {
    pub b1: PolyMat,
    pub ur: PolyMat,
    pub vu: PolyMat,
}

/// An `s`-reduced basis of `{ p : F p = 0 mod x^sigma }`.
pub fn approximant_basis(f: &PolyMat, sigma: usize, s: &Shift) -> Result<PolyMat> {
    if s.len() != f.cols() {
        return Err(Error::ShiftLength { expected: f.cols(), found: s.len() });
    }
    let (basis, _) = approximant_columns(f, sigma, s);
    Ok(PolyMat::from_columns(f.modulus(), f.cols(), &basis))
}

/// Returns the basis columns and their nominal shifted degrees.
fn approximant_columns(f: &PolyMat, sigma: usize, s: &Shift) -> (Vec<Column>, Vec<i64>) {
    let p = f.modulus();
    let (m, n) = (f.rows(), f.cols());
    let mut basis = identity_columns(p, n);
    let mut residual: Vec<Column> = f
        .columns()
        .into_iter()
        .map(|c| c.into_iter().map(|e| e.trunc(sigma)).collect())
        .collect();
    let mut deg: Vec<i64> = s.as_slice().to_vec();

    for k in 0..sigma {
        let mut used = vec![false; n];
        for i in 0..m {
            let cand: Vec<usize> =
                (0..n).filter(|&j| !used[j] && residual[j][i].coeff(k) != 0).collect();
            let Some(&piv) = cand.iter().min_by_key(|&&j| (deg[j], j)) else {
                continue;
            };
            let inv = p.inv(residual[piv][i].coeff(k)).expect("nonzero");
            let (pb, pr) = (basis[piv].clone(), residual[piv].clone());
            for &j in cand.iter().filter(|&&j| j != piv) {
                let c = p.mul(residual[j][i].coeff(k), inv);
                axpy(&mut basis[j], c, 0, &pb);
                axpy(&mut residual[j], c, 0, &pr);
            }
            used[piv] = true;
        }
        for j in (0..n).filter(|&j| used[j]) {
            for e in basis[j].iter_mut() {
                e.mul_x_in_place();
            }
            for e in residual[j].iter_mut() {
                e.mul_x_in_place();
                e.truncate_in_place(sigma);
            }
            deg[j] += 1;
        }
    }
    (basis, deg)
}

fn check_shift_bounds(f: &PolyMat, s: &Shift) -> Result<()> {
    if s.len() != f.cols() {
        return Err(Error::ShiftLength { expected: f.cols(), found: s.len() });
    }
    for (j, d) in f.cdeg().into_iter().enumerate() {
        if d != NEG_INF && d > s[j] {
            return Err(Error::InvalidShift(format!(
                "column {j} has degree {d} above its shift {}",
                s[j]
            )));
        }
    }
    Ok(())
}

/// An `s`-minimal kernel basis of `F`, for a shift bounding the column degrees of `F`.
///
/// Fails with [`Error::RankDeficient`] when fewer than `n - m` kernel vectors
/// are found, which happens when `F` does not have full row rank.
pub fn kernel_basis(f: &PolyMat, s: &Shift) -> Result<PolyMat> {
    check_shift_bounds(f, s)?;
    let (m, n) = (f.rows(), f.cols());
    if m > n {
        return Err(Error::DimensionMismatch(format!("kernel of a {m}x{n} matrix")));
    }
    let p = f.modulus();
    let mut sigma = (s.sum() + 1).max(1) as usize;
    let mut found = 0;
    for _ in 0..4 {
        let (basis, _) = approximant_columns(f, sigma, s);
        let mut kernel = Vec::new();
        for col in basis {
            let c = PolyMat::from_columns(p, n, std::slice::from_ref(&col));
            let d = c.cdeg_shifted(s)?[0];
            if d < sigma as i64 && f.mul(&c)?.is_zero() {
                kernel.push(col);
            }
        }
        found = kernel.len();
        if found >= n - m {
            return Ok(PolyMat::from_columns(p, n, &kernel));
        }
        sigma *= 2;
    }
    Err(Error::RankDeficient { expected: n - m, found })
}

/// A column reduced basis of the column module of `A`.
pub fn column_basis(a: &PolyMat) -> PolyMat {
    let mut cols = a.columns();
    weak_popov(&mut cols, &vec![0; a.rows()], None);
    let nonzero: Vec<Column> =
        cols.into_iter().filter(|c| c.iter().any(|e| !e.is_zero())).collect();
    PolyMat::from_columns(a.modulus(), a.rows(), &nonzero)
}

/// Solves `R w = a` for a column reduced square `R` by repeatedly cancelling
/// the leading coefficient vector of `a`.
struct ReducedSolver<'a> {
    r: &'a PolyMat,
    cdeg: Vec<i64>,
    lm_inv: ConstMat,
}

impl<'a> ReducedSolver<'a> {
    fn new(r: &'a PolyMat) -> Result<Self> {
        let zero = Shift::zeros(r.rows());
        let lm_inv = r.leading_matrix(&zero)?.inv()?;
        Ok(ReducedSolver { r, cdeg: r.cdeg(), lm_inv })
    }

    fn solve(&self, a: &[Poly]) -> Result<Column> {
        let p = self.r.modulus();
        let n = self.r.cols();
        let cols = self.r.columns();
        let mut rest = a.to_vec();
        let mut w = vec![Poly::zero(p); n];
        loop {
            let d = rest.iter().map(Poly::degree).max().unwrap_or(NEG_INF);
            if d == NEG_INF {
                return Ok(w);
            }
            let lead: Vec<u64> = rest.iter().map(|e| e.coeff_at(d)).collect();
            for i in 0..n {
                let c = (0..n).fold(0, |acc, k| p.add(acc, p.mul(self.lm_inv.get(i, k), lead[k])));
                if c == 0 {
                    continue;
                }
                let e = d - self.cdeg[i];
                if e < 0 {
                    return Err(Error::NotInColumnModule);
                }
                w[i].add_scaled_shifted(c, e as usize, &Poly::one(p));
                axpy(&mut rest, c, e as usize, &cols[i]);
            }
            debug_assert!(rest.iter().map(Poly::degree).max().unwrap_or(NEG_INF) < d);
        }
    }
}

fn solve_columns(r: &PolyMat, a: &PolyMat) -> Result<PolyMat> {
    let solver = ReducedSolver::new(r)?;
    let cols = a.columns().iter().map(|c| solver.solve(c)).collect::<Result<Vec<_>>>()?;
    Ok(PolyMat::from_columns(a.modulus(), r.cols(), &cols))
}

/// Column basis, kernel basis and right factor of a full row rank `Au`.
///
/// `s` must bound the column degrees of `Au`; it is the shift of the kernel basis.
pub fn column_basis_ext(au: &PolyMat, s: &Shift) -> Result<ColumnBasisExt> {
    check_shift_bounds(au, s)?;
    let (m, n) = (au.rows(), au.cols());
    let b1 = column_basis(au);
    if b1.cols() != m {
        return Err(Error::Singular);
    }
    let ur = match kernel_basis(au, s) {
        Ok(ur) if ur.cols() == n - m => ur,
        Ok(_) | Err(Error::RankDeficient { .. }) => return Err(Error::Singular),
        Err(e) => return Err(e),
    };
    let vu = solve_columns(&b1, au).map_err(|e| match e {
        Error::NotInColumnModule => Error::Structural("column basis does not span".into()),
        other => other,
    })?;
    Ok(ColumnBasisExt { b1, ur, vu })
}

/// The polynomial `V` with `B V = A`, for nonsingular `B`.
///
/// `B` is column reduced with a tracked unimodular transform `W`, the reduced
/// system `(B W) Y = A` is solved by leading-coefficient division and `V = W Y`.
pub fn right_factor(b: &PolyMat, a: &PolyMat) -> Result<PolyMat> {
    if !b.is_square() || b.rows() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right factor of {}x{} by {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let (r, w) = column_reduce_tracked(b, &Shift::zeros(b.rows()))?;
    w.mul(&solve_columns(&r, a)?)
}
