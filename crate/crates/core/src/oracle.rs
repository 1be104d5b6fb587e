//! Brute-force reference computations for small matrices.
//!
//! These share no code with the recursive algorithms beyond polynomial
//! arithmetic and are guarded by hard size limits.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::PolyMat;
use crate::poly::Poly;

pub const DET_LIMIT: usize = 8;
pub const HERMITE_LIMIT: usize = 6;
pub const DEGDET_LIMIT: usize = 8;

fn guard(a: &PolyMat, limit: usize) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("square matrix expected".into()));
    }
    if a.rows() > limit {
        return Err(Error::SizeGuard { limit, got: a.rows() });
    }
    Ok(())
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// remaining columns.
pub fn det_oracle(a: &PolyMat) -> Result<Poly> {
    guard(a, DET_LIMIT)?;
    let n = a.rows();
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    Ok(minor(a, 0, (1u32 << n) - 1, &mut memo))
}

fn minor(a: &PolyMat, row: usize, mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
    let p = a.modulus();
    if mask == 0 {
        return Poly::one(p);
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut acc = Poly::zero(p);
    let mut position = 0;
    for j in 0..a.cols() {
        if mask >> j & 1 == 0 {
            continue;
        }
        let e = a.get(row, j);
        if !e.is_zero() {
            let sub = minor(a, row + 1, mask & !(1 << j), memo);
            let term = e * &sub;
            if position % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        position += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Column Hermite form by Euclidean elimination along each row, followed by
/// monic normalization and reduction of the entries left of the diagonal.
pub fn hermite_oracle(a: &PolyMat) -> Result<PolyMat> {
    guard(a, HERMITE_LIMIT)?;
    let n = a.rows();
    let mut cols = a.columns();
    for i in 0..n {
        loop {
            let nonzero: Vec<usize> = (i..n).filter(|&j| !cols[j][i].is_zero()).collect();
            let Some(&piv) = nonzero.iter().min_by_key(|&&j| (cols[j][i].degree(), j)) else {
                return Err(Error::Singular);
            };
            if nonzero.len() == 1 {
                cols.swap(i, piv);
                break;
            }
            let pc = cols[piv].clone();
            for &j in nonzero.iter().filter(|&&j| j != piv) {
                let (q, _) = cols[j][i].divrem(&pc[i])?;
                for (t, s) in cols[j].iter_mut().zip(&pc) {
                    *t = &*t - &(&q * s);
                }
            }
        }
        let (_, lc) = cols[i][i].monic()?;
        let inv = a.modulus().inv(lc)?;
        for e in cols[i].iter_mut() {
            *e = e.scale(inv);
        }
        let pc = cols[i].clone();
        for j in 0..i {
            let (q, _) = cols[j][i].divrem(&pc[i])?;
            for (t, s) in cols[j].iter_mut().zip(&pc) {
                *t = &*t - &(&q * s);
            }
        }
    }
    Ok(PolyMat::from_columns(a.modulus(), n, &cols))
}

/// Generic determinant bound: the maximal sum of entry degrees along a
/// permutation, zero entries counting as degree 0.
pub fn degdet_oracle(a: &PolyMat) -> Result<usize> {
    guard(a, DEGDET_LIMIT)?;
    let n = a.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0;
    permute(&mut perm, 0, &mut |p| {
        let total = p.iter().enumerate().map(|(i, &j)| a.get(i, j).deg_bar()).sum();
        best = best.max(total);
    });
    Ok(best)
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// True when `det W` is a nonzero constant.
pub fn unimodular_check(w: &PolyMat) -> Result<bool> {
    Ok(det_oracle(w)?.degree() == 0)
}

/// True when `A` and `B` have the same column Hermite form.
pub fn equiv_check(a: &PolyMat, b: &PolyMat) -> Result<bool> {
    match (hermite_oracle(a), hermite_oracle(b)) {
        (Ok(ha), Ok(hb)) => Ok(ha == hb),
        (Err(Error::Singular), Err(Error::Singular)) => Err(Error::Singular),
        (Err(Error::Singular), Ok(_)) | (Ok(_), Err(Error::Singular)) => Ok(false),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
