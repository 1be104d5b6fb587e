//! Column Hermite normal form.
//!
//! The diagonal is obtained by recursive block triangularization, the full
//! form by one shifted column reduction of the row partial linearization
//! with respect to the known diagonal degrees.

use crate::bases::{column_basis, kernel_basis};
use crate::error::{Error, Result};
use crate::linearize::{compress, parlin_rows, smooth_for_hermite};
use crate::matrix::{PolyMat, Shift};
use crate::poly::{Poly, NEG_INF};
use crate::reduce::{column_reduce, popov_normalize};

fn require_square(a: &PolyMat) -> Result<()> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "nonempty square matrix expected, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// Monic diagonal entries of the Hermite form of a nonsingular matrix.
pub fn hermite_diagonal(a: &PolyMat) -> Result<Vec<Poly>> {
    require_square(a)?;
    diagonal_rec(a)
}

fn diagonal_rec(a: &PolyMat) -> Result<Vec<Poly>> {
    let n = a.rows();
    if n == 1 {
        let e = a.get(0, 0);
        if e.is_zero() {
            return Err(Error::Singular);
        }
        return Ok(vec![e.monic()?.0]);
    }
    let s = a.cdeg();
    if s.contains(&NEG_INF) {
        return Err(Error::Singular);
    }
    let m = n.div_ceil(2);
    let au = a.block(0, m, 0, n);
    let ad = a.block(m, n, 0, n);
    let b1 = column_basis(&au);
    if b1.cols() != m {
        return Err(Error::Singular);
    }
    let kernel = match kernel_basis(&au, &Shift::new(s)) {
        Ok(k) if k.cols() == n - m => k,
        Ok(_) | Err(Error::RankDeficient { .. }) => return Err(Error::Singular),
        Err(e) => return Err(e),
    };
    let b2 = ad.mul(&kernel)?;
    let mut diag = diagonal_rec(&b1)?;
    diag.extend(diagonal_rec(&b2)?);
    Ok(diag)
}

/// Hermite form of `A` given the degrees `delta` of its diagonal entries.
///
/// Fails with [`Error::WrongDegrees`] when `delta` is not the diagonal degree
/// tuple of the Hermite form of `A`.
pub fn hermite_known_degree(a: &PolyMat, delta: &[usize]) -> Result<PolyMat> {
    require_square(a)?;
    let (lin, info) = parlin_rows(a, delta)?;
    let db = info.delta_bar as i64;
    let shift = Shift::new(info.sd.as_slice().iter().map(|&v| db - v).collect());
    let reduced = column_reduce(&lin, &shift)?;
    let normalized = popov_normalize(&reduced, &info.sd.neg()).map_err(|e| match e {
        Error::Precondition(_) => Error::WrongDegrees,
        other => other,
    })?;
    let h = compress(&normalized, &info)?;
    let degrees_match =
        (0..h.rows()).all(|i| h.get(i, i).deg().is_some_and(|d| d == delta[i]));
    if !degrees_match || !is_hermite(&h) {
        return Err(Error::WrongDegrees);
    }
    Ok(h)
}

/// Column Hermite form of a nonsingular matrix.
///
/// The input is degree-smoothed first; the Hermite form of the smoothed and
/// block-rotated matrix contains the wanted form as its trailing block.
pub fn hermite(a: &PolyMat) -> Result<PolyMat> {
    require_square(a)?;
    let (b, info) = smooth_for_hermite(a)?;
    let delta: Vec<usize> = hermite_diagonal(&b)?
        .iter()
        .map(|d| d.deg().expect("nonzero diagonal"))
        .collect();
    let hb = hermite_known_degree(&b, &delta)?;
    let off = info.m - info.n;
    Ok(hb.block(off, info.m, off, info.m))
}

/// Lower triangular with monic diagonal entries of degree strictly larger
/// than the other entries of their row.
pub fn is_hermite(h: &PolyMat) -> bool {
    if !h.is_square() {
        return false;
    }
    (0..h.rows()).all(|i| {
        let d = h.get(i, i);
        !d.is_zero()
            && d.is_monic()
            && (i + 1..h.cols()).all(|j| h.get(i, j).is_zero())
            && (0..i).all(|j| h.get(i, j).degree() < d.degree())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn sample_diagonal() {
        assert_eq!(hermite_diagonal(&samples::hermite_input()).unwrap(), samples::hermite_diagonal());
    }

    #[test]
    fn single_entry_diagonal() {
        let p = samples::z7();
        let a = PolyMat::from_rows(p, vec![vec![samples::poly(&[5, 2])]]).unwrap();
        assert_eq!(hermite_diagonal(&a).unwrap(), vec![samples::poly(&[6, 1])]);
    }

    #[test]
    fn sample_known_degree() {
        let h = hermite_known_degree(&samples::hermite_input(), &[0, 1, 9]).unwrap();
        assert_eq!(h, samples::hermite_output());
        let again = hermite_known_degree(&samples::hermite_output(), &[0, 1, 9]).unwrap();
        assert_eq!(again, samples::hermite_output());
    }

    #[test]
    fn wrong_degrees_are_detected() {
        let r = hermite_known_degree(&samples::hermite_input(), &[1, 0, 9]);
        assert_eq!(r, Err(Error::WrongDegrees));
        let r = hermite_known_degree(&samples::hermite_input(), &[0, 2, 8]);
        assert_eq!(r, Err(Error::WrongDegrees));
    }

    #[test]
    fn sample_hermite() {
        assert_eq!(hermite(&samples::hermite_input()).unwrap(), samples::hermite_output());
    }

    #[test]
    fn unimodular_input_gives_identity() {
        let p = samples::z7();
        let mut u = PolyMat::identity(p, 3);
        u.set(1, 0, Poly::monomial(p, 6, 3));
        u.set(2, 1, Poly::monomial(p, 6, 3));
        let u = u.mul(&u.transpose()).unwrap();
        assert_eq!(hermite(&u).unwrap(), PolyMat::identity(p, 3));
    }

    #[test]
    fn singular_input_is_rejected() {
        let p = samples::z7();
        let row = vec![Poly::x(p), Poly::one(p)];
        let a = PolyMat::from_rows(p, vec![row.clone(), row]).unwrap();
        assert_eq!(hermite_diagonal(&a), Err(Error::Singular));
        assert_eq!(hermite(&a), Err(Error::Singular));
        assert_eq!(hermite_diagonal(&PolyMat::zeros(p, 1, 1)), Err(Error::Singular));
    }

    #[test]
    fn hermite_predicate() {
        let p = samples::z7();
        assert!(is_hermite(&samples::hermite_output()));
        assert!(is_hermite(&PolyMat::identity(p, 3)));
        let mut a = PolyMat::diagonal(p, &[Poly::x(p), Poly::x(p)]);
        a.set(1, 0, Poly::x(p));
        assert!(!is_hermite(&a));
        assert!(!is_hermite(&samples::hermite_input()));
    }
}
