//! Determinant by block triangularization.
//!
//! With `A U = [[B1, 0], [*, B2]]` for a unimodular `U` whose right columns
//! are a kernel basis of the top rows, `det A = det(U^{-1}) det B1 det B2`.
//! The constant `det(U^{-1})` only depends on the constant terms of the
//! kernel basis and of the right factor, so `U` is never formed.

use crate::bases::column_basis_ext;
use crate::constmat::{completion, ConstMat};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linearize::smooth;
use crate::matrix::{PolyMat, Shift};
use crate::poly::{Poly, NEG_INF};

/// `det(U^{-1})` from the constant terms `ur0 = Ur(0)` and `vu0 = Vu(0)`.
pub fn unimodular_det_constants(ur0: &ConstMat, vu0: &ConstMat) -> Result<FieldElement> {
    let ul = completion(ur0, vu0)?;
    let p = ur0.modulus();
    let num = vu0.mul(&ul)?.det()?;
    let den = ul.hstack(ur0)?.det()?;
    if num == 0 || den == 0 {
        return Err(Error::Structural("constant-term completion is singular".into()));
    }
    p.div(num, den)
}

/// Determinant by recursive block triangularization of the input itself.
pub fn determinant_rec(a: &PolyMat) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("square matrix expected".into()));
    }
    let p = a.modulus();
    let n = a.rows();
    match n {
        0 => return Ok(Poly::one(p)),
        1 if a.get(0, 0).is_zero() => return Err(Error::Singular),
        1 => return Ok(a.get(0, 0).clone()),
        _ => {}
    }
    let s = a.cdeg();
    if s.contains(&NEG_INF) {
        return Err(Error::Singular);
    }
    let m = n.div_ceil(2);
    let ext = column_basis_ext(&a.block(0, m, 0, n), &Shift::new(s))?;
    let b2 = a.block(m, n, 0, n).mul(&ext.ur)?;
    let dv = unimodular_det_constants(&ext.ur.constant(), &ext.vu.constant())?;
    let d1 = determinant_rec(&ext.b1)?;
    let d2 = determinant_rec(&b2)?;
    Ok((&d1 * &d2).scale(dv))
}

/// Determinant of a nonsingular matrix, computed on its degree-smoothed form.
pub fn determinant(a: &PolyMat) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("square matrix expected".into()));
    }
    let (c, _) = smooth(a)?;
    determinant_rec(&c)
}

/// Determinant from the Hermite diagonal when the product of the diagonal
/// entries does not vanish at zero; `None` otherwise.
pub fn det_fastpath_diag(a: &PolyMat, diag: &[Poly]) -> Result<Option<Poly>> {
    let p = a.modulus();
    let prod = diag.iter().fold(Poly::one(p), |acc, d| &acc * d);
    let c0 = prod.coeff(0);
    if c0 == 0 {
        return Ok(None);
    }
    let lambda = p.div(a.constant().det()?, c0)?;
    Ok(Some(prod.scale(lambda)))
}
