//! Shifted column reduction (Mulders-Storjohann weak Popov iteration) and
//! Popov normalization of reduced matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::{PolyMat, Shift};
use crate::poly::{Poly, NEG_INF};

pub(crate) type Column = Vec<Poly>;

/// `s`-pivot of a column: the largest row index reaching the shifted degree,
/// with that degree and the leading coefficient of the pivot entry.
fn pivot(col: &[Poly], s: &[i64]) -> Option<(usize, i64, FieldElement)> {
    let mut best: Option<(usize, i64)> = None;
    for (i, e) in col.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let d = e.degree() + s[i];
        if best.is_none_or(|(_, bd)| d >= bd) {
            best = Some((i, d));
        }
    }
    best.map(|(i, d)| (i, d, col[i].lc()))
}

/// `target -= c * x^k * source`, entry-wise.
pub(crate) fn axpy(target: &mut [Poly], c: FieldElement, k: usize, source: &[Poly]) {
    for (t, s) in target.iter_mut().zip(source) {
        t.sub_scaled_shifted(c, k, s);
    }
}

/// Brings `cols` to `s`-weak Popov form in place: every nonzero column has a
/// distinct pivot row, hence the nonzero columns are `s`-column reduced.
/// Column operations are mirrored on `transform` when given.
pub(crate) fn weak_popov(cols: &mut [Column], s: &[i64], mut transform: Option<&mut [Column]>) {
    let mut piv: Vec<Option<(usize, i64, FieldElement)>> = cols.iter().map(|c| pivot(c, s)).collect();
    loop {
        let mut owner: HashMap<usize, usize> = HashMap::new();
        let mut clash = None;
        for (j, pj) in piv.iter().enumerate() {
            if let Some((row, _, _)) = *pj {
                if let Some(&k) = owner.get(&row) {
                    clash = Some((k, j));
                    break;
                }
                owner.insert(row, j);
            }
        }
        let Some((k, j)) = clash else { return };
        let (_, dk, lk) = piv[k].expect("pivot");
        let (_, dj, lj) = piv[j].expect("pivot");
        let (target, source, dt, ds, lt, ls) =
            if dk > dj { (k, j, dk, dj, lk, lj) } else { (j, k, dj, dk, lj, lk) };
        let p = cols[target][0].modulus();
        let c = p.mul(lt, p.inv(ls).expect("nonzero leading coefficient"));
        let shift = (dt - ds) as usize;
        let src = cols[source].clone();
        axpy(&mut cols[target], c, shift, &src);
        if let Some(tr) = transform.as_deref_mut() {
            let src = tr[source].clone();
            axpy(&mut tr[target], c, shift, &src);
        }
        piv[target] = pivot(&cols[target], s);
    }
}

pub(crate) fn identity_columns(p: crate::field::Prime, n: usize) -> Vec<Column> {
    (0..n)
        .map(|j| (0..n).map(|i| if i == j { Poly::one(p) } else { Poly::zero(p) }).collect())
        .collect()
}

/// Column reduction of a nonsingular square matrix with respect to the row
/// shift `s`. Fails with [`Error::Singular`] when a zero column appears.
pub fn column_reduce(a: &PolyMat, s: &Shift) -> Result<PolyMat> {
    column_reduce_with_transform(a, s, false).map(|(r, _)| r)
}

/// Like [`column_reduce`], also returning the unimodular `U` with `A U = R`.
pub fn column_reduce_tracked(a: &PolyMat, s: &Shift) -> Result<(PolyMat, PolyMat)> {
    column_reduce_with_transform(a, s, true).map(|(r, u)| (r, u.expect("tracked")))
}

fn column_reduce_with_transform(
    a: &PolyMat,
    s: &Shift,
    track: bool,
) -> Result<(PolyMat, Option<PolyMat>)> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("column reduction needs a square matrix".into()));
    }
    if s.len() != a.rows() {
        return Err(Error::ShiftLength { expected: a.rows(), found: s.len() });
    }
    let p = a.modulus();
    let n = a.cols();
    let mut cols = a.columns();
    let mut tr = track.then(|| identity_columns(p, n));
    weak_popov(&mut cols, s.as_slice(), tr.as_deref_mut());
    if cols.iter().any(|c| c.iter().all(Poly::is_zero)) {
        return Err(Error::Singular);
    }
    let r = PolyMat::from_columns(p, a.rows(), &cols);
    Ok((r, tr.map(|t| PolyMat::from_columns(p, n, &t))))
}

/// Returns `R * lm_s(R)^{-1}` for a matrix with uniform `s`-column degree.
///
/// The result is the canonical member of the right-unimodular class of `R`
/// among reduced matrices of that degree: its `s`-leading matrix is the identity.
pub fn popov_normalize(r: &PolyMat, s: &Shift) -> Result<PolyMat> {
    let d = r.cdeg_shifted(s)?;
    if d.contains(&NEG_INF) {
        return Err(Error::Precondition("zero column".into()));
    }
    if d.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Precondition(format!("non-uniform shifted column degrees {d:?}")));
    }
    let lm = r.leading_matrix(s)?;
    let inv = lm
        .inv()
        .map_err(|_| Error::Precondition("shifted leading matrix is singular".into()))?;
    r.mul_const(&inv)
}
