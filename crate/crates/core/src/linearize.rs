//! Partial linearizations.
//!
//! [`parlin_rows`] splits high-degree rows into chunks of a common degree,
//! inserting elementary columns so that the expanded matrix is equivalent
//! to the original after compression. [`smooth`] balances the degrees of a
//! matrix by splitting columns and then rows, without changing its
//! determinant.

use crate::error::{Error, Result};
use crate::matrix::{PolyMat, Shift};
use crate::poly::Poly;

/// Parameters of a row partial linearization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationInfo {
    /// Chunk degree: `1 + floor(sum(delta) / n)`.
    pub delta_bar: usize,
    /// Number of rows each original row is split into.
    pub alpha: Vec<usize>,
    /// Degree of the last chunk of each row (0 for rows of degree 0).
    pub beta: Vec<usize>,
    /// Row degrees of the expanded Hermite form.
    pub sd: Shift,
    /// Expansion-compression matrix, `n x n~`.
    pub e: PolyMat,
    /// Columns of the expanded matrix holding the original columns (0-based).
    pub colmap: Vec<usize>,
}

impl LinearizationInfo {
    pub fn expanded_dim(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// First expanded row of block `i`.
    pub fn block_start(&self, i: usize) -> usize {
        self.alpha[..i].iter().sum()
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `k`-th chunk of `f` when cut into `count` pieces of degree `< width`,
/// the last piece taking the whole quotient.
fn chunk(f: &Poly, k: usize, count: usize, width: usize) -> Poly {
    if k + 1 < count {
        f.slice(k * width, (k + 1) * width)
    } else {
        f.shr(k * width)
    }
}

/// Row partial linearization of a square matrix with respect to the
/// expected Hermite diagonal degrees `delta`.
pub fn parlin_rows(a: &PolyMat, delta: &[usize]) -> Result<(PolyMat, LinearizationInfo)> {
    let n = a.rows();
    if !a.is_square() || delta.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "linearizing a {}x{} matrix with {} degrees",
            a.rows(),
            a.cols(),
            delta.len()
        )));
    }
    let p = a.modulus();
    let delta_bar = 1 + delta.iter().sum::<usize>() / n.max(1);
    let alpha: Vec<usize> =
        delta.iter().map(|&d| if d == 0 { 1 } else { ceil_div(d, delta_bar) }).collect();
    let beta: Vec<usize> = delta
        .iter()
        .zip(&alpha)
        .map(|(&d, &al)| if d == 0 { 0 } else { d - (al - 1) * delta_bar })
        .collect();
    let nt: usize = alpha.iter().sum();
    let starts: Vec<usize> = (0..n).map(|i| alpha[..i].iter().sum()).collect();
    let colmap: Vec<usize> = (0..n).map(|i| starts[i] + alpha[i] - 1).collect();

    let mut sd = Vec::with_capacity(nt);
    let mut e = PolyMat::zeros(p, n, nt);
    let mut out = PolyMat::zeros(p, nt, nt);
    let x_db = Poly::monomial(p, 1, delta_bar);
    let minus_one = Poly::constant(p, p.neg(1));
    for i in 0..n {
        for k in 0..alpha[i] {
            let row = starts[i] + k;
            sd.push(if k + 1 < alpha[i] { delta_bar as i64 } else { beta[i] as i64 });
            e.set(i, row, Poly::monomial(p, 1, k * delta_bar));
            for j in 0..n {
                out.set(row, colmap[j], chunk(a.get(i, j), k, alpha[i], delta_bar));
            }
            if k + 1 < alpha[i] {
                out.set(row, row, x_db.clone());
                out.set(row + 1, row, minus_one.clone());
            }
        }
    }
    let info = LinearizationInfo { delta_bar, alpha, beta, sd: Shift::new(sd), e, colmap };
    Ok((out, info))
}

/// Columns `colmap` of `E * M`: undoes [`parlin_rows`].
pub fn compress(m: &PolyMat, info: &LinearizationInfo) -> Result<PolyMat> {
    Ok(info.e.mul(m)?.select_cols(&info.colmap))
}

/// Greedy dominant diagonal: repeatedly moves the largest-degree entry of the
/// remaining submatrix to the diagonal. Ties prefer entries already on the
/// diagonal, then the lowest row, then the lowest column.
///
/// Returns the row order, the column order, and the diagonal degrees, which
/// are nonincreasing. Degrees follow the convention `deg 0 = 0`.
pub fn dominant_permutation(a: &PolyMat) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = a.rows().min(a.cols());
    let mut rows_left: Vec<usize> = (0..a.rows()).collect();
    let mut cols_left: Vec<usize> = (0..a.cols()).collect();
    let (mut pr, mut pc, mut degs) = (Vec::new(), Vec::new(), Vec::new());
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for &i in &rows_left {
            for &j in &cols_left {
                let d = a.get(i, j).deg_bar();
                let better = match best {
                    None => true,
                    Some((bi, bj, bd)) => d > bd || (d == bd && i == j && bi != bj),
                };
                if better {
                    best = Some((i, j, d));
                }
            }
        }
        let (i, j, d) = best.expect("nonempty");
        rows_left.retain(|&r| r != i);
        cols_left.retain(|&c| c != j);
        pr.push(i);
        pc.push(j);
        degs.push(d);
    }
    (pr, pc, degs)
}

/// Bookkeeping of [`smooth`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothInfo {
    /// Original dimension.
    pub n: usize,
    /// Dimension after smoothing.
    pub m: usize,
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
    /// Linearization degree of each original column.
    pub column_degrees: Vec<usize>,
    /// Chunk degree of the column stage (0 if skipped).
    pub column_chunk: usize,
    /// Chunk degree of the row stage (0 if skipped).
    pub row_chunk: usize,
}

/// Splits each column `j` into `ceil(deg[j] / width)` chunks of `x^width`-adic
/// digits. Chunk 0 stays in place; later chunks become new columns, each tied
/// to the previous chunk by a new row `(-x^width, 1)`.
fn split_columns(a: &PolyMat, deg: &[usize], width: usize) -> PolyMat {
    let p = a.modulus();
    let (r, c) = (a.rows(), a.cols());
    let counts: Vec<usize> =
        deg.iter().map(|&d| if d == 0 || width == 0 { 1 } else { ceil_div(d, width) }).collect();
    let extra: usize = counts.iter().map(|k| k - 1).sum();
    let m = r + extra;
    let mut out = PolyMat::zeros(p, m, c + extra);
    let minus_x = Poly::monomial(p, p.neg(1), width);
    let mut next = 0;
    for j in 0..c {
        let mut prev = j;
        for k in 0..counts[j] {
            let col = if k == 0 { j } else { c + next };
            for i in 0..r {
                out.set(i, col, chunk(a.get(i, j), k, counts[j], width));
            }
            if k > 0 {
                let row = r + next;
                out.set(row, prev, minus_x.clone());
                out.set(row, col, Poly::one(p));
                next += 1;
            }
            prev = col;
        }
    }
    out
}

/// Degree smoothing preserving the determinant.
///
/// The columns are split according to the diagonal degrees of a dominant
/// permutation, averaged over the dimension; then the rows of the result are
/// split according to its actual row degrees. The output has dimension
/// `n <= m < 3n` and `det C = det A`.
pub fn smooth(a: &PolyMat) -> Result<(PolyMat, SmoothInfo)> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("smoothing needs a square matrix".into()));
    }
    let n = a.rows();
    let (row_order, col_order, diag) = dominant_permutation(a);
    let mut column_degrees = vec![0; n];
    for (k, &j) in col_order.iter().enumerate() {
        column_degrees[j] = diag[k];
    }
    let column_chunk = ceil_div(diag.iter().sum::<usize>(), n.max(1));
    let hat = if column_chunk == 0 {
        a.clone()
    } else {
        split_columns(a, &column_degrees, column_chunk)
    };
    let m1 = hat.rows();
    let rdeg: Vec<usize> = (0..m1)
        .map(|i| (0..m1).map(|j| hat.get(i, j).deg_bar()).max().unwrap_or(0))
        .collect();
    let row_chunk = ceil_div(rdeg.iter().sum::<usize>(), m1.max(1));
    let c = if row_chunk == 0 {
        hat
    } else {
        split_columns(&hat.transpose(), &rdeg, row_chunk).transpose()
    };
    let info = SmoothInfo {
        n,
        m: c.rows(),
        row_order,
        col_order,
        column_degrees,
        column_chunk,
        row_chunk,
    };
    Ok((c, info))
}

/// Smoothing followed by the block rotation moving the original indices last,
/// so that the Hermite form of `A` is the trailing `n x n` block of the
/// Hermite form of the output.
pub fn smooth_for_hermite(a: &PolyMat) -> Result<(PolyMat, SmoothInfo)> {
    let (c, info) = smooth(a)?;
    let (n, m) = (info.n, info.m);
    let perm: Vec<usize> = (n..m).chain(0..n).collect();
    Ok((c.select_rows(&perm).select_cols(&perm), info))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn linearization_parameters_of_sample() {
        let h = samples::hermite_output();
        let (ph, info) = parlin_rows(&h, &[0, 1, 9]).unwrap();
        assert_eq!(info.delta_bar, 4);
        assert_eq!(info.alpha, vec![1, 1, 3]);
        assert_eq!(info.beta, vec![0, 1, 1]);
        assert_eq!(info.sd, Shift::new(vec![0, 1, 4, 4, 1]));
        assert_eq!(info.colmap, vec![0, 1, 4]);
        let p = samples::z7();
        let mut e = PolyMat::zeros(p, 3, 5);
        e.set(0, 0, Poly::one(p));
        e.set(1, 1, Poly::one(p));
        e.set(2, 2, Poly::one(p));
        e.set(2, 3, Poly::monomial(p, 1, 4));
        e.set(2, 4, Poly::monomial(p, 1, 8));
        assert_eq!(info.e, e);
        assert_eq!(ph, samples::parlin_hermite());
        assert_eq!(compress(&ph, &info).unwrap(), h);
    }

    #[test]
    fn linearization_of_sample_input() {
        let (pa, info) = parlin_rows(&samples::hermite_input(), &[0, 1, 9]).unwrap();
        assert_eq!(pa, samples::parlin_input());
        assert_eq!(compress(&pa, &info).unwrap(), samples::hermite_input());
        assert!(info.sd.max().unwrap() <= info.delta_bar as i64);
    }

    #[test]
    fn skewed_degree_parameters() {
        let p = samples::z7();
        let (_, info) = parlin_rows(&PolyMat::identity(p, 4), &[2, 37, 7, 18]).unwrap();
        assert_eq!(info.sd, Shift::new(vec![2, 17, 17, 3, 7, 17, 1]));
        assert_eq!(info.expanded_dim(), 7);
        assert_eq!(info.block_start(3), 5);
    }

    #[test]
    fn zero_degrees_do_not_expand() {
        let a = samples::hermite_input();
        let (pa, info) = parlin_rows(&a, &[0, 0, 0]).unwrap();
        assert_eq!(pa, a);
        assert_eq!(info.e, PolyMat::identity(a.modulus(), 3));
        assert_eq!(info.sd, Shift::zeros(3));
        assert_eq!(compress(&a, &info).unwrap(), a);
    }

    #[test]
    fn dominant_permutation_of_sample() {
        let (pr, pc, d) = dominant_permutation(&samples::hermite_input());
        assert_eq!(pr, vec![1, 0, 2]);
        assert_eq!(pc, vec![1, 0, 2]);
        assert_eq!(d, vec![5, 1, 0]);
    }

    #[test]
    fn dominant_permutation_of_diagonal() {
        let p = samples::z7();
        let a = PolyMat::diagonal(p, &[Poly::monomial(p, 1, 3), Poly::x(p), Poly::one(p)]);
        assert_eq!(dominant_permutation(&a), (vec![0, 1, 2], vec![0, 1, 2], vec![3, 1, 0]));
    }

    #[test]
    fn smoothing_of_sample() {
        let (c, info) = smooth(&samples::hermite_input()).unwrap();
        assert_eq!(info.column_degrees, vec![1, 5, 0]);
        assert_eq!(info.column_chunk, 2);
        assert_eq!(info.row_chunk, 3);
        assert_eq!(c, samples::smoothed());
    }

    #[test]
    fn constant_matrix_is_not_smoothed() {
        let p = samples::z7();
        let mut a = PolyMat::identity(p, 2);
        a.set(0, 1, Poly::constant(p, 3));
        let (c, info) = smooth(&a).unwrap();
        assert_eq!(c, a);
        assert_eq!(info.m, 2);
        assert_eq!(smooth_for_hermite(&a).unwrap().0, a);
    }
}
