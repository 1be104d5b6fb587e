//! Small fixed matrices over GF(7) with known kernels, Hermite forms and
//! determinants. Used by tests, benchmarks and the command-line fixtures.

use crate::constmat::ConstMat;
use crate::field::Prime;
use crate::matrix::PolyMat;
use crate::poly::Poly;

pub fn z7() -> Prime {
    Prime::new(7).expect("7 is prime")
}

fn m(rows: &[&[&[i64]]]) -> PolyMat {
    let rows: Vec<Vec<Vec<i64>>> =
        rows.iter().map(|r| r.iter().map(|c| c.to_vec()).collect()).collect();
    PolyMat::from_coeff_rows(z7(), &rows).expect("well-formed sample")
}

fn c(rows: &[&[i64]]) -> ConstMat {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    ConstMat::from_rows(z7(), &rows).expect("well-formed sample")
}

pub fn poly(coeffs: &[i64]) -> Poly {
    Poly::from_signed(z7(), coeffs)
}

/// 2x3 matrix with column degrees (5, 5, 4).
pub fn kernel_input() -> PolyMat {
    m(&[
        &[&[1, 6], &[1, 6, 1, 2], &[3]],
        &[&[0, 1, 4, 0, 5, 4], &[4, 0, 0, 2, 5, 6], &[0, 5, 6, 5, 1]],
    ])
}

/// The (5,5,4)-minimal kernel basis of [`kernel_input`].
pub fn kernel_vector() -> PolyMat {
    m(&[&[&[1, 0, 4, 3, 5, 4, 6]], &[&[0, 6, 1, 5, 4]], &[&[2, 3, 5, 4, 0, 4, 4, 4]]])
}

/// A column basis of [`kernel_input`].
pub fn column_basis() -> PolyMat {
    m(&[&[&[5, 5], &[1]], &[&[3], &[1]]])
}

/// Coefficients expressing the third column of [`kernel_input`] on [`column_basis`].
pub fn third_column_coords() -> PolyMat {
    m(&[&[&[5, 6, 3, 4]], &[&[6, 1, 4, 0, 1]]])
}

/// Nonsingular 3x3 matrix; its first two rows are [`kernel_input`].
pub fn hermite_input() -> PolyMat {
    m(&[
        &[&[1, 6], &[1, 6, 1, 2], &[3]],
        &[&[0, 1, 4, 0, 5, 4], &[4, 0, 0, 2, 5, 6], &[0, 5, 6, 5, 1]],
        &[&[2], &[0, 0, 6, 5, 5, 2], &[6]],
    ])
}

/// Monic Hermite diagonal of [`hermite_input`].
pub fn hermite_diagonal() -> Vec<Poly> {
    vec![poly(&[1]), poly(&[6, 1]), poly(&[0, 4, 3, 3, 4, 6, 4, 1, 2, 1])]
}

/// Column Hermite form of [`hermite_input`].
pub fn hermite_output() -> PolyMat {
    m(&[
        &[&[1], &[], &[]],
        &[&[1], &[6, 1], &[]],
        &[
            &[5, 0, 4, 3, 4, 0, 5, 2, 4],
            &[4, 6, 5, 4, 0, 3, 3, 2, 3],
            &[0, 4, 3, 3, 4, 6, 4, 1, 2, 1],
        ],
    ])
}

/// Row partial linearization of [`hermite_input`] for degrees (0, 1, 9).
pub fn parlin_input() -> PolyMat {
    m(&[
        &[&[1, 6], &[1, 6, 1, 2], &[], &[], &[3]],
        &[&[0, 1, 4, 0, 5, 4], &[4, 0, 0, 2, 5, 6], &[], &[], &[0, 5, 6, 5, 1]],
        &[&[2], &[0, 0, 6, 5], &[0, 0, 0, 0, 1], &[], &[6]],
        &[&[], &[5, 2], &[6], &[0, 0, 0, 0, 1], &[]],
        &[&[], &[], &[], &[6], &[]],
    ])
}

/// Row partial linearization of [`hermite_output`] for degrees (0, 1, 9).
pub fn parlin_hermite() -> PolyMat {
    m(&[
        &[&[1], &[], &[], &[], &[]],
        &[&[1], &[6, 1], &[], &[], &[]],
        &[&[5, 0, 4, 3], &[4, 6, 5, 4], &[0, 0, 0, 0, 1], &[], &[0, 4, 3, 3]],
        &[&[4, 0, 5, 2], &[0, 3, 3, 2], &[6], &[0, 0, 0, 0, 1], &[4, 6, 4, 1]],
        &[&[4], &[3], &[], &[6], &[2, 1]],
    ])
}

/// A (-s_d)-reduced form of [`parlin_input`].
pub fn parlin_reduced() -> PolyMat {
    m(&[
        &[&[5], &[1], &[], &[1], &[2]],
        &[&[5], &[4, 4], &[], &[5, 3], &[3, 6]],
        &[&[4, 0, 6, 1], &[0, 0, 6, 1, 3], &[0, 0, 0, 0, 1], &[3, 4, 5, 1], &[6, 1, 3, 2, 6]],
        &[&[6, 0, 4, 3], &[5, 4, 0, 4, 4], &[6], &[4, 2, 0, 1], &[2, 4, 0, 2, 5]],
        &[&[6], &[0, 1], &[], &[6], &[]],
    ])
}

/// Leading matrix of [`parlin_reduced`] for the shift -(0, 1, 4, 4, 1).
pub fn parlin_reduced_leading() -> ConstMat {
    c(&[
        &[5, 1, 0, 1, 2],
        &[0, 4, 0, 3, 6],
        &[0, 3, 1, 0, 6],
        &[0, 4, 0, 0, 5],
        &[0, 1, 0, 0, 0],
    ])
}

/// Degree-smoothed version of [`hermite_input`].
pub fn smoothed() -> PolyMat {
    m(&[
        &[&[1, 6], &[1, 6], &[3], &[1, 2], &[], &[]],
        &[&[0, 1, 4], &[4], &[0, 5, 6], &[0, 2], &[5, 6], &[0, 0, 0, 6]],
        &[&[2], &[], &[6], &[6, 5], &[5, 2], &[]],
        &[&[], &[0, 0, 6], &[], &[1], &[], &[]],
        &[&[], &[], &[], &[0, 0, 6], &[1], &[]],
        &[&[0, 5, 4], &[], &[5, 1], &[], &[], &[1]],
    ])
}

/// Lower-left block of the Hermite form of the block-rotated [`smoothed`].
pub fn smoothed_hermite_offblock() -> PolyMat {
    m(&[
        &[&[], &[], &[]],
        &[&[6], &[3], &[4]],
        &[
            &[4, 0, 6, 2, 4, 1, 6, 4],
            &[6, 2, 0, 3, 3, 4, 0, 4, 6],
            &[2, 1, 5, 4, 0, 3, 3, 2, 3],
        ],
    ])
}

/// Nonsingular 5x5 matrix with a degree 10 determinant.
pub fn det_input() -> PolyMat {
    m(&[
        &[&[2, -1], &[-3, -2], &[0, 0, 1, 3], &[2, -1], &[0, 0, 0, 0, -1, -3]],
        &[&[0, -1], &[-2], &[0, 0, 0, 3], &[0, -1], &[0, 0, 0, 0, 0, -3]],
        &[&[-2], &[3, 1], &[2], &[-2], &[0, 0, -2]],
        &[&[], &[1], &[-2, 0, -3], &[-1, 0, -2], &[0, 0, 1, 0, 1]],
        &[&[], &[2], &[3], &[0, 0, -3], &[3, 0, -3, 0, -2]],
    ])
}

/// Determinant of [`det_input`].
pub fn det_value() -> Poly {
    poly(&[3, -1, 2, 1, -1, 1, 1, -2, -3, 2, -3])
}

/// Constant terms of a kernel basis and right factor of the top three rows
/// of [`det_input`], with their unimodular determinant.
pub fn det_constants_top() -> (ConstMat, ConstMat, u64) {
    let ur = c(&[&[3, 0], &[0, 0], &[0, 0], &[-3, 0], &[0, 1]]);
    let vu = c(&[&[1, 0, 0, 1, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]);
    (ur, vu, 2)
}

/// Same data one recursion level lower, on the 3x3 column basis.
pub fn det_constants_inner() -> (ConstMat, ConstMat, u64) {
    let ur = c(&[&[0], &[0], &[1]]);
    let vu = c(&[&[1, 2, 0], &[0, 1, 0]]);
    (ur, vu, 1)
}

/// Entry degrees of a 4x4 matrix whose generic determinant bound is 199.
pub const SKEWED_PROFILE: [[usize; 4]; 4] =
    [[2, 10, 63, 5], [75, 51, 95, 69], [4, 5, 48, 7], [10, 54, 75, 6]];
