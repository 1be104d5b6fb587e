#![allow(dead_code)]

use polyhermite::oracle::det_oracle;
use polyhermite::{Poly, PolyMat, Prime};
use rand::Rng;

pub fn random_poly(p: Prime, deg: usize, rng: &mut impl Rng) -> Poly {
    Poly::from_coeffs(p, (0..=deg).map(|_| rng.gen_range(0..p.value())).collect())
}

/// Entry `(i, j)` of degree at most `profile(i, j)`.
pub fn with_profile(
    p: Prime,
    n: usize,
    rng: &mut impl Rng,
    profile: impl Fn(usize, usize) -> usize,
) -> PolyMat {
    let mut a = PolyMat::zeros(p, n, n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, random_poly(p, profile(i, j), rng));
        }
    }
    a
}

/// Mix of uniform, random per-entry, and one-heavy-row-and-column profiles.
pub fn random_matrix(p: Prime, n: usize, max_deg: usize, rng: &mut impl Rng) -> PolyMat {
    match rng.gen_range(0..4) {
        0 => with_profile(p, n, rng, |_, _| max_deg),
        1 => {
            let heavy = rng.gen_range(0..n);
            with_profile(p, n, rng, |i, j| if i == heavy || j == heavy { max_deg } else { 0 })
        }
        _ => {
            let degs: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..=max_deg)).collect();
            with_profile(p, n, rng, |i, j| degs[i * n + j])
        }
    }
}

pub fn random_nonsingular(p: Prime, n: usize, max_deg: usize, rng: &mut impl Rng) -> PolyMat {
    loop {
        let a = random_matrix(p, n, max_deg, rng);
        if !det_oracle(&a).unwrap().is_zero() {
            return a;
        }
    }
}

/// Product of `ops` elementary column operations `col_j += f * col_i`,
/// followed by a random nonzero scaling of one column.
pub fn random_unimodular(p: Prime, n: usize, ops: usize, deg: usize, rng: &mut impl Rng) -> PolyMat {
    let mut cols = PolyMat::identity(p, n).columns();
    for _ in 0..ops {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let f = random_poly(p, deg, rng);
        let src = cols[i].clone();
        for (t, s) in cols[j].iter_mut().zip(&src) {
            *t = &*t + &(&f * s);
        }
    }
    let k = rng.gen_range(0..n);
    let c = rng.gen_range(1..p.value());
    for e in cols[k].iter_mut() {
        *e = e.scale(c);
    }
    PolyMat::from_columns(p, n, &cols)
}

pub fn monic(f: &Poly) -> Poly {
    f.monic().unwrap().0
}

pub fn product(p: Prime, fs: &[Poly]) -> Poly {
    fs.iter().fold(Poly::one(p), |acc, f| &acc * f)
}

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}
