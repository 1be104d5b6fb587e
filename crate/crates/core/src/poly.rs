//! Dense univariate polynomials over GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};

/// Sentinel degree of the zero polynomial (and of all-zero rows or columns).
///
/// It sits far below any reachable degree yet leaves room for adding shifts
/// without overflow.
pub const NEG_INF: i64 = i64::MIN / 4;

/// Below this size schoolbook multiplication is used directly.
const KARATSUBA_CUTOFF: usize = 48;

/// A polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never ends with a zero, so the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: Prime,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero(p: Prime) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: Prime) -> Self {
        Poly::constant(p, 1)
    }

    pub fn x(p: Prime) -> Self {
        Poly::monomial(p, 1, 1)
    }

    pub fn constant(p: Prime, c: FieldElement) -> Self {
        Poly::from_coeffs(p, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(p: Prime, c: FieldElement, k: usize) -> Self {
        let c = c % p.value();
        if c == 0 {
            return Poly::zero(p);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly { p, coeffs }
    }

    /// Builds a polynomial from ascending coefficients, reducing each modulo `p`.
    pub fn from_coeffs(p: Prime, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p.value();
        }
        let mut f = Poly { p, coeffs };
        f.trim();
        f
    }

    /// Builds a polynomial from signed ascending coefficients (e.g. `-x + 2`).
    pub fn from_signed(p: Prime, coeffs: &[i64]) -> Self {
        let mut f = Poly {
            p,
            coeffs: coeffs.iter().map(|&c| p.reduce(c)).collect(),
        };
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True degree; `None` for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as a signed integer with [`NEG_INF`] for zero.
    #[inline]
    pub fn degree(&self) -> i64 {
        match self.deg() {
            Some(d) => d as i64,
            None => NEG_INF,
        }
    }

    /// The overbar degree: `deg` for nonzero polynomials and `0` for zero.
    #[inline]
    pub fn deg_bar(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Coefficient of `x^k` for a possibly negative `k`.
    #[inline]
    pub fn coeff_at(&self, k: i64) -> FieldElement {
        if k < 0 {
            0
        } else {
            self.coeff(k as usize)
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn eval(&self, a: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.p.add(self.p.mul(acc, a), c))
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let c = c % self.p.value();
        if c == 0 {
            return Poly::zero(self.p);
        }
        Poly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| self.p.mul(a, c)).collect(),
        }
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { p: self.p, coeffs }
    }

    /// `self div x^k` (drops the `k` lowest coefficients).
    pub fn shr(&self, k: usize) -> Poly {
        Poly {
            p: self.p,
            coeffs: self.coeffs.get(k..).map(|c| c.to_vec()).unwrap_or_default(),
        }
    }

    /// `self mod x^k`.
    pub fn trunc(&self, k: usize) -> Poly {
        let mut f = Poly {
            p: self.p,
            coeffs: self.coeffs[..k.min(self.coeffs.len())].to_vec(),
        };
        f.trim();
        f
    }

    /// Coefficients `lo..hi` as a polynomial, i.e. `(self div x^lo) mod x^(hi-lo)`.
    pub fn slice(&self, lo: usize, hi: usize) -> Poly {
        let len = self.coeffs.len();
        let (lo, hi) = (lo.min(len), hi.min(len));
        let mut f = Poly {
            p: self.p,
            coeffs: self.coeffs[lo..hi.max(lo)].to_vec(),
        };
        f.trim();
        f
    }

    /// In place `self -= c * x^t * other`.
    pub fn sub_scaled_shifted(&mut self, c: FieldElement, t: usize, other: &Poly) {
        debug_assert_eq!(self.p, other.p);
        if c == 0 || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + t;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        let p = self.p;
        for (dst, &src) in self.coeffs[t..].iter_mut().zip(other.coeffs.iter()) {
            *dst = p.sub(*dst, p.mul(c, src));
        }
        self.trim();
    }

    /// In place `self += c * x^t * other`.
    pub fn add_scaled_shifted(&mut self, c: FieldElement, t: usize, other: &Poly) {
        self.sub_scaled_shifted(self.p.neg(c % self.p.value()), t, other);
    }

    /// In place truncation modulo `x^k`.
    pub fn truncate_in_place(&mut self, k: usize) {
        if self.coeffs.len() > k {
            self.coeffs.truncate(k);
            self.trim();
        }
    }

    /// In place multiplication by `x`.
    pub fn mul_x_in_place(&mut self) {
        if !self.is_zero() {
            self.coeffs.insert(0, 0);
        }
    }

    /// Euclidean division `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        assert_eq!(self.p, b.p, "modulus mismatch");
        let db = b.deg().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(p), self.clone()));
        }
        let inv_lc = p.inv(b.lc())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![0; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = p.mul(r[k + db], inv_lc);
            q[k] = c;
            if c != 0 {
                for (i, &bc) in b.coeffs.iter().enumerate() {
                    r[k + i] = p.sub(r[k + i], p.mul(c, bc));
                }
            }
        }
        r.truncate(db);
        let mut q = Poly { p, coeffs: q };
        let mut r = Poly { p, coeffs: r };
        q.trim();
        r.trim();
        Ok((q, r))
    }

    /// Exact division; fails if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::NotInColumnModule);
        }
        Ok(q)
    }

    /// Writes `self = λ · m` with `m` monic.
    pub fn monic(&self) -> Result<(Poly, FieldElement)> {
        let lc = self.lc();
        if lc == 0 {
            return Err(Error::DivisionByZero);
        }
        let inv = self.p.inv(lc)?;
        Ok((self.scale(inv), lc))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero").0
        }
    }
}

fn add_into(p: Prime, dst: &mut [u64], src: &[u64]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = p.add(*d, s);
    }
}

fn schoolbook(p: Prime, a: &[u64], b: &[u64], out: &mut [u64]) {
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (o, &bj) in out[i..].iter_mut().zip(b) {
            *o = p.add(*o, p.mul(ai, bj));
        }
    }
}

/// Writes `a * b` into `out` (which must be zeroed and of length `a.len() + b.len() - 1`).
fn karatsuba(p: Prime, a: &[u64], b: &[u64], out: &mut [u64]) {
    if a.len() < KARATSUBA_CUTOFF || b.len() < KARATSUBA_CUTOFF {
        schoolbook(p, a, b, out);
        return;
    }
    let half = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    if a1.is_empty() || b1.is_empty() {
        schoolbook(p, a, b, out);
        return;
    }
    let mut z0 = vec![0; a0.len() + b0.len() - 1];
    karatsuba(p, a0, b0, &mut z0);
    let mut z2 = vec![0; a1.len() + b1.len() - 1];
    karatsuba(p, a1, b1, &mut z2);
    let mut sa = a0.to_vec();
    add_into(p, &mut sa, a1);
    let mut sb = b0.to_vec();
    add_into(p, &mut sb, b1);
    let mut z1 = vec![0; sa.len() + sb.len() - 1];
    karatsuba(p, &sa, &sb, &mut z1);
    for (i, &c) in z0.iter().enumerate() {
        z1[i] = p.sub(z1[i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] = p.sub(z1[i], c);
    }
    add_into(p, out, &z0);
    add_into(p, &mut out[half..], &z1);
    add_into(p, &mut out[2 * half..], &z2);
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.p);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        karatsuba(self.p, &self.coeffs, &rhs.coeffs, &mut out);
        let mut f = Poly { p: self.p, coeffs: out };
        f.trim();
        f
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        add_into(self.p, &mut coeffs, &short.coeffs);
        let mut f = Poly { p: self.p, coeffs };
        f.trim();
        f
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_scaled_shifted(1, 0, rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| self.p.neg(c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod {}", self, self.p)
    }
}
