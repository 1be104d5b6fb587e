//! Plain-text matrix format.
//!
//! ```text
//! # comment
//! <p> <m> <n>
//! <coefficients of entry (1,1), ascending degree>
//! <coefficients of entry (1,2)>
//! ...
//! ```
//!
//! Entries are listed row-major, one per line; `0` is the zero polynomial.
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::matrix::{PolyMat, Shift};
use crate::poly::Poly;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| err(line, format!("invalid number '{t}'"))))
        .collect()
}

pub fn parse_pmat(text: &str) -> Result<PolyMat> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let h = numbers(hline, header)?;
    let [pv, m, n] = h[..] else {
        return Err(err(hline, "header must be '<p> <m> <n>'"));
    };
    let p = Prime::new(pv).map_err(|e| err(hline, e.to_string()))?;
    let (m, n) = (m as usize, n as usize);
    if m == 0 || n == 0 {
        return Err(err(hline, "dimensions must be positive"));
    }
    let mut entries = Vec::with_capacity(m * n);
    let mut last = hline;
    for (ln, l) in lines {
        last = ln;
        if entries.len() == m * n {
            return Err(err(ln, format!("more than {} entries", m * n)));
        }
        let coeffs = numbers(ln, l)?;
        if let Some(c) = coeffs.iter().find(|&&c| c >= pv) {
            return Err(err(ln, format!("coefficient {c} not reduced modulo {pv}")));
        }
        entries.push(Poly::from_coeffs(p, coeffs));
    }
    if entries.len() != m * n {
        return Err(err(last + 1, format!("expected {} entries, found {}", m * n, entries.len())));
    }
    let rows = entries.chunks(n).map(<[Poly]>::to_vec).collect();
    PolyMat::from_rows(p, rows)
}

pub fn format_pmat(a: &PolyMat) -> String {
    let mut out = format!("{} {} {}\n", a.modulus(), a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.push_str(&format_poly(a.get(i, j)));
            out.push('\n');
        }
    }
    out
}

/// Space-separated ascending coefficients, `0` for the zero polynomial.
pub fn format_poly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.coeffs().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

/// Comma-separated integers.
pub fn parse_shift(text: &str) -> Result<Shift> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidShift(format!("invalid entry '{}'", t.trim())))
        })
        .collect::<Result<Vec<_>>>()
        .map(Shift::new)
}
