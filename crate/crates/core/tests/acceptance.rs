//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use polyhermite::bases::column_basis;
use polyhermite::oracle::{degdet_oracle, det_oracle, hermite_oracle};
use polyhermite::{
    column_basis_ext, column_reduce, compress, determinant, determinant_rec, format_pmat, hermite,
    hermite_diagonal, hermite_known_degree, is_hermite, kernel_basis, parlin_rows,
    popov_normalize, samples, smooth, smooth_for_hermite, unimodular_det_constants, ConstMat,
    Poly, PolyMat, Prime, Shift,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;
type Suite = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

fn hermite_sample() -> Outcome {
    let start = Instant::now();
    let a = samples::hermite_input();
    let h = hermite(&a).map_err(|e| e.to_string())?;
    let diag = hermite_diagonal(&a).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(h == samples::hermite_output(), || format!("hermite returned {h:?}"))?;
    ensure(diag == samples::hermite_diagonal(), || format!("diagonal returned {diag:?}"))?;
    within(elapsed, Duration::from_secs(1), "hermite")?;
    Ok(format!("3x3 Hermite form and diagonal exact ({elapsed:.2?})"))
}

fn determinant_sample() -> Outcome {
    let start = Instant::now();
    let a = samples::det_input();
    let expected = samples::poly(&[-3, 1, -2, -1, 1, -1, -1, 2, 3, -2, 3]);

    let (ur, vu, dv) = samples::det_constants_top();
    let got = unimodular_det_constants(&ur, &vu).map_err(|e| e.to_string())?;
    ensure(got == dv, || format!("top-level unimodular constant {got}, expected {dv}"))?;
    let (ur, vu, dv1) = samples::det_constants_inner();
    let got = unimodular_det_constants(&ur, &vu).map_err(|e| e.to_string())?;
    ensure(got == dv1, || format!("inner unimodular constant {got}, expected {dv1}"))?;

    let rec = determinant_rec(&a).map_err(|e| e.to_string())?;
    let full = determinant(&a).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1), "determinant")?;
    ensure(rec == full, || format!("determinant_rec {rec:?} and determinant {full:?} differ"))?;
    let oracle = det_oracle(&a).map_err(|e| e.to_string())?;
    ensure(rec == expected, || {
        format!(
            "constants d_V = 2, d_V1 = 1 ok; determinant returned {rec:?}, expected {expected:?}; \
             cofactor expansion gives {oracle:?} (= -expected: {})",
            oracle == expected.scale(6)
        )
    })?;
    Ok(format!("5x5 determinant exact, d_V = 2, d_V1 = 1 ({elapsed:.2?})"))
}

fn smoothing_sample() -> Outcome {
    let start = Instant::now();
    let a = samples::hermite_input();
    let (c, _) = smooth(&a).map_err(|e| e.to_string())?;
    ensure(format_pmat(&c) == format_pmat(&samples::smoothed()), || {
        format!("smooth returned {c:?}")
    })?;
    let (b, info) = smooth_for_hermite(&a).map_err(|e| e.to_string())?;
    let delta: Vec<usize> = hermite_diagonal(&b)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|d| d.deg().unwrap())
        .collect();
    let hb = hermite_known_degree(&b, &delta).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let (n, m) = (info.n, info.m);
    let k = m - n;
    let p = samples::z7();
    let expected = PolyMat::identity(p, k)
        .hstack(&PolyMat::zeros(p, k, n))
        .unwrap()
        .vstack(&samples::smoothed_hermite_offblock().hstack(&samples::hermite_output()).unwrap())
        .unwrap();
    ensure(hermite_oracle(&b).map_err(|e| e.to_string())? == hb, || {
        "reference elimination disagrees with the pipeline".into()
    })?;
    ensure(hb.block(k, m, k, m) == samples::hermite_output(), || "trailing block is not H".into())?;
    ensure(hb.block(0, k, 0, k) == PolyMat::identity(p, k), || "leading block is not I".into())?;
    ensure(hb == expected, || {
        let r = hb.block(k, m, 0, k);
        let printed = samples::smoothed_hermite_offblock();
        let cyclic = r.select_cols(&[2, 0, 1]) == printed;
        let member = polyhermite::right_factor(&b, &expected).is_ok();
        format!(
            "C exact, leading I and trailing H exact; off-block R = {r:?} differs from the \
             expected R (expected R is the computed one with columns cycled: {cyclic}; \
             expected [[I,0],[R,H]] lies in the column module of B: {member})"
        )
    })?;
    within(elapsed, Duration::from_secs(1), "smoothing")?;
    Ok(format!("6x6 smoothed matrix and [[I,0],[R,H]] exact ({elapsed:.2?})"))
}

fn kernel_sample() -> Outcome {
    let start = Instant::now();
    let au = samples::kernel_input();
    let s = Shift::new(vec![5, 5, 4]);
    let nb = kernel_basis(&au, &s).map_err(|e| e.to_string())?;
    let ext = column_basis_ext(&au, &s).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let want = samples::kernel_vector();
    ensure(nb.cols() == 1, || format!("kernel has {} columns", nb.cols()))?;
    let c = (0..3).map(|i| nb.get(i, 0)).find(|e| !e.is_zero()).unwrap().lc();
    let i0 = (0..3).find(|&i| !nb.get(i, 0).is_zero()).unwrap();
    let ratio = samples::z7().div(c, want.get(i0, 0).lc()).unwrap();
    ensure(nb == want.scale(ratio), || format!("kernel basis {nb:?}"))?;
    let cd = nb.cdeg_shifted(&s).unwrap();
    ensure(cd == vec![11], || format!("shifted column degree {cd:?}"))?;
    ensure(nb.leading_matrix(&s).unwrap().rank() == 1, || "leading matrix rank deficient".into())?;
    let h1 = hermite_oracle(&ext.b1).map_err(|e| e.to_string())?;
    let h2 = hermite_oracle(&samples::column_basis()).map_err(|e| e.to_string())?;
    ensure(h1 == h2, || format!("column basis {:?} not equivalent", ext.b1))?;
    within(elapsed, Duration::from_secs(1), "kernel")?;
    Ok(format!("kernel up to scalar, degree 11, column basis equivalent ({elapsed:.2?})"))
}

fn oracle_sweep() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut count = 0;
    for pv in [2u64, 3, 7, 97] {
        let p = Prime::new(pv).unwrap();
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let deg = rng.gen_range(0..=4);
            let a = random_nonsingular(p, n, deg, &mut rng);
            let text = || format_pmat(&a);
            let h = hermite(&a).map_err(|e| format!("hermite failed ({e}) on\n{}", text()))?;
            ensure(h == hermite_oracle(&a).unwrap(), || format!("hermite mismatch on\n{}", text()))?;
            let det = determinant(&a).map_err(|e| format!("determinant failed ({e}) on\n{}", text()))?;
            let oracle = det_oracle(&a).unwrap();
            ensure(det == oracle, || format!("determinant mismatch on\n{}", text()))?;
            let diag = hermite_diagonal(&a).unwrap();
            ensure(product(p, &diag) == monic(&oracle), || {
                format!("diagonal product mismatch on\n{}", text())
            })?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(180), "sweep")?;
    Ok(format!("{count} matrices over GF(2), GF(3), GF(7), GF(97), zero mismatches ({elapsed:.2?})"))
}

const INSTANCES: usize = 60;

fn linearization_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = Prime::new(7).unwrap();
    for t in 0..INSTANCES {
        let n = rng.gen_range(1..=4);
        let a = random_nonsingular(p, n, rng.gen_range(1..=3), rng);
        let h = hermite_oracle(&a).unwrap();
        let delta: Vec<usize> = (0..n).map(|i| h.get(i, i).deg().unwrap()).collect();
        let c = loop {
            let c = PolyMat::from_const(&random_const(p, n, rng));
            if c.constant().rank() == n {
                break c;
            }
        };
        let r = h.mul(&c).unwrap();
        let (lr, info) = parlin_rows(&r, &delta).unwrap();
        let neg = info.sd.neg();
        let cd = lr.cdeg_shifted(&neg).unwrap();
        ensure(cd.iter().all(|&d| d == 0), || format!("instance {t}: shifted degrees {cd:?}"))?;
        let lm = lr.leading_matrix(&neg).unwrap();
        let dim = info.expanded_dim();
        let lasts: Vec<usize> = (0..n).map(|i| info.block_start(i) + info.alpha[i] - 1).collect();
        for i in 0..dim {
            for j in 0..dim {
                let expected = match (lasts.iter().position(|&l| l == i), info.colmap.iter().position(|&m| m == j)) {
                    (Some(bi), Some(bj)) => r.leading_matrix(&Shift::new(delta.iter().map(|&d| -(d as i64)).collect())).unwrap().get(bi, bj),
                    (None, None) => u64::from(i == j),
                    _ => 0,
                };
                ensure(lm.get(i, j) == expected, || {
                    format!("instance {t}: leading matrix entry ({i},{j}) is {}", lm.get(i, j))
                })?;
            }
        }
        ensure(compress(&lr, &info).unwrap() == r, || format!("instance {t}: compression"))?;
        let (la, _) = parlin_rows(&a, &delta).unwrap();
        ensure(compress(&la, &info).unwrap() == a, || format!("instance {t}: compression of A"))?;
        if dim <= polyhermite::oracle::HERMITE_LIMIT {
            let w = random_unimodular(p, n, 3, 2, rng);
            let (law, _) = parlin_rows(&a.mul(&w).unwrap(), &delta).unwrap();
            ensure(hermite_oracle(&la).unwrap() == hermite_oracle(&law).unwrap(), || {
                format!("instance {t}: equivalence not preserved")
            })?;
            ensure(hermite_oracle(&la).unwrap() == hermite_oracle(&lr).unwrap(), || {
                format!("instance {t}: linearized Hermite forms differ")
            })?;
        }
    }
    Ok(())
}

fn random_const(p: Prime, n: usize, rng: &mut ChaCha8Rng) -> ConstMat {
    let rows: Vec<Vec<i64>> =
        (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p.value()) as i64).collect()).collect();
    ConstMat::from_rows(p, &rows).unwrap()
}

fn normalization_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for t in 0..INSTANCES {
        let p = Prime::new([3u64, 7, 97][t % 3]).unwrap();
        let n = rng.gen_range(1..=4);
        let a = random_nonsingular(p, n, rng.gen_range(0..=3), rng);
        let h = hermite_oracle(&a).unwrap();
        let shift = Shift::new((0..n).map(|i| -h.get(i, i).degree()).collect());
        let w = random_unimodular(p, n, 4, 2, rng);
        for m in [a.clone(), a.mul(&w).unwrap(), h.clone()] {
            let r = column_reduce(&m, &shift).map_err(|e| format!("instance {t}: {e}"))?;
            let got = popov_normalize(&r, &shift).map_err(|e| format!("instance {t}: {e}"))?;
            ensure(got == h, || format!("instance {t}: normal form {got:?}, expected {h:?}"))?;
        }
    }
    Ok(())
}

fn unimodular_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for t in 0..INSTANCES {
        let p = Prime::new([2u64, 7, 97][t % 3]).unwrap();
        let n = rng.gen_range(1..=6);
        let u = random_unimodular(p, n, 2 * n, 3, rng);
        let det = determinant(&u).map_err(|e| format!("instance {t}: {e}"))?;
        let c0 = u.constant().det().unwrap();
        ensure(det == Poly::constant(p, c0), || {
            format!("instance {t}: det U = {det:?}, det U(0) = {c0}")
        })?;

        let n = rng.gen_range(2..=6);
        let a = random_nonsingular(p, n, rng.gen_range(0..=3), rng);
        let m = n.div_ceil(2);
        let ext = column_basis_ext(&a.block(0, m, 0, n), &Shift::new(a.cdeg()))
            .map_err(|e| format!("instance {t}: {e}"))?;
        let dv = unimodular_det_constants(&ext.ur.constant(), &ext.vu.constant())
            .map_err(|e| format!("instance {t}: {e}"))?;
        let b2 = a.block(m, n, 0, n).mul(&ext.ur).unwrap();
        let d = (&det_oracle(&ext.b1).unwrap() * &det_oracle(&b2).unwrap()).scale(dv);
        ensure(d == det_oracle(&a).unwrap(), || {
            format!("instance {t}: constant-term determinant inconsistent on\n{}", format_pmat(&a))
        })?;
    }
    Ok(())
}

fn smoothing_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = Prime::new(97).unwrap();
    for t in 0..INSTANCES {
        let n = rng.gen_range(1..=6);
        let a = if t % 2 == 0 {
            let heavy = rng.gen_range(0..n);
            let big = rng.gen_range(5..=20);
            with_profile(p, n, rng, |i, j| if i == heavy || j == heavy { big } else { 1 })
        } else {
            random_matrix(p, n, rng.gen_range(0..=8), rng)
        };
        let (c, info) = smooth(&a).unwrap();
        let m = info.m;
        ensure(n <= m && m < 3 * n.max(1), || format!("instance {t}: n = {n}, m = {m}"))?;
        let bound = ceil_div(degdet_oracle(&a).unwrap(), n) as i64;
        ensure(c.degree() <= bound, || {
            format!("instance {t}: deg C = {}, bound {bound}, on\n{}", c.degree(), format_pmat(&a))
        })?;
        if m <= polyhermite::oracle::DET_LIMIT {
            ensure(det_oracle(&c).unwrap() == det_oracle(&a).unwrap(), || {
                format!("instance {t}: smoothing changed the determinant")
            })?;
        }
    }
    Ok(())
}

fn kernel_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for t in 0..INSTANCES {
        let p = Prime::new([2u64, 7, 97][t % 3]).unwrap();
        let n = rng.gen_range(2..=6);
        let a = random_matrix(p, n, rng.gen_range(0..=5), rng);
        let rows = rng.gen_range(1..n);
        let f = a.block(0, rows, 0, n);
        let s = Shift::new(f.cdeg().iter().map(|&d| d.max(0)).collect());
        let xi = s.sum();
        let nb = match kernel_basis(&f, &s) {
            Ok(nb) => nb,
            Err(polyhermite::Error::RankDeficient { .. }) => continue,
            Err(e) => return Err(format!("instance {t}: {e}")),
        };
        ensure(f.mul(&nb).unwrap().is_zero(), || format!("instance {t}: not a kernel"))?;
        let total: i64 = nb.cdeg_shifted(&s).unwrap().iter().sum();
        ensure(total <= xi, || format!("instance {t}: kernel degree sum {total} > {xi}"))?;
        let b1 = column_basis(&f);
        let cb: i64 = b1.cdeg().iter().sum();
        ensure(cb <= xi, || format!("instance {t}: column basis degree sum {cb} > {xi}"))?;
    }
    Ok(())
}

fn invariants() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let suites: [(&str, Suite); 5] = [
        ("linearization", linearization_suite),
        ("normalization", normalization_suite),
        ("unimodular constant term", unimodular_suite),
        ("smoothing bounds", smoothing_suite),
        ("kernel degree bound", kernel_suite),
    ];
    for (name, suite) in suites {
        suite(&mut rng).map_err(|e| format!("{name}: {e}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120), "invariant suites")?;
    Ok(format!("5 suites x {INSTANCES} instances, zero violations ({elapsed:.2?})"))
}

fn scale() -> Outcome {
    let p = Prime::new((1 << 31) - 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let a = with_profile(p, 16, &mut rng, |_, _| 32);
    let start = Instant::now();
    let h = hermite(&a).map_err(|e| e.to_string())?;
    let th = start.elapsed();
    let start = Instant::now();
    let det = determinant(&a).map_err(|e| e.to_string())?;
    let td = start.elapsed();
    within(th, Duration::from_secs(60), "hermite")?;
    within(td, Duration::from_secs(60), "determinant")?;
    ensure(is_hermite(&h), || "output is not in Hermite form".into())?;
    let diag: Vec<Poly> = (0..16).map(|i| h.get(i, i).clone()).collect();
    let total: usize = diag.iter().map(|d| d.deg().unwrap()).sum();
    ensure(det.deg() == Some(total), || format!("deg det {:?}, diagonal degree sum {total}", det.deg()))?;
    ensure(monic(&det) == product(p, &diag), || "det is not a unit times the diagonal product".into())?;
    let w = polyhermite::right_factor(&a, &h).map_err(|e| e.to_string())?;
    ensure(a.mul(&w).unwrap() == h, || "A W != H".into())?;
    Ok(format!("n = 16, deg = 32: hermite {th:.2?}, determinant {td:.2?}, deg det = {total}"))
}

fn main() {
    let criteria: [(&str, Criterion); 7] = [
        ("hermite-sample", hermite_sample),
        ("determinant-sample", determinant_sample),
        ("smoothing-sample", smoothing_sample),
        ("kernel-sample", kernel_sample),
        ("oracle-sweep", oracle_sweep),
        ("invariants", invariants),
        ("scale", scale),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
