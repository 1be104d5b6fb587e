use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polyhermite::oracle::{self, det_oracle, hermite_oracle};
use polyhermite::reduce::column_reduce_tracked;
use polyhermite::{
    determinant, format_pmat, hermite, hermite_diagonal, is_hermite, kernel_basis, parse_pmat,
    parse_shift, right_factor, smooth, Error, Poly, PolyMat, Shift,
};

/// Hermite normal form and determinant of polynomial matrices over GF(p).
#[derive(Parser)]
#[command(name = "polyhermite", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Column Hermite normal form
    Hnf(Common),
    /// Determinant, as one line of ascending coefficients
    Det(Common),
    /// Diagonal of the Hermite form, one entry per line
    Diag(Common),
    /// Shifted column reduction
    Reduce(Shifted),
    /// Shift-minimal kernel basis
    Kernel(Shifted),
    /// Degree-smoothed matrix with the same determinant
    Smooth(Common),
}

#[derive(Args)]
struct Common {
    file: PathBuf,
    /// Write the result here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Verify the result before printing it
    #[arg(long)]
    check: bool,
    /// Use the brute-force reference computation (small matrices only)
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct Shifted {
    /// Comma-separated integer shift
    #[arg(long, allow_hyphen_values = true)]
    shift: String,
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome<T> = Result<T, Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Singular | Error::RankDeficient { .. } => 2,
        Error::Parse { .. } | Error::NotPrime(_) | Error::ModulusOutOfRange(_) => 3,
        Error::SizeGuard { .. } => 4,
        _ => 1,
    }
}

fn check(cond: bool, what: &str) -> Outcome<()> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Check(what.into()))
    }
}

fn monic(f: &Poly) -> Poly {
    f.monic().map(|(m, _)| m).unwrap_or_else(|_| f.clone())
}

fn product(p: polyhermite::Prime, fs: &[Poly]) -> Poly {
    fs.iter().fold(Poly::one(p), |acc, f| &acc * f)
}

fn poly_line(f: &Poly) -> String {
    format!("{}\n", polyhermite::io::format_poly(f))
}

fn square(a: &PolyMat) -> Outcome<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("{}x{} input is not square", a.rows(), a.cols())).into())
    }
}

fn no_oracle(c: &Common, name: &str) -> Outcome<()> {
    if c.oracle {
        return Err(Failure::Usage(format!("--oracle is not available for {name}")));
    }
    Ok(())
}

fn run_hnf(a: &PolyMat, c: &Common) -> Outcome<String> {
    square(a)?;
    let h = if c.oracle { hermite_oracle(a)? } else { hermite(a)? };
    if c.check {
        check(is_hermite(&h), "result is not in Hermite form")?;
        let w = right_factor(a, &h).map_err(|_| Failure::Check("result is not a right multiple".into()))?;
        check(a.mul(&w)? == h, "A W differs from the result")?;
        let det_w = determinant(&w).map_err(|_| Failure::Check("transform is singular".into()))?;
        check(det_w.deg() == Some(0), "transform is not unimodular")?;
        let diag: Vec<Poly> = (0..h.rows()).map(|i| h.get(i, i).clone()).collect();
        check(product(a.modulus(), &diag) == monic(&determinant(a)?), "diagonal product differs from det")?;
    }
    Ok(format_pmat(&h))
}

fn run_det(a: &PolyMat, c: &Common) -> Outcome<String> {
    square(a)?;
    let d = if c.oracle { det_oracle(a)? } else { determinant(a)? };
    if d.is_zero() {
        return Err(Error::Singular.into());
    }
    if c.check {
        let diag = hermite_diagonal(a)?;
        check(product(a.modulus(), &diag) == monic(&d), "det differs from the diagonal product")?;
        check(d.coeff(0) == a.constant().det()?, "constant term differs from det A(0)")?;
        if a.rows() <= oracle::DET_LIMIT && !c.oracle {
            check(det_oracle(a)? == d, "det differs from cofactor expansion")?;
        }
    }
    Ok(poly_line(&d))
}

fn run_diag(a: &PolyMat, c: &Common) -> Outcome<String> {
    square(a)?;
    let diag = if c.oracle {
        let h = hermite_oracle(a)?;
        (0..h.rows()).map(|i| h.get(i, i).clone()).collect()
    } else {
        hermite_diagonal(a)?
    };
    if c.check {
        check(diag.iter().all(Poly::is_monic), "diagonal entries are not monic")?;
        check(product(a.modulus(), &diag) == monic(&determinant(a)?), "diagonal product differs from det")?;
    }
    Ok(diag.iter().map(poly_line).collect())
}

fn run_reduce(a: &PolyMat, s: &Shift, c: &Common) -> Outcome<String> {
    no_oracle(c, "reduce")?;
    square(a)?;
    let (r, u) = column_reduce_tracked(a, s)?;
    if c.check {
        check(r.is_column_reduced(s)?, "result is not column reduced")?;
        check(a.mul(&u)? == r, "A U differs from the result")?;
        check(determinant(&u)?.deg() == Some(0), "transform is not unimodular")?;
    }
    Ok(format_pmat(&r))
}

fn run_kernel(a: &PolyMat, s: &Shift, c: &Common) -> Outcome<String> {
    no_oracle(c, "kernel")?;
    let k = kernel_basis(a, s)?;
    if c.check {
        check(a.mul(&k)?.is_zero(), "result is not in the kernel")?;
        check(k.leading_matrix(s)?.rank() == k.cols(), "result is not shift reduced")?;
    }
    Ok(format_pmat(&k))
}

fn run_smooth(a: &PolyMat, c: &Common) -> Outcome<String> {
    no_oracle(c, "smooth")?;
    square(a)?;
    let (m, info) = smooth(a)?;
    if c.check {
        check(info.n <= info.m && info.m < 3 * info.n.max(1), "dimension bound violated")?;
        check(determinant(&m)? == determinant(a)?, "determinant changed")?;
    }
    Ok(format_pmat(&m))
}

fn execute(cli: &Cli) -> Outcome<(String, Option<PathBuf>)> {
    let (common, shift) = match &cli.command {
        Command::Hnf(c) | Command::Det(c) | Command::Diag(c) | Command::Smooth(c) => (c, None),
        Command::Reduce(s) | Command::Kernel(s) => (&s.common, Some(&s.shift)),
    };
    let text = fs::read_to_string(&common.file)
        .map_err(|e| Failure::Usage(format!("{}: {e}", common.file.display())))?;
    let a = parse_pmat(&text)?;
    let shift = shift.map(|s| parse_shift(s)).transpose()?;
    let out = match &cli.command {
        Command::Hnf(c) => run_hnf(&a, c)?,
        Command::Det(c) => run_det(&a, c)?,
        Command::Diag(c) => run_diag(&a, c)?,
        Command::Smooth(c) => run_smooth(&a, c)?,
        Command::Reduce(s) => run_reduce(&a, shift.as_ref().unwrap(), &s.common)?,
        Command::Kernel(s) => run_kernel(&a, shift.as_ref().unwrap(), &s.common)?,
    };
    Ok((out, common.output.clone()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok((out, None)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(out.as_bytes()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok((out, Some(path))) => match fs::write(&path, out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                ExitCode::from(1)
            }
        },
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
