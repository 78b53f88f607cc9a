use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use map_core::enumerate::{count_table, enumerate_paths};
use map_core::formulas::{Evaluator, Formula};
use map_core::kernel::gf_closed_forms;
use map_core::oeis::{OeisClient, OeisError};
use map_core::path::{render_path, Family};
use map_core::riordan::{pseudo_involution_check, rectify, Matrix, NamedArray};
use map_core::series::{named_series, NamedSeries, USeries};
use map_core::triangles::{build_triangle, Route, Triangle};
use map_core::verify::{run_suite, Options, Suite, VerifyError};
use map_core::Report;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

#[derive(Parser)]
#[command(name = "map", version, about = "Motzkin paths with air pockets: enumeration, triangles, series and checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List or count paths of one length.
    Enumerate(EnumerateArgs),
    /// Print a block of a counting triangle.
    Triangle {
        family: Family,
        rows: usize,
        cols: usize,
        #[arg(long, default_value = "enum")]
        route: Route,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[arg(long, default_value_t = 16)]
        width: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print coefficients of a named series or a family generating function.
    Series {
        /// catalan, motzkin, riordan, or a family tag.
        name: String,
        /// total@u=0, total@u=1, antidiag, "column K", "f K", "g K" or "h K".
        #[arg(long, default_value = "total@u=0")]
        which: String,
        #[arg(long, default_value_t = 9)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Riordan array operations.
    Riordan {
        #[command(subcommand)]
        op: RiordanOp,
    },
    /// Evaluate a closed-form sum at (n, k).
    Formula {
        name: Formula,
        n: i64,
        k: i64,
    },
    /// Print a reference sequence (embedded, cached or fetched).
    Oeis {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    family: Family,
    /// Path length.
    n: Option<usize>,
    /// Only paths ending at this height.
    #[arg(long)]
    k: Option<usize>,
    /// Highest end height considered (defaults to n).
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, conflicts_with = "count")]
    list: bool,
    #[arg(long)]
    count: bool,
    /// Counts for every end height 0..=cap.
    #[arg(long)]
    by_height: bool,
    /// Paths ending on the line y = N - x.
    #[arg(long, value_name = "N", conflicts_with = "n")]
    antidiagonal: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand)]
enum RiordanOp {
    /// Leading block of a named array.
    Matrix {
        array: NamedArray,
        #[arg(long, default_value_t = 8)]
        size: usize,
    },
    /// Leading block of the inverse.
    Inverse {
        array: NamedArray,
        #[arg(long, default_value_t = 8)]
        size: usize,
    },
    /// Leading block of the product `a * b`.
    Mul {
        a: NamedArray,
        b: NamedArray,
        #[arg(long, default_value_t = 8)]
        size: usize,
    },
    /// Rectification `g / (1 - u f / z)`.
    Rectify {
        array: NamedArray,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[arg(long, default_value_t = 6)]
        cols: usize,
    },
    /// Whether the column-signed array squares to the identity.
    PseudoInvolution {
        array: NamedArray,
        #[arg(long, default_value_t = 16)]
        size: usize,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Environment(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Oeis(e) => e.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<OeisError> for Failure {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::BadId(_) | OeisError::UnknownSequence(_) => Failure::Usage(e.to_string()),
            _ => Failure::Environment(e.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn num(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    match writeln!(out, "{text}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => r.map_err(|e| Failure::Environment(e.to_string())),
    }
}

fn print_sequence(name: &str, terms: &[BigInt], format: Format) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match format {
        Format::Plain => emit(&mut out, &join(terms)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "value"]).map_err(usage)?;
            for (n, x) in terms.iter().enumerate() {
                w.write_record([n.to_string(), x.to_string()]).map_err(usage)?;
            }
            w.flush().map_err(|e| Failure::Environment(e.to_string()))
        }
        Format::Json => {
            let v = json!({ "name": name, "terms": terms.iter().map(num).collect::<Vec<_>>() });
            emit(&mut out, &v.to_string())
        }
    }
}

fn print_triangle(t: &Triangle, format: Format) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match format {
        Format::Plain => {
            for row in &t.data {
                emit(&mut out, &join(row))?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "k", "count"]).map_err(usage)?;
            for (n, row) in t.data.iter().enumerate() {
                for (k, x) in row.iter().enumerate() {
                    w.write_record([n.to_string(), k.to_string(), x.to_string()]).map_err(usage)?;
                }
            }
            w.flush().map_err(|e| Failure::Environment(e.to_string()))
        }
        Format::Json => {
            let data: Vec<Value> = t.data.iter().map(|r| Value::Array(r.iter().map(num).collect())).collect();
            let v = json!({
                "family": t.family.to_string(),
                "route": t.route.to_string(),
                "rows": t.rows,
                "cols": t.cols,
                "data": data,
            });
            emit(&mut out, &v.to_string())
        }
    }
}

fn print_matrix(m: &Matrix) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    for row in m {
        emit(&mut out, &row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))?;
    }
    Ok(())
}

fn print_report(r: &Report, format: Format) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => emit(&mut out, &serde_json::to_string(r).map_err(usage)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["suite", "name", "status", "detail"]).map_err(usage)?;
            for c in &r.checks {
                w.write_record([r.suite.as_str(), &c.name, &c.status.to_string(), &c.detail]).map_err(usage)?;
            }
            w.flush().map_err(|e| Failure::Environment(e.to_string()))
        }
        Format::Plain => emit(&mut out, r.to_string().trim_end()),
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<(), Failure> {
    let f = a.family;
    if let Some(big_n) = a.antidiagonal {
        let t = count_table(f, big_n, big_n);
        if a.list {
            let mut out = io::stdout().lock();
            for x in 0..=big_n {
                let h = big_n - x;
                for p in enumerate_paths(f, x, h).filter(|p| p.end_height() == h as i64) {
                    emit(&mut out, &format!("[{}]", render_path(&p)))?;
                }
            }
            return Ok(());
        }
        let per_x: Vec<BigInt> = (0..=big_n).map(|x| t.counts[x][big_n - x].clone()).collect();
        if a.by_height {
            return print_sequence("antidiagonal", &per_x, a.format);
        }
        let total: BigInt = per_x.iter().sum();
        return print_sequence("antidiagonal", &[total], a.format);
    }
    let n = a.n.ok_or_else(|| usage("a path length or --antidiagonal is required"))?;
    let cap = a.k.or(a.cap).unwrap_or(n);
    if a.list {
        let mut out = io::stdout().lock();
        for p in enumerate_paths(f, n, cap) {
            if a.k.is_none_or(|k| p.end_height() == k as i64) {
                let line = match a.format {
                    Format::Json => json!({ "steps": render_path(&p), "end_height": p.end_height() }).to_string(),
                    _ => render_path(&p),
                };
                emit(&mut out, if line.is_empty() { "[]" } else { &line })?;
            }
        }
        return Ok(());
    }
    let t = count_table(f, n, cap);
    let row = &t.counts[n];
    if a.by_height {
        return print_sequence("by_height", row, a.format);
    }
    let count: BigInt = match a.k {
        Some(k) => row[k].clone(),
        None => row.iter().sum(),
    };
    print_sequence("count", &[count], a.format)
}

fn family_series(f: Family, which: &str, order: usize) -> Result<Vec<BigInt>, Failure> {
    let b = gf_closed_forms(f, order, order).map_err(usage)?;
    let prec = order + 1;
    let parts: Vec<&str> = which.split_whitespace().collect();
    let ints = |s: &USeries| s.to_integers().map_err(usage);
    match parts.as_slice() {
        ["total@u=0"] => ints(&b.total_col[0]),
        ["total@u=1"] => {
            // heights never exceed the length, so the window is complete
            let s = b.total().eval_u(&USeries::one(prec), !f.is_reversed()).map_err(usage)?;
            ints(&s)
        }
        ["antidiag"] => Ok((0..=order).map(|n| (0..=n).map(|x| b.total_at(x, n - x)).sum()).collect()),
        [kind @ ("column" | "f" | "g" | "h"), k] => {
            let k: usize = k.parse().map_err(|_| usage(format!("bad column index '{k}'")))?;
            let cols = match *kind {
                "column" => &b.total_col,
                "f" => &b.f,
                "g" => &b.g,
                _ => &b.h,
            };
            ints(cols.get(k).ok_or_else(|| usage(format!("column {k} outside width {order}")))?)
        }
        _ => Err(usage(format!("unknown --which '{which}'"))),
    }
}

fn cmd_series(name: &str, which: &str, order: usize, format: Format) -> Result<(), Failure> {
    let terms = match Family::from_str(name) {
        Ok(f) => family_series(f, which, order)?,
        Err(_) => {
            let s = NamedSeries::from_str(name).map_err(usage)?;
            named_series(s, order).to_integers().map_err(usage)?
        }
    };
    print_sequence(name, &terms, format)
}

fn cmd_riordan(op: RiordanOp) -> Result<(), Failure> {
    match op {
        RiordanOp::Matrix { array, size } => print_matrix(&array.build(size + 1).matrix(size).map_err(usage)?),
        RiordanOp::Inverse { array, size } => {
            let inv = array.build(size + 1).inverse().map_err(usage)?;
            print_matrix(&inv.matrix(size).map_err(usage)?)
        }
        RiordanOp::Mul { a, b, size } => {
            let p = a.build(size + 1).mul(&b.build(size + 1)).map_err(usage)?;
            print_matrix(&p.matrix(size).map_err(usage)?)
        }
        RiordanOp::Rectify { array, rows, cols } => {
            print_matrix(&rectify(&array.build(rows + cols + 2), rows, cols).map_err(usage)?)
        }
        RiordanOp::PseudoInvolution { array, size } => {
            let p = pseudo_involution_check(&array.build(size + 1), size).map_err(usage)?;
            let mut out = io::stdout().lock();
            emit(&mut out, &format!("involution={} idempotent={}", p.involution, p.idempotent))?;
            if p.involution {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Triangle { family, rows, cols, route, format } => {
            print_triangle(&build_triangle(family, route, rows, cols).map_err(usage)?, format)
        }
        Command::Verify { suite, order, width, format } => {
            let r = run_suite(suite, Options { order, width })?;
            print_report(&r, format)?;
            if r.is_clean() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Series { name, which, order, format } => cmd_series(&name, &which, order, format),
        Command::Riordan { op } => cmd_riordan(op),
        Command::Formula { name, n, k } => {
            if n < 0 || k < 0 || (name.needs_n_ge_k() && k > n) {
                return Err(usage(format!("{name} needs 0 <= k <= n")));
            }
            let v = name.eval(&mut Evaluator::new(), n, k);
            emit(&mut io::stdout().lock(), &v.to_string())
        }
        Command::Oeis { id, format } => {
            let s = OeisClient::from_env().load_reference(&id)?;
            print_sequence(&s.id, &s.terms, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Environment(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
