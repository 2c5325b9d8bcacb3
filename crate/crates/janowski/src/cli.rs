//! Command-line front end: single computations, parameter tables,
//! verification suites, and radial-profile dumps.
//!
//! Subcommands and exit codes:
//!
//! ```text
//! compute --a <A> --b <B> [--tol <t>] [--json]
//! table   --a-range <lo:hi:n> --b-range <lo:hi:n> --out <path> [--format csv|json]
//! verify  [--suite lemma|theorem|schwarz|all] [--samples <n>] [--seed <s>]
//! profile --a <A> --b <B> [--points <n>] --out <path>
//!
//! 0 success | 2 invalid parameters or usage | 3 suite failure | 4 I/O failure
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::norm::{self, NormResult};
use crate::params::{self, JanowskiParams};
use crate::radial;
use crate::verify;

/// One computed row, serialized identically to CSV and JSON with the fixed
/// field order A, B, norm, case, argmax_x, axis, alpha_root, beta.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub a: f64,
    pub b: f64,
    pub norm: f64,
    pub case: &'static str,
    pub argmax_x: f64,
    pub axis: char,
    pub alpha_root: Option<f64>,
    pub beta: Option<f64>,
}

impl OutputRecord {
    pub const CSV_HEADER: &'static str = "A,B,norm,case,argmax_x,axis,alpha_root,beta";

    pub fn new(p: JanowskiParams, r: &NormResult) -> Self {
        Self {
            a: p.a(),
            b: p.b(),
            norm: r.value,
            case: r.case.branch.name(),
            argmax_x: r.argmax_x,
            axis: r.axis.symbol(),
            alpha_root: r.root_cert.as_ref().map(|c| c.root),
            beta: r.case.beta,
        }
    }

    /// JSON object; numbers use the shortest round-trip representation.
    pub fn to_json(&self) -> String {
        let opt = |v: Option<f64>| match v {
            Some(x) => fmt_shortest(x),
            None => "null".into(),
        };
        format!(
            "{{\"A\":{},\"B\":{},\"norm\":{},\"case\":\"{}\",\"argmax_x\":{},\"axis\":\"{}\",\"alpha_root\":{},\"beta\":{}}}",
            fmt_shortest(self.a),
            fmt_shortest(self.b),
            fmt_shortest(self.norm),
            self.case,
            fmt_shortest(self.argmax_x),
            self.axis,
            opt(self.alpha_root),
            opt(self.beta),
        )
    }

    /// CSV row matching [`Self::CSV_HEADER`]; null fields stay empty.
    pub fn to_csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(fmt_shortest).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            fmt_shortest(self.a),
            fmt_shortest(self.b),
            fmt_shortest(self.norm),
            self.case,
            fmt_shortest(self.argmax_x),
            self.axis,
            opt(self.alpha_root),
            opt(self.beta),
        )
    }
}

/// Shortest representation that parses back to the same f64.
fn fmt_shortest(v: f64) -> String {
    format!("{v}")
}

/// Fixed significant-digit rendering for the human-readable mode.
fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

#[derive(Parser)]
#[command(
    name = "janowski",
    about = "Sharp pre-Schwarzian norms for the Janowski starlike classes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the sharp norm for one parameter pair
    Compute {
        /// Parameter A, in (-1, 1]
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        /// Parameter B, in [-1, A)
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        /// Bisection width for the quartic root
        #[arg(long, default_value_t = radial::DEFAULT_ROOT_TOL)]
        tol: f64,
        /// Emit a single JSON object instead of the human-readable block
        #[arg(long)]
        json: bool,
    },
    /// Sweep a parameter grid and write all valid pairs
    Table {
        /// A sweep as lo:hi:n
        #[arg(long = "a-range", value_name = "lo:hi:n", allow_hyphen_values = true)]
        a_range: String,
        /// B sweep as lo:hi:n
        #[arg(long = "b-range", value_name = "lo:hi:n", allow_hyphen_values = true)]
        b_range: String,
        /// Output path
        #[arg(long)]
        out: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Run the randomized verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        /// Sample count driving each randomized check
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// RNG seed; identical seeds give byte-identical output
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dump x, gamma1, gamma2, h1, h2 columns for plotting
    Profile {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        /// Number of x samples on [0, 1]
        #[arg(long, default_value_t = 512)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteChoice {
    Lemma,
    Theorem,
    Schwarz,
    All,
}

/// Run the CLI on the given argv (program name first) and return the exit
/// code. The binary is a thin wrapper over this.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            // clap routes help to stdout and errors to stderr.
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Cmd::Compute { a, b, tol, json } => compute(a, b, tol, json),
        Cmd::Table {
            a_range,
            b_range,
            out,
            format,
        } => table(&a_range, &b_range, &out, format),
        Cmd::Verify {
            suite,
            samples,
            seed,
        } => run_verify(suite, samples, seed),
        Cmd::Profile { a, b, points, out } => profile(a, b, points, &out),
    }
}

fn compute(a: f64, b: f64, tol: f64, json: bool) -> i32 {
    let p = match params::validate(a, b) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let result = match norm::preschwarzian_norm(p, tol) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let record = OutputRecord::new(p, &result);
    if json {
        println!("{}", record.to_json());
    } else {
        let opt = |v: Option<f64>| v.map(|x| fmt_sig(x, 12)).unwrap_or_else(|| "-".into());
        println!("A          = {}", fmt_sig(record.a, 12));
        println!("B          = {}", fmt_sig(record.b, 12));
        println!("norm       = {}", fmt_sig(record.norm, 12));
        println!("case       = {}", record.case);
        println!("argmax_x   = {}", fmt_sig(record.argmax_x, 12));
        println!("axis       = {}", record.axis);
        println!("alpha_root = {}", opt(record.alpha_root));
        println!("beta       = {}", opt(record.beta));
    }
    0
}

/// Parse "lo:hi:n" into n evenly spaced values.
fn parse_range(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("range must be lo:hi:n, got `{spec}`"));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|_| format!("bad range start `{}`", parts[0]))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|_| format!("bad range end `{}`", parts[1]))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| format!("bad range count `{}`", parts[2]))?;
    if n == 0 {
        return Err("range count must be at least 1".into());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect())
}

fn table(a_spec: &str, b_spec: &str, out: &Path, format: TableFormat) -> i32 {
    let (a_values, b_values) = match (parse_range(a_spec), parse_range(b_spec)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut records = Vec::new();
    let mut skipped = 0usize;
    for &a in &a_values {
        for &b in &b_values {
            match params::validate(a, b) {
                Ok(p) => match norm::sharp_norm(p) {
                    Ok(r) => records.push(OutputRecord::new(p, &r)),
                    Err(e) => {
                        eprintln!("error: norm failed at A={a}, B={b}: {e}");
                        return 1;
                    }
                },
                Err(_) => skipped += 1,
            }
        }
    }
    // Output order is (A, B) lexicographic regardless of sweep direction.
    records.sort_by(|x, y| x.a.total_cmp(&y.a).then(x.b.total_cmp(&y.b)));

    let mut body = String::new();
    match format {
        TableFormat::Csv => {
            let _ = writeln!(body, "{}", OutputRecord::CSV_HEADER);
            for r in &records {
                let _ = writeln!(body, "{}", r.to_csv_row());
            }
            let _ = writeln!(body, "# skipped {skipped} invalid pairs");
        }
        TableFormat::Json => {
            // JSON carries the skip count as a field; comments are not JSON.
            let _ = writeln!(body, "{{\"records\":[");
            for (i, r) in records.iter().enumerate() {
                let sep = if i + 1 < records.len() { "," } else { "" };
                let _ = writeln!(body, "{}{}", r.to_json(), sep);
            }
            let _ = writeln!(body, "],\"skipped_invalid_pairs\":{skipped}}}");
        }
    }
    if let Err(e) = std::fs::write(out, body) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return 4;
    }
    0
}

fn run_verify(suite: SuiteChoice, samples: usize, seed: u64) -> i32 {
    let name = match suite {
        SuiteChoice::Lemma => "lemma",
        SuiteChoice::Theorem => "theorem",
        SuiteChoice::Schwarz => "schwarz",
        SuiteChoice::All => "all",
    };
    println!("# suite={name} samples={samples} seed={seed}");
    let outcomes = match suite {
        SuiteChoice::Lemma => verify::lemma_suite(samples, seed),
        SuiteChoice::Theorem => verify::theorem_suite(samples, seed),
        SuiteChoice::Schwarz => verify::schwarz_suite(samples, seed),
        SuiteChoice::All => verify::all_suites(samples, seed),
    };
    let mut ok = true;
    for outcome in &outcomes {
        println!("{}", outcome.render());
        ok &= outcome.ok();
    }
    if ok {
        0
    } else {
        3
    }
}

fn profile(a: f64, b: f64, points: usize, out: &Path) -> i32 {
    let p = match params::validate(a, b) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if points < 2 {
        eprintln!("error: --points must be at least 2");
        return 2;
    }
    let mut body = String::from("x,gamma1,gamma2,h1,h2\n");
    for i in 0..points {
        let x = i as f64 / (points - 1) as f64;
        let _ = writeln!(
            body,
            "{},{},{},{},{}",
            fmt_shortest(x),
            fmt_shortest(radial::gamma(radial::RadialProfile::Gamma1, p, x)),
            fmt_shortest(radial::gamma(radial::RadialProfile::Gamma2, p, x)),
            fmt_shortest(radial::h1(p, x)),
            fmt_shortest(radial::h2(p, x)),
        );
    }
    if let Err(e) = std::fs::write(out, body) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return 4;
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_format_round_trips() {
        for v in [6.0, -1.0, 0.1, 1.0 / 3.0, 2.25, 0.405_747_285_756_46] {
            let s = fmt_shortest(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, v, "{s}");
        }
        assert_eq!(fmt_shortest(6.0), "6");
        assert_eq!(fmt_shortest(-1.0), "-1");
    }

    #[test]
    fn significant_digit_format() {
        assert_eq!(fmt_sig(6.0, 12), "6.00000000000");
        assert_eq!(fmt_sig(0.5, 12), "0.500000000000");
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(-2.25, 12), "-2.25000000000");
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_range("-1:-1:1").unwrap(), vec![-1.0]);
        assert!(parse_range("0:1").is_err());
        assert!(parse_range("0:1:0").is_err());
        assert!(parse_range("x:1:3").is_err());
    }

    #[test]
    fn record_serialization_shapes() {
        let p = params::validate(1.0, -1.0).unwrap();
        let r = norm::sharp_norm(p).unwrap();
        let rec = OutputRecord::new(p, &r);
        assert_eq!(
            rec.to_json(),
            "{\"A\":1,\"B\":-1,\"norm\":6,\"case\":\"B_NEG1\",\"argmax_x\":1,\"axis\":\"+\",\"alpha_root\":null,\"beta\":null}"
        );
        assert_eq!(rec.to_csv_row(), "1,-1,6,B_NEG1,1,+,,");
    }
}
