//! Command-line front-end: argument parsing, trace rendering and dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kuttaka::bench::{render_csv, run_bench, BenchConfig};
use kuttaka::{
    crt_solve, euclid_chain_normalized, mod_inverse, solve_unity, Algo, BezoutResult, Congruence, DivisionChain,
    Error, Integer, KuttakaTrace, RemainderMode,
};
use num_bigint::Sign;
use num_integer::Integer as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_INVERSE: i32 = 3;
pub const EXIT_NON_COPRIME_MODULI: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;
pub const EXIT_IO: i32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gcd { a: Integer, b: Integer, mode: RemainderMode, trace: bool, unsigned: bool },
    Inv { a: Integer, m: Integer, algo: Algo, trace: bool },
    Unity { a: Integer, b: Integer, algo: Algo, trace: bool },
    Crt { congruences: Vec<Congruence>, algo: Algo },
    Bench { config: BenchConfig, out: Option<PathBuf> },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Lpr,
    Lar,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Eea,
    Ieea,
    Aa,
    Faa,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Eea => Algo::EeaClassic,
            AlgoArg::Ieea => Algo::EeaAbsolute,
            AlgoArg::Aa => Algo::KuttakaClassic,
            AlgoArg::Faa => Algo::KuttakaFast,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "kuttaka", about = "Modular inverses, GCDs and congruences by Euclid and Kuttaka")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct AlgoFlags {
    /// eea, ieea (absolute remainders), aa (Kuttaka), faa (fast Kuttaka)
    #[arg(long, value_enum, default_value = "faa")]
    algo: AlgoArg,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Greatest common divisor of two positive integers.
    #[command(allow_negative_numbers = true)]
    Gcd {
        #[arg(value_parser = parse_int)]
        a: Integer,
        #[arg(value_parser = parse_int)]
        b: Integer,
        #[arg(long, value_enum, default_value = "lpr")]
        mode: ModeArg,
        #[arg(long)]
        trace: bool,
        /// Write absolute-remainder traces with unsigned quotients.
        #[arg(long)]
        unsigned: bool,
    },
    /// Multiplicative inverse of a modulo m.
    #[command(allow_negative_numbers = true)]
    Inv {
        #[arg(value_parser = parse_int)]
        a: Integer,
        #[arg(value_parser = parse_modulus)]
        m: Integer,
        #[command(flatten)]
        algo: AlgoFlags,
        #[arg(long)]
        trace: bool,
    },
    /// Coefficients x, y with a*x + b*y = 1.
    #[command(allow_negative_numbers = true)]
    Unity {
        #[arg(value_parser = parse_int)]
        a: Integer,
        #[arg(value_parser = parse_int)]
        b: Integer,
        #[command(flatten)]
        algo: AlgoFlags,
        #[arg(long)]
        trace: bool,
    },
    /// Solve a system of congruences given as residue:modulus pairs.
    #[command(allow_negative_numbers = true)]
    Crt {
        #[arg(required = true, value_parser = parse_congruence)]
        congruences: Vec<Congruence>,
        #[command(flatten)]
        algo: AlgoFlags,
    },
    /// Step-count benchmark over random or enumerated coprime pairs.
    Bench {
        #[arg(long, default_value_t = 8)]
        min_bits: u32,
        #[arg(long, default_value_t = 64)]
        max_bits: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        exhaustive: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_int(s: &str) -> Result<Integer, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(format!("{s:?} is not a decimal integer"));
    }
    s.parse().map_err(|_| format!("{s:?} is not a decimal integer"))
}

fn parse_modulus(s: &str) -> Result<Integer, String> {
    let m = parse_int(s)?;
    if m <= Integer::from(1) {
        return Err(format!("modulus must exceed 1, got {m}"));
    }
    Ok(m)
}

fn parse_congruence(s: &str) -> Result<Congruence, String> {
    let (r, m) = s.split_once(':').ok_or_else(|| format!("{s:?} is not of the form residue:modulus"))?;
    Congruence::new(parse_int(r)?, parse_modulus(m)?).map_err(|e| e.to_string())
}

/// Parses `argv` (including the program name) into a [`Command`].
pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    // clap treats "-1:5" as a flag; rewrite negative residues to their
    // nonnegative representative, which is what Congruence stores anyway.
    if argv.get(1).is_some_and(|s| s == "crt") {
        for tok in argv.iter_mut().skip(2) {
            let Some(s) = tok.to_str() else { continue };
            if s.starts_with('-') && s.contains(':') {
                if let Ok(c) = parse_congruence(s) {
                    *tok = format!("{}:{}", c.residue(), c.modulus()).into();
                }
            }
        }
    }
    let cli = Cli::try_parse_from(argv)?;
    Ok(match cli.command {
        Sub::Gcd { a, b, mode, trace, unsigned } => {
            let mode = match mode {
                ModeArg::Lpr => RemainderMode::LeastPositive,
                ModeArg::Lar => RemainderMode::LeastAbsolute,
            };
            Command::Gcd { a, b, mode, trace, unsigned }
        }
        Sub::Inv { a, m, algo, trace } => Command::Inv { a, m, algo: algo.algo.into(), trace },
        Sub::Unity { a, b, algo, trace } => Command::Unity { a, b, algo: algo.algo.into(), trace },
        Sub::Crt { congruences, algo } => Command::Crt { congruences, algo: algo.algo.into() },
        Sub::Bench { min_bits, max_bits, samples, seed, exhaustive, out } => Command::Bench {
            config: BenchConfig {
                min_bits,
                max_bits,
                samples,
                seed,
                exhaustive_limit: exhaustive,
                ..BenchConfig::default()
            },
            out,
        },
    })
}

fn signed(v: &Integer) -> String {
    match v.sign() {
        Sign::Minus => format!("({v})"),
        _ => v.to_string(),
    }
}

/// `dividend = divisor · quotient + remainder`, one line per division, with
/// dividends right-aligned. Negative values are parenthesized; with
/// `unsigned` every value is written as a magnitude and the remainder's sign
/// becomes the operator.
pub fn render_chain(chain: &DivisionChain, unsigned: bool) -> String {
    let width = chain.steps.iter().map(|s| s.dividend.magnitude().to_string().len()).max().unwrap_or(0);
    let mut out = String::new();
    for s in &chain.steps {
        let line = if unsigned {
            let rest = match s.remainder.sign() {
                Sign::NoSign => String::new(),
                Sign::Minus => format!(" - {}", s.remainder.magnitude()),
                Sign::Plus => format!(" + {}", s.remainder),
            };
            format!(
                "{:>width$} = {} · {}{rest}",
                s.dividend.magnitude().to_string(),
                s.divisor.magnitude(),
                s.quotient.magnitude()
            )
        } else {
            let rest = match s.remainder.sign() {
                Sign::NoSign => String::new(),
                _ => format!(" + {}", signed(&s.remainder)),
            };
            format!("{:>width$} = {} · {}{rest}", signed(&s.dividend), signed(&s.divisor), signed(&s.quotient))
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([headers[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let mut s = s.join(" | ");
        s.truncate(s.trim_end().len());
        s + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Five-column `i | r_i | q_i | x_i | y_i` table. When the chain ends on a
/// negative remainder, `x` and `y` are shown negated throughout (seeds
/// `(-1, 0)` and `(0, -1)`), so the last row reads off the `+gcd` solution.
pub fn render_eea(result: &BezoutResult) -> String {
    let flip = result.rows.last().is_some_and(|r| r.r.sign() == Sign::Minus);
    let show = |v: &Integer| if flip { (-v).to_string() } else { v.to_string() };
    let mut rows: Vec<Vec<String>> = result
        .rows
        .iter()
        .map(|r| {
            vec![
                r.index.to_string(),
                r.r.to_string(),
                r.q.as_ref().map_or_else(|| "-".to_string(), Integer::to_string),
                show(&r.x),
                show(&r.y),
            ]
        })
        .collect();
    let next = result.rows.last().map_or(1, |r| r.index + 1);
    rows.push(vec![next.to_string(), "0".into(), String::new(), String::new(), String::new()]);
    render_table(&["i", "r_i", "q_i", "x_i", "y_i"], &rows)
}

/// `i | r_i | q_i | S_i` table over the Valli, closed by `S_{n+1} = 1`.
pub fn render_kuttaka(trace: &KuttakaTrace) -> String {
    let mut rows: Vec<Vec<String>> = trace
        .valli
        .remainders()
        .zip(&trace.valli.quotients)
        .zip(trace.s_table.entries())
        .map(|((r, q), (i, s))| vec![i.to_string(), r.to_string(), q.to_string(), s.to_string()])
        .collect();
    let n = trace.s_table.n();
    rows.push(vec![(n + 1).to_string(), String::new(), String::new(), trace.s_table.get(n + 1).to_string()]);
    let mut out = render_table(&["i", "r_i", "q_i", "S_i"], &rows);
    out.push_str(&format!("final remainder: {}\n", trace.valli.final_remainder_sign));
    out
}

fn render_bezout(result: &BezoutResult) -> String {
    let mut out = match &result.kuttaka {
        Some(t) => render_kuttaka(t),
        None if result.rows.is_empty() => String::new(),
        None => render_eea(result),
    };
    out.push_str(&format!("coefficients: {} · {} + {} · {} = 1\n", result.a, signed(&result.x), result.b, signed(&result.y)));
    out
}

/// Runs a parsed command, writing its output to `out`.
pub fn execute(cmd: &Command, out: &mut impl Write) -> Result<(), Error> {
    match cmd {
        Command::Gcd { a, b, mode, trace, unsigned } => {
            let chain = euclid_chain_normalized(a, b, *mode)?;
            if *trace {
                write!(out, "{}", render_chain(&chain, *unsigned))?;
            }
            writeln!(out, "result: {}", chain.gcd)?;
        }
        Command::Inv { a, m, algo, trace } => {
            let positive = if a.sign() == Sign::Plus { a.clone() } else { a.mod_floor(m) };
            if positive.sign() == Sign::NoSign {
                return Err(Error::NoInverse { gcd: m.clone() });
            }
            let result = solve_unity(&positive, m, *algo)?;
            let inverse = result.a_inv_mod_b.clone().expect("coprime");
            debug_assert_eq!(Some(&inverse), mod_inverse(a, m, *algo).ok().as_ref());
            if *trace {
                write!(out, "{}", render_bezout(&result))?;
            }
            writeln!(out, "result: {inverse}")?;
        }
        Command::Unity { a, b, algo, trace } => {
            let result = solve_unity(a, b, *algo)?;
            if *trace {
                write!(out, "{}", render_bezout(&result))?;
            }
            writeln!(out, "result: x={} y={}", result.x, result.y)?;
        }
        Command::Crt { congruences, algo } => {
            writeln!(out, "result: {}", crt_solve(congruences, *algo)?)?;
        }
        Command::Bench { config, out: path } => {
            let report = run_bench(config)?;
            let csv = render_csv(&report);
            match path {
                Some(p) => std::fs::write(p, &csv)?,
                None => write!(out, "{csv}")?,
            }
            writeln!(out, "result: {}", report.len())?;
        }
    }
    Ok(())
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NoInverse { .. } => EXIT_NO_INVERSE,
        Error::NonCoprimeModuli { .. } => EXIT_NON_COPRIME_MODULI,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_DOMAIN,
    }
}

/// Parses and executes `argv`, returning the process exit status.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(&cmd, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
