//! Python bindings: `import kuttaka`.

use kuttaka::bench::{render_csv, run_bench, BenchConfig};
use kuttaka::{Algo, Congruence, Error, RemainderMode};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

create_exception!(kuttaka, NoInverseError, PyValueError, "Operands share a factor; no inverse exists.");
create_exception!(kuttaka, NonCoprimeModuliError, PyValueError, "Two moduli of a congruence system share a factor.");
create_exception!(kuttaka, UnsolvableError, PyValueError, "The linear equation has no integer solution.");

fn to_py(err: Error) -> PyErr {
    let msg = err.to_string();
    match err {
        Error::NoInverse { .. } => NoInverseError::new_err(msg),
        Error::NonCoprimeModuli { .. } => NonCoprimeModuliError::new_err(msg),
        Error::Unsolvable { .. } => UnsolvableError::new_err(msg),
        Error::Io(_) => PyIOError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

/// Accepts the short flag (`eea`, `ieea`, `aa`, `faa`) or the long name.
pub fn parse_algo(name: &str) -> Result<Algo, Error> {
    name.parse()
}

pub fn parse_mode(name: &str) -> Result<RemainderMode, Error> {
    match name {
        "lpr" | "least_positive" => Ok(RemainderMode::LeastPositive),
        "lar" | "least_absolute" => Ok(RemainderMode::LeastAbsolute),
        _ => Err(Error::Domain(format!("unknown remainder mode {name:?}"))),
    }
}

/// Result of a Bezout solve: `a*x + b*y == gcd`.
#[pyclass(name = "BezoutResult", module = "kuttaka", frozen)]
struct PyBezoutResult {
    #[pyo3(get)]
    a: BigInt,
    #[pyo3(get)]
    b: BigInt,
    #[pyo3(get)]
    x: BigInt,
    #[pyo3(get)]
    y: BigInt,
    #[pyo3(get)]
    gcd: BigInt,
    #[pyo3(get)]
    a_inv_mod_b: Option<BigInt>,
    #[pyo3(get)]
    b_inv_mod_a: Option<BigInt>,
    #[pyo3(get)]
    step_count: usize,
    /// `(i, r_i, q_i, x_i, y_i)` rows; `q_i` is `None` on the seed rows.
    #[pyo3(get)]
    rows: Vec<(i64, BigInt, Option<BigInt>, BigInt, BigInt)>,
    #[pyo3(get)]
    valli: Vec<BigInt>,
    #[pyo3(get)]
    s_table: Vec<BigInt>,
}

impl From<kuttaka::BezoutResult> for PyBezoutResult {
    fn from(r: kuttaka::BezoutResult) -> Self {
        let (valli, s_table) = match r.kuttaka {
            Some(t) => (t.valli.quotients, t.s_table.values().to_vec()),
            None => (Vec::new(), Vec::new()),
        };
        PyBezoutResult {
            rows: r.rows.into_iter().map(|row| (row.index, row.r, row.q, row.x, row.y)).collect(),
            a: r.a,
            b: r.b,
            x: r.x,
            y: r.y,
            gcd: r.gcd,
            a_inv_mod_b: r.a_inv_mod_b,
            b_inv_mod_a: r.b_inv_mod_a,
            step_count: r.step_count,
            valli,
            s_table,
        }
    }
}

#[pymethods]
impl PyBezoutResult {
    fn __repr__(&self) -> String {
        format!("BezoutResult(a={}, b={}, x={}, y={}, gcd={})", self.a, self.b, self.x, self.y, self.gcd)
    }
}

#[pyfunction]
#[pyo3(signature = (a, b, mode = "lpr"))]
fn gcd(a: BigInt, b: BigInt, mode: &str) -> PyResult<BigInt> {
    kuttaka::gcd(&a, &b, parse_mode(mode).map_err(to_py)?).map_err(to_py)
}

/// Division chain as `(dividend, divisor, quotient, remainder)` tuples.
#[pyfunction]
#[pyo3(signature = (a, b, mode = "lpr"))]
fn euclid_chain(a: BigInt, b: BigInt, mode: &str) -> PyResult<Vec<(BigInt, BigInt, BigInt, BigInt)>> {
    let chain = kuttaka::euclid_chain(&a, &b, parse_mode(mode).map_err(to_py)?).map_err(to_py)?;
    Ok(chain.steps.into_iter().map(|s| (s.dividend, s.divisor, s.quotient, s.remainder)).collect())
}

#[pyfunction]
#[pyo3(signature = (a, m, algo = "faa"))]
fn mod_inverse(a: BigInt, m: BigInt, algo: &str) -> PyResult<BigInt> {
    kuttaka::mod_inverse(&a, &m, parse_algo(algo).map_err(to_py)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, b, algo = "faa"))]
fn solve_unity(a: BigInt, b: BigInt, algo: &str) -> PyResult<PyBezoutResult> {
    kuttaka::solve_unity(&a, &b, parse_algo(algo).map_err(to_py)?).map(Into::into).map_err(to_py)
}

/// Solves `a*x + b*y == c`; returns `(x0, y0, x_step, y_step, gcd)`.
#[pyfunction]
#[pyo3(signature = (a, b, c, algo = "faa"))]
fn solve_linear(a: BigInt, b: BigInt, c: BigInt, algo: &str) -> PyResult<(BigInt, BigInt, BigInt, BigInt, BigInt)> {
    let s = kuttaka::solve_linear_with(&a, &b, &c, parse_algo(algo).map_err(to_py)?).map_err(to_py)?;
    Ok((s.x0, s.y0, s.x_step, s.y_step, s.gcd))
}

/// Solves a system given as `[(residue, modulus), ...]`.
#[pyfunction]
#[pyo3(signature = (congruences, algo = "faa"))]
fn crt_solve(congruences: Vec<(BigInt, BigInt)>, algo: &str) -> PyResult<BigInt> {
    let system = congruences
        .into_iter()
        .map(|(r, m)| Congruence::new(r, m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py)?;
    kuttaka::crt_solve(&system, parse_algo(algo).map_err(to_py)?).map_err(to_py)
}

#[pyfunction]
fn eea_classic(a: BigInt, b: BigInt) -> PyResult<PyBezoutResult> {
    kuttaka::eea_classic(&a, &b).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn eea_absolute(a: BigInt, b: BigInt) -> PyResult<PyBezoutResult> {
    kuttaka::eea_absolute(&a, &b).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn kuttaka_classic(a: BigInt, b: BigInt) -> PyResult<PyBezoutResult> {
    kuttaka::kuttaka_classic(&a, &b).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn kuttaka_fast(a: BigInt, b: BigInt) -> PyResult<PyBezoutResult> {
    kuttaka::kuttaka_fast(&a, &b).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, b, algo = "faa"))]
fn count_steps(a: BigInt, b: BigInt, algo: &str) -> PyResult<usize> {
    kuttaka::count_steps(&a, &b, parse_algo(algo).map_err(to_py)?).map_err(to_py)
}

/// Runs the step-count benchmark and returns the CSV report as a string.
#[pyfunction]
#[pyo3(signature = (min_bits = 8, max_bits = 64, samples = 1000, seed = 0, exhaustive = None))]
fn bench_csv(min_bits: u32, max_bits: u32, samples: usize, seed: u64, exhaustive: Option<u64>) -> PyResult<String> {
    let config = BenchConfig { min_bits, max_bits, samples, seed, exhaustive_limit: exhaustive, ..Default::default() };
    let report = run_bench(&config).map_err(to_py)?;
    Ok(render_csv(&report))
}

#[pymodule(name = "kuttaka")]
fn kuttaka_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBezoutResult>()?;
    m.add("NoInverseError", m.py().get_type::<NoInverseError>())?;
    m.add("NonCoprimeModuliError", m.py().get_type::<NonCoprimeModuliError>())?;
    m.add("UnsolvableError", m.py().get_type::<UnsolvableError>())?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(euclid_chain, m)?)?;
    m.add_function(wrap_pyfunction!(mod_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(solve_unity, m)?)?;
    m.add_function(wrap_pyfunction!(solve_linear, m)?)?;
    m.add_function(wrap_pyfunction!(crt_solve, m)?)?;
    m.add_function(wrap_pyfunction!(eea_classic, m)?)?;
    m.add_function(wrap_pyfunction!(eea_absolute, m)?)?;
    m.add_function(wrap_pyfunction!(kuttaka_classic, m)?)?;
    m.add_function(wrap_pyfunction!(kuttaka_fast, m)?)?;
    m.add_function(wrap_pyfunction!(count_steps, m)?)?;
    m.add_function(wrap_pyfunction!(bench_csv, m)?)?;
    Ok(())
}
