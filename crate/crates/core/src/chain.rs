//! Full Euclidean division chains under either remainder convention.

use num_traits::{One, Signed, Zero};

use crate::division::{div_least_absolute, div_least_positive, DivStep, Integer};
use crate::error::{domain, Error, Result};

/// Largest operand accepted by [`gcd_oracle`].
pub const ORACLE_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RemainderMode {
    LeastPositive,
    LeastAbsolute,
}

impl RemainderMode {
    pub const ALL: [RemainderMode; 2] = [RemainderMode::LeastPositive, RemainderMode::LeastAbsolute];

    pub fn divide(self, a: &Integer, b: &Integer) -> Result<DivStep> {
        match self {
            RemainderMode::LeastPositive => div_least_positive(a, b),
            RemainderMode::LeastAbsolute => div_least_absolute(a, b),
        }
    }
}

/// The complete sequence of divisions from `(a, b)` down to a zero remainder.
///
/// Step `i + 1` divides step `i`'s divisor by step `i`'s remainder, signs
/// included, so remainders and quotients may be negative in
/// [`RemainderMode::LeastAbsolute`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionChain {
    pub steps: Vec<DivStep>,
    pub gcd: Integer,
    pub mode: RemainderMode,
}

impl DivisionChain {
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn quotients(&self) -> impl Iterator<Item = &Integer> + '_ {
        self.steps.iter().map(|s| &s.quotient)
    }

    /// The signed value whose magnitude is the gcd: the divisor of the
    /// final, exact division.
    pub fn last_nonzero_remainder(&self) -> &Integer {
        &self.steps.last().expect("chains are never empty").divisor
    }

    /// Checks the linkage between consecutive steps and the terminal zero.
    pub fn is_well_formed(&self) -> bool {
        let linked = self.steps.windows(2).all(|w| {
            w[1].dividend == w[0].divisor && w[1].divisor == w[0].remainder && !w[0].remainder.is_zero()
        });
        let terminal = self.steps.last().is_some_and(|s| s.remainder.is_zero());
        linked && terminal && self.steps.iter().all(DivStep::reconstructs)
    }
}

fn check_positive(a: &Integer, b: &Integer) -> Result<()> {
    if !a.is_positive() || !b.is_positive() {
        return Err(domain(format!("gcd operands must be positive, got ({a}, {b})")));
    }
    Ok(())
}

fn run_chain(a: &Integer, b: &Integer, mode: RemainderMode, positive_dividends: bool) -> Result<DivisionChain> {
    check_positive(a, b)?;
    let mut steps = Vec::new();
    let mut dividend = a.clone();
    let mut divisor = b.clone();
    loop {
        if positive_dividends {
            dividend = dividend.abs();
        }
        let step = mode.divide(&dividend, &divisor)?;
        let done = step.remainder.is_zero();
        dividend = divisor;
        divisor = step.remainder.clone();
        steps.push(step);
        if done {
            break;
        }
    }
    let gcd = dividend.abs();
    Ok(DivisionChain { steps, gcd, mode })
}

/// Divides `a` by `b`, then each divisor by the previous remainder, until the
/// remainder vanishes. `a < b` is allowed; the first quotient is then 0.
pub fn euclid_chain(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<DivisionChain> {
    run_chain(a, b, mode, false)
}

/// Same division sequence as [`euclid_chain`], written the way chains are
/// usually laid out by hand: every dividend is taken as a positive number
/// and the previous (possibly negative) remainder is the divisor.
///
/// Remainder magnitudes and the step count match [`euclid_chain`]; only
/// signs differ. Use this form for display only: its quotients do not
/// satisfy the continued-fraction recurrence the inverse algorithms rely on.
pub fn euclid_chain_normalized(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<DivisionChain> {
    run_chain(a, b, mode, true)
}

pub fn gcd(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<Integer> {
    euclid_chain(a, b, mode).map(|c| c.gcd)
}

/// Brute-force gcd by descending trial division. Test oracle only.
pub fn gcd_oracle(a: &Integer, b: &Integer) -> Result<Integer> {
    check_positive(a, b)?;
    let bound = Integer::from(ORACLE_BOUND);
    for v in [a, b] {
        if *v > bound {
            return Err(Error::OracleBound { value: v.clone(), bound: ORACLE_BOUND });
        }
    }
    let a: u64 = a.try_into().expect("bounded");
    let b: u64 = b.try_into().expect("bounded");
    let d = (1..=a.min(b)).rev().find(|&d| a.is_multiple_of(d) && b.is_multiple_of(d)).unwrap_or(1);
    Ok(Integer::from(d))
}

/// True when `a` and `b` have no common factor.
pub(crate) fn coprime(a: &Integer, b: &Integer) -> bool {
    num_integer::Integer::gcd(a, b).is_one()
}
