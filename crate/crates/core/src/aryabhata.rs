//! The Kuttaka ("pulverizer"): Bezout coefficients from the quotient list
//! (the Valli) of a division chain, recovered by back-substitution.
//!
//! The Valli holds the quotients `q_1..q_n` of the divisions up to the one
//! leaving remainder `±1`. The S-table is filled bottom-up with
//! `S_{n+1} = 1`, `S_n = q_n`, `S_i = q_i S_{i+1} + S_{i+2}`, and then
//! `a S_2 - b S_1 = ±1`. The classic form reads the Valli of a least
//! positive remainder chain; the fast form reads the shorter least absolute
//! remainder chain and fixes one sign depending on whether it stopped at
//! `+1` or `-1`.

use num_traits::{One, Signed, Zero};

use crate::chain::{euclid_chain, DivisionChain, RemainderMode};
use crate::division::Integer;
use crate::eea::{canonical_unit, check_ordered, BezoutResult, KuttakaTrace};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valli {
    pub quotients: Vec<Integer>,
    /// Sign of the final `±1` remainder: `1` or `-1`.
    pub final_remainder_sign: i8,
    pub mode: RemainderMode,
    pub source_chain: DivisionChain,
}

impl Valli {
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Remainders `r_1..r_n` paired with the quotients.
    pub fn remainders(&self) -> impl Iterator<Item = &Integer> + '_ {
        self.source_chain.steps[..self.len()].iter().map(|s| &s.remainder)
    }
}

/// `S_1..S_{n+1}` for a Valli of `n` quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STable {
    values: Vec<Integer>,
}

impl STable {
    /// Number of quotients the table was built from.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// `S_i`, 1-indexed. Panics outside `1..=n+1`.
    pub fn get(&self, i: usize) -> &Integer {
        &self.values[i - 1]
    }

    /// `(i, S_i)` for `i = 1..=n+1`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Integer)> + '_ {
        self.values.iter().enumerate().map(|(i, s)| (i + 1, s))
    }

    /// `S_1..S_{n+1}` as a slice.
    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    /// Re-checks the recursion at every index.
    pub fn satisfies_recursion(&self, quotients: &[Integer]) -> bool {
        let n = self.n();
        if quotients.len() != n || !self.get(n + 1).is_one() || self.get(n) != &quotients[n - 1] {
            return false;
        }
        (1..n).all(|i| self.get(i) == &(&quotients[i - 1] * self.get(i + 1) + self.get(i + 2).clone()))
    }
}

/// Quotients of `euclid_chain(a, b, mode)` up to the division leaving `±1`.
///
/// Requires `a > b > 0` and `gcd(a, b) = 1`. For `b = 1` the Valli is empty.
pub fn build_valli(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<Valli> {
    check_ordered(a, b)?;
    let chain = euclid_chain(a, b, mode)?;
    if !chain.gcd.is_one() {
        return Err(Error::NoInverse { gcd: chain.gcd });
    }
    let (quotients, final_remainder_sign) =
        match chain.steps.iter().position(|s| s.remainder.abs().is_one()) {
            Some(k) => {
                let sign = if chain.steps[k].remainder.is_negative() { -1 } else { 1 };
                (chain.steps[..=k].iter().map(|s| s.quotient.clone()).collect(), sign)
            }
            // b = 1: the chain is a single exact division.
            None => (Vec::new(), 1),
        };
    Ok(Valli { quotients, final_remainder_sign, mode, source_chain: chain })
}

pub fn back_substitute(valli: &Valli) -> Result<STable> {
    let q = &valli.quotients;
    let n = q.len();
    if n == 0 {
        return Err(domain("cannot back-substitute an empty Valli"));
    }
    let mut values = vec![Integer::zero(); n + 1];
    values[n] = Integer::one();
    values[n - 1] = q[n - 1].clone();
    for i in (0..n - 1).rev() {
        values[i] = &q[i] * &values[i + 1] + &values[i + 2];
    }
    Ok(STable { values })
}

fn parity(n: usize) -> Integer {
    if n.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Picks the overall sign by checking `a x + b y = 1`.
fn resolve_sign(a: &Integer, b: &Integer, x: Integer, y: Integer) -> Result<(Integer, Integer)> {
    if a * &x + b * &y == Integer::one() {
        return Ok((x, y));
    }
    let (x, y) = (-x, -y);
    if a * &x + b * &y == Integer::one() {
        return Ok((x, y));
    }
    Err(domain(format!("back-substitution failed to produce a unit combination for ({a}, {b})")))
}

fn kuttaka(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<BezoutResult> {
    let valli = build_valli(a, b, mode)?;
    let step_count = valli.len();

    let (x, trace) = if valli.is_empty() {
        (Integer::zero(), None)
    } else {
        let s_table = back_substitute(&valli)?;
        let mut s1 = s_table.get(1).clone();
        let mut s2 = s_table.get(2).clone();
        let sign = parity(valli.len());
        let (x, y) = match mode {
            RemainderMode::LeastPositive => (-(&sign * s2), sign * s1),
            RemainderMode::LeastAbsolute => {
                if valli.final_remainder_sign < 0 {
                    s1 = -s1;
                } else {
                    s2 = -s2;
                }
                (&sign * s2, sign * s1)
            }
        };
        let (x, _) = resolve_sign(a, b, x, y)?;
        (x, Some(KuttakaTrace { valli, s_table }))
    };

    let (x, y, a_inv, b_inv) = canonical_unit(a, b, &x);
    Ok(BezoutResult {
        a: a.clone(),
        b: b.clone(),
        x,
        y,
        gcd: Integer::one(),
        a_inv_mod_b: Some(a_inv),
        b_inv_mod_a: Some(b_inv),
        rows: Vec::new(),
        step_count,
        kuttaka: trace,
    })
}

/// Kuttaka over the least positive remainder Valli. Requires coprime `a > b > 0`.
pub fn kuttaka_classic(a: &Integer, b: &Integer) -> Result<BezoutResult> {
    kuttaka(a, b, RemainderMode::LeastPositive)
}

/// Kuttaka over the least absolute remainder Valli. Requires coprime `a > b > 0`.
pub fn kuttaka_fast(a: &Integer, b: &Integer) -> Result<BezoutResult> {
    kuttaka(a, b, RemainderMode::LeastAbsolute)
}
