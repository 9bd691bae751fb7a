//! Extended Euclid over either remainder convention.
//!
//! Rows follow the usual tabular layout: two seed rows (`i = -1, 0`) holding
//! `a` and `b`, then one row per division whose remainder is nonzero, with
//! `x_i = x_{i-2} - q_i x_{i-1}` and `y_i = y_{i-2} - q_i y_{i-1}` so that
//! `a x_i + b y_i = r_i` on every row.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::aryabhata::{STable, Valli};
use crate::chain::RemainderMode;
use crate::division::{div_least_absolute, Integer};
use crate::error::{domain, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EeaRow {
    pub index: i64,
    pub r: Integer,
    /// `None` on the two seed rows.
    pub q: Option<Integer>,
    pub x: Integer,
    pub y: Integer,
}

/// Working tables of a Kuttaka run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuttakaTrace {
    pub valli: Valli,
    pub s_table: STable,
}

/// Coefficients with `a x + b y = gcd`, plus the inverses when `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutResult {
    pub a: Integer,
    pub b: Integer,
    pub x: Integer,
    pub y: Integer,
    pub gcd: Integer,
    pub a_inv_mod_b: Option<Integer>,
    pub b_inv_mod_a: Option<Integer>,
    /// Iteration table; empty for the Kuttaka variants.
    pub rows: Vec<EeaRow>,
    /// Divisions that produced a nonzero remainder.
    pub step_count: usize,
    /// Valli and S-table; `None` for the Extended Euclid variants and when
    /// the Valli is empty (`b = 1`).
    pub kuttaka: Option<KuttakaTrace>,
}

impl BezoutResult {
    pub fn satisfies_identity(&self) -> bool {
        &self.a * &self.x + &self.b * &self.y == self.gcd
    }

    /// Coefficients from the other operand order: `(a, b)` becomes `(b, a)`.
    pub(crate) fn swapped(self) -> BezoutResult {
        BezoutResult {
            a: self.b,
            b: self.a,
            x: self.y,
            y: self.x,
            a_inv_mod_b: self.b_inv_mod_a,
            b_inv_mod_a: self.a_inv_mod_b,
            ..self
        }
    }
}

pub(crate) fn check_ordered(a: &Integer, b: &Integer) -> Result<()> {
    if !b.is_positive() || a <= b {
        return Err(domain(format!("expected a > b > 0, got ({a}, {b})")));
    }
    Ok(())
}

/// Canonical unit solution of `a x + b y = 1`: `x` is replaced by its least
/// absolute residue mod `b` (positive on a tie), so `|x| <= b / 2`, and `y`
/// is recomputed exactly (then `|y| < a`). Every algorithm lands on the same
/// pair. Returns the inverses `x mod b` and `y mod a` alongside.
pub(crate) fn canonical_unit(
    a: &Integer,
    b: &Integer,
    x: &Integer,
) -> (Integer, Integer, Integer, Integer) {
    let x = div_least_absolute(x, b).expect("b > 0").remainder;
    let y = (Integer::one() - a * &x) / b;
    debug_assert!(a * &x + b * &y == Integer::one());
    let a_inv = x.mod_floor(b);
    let b_inv = y.mod_floor(a);
    (x, y, a_inv, b_inv)
}

fn eea(a: &Integer, b: &Integer, mode: RemainderMode) -> Result<BezoutResult> {
    check_ordered(a, b)?;
    let mut rows = vec![
        EeaRow { index: -1, r: a.clone(), q: None, x: Integer::one(), y: Integer::zero() },
        EeaRow { index: 0, r: b.clone(), q: None, x: Integer::zero(), y: Integer::one() },
    ];
    loop {
        let [prev2, prev1] = &rows[rows.len() - 2..] else { unreachable!() };
        let step = mode.divide(&prev2.r, &prev1.r)?;
        if step.remainder.is_zero() {
            break;
        }
        let x = &prev2.x - &step.quotient * &prev1.x;
        let y = &prev2.y - &step.quotient * &prev1.y;
        let index = prev1.index + 1;
        rows.push(EeaRow { index, r: step.remainder, q: Some(step.quotient), x, y });
    }

    let last = rows.last().expect("seed rows present");
    let gcd = last.r.abs();
    let (mut x, mut y) = (last.x.clone(), last.y.clone());
    // A negative final remainder scales every row by -1; flip to get +gcd.
    if last.r.is_negative() {
        x = -x;
        y = -y;
    }
    let step_count = rows.len() - 2;

    let (a_inv_mod_b, b_inv_mod_a) = if gcd.is_one() {
        let (cx, cy, ai, bi) = canonical_unit(a, b, &x);
        x = cx;
        y = cy;
        (Some(ai), Some(bi))
    } else {
        (None, None)
    };

    Ok(BezoutResult {
        a: a.clone(),
        b: b.clone(),
        x,
        y,
        gcd,
        a_inv_mod_b,
        b_inv_mod_a,
        rows,
        step_count,
        kuttaka: None,
    })
}

/// Extended Euclid with least positive remainders. Requires `a > b > 0`.
pub fn eea_classic(a: &Integer, b: &Integer) -> Result<BezoutResult> {
    eea(a, b, RemainderMode::LeastPositive)
}

/// Extended Euclid with least absolute remainders and signed quotients.
/// Requires `a > b > 0`. When the chain ends on `-1` the coefficients are
/// negated so the result still satisfies `a x + b y = +1`.
pub fn eea_absolute(a: &Integer, b: &Integer) -> Result<BezoutResult> {
    eea(a, b, RemainderMode::LeastAbsolute)
}
