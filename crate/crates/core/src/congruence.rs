//! Solving layer: modular inverses, unit and general linear Diophantine
//! equations, and the Chinese Remainder Theorem, each with a selectable
//! inverse algorithm.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::aryabhata::{kuttaka_classic, kuttaka_fast};
use crate::chain::{coprime, RemainderMode};
use crate::division::Integer;
use crate::eea::{eea_absolute, eea_classic, BezoutResult};
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Algo {
    EeaClassic,
    EeaAbsolute,
    KuttakaClassic,
    #[default]
    KuttakaFast,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::EeaClassic, Algo::EeaAbsolute, Algo::KuttakaClassic, Algo::KuttakaFast];

    /// Snake-case name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Algo::EeaClassic => "eea_classic",
            Algo::EeaAbsolute => "eea_absolute",
            Algo::KuttakaClassic => "kuttaka_classic",
            Algo::KuttakaFast => "kuttaka_fast",
        }
    }

    /// Short command-line flag value.
    pub fn flag(self) -> &'static str {
        match self {
            Algo::EeaClassic => "eea",
            Algo::EeaAbsolute => "ieea",
            Algo::KuttakaClassic => "aa",
            Algo::KuttakaFast => "faa",
        }
    }

    pub fn mode(self) -> RemainderMode {
        match self {
            Algo::EeaClassic | Algo::KuttakaClassic => RemainderMode::LeastPositive,
            Algo::EeaAbsolute | Algo::KuttakaFast => RemainderMode::LeastAbsolute,
        }
    }

    /// Runs the underlying solver on `a > b > 0`. The Extended Euclid
    /// variants accept non-coprime input; the Kuttaka variants reject it.
    pub fn run(self, a: &Integer, b: &Integer) -> Result<BezoutResult> {
        match self {
            Algo::EeaClassic => eea_classic(a, b),
            Algo::EeaAbsolute => eea_absolute(a, b),
            Algo::KuttakaClassic => kuttaka_classic(a, b),
            Algo::KuttakaFast => kuttaka_fast(a, b),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.flag() == s || a.name() == s)
            .ok_or_else(|| domain(format!("unknown algorithm {s:?}")))
    }
}

/// `x ≡ residue (mod modulus)` with `modulus > 1` and `0 <= residue < modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    residue: Integer,
    modulus: Integer,
}

impl Congruence {
    pub fn new(residue: Integer, modulus: Integer) -> Result<Self> {
        if modulus <= Integer::one() {
            return Err(domain(format!("modulus must exceed 1, got {modulus}")));
        }
        Ok(Congruence { residue: residue.mod_floor(&modulus), modulus })
    }

    pub fn residue(&self) -> &Integer {
        &self.residue
    }

    pub fn modulus(&self) -> &Integer {
        &self.modulus
    }

    pub fn holds_for(&self, x: &Integer) -> bool {
        x.mod_floor(&self.modulus) == self.residue
    }
}

/// All solutions of `a x + b y = c`: `(x0 + t x_step, y0 + t y_step)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub x0: Integer,
    pub y0: Integer,
    pub x_step: Integer,
    pub y_step: Integer,
    pub gcd: Integer,
}

impl DiophantineSolution {
    pub fn at(&self, t: &Integer) -> (Integer, Integer) {
        (&self.x0 + t * &self.x_step, &self.y0 + t * &self.y_step)
    }
}

/// The unique `v` in `[1, m-1]` with `a v ≡ 1 (mod m)`. `a` may be negative
/// or exceed `m`; it is reduced first.
pub fn mod_inverse(a: &Integer, m: &Integer, algo: Algo) -> Result<Integer> {
    if *m <= Integer::one() {
        return Err(domain(format!("modulus must exceed 1, got {m}")));
    }
    let reduced = a.mod_floor(m);
    if reduced.is_zero() {
        return Err(Error::NoInverse { gcd: m.clone() });
    }
    let result = algo.run(m, &reduced)?;
    match result.b_inv_mod_a {
        Some(v) => Ok(v),
        None => Err(Error::NoInverse { gcd: result.gcd }),
    }
}

/// Solves `a x + b y = 1` for positive coprime `a != b`, in either order.
/// The result satisfies `|x| < b` and `|y| < a`.
pub fn solve_unity(a: &Integer, b: &Integer, algo: Algo) -> Result<BezoutResult> {
    if !a.is_positive() || !b.is_positive() {
        return Err(domain(format!("operands must be positive, got ({a}, {b})")));
    }
    if a == b {
        return if a.is_one() {
            Err(domain("operands must differ, got (1, 1)"))
        } else {
            Err(Error::NoInverse { gcd: a.clone() })
        };
    }
    let result = if a > b { algo.run(a, b)? } else { algo.run(b, a)?.swapped() };
    if !result.gcd.is_one() {
        return Err(Error::NoInverse { gcd: result.gcd });
    }
    Ok(result)
}

/// Solves `a x + b y = c` with the default algorithm.
pub fn solve_linear(a: &Integer, b: &Integer, c: &Integer) -> Result<DiophantineSolution> {
    solve_linear_with(a, b, c, Algo::default())
}

pub fn solve_linear_with(a: &Integer, b: &Integer, c: &Integer, algo: Algo) -> Result<DiophantineSolution> {
    if a.is_zero() && b.is_zero() {
        return Err(domain("a and b cannot both be zero"));
    }
    let gcd = a.gcd(b);
    if !c.is_multiple_of(&gcd) {
        return Err(Error::Unsolvable { gcd });
    }
    let (ra, rb) = (a / &gcd, b / &gcd);
    let (ua, ub) = (ra.abs(), rb.abs());
    // |ra| u + |rb| v = 1
    let (u, v) = if ub.is_zero() || ua == ub {
        (Integer::one(), Integer::zero())
    } else if ua.is_zero() {
        (Integer::zero(), Integer::one())
    } else {
        let r = solve_unity(&ua, &ub, algo)?;
        (r.x, r.y)
    };
    let scale = c / &gcd;
    let x0 = if ra.is_negative() { -u } else { u } * &scale;
    let y0 = if rb.is_negative() { -v } else { v } * &scale;
    Ok(DiophantineSolution { x0, y0, x_step: rb, y_step: -ra, gcd })
}

/// The unique `x` in `[0, M)` satisfying every congruence, `M` the product
/// of the moduli. Moduli must be pairwise coprime.
pub fn crt_solve(congruences: &[Congruence], algo: Algo) -> Result<Integer> {
    let (first, rest) = congruences
        .split_first()
        .ok_or_else(|| domain("empty congruence system"))?;
    for (i, ci) in congruences.iter().enumerate() {
        for (j, cj) in congruences.iter().enumerate().skip(i + 1) {
            if !coprime(&ci.modulus, &cj.modulus) {
                return Err(Error::NonCoprimeModuli {
                    left: i,
                    right: j,
                    left_modulus: ci.modulus.clone(),
                    right_modulus: cj.modulus.clone(),
                    gcd: ci.modulus.gcd(&cj.modulus),
                });
            }
        }
    }

    let mut x = first.residue.clone();
    let mut product = first.modulus.clone();
    for c in rest {
        let inv = mod_inverse(&product, &c.modulus, algo)?;
        let t = ((&c.residue - &x) * inv).mod_floor(&c.modulus);
        x += &product * t;
        product *= &c.modulus;
    }
    Ok(x)
}
