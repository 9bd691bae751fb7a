//! Modular multiplicative inverses and GCDs by four related algorithms:
//! Extended Euclid with least positive or least absolute remainders, and
//! Aryabhata's Kuttaka in classic and fast (least absolute remainder) form.
//!
//! ```
//! use kuttaka::{mod_inverse, Algo, Integer};
//!
//! let inv = mod_inverse(&Integer::from(137), &Integer::from(60), Algo::KuttakaFast).unwrap();
//! assert_eq!(inv, Integer::from(53));
//! ```

pub mod aryabhata;
pub mod bench;
pub mod chain;
pub mod congruence;
pub mod division;
pub mod eea;
pub mod error;

pub use aryabhata::{back_substitute, build_valli, kuttaka_classic, kuttaka_fast, STable, Valli};
pub use bench::{count_steps, report_csv, run_bench, BenchConfig, BenchReport};
pub use chain::{euclid_chain, euclid_chain_normalized, gcd, gcd_oracle, DivisionChain, RemainderMode};
pub use congruence::{
    crt_solve, mod_inverse, solve_linear, solve_linear_with, solve_unity, Algo, Congruence, DiophantineSolution,
};
pub use division::{div_least_absolute, div_least_positive, DivStep, Integer};
pub use eea::{eea_absolute, eea_classic, BezoutResult, EeaRow, KuttakaTrace};
pub use error::{Error, Result};
