//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any failed.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kuttaka::bench::{render_csv, run_bench, BenchConfig};
use kuttaka::*;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn ints(v: &[Integer]) -> Vec<i64> {
    v.iter().map(|x| x.try_into().unwrap()).collect()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn cli(args: &[&str]) -> (i32, String, Duration) {
    let argv = std::iter::once("kuttaka").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let start = Instant::now();
    let code = kuttaka_cli::run(argv, &mut out, &mut err);
    let elapsed = start.elapsed();
    (code, String::from_utf8(out).unwrap(), elapsed)
}

fn division_quotients(trace: &str) -> Vec<i64> {
    trace
        .lines()
        .filter(|l| l.contains(" = "))
        .map(|l| {
            let rhs = l.split(" = ").nth(1).unwrap();
            let q = rhs.split(" · ").nth(1).unwrap().split(" + ").next().unwrap();
            q.trim_matches(|c| c == '(' || c == ')').parse().unwrap()
        })
        .collect()
}

fn brute_inverse(a: i64, m: i64) -> Option<i64> {
    (1..m).find(|v| (a * v).rem_euclid(m) == 1)
}

fn brute_gcd(a: i64, b: i64) -> i64 {
    (1..=a.min(b)).rev().find(|d| a % d == 0 && b % d == 0).unwrap()
}

fn figures_1_and_2() -> Check {
    let limit = Duration::from_millis(1);
    let (code, out, t) = cli(&["gcd", "76084", "63020", "--mode", "lpr", "--trace"]);
    ensure!(code == 0, "lpr exit {code}");
    ensure!(out == golden("gcd_lpr_76084_63020.txt"), "lpr trace differs from golden:\n{out}");
    ensure!(out.lines().filter(|l| l.contains(" = ")).count() == 7, "lpr line count");
    ensure!(division_quotients(&out) == [1, 4, 1, 4, 1, 2, 8], "lpr quotients {:?}", division_quotients(&out));
    ensure!(out.ends_with("result: 92\n"), "lpr gcd");
    ensure!(t < limit, "lpr took {t:?}");

    let (code, out, t) = cli(&["gcd", "76084", "63020", "--mode", "lar", "--trace"]);
    ensure!(code == 0, "lar exit {code}");
    ensure!(out == golden("gcd_lar_76084_63020.txt"), "lar trace differs from golden:\n{out}");
    ensure!(out.lines().filter(|l| l.contains(" = ")).count() == 5, "lar line count");
    ensure!(division_quotients(&out) == [1, 5, -6, -3, 8], "lar quotients {:?}", division_quotients(&out));
    ensure!(out.lines().next() == Some("76084 = 63020 · 1 + 13064"), "lar first line");
    ensure!(out.ends_with("result: 92\n"), "lar gcd");
    ensure!(t < limit, "lar took {t:?}");
    Ok(())
}

fn tables_1_and_2() -> Check {
    let c = eea_classic(&int(137), &int(60)).map_err(|e| e.to_string())?;
    let q: Vec<Integer> = c.rows.iter().filter_map(|r| r.q.clone()).collect();
    ensure!(ints(&q) == [2, 3, 1, 1], "classic quotients {q:?}");
    let last = c.rows.last().unwrap();
    ensure!((last.index, &last.x, &last.y) == (4, &int(-7), &int(16)), "classic final row {last:?}");
    ensure!((c.x.clone(), c.y.clone()) == (int(-7), int(16)), "classic coefficients");
    ensure!(c.a_inv_mod_b == Some(int(53)) && c.b_inv_mod_a == Some(int(16)), "classic inverses");

    let a = eea_absolute(&int(137), &int(60)).map_err(|e| e.to_string())?;
    let q: Vec<Integer> = a.rows.iter().filter_map(|r| r.q.clone()).collect();
    ensure!(ints(&q) == [2, 4, -2], "absolute quotients {q:?}");
    let r: Vec<Integer> = a.rows[2..].iter().map(|r| r.r.clone()).collect();
    ensure!(ints(&r) == [17, -8, 1], "absolute remainders {r:?}");
    ensure!(a.a_inv_mod_b == Some(int(53)) && a.b_inv_mod_a == Some(int(16)), "absolute inverses");

    for (algo, file) in [("eea", "inv_137_60_eea.txt"), ("ieea", "inv_137_60_ieea.txt")] {
        let (code, out, _) = cli(&["inv", "137", "60", "--algo", algo, "--trace"]);
        ensure!(code == 0 && out == golden(file), "{algo} table differs from golden:\n{out}");
    }
    Ok(())
}

fn tables_3_and_4() -> Check {
    let c = eea_classic(&int(249), &int(181)).map_err(|e| e.to_string())?;
    let a = eea_absolute(&int(249), &int(181)).map_err(|e| e.to_string())?;
    ensure!(c.step_count == 5, "classic steps {}", c.step_count);
    ensure!(a.step_count == 3, "absolute steps {}", a.step_count);
    ensure!(count_steps(&int(249), &int(181), Algo::EeaClassic) == Ok(5), "count_steps classic");
    ensure!(count_steps(&int(249), &int(181), Algo::EeaAbsolute) == Ok(3), "count_steps absolute");
    ensure!((a.x.clone(), a.y.clone()) == (int(8), int(-11)), "absolute coefficients ({}, {})", a.x, a.y);
    ensure!(int(249) * &a.x + int(181) * &a.y == int(1), "identity");
    for (algo, file) in [("eea", "inv_249_181_eea.txt"), ("ieea", "inv_249_181_ieea.txt")] {
        let (code, out, _) = cli(&["inv", "249", "181", "--algo", algo, "--trace"]);
        ensure!(code == 0 && out == golden(file), "{algo} table differs from golden:\n{out}");
    }
    Ok(())
}

fn tables_5_and_6() -> Check {
    let s_of = |r: &BezoutResult| ints(r.kuttaka.as_ref().unwrap().s_table.values());
    let classic = kuttaka_classic(&int(137), &int(60)).map_err(|e| e.to_string())?;
    ensure!(s_of(&classic)[..4] == [16, 7, 2, 1], "5a S-table {:?}", s_of(&classic));
    let fast = kuttaka_fast(&int(137), &int(60)).map_err(|e| e.to_string())?;
    ensure!(s_of(&fast)[..3] == [-16, -7, -2], "5b S-table {:?}", s_of(&fast));
    ensure!((fast.x.clone(), fast.y.clone()) == (int(-7), int(16)), "fast (137, 60) = ({}, {})", fast.x, fast.y);
    let fast = kuttaka_fast(&int(249), &int(181)).map_err(|e| e.to_string())?;
    ensure!(s_of(&fast)[..3] == [-11, -8, -3], "6b S-table {:?}", s_of(&fast));
    ensure!((fast.x.clone(), fast.y.clone()) == (int(8), int(-11)), "fast (249, 181) = ({}, {})", fast.x, fast.y);
    for file in ["inv_137_60_aa.txt", "inv_137_60_faa.txt", "inv_249_181_aa.txt", "inv_249_181_faa.txt"] {
        let parts: Vec<&str> = file.trim_end_matches(".txt").split('_').collect();
        let (code, out, _) = cli(&["inv", parts[1], parts[2], "--algo", parts[3], "--trace"]);
        ensure!(code == 0 && out == golden(file), "{file} differs from golden:\n{out}");
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for a in 3..=300i64 {
        for b in 2..a {
            let expected = brute_gcd(a, b);
            let (ai, bi) = (int(a), int(b));
            ensure!(gcd_oracle(&ai, &bi) == Ok(int(expected)), "oracle ({a}, {b})");
            for mode in RemainderMode::ALL {
                ensure!(gcd(&ai, &bi, mode) == Ok(int(expected)), "gcd ({a}, {b}, {mode:?})");
            }
            if expected != 1 {
                continue;
            }
            let inv = brute_inverse(a, b).map(int);
            for algo in Algo::ALL {
                let r = algo.run(&ai, &bi).map_err(|e| format!("({a}, {b}, {algo}): {e}"))?;
                ensure!(r.a_inv_mod_b == inv, "({a}, {b}, {algo}) inverse {:?} vs {inv:?}", r.a_inv_mod_b);
                ensure!(mod_inverse(&ai, &bi, algo).ok() == inv, "mod_inverse ({a}, {b}, {algo})");
            }
        }
    }
    Ok(())
}

fn kronecker_dominance() -> Check {
    let mut violations = Vec::new();
    let mut witness = None;
    for a in 3..=300i64 {
        for b in 2..a {
            let pos = euclid_chain(&int(a), &int(b), RemainderMode::LeastPositive).unwrap().step_count();
            let abs = euclid_chain(&int(a), &int(b), RemainderMode::LeastAbsolute).unwrap().step_count();
            if abs > pos {
                violations.push((a, b));
            }
            if witness.is_none() && abs <= pos.div_ceil(2) {
                witness = Some((a, b, pos, abs));
            }
        }
    }
    ensure!(violations.is_empty(), "violations: {violations:?}");
    ensure!(witness.is_some(), "no halving witness");

    let report = run_bench(&BenchConfig { exhaustive_limit: Some(300), ..Default::default() })
        .map_err(|e| e.to_string())?;
    ensure!(report.dominance_violations == 0, "bench violations");
    ensure!(report.halving_witness.is_some(), "bench found no halving witness");
    Ok(())
}

fn randomized_256_bit() -> Check {
    let config = BenchConfig { min_bits: 256, max_bits: 256, samples: 1000, seed: 0x5eed, ..Default::default() };
    let first = run_bench(&config).map_err(|e| e.to_string())?;
    let second = run_bench(&config).map_err(|e| e.to_string())?;
    ensure!(first.records.len() == 1000, "expected 1000 pairs");
    ensure!(render_csv(&first) == render_csv(&second), "CSV differs between runs");

    let two_255 = BigInt::one() << 255;
    for rec in &first.records {
        let (a, b) = (&rec.a, &rec.b);
        ensure!(*b >= two_255 && a.gcd(b).is_one(), "bad sample ({a}, {b})");
        let mut inverses = None;
        for algo in Algo::ALL {
            let r = algo.run(a, b).map_err(|e| e.to_string())?;
            ensure!(r.satisfies_identity() && r.gcd.is_one(), "identity ({a}, {b}, {algo})");
            let ai = r.a_inv_mod_b.clone().unwrap();
            let bi = r.b_inv_mod_a.clone().unwrap();
            ensure!((a * &ai).mod_floor(b).is_one(), "a inverse ({a}, {b}, {algo})");
            ensure!((b * &bi).mod_floor(a).is_one(), "b inverse ({a}, {b}, {algo})");
            match &inverses {
                None => inverses = Some((ai, bi)),
                Some(prev) => ensure!(*prev == (ai, bi), "inverse mismatch ({a}, {b}, {algo})"),
            }
        }
        let steps = |algo| rec.steps(algo).unwrap();
        ensure!(steps(Algo::EeaAbsolute) <= steps(Algo::EeaClassic), "EEA dominance ({a}, {b})");
        ensure!(steps(Algo::KuttakaFast) <= steps(Algo::KuttakaClassic), "Kuttaka dominance ({a}, {b})");
    }
    Ok(())
}

fn crt_systems() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut systems = 0;
    while systems < 200 {
        let moduli: [u64; 3] = [rng.gen_range(2..1000), rng.gen_range(2..1000), rng.gen_range(2..1000)];
        if moduli.iter().enumerate().any(|(i, m)| moduli[i + 1..].iter().any(|n| num_integer::gcd(*m, *n) != 1)) {
            continue;
        }
        let residues: Vec<u64> = moduli.iter().map(|m| rng.gen_range(0..*m)).collect();
        let product: u64 = moduli.iter().product();
        // Scan [0, M) along the progression of the largest modulus's residue.
        let (k, &step) = moduli.iter().enumerate().max_by_key(|(_, m)| **m).unwrap();
        let expected = (residues[k]..product)
            .step_by(step as usize)
            .find(|x| moduli.iter().zip(&residues).all(|(m, r)| x % m == *r))
            .ok_or("brute force found no solution")?;
        let system: Vec<Congruence> = moduli
            .iter()
            .zip(&residues)
            .map(|(m, r)| Congruence::new(Integer::from(*r), Integer::from(*m)).unwrap())
            .collect();
        for algo in Algo::ALL {
            let x = crt_solve(&system, algo).map_err(|e| e.to_string())?;
            ensure!(x == Integer::from(expected), "{moduli:?} {residues:?} {algo}: {x} vs {expected}");
            ensure!(system.iter().all(|c| c.holds_for(&x)), "congruence violated");
        }
        systems += 1;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 gcd traces (7 and 5 division lines, gcd 92)", figures_1_and_2),
        ("2 extended Euclid tables for (137, 60)", tables_1_and_2),
        ("3 step counts 5 vs 3 for (249, 181)", tables_3_and_4),
        ("4 S-tables and fast Kuttaka coefficients", tables_5_and_6),
        ("5 exhaustive oracle equivalence on [2, 300]", oracle_equivalence),
        ("6 exhaustive absolute-remainder dominance on [2, 300]", kronecker_dominance),
        ("7 1000 random 256-bit coprime pairs", randomized_256_bit),
        ("8 200 random CRT systems", crt_systems),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  criterion {name} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg}");
            }
        }
    }
    println!("{} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
