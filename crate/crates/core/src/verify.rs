//! Named verification suites.  Each check compares a closed form against
//! an independent brute-force oracle (or two independent constructions
//! against each other) and reports the first mismatching coefficient on
//! failure.  Suites: `bijection`, `gf-avoid`, `gf-once`, `e2`, `cf`,
//! `transfer`, `bcs`, and `all`.

use std::collections::{BTreeSet, HashSet};

use num::bigint::BigInt;
use num::{One, Zero};
use rayon::prelude::*;

use crate::bijection::{
    catalan_path_map, embed_132_avoider, path_to_perm, path_to_perm_direct, perm_to_path,
    transposition_word,
};
use crate::formulas::{
    avoid_append_transform, binomial_matrix, binomial_matrix_inverse, brute_avoid,
    brute_contain_once, brute_contain_once_avoid_next, catalan_number, cheb_p,
    check_stat_matrix_cf, count_231, count_321, gf_avoid_12k, gf_avoid_12k_via_cf, gf_avoid_213k,
    gf_avoid_2314k, gf_avoid_3214k, gf_exactly_r_12k, gf_once_12k, gf_once_213k, schroder_number,
    transfer_det, transfer_minor_gf, StatMatrix,
};
use crate::path::{all_paths, gf_between_heights, SchroderPath, Step};
use crate::perm::{
    append_max, class_members, enumerate_class_with_limit, increasing_pattern, pattern_213k,
    pattern_2314k, pattern_3214k, star_preserves_321, PatternSet, Permutation,
};
use crate::series::{eval_schroder_cf, BigRat, IntPoly, Monomial, RationalGF, TruncSeries};
use crate::{Error, Result};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

pub const SUITES: &[&str] = &[
    "bijection", "gf-avoid", "gf-once", "e2", "cf", "transfer", "bcs",
];

type CheckFn = Box<dyn Fn() -> std::result::Result<(), String> + Send + Sync>;

struct Pending {
    suite: &'static str,
    name: String,
    run: CheckFn,
}

fn check(suite: &'static str, name: impl Into<String>, run: CheckFn) -> Pending {
    Pending { suite, name: name.into(), run }
}

/// Runs one suite (or `all`) and returns the ordered outcomes.  Checks
/// within the batch execute in parallel on the current rayon pool.
pub fn run(suite: &str, n_max: usize) -> Result<Vec<Check>> {
    let pending = match suite {
        "bijection" => suite_bijection(n_max),
        "gf-avoid" => suite_gf_avoid(n_max),
        "gf-once" => suite_gf_once(n_max),
        "e2" => suite_e2(n_max),
        "cf" => suite_cf(n_max),
        "transfer" => suite_transfer(),
        "bcs" => suite_bcs(n_max),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(match *s {
                    "bijection" => suite_bijection(n_max),
                    "gf-avoid" => suite_gf_avoid(n_max),
                    "gf-once" => suite_gf_once(n_max),
                    "e2" => suite_e2(n_max),
                    "cf" => suite_cf(n_max),
                    "transfer" => suite_transfer(),
                    "bcs" => suite_bcs(n_max),
                    _ => unreachable!(),
                });
            }
            all
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?}; expected one of {SUITES:?} or \"all\""
            )))
        }
    };
    Ok(pending
        .par_iter()
        .map(|p| {
            let outcome = (p.run)();
            Check {
                suite: p.suite,
                name: p.name.clone(),
                pass: outcome.is_ok(),
                detail: outcome.err(),
            }
        })
        .collect())
}

// ---------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------

fn suite_bijection(n_max: usize) -> Vec<Pending> {
    let n_cap = n_max.min(7);
    let mut v = Vec::new();
    v.push(check("bijection", "golden images in both forms", Box::new(|| {
        let golden = [
            ("NDNNEEENNDENEE", "836791425"),
            ("DNEDDNNENDEE", "978624135"),
            ("NNENDNNEDEEDE", "683425719"),
        ];
        for (path_text, perm_text) in golden {
            let path: SchroderPath = path_text.parse().map_err(|e| format!("{e}"))?;
            let want: Permutation = perm_text.parse().map_err(|e| format!("{e}"))?;
            expect_eq(&path_to_perm(&path), &want, path_text)?;
            expect_eq(&path_to_perm_direct(&path), &want, path_text)?;
            let back = perm_to_path(&want).map_err(|e| format!("{e}"))?;
            expect_eq(&back, &path, perm_text)?;
        }
        Ok(())
    })));
    v.push(check("bijection", "transposition word of the worked example", Box::new(|| {
        let path: SchroderPath = "NDNNEEENNDENEE".parse().unwrap();
        let blocks = transposition_word(&path).blocks;
        let want = vec![
            vec![8, 7, 6, 5],
            vec![7],
            vec![6, 5],
            vec![4, 3, 2, 1],
            vec![3, 2],
            vec![2],
        ];
        if blocks == want {
            Ok(())
        } else {
            Err(format!("blocks {blocks:?}, expected {want:?}"))
        }
    })));
    v.push(check(
        "bijection",
        format!("direct construction equals recursive one (n <= {n_cap})"),
        Box::new(move || {
            for n in 0..=n_cap {
                for path in all_paths(n).map_err(|e| format!("{e}"))? {
                    let a = path_to_perm(&path);
                    let b = path_to_perm_direct(&path);
                    if a != b {
                        return Err(format!("path {path}: recursive {a}, direct {b}"));
                    }
                }
            }
            Ok(())
        }),
    ));
    v.push(check(
        "bijection",
        format!("bijectivity onto the class (n <= {n_cap})"),
        Box::new(move || {
            let set = PatternSet::schroder();
            for n in 0..=n_cap {
                let mut images = HashSet::new();
                for path in all_paths(n).map_err(|e| format!("{e}"))? {
                    let perm = path_to_perm(&path);
                    if !perm.is_avoiding(&set) {
                        return Err(format!("image {perm} of {path} leaves the class"));
                    }
                    if !images.insert(perm.clone()) {
                        return Err(format!("image {perm} repeated"));
                    }
                    let back = perm_to_path(&perm).map_err(|e| format!("{e}"))?;
                    if back != path {
                        return Err(format!("round trip of {path} gave {back}"));
                    }
                }
                if BigInt::from(images.len()) != schroder_number(n) {
                    return Err(format!(
                        "image count {} at n = {n}, expected {}",
                        images.len(),
                        schroder_number(n)
                    ));
                }
            }
            Ok(())
        }),
    ));
    v.push(check(
        "bijection",
        format!("statistics preserved (n <= {n_cap})"),
        Box::new(move || {
            for n in 0..=n_cap {
                for path in all_paths(n).map_err(|e| format!("{e}"))? {
                    let perm = path_to_perm(&path);
                    for k in 1..=n + 1 {
                        if path.tau(k) != perm.tau(k) {
                            return Err(format!(
                                "path {path}, k = {k}: {} vs {}",
                                path.tau(k),
                                perm.tau(k)
                            ));
                        }
                    }
                }
            }
            Ok(())
        }),
    ));
    v.push(check(
        "bijection",
        format!("height bound matches added increasing pattern (n <= {n_cap})"),
        Box::new(move || {
            for k in 2..=6u64 {
                let set = PatternSet::schroder_with(&[increasing_pattern(k as usize)]);
                for n in 0..=n_cap {
                    let image: BTreeSet<Permutation> = all_paths(n)
                        .map_err(|e| format!("{e}"))?
                        .into_iter()
                        .filter(|p| p.max_height() <= k - 2)
                        .map(|p| path_to_perm(&p))
                        .collect();
                    let class: BTreeSet<Permutation> = class_members(n + 1, &set)
                        .map_err(|e| format!("{e}"))?
                        .into_iter()
                        .collect();
                    if image != class {
                        return Err(format!("k = {k}, n = {n}: image differs from class"));
                    }
                }
            }
            Ok(())
        }),
    ));
    v.push(check("bijection", "witness sets for one occurrence at length four", Box::new(|| {
        witness_set_check()
    })));
    v.push(check(
        "bijection",
        format!("132-avoider embedding gives Catalan paths (n <= {})", n_cap.min(7)),
        Box::new(move || {
            let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
            let avoid132 = PatternSet::new(vec![p132]).unwrap();
            for n in 0..=n_cap.min(7) {
                let mut count = BigInt::zero();
                for pi in class_members(n, &avoid132).map_err(|e| format!("{e}"))? {
                    let im = embed_132_avoider(&pi).map_err(|e| format!("{e}"))?;
                    if im.entries()[0] != 1 {
                        return Err(format!("embedding of {pi} does not begin with 1"));
                    }
                    let path = catalan_path_map(&pi).map_err(|e| format!("{e}"))?;
                    if path.steps().iter().any(|s| matches!(s, Step::Diag)) {
                        return Err(format!("{pi} maps to non-Catalan path {path}"));
                    }
                    for k in 1..=n + 1 {
                        // The path carries the embedded permutation's
                        // statistics; the original statistics live on east
                        // steps with right-endpoint heights.
                        if path.tau(k) != im.tau(k) {
                            return Err(format!("{pi}: path tau_{k} differs from embedding"));
                        }
                        let east: BigInt = path
                            .height_profile()
                            .records
                            .iter()
                            .filter(|r| r.step == Step::East)
                            .map(|r| {
                                crate::series::binom(
                                    r.height.unwrap() as i64 - 1,
                                    k as i64 - 1,
                                    crate::series::BinomMode::Standard,
                                )
                            })
                            .sum();
                        if east != pi.tau(k) {
                            return Err(format!("{pi}: east-step tau_{k} not preserved"));
                        }
                    }
                    count += 1;
                }
                if count != catalan_number(n) {
                    return Err(format!("|class(132)| at n = {n} is {count}"));
                }
            }
            Ok(())
        }),
    ));
    v
}

fn witness_set_check() -> std::result::Result<(), String> {
    let class = class_members(4, &PatternSet::schroder()).map_err(|e| format!("{e}"))?;
    let p123 = increasing_pattern(3);
    let p213 = pattern_213k(3);
    let ones_123: BTreeSet<String> = class
        .iter()
        .filter(|pi| pi.count_occurrences(&p123).is_one())
        .map(|pi| pi.to_string())
        .collect();
    let ones_213: BTreeSet<String> = class
        .iter()
        .filter(|pi| pi.count_occurrences(&p213).is_one())
        .map(|pi| pi.to_string())
        .collect();
    let want_123: BTreeSet<String> = ["2314", "1423", "2341", "1342", "4123", "3124"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let want_213: BTreeSet<String> = ["3241", "2413", "1324", "3142", "4213"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if ones_123 != want_123 {
        return Err(format!("one-123 witnesses {ones_123:?}"));
    }
    if ones_213 != want_213 {
        return Err(format!("one-213 witnesses {ones_213:?}"));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// gf-avoid
// ---------------------------------------------------------------------

fn suite_gf_avoid(n_max: usize) -> Vec<Pending> {
    let n_cap = n_max.min(9);
    let mut v = Vec::new();
    for k in 2..=6usize {
        v.push(check(
            "gf-avoid",
            format!("avoiding 12...{k}: gf matches oracle (n <= {n_cap})"),
            Box::new(move || {
                let want = brute_avoid(&increasing_pattern(k), n_cap).map_err(|e| format!("{e}"))?;
                let got = gf_avoid_12k(k).expand_integer(n_cap).map_err(|e| format!("{e}"))?;
                first_diff(&got, &want)
            }),
        ));
        v.push(check(
            "gf-avoid",
            format!("avoiding 213...{k}: gf matches oracle (n <= {n_cap})"),
            Box::new(move || {
                let want = brute_avoid(&pattern_213k(k), n_cap).map_err(|e| format!("{e}"))?;
                let got = gf_avoid_213k(k).expand_integer(n_cap).map_err(|e| format!("{e}"))?;
                first_diff(&got, &want)
            }),
        ));
    }
    v.push(check("gf-avoid", "append transform steps the family (k = 2..8)", Box::new(|| {
        for k in 2..=8 {
            let stepped = avoid_append_transform(&gf_avoid_12k(k - 1)).map_err(|e| format!("{e}"))?;
            if stepped != gf_avoid_12k(k) {
                return Err(format!("k = {k}: transform disagrees"));
            }
        }
        Ok(())
    })));
    v.push(check(
        "gf-avoid",
        format!("231-family: closed count, gf and oracle agree (n <= {n_cap})"),
        Box::new(move || {
            let oracle = brute_avoid(&pattern_2314k(3), n_cap).map_err(|e| format!("{e}"))?;
            let gf = gf_avoid_2314k(3)
                .and_then(|g| g.expand_integer(n_cap))
                .map_err(|e| format!("{e}"))?;
            first_diff(&gf, &oracle)?;
            for n in 2..=n_cap {
                let formula = count_231(n).map_err(|e| format!("{e}"))?;
                if formula != oracle[n] {
                    return Err(format!("count formula at n = {n}: {formula} vs {}", oracle[n]));
                }
            }
            let oracle4 = brute_avoid(&pattern_2314k(4), n_cap).map_err(|e| format!("{e}"))?;
            let gf4 = gf_avoid_2314k(4)
                .and_then(|g| g.expand_integer(n_cap))
                .map_err(|e| format!("{e}"))?;
            first_diff(&gf4, &oracle4)
        }),
    ));
    v.push(check(
        "gf-avoid",
        format!("321-family: closed count, gf and oracle agree (n <= {n_cap})"),
        Box::new(move || {
            let oracle = brute_avoid(&pattern_3214k(3), n_cap).map_err(|e| format!("{e}"))?;
            let gf = gf_avoid_3214k(3)
                .and_then(|g| g.expand_integer(n_cap))
                .map_err(|e| format!("{e}"))?;
            first_diff(&gf, &oracle)?;
            for n in 1..=n_cap {
                let formula = count_321(n).map_err(|e| format!("{e}"))?;
                if formula != oracle[n] {
                    return Err(format!("count formula at n = {n}: {formula} vs {}", oracle[n]));
                }
            }
            let oracle4 = brute_avoid(&pattern_3214k(4), n_cap).map_err(|e| format!("{e}"))?;
            let gf4 = gf_avoid_3214k(4)
                .and_then(|g| g.expand_integer(n_cap))
                .map_err(|e| format!("{e}"))?;
            first_diff(&gf4, &oracle4)
        }),
    ));
    let pair_cap = (n_max + 2).min(9);
    v.push(check(
        "gf-avoid",
        format!("star product preserves 321-avoidance iff conditions hold (sizes <= {pair_cap})"),
        Box::new(move || {
            let p321 = pattern_3214k(3);
            let set = PatternSet::schroder_with(std::slice::from_ref(&p321));
            for n1 in 1..=pair_cap - 2 {
                for n2 in 2..=pair_cap - n1 {
                    for pi1 in class_members(n1, &set).map_err(|e| format!("{e}"))? {
                        for pi2 in class_members(n2, &set).map_err(|e| format!("{e}"))? {
                            let prod = pi1.star(&pi2).map_err(|e| format!("{e}"))?;
                            let avoids = !prod.contains(&p321);
                            let conditions = star_preserves_321(&pi1, &pi2);
                            if avoids != conditions {
                                return Err(format!(
                                    "pi1 = {pi1}, pi2 = {pi2}: avoids = {avoids}, conditions = {conditions}"
                                ));
                            }
                        }
                    }
                }
            }
            Ok(())
        }),
    ));
    v
}

// ---------------------------------------------------------------------
// gf-once
// ---------------------------------------------------------------------

fn suite_gf_once(n_max: usize) -> Vec<Pending> {
    let n_cap = n_max.min(9);
    let mut v = Vec::new();
    v.push(check("gf-once", "closed form x^k / p_{k-1}^2 (k <= 6)", Box::new(|| {
        for k in 2..=6 {
            let direct = gf_once_12k(k).map_err(|e| format!("{e}"))?;
            let via_sum = gf_exactly_r_12k(k, 1).map_err(|e| format!("{e}"))?;
            if direct != via_sum {
                return Err(format!("k = {k}: exact-once forms disagree"));
            }
        }
        Ok(())
    })));
    for k in 2..=4usize {
        v.push(check(
            "gf-once",
            format!("exactly one 12...{k}: gf matches oracle (n <= {n_cap})"),
            Box::new(move || {
                let want =
                    brute_contain_once(&increasing_pattern(k), n_cap).map_err(|e| format!("{e}"))?;
                let got = gf_once_12k(k)
                    .and_then(|g| g.expand_integer(n_cap))
                    .map_err(|e| format!("{e}"))?;
                first_diff(&got, &want)
            }),
        ));
    }
    for k in 3..=4usize {
        v.push(check(
            "gf-once",
            format!("exactly one 213...{k}: gf matches oracle (n <= {n_cap})"),
            Box::new(move || {
                let want =
                    brute_contain_once(&pattern_213k(k), n_cap).map_err(|e| format!("{e}"))?;
                let got = gf_once_213k(k)
                    .and_then(|g| g.expand_integer(n_cap))
                    .map_err(|e| format!("{e}"))?;
                first_diff(&got, &want)
            }),
        ));
    }
    v.push(check("gf-once", "witness sets at length four", Box::new(witness_set_check)));
    v.push(check(
        "gf-once",
        format!("exact-once transform matches oracles (n <= {n_cap})"),
        Box::new(move || {
            let seeds = ["1", "12", "21", "213"];
            for seed in seeds {
                let tau: Permutation = seed.parse().unwrap();
                let j = brute_contain_once_avoid_next(&tau, n_cap).map_err(|e| format!("{e}"))?;
                let h = brute_avoid(&tau, n_cap).map_err(|e| format!("{e}"))?;
                let target =
                    brute_contain_once(&append_max(&tau), n_cap).map_err(|e| format!("{e}"))?;
                let rhs = once_transform_series(&j, &h, n_cap);
                if let Err(e) = first_diff(&rhs, &target) {
                    return Err(format!("seed {seed}: {e}"));
                }
            }
            Ok(())
        }),
    ));
    let gj_cap = n_max.clamp(5, 8);
    v.push(check(
        "gf-once",
        format!("exact-once equals extension-avoiding form iff pattern ends with maximum (n <= {gj_cap})"),
        Box::new(move || {
            for m in 1..=4usize {
                for tau in class_members(m, &PatternSet::schroder()).map_err(|e| format!("{e}"))? {
                    let j = brute_contain_once_avoid_next(&tau, gj_cap).map_err(|e| format!("{e}"))?;
                    let g = brute_contain_once(&tau, gj_cap).map_err(|e| format!("{e}"))?;
                    let ends_with_max = *tau.entries().last().unwrap() as usize == m;
                    if ends_with_max && j != g {
                        return Err(format!("tau = {tau} ends with max but series differ"));
                    }
                    if !ends_with_max && j == g {
                        return Err(format!("tau = {tau}: series unexpectedly agree"));
                    }
                }
            }
            Ok(())
        }),
    ));
    v
}

/// `x J / (2 - x - H)^2` on truncated integer coefficient lists.
fn once_transform_series(j: &[BigInt], h: &[BigInt], order: usize) -> Vec<BigInt> {
    // d = 2 - x - H has unit constant term.
    let mut d = vec![BigInt::zero(); order + 1];
    d[0] = BigInt::from(2) - &h[0];
    if order >= 1 {
        d[1] = BigInt::from(-1) - &h[1];
    }
    for i in 2..=order {
        d[i] = -h[i].clone();
    }
    let inv = invert_unit_series(&d, order);
    let sq = convolve(&inv, &inv, order);
    let ratio = convolve(j, &sq, order);
    // Multiply by x.
    let mut out = vec![BigInt::zero(); order + 1];
    for i in 1..=order {
        out[i] = ratio[i - 1].clone();
    }
    out
}

fn convolve(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for i in 0..=order.min(a.len() - 1) {
        if a[i].is_zero() {
            continue;
        }
        for jdx in 0..=(order - i).min(b.len() - 1) {
            let t = &a[i] * &b[jdx];
            out[i + jdx] += t;
        }
    }
    out
}

fn invert_unit_series(a: &[BigInt], order: usize) -> Vec<BigInt> {
    assert!(a[0].is_one(), "series inversion needs unit constant term");
    let mut inv = vec![BigInt::zero(); order + 1];
    inv[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for i in 1..=n.min(a.len() - 1) {
            acc += &a[i] * &inv[n - i];
        }
        inv[n] = -acc;
    }
    inv
}

// ---------------------------------------------------------------------
// e2
// ---------------------------------------------------------------------

fn suite_e2(n_max: usize) -> Vec<Pending> {
    let mut v = Vec::new();
    v.push(check("e2", "closed form at r = 1 (k <= 6)", Box::new(|| {
        for k in 2..=6 {
            let got = gf_exactly_r_12k(k, 1).map_err(|e| format!("{e}"))?;
            let want = RationalGF::new(IntPoly::x_pow(k), cheb_p(k as i64 - 1).pow(2));
            if got != want {
                return Err(format!("k = {k}: r = 1 form differs"));
            }
        }
        Ok(())
    })));
    v.push(check(
        "e2",
        format!("exact-occurrence counts match oracle (k = 2,3; r = 1..3; n <= {n_max})"),
        Box::new(move || exactly_r_oracle_check(n_max)),
    ));
    let tel_cap = n_max.min(8);
    for k in 2..=3usize {
        v.push(check(
            "e2",
            format!("occurrence counts telescope to the class size (k = {k}, n <= {tel_cap})"),
            Box::new(move || {
                let r_top = usize::try_from(crate::series::binom(
                    tel_cap as i64,
                    k as i64,
                    crate::series::BinomMode::Standard,
                ))
                .unwrap();
                let mut total = gf_avoid_12k(k).expand_integer(tel_cap).map_err(|e| format!("{e}"))?;
                for r in 1..=r_top {
                    let part = gf_exactly_r_12k(k, r)
                        .and_then(|g| g.expand_integer(tel_cap))
                        .map_err(|e| format!("{e}"))?;
                    for (t, p) in total.iter_mut().zip(part) {
                        *t += p;
                    }
                }
                for n in 0..=tel_cap {
                    let class = if n == 0 { BigInt::one() } else { schroder_number(n - 1) };
                    if total[n] != class {
                        return Err(format!("n = {n}: telescoped {} vs class {class}", total[n]));
                    }
                }
                Ok(())
            }),
        ));
    }
    v
}

/// Tallies `tau_2` and `tau_3` over the whole class once per length and
/// compares with the closed forms for `r = 1, 2, 3`.
fn exactly_r_oracle_check(n_max: usize) -> std::result::Result<(), String> {
    let set = PatternSet::schroder();
    // counts[(k index 0/1)][r - 1][n]
    let mut counts = vec![vec![vec![BigInt::zero(); n_max + 1]; 3]; 2];
    for n in 0..=n_max {
        for pi in enumerate_class_with_limit(n, &set, n_max).map_err(|e| format!("{e}"))? {
            let stats = pi.stat_vector(3);
            for (ki, k) in [2usize, 3].iter().enumerate() {
                let t = &stats.values[k - 1];
                for r in 1..=3usize {
                    if *t == BigInt::from(r) {
                        counts[ki][r - 1][n] += 1;
                    }
                }
            }
        }
    }
    for (ki, k) in [2usize, 3].iter().enumerate() {
        for r in 1..=3usize {
            let closed = gf_exactly_r_12k(*k, r)
                .and_then(|g| g.expand_integer(n_max))
                .map_err(|e| format!("{e}"))?;
            if let Err(e) = first_diff(&closed, &counts[ki][r - 1]) {
                return Err(format!("k = {k}, r = {r}: {e}"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// cf
// ---------------------------------------------------------------------

fn suite_cf(n_max: usize) -> Vec<Pending> {
    let mut v = Vec::new();
    v.push(check("cf", "finite continued fraction equals Chebyshev form (k = 2..8)", Box::new(|| {
        for k in 2..=8 {
            let via_cf = gf_avoid_12k_via_cf(k).map_err(|e| format!("{e}"))?;
            if via_cf != gf_avoid_12k(k) {
                return Err(format!("k = {k}: continued fraction route differs"));
            }
        }
        Ok(())
    })));
    let mv_cap = n_max.min(6);
    v.push(check(
        "cf",
        format!("multivariate cf matches statistic polynomial (K = 4, n <= {mv_cap})"),
        Box::new(move || {
            let brute = tau_polynomial(mv_cap, 4).map_err(|e| format!("{e}"))?;
            let level = |d: usize| {
                let exps: Vec<(u32, i64)> = (1..=4u32)
                    .map(|k| {
                        let c = crate::series::binom(
                            d as i64,
                            k as i64 - 1,
                            crate::series::BinomMode::Standard,
                        );
                        (k, i64::try_from(c).unwrap())
                    })
                    .collect();
                Monomial::from_exponents(&exps)
            };
            let cf = eval_schroder_cf(&level, mv_cap, mv_cap as i64, 1).map_err(|e| format!("{e}"))?;
            series_diff(&brute, &cf)
        }),
    ));
    let m_cap = n_max.min(4);
    v.push(check(
        "cf",
        format!("specialization to total increasing subsequences (|pi| <= {m_cap})"),
        Box::new(move || {
            // x tracks length, q tracks the number of nonempty increasing
            // subsequences; level d carries x q^(2^d).
            let set = PatternSet::schroder();
            let mut brute = TruncSeries::zero(1, m_cap as i64);
            for n in 0..=m_cap {
                for pi in enumerate_class_with_limit(n, &set, m_cap).map_err(|e| format!("{e}"))? {
                    let m = i64::try_from(&pi.m_statistic()).unwrap();
                    brute.add_term(
                        Monomial::from_exponents(&[(1, n as i64), (2, m)]),
                        BigRat::one(),
                    );
                }
            }
            let level = |d: usize| Monomial::from_exponents(&[(1, 1), (2, 1i64 << d)]);
            let cf = eval_schroder_cf(&level, m_cap, m_cap as i64, 1).map_err(|e| format!("{e}"))?;
            series_diff(&brute, &cf)
        }),
    ));
    v.push(check(
        "cf",
        "specialization to length plus noninversions (order 5)",
        Box::new(|| {
            // Single variable q with exponent tau_1 + tau_2; level d is q^(d+1).
            let order = 5usize;
            let set = PatternSet::schroder();
            let mut brute = TruncSeries::zero(1, order as i64);
            for n in 0..=order {
                for pi in enumerate_class_with_limit(n, &set, order).map_err(|e| format!("{e}"))? {
                    let e = n as i64 + i64::try_from(&pi.tau(2)).unwrap();
                    brute.add_term(Monomial::var(1, e), BigRat::one());
                }
            }
            let level = |d: usize| Monomial::var(1, d as i64 + 1);
            let cf = eval_schroder_cf(&level, order, order as i64, 1).map_err(|e| format!("{e}"))?;
            series_diff(&brute, &cf)
        }),
    ));
    v.push(check("cf", "depth beyond the truncation order is stable", Box::new(|| {
        let level = |d: usize| {
            let exps: Vec<(u32, i64)> = (1..=3u32)
                .map(|k| {
                    let c = crate::series::binom(
                        d as i64,
                        k as i64 - 1,
                        crate::series::BinomMode::Standard,
                    );
                    (k, i64::try_from(c).unwrap())
                })
                .collect();
            Monomial::from_exponents(&exps)
        };
        let a = eval_schroder_cf(&level, 6, 6, 1).map_err(|e| format!("{e}"))?;
        let b = eval_schroder_cf(&level, 9, 6, 1).map_err(|e| format!("{e}"))?;
        series_diff(&a, &b)
    })));
    v
}

/// Statistic polynomial of the full class:
/// `sum over |pi| <= n_max of prod_{k <= big_k} x_k^(tau_k(pi))`,
/// graded by `x_1` (the length).
pub fn tau_polynomial(n_max: usize, big_k: usize) -> Result<TruncSeries> {
    let set = PatternSet::schroder();
    let mut series = TruncSeries::zero(1, n_max as i64);
    for n in 0..=n_max {
        for pi in enumerate_class_with_limit(n, &set, n_max)? {
            let stats = pi.stat_vector(big_k);
            let exps: Vec<(u32, i64)> = (1..=big_k as u32)
                .map(|k| {
                    (k, i64::try_from(&stats.values[k as usize - 1]).expect("tau fits i64"))
                })
                .collect();
            series.add_term(Monomial::from_exponents(&exps), BigRat::one());
        }
    }
    Ok(series)
}

// ---------------------------------------------------------------------
// transfer
// ---------------------------------------------------------------------

fn suite_transfer() -> Vec<Pending> {
    let mut v = Vec::new();
    v.push(check("transfer", "determinant equals rescaled Chebyshev (k <= 10)", Box::new(|| {
        for k in 0..=10usize {
            let det = transfer_det(k);
            let want = cheb_p(k as i64 + 1).compose_x_squared();
            if det != want {
                return Err(format!("k = {k}: det {det} vs {want}"));
            }
        }
        Ok(())
    })));
    v.push(check(
        "transfer",
        "minor ratios match the height dynamic program (k <= 5, order 12)",
        Box::new(|| {
            let order = 12usize;
            for k in 0..=5usize {
                for r in 0..=k {
                    for s in 0..=k {
                        let gf = transfer_minor_gf(k, r, s).map_err(|e| format!("{e}"))?;
                        let series = gf.expand(order).map_err(|e| format!("{e}"))?;
                        let dp = gf_between_heights(r as u64, s as u64, k as u64, order)
                            .map_err(|e| format!("{e}"))?;
                        for (d, c) in series.iter().enumerate() {
                            if *c != BigRat::from_integer(dp.coeff(d)) {
                                return Err(format!(
                                    "k = {k}, r = {r}, s = {s}: degree {d} differs"
                                ));
                            }
                        }
                    }
                }
            }
            Ok(())
        }),
    ));
    v
}

// ---------------------------------------------------------------------
// bcs
// ---------------------------------------------------------------------

fn suite_bcs(n_max: usize) -> Vec<Pending> {
    let cap = n_max.min(6);
    let mut v = Vec::new();
    v.push(check("bcs", "binomial matrix inverse (sizes <= 8)", Box::new(|| {
        for n in 1..=8 {
            if !binomial_matrix(n).mul(&binomial_matrix_inverse(n)).is_identity() {
                return Err(format!("size {n}: B * B^-1 differs from identity"));
            }
        }
        Ok(())
    })));
    let cases: Vec<(&'static str, StatMatrix)> = vec![
        ("identity", StatMatrix::identity(3)),
        ("binomial matrix", binomial_matrix(3)),
        ("inverse binomial matrix", binomial_matrix_inverse(3)),
        ("pseudorandom matrix", pseudorandom_matrix(3, 0x5EED_CAFE)),
    ];
    for (label, matrix) in cases {
        v.push(check(
            "bcs",
            format!("correspondence for the {label} (K = 4, n <= {cap})"),
            Box::new(move || {
                for c in check_stat_matrix_cf(&matrix, 4, cap).map_err(|e| format!("{e}"))? {
                    if !c.pass {
                        return Err(format!("{}: {}", c.name, c.detail.unwrap_or_default()));
                    }
                }
                Ok(())
            }),
        ));
    }
    v
}

/// Deterministic small-entry matrix from a fixed seed (splitmix64).
fn pseudorandom_matrix(n: usize, seed: u64) -> StatMatrix {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let entries = (0..n)
        .map(|_| (0..n).map(|_| (next() % 5) as i64 - 2).collect())
        .collect();
    StatMatrix::new(entries).unwrap()
}

// ---------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------

fn expect_eq<T: PartialEq + std::fmt::Display>(
    got: &T,
    want: &T,
    context: &str,
) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{context}: got {got}, expected {want}"))
    }
}

/// First index where two coefficient lists differ.
fn first_diff(got: &[BigInt], want: &[BigInt]) -> std::result::Result<(), String> {
    for (n, (g, w)) in got.iter().zip(want).enumerate() {
        if g != w {
            return Err(format!("first mismatch at n = {n}: {g} vs {w}"));
        }
    }
    Ok(())
}

fn series_diff(lhs: &TruncSeries, rhs: &TruncSeries) -> std::result::Result<(), String> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((m, a, b)) => Err(format!("first mismatch at {m}: {a} vs {b}")),
    }
}
