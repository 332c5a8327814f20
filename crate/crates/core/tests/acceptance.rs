//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line.  Every expected value is pinned here, either verbatim from the
//! worked examples or frozen from the brute-force oracles.

use std::collections::BTreeSet;
use std::time::Instant;

use num::bigint::BigInt;
use num::{One, Zero};

use schroder_core::bijection::{path_to_perm, path_to_perm_direct, perm_to_path};
use schroder_core::formulas::{
    binomial_matrix, binomial_matrix_inverse, brute_avoid, brute_contain_once,
    brute_contain_once_avoid_next, cheb_p, check_stat_matrix_cf, count_231, count_321,
    gf_avoid_12k, gf_avoid_12k_via_cf, gf_avoid_213k, gf_avoid_2314k, gf_avoid_3214k,
    gf_exactly_r_12k, gf_once_12k, gf_once_213k, schroder_number, transfer_det, transfer_minor_gf,
    StatMatrix,
};
use schroder_core::path::{all_paths, gf_between_heights, SchroderPath};
use schroder_core::perm::{
    append_max, class_members, enumerate_class_with_limit, increasing_pattern, pattern_213k,
    pattern_2314k, pattern_3214k, star_preserves_321, PatternSet, Permutation,
};
use schroder_core::series::{binom, BigRat, BinomMode, IntPoly, RationalGF};

fn report(criterion: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("[PASS] criterion {criterion}"),
        Err(e) => println!("[FAIL] criterion {criterion}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {criterion} failed: {e}");
    }
}

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

#[test]
fn c01_class_sizes_match_schroder_numbers() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let expected: Vec<BigInt> = ints(&[1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]);
        let set = PatternSet::schroder();
        for n in 1..=10usize {
            let mut count = BigInt::zero();
            for _ in enumerate_class_with_limit(n, &set, 10).map_err(|e| e.to_string())? {
                count += 1;
            }
            if count != expected[n - 1] {
                return Err(format!("n = {n}: enumerated {count}, expected {}", expected[n - 1]));
            }
            if count != schroder_number(n - 1) {
                return Err(format!("n = {n}: recurrence disagrees with enumeration"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 60 {
            return Err(format!("enumeration took {elapsed:?}, over the 60 s budget"));
        }
        Ok(())
    };
    report("01 class sizes |S_n(1243,2143)| = r_(n-1) for n <= 10", run());
}

#[test]
fn c02_bijection_golden_vectors() {
    let run = || -> Result<(), String> {
        let golden = [
            ("NDNNEEENNDENEE", "836791425"),
            ("DNEDDNNENDEE", "978624135"),
            ("NNENDNNEDEEDE", "683425719"),
        ];
        for (ptext, wtext) in golden {
            let path: SchroderPath = ptext.parse().map_err(|e| format!("{e}"))?;
            let want: Permutation = wtext.parse().map_err(|e| format!("{e}"))?;
            let rec = path_to_perm(&path);
            if rec != want {
                return Err(format!("recursive image of {ptext} is {rec}"));
            }
            let dir = path_to_perm_direct(&path);
            if dir != want {
                return Err(format!("direct image of {ptext} is {dir}"));
            }
            let back = perm_to_path(&want).map_err(|e| format!("{e}"))?;
            if back != path {
                return Err(format!("inverse of {wtext} is {back}"));
            }
        }
        Ok(())
    };
    report("02 bijection golden vectors (direct + recursive + inverse)", run());
}

#[test]
fn c03_statistic_preservation_exhaustive() {
    let run = || -> Result<(), String> {
        for n in 0..=7usize {
            for path in all_paths(n).map_err(|e| e.to_string())? {
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
    };
    report("03 statistic preservation tau_k(phi(pi)) = tau_k(pi), n <= 7", run());
}

#[test]
fn c04_worked_statistic_vectors() {
    let run = || -> Result<(), String> {
        let path: SchroderPath = "NDEDNNNNDNEENEDEEE".parse().map_err(|e| format!("{e}"))?;
        let want_path = ints(&[12, 28, 35, 24, 8, 1, 0, 0]);
        for (i, w) in want_path.iter().enumerate() {
            let got = path.tau(i + 1);
            if got != *w {
                return Err(format!("path tau_{} = {got}, expected {w}", i + 1));
            }
        }
        let perm: Permutation = "71824356".parse().map_err(|e| format!("{e}"))?;
        let got = perm.stat_vector(6).values;
        let want_perm = ints(&[8, 16, 16, 9, 2, 0]);
        if got != want_perm {
            return Err(format!("permutation vector {got:?}"));
        }
        Ok(())
    };
    report("04 worked statistic vectors (path and permutation)", run());
}

#[test]
fn c05_chebyshev_gf_vs_oracle_both_families() {
    let run = || -> Result<(), String> {
        for k in 2..=6usize {
            let closed = gf_avoid_12k(k).expand_integer(9).map_err(|e| e.to_string())?;
            let oracle_12 = brute_avoid(&increasing_pattern(k), 9).map_err(|e| e.to_string())?;
            if closed != oracle_12 {
                return Err(format!("12...{k}: {closed:?} vs {oracle_12:?}"));
            }
            let closed = gf_avoid_213k(k).expand_integer(9).map_err(|e| e.to_string())?;
            let oracle_213 = brute_avoid(&pattern_213k(k), 9).map_err(|e| e.to_string())?;
            if closed != oracle_213 {
                return Err(format!("213...{k}: {closed:?} vs {oracle_213:?}"));
            }
        }
        Ok(())
    };
    report("05 Chebyshev generating functions vs oracle (both families, k <= 6, n <= 9)", run());
}

#[test]
fn c06_finite_continued_fraction_equals_chebyshev_form() {
    let run = || -> Result<(), String> {
        for k in 2..=8usize {
            let via_cf = gf_avoid_12k_via_cf(k).map_err(|e| e.to_string())?;
            let closed = gf_avoid_12k(k);
            if via_cf != closed {
                return Err(format!("k = {k}: {via_cf} vs {closed}"));
            }
        }
        Ok(())
    };
    report("06 finite continued fraction equals 1 + x p_(k-2)/p_(k-1), k <= 8", run());
}

#[test]
fn c07_multivariate_continued_fraction() {
    use schroder_core::series::{eval_schroder_cf, Monomial, TruncSeries};
    let run = || -> Result<(), String> {
        // Full multivariate identity at K = 4, lengths <= 6.
        let brute = schroder_core::verify::tau_polynomial(6, 4).map_err(|e| e.to_string())?;
        let level = |d: usize| {
            let exps: Vec<(u32, i64)> = (1..=4u32)
                .map(|k| {
                    let c = binom(d as i64, k as i64 - 1, BinomMode::Standard);
                    (k, i64::try_from(c).unwrap())
                })
                .collect();
            Monomial::from_exponents(&exps)
        };
        let cf = eval_schroder_cf(&level, 6, 6, 1).map_err(|e| e.to_string())?;
        if let Some((m, a, b)) = brute.first_difference(&cf) {
            return Err(format!("multivariate: first mismatch at {m}: {a} vs {b}"));
        }

        // Specialization x_1 = xq, x_i = q: levels x q^(2^d), graded by x.
        let set = PatternSet::schroder();
        let mut brute_m = TruncSeries::zero(1, 4);
        for n in 0..=4usize {
            for pi in enumerate_class_with_limit(n, &set, 4).map_err(|e| e.to_string())? {
                let m = i64::try_from(&pi.m_statistic()).unwrap();
                brute_m.add_term(Monomial::from_exponents(&[(1, n as i64), (2, m)]), BigRat::one());
            }
        }
        let level_m = |d: usize| Monomial::from_exponents(&[(1, 1), (2, 1i64 << d)]);
        let cf_m = eval_schroder_cf(&level_m, 4, 4, 1).map_err(|e| e.to_string())?;
        if let Some((m, a, b)) = brute_m.first_difference(&cf_m) {
            return Err(format!("m-statistic: first mismatch at {m}: {a} vs {b}"));
        }

        // Specialization x_1 = x_2 = q, x_i = 1: levels q^(d+1), graded by q.
        let mut brute_q = TruncSeries::zero(1, 5);
        for n in 0..=5usize {
            for pi in enumerate_class_with_limit(n, &set, 5).map_err(|e| e.to_string())? {
                let e = n as i64 + i64::try_from(&pi.tau(2)).unwrap();
                brute_q.add_term(Monomial::var(1, e), BigRat::one());
            }
        }
        let level_q = |d: usize| Monomial::var(1, d as i64 + 1);
        let cf_q = eval_schroder_cf(&level_q, 5, 5, 1).map_err(|e| e.to_string())?;
        if let Some((m, a, b)) = brute_q.first_difference(&cf_q) {
            return Err(format!("length+noninversions: first mismatch at {m}: {a} vs {b}"));
        }
        Ok(())
    };
    report("07 multivariate continued fraction and its specializations", run());
}

#[test]
fn c08_exact_occurrence_generating_functions() {
    let run = || -> Result<(), String> {
        // Symbolic special case r = 1.
        for k in 2..=6usize {
            let got = gf_exactly_r_12k(k, 1).map_err(|e| e.to_string())?;
            let want = RationalGF::new(IntPoly::x_pow(k), cheb_p(k as i64 - 1).pow(2));
            if got != want {
                return Err(format!("k = {k}: r = 1 closed form differs"));
            }
        }
        // Oracle comparison in one pass over the class, n <= 10.
        let n_max = 10usize;
        let set = PatternSet::schroder();
        let mut counts = vec![vec![vec![BigInt::zero(); n_max + 1]; 3]; 2];
        for n in 0..=n_max {
            for pi in enumerate_class_with_limit(n, &set, n_max).map_err(|e| e.to_string())? {
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
                    .map_err(|e| e.to_string())?;
                if closed != counts[ki][r - 1] {
                    return Err(format!(
                        "k = {k}, r = {r}: closed {closed:?} vs oracle {:?}",
                        counts[ki][r - 1]
                    ));
                }
            }
        }
        Ok(())
    };
    report("08 exact-occurrence counts (k = 2,3; r = 1..3; n <= 10) and r = 1 closed form", run());
}

#[test]
fn c09_extra_pattern_families() {
    let run = || -> Result<(), String> {
        // Closed counts vs oracle for n <= 10.
        let with_231 = PatternSet::schroder_with(&[pattern_2314k(3)]);
        let with_321 = PatternSet::schroder_with(&[pattern_3214k(3)]);
        for n in 0..=10usize {
            let mut c231 = BigInt::zero();
            for _ in enumerate_class_with_limit(n, &with_231, 10).map_err(|e| e.to_string())? {
                c231 += 1;
            }
            if n >= 2 {
                let formula = count_231(n).map_err(|e| e.to_string())?;
                if formula != c231 {
                    return Err(format!("231 count at n = {n}: {formula} vs {c231}"));
                }
            }
            let mut c321 = BigInt::zero();
            for _ in enumerate_class_with_limit(n, &with_321, 10).map_err(|e| e.to_string())? {
                c321 += 1;
            }
            if n >= 1 {
                let formula = count_321(n).map_err(|e| e.to_string())?;
                if formula != c321 {
                    return Err(format!("321 count at n = {n}: {formula} vs {c321}"));
                }
            }
        }
        // k = 4 family generating functions vs oracle, n <= 9.
        let gf = gf_avoid_2314k(4)
            .and_then(|g| g.expand_integer(9))
            .map_err(|e| e.to_string())?;
        let oracle = brute_avoid(&pattern_2314k(4), 9).map_err(|e| e.to_string())?;
        if gf != oracle {
            return Err(format!("2314 family: {gf:?} vs {oracle:?}"));
        }
        let gf = gf_avoid_3214k(4)
            .and_then(|g| g.expand_integer(9))
            .map_err(|e| e.to_string())?;
        let oracle = brute_avoid(&pattern_3214k(4), 9).map_err(|e| e.to_string())?;
        if gf != oracle {
            return Err(format!("3214 family: {gf:?} vs {oracle:?}"));
        }
        // Star-product 321 characterization, |pi1| + |pi2| <= 9.
        let p321 = pattern_3214k(3);
        let set321 = PatternSet::schroder_with(std::slice::from_ref(&p321));
        for n1 in 1..=7usize {
            for n2 in 2..=9 - n1 {
                for pi1 in class_members(n1, &set321).map_err(|e| e.to_string())? {
                    for pi2 in class_members(n2, &set321).map_err(|e| e.to_string())? {
                        let prod = pi1.star(&pi2).map_err(|e| e.to_string())?;
                        let avoids = !prod.contains(&p321);
                        if avoids != star_preserves_321(&pi1, &pi2) {
                            return Err(format!("pi1 = {pi1}, pi2 = {pi2}"));
                        }
                    }
                }
            }
        }
        Ok(())
    };
    report("09 extra-pattern enumerations (231/321 counts, k = 4 families, star conditions)", run());
}

#[test]
fn c10_exact_once_results() {
    let run = || -> Result<(), String> {
        // Witness sets at length four.
        let class = class_members(4, &PatternSet::schroder()).map_err(|e| e.to_string())?;
        let collect = |tau: &Permutation| -> BTreeSet<String> {
            class
                .iter()
                .filter(|pi| pi.count_occurrences(tau).is_one())
                .map(|pi| pi.to_string())
                .collect()
        };
        let ones_123 = collect(&increasing_pattern(3));
        let want_123: BTreeSet<String> =
            ["2314", "1423", "2341", "1342", "4123", "3124"].iter().map(|s| s.to_string()).collect();
        if ones_123 != want_123 {
            return Err(format!("one-123 witnesses {ones_123:?}"));
        }
        let c = gf_once_12k(3)
            .and_then(|g| g.expand_integer(4))
            .map_err(|e| e.to_string())?;
        if c[4] != BigInt::from(6) {
            return Err(format!("coefficient of x^4 in the 12...3 form is {}", c[4]));
        }
        let ones_213 = collect(&pattern_213k(3));
        let want_213: BTreeSet<String> =
            ["3241", "2413", "1324", "3142", "4213"].iter().map(|s| s.to_string()).collect();
        if ones_213 != want_213 {
            return Err(format!("one-213 witnesses {ones_213:?}"));
        }
        let c = gf_once_213k(3)
            .and_then(|g| g.expand_integer(4))
            .map_err(|e| e.to_string())?;
        if c[4] != BigInt::from(5) {
            return Err(format!("coefficient of x^4 in the 213 form is {}", c[4]));
        }

        // Transform vs oracles for the four seed patterns, n <= 9.
        for seed in ["1", "12", "21", "213"] {
            let tau: Permutation = seed.parse().unwrap();
            let j = brute_contain_once_avoid_next(&tau, 9).map_err(|e| e.to_string())?;
            let h = brute_avoid(&tau, 9).map_err(|e| e.to_string())?;
            let target = brute_contain_once(&append_max(&tau), 9).map_err(|e| e.to_string())?;
            let rhs = once_transform_series(&j, &h, 9);
            if rhs != target {
                return Err(format!("seed {seed}: transform {rhs:?} vs oracle {target:?}"));
            }
        }

        // Exact-once equals extension-avoiding exact-once iff the pattern
        // ends with its maximum, for all nonempty class patterns of length
        // <= 4 (series compared through n = 8).
        for m in 1..=4usize {
            for tau in class_members(m, &PatternSet::schroder()).map_err(|e| e.to_string())? {
                let j = brute_contain_once_avoid_next(&tau, 8).map_err(|e| e.to_string())?;
                let g = brute_contain_once(&tau, 8).map_err(|e| e.to_string())?;
                let ends_with_max = *tau.entries().last().unwrap() as usize == m;
                if ends_with_max != (j == g) {
                    return Err(format!("tau = {tau}: ends_with_max = {ends_with_max}"));
                }
            }
        }
        Ok(())
    };
    report("10 exact-once witnesses, transform and end-with-maximum criterion", run());
}

/// `x J / (2 - x - H)^2` on integer coefficient lists (test-side oracle
/// arithmetic, independent of the RationalGF implementation).
fn once_transform_series(j: &[BigInt], h: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut d = vec![BigInt::zero(); order + 1];
    d[0] = BigInt::from(2) - &h[0];
    if order >= 1 {
        d[1] = BigInt::from(-1) - &h[1];
    }
    for i in 2..=order {
        d[i] = -h[i].clone();
    }
    assert!(d[0].is_one());
    let mut inv = vec![BigInt::zero(); order + 1];
    inv[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for i in 1..=n {
            acc += &d[i] * &inv[n - i];
        }
        inv[n] = -acc;
    }
    let conv = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            for jj in 0..=order - i {
                let t = &a[i] * &b[jj];
                out[i + jj] += t;
            }
        }
        out
    };
    let sq = conv(&inv, &inv);
    let ratio = conv(j, &sq);
    let mut out = vec![BigInt::zero(); order + 1];
    for i in 1..=order {
        out[i] = ratio[i - 1].clone();
    }
    out
}

#[test]
fn c11_transfer_matrices() {
    let run = || -> Result<(), String> {
        for k in 0..=10usize {
            let det = transfer_det(k);
            let want = cheb_p(k as i64 + 1).compose_x_squared();
            if det != want {
                return Err(format!("k = {k}: determinant differs"));
            }
        }
        for k in 0..=5usize {
            for r in 0..=k {
                for s in 0..=k {
                    let gf = transfer_minor_gf(k, r, s).map_err(|e| e.to_string())?;
                    let series = gf.expand(12).map_err(|e| e.to_string())?;
                    let dp = gf_between_heights(r as u64, s as u64, k as u64, 12)
                        .map_err(|e| e.to_string())?;
                    for (d, c) in series.iter().enumerate() {
                        if *c != BigRat::from_integer(dp.coeff(d)) {
                            return Err(format!("k = {k}, r = {r}, s = {s}, degree {d}"));
                        }
                    }
                }
            }
        }
        Ok(())
    };
    report("11 transfer matrices: determinants (k <= 10) and minors vs path DP (k <= 5)", run());
}

#[test]
fn c12_stat_matrix_continued_fraction_correspondence() {
    let run = || -> Result<(), String> {
        for n in 1..=8usize {
            if !binomial_matrix(n).mul(&binomial_matrix_inverse(n)).is_identity() {
                return Err(format!("B B^-1 != I at size {n}"));
            }
        }
        let mut matrices = vec![
            ("identity", StatMatrix::identity(3)),
            ("B", binomial_matrix(3)),
            ("B^-1", binomial_matrix_inverse(3)),
        ];
        matrices.push(("pseudorandom", splitmix_matrix(3, 0x5EED_CAFE)));
        for (label, a) in matrices {
            for c in check_stat_matrix_cf(&a, 4, 6).map_err(|e| e.to_string())? {
                if !c.pass {
                    return Err(format!("{label}: {} ({:?})", c.name, c.detail));
                }
            }
        }
        Ok(())
    };
    report("12 statistic-matrix continued-fraction correspondence (K = 4, n <= 6)", run());
}

fn splitmix_matrix(n: usize, seed: u64) -> StatMatrix {
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
