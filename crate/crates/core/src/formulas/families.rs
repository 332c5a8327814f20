use num::bigint::BigInt;

use super::cheb::cheb_p;
use crate::series::{binom, eval_finite_cf, BinomMode, IntPoly, RationalGF};
use crate::{Error, Result};

/// Generating function for class permutations also avoiding `12...k`:
/// `1 + x p_{k-2} / p_{k-1}`, the rescaled form of the classical
/// `1 + sqrt(x) U_{k-2} / U_{k-1}` (the `sqrt x` powers cancel against the
/// rescaling `(sqrt x)^m U_m = p_m`, leaving a single factor `x`).
pub fn gf_avoid_12k(k: usize) -> RationalGF {
    assert!(k >= 1);
    let k = k as i64;
    let num = cheb_p(k - 2).shift_up(1);
    let den = cheb_p(k - 1);
    &RationalGF::one() + &RationalGF::new(num, den)
}

/// Generating function for class permutations also avoiding `21 3 4 ... k`.
/// Identical to [`gf_avoid_12k`] as a rational function; exposed separately
/// so the coefficient oracle exercises the other pattern.
pub fn gf_avoid_213k(k: usize) -> RationalGF {
    gf_avoid_12k(k)
}

/// The same function built as a finite continued fraction with `k - 1`
/// levels of `x / (1 - x)`, each tail subtracted.
pub fn gf_avoid_12k_via_cf(k: usize) -> Result<RationalGF> {
    assert!(k >= 1);
    if k == 1 {
        return Ok(RationalGF::one());
    }
    let x = RationalGF::x();
    let one_minus_x = RationalGF::from_poly(IntPoly::from_i64(&[1, -1]));
    let mut levels = vec![(x.clone(), one_minus_x.clone())];
    for _ in 1..k - 1 {
        levels.push((&RationalGF::zero() - &x, one_minus_x.clone()));
    }
    Ok(&RationalGF::one() + &eval_finite_cf(&levels)?)
}

/// Appending the next value to every pattern of a forbidden set transforms
/// the avoidance generating function by `P -> (2 - P) / (2 - x - P)`.
pub fn avoid_append_transform(p: &RationalGF) -> Result<RationalGF> {
    let two = RationalGF::from_poly(IntPoly::from_i64(&[2]));
    let two_minus_x = RationalGF::from_poly(IntPoly::from_i64(&[2, -1]));
    let den = &two_minus_x - p;
    if den.is_zero() {
        return Err(Error::DegenerateCf("append transform denominator vanishes".into()));
    }
    Ok(&(&two - p) / &den)
}

/// Denominator family for the `2 3 1 4 ... k` avoiders:
/// `f_2 = (x-1)^2`, `f_k = (1-2x)^2 p_{k-3} - (1-x)^2 x p_{k-4}`.
fn family_2314(k: usize) -> IntPoly {
    assert!(k >= 2);
    if k == 2 {
        return IntPoly::from_i64(&[1, -2, 1]);
    }
    let k = k as i64;
    let a = &IntPoly::from_i64(&[1, -4, 4]) * &cheb_p(k - 3);
    let b = &IntPoly::from_i64(&[1, -2, 1]) * &cheb_p(k - 4).shift_up(1);
    &a - &b
}

/// Generating function for class permutations avoiding `2 3 1 4 ... k`
/// (`k >= 3`): `1 + x f_{k-1} / f_k`.
pub fn gf_avoid_2314k(k: usize) -> Result<RationalGF> {
    if k < 3 {
        return Err(Error::Range(format!("k = {k}, need k >= 3")));
    }
    let num = family_2314(k - 1).shift_up(1);
    Ok(&RationalGF::one() + &RationalGF::new(num, family_2314(k)))
}

/// Denominator family for the `3 2 1 4 ... k` avoiders:
/// `g_k = -(1 + 2x - x^2) x p_k + (x^4 - 4x^3 + 2x^2 + 1) p_{k-1}`.
fn family_3214(k: usize) -> IntPoly {
    assert!(k >= 2);
    let k = k as i64;
    let a = &IntPoly::from_i64(&[-1, -2, 1]) * &cheb_p(k).shift_up(1);
    let b = &IntPoly::from_i64(&[1, 0, 2, -4, 1]) * &cheb_p(k - 1);
    &a + &b
}

/// Generating function for class permutations avoiding `3 2 1 4 ... k`
/// (`k >= 3`): `1 + x g_{k-1} / g_k`.
pub fn gf_avoid_3214k(k: usize) -> Result<RationalGF> {
    if k < 3 {
        return Err(Error::Range(format!("k = {k}, need k >= 3")));
    }
    let num = family_3214(k - 1).shift_up(1);
    Ok(&RationalGF::one() + &RationalGF::new(num, family_3214(k)))
}

/// Number of class permutations of length `n >= 2` avoiding 231:
/// `(n + 2) 2^(n-3)`, which is `2` at `n = 2`.
pub fn count_231(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Range(format!("n = {n}, formula needs n >= 2")));
    }
    if n == 2 {
        return Ok(BigInt::from(2));
    }
    Ok(BigInt::from(n as u64 + 2) << (n - 3))
}

/// Number of class permutations of length `n >= 1` avoiding 321:
/// `C(n-1,0) + C(n-1,1) + 2 C(n-1,2) + 2 C(n-1,3)`.
pub fn count_321(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Range(format!("n = {n}, formula needs n >= 1")));
    }
    let m = n as i64 - 1;
    let c = |b: i64| binom(m, b, BinomMode::Standard);
    Ok(c(0) + c(1) + BigInt::from(2) * c(2) + BigInt::from(2) * c(3))
}
