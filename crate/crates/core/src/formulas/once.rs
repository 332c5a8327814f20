use super::cheb::cheb_p;
use crate::series::{IntPoly, RationalGF};
use crate::{Error, Result};

/// Transform for exact-once containment: with `J` the generating function
/// for permutations containing the pattern exactly once while avoiding its
/// extension, and `H` the one for avoiding the pattern, the extension is
/// contained exactly once with generating function `x J / (2 - x - H)^2`.
pub fn contain_once_transform(j: &RationalGF, h: &RationalGF) -> Result<RationalGF> {
    let two_minus_x = RationalGF::from_poly(IntPoly::from_i64(&[2, -1]));
    let den = &two_minus_x - h;
    if den.is_zero() {
        return Err(Error::DegenerateCf("exact-once transform denominator vanishes".into()));
    }
    Ok(&(&RationalGF::x() * j) / &den.pow(2))
}

/// Generating function for class permutations containing exactly one
/// `12...k` (`k >= 2`): `x^k / p_{k-1}^2`.
pub fn gf_once_12k(k: usize) -> Result<RationalGF> {
    if k < 2 {
        return Err(Error::Range(format!("k = {k}, need k >= 2")));
    }
    Ok(RationalGF::new(IntPoly::x_pow(k), cheb_p(k as i64 - 1).pow(2)))
}

/// Generating function for class permutations containing exactly one
/// `21 3 4 ... k` (`k >= 3`): `x^k (1+x) (1-x)^2 / p_{k-1}^2`.
pub fn gf_once_213k(k: usize) -> Result<RationalGF> {
    if k < 3 {
        return Err(Error::Range(format!("k = {k}, need k >= 3")));
    }
    let num = &(&IntPoly::from_i64(&[1, 1]) * &IntPoly::from_i64(&[1, -2, 1])) * &IntPoly::x_pow(k);
    Ok(RationalGF::new(num, cheb_p(k as i64 - 1).pow(2)))
}
