use num::One;

use super::{BigRat, Monomial, RationalGF, TruncSeries};
use crate::{Error, Result};

/// Evaluates the finite continued fraction
/// `a_0 / (b_0 + a_1 / (b_1 + ... + a_m / b_m))`
/// bottom-up as an exact rational function.
///
/// Subtracted tails are expressed by negating the corresponding numerator.
/// An empty level list is an error.
pub fn eval_finite_cf(levels: &[(RationalGF, RationalGF)]) -> Result<RationalGF> {
    if levels.is_empty() {
        return Err(Error::DegenerateCf("no levels given".into()));
    }
    let mut tail = RationalGF::zero();
    for (a, b) in levels.iter().rev() {
        let bottom = &*b + &tail;
        if bottom.is_zero() {
            return Err(Error::DegenerateCf("zero denominator while folding".into()));
        }
        tail = &*a / &bottom;
    }
    Ok(tail)
}

/// Evaluates the monic-monomial continued fraction
/// `1 + a_0 / (1 - a_0 - a_1 / (1 - a_1 - a_2 / (...)))`
/// cut after `depth + 1` levels and truncated at the given order of the
/// grading variable.
///
/// Every level monomial must carry grading exponent at least 1; descending
/// to level `d` then multiplies by `a_0 ... a_d`, so with `depth >= order`
/// the cut is exact to the truncation order.
pub fn eval_schroder_cf(
    level: &dyn Fn(usize) -> Monomial,
    depth: usize,
    order: i64,
    grading: u32,
) -> Result<TruncSeries> {
    let mut tail = TruncSeries::zero(grading, order);
    for d in (0..=depth).rev() {
        let a = level(d);
        let g = a.exponent(grading);
        if g < 1 {
            return Err(Error::InvalidGrading { level: d, exponent: g });
        }
        // 1 - a_d - tail
        let mut bottom = TruncSeries::one(grading, order);
        bottom.add_term(a.clone(), -BigRat::one());
        bottom = bottom.sub(&tail)?;
        let inv = bottom.invert()?;
        tail = inv.mul_monomial(&a, &BigRat::one());
    }
    let one = TruncSeries::one(grading, order);
    one.add(&tail)
}
