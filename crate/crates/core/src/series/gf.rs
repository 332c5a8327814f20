use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::{BigRat, IntPoly};
use crate::{Error, Result};

/// Rational generating function: a ratio of integer polynomials.
///
/// Stored with the common integer content divided out and the sign chosen
/// so the lowest nonzero coefficient of the denominator is positive.  No
/// polynomial-gcd reduction is performed; equality tests cross-multiply.
#[derive(Debug, Clone)]
pub struct RationalGF {
    num: IntPoly,
    den: IntPoly,
}

impl RationalGF {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        let g = num.content().gcd(&den.content());
        if g > BigInt::one() {
            num = num.div_scalar_exact(&g);
            den = den.div_scalar_exact(&g);
        }
        let low = den
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator");
        if low.is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalGF { num, den }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalGF { num: p, den: IntPoly::one() }
    }

    pub fn zero() -> Self {
        RationalGF::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RationalGF::from_poly(IntPoly::one())
    }

    pub fn x() -> Self {
        RationalGF::from_poly(IntPoly::x())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn pow(&self, e: usize) -> RationalGF {
        RationalGF::new(self.num.pow(e), self.den.pow(e))
    }

    pub fn recip(&self) -> Result<RationalGF> {
        if self.is_zero() {
            return Err(Error::DegenerateCf("division by the zero function".into()));
        }
        Ok(RationalGF::new(self.den.clone(), self.num.clone()))
    }

    /// Power-series coefficients `c_0..=c_order` of `num/den`; requires a
    /// nonzero denominator constant term.
    pub fn expand(&self, order: usize) -> Result<Vec<BigRat>> {
        let d0 = self.den.eval_at_zero();
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let d0 = BigRat::from_integer(d0);
        let mut out: Vec<BigRat> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = BigRat::from_integer(self.num.coeff(n));
            for j in 1..=n {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    acc -= BigRat::from_integer(dj) * &out[n - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// As [`RationalGF::expand`], asserting every coefficient is an
    /// integer.
    pub fn expand_integer(&self, order: usize) -> Result<Vec<BigInt>> {
        self.expand(order)?
            .into_iter()
            .map(|c| {
                if c.denom().is_one() {
                    Ok(c.numer().clone())
                } else {
                    Err(Error::InvalidInput(format!("non-integer coefficient {c}")))
                }
            })
            .collect()
    }
}

impl PartialEq for RationalGF {
    /// Equality as rational functions: `num1 * den2 == num2 * den1`.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalGF {}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalGF {
    type Output = RationalGF;
    fn div(self, rhs: &RationalGF) -> RationalGF {
        assert!(!rhs.is_zero(), "division by zero function");
        RationalGF::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF::new(-&self.num, self.den.clone())
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::new(IntPoly::from_i64(num), IntPoly::from_i64(den))
    }

    #[test]
    fn normalization_and_equality() {
        let a = gf(&[2, 2], &[-2, 2]); // (2+2x)/(-2+2x) -> -(1+x)/(1-x)
        assert_eq!(a.den(), &IntPoly::from_i64(&[1, -1]));
        assert_eq!(a.num(), &IntPoly::from_i64(&[-1, -1]));
        assert_eq!(gf(&[1, 1], &[1, 2, 1]), gf(&[1], &[1, 1]));
        assert_ne!(gf(&[1], &[1, 1]), gf(&[1], &[1, -1]));
    }

    #[test]
    fn geometric_expansion() {
        let g = gf(&[1], &[1, -1]);
        let c = g.expand_integer(5).unwrap();
        assert!(c.iter().all(One::is_one));
    }

    #[test]
    fn west_sequence_expansion() {
        // 1 + x(1-x)/(1-3x+x^2) expands to 1, 1, 2, 5, 13, 34.
        let g = &RationalGF::one() + &gf(&[0, 1, -1], &[1, -3, 1]);
        let c = g.expand_integer(5).unwrap();
        let want: Vec<BigInt> = [1, 1, 2, 5, 13, 34].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn low_class_sequence_expansion() {
        // 1 + x(x-1)^2/(2x-1)^2 expands to 1, 1, 2, 5, 12, 28.
        let g = &RationalGF::one() + &gf(&[0, 1, -2, 1], &[1, -4, 4]);
        let c = g.expand_integer(5).unwrap();
        let want: Vec<BigInt> = [1, 1, 2, 5, 12, 28].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn pole_detection() {
        let g = gf(&[1], &[0, 1]);
        assert!(matches!(g.expand(3), Err(Error::PoleAtOrigin)));
    }

    #[test]
    fn expansion_times_denominator_recovers_numerator() {
        let g = gf(&[1, 0, 3], &[2, -1, 5]);
        let order = 12;
        let c = g.expand(order).unwrap();
        // Convolve the expansion with the denominator.
        for n in 0..=order.min(6) {
            let mut acc = BigRat::zero();
            for j in 0..=n {
                acc += BigRat::from_integer(g.den().coeff(j)) * &c[n - j];
            }
            assert_eq!(acc, BigRat::from_integer(g.num().coeff(n)), "n = {n}");
        }
    }
}
