use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, constant term first.  The zero polynomial stores no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `x^m`.
    pub fn x_pow(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[m] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^m`.
    pub fn shift_up(&self, m: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `x -> x^2`.
    pub fn compose_x_squared(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_mul(2)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if coeffs.len() <= 2 * i {
                    coeffs.resize(2 * i + 1, BigInt::zero());
                }
                coeffs[2 * i] = c.clone();
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Greatest common divisor of the coefficients (zero for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn div_scalar_exact(&self, d: &BigInt) -> IntPoly {
        assert!(!d.is_zero());
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Exact polynomial division; panics if the division leaves a
    /// remainder.  Used by fraction-free elimination, where exactness is an
    /// invariant of the algorithm.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        assert!(nd >= dd, "inexact polynomial division (degree)");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let (q, r) = rem[i + dd].div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division (leading)");
            if !q.is_zero() {
                for j in 0..=dd {
                    let t = &q * &divisor.coeffs[j];
                    rem[i + j] -= t;
                }
            }
            quot[i] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += t;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64(&[1, 1]); // 1 + x
        let b = IntPoly::from_i64(&[1, -1]); // 1 - x
        assert_eq!(&a * &b, IntPoly::from_i64(&[1, 0, -1]));
        assert_eq!(&a + &b, IntPoly::from_i64(&[2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.pow(2), IntPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[1, 2, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(a.div_exact(&b), b);
        let p = IntPoly::from_i64(&[0, 2, -6, 4]);
        let q = IntPoly::from_i64(&[0, 2]);
        assert_eq!(p.div_exact(&q), IntPoly::from_i64(&[1, -3, 2]));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        let a = IntPoly::from_i64(&[1, 0, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        let _ = a.div_exact(&b);
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, -3, 1]).to_string(), "1 - 3*x + x^2");
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 2]).to_string(), "-1 + 2*x^2");
    }

    #[test]
    fn substitution_and_content() {
        let p = IntPoly::from_i64(&[1, -3, 1]);
        assert_eq!(p.compose_x_squared(), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(IntPoly::from_i64(&[6, -9, 3]).content(), BigInt::from(3));
    }
}
