use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::BigRat;
use crate::{Error, Result};

/// Monomial over indexed variables, exponents possibly negative (Laurent
/// exponents appear when statistic matrices have negative entries).  Zero
/// exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<u32, i64>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(index: u32, exponent: i64) -> Self {
        let mut m = Monomial::unit();
        m.set(index, exponent);
        m
    }

    pub fn from_exponents(pairs: &[(u32, i64)]) -> Self {
        let mut m = Monomial::unit();
        for &(v, e) in pairs {
            m.set(v, m.exponent(v) + e);
        }
        m
    }

    fn set(&mut self, index: u32, exponent: i64) {
        if exponent == 0 {
            self.exponents.remove(&index);
        } else {
            self.exponents.insert(index, exponent);
        }
    }

    pub fn exponent(&self, index: u32) -> i64 {
        self.exponents.get(&index).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&v, &e) in &other.exponents {
            out.set(v, out.exponent(v) + e);
        }
        out
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    /// Renders with the given variable namer, e.g. `x^2 q^-1`.
    pub fn render(&self, namer: &dyn Fn(u32) -> String) -> String {
        if self.is_unit() {
            return "1".into();
        }
        self.exponents
            .iter()
            .map(|(&v, &e)| {
                if e == 1 {
                    namer(v)
                } else {
                    format!("{}^{}", namer(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|v| format!("x{v}")))
    }
}

/// Sparse multivariate series with rational coefficients, truncated by the
/// exponent of one distinguished grading variable: stored monomials keep
/// that exponent within `0..=order`, and arithmetic discards anything
/// beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    terms: BTreeMap<Monomial, BigRat>,
    grading: u32,
    order: i64,
}

impl TruncSeries {
    pub fn zero(grading: u32, order: i64) -> Self {
        TruncSeries { terms: BTreeMap::new(), grading, order }
    }

    pub fn one(grading: u32, order: i64) -> Self {
        let mut s = TruncSeries::zero(grading, order);
        s.add_term(Monomial::unit(), BigRat::one());
        s
    }

    pub fn from_monomial(m: Monomial, grading: u32, order: i64) -> Self {
        let mut s = TruncSeries::zero(grading, order);
        s.add_term(m, BigRat::one());
        s
    }

    pub fn grading(&self) -> u32 {
        self.grading
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Adds `c * m`, dropping it if the grading exponent is out of range
    /// and removing the entry if the total cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let g = m.exponent(self.grading);
        if g < 0 || g > self.order {
            return;
        }
        let cancelled = {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigRat::zero);
            *entry += c;
            entry.is_zero()
        };
        if cancelled {
            self.terms.remove(&m);
        }
    }

    fn check_config(&self, other: &TruncSeries) -> Result<()> {
        if self.grading != other.grading || self.order != other.order {
            return Err(Error::TruncationMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_config(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_config(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigRat) -> TruncSeries {
        let mut out = TruncSeries::zero(self.grading, self.order);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_config(other)?;
        let mut out = TruncSeries::zero(self.grading, self.order);
        for (m1, c1) in &self.terms {
            let g1 = m1.exponent(self.grading);
            for (m2, c2) in &other.terms {
                if g1 + m2.exponent(self.grading) > self.order {
                    continue;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRat) -> TruncSeries {
        let mut out = TruncSeries::zero(self.grading, self.order);
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// Requires the grading-degree-zero part to be a single scalar term;
    /// the inverse of the remainder is then a terminating fixed-point
    /// iteration, each round settling one more grading slice.
    pub fn invert(&self) -> Result<TruncSeries> {
        let unit_coeff = self.coefficient(&Monomial::unit());
        let zero_slice_terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(self.grading) == 0)
            .count();
        let expected = usize::from(!unit_coeff.is_zero());
        if unit_coeff.is_zero() || zero_slice_terms != expected {
            return Err(Error::NonInvertibleSeries);
        }
        let c_inv = unit_coeff.recip();
        // s = c (1 - r) with r carrying grading >= 1; invert the geometric
        // series.
        let mut r = self.scalar_mul(&-c_inv.clone());
        r.add_term(Monomial::unit(), BigRat::one());
        let mut acc = TruncSeries::one(self.grading, self.order);
        let mut power = TruncSeries::one(self.grading, self.order);
        for _ in 0..self.order {
            power = power.mul(&r)?;
            if power.terms.is_empty() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scalar_mul(&c_inv))
    }

    /// Restrict to the terms whose grading exponent equals `g`.
    pub fn grading_slice(&self, g: i64) -> TruncSeries {
        let mut out = TruncSeries::zero(self.grading, self.order);
        for (m, c) in &self.terms {
            if m.exponent(self.grading) == g {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// First monomial (in term order) where the two series differ.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<(Monomial, BigRat, BigRat)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for m in keys {
            let a = self.coefficient(m);
            let b = other.coefficient(m);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }

    /// Renders as a sorted list `coeff * monomial`, one term per line
    /// element, using the given variable namer.
    pub fn render(&self, namer: &dyn Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if m.is_unit() {
                    format!("{c}")
                } else {
                    format!("{c} * {}", m.render(namer))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|v| format!("x{v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn rat(n: i64) -> BigRat {
        BigRat::from_integer(BigInt::from(n))
    }

    #[test]
    fn monomial_products() {
        let a = Monomial::from_exponents(&[(1, 1), (2, 2)]);
        let b = Monomial::var(1, 1);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[(1, 2), (2, 2)]));
        assert_eq!(a.mul(&Monomial::var(1, -1)), Monomial::var(2, 2));
        assert_eq!(Monomial::var(3, 0), Monomial::unit());
    }

    #[test]
    fn truncated_multiplication() {
        // (1 + x)(1 - x) = 1 - x^2 at order 5.
        let x = Monomial::var(1, 1);
        let mut a = TruncSeries::one(1, 5);
        a.add_term(x.clone(), rat(1));
        let mut b = TruncSeries::one(1, 5);
        b.add_term(x.clone(), rat(-1));
        let prod = a.mul(&b).unwrap();
        let mut want = TruncSeries::one(1, 5);
        want.add_term(Monomial::var(1, 2), rat(-1));
        assert_eq!(prod, want);
    }

    #[test]
    fn geometric_inverse() {
        // (1 - x)^-1 = 1 + x + ... + x^N.
        let mut s = TruncSeries::one(1, 6);
        s.add_term(Monomial::var(1, 1), rat(-1));
        let inv = s.invert().unwrap();
        for e in 0..=6 {
            assert_eq!(inv.coefficient(&Monomial::var(1, e)), rat(1));
        }
        assert_eq!(s.mul(&inv).unwrap(), TruncSeries::one(1, 6));
    }

    #[test]
    fn bivariate_inverse() {
        // (1 - x - xq)^-1 = sum_n x^n (1+q)^n truncated at x-order 4.
        let mut s = TruncSeries::one(1, 4);
        s.add_term(Monomial::var(1, 1), rat(-1));
        s.add_term(Monomial::from_exponents(&[(1, 1), (2, 1)]), rat(-1));
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), TruncSeries::one(1, 4));
        // Coefficient of x^3 q^2 is C(3,2) = 3.
        assert_eq!(
            inv.coefficient(&Monomial::from_exponents(&[(1, 3), (2, 2)])),
            rat(3)
        );
    }

    #[test]
    fn scalar_inverse() {
        let s = TruncSeries::one(1, 3).scalar_mul(&rat(2));
        let inv = s.invert().unwrap();
        assert_eq!(
            inv.coefficient(&Monomial::unit()),
            BigRat::new(BigInt::from(1), BigInt::from(2))
        );
    }

    #[test]
    fn invert_requires_scalar_constant_slice() {
        let s = TruncSeries::zero(1, 3);
        assert!(matches!(s.invert(), Err(Error::NonInvertibleSeries)));
        // A grading-zero term in another variable blocks inversion.
        let mut s = TruncSeries::one(1, 3);
        s.add_term(Monomial::var(2, 1), rat(1));
        assert!(matches!(s.invert(), Err(Error::NonInvertibleSeries)));
    }

    #[test]
    fn truncation_config_mismatch() {
        let a = TruncSeries::one(1, 3);
        let b = TruncSeries::one(1, 4);
        assert!(matches!(a.add(&b), Err(Error::TruncationMismatch)));
        let c = TruncSeries::one(2, 3);
        assert!(matches!(a.mul(&c), Err(Error::TruncationMismatch)));
    }
}
