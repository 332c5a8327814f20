use num::bigint::BigInt;
use num::{One, Zero};

/// Which convention to apply at the boundary of the binomial coefficient.
///
/// The height statistics use the first; the exact-occurrence generating
/// function uses the second.  The two disagree only at `C(a, 0)` for
/// negative `a`, so the mode is an explicit argument everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomMode {
    /// `C(a, b) = 0` whenever `b < 0` or `a < b`.
    Standard,
    /// Additionally `C(a, 0) = 1` and `C(a, -1) = 0` for every integer `a`,
    /// including negative upper arguments.
    AllowNegativeUpper,
}

/// Binomial coefficient under the chosen boundary convention.
pub fn binom(a: i64, b: i64, mode: BinomMode) -> BigInt {
    match mode {
        BinomMode::AllowNegativeUpper => {
            if b == 0 {
                return BigInt::one();
            }
            if b == -1 {
                return BigInt::zero();
            }
            binom(a, b, BinomMode::Standard)
        }
        BinomMode::Standard => {
            if b < 0 || a < b {
                return BigInt::zero();
            }
            // Here 0 <= b <= a.
            let b = b.min(a - b);
            let mut acc = BigInt::one();
            for i in 0..b {
                acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
            }
            acc
        }
    }
}
