use num::bigint::BigInt;
use num::One;

/// `n`th Schröder number by the convolution recurrence
/// `r_n = r_{n-1} + sum_{i=1..n} r_{i-1} r_{n-i}`, `r_0 = 1`.
/// The class of length `n + 1` has exactly `r_n` members.
pub fn schroder_number(n: usize) -> BigInt {
    schroder_numbers(n).pop().unwrap()
}

/// `r_0..=r_n`.
pub fn schroder_numbers(n: usize) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = Vec::with_capacity(n + 1);
    r.push(BigInt::one());
    for m in 1..=n {
        let mut acc = r[m - 1].clone();
        for i in 1..=m {
            acc += &r[i - 1] * &r[m - i];
        }
        r.push(acc);
    }
    r
}

/// `n`th Catalan number by `C_n = sum_{i=1..n} C_{i-1} C_{n-i}`, `C_0 = 1`.
pub fn catalan_number(n: usize) -> BigInt {
    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    c.push(BigInt::one());
    for m in 1..=n {
        let mut acc = BigInt::from(0);
        for i in 1..=m {
            acc += &c[i - 1] * &c[m - i];
        }
        c.push(acc);
    }
    c.pop().unwrap()
}
