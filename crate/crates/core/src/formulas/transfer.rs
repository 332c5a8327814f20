//! Transfer-matrix method for height-bounded paths.  The matrix `A_k` is
//! `(k+1) x (k+1)` tridiagonal over `Z[t]` with `t^2` on the diagonal and
//! `t` off it (`t^2 = x`); determinants and minors of `I - A_k` give the
//! generating functions for paths between fixed heights.

use crate::series::{IntPoly, RationalGF};
use crate::{Error, Result};

/// The matrix `I - A_k`, entries in `Z[t]`.
pub fn transfer_matrix(k: usize) -> Vec<Vec<IntPoly>> {
    let n = k + 1;
    let mut m = vec![vec![IntPoly::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = if i == j {
                IntPoly::from_i64(&[1, 0, -1]) // 1 - t^2
            } else if i.abs_diff(j) == 1 {
                IntPoly::from_i64(&[0, -1]) // -t
            } else {
                IntPoly::zero()
            };
        }
    }
    m
}

/// `det(I - A_k)`, which equals `p_{k+1}(t^2)`.
pub fn transfer_det(k: usize) -> IntPoly {
    bareiss_det(transfer_matrix(k))
}

/// Generating function in `t` for bounded paths from height `r` to height
/// `s`: `(-1)^(r+s) minor(I - A_k; s, r) / det(I - A_k)`, the minor
/// deleting row `s` and column `r`, rows and columns indexed by height
/// `0..=k`.
pub fn transfer_minor_gf(k: usize, r: usize, s: usize) -> Result<RationalGF> {
    if r > k || s > k {
        return Err(Error::HeightRange(format!("r = {r}, s = {s}, k = {k}")));
    }
    let full = transfer_matrix(k);
    let minor: Vec<Vec<IntPoly>> = full
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != s)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != r)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect();
    let mut num = bareiss_det(minor);
    if (r + s) % 2 == 1 {
        num = -&num;
    }
    Ok(RationalGF::new(num, transfer_det(k)))
}

/// Fraction-free Gaussian elimination over `Z[t]`: every division in the
/// Bareiss update is exact in the polynomial ring.
pub fn bareiss_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut negate = false;
    let mut prev = IntPoly::one();
    for p in 0..n - 1 {
        if m[p][p].is_zero() {
            let Some(q) = (p + 1..n).find(|&q| !m[q][p].is_zero()) else {
                return IntPoly::zero();
            };
            m.swap(p, q);
            negate = !negate;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let t = &(&m[p][p] * &m[i][j]) - &(&m[i][p] * &m[p][j]);
                m[i][j] = t.div_exact(&prev);
            }
            m[i][p] = IntPoly::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::cheb_p;
    use crate::path::gf_between_heights;
    use crate::series::BigRat;
    use num::bigint::BigInt;
    use num::Zero;

    #[test]
    fn small_determinants() {
        // k = 0: det(1 - t^2) = p_1(t^2).
        assert_eq!(transfer_det(0), IntPoly::from_i64(&[1, 0, -1]));
        // k = 1: (1 - t^2)^2 - t^2 = 1 - 3t^2 + t^4 = p_2(t^2).
        assert_eq!(transfer_det(1), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn determinant_is_rescaled_chebyshev() {
        for k in 0..=10usize {
            assert_eq!(
                transfer_det(k),
                cheb_p(k as i64 + 1).compose_x_squared(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // Permutation-like matrix with zero diagonal.
        let z = IntPoly::zero;
        let one = IntPoly::one;
        let m = vec![
            vec![z(), one(), z()],
            vec![one(), z(), z()],
            vec![z(), z(), one()],
        ];
        assert_eq!(bareiss_det(m), -&IntPoly::one());
        let m = vec![vec![z(), z()], vec![z(), one()]];
        assert_eq!(bareiss_det(m), IntPoly::zero());
    }

    #[test]
    fn minor_ratio_matches_path_dynamic_program() {
        let order = 10;
        for k in 0..=3usize {
            for r in 0..=k {
                for s in 0..=k {
                    let gf = transfer_minor_gf(k, r, s).unwrap();
                    let series = gf.expand(order).unwrap();
                    let dp = gf_between_heights(r as u64, s as u64, k as u64, order).unwrap();
                    for d in 0..=order {
                        assert_eq!(
                            series[d],
                            BigRat::from_integer(dp.coeff(d)),
                            "k = {k}, r = {r}, s = {s}, degree {d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn empty_minor_at_k_zero() {
        // Deleting the only row and column leaves the empty determinant 1.
        let gf = transfer_minor_gf(0, 0, 0).unwrap();
        let c = gf.expand(6).unwrap();
        for (d, v) in c.iter().enumerate() {
            let want = if d % 2 == 0 { 1 } else { 0 };
            assert_eq!(*v, BigRat::from_integer(BigInt::from(want)), "degree {d}");
        }
        assert!(transfer_minor_gf(2, 3, 0).is_err());
        assert!(!transfer_det(5).coeff(0).is_zero());
    }
}
