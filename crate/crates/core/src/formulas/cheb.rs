use std::sync::{Mutex, OnceLock};

use crate::series::IntPoly;

/// Rescaled Chebyshev polynomial of the second kind:
/// `p_k(x) = (sqrt x)^k U_k((1-x)/(2 sqrt x))`.
///
/// Satisfies `p_{-1} = 0`, `p_0 = 1` and
/// `p_k = (1-x) p_{k-1} - x p_{k-2}`, which keeps every generating
/// function in this module inside integer-polynomial arithmetic: all
/// square roots of the classical form cancel against the rescaling.
///
/// `k = -1` is accepted and yields the zero polynomial.
pub fn cheb_p(k: i64) -> IntPoly {
    assert!(k >= -1, "index must be at least -1");
    if k == -1 {
        return IntPoly::zero();
    }
    static CACHE: OnceLock<Mutex<Vec<IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![IntPoly::one()]));
    let mut cache = cache.lock().expect("cheb cache poisoned");
    let k = k as usize;
    while cache.len() <= k {
        let m = cache.len();
        let one_minus_x = IntPoly::from_i64(&[1, -1]);
        let prev = &cache[m - 1];
        let prev2 = if m >= 2 { cache[m - 2].clone() } else { IntPoly::zero() };
        let next = &(&one_minus_x * prev) - &prev2.shift_up(1);
        cache.push(next);
    }
    cache[k].clone()
}
