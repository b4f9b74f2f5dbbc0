//! q-integers and Gaussian binomial coefficients.

use super::Scalar;

/// `1 + t + ... + t^(n-1)`, zero for `n = 0`.
pub fn q_int(t: &Scalar, n: u32) -> Scalar {
    let mut acc = t.zero_like();
    let mut pw = t.one_like();
    for _ in 0..n {
        acc = &acc + &pw;
        pw = &pw * t;
    }
    acc
}

/// Gaussian binomial `[n choose k]_t`, evaluated by the q-Pascal rule
/// `[n,k] = [n-1,k-1] + t^k [n-1,k]`. Total at roots of unity.
pub fn gauss_binom(n: u32, k: u32, t: &Scalar) -> Scalar {
    if k > n {
        return t.zero_like();
    }
    let one = t.one_like();
    let mut powers = vec![one.clone()];
    for i in 1..=k as usize {
        powers.push(&powers[i - 1] * t);
    }
    // row[j] = [m choose j] for the current m
    let mut row = vec![t.zero_like(); k as usize + 1];
    row[0] = one;
    for m in 1..=n as usize {
        for j in (1..=k.min(m as u32) as usize).rev() {
            row[j] = &row[j - 1] + &(&powers[j] * &row[j]);
        }
    }
    row[k as usize].clone()
}

/// Balanced binomial `t^(-k(n-k)) [n choose k]_{t^2}`, symmetric under `t -> 1/t`.
pub fn sym_binom(n: u32, k: u32, t: &Scalar) -> Scalar {
    let t2 = t * t;
    let shift = -((k as i64) * (n as i64 - k as i64));
    &gauss_binom(n, k, &t2) * &t.pow(shift).expect("nonzero base")
}
