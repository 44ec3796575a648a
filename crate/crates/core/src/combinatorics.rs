//! Exact integer counting helpers. Values saturate at `u128::MAX` instead
//! of overflowing.

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `i`-th Catalan number `binom(2i, i) / (i + 1)`.
pub fn catalan(i: u64) -> u128 {
    let b = binomial(2 * i, i);
    if b == u128::MAX {
        return u128::MAX;
    }
    b / (i as u128 + 1)
}
