use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`binomial`].
pub const MAX_BINOMIAL_N: u32 = 64;

/// Row `n` of Pascal's triangle, built by the additive recurrence.
pub(crate) fn pascal_row(n: u32) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(1);
        next.extend(row.windows(2).map(|w| w[0] + w[1]));
        next.push(1);
        row = next;
    }
    row
}

/// Exact `C(n, k)` for `0 <= k <= n <= 64`.
pub fn binomial(n: u32, k: u32) -> Result<u64> {
    if n > MAX_BINOMIAL_N || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    // C(64, 32) < 2^61, so the narrowing is lossless.
    Ok(pascal_row(n)[k as usize] as u64)
}

/// Checks that the even- and odd-index binomial sums of row `n` both equal
/// `2^(n−1)`, in exact integers.
pub fn check_parity_sums(n: u32) -> Result<bool> {
    if n == 0 {
        // row 0 is {1}: even sum 1, odd sum 0
        return Ok(false);
    }
    let mut even = 0u128;
    let mut odd = 0u128;
    for k in 0..=n {
        let c = binomial(n, k)? as u128;
        if k % 2 == 0 {
            even += c;
        } else {
            odd += c;
        }
    }
    let target = 1u128 << (n - 1);
    Ok(even == target && odd == target)
}
