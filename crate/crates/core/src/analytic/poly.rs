use alloc::vec;
use alloc::vec::Vec;

use super::comb::pascal_row;
use crate::error::{Error, Result};
use crate::numeric::{comp_horner, DoubleDouble};
use crate::tensor::SymmetricFamily2;

/// Largest order for which the monomial expansion is computed exactly.
pub const MAX_EXPANSION_ORDER: usize = 40;

/// `g1` (or `g2`) of a family member expanded in the monomial basis.
///
/// Coefficients are kept exactly as two integer vectors, one multiplying
/// `a` and one multiplying `b`; position `t − 1` holds the coefficient of
/// `x^(m−t)` for `t = 1, …, m`. Evaluation uses compensated Horner on the
/// combined double-double coefficients, since the monomial coefficients
/// grow like `3^(m−1)` and cancel heavily on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedPolynomial {
    order: usize,
    a: f64,
    b: f64,
    a_part: Vec<i128>,
    b_part: Vec<i128>,
    combined: Vec<DoubleDouble>,
}

impl ReducedPolynomial {
    /// Expands `Σ_k w_k C(m−1, k) x^(m−1−k) (1 − x)^k` where `w_k` is `a`
    /// when `weight_is_a(k)` and `b` otherwise.
    fn expand(family: &SymmetricFamily2, weight_is_a: impl Fn(usize) -> bool) -> Result<Self> {
        let m = family.order();
        if m > MAX_EXPANSION_ORDER {
            return Err(Error::OrderLimit {
                order: m,
                limit: MAX_EXPANSION_ORDER,
                what: "exact expansion",
            });
        }
        let top = pascal_row(m as u32 - 1);
        let mut a_part = vec![0i128; m];
        let mut b_part = vec![0i128; m];
        for (k, &outer) in top.iter().enumerate() {
            let outer = outer as i128;
            let inner = pascal_row(k as u32);
            let target = if weight_is_a(k) {
                &mut a_part
            } else {
                &mut b_part
            };
            for (j, &c) in inner.iter().enumerate() {
                let power = m - 1 - k + j;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                target[m - 1 - power] += sign * outer * c as i128;
            }
        }
        let (a, b) = (family.a(), family.b());
        let combined = a_part
            .iter()
            .zip(&b_part)
            .map(|(&ca, &cb)| {
                DoubleDouble::from_i128(ca)
                    .scale(a)
                    .plus(DoubleDouble::from_i128(cb).scale(b))
            })
            .collect();
        Ok(Self {
            order: m,
            a,
            b,
            a_part,
            b_part,
            combined,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Rounded monomial coefficients, highest power (`x^(m−1)`) first.
    pub fn coefficients(&self) -> Vec<f64> {
        self.combined.iter().map(|c| c.to_f64()).collect()
    }

    /// Exact integer coefficients multiplying `a`.
    pub fn a_part(&self) -> &[i128] {
        &self.a_part
    }

    /// Exact integer coefficients multiplying `b`.
    pub fn b_part(&self) -> &[i128] {
        &self.b_part
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn eval(&self, x: f64) -> f64 {
        comp_horner(&self.combined, x)
    }
}

/// `g1(x) = f1(x, 1 − x)` in the monomial basis, by exact expansion of the
/// term-by-term sum.
pub fn g1_coefficients(family: &SymmetricFamily2) -> Result<ReducedPolynomial> {
    // i1 = 1 and k twos among the rest: entry a for even k
    ReducedPolynomial::expand(family, |k| k % 2 == 0)
}

/// `g2(y) = f2(1 − y, y)` in the monomial basis of `y`.
pub fn g2_coefficients(family: &SymmetricFamily2) -> Result<ReducedPolynomial> {
    // In y, term j carries y^(m-1-j) (1-y)^j and k = m-1-j twos among the
    // trailing indices; with i1 = 2 the entry is a when k is odd.
    let m = family.order();
    ReducedPolynomial::expand(family, move |j| (m - 1 - j) % 2 == 1)
}

/// The simplified coefficient of `x^(m−t)` in `g1` per unit of `a − b`:
/// `(m−1)/(m−t) · 2^(m−t−1) · C(m−2, t−1)`, with sign `(−1)^(t−1)`, for
/// `1 <= t <= m − 1`. The constant term (`t = m`) is not of this form.
pub fn power_form_coefficient(order: usize, t: usize) -> Result<i128> {
    if !(3..=MAX_EXPANSION_ORDER).contains(&order) {
        return Err(Error::OrderLimit {
            order,
            limit: MAX_EXPANSION_ORDER,
            what: "exact expansion",
        });
    }
    if t == 0 || t >= order {
        return Err(Error::InvalidOption {
            name: "t",
            reason: "must lie in 1..=order-1",
        });
    }
    let m = order as i128;
    let t_i = t as i128;
    let c = pascal_row(order as u32 - 2)[t - 1] as i128;
    let numerator = (m - 1) * (1i128 << (order - t - 1)) * c;
    debug_assert_eq!(numerator % (m - t_i), 0);
    let magnitude = numerator / (m - t_i);
    Ok(if t % 2 == 1 { magnitude } else { -magnitude })
}
