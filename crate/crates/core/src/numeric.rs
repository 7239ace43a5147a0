//! Floating-point building blocks: integer powers, error-free transforms,
//! compensated summation and compensated Horner evaluation.

/// `base^exp` by repeated squaring. Underflow to zero is accepted.
pub fn powi(base: f64, exp: u32) -> f64 {
    let mut result = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= b;
        }
        e >>= 1;
        if e > 0 {
            b *= b;
        }
    }
    result
}

/// Error-free sum: `s + err == a + b` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    // 2^27 + 1
    const SPLITTER: f64 = 134_217_729.0;
    let c = SPLITTER * a;
    let hi = c - (c - a);
    (hi, a - hi)
}

/// Error-free product (Dekker): `p + err == a * b` exactly, barring
/// overflow and underflow.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let (s, err) = two_sum(self.sum, value);
        self.sum = s;
        self.compensation += err;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl core::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub fn from_i128(v: i128) -> Self {
        let hi = v as f64;
        // |v - hi| < 2^75 for |v| < 2^127; exact whenever |v| < 2^106.
        let lo = (v - hi as i128) as f64;
        let (hi, lo) = two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    /// `self * k`, accurate to roughly 2^-104 relative.
    pub fn scale(self, k: f64) -> Self {
        let (p, e) = two_prod(self.hi, k);
        let (hi, lo) = two_sum(p, e + self.lo * k);
        DoubleDouble { hi, lo }
    }

    pub fn plus(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let (hi, lo) = two_sum(s, e + self.lo + other.lo);
        DoubleDouble { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated Horner evaluation of `Σ coeffs[i] x^(d - i)` (highest power
/// first) with double-double coefficients.
///
/// The result is as accurate as if computed in twice the working precision
/// and then rounded, so the error bound is about `u + γ_{2d}² · cond`.
pub fn comp_horner(coeffs: &[DoubleDouble], x: f64) -> f64 {
    let Some((first, rest)) = coeffs.split_first() else {
        return 0.0;
    };
    let (xh, xl) = split(x);
    let mut s = first.hi;
    let mut r = first.lo;
    for c in rest {
        // two_prod(s, x) with x pre-split
        let p = s * x;
        let (sh, sl) = split(s);
        let pe = ((sh * xh - p) + sh * xl + sl * xh) + sl * xl;
        let (t, se) = two_sum(p, c.hi);
        s = t;
        r = r * x + (pe + se + c.lo);
    }
    s + r
}
