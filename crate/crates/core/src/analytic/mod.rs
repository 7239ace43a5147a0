//! Closed-form analysis of the symmetric order-`m` dimension-2 family.
//!
//! On the simplex `(x, 1 − x)` the stationary equations collapse to the
//! single scalar equation `h(x) = g1(x) − x = 0`, where `g1(x) = f1(x, 1−x)`.
//! Splitting the binomial expansion of `f1` by parity gives
//!
//! ```text
//! g1(x) = (a − b)/2 · (2x − 1)^(m−1) + 1/2
//! ```
//!
//! for both parities of `m`. With `u = 2x − 1` and `c = a − b` this becomes
//! `h = (u/2)(c·u^(m−2) − 1)`, so the roots are `u = 0` and the real
//! solutions of `c·u^(m−2) = 1` inside `[−1, 1]`; the latter exist only for
//! `|c| = 1`, i.e. for the two extremal tensors `a ∈ {0, 1}`.
//!
//! [`g1_direct`] evaluates the defining sum term by term and is the ground
//! truth that the closed form, the expansion in [`poly`] and the
//! enumeration are checked against.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::numeric::{powi, CompensatedSum};
use crate::tensor::{SimplexPoint, SymmetricFamily2, TransitionModel};

pub mod comb;
pub mod poly;

pub use comb::{binomial, check_parity_sums};
pub use poly::{g1_coefficients, g2_coefficients, power_form_coefficient, ReducedPolynomial};

/// Two candidate roots closer than this are the same root.
pub const MERGE_TOL: f64 = 1e-8;
/// `(a − b)(m − 1)` within this of one counts as equal to one.
pub const UNIT_TOL: f64 = 1e-12;

fn check_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfDomain(x))
    }
}

/// `Σ_k w_k C(m−1, k) x^(m−1−k) y^k`, with `w_k = even` for even `k`.
fn parity_sum(order: usize, x: f64, y: f64, even: f64, odd: f64) -> Result<f64> {
    let n = (order - 1) as u32;
    let mut acc = CompensatedSum::new();
    for k in 0..=n {
        let c = binomial(n, k).map_err(|_| Error::OrderLimit {
            order,
            limit: comb::MAX_BINOMIAL_N as usize + 1,
            what: "term-by-term evaluation",
        })? as f64;
        let w = if k % 2 == 0 { even } else { odd };
        acc.add(w * c * powi(x, n - k) * powi(y, k));
    }
    Ok(acc.value())
}

/// `g1(x) = f1(x, 1 − x)` summed term by term with exact binomials.
pub fn g1_direct(family: &SymmetricFamily2, x: f64) -> Result<f64> {
    check_domain(x)?;
    parity_sum(family.order(), x, 1.0 - x, family.a(), family.b())
}

/// `g2(y) = f2(1 − y, y)` summed term by term with exact binomials.
pub fn g2_direct(family: &SymmetricFamily2, y: f64) -> Result<f64> {
    check_domain(y)?;
    // first index 2 adds one to the count of twos
    parity_sum(family.order(), 1.0 - y, y, family.b(), family.a())
}

fn closed_unchecked(family: &SymmetricFamily2, x: f64) -> f64 {
    0.5 * family.c() * powi(2.0 * x - 1.0, family.order() as u32 - 1) + 0.5
}

/// `g1` in closed form: `(a − b)/2 · (2x − 1)^(m−1) + 1/2`. Works for any
/// order.
pub fn g1_closed(family: &SymmetricFamily2, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(closed_unchecked(family, x))
}

/// The commonly printed variant of the closed form, with constant term `b`
/// for even `m` and `a` for odd `m`. Those constants are the `x^0`
/// coefficients of the monomial expansion, not the constant of the power
/// form; kept only to quantify the difference.
pub fn g1_closed_printed(family: &SymmetricFamily2, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(closed_unchecked(family, x) - 0.5 + printed_constant(family))
}

fn printed_constant(family: &SymmetricFamily2) -> f64 {
    if family.is_even() {
        family.b()
    } else {
        family.a()
    }
}

/// `g1′(x) = (a − b)(m − 1)(2x − 1)^(m−2)`; defined on all of ℝ.
pub fn g1_prime(family: &SymmetricFamily2, x: f64) -> f64 {
    slope_parameter(family) * powi(2.0 * x - 1.0, family.order() as u32 - 2)
}

/// `h(x) = g1(x) − x` from the closed form; defined on all of ℝ.
pub fn h(family: &SymmetricFamily2, x: f64) -> f64 {
    closed_unchecked(family, x) - x
}

/// `h′(x) = g1′(x) − 1`.
pub fn h_prime(family: &SymmetricFamily2, x: f64) -> f64 {
    g1_prime(family, x) - 1.0
}

/// `(a − b)(m − 1)`, the signed case parameter.
pub fn slope_parameter(family: &SymmetricFamily2) -> f64 {
    family.c() * (family.order() - 1) as f64
}

fn cmp_unit(k: f64) -> Ordering {
    if (k - 1.0).abs() <= UNIT_TOL {
        Ordering::Equal
    } else if k < 1.0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Real roots in `[−1, 1]` of `k · u^e = 1`, clamping roots that sit within
/// [`UNIT_TOL`] outside.
fn unit_power_roots(k: f64, e: u32) -> Vec<f64> {
    if k == 0.0 || e == 0 {
        return Vec::new();
    }
    let mag = libm::pow(k.abs(), -1.0 / e as f64);
    if mag > 1.0 + UNIT_TOL {
        return Vec::new();
    }
    let mag = mag.min(1.0);
    if e % 2 == 1 {
        vec![mag.copysign(k)]
    } else if k > 0.0 {
        vec![-mag, mag]
    } else {
        Vec::new()
    }
}

/// All `x ∈ [0, 1]` with `h′(x) = 0`, ascending.
///
/// For odd `m` there is at most one; for even `m` and `(a − b)(m − 1) >= 1`
/// the even power gives the mirrored pair `½(1 ± ((a−b)(m−1))^(−1/(m−2)))`.
pub fn critical_points(family: &SymmetricFamily2) -> Vec<f64> {
    let e = family.order() as u32 - 2;
    unit_power_roots(slope_parameter(family), e)
        .into_iter()
        .map(|u| 0.5 * (1.0 + u))
        .collect()
}

fn merge_sorted(xs: &mut Vec<f64>) {
    xs.sort_by(|a, b| a.total_cmp(b));
    xs.dedup_by(|later, earlier| (*later - *earlier).abs() <= MERGE_TOL);
}

/// Every stationary vector `(x, 1 − x)` of the family, ascending in `x`.
pub fn enumerate_stationary(family: &SymmetricFamily2) -> Vec<SimplexPoint> {
    let e = family.order() as u32 - 2;
    let mut xs = vec![0.5];
    xs.extend(
        unit_power_roots(family.c(), e)
            .into_iter()
            .map(|u| 0.5 * (1.0 + u)),
    );
    merge_sorted(&mut xs);
    xs.into_iter()
        .map(|x| SimplexPoint::pair(family, x).expect("x lies on the simplex"))
        .collect()
}

/// Branch of the case analysis a family member falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `a = b`.
    EqualAB,
    /// `a > b`, `(a − b)(m − 1) < 1`.
    AGreaterLt1,
    /// `a > b`, `(a − b)(m − 1) = 1`.
    AGreaterEq1,
    /// `a > b`, `(a − b)(m − 1) > 1`.
    AGreaterGt1,
    /// `b > a` with `m` even.
    BGreaterEven,
    /// `b > a`, `m` odd, `(b − a)(m − 1) < 1`.
    BGreaterLt1,
    /// `b > a`, `m` odd, `(b − a)(m − 1) = 1`.
    BGreaterEq1,
    /// `b > a`, `m` odd, `(b − a)(m − 1) > 1`.
    BGreaterGt1,
}

impl CaseLabel {
    pub fn of(family: &SymmetricFamily2) -> Self {
        let c = family.c();
        let k = c.abs() * (family.order() - 1) as f64;
        if c.abs() <= 1e-15 {
            CaseLabel::EqualAB
        } else if c > 0.0 {
            match cmp_unit(k) {
                Ordering::Less => CaseLabel::AGreaterLt1,
                Ordering::Equal => CaseLabel::AGreaterEq1,
                Ordering::Greater => CaseLabel::AGreaterGt1,
            }
        } else if family.is_even() {
            CaseLabel::BGreaterEven
        } else {
            match cmp_unit(k) {
                Ordering::Less => CaseLabel::BGreaterLt1,
                Ordering::Equal => CaseLabel::BGreaterEq1,
                Ordering::Greater => CaseLabel::BGreaterGt1,
            }
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::EqualAB => "EqualAB",
            CaseLabel::AGreaterLt1 => "AGreater_lt1",
            CaseLabel::AGreaterEq1 => "AGreater_eq1",
            CaseLabel::AGreaterGt1 => "AGreater_gt1",
            CaseLabel::BGreaterEven => "BGreater_even",
            CaseLabel::BGreaterLt1 => "BGreater_lt1",
            CaseLabel::BGreaterEq1 => "BGreater_eq1",
            CaseLabel::BGreaterGt1 => "BGreater_gt1",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything known about one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub order: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub case: CaseLabel,
    pub critical_points: Vec<f64>,
    pub stationary_set: Vec<SimplexPoint>,
    pub irreducible: bool,
    /// Lexicographically first reducibility witness, 0-based.
    pub reducibility_witness: Option<Vec<usize>>,
    /// `|a − b|(m − 1)`, a Lipschitz bound for `g1` on `[0, 1]`.
    pub contraction_bound: f64,
    /// Stationary set in the commonly stated form of the case analysis:
    /// `{(½,½), (0,1)}` for `a = 1`, `{(½,½), (1,0)}` for `a = 0`,
    /// `{(½,½)}` otherwise. Ascending in `x`.
    pub literal_set: Vec<[f64; 2]>,
    /// Printed closed-form constant (`b` for even `m`, `a` for odd) minus
    /// the correct constant `1/2`.
    pub printed_constant_offset: f64,
    /// Human-readable differences between the computed results and the
    /// literal statements; informational.
    pub discrepancy_flags: Vec<String>,
}

fn literal_set(family: &SymmetricFamily2) -> Vec<[f64; 2]> {
    if family.is_p1() {
        vec![[0.0, 1.0], [0.5, 0.5]]
    } else if family.is_p2() {
        vec![[0.5, 0.5], [1.0, 0.0]]
    } else {
        vec![[0.5, 0.5]]
    }
}

fn fmt_points<'a>(points: impl Iterator<Item = &'a f64>) -> String {
    let parts: Vec<String> = points.map(|x| format!("({}, {})", x, 1.0 - x)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn classify(family: &SymmetricFamily2) -> ClassificationReport {
    let stationary_set = enumerate_stationary(family);
    let witness = family.is_reducible();
    let literal = literal_set(family);

    let computed: Vec<f64> = stationary_set.iter().map(SimplexPoint::x).collect();
    let stated: Vec<f64> = literal.iter().map(|p| p[0]).collect();
    let near = |x: &f64, set: &[f64]| set.iter().any(|y| (x - y).abs() <= MERGE_TOL);
    let only_computed: Vec<f64> = computed
        .iter()
        .copied()
        .filter(|x| !near(x, &stated))
        .collect();
    let only_stated: Vec<f64> = stated
        .iter()
        .copied()
        .filter(|x| !near(x, &computed))
        .collect();

    let mut flags = Vec::new();
    if !only_computed.is_empty() || !only_stated.is_empty() {
        flags.push(format!(
            "stationary set {} differs from the literal statement {}: computed only {}, stated only {}",
            fmt_points(computed.iter()),
            fmt_points(stated.iter()),
            fmt_points(only_computed.iter()),
            fmt_points(only_stated.iter()),
        ));
    }
    if (family.is_p1() || family.is_p2()) && witness.is_none() {
        flags.push(format!(
            "a = {} is stated to be reducible, but no subset satisfies the reducibility definition",
            family.a()
        ));
    }

    ClassificationReport {
        order: family.order(),
        a: family.a(),
        b: family.b(),
        c: family.c(),
        case: CaseLabel::of(family),
        critical_points: critical_points(family),
        stationary_set,
        irreducible: witness.is_none(),
        reducibility_witness: witness,
        contraction_bound: slope_parameter(family).abs(),
        literal_set: literal,
        printed_constant_offset: printed_constant(family) - 0.5,
        discrepancy_flags: flags,
    }
}
