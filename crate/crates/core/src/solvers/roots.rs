use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Bisection stops once the bracket is this narrow.
pub const BISECTION_WIDTH: f64 = 1e-14;
/// Roots closer than this are merged.
pub const ROOT_MERGE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootScanOptions {
    /// Number of uniform grid points on `[0, 1]`, endpoints included.
    pub grid_points: usize,
    /// Acceptance threshold on `|h|` for boundary and tangential roots.
    pub tol: f64,
}

impl Default for RootScanOptions {
    fn default() -> Self {
        Self {
            grid_points: 100_001,
            tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketKind {
    /// Strict sign change between neighbouring grid values.
    SignChange,
    /// `|h| <= tol` at `x = 0` or `x = 1`.
    Boundary,
    /// Small `|h|` without a sign change, refined by minimizing `|h|`.
    Tangential,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub kind: BracketKind,
}

/// Roots of a scalar function on `[0, 1]`, strictly increasing, each with
/// the bracket that produced it.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<f64>,
    pub brackets: Vec<Bracket>,
}

struct Candidate {
    x: f64,
    abs_h: f64,
    bracket: Bracket,
}

fn eval<F: FnMut(f64) -> f64>(h: &mut F, x: f64) -> Result<f64> {
    let v = h(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { x, value: v })
    }
}

fn bisect<F: FnMut(f64) -> f64>(h: &mut F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64> {
    for _ in 0..200 {
        if hi - lo <= BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = eval(h, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section search for the minimum of `|h|` on `[lo, hi]`.
fn minimize_abs<F: FnMut(f64) -> f64>(h: &mut F, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = eval(h, x1)?.abs();
    let mut f2 = eval(h, x2)?.abs();
    while hi - lo > BISECTION_WIDTH {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = eval(h, x1)?.abs();
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = eval(h, x2)?.abs();
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Finds the roots of `h` on `[0, 1]` by a uniform sign scan.
///
/// Sign changes between neighbouring grid points are refined by bisection;
/// the endpoints count as roots iff `|h| <= tol` there; interior grid points
/// with `|h| <= tol` are bisected if their neighbours differ in sign and
/// otherwise refined by minimizing `|h|`, counting only if the minimum is
/// at most `tol`. Roots within [`ROOT_MERGE_TOL`] are merged, keeping the
/// one with the smallest `|h|`.
pub fn root_scan<F: FnMut(f64) -> f64>(mut h: F, options: RootScanOptions) -> Result<RootSet> {
    let n = options.grid_points;
    if n < 1001 {
        return Err(Error::InvalidOption {
            name: "grid_points",
            reason: "must be at least 1001",
        });
    }
    if options.tol.is_nan() || options.tol < 0.0 {
        return Err(Error::InvalidOption {
            name: "tol",
            reason: "must be nonnegative",
        });
    }
    let step = 1.0 / (n - 1) as f64;
    let grid = |i: usize| if i == n - 1 { 1.0 } else { i as f64 * step };

    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.push(eval(&mut h, grid(i))?);
    }

    let mut found: Vec<Candidate> = Vec::new();
    let mut push = |h: &mut F, x: f64, bracket: Bracket| -> Result<()> {
        let abs_h = eval(h, x)?.abs();
        found.push(Candidate { x, abs_h, bracket });
        Ok(())
    };

    for i in 0..n - 1 {
        let (f0, f1) = (values[i], values[i + 1]);
        if (f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0) {
            let (lo, hi) = (grid(i), grid(i + 1));
            let x = bisect(&mut h, lo, hi, f0)?;
            push(
                &mut h,
                x,
                Bracket {
                    lo,
                    hi,
                    kind: BracketKind::SignChange,
                },
            )?;
        }
    }
    for (i, edge) in [(0usize, 0.0f64), (n - 1, 1.0)] {
        if values[i].abs() <= options.tol {
            push(
                &mut h,
                edge,
                Bracket {
                    lo: edge,
                    hi: edge,
                    kind: BracketKind::Boundary,
                },
            )?;
        }
    }
    for i in 1..n - 1 {
        if values[i].abs() > options.tol {
            continue;
        }
        let (lo, hi) = (grid(i - 1), grid(i + 1));
        let (fl, fr) = (values[i - 1], values[i + 1]);
        if (fl < 0.0 && fr > 0.0) || (fl > 0.0 && fr < 0.0) {
            let x = bisect(&mut h, lo, hi, fl)?;
            push(
                &mut h,
                x,
                Bracket {
                    lo,
                    hi,
                    kind: BracketKind::SignChange,
                },
            )?;
        } else {
            let (x, fx) = minimize_abs(&mut h, lo, hi)?;
            if fx <= options.tol {
                push(
                    &mut h,
                    x,
                    Bracket {
                        lo,
                        hi,
                        kind: BracketKind::Tangential,
                    },
                )?;
            }
        }
    }

    found.sort_by(|p, q| p.x.total_cmp(&q.x));
    let mut out = RootSet::default();
    let mut best: Option<Candidate> = None;
    for cand in found {
        match best.take() {
            Some(prev) if cand.x - prev.x <= ROOT_MERGE_TOL => {
                // boundary hits are exact; otherwise keep the smaller |h|
                let keep_prev = prev.bracket.kind == BracketKind::Boundary
                    || (cand.bracket.kind != BracketKind::Boundary && prev.abs_h <= cand.abs_h);
                best = Some(if keep_prev { prev } else { cand });
            }
            Some(prev) => {
                out.roots.push(prev.x);
                out.brackets.push(prev.bracket);
                best = Some(cand);
            }
            None => best = Some(cand),
        }
    }
    if let Some(last) = best {
        out.roots.push(last.x);
        out.brackets.push(last.bracket);
    }
    Ok(out)
}
