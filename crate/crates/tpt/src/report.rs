//! Text and JSON renderings of core results.
//!
//! JSON output is a single compact object followed by a newline. Every
//! float is written with 17 significant digits in scientific notation, so
//! the same inputs always produce the same bytes and every value parses
//! back exactly. State indices are 1-based in both renderings.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use tpt_core::analytic::ClassificationReport;
use tpt_core::simulator::{ComparisonReport, Empirical};
use tpt_core::solvers::{Ergodicity, IterationResult, RootSet};
use tpt_core::{SimplexPoint, ValidationReport};

/// `serde_json` formatter printing floats as `{:.16e}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SeventeenDigits;

impl serde_json::ser::Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        write!(writer, "{:.16e}", f64::from(value))
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SeventeenDigits);
    value
        .serialize(&mut ser)
        .expect("DTOs serialize without error");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

fn one_based(states: &[usize]) -> Vec<usize> {
    states.iter().map(|s| s + 1).collect()
}

fn pair(p: &SimplexPoint) -> [f64; 2] {
    [p.coords[0], p.coords[1]]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationDto {
    pub order: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub case: &'static str,
    pub critical_points: Vec<f64>,
    pub stationary_set: Vec<[f64; 2]>,
    pub stationary_residuals: Vec<f64>,
    pub irreducible: bool,
    pub reducibility_witness: Option<Vec<usize>>,
    pub contraction_bound: f64,
    pub literal_set: Vec<[f64; 2]>,
    pub printed_constant_offset: f64,
    pub discrepancy_flags: Vec<String>,
}

impl From<&ClassificationReport> for ClassificationDto {
    fn from(r: &ClassificationReport) -> Self {
        Self {
            order: r.order,
            a: r.a,
            b: r.b,
            c: r.c,
            case: r.case.as_str(),
            critical_points: r.critical_points.clone(),
            stationary_set: r.stationary_set.iter().map(pair).collect(),
            stationary_residuals: r.stationary_set.iter().map(|p| p.residual).collect(),
            irreducible: r.irreducible,
            reducibility_witness: r.reducibility_witness.as_deref().map(one_based),
            contraction_bound: r.contraction_bound,
            literal_set: r.literal_set.clone(),
            printed_constant_offset: r.printed_constant_offset,
            discrepancy_flags: r.discrepancy_flags.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationDto {
    pub start: Vec<f64>,
    pub iterate: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
    pub rate_estimate: f64,
}

impl IterationDto {
    pub fn new(start: &[f64], r: &IterationResult) -> Self {
        Self {
            start: start.to_vec(),
            iterate: r.iterate.coords.clone(),
            iterations: r.iterations,
            converged: r.converged,
            residual: r.iterate.residual,
            rate_estimate: r.rate_estimate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftedDto {
    pub marginal: Vec<f64>,
    pub ergodicity: &'static str,
    pub iterations: usize,
    pub converged: bool,
    pub averaged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalDto {
    pub counts: Vec<u64>,
    pub total: u64,
    pub frequencies: Vec<f64>,
}

impl From<&Empirical> for EmpiricalDto {
    fn from(e: &Empirical) -> Self {
        Self {
            counts: e.counts.clone(),
            total: e.total,
            frequencies: e.frequencies(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeviationDto {
    pub left: &'static str,
    pub right: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonDto {
    pub steps: usize,
    pub seed: u64,
    pub burn_in: usize,
    pub analytic: Vec<[f64; 2]>,
    pub fixed_point: IterationDto,
    pub lifted: Option<LiftedDto>,
    pub empirical: EmpiricalDto,
    pub deviations: Vec<DeviationDto>,
}

pub fn ergodicity_str(e: Ergodicity) -> &'static str {
    match e {
        Ergodicity::SingleAperiodicClass => "single_aperiodic_class",
        Ergodicity::Unknown => "unknown",
    }
}

impl ComparisonDto {
    pub fn new(r: &ComparisonReport, steps: usize, seed: u64, x0: &[f64]) -> Self {
        Self {
            steps,
            seed,
            burn_in: r.burn_in,
            analytic: r.analytic.iter().map(pair).collect(),
            fixed_point: IterationDto::new(x0, &r.fixed_point),
            lifted: r.lifted.as_ref().map(|l| LiftedDto {
                marginal: l.marginal.clone(),
                ergodicity: ergodicity_str(l.ergodicity),
                iterations: l.iterations,
                converged: l.converged,
                averaged: l.averaged,
            }),
            empirical: (&r.empirical).into(),
            deviations: r
                .deviations
                .iter()
                .map(|d| DeviationDto {
                    left: d.left,
                    right: d.right,
                    value: d.value,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDto {
    pub classification: ClassificationDto,
    pub comparison: ComparisonDto,
}

/// Classification of a tensor outside the symmetric two-state family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralDto {
    pub order: usize,
    pub dim: usize,
    pub symmetric: bool,
    pub irreducible: bool,
    pub reducibility_witness: Option<Vec<usize>>,
    pub notice: &'static str,
    pub fixed_point: IterationDto,
}

pub const NON_UNIQUENESS_NOTICE: &str = "not a symmetric order-m dimension-2 tensor; \
     the fixed point below is one stationary vector, uniqueness is not guaranteed";

fn fmt_pairs(points: &[[f64; 2]]) -> String {
    if points.is_empty() {
        return "none".to_string();
    }
    let parts: Vec<String> = points
        .iter()
        .map(|p| format!("({}, {})", p[0], p[1]))
        .collect();
    parts.join(" ")
}

fn fmt_list<T: std::fmt::Display>(values: &[T]) -> String {
    if values.is_empty() {
        return "none".to_string();
    }
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    parts.join(" ")
}

fn fmt_vec(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let d = ClassificationDto::from(r);
    let mut s = String::new();
    let _ = writeln!(s, "family            m={} a={} b={}", d.order, d.a, d.b);
    let _ = writeln!(s, "case              {}", d.case);
    let _ = writeln!(s, "contraction bound {}", d.contraction_bound);
    let _ = writeln!(s, "critical points   {}", fmt_list(&d.critical_points));
    let _ = writeln!(s, "stationary set    {}", fmt_pairs(&d.stationary_set));
    let _ = writeln!(s, "residuals         {}", fmt_list(&d.stationary_residuals));
    match &d.reducibility_witness {
        None => {
            let _ = writeln!(s, "irreducible       yes");
        }
        Some(w) => {
            let _ = writeln!(
                s,
                "irreducible       no (witness {{{}}})",
                fmt_list(w).replace(' ', ", ")
            );
        }
    }
    let _ = writeln!(s, "literal set       {}", fmt_pairs(&d.literal_set));
    let _ = writeln!(s, "printed constant  offset {}", d.printed_constant_offset);
    if d.discrepancy_flags.is_empty() {
        let _ = writeln!(s, "flags             none");
    } else {
        for flag in &d.discrepancy_flags {
            let _ = writeln!(s, "flag              {flag}");
        }
    }
    s
}

pub fn iteration_text(d: &IterationDto) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "start             {}", fmt_vec(&d.start));
    let _ = writeln!(s, "iterate           {}", fmt_vec(&d.iterate));
    let _ = writeln!(s, "iterations        {}", d.iterations);
    let _ = writeln!(
        s,
        "converged         {}",
        if d.converged { "yes" } else { "no" }
    );
    let _ = writeln!(s, "residual          {}", d.residual);
    let _ = writeln!(s, "rate estimate     {}", d.rate_estimate);
    s
}

pub fn general_text(d: &GeneralDto) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "notice: {}", d.notice);
    let _ = writeln!(s, "tensor            order {} dim {}", d.order, d.dim);
    let _ = writeln!(
        s,
        "symmetric         {}",
        if d.symmetric { "yes" } else { "no" }
    );
    match &d.reducibility_witness {
        None => {
            let _ = writeln!(s, "irreducible       yes");
        }
        Some(w) => {
            let _ = writeln!(
                s,
                "irreducible       no (witness {{{}}})",
                fmt_list(w).replace(' ', ", ")
            );
        }
    }
    s.push_str(&iteration_text(&d.fixed_point));
    s
}

pub fn comparison_text(d: &ComparisonDto) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "steps             {} (seed {}, burn-in {})",
        d.steps, d.seed, d.burn_in
    );
    let _ = writeln!(s, "analytic          {}", fmt_pairs(&d.analytic));
    let fp = &d.fixed_point;
    let _ = writeln!(
        s,
        "fixed point       {} after {} iterations{}",
        fmt_vec(&fp.iterate),
        fp.iterations,
        if fp.converged { "" } else { " (not converged)" }
    );
    match &d.lifted {
        Some(l) => {
            let _ = writeln!(
                s,
                "lifted chain      {} ({}{})",
                fmt_vec(&l.marginal),
                l.ergodicity,
                if l.converged { "" } else { ", not converged" }
            );
        }
        None => {
            let _ = writeln!(s, "lifted chain      skipped (too many window states)");
        }
    }
    let _ = writeln!(
        s,
        "empirical         {} from counts {}",
        fmt_vec(&d.empirical.frequencies),
        fmt_list(&d.empirical.counts)
    );
    for dev in &d.deviations {
        let _ = writeln!(
            s,
            "deviation         {} vs {}: {}",
            dev.left, dev.right, dev.value
        );
    }
    s
}

pub fn validation_text(r: &ValidationReport) -> String {
    if r.is_valid() {
        return "valid transition probability tensor\n".to_string();
    }
    let mut s = String::new();
    for v in &r.ranges {
        let _ = writeln!(
            s,
            "entry {:?} = {} is outside [0, 1]",
            one_based(&v.index),
            v.value
        );
    }
    for v in &r.columns {
        let col: Vec<String> = one_based(&v.column)
            .iter()
            .map(ToString::to_string)
            .collect();
        let _ = writeln!(s, "column ({}) sums to {}", col.join(","), v.sum);
    }
    let _ = writeln!(
        s,
        "{} violation(s): {} column sum(s), {} entry range(s)",
        r.columns.len() + r.ranges.len(),
        r.columns.len(),
        r.ranges.len()
    );
    s
}

pub fn roots_text(roots: &RootSet, analytic: &[SimplexPoint], grid: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scan grid         {grid} points");
    for (x, b) in roots.roots.iter().zip(&roots.brackets) {
        let _ = writeln!(
            s,
            "root              x = {x} ({:?}, bracket [{}, {}])",
            b.kind, b.lo, b.hi
        );
    }
    if roots.roots.is_empty() {
        let _ = writeln!(s, "root              none");
    }
    let xs: Vec<f64> = analytic.iter().map(SimplexPoint::x).collect();
    let _ = writeln!(s, "analytic          {}", fmt_list(&xs));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        let json = to_json(&[0.1f64, 0.5, 1.0 / 3.0]);
        assert_eq!(
            json,
            "[1.0000000000000001e-1,5.0000000000000000e-1,3.3333333333333331e-1]\n"
        );
        let back: Vec<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![0.1, 0.5, 1.0 / 3.0]);
    }

    #[test]
    fn non_finite_becomes_null() {
        assert_eq!(to_json(&[f64::NAN]), "[null]\n");
    }
}
