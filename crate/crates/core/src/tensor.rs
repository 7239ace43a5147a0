//! Transition probability tensors, the symmetric two-state family, and
//! points of the probability simplex.
//!
//! Indices are 0-based throughout the API (state `0` is the first state);
//! text output in the companion crate shifts them to 1-based.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numeric::powi;

/// Column sums may deviate from one by at most this much.
pub const STOCHASTIC_TOL: f64 = 1e-12;
/// Entries at or below this are zero for the reducibility test.
pub const ZERO_TOL: f64 = 1e-15;
/// Tolerance of the symmetry test.
pub const SYMMETRY_TOL: f64 = 1e-15;
/// Input vectors of [`TransitionModel::contract`] must be this close to the
/// simplex.
pub const SIMPLEX_INPUT_TOL: f64 = 1e-9;
/// Largest order that [`SymmetricFamily2::materialize`] will build.
pub const MAX_MATERIALIZE_ORDER: usize = 30;

/// Anything that exposes the entries of an order-`m` dimension-`n`
/// transition probability tensor.
///
/// The algorithms that only read entries (`contract`, symmetry and
/// reducibility tests, the lifted chain, the sampler) are written against
/// this trait so that [`SymmetricFamily2`] never has to be materialized.
pub trait TransitionModel {
    fn order(&self) -> usize;
    fn dim(&self) -> usize;

    /// Entry `p[i1, i2, …, im]`; `index.len() == order()`, 0-based.
    fn entry(&self, index: &[usize]) -> f64;

    /// Multilinear contraction over the last `m − 1` indices:
    /// `out[i] = Σ p[i, i2, …, im] v[i2] ⋯ v[im]`.
    fn contract(&self, v: &[f64]) -> Result<Vec<f64>>;

    /// Max-norm of `contract(v) − v`.
    fn residual(&self, v: &[f64]) -> Result<f64> {
        let out = self.contract(v)?;
        Ok(out
            .iter()
            .zip(v)
            .map(|(o, x)| (o - x).abs())
            .fold(0.0, f64::max))
    }

    /// True iff every entry equals the entry at its sorted index tuple.
    fn is_symmetric(&self) -> bool {
        let (m, n) = (self.order(), self.dim());
        let mut idx = vec![0usize; m];
        let mut sorted = vec![0usize; m];
        loop {
            sorted.copy_from_slice(&idx);
            sorted.sort_unstable();
            if (self.entry(&idx) - self.entry(&sorted)).abs() > SYMMETRY_TOL {
                return false;
            }
            if !advance(&mut idx, n) {
                return true;
            }
        }
    }

    /// First nonempty proper subset `I` (lexicographic over sorted member
    /// lists) with `p[i1, i2, …, im] = 0` whenever `i1 ∈ I` and no other
    /// index lies in `I`. `None` means the tensor is irreducible.
    fn is_reducible(&self) -> Option<Vec<usize>> {
        let (m, n) = (self.order(), self.dim());
        let mut subsets: Vec<Vec<usize>> = (1u64..(1u64 << n) - 1)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        subsets.sort();
        let mut idx = vec![0usize; m];
        'subset: for subset in subsets {
            let outside: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
            for &first in &subset {
                // odometer over the outside states for the trailing indices
                let mut pos = vec![0usize; m - 1];
                loop {
                    idx[0] = first;
                    for (slot, &p) in idx[1..].iter_mut().zip(&pos) {
                        *slot = outside[p];
                    }
                    if self.entry(&idx) > ZERO_TOL {
                        continue 'subset;
                    }
                    if !advance(&mut pos, outside.len()) {
                        break;
                    }
                }
            }
            return Some(subset);
        }
        None
    }
}

/// Advances `idx` as a base-`n` odometer with the last position fastest.
/// Returns false after wrapping past the final tuple.
pub(crate) fn advance(idx: &mut [usize], n: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

fn check_simplex(v: &[f64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: v.len(),
        });
    }
    let sum: f64 = v.iter().sum();
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    if !sum.is_finite() || (sum - 1.0).abs() > SIMPLEX_INPUT_TOL || min < -SIMPLEX_INPUT_TOL {
        return Err(Error::OffSimplex { sum, min });
    }
    Ok(())
}

fn checked_len(order: usize, dim: usize) -> Option<usize> {
    let mut len = 1usize;
    for _ in 0..order {
        len = len.checked_mul(dim)?;
    }
    Some(len)
}

/// Dense order-`m` dimension-`n` tensor; entry `(i1, …, im)` is stored at
/// offset `Σ i_j n^(m−j)` (last index fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionTensor {
    order: usize,
    dim: usize,
    entries: Vec<f64>,
}

/// A column `(i2, …, im)` whose first-index sum is not one.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnViolation {
    pub column: Vec<usize>,
    pub sum: f64,
}

/// An entry outside `[0, 1]` (or not finite).
#[derive(Debug, Clone, PartialEq)]
pub struct RangeViolation {
    pub index: Vec<usize>,
    pub value: f64,
}

/// Result of [`TransitionTensor::validate`]; empty when the tensor is a
/// transition probability tensor.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub columns: Vec<ColumnViolation>,
    pub ranges: Vec<RangeViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.columns.is_empty() && self.ranges.is_empty()
    }
}

impl TransitionTensor {
    /// Wraps `entries` after structural checks only (order, dimension,
    /// entry count); use [`validate`](Self::validate) for the probability
    /// constraints.
    pub fn new(order: usize, dim: usize, entries: Vec<f64>) -> Result<Self> {
        if order < 3 {
            return Err(Error::OrderTooSmall(order));
        }
        if dim < 2 {
            return Err(Error::DimTooSmall(dim));
        }
        let expected = checked_len(order, dim).ok_or(Error::SizeLimit {
            what: "tensor",
            size: usize::MAX,
            limit: usize::MAX,
        })?;
        if entries.len() != expected {
            return Err(Error::EntryCount {
                order,
                dim,
                expected,
                got: entries.len(),
            });
        }
        Ok(Self {
            order,
            dim,
            entries,
        })
    }

    /// Builds a tensor by evaluating `f` at every index tuple in storage
    /// order.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> f64) -> Result<Self> {
        if order < 3 {
            return Err(Error::OrderTooSmall(order));
        }
        if dim < 2 {
            return Err(Error::DimTooSmall(dim));
        }
        let len = checked_len(order, dim).ok_or(Error::SizeLimit {
            what: "tensor",
            size: usize::MAX,
            limit: usize::MAX,
        })?;
        let mut entries = Vec::with_capacity(len);
        let mut idx = vec![0usize; order];
        loop {
            entries.push(f(&idx));
            if !advance(&mut idx, dim) {
                break;
            }
        }
        Self::new(order, dim, entries)
    }

    /// Every entry `1/n`.
    pub fn uniform(order: usize, dim: usize) -> Result<Self> {
        let p = 1.0 / dim as f64;
        Self::from_fn(order, dim, |_| p)
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn offset(&self, index: &[usize]) -> Result<usize> {
        if index.len() != self.order || index.iter().any(|&i| i >= self.dim) {
            return Err(Error::BadIndex(index.to_vec()));
        }
        Ok(index.iter().fold(0, |acc, &i| acc * self.dim + i))
    }

    pub fn get(&self, index: &[usize]) -> Result<f64> {
        self.offset(index).map(|o| self.entries[o])
    }

    /// Lists every column whose sum over the first index misses one by more
    /// than [`STOCHASTIC_TOL`], and every entry outside `[0, 1]`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let stride = self.entries.len() / n;
        let mut report = ValidationReport::default();

        let mut idx = vec![0usize; self.order];
        for &value in &self.entries {
            if !(0.0..=1.0).contains(&value) {
                report.ranges.push(RangeViolation {
                    index: idx.clone(),
                    value,
                });
            }
            advance(&mut idx, n);
        }

        let mut column = vec![0usize; self.order - 1];
        for col in 0..stride {
            let sum: f64 = (0..n).map(|i1| self.entries[i1 * stride + col]).sum();
            if !sum.is_finite() || (sum - 1.0).abs() > STOCHASTIC_TOL {
                report.columns.push(ColumnViolation {
                    column: column.clone(),
                    sum,
                });
            }
            advance(&mut column, n);
        }
        report
    }
}

impl TransitionModel for TransitionTensor {
    fn order(&self) -> usize {
        self.order
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn entry(&self, index: &[usize]) -> f64 {
        self.entries[index.iter().fold(0, |acc, &i| acc * self.dim + i)]
    }

    fn contract(&self, v: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim;
        check_simplex(v, n)?;
        // Contract the fastest (last) index repeatedly; the product weight
        // is symmetric in the trailing indices so the order is immaterial.
        let mut buf: Vec<f64> = self
            .entries
            .chunks_exact(n)
            .map(|chunk| chunk.iter().zip(v).map(|(p, x)| p * x).sum())
            .collect();
        while buf.len() > n {
            buf = buf
                .chunks_exact(n)
                .map(|chunk| chunk.iter().zip(v).map(|(p, x)| p * x).sum())
                .collect();
        }
        Ok(buf)
    }
}

/// A symmetric member of the order-`m` dimension-2 transition tensors.
///
/// Symmetry makes an entry depend only on how many of its indices equal
/// the second state, and column stochasticity then forces the entries to
/// alternate: `a` for an even count, `b = 1 − a` for an odd count. The
/// whole tensor is therefore determined by `(m, a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricFamily2 {
    order: usize,
    a: f64,
}

impl SymmetricFamily2 {
    pub fn new(order: usize, a: f64) -> Result<Self> {
        if order < 3 {
            return Err(Error::OrderTooSmall(order));
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::ParameterOutOfRange(a));
        }
        Ok(Self { order, a })
    }

    /// The tensor with `p[1,…,1] = 1`, `p[2,1,…,1] = 0`.
    pub fn special_p1(order: usize) -> Result<Self> {
        Self::new(order, 1.0)
    }

    /// The tensor with `p[1,…,1] = 0`, `p[2,1,…,1] = 1`.
    pub fn special_p2(order: usize) -> Result<Self> {
        Self::new(order, 0.0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `p[1, 1, …, 1]`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// `p[2, 1, …, 1]`, always `1 − a`.
    pub fn b(&self) -> f64 {
        1.0 - self.a
    }

    /// `a − b`.
    pub fn c(&self) -> f64 {
        self.a - self.b()
    }

    pub fn is_p1(&self) -> bool {
        self.a == 1.0
    }

    pub fn is_p2(&self) -> bool {
        self.a == 0.0
    }

    pub fn is_even(&self) -> bool {
        self.order.is_multiple_of(2)
    }

    /// Entry value for an index tuple containing `twos` copies of the
    /// second state.
    pub fn entry_for_count(&self, twos: usize) -> f64 {
        if twos.is_multiple_of(2) {
            self.a
        } else {
            self.b()
        }
    }

    /// Dense form; refused above [`MAX_MATERIALIZE_ORDER`].
    pub fn materialize(&self) -> Result<TransitionTensor> {
        if self.order > MAX_MATERIALIZE_ORDER {
            return Err(Error::OrderLimit {
                order: self.order,
                limit: MAX_MATERIALIZE_ORDER,
                what: "materialization",
            });
        }
        TransitionTensor::from_fn(self.order, 2, |idx| self.entry(idx))
    }

    /// Recognizes a dense dimension-2 tensor as a family member: it must be
    /// symmetric and follow the alternating entry pattern (within the
    /// stochasticity tolerance). The parameter is read from `p[1, …, 1]`.
    pub fn recognize(tensor: &TransitionTensor) -> Option<Self> {
        if tensor.dim() != 2 || !tensor.validate().is_valid() || !tensor.is_symmetric() {
            return None;
        }
        let family = Self::new(tensor.order(), tensor.entries()[0]).ok()?;
        let mut idx = vec![0usize; tensor.order()];
        for &value in tensor.entries() {
            let twos = idx.iter().filter(|&&i| i == 1).count();
            if (value - family.entry_for_count(twos)).abs() > STOCHASTIC_TOL {
                return None;
            }
            advance(&mut idx, 2);
        }
        Some(family)
    }

    fn contract_pair(&self, v1: f64, v2: f64) -> (f64, f64) {
        // Σ_k C(m-1,k) v1^(m-1-k) v2^k split by parity of k:
        // even part (s^(m-1) + d^(m-1))/2, odd part (s^(m-1) - d^(m-1))/2.
        let e = (self.order - 1) as u32;
        let s = powi(v1 + v2, e);
        let d = powi(v1 - v2, e);
        let even = 0.5 * (s + d);
        let odd = 0.5 * (s - d);
        let (a, b) = (self.a, self.b());
        (a * even + b * odd, b * even + a * odd)
    }
}

impl TransitionModel for SymmetricFamily2 {
    fn order(&self) -> usize {
        self.order
    }

    fn dim(&self) -> usize {
        2
    }

    fn entry(&self, index: &[usize]) -> f64 {
        self.entry_for_count(index.iter().filter(|&&i| i == 1).count())
    }

    fn contract(&self, v: &[f64]) -> Result<Vec<f64>> {
        check_simplex(v, 2)?;
        let (f1, f2) = self.contract_pair(v[0], v[1]);
        Ok(vec![f1, f2])
    }
}

/// A probability vector together with the max-norm residual of the
/// stationary equation against some model.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    pub coords: Vec<f64>,
    pub residual: f64,
}

impl SimplexPoint {
    /// Clamps tiny negative coordinates to zero and records the residual
    /// against `model`.
    pub fn evaluate<M: TransitionModel + ?Sized>(model: &M, coords: &[f64]) -> Result<Self> {
        let coords: Vec<f64> = coords
            .iter()
            .map(|&c| if c < 0.0 { 0.0 } else { c })
            .collect();
        let residual = model.residual(&coords)?;
        Ok(Self { coords, residual })
    }

    /// Point `(x, 1 − x)` of the two-state simplex.
    pub fn pair<M: TransitionModel + ?Sized>(model: &M, x: f64) -> Result<Self> {
        Self::evaluate(model, &[x, 1.0 - x])
    }

    /// First coordinate.
    pub fn x(&self) -> f64 {
        self.coords[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tensor3(entries: [f64; 8]) -> TransitionTensor {
        TransitionTensor::new(3, 2, entries.to_vec()).unwrap()
    }

    #[test]
    fn structural_errors_are_distinct() {
        assert_eq!(
            TransitionTensor::new(3, 2, vec![0.5; 7]),
            Err(Error::EntryCount {
                order: 3,
                dim: 2,
                expected: 8,
                got: 7
            })
        );
        assert_eq!(
            TransitionTensor::new(2, 2, vec![0.5; 4]),
            Err(Error::OrderTooSmall(2))
        );
        assert_eq!(
            TransitionTensor::new(3, 1, vec![1.0]),
            Err(Error::DimTooSmall(1))
        );
    }

    #[test]
    fn validate_flags_bad_column() {
        // p111 = 0.6, p211 = 0.6: column (1,1) sums to 1.2
        let t = tensor3([0.6, 0.5, 0.5, 0.5, 0.6, 0.5, 0.5, 0.5]);
        let report = t.validate();
        assert!(report.ranges.is_empty());
        assert_eq!(report.columns.len(), 1);
        assert_eq!(report.columns[0].column, vec![0, 0]);
        assert!((report.columns[0].sum - 1.2).abs() < 1e-15);
    }

    #[test]
    fn validate_flags_out_of_range_entries() {
        let t = tensor3([1.5, 0.5, 0.5, 0.5, -0.5, 0.5, 0.5, 0.5]);
        let report = t.validate();
        assert_eq!(report.ranges.len(), 2);
        assert_eq!(report.ranges[0].index, vec![0, 0, 0]);
        assert_eq!(report.ranges[1].index, vec![1, 0, 0]);
        // column (1,1) still sums to one
        assert!(report.columns.is_empty());
    }

    #[test]
    fn uniform_and_family_validate_clean() {
        for m in 3..7 {
            assert!(TransitionTensor::uniform(m, 2)
                .unwrap()
                .validate()
                .is_valid());
        }
        let t = SymmetricFamily2::new(4, 0.8)
            .unwrap()
            .materialize()
            .unwrap();
        assert!(t.validate().is_valid());
    }

    #[test]
    fn symmetry() {
        assert!(SymmetricFamily2::new(4, 0.3)
            .unwrap()
            .materialize()
            .unwrap()
            .is_symmetric());
        assert!(TransitionTensor::uniform(3, 2).unwrap().is_symmetric());
        // p112 = 0.2 vs p121 = 0.5; columns stay stochastic
        let t = tensor3([0.5, 0.2, 0.5, 0.5, 0.5, 0.8, 0.5, 0.5]);
        assert!(t.validate().is_valid());
        assert!(!t.is_symmetric());
    }

    #[test]
    fn reducibility_of_special_tensors() {
        // P1, m = 3: p211 = b = 0, so {2} is a witness
        let p1 = SymmetricFamily2::special_p1(3).unwrap();
        assert_eq!(p1.materialize().unwrap().is_reducible(), Some(vec![1]));
        assert_eq!(p1.is_reducible(), Some(vec![1]));
        // half-half family: all entries positive
        let half = SymmetricFamily2::new(4, 0.5).unwrap();
        assert_eq!(half.materialize().unwrap().is_reducible(), None);
        // P2 at even order: p12..2 = p21..1 = 1 blocks both subsets
        let p2 = SymmetricFamily2::special_p2(4).unwrap();
        assert_eq!(p2.materialize().unwrap().is_reducible(), None);
        // P2 at odd order: p12..2 has an even count of twos, so it is a = 0
        let p2 = SymmetricFamily2::special_p2(5).unwrap();
        assert_eq!(p2.materialize().unwrap().is_reducible(), Some(vec![0]));
    }

    #[test]
    fn reducibility_is_lexicographic_for_larger_dim() {
        // n = 3, m = 3: history (3, 3) always emits state 3, so {1, 2} is a
        // witness; {1} is not, because p[1, 2, 2] > 0.
        let t = TransitionTensor::from_fn(3, 3, |idx| {
            if idx[1] == 2 && idx[2] == 2 {
                if idx[0] == 2 {
                    1.0
                } else {
                    0.0
                }
            } else {
                1.0 / 3.0
            }
        })
        .unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.is_reducible(), Some(vec![0, 1]));
    }

    #[test]
    fn contract_examples() {
        let t = SymmetricFamily2::new(4, 0.8)
            .unwrap()
            .materialize()
            .unwrap();
        let out = t.contract(&[1.0, 0.0]).unwrap();
        assert!((out[0] - 0.8).abs() < 1e-15 && (out[1] - 0.2).abs() < 1e-15);
        for m in 3..9 {
            for k in 0..=10 {
                let fam = SymmetricFamily2::new(m, k as f64 / 10.0).unwrap();
                let out = fam.materialize().unwrap().contract(&[0.5, 0.5]).unwrap();
                assert!((out[0] - 0.5).abs() <= 1e-15 && (out[1] - 0.5).abs() <= 1e-15);
            }
        }
        let u = TransitionTensor::uniform(3, 2).unwrap();
        assert_eq!(u.contract(&[0.3, 0.7]).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn contract_rejects_off_simplex() {
        let u = TransitionTensor::uniform(3, 2).unwrap();
        assert!(matches!(
            u.contract(&[0.6, 0.6]),
            Err(Error::OffSimplex { .. })
        ));
        assert!(matches!(
            u.contract(&[1.5, -0.5]),
            Err(Error::OffSimplex { .. })
        ));
        assert!(matches!(
            u.contract(&[1.0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn residual_examples() {
        let fam = SymmetricFamily2::new(5, 0.7).unwrap();
        assert!(fam.residual(&[0.5, 0.5]).unwrap() <= 1e-15);
        assert!(fam.materialize().unwrap().residual(&[0.5, 0.5]).unwrap() <= 1e-15);
        let p1 = SymmetricFamily2::special_p1(3).unwrap();
        assert!(p1.materialize().unwrap().residual(&[1.0, 0.0]).unwrap() <= 1e-15);
        let u = TransitionTensor::uniform(3, 2).unwrap();
        assert_eq!(u.residual(&[1.0, 0.0]).unwrap(), 0.5);
    }

    #[test]
    fn family_entry_pattern() {
        let t = SymmetricFamily2::new(4, 1.0)
            .unwrap()
            .materialize()
            .unwrap();
        assert_eq!(t.get(&[0, 0, 0, 0]).unwrap(), 1.0);
        assert_eq!(t.get(&[1, 0, 0, 0]).unwrap(), 0.0);
        assert_eq!(t.get(&[0, 0, 1, 1]).unwrap(), 1.0);
        assert_eq!(t.get(&[1, 0, 1, 1]).unwrap(), 0.0);

        let t = SymmetricFamily2::new(3, 0.5)
            .unwrap()
            .materialize()
            .unwrap();
        assert!(t.entries().iter().all(|&p| p == 0.5));

        let t = SymmetricFamily2::new(5, 0.25)
            .unwrap()
            .materialize()
            .unwrap();
        assert_eq!(t.get(&[0, 0, 1, 1, 0]).unwrap(), 0.25);
        assert_eq!(t.get(&[1, 0, 1, 1, 0]).unwrap(), 0.75);
    }

    #[test]
    fn family_pattern_is_forced_by_symmetry_and_stochasticity() {
        // Independent route: a symmetric tensor is a function of the count
        // of twos, q(k); stochasticity gives q(k) + q(k+1) = 1. Solve the
        // chain from q(0) = a and compare with the materialized entries.
        for m in 3..8 {
            let a = 0.25;
            let mut q = vec![a];
            for k in 0..m {
                q.push(1.0 - q[k]);
            }
            let t = SymmetricFamily2::new(m, a).unwrap().materialize().unwrap();
            let mut idx = vec![0usize; m];
            for &p in t.entries() {
                let twos = idx.iter().filter(|&&i| i == 1).count();
                assert_eq!(p, q[twos]);
                advance(&mut idx, 2);
            }
        }
    }

    #[test]
    fn family_construction_errors() {
        assert_eq!(SymmetricFamily2::new(2, 0.5), Err(Error::OrderTooSmall(2)));
        assert_eq!(
            SymmetricFamily2::new(3, 1.5),
            Err(Error::ParameterOutOfRange(1.5))
        );
        assert!(SymmetricFamily2::new(3, f64::NAN).is_err());
        assert!(matches!(
            SymmetricFamily2::new(31, 0.5).unwrap().materialize(),
            Err(Error::OrderLimit { .. })
        ));
        let p1 = SymmetricFamily2::special_p1(6).unwrap();
        assert!(p1.is_p1() && p1.b() == 0.0 && p1.c() == 1.0);
        let p2 = SymmetricFamily2::special_p2(6).unwrap();
        assert!(p2.is_p2() && p2.b() == 1.0 && p2.c() == -1.0);
    }

    #[test]
    fn recognize_round_trips_family() {
        let fam = SymmetricFamily2::new(5, 0.35).unwrap();
        assert_eq!(
            SymmetricFamily2::recognize(&fam.materialize().unwrap()),
            Some(fam)
        );
        let asym = tensor3([0.5, 0.2, 0.5, 0.5, 0.5, 0.8, 0.5, 0.5]);
        assert_eq!(SymmetricFamily2::recognize(&asym), None);
        assert_eq!(
            SymmetricFamily2::recognize(&TransitionTensor::uniform(3, 3).unwrap()),
            None
        );
    }
}
