//! Majorization predicates on integer sequences.
//!
//! Out-of-range entries follow fixed conventions exposed through total
//! accessors: a non-increasing sequence reads `+inf` before its first entry
//! and `-inf` after its last; a non-decreasing one the other way round.

use std::fmt;

use crate::error::SequenceError;

/// An integer extended with both infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "+inf"),
        }
    }
}

/// A non-increasing integer sequence, indexed from 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSeq(Vec<i64>);

impl IntSeq {
    pub fn new(values: Vec<i64>) -> Result<Self, SequenceError> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(SequenceError::NotMonotone(values));
        }
        Ok(IntSeq(values))
    }

    pub fn empty() -> Self {
        IntSeq(Vec::new())
    }

    /// `a_i`, with `+inf` for `i < 1` and `-inf` for `i > len`.
    pub fn get(&self, i: i64) -> ExtInt {
        if i < 1 {
            ExtInt::PosInf
        } else {
            self.0.get(i as usize - 1).map_or(ExtInt::NegInf, |&v| ExtInt::Finite(v))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of the first `k` entries (clamped to the length).
    pub fn prefix(&self, k: usize) -> i64 {
        self.0.iter().take(k).sum()
    }

    /// Number of strictly positive entries.
    pub fn positive_count(&self) -> usize {
        self.0.iter().take_while(|&&v| v > 0).count()
    }
}

/// A non-decreasing integer sequence: `-inf` before the first entry and
/// `+inf` after the last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderSeq(Vec<i64>);

impl OrderSeq {
    pub fn new(values: Vec<i64>) -> Result<Self, SequenceError> {
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(SequenceError::NotMonotone(values));
        }
        Ok(OrderSeq(values))
    }

    pub fn get(&self, i: i64) -> ExtInt {
        if i < 1 {
            ExtInt::NegInf
        } else {
            self.0.get(i as usize - 1).map_or(ExtInt::PosInf, |&v| ExtInt::Finite(v))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// `c ≺ a`: every proper prefix sum of `c` is at most that of `a`, and the
/// totals agree.
pub fn majorize(c: &[i64], a: &[i64]) -> Result<bool, SequenceError> {
    if c.len() != a.len() {
        return Err(SequenceError::LengthMismatch(format!("majorization of length {} by length {}", c.len(), a.len())));
    }
    let mut sc = 0;
    let mut sa = 0;
    for (k, (ci, ai)) in c.iter().zip(a).enumerate() {
        sc += ci;
        sa += ai;
        if k + 1 < c.len() && sc > sa {
            return Ok(false);
        }
    }
    Ok(sc == sa)
}

/// `h_j = min{ i : d_{i-j+1} < c_i }` for `1 <= j <= len(c) - len(d)`.
pub fn h_index(c: &IntSeq, d: &IntSeq, j: usize) -> Result<usize, SequenceError> {
    let x = c
        .len()
        .checked_sub(d.len())
        .ok_or_else(|| SequenceError::LengthMismatch(format!("c has {} entries, d has {}", c.len(), d.len())))?;
    if j < 1 || j > x {
        return Err(SequenceError::IndexOutOfRange { index: j as i64, max: x as i64 });
    }
    let found = (1..=c.len() as i64).find(|&i| d.get(i - j as i64 + 1) < c.get(i));
    Ok(found.expect("d reads -inf past its end, so some i <= len(c) qualifies") as usize)
}

/// Condition-by-condition evaluation of `c ≺′ (d, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMajorization {
    /// `d_i >= c_{i+x}` for every `i`.
    pub dominance: bool,
    /// The `h_j` prefix condition for `j = 1..=x`.
    pub prefix: Vec<bool>,
    pub h: Vec<usize>,
    /// `sum c = sum d + sum a`.
    pub total: bool,
}

impl GenMajorization {
    pub fn holds(&self) -> bool {
        self.dominance && self.total && self.prefix.iter().all(|&b| b)
    }
}

/// Evaluates `c ≺′ (d, a)` where `len(c) = len(d) + len(a)`.
pub fn gen_majorize_report(c: &IntSeq, d: &IntSeq, a: &[i64]) -> Result<GenMajorization, SequenceError> {
    if c.len() != d.len() + a.len() {
        return Err(SequenceError::LengthMismatch(format!(
            "len(c) = {} but len(d) + len(a) = {} + {}",
            c.len(),
            d.len(),
            a.len()
        )));
    }
    let x = a.len();
    let dominance = (0..d.len()).all(|i| d.as_slice()[i] >= c.as_slice()[i + x]);
    let mut prefix = Vec::with_capacity(x);
    let mut h = Vec::with_capacity(x);
    let mut sa = 0;
    for j in 1..=x {
        sa += a[j - 1];
        let hj = h_index(c, d, j)?;
        prefix.push(c.prefix(hj) - d.prefix(hj - j) <= sa);
        h.push(hj);
    }
    let total = c.sum() == d.sum() + a.iter().sum::<i64>();
    Ok(GenMajorization { dominance, prefix, h, total })
}

/// `c ≺′ (d, a)`.
pub fn gen_majorize(c: &IntSeq, d: &IntSeq, a: &[i64]) -> Result<bool, SequenceError> {
    gen_majorize_report(c, d, a).map(|r| r.holds())
}

/// `min{ j >= 1 : c_1 + ... + c_j > a_1 + ... + a_j }` over `1..=len(a)`,
/// or `len(a) + 1` when no prefix of `c` exceeds that of `a`.
pub fn ell_index(c: &[i64], a: &[i64]) -> usize {
    let mut sc = 0;
    let mut sa = 0;
    for (j, ai) in a.iter().enumerate() {
        sc += c.get(j).copied().unwrap_or(0);
        sa += ai;
        if sc > sa {
            return j + 1;
        }
    }
    a.len() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> IntSeq {
        IntSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn accessors_follow_conventions() {
        let c = seq(&[3, 1]);
        assert_eq!(c.get(0), ExtInt::PosInf);
        assert_eq!(c.get(1), ExtInt::Finite(3));
        assert_eq!(c.get(3), ExtInt::NegInf);
        let p = OrderSeq::new(vec![-1, 2]).unwrap();
        assert_eq!(p.get(0), ExtInt::NegInf);
        assert_eq!(p.get(3), ExtInt::PosInf);
        assert!(IntSeq::new(vec![1, 2]).is_err());
        assert!(OrderSeq::new(vec![2, 1]).is_err());
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell_index(&[2, 1], &[1, 2]), 1);
        assert_eq!(ell_index(&[1, 1], &[1, 2]), 3);
    }

    #[test]
    fn ext_int_order() {
        assert!(ExtInt::NegInf < ExtInt::Finite(i64::MIN));
        assert!(ExtInt::Finite(i64::MAX) < ExtInt::PosInf);
    }
}
