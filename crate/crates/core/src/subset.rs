//! Subsets of `[d] = {1, ..., d}` stored as bitmasks.
//!
//! Element `i` (1-based) lives in bit `i - 1`. A subset `A` stands for the
//! 0/1 point `e_A`, so the same type doubles as a cube vertex.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Largest ambient dimension representable by a `u64` mask.
pub const MAX_DIM: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSubset {
    d: usize,
    bits: u64,
}

impl VertexSubset {
    pub fn new(d: usize, bits: u64) -> Result<Self, Error> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::Dimension(d));
        }
        if bits >> d != 0 {
            return Err(Error::InvalidSubset(format!(
                "mask {bits:#b} has elements outside [{d}]"
            )));
        }
        Ok(Self { d, bits })
    }

    pub(crate) fn from_bits_unchecked(d: usize, bits: u64) -> Self {
        debug_assert!(d <= MAX_DIM && bits >> d == 0);
        Self { d, bits }
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(d: usize, elements: &[usize]) -> Result<Self, Error> {
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > d {
                return Err(Error::InvalidSubset(format!("element {e} not in [{d}]")));
            }
            bits |= 1 << (e - 1);
        }
        Self::new(d, bits)
    }

    pub fn empty(d: usize) -> Result<Self, Error> {
        Self::new(d, 0)
    }

    pub fn full(d: usize) -> Result<Self, Error> {
        Self::new(d, full_mask(d))
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.d && self.bits & (1 << (i - 1)) != 0
    }

    /// 1-based elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        (1..=self.d).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(&self, other: &Self) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.d, self.bits ^ other.bits)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.d, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.d, self.bits & other.bits)
    }

    pub fn complement(&self) -> Self {
        Self::from_bits_unchecked(self.d, !self.bits & full_mask(self.d))
    }

    /// The 0/1 point `e_A`.
    pub fn indicator(&self) -> Vec<i64> {
        (0..self.d).map(|i| ((self.bits >> i) & 1) as i64).collect()
    }

    /// `<c, e_A>`.
    pub fn dot(&self, c: &[i64]) -> i64 {
        debug_assert_eq!(c.len(), self.d);
        (0..self.d)
            .filter(|&i| self.bits & (1 << i) != 0)
            .map(|i| c[i])
            .sum()
    }

    /// Relabels coordinates: element `i` maps to `perm[i - 1]` (1-based image).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.d);
        let mut bits = 0u64;
        for i in 0..self.d {
            if self.bits & (1 << i) != 0 {
                bits |= 1 << (perm[i] - 1);
            }
        }
        Self::from_bits_unchecked(self.d, bits)
    }

    /// Canonical vertex order: by cardinality, then colex.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| colex_cmp(self.bits, other.bits))
    }
}

/// Colex order compares the largest element of the symmetric difference,
/// which for bitmasks is plain integer order.
fn colex_cmp(a: u64, b: u64) -> Ordering {
    a.cmp(&b)
}

impl PartialOrd for VertexSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, e) in self.elements().iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn full_mask(d: usize) -> u64 {
    if d >= 64 {
        u64::MAX
    } else {
        (1u64 << d) - 1
    }
}

/// All `k`-subsets of `[d]` as masks, in colex order (Gosper's hack).
pub(crate) fn k_subsets(d: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << d;
    let mut next = if k > d {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}

/// `binom(n, m)`, zero when `m < 0` or `m > n`.
/// Scatters the low bits of `src` onto the set bits of `mask`, in order.
pub(crate) fn deposit_bits(mut src: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 && src != 0 {
        let low = mask & mask.wrapping_neg();
        if src & 1 != 0 {
            out |= low;
        }
        src >>= 1;
        mask &= mask - 1;
    }
    out
}

pub fn binomial(n: i64, m: i64) -> u128 {
    if m < 0 || n < 0 || m > n {
        return 0;
    }
    let m = m.min(n - m) as u128;
    let n = n as u128;
    let mut acc = 1u128;
    for i in 0..m {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
