//! S-hypersimplices and their faces in closed form.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::subset::{binomial, full_mask, k_subsets, VertexSubset, MAX_DIM};
use crate::Error;

/// `S ⊆ [0, d]`, nonempty, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CardinalitySet {
    d: usize,
    members: Vec<usize>,
}

impl CardinalitySet {
    /// Members may come in any order but must be distinct.
    pub fn new(d: usize, members: &[usize]) -> Result<Self, Error> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::Dimension(d));
        }
        if members.is_empty() {
            return Err(Error::InvalidCardinalitySet("S is empty".into()));
        }
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCardinalitySet(format!("duplicate member in {members:?}")));
        }
        if let Some(&m) = sorted.last().filter(|&&m| m > d) {
            return Err(Error::InvalidCardinalitySet(format!("{m} exceeds d = {d}")));
        }
        Ok(Self { d, members: sorted })
    }

    /// `[0, d]`: the cube.
    pub fn all(d: usize) -> Result<Self, Error> {
        Self::new(d, &(0..=d).collect::<Vec<_>>())
    }

    /// Even members of `[0, d]`: the halfcube.
    pub fn even(d: usize) -> Result<Self, Error> {
        Self::new(d, &(0..=d).step_by(2).collect::<Vec<_>>())
    }

    /// `[k, l]` as a contiguous range.
    pub fn range(d: usize, k: usize, l: usize) -> Result<Self, Error> {
        Self::new(d, &(k..=l).collect::<Vec<_>>())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// `Δ(d, S)` is `d`-dimensional.
    pub fn is_proper(&self) -> bool {
        if self.d == 1 {
            return self.members == [0, 1];
        }
        self.members.len() != 1 && self.members != [0, self.d]
    }

    /// `S⁺ = {s - 1 : s ∈ S, s > 0}` in dimension `d - 1`.
    pub fn plus(&self) -> Option<Self> {
        let m: Vec<usize> = self.members.iter().filter(|&&s| s > 0).map(|s| s - 1).collect();
        Self::new(self.d - 1, &m).ok()
    }

    /// `S⁻ = {s ∈ S : s ≤ d - 1}` in dimension `d - 1`.
    pub fn minus(&self) -> Option<Self> {
        let m: Vec<usize> = self.members.iter().copied().filter(|&s| s < self.d).collect();
        Self::new(self.d - 1, &m).ok()
    }

    /// Same `d`, different members.
    fn with_members(&self, members: &[usize]) -> Self {
        Self::new(self.d, members).expect("members drawn from a valid set")
    }
}

impl fmt::Display for CardinalitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members.iter().map(|s| s.to_string()).collect();
        write!(f, "d={} S={}", self.d, m.join(","))
    }
}

/// `proper ⇔ dim Δ(d, S) = d`.
pub fn is_proper(cs: &CardinalitySet) -> bool {
    cs.is_proper()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    /// `A ⊂ B` on consecutive layers of `S`.
    Chain,
    /// Same layer, `|A △ B| = 2`.
    Swap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub a: VertexSubset,
    pub b: VertexSubset,
    pub kind: EdgeKind,
}

/// The five facet families of `Δ(d, S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FacetKind {
    /// `<1, x> ≤ s_k`.
    Top,
    /// `<-1, x> ≤ -s_1`.
    Bottom,
    /// `x_i ≤ 1`, isomorphic to `Δ(d - 1, S⁺)`.
    CoordUp(usize),
    /// `-x_i ≤ 0`, isomorphic to `Δ(d - 1, S⁻)`.
    CoordDown(usize),
    /// Join of two hypersimplices across the gap `s_i < h = |I| < s_{i+1}`.
    Join { set: VertexSubset, h: usize },
}

impl FacetKind {
    pub fn tag(&self) -> &'static str {
        match self {
            FacetKind::Top => "i",
            FacetKind::Bottom => "ii",
            FacetKind::CoordUp(_) => "iii",
            FacetKind::CoordDown(_) => "iv",
            FacetKind::Join { .. } => "v",
        }
    }
}

/// `<normal, x> ≤ rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetSpec {
    pub normal: Vec<i64>,
    pub rhs: i64,
    pub kind: FacetKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SHypersimplex {
    cs: CardinalitySet,
    proper: bool,
}

impl SHypersimplex {
    pub fn new(cs: CardinalitySet) -> Self {
        let proper = cs.is_proper();
        Self { cs, proper }
    }

    pub fn from_parts(d: usize, members: &[usize]) -> Result<Self, Error> {
        Ok(Self::new(CardinalitySet::new(d, members)?))
    }

    pub fn cube(d: usize) -> Result<Self, Error> {
        Ok(Self::new(CardinalitySet::all(d)?))
    }

    pub fn halfcube(d: usize) -> Result<Self, Error> {
        Ok(Self::new(CardinalitySet::even(d)?))
    }

    pub fn card_set(&self) -> &CardinalitySet {
        &self.cs
    }

    pub fn d(&self) -> usize {
        self.cs.d
    }

    pub fn members(&self) -> &[usize] {
        &self.cs.members
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    fn require_proper(&self) -> Result<(), Error> {
        if self.proper {
            Ok(())
        } else {
            Err(Error::Improper(self.cs.to_string()))
        }
    }

    fn layer(&self, s: usize) -> impl Iterator<Item = VertexSubset> + '_ {
        let d = self.d();
        k_subsets(d, s).map(move |bits| VertexSubset::from_bits_unchecked(d, bits))
    }

    /// All `A ⊆ [d]` with `|A| ∈ S`, ordered by cardinality then colex.
    pub fn vertices(&self) -> Vec<VertexSubset> {
        self.members().iter().flat_map(|&s| self.layer(s)).collect()
    }

    /// `Σ_{s ∈ S} binom(d, s)`.
    pub fn vertex_count(&self) -> u128 {
        self.members()
            .iter()
            .map(|&s| binomial(self.d() as i64, s as i64))
            .sum()
    }

    fn check_vertex(&self, a: &VertexSubset) -> Result<(), Error> {
        if a.dim() != self.d() {
            return Err(Error::LengthMismatch(a.dim(), self.d()));
        }
        if !self.cs.contains(a.len()) {
            return Err(Error::NotInS(a.len()));
        }
        Ok(())
    }

    /// Classifies `[e_A, e_B]` as an edge or not.
    pub fn is_edge(&self, a: &VertexSubset, b: &VertexSubset) -> Result<Option<EdgeSpec>, Error> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::InvalidSubset(format!("{a} is not distinct from {b}")));
        }
        let (a, b) = if a.len() < b.len() || (a.len() == b.len() && a.bits() < b.bits()) {
            (*a, *b)
        } else {
            (*b, *a)
        };
        let m = self.members();
        let i = m.binary_search(&a.len()).expect("checked membership");
        let j = m.binary_search(&b.len()).expect("checked membership");
        if j == i + 1 && a.is_proper_subset_of(&b) {
            return Ok(Some(EdgeSpec { a, b, kind: EdgeKind::Chain }));
        }
        if i == j && a.symmetric_difference(&b).len() == 2 && self.swap_layer(a.len()) {
            return Ok(Some(EdgeSpec { a, b, kind: EdgeKind::Swap }));
        }
        Ok(None)
    }

    /// Same-layer swaps are edges on layer `s` unless both neighbours
    /// `s - 1` and `s + 1` are in `S`.
    fn swap_layer(&self, s: usize) -> bool {
        let below = s > 0 && self.cs.contains(s - 1);
        let above = self.cs.contains(s + 1);
        !(below && above)
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> Vec<EdgeSpec> {
        let d = self.d();
        let m = self.members();
        let mut out = Vec::new();
        for w in m.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for a in self.layer(lo) {
                let rest = !a.bits() & full_mask(d);
                for extra in k_subsets(d - lo, hi - lo) {
                    let b = VertexSubset::from_bits_unchecked(d, a.bits() | crate::subset::deposit_bits(extra, rest));
                    out.push(EdgeSpec { a, b, kind: EdgeKind::Chain });
                }
            }
        }
        for &s in m {
            if !self.swap_layer(s) {
                continue;
            }
            for a in self.layer(s) {
                for i in 0..d {
                    if a.bits() & (1 << i) == 0 {
                        continue;
                    }
                    for j in 0..d {
                        if a.bits() & (1 << j) != 0 {
                            continue;
                        }
                        let b = VertexSubset::from_bits_unchecked(d, a.bits() ^ (1 << i) ^ (1 << j));
                        if a.bits() < b.bits() {
                            out.push(EdgeSpec { a, b, kind: EdgeKind::Swap });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Closed-form edge count.
    pub fn edge_count(&self) -> u128 {
        let d = self.d() as i64;
        let m: Vec<i64> = self.members().iter().map(|&s| s as i64).collect();
        let k = m.len();
        let mut total = 0u128;
        for i in 0..k {
            // s_{k+1} = 0 makes the last term vanish.
            let next = if i + 1 < k { m[i + 1] } else { 0 };
            total += binomial(d - m[i], next - m[i]) * binomial(d, m[i]);
        }
        for &s in &m {
            if self.swap_layer(s as usize) {
                total += (s * (d - s)) as u128 * binomial(d, s) / 2;
            }
        }
        total
    }

    /// Vertices maximising `<c, e_A>`.
    pub fn face_in_direction(&self, c: &[i64]) -> Result<Vec<VertexSubset>, Error> {
        if c.len() != self.d() {
            return Err(Error::LengthMismatch(c.len(), self.d()));
        }
        let verts = self.vertices();
        let best = verts.iter().map(|v| v.dot(c)).max().expect("S is nonempty");
        Ok(verts.into_iter().filter(|v| v.dot(c) == best).collect())
    }

    /// Facets from the five families, in the order: top, bottom, `x_i ≤ 1`,
    /// `x_i ≥ 0`, then join facets by gap and colex `I`.
    pub fn facets(&self) -> Result<Vec<FacetSpec>, Error> {
        self.require_proper()?;
        let d = self.d();
        if d < 2 {
            return Err(Error::OutOfRange("facet families need d >= 2".into()));
        }
        let m = self.members();
        let (first, last) = (m[0], m[m.len() - 1]);
        let mut out = Vec::new();
        if last < d {
            out.push(FacetSpec { normal: vec![1; d], rhs: last as i64, kind: FacetKind::Top });
        }
        if first > 0 {
            out.push(FacetSpec { normal: vec![-1; d], rhs: -(first as i64), kind: FacetKind::Bottom });
        }
        if self.cs.plus().is_some_and(|p| p.is_proper()) {
            for i in 1..=d {
                out.push(FacetSpec { normal: unit(d, i, 1), rhs: 1, kind: FacetKind::CoordUp(i) });
            }
        }
        if self.cs.minus().is_some_and(|p| p.is_proper()) {
            for i in 1..=d {
                out.push(FacetSpec { normal: unit(d, i, -1), rhs: 0, kind: FacetKind::CoordDown(i) });
            }
        }
        for w in m.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for h in join_heights(d, lo, hi) {
                let (up, down) = ((hi - h) as i64, (h - lo) as i64);
                let g = num_integer::gcd(up, down);
                for bits in k_subsets(d, h) {
                    let set = VertexSubset::from_bits_unchecked(d, bits);
                    let normal = (0..d)
                        .map(|i| if bits & (1 << i) != 0 { up / g } else { -down / g })
                        .collect();
                    out.push(FacetSpec {
                        normal,
                        rhs: up * lo as i64 / g,
                        kind: FacetKind::Join { set, h },
                    });
                }
            }
        }
        let mut seen = HashSet::new();
        for f in &out {
            if !seen.insert(&f.normal) {
                return Err(Error::Degenerate(format!(
                    "facet normal {:?} produced twice for {}",
                    f.normal, self.cs
                )));
            }
        }
        Ok(out)
    }

    /// Closed-form facet count.
    pub fn facet_count(&self) -> Result<u128, Error> {
        self.require_proper()?;
        let d = self.d();
        if d < 2 {
            return Err(Error::OutOfRange("facet families need d >= 2".into()));
        }
        let m = self.members();
        let mut total = u128::from(m[m.len() - 1] < d) + u128::from(m[0] > 0);
        if self.cs.plus().is_some_and(|p| p.is_proper()) {
            total += d as u128;
        }
        if self.cs.minus().is_some_and(|p| p.is_proper()) {
            total += d as u128;
        }
        for w in m.windows(2) {
            for h in join_heights(d, w[0], w[1]) {
                total += binomial(d as i64, h as i64);
            }
        }
        Ok(total)
    }

    /// Pieces `Δ(d, {s_i, s_{i+1}})` of the Cayley decomposition.
    pub fn cayley_decomposition(&self) -> Result<Vec<SHypersimplex>, Error> {
        if self.members().len() < 2 {
            return Err(Error::InvalidCardinalitySet(
                "decomposition needs at least two layers".into(),
            ));
        }
        Ok(self
            .members()
            .windows(2)
            .map(|w| SHypersimplex::new(self.cs.with_members(w)))
            .collect())
    }

    /// `Δ(d, S) ∩ H(s)`: exactly the vertices of cardinality `s`.
    pub fn slice(&self, s: usize) -> Result<Vec<VertexSubset>, Error> {
        if !self.cs.contains(s) {
            return Err(Error::NotInS(s));
        }
        Ok(self.layer(s).collect())
    }

    /// `2d(|S| - 1)`, from joining the Cayley pieces.
    pub fn extension_upper_bound(&self) -> Result<u128, Error> {
        self.require_proper()?;
        Ok(2 * self.d() as u128 * (self.members().len() as u128 - 1))
    }
}

fn layer_dim(n: usize, m: usize) -> usize {
    if 0 < m && m < n {
        n - 1
    } else {
        0
    }
}

/// Heights `h` with `lo < h < hi` whose join face
/// `Δ(h, lo) * Δ(d - h, hi - h)` has dimension `d - 1`. Away from `0` and
/// `d` every height qualifies; a gap starting at `0` keeps only `h = 1`
/// and a gap ending at `d` keeps only `h = d - 1`.
fn join_heights(d: usize, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo + 1..hi).filter(move |&h| layer_dim(h, lo) + layer_dim(d - h, hi - h) + 1 == d - 1)
}

impl fmt::Display for SHypersimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ({})", self.cs)
    }
}

fn unit(d: usize, i: usize, sign: i64) -> Vec<i64> {
    (1..=d).map(|j| if j == i { sign } else { 0 }).collect()
}
