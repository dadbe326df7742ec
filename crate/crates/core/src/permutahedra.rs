//! Permutahedra, monotone paths and monotone path polytopes.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::hypersimplex::SHypersimplex;
use crate::oracle::{self, ExactPoint};
use crate::subset::{binomial, k_subsets, VertexSubset};
use crate::Error;

/// `Π(p)`: the convex hull of all coordinate permutations of `p`.
/// `p` is kept weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Permutahedron {
    p: Vec<i64>,
}

impl Permutahedron {
    /// Any ordering of the entries describes the same polytope.
    pub fn new(mut p: Vec<i64>) -> Result<Self, Error> {
        if p.is_empty() {
            return Err(Error::OutOfRange("permutahedron of length 0".into()));
        }
        p.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { p })
    }

    /// Builds `(ν_1^{k_1}, ..., ν_r^{k_r})`; zero multiplicities are skipped.
    pub fn from_blocks(blocks: &[(i64, usize)]) -> Result<Self, Error> {
        let p = blocks
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect();
        Self::new(p)
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn d(&self) -> usize {
        self.p.len()
    }

    /// `(ν_j, k_j)` with `ν_1 > ... > ν_r`.
    pub fn blocks(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &v in &self.p {
            match out.last_mut() {
                Some((last, k)) if *last == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn is_point(&self) -> bool {
        self.p.first() == self.p.last()
    }

    /// `d! / (k_1! ... k_r!)`.
    pub fn vertex_count(&self) -> u128 {
        let mut remaining = self.d() as i64;
        let mut total = 1u128;
        for (_, k) in self.blocks() {
            total *= binomial(remaining, k as i64);
            remaining -= k as i64;
        }
        total
    }

    /// All distinct permutations of `p`, in lexicographically decreasing order.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        let mut cur = self.p.clone();
        let mut out = vec![cur.clone()];
        // Previous permutation in lex order, starting from the largest.
        while let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] > cur[i + 1]) {
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] < cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(cur.clone());
        }
        out
    }

    /// Facets as `(I, normal, rhs)`; see [`PermFacet`].
    pub fn facets(&self) -> Result<Vec<PermFacet>, Error> {
        if self.is_point() {
            return Err(Error::Degenerate("constant p gives a point".into()));
        }
        let d = self.d();
        let blocks = self.blocks();
        let (k_first, k_last) = (blocks[0].1, blocks[blocks.len() - 1].1);
        let prefix: Vec<i64> = std::iter::once(0)
            .chain(self.p.iter().scan(0i64, |acc, &x| {
                *acc += x;
                Some(*acc)
            }))
            .collect();
        let total = prefix[d];
        let mut out = Vec::new();
        for h in 1..d {
            // The face maximising e_I is Π(p_1..p_h) × Π(p_{h+1}..p_d); it is
            // a facet when each factor is either non-constant or a point.
            let top_ok = h == 1 || h > k_first;
            let bottom_ok = h == d - 1 || h < d - k_last;
            if !(top_ok && bottom_ok) {
                continue;
            }
            let g = num_integer::gcd(h, d - h) as i64;
            let (up, down) = ((d - h) as i64 / g, h as i64 / g);
            let rhs = up * prefix[h] - down * (total - prefix[h]);
            for bits in k_subsets(d, h) {
                let set = VertexSubset::from_bits_unchecked(d, bits);
                let normal = (0..d)
                    .map(|i| if bits & (1 << i) != 0 { up } else { -down })
                    .collect();
                out.push(PermFacet { set, normal, rhs });
            }
        }
        Ok(out)
    }

    /// `Π(p) + Π(q) = Π(p + q)` for decreasing `p`, `q`.
    pub fn minkowski(&self, other: &Self) -> Result<Self, Error> {
        if self.d() != other.d() {
            return Err(Error::LengthMismatch(self.d(), other.d()));
        }
        Self::new(self.p.iter().zip(&other.p).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Permutahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.p.iter().map(|x| x.to_string()).collect();
        write!(f, "Π({})", parts.join(","))
    }
}

/// Facet `<normal, x> ≤ rhs` of a permutahedron, relative to its affine hull
/// `H(Σp)`. The normal is `(d - h) e_I - h e_{I^c}` made primitive, the
/// unique representative orthogonal to the all-ones vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermFacet {
    pub set: VertexSubset,
    pub normal: Vec<i64>,
    pub rhs: i64,
}

pub fn perm_minkowski(p: &Permutahedron, q: &Permutahedron) -> Result<Permutahedron, Error> {
    p.minkowski(q)
}

/// A chain `A_1 ⊂ ... ⊂ A_k` with `|A_i| = s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePath {
    pub chain: Vec<VertexSubset>,
}

impl MonotonePath {
    /// Checks that the chain is a card-monotone path of `p`.
    pub fn validate(&self, p: &SHypersimplex) -> Result<(), Error> {
        let m = p.members();
        if self.chain.len() != m.len() {
            return Err(Error::InvalidPath(format!(
                "{} sets for {} layers",
                self.chain.len(),
                m.len()
            )));
        }
        for (a, &s) in self.chain.iter().zip(m) {
            if a.dim() != p.d() {
                return Err(Error::LengthMismatch(a.dim(), p.d()));
            }
            if a.len() != s {
                return Err(Error::InvalidPath(format!("{a} does not have size {s}")));
            }
        }
        if let Some(w) = self.chain.windows(2).find(|w| !w[0].is_proper_subset_of(&w[1])) {
            return Err(Error::InvalidPath(format!("{} is not inside {}", w[0], w[1])));
        }
        Ok(())
    }
}

impl fmt::Display for MonotonePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊂ ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Every chain through the layers of `S`, in lexicographic order of the
/// canonical subset order.
pub fn monotone_paths(p: &SHypersimplex) -> Vec<MonotonePath> {
    let d = p.d();
    let m = p.members();
    let mut out = Vec::new();
    let mut chain: Vec<VertexSubset> = Vec::with_capacity(m.len());
    fn extend(
        d: usize,
        m: &[usize],
        chain: &mut Vec<VertexSubset>,
        out: &mut Vec<MonotonePath>,
    ) {
        let depth = chain.len();
        if depth == m.len() {
            out.push(MonotonePath { chain: chain.clone() });
            return;
        }
        let base = chain.last().map_or(0, |a| a.bits());
        for bits in k_subsets(d, m[depth]) {
            if bits & base == base {
                chain.push(VertexSubset::from_bits_unchecked(d, bits));
                extend(d, m, chain, out);
                chain.pop();
            }
        }
    }
    extend(d, m, &mut chain, &mut out);
    out
}

/// `binom(d, s_1) · Π_i binom(d - s_i, s_{i+1} - s_i)`.
pub fn monotone_path_count(p: &SHypersimplex) -> u128 {
    let d = p.d() as i64;
    let m = p.members();
    let mut total = binomial(d, m[0] as i64);
    for w in m.windows(2) {
        total *= binomial(d - w[0] as i64, (w[1] - w[0]) as i64);
    }
    total
}

/// The functional `h = Σ 1_{A_i}` certifying that `path` is coherent.
///
/// Verified before returning: on every layer of `S` the path's set is the
/// unique maximiser of `h`, and under `x ↦ (card x, h(x))` the path lands on
/// the upper boundary of the projected polygon.
pub fn coherence_certificate(p: &SHypersimplex, path: &MonotonePath) -> Result<Vec<i64>, Error> {
    path.validate(p)?;
    let d = p.d();
    let mut h = vec![0i64; d];
    for a in &path.chain {
        for (hi, x) in h.iter_mut().zip(a.indicator()) {
            *hi += x;
        }
    }
    let verts = p.vertices();
    let mut path_points: Vec<(i64, i64)> = Vec::new();
    for (a, &s) in path.chain.iter().zip(p.members()) {
        let target = a.dot(&h);
        let rival = verts
            .iter()
            .filter(|v| v.len() == s)
            .map(|v| (v.dot(&h), v))
            .filter(|(val, v)| *val > target || (*val == target && *v != a))
            .map(|(_, v)| *v)
            .next();
        if let Some(rival) = rival {
            return Err(Error::Degenerate(format!(
                "certificate fails on layer {s}: {rival} ties or beats {a}"
            )));
        }
        path_points.push((s as i64, target));
    }
    // Shadow polygon: only the top point over each x matters for its upper
    // boundary.
    let envelope: Vec<(i64, i64)> = p
        .members()
        .iter()
        .map(|&s| {
            let top = verts.iter().filter(|v| v.len() == s).map(|v| v.dot(&h)).max();
            (s as i64, top.expect("layer is nonempty"))
        })
        .collect();
    let hull = upper_hull(&envelope);
    for &(x, y) in &path_points {
        if !on_upper_hull(&hull, x, y) {
            return Err(Error::Degenerate(format!(
                "projected path point ({x}, {y}) lies below the shadow boundary"
            )));
        }
    }
    Ok(h)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Upper hull of points with distinct, increasing x.
fn upper_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) >= 0 {
            hull.pop();
        }
        hull.push(pt);
    }
    hull
}

fn on_upper_hull(hull: &[(i64, i64)], x: i64, y: i64) -> bool {
    hull.windows(2).any(|w| {
        let (a, b) = (w[0], w[1]);
        a.0 <= x && x <= b.0 && cross(a, b, (x, y)) == 0
    }) || hull == [(x, y)]
}

/// `S' = S ∪ {0, d} = {a_0 < ... < a_k}` and
/// `p = Σ_i (1^{a_i}, 0^{d - a_i}) = (k^{a_1-a_0}, (k-1)^{a_2-a_1}, ..., 1^{a_k-a_{k-1}})`,
/// so that `½·1 + d·Σ_card(Δ(d,S)) = Π(p)`.
pub fn monotone_path_polytope(p: &SHypersimplex) -> Permutahedron {
    let layers = closed_layers(p);
    let d = p.d();
    let mut v = vec![0i64; d];
    for &a in &layers {
        for x in v.iter_mut().take(a) {
            *x += 1;
        }
    }
    Permutahedron::new(v).expect("d >= 1")
}

fn closed_layers(p: &SHypersimplex) -> Vec<usize> {
    let mut layers: Vec<usize> = p.members().to_vec();
    layers.push(0);
    layers.push(p.d());
    layers.sort_unstable();
    layers.dedup();
    layers
}

/// Result of comparing the slice-sum cloud with the predicted permutahedron.
#[derive(Clone, Debug)]
pub struct FiberCheck {
    /// Distinct points of `P_0 + 2P_1 + ... + 2P_{k-1} + P_k`.
    pub cloud_size: usize,
    /// Extreme points of that cloud, sorted.
    pub extreme: Vec<Vec<i64>>,
    /// `2q - 1` for each vertex `q` of the predicted `Π(p)`, sorted.
    pub predicted: Vec<Vec<i64>>,
    pub path_count: u128,
}

impl FiberCheck {
    /// Extreme points agree and their number equals the number of
    /// (coherent) monotone paths.
    pub fn passed(&self) -> bool {
        self.extreme == self.predicted && self.extreme.len() as u128 == self.path_count
    }
}

/// Largest `d` accepted by [`fiber_formula_check`] unless overridden.
pub const FIBER_MAX_D: usize = 5;

/// Brute-force check of the slice formula for the monotone path polytope,
/// done at scale two so every coordinate is an integer.
pub fn fiber_formula_check(p: &SHypersimplex) -> Result<FiberCheck, Error> {
    fiber_formula_check_capped(p, FIBER_MAX_D)
}

pub fn fiber_formula_check_capped(p: &SHypersimplex, max_d: usize) -> Result<FiberCheck, Error> {
    let d = p.d();
    if d > max_d {
        return Err(Error::CapExceeded(format!("fiber check at d = {d} (limit {max_d})")));
    }
    let layers = closed_layers(p);
    let k = layers.len() - 1;
    let mut cloud: HashSet<Vec<i64>> = HashSet::from([vec![0i64; d]]);
    for (i, &a) in layers.iter().enumerate() {
        let w = if i == 0 || i == k { 1 } else { 2 };
        let mut next = HashSet::with_capacity(cloud.len() * binomial(d as i64, a as i64) as usize);
        for base in &cloud {
            for bits in k_subsets(d, a) {
                let mut pt = base.clone();
                for (j, x) in pt.iter_mut().enumerate() {
                    if bits & (1 << j) != 0 {
                        *x += w;
                    }
                }
                next.insert(pt);
            }
        }
        cloud = next;
    }
    let mut points: Vec<Vec<i64>> = cloud.into_iter().collect();
    points.sort();
    let exact: Vec<ExactPoint> = points.iter().map(|v| ExactPoint::from_ints(v.iter().copied())).collect();
    let mut extreme: Vec<Vec<i64>> = oracle::extreme_points(&exact)?
        .into_iter()
        .map(|i| points[i].clone())
        .collect();
    extreme.sort();
    let mut predicted: Vec<Vec<i64>> = monotone_path_polytope(p)
        .vertices()
        .into_iter()
        .map(|q| q.into_iter().map(|x| 2 * x - 1).collect())
        .collect();
    predicted.sort();
    Ok(FiberCheck {
        cloud_size: points.len(),
        extreme,
        predicted,
        path_count: monotone_path_count(p),
    })
}

/// Extreme points of `{u + v : u ∈ V(Π(p)), v ∈ V(Π(q))}`, sorted.
pub fn minkowski_cloud_extremes(p: &Permutahedron, q: &Permutahedron) -> Result<Vec<Vec<i64>>, Error> {
    if p.d() != q.d() {
        return Err(Error::LengthMismatch(p.d(), q.d()));
    }
    let qv = q.vertices();
    let mut sums: Vec<Vec<i64>> = p
        .vertices()
        .iter()
        .flat_map(|u| qv.iter().map(move |v| u.iter().zip(v).map(|(a, b)| a + b).collect()))
        .collect();
    sums.sort();
    sums.dedup();
    let exact: Vec<ExactPoint> = sums.iter().map(|v| ExactPoint::from_ints(v.iter().copied())).collect();
    let mut out: Vec<Vec<i64>> = oracle::extreme_points(&exact)?
        .into_iter()
        .map(|i| sums[i].clone())
        .collect();
    out.sort();
    Ok(out)
}
