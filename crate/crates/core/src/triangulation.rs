//! Pulling triangulations, volumes and the halfcube simplex count.
//!
//! A pulling triangulation joins the minimal vertex `v` of a polytope to the
//! pulling triangulations of all facets avoiding `v`, recursing until the
//! faces are simplices. Faces are handled as sorted lists of vertex indices,
//! and facet lists come from a [`FaceLattice`].

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hypersimplex::SHypersimplex;
use crate::oracle::{self, ExactPoint, IVec, OracleCaps};
use crate::subset::{k_subsets, VertexSubset};
use crate::Error;

/// Default bound on the number of vertices handed to a pulling run.
pub const MAX_PULL_VERTICES: usize = 64;

/// A total order on vertex indices; the minimal vertex of a face is pulled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullOrder {
    /// `rank[v]` is the position of vertex `v`; smaller is pulled first.
    rank: Vec<usize>,
}

impl PullOrder {
    /// Vertex `0` first, then `1`, and so on.
    pub fn lex(n: usize) -> Self {
        Self { rank: (0..n).collect() }
    }

    /// `sequence[i]` is the vertex at position `i`.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self, Error> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("{sequence:?}")));
            }
            rank[v] = pos;
        }
        Ok(Self { rank })
    }

    /// Uniformly shuffled order, reproducible from `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::from_sequence(&seq).expect("a shuffle is a permutation")
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            seq[r] = v;
        }
        seq
    }

    fn min_of(&self, face: &[usize]) -> usize {
        *face.iter().min_by_key(|&&v| self.rank[v]).expect("faces are nonempty")
    }
}

/// Facet structure of a full-dimensional polytope and all of its faces.
pub trait FaceLattice {
    /// Number of vertices.
    fn vertex_count(&self) -> usize;
    /// Dimension of the polytope itself.
    fn dim(&self) -> usize;
    /// Facets of `face` (a sorted list of vertex indices of dimension `dim`),
    /// each as a sorted list of vertex indices.
    fn facets(&mut self, face: &[usize], dim: usize) -> Result<Vec<Vec<usize>>, Error>;
}

/// Faces computed by the brute-force oracle and memoised by vertex set.
/// The cache is independent of any pull order, so one instance can serve
/// many triangulations of the same polytope.
pub struct OracleFaces {
    lattice: Vec<IVec>,
    dim: usize,
    caps: OracleCaps,
    memo: HashMap<Vec<usize>, Vec<Vec<usize>>>,
}

impl OracleFaces {
    pub fn new(points: &[ExactPoint]) -> Result<Self, Error> {
        Self::with_limits(points, MAX_PULL_VERTICES, OracleCaps::default())
    }

    pub fn with_limits(points: &[ExactPoint], max_vertices: usize, caps: OracleCaps) -> Result<Self, Error> {
        if points.len() > max_vertices {
            return Err(Error::CapExceeded(format!(
                "pulling {} vertices (limit {max_vertices})",
                points.len()
            )));
        }
        let d = points.first().map_or(0, ExactPoint::dim);
        let lattice = oracle::lattice_points(points)?;
        let dim = oracle::lattice_rank(&lattice)?;
        if dim != d {
            return Err(Error::Degenerate(format!(
                "points span dimension {dim} inside R^{d}"
            )));
        }
        // Facet enumeration on the top face needs every point at once.
        let caps = OracleCaps {
            max_points: caps.max_points.max(points.len()),
            ..caps
        };
        Ok(Self {
            lattice,
            dim,
            caps,
            memo: HashMap::new(),
        })
    }

    pub fn cached_faces(&self) -> usize {
        self.memo.len()
    }
}

impl FaceLattice for OracleFaces {
    fn vertex_count(&self) -> usize {
        self.lattice.len()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn facets(&mut self, face: &[usize], _dim: usize) -> Result<Vec<Vec<usize>>, Error> {
        if let Some(f) = self.memo.get(face) {
            return Ok(f.clone());
        }
        let f = oracle::facet_index_sets(&self.lattice, face, self.caps)?;
        self.memo.insert(face.to_vec(), f.clone());
        Ok(f)
    }
}

/// Structural faces of the halfcube `H_d`: every face is a halfcube on its
/// free coordinates (2m facets `x_i = δ` plus `2^{m-1}` simplex facets
/// indexed by odd `B`) or a simplex.
pub struct HalfcubeFaces {
    d: usize,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl HalfcubeFaces {
    /// Vertex indices follow `SHypersimplex::halfcube(d).vertices()`.
    pub fn new(d: usize) -> Result<Self, Error> {
        if d < 3 {
            return Err(Error::OutOfRange(format!("H_{d} is not full-dimensional")));
        }
        let masks: Vec<u64> = SHypersimplex::halfcube(d)?
            .vertices()
            .iter()
            .map(VertexSubset::bits)
            .collect();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(Self { d, masks, index })
    }

    fn lookup(&self, masks: impl Iterator<Item = u64>) -> Vec<usize> {
        let mut out: Vec<usize> = masks.map(|m| self.index[&m]).collect();
        out.sort_unstable();
        out
    }
}

impl FaceLattice for HalfcubeFaces {
    fn vertex_count(&self) -> usize {
        self.masks.len()
    }

    fn dim(&self) -> usize {
        self.d
    }

    fn facets(&mut self, face: &[usize], dim: usize) -> Result<Vec<Vec<usize>>, Error> {
        let full = crate::subset::full_mask(self.d);
        let ones = face.iter().fold(full, |acc, &v| acc & self.masks[v]);
        let zeros = face.iter().fold(full, |acc, &v| acc & !self.masks[v]);
        let free = full & !ones & !zeros;
        let m = free.count_ones() as usize;
        if m != dim || face.len() != 1 << (m - 1) || m < 4 {
            return Err(Error::Degenerate(format!(
                "face with {} vertices is not a halfcube of dimension {dim}",
                face.len()
            )));
        }
        let members: Vec<u64> = face.iter().map(|&v| self.masks[v]).collect();
        let mut out = Vec::new();
        for i in 0..self.d {
            let bit = 1u64 << i;
            if free & bit == 0 {
                continue;
            }
            for want in [0, bit] {
                out.push(self.lookup(members.iter().copied().filter(|&x| x & bit == want)));
            }
        }
        // Parity of the free part; an odd class is reflected onto the even
        // one by flipping its lowest free coordinate.
        let parity = (members[0] & free).count_ones() % 2;
        let flip = if parity == 1 { free & free.wrapping_neg() } else { 0 };
        let free_bits: Vec<u64> = (0..self.d).map(|i| 1u64 << i).filter(|b| free & b != 0).collect();
        for size in (1..=m).step_by(2) {
            for local in k_subsets(m, size) {
                let b = crate::subset::deposit_bits(local, free);
                let corners = free_bits.iter().map(|&bit| {
                    let y = if b & bit != 0 { b & !bit } else { b | bit };
                    (y ^ flip) | ones
                });
                out.push(self.lookup(corners));
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Pulling triangulation of the polytope described by `faces`. Each simplex
/// is returned as a sorted list of vertex indices.
pub fn pull<F: FaceLattice>(faces: &mut F, order: &PullOrder) -> Result<Vec<Vec<usize>>, Error> {
    if order.len() != faces.vertex_count() {
        return Err(Error::LengthMismatch(order.len(), faces.vertex_count()));
    }
    let all: Vec<usize> = (0..faces.vertex_count()).collect();
    let dim = faces.dim();
    let mut memo: HashMap<Vec<usize>, Rc<Vec<Vec<usize>>>> = HashMap::new();
    let simplices = pull_face(faces, order, &all, dim, &mut memo)?;
    let mut out: Vec<Vec<usize>> = simplices.as_ref().clone();
    out.sort();
    Ok(out)
}

fn pull_face<F: FaceLattice>(
    faces: &mut F,
    order: &PullOrder,
    face: &[usize],
    dim: usize,
    memo: &mut HashMap<Vec<usize>, Rc<Vec<Vec<usize>>>>,
) -> Result<Rc<Vec<Vec<usize>>>, Error> {
    if let Some(hit) = memo.get(face) {
        return Ok(Rc::clone(hit));
    }
    let result = if face.len() == dim + 1 {
        vec![face.to_vec()]
    } else {
        let apex = order.min_of(face);
        let mut out = Vec::new();
        for facet in faces.facets(face, dim)? {
            if facet.binary_search(&apex).is_ok() {
                continue;
            }
            for simplex in pull_face(faces, order, &facet, dim - 1, memo)?.iter() {
                let mut s = simplex.clone();
                let at = s.partition_point(|&v| v < apex);
                s.insert(at, apex);
                out.push(s);
            }
        }
        out
    };
    let result = Rc::new(result);
    memo.insert(face.to_vec(), Rc::clone(&result));
    Ok(result)
}

/// Pulling triangulation of a full-dimensional point configuration whose
/// points are all vertices.
pub fn pulling_triangulation(points: &[ExactPoint], order: &PullOrder) -> Result<Vec<Vec<usize>>, Error> {
    let mut faces = OracleFaces::new(points)?;
    pull(&mut faces, order)
}

/// Full-dimensional simplices of a triangulation of `Δ(d, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub ambient: SHypersimplex,
    pub simplices: Vec<Vec<VertexSubset>>,
}

impl Triangulation {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Normalised volumes `d!·vol` of the simplices, i.e. `|det|`.
    pub fn normalized_volumes(&self) -> Result<Vec<u128>, Error> {
        self.simplices.iter().map(|s| simplex_abs_det(s)).collect()
    }
}

/// Vertex points of `Δ(d, S)` in canonical order.
pub fn hypersimplex_points(p: &SHypersimplex) -> Vec<ExactPoint> {
    p.vertices()
        .iter()
        .map(|v| ExactPoint::from_ints(v.indicator()))
        .collect()
}

/// Oracle face lattice of `Δ(d, S)`, reusable across pull orders.
pub fn hypersimplex_faces(p: &SHypersimplex) -> Result<OracleFaces, Error> {
    if !p.is_proper() {
        return Err(Error::Improper(p.card_set().to_string()));
    }
    OracleFaces::new(&hypersimplex_points(p))
}

/// Pulls `Δ(d, S)` using any face lattice indexed like `p.vertices()`.
pub fn triangulate_with<F: FaceLattice>(
    p: &SHypersimplex,
    faces: &mut F,
    order: &PullOrder,
) -> Result<Triangulation, Error> {
    let verts = p.vertices();
    let simplices = pull(faces, order)?
        .into_iter()
        .map(|s| s.into_iter().map(|i| verts[i]).collect())
        .collect();
    Ok(Triangulation {
        ambient: p.clone(),
        simplices,
    })
}

pub fn triangulate(p: &SHypersimplex, order: &PullOrder) -> Result<Triangulation, Error> {
    let mut faces = hypersimplex_faces(p)?;
    triangulate_with(p, &mut faces, order)
}

/// `|det(v_1 - v_0, ..., v_d - v_0)|` by fraction-free elimination.
fn simplex_abs_det(simplex: &[VertexSubset]) -> Result<u128, Error> {
    let d = simplex[0].dim();
    if simplex.len() != d + 1 {
        return Err(Error::Degenerate(format!("{} vertices in dimension {d}", simplex.len())));
    }
    let origin = simplex[0].indicator();
    let mut m: Vec<Vec<i128>> = simplex[1..]
        .iter()
        .map(|v| v.indicator().iter().zip(&origin).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..d {
        let Some(piv) = (k..d).find(|&r| m[r][k] != 0) else {
            return Ok(0);
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let num = m[i][j]
                    .checked_mul(m[k][k])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::Overflow)?;
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok((sign * m[d - 1][d - 1]).unsigned_abs())
}

fn factorial(n: usize) -> Result<u128, Error> {
    (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x).ok_or(Error::Overflow))
}

/// Exact volume `Σ |det| / d!`; a zero determinant means the input was not
/// a triangulation.
pub fn triangulation_volume(t: &Triangulation) -> Result<BigRational, Error> {
    let d = t.ambient.d();
    let mut total = BigRational::zero();
    for s in &t.simplices {
        let det = simplex_abs_det(s)?;
        if det == 0 {
            return Err(Error::Degenerate(format!("flat simplex {s:?}")));
        }
        total += BigRational::from_integer(BigInt::from(det));
    }
    Ok(total / BigRational::from_integer(BigInt::from(factorial(d)?)))
}

/// `t(d) = Σ_{l=3}^{d} d!/l! (2^{l-1} - l)`, and `1` for `d ≤ 3`.
pub fn halfcube_pull_count(d: usize) -> Result<u128, Error> {
    if d <= 3 {
        return Ok(1);
    }
    let mut total = 0u128;
    for l in 3..=d {
        // d!/l! as a falling product.
        let ratio = (l + 1..=d).try_fold(1u128, |acc, x| acc.checked_mul(x as u128));
        let term = ratio
            .and_then(|r| r.checked_mul((1u128 << (l - 1)) - l as u128))
            .ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// `t(d) = d·t(d-1) + 2^{d-1} - d` for `d ≥ 4`, `t(d) = 1` below.
pub fn halfcube_pull_recurrence(d: usize) -> Result<u128, Error> {
    let mut t = 1u128;
    for k in 4..=d {
        t = t
            .checked_mul(k as u128)
            .and_then(|x| x.checked_add((1u128 << (k - 1)) - k as u128))
            .ok_or(Error::Overflow)?;
    }
    Ok(t)
}

/// A partial permutation `τ` of `[d]` and an odd, non-singleton `B ⊆ [d] \ τ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauBPair {
    pub tau: Vec<usize>,
    pub b: VertexSubset,
}

/// All `(τ, B)` pairs, grouped by `|τ|`, then `τ` lexicographically, then
/// `B` in colex order.
pub fn enumerate_tau_b_pairs(d: usize) -> Result<Vec<TauBPair>, Error> {
    if !(3..=crate::subset::MAX_DIM).contains(&d) {
        return Err(Error::OutOfRange(format!("(τ, B) pairs need 3 <= d, got {d}")));
    }
    let mut out = Vec::new();
    for len in 0..=d - 3 {
        let mut taus = Vec::new();
        partial_permutations(d, len, &mut Vec::new(), &mut taus);
        for tau in taus {
            let used: u64 = tau.iter().fold(0, |m, &i| m | 1 << (i - 1));
            let rest = crate::subset::full_mask(d) & !used;
            let free = d - len;
            for size in (3..=free).step_by(2) {
                for local in k_subsets(free, size) {
                    let bits = crate::subset::deposit_bits(local, rest);
                    out.push(TauBPair {
                        tau: tau.clone(),
                        b: VertexSubset::from_bits_unchecked(d, bits),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn partial_permutations(d: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in 1..=d {
        if !cur.contains(&i) {
            cur.push(i);
            partial_permutations(d, len, cur, out);
            cur.pop();
        }
    }
}

/// Eulerian number `A(d, i)`: permutations of `[d]` with `i` descents.
pub fn eulerian(d: usize, i: usize) -> Result<u128, Error> {
    if d == 0 || i >= d {
        return Err(Error::OutOfRange(format!("A({d}, {i}) needs 0 <= i < d")));
    }
    // row[j] = A(n, j)
    let mut row = vec![1u128];
    for n in 2..=d {
        let mut next = vec![0u128; n];
        for (j, slot) in next.iter_mut().enumerate() {
            let stay = if j < row.len() { (j as u128 + 1) * row[j] } else { 0 };
            let grow = if j > 0 { (n - j) as u128 * row[j - 1] } else { 0 };
            *slot = stay.checked_add(grow).ok_or(Error::Overflow)?;
        }
        row = next;
    }
    Ok(row[i])
}

/// Largest `d` accepted by [`volume_identity_check`].
pub const VOLUME_MAX_D: usize = 6;

/// Outcome of triangulating `Δ(d, [k, l])` and comparing with Eulerian sums.
#[derive(Clone, Debug)]
pub struct VolumeIdentity {
    /// `d!·vol Δ(d, [k, l])` from a pulling triangulation.
    pub normalized_volume: BigRational,
    /// `Σ_{i=k}^{l-1} A(d, i)`: permutations with descent number in `[k, l-1]`.
    pub eulerian_sum: u128,
}

impl VolumeIdentity {
    pub fn holds(&self) -> bool {
        self.normalized_volume == BigRational::from_integer(BigInt::from(self.eulerian_sum))
    }
}

/// `d!·vol Δ(d, [k, l])` against the number of permutations whose descent
/// number lies in `[k, l - 1]`; the layers `k..l` contribute one Cayley
/// piece `Δ(d, i, i+1)` each for `i = k, ..., l - 1`.
pub fn volume_identity(d: usize, k: usize, l: usize) -> Result<VolumeIdentity, Error> {
    if !(k < l && l <= d) {
        return Err(Error::OutOfRange(format!("need 0 <= k < l <= d, got k={k} l={l} d={d}")));
    }
    if d > VOLUME_MAX_D {
        return Err(Error::CapExceeded(format!("volume check at d = {d} (limit {VOLUME_MAX_D})")));
    }
    let p = SHypersimplex::from_parts(d, &(k..=l).collect::<Vec<_>>())?;
    let t = triangulate(&p, &PullOrder::lex(p.vertices().len()))?;
    let vol = triangulation_volume(&t)?;
    let eulerian_sum = (k..l).map(|i| eulerian(d, i)).sum::<Result<u128, _>>()?;
    Ok(VolumeIdentity {
        normalized_volume: vol * BigRational::from_integer(BigInt::from(factorial(d)?)),
        eulerian_sum,
    })
}

pub fn volume_identity_check(d: usize, k: usize, l: usize) -> Result<bool, Error> {
    Ok(volume_identity(d, k, l)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pull_order_validation() {
        assert!(PullOrder::from_sequence(&[0, 0]).is_err());
        assert!(PullOrder::from_sequence(&[2, 0]).is_err());
        let o = PullOrder::from_sequence(&[2, 0, 1]).unwrap();
        assert_eq!(o.sequence(), vec![2, 0, 1]);
        assert_eq!(o.min_of(&[0, 1]), 0);
        assert_eq!(o.min_of(&[0, 2]), 2);
        assert_eq!(PullOrder::random(10, 7), PullOrder::random(10, 7));
    }

    #[test]
    fn cube_and_simplex_pulls() {
        let cube = SHypersimplex::cube(3).unwrap();
        let t = triangulate(&cube, &PullOrder::lex(8)).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(triangulation_volume(&t).unwrap(), rat(1, 1));
        let simplex = SHypersimplex::from_parts(4, &[0, 1]).unwrap();
        let t = triangulate(&simplex, &PullOrder::lex(5)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(triangulation_volume(&t).unwrap(), rat(1, 24));
    }

    #[test]
    fn halfcube_four_has_eight_simplices() {
        let h4 = SHypersimplex::halfcube(4).unwrap();
        for seed in 0..5 {
            let t = triangulate(&h4, &PullOrder::random(8, seed)).unwrap();
            assert_eq!(t.len(), 8, "seed {seed}");
        }
    }

    #[test]
    fn octahedron_volume() {
        let oct = SHypersimplex::from_parts(3, &[1, 2]).unwrap();
        let t = triangulate(&oct, &PullOrder::lex(6)).unwrap();
        assert_eq!(triangulation_volume(&t).unwrap(), rat(2, 3));
    }

    #[test]
    fn halfcube_counts() {
        let want = [(1, 1), (2, 1), (3, 1), (4, 8), (5, 51), (6, 332)];
        for (d, t) in want {
            assert_eq!(halfcube_pull_count(d).unwrap(), t, "closed form d={d}");
            assert_eq!(halfcube_pull_recurrence(d).unwrap(), t, "recurrence d={d}");
        }
        for d in 4..=20 {
            assert_eq!(halfcube_pull_count(d).unwrap(), halfcube_pull_recurrence(d).unwrap());
        }
    }

    #[test]
    fn tau_b_examples() {
        let three = enumerate_tau_b_pairs(3).unwrap();
        assert_eq!(three.len(), 1);
        assert!(three[0].tau.is_empty());
        assert_eq!(three[0].b.elements(), vec![1, 2, 3]);
        assert_eq!(enumerate_tau_b_pairs(4).unwrap().len(), 8);
        assert_eq!(enumerate_tau_b_pairs(5).unwrap().len(), 51);
        assert!(enumerate_tau_b_pairs(2).is_err());
        for pair in enumerate_tau_b_pairs(6).unwrap() {
            assert!(pair.b.len() % 2 == 1 && pair.b.len() >= 3);
            assert!(pair.tau.iter().all(|&i| !pair.b.contains(i)));
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(5, 0).unwrap(), 1);
        assert_eq!(eulerian(3, 1).unwrap(), 4);
        assert_eq!(eulerian(4, 1).unwrap(), 11);
        assert_eq!(eulerian(4, 2).unwrap(), 11);
        assert!(eulerian(3, 3).is_err());
        assert!(eulerian(0, 0).is_err());
    }

    #[test]
    fn volume_identity_examples() {
        let v = volume_identity(3, 1, 2).unwrap();
        assert_eq!(v.normalized_volume, rat(4, 1));
        assert!(v.holds());
        assert!(volume_identity_check(4, 0, 4).unwrap());
        let v = volume_identity(4, 1, 2).unwrap();
        assert_eq!(v.eulerian_sum, 11);
        assert!(v.holds());
        assert!(volume_identity(4, 2, 2).is_err());
        assert!(matches!(volume_identity(7, 0, 1), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn determinant_matches_oracle() {
        let s: Vec<VertexSubset> = [0b000u64, 0b011, 0b101, 0b110]
            .iter()
            .map(|&b| VertexSubset::new(3, b).unwrap())
            .collect();
        assert_eq!(simplex_abs_det(&s).unwrap(), 2);
        let pts: Vec<ExactPoint> = s.iter().map(|v| ExactPoint::from_ints(v.indicator())).collect();
        assert_eq!(oracle::simplex_volume(&pts).unwrap(), rat(2, 6));
    }
}
