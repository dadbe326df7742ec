//! Brute-force exact convex geometry.
//!
//! Everything here is deliberately naive: facets come from trying every
//! hyperplane spanned by points, edges from intersecting facets, extreme
//! points from exact linear feasibility. It exists to check the closed-form
//! descriptions elsewhere in the crate and shares no code path with them.

mod lattice;
mod lp;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Error;

pub(crate) use lattice::IVec;

/// A point with arbitrary-precision rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPoint {
    pub coords: Vec<BigRational>,
}

impl ExactPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Self {
            coords: coords
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Debug for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A facet relative to the affine hull of the input: `<normal, x> <= rhs`.
///
/// The normal is the unique primitive integer vector in the direction space
/// of the affine hull, so facets of lower-dimensional point sets still have a
/// canonical normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFacet {
    pub normal: Vec<i64>,
    pub rhs: BigRational,
    pub incident: BTreeSet<usize>,
}

/// Size limits for the exponential enumerations.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    pub max_points: usize,
    pub max_dim: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            max_points: 40,
            max_dim: 6,
        }
    }
}

fn check_uniform_dim(points: &[ExactPoint]) -> Result<usize, Error> {
    let d = points.first().map_or(0, ExactPoint::dim);
    if points.iter().any(|p| p.dim() != d) {
        return Err(Error::Degenerate("points of mixed dimension".into()));
    }
    Ok(d)
}

/// Dimension of the affine hull. Empty input has dimension 0 by convention.
pub fn affine_dimension(points: &[ExactPoint]) -> Result<usize, Error> {
    check_uniform_dim(points)?;
    let lat = lattice::to_lattice(points)?;
    Ok(lattice::AffineFrame::new(&lat)?.rank())
}

pub fn brute_facets(points: &[ExactPoint]) -> Result<Vec<OracleFacet>, Error> {
    brute_facets_with(points, OracleCaps::default())
}

pub fn brute_facets_with(points: &[ExactPoint], caps: OracleCaps) -> Result<Vec<OracleFacet>, Error> {
    check_uniform_dim(points)?;
    if points.len() > caps.max_points {
        return Err(Error::CapExceeded(format!(
            "brute_facets on {} points (limit {})",
            points.len(),
            caps.max_points
        )));
    }
    let lat = lattice::to_lattice(points)?;
    let mut facets = relative_facets(&lat, caps)?;
    let out = facets
        .drain(..)
        .map(|(normal, incident)| {
            let witness = &points[*incident.iter().next().expect("facet has points")];
            let rhs = witness
                .coords
                .iter()
                .zip(&normal)
                .map(|(c, &n)| c * BigRational::from_integer(BigInt::from(n)))
                .fold(BigRational::zero(), |a, b| a + b);
            OracleFacet {
                normal,
                rhs,
                incident,
            }
        })
        .collect();
    Ok(out)
}

/// Facets of a lattice point set inside its own affine hull, as
/// `(canonical normal, incident indices)` sorted by normal.
fn relative_facets(lat: &[IVec], caps: OracleCaps) -> Result<Vec<(IVec, BTreeSet<usize>)>, Error> {
    let frame = lattice::AffineFrame::new(lat)?;
    let n = frame.rank();
    if n > caps.max_dim {
        return Err(Error::CapExceeded(format!(
            "brute_facets in dimension {n} (limit {})",
            caps.max_dim
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = lat[0].len();
    let projected: Vec<IVec> = lat
        .iter()
        .map(|p| frame.pivots.iter().map(|&c| p[c]).collect())
        .collect();
    let found = lattice::full_dim_facets(&projected, n)?;
    let mut out = Vec::with_capacity(found.len());
    for f in found {
        let normal = if n == d {
            f.normal
        } else {
            lattice::lift_normal(&frame, &f.normal)?
        };
        out.push((normal, f.incident.into_iter().collect()));
    }
    out.sort();
    Ok(out)
}

/// Incident index sets of the facets of `conv(points[idx])` for a subset
/// `idx`, reported in terms of the original indices.
pub(crate) fn facet_index_sets(
    lat: &[IVec],
    idx: &[usize],
    caps: OracleCaps,
) -> Result<Vec<Vec<usize>>, Error> {
    let sub: Vec<IVec> = idx.iter().map(|&i| lat[i].clone()).collect();
    Ok(relative_facets(&sub, caps)?
        .into_iter()
        .map(|(_, inc)| inc.into_iter().map(|i| idx[i]).collect())
        .collect())
}

pub(crate) fn lattice_points(points: &[ExactPoint]) -> Result<Vec<IVec>, Error> {
    lattice::to_lattice(points)
}

pub(crate) fn lattice_rank(points: &[IVec]) -> Result<usize, Error> {
    Ok(lattice::AffineFrame::new(points)?.rank())
}

/// Vertex pairs spanning an edge, by the minimal-face criterion: the
/// intersection of all facets containing both points must be a face of
/// affine dimension one whose only vertices are the pair.
pub fn brute_edges(points: &[ExactPoint]) -> Result<Vec<(usize, usize)>, Error> {
    brute_edges_with(points, OracleCaps::default())
}

pub fn brute_edges_with(points: &[ExactPoint], caps: OracleCaps) -> Result<Vec<(usize, usize)>, Error> {
    let facets = brute_facets_with(points, caps)?;
    let lat = lattice::to_lattice(points)?;
    let all: BTreeSet<usize> = (0..points.len()).collect();
    let minimal_face = |members: &[usize]| -> BTreeSet<usize> {
        let mut face = all.clone();
        for f in &facets {
            if members.iter().all(|m| f.incident.contains(m)) {
                face = face.intersection(&f.incident).copied().collect();
            }
        }
        face
    };
    let is_vertex: Vec<bool> = (0..points.len())
        .map(|i| {
            let face = minimal_face(&[i]);
            face.iter().all(|&j| lat[j] == lat[i])
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if !is_vertex[i] || !is_vertex[j] || lat[i] == lat[j] {
                continue;
            }
            let face = minimal_face(&[i, j]);
            let pts: Vec<IVec> = face.iter().map(|&k| lat[k].clone()).collect();
            if lattice_rank(&pts)? == 1 {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

/// Indices of the points that are not convex combinations of the others.
/// Repeated points count once: only the first occurrence can be reported.
pub fn extreme_points(points: &[ExactPoint]) -> Result<Vec<usize>, Error> {
    check_uniform_dim(points)?;
    let lat = lattice::to_lattice(points)?;
    let mut first: HashMap<&IVec, usize> = HashMap::new();
    let mut distinct: Vec<usize> = Vec::new();
    for (i, p) in lat.iter().enumerate() {
        first.entry(p).or_insert_with(|| {
            distinct.push(i);
            i
        });
    }
    if distinct.len() <= 2 {
        return Ok(distinct);
    }
    let d = lat[0].len();
    let mut extreme: BTreeSet<usize> = BTreeSet::new();

    // Lexicographic maximum of any face is a vertex, so every direction
    // yields one extreme point for free.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let probes = (4 * distinct.len()).clamp(16, 512);
    for k in 0..probes + 2 * d {
        let dir: IVec = if k < 2 * d {
            (0..d)
                .map(|i| if i == k / 2 { 1 - 2 * (k % 2) as i64 } else { 0 })
                .collect()
        } else {
            (0..d).map(|_| rng.gen_range(-1000..=1000)).collect()
        };
        let mut best: Option<(i64, usize)> = None;
        for &i in &distinct {
            let v = lattice::dot(&dir, &lat[i])?;
            best = match best {
                Some((bv, bi)) if bv > v || (bv == v && lat[bi] >= lat[i]) => Some((bv, bi)),
                _ => Some((v, i)),
            };
        }
        extreme.insert(best.expect("nonempty").1);
    }

    let present: HashSet<&IVec> = distinct.iter().map(|&i| &lat[i]).collect();
    for &i in &distinct {
        if extreme.contains(&i) {
            continue;
        }
        let x = &lat[i];
        // Midpoint of two other points: cheap certificate of non-extremality.
        let midpoint = distinct.iter().any(|&j| {
            j != i && {
                let mirror: IVec = x.iter().zip(&lat[j]).map(|(a, b)| 2 * a - b).collect();
                present.contains(&mirror)
            }
        });
        if midpoint {
            continue;
        }
        let known: Vec<&IVec> = extreme.iter().map(|&j| &lat[j]).collect();
        if lp::in_convex_hull(x, &known)? {
            continue;
        }
        let others: Vec<&IVec> = distinct
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| &lat[j])
            .collect();
        if !lp::in_convex_hull(x, &others)? {
            extreme.insert(i);
        }
    }
    Ok(extreme.into_iter().collect())
}

/// Exact `conv(x)` membership test.
pub fn in_convex_hull(x: &ExactPoint, points: &[ExactPoint]) -> Result<bool, Error> {
    let mut all = points.to_vec();
    all.push(x.clone());
    check_uniform_dim(&all)?;
    let lat = lattice::to_lattice(&all)?;
    let (target, rest) = lat.split_last().expect("nonempty");
    let refs: Vec<&IVec> = rest.iter().collect();
    lp::in_convex_hull(target, &refs)
}

/// `|det(p_1 - p_0, ..., p_n - p_0)| / n!` for `n + 1` points in `R^n`.
pub fn simplex_volume(points: &[ExactPoint]) -> Result<BigRational, Error> {
    let n = check_uniform_dim(points)?;
    if points.len() != n + 1 {
        return Err(Error::Degenerate(format!(
            "simplex volume needs {} points in dimension {n}, got {}",
            n + 1,
            points.len()
        )));
    }
    let origin = &points[0];
    let m: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.coords.iter().zip(&origin.coords).map(|(a, b)| a - b).collect())
        .collect();
    let det = lattice::rational_det(m);
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    Ok(det.abs() / BigRational::from_integer(fact))
}

/// Number of positions `i` with `perm[i] > perm[i + 1]`. The input must be a
/// permutation of `1..=len`.
pub fn descent_count(perm: &[usize]) -> Result<usize, Error> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p == 0 || p > perm.len() || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::InvalidPermutation(format!("{perm:?}")));
        }
    }
    Ok(perm.windows(2).filter(|w| w[0] > w[1]).count())
}

/// Volume of `conv(points)` (full-dimensional) from the barycentric
/// subdivision: one simplex per complete flag of faces, spanned by the face
/// centroids. Independent of any pulling order.
pub fn polytope_volume(points: &[ExactPoint]) -> Result<BigRational, Error> {
    let d = check_uniform_dim(points)?;
    let lat = lattice::to_lattice(points)?;
    if lattice_rank(&lat)? != d {
        return Err(Error::Degenerate("volume of a lower-dimensional set".into()));
    }
    let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    let all: Vec<usize> = (0..points.len()).collect();
    let mut flags: Vec<Vec<Vec<usize>>> = Vec::new();
    collect_flags(&lat, all, d, &mut Vec::new(), &mut flags, &mut memo)?;
    let mut total = BigRational::zero();
    for flag in flags {
        let corners: Vec<ExactPoint> = flag.iter().map(|face| centroid(points, face)).collect();
        total += simplex_volume(&corners)?;
    }
    Ok(total)
}

fn collect_flags(
    lat: &[IVec],
    face: Vec<usize>,
    dim: usize,
    chain: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
    memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>,
) -> Result<(), Error> {
    chain.push(face.clone());
    if dim == 0 {
        out.push(chain.clone());
    } else {
        let facets = match memo.get(&face) {
            Some(f) => f.clone(),
            None => {
                let f = facet_index_sets(lat, &face, OracleCaps::default())?;
                memo.insert(face.clone(), f.clone());
                f
            }
        };
        for f in facets {
            collect_flags(lat, f, dim - 1, chain, out, memo)?;
        }
    }
    chain.pop();
    Ok(())
}

fn centroid(points: &[ExactPoint], idx: &[usize]) -> ExactPoint {
    let d = points[0].dim();
    let k = BigRational::from_integer(BigInt::from(idx.len()));
    let coords = (0..d)
        .map(|c| idx.iter().map(|&i| points[i].coords[c].clone()).sum::<BigRational>() / &k)
        .collect();
    ExactPoint { coords }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<ExactPoint> {
        v.iter().map(|p| ExactPoint::from_ints(p.iter().copied())).collect()
    }

    fn cube(d: usize) -> Vec<ExactPoint> {
        (0..1u64 << d)
            .map(|m| ExactPoint::from_ints((0..d).map(|i| ((m >> i) & 1) as i64)))
            .collect()
    }

    fn halfcube(d: usize) -> Vec<ExactPoint> {
        (0..1u64 << d)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| ExactPoint::from_ints((0..d).map(|i| ((m >> i) & 1) as i64)))
            .collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn affine_dimension_examples() {
        assert_eq!(affine_dimension(&pts(&[&[0, 0, 0], &[1, 1, 1]])).unwrap(), 1);
        assert_eq!(affine_dimension(&halfcube(4)).unwrap(), 4);
        assert_eq!(affine_dimension(&pts(&[&[5, 5]])).unwrap(), 0);
    }

    #[test]
    fn brute_facets_examples() {
        assert_eq!(brute_facets(&cube(3)).unwrap().len(), 6);
        assert_eq!(brute_facets(&halfcube(5)).unwrap().len(), 26);
        let octa = pts(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ]);
        assert_eq!(brute_facets(&octa).unwrap().len(), 8);
    }

    #[test]
    fn brute_facets_respects_caps() {
        let caps = OracleCaps {
            max_points: 7,
            max_dim: 6,
        };
        assert!(matches!(brute_facets_with(&cube(3), caps), Err(Error::CapExceeded(_))));
        let caps = OracleCaps {
            max_points: 40,
            max_dim: 2,
        };
        assert!(matches!(brute_facets_with(&cube(3), caps), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn relative_facets_of_a_triangle_in_space() {
        let tri = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let f = brute_facets(&tri).unwrap();
        assert_eq!(f.len(), 3);
        for facet in &f {
            assert_eq!(facet.normal.iter().sum::<i64>(), 0);
            assert_eq!(facet.incident.len(), 2);
        }
    }

    #[test]
    fn rational_points_keep_their_rhs() {
        let seg = vec![
            ExactPoint::new(vec![rat(1, 2)]),
            ExactPoint::new(vec![rat(3, 4)]),
        ];
        let f = brute_facets(&seg).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].normal, vec![-1]);
        assert_eq!(f[0].rhs, rat(-1, 2));
        assert_eq!(f[1].rhs, rat(3, 4));
    }

    #[test]
    fn brute_edges_examples() {
        assert_eq!(brute_edges(&cube(3)).unwrap().len(), 12);
        assert_eq!(brute_edges(&halfcube(4)).unwrap().len(), 24);
        assert_eq!(brute_edges(&pts(&[&[0, 0], &[1, 1]])).unwrap(), vec![(0, 1)]);
        // Middle point of a segment is not a vertex.
        let seg = pts(&[&[0], &[1], &[2]]);
        assert_eq!(brute_edges(&seg).unwrap(), vec![(0, 2)]);
    }

    #[test]
    fn extreme_points_examples() {
        assert_eq!(extreme_points(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap(), vec![0, 2]);
        let a = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let b = [[1, 1, 0], [1, 0, 1], [0, 1, 1]];
        let sums: Vec<ExactPoint> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| ExactPoint::from_ints((0..3).map(|i| x[i] + y[i]))))
            .collect();
        assert_eq!(extreme_points(&sums).unwrap().len(), 6);
        let dup = pts(&[&[0], &[0], &[3]]);
        assert_eq!(extreme_points(&dup).unwrap(), vec![0, 2]);
    }

    #[test]
    fn extreme_points_of_square_with_interior() {
        let sq = pts(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3], &[1, 2], &[2, 1], &[1, 1]]);
        assert_eq!(extreme_points(&sq).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn simplex_volume_examples() {
        let unit = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(simplex_volume(&unit).unwrap(), rat(1, 6));
        let h3 = pts(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(simplex_volume(&h3).unwrap(), rat(1, 3));
        let flat = pts(&[&[0, 0, 0], &[1, 0, 0], &[2, 0, 0], &[0, 1, 0]]);
        assert_eq!(simplex_volume(&flat).unwrap(), rat(0, 1));
        assert!(simplex_volume(&flat[..3]).is_err());
    }

    #[test]
    fn descent_count_examples() {
        assert_eq!(descent_count(&[1, 2, 3]).unwrap(), 0);
        assert_eq!(descent_count(&[3, 1, 2]).unwrap(), 1);
        assert_eq!(descent_count(&[3, 2, 1]).unwrap(), 2);
        assert!(descent_count(&[1, 1, 2]).is_err());
        assert!(descent_count(&[0, 1]).is_err());
    }

    #[test]
    fn barycentric_volume_matches_known_solids() {
        assert_eq!(polytope_volume(&cube(3)).unwrap(), rat(1, 1));
        assert_eq!(polytope_volume(&halfcube(3)).unwrap(), rat(1, 3));
        let octa = pts(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ]);
        assert_eq!(polytope_volume(&octa).unwrap(), rat(2, 3));
    }
}
