//! Cross-checks of the closed forms against the brute-force oracle. Each
//! check returns its own [`CheckReport`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::hypersimplex::{CardinalitySet, SHypersimplex};
use crate::oracle::{self, ExactPoint, OracleCaps};
use crate::permutahedra::{self, Permutahedron};
use crate::subset::VertexSubset;
use crate::triangulation::{self, HalfcubeFaces, PullOrder, Triangulation};
use crate::Error;

/// Oracle limits used by the checks; `2^6` points is the largest input.
pub const VERIFY_CAPS: OracleCaps = OracleCaps {
    max_points: 64,
    max_dim: 6,
};

/// Outcome of one named check over one or more cases.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; `ok == false` stores `detail` as a failure.
    pub fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} cases)", self.name, self.cases)?;
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for x in &self.failures {
            write!(f, "\n  mismatch: {x}")?;
        }
        Ok(())
    }
}

/// Every proper `Δ(d, S)`, ordered by the bitmask of `S`.
pub fn proper_sets(d: usize) -> Result<Vec<SHypersimplex>, Error> {
    if d == 0 || d > 20 {
        return Err(Error::OutOfRange(format!("enumerating all S needs 1 <= d <= 20, got {d}")));
    }
    let mut out = Vec::new();
    for mask in 1u32..1 << (d + 1) {
        let members: Vec<usize> = (0..=d).filter(|s| mask >> s & 1 == 1).collect();
        let cs = CardinalitySet::new(d, &members)?;
        if cs.is_proper() {
            out.push(SHypersimplex::new(cs));
        }
    }
    Ok(out)
}

fn points(vertices: &[VertexSubset]) -> Vec<ExactPoint> {
    vertices.iter().map(|v| ExactPoint::from_ints(v.indicator())).collect()
}

/// `edges(P)` against the minimal-face edges of the oracle, and
/// `edge_count` against both.
pub fn verify_edges(p: &SHypersimplex) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("edges {}", p.card_set()));
    let verts = p.vertices();
    let formula: BTreeSet<(VertexSubset, VertexSubset)> = p.edges().iter().map(|e| (e.a, e.b)).collect();
    let brute: BTreeSet<(VertexSubset, VertexSubset)> = oracle::brute_edges_with(&points(&verts), VERIFY_CAPS)?
        .into_iter()
        .map(|(i, j)| (verts[i].min(verts[j]), verts[i].max(verts[j])))
        .collect();
    r.case(formula == brute, || {
        let missing: Vec<_> = brute.difference(&formula).take(3).collect();
        let extra: Vec<_> = formula.difference(&brute).take(3).collect();
        format!("{}: missing {missing:?}, extra {extra:?}", p.card_set())
    });
    let count = p.edge_count();
    r.case(count == formula.len() as u128 && count == brute.len() as u128, || {
        format!("{}: count {count}, listed {}, oracle {}", p.card_set(), formula.len(), brute.len())
    });
    Ok(r)
}

/// `facets(P)` against the oracle's outward primitive facet normals.
pub fn verify_facets(p: &SHypersimplex) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("facets {}", p.card_set()));
    let formula: BTreeSet<(Vec<i64>, BigRational)> = p
        .facets()?
        .into_iter()
        .map(|f| (f.normal, BigRational::from_integer(BigInt::from(f.rhs))))
        .collect();
    let brute: BTreeSet<(Vec<i64>, BigRational)> = oracle::brute_facets_with(&points(&p.vertices()), VERIFY_CAPS)?
        .into_iter()
        .map(|f| (f.normal, f.rhs))
        .collect();
    r.case(formula == brute, || {
        let missing: Vec<_> = brute.difference(&formula).map(|f| &f.0).take(3).collect();
        let extra: Vec<_> = formula.difference(&brute).map(|f| &f.0).take(3).collect();
        format!("{}: missing {missing:?}, extra {extra:?}", p.card_set())
    });
    let count = p.facet_count()?;
    r.case(count == brute.len() as u128, || {
        format!("{}: facet_count {count}, oracle {}", p.card_set(), brute.len())
    });
    Ok(r)
}

/// For `s ∈ S` the section `P ∩ {<1, x> = s}` has exactly the layer-`s`
/// vertices: no oracle edge crosses the hyperplane strictly, and `slice(s)`
/// lists that layer. The Cayley pieces must cover all vertices.
pub fn verify_slices(p: &SHypersimplex) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("slices {}", p.card_set()));
    let verts = p.vertices();
    let edges = oracle::brute_edges_with(&points(&verts), VERIFY_CAPS)?;
    for &s in p.members() {
        let crossing = edges.iter().find(|&&(i, j)| {
            let (a, b) = (verts[i].len().min(verts[j].len()), verts[i].len().max(verts[j].len()));
            a < s && s < b
        });
        r.case(crossing.is_none(), || format!("{}: edge {crossing:?} crosses layer {s}", p.card_set()));
        let slice = p.slice(s)?;
        let layer: Vec<VertexSubset> = verts.iter().copied().filter(|v| v.len() == s).collect();
        r.case(slice == layer, || format!("{}: slice({s}) differs from layer", p.card_set()));
    }
    if p.members().len() >= 2 {
        let mut covered: Vec<VertexSubset> = p
            .cayley_decomposition()?
            .iter()
            .flat_map(|q| q.vertices())
            .collect();
        covered.sort();
        covered.dedup();
        let mut all = verts.clone();
        all.sort();
        r.case(covered == all, || format!("{}: Cayley pieces miss vertices", p.card_set()));
    }
    Ok(r)
}

/// Facets of `Π(p)` against the oracle inside the affine hull `H(Σp)`.
pub fn verify_perm_facets(pi: &Permutahedron) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("permutahedron facets {pi}"));
    let formula: BTreeSet<(Vec<i64>, BigRational)> = pi
        .facets()?
        .into_iter()
        .map(|f| (f.normal, BigRational::from_integer(BigInt::from(f.rhs))))
        .collect();
    let pts: Vec<ExactPoint> = pi.vertices().into_iter().map(ExactPoint::from_ints).collect();
    let brute: BTreeSet<(Vec<i64>, BigRational)> = oracle::brute_facets_with(&pts, VERIFY_CAPS)?
        .into_iter()
        .map(|f| (f.normal, f.rhs))
        .collect();
    r.case(formula == brute, || {
        format!("{pi}: formula {} facets, oracle {}", formula.len(), brute.len())
    });
    Ok(r)
}

/// All weakly decreasing vectors of length `d` with entries in `0..=max`.
pub fn decreasing_vectors(d: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(d: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            rec(d, x, cur, out);
            cur.pop();
        }
    }
    rec(d, max, &mut Vec::new(), &mut out);
    out
}

/// `Π(p) + Π(q) = Π(p + q)` on vertex sets, for all decreasing `p, q` of
/// length `d` with entries in `0..=max`.
pub fn verify_minkowski(d: usize, max: i64) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("minkowski d={d} entries<={max}"));
    let vecs = decreasing_vectors(d, max);
    for (i, p) in vecs.iter().enumerate() {
        for q in &vecs[i..] {
            let pp = Permutahedron::new(p.clone())?;
            let qq = Permutahedron::new(q.clone())?;
            let extremes = permutahedra::minkowski_cloud_extremes(&pp, &qq)?;
            let mut predicted = pp.minkowski(&qq)?.vertices();
            predicted.sort();
            r.case(extremes == predicted, || format!("Π{p:?} + Π{q:?}"));
        }
    }
    Ok(r)
}

/// Slice-sum fiber formula and the coherence certificate of every path.
pub fn verify_fiber(p: &SHypersimplex, max_d: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("fiber {}", p.card_set()));
    let check = permutahedra::fiber_formula_check_capped(p, max_d)?;
    r.case(check.passed(), || {
        format!(
            "{}: {} extreme points, predicted {}, {} paths",
            p.card_set(),
            check.extreme.len(),
            check.predicted.len(),
            check.path_count
        )
    });
    let paths = permutahedra::monotone_paths(p);
    r.case(paths.len() as u128 == permutahedra::monotone_path_count(p), || {
        format!("{}: {} paths enumerated", p.card_set(), paths.len())
    });
    for w in &paths {
        let cert = permutahedra::coherence_certificate(p, w);
        r.case(cert.is_ok(), || format!("{}: path {w} not certified: {cert:?}", p.card_set()));
    }
    Ok(r)
}

/// `t(d)` from the closed form, the recurrence and the `(τ, B)` count, and
/// for `d ≤ 6` from pulling `H_d` under `orders` seeded orders with both
/// the oracle and the structural face lattice.
pub fn verify_tdcount(d: usize, orders: u64) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("t({d})"));
    let closed = triangulation::halfcube_pull_count(d)?;
    let rec = triangulation::halfcube_pull_recurrence(d)?;
    r.case(closed == rec, || format!("closed form {closed} vs recurrence {rec}"));
    if (3..=8).contains(&d) {
        let pairs = triangulation::enumerate_tau_b_pairs(d)?.len() as u128;
        r.case(pairs == closed, || format!("{pairs} (τ, B) pairs vs t({d}) = {closed}"));
    }
    if (3..=6).contains(&d) {
        let h = SHypersimplex::halfcube(d)?;
        let n = h.vertices().len();
        let mut oracle_faces = triangulation::hypersimplex_faces(&h)?;
        let mut structural = (d >= 4).then(|| HalfcubeFaces::new(d)).transpose()?;
        let mut volumes = BTreeSet::new();
        for seed in 0..orders {
            let order = PullOrder::random(n, seed);
            let t = triangulation::triangulate_with(&h, &mut oracle_faces, &order)?;
            r.case(t.len() as u128 == closed, || format!("seed {seed}: {} simplices", t.len()));
            if let Some(faces) = structural.as_mut() {
                let s = triangulation::triangulate_with(&h, faces, &order)?;
                r.case(s == t, || format!("seed {seed}: structural and oracle pulls differ"));
            }
            volumes.extend(t.normalized_volumes()?);
        }
        r.notes.push(format!("seeds 0..{orders}; normalized simplex volumes seen {volumes:?}"));
    }
    Ok(r)
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).map(BigInt::from).product())
}

/// Permutations of `[d]` by descent number, counted by brute force.
pub fn descent_histogram(d: usize) -> Result<Vec<u128>, Error> {
    let mut hist = vec![0u128; d.max(1)];
    let mut perm: Vec<usize> = (1..=d).collect();
    loop {
        hist[oracle::descent_count(&perm)?] += 1;
        // Next permutation in lexicographic order.
        let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("pivot exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    Ok(hist)
}

/// Simplices pairwise interior-disjoint (tested at rational barycenters)
/// and volumes summing to the oracle's volume of the polytope.
pub fn verify_partition(t: &Triangulation) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("partition {}", t.ambient.card_set()));
    let simplices: Vec<Vec<ExactPoint>> = t.simplices.iter().map(|s| points(s)).collect();
    let d = t.ambient.d();
    for (i, s) in simplices.iter().enumerate() {
        let mut bary = vec![BigRational::zero(); d];
        for v in s {
            for (b, c) in bary.iter_mut().zip(&v.coords) {
                *b += c;
            }
        }
        let scale = BigRational::from_integer(BigInt::from(d + 1));
        let bary = ExactPoint::new(bary.into_iter().map(|x| x / &scale).collect());
        for (j, other) in simplices.iter().enumerate() {
            if i != j {
                let inside = oracle::in_convex_hull(&bary, other)?;
                r.case(!inside, || format!("barycenter of simplex {i} lies in simplex {j}"));
            }
        }
    }
    let total = triangulation::triangulation_volume(t)?;
    let brute = oracle::polytope_volume(&points(&t.ambient.vertices()))?;
    r.case(total == brute, || format!("simplex volumes sum to {total}, oracle volume {brute}"));
    Ok(r)
}

/// `d!·vol Δ(d, i, i+1) = A(d, i)` with `A` also counted by brute force,
/// the range identity over `[k, l - 1]`, and for `d ≤ 4` the partition check.
pub fn verify_volumes(d: usize) -> Result<CheckReport, Error> {
    let mut r = CheckReport::new(format!("volumes d={d}"));
    let hist = descent_histogram(d)?;
    for (i, &count) in hist.iter().enumerate().take(d) {
        let a = triangulation::eulerian(d, i)?;
        r.case(a == count, || format!("A({d},{i}) = {a} but {count} permutations have {i} descents"));
    }
    for k in 0..d {
        for l in k + 1..=d {
            let p = SHypersimplex::from_parts(d, &(k..=l).collect::<Vec<_>>())?;
            let t = triangulation::triangulate(&p, &PullOrder::lex(p.vertices().len()))?;
            let normalized = triangulation::triangulation_volume(&t)? * factorial(d);
            let want: u128 = hist[k..l].iter().sum();
            r.case(normalized == BigRational::from_integer(BigInt::from(want)), || {
                format!("d!·vol Δ({d},[{k},{l}]) = {normalized}, descents in [{k},{}] give {want}", l - 1)
            });
            if d <= 4 {
                r.merge(verify_partition(&t)?);
            }
        }
    }
    Ok(r)
}

/// Every check that makes sense for one `Δ(d, S)`.
pub fn verify_instance(p: &SHypersimplex, oracle_max_d: usize) -> Result<Vec<CheckReport>, Error> {
    if p.d() > oracle_max_d {
        return Err(Error::CapExceeded(format!("oracle checks at d = {} (limit {oracle_max_d})", p.d())));
    }
    let mut out = Vec::new();
    if p.is_proper() && p.d() >= 2 {
        out.push(verify_edges(p)?);
        out.push(verify_facets(p)?);
        out.push(verify_slices(p)?);
    }
    out.push(verify_fiber(p, oracle_max_d)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_set_counts() {
        // {0,1}, {1,2} and {0,1,2}.
        assert_eq!(proper_sets(2).unwrap().len(), 3);
        assert!(proper_sets(4).unwrap().iter().all(SHypersimplex::is_proper));
    }

    #[test]
    fn small_instances_verify() {
        for p in proper_sets(3).unwrap() {
            for rep in verify_instance(&p, 5).unwrap() {
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn descent_histogram_is_eulerian() {
        assert_eq!(descent_histogram(4).unwrap(), vec![1, 11, 11, 1]);
        assert_eq!(descent_histogram(1).unwrap(), vec![1]);
    }

    #[test]
    fn decreasing_vector_count() {
        // Multisets of size 3 from 4 values.
        assert_eq!(decreasing_vectors(3, 3).len(), 20);
    }

    #[test]
    fn checks_report_failures() {
        let mut r = CheckReport::new("x");
        r.case(true, String::new);
        r.case(false, || "bad".into());
        assert!(!r.passed());
        assert!(r.to_string().starts_with("FAIL x (2 cases)"));
    }
}
