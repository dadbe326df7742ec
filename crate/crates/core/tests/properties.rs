//! Structural invariants of the closed forms, checked by enumeration and
//! against the oracle on small instances.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use shyp::oracle::{self, ExactPoint};
use shyp::permutahedra::{self, Permutahedron};
use shyp::triangulation::{self, FaceLattice, HalfcubeFaces, PullOrder};
use shyp::verify::{self, proper_sets};
use shyp::{CardinalitySet, SHypersimplex, VertexSubset};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn points(vs: &[VertexSubset]) -> Vec<ExactPoint> {
    vs.iter().map(|v| ExactPoint::from_ints(v.indicator())).collect()
}

fn assert_all(reports: impl IntoIterator<Item = verify::CheckReport>) {
    for r in reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn edges_facets_slices_match_oracle_up_to_d4() {
    for d in 2..=4 {
        for p in proper_sets(d).unwrap() {
            assert_all([
                verify::verify_edges(&p).unwrap(),
                verify::verify_facets(&p).unwrap(),
                verify::verify_slices(&p).unwrap(),
            ]);
        }
    }
}

#[test]
fn counts_match_enumerations_up_to_d8() {
    for d in 1..=8 {
        for p in proper_sets(d).unwrap() {
            assert_eq!(p.vertices().len() as u128, p.vertex_count(), "{p}");
            assert_eq!(p.edges().len() as u128, p.edge_count(), "{p}");
            if d >= 2 {
                assert_eq!(p.facets().unwrap().len() as u128, p.facet_count().unwrap(), "{p}");
            }
        }
    }
}

#[test]
fn coordinate_facets_recurse_to_plus_and_minus() {
    for d in 2..=6 {
        for p in proper_sets(d).unwrap() {
            let cs = p.card_set();
            for i in 1..=d {
                let mut up = vec![0; d];
                up[i - 1] = 1;
                let down: Vec<i64> = up.iter().map(|x| -x).collect();
                // Drop coordinate i; on the x_i = 1 face also lower every cardinality.
                let drop = |v: &VertexSubset| -> u64 {
                    let b = v.bits();
                    let low = b & ((1 << (i - 1)) - 1);
                    low | ((b >> i) << (i - 1))
                };
                if let Some(plus) = cs.plus() {
                    let face: BTreeSet<u64> = p.face_in_direction(&up).unwrap().iter().map(drop).collect();
                    let want: BTreeSet<u64> = SHypersimplex::new(plus).vertices().iter().map(|v| v.bits()).collect();
                    assert_eq!(face, want, "{p} e_{i}");
                }
                if let Some(minus) = cs.minus() {
                    let face: BTreeSet<u64> = p.face_in_direction(&down).unwrap().iter().map(drop).collect();
                    let want: BTreeSet<u64> = SHypersimplex::new(minus).vertices().iter().map(|v| v.bits()).collect();
                    assert_eq!(face, want, "{p} -e_{i}");
                }
            }
        }
    }
}

fn proper_instance() -> impl Strategy<Value = (SHypersimplex, Vec<usize>)> {
    (2usize..=7)
        .prop_flat_map(|d| (Just(d), 1u32..(1 << (d + 1)), Just((1..=d).collect::<Vec<_>>()).prop_shuffle()))
        .prop_filter_map("proper S", |(d, mask, perm)| {
            let members: Vec<usize> = (0..=d).filter(|s| mask >> s & 1 == 1).collect();
            let cs = CardinalitySet::new(d, &members).ok()?;
            cs.is_proper().then(|| (SHypersimplex::new(cs), perm))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_faces((p, perm) in proper_instance()) {
        let verts: BTreeSet<VertexSubset> = p.vertices().into_iter().collect();
        let moved: BTreeSet<VertexSubset> = verts.iter().map(|v| v.permuted(&perm)).collect();
        prop_assert_eq!(&verts, &moved);

        let edges: BTreeSet<(VertexSubset, VertexSubset)> = p.edges().iter().map(|e| (e.a, e.b)).collect();
        for &(a, b) in &edges {
            let (x, y) = (a.permuted(&perm), b.permuted(&perm));
            prop_assert!(edges.contains(&(x.min(y), x.max(y))));
            prop_assert!(p.is_edge(&x, &y).unwrap().is_some());
        }

        let facets: BTreeSet<(Vec<i64>, i64)> = p.facets().unwrap().into_iter().map(|f| (f.normal, f.rhs)).collect();
        for (normal, rhs) in &facets {
            let mut moved = vec![0; normal.len()];
            for (i, &c) in normal.iter().enumerate() {
                moved[perm[i] - 1] = c;
            }
            prop_assert!(facets.contains(&(moved, *rhs)));
        }
    }

    #[test]
    fn facets_are_tight_on_a_spanning_vertex_set((p, _perm) in proper_instance()) {
        let verts = p.vertices();
        for f in p.facets().unwrap() {
            let tight: Vec<VertexSubset> = verts.iter().copied().filter(|v| v.dot(&f.normal) == f.rhs).collect();
            prop_assert!(verts.iter().all(|v| v.dot(&f.normal) <= f.rhs));
            prop_assert_eq!(oracle::affine_dimension(&points(&tight)).unwrap(), p.d() - 1);
        }
    }
}

#[test]
fn permutahedron_facets_match_oracle_up_to_d5() {
    for d in 2..=5 {
        for v in verify::decreasing_vectors(d, 2) {
            let pi = Permutahedron::new(v).unwrap();
            if pi.is_point() {
                assert!(pi.facets().is_err());
                continue;
            }
            let r = verify::verify_perm_facets(&pi).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn permutahedron_vertices_are_extreme() {
    for p in [vec![3, 1, 0], vec![2, 2, 1, 0], vec![2, 1, 1, 0]] {
        let pi = Permutahedron::new(p).unwrap();
        let pts: Vec<ExactPoint> = pi.vertices().into_iter().map(ExactPoint::from_ints).collect();
        assert_eq!(oracle::extreme_points(&pts).unwrap().len(), pts.len());
    }
}

fn multinomial(d: usize, parts: &[usize]) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    parts.iter().fold(fact(d), |acc, &k| acc / fact(k))
}

#[test]
fn path_counts_are_multinomials_up_to_d8() {
    for d in 1..=8 {
        for p in proper_sets(d).unwrap() {
            let mut layers = vec![0];
            layers.extend(p.members().iter().copied().filter(|&s| s > 0 && s < d));
            layers.push(d);
            let parts: Vec<usize> = layers.windows(2).map(|w| w[1] - w[0]).collect();
            let want = multinomial(d, &parts);
            assert_eq!(permutahedra::monotone_path_count(&p), want, "{p}");
            if want <= 50_000 {
                assert_eq!(permutahedra::monotone_paths(&p).len() as u128, want, "{p}");
            }
        }
    }
}

#[test]
fn cube_mpp_has_factorial_vertices() {
    for d in 1..=7 {
        let cube = SHypersimplex::cube(d).unwrap();
        let pi = permutahedra::monotone_path_polytope(&cube);
        let want: Vec<i64> = (1..=d as i64).rev().collect();
        assert_eq!(pi.p(), want.as_slice());
        assert_eq!(pi.vertex_count(), (1..=d as u128).product::<u128>());
        assert_eq!(pi.vertex_count(), permutahedra::monotone_path_count(&cube));
    }
}

#[test]
fn oracle_facets_ignore_point_order_and_relabeling() {
    let h4 = SHypersimplex::halfcube(4).unwrap();
    let pts = points(&h4.vertices());
    let key = |pts: &[ExactPoint]| -> BTreeSet<(Vec<i64>, BigRational)> {
        oracle::brute_facets(pts).unwrap().into_iter().map(|f| (f.normal, f.rhs)).collect()
    };
    let base = key(&pts);
    let mut reversed = pts.clone();
    reversed.reverse();
    assert_eq!(key(&reversed), base);
    // Swap the first two coordinates: normals swap accordingly.
    let swapped: Vec<ExactPoint> = pts
        .iter()
        .map(|p| {
            let mut c = p.coords.clone();
            c.swap(0, 1);
            ExactPoint::new(c)
        })
        .collect();
    let moved: BTreeSet<(Vec<i64>, BigRational)> = base
        .iter()
        .map(|(n, r)| {
            let mut n = n.clone();
            n.swap(0, 1);
            (n, r.clone())
        })
        .collect();
    assert_eq!(key(&swapped), moved);
}

#[test]
fn simplex_volume_is_symmetric_and_scales() {
    let base: Vec<Vec<i64>> = vec![vec![0, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
    let vol = |rows: &[Vec<i64>]| oracle::simplex_volume(&rows.iter().cloned().map(ExactPoint::from_ints).collect::<Vec<_>>()).unwrap();
    let v = vol(&base);
    assert_eq!(v, rat(1, 3));
    let mut shuffled = base.clone();
    shuffled.rotate_left(2);
    assert_eq!(vol(&shuffled), v);
    let scaled: Vec<Vec<i64>> = base.iter().map(|r| r.iter().map(|x| -3 * x).collect()).collect();
    assert_eq!(vol(&scaled), v * BigRational::from_integer(BigInt::from(27)));
}

#[test]
fn structural_halfcube_faces_match_oracle() {
    for d in 4..=6 {
        let h = SHypersimplex::halfcube(d).unwrap();
        let mut oracle_faces = triangulation::hypersimplex_faces(&h).unwrap();
        let mut structural = HalfcubeFaces::new(d).unwrap();
        let all: Vec<usize> = (0..h.vertices().len()).collect();
        let sorted = |mut f: Vec<Vec<usize>>| {
            f.sort();
            f
        };
        let top = structural.facets(&all, d).unwrap();
        assert_eq!(top, sorted(oracle_faces.facets(&all, d).unwrap()));
        assert_eq!(top.len(), 2 * d + (1 << (d - 1)));
        // One level down on a halfcube facet x_i = δ.
        for f in top.iter().filter(|f| f.len() == 1 << (d - 2)) {
            if d > 4 {
                assert_eq!(structural.facets(f, d - 1).unwrap(), sorted(oracle_faces.facets(f, d - 1).unwrap()));
            }
        }
    }
}

#[test]
fn pulling_triangulations_partition_small_polytopes() {
    for d in 2..=4 {
        for p in proper_sets(d).unwrap() {
            let n = p.vertices().len();
            for seed in 0..2 {
                let t = triangulation::triangulate(&p, &PullOrder::random(n, seed)).unwrap();
                let r = verify::verify_partition(&t).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
    }
}

#[test]
fn h5_pulls_use_unequal_volumes() {
    let h5 = SHypersimplex::halfcube(5).unwrap();
    let t = triangulation::triangulate(&h5, &PullOrder::lex(16)).unwrap();
    let vols: BTreeSet<u128> = t.normalized_volumes().unwrap().into_iter().collect();
    assert!(vols.len() >= 2, "{vols:?}");
}

#[test]
fn pulled_volume_is_order_independent() {
    for p in proper_sets(4).unwrap() {
        let n = p.vertices().len();
        let mut faces = triangulation::hypersimplex_faces(&p).unwrap();
        let mut volumes = BTreeSet::new();
        for seed in 0..6 {
            let t = triangulation::triangulate_with(&p, &mut faces, &PullOrder::random(n, seed)).unwrap();
            volumes.insert(triangulation::triangulation_volume(&t).unwrap());
        }
        assert_eq!(volumes.len(), 1, "{p}");
    }
}

#[test]
fn tau_b_pairs_are_distinct() {
    for d in 3..=7 {
        let pairs = triangulation::enumerate_tau_b_pairs(d).unwrap();
        let set: std::collections::HashSet<_> = pairs.iter().cloned().collect();
        assert_eq!(set.len(), pairs.len());
    }
}

#[test]
fn pulling_rejects_bad_input() {
    let line = vec![ExactPoint::from_ints([0, 0]), ExactPoint::from_ints([1, 1]), ExactPoint::from_ints([2, 2])];
    assert!(triangulation::pulling_triangulation(&line, &PullOrder::lex(3)).is_err());
    let sq: Vec<ExactPoint> = [[0, 0], [1, 0], [0, 1], [1, 1]].into_iter().map(ExactPoint::from_ints).collect();
    assert_eq!(triangulation::pulling_triangulation(&sq, &PullOrder::lex(4)).unwrap().len(), 2);
    assert!(triangulation::pulling_triangulation(&sq, &PullOrder::lex(3)).is_err());
    let improper = SHypersimplex::from_parts(3, &[0, 3]).unwrap();
    assert!(triangulation::triangulate(&improper, &PullOrder::lex(2)).is_err());
}
