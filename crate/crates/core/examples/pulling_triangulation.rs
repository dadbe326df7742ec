//! Pulling triangulations of halfcubes: the simplex count t(d) does not
//! depend on the order, and equals the number of (τ, B) pairs.
//!
//! cargo run --release --example pulling_triangulation

use std::collections::BTreeSet;

use shyp::triangulation::{
    enumerate_tau_b_pairs, halfcube_pull_count, hypersimplex_faces, triangulate_with, PullOrder,
};
use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    for d in 3..=6 {
        let h = SHypersimplex::halfcube(d)?;
        let n = h.vertices().len();
        let mut faces = hypersimplex_faces(&h)?;
        let mut sizes = BTreeSet::new();
        let mut volumes = BTreeSet::new();
        for seed in 0..10 {
            let t = triangulate_with(&h, &mut faces, &PullOrder::random(n, seed))?;
            sizes.insert(t.len());
            volumes.extend(t.normalized_volumes()?);
        }
        println!(
            "H_{d}: simplex counts {sizes:?}, t(d) = {}, (τ, B) pairs = {}, d!·vol of simplices {volumes:?}",
            halfcube_pull_count(d)?,
            enumerate_tau_b_pairs(d)?.len()
        );
    }
    Ok(())
}
