//! The brute-force oracle recomputes facets and edges from the vertex
//! coordinates alone; the verify module compares them with the theorems.
//!
//! cargo run --release --example oracle_crosscheck

use shyp::oracle::{brute_edges, brute_facets, ExactPoint};
use shyp::verify::{proper_sets, verify_edges, verify_facets};
use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    let octahedron = SHypersimplex::from_parts(3, &[1, 2])?;
    let pts: Vec<ExactPoint> = octahedron.vertices().iter().map(|v| ExactPoint::from_ints(v.indicator())).collect();
    println!("{octahedron}: oracle finds {} facets, {} edges", brute_facets(&pts)?.len(), brute_edges(&pts)?.len());

    let mut agree = 0;
    let sets = proper_sets(4)?;
    for p in &sets {
        if verify_edges(p)?.passed() && verify_facets(p)?.passed() {
            agree += 1;
        }
    }
    println!("d = 4: theorems agree with the oracle on {agree} of {} proper S", sets.len());
    Ok(())
}
