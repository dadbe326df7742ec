//! Monotone paths, their coherence certificates and the monotone path
//! polytope, checked against the slice-sum fiber construction.
//!
//! cargo run --example monotone_paths

use shyp::permutahedra::{coherence_certificate, fiber_formula_check, monotone_path_polytope, monotone_paths};
use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    let h4 = SHypersimplex::halfcube(4)?;
    for path in monotone_paths(&h4) {
        println!("{path}  certificate {:?}", coherence_certificate(&h4, &path)?);
    }
    println!("monotone path polytope: {}", monotone_path_polytope(&h4));
    let check = fiber_formula_check(&h4)?;
    println!(
        "fiber check: {} cloud points, {} extreme, {} predicted, passed = {}",
        check.cloud_size,
        check.extreme.len(),
        check.predicted.len(),
        check.passed()
    );
    Ok(())
}
