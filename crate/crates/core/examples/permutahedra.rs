//! Permutahedra: vertices, facets and the Minkowski identity, with the
//! identity confirmed by extreme points of the sum cloud.
//!
//! cargo run --example permutahedra

use shyp::permutahedra::{minkowski_cloud_extremes, perm_minkowski};
use shyp::Permutahedron;

fn main() -> shyp::Result<()> {
    let p = Permutahedron::new(vec![1, 0, 0])?;
    let q = Permutahedron::new(vec![1, 1, 0])?;
    let sum = perm_minkowski(&p, &q)?;
    println!("{p} + {q} = {sum} with {} vertices", sum.vertex_count());
    let mut predicted = sum.vertices();
    predicted.sort();
    println!("extreme points of the sum cloud agree: {}", minkowski_cloud_extremes(&p, &q)? == predicted);

    let pi = Permutahedron::new(vec![2, 2, 1, 1])?;
    for f in pi.facets()? {
        println!("  I = {}: {:?} . x <= {}", f.set, f.normal, f.rhs);
    }
    Ok(())
}
