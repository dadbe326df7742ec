//! Exact volumes from pulling triangulations and the Eulerian numbers.
//!
//! cargo run --release --example volumes

use shyp::triangulation::{eulerian, triangulate, triangulation_volume, volume_identity, PullOrder};
use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    let d = 5;
    for i in 0..d {
        let p = SHypersimplex::from_parts(d, &[i, i + 1])?;
        let t = triangulate(&p, &PullOrder::lex(p.vertices().len()))?;
        println!("vol {p} = {}, A({d},{i}) = {}", triangulation_volume(&t)?, eulerian(d, i)?);
    }
    // Δ(d, [k, l]) stacks the pieces Δ(d, i, i+1) for i = k, ..., l - 1.
    let v = volume_identity(5, 1, 3)?;
    println!("5!·vol Δ(5,[1,3]) = {}, A(5,1) + A(5,2) = {}", v.normalized_volume, v.eulerian_sum);
    Ok(())
}
