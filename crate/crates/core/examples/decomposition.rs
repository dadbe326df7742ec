//! Cayley decomposition into Δ(d, s_i, s_{i+1}) pieces and layer slices.
//!
//! cargo run --example decomposition

use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    let p = SHypersimplex::from_parts(5, &[0, 2, 4])?;
    let pieces = p.cayley_decomposition()?;
    for piece in &pieces {
        println!("piece {piece}: {} vertices", piece.vertex_count());
    }
    for &s in p.members() {
        println!("slice at {s}: {} vertices", p.slice(s)?.len());
    }
    Ok(())
}
