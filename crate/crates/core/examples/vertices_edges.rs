//! Vertices and edges of an S-hypersimplex, with the closed-form counts.
//!
//! cargo run --example vertices_edges

use shyp::{EdgeKind, SHypersimplex};

fn main() -> shyp::Result<()> {
    let p = SHypersimplex::from_parts(4, &[1, 3])?;
    println!("{p}: proper = {}", p.is_proper());
    for v in p.vertices() {
        println!("  vertex {v}");
    }
    let edges = p.edges();
    let chains = edges.iter().filter(|e| e.kind == EdgeKind::Chain).count();
    println!("{} edges ({chains} chain, {} swap), formula says {}", edges.len(), edges.len() - chains, p.edge_count());

    let h4 = SHypersimplex::halfcube(4)?;
    println!("{h4}: {} vertices, {} edges", h4.vertex_count(), h4.edge_count());
    Ok(())
}
