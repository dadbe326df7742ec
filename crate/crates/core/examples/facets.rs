//! The facet families of Δ(d, S) with their kinds and witnesses.
//!
//! cargo run --example facets

use shyp::{FacetKind, SHypersimplex};

fn main() -> shyp::Result<()> {
    for (d, s) in [(3, vec![1, 2]), (5, vec![0, 2, 4]), (5, vec![0, 3])] {
        let p = SHypersimplex::from_parts(d, &s)?;
        let facets = p.facets()?;
        println!("{p}: {} facets (closed form {})", facets.len(), p.facet_count()?);
        for f in facets.iter().take(6) {
            let witness = match f.kind {
                FacetKind::CoordUp(i) | FacetKind::CoordDown(i) => format!("i = {i}"),
                FacetKind::Join { set, h } => format!("I = {set}, h = {h}"),
                _ => String::new(),
            };
            println!("  ({:>3}) {:?} . x <= {}  {witness}", f.kind.tag(), f.normal, f.rhs);
        }
    }
    Ok(())
}
