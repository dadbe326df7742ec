//! The extension bound 2d(|S| - 1) from the Cayley decomposition, next to
//! the facet count.
//!
//! cargo run --example extension_bound

use shyp::SHypersimplex;

fn main() -> shyp::Result<()> {
    for d in 3..=10 {
        let h = SHypersimplex::halfcube(d)?;
        let (bound, facets) = (h.extension_upper_bound()?, h.facet_count()?);
        println!("H_{d}: extension bound {bound:>3}, facets {facets:>4}");
    }
    Ok(())
}
