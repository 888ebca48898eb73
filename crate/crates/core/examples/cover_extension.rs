//! Extending a minimal cover of an induced partial hypergraph to the whole
//! hypergraph, and recovering a cover from bouquet flowers.

use bouquet_kit::bouquets::{construct_bouquets_from_cover, extend_flowers_to_cover};
use bouquet_kit::covers::{enumerate_minimal_covers, extend_cover};
use bouquet_kit::fixtures::figure_three;
use bouquet_kit::Limits;

fn main() -> bouquet_kit::Result<()> {
    let h = figure_three();
    let u = h.vertex_set(["a", "b", "c"])?;
    let k = h.partial_on_vertices(&u)?;
    println!("partial hypergraph on {:?}: {:?}", h.labels_of(&u), k.raw_edges());
    for c in enumerate_minimal_covers(&k, &Limits::default())? {
        let c = k.translate(&c.set(), &h)?;
        let ext = extend_cover(&h, &u, &c)?;
        println!("  {:?} extends to {:?}", h.labels_of(&c), h.labels_of(&ext.set()));
    }

    let c = h.vertex_set(["b", "d", "f"])?;
    let s = construct_bouquets_from_cover(&h, &c)?;
    let back = extend_flowers_to_cover(&h, &s)?;
    println!("{} bouquets from {:?}, flowers extend back to {:?}", s.bouquets.len(), h.labels_of(&c), h.labels_of(&back.set()));
    Ok(())
}
