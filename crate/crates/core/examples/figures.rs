//! The two six-vertex graphs: two disjoint paths, and the same paths joined
//! by a bridge. Adding the bridge lowers the largest minimal cover from 4 to
//! 3, so a cover of an edge-subset partial hypergraph need not extend.

use bouquet_kit::bouquets::construct_bouquets_from_cover;
use bouquet_kit::covers::{alpha0_prime, enumerate_minimal_covers};
use bouquet_kit::fixtures::{figure_three, figure_two};
use bouquet_kit::Limits;

fn main() -> bouquet_kit::Result<()> {
    let limits = Limits::default();
    let k = figure_two();
    let h = figure_three();

    for (name, g) in [("K", &k), ("H", &h)] {
        let (alpha, witness) = alpha0_prime(g, &limits)?;
        let bouquets = construct_bouquets_from_cover(g, &witness.set())?;
        println!("{name}: alpha0' = {alpha}, witness {:?}", g.labels_of(&witness.set()));
        for b in &bouquets.bouquets {
            let edges: Vec<_> = b.edge_indices.iter().map(|&i| g.labels_of(&g.edges()[i])).collect();
            println!("  bouquet {edges:?} flowers {:?}", g.labels_of(&b.flower_set()));
        }
    }

    let (_, wk) = alpha0_prime(&k, &limits)?;
    let c = k.translate(&wk.set(), &h)?;
    let extends = enumerate_minimal_covers(&h, &limits)?.iter().any(|d| c.is_subset(&d.set()));
    println!("{:?} lies in a minimal cover of H: {extends}", h.labels_of(&c));
    Ok(())
}
