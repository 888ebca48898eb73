//! Largest minimal cover against the exhaustive bouquet search on seeded
//! random hypergraphs.

use bouquet_kit::bouquets::{verify_duality, DualityMode};
use bouquet_kit::generate::generate_random_hypergraph;
use bouquet_kit::Limits;

fn main() -> bouquet_kit::Result<()> {
    let limits = Limits::default();
    let mut agree = 0;
    for seed in 0..40 {
        let h = generate_random_hypergraph(7, 6, 2, 3, seed)?;
        let r = verify_duality(&h, DualityMode::Exact, &limits)?;
        agree += usize::from(r.equal);
        if seed < 5 {
            println!("seed {seed}: {} edges, alpha0' = {}, d' = {}", h.num_edges(), r.alpha, r.d_prime);
            let s = r.search_witness.expect("exact mode returns the search maximizer");
            for b in &s.bouquets {
                let edges: Vec<_> = b.edge_indices.iter().map(|&i| h.labels_of(&h.edges()[i])).collect();
                println!("    {edges:?} flowers {:?}", h.labels_of(&b.flower_set()));
            }
        }
    }
    println!("{agree} of 40 instances agree");
    Ok(())
}
