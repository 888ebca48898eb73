//! Seeded random hypergraphs and forests, with a summary line each.

use bouquet_kit::algebra::{big_height, projective_dimension, Field};
use bouquet_kit::covers::alpha0_prime;
use bouquet_kit::generate::{generate_random_forest, generate_random_hypergraph};
use bouquet_kit::report::input_digest;
use bouquet_kit::Limits;

fn main() -> bouquet_kit::Result<()> {
    let limits = Limits::default();
    println!("seed  n  m  alpha0'  digest");
    for seed in 0..8 {
        let h = generate_random_hypergraph(8, 10, 2, 4, seed)?;
        let (alpha, _) = alpha0_prime(&h, &limits)?;
        println!("{seed:>4} {:>2} {:>2} {alpha:>8}  {}", h.num_vertices(), h.num_edges(), &input_digest(&h)[..12]);
    }
    for seed in 0..4 {
        let f = generate_random_forest(9, seed);
        let pd = projective_dimension(&f, Field::Rationals, &limits)?.pd;
        println!("forest {seed}: {} edges, pd = {pd}, big height = {}", f.num_edges(), big_height(&f, &limits)?);
    }
    Ok(())
}
