//! Lists the minimal vertex covers of a hypergraph file (default: a small
//! mixed-arity example).
//!
//!     cargo run --example enumerate_covers -- crates/core/fixtures/fig3.hg

use bouquet_kit::covers::{alpha0_prime, enumerate_minimal_covers};
use bouquet_kit::io::{parse_hypergraph, parse_hypergraph_file};
use bouquet_kit::{BuildMode, Limits};

fn main() -> bouquet_kit::Result<()> {
    let h = match std::env::args().nth(1) {
        Some(path) => parse_hypergraph_file(path, BuildMode::Minimalize)?,
        None => parse_hypergraph("a b c\nb d\nc d e\na e\n", BuildMode::Strict)?,
    };
    let limits = Limits::from_env()?;
    let covers = enumerate_minimal_covers(&h, &limits)?;
    println!("{} vertices, {} edges, {} minimal covers", h.num_vertices(), h.num_edges(), covers.len());
    for c in &covers {
        println!("  {:?}", h.labels_of(&c.set()));
    }
    let (alpha, w) = alpha0_prime(&h, &limits)?;
    println!("alpha0' = {alpha} via {:?}", h.labels_of(&w.set()));
    Ok(())
}
