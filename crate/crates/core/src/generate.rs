//! Seeded random instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{BuildMode, Hypergraph};

/// Draws `m` edges on the labels `v0 .. v{n-1}`, each of uniform arity in
/// `arity_min ..= arity_max`, then minimalizes. The realized edge count may
/// be smaller than `m`, and vertices in no surviving edge are dropped.
pub fn generate_random_hypergraph(
    n: usize,
    m: usize,
    arity_min: usize,
    arity_max: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::BadParams("vertex count must be at least 1".into()));
    }
    if arity_min == 0 || arity_min > arity_max || arity_max > n {
        return Err(Error::BadParams(format!(
            "arity {arity_min}..{arity_max} must satisfy 1 <= min <= max <= n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Vec<String>> = (0..m)
        .map(|_| {
            let k = rng.gen_range(arity_min..=arity_max);
            let mut picked = sample(&mut rng, n, k).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|v| format!("v{v}")).collect()
        })
        .collect();
    Hypergraph::build_with(edges, BuildMode::Minimalize)
}

/// A random forest on at most `n` vertices: vertex `i > 0` joins a uniform
/// earlier vertex with probability 3/4. Isolated vertices are dropped.
pub fn generate_random_forest(n: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<[String; 2]> = (1..n)
        .filter_map(|i| {
            let attach = rng.gen_bool(0.75);
            let parent = rng.gen_range(0..i);
            attach.then(|| [format!("v{parent}"), format!("v{i}")])
        })
        .collect();
    Hypergraph::build(edges).expect("forest edges are distinct pairs")
}

/// Parses `MIN..MAX` (or a single `K`).
pub fn parse_arity(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParams(format!("arity `{s}` is not MIN..MAX"));
    let (lo, hi) = s.split_once("..").unwrap_or((s, s));
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    Ok((lo, hi))
}
