//! Exhaustive search for `d′_H`, the largest edge count of a semi-strongly
//! disjoint bouquet set. Uses only the definitions, never vertex covers, so
//! it can serve as an oracle for the cover side.

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

use super::{is_semi_strongly_disjoint, Bouquet, BouquetSet};

/// Maximum of `|E(B)|` over all semi-strongly disjoint bouquet sets `B`,
/// with the first maximizer in search order.
///
/// Edge subsets are tried from largest to smallest, each size in
/// lexicographic order; the first subset that carries a valid set settles
/// the maximum. For a subset, flower assignments are enumerated in product
/// order and groupings into bouquets as restricted-growth strings, coarsest
/// first. Every candidate is confirmed with [`is_semi_strongly_disjoint`].
pub fn d_prime_bruteforce(h: &Hypergraph, limits: &Limits) -> Result<(usize, BouquetSet)> {
    Limits::guard("edge count", h.num_edges(), limits.search_edges)?;
    Limits::guard("vertex count", h.num_vertices(), limits.search_vertices)?;

    let m = h.num_edges();
    for size in (1..=m).rev() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if let Some(found) = best_for_subset(h, &subset)? {
                return Ok((size, found));
            }
            if !next_combination(&mut subset, m) {
                break;
            }
        }
    }
    Ok((0, BouquetSet::default()))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

fn best_for_subset(h: &Hypergraph, subset: &[usize]) -> Result<Option<BouquetSet>> {
    let edges: Vec<&VertexSet> = subset.iter().map(|&i| &h.edges()[i]).collect();
    let support = edges.iter().fold(VertexSet::new(), |acc, e| acc.union(e));

    // A flower may sit in no other selected edge: inside its own bouquet by
    // the bouquet condition, elsewhere by semi-strong disjointness.
    let candidates: Vec<Vec<usize>> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let others = edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(VertexSet::new(), |acc, (_, o)| acc.union(o));
            e.difference(&others).to_vec()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }

    let mut choice = vec![0usize; edges.len()];
    loop {
        let flowers: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        let rest = support.difference(&flowers.iter().copied().collect());
        if h.edges_within(&rest).next().is_none() {
            if let Some(set) = first_grouping(h, subset, &edges, &flowers)? {
                return Ok(Some(set));
            }
        }
        if !advance(&mut choice, &candidates) {
            return Ok(None);
        }
    }
}

fn advance(choice: &mut [usize], candidates: &[Vec<usize>]) -> bool {
    for i in (0..choice.len()).rev() {
        choice[i] += 1;
        if choice[i] < candidates[i].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}

/// First partition of the subset, in restricted-growth order, whose blocks
/// have nonempty common intersections and which passes the full check.
fn first_grouping(
    h: &Hypergraph,
    subset: &[usize],
    edges: &[&VertexSet],
    flowers: &[usize],
) -> Result<Option<BouquetSet>> {
    let k = subset.len();
    let mut rgs = vec![0usize; k];
    loop {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        let groups: Vec<Vec<usize>> =
            (0..blocks).map(|b| (0..k).filter(|&i| rgs[i] == b).collect()).collect();
        let intersecting = groups.iter().all(|g| {
            let mut it = g.iter().map(|&i| edges[i].clone());
            let first = it.next().unwrap_or_default();
            !it.fold(first, |acc, e| acc.intersection(&e)).is_empty()
        });
        if intersecting {
            let set = BouquetSet::new(
                groups
                    .iter()
                    .map(|g| {
                        Bouquet::new(g.iter().map(|&i| subset[i]).collect(), g.iter().map(|&i| flowers[i]).collect())
                    })
                    .collect(),
            );
            if is_semi_strongly_disjoint(h, &set)?.holds() {
                return Ok(Some(set));
            }
        }
        if !next_rgs(&mut rgs) {
            return Ok(None);
        }
    }
}

/// Next restricted-growth string: `a[0] = 0`, `a[i] <= 1 + max(a[..i])`.
fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let bound = a[..i].iter().max().copied().unwrap_or(0) + 1;
        if a[i] < bound {
            a[i] += 1;
            a[i + 1..].iter_mut().for_each(|x| *x = 0);
            return true;
        }
    }
    false
}
