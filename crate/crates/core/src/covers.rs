//! Minimal vertex covers (minimal transversals), the parameter α₀′ and the
//! extension of a cover of a vertex-induced partial hypergraph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// A vertex set certified to be a (minimal) vertex cover of its hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub cover: Vec<usize>,
    pub cardinality: usize,
    pub minimal: bool,
}

impl CoverCertificate {
    pub(crate) fn minimal(cover: &VertexSet) -> Self {
        Self { cover: cover.to_vec(), cardinality: cover.len(), minimal: true }
    }

    pub fn set(&self) -> VertexSet {
        self.cover.iter().copied().collect()
    }
}

pub(crate) fn covers_all(edges: &[VertexSet], c: &VertexSet) -> bool {
    edges.iter().all(|e| e.intersects(c))
}

/// Whether `v` has a private edge: one meeting `c` exactly in `{v}`.
fn has_private_edge(edges: &[VertexSet], c: &VertexSet, v: usize) -> bool {
    edges.iter().any(|e| e.contains(v) && e.intersection_len(c) == 1)
}

pub(crate) fn is_minimal_cover_of(edges: &[VertexSet], c: &VertexSet) -> bool {
    covers_all(edges, c) && c.iter().all(|v| has_private_edge(edges, c, v))
}

pub fn is_vertex_cover(h: &Hypergraph, c: &VertexSet) -> Result<bool> {
    h.check_vertices(c)?;
    Ok(covers_all(h.edges(), c))
}

/// Cover test plus the private-witness criterion: every `v ∈ C` owns an edge
/// `E` with `E ∩ C = {v}`.
pub fn is_minimal_vertex_cover(h: &Hypergraph, c: &VertexSet) -> Result<bool> {
    h.check_vertices(c)?;
    Ok(is_minimal_cover_of(h.edges(), c))
}

/// All minimal vertex covers, each once, ordered by cardinality and then
/// lexicographically. The empty hypergraph has the single cover `∅`.
pub fn enumerate_minimal_covers(h: &Hypergraph, limits: &Limits) -> Result<Vec<CoverCertificate>> {
    Ok(minimal_cover_sets(h, limits)?.iter().map(CoverCertificate::minimal).collect())
}

pub(crate) fn minimal_cover_sets(h: &Hypergraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    Limits::guard("vertex count", h.num_vertices(), limits.vertices)?;
    let mut search = CoverSearch {
        edges: h.edges(),
        cap: limits.covers,
        found: Vec::new(),
    };
    search.branch(VertexSet::new(), VertexSet::new())?;
    let mut found = search.found;
    found.sort_by(VertexSet::cmp_canonical);
    Ok(found)
}

struct CoverSearch<'a> {
    edges: &'a [VertexSet],
    cap: usize,
    found: Vec<VertexSet>,
}

impl CoverSearch<'_> {
    // Branch on the first uncovered edge. The i-th child takes its i-th vertex
    // and forbids the earlier ones, so every partial cover is reached once.
    fn branch(&mut self, chosen: VertexSet, forbidden: VertexSet) -> Result<()> {
        let Some(edge) = self.edges.iter().find(|e| !e.intersects(&chosen)) else {
            debug_assert!(is_minimal_cover_of(self.edges, &chosen));
            if self.found.len() == self.cap {
                return Err(Error::SizeGuard {
                    what: "minimal cover count",
                    actual: self.cap + 1,
                    limit: self.cap,
                });
            }
            self.found.push(chosen);
            return Ok(());
        };

        let mut forbidden = forbidden;
        for v in edge.difference(&forbidden).iter() {
            let mut next = chosen.clone();
            next.insert(v);
            // A vertex without a private edge never regains one.
            if next.iter().all(|u| has_private_edge(self.edges, &next, u))
                && self.edges.iter().all(|e| e.intersects(&next) || !e.is_subset(&forbidden))
            {
                self.branch(next, forbidden.clone())?;
            }
            forbidden.insert(v);
        }
        Ok(())
    }
}

/// α₀′(H), the largest minimal cover size, with the first witness in
/// canonical order. Returns 0 and the empty cover for the empty hypergraph.
pub fn alpha0_prime(h: &Hypergraph, limits: &Limits) -> Result<(usize, CoverCertificate)> {
    let covers = minimal_cover_sets(h, limits)?;
    let best = covers.iter().map(VertexSet::len).max().unwrap_or(0);
    let witness = covers
        .iter()
        .find(|c| c.len() == best)
        .map(CoverCertificate::minimal)
        .unwrap_or_else(|| CoverCertificate::minimal(&VertexSet::new()));
    Ok((best, witness))
}

/// Extends a minimal cover `C` of `K = H|_U` to a minimal cover `C′ ⊇ C` of
/// `H`. Starts from `A ∪ C` with `A = V(H) \ V(K)` and drops redundant
/// vertices of `A` in ascending index order.
pub fn extend_cover(h: &Hypergraph, u: &VertexSet, c: &VertexSet) -> Result<CoverCertificate> {
    h.check_vertices(u)?;
    h.check_vertices(c)?;
    let inner: Vec<VertexSet> = h.edges_within(u).map(|i| h.edges()[i].clone()).collect();
    let inner_vertices = inner.iter().fold(VertexSet::new(), |acc, e| acc.union(e));
    if !c.is_subset(&inner_vertices) || !is_minimal_cover_of(&inner, c) {
        return Err(Error::NotMinimalCover(format!(
            "{:?} is not a minimal vertex cover of the partial hypergraph on {:?}",
            h.labels_of(c),
            h.labels_of(u)
        )));
    }

    let outside = h.all_vertices().difference(&inner_vertices);
    let mut cover = outside.union(c);
    for v in outside.iter() {
        cover.remove(v);
        if !covers_all(h.edges(), &cover) {
            cover.insert(v);
        }
    }

    assert!(c.is_subset(&cover));
    assert!(is_minimal_cover_of(h.edges(), &cover));
    assert_eq!(cover.difference(&outside), *c);
    Ok(CoverCertificate::minimal(&cover))
}
