//! Bouquets, semi-strongly disjoint bouquet sets, and the two constructions
//! linking them to minimal vertex covers.
//!
//! A bouquet of `H` is a family of edges `E_1, .., E_d` with a common vertex
//! and one flower `l_i` per edge such that `l_i ∈ E_j` exactly when `i = j`.
//! A set of bouquets is semi-strongly disjoint when no edge of one bouquet
//! meets the flowers of another and the non-flower vertices of the union are
//! independent in `H`.
//!
//! [`construct_bouquets_from_cover`] turns any minimal vertex cover `C` into a
//! semi-strongly disjoint set with flower set exactly `C`, and
//! [`extend_flowers_to_cover`] goes the other way. Together they show that
//! the largest total edge count of such a set equals α₀′(H);
//! [`d_prime_bruteforce`] computes that number without using covers at all.

mod search;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covers::{self, CoverCertificate};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

pub use search::d_prime_bruteforce;

/// A bouquet inside a host hypergraph. `flowers[i]` is the flower of edge
/// `edge_indices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bouquet {
    pub edge_indices: Vec<usize>,
    pub flowers: Vec<usize>,
    /// A common vertex of all edges, recorded by the constructions. Never
    /// required by validation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stem: Option<usize>,
}

impl Bouquet {
    pub fn new(edge_indices: Vec<usize>, flowers: Vec<usize>) -> Self {
        Self { edge_indices, flowers, stem: None }
    }

    pub fn vertex_set(&self, h: &Hypergraph) -> VertexSet {
        self.edge_indices
            .iter()
            .fold(VertexSet::new(), |acc, &i| acc.union(&h.edges()[i]))
    }

    pub fn flower_set(&self) -> VertexSet {
        self.flowers.iter().copied().collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetSet {
    pub bouquets: Vec<Bouquet>,
}

impl BouquetSet {
    pub fn new(bouquets: Vec<Bouquet>) -> Self {
        Self { bouquets }
    }

    /// `F(B)`.
    pub fn flower_set(&self) -> VertexSet {
        self.bouquets.iter().flat_map(|b| b.flowers.iter().copied()).collect()
    }

    /// `E(B)` as host edge indices.
    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.bouquets.iter().flat_map(|b| b.edge_indices.iter().copied()).collect()
    }

    /// `V(B)`. Edge indices must be in range for `h`.
    pub fn vertex_set(&self, h: &Hypergraph) -> VertexSet {
        self.bouquets.iter().fold(VertexSet::new(), |acc, b| acc.union(&b.vertex_set(h)))
    }

    pub fn num_edges(&self) -> usize {
        self.edge_set().len()
    }

    pub fn is_empty(&self) -> bool {
        self.bouquets.is_empty()
    }
}

/// Outcome of a structural check that can fail with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V> {
    Holds,
    Violated(V),
}

impl<V> Verdict<V> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(v) => Some(v),
        }
    }
}

/// First violated bouquet condition. Vertices and edges are host indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BouquetViolation {
    #[error("bouquet has no edges")]
    NoEdges,
    #[error("edges have empty common intersection")]
    EmptyIntersection,
    #[error("flower {flower} is not in its own edge {edge}")]
    FlowerOutsideEdge { flower: usize, edge: usize },
    #[error("flower {flower} of edge {own_edge} also lies in edge {other_edge}")]
    FlowerNotPrivate { flower: usize, own_edge: usize, other_edge: usize },
    #[error("stem {stem} is missing from edge {edge}")]
    StemNotCommon { stem: usize, edge: usize },
    #[error("stem {stem} is a flower")]
    StemIsFlower { stem: usize },
}

/// First violated semi-strong disjointness condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsdViolation {
    #[error("edge {edge} of bouquet {bouquet} contains flower {flower} of bouquet {flower_bouquet}")]
    FlowerInForeignEdge { edge: usize, bouquet: usize, flower: usize, flower_bouquet: usize },
    #[error("non-flower vertices contain edge {edge}")]
    NonFlowersNotIndependent { edge: usize },
}

fn check_shape(h: &Hypergraph, b: &Bouquet) -> Result<()> {
    if b.edge_indices.len() != b.flowers.len() {
        return Err(Error::LengthMismatch { edges: b.edge_indices.len(), flowers: b.flowers.len() });
    }
    h.edge_indices_in_range(&b.edge_indices)?;
    h.check_vertices(&b.flower_set())?;
    if let Some(s) = b.stem {
        h.check_vertices(&VertexSet::singleton(s))?;
    }
    Ok(())
}

pub fn validate_bouquet(h: &Hypergraph, b: &Bouquet) -> Result<Verdict<BouquetViolation>> {
    check_shape(h, b)?;
    Ok(match bouquet_violation(h, b) {
        Some(v) => Verdict::Violated(v),
        None => Verdict::Holds,
    })
}

fn bouquet_violation(h: &Hypergraph, b: &Bouquet) -> Option<BouquetViolation> {
    let edges: Vec<&VertexSet> = b.edge_indices.iter().map(|&i| &h.edges()[i]).collect();
    let Some((first, rest)) = edges.split_first() else {
        return Some(BouquetViolation::NoEdges);
    };
    let common = rest.iter().fold((*first).clone(), |acc, e| acc.intersection(e));
    if common.is_empty() {
        return Some(BouquetViolation::EmptyIntersection);
    }
    for (i, &flower) in b.flowers.iter().enumerate() {
        if !edges[i].contains(flower) {
            return Some(BouquetViolation::FlowerOutsideEdge { flower, edge: b.edge_indices[i] });
        }
        if let Some(j) = (0..edges.len()).find(|&j| j != i && edges[j].contains(flower)) {
            return Some(BouquetViolation::FlowerNotPrivate {
                flower,
                own_edge: b.edge_indices[i],
                other_edge: b.edge_indices[j],
            });
        }
    }
    if let Some(stem) = b.stem {
        if let Some(j) = (0..edges.len()).find(|&j| !edges[j].contains(stem)) {
            return Some(BouquetViolation::StemNotCommon { stem, edge: b.edge_indices[j] });
        }
        if b.flowers.contains(&stem) {
            return Some(BouquetViolation::StemIsFlower { stem });
        }
    }
    None
}

/// Semi-strong disjointness of a set of valid bouquets. An invalid member is
/// an error, not a violation.
pub fn is_semi_strongly_disjoint(h: &Hypergraph, s: &BouquetSet) -> Result<Verdict<SsdViolation>> {
    for (index, b) in s.bouquets.iter().enumerate() {
        if let Verdict::Violated(violation) = validate_bouquet(h, b)? {
            return Err(Error::InvalidBouquet { index, violation });
        }
    }
    Ok(match ssd_violation(h, s) {
        Some(v) => Verdict::Violated(v),
        None => Verdict::Holds,
    })
}

fn ssd_violation(h: &Hypergraph, s: &BouquetSet) -> Option<SsdViolation> {
    let flower_sets: Vec<VertexSet> = s.bouquets.iter().map(Bouquet::flower_set).collect();
    for (p, b) in s.bouquets.iter().enumerate() {
        for &edge in &b.edge_indices {
            let e = &h.edges()[edge];
            for (q, flowers) in flower_sets.iter().enumerate() {
                if q != p {
                    if let Some(flower) = e.intersection(flowers).first() {
                        return Some(SsdViolation::FlowerInForeignEdge {
                            edge,
                            bouquet: p,
                            flower,
                            flower_bouquet: q,
                        });
                    }
                }
            }
        }
    }
    let rest = s.vertex_set(h).difference(&s.flower_set());
    let edge = h.edges_within(&rest).next();
    edge.map(|edge| SsdViolation::NonFlowersNotIndependent { edge })
}

/// Builds a semi-strongly disjoint bouquet set whose flower set is exactly
/// the minimal cover `c`.
///
/// Vertices `c` with `{c}` an edge become single-edge bouquets. The others
/// are grouped around stems: take the smallest unassigned flower `l`, its
/// lexicographically smallest witness edge `E` (`E ∩ C = {l}`) and the
/// smallest `r ∈ E \ {l}`; every unassigned flower with a witness edge
/// through `r` joins that bouquet.
pub fn construct_bouquets_from_cover(h: &Hypergraph, c: &VertexSet) -> Result<BouquetSet> {
    if !covers::is_minimal_vertex_cover(h, c)? {
        return Err(Error::NotMinimalCover(format!("{:?}", h.labels_of(c))));
    }
    let edge_of = |members: &VertexSet| h.edges().iter().position(|e| e == members);

    let mut bouquets = Vec::new();
    let mut unassigned = VertexSet::new();
    for v in c.iter() {
        match edge_of(&VertexSet::singleton(v)) {
            Some(i) => bouquets.push(Bouquet::new(vec![i], vec![v])),
            None => {
                unassigned.insert(v);
            }
        }
    }

    // Smallest edge meeting the cover only in `flower`, optionally through `stem`.
    let witness = |flower: usize, stem: Option<usize>| -> Option<usize> {
        (0..h.num_edges())
            .filter(|&i| {
                let e = &h.edges()[i];
                e.contains(flower)
                    && e.intersection_len(c) == 1
                    && stem.map_or(true, |r| e.contains(r))
            })
            .min_by(|&a, &b| h.edges()[a].cmp(&h.edges()[b]))
    };

    while let Some(flower) = unassigned.first() {
        let edge = witness(flower, None)
            .expect("every vertex of a minimal cover has a private edge");
        let stem = h.edges()[edge]
            .iter()
            .find(|&v| v != flower)
            .expect("a private edge of a non-loop flower has another vertex");
        let mut bouquet = Bouquet { edge_indices: Vec::new(), flowers: Vec::new(), stem: Some(stem) };
        for l in unassigned.clone().iter() {
            if let Some(e) = witness(l, Some(stem)) {
                bouquet.edge_indices.push(e);
                bouquet.flowers.push(l);
                unassigned.remove(l);
            }
        }
        debug_assert_eq!(bouquet.flowers.first(), Some(&flower));
        bouquets.push(bouquet);
    }

    let set = BouquetSet::new(bouquets);
    assert_eq!(set.flower_set(), *c);
    assert_eq!(set.num_edges(), c.len());
    assert!(is_semi_strongly_disjoint(h, &set)?.holds());
    Ok(set)
}

/// Extends the flower set of a semi-strongly disjoint bouquet set to a
/// minimal vertex cover of `h`.
pub fn extend_flowers_to_cover(h: &Hypergraph, s: &BouquetSet) -> Result<CoverCertificate> {
    if let Verdict::Violated(v) = is_semi_strongly_disjoint(h, s)? {
        return Err(Error::NotSemiStronglyDisjoint(v));
    }
    let support = s.vertex_set(h);
    let flowers = s.flower_set();
    let inner: Vec<VertexSet> = h.edges_within(&support).map(|i| h.edges()[i].clone()).collect();
    assert!(
        covers::is_minimal_cover_of(&inner, &flowers),
        "flowers of a semi-strongly disjoint set minimally cover their support"
    );
    covers::extend_cover(h, &support, &flowers)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualityMode {
    /// `d′` read off the bouquets built from a maximum minimal cover.
    #[default]
    Constructive,
    /// `d′` from the exhaustive bouquet search.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub alpha: usize,
    pub d_prime: usize,
    pub equal: bool,
    pub cover_witness: CoverCertificate,
    /// Built from `cover_witness`; its flower set is that cover.
    pub bouquet_witness: BouquetSet,
    /// The maximizer found by the exhaustive search, in exact mode.
    pub search_witness: Option<BouquetSet>,
}

/// Computes α₀′(H) and `d′_H` and compares them.
pub fn verify_duality(h: &Hypergraph, mode: DualityMode, limits: &Limits) -> Result<DualityReport> {
    let (alpha, cover_witness) = covers::alpha0_prime(h, limits)?;
    let bouquet_witness = construct_bouquets_from_cover(h, &cover_witness.set())?;
    let (d_prime, search_witness) = match mode {
        DualityMode::Constructive => (bouquet_witness.num_edges(), None),
        DualityMode::Exact => {
            let (d, w) = d_prime_bruteforce(h, limits)?;
            (d, Some(w))
        }
    };
    Ok(DualityReport {
        alpha,
        d_prime,
        equal: alpha == d_prime,
        cover_witness,
        bouquet_witness,
        search_witness,
    })
}
