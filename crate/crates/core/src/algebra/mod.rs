//! Edge ideals and their homological invariants.
//!
//! Minimal primes of `I(H)` are generated by the variables of minimal vertex
//! covers, so the big height is α₀′(H). The independence complex of `H` is
//! the Stanley–Reisner complex of `I(H)`; Hochster's formula turns its
//! restrictions into multigraded Betti numbers and the projective dimension.

mod betti;
mod complex;
mod rank;

use serde::{Deserialize, Serialize};

use crate::covers;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

pub use betti::{check_pd_bound, projective_dimension, BettiEntry, BettiTable, PdBoundReport};
pub use complex::{reduced_homology_dims, ReducedHomology, SimplicialComplex};
pub use rank::{rank_mod_p, rank_rational, Field};

/// A squarefree monomial, identified with its support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub support: Vec<usize>,
}

impl Monomial {
    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.iter().all(|v| other.support.contains(v))
    }
}

/// A squarefree monomial ideal in `ambient_n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub generators: Vec<Monomial>,
    pub ambient_n: usize,
}

impl MonomialIdeal {
    /// Whether the squarefree monomial with support `s` lies in the ideal.
    pub fn contains_support(&self, s: &VertexSet) -> bool {
        self.generators.iter().any(|g| g.support.iter().all(|&v| s.contains(v)))
    }
}

/// `I(H)`: one generator per edge.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    MonomialIdeal {
        generators: h.edges().iter().map(|e| Monomial { support: e.to_vec() }).collect(),
        ambient_n: h.num_vertices(),
    }
}

/// Supports of the minimal primes, i.e. the minimal vertex covers, in
/// canonical order.
pub fn minimal_primes(h: &Hypergraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    covers::minimal_cover_sets(h, limits)
}

pub fn big_height(h: &Hypergraph, limits: &Limits) -> Result<usize> {
    Ok(covers::alpha0_prime(h, limits)?.0)
}

/// Faces are the independent sets of `h`; the facets are the complements
/// of the minimal vertex covers.
pub fn independence_complex(h: &Hypergraph, limits: &Limits) -> Result<SimplicialComplex> {
    let all = h.all_vertices();
    let facets = minimal_primes(h, limits)?.iter().map(|c| all.difference(c)).collect();
    SimplicialComplex::new(all, facets)
}
