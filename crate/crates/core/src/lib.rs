//! Maximum minimal vertex covers of simple hypergraphs and the semi-strongly
//! disjoint bouquet sets that certify them.
//!
//! The crate covers four layers:
//!
//! - [`hypergraph`]: simple hypergraphs, partial hypergraphs, independence.
//! - [`covers`]: minimal vertex covers, α₀′ and cover extension.
//! - [`bouquets`]: bouquets, semi-strong disjointness, the exhaustive `d′`
//!   search and the constructions between covers and bouquet sets.
//! - [`algebra`]: edge ideals, minimal primes, independence complexes, exact
//!   reduced homology and multigraded Betti numbers, from which the
//!   projective dimension and the bound `pd S/I(H) >= d′` are checked.
//!
//! [`io`], [`generate`], [`report`] and [`cli`] back the `bouquet-kit`
//! binary.

pub mod algebra;
pub mod bouquets;
pub mod cli;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod limits;
pub mod report;
pub mod vertex_set;

pub use error::{Error, Result};
pub use hypergraph::{BuildMode, Hypergraph};
pub use limits::Limits;
pub use vertex_set::VertexSet;
