//! Machine-readable analysis reports. Vertices appear by label.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{BettiTable, Field, PdBoundReport};
use crate::bouquets::{BouquetSet, DualityReport};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub command: String,
    #[serde(default)]
    pub input_digest: Option<String>,
    pub status: Status,
    #[serde(default)]
    pub results: Option<Payload>,
    /// Wall-clock seconds per phase.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    SizeGuard,
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBouquet {
    pub edges: Vec<Vec<String>>,
    pub flowers: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stem: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBetti {
    pub degree: usize,
    pub multidegree: Vec<String>,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdSummary {
    pub field: Field,
    pub pd: usize,
    pub totals: Vec<usize>,
    pub entries: Vec<LabeledBetti>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Check {
        vertices: Vec<String>,
        edges: Vec<Vec<String>>,
    },
    Covers {
        count: usize,
        covers: Vec<Vec<String>>,
    },
    Alpha {
        alpha: usize,
        witness: Vec<String>,
    },
    Bouquets {
        cover: Vec<String>,
        bouquets: Vec<LabeledBouquet>,
    },
    Dprime {
        d_prime: usize,
        witness: Vec<LabeledBouquet>,
    },
    Pd(PdSummary),
    Verify {
        exact: bool,
        alpha: usize,
        d_prime: usize,
        equal: bool,
        cover_witness: Vec<String>,
        bouquet_witness: Vec<LabeledBouquet>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        search_witness: Option<Vec<LabeledBouquet>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pd_bound: Option<PdBoundReport>,
        all_hold: bool,
    },
    Gen {
        n: usize,
        m: usize,
        arity: (usize, usize),
        seed: u64,
        edges: Vec<Vec<String>>,
    },
}

/// SHA-256 over the canonical text of `h`: labels sorted within each edge,
/// edges sorted, one per line. Independent of input order.
pub fn input_digest(h: &Hypergraph) -> String {
    let mut edges: Vec<Vec<String>> = h
        .raw_edges()
        .into_iter()
        .map(|mut e| {
            e.sort();
            e
        })
        .collect();
    edges.sort();
    let mut hasher = Sha256::new();
    for e in edges {
        hasher.update(e.join(" "));
        hasher.update("\n");
    }
    hex::encode(hasher.finalize())
}

pub fn labeled_bouquets(h: &Hypergraph, s: &BouquetSet) -> Vec<LabeledBouquet> {
    s.bouquets
        .iter()
        .map(|b| LabeledBouquet {
            edges: b.edge_indices.iter().map(|&i| h.labels_of(&h.edges()[i])).collect(),
            flowers: b.flowers.iter().map(|&v| h.label(v).to_owned()).collect(),
            stem: b.stem.map(|v| h.label(v).to_owned()),
        })
        .collect()
}

pub fn labels(h: &Hypergraph, ids: &[usize]) -> Vec<String> {
    h.labels_of(&ids.iter().copied().collect::<VertexSet>())
}

pub fn pd_summary(h: &Hypergraph, t: &BettiTable) -> PdSummary {
    PdSummary {
        field: t.field,
        pd: t.pd,
        totals: t.totals(),
        entries: t
            .entries
            .iter()
            .map(|e| LabeledBetti { degree: e.degree, multidegree: labels(h, &e.multidegree), value: e.value })
            .collect(),
    }
}

pub fn verify_payload(h: &Hypergraph, r: &DualityReport, exact: bool, pd_bound: Option<PdBoundReport>) -> Payload {
    let all_hold = r.equal && pd_bound.as_ref().map_or(true, |b| b.bound_holds);
    Payload::Verify {
        exact,
        alpha: r.alpha,
        d_prime: r.d_prime,
        equal: r.equal,
        cover_witness: labels(h, &r.cover_witness.cover),
        bouquet_witness: labeled_bouquets(h, &r.bouquet_witness),
        search_witness: r.search_witness.as_ref().map(|s| labeled_bouquets(h, s)),
        pd_bound,
        all_hold,
    }
}

fn set_text(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn bouquet_text(out: &mut String, bouquets: &[LabeledBouquet]) {
    for b in bouquets {
        let edges: Vec<String> = b.edges.iter().map(|e| set_text(e)).collect();
        let _ = write!(out, "  edges {} flowers {}", edges.join(" "), set_text(&b.flowers));
        if let Some(s) = &b.stem {
            let _ = write!(out, " stem {s}");
        }
        out.push('\n');
    }
}

impl Payload {
    /// Human-readable rendering, LF-terminated lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Payload::Check { vertices, edges } => {
                let _ = writeln!(out, "ok: {} vertices, {} edges", vertices.len(), edges.len());
            }
            Payload::Covers { count, covers } => {
                let _ = writeln!(out, "{count} minimal vertex covers");
                for c in covers {
                    let _ = writeln!(out, "  {}", set_text(c));
                }
            }
            Payload::Alpha { alpha, witness } => {
                let _ = writeln!(out, "alpha0' = {alpha}");
                let _ = writeln!(out, "witness {}", set_text(witness));
            }
            Payload::Bouquets { cover, bouquets } => {
                let _ = writeln!(out, "cover {}: {} bouquets", set_text(cover), bouquets.len());
                bouquet_text(&mut out, bouquets);
            }
            Payload::Dprime { d_prime, witness } => {
                let _ = writeln!(out, "d' = {d_prime}");
                bouquet_text(&mut out, witness);
            }
            Payload::Pd(s) => {
                let _ = writeln!(out, "pd = {} over {}", s.pd, s.field);
                let totals: Vec<String> = s.totals.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "betti {}", totals.join(" "));
            }
            Payload::Verify { exact, alpha, d_prime, equal, cover_witness, bouquet_witness, pd_bound, all_hold, .. } => {
                let mode = if *exact { "exhaustive" } else { "constructive" };
                let _ = writeln!(out, "alpha0' = {alpha}");
                let _ = writeln!(out, "d' = {d_prime} ({mode})");
                let _ = writeln!(out, "equal: {equal}");
                let _ = writeln!(out, "cover {}", set_text(cover_witness));
                bouquet_text(&mut out, bouquet_witness);
                if let Some(b) = pd_bound {
                    let _ = writeln!(out, "pd = {} over {}, bound pd >= d' holds: {}", b.pd, b.field, b.bound_holds);
                }
                let _ = writeln!(out, "{}", if *all_hold { "all identities hold" } else { "IDENTITY FAILED" });
            }
            Payload::Gen { edges, .. } => {
                for e in edges {
                    let _ = writeln!(out, "{}", e.join(" "));
                }
            }
        }
        out
    }
}
