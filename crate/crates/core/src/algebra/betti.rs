//! Multigraded Betti numbers of `S/I(H)` by Hochster's formula:
//! `β_{i,σ} = dim H̃_{|σ|-i-1}(Δ_σ)` where `Δ` is the independence complex.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bouquets::{verify_duality, DualityMode};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;

use super::complex::homology_of_faces;
use super::rank::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub multidegree: Vec<usize>,
    pub value: usize,
}

/// Nonzero multigraded Betti numbers, sorted by homological degree, then by
/// multidegree size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: Field,
    pub entries: Vec<BettiEntry>,
    pub pd: usize,
}

impl BettiTable {
    /// Total Betti numbers `β_0, .., β_pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut t = vec![0; self.pd + 1];
        for e in &self.entries {
            t[e.degree] += e.value;
        }
        t
    }
}

/// Scans every `σ ⊆ V(H)`. Restrictions that are cones are acyclic and are
/// skipped. Results are merged in `σ` order, so the table does not depend on
/// the number of worker threads.
pub fn projective_dimension(h: &Hypergraph, field: Field, limits: &Limits) -> Result<BettiTable> {
    let n = h.num_vertices();
    Limits::guard("vertex count", n, limits.pd_vertices.min(24))?;
    let edges: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.as_mask().expect("vertex count is guarded") as u32)
        .collect();
    let independent: Vec<bool> =
        (0u32..1 << n).map(|s| edges.iter().all(|&e| e & s != e)).collect();

    let per_sigma: Vec<Vec<BettiEntry>> = (0u32..1 << n)
        .into_par_iter()
        .map(|sigma| betti_at(sigma, &independent, field))
        .collect();

    let mut entries: Vec<BettiEntry> = per_sigma.into_iter().flatten().collect();
    entries.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then(a.multidegree.len().cmp(&b.multidegree.len()))
            .then_with(|| a.multidegree.cmp(&b.multidegree))
    });
    let pd = entries.iter().map(|e| e.degree).max().unwrap_or(0);
    Ok(BettiTable { field, entries, pd })
}

fn betti_at(sigma: u32, independent: &[bool], field: Field) -> Vec<BettiEntry> {
    let mut faces = Vec::new();
    let mut sub = sigma;
    loop {
        if independent[sub as usize] {
            faces.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & sigma;
    }
    let is_cone = (0..32).filter(|b| sigma & (1 << b) != 0).any(|b| {
        faces.iter().all(|&f| independent[(f | 1 << b) as usize])
    });
    if is_cone {
        return Vec::new();
    }

    // compress σ's vertices to the low bits
    let members: Vec<u32> = (0..32).filter(|b| sigma & (1 << b) != 0).collect();
    let local: Vec<u32> = faces
        .iter()
        .map(|&f| {
            members.iter().enumerate().fold(0, |m, (i, &b)| if f & (1 << b) != 0 { m | 1 << i } else { m })
        })
        .collect();
    let size = members.len() as isize;
    homology_of_faces(&local, field)
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d > 0)
        .map(|(k, value)| BettiEntry {
            degree: (size - k as isize) as usize,
            multidegree: members.iter().map(|&b| b as usize).collect(),
            value,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdBoundReport {
    pub field: Field,
    pub pd: usize,
    pub d_prime: usize,
    pub bound_holds: bool,
}

/// Computes `pd S/I(H)` and `d′_H` (constructively) and compares them.
/// `bound_holds == false` can only come from a bug.
pub fn check_pd_bound(h: &Hypergraph, field: Field, limits: &Limits) -> Result<PdBoundReport> {
    let table = projective_dimension(h, field, limits)?;
    let duality = verify_duality(h, DualityMode::Constructive, limits)?;
    Ok(PdBoundReport {
        field,
        pd: table.pd,
        d_prime: duality.d_prime,
        bound_holds: table.pd >= duality.d_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{big_height, edge_ideal};
    use crate::fixtures;
    use crate::vertex_set::VertexSet;

    /// Independent route through the upper Koszul complex of `I`:
    /// `β_{i,σ}(S/I) = dim H̃_{i-2}(K^σ)` for `i >= 1`, where `K^σ` holds the
    /// `τ ⊆ σ` with `x^{σ∖τ} ∈ I`.
    fn betti_by_koszul(h: &Hypergraph, field: Field) -> Vec<BettiEntry> {
        let ideal = edge_ideal(h);
        let n = h.num_vertices();
        let mut out = vec![BettiEntry { degree: 0, multidegree: vec![], value: 1 }];
        for sigma in 1u32..1 << n {
            let faces: Vec<u32> = (0..=sigma)
                .filter(|&t| t & sigma == t)
                .filter(|&t| ideal.contains_support(&VertexSet::from_mask((sigma & !t) as u64)))
                .collect();
            let members: Vec<u32> = (0..32).filter(|b| sigma & (1 << b) != 0).collect();
            let local: Vec<u32> = faces
                .iter()
                .map(|&f| members.iter().enumerate().fold(0, |m, (i, &b)| if f & (1 << b) != 0 { m | 1 << i } else { m }))
                .collect();
            for (k, d) in homology_of_faces(&local, field).into_iter().enumerate() {
                if d > 0 {
                    // homology degree k - 1 = i - 2
                    out.push(BettiEntry {
                        degree: k + 1,
                        multidegree: members.iter().map(|&b| b as usize).collect(),
                        value: d,
                    });
                }
            }
        }
        out.sort_by(|a, b| {
            a.degree.cmp(&b.degree).then(a.multidegree.len().cmp(&b.multidegree.len())).then_with(|| a.multidegree.cmp(&b.multidegree))
        });
        out
    }

    fn pd(h: &Hypergraph, field: Field) -> usize {
        projective_dimension(h, field, &Limits::default()).unwrap().pd
    }

    #[test]
    fn examples() {
        let x = Hypergraph::build([["x"]]).unwrap();
        assert_eq!(pd(&x, Field::Rationals), 1);
        assert_eq!(pd(&fixtures::path3(), Field::Rationals), 2);
        let c5 = fixtures::cycle(5);
        let t = projective_dimension(&c5, Field::Rationals, &Limits::default()).unwrap();
        assert_eq!(t.pd, 3);
        assert_eq!(t.totals(), vec![1, 5, 5, 1]);
        assert_eq!(big_height(&c5, &Limits::default()).unwrap(), 3);
        assert_eq!(pd(&Hypergraph::empty(), Field::GF2), 0);
    }

    #[test]
    fn path_contributes_in_top_multidegree() {
        let p = fixtures::path3();
        let t = projective_dimension(&p, Field::Rationals, &Limits::default()).unwrap();
        assert!(t.entries.contains(&BettiEntry { degree: 2, multidegree: vec![0, 1, 2], value: 1 }));
    }

    #[test]
    fn hochster_matches_upper_koszul() {
        let mut family: Vec<Hypergraph> = (0..=4).flat_map(fixtures::all_simple_hypergraphs).collect();
        family.extend(fixtures::named());
        for h in family {
            for field in [Field::Rationals, Field::GF2] {
                let t = projective_dimension(&h, field, &Limits::default()).unwrap();
                assert_eq!(t.entries, betti_by_koszul(&h, field), "{:?}", h.raw_edges());
            }
        }
    }

    #[test]
    fn bound_examples() {
        let l = Limits::default();
        let r = check_pd_bound(&fixtures::figure_three(), Field::Rationals, &l).unwrap();
        assert!(r.pd >= 3 && r.d_prime == 3 && r.bound_holds);
        let r = check_pd_bound(&fixtures::path3(), Field::Rationals, &l).unwrap();
        assert_eq!((r.pd, r.d_prime, r.bound_holds), (2, 2, true));
        let r = check_pd_bound(&Hypergraph::build([["x"]]).unwrap(), Field::GF2, &l).unwrap();
        assert_eq!((r.pd, r.d_prime, r.bound_holds), (1, 1, true));
    }

    #[test]
    fn guard() {
        let big = fixtures::cycle(15);
        assert!(projective_dimension(&big, Field::GF2, &Limits::default()).unwrap_err().is_size_guard());
    }

    #[test]
    fn same_table_on_one_thread() {
        let h = fixtures::cycle(7);
        let many = projective_dimension(&h, Field::Rationals, &Limits::default()).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = pool.install(|| projective_dimension(&h, Field::Rationals, &Limits::default()).unwrap());
        assert_eq!(many, one);
    }
}
