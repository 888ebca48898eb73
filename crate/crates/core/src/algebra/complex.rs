//! Finite simplicial complexes given by facets, and their reduced homology.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

use super::rank::Field;

/// A simplicial complex on `ground_set`, stored by its facets. The empty
/// face is always present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground_set: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal generators, sorted canonically. An empty
    /// generator list gives the complex `{∅}`.
    pub fn new(ground_set: VertexSet, generators: Vec<VertexSet>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|f| !f.is_subset(&ground_set)) {
            return Err(Error::BadParams(format!("face {bad:?} is not inside the ground set")));
        }
        let mut facets: Vec<VertexSet> = Vec::new();
        for g in &generators {
            if !generators.iter().any(|o| g != o && g.is_subset(o)) && !facets.contains(g) {
                facets.push(g.clone());
            }
        }
        if facets.is_empty() {
            facets.push(VertexSet::new());
        }
        facets.sort_by(VertexSet::cmp_canonical);
        Ok(Self { ground_set, facets })
    }

    /// The full simplex on `ground_set`.
    pub fn simplex(ground_set: VertexSet) -> Self {
        Self { facets: vec![ground_set.clone()], ground_set }
    }

    /// The boundary of the simplex on `ground_set`: every proper subset.
    pub fn simplex_boundary(ground_set: VertexSet) -> Self {
        let facets = ground_set
            .iter()
            .map(|v| {
                let mut f = ground_set.clone();
                f.remove(v);
                f
            })
            .collect();
        Self::new(ground_set, facets).expect("facets lie in the ground set")
    }

    pub fn ground_set(&self) -> &VertexSet {
        &self.ground_set
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension, with `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_face(&self, s: &VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// The induced subcomplex on `subset`.
    pub fn restrict(&self, subset: &VertexSet) -> Self {
        let ground = self.ground_set.intersection(subset);
        let gens = self.facets.iter().map(|f| f.intersection(&ground)).collect();
        Self::new(ground, gens).expect("restriction stays inside the ground set")
    }

    /// A vertex lying in every facet; such a complex is a cone and acyclic.
    pub fn apex(&self) -> Option<usize> {
        let mut it = self.facets.iter();
        let first = it.next()?.clone();
        it.fold(first, |acc, f| acc.intersection(f)).first()
    }
}

/// Dimensions of reduced homology; `dims[k + 1]` is the dimension in degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedHomology {
    pub dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn degree(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.dims.get(i)).copied().unwrap_or(0)
    }

    /// `(degree, dimension)` for every nonzero group.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as isize - 1, d))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Reduced homology of `x` with coefficients in `field`, over degrees
/// `-1 ..= dim x`.
pub fn reduced_homology_dims(x: &SimplicialComplex, field: Field, limits: &Limits) -> Result<ReducedHomology> {
    let ground = x.ground_set.to_vec();
    Limits::guard("ground set size", ground.len(), limits.homology_ground.min(32))?;
    let local: HashMap<usize, usize> = ground.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut faces = HashSet::new();
    for f in &x.facets {
        let mask = f.iter().fold(0u32, |m, v| m | 1 << local[&v]);
        let mut sub = mask;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    let faces: Vec<u32> = faces.into_iter().collect();
    Ok(ReducedHomology { dims: homology_of_faces(&faces, field) })
}

/// Reduced homology of the complex whose faces are exactly `faces` (a
/// downward closed family of bitmasks). An empty family is the void complex,
/// which has no homology at all.
pub(crate) fn homology_of_faces(faces: &[u32], field: Field) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else {
        return Vec::new();
    };
    // by_size[s] holds the faces with s vertices, i.e. of dimension s - 1
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for layer in &mut by_size {
        layer.sort_by_key(|&f| lex_key(f));
    }

    // rank of the boundary map from faces of size s to faces of size s - 1
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top || by_size[s].is_empty() || by_size[s - 1].is_empty() {
            return 0;
        }
        let rows: HashMap<u32, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut matrix = vec![vec![0i64; by_size[s].len()]; rows.len()];
        for (col, &face) in by_size[s].iter().enumerate() {
            for (pos, bit) in bits(face).enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                matrix[rows[&(face & !(1 << bit))]][col] = sign;
            }
        }
        field.rank(&matrix)
    };

    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

fn bits(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |b| mask & (1 << b) != 0)
}

fn lex_key(mask: u32) -> Vec<u32> {
    bits(mask).collect()
}
