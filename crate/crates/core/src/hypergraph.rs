//! Simple hypergraphs: a vertex universe plus an antichain of nonempty edges
//! whose union is the whole vertex set.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// What [`Hypergraph::build_with`] does when an edge contains another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BuildMode {
    /// Reject with [`Error::NotAntichain`].
    #[default]
    Strict,
    /// Drop every edge that strictly contains another, then drop vertices
    /// left outside all edges.
    Minimalize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex<'a> {
    pub label: &'a str,
    pub index: usize,
}

/// An immutable simple hypergraph.
///
/// Vertex indices are dense, assigned by first appearance in the input and
/// frozen. Edges keep their input order after duplicates are collapsed.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    labels: Vec<String>,
    lookup: HashMap<String, usize>,
    edges: Vec<VertexSet>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// The degenerate hypergraph with no vertices and no edges.
    pub fn empty() -> Self {
        Self { labels: Vec::new(), lookup: HashMap::new(), edges: Vec::new() }
    }

    /// Strict construction from label sets.
    pub fn build<E, S>(raw_edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::build_with(raw_edges, BuildMode::Strict)
    }

    pub fn build_with<E, S>(raw_edges: impl IntoIterator<Item = E>, mode: BuildMode) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels = Vec::new();
        let mut lookup = HashMap::new();
        // (input position, edge) after dropping exact duplicates
        let mut edges: Vec<(usize, VertexSet)> = Vec::new();

        for (pos, raw) in raw_edges.into_iter().enumerate() {
            let mut edge = VertexSet::new();
            for label in raw {
                let label = label.as_ref();
                let next = labels.len();
                let idx = *lookup.entry(label.to_owned()).or_insert_with(|| {
                    labels.push(label.to_owned());
                    next
                });
                edge.insert(idx);
            }
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index: pos });
            }
            if !edges.iter().any(|(_, e)| *e == edge) {
                edges.push((pos, edge));
            }
        }

        let mut keep = Vec::with_capacity(edges.len());
        for (pi, ei) in &edges {
            if mode == BuildMode::Strict {
                if let Some((pj, _)) = edges.iter().find(|(pj, ej)| pi != pj && ei.is_subset(ej)) {
                    return Err(Error::NotAntichain { subset: *pi, superset: *pj });
                }
            }
            keep.push(!edges.iter().any(|(pj, ej)| pi != pj && ej.is_subset(ei)));
        }

        let edges: Vec<VertexSet> =
            edges.into_iter().zip(keep).filter(|(_, k)| *k).map(|((_, e), _)| e).collect();
        let hg = Self { labels, lookup, edges };
        if mode == BuildMode::Minimalize {
            // Rebuild so that vertices outside every surviving edge vanish and
            // the remaining indices stay dense in first-appearance order.
            let raw = hg.raw_edges();
            return Self::build(raw);
        }
        Ok(hg)
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&VertexSet> {
        self.edges.get(i).ok_or(Error::BadEdgeIndex { index: i, len: self.edges.len() })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex<'_>> {
        self.labels.iter().enumerate().map(|(index, l)| Vertex { label: l, index })
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    /// Resolves labels to a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<VertexSet> {
        labels
            .into_iter()
            .map(|l| self.index_of(l.as_ref()).ok_or_else(|| Error::UnknownVertex(l.as_ref().into())))
            .collect()
    }

    /// Labels of a vertex set, ascending by index.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Fails with [`Error::UnknownVertex`] unless `set ⊆ V(H)`.
    pub fn check_vertices(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.labels.len()) {
            Some(v) => Err(Error::UnknownVertex(format!("#{v}"))),
            None => Ok(()),
        }
    }

    /// The edge list as label sets, in edge order.
    pub fn raw_edges(&self) -> Vec<Vec<String>> {
        self.edges.iter().map(|e| self.labels_of(e)).collect()
    }

    /// Edge indices in canonical order: by cardinality, then by the sorted
    /// index tuple.
    pub fn canonical_edge_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].cmp_canonical(&self.edges[b]));
        order
    }

    /// Indices of the edges contained in `a`.
    pub fn edges_within<'a>(&'a self, a: &'a VertexSet) -> impl Iterator<Item = usize> + 'a {
        self.edges.iter().enumerate().filter(move |(_, e)| e.is_subset(a)).map(|(i, _)| i)
    }

    /// `H|_A`: the edges of `H` contained in `A`. Its vertex set is the union
    /// of those edges, which may be a proper subset of `A`; the result is the
    /// empty hypergraph when no edge fits.
    pub fn partial_on_vertices(&self, a: &VertexSet) -> Result<Hypergraph> {
        self.check_vertices(a)?;
        let picked: Vec<usize> = self.edges_within(a).collect();
        Ok(self.sub_hypergraph(&picked))
    }

    pub fn edge_indices_in_range(&self, indices: &[usize]) -> Result<()> {
        match indices.iter().find(|&&i| i >= self.edges.len()) {
            Some(&index) => Err(Error::BadEdgeIndex { index, len: self.edges.len() }),
            None => Ok(()),
        }
    }

    /// The partial hypergraph with exactly the selected edges, in host order.
    pub fn partial_by_edges(&self, selection: &[usize]) -> Result<Hypergraph> {
        let mut picked = selection.to_vec();
        picked.sort_unstable();
        picked.dedup();
        self.edge_indices_in_range(&picked)?;
        Ok(self.sub_hypergraph(&picked))
    }

    fn sub_hypergraph(&self, picked: &[usize]) -> Hypergraph {
        Self::build(picked.iter().map(|&i| self.labels_of(&self.edges[i])))
            .expect("edges of a simple hypergraph form an antichain")
    }

    /// True iff no edge is contained in `a`.
    pub fn is_independent(&self, a: &VertexSet) -> Result<bool> {
        self.check_vertices(a)?;
        Ok(self.edges_within(a).next().is_none())
    }

    /// Maps a vertex set of `self` onto the vertex indices of `target` by label.
    pub fn translate(&self, set: &VertexSet, target: &Hypergraph) -> Result<VertexSet> {
        self.check_vertices(set)?;
        target.vertex_set(set.iter().map(|v| self.label(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> Hypergraph {
        Hypergraph::build([["a", "b"], ["b", "c"], ["d", "e"], ["e", "f"]]).unwrap()
    }

    fn fig3() -> Hypergraph {
        Hypergraph::build([["a", "b"], ["b", "c"], ["e", "d"], ["e", "f"], ["b", "e"]]).unwrap()
    }

    fn set(h: &Hypergraph, labels: &[&str]) -> VertexSet {
        h.vertex_set(labels).unwrap()
    }

    #[test]
    fn build_figure_two() {
        let k = fig2();
        assert_eq!(k.num_vertices(), 6);
        assert_eq!(k.num_edges(), 4);
        assert_eq!(k.labels(), ["a", "b", "c", "d", "e", "f"]);
    }

    #[test]
    fn build_single_vertex() {
        let h = Hypergraph::build([["x"]]).unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (1, 1));
    }

    #[test]
    fn strict_rejects_containment() {
        let raw = vec![vec!["x"], vec!["x", "y"]];
        assert_eq!(
            Hypergraph::build(raw.clone()),
            Err(Error::NotAntichain { subset: 0, superset: 1 })
        );
        let h = Hypergraph::build_with(raw, BuildMode::Minimalize).unwrap();
        assert_eq!(h.raw_edges(), vec![vec!["x".to_string()]]);
        assert_eq!(h.num_vertices(), 1);
    }

    #[test]
    fn minimalize_keeps_dense_indices() {
        let h = Hypergraph::build_with(
            vec![vec!["p", "q", "r"], vec!["s", "t"], vec!["q", "r"]],
            BuildMode::Minimalize,
        )
        .unwrap();
        assert_eq!(h.labels(), ["s", "t", "q", "r"]);
        assert_eq!(h.num_edges(), 2);
    }

    #[test]
    fn empty_edge_and_duplicates() {
        let empty: Vec<&str> = vec![];
        assert_eq!(
            Hypergraph::build(vec![vec!["a"], empty]),
            Err(Error::EmptyEdge { index: 1 })
        );
        let h = Hypergraph::build([["a", "b"], ["b", "a"], ["c", "b"]]).unwrap();
        assert_eq!(h.num_edges(), 2);
    }

    #[test]
    fn empty_hypergraph() {
        let h = Hypergraph::build(Vec::<Vec<&str>>::new()).unwrap();
        assert_eq!(h, Hypergraph::empty());
        assert!(h.is_independent(&VertexSet::new()).unwrap());
    }

    #[test]
    fn partial_on_vertices_examples() {
        let h = fig3();
        let p = h.partial_on_vertices(&set(&h, &["a", "b", "c"])).unwrap();
        assert_eq!(p.raw_edges(), vec![vec!["a", "b"], vec!["b", "c"]]);
        assert_eq!(h.partial_on_vertices(&h.all_vertices()).unwrap(), h);
        let none = h.partial_on_vertices(&set(&h, &["a", "d"])).unwrap();
        assert_eq!(none, Hypergraph::empty());
        assert_eq!(
            h.partial_on_vertices(&VertexSet::singleton(17)),
            Err(Error::UnknownVertex("#17".into()))
        );
    }

    #[test]
    fn partial_by_edges_examples() {
        let k = fig2();
        let p = k.partial_by_edges(&[0, 1]).unwrap();
        assert_eq!(p.labels(), ["a", "b", "c"]);
        assert_eq!(p.num_edges(), 2);
        assert_eq!(k.partial_by_edges(&[0, 1, 2, 3]).unwrap(), k);
        assert_eq!(k.partial_by_edges(&[]).unwrap(), Hypergraph::empty());
        assert_eq!(k.partial_by_edges(&[4]), Err(Error::BadEdgeIndex { index: 4, len: 4 }));
    }

    #[test]
    fn independence_examples() {
        let h = fig3();
        let k = fig2();
        assert!(!h.is_independent(&set(&h, &["b", "e"])).unwrap());
        assert!(k.is_independent(&set(&k, &["b", "e"])).unwrap());
        assert!(h.is_independent(&VertexSet::new()).unwrap());
        assert!(h.vertex_set(["zz"]).is_err());
    }

    #[test]
    fn canonical_order() {
        let h = Hypergraph::build(vec![vec!["a", "b", "c"], vec!["c", "d"], vec!["d", "e"], vec!["b", "e"]])
            .unwrap();
        // edges: {0,1,2}, {2,3}, {3,4}, {1,4}
        assert_eq!(h.canonical_edge_order(), vec![3, 1, 2, 0]);
    }
}
