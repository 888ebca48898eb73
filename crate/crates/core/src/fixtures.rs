//! Small named hypergraphs and exhaustive families used by tests and examples.

use crate::hypergraph::Hypergraph;

fn graph(edges: &[(&str, &str)]) -> Hypergraph {
    Hypergraph::build(edges.iter().map(|&(a, b)| [a, b])).expect("fixture is simple")
}

/// Two disjoint paths `a-b-c` and `d-e-f`; α₀′ = 4.
pub fn figure_two() -> Hypergraph {
    graph(&[("a", "b"), ("b", "c"), ("d", "e"), ("e", "f")])
}

/// The two paths of [`figure_two`] joined by the edge `b-e`; α₀′ = 3.
pub fn figure_three() -> Hypergraph {
    graph(&[("a", "b"), ("b", "c"), ("e", "d"), ("e", "f"), ("b", "e")])
}

pub fn path3() -> Hypergraph {
    graph(&[("a", "b"), ("b", "c")])
}

pub fn triangle() -> Hypergraph {
    graph(&[("a", "b"), ("b", "c"), ("c", "a")])
}

/// The cycle on `n >= 3` vertices `v0 .. v{n-1}`.
pub fn cycle(n: usize) -> Hypergraph {
    Hypergraph::build((0..n).map(|i| [format!("v{i}"), format!("v{}", (i + 1) % n)]))
        .expect("cycle is simple")
}

/// The fixtures above plus a few mixed-arity hypergraphs.
pub fn named() -> Vec<Hypergraph> {
    vec![
        figure_two(),
        figure_three(),
        path3(),
        triangle(),
        cycle(5),
        Hypergraph::build([["x"]]).unwrap(),
        Hypergraph::build(vec![vec!["a", "b", "c"], vec!["c", "d"]]).unwrap(),
        Hypergraph::build(vec![vec!["x"], vec!["y", "z"]]).unwrap(),
        Hypergraph::build(vec![vec!["a", "b", "c"], vec!["b", "d"], vec!["c", "d", "e"], vec!["a", "e"]])
            .unwrap(),
    ]
}

/// Label for the `i`-th vertex of a generated family.
pub fn vertex_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("v{i}")
    }
}

/// Every simple hypergraph on exactly the vertex set `{0, .., n-1}`: all
/// antichains of nonempty subsets whose union is the whole set. For `n = 0`
/// this is the empty hypergraph alone.
pub fn all_simple_hypergraphs(n: usize) -> Vec<Hypergraph> {
    assert!(n <= 5, "the family grows doubly exponentially");
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(1, full, &mut chosen, &mut out);
    out
}

fn antichains(next: u32, full: u32, chosen: &mut Vec<u32>, out: &mut Vec<Hypergraph>) {
    if next > full {
        if chosen.iter().fold(0, |acc, m| acc | m) == full {
            let raw = chosen.iter().map(|&m| {
                (0..32).filter(move |b| m & (1 << b) != 0).map(|b| vertex_label(b as usize))
            });
            out.push(Hypergraph::build(raw).expect("antichain by construction"));
        }
        return;
    }
    antichains(next + 1, full, chosen, out);
    if chosen.iter().all(|&m| m & next != m && m & next != next) {
        chosen.push(next);
        antichains(next + 1, full, chosen, out);
        chosen.pop();
    }
}

/// Proptest strategy: a minimalized random hypergraph with at most `n`
/// vertices and at most `m` edges.
#[cfg(test)]
pub(crate) fn arb_hypergraph(
    n: usize,
    m: usize,
) -> impl proptest::strategy::Strategy<Value = Hypergraph> {
    use crate::hypergraph::BuildMode;
    use proptest::prelude::*;
    proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n.min(4)), 1..=m).prop_map(
        |edges| {
            Hypergraph::build_with(
                edges.into_iter().map(|e| e.into_iter().map(vertex_label)),
                BuildMode::Minimalize,
            )
            .unwrap()
        },
    )
}
