//! Reduced homology of small simplicial complexes, including the
//! independence complex of a graph.

use bouquet_kit::algebra::{independence_complex, reduced_homology_dims, Field, SimplicialComplex};
use bouquet_kit::fixtures::cycle;
use bouquet_kit::{Limits, VertexSet};

fn main() -> bouquet_kit::Result<()> {
    let limits = Limits::default();
    let mut complexes = vec![
        ("boundary of the 4-simplex", SimplicialComplex::simplex_boundary(VertexSet::full(5))),
        ("solid triangle", SimplicialComplex::simplex(VertexSet::full(3))),
    ];
    let rp2: Vec<VertexSet> = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ]
    .iter()
    .map(|f| f.iter().copied().collect())
    .collect();
    complexes.push(("projective plane", SimplicialComplex::new(VertexSet::full(6), rp2)?));
    complexes.push(("independence complex of C6", independence_complex(&cycle(6), &limits)?));

    for (name, x) in &complexes {
        for field in [Field::Rationals, Field::GF2] {
            let h = reduced_homology_dims(x, field, &limits)?;
            println!("{name} over {field}: nonzero (degree, dim) {:?}", h.nonzero());
        }
    }
    Ok(())
}
