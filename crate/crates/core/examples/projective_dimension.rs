//! Multigraded Betti numbers of edge ideals and the bound pd >= d'.

use bouquet_kit::algebra::{big_height, check_pd_bound, edge_ideal, projective_dimension, Field};
use bouquet_kit::fixtures::{cycle, figure_three};
use bouquet_kit::Limits;

fn main() -> bouquet_kit::Result<()> {
    let limits = Limits::default();
    let c5 = cycle(5);
    println!("I(C5) has {} generators", edge_ideal(&c5).generators.len());
    let table = projective_dimension(&c5, Field::Rationals, &limits)?;
    println!("C5: pd = {}, betti {:?}, big height {}", table.pd, table.totals(), big_height(&c5, &limits)?);
    for e in table.entries.iter().filter(|e| e.degree == table.pd) {
        println!("  top degree entry in multidegree {:?}: {}", c5.labels_of(&e.multidegree.iter().copied().collect()), e.value);
    }

    for field in [Field::Rationals, Field::GF2] {
        let r = check_pd_bound(&figure_three(), field, &limits)?;
        println!("bridged paths over {field}: pd = {}, d' = {}, holds {}", r.pd, r.d_prime, r.bound_holds);
    }
    Ok(())
}
