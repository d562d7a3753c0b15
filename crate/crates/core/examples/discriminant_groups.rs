//! Discriminant groups of T(delta) and T(gamma) for each dual pair.

use strange_duality::ktheory::{invariants_of, that_lattice};
use strange_duality::singularities::Table;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = Table::canonical();
    for (a, b) in table.dual_pairs() {
        let d = invariants_of(&that_lattice(a.dolgachev)?)?;
        let g = invariants_of(&that_lattice(a.gabrielov)?)?;
        println!(
            "{}/{}: |det| {} vs {}, discriminant {:?} vs {:?}",
            a.name,
            b.name,
            d.abs_det(),
            g.abs_det(),
            d.nontrivial_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            g.nontrivial_factors().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        );
        assert_eq!(d.abs_det(), g.abs_det());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
