//! Coxeter elements of T(gamma) for every row: characteristic polynomial as
//! a product of cyclotomic polynomials and the order compared with h.

use strange_duality::exactalg::DEFAULT_CYCLOTOMIC_BOUND;
use strange_duality::ktheory::{coxeter_data, that_lattice};
use strange_duality::singularities::Table;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in Table::canonical().records() {
        let h = u64::from(r.ws.h);
        let cox = coxeter_data(&that_lattice(r.gabrielov)?, DEFAULT_CYCLOTOMIC_BOUND, 2 * h)?;
        println!(
            "{:<4} h={:<2} order={:?} Phi orders={:?}",
            r.name, h, cox.order, cox.cyclotomic_orders
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
