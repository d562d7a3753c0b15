//! Browse the 14 records: duals, Milnor numbers, Gorenstein parameters,
//! Hilbert series and the dualizing element of the weighted projective line.

use strange_duality::singularities::{
    dualizing_element, milnor_number, series_coeffs, Table,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = Table::canonical();
    for r in table.records() {
        let dual = table.strange_dual(&r.name)?;
        let hilbert = series_coeffs(&r.ws.hilbert_series(), 12)?;
        let omega = dualizing_element(r.dolgachev)?;
        println!(
            "{:<4} {:<12} mu={:<2} a={} dual={} omega=({}c; {:?}) H(t)={:?}..",
            r.name,
            r.ws.to_string(),
            milnor_number(r),
            r.ws.gorenstein_parameter(),
            dual.name,
            omega.ell,
            omega.arm,
            hilbert.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        );
    }
    println!("{}", serde_json::to_string(&table.to_json())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
