//! The exact linear-algebra layer on its own: Bareiss determinants, Smith
//! invariant factors, inertia, characteristic and cyclotomic polynomials.

use strange_duality::exactalg::{
    char_poly, cyclotomic, cyclotomic_factorization, det_bareiss, signature_of,
    smith_invariant_factors, IntMat,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // the D4 root lattice with the (-2) convention
    let d4 = IntMat::from_rows(&[
        [-2, 1, 1, 1],
        [1, -2, 0, 0],
        [1, 0, -2, 0],
        [1, 0, 0, -2],
    ])?;
    println!("det = {}", det_bareiss(&d4)?);
    println!("invariant factors = {:?}", smith_invariant_factors(&d4));
    println!("signature = {}", signature_of(&d4)?);
    let p = char_poly(&d4)?;
    println!("char poly = {p}");
    println!("Phi_12 = {}", cyclotomic(12)?);
    let t4_minus_1 = strange_duality::exactalg::IntPoly::from_i64(&[-1, 0, 0, 0, 1]);
    println!("t^4 - 1 = prod Phi_d for d in {:?}", cyclotomic_factorization(&t4_minus_1, 84)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
