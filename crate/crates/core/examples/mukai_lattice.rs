//! Mukai vectors of sheaves on the K3 surface, Riemann-Roch, the spherical
//! sheaf collection, and the numerical Grothendieck lattice N(Y).

use strange_duality::ktheory::{
    ep_collection, ep_descriptors, gram_of_vectors, invariants_of, mukai_pairing,
    mukai_vector_of, n_lattice, that_lattice, SheafDescriptor,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let delta = [3, 3, 4];
    let (vs, ctx) = ep_collection(delta)?;
    for (d, v) in ep_descriptors(delta)?.iter().zip(&vs) {
        println!("{d:?}\n    v = ({}, {:?}, {})", v.r, v.c1, v.s);
    }
    let gram = gram_of_vectors(&vs, &ctx)?;
    assert_eq!(gram, that_lattice(delta)?.gram);
    println!("Gram of the collection equals T{delta:?}");

    let oy = mukai_vector_of(&SheafDescriptor::StructureSheaf, &ctx)?;
    let pt = mukai_vector_of(&SheafDescriptor::Point, &ctx)?;
    println!("chi(O_Y, O_p) = {}", -mukai_pairing(&oy, &pt, &ctx)?);

    let ny = invariants_of(&n_lattice(delta)?)?;
    let t = invariants_of(&that_lattice(delta)?)?;
    println!("N(Y): rank {}, det {}, signature {}", ny.rank, ny.det, ny.signature);
    println!("T   : rank {}, det {}, signature {}", t.rank, t.det, t.signature);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
