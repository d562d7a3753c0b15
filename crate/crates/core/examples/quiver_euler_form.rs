//! From the quiver of a weighted projective line to the lattice T(p): Euler
//! form of the simples, symmetrization, the O_Y[1] pendant, and the Mukai
//! sign flip. The resulting Gram matrix is relabelled onto T(p).

use strange_duality::diagrams::{gram_from_marked_graph, lp_quiver, that_diagram, QuiverVertex};
use strange_duality::exactalg::perm_congruent;
use strange_duality::ktheory::{
    append_pendant, euler_simples, mukai_gram, quiver_witness, symmetrize_k3,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = [2, 4, 5];
    let q = lp_quiver(p)?;
    let chi = euler_simples(&q);
    println!("Euler form of the simples:\n{chi}");
    let o = q.index_of(QuiverVertex::O).expect("O");
    let full = append_pendant(&symmetrize_k3(&chi)?, o)?;
    let mukai = mukai_gram(&full)?;
    println!("Mukai Gram (quiver order, pendant last):\n{mukai}");

    let target = gram_from_marked_graph(&that_diagram(p)?);
    let witness = quiver_witness(p)?;
    assert_eq!(mukai.permuted(&witness)?, target);
    println!("documented relabelling onto T{p:?}: {witness:?}");
    let searched = perm_congruent(&mukai, &target)?.expect("congruent");
    println!("backtracking search found:        {searched:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
