//! Build T(2,3,7), the curves at infinity for (2,3,7), and the quiver for
//! weights (2,3,7), and print their Gram data.

use strange_duality::diagrams::{
    divisor_graph, gram_from_marked_graph, lp_quiver, that_diagram, EdgeKind,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = that_diagram([2, 3, 7])?;
    println!(
        "T(2,3,7): {} vertices, {} solid, {} double-dotted",
        t.n(),
        t.count(EdgeKind::Solid),
        t.count(EdgeKind::DoubleDotted)
    );
    print!("{}", gram_from_marked_graph(&t));

    let d = divisor_graph([2, 3, 7])?;
    println!("curves at infinity: {}", d.labels().join(" "));
    print!("{}", gram_from_marked_graph(&d).to_csv());

    let q = lp_quiver([2, 3, 7])?;
    let name = |i: usize| q.vertices[i].to_string();
    for &(a, b) in &q.solid_arrows {
        println!("{} -> {}", name(a), name(b));
    }
    for &(a, b) in &q.relation_arrows {
        println!("{} => {} (relation)", name(a), name(b));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
