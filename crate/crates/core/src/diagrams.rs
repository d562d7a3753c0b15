//! Marked graphs and quivers: the diagram `T̂(γ₁,γ₂,γ₃)`, the configuration of
//! curves at infinity, and the quiver of the strong exceptional collection on
//! a weighted projective line.
//!
//! Vertices are 0-based in code. Where documentation quotes the 1-based
//! labels `α₁ … α_μ`, vertex `αₖ` is index `k - 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exactalg::IntMat;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeKind {
    Solid,
    DoubleDotted,
}

/// Undirected graph whose edges are tagged [`EdgeKind::Solid`] or
/// [`EdgeKind::DoubleDotted`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedGraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), EdgeKind>,
}

impl MarkedGraph {
    pub fn new(labels: Vec<String>) -> Self {
        MarkedGraph {
            labels,
            edges: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_edge(&mut self, i: usize, j: usize, kind: EdgeKind) -> Result<()> {
        let n = self.n();
        for v in [i, j] {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, len: n });
            }
        }
        if i == j {
            return Err(Error::Contract(format!("self-loop at vertex {i}")));
        }
        let key = (i.min(j), i.max(j));
        if self.edges.insert(key, kind).is_some() {
            return Err(Error::Contract(format!("duplicate edge {key:?}")));
        }
        Ok(())
    }

    /// Edges as `(i, j, kind)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        self.edges.iter().map(|(&(i, j), &k)| (i, j, k))
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<EdgeKind> {
        self.edges.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.edges.values().filter(|&&k| k == kind).count()
    }
}

fn check_triple(t: [u32; 3], what: &str) -> Result<()> {
    if t.iter().any(|&x| x < 2) {
        return Err(Error::Domain(format!(
            "{what} {t:?}: every entry must be at least 2"
        )));
    }
    Ok(())
}

/// The diagram `T̂(γ₁,γ₂,γ₃)` on `μ = γ₁+γ₂+γ₃` vertices.
///
/// `α₁` is the hub. Arm 1 is `α₂ … α_{γ₁}`, arm 2 is
/// `α_{γ₁+1} … α_{γ₁+γ₂-1}`, arm 3 is `α_{γ₁+γ₂} … α_{μ-2}`, each a chain
/// starting at the vertex next to the hub. `α_{μ-1}` is joined by solid
/// edges to the first vertex of every arm and to the pendant `α_μ`, and by
/// a double-dotted edge to the hub.
pub fn that_diagram(gamma: [u32; 3]) -> Result<MarkedGraph> {
    check_triple(gamma, "Gabrielov triple")?;
    let mu = gamma.iter().sum::<u32>() as usize;
    let labels = (1..=mu).map(|k| format!("a{k}")).collect();
    let mut g = MarkedGraph::new(labels);
    let hub = 0;
    let second = mu - 2;
    for arm in arm_ranges(gamma) {
        g.add_edge(hub, arm.start, EdgeKind::Solid)?;
        g.add_edge(second, arm.start, EdgeKind::Solid)?;
        for v in arm.start..arm.end - 1 {
            g.add_edge(v, v + 1, EdgeKind::Solid)?;
        }
    }
    g.add_edge(second, mu - 1, EdgeKind::Solid)?;
    g.add_edge(hub, second, EdgeKind::DoubleDotted)?;
    Ok(g)
}

/// 0-based index ranges of the three arms of `T̂(γ)`, each listed from the
/// hub-adjacent vertex outward.
pub fn arm_ranges(gamma: [u32; 3]) -> [std::ops::Range<usize>; 3] {
    let [g1, g2, g3] = gamma.map(|x| x as usize);
    [1..g1, g1..g1 + g2 - 1, g1 + g2 - 1..g1 + g2 + g3 - 2]
}

/// The star of `(-2)`-curves at infinity: hub `E_∞` adjacent to `E^i_{δᵢ-1}`,
/// each arm the chain `E^i_{δᵢ-1}, …, E^i_1`.
///
/// Vertex 0 is `E_∞`; arm `i` follows, near-hub curve first.
pub fn divisor_graph(delta: [u32; 3]) -> Result<MarkedGraph> {
    check_triple(delta, "Dolgachev triple")?;
    let mut labels = vec!["E_inf".to_string()];
    for (i, &d) in delta.iter().enumerate() {
        for j in (1..d).rev() {
            labels.push(format!("E{}_{j}", i + 1));
        }
    }
    let mut g = MarkedGraph::new(labels);
    let mut next = 1;
    for &d in &delta {
        let mut prev = 0;
        for _ in 1..d {
            g.add_edge(prev, next, EdgeKind::Solid)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Label of the curve `E^i_j` (arm `i` in 1..=3) as used by [`divisor_graph`].
pub fn curve_label(arm: usize, j: u32) -> String {
    format!("E{arm}_{j}")
}

/// Gram matrix with diagonal `-2`, `+1` per solid edge and `-2` per
/// double-dotted edge.
pub fn gram_from_marked_graph(g: &MarkedGraph) -> IntMat {
    let n = g.n();
    let mut m = IntMat::zeros(n, n);
    for i in 0..n {
        m.set(i, i, -2);
    }
    for (i, j, kind) in g.edges() {
        let v = BigInt::from(match kind {
            EdgeKind::Solid => 1,
            EdgeKind::DoubleDotted => -2,
        });
        m.set(i, j, v.clone());
        m.set(j, i, v);
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuiverVertex {
    /// The structure sheaf `O`.
    O,
    /// `U_arm^{(j)}` with `arm` in 1..=3 and `j` in `1..p_arm`.
    U { arm: usize, j: u32 },
    /// The object `O(-ω⃗-c⃗)[1]`.
    W,
}

impl fmt::Display for QuiverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverVertex::O => write!(f, "O"),
            QuiverVertex::U { arm, j } => write!(f, "U{arm}^({j})"),
            QuiverVertex::W => write!(f, "W"),
        }
    }
}

/// Quiver with solid arrows and relation arrows, both as `(source, target)`
/// index pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertices: Vec<QuiverVertex>,
    pub solid_arrows: Vec<(usize, usize)>,
    pub relation_arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn index_of(&self, v: QuiverVertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn count_solid(&self, from: usize, to: usize) -> usize {
        self.solid_arrows.iter().filter(|&&a| a == (from, to)).count()
    }

    pub fn count_relations(&self, from: usize, to: usize) -> usize {
        self.relation_arrows.iter().filter(|&&a| a == (from, to)).count()
    }
}

/// The quiver of the full strong exceptional collection on the weighted
/// projective line with weights `p`.
///
/// Vertex order: `O`, then `U_i^{(1)} … U_i^{(pᵢ-1)}` for `i = 1, 2, 3`, then
/// `W`. Arrows run `U_i^{(j)} → U_i^{(j+1)}`, `O → U_i^{(pᵢ-1)}` and
/// `U_i^{(pᵢ-1)} → W`; the two relations are both `O → W`.
pub fn lp_quiver(p: [u32; 3]) -> Result<Quiver> {
    check_triple(p, "weights")?;
    let mut vertices = vec![QuiverVertex::O];
    for (i, &pi) in p.iter().enumerate() {
        vertices.extend((1..pi).map(|j| QuiverVertex::U { arm: i + 1, j }));
    }
    vertices.push(QuiverVertex::W);
    let idx = |v: QuiverVertex| vertices.iter().position(|&w| w == v).expect("vertex");
    let (o, w) = (idx(QuiverVertex::O), idx(QuiverVertex::W));
    let mut solid_arrows = Vec::new();
    for (i, &pi) in p.iter().enumerate() {
        let arm = i + 1;
        for j in 1..pi - 1 {
            solid_arrows.push((
                idx(QuiverVertex::U { arm, j }),
                idx(QuiverVertex::U { arm, j: j + 1 }),
            ));
        }
        let top = idx(QuiverVertex::U { arm, j: pi - 1 });
        solid_arrows.push((o, top));
        solid_arrows.push((top, w));
    }
    Ok(Quiver {
        vertices,
        solid_arrows,
        relation_arrows: vec![(o, w), (o, w)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{det_bareiss, signature_of, Signature};
    use crate::singularities::{milnor_number, table};

    #[test]
    fn that_2_3_7_counts() {
        let g = that_diagram([2, 3, 7]).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.count(EdgeKind::Solid), 13);
        assert_eq!(g.count(EdgeKind::DoubleDotted), 1);
        assert_eq!(g.edge(0, 10), Some(EdgeKind::DoubleDotted));
    }

    #[test]
    fn that_2_2_2_edges() {
        let g = that_diagram([2, 2, 2]).unwrap();
        let solid: Vec<(usize, usize)> = g
            .edges()
            .filter(|e| e.2 == EdgeKind::Solid)
            .map(|(i, j, _)| (i + 1, j + 1))
            .collect();
        let mut expected = vec![(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6)];
        expected.sort();
        assert_eq!(solid, expected);
        let dd: Vec<_> = g.edges().filter(|e| e.2 == EdgeKind::DoubleDotted).collect();
        assert_eq!(dd, vec![(0, 4, EdgeKind::DoubleDotted)]);
    }

    #[test]
    fn that_rejects_short_arms() {
        assert!(matches!(that_diagram([1, 2, 3]), Err(Error::Domain(_))));
    }

    #[test]
    fn marked_graph_invariants() {
        let mut g = MarkedGraph::new(vec!["a".into(), "b".into()]);
        assert!(g.add_edge(0, 0, EdgeKind::Solid).is_err());
        g.add_edge(1, 0, EdgeKind::Solid).unwrap();
        assert!(g.add_edge(0, 1, EdgeKind::DoubleDotted).is_err());
        assert!(matches!(
            g.add_edge(0, 2, EdgeKind::Solid),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn quiver_counts() {
        let q = lp_quiver([2, 2, 2]).unwrap();
        assert_eq!(q.vertices.len(), 5);
        assert_eq!(q.solid_arrows.len(), 6);
        assert_eq!(q.relation_arrows.len(), 2);

        let q = lp_quiver([2, 3, 7]).unwrap();
        assert_eq!(q.vertices.len(), 11);
        assert_eq!(q.solid_arrows.len(), 12);
        let (o, w) = (q.index_of(QuiverVertex::O).unwrap(), q.index_of(QuiverVertex::W).unwrap());
        assert_eq!(q.count_relations(o, w), 2);
        assert!(matches!(lp_quiver([2, 1, 3]), Err(Error::Domain(_))));
        for r in table() {
            let p = r.dolgachev;
            assert_eq!(
                lp_quiver(p).unwrap().vertices.len() as u32,
                p.iter().sum::<u32>() - 1
            );
        }
    }

    #[test]
    fn divisor_graph_shapes() {
        let g = divisor_graph([2, 3, 7]).unwrap();
        assert_eq!((g.n(), g.count(EdgeKind::Solid)), (10, 9));
        let g = divisor_graph([4, 4, 4]).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.labels()[1..4], ["E1_3", "E1_2", "E1_1"]);
        let g = divisor_graph([2, 2, 2]).unwrap();
        assert_eq!((g.n(), g.count(EdgeKind::Solid)), (4, 3));
        assert_eq!(g.count(EdgeKind::DoubleDotted), 0);
    }

    #[test]
    fn small_grams() {
        let mut g = MarkedGraph::new(vec!["x".into()]);
        assert_eq!(gram_from_marked_graph(&g), IntMat::from_rows(&[[-2]]).unwrap());
        g = MarkedGraph::new(vec!["x".into(), "y".into()]);
        g.add_edge(0, 1, EdgeKind::Solid).unwrap();
        assert_eq!(
            gram_from_marked_graph(&g),
            IntMat::from_rows(&[[-2, 1], [1, -2]]).unwrap()
        );
        g = MarkedGraph::new(vec!["x".into(), "y".into()]);
        g.add_edge(0, 1, EdgeKind::DoubleDotted).unwrap();
        let m = gram_from_marked_graph(&g);
        assert_eq!(m, IntMat::from_rows(&[[-2, -2], [-2, -2]]).unwrap());
        assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(0));
    }

    #[test]
    fn table_wide_shapes() {
        for r in table() {
            let t = that_diagram(r.gabrielov).unwrap();
            assert_eq!(t.n() as u32, milnor_number(&r));
            let d = divisor_graph(r.dolgachev).unwrap();
            assert_eq!(d.n() as u32, r.dolgachev.iter().sum::<u32>() - 2);
            for g in [t, d] {
                let m = gram_from_marked_graph(&g);
                assert!(m.is_symmetric());
                assert!(m.diagonal().iter().all(|x| x % 2 == BigInt::from(0)));
            }
            for tri in [r.dolgachev, r.gabrielov] {
                let s = signature_of(&gram_from_marked_graph(&that_diagram(tri).unwrap())).unwrap();
                let sum = tri.iter().sum::<u32>() as usize;
                assert_eq!(s, Signature::new(2, 0, sum - 2), "{} {tri:?}", r.name);
            }
        }
    }
}
