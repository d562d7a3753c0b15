//! Euler forms of exceptional and spherical collections, Mukai vectors and
//! the Mukai pairing, Picard–Lefschetz reflections, Coxeter elements, and the
//! numerical Grothendieck lattice `N(Y)`.
//!
//! Sign convention: spherical classes square to `-2`, and the Euler form is
//! `χ(E, F) = -(v(E), v(F))`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagrams::{
    arm_ranges, curve_label, divisor_graph, gram_from_marked_graph, that_diagram, Quiver,
    QuiverVertex,
};
use crate::exactalg::{
    char_poly, cyclotomic_factorization, det_bareiss, serialize_bigint, serialize_bigints,
    signature_of, smith_invariant_factors, IntMat, IntPoly, Signature,
};
use crate::{Error, Result};

/// `χ(S_α, S_β) = δ_{αβ} - #solid(β→α) + #relations(β→α)`, indexed by quiver
/// vertices.
pub fn euler_simples(q: &Quiver) -> IntMat {
    let n = q.vertices.len();
    IntMat::from_fn(n, n, |a, b| {
        let diag = i64::from(a == b);
        BigInt::from(diag - q.count_solid(b, a) as i64 + q.count_relations(b, a) as i64)
    })
}

/// Euler form after pushing forward to the total space of the canonical
/// bundle: `e + eᵀ`.
pub fn symmetrize_k3(e: &IntMat) -> Result<IntMat> {
    if !e.is_square() {
        return Err(Error::Dimension(format!("{}x{} Euler form", e.rows(), e.cols())));
    }
    e.add(&e.transpose())
}

/// Borders `chi_hat` with the class of `O_Y[1]`: self-pairing 2 and `-1`
/// against the vertex `o_index` only.
pub fn append_pendant(chi_hat: &IntMat, o_index: usize) -> Result<IntMat> {
    if !chi_hat.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} Euler form",
            chi_hat.rows(),
            chi_hat.cols()
        )));
    }
    let n = chi_hat.rows();
    if o_index >= n {
        return Err(Error::IndexOutOfRange {
            index: o_index,
            len: n,
        });
    }
    Ok(IntMat::from_fn(n + 1, n + 1, |i, j| match (i == n, j == n) {
        (false, false) => chi_hat.get(i, j).clone(),
        (true, true) => BigInt::from(2),
        (true, false) => BigInt::from(-i64::from(j == o_index)),
        (false, true) => BigInt::from(-i64::from(i == o_index)),
    }))
}

/// Riemann–Roch: the Mukai Gram matrix is the negated Euler form.
pub fn mukai_gram(chi_full: &IntMat) -> Result<IntMat> {
    if !chi_full.is_symmetric() {
        return Err(Error::Contract("Euler form is not symmetric".into()));
    }
    Ok(chi_full.neg())
}

/// Mukai Gram matrix of `(ι*S_α)_α` followed by `O_Y[1]`, built from the
/// quiver for weights `p`. Rows follow the quiver vertex order, pendant last.
pub fn quiver_k3_gram(p: [u32; 3]) -> Result<IntMat> {
    let q = crate::diagrams::lp_quiver(p)?;
    let o = q.index_of(QuiverVertex::O).expect("quiver has O");
    let chi = append_pendant(&symmetrize_k3(&euler_simples(&q))?, o)?;
    mukai_gram(&chi)
}

/// The expected relabelling between [`quiver_k3_gram`] and `T̂(p)`:
/// entry `k` is the quiver-side index placed at `T̂` vertex `k`.
///
/// `W ↦ α₁`, `U_i^{(pᵢ-1)} ↦` the hub-adjacent vertex of arm `i`, down to
/// `U_i^{(1)} ↦` the end of arm `i`, `O ↦ α_{μ-1}`, pendant `↦ α_μ`.
pub fn quiver_witness(p: [u32; 3]) -> Result<Vec<usize>> {
    let q = crate::diagrams::lp_quiver(p)?;
    let mu = p.iter().sum::<u32>() as usize;
    let idx = |v| q.index_of(v).expect("quiver vertex");
    let mut perm = vec![0; mu];
    perm[0] = idx(QuiverVertex::W);
    for (i, arm) in arm_ranges(p).into_iter().enumerate() {
        for (offset, t) in arm.enumerate() {
            let j = p[i] - 1 - offset as u32;
            perm[t] = idx(QuiverVertex::U { arm: i + 1, j });
        }
    }
    perm[mu - 2] = idx(QuiverVertex::O);
    perm[mu - 1] = q.vertices.len();
    Ok(perm)
}

/// Néron–Severi intersection form spanned by a configuration of
/// `(-2)`-curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NSContext {
    pub gram: IntMat,
    pub labels: Vec<String>,
}

impl NSContext {
    pub fn new(gram: IntMat, labels: Vec<String>) -> Result<Self> {
        if !gram.is_symmetric() || gram.rows() != labels.len() {
            return Err(Error::Contract("NS Gram must be symmetric with one label per row".into()));
        }
        if gram.diagonal().iter().any(|d| *d != BigInt::from(-2)) {
            return Err(Error::Contract("every NS generator must be a (-2)-curve".into()));
        }
        Ok(NSContext { gram, labels })
    }

    /// Curves at infinity for Dolgachev numbers `delta`.
    pub fn from_divisor_graph(delta: [u32; 3]) -> Result<Self> {
        let g = divisor_graph(delta)?;
        Self::new(gram_from_marked_graph(&g), g.labels().to_vec())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Lookup {
                kind: "curve",
                name: label.to_string(),
            })
    }
}

/// `(r, c₁, s)` in `H⁰ ⊕ NS ⊕ H⁴`, `c₁` in coordinates of an [`NSContext`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MukaiVector {
    pub r: i64,
    pub c1: Vec<i64>,
    pub s: i64,
}

impl MukaiVector {
    pub fn new(r: i64, c1: Vec<i64>, s: i64) -> Self {
        MukaiVector { r, c1, s }
    }

    pub fn neg(&self) -> Self {
        MukaiVector {
            r: -self.r,
            c1: self.c1.iter().map(|c| -c).collect(),
            s: -self.s,
        }
    }
}

/// `(a₂, b₂) - a₀b₄ - a₄b₀`.
pub fn mukai_pairing(v: &MukaiVector, w: &MukaiVector, ctx: &NSContext) -> Result<BigInt> {
    let n = ctx.rank();
    if v.c1.len() != n || w.c1.len() != n {
        return Err(Error::Contract(format!(
            "Mukai vectors of NS length {} and {} against a rank-{n} context",
            v.c1.len(),
            w.c1.len()
        )));
    }
    let x: Vec<BigInt> = v.c1.iter().map(|&c| c.into()).collect();
    let y: Vec<BigInt> = w.c1.iter().map(|&c| c.into()).collect();
    let c1 = ctx.gram.bilinear(&x, &y)?;
    Ok(c1 - BigInt::from(v.r) * w.s - BigInt::from(v.s) * w.r)
}

/// Objects whose Mukai vectors are known in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SheafDescriptor {
    StructureSheaf,
    Point,
    /// `O_C(k)` for a `(-2)`-curve `C` of the context.
    CurveTwist { curve: String, k: i64 },
    Shift { degree: i32, inner: Box<SheafDescriptor> },
}

impl SheafDescriptor {
    pub fn curve(curve: impl Into<String>, k: i64) -> Self {
        SheafDescriptor::CurveTwist {
            curve: curve.into(),
            k,
        }
    }

    pub fn shift(self, degree: i32) -> Self {
        SheafDescriptor::Shift {
            degree,
            inner: Box::new(self),
        }
    }
}

/// `v(E) = ch(E)·√td(Y)` with `√td(Y) = (1, 0, 1)` on a K3 surface.
pub fn mukai_vector_of(desc: &SheafDescriptor, ctx: &NSContext) -> Result<MukaiVector> {
    let n = ctx.rank();
    Ok(match desc {
        SheafDescriptor::StructureSheaf => MukaiVector::new(1, vec![0; n], 1),
        SheafDescriptor::Point => MukaiVector::new(0, vec![0; n], 1),
        SheafDescriptor::CurveTwist { curve, k } => {
            let mut c1 = vec![0; n];
            c1[ctx.index_of(curve)?] = 1;
            MukaiVector::new(0, c1, k + 1)
        }
        SheafDescriptor::Shift { degree, inner } => {
            let v = mukai_vector_of(inner, ctx)?;
            if degree % 2 == 0 {
                v
            } else {
                v.neg()
            }
        }
    })
}

/// Gram matrix of a list of Mukai vectors.
pub fn gram_of_vectors(vs: &[MukaiVector], ctx: &NSContext) -> Result<IntMat> {
    let n = vs.len();
    let mut m = IntMat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let p = mukai_pairing(&vs[i], &vs[j], ctx)?;
            m.set(i, j, p.clone());
            m.set(j, i, p);
        }
    }
    Ok(m)
}

/// The spherical collection `O_{E_∞}(-1)`, `O_{E^i_j}(-1)`, `O_{E_∞}`,
/// `O_Y[1]` laid out in `T̂(δ)` vertex order.
pub fn ep_descriptors(delta: [u32; 3]) -> Result<Vec<SheafDescriptor>> {
    let mu = delta.iter().sum::<u32>() as usize;
    let mut out = vec![SheafDescriptor::StructureSheaf; mu];
    out[0] = SheafDescriptor::curve("E_inf", -1);
    for (i, arm) in arm_ranges(delta).into_iter().enumerate() {
        for (offset, t) in arm.enumerate() {
            out[t] = SheafDescriptor::curve(curve_label(i + 1, delta[i] - 1 - offset as u32), -1);
        }
    }
    out[mu - 2] = SheafDescriptor::curve("E_inf", 0);
    out[mu - 1] = SheafDescriptor::StructureSheaf.shift(1);
    Ok(out)
}

pub fn ep_collection(delta: [u32; 3]) -> Result<(Vec<MukaiVector>, NSContext)> {
    let ctx = NSContext::from_divisor_graph(delta)?;
    let vs = ep_descriptors(delta)?
        .iter()
        .map(|d| mukai_vector_of(d, &ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok((vs, ctx))
}

/// A free abelian group with a symmetric, even integral form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilinearLattice {
    pub gram: IntMat,
}

impl BilinearLattice {
    pub fn new(gram: IntMat) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Contract("Gram matrix is not symmetric".into()));
        }
        if gram.diagonal().iter().any(|d| (d % 2u32) != BigInt::zero()) {
            return Err(Error::Contract("lattice is not even".into()));
        }
        Ok(BilinearLattice { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        self.gram.bilinear(x, y)
    }
}

/// The lattice `T̂(t)` of [`that_diagram`].
pub fn that_lattice(t: [u32; 3]) -> Result<BilinearLattice> {
    BilinearLattice::new(gram_from_marked_graph(&that_diagram(t)?))
}

/// Matrix of `s_v(x) = x + ⟨x, v⟩·v`, acting on coordinate columns.
pub fn reflection(v: &[BigInt], g: &BilinearLattice) -> Result<IntMat> {
    let norm = g.pair(v, v)?;
    if norm != BigInt::from(-2) {
        return Err(Error::Domain(format!("reflection in a vector of square {norm}")));
    }
    let n = g.rank();
    let row: Vec<BigInt> = (0..n)
        .map(|j| v.iter().enumerate().map(|(k, vk)| vk * g.gram.get(k, j)).sum())
        .collect();
    Ok(IntMat::from_fn(n, n, |i, j| {
        let id = if i == j { BigInt::one() } else { BigInt::zero() };
        id + &v[i] * &row[j]
    }))
}

fn basis_vector(n: usize, k: usize) -> Vec<BigInt> {
    (0..n).map(|i| BigInt::from(i64::from(i == k))).collect()
}

/// `s_{e₁} ∘ s_{e₂} ∘ ⋯ ∘ s_{eₙ}` over the basis in index order.
pub fn coxeter_element(g: &BilinearLattice) -> Result<IntMat> {
    let n = g.rank();
    (0..n).try_fold(IntMat::identity(n), |acc, k| {
        acc.mul(&reflection(&basis_vector(n, k), g)?)
    })
}

/// Smallest `k <= bound` with `m^k = I`.
pub fn matrix_order(m: &IntMat, bound: u64) -> Option<u64> {
    if !m.is_square() {
        return None;
    }
    let id = IntMat::identity(m.rows());
    let mut power = m.clone();
    for k in 1..=bound {
        if power == id {
            return Some(k);
        }
        power = power.mul(m).ok()?;
    }
    None
}

/// Gram of `[O_Y]`, the curves at infinity, and `[O_p]` under the Mukai
/// pairing.
pub fn n_lattice(delta: [u32; 3]) -> Result<BilinearLattice> {
    let ctx = NSContext::from_divisor_graph(delta)?;
    let mut basis = vec![mukai_vector_of(&SheafDescriptor::StructureSheaf, &ctx)?];
    for k in 0..ctx.rank() {
        let mut c1 = vec![0; ctx.rank()];
        c1[k] = 1;
        basis.push(MukaiVector::new(0, c1, 0));
    }
    basis.push(mukai_vector_of(&SheafDescriptor::Point, &ctx)?);
    BilinearLattice::new(gram_of_vectors(&basis, &ctx)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeInvariants {
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub det: BigInt,
    pub signature: Signature,
    #[serde(serialize_with = "serialize_bigints")]
    pub invariant_factors: Vec<BigInt>,
}

impl LatticeInvariants {
    /// Invariant factors other than 1: the discriminant group when the form
    /// is nondegenerate.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn abs_det(&self) -> BigInt {
        self.det.abs()
    }
}

pub fn invariants_of(l: &BilinearLattice) -> Result<LatticeInvariants> {
    Ok(LatticeInvariants {
        rank: l.rank(),
        det: det_bareiss(&l.gram)?,
        signature: signature_of(&l.gram)?,
        invariant_factors: smith_invariant_factors(&l.gram),
    })
}

/// Characteristic polynomial, cyclotomic orders and order of a Coxeter
/// element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterData {
    pub char_poly: IntPoly,
    pub cyclotomic_orders: Option<Vec<u64>>,
    pub order: Option<u64>,
}

pub fn coxeter_data(g: &BilinearLattice, d_max: u64, order_bound: u64) -> Result<CoxeterData> {
    let c = coxeter_element(g)?;
    let p = char_poly(&c)?;
    Ok(CoxeterData {
        cyclotomic_orders: cyclotomic_factorization(&p, d_max)?,
        char_poly: p,
        order: matrix_order(&c, order_bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::lp_quiver;
    use crate::exactalg::perm_congruent;
    use crate::singularities::table;

    fn at(m: &IntMat, i: usize, j: usize) -> i64 {
        i64::try_from(m.get(i, j)).unwrap()
    }

    #[test]
    fn euler_form_of_simples() {
        let q = lp_quiver([2, 2, 2]).unwrap();
        let e = euler_simples(&q);
        let o = q.index_of(QuiverVertex::O).unwrap();
        let w = q.index_of(QuiverVertex::W).unwrap();
        let u = q.index_of(QuiverVertex::U { arm: 1, j: 1 }).unwrap();
        assert_eq!(at(&e, w, o), 2);
        assert_eq!(at(&e, u, o), -1);
        assert_eq!(at(&e, o, w), 0);
        for p in [[2, 3, 7], [4, 4, 4]] {
            let e = euler_simples(&lp_quiver(p).unwrap());
            assert!(e.diagonal().iter().all(|d| d.is_one()));
        }
    }

    #[test]
    fn symmetrized_values() {
        let q = lp_quiver([2, 3, 7]).unwrap();
        let s = symmetrize_k3(&euler_simples(&q)).unwrap();
        let o = q.index_of(QuiverVertex::O).unwrap();
        let w = q.index_of(QuiverVertex::W).unwrap();
        assert!(s.diagonal().iter().all(|d| *d == BigInt::from(2)));
        for &(a, b) in &q.solid_arrows {
            assert_eq!(at(&s, a, b), -1);
            assert_eq!(at(&s, b, a), -1);
        }
        assert_eq!(at(&s, o, w), 2);
        assert!(symmetrize_k3(&IntMat::zeros(2, 3)).is_err());

        let m = mukai_gram(&s).unwrap();
        assert_eq!(at(&m, o, o), -2);
        assert_eq!(at(&m, o, w), -2);
        let (a, b) = q.solid_arrows[0];
        assert_eq!(at(&m, a, b), 1);
        assert!(mukai_gram(&IntMat::from_rows(&[[0, 1], [0, 0]]).unwrap()).is_err());
    }

    #[test]
    fn pendant_row() {
        let base = IntMat::from_rows(&[[2, -1, 0], [-1, 2, 2], [0, 2, 2]]).unwrap();
        let p = append_pendant(&base, 1).unwrap();
        assert_eq!(p.rows(), 4);
        assert_eq!(at(&p, 3, 3), 2);
        let off: Vec<i64> = (0..3).map(|j| at(&p, 3, j)).collect();
        assert_eq!(off, [0, -1, 0]);
        assert!(p.is_symmetric());
        assert!(matches!(
            append_pendant(&base, 3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        ));
    }

    fn e12_ctx() -> NSContext {
        NSContext::from_divisor_graph([2, 3, 7]).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let ctx = e12_ctx();
        let n = ctx.rank();
        let oy = MukaiVector::new(1, vec![0; n], 1);
        let pt = MukaiVector::new(0, vec![0; n], 1);
        assert_eq!(mukai_pairing(&oy, &pt, &ctx).unwrap(), BigInt::from(-1));
        assert_eq!(mukai_pairing(&oy, &oy, &ctx).unwrap(), BigInt::from(-2));
        let mut c = vec![0; n];
        c[3] = 1;
        let curve = MukaiVector::new(0, c, 0);
        assert_eq!(mukai_pairing(&curve, &curve, &ctx).unwrap(), BigInt::from(-2));
        let short = MukaiVector::new(1, vec![0; 2], 1);
        assert!(matches!(mukai_pairing(&short, &oy, &ctx), Err(Error::Contract(_))));
    }

    /// `ch(O_C(k))` from `0 → O(-C) → O → O_C → 0` twisted by a degree-`k`
    /// line bundle on `C ≅ P¹`, multiplied by `√td = (1, 0, 1)`.
    fn curve_twist_oracle(ctx: &NSContext, label: &str, k: i64) -> MukaiVector {
        let i = ctx.index_of(label).unwrap();
        let c_sq = i64::try_from(ctx.gram.get(i, i)).unwrap();
        // ch(O) - ch(O(-C)) = (1,0,0) - (1, -C, C²/2)
        let (r, deg4) = (0, -c_sq / 2 + k);
        let mut c1 = vec![0; ctx.rank()];
        c1[i] = 1;
        // (r, c1, deg4) · (1, 0, 1) = (r, c1, deg4 + r)
        MukaiVector::new(r, c1, deg4 + r)
    }

    #[test]
    fn mukai_vectors() {
        let ctx = e12_ctx();
        let n = ctx.rank();
        for k in -3..=3 {
            for label in ["E_inf", "E3_6", "E1_1"] {
                assert_eq!(
                    mukai_vector_of(&SheafDescriptor::curve(label, k), &ctx).unwrap(),
                    curve_twist_oracle(&ctx, label, k)
                );
            }
        }
        let oy = mukai_vector_of(&SheafDescriptor::StructureSheaf, &ctx).unwrap();
        assert_eq!(oy, MukaiVector::new(1, vec![0; n], 1));
        assert_eq!(mukai_pairing(&oy, &oy, &ctx).unwrap(), BigInt::from(-2));
        let shifted = mukai_vector_of(&SheafDescriptor::StructureSheaf.shift(1), &ctx).unwrap();
        assert_eq!(shifted, MukaiVector::new(-1, vec![0; n], -1));
        assert_eq!(
            mukai_vector_of(&SheafDescriptor::StructureSheaf.shift(2), &ctx).unwrap(),
            oy
        );
        assert!(matches!(
            mukai_vector_of(&SheafDescriptor::curve("E9_9", 0), &ctx),
            Err(Error::Lookup { .. })
        ));
    }

    #[test]
    fn riemann_roch_sign() {
        let ctx = e12_ctx();
        // Euler characteristics computed directly on the K3 surface
        let cases: Vec<(SheafDescriptor, SheafDescriptor, i64)> = vec![
            (SheafDescriptor::StructureSheaf, SheafDescriptor::Point, 1),
            (SheafDescriptor::StructureSheaf, SheafDescriptor::StructureSheaf, 2),
            (SheafDescriptor::Point, SheafDescriptor::Point, 0),
            (SheafDescriptor::StructureSheaf, SheafDescriptor::curve("E_inf", 3), 4),
            (SheafDescriptor::StructureSheaf, SheafDescriptor::curve("E2_1", -1), 0),
            (SheafDescriptor::curve("E1_1", 2), SheafDescriptor::curve("E1_1", 2), 2),
            // disjoint curves
            (SheafDescriptor::curve("E1_1", 0), SheafDescriptor::curve("E2_1", 5), 0),
            // curves meeting transversally in one point
            (SheafDescriptor::curve("E_inf", 0), SheafDescriptor::curve("E1_1", 0), -1),
        ];
        for (a, b, chi) in cases {
            let v = mukai_vector_of(&a, &ctx).unwrap();
            let w = mukai_vector_of(&b, &ctx).unwrap();
            assert_eq!(-mukai_pairing(&v, &w, &ctx).unwrap(), BigInt::from(chi), "{a:?} {b:?}");
        }
    }

    #[test]
    fn ep_pairings() {
        let (vs, ctx) = ep_collection([2, 3, 7]).unwrap();
        let mu = vs.len();
        assert_eq!(mu, 12);
        let p = |i: usize, j: usize| mukai_pairing(&vs[i], &vs[j], &ctx).unwrap();
        assert_eq!(p(0, mu - 2), BigInt::from(-2));
        assert_eq!(p(mu - 1, mu - 2), BigInt::from(1));
        for t in 1..mu - 2 {
            assert_eq!(p(mu - 1, t), BigInt::zero());
        }
    }

    #[test]
    fn reflections() {
        let g = that_lattice([2, 3, 7]).unwrap();
        let n = g.rank();
        let v = basis_vector(n, 3);
        let s = reflection(&v, &g).unwrap();
        let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
        assert_eq!(s.apply(&v).unwrap(), neg);
        // e₆ is not adjacent to e₄ in T̂(2,3,7)
        let x = basis_vector(n, 5);
        assert_eq!(g.pair(&x, &v).unwrap(), BigInt::zero());
        assert_eq!(s.apply(&x).unwrap(), x);
        assert_eq!(s.mul(&s).unwrap(), IntMat::identity(n));
        assert_eq!(s.transpose().mul(&g.gram).unwrap().mul(&s).unwrap(), g.gram);
        let zero = vec![BigInt::zero(); n];
        assert!(matches!(reflection(&zero, &g), Err(Error::Domain(_))));
    }

    #[test]
    fn coxeter_orders() {
        let one = BilinearLattice::new(IntMat::from_rows(&[[-2]]).unwrap()).unwrap();
        let c = coxeter_element(&one).unwrap();
        assert_eq!(c, IntMat::from_rows(&[[-1]]).unwrap());
        assert_eq!(matrix_order(&c, 10), Some(2));

        let a2 = BilinearLattice::new(IntMat::from_rows(&[[-2, 1], [1, -2]]).unwrap()).unwrap();
        let c = coxeter_element(&a2).unwrap();
        // direct powering by hand: c = s₁s₂ = [[0,-1],[1,-1]]
        assert_eq!(c, IntMat::from_rows(&[[0, -1], [1, -1]]).unwrap());
        assert_eq!(matrix_order(&c, 10), Some(3));
        assert_eq!(matrix_order(&c, 2), None);

        let e12 = that_lattice([2, 3, 7]).unwrap();
        assert_eq!(matrix_order(&coxeter_element(&e12).unwrap(), 84), Some(42));
    }

    #[test]
    fn n_lattice_shape() {
        let l = n_lattice([2, 3, 7]).unwrap();
        assert_eq!(l.rank(), 12);
        let last = l.rank() - 1;
        assert_eq!(l.gram.get(0, last), &BigInt::from(-1));
        assert_eq!(l.gram.get(last, last), &BigInt::zero());
    }

    #[test]
    fn invariants_examples() {
        let h = invariants_of(&BilinearLattice::new(IntMat::from_rows(&[[0, 1], [1, 0]]).unwrap()).unwrap())
            .unwrap();
        assert_eq!(h.det, BigInt::from(-1));
        assert_eq!(h.signature, Signature::new(1, 0, 1));
        assert_eq!(h.invariant_factors, vec![BigInt::one(), BigInt::one()]);
        let a1 = invariants_of(&BilinearLattice::new(IntMat::from_rows(&[[-2]]).unwrap()).unwrap()).unwrap();
        assert_eq!((a1.det.clone(), a1.invariant_factors.clone()), (BigInt::from(-2), vec![BigInt::from(2)]));
        let e12 = invariants_of(&that_lattice([2, 3, 7]).unwrap()).unwrap();
        assert_eq!(e12.abs_det(), BigInt::one());
    }

    #[test]
    fn table_wide_lattice_identities() {
        for r in table() {
            let delta = r.dolgachev;
            let t = that_lattice(delta).unwrap();

            let q = quiver_k3_gram(delta).unwrap();
            let w = quiver_witness(delta).unwrap();
            assert_eq!(q.permuted(&w).unwrap(), t.gram, "{} witness", r.name);
            assert!(perm_congruent(&q, &t.gram).unwrap().is_some());

            let (vs, ctx) = ep_collection(delta).unwrap();
            assert_eq!(gram_of_vectors(&vs, &ctx).unwrap(), t.gram, "{} EP", r.name);

            let n = invariants_of(&n_lattice(delta).unwrap()).unwrap();
            let ti = invariants_of(&t).unwrap();
            assert_eq!(n.rank, ti.rank);
            assert_eq!(n.abs_det(), ti.abs_det());
            assert_eq!(n.signature, ti.signature);
            assert_eq!(n.invariant_factors, ti.invariant_factors);

            let g = that_lattice(r.gabrielov).unwrap();
            for k in 0..g.rank() {
                let s = reflection(&basis_vector(g.rank(), k), &g).unwrap();
                assert_eq!(s.transpose().mul(&g.gram).unwrap().mul(&s).unwrap(), g.gram);
            }
        }
    }
}
