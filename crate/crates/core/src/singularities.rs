//! Arnold's 14 exceptional unimodal singularities and weight-system
//! arithmetic: Milnor numbers, Gorenstein parameters, Hilbert series, and the
//! rank-one abelian group `L` graded by a weighted projective line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactalg::IntPoly;
use crate::{Error, Result};

/// Weights of the variables and degree `h` of a weighted-homogeneous
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightSystem {
    pub weights: Vec<u32>,
    pub h: u32,
}

impl WeightSystem {
    pub fn new(weights: Vec<u32>, h: u32) -> Result<Self> {
        if weights.is_empty() || weights.iter().any(|&w| w == 0 || w >= h) {
            return Err(Error::Domain(format!(
                "weights {weights:?} must be positive and below h = {h}"
            )));
        }
        Ok(WeightSystem { weights, h })
    }

    /// The same system with an extra variable of weight 1 appended.
    pub fn with_unit_weight(&self) -> WeightSystem {
        let mut weights = self.weights.clone();
        weights.push(1);
        WeightSystem { weights, h: self.h }
    }

    pub fn gorenstein_parameter(&self) -> i64 {
        gorenstein_parameter(&self.weights, self.h)
    }

    pub fn hilbert_series(&self) -> RationalSeries {
        hilbert_series(&self.weights, self.h)
    }

    /// `∏ (h/aᵢ - 1)` evaluated exactly over the rationals.
    pub fn milnor_product(&self) -> BigRational {
        self.weights.iter().fold(BigRational::one(), |acc, &a| {
            acc * (BigRational::new(self.h.into(), a.into()) - BigRational::one())
        })
    }

    /// Whether every `h/aᵢ` is an integer.
    pub fn has_integral_quotients(&self) -> bool {
        self.weights.iter().all(|&a| self.h % a == 0)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({};{})", ws.join(","), self.h)
    }
}

/// One row of the dataset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SingularityRecord {
    pub name: String,
    #[serde(flatten)]
    pub ws: WeightSystem,
    pub dolgachev: [u32; 3],
    pub gabrielov: [u32; 3],
    pub dual: String,
}

impl SingularityRecord {
    /// The numeric subscript of the name, e.g. 12 for `E12`.
    pub fn subscript(&self) -> Option<u32> {
        self.name.get(1..)?.parse().ok()
    }

    pub fn is_self_dual(&self) -> bool {
        self.name == self.dual
    }
}

// name, (a, b, c; h), Dolgachev, Gabrielov, dual
const ROWS: [(&str, [u32; 3], u32, [u32; 3], [u32; 3], &str); 14] = [
    ("E12", [6, 14, 21], 42, [2, 3, 7], [2, 3, 7], "E12"),
    ("E13", [4, 10, 15], 30, [2, 4, 5], [2, 3, 8], "Z11"),
    ("Z11", [6, 8, 15], 30, [2, 3, 8], [2, 4, 5], "E13"),
    ("E14", [3, 8, 12], 24, [3, 3, 4], [2, 3, 9], "Q10"),
    ("Q10", [6, 8, 9], 24, [2, 3, 9], [3, 3, 4], "E14"),
    ("Z12", [4, 6, 11], 22, [2, 4, 6], [2, 4, 6], "Z12"),
    ("W12", [4, 5, 10], 20, [2, 5, 5], [2, 5, 5], "W12"),
    ("Z13", [3, 5, 9], 18, [3, 3, 5], [2, 4, 7], "Q11"),
    ("Q11", [4, 6, 7], 18, [2, 4, 7], [3, 3, 5], "Z13"),
    ("W13", [3, 4, 8], 16, [3, 4, 4], [2, 5, 6], "S11"),
    ("S11", [4, 5, 6], 16, [2, 5, 6], [3, 4, 4], "W13"),
    ("Q12", [3, 5, 6], 15, [3, 3, 6], [3, 3, 6], "Q12"),
    ("S12", [3, 4, 5], 13, [3, 4, 5], [3, 4, 5], "S12"),
    ("U12", [3, 4, 4], 12, [4, 4, 4], [4, 4, 4], "U12"),
];

/// The 14 records in their canonical order.
pub fn table() -> Vec<SingularityRecord> {
    ROWS.iter()
        .map(|&(name, w, h, d, g, dual)| SingularityRecord {
            name: name.to_string(),
            ws: WeightSystem {
                weights: w.to_vec(),
                h,
            },
            dolgachev: d,
            gabrielov: g,
            dual: dual.to_string(),
        })
        .collect()
}

/// An ordered collection of records with name lookup. [`Table::canonical`]
/// is the real dataset; other instances exist for fault-injection tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    records: Vec<SingularityRecord>,
}

impl Default for Table {
    fn default() -> Self {
        Self::canonical()
    }
}

impl Table {
    pub fn canonical() -> Self {
        Table { records: table() }
    }

    pub fn from_records(records: Vec<SingularityRecord>) -> Self {
        Table { records }
    }

    pub fn records(&self) -> &[SingularityRecord] {
        &self.records
    }

    pub fn records_mut(&mut self) -> &mut [SingularityRecord] {
        &mut self.records
    }

    pub fn lookup(&self, name: &str) -> Result<&SingularityRecord> {
        self.records
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| Error::Lookup {
                kind: "singularity",
                name: name.to_string(),
            })
    }

    pub fn strange_dual(&self, name: &str) -> Result<&SingularityRecord> {
        let r = self.lookup(name)?;
        self.lookup(&r.dual)
    }

    /// Dual pairs in table order, each listed once; self-dual rows appear as
    /// singletons `(x, x)`.
    pub fn dual_pairs(&self) -> Vec<(&SingularityRecord, &SingularityRecord)> {
        let mut pairs = Vec::new();
        for (i, r) in self.records.iter().enumerate() {
            let partner = self.records.iter().position(|s| s.name == r.dual);
            match partner {
                Some(j) if j < i => {}
                Some(j) => pairs.push((r, &self.records[j])),
                // dangling dual: still reported so the pair check can fail
                None => pairs.push((r, r)),
            }
        }
        pairs
    }

    /// JSON array of `{name, weights, h, dolgachev, gabrielov, dual}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.records).expect("records serialize")
    }
}

pub fn lookup(name: &str) -> Result<SingularityRecord> {
    Table::canonical().lookup(name).cloned()
}

pub fn strange_dual(name: &str) -> Result<SingularityRecord> {
    Table::canonical().strange_dual(name).cloned()
}

/// `μ = γ₁ + γ₂ + γ₃`, the number of vertices of the Coxeter–Dynkin diagram.
pub fn milnor_number(r: &SingularityRecord) -> u32 {
    r.gabrielov.iter().sum()
}

/// `a₁ + ⋯ + aₙ - h`.
pub fn gorenstein_parameter(weights: &[u32], h: u32) -> i64 {
    weights.iter().map(|&w| i64::from(w)).sum::<i64>() - i64::from(h)
}

/// A rational function `numerator / denominator` with `denominator(0) = ±1`,
/// so that its power-series coefficients are integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

/// `(1 - t^h) / ∏ (1 - t^{aᵢ})`.
pub fn hilbert_series(weights: &[u32], h: u32) -> RationalSeries {
    let one = IntPoly::one();
    let numerator = one.sub(&IntPoly::monomial(h as usize));
    let denominator = weights.iter().fold(IntPoly::one(), |acc, &a| {
        acc.mul(&one.sub(&IntPoly::monomial(a as usize)))
    });
    RationalSeries {
        numerator,
        denominator,
    }
}

/// The first `n + 1` power-series coefficients `c₀ … cₙ`.
pub fn series_coeffs(s: &RationalSeries, n: usize) -> Result<Vec<BigInt>> {
    let d0 = s.denominator.coeff(0);
    if d0.abs() != BigInt::one() {
        return Err(Error::Contract(format!(
            "denominator constant term {d0} is not a unit"
        )));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for e in 0..=n {
        let mut acc = s.numerator.coeff(e);
        for k in 1..=e.min(s.denominator.coeffs().len().saturating_sub(1)) {
            let dk = s.denominator.coeff(k);
            if !dk.is_zero() {
                acc -= dk * &out[e - k];
            }
        }
        out.push(acc * &d0);
    }
    Ok(out)
}

/// Element `ℓ·c + a₁x₁ + a₂x₂ + a₃x₃` of `L` in normal form `0 <= aᵢ < pᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LElement {
    pub ell: i64,
    pub arm: [i64; 3],
}

/// An unreduced integer combination `Σ xᵢ·x⃗ᵢ + c·c⃗`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LCombination {
    pub x: [i64; 3],
    pub c: i64,
}

impl LCombination {
    pub fn x(i: usize, k: i64) -> Self {
        let mut x = [0; 3];
        x[i] = k;
        LCombination { x, c: 0 }
    }

    pub fn c(k: i64) -> Self {
        LCombination { x: [0; 3], c: k }
    }

    /// `ω⃗ = c⃗ - x⃗₁ - x⃗₂ - x⃗₃`.
    pub fn omega() -> Self {
        LCombination { x: [-1; 3], c: 1 }
    }

    pub fn add(self, other: Self) -> Self {
        LCombination {
            x: [
                self.x[0] + other.x[0],
                self.x[1] + other.x[1],
                self.x[2] + other.x[2],
            ],
            c: self.c + other.c,
        }
    }
}

impl From<LElement> for LCombination {
    fn from(e: LElement) -> Self {
        LCombination { x: e.arm, c: e.ell }
    }
}

fn check_weights(p: [u32; 3], what: &str) -> Result<()> {
    if p.iter().any(|&pi| pi < 2) {
        return Err(Error::Domain(format!("{what} {p:?}: every entry must be at least 2")));
    }
    Ok(())
}

/// Rewrites `raw` using `pᵢ·x⃗ᵢ = c⃗`.
pub fn l_normal_form(raw: LCombination, p: [u32; 3]) -> Result<LElement> {
    check_weights(p, "weights")?;
    let mut ell = raw.c;
    let mut arm = [0; 3];
    for i in 0..3 {
        let pi = i64::from(p[i]);
        arm[i] = raw.x[i].rem_euclid(pi);
        ell += raw.x[i].div_euclid(pi);
    }
    Ok(LElement { ell, arm })
}

/// Normal form of the dualizing element `ω⃗`.
pub fn dualizing_element(p: [u32; 3]) -> Result<LElement> {
    l_normal_form(LCombination::omega(), p)
}
