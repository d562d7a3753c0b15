//! The check registry `C1`..`C9` and the machine-readable report.
//!
//! | id | subject | claim |
//! |----|---------|-------|
//! | C1 | row  | `γ₁+γ₂+γ₃` equals the subscript and `∏(h/aᵢ - 1)` |
//! | C2 | row  | `dual(dual(f)) = f`, `δ(f) = γ(f̌)`, `γ(f) = δ(f̌)` |
//! | C3 | row  | Gorenstein parameter `-1`, and `0` with an extra weight 1 |
//! | C4 | row  | `Σδ + Σγ = 24` |
//! | C5 | row  | quiver Mukai Gram is permutation-congruent to `T̂(δ)` via the documented witness |
//! | C6 | row  | Gram of the spherical sheaf collection equals `T̂(δ)` |
//! | C7 | row  | `T̂(δ)`, `T̂(γ)` have inertia `(2, 0, rank-2)`; divisor-graph Gram negative definite |
//! | C8 | row  | Coxeter polynomial of `T̂(γ)` is a product of `Φ_d` with `d ∣ h`; order `<= 2h` (`= h` for E12) |
//! | C9 | pair | `T̂(δ)`, `T̂(γ)` share `|det|` and nontrivial invariant factors; `N(Y) ≅ T̂(δ)` invariants |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::diagrams::{divisor_graph, gram_from_marked_graph};
use crate::exactalg::{perm_congruent, signature_of, Signature, DEFAULT_CYCLOTOMIC_BOUND};
use crate::ktheory::{
    coxeter_data, ep_collection, ep_descriptors, gram_of_vectors, invariants_of, n_lattice,
    quiver_k3_gram, quiver_witness, that_lattice, LatticeInvariants,
};
use crate::singularities::{milnor_number, SingularityRecord, Table};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
    ];

    /// Checks run once per table row.
    pub const ROW: [CheckId; 8] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::C1 => "C1",
            CheckId::C2 => "C2",
            CheckId::C3 => "C3",
            CheckId::C4 => "C4",
            CheckId::C5 => "C5",
            CheckId::C6 => "C6",
            CheckId::C7 => "C7",
            CheckId::C8 => "C8",
            CheckId::C9 => "C9",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            CheckId::C1 => "Milnor-number consistency",
            CheckId::C2 => "strange-duality involution",
            CheckId::C3 => "Gorenstein parameters",
            CheckId::C4 => "rank-24 complement",
            CheckId::C5 => "quiver Mukai Gram congruent to T(delta)",
            CheckId::C6 => "spherical sheaf collection equals T(delta)",
            CheckId::C7 => "lattice inertia",
            CheckId::C8 => "Coxeter element monodromy",
            CheckId::C9 => "strange duality at the lattice level",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Lookup {
                kind: "check id",
                name: s.to_string(),
            })
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: CheckId,
    pub subject: String,
    pub status: Status,
    pub details: String,
    pub data: Option<Value>,
}

impl CheckResult {
    fn new(check_id: CheckId, subject: impl Into<String>, ok: bool, details: String, data: Value) -> Self {
        CheckResult {
            check_id,
            subject: subject.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            details,
            data: Some(data),
        }
    }

    fn errored(check_id: CheckId, subject: impl Into<String>, e: Error) -> Self {
        CheckResult {
            check_id,
            subject: subject.into(),
            status: Status::Fail,
            details: format!("error: {e}"),
            data: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    fn from_results(results: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            results,
            summary,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the registry against a [`Table`].
#[derive(Clone, Debug)]
pub struct Verifier {
    table: Table,
    d_max: u64,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Self::with_table(Table::canonical())
    }

    pub fn with_table(table: Table) -> Self {
        Verifier {
            table,
            d_max: DEFAULT_CYCLOTOMIC_BOUND,
        }
    }

    /// Largest cyclotomic order tried in C8.
    pub fn cyclotomic_bound(mut self, d_max: u64) -> Self {
        self.d_max = d_max;
        self
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    /// C1–C8 for one row.
    pub fn verify_record(&self, name: &str) -> Result<Vec<CheckResult>> {
        let r = self.table.lookup(name)?;
        Ok(self.row_checks(r, None))
    }

    /// C9 for the dual pair containing `name`.
    pub fn verify_pair(&self, name: &str) -> Result<Vec<CheckResult>> {
        let r = self.table.lookup(name)?;
        let (a, b) = self
            .table
            .dual_pairs()
            .into_iter()
            .find(|(a, b)| a.name == name || b.name == name)
            .unwrap_or((r, r));
        Ok(self.pair_checks(a, b))
    }

    pub fn run_all(&self) -> VerificationReport {
        self.run(None)
    }

    /// All rows then all pairs, optionally restricted to one check id.
    /// Rows are evaluated in parallel; results keep table order.
    pub fn run(&self, only: Option<CheckId>) -> VerificationReport {
        let mut results: Vec<CheckResult> = Vec::new();
        if only != Some(CheckId::C9) {
            let rows: Vec<Vec<CheckResult>> = self
                .table
                .records()
                .par_iter()
                .map(|r| self.row_checks(r, only))
                .collect();
            results.extend(rows.into_iter().flatten());
        }
        if only.is_none() || only == Some(CheckId::C9) {
            let pairs = self.table.dual_pairs();
            let checked: Vec<Vec<CheckResult>> = pairs
                .par_iter()
                .map(|(a, b)| self.pair_checks(a, b))
                .collect();
            results.extend(checked.into_iter().flatten());
        }
        VerificationReport::from_results(results)
    }

    fn row_checks(&self, r: &SingularityRecord, only: Option<CheckId>) -> Vec<CheckResult> {
        let mut out = Vec::new();
        for id in CheckId::ROW {
            if only.is_some_and(|o| o != id) {
                continue;
            }
            match id {
                CheckId::C1 => out.push(check_milnor(r)),
                CheckId::C2 => out.push(self.check_duality_numbers(r)),
                CheckId::C3 => out.push(check_gorenstein(r)),
                CheckId::C4 => out.push(check_rank_24(r)),
                CheckId::C5 => out.push(guard(id, &r.name, || check_quiver(r))),
                CheckId::C6 => out.push(guard(id, &r.name, || check_ep(r))),
                CheckId::C7 => {
                    out.push(guard(id, &r.name, || check_inertia(r)));
                    out.push(guard(id, format!("{}:divisor", r.name), || check_divisor_definite(r)));
                }
                CheckId::C8 => out.push(guard(id, &r.name, || check_monodromy(r, self.d_max))),
                CheckId::C9 => unreachable!("pair check"),
            }
        }
        out
    }

    fn pair_checks(&self, a: &SingularityRecord, b: &SingularityRecord) -> Vec<CheckResult> {
        let subject = if a.name == b.name {
            a.name.clone()
        } else {
            format!("{}/{}", a.name, b.name)
        };
        let mut members = vec![a];
        if b.name != a.name {
            members.push(b);
        }
        vec![guard(CheckId::C9, &subject, || {
            let mut ok = true;
            let mut details = Vec::new();
            let mut data = Vec::new();
            if a.dual != b.name || b.dual != a.name {
                ok = false;
                details.push(format!("{} and {} are not mutual duals", a.name, b.name));
            }
            for m in members {
                let c = duality_check(&m.name, m.dolgachev, m.gabrielov)?;
                ok &= c.passed();
                details.push(c.details);
                data.push(c.data.unwrap_or(Value::Null));
            }
            Ok((ok, details.join("; "), Value::Array(data)))
        })]
    }
}

/// Turns a fallible check body into a result, reporting errors as failures.
fn guard(
    id: CheckId,
    subject: impl Into<String>,
    body: impl FnOnce() -> Result<(bool, String, Value)>,
) -> CheckResult {
    let subject = subject.into();
    match body() {
        Ok((ok, details, data)) => CheckResult::new(id, subject, ok, details, data),
        Err(e) => CheckResult::errored(id, subject, e),
    }
}

fn check_milnor(r: &SingularityRecord) -> CheckResult {
    let mu = milnor_number(r);
    let product = r.ws.milnor_product();
    let sub = r.subscript();
    let ok = sub == Some(mu) && product == BigRational::from_integer(mu.into());
    CheckResult::new(
        CheckId::C1,
        &r.name,
        ok,
        format!(
            "gamma sum {mu}, subscript {}, prod(h/a_i - 1) = {product}",
            sub.map_or("missing".to_string(), |s| s.to_string())
        ),
        json!({
            "mu": mu,
            "subscript": sub,
            "milnor_product": product.to_string(),
            "integral_quotients": r.ws.has_integral_quotients(),
        }),
    )
}

impl Verifier {
    fn check_duality_numbers(&self, r: &SingularityRecord) -> CheckResult {
        let dual = match self.table.lookup(&r.dual) {
            Ok(d) => d,
            Err(e) => return CheckResult::errored(CheckId::C2, &r.name, e),
        };
        let involutive = dual.dual == r.name;
        let swapped = r.dolgachev == dual.gabrielov && r.gabrielov == dual.dolgachev;
        CheckResult::new(
            CheckId::C2,
            &r.name,
            involutive && swapped,
            format!(
                "dual {} (dual of dual {}), delta {} vs dual gamma {}, gamma {} vs dual delta {}",
                dual.name,
                dual.dual,
                tri(r.dolgachev),
                tri(dual.gabrielov),
                tri(r.gabrielov),
                tri(dual.dolgachev)
            ),
            json!({ "dual": dual.name, "dual_of_dual": dual.dual, "involutive": involutive, "numbers_swapped": swapped }),
        )
    }
}

fn check_gorenstein(r: &SingularityRecord) -> CheckResult {
    let a3 = r.ws.gorenstein_parameter();
    let a4 = r.ws.with_unit_weight().gorenstein_parameter();
    CheckResult::new(
        CheckId::C3,
        &r.name,
        r.ws.weights.len() == 3 && a3 == -1 && a4 == 0,
        format!("parameter {a3} for {}, {a4} with extra weight 1", r.ws),
        json!({ "three_variable": a3, "with_unit_weight": a4 }),
    )
}

fn check_rank_24(r: &SingularityRecord) -> CheckResult {
    let d: u32 = r.dolgachev.iter().sum();
    let g: u32 = r.gabrielov.iter().sum();
    CheckResult::new(
        CheckId::C4,
        &r.name,
        d + g == 24,
        format!("{d} + {g} = {}", d + g),
        json!({ "delta_sum": d, "gamma_sum": g }),
    )
}

fn check_quiver(r: &SingularityRecord) -> Result<(bool, String, Value)> {
    let delta = r.dolgachev;
    let quiver = quiver_k3_gram(delta)?;
    let target = that_lattice(delta)?.gram;
    let witness = quiver_witness(delta)?;
    let witness_ok = quiver.permuted(&witness)? == target;
    let found = perm_congruent(&quiver, &target)?;
    let found_ok = found
        .as_ref()
        .map(|p| quiver.permuted(p).map(|m| m == target))
        .transpose()?
        .unwrap_or(false);
    Ok((
        witness_ok && found_ok,
        format!("documented witness {}, search {}", verdict(witness_ok), verdict(found_ok)),
        json!({ "quiver_gram": quiver, "that_gram": target, "witness": witness, "search_witness": found }),
    ))
}

fn check_ep(r: &SingularityRecord) -> Result<(bool, String, Value)> {
    let (vs, ctx) = ep_collection(r.dolgachev)?;
    let gram = gram_of_vectors(&vs, &ctx)?;
    let target = that_lattice(r.dolgachev)?.gram;
    let ok = gram == target;
    let mismatches = if ok {
        0
    } else {
        gram.entries().iter().zip(target.entries()).filter(|(a, b)| a != b).count()
    };
    Ok((
        ok,
        format!("{} Mukai vectors, {mismatches} mismatching Gram entries", vs.len()),
        json!({ "sheaves": ep_descriptors(r.dolgachev)?, "mukai_vectors": vs, "gram": gram, "ns_gram": ctx.gram }),
    ))
}

fn check_inertia(r: &SingularityRecord) -> Result<(bool, String, Value)> {
    let mut ok = true;
    let mut details = Vec::new();
    let mut data = serde_json::Map::new();
    for (label, t) in [("delta", r.dolgachev), ("gamma", r.gabrielov)] {
        let sum = t.iter().sum::<u32>() as usize;
        let s = signature_of(&that_lattice(t)?.gram)?;
        let expected = Signature::new(2, 0, sum - 2);
        ok &= s == expected;
        details.push(format!("T{} inertia {s}, expected {expected}", tri(t)));
        data.insert(label.to_string(), json!({ "triple": t, "signature": s }));
    }
    Ok((ok, details.join("; "), Value::Object(data)))
}

fn check_divisor_definite(r: &SingularityRecord) -> Result<(bool, String, Value)> {
    let gram = gram_from_marked_graph(&divisor_graph(r.dolgachev)?);
    let s = signature_of(&gram)?;
    let ok = s.is_negative_definite();
    Ok((
        ok,
        format!(
            "divisor graph {}: inertia {s}, {}",
            tri(r.dolgachev),
            if ok { "negative definite" } else { "not negative definite" }
        ),
        json!({ "gram": gram, "signature": s }),
    ))
}

fn check_monodromy(r: &SingularityRecord, d_max: u64) -> Result<(bool, String, Value)> {
    let h = u64::from(r.ws.h);
    let lattice = that_lattice(r.gabrielov)?;
    let cox = coxeter_data(&lattice, d_max, 2 * h)?;
    let cyclotomic_ok = cox
        .cyclotomic_orders
        .as_ref()
        .is_some_and(|ds| ds.iter().all(|d| h % d == 0));
    let order_equals_h = cox.order == Some(h);
    // E12 is the reference row where order = h is required outright
    let ok = cyclotomic_ok && cox.order.is_some() && (r.name != "E12" || order_equals_h);
    Ok((
        ok,
        format!(
            "char poly {}; cyclotomic orders {} (all divide h = {h}: {cyclotomic_ok}); order {} (= h: {order_equals_h})",
            cox.char_poly,
            cox.cyclotomic_orders.as_ref().map_or("none".to_string(), |ds| format!("{ds:?}")),
            cox.order.map_or("not found within 2h".to_string(), |o| o.to_string()),
        ),
        json!({ "h": h, "coxeter": cox, "order_equals_h": order_equals_h }),
    ))
}

fn tri(t: [u32; 3]) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "FAILED"
    }
}

fn abs_det_and_discriminant(inv: &LatticeInvariants) -> (BigInt, Vec<BigInt>) {
    let mut f = inv.nontrivial_factors();
    f.sort();
    (inv.abs_det(), f)
}

/// Compares `T̂(delta)` with `T̂(gamma)` (|det| and nontrivial invariant
/// factors) and `N(Y)` for `delta` with `T̂(delta)` (rank, |det|, inertia,
/// invariant factors).
pub fn duality_check(subject: &str, delta: [u32; 3], gamma: [u32; 3]) -> Result<CheckResult> {
    let td = invariants_of(&that_lattice(delta)?)?;
    let tg = invariants_of(&that_lattice(gamma)?)?;
    let ny = invariants_of(&n_lattice(delta)?)?;
    let (dd, fd) = abs_det_and_discriminant(&td);
    let (dg, fg) = abs_det_and_discriminant(&tg);
    let duality_ok = dd == dg && fd == fg && !dd.is_zero();
    let ny_ok = ny.rank == td.rank
        && ny.abs_det() == td.abs_det()
        && ny.signature == td.signature
        && ny.invariant_factors == td.invariant_factors;
    let show = |f: &[BigInt]| f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(CheckResult::new(
        CheckId::C9,
        subject,
        duality_ok && ny_ok,
        format!(
            "{subject}: |det T{}| = {dd} [{}] vs |det T{}| = {dg} [{}]; N(Y) match {}",
            tri(delta),
            show(&fd),
            tri(gamma),
            show(&fg),
            verdict(ny_ok)
        ),
        json!({ "delta": delta, "gamma": gamma, "that_delta": td, "that_gamma": tg, "n_lattice": ny }),
    ))
}

pub fn verify_record(name: &str) -> Result<Vec<CheckResult>> {
    Verifier::new().verify_record(name)
}

pub fn verify_pair(name: &str) -> Result<Vec<CheckResult>> {
    Verifier::new().verify_pair(name)
}

pub fn run_all() -> VerificationReport {
    Verifier::new().run_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status_of(results: &[CheckResult], id: CheckId, subject: &str) -> Status {
        results
            .iter()
            .find(|r| r.check_id == id && r.subject == subject)
            .unwrap_or_else(|| panic!("{id} {subject} missing"))
            .status
    }

    #[test]
    fn e12_row_checks() {
        let res = verify_record("E12").unwrap();
        for id in CheckId::ROW {
            assert_eq!(status_of(&res, id, "E12"), Status::Pass, "{id}");
        }
        // the stated negative-definiteness of the divisor graph does not hold
        assert_eq!(status_of(&res, CheckId::C7, "E12:divisor"), Status::Fail);
        assert!(matches!(verify_record("X99"), Err(Error::Lookup { .. })));
    }

    #[test]
    fn corrupted_dolgachev_fails_c2() {
        let mut table = Table::canonical();
        let e13 = table.records_mut().iter_mut().find(|r| r.name == "E13").unwrap();
        e13.dolgachev = [2, 4, 6];
        let res = Verifier::with_table(table).verify_record("E13").unwrap();
        assert_eq!(status_of(&res, CheckId::C2, "E13"), Status::Fail);
        assert_eq!(status_of(&res, CheckId::C1, "E13"), Status::Pass);
    }

    #[test]
    fn pairs() {
        let res = verify_pair("Z11").unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].subject, "E13/Z11");
        assert!(res[0].passed(), "{}", res[0].details);
        let res = verify_pair("E12").unwrap();
        assert_eq!(res[0].subject, "E12");
        assert!(res[0].passed());
        let bad = duality_check("synthetic", [2, 3, 7], [2, 3, 8]).unwrap();
        assert_eq!(bad.status, Status::Fail);
    }

    #[test]
    fn check_ids_parse() {
        assert_eq!("c9".parse::<CheckId>().unwrap(), CheckId::C9);
        assert!("C10".parse::<CheckId>().is_err());
        assert_eq!(serde_json::to_string(&CheckId::C4).unwrap(), "\"C4\"");
    }

    #[test]
    fn filtered_run_only_contains_that_check() {
        let rep = Verifier::new().run(Some(CheckId::C9));
        assert_eq!(rep.results.len(), 10);
        assert!(rep.results.iter().all(|r| r.check_id == CheckId::C9 && r.passed()));
        let rep = Verifier::new().run(Some(CheckId::C3));
        assert_eq!(rep.results.len(), 14);
    }
}
