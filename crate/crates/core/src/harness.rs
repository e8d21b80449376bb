//! Counting claims and seeded sweeps over every order of each requested size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{FunctionVector, Rational};
use crate::fusion::{
    build_sgraph, check_edge_relation, check_fusion_certificates, check_structure,
    interval_violations, naive_shift_counterexample, s_property, zset, SGraph,
};
use crate::orders::{sample_coeffs, CoeffOrder, NumericCoeffs, Profile};
use crate::polytope::{
    build_system, compare_systems, contains, enumerate_vertices, verify_theorem, Provenance,
    SystemComparison, Variant,
};
use crate::tableau::{
    corollary_43_check, deconstruct, evaluate_diffs, evaluate_rows, order_relations,
    rebuild_heights, replay, strongly_extremal_column, trace, Extremal, Rebuild,
};

/// Largest `n` accepted by the counting operations.
pub const COUNT_LIMIT: usize = 6;

/// Number of distinct vertex functions over all `n!` orders.
pub fn count_functions(n: usize) -> Result<usize> {
    guard(n)?;
    let all: BTreeSet<FunctionVector> = CoeffOrder::all(n)
        .flat_map(|o| zset(&build_sgraph(&o)))
        .collect();
    Ok(all.len())
}

/// Number of distinct function sets over all `n!` orders.
pub fn count_graphs(n: usize) -> Result<usize> {
    guard(n)?;
    let all: BTreeSet<BTreeSet<FunctionVector>> =
        CoeffOrder::all(n).map(|o| zset(&build_sgraph(&o))).collect();
    Ok(all.len())
}

fn guard(n: usize) -> Result<()> {
    if n > COUNT_LIMIT {
        return Err(Error::input(format!("n = {n} exceeds the counting limit {COUNT_LIMIT}")));
    }
    Ok(())
}

/// `binom(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> u64 {
    (0..m as u64).fold(1u64, |acc, i| acc * 2 * (2 * i + 1) / (i + 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Theorem,
    Fusion,
    Sproperty,
    Lemma15,
    Reconstruction,
    Counts,
    Remarks,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theorem,
        Check::Fusion,
        Check::Sproperty,
        Check::Lemma15,
        Check::Reconstruction,
        Check::Counts,
        Check::Remarks,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit enum");
        f.write_str(s.as_str().expect("string"))
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.to_string() == s.trim())
            .ok_or_else(|| Error::parse("check", format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n_values: Vec<usize>,
    pub trials_per_order: usize,
    pub seed: u64,
    pub profiles: Vec<Profile>,
    pub checks: Vec<Check>,
    /// Adds wall-clock timings to the report, which then differs run to run.
    #[serde(default)]
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_values: vec![1, 2, 3],
            trials_per_order: 2,
            seed: 42,
            profiles: vec![Profile::Generic],
            checks: Check::ALL.to_vec(),
            timing: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.contains(&0) {
            return Err(Error::input("n values must be at least 1"));
        }
        if self.trials_per_order == 0 {
            return Err(Error::input("trials per order must be at least 1"));
        }
        Ok(())
    }

    fn runs(&self, check: Check) -> bool {
        self.checks.contains(&check)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Everything needed to re-run one failing unit.
#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<CoeffOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<NumericCoeffs>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Profile>,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub units: u64,
    pub stats: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl CheckOutcome {
    fn new(check: Check) -> Self {
        Self {
            check,
            status: Status::Skipped,
            units: 0,
            stats: BTreeMap::new(),
            counterexamples: Vec::new(),
            millis: None,
        }
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_default() += by;
    }

    fn seal(&mut self) {
        self.status = if self.units == 0 && self.counterexamples.is_empty() {
            Status::Skipped
        } else if self.counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: SweepConfig,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn outcome(&self, check: Check) -> &CheckOutcome {
        self.checks.iter().find(|c| c.check == check).expect("every check is reported")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let stats = c.stats.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
            out.push_str(&format!(
                "{:<15} {:<7} units={} counterexamples={} {stats}\n",
                c.check.to_string(),
                format!("{:?}", c.status).to_lowercase(),
                c.units,
                c.counterexamples.len()
            ));
        }
        out
    }
}

struct Unit<'a> {
    n: usize,
    order: &'a CoeffOrder,
    c: &'a NumericCoeffs,
    seed: u64,
    profile: Profile,
}

impl Unit<'_> {
    fn counterexample(&self, detail: Value) -> Counterexample {
        Counterexample {
            n: self.n,
            order: Some(self.order.clone()),
            coeffs: Some(self.c.clone()),
            seed: Some(self.seed),
            profile: Some(self.profile),
            detail,
        }
    }
}

fn order_counterexample(order: &CoeffOrder, detail: Value) -> Counterexample {
    Counterexample {
        n: order.n(),
        order: Some(order.clone()),
        coeffs: None,
        seed: None,
        profile: None,
        detail,
    }
}

fn fixed_counterexample(n: usize, order: &str, coeffs: &str, detail: Value) -> Counterexample {
    Counterexample {
        n,
        order: order.parse().ok(),
        coeffs: coeffs.parse().ok(),
        seed: None,
        profile: None,
        detail,
    }
}

fn err_detail(e: Error) -> Value {
    json!({ "error": e.to_string() })
}

/// Runs the configured checks. Units run in a fixed order, so the report is
/// byte-identical across runs unless timing is enabled.
pub fn run_sweep(cfg: &SweepConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut outcomes: BTreeMap<Check, CheckOutcome> =
        Check::ALL.iter().map(|&c| (c, CheckOutcome::new(c))).collect();
    let mut clocks: BTreeMap<Check, u128> = BTreeMap::new();
    let mut timed = |check: Check, f: &mut dyn FnMut(&mut CheckOutcome)| {
        let start = Instant::now();
        f(outcomes.get_mut(&check).expect("known check"));
        *clocks.entry(check).or_default() += start.elapsed().as_millis();
    };

    for &n in &cfg.n_values {
        for order in CoeffOrder::all(n) {
            let g = build_sgraph(&order);
            let z = zset(&g);
            if cfg.runs(Check::Fusion) {
                timed(Check::Fusion, &mut |o| structural_checks(o, &g));
            }
            if cfg.runs(Check::Reconstruction) {
                timed(Check::Reconstruction, &mut |o| symbolic_reconstruction(o, &order, &z));
            }
            for &profile in &cfg.profiles {
                for t in 0..cfg.trials_per_order {
                    let seed = cfg.seed.wrapping_add(t as u64);
                    let c = sample_coeffs(&order, seed, profile);
                    let unit = Unit { n, order: &order, c: &c, seed, profile };
                    if cfg.runs(Check::Theorem) {
                        timed(Check::Theorem, &mut |o| theorem_unit(o, &unit, &z));
                    }
                    if cfg.runs(Check::Fusion) {
                        timed(Check::Fusion, &mut |o| fusion_unit(o, &unit, &g));
                    }
                    if cfg.runs(Check::Sproperty) && profile == Profile::Generic {
                        timed(Check::Sproperty, &mut |o| sproperty_unit(o, &unit, &g));
                    }
                    if cfg.runs(Check::Lemma15) {
                        timed(Check::Lemma15, &mut |o| lemma15_unit(o, &unit));
                    }
                    if cfg.runs(Check::Reconstruction) {
                        timed(Check::Reconstruction, &mut |o| numeric_reconstruction(o, &unit, &z));
                    }
                }
            }
        }
        if cfg.runs(Check::Counts) && n <= COUNT_LIMIT {
            timed(Check::Counts, &mut |o| counts_unit(o, n));
        }
    }
    if cfg.runs(Check::Remarks) {
        timed(Check::Remarks, &mut remarks_unit);
    }

    let checks = outcomes
        .into_values()
        .map(|mut o| {
            o.seal();
            if cfg.timing && o.status != Status::Skipped {
                o.millis = clocks.get(&o.check).copied();
            }
            o
        })
        .collect();
    Ok(VerificationReport {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        config: cfg.clone(),
        checks,
    })
}

fn theorem_unit(o: &mut CheckOutcome, u: &Unit, z: &BTreeSet<FunctionVector>) {
    o.units += 1;
    match verify_theorem(u.order, u.c) {
        Ok(r) if r.passed => o.bump("vertices", r.polytope_vertices.len() as u64),
        Ok(r) => o.counterexamples.push(u.counterexample(json!({
            "only_in_polytope": r.only_in_polytope.iter().map(|p| p.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "only_in_zset": r.only_in_zset.iter().map(|p| p.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
    // Every function of Z(c) lies in K(c).
    match z_outside_k(u.order, u.c, z) {
        Ok(outside) if outside.is_empty() => {}
        Ok(outside) => o.counterexamples.push(u.counterexample(json!({ "z_outside_k": outside }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
}

/// Functions (as text) whose values at `c` violate the box or a chain inequality.
pub fn z_outside_k<'a>(
    order: &CoeffOrder,
    c: &NumericCoeffs,
    fns: impl IntoIterator<Item = &'a FunctionVector>,
) -> Result<Vec<String>> {
    let sys = build_system(order, c, Variant::Three)?;
    let mut out = Vec::new();
    for f in fns {
        if !contains(&sys, &f.evaluate(c)?)? {
            out.push(f.to_string());
        }
    }
    Ok(out)
}

fn structural_checks(o: &mut CheckOutcome, g: &SGraph) {
    o.units += 1;
    let problems = check_structure(g);
    if !problems.is_empty() {
        o.counterexamples.push(order_counterexample(&g.order, json!({ "structure": problems })));
    }
    let edges = check_edge_relation(g);
    o.bump("edges", g.edges.len() as u64);
    if !edges.is_empty() {
        o.counterexamples.push(order_counterexample(&g.order, json!({ "edges": edges })));
    }
    let certs = check_fusion_certificates(g, &[]);
    if !certs.is_empty() {
        o.counterexamples.push(order_counterexample(&g.order, json!({ "certificates": certs })));
    }
}

fn fusion_unit(o: &mut CheckOutcome, u: &Unit, g: &SGraph) {
    o.units += 1;
    let certs = check_fusion_certificates(g, std::slice::from_ref(u.c));
    if !certs.is_empty() {
        o.counterexamples.push(u.counterexample(json!({ "certificates": certs })));
    }
    match interval_violations(g, u.c) {
        Ok(v) if v.is_empty() => {}
        Ok(v) => o.counterexamples.push(u.counterexample(json!({ "interval": v }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
}

fn sproperty_unit(o: &mut CheckOutcome, u: &Unit, g: &SGraph) {
    o.units += 1;
    match s_property(g, u.c) {
        Ok(r) if r.passed() => o.bump("pairs", (g.vertices.len() * (u.n + 1)) as u64),
        Ok(r) => o.counterexamples.push(u.counterexample(json!({ "missing": r.missing }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
}

fn lemma15_unit(o: &mut CheckOutcome, u: &Unit) {
    o.units += 1;
    let verdict = build_system(u.order, u.c, Variant::Three).and_then(|a| {
        let b = build_system(u.order, u.c, Variant::ThreePrime)?;
        compare_systems(&a, &b)
    });
    match verdict {
        Ok(SystemComparison::Equal) => {}
        Ok(other) => o.counterexamples.push(u.counterexample(json!({ "comparison": other }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
}

/// Per-function reconstruction facts.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReconstructionFacts {
    pub deconstructed: bool,
    pub steps: usize,
    pub unique_column_each_step: bool,
    pub corollary_each_step: bool,
    pub replay_exact: bool,
    pub rebuilt: bool,
    pub evaluations_agree: bool,
    pub relations_embed: bool,
    pub failure: Option<String>,
}

/// Runs the full deconstruction and rebuild pipeline on one function.
pub fn reconstruct_one(order: &CoeffOrder, f: &FunctionVector) -> ReconstructionFacts {
    let mut facts = ReconstructionFacts::default();
    let log = match deconstruct(f) {
        Ok(log) => log,
        Err(e) => {
            facts.failure = Some(e.to_string());
            return facts;
        }
    };
    facts.deconstructed = true;
    facts.steps = log.len();
    let steps = trace(f, &log);
    let inner = &steps[..steps.len() - 1];
    facts.unique_column_each_step = inner
        .iter()
        .all(|g| matches!(strongly_extremal_column(g), Extremal::Column { .. }));
    facts.corollary_each_step = inner.iter().all(|g| corollary_43_check(g) == Some(true));
    facts.replay_exact = replay(&log, f.n()) == *f;
    match rebuild_heights(&log, f) {
        Ok(Rebuild::Complete { profile }) => {
            facts.rebuilt = evaluate_rows(&profile).is_ok_and(|g| g == *f);
            facts.evaluations_agree = evaluate_diffs(&profile).is_ok_and(|g| g == *f);
            facts.relations_embed = order_relations(&profile).embeds_in(order);
        }
        Ok(Rebuild::Incomplete { partial, blocking }) => {
            facts.failure = Some(format!("rebuild stopped at move {blocking} with ({partial})"));
        }
        Err(e) => facts.failure = Some(e.to_string()),
    }
    facts
}

fn symbolic_reconstruction(o: &mut CheckOutcome, order: &CoeffOrder, z: &BTreeSet<FunctionVector>) {
    let n = order.n();
    for f in z {
        o.units += 1;
        let facts = reconstruct_one(order, f);
        o.bump("functions", 1);
        o.bump("rebuilt", facts.rebuilt as u64);
        o.bump("relations_embed", (facts.rebuilt && facts.relations_embed) as u64);
        let hard_fail = !facts.deconstructed
            || !facts.unique_column_each_step
            || !facts.corollary_each_step
            || !facts.replay_exact
            || (facts.rebuilt && !facts.evaluations_agree)
            || (n <= 2 && !facts.rebuilt);
        if hard_fail {
            o.counterexamples.push(order_counterexample(
                order,
                json!({ "function": f.to_string(), "facts": facts }),
            ));
        }
    }
}

/// Every intermediate function of every deconstruction lies in `K(c)`.
fn numeric_reconstruction(o: &mut CheckOutcome, u: &Unit, z: &BTreeSet<FunctionVector>) {
    let mut intermediates = BTreeSet::new();
    for f in z {
        if let Ok(log) = deconstruct(f) {
            intermediates.extend(trace(f, &log));
        }
    }
    match z_outside_k(u.order, u.c, &intermediates) {
        Ok(outside) if outside.is_empty() => o.bump("intermediates_in_k", intermediates.len() as u64),
        Ok(outside) => o.counterexamples.push(u.counterexample(json!({ "outside_k": outside }))),
        Err(e) => o.counterexamples.push(u.counterexample(err_detail(e))),
    }
}

fn counts_unit(o: &mut CheckOutcome, n: usize) {
    o.units += 1;
    let functions = count_functions(n).map(|v| v as u64);
    let graphs = count_graphs(n).map(|v| v as u64);
    let per_order: BTreeSet<usize> = CoeffOrder::all(n).map(|ord| zset(&build_sgraph(&ord)).len()).collect();
    let expected = (catalan(n + 1), catalan(n), 1usize << n);
    let got = (functions.clone().unwrap_or(0), graphs.clone().unwrap_or(0));
    o.bump(&format!("n{n}_functions"), got.0);
    o.bump(&format!("n{n}_graphs"), got.1);
    if got != (expected.0, expected.1) || per_order != BTreeSet::from([expected.2]) {
        o.counterexamples.push(Counterexample {
            n,
            order: None,
            coeffs: None,
            seed: None,
            profile: None,
            detail: json!({
                "functions": got.0, "expected_functions": expected.0,
                "graphs": got.1, "expected_graphs": expected.1,
                "per_order_sizes": per_order, "expected_per_order": expected.2,
            }),
        });
    }
}

/// Outcome of the fixed witnesses for the remarks on the inequality systems
/// and on the shift formula.
#[derive(Clone, Debug, Serialize)]
pub struct RemarkWitnesses {
    /// Vertices gained by dropping the `N_2` chain for order (1,3,2), c = (1,3,2).
    pub relaxed_extra_vertices: Vec<String>,
    /// (1,3,2), c = (1,3,2): three and the pairwise system coincide.
    pub pairwise_equal_at_132: bool,
    /// (2,1,3), c = (2,1,3): pairwise system strictly inside three.
    pub pairwise_strictly_inside: bool,
    /// A vertex of three for (2,1,3), c = (2,1,3) with `x_3 < x_1`.
    pub pairwise_witness: Option<String>,
    /// Order (1,2): a fused pair breaking the naive shift formula.
    pub naive_shift_witness: Option<(String, String)>,
}

pub fn remark_witnesses() -> Result<RemarkWitnesses> {
    let order: CoeffOrder = "1,3,2".parse()?;
    let c: NumericCoeffs = "1,3,2".parse()?;
    let full = build_system(&order, &c, Variant::Three)?;
    let relaxed = full.retain_rules(|p| !matches!(p, Provenance::Chain { k: 2, .. }));
    let extra: Vec<String> = enumerate_vertices(&relaxed)
        .difference(&enumerate_vertices(&full))
        .map(|p| point_text(p))
        .collect();
    let pairwise = build_system(&order, &c, Variant::ThreeDoublePrime)?;
    let equal = compare_systems(&full, &pairwise)? == SystemComparison::Equal;

    let order2: CoeffOrder = "2,1,3".parse()?;
    let c2: NumericCoeffs = "2,1,3".parse()?;
    let three = build_system(&order2, &c2, Variant::Three)?;
    let pairwise2 = build_system(&order2, &c2, Variant::ThreeDoublePrime)?;
    let inside = compare_systems(&pairwise2, &three)? == SystemComparison::AStrictlyInsideB;
    let witness = enumerate_vertices(&three)
        .into_iter()
        .find(|p| p[2] < p[0])
        .map(|p| point_text(&p));

    let g = build_sgraph(&CoeffOrder::natural(2));
    let naive = naive_shift_counterexample(&g)
        .map(|(p, q)| (g.vertex(p).func.to_string(), g.vertex(q).func.to_string()));
    Ok(RemarkWitnesses {
        relaxed_extra_vertices: extra,
        pairwise_equal_at_132: equal,
        pairwise_strictly_inside: inside,
        pairwise_witness: witness,
        naive_shift_witness: naive,
    })
}

fn point_text(p: &[Rational]) -> String {
    format!("({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn remarks_unit(o: &mut CheckOutcome) {
    o.units += 1;
    match remark_witnesses() {
        Ok(w) => {
            let ok = !w.relaxed_extra_vertices.is_empty()
                && w.pairwise_equal_at_132
                && w.pairwise_strictly_inside
                && w.pairwise_witness.is_some()
                && w.naive_shift_witness.is_some();
            if !ok {
                o.counterexamples.push(fixed_counterexample(3, "1,3,2", "1,3,2", json!(w)));
            }
        }
        Err(e) => o.counterexamples.push(fixed_counterexample(3, "1,3,2", "1,3,2", err_detail(e))),
    }
}

/// Values of `c` at which the sweep evaluates, for inspection.
pub fn sample_table(order: &CoeffOrder, seed: u64, trials: usize, profile: Profile) -> Vec<NumericCoeffs> {
    (0..trials)
        .map(|t| sample_coeffs(order, seed.wrapping_add(t as u64), profile))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_functions(1).unwrap(), 2);
        assert_eq!(count_functions(2).unwrap(), 5);
        assert_eq!(count_graphs(1).unwrap(), 1);
        assert_eq!(count_graphs(3).unwrap(), 5);
        assert!(count_functions(7).is_err());
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn empty_checks_skip_everything() {
        let cfg = SweepConfig {
            checks: vec![],
            ..SweepConfig::default()
        };
        let r = run_sweep(&cfg).unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::Skipped));
        assert!(r.passed());
    }

    #[test]
    fn default_sweep_passes_and_is_reproducible() {
        let cfg = SweepConfig::default();
        let a = run_sweep(&cfg).unwrap();
        assert!(a.passed(), "{}", a.summary());
        assert_eq!(a.to_json(), run_sweep(&cfg).unwrap().to_json());
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = SweepConfig {
            trials_per_order: 0,
            ..SweepConfig::default()
        };
        assert!(run_sweep(&cfg).is_err());
        let cfg = SweepConfig {
            n_values: vec![0],
            ..SweepConfig::default()
        };
        assert!(run_sweep(&cfg).is_err());
    }

    #[test]
    fn remarks_have_witnesses() {
        let w = remark_witnesses().unwrap();
        assert!(w.relaxed_extra_vertices.contains(&"(1,1,0)".to_string()));
        assert!(w.pairwise_equal_at_132);
        assert!(w.pairwise_strictly_inside);
        assert!(w.pairwise_witness.is_some());
    }
}
