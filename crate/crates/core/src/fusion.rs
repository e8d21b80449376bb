//! The canonical S-graph `G(c)` built by binary fusion.
//!
//! Fusion adds the coefficients in the order `s_1 ≺ s_2 ≺ ... ≺ s_n`. At each
//! step the current graph is copied twice: the `G+` copy keeps its labels and
//! the `G-` copy (reached through `phi`) renames the label of the successor
//! of `s` to `s`. Each `G+` vertex carrying that successor label is joined to
//! its `phi`-image by an edge with coefficient index `s`.
//!
//! Functions stay in the original coordinates throughout. At an intermediate
//! step only the slots of `N_k = {s_1, ..., s_k}` are populated; the other
//! slots are zero. Labels likewise live in `N_k ∪ {n + 1}`. At the final
//! step `N_n = {1..n}` and everything is literal.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{FunctionVector, LinearForm, Rational};
use crate::lp;
use crate::orders::{CoeffOrder, NumericCoeffs};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    /// Label in `1..=n+1`.
    pub label: usize,
    #[serde(rename = "fn")]
    pub func: FunctionVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Coefficient index carried by the edge.
    pub r: usize,
}

/// The `c(v)` of a fused pair: `fn(phi(v)) - fn(v) = (c_s - c(v)) x_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoeffRef {
    Zero,
    Coeff(usize),
}

impl CoeffRef {
    pub fn form(self) -> LinearForm {
        match self {
            CoeffRef::Zero => LinearForm::zero(),
            CoeffRef::Coeff(j) => LinearForm::var(j),
        }
    }

    fn from_form(f: &LinearForm) -> Option<Self> {
        if f.is_zero() {
            Some(CoeffRef::Zero)
        } else {
            f.as_single_var().map(CoeffRef::Coeff)
        }
    }
}

impl fmt::Display for CoeffRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRef::Zero => f.write_str("0"),
            CoeffRef::Coeff(j) => write!(f, "c{j}"),
        }
    }
}

impl Serialize for CoeffRef {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Record of one fusion step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionCertificate {
    /// The `≺`-maximal index added at this step.
    pub s: usize,
    /// Nearest already-present index below `s`, if any.
    pub pred: Option<usize>,
    /// Nearest already-present index above `s`, if any (`None` reads as `n + 1`).
    pub succ: Option<usize>,
    /// `G+` id to `G-` id.
    pub phi: Vec<(usize, usize)>,
    pub cv: BTreeMap<usize, CoeffRef>,
}

impl FusionCertificate {
    /// The label renamed to `s` in the `G-` copy.
    pub fn succ_label(&self, n: usize) -> usize {
        self.succ.unwrap_or(n + 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SGraph {
    pub n: usize,
    pub order: CoeffOrder,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub distinguished: usize,
    #[serde(rename = "certificates")]
    pub levels: Vec<FusionCertificate>,
    /// `snapshots[k]` is the graph after `k` fusion steps (2^k vertices).
    #[serde(skip)]
    snapshots: Vec<Vec<Vertex>>,
}

/// Builds `G(c)` for the given order by binary fusion.
pub fn build_sgraph(order: &CoeffOrder) -> SGraph {
    let n = order.n();
    let mut vertices = vec![Vertex {
        id: 0,
        label: n + 1,
        func: FunctionVector::zero(n),
    }];
    let mut edges: Vec<Edge> = Vec::new();
    let mut levels = Vec::with_capacity(n);
    let mut snapshots = vec![vertices.clone()];
    let mut present = BTreeSet::new();

    for &s in order.seq() {
        let pred = present.range(..s).next_back().copied();
        let succ = present.range(s + 1..).next().copied();
        let succ_label = succ.unwrap_or(n + 1);
        let m = vertices.len();
        let c_s = LinearForm::var(s);
        let c_succ = LinearForm::coeff_var(succ_label, n);

        let mut plus = Vec::with_capacity(m);
        let mut minus = Vec::with_capacity(m);
        let mut cv = BTreeMap::new();
        for v in &vertices {
            let mut f_plus = v.func.clone();
            f_plus.set(s, v.func.get(pred.unwrap_or(0)).clone());
            let mut f_minus = f_plus.clone();
            f_minus.set(s, &(f_plus.get(succ_label) + &c_s) - &c_succ);

            let gap = f_minus.get(s) - f_plus.get(s);
            if let Some(r) = CoeffRef::from_form(&(&c_s - &gap)) {
                cv.insert(v.id, r);
            }
            let minus_label = if v.label == succ_label { s } else { v.label };
            plus.push(Vertex {
                id: v.id,
                label: v.label,
                func: f_plus,
            });
            minus.push(Vertex {
                id: v.id + m,
                label: minus_label,
                func: f_minus,
            });
        }

        let mut next_edges = edges.clone();
        next_edges.extend(edges.iter().map(|e| Edge {
            u: e.u + m,
            v: e.v + m,
            r: e.r,
        }));
        next_edges.extend(
            plus.iter()
                .filter(|v| v.label == succ_label)
                .map(|v| Edge { u: v.id, v: v.id + m, r: s }),
        );

        levels.push(FusionCertificate {
            s,
            pred,
            succ,
            phi: (0..m).map(|id| (id, id + m)).collect(),
            cv,
        });
        plus.extend(minus);
        vertices = plus;
        edges = next_edges;
        present.insert(s);
        snapshots.push(vertices.clone());
    }

    SGraph {
        n,
        order: order.clone(),
        vertices,
        edges,
        distinguished: 0,
        levels,
        snapshots,
    }
}

impl SGraph {
    pub fn vertex(&self, id: usize) -> &Vertex {
        &self.vertices[id]
    }

    /// Vertex sets after each fusion step; index 0 is the single starting vertex.
    pub fn snapshots(&self) -> &[Vec<Vertex>] {
        &self.snapshots
    }

    pub fn neighbours(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.r));
            adj[e.v].push((e.u, e.r));
        }
        adj
    }

    /// Graphviz rendering: node `v<id>` labelled `"<label>|<function>"`,
    /// edges labelled `c<r>`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in &self.vertices {
            out.push_str(&format!("  v{} [label=\"{}|{}\"];\n", v.id, v.label, v.func));
        }
        for e in &self.edges {
            out.push_str(&format!("  v{} -- v{} [label=\"c{}\"];\n", e.u, e.v, e.r));
        }
        out.push_str("}\n");
        out
    }
}

/// The S-set `Z(c)`: all vertex functions, deduplicated symbolically.
pub fn zset(g: &SGraph) -> BTreeSet<FunctionVector> {
    g.vertices.iter().map(|v| v.func.clone()).collect()
}

/// `Z(c)` evaluated at numeric coefficients, deduplicated.
pub fn numeric_zset(g: &SGraph, c: &NumericCoeffs) -> Result<BTreeSet<Vec<Rational>>> {
    g.vertices.iter().map(|v| v.func.evaluate(c)).collect()
}

/// Vertex functions re-derived by walking edges from the distinguished vertex
/// (zero function) and applying `z_v - z_v' = c_r (r^{label v} - r^{label v'})`.
///
/// Returns `None` when the graph is disconnected or a cycle is inconsistent.
pub fn propagate_functions(g: &SGraph) -> Option<Vec<FunctionVector>> {
    let adj = g.neighbours();
    let mut fns: Vec<Option<FunctionVector>> = vec![None; g.vertices.len()];
    fns[g.distinguished] = Some(FunctionVector::zero(g.n));
    let mut queue = VecDeque::from([g.distinguished]);
    while let Some(v) = queue.pop_front() {
        let zv = fns[v].clone().expect("queued vertices are assigned");
        for &(w, r) in &adj[v] {
            let step = FunctionVector::r_difference(
                g.n,
                g.vertices[v].label,
                g.vertices[w].label,
                &LinearForm::var(r),
            );
            let zw = &zv - &step;
            match &fns[w] {
                Some(existing) if *existing != zw => return None,
                Some(_) => {}
                None => {
                    fns[w] = Some(zw);
                    queue.push_back(w);
                }
            }
        }
    }
    fns.into_iter().collect()
}

/// Structural invariants: vertex count `2^n`, pairwise distinct functions,
/// the distinguished vertex, connectivity, and agreement between the fusion
/// recursion and edge propagation. Returns the violated items.
pub fn check_structure(g: &SGraph) -> Vec<String> {
    let mut out = Vec::new();
    let expected = 1usize << g.n;
    if g.vertices.len() != expected {
        out.push(format!("{} vertices, expected {expected}", g.vertices.len()));
    }
    let distinct = zset(g).len();
    if distinct != g.vertices.len() {
        out.push(format!(
            "{distinct} distinct functions among {} vertices",
            g.vertices.len()
        ));
    }
    let d = g.vertex(g.distinguished);
    if d.label != g.n + 1 || !d.func.is_zero() {
        out.push(format!(
            "distinguished vertex v{} has label {} and function ({})",
            d.id, d.label, d.func
        ));
    }
    match propagate_functions(g) {
        None => out.push("edge propagation failed (disconnected or inconsistent)".into()),
        Some(fns) => {
            for (v, f) in g.vertices.iter().zip(&fns) {
                if v.func != *f {
                    out.push(format!("v{}: fusion gives ({}), propagation gives ({f})", v.id, v.func));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeViolation {
    pub edge: Edge,
    pub difference: FunctionVector,
    pub expected: FunctionVector,
}

/// Checks `fn(u) - fn(v) = c_r (r^{label u} - r^{label v})` on every edge.
pub fn check_edge_relation(g: &SGraph) -> Vec<EdgeViolation> {
    g.edges
        .iter()
        .filter_map(|&e| {
            let (a, b) = (g.vertex(e.u), g.vertex(e.v));
            let difference = &a.func - &b.func;
            let expected =
                FunctionVector::r_difference(g.n, a.label, b.label, &LinearForm::var(e.r));
            (difference != expected).then_some(EdgeViolation {
                edge: e,
                difference,
                expected,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateViolation {
    /// 1-based fusion step.
    pub level: usize,
    pub s: usize,
    pub vertex: usize,
    pub detail: String,
}

/// Re-derives every fusion step from the stored snapshots and checks:
/// the `G+` copy (slot `s` copied from its predecessor, labels kept); the
/// `G-` copy (only slot `s` changes, to the successor slot plus
/// `c_s - c_succ`, and the successor label becomes `s`); the shape
/// `fn(phi(v)) - fn(v) = (c_s - c(v)) x_s` with `c(v)` zero or an earlier
/// indeterminate, matching the recorded certificate; and `c_s - c(v) >= 0`
/// under each of the given numeric coefficient vectors.
pub fn check_fusion_certificates(
    g: &SGraph,
    samples: &[NumericCoeffs],
) -> Vec<CertificateViolation> {
    let n = g.n;
    let mut out = Vec::new();
    for (idx, cert) in g.levels.iter().enumerate() {
        let level = idx + 1;
        let before = &g.snapshots[idx];
        let after = &g.snapshots[idx + 1];
        let m = before.len();
        let s = cert.s;
        let succ_label = cert.succ_label(n);
        let earlier: BTreeSet<usize> = g.order.seq()[..idx].iter().copied().collect();
        let mut bad = |vertex: usize, detail: String| {
            out.push(CertificateViolation { level, s, vertex, detail });
        };

        if after.len() != 2 * m || cert.phi.len() != m {
            bad(0, format!("level has {} vertices and {} phi pairs, parent has {m}", after.len(), cert.phi.len()));
            continue;
        }
        for (v, &(p, q)) in cert.phi.iter().enumerate() {
            if p != v || q != v + m {
                bad(v, format!("phi pair ({p}, {q}) out of place"));
                continue;
            }
            let (parent, plus, minus) = (&before[v], &after[v], &after[v + m]);

            let mut expect_plus = parent.func.clone();
            expect_plus.set(s, parent.func.get(cert.pred.unwrap_or(0)).clone());
            if plus.func != expect_plus || plus.label != parent.label {
                bad(v, format!("G+ copy is ({}) label {}, expected ({expect_plus}) label {}", plus.func, plus.label, parent.label));
            }
            let expect_label = if plus.label == succ_label { s } else { plus.label };
            if minus.label != expect_label {
                bad(v, format!("phi(v) has label {}, expected {expect_label}", minus.label));
            }

            // Theta-shift form: only slot s moves, to succ slot + c_s - c_succ.
            let shifted = &(plus.func.get(succ_label) + &LinearForm::var(s))
                - &LinearForm::coeff_var(succ_label, n);
            for k in 1..=n {
                let ok = if k == s {
                    *minus.func.get(k) == shifted
                } else {
                    minus.func.get(k) == plus.func.get(k)
                };
                if !ok {
                    bad(v, format!("slot {k} of phi(v) is {}, shift rule disagrees", minus.func.get(k)));
                }
            }

            // Difference shape (c_s - c(v)) x_s with c(v) in c^- ∪ {0}.
            let diff = &minus.func - &plus.func;
            if (1..=n).any(|k| k != s && !diff.get(k).is_zero()) {
                bad(v, format!("fn(phi(v)) - fn(v) = ({diff}) leaves slot {s}"));
                continue;
            }
            let residual = &LinearForm::var(s) - diff.get(s);
            let cref = match CoeffRef::from_form(&residual) {
                Some(CoeffRef::Coeff(j)) if !earlier.contains(&j) => {
                    bad(v, format!("c(v) = c{j} is not among the earlier coefficients"));
                    continue;
                }
                Some(r) => r,
                None => {
                    bad(v, format!("c_s - (difference) = {residual} is not 0 or a single c_j"));
                    continue;
                }
            };
            if cert.cv.get(&v) != Some(&cref) {
                bad(v, format!("recorded c(v) {:?} differs from derived {cref}", cert.cv.get(&v)));
            }
            for c in samples {
                match diff.get(s).evaluate(c) {
                    Ok(val) if val.is_negative() => {
                        bad(v, format!("c_s - c(v) = {val} < 0 at c = ({c})"));
                    }
                    Ok(_) => {}
                    Err(e) => bad(v, e.to_string()),
                }
            }
        }
    }
    out
}

/// A fused pair at the outermost step for which
/// `fn(phi(v)) = fn(v) + (c_s - c_{s+1}) delta_s` fails, if any.
pub fn naive_shift_counterexample(g: &SGraph) -> Option<(usize, usize)> {
    let cert = g.levels.last()?;
    let n = g.n;
    let s = cert.s;
    let bump = &LinearForm::var(s) - &LinearForm::coeff_var(s + 1, n);
    cert.phi.iter().copied().find(|&(p, q)| {
        let mut naive = g.vertex(p).func.clone();
        naive.set(s, g.vertex(p).func.get(s) + &bump);
        naive != g.vertex(q).func
    })
}

/// Outermost fused pairs violating
/// `fn(v)[s-1] <= fn(phi(v))[s] <= fn(v)[s+1] + c_s - c_{s+1}` numerically.
pub fn interval_violations(g: &SGraph, c: &NumericCoeffs) -> Result<Vec<usize>> {
    let Some(cert) = g.levels.last() else {
        return Ok(Vec::new());
    };
    let s = cert.s;
    let mut out = Vec::new();
    for &(p, q) in &cert.phi {
        let lo = g.vertex(p).func.get(s - 1).evaluate(c)?;
        let mid = g.vertex(q).func.get(s).evaluate(c)?;
        let hi = g.vertex(p).func.get(s + 1).evaluate(c)? + c.get(s) - c.get(s + 1);
        if !(lo <= mid && mid <= hi) {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SPropertyReport {
    /// `(vertex, label)` pairs without an ordered path.
    pub missing: Vec<(usize, usize)>,
}

impl SPropertyReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Checks that from every vertex every label is reachable along a path whose
/// edge coefficient indices strictly increase in `≺`.
pub fn s_property(g: &SGraph, c: &NumericCoeffs) -> Result<SPropertyReport> {
    g.order.require_compatible(c)?;
    let n = g.n;
    let adj = g.neighbours();
    // reach[v][r]: labels reachable from v using edges of rank >= r (bitmask).
    let mut memo: Vec<Vec<Option<u128>>> = vec![vec![None; n + 2]; g.vertices.len()];
    fn reach(
        v: usize,
        min_rank: usize,
        g: &SGraph,
        adj: &[Vec<(usize, usize)>],
        memo: &mut Vec<Vec<Option<u128>>>,
    ) -> u128 {
        if let Some(m) = memo[v][min_rank] {
            return m;
        }
        let mut mask = 1u128 << g.vertices[v].label;
        for &(w, r) in &adj[v] {
            let rank = g.order.rank(r);
            if rank >= min_rank {
                mask |= reach(w, rank + 1, g, adj, memo);
            }
        }
        memo[v][min_rank] = Some(mask);
        mask
    }
    let mut report = SPropertyReport::default();
    for v in 0..g.vertices.len() {
        let mask = reach(v, 0, g, &adj, &mut memo);
        for k in 1..=n + 1 {
            if mask & (1u128 << k) == 0 {
                report.missing.push((v, k));
            }
        }
    }
    Ok(report)
}

/// Values `r^1(b), ..., r^{n+1}(b)` of the evaluation functionals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvaluationPoint {
    #[serde(with = "crate::exactmath::serde_rational_vec")]
    pub b: Vec<Rational>,
}

/// `sum_k value(c'_k) * (b_k - b_{k+1})`.
pub fn evaluate_at(f: &FunctionVector, c: &NumericCoeffs, b: &EvaluationPoint) -> Result<Rational> {
    if c.len() != f.n() {
        return Err(Error::input(format!(
            "function has n = {} but {} coefficients were given",
            f.n(),
            c.len()
        )));
    }
    f.evaluate_at(c, &b.b)
}

/// Finds `b` at which `target` strictly beats every vertex whose numeric
/// function differs from the target's, by exact LP with margin one.
pub fn separating_point(g: &SGraph, target: usize, c: &NumericCoeffs) -> Result<EvaluationPoint> {
    g.order.require_compatible(c)?;
    let n = g.n;
    let t = g.vertex(target).func.evaluate(c)?;
    let competitors: BTreeSet<Vec<Rational>> = numeric_zset(g, c)?
        .into_iter()
        .filter(|z| *z != t)
        .collect();

    // Variables d+ (n), d- (n), one surplus per competitor; d = b_k - b_{k+1}.
    let m = competitors.len();
    let cols = 2 * n + m;
    let mut a = Vec::with_capacity(m);
    for (i, z) in competitors.iter().enumerate() {
        let mut row = vec![Rational::zero(); cols];
        for k in 0..n {
            let w = &t[k] - &z[k];
            row[n + k] = -&w;
            row[k] = w;
        }
        row[2 * n + i] = -Rational::one();
        a.push(row);
    }
    let rhs = vec![Rational::one(); m];
    let Some(x) = lp::feasible_point(&a, &rhs) else {
        return Err(Error::Internal(format!(
            "no separating point for v{target} ({}) at c = ({c}); competitors: {competitors:?}; certificates: {:?}",
            g.vertex(target).func,
            g.levels
        )));
    };
    let mut b = vec![Rational::zero(); n + 1];
    for k in (0..n).rev() {
        b[k] = &b[k + 1] + &x[k] - &x[n + k];
    }
    let point = EvaluationPoint { b };
    verify_separation(g, target, c, &point)?;
    Ok(point)
}

fn verify_separation(g: &SGraph, target: usize, c: &NumericCoeffs, b: &EvaluationPoint) -> Result<()> {
    let t = g.vertex(target).func.evaluate(c)?;
    let tv = evaluate_at(&g.vertex(target).func, c, b)?;
    for v in &g.vertices {
        if v.func.evaluate(c)? == t {
            continue;
        }
        let zv = evaluate_at(&v.func, c, b)?;
        if zv >= tv {
            return Err(Error::Internal(format!(
                "b = {:?} does not separate v{target} from v{} ({} >= {})",
                b.b, v.id, zv, tv
            )));
        }
    }
    Ok(())
}

/// The separating point built level by level along the fusion: at the step
/// adding `s`, `r^s(b)` is placed just below `r^{succ}(b)` when the target's
/// ancestor lies in `G+` and just above it when it lies in `G-`, halving the
/// offset until the ancestor is the strict maximum at that level.
pub fn separating_point_by_fusion(
    g: &SGraph,
    target: usize,
    c: &NumericCoeffs,
) -> Result<EvaluationPoint> {
    g.order.require_compatible(c)?;
    let n = g.n;
    let mut b: Vec<Option<Rational>> = vec![None; n + 1];
    b[n] = Some(Rational::zero());
    let mut present: BTreeSet<usize> = BTreeSet::new();

    for (idx, cert) in g.levels.iter().enumerate() {
        let s = cert.s;
        present.insert(s);
        let size = 1usize << (idx + 1);
        let ancestor = target % size;
        let in_minus = ancestor >= size / 2;
        let base = b[cert.succ_label(n) - 1].clone().expect("successor placed earlier");
        let snapshot = &g.snapshots[idx + 1];

        let mut eps = Rational::one();
        let mut placed = false;
        for _ in 0..256 {
            b[s - 1] = Some(if in_minus { &base + &eps } else { &base - &eps });
            if level_separates(snapshot, ancestor, &present, n, c, &b)? {
                placed = true;
                break;
            }
            eps /= Rational::from_integer(2.into());
        }
        if !placed {
            return Err(Error::Internal(format!(
                "fusion-guided separation stalled at step {} (s = {s}) for v{target}",
                idx + 1
            )));
        }
    }
    let point = EvaluationPoint {
        b: b.into_iter().map(|v| v.expect("all labels placed")).collect(),
    };
    verify_separation(g, target, c, &point)?;
    Ok(point)
}

/// Numeric coordinates and value at `b` of an intermediate-level function,
/// reading it on the present chain `t_1 < ... < t_k < n + 1`.
fn level_value(
    f: &FunctionVector,
    chain: &[usize],
    n: usize,
    c: &NumericCoeffs,
    b: &[Option<Rational>],
) -> Result<(Vec<Rational>, Rational)> {
    let mut coords = Vec::with_capacity(chain.len());
    let mut value = Rational::zero();
    for (i, &t) in chain.iter().enumerate() {
        let next = chain.get(i + 1).copied().unwrap_or(n + 1);
        let q = f.get(t).evaluate(c)?;
        let (bt, bn) = (b[t - 1].as_ref(), b[next - 1].as_ref());
        value += &q * (bt.expect("placed") - bn.expect("placed"));
        coords.push(q);
    }
    Ok((coords, value))
}

fn level_separates(
    snapshot: &[Vertex],
    ancestor: usize,
    present: &BTreeSet<usize>,
    n: usize,
    c: &NumericCoeffs,
    b: &[Option<Rational>],
) -> Result<bool> {
    let chain: Vec<usize> = present.iter().copied().collect();
    let (tc, tv) = level_value(&snapshot[ancestor].func, &chain, n, c, b)?;
    for v in snapshot {
        let (zc, zv) = level_value(&v.func, &chain, n, c, b)?;
        if zc != tc && zv >= tv {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the weak rankings of the numeric Z-set at `b1` and `b2` coincide.
pub fn same_ranking(
    g: &SGraph,
    c: &NumericCoeffs,
    b1: &EvaluationPoint,
    b2: &EvaluationPoint,
) -> Result<bool> {
    let z: Vec<FunctionVector> = zset(g).into_iter().collect();
    let v1 = z.iter().map(|f| evaluate_at(f, c, b1)).collect::<Result<Vec<_>>>()?;
    let v2 = z.iter().map(|f| evaluate_at(f, c, b2)).collect::<Result<Vec<_>>>()?;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if v1[i].cmp(&v1[j]) != v2[i].cmp(&v2[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn order(s: &str) -> CoeffOrder {
        s.parse().unwrap()
    }

    fn coeffs(s: &str) -> NumericCoeffs {
        s.parse().unwrap()
    }

    fn fv(s: &str) -> FunctionVector {
        s.parse().unwrap()
    }

    fn fset(items: &[&str]) -> BTreeSet<FunctionVector> {
        items.iter().map(|s| fv(s)).collect()
    }

    #[test]
    fn n1_graph() {
        let g = build_sgraph(&order("1"));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.vertex(0).label, 2);
        assert_eq!(g.vertex(0).func, fv("0"));
        assert_eq!(g.vertex(1).label, 1);
        assert_eq!(g.vertex(1).func, fv("c1"));
        assert_eq!(g.edges, vec![Edge { u: 0, v: 1, r: 1 }]);
        assert_eq!(zset(&g), fset(&["0", "c1"]));
        assert_eq!(g.levels[0].cv[&0], CoeffRef::Zero);
    }

    #[test]
    fn n2_zsets() {
        let g12 = build_sgraph(&order("1,2"));
        assert_eq!(zset(&g12), fset(&["0; 0", "c1; c1", "0; c2", "c1; c2"]));
        let g21 = build_sgraph(&order("2,1"));
        assert_eq!(zset(&g21), fset(&["0; 0", "c1-c2; 0", "0; c2", "c1; c2"]));
    }

    #[test]
    fn n0_is_single_vertex() {
        let g = build_sgraph(&CoeffOrder::natural(0));
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(zset(&g), fset(&[""]));
        assert!(check_edge_relation(&g).is_empty());
        assert!(check_structure(&g).is_empty());
    }

    #[test]
    fn n3_numeric_zset() {
        let g = build_sgraph(&order("1,3,2"));
        assert_eq!(zset(&g).len(), 8);
        let expected: BTreeSet<Vec<Rational>> = [
            [0, 0, 0], [1, 1, 1], [0, 0, 2], [1, 1, 2],
            [0, 2, 0], [1, 3, 1], [0, 4, 2], [1, 4, 2],
        ]
        .iter()
        .map(|p| p.iter().map(|&v| int(v)).collect())
        .collect();
        assert_eq!(numeric_zset(&g, &coeffs("1,4,2")).unwrap(), expected);
    }

    #[test]
    fn edge_relation_holds() {
        let g = build_sgraph(&order("1"));
        assert!(check_edge_relation(&g).is_empty());
        let (a, b) = (g.vertex(0), g.vertex(1));
        assert_eq!(&a.func - &b.func, FunctionVector::r_difference(1, 2, 1, &LinearForm::var(1)));
        assert!(check_edge_relation(&build_sgraph(&order("1,2"))).is_empty());
    }

    #[test]
    fn corrupted_function_is_reported() {
        let mut g = build_sgraph(&order("1,2"));
        g.vertices[3].func = fv("c1; c1");
        assert!(!check_edge_relation(&g).is_empty());
        assert!(!check_structure(&g).is_empty());
    }

    #[test]
    fn certificates_n2() {
        let g = build_sgraph(&order("1,2"));
        assert!(check_fusion_certificates(&g, &[coeffs("1,2"), coeffs("3,3")]).is_empty());
        let top = g.levels.last().unwrap();
        assert_eq!(top.s, 2);
        let cvs: BTreeSet<CoeffRef> = top.cv.values().copied().collect();
        assert_eq!(cvs, BTreeSet::from([CoeffRef::Zero, CoeffRef::Coeff(1)]));
        let diffs: BTreeSet<FunctionVector> = top
            .phi
            .iter()
            .map(|&(p, q)| &g.vertex(q).func - &g.vertex(p).func)
            .collect();
        assert_eq!(diffs, fset(&["0; c2", "0; c2-c1"]));
    }

    #[test]
    fn certificates_n1() {
        let g = build_sgraph(&order("1"));
        let cert = &g.levels[0];
        assert_eq!(cert.phi, vec![(0, 1)]);
        assert_eq!(g.vertex(0).label, 2);
        assert_eq!(g.vertex(1).label, 1);
        assert_eq!(cert.cv[&0], CoeffRef::Zero);
    }

    #[test]
    fn naive_shift_fails_somewhere() {
        let g = build_sgraph(&order("1,2"));
        let (p, q) = naive_shift_counterexample(&g).expect("witness exists");
        assert_eq!(g.vertex(p).func, fv("c1; c1"));
        assert_eq!(g.vertex(q).func, fv("c1; c2"));
        assert!(naive_shift_counterexample(&build_sgraph(&order("1"))).is_none());
    }

    #[test]
    fn s_property_small() {
        let g = build_sgraph(&order("1"));
        assert!(s_property(&g, &coeffs("1")).unwrap().passed());
        let g = build_sgraph(&order("1,3,2"));
        let rep = s_property(&g, &coeffs("1,4,2")).unwrap();
        assert!(rep.passed(), "{:?}", rep.missing);
        assert!(s_property(&g, &coeffs("4,1,2")).is_err());
    }

    #[test]
    fn s_property_flags_a_broken_graph() {
        let mut g = build_sgraph(&order("1,2"));
        g.edges.retain(|e| e.r != 1);
        assert!(!s_property(&g, &coeffs("1,2")).unwrap().passed());
    }

    #[test]
    fn evaluate_at_examples() {
        let b = |v: &[i64]| EvaluationPoint { b: v.iter().map(|&x| int(x)).collect() };
        assert_eq!(evaluate_at(&fv("c1"), &coeffs("1"), &b(&[1, 0])).unwrap(), int(1));
        assert_eq!(evaluate_at(&fv("0; 0"), &coeffs("1,2"), &b(&[5, -3, 2])).unwrap(), int(0));
        assert_eq!(evaluate_at(&fv("c1; c1"), &coeffs("1,2"), &b(&[2, 1, 0])).unwrap(), int(2));
    }

    #[test]
    fn separation_n1() {
        let g = build_sgraph(&order("1"));
        let c = coeffs("1");
        for v in 0..2 {
            let b = separating_point(&g, v, &c).unwrap();
            let other = 1 - v;
            assert!(
                evaluate_at(&g.vertex(v).func, &c, &b).unwrap()
                    > evaluate_at(&g.vertex(other).func, &c, &b).unwrap()
            );
            separating_point_by_fusion(&g, v, &c).unwrap();
        }
    }

    #[test]
    fn separation_n3_every_vertex() {
        let g = build_sgraph(&order("1,3,2"));
        let c = coeffs("1,4,2");
        for v in 0..8 {
            separating_point(&g, v, &c).unwrap();
            separating_point_by_fusion(&g, v, &c).unwrap();
        }
    }

    #[test]
    fn separation_allows_numeric_ties() {
        // c_2 = c_3 identifies two pairs of symbolic functions numerically.
        let g = build_sgraph(&order("1,3,2"));
        let c = coeffs("1,2,2");
        assert_eq!(numeric_zset(&g, &c).unwrap().len(), 6);
        for v in 0..8 {
            separating_point(&g, v, &c).unwrap();
        }
    }

    #[test]
    fn interval_holds_n3() {
        let g = build_sgraph(&order("1,3,2"));
        assert!(interval_violations(&g, &coeffs("1,4,2")).unwrap().is_empty());
    }

    #[test]
    fn dot_output_shape() {
        let dot = build_sgraph(&order("1")).to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("v0 [label=\"2|0\"]"));
        assert!(dot.contains("v1 [label=\"1|c1\"]"));
        assert!(dot.contains("v0 -- v1 [label=\"c1\"]"));
    }

    #[test]
    fn json_shape() {
        let g = build_sgraph(&order("1"));
        let v: serde_json::Value = serde_json::to_value(&g).unwrap();
        assert_eq!(v["n"], 1);
        assert_eq!(v["order"], serde_json::json!([1]));
        assert_eq!(v["vertices"][1]["fn"], serde_json::json!([{"c1": "1"}]));
        assert_eq!(v["edges"][0], serde_json::json!({"u": 0, "v": 1, "r": 1}));
        assert_eq!(v["certificates"][0]["cv"]["0"], "0");
    }
}
