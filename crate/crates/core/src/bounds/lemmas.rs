//! Structural inequalities that every `K_{2,t}`-trace-free hypergraph
//! satisfies, evaluated on concrete instances.
//!
//! Each check is proved by contradiction: a violating configuration yields a
//! trace. A violation is therefore followed up by the constructive route
//! the proof describes, then by the exact detector, and the outcome is
//! recorded either way.
//!
//! | check id | inequality | scope |
//! |---|---|---|
//! | `pair-codegree-outside-a` | `d_{H\A}(x,y) <= 3t-3`, `<= 2` for `t = 2` | all `t` |
//! | `large-codegree-in-c` | `d_C(x,y) < (1+4eps)t` | `delta >= 14` |
//! | `expansion-in-c` | edges at `y` meeting `N1(x)` twice `< k + 25kt` | `delta >= 14` |
//! | `neighborhood-sum-in-c` | `sum |V_u| <= (ceil((1+4eps)t) - 1) n` | `delta >= 14` |
//! | `common-neighborhood-in-b` | `|N1(x) ∩ N1(y)| <= 7` | `t = 2` |
//! | `shared-second-neighbors-in-b` | `|V_u ∩ V_w| <= 7` for `vuw ∈ B` | `t = 2` |
//! | `second-neighborhood-size-in-b` | `|V_u| >= d(u) - 16` | `t = 2` |
//! | `second-neighborhood-sum-in-b` | `sum |V_u| <= n + 14 d(v)` | `t = 2` |
//! | `shared-vertex-exclusive-in-b` | `x ∈ V_u ∩ V_w` forces `N(u) = {w}` or `N(w) = {u}` in the link of `v` | `t = 2` |
//!
//! `C` is `C_delta`; `B` is `H` minus the co-degree-one edges. Neighborhoods
//! and `V_u` are taken inside the named edge set.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Duration;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::dominated::epsilon_of;
use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph3, Vertex, VertexSet};
use crate::neighborhood::{eu_vu_in, neighborhoods_in};
use crate::partition::{partition_edges, sub_hypergraph, without_a};
use crate::trace::{
    certificate_on_support, certify_min1, certify_min_degree, contains_trace_within,
    verify_certificate, Detection, TraceCertificate, TracePattern,
};

/// Smallest `delta` for which the large co-degree checks are proved.
pub const LARGE_DELTA: u32 = 14;

const CERTIFICATE_SEED: u64 = 0x7261_6365;
const DETECTOR_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    /// Applicable, but no instance exists (e.g. `C_delta` is empty).
    Vacuous,
    NotApplicable,
    Violation,
}

/// The relation `observed REL bound` the lemma asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AtMost,
    LessThan,
    AtLeast,
}

impl Relation {
    pub fn holds(self, observed: f64, bound: f64) -> bool {
        match self {
            Relation::AtMost => observed <= bound,
            Relation::LessThan => observed < bound,
            Relation::AtLeast => observed >= bound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateSource {
    Constructive,
    Detector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateStatus {
    Certified {
        source: CertificateSource,
        certificate: TraceCertificate,
    },
    Exhausted,
}

impl CertificateStatus {
    pub fn certificate(&self) -> Option<&TraceCertificate> {
        match self {
            CertificateStatus::Certified { certificate, .. } => Some(certificate),
            CertificateStatus::Exhausted => None,
        }
    }
}

impl Serialize for CertificateStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CertificateStatus::Certified { source, certificate } => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("status", "certified")?;
                m.serialize_entry("source", source)?;
                m.serialize_entry("certificate", &certificate.to_string())?;
                m.end()
            }
            CertificateStatus::Exhausted => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("status", "certificate search exhausted")?;
                m.end()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaViolation {
    pub check: &'static str,
    /// The pair, vertex or configuration the inequality failed on.
    pub witness: Vec<Vertex>,
    pub observed: f64,
    pub bound: f64,
    pub relation: Relation,
    pub certificate: CertificateStatus,
}

impl LemmaViolation {
    /// True iff the stored numbers really break the stored relation.
    pub fn is_genuine(&self) -> bool {
        !self.relation.holds(self.observed, self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub status: CheckStatus,
    pub instances: usize,
    pub violations: Vec<LemmaViolation>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub t: usize,
    pub delta: u32,
    pub checks: Vec<CheckOutcome>,
}

impl LemmaReport {
    pub fn violations(&self) -> impl Iterator<Item = &LemmaViolation> + '_ {
        self.checks.iter().flat_map(|c| c.violations.iter())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    /// One JSON object per check.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("check outcomes serialize"));
            out.push('\n');
        }
        out
    }
}

/// Every violated inequality on `h`, each with its certificate status.
pub fn check_lemma_invariants(h: &Hypergraph3, t: usize, delta: u32) -> Result<Vec<LemmaViolation>> {
    Ok(lemma_report(h, t, delta)?
        .checks
        .into_iter()
        .flat_map(|c| c.violations)
        .collect())
}

pub fn lemma_report(h: &Hypergraph3, t: usize, delta: u32) -> Result<LemmaReport> {
    let pattern = TracePattern::new(t)?;
    if delta < 2 {
        return invalid(format!("delta must be at least 2, got {delta}"));
    }
    let mut cx = Ctx {
        h,
        pattern,
        t,
        delta,
        detected: None,
    };
    let b = without_a(h);
    let mut checks = vec![cx.pair_codegree_outside_a(&b)];
    if delta >= LARGE_DELTA {
        let p = partition_edges(h, delta)?;
        let c = sub_hypergraph(h.n(), &p.c);
        checks.push(cx.large_codegree_in_c(&c));
        checks.push(cx.expansion_in_c(&c));
        checks.push(cx.neighborhood_sum_in_c(&c));
    } else {
        for id in ["large-codegree-in-c", "expansion-in-c", "neighborhood-sum-in-c"] {
            checks.push(CheckOutcome::not_applicable(id));
        }
    }
    let c4_checks = [
        "common-neighborhood-in-b",
        "shared-second-neighbors-in-b",
        "second-neighborhood-size-in-b",
        "second-neighborhood-sum-in-b",
        "shared-vertex-exclusive-in-b",
    ];
    if t == 2 {
        let local = Local::new(&b);
        checks.push(cx.common_neighborhood_in_b(&local));
        checks.push(cx.shared_second_neighbors_in_b(&local));
        checks.push(cx.second_neighborhood_size_in_b(&local));
        checks.push(cx.second_neighborhood_sum_in_b(&local));
        checks.push(cx.shared_vertex_exclusive_in_b(&local));
    } else {
        checks.extend(c4_checks.map(CheckOutcome::not_applicable));
    }
    Ok(LemmaReport { t, delta, checks })
}

impl CheckOutcome {
    fn not_applicable(check: &'static str) -> Self {
        CheckOutcome {
            check,
            status: CheckStatus::NotApplicable,
            instances: 0,
            violations: vec![],
        }
    }

    fn finish(check: &'static str, instances: usize, violations: Vec<LemmaViolation>) -> Self {
        let status = if !violations.is_empty() {
            CheckStatus::Violation
        } else if instances == 0 {
            CheckStatus::Vacuous
        } else {
            CheckStatus::Pass
        };
        CheckOutcome {
            check,
            status,
            instances,
            violations,
        }
    }
}

struct Ctx<'a> {
    h: &'a Hypergraph3,
    pattern: TracePattern,
    t: usize,
    delta: u32,
    /// Detector result, computed at most once.
    detected: Option<Option<TraceCertificate>>,
}

/// Neighborhood data inside `B`, shared by the `C_4` checks.
struct Local<'a> {
    b: &'a Hypergraph3,
    n1: Vec<VertexSet>,
}

/// `N1(v)`, `N2(v)` and `V_u` for every `u ∈ N1(v)`.
struct Around {
    n1: VertexSet,
    vu: BTreeMap<Vertex, VertexSet>,
}

impl<'a> Local<'a> {
    fn new(b: &'a Hypergraph3) -> Self {
        let n1 = (0..b.n() as Vertex)
            .map(|v| neighborhoods_in(v, b.edge_set()).0)
            .collect();
        Local { b, n1 }
    }

    fn around(&self, v: Vertex) -> Around {
        let (n1, n2) = neighborhoods_in(v, self.b.edge_set());
        let vu = n1
            .iter()
            .map(|&u| (u, eu_vu_in(u, &n1, &n2, self.b.edge_set()).1))
            .collect();
        Around { n1, vu }
    }

    /// Neighbors of `u` in the link graph of `v`.
    fn link_neighbors(&self, v: Vertex, u: Vertex) -> VertexSet {
        self.b
            .edges()
            .filter(|e| e.contains(v) && e.contains(u))
            .filter_map(|e| e.third(v, u))
            .collect()
    }

    fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.b.n() as Vertex
    }
}

fn set_of(v: &[Vertex]) -> VertexSet {
    v.iter().copied().collect()
}

impl Ctx<'_> {
    fn certify(&mut self, constructive: Option<TraceCertificate>) -> CertificateStatus {
        if let Some(c) = constructive {
            if c.t() == self.t && verify_certificate(self.h, &c) {
                return CertificateStatus::Certified {
                    source: CertificateSource::Constructive,
                    certificate: c,
                };
            }
        }
        let (h, pattern) = (self.h, self.pattern);
        let found = self.detected.get_or_insert_with(|| {
            match contains_trace_within(h, pattern, Some(DETECTOR_BUDGET)) {
                Detection::Found(c) => Some(c),
                _ => None,
            }
        });
        match found {
            Some(c) => CertificateStatus::Certified {
                source: CertificateSource::Detector,
                certificate: c.clone(),
            },
            None => CertificateStatus::Exhausted,
        }
    }

    fn violation(
        &mut self,
        check: &'static str,
        witness: Vec<Vertex>,
        observed: f64,
        bound: f64,
        relation: Relation,
        constructive: Option<TraceCertificate>,
    ) -> LemmaViolation {
        LemmaViolation {
            check,
            witness,
            observed,
            bound,
            relation,
            certificate: self.certify(constructive),
        }
    }

    fn large_bound(&self) -> f64 {
        (1.0 + 4.0 * epsilon_of(self.delta)) * self.t as f64
    }

    /// The co-degree route: the third vertices `S` of `xy` in `H \ A` give
    /// link graphs of minimum degree 1; for `t = 2` and `|S| = 3` the
    /// triangle case builds the trace on `S` plus one center directly.
    fn codegree_route(&self, b: &Hypergraph3, x: Vertex, y: Vertex) -> Option<TraceCertificate> {
        let s: VertexSet = b
            .edges()
            .filter(|e| e.contains(x) && e.contains(y))
            .filter_map(|e| e.third(x, y))
            .collect();
        if let Ok(Some(c)) = certify_min1(self.h, x, y, &s, self.t) {
            return Some(c);
        }
        if self.t == 2 {
            for &u in &s {
                let rest: VertexSet = s.iter().copied().filter(|&w| w != u).collect();
                for c in [x, y] {
                    for d in pairs_of(&rest) {
                        if let Some(cert) = certificate_on_support(self.h, u, c, &d) {
                            return Some(cert);
                        }
                    }
                }
            }
        }
        None
    }

    /// Two common neighbors of `x` and `y` with a `C_4` on them.
    fn common_route(&self, x: Vertex, y: Vertex, common: &VertexSet) -> Option<TraceCertificate> {
        if self.t != 2 {
            return None;
        }
        pairs_of(common).find_map(|d| certificate_on_support(self.h, x, y, &d))
    }

    fn pair_codegree_outside_a(&mut self, b: &Hypergraph3) -> CheckOutcome {
        const ID: &str = "pair-codegree-outside-a";
        let bound = if self.t == 2 { 2 } else { 3 * self.t - 3 };
        let n = b.n() as Vertex;
        let (mut instances, mut out) = (0, vec![]);
        for x in 0..n {
            for y in x + 1..n {
                let d = b.codeg_unchecked(x, y) as usize;
                if d == 0 {
                    continue;
                }
                instances += 1;
                if d > bound {
                    let c = self.codegree_route(b, x, y);
                    out.push(self.violation(ID, vec![x, y], d as f64, bound as f64, Relation::AtMost, c));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn large_codegree_in_c(&mut self, c: &Hypergraph3) -> CheckOutcome {
        const ID: &str = "large-codegree-in-c";
        let bound = self.large_bound();
        let n = c.n() as Vertex;
        let (mut instances, mut out) = (0, vec![]);
        for x in 0..n {
            for y in x + 1..n {
                let d = c.codeg_unchecked(x, y) as usize;
                if d == 0 {
                    continue;
                }
                instances += 1;
                if d as f64 >= bound {
                    let s: VertexSet = c
                        .edges()
                        .filter(|e| e.contains(x) && e.contains(y))
                        .filter_map(|e| e.third(x, y))
                        .collect();
                    let cert = certify_min_degree(self.h, x, y, &s, self.delta, self.t, CERTIFICATE_SEED)
                        .ok()
                        .flatten();
                    out.push(self.violation(ID, vec![x, y], d as f64, bound, Relation::LessThan, cert));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn expansion_in_c(&mut self, c: &Hypergraph3) -> CheckOutcome {
        const ID: &str = "expansion-in-c";
        let k = f64::from(c.max_codegree()).max(self.large_bound());
        let bound = k + 25.0 * k * self.t as f64;
        let (mut instances, mut out) = (0, vec![]);
        for x in 0..c.n() as Vertex {
            let (n1, _) = neighborhoods_in(x, c.edge_set());
            for &y in &n1 {
                instances += 1;
                let count = self
                    .h
                    .edges()
                    .filter(|e| e.contains(y) && e.meet_count(&n1) >= 2)
                    .count();
                if count as f64 >= bound {
                    out.push(self.violation(ID, vec![x, y], count as f64, bound, Relation::LessThan, None));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn neighborhood_sum_in_c(&mut self, c: &Hypergraph3) -> CheckOutcome {
        const ID: &str = "neighborhood-sum-in-c";
        let threshold = self.large_bound().ceil();
        let bound = (threshold - 1.0) * c.n() as f64;
        let (mut instances, mut out) = (0, vec![]);
        for v in 0..c.n() as Vertex {
            let (n1, n2) = neighborhoods_in(v, c.edge_set());
            if n1.is_empty() {
                continue;
            }
            instances += 1;
            let mut hits: BTreeMap<Vertex, VertexSet> = BTreeMap::new();
            for &u in &n1 {
                for x in eu_vu_in(u, &n1, &n2, c.edge_set()).1 {
                    hits.entry(x).or_default().insert(u);
                }
            }
            let sum: usize = hits.values().map(BTreeSet::len).sum();
            if sum as f64 > bound {
                let cert = hits
                    .iter()
                    .filter(|(_, s)| s.len() as f64 >= threshold)
                    .find_map(|(&x, s)| {
                        certify_min_degree(self.h, v, x, s, self.delta, self.t, CERTIFICATE_SEED)
                            .ok()
                            .flatten()
                    });
                out.push(self.violation(ID, vec![v], sum as f64, bound, Relation::AtMost, cert));
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn common_neighborhood_in_b(&mut self, l: &Local) -> CheckOutcome {
        const ID: &str = "common-neighborhood-in-b";
        let (mut instances, mut out) = (0, vec![]);
        for x in l.vertices() {
            for y in x + 1..l.b.n() as Vertex {
                let common: VertexSet = l.n1[x as usize].intersection(&l.n1[y as usize]).copied().collect();
                if l.n1[x as usize].is_empty() || l.n1[y as usize].is_empty() {
                    continue;
                }
                instances += 1;
                if common.len() > 7 {
                    let c = self.common_route(x, y, &common);
                    out.push(self.violation(ID, vec![x, y], common.len() as f64, 7.0, Relation::AtMost, c));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn shared_second_neighbors_in_b(&mut self, l: &Local) -> CheckOutcome {
        const ID: &str = "shared-second-neighbors-in-b";
        let (mut instances, mut out) = (0, vec![]);
        for v in l.vertices() {
            let a = l.around(v);
            for e in l.b.edges().filter(|e| e.contains(v)) {
                let (u, w) = e.others(v).expect("edge contains v");
                instances += 1;
                let shared = a.vu[&u].intersection(&a.vu[&w]).count();
                if shared > 7 {
                    let common: VertexSet = l.n1[u as usize].intersection(&l.n1[w as usize]).copied().collect();
                    let c = self.common_route(u, w, &common);
                    out.push(self.violation(ID, vec![v, u, w], shared as f64, 7.0, Relation::AtMost, c));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn second_neighborhood_size_in_b(&mut self, l: &Local) -> CheckOutcome {
        const ID: &str = "second-neighborhood-size-in-b";
        let (mut instances, mut out) = (0, vec![]);
        for v in l.vertices() {
            let a = l.around(v);
            for &u in &a.n1 {
                instances += 1;
                let size = a.vu[&u].len() as f64;
                let bound = l.b.degree(u) as f64 - 16.0;
                if size < bound {
                    let common: VertexSet = l.n1[u as usize].intersection(&l.n1[v as usize]).copied().collect();
                    let c = self.common_route(u, v, &common).or_else(|| {
                        (0..l.b.n() as Vertex)
                            .filter(|&z| z != u && l.b.codeg_unchecked(u, z) > 2)
                            .find_map(|z| self.codegree_route(l.b, u, z))
                    });
                    out.push(self.violation(ID, vec![v, u], size, bound, Relation::AtLeast, c));
                }
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    /// Offending `(u, w, x)` around `v`: `x ∈ V_u ∩ V_w` while neither `u`
    /// nor `w` has the other as its only link neighbor.
    fn exclusive_failures(&self, l: &Local, v: Vertex, a: &Around) -> Vec<[Vertex; 3]> {
        let mut bad = vec![];
        let nbrs: BTreeMap<Vertex, VertexSet> = a.n1.iter().map(|&u| (u, l.link_neighbors(v, u))).collect();
        let only = |u: Vertex, w: Vertex| nbrs[&u].len() == 1 && nbrs[&u].contains(&w);
        for &u in &a.n1 {
            for &w in a.n1.range(u + 1..) {
                if only(u, w) || only(w, u) {
                    continue;
                }
                for &x in a.vu[&u].intersection(&a.vu[&w]) {
                    bad.push([u, w, x]);
                }
            }
        }
        bad
    }

    fn second_neighborhood_sum_in_b(&mut self, l: &Local) -> CheckOutcome {
        const ID: &str = "second-neighborhood-sum-in-b";
        let n = l.b.n() as f64;
        let (mut instances, mut out) = (0, vec![]);
        for v in l.vertices() {
            let a = l.around(v);
            if a.n1.is_empty() {
                continue;
            }
            instances += 1;
            let sum: usize = a.vu.values().map(BTreeSet::len).sum();
            let bound = n + 14.0 * l.b.degree(v) as f64;
            if sum as f64 > bound {
                let c = self
                    .exclusive_failures(l, v, &a)
                    .into_iter()
                    .find_map(|[u, w, x]| certificate_on_support(self.h, v, x, &set_of(&[u, w])))
                    .or_else(|| {
                        l.b.edges().filter(|e| e.contains(v)).find_map(|e| {
                            let (u, w) = e.others(v).expect("edge contains v");
                            let common = l.n1[u as usize].intersection(&l.n1[w as usize]).copied().collect();
                            self.common_route(u, w, &common)
                        })
                    });
                out.push(self.violation(ID, vec![v], sum as f64, bound, Relation::AtMost, c));
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }

    fn shared_vertex_exclusive_in_b(&mut self, l: &Local) -> CheckOutcome {
        const ID: &str = "shared-vertex-exclusive-in-b";
        let (mut instances, mut out) = (0, vec![]);
        for v in l.vertices() {
            let a = l.around(v);
            if a.n1.len() < 2 {
                continue;
            }
            instances += 1;
            let bad = self.exclusive_failures(l, v, &a);
            if let Some(&[u, w, x]) = bad.first() {
                let c = bad
                    .iter()
                    .find_map(|&[u, w, x]| certificate_on_support(self.h, v, x, &set_of(&[u, w])));
                out.push(self.violation(ID, vec![v, u, w, x], bad.len() as f64, 0.0, Relation::AtMost, c));
            }
        }
        CheckOutcome::finish(ID, instances, out)
    }
}

/// All 2-subsets of `s`, in order.
fn pairs_of(s: &VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
    s.iter()
        .flat_map(move |&a| s.range(a + 1..).map(move |&b| set_of(&[a, b])))
}
