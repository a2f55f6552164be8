//! Exact branch-and-bound trace detection.
//!
//! For centers `x, y` a set `D` carries a trace iff every `u ∈ D` has an edge
//! `{x,u,w}` and an edge `{y,u,w'}` with `w, w' ∉ {x, y} ∪ D`. Such edges are
//! automatically distinct (an edge through both centers meets `S` in three
//! points), so no matching step is needed here.
//!
//! The search keeps, for every vertex, how many of its x-partners and
//! y-partners are still outside `D`. Counts only fall as `D` grows, so a
//! vertex whose count hit zero is dead for the rest of the branch.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{canonical_order, PatternEdge, Side, TraceCertificate, TracePattern};
use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex};

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    Found(TraceCertificate),
    Absent,
    Timeout,
}

impl Detection {
    pub fn certificate(&self) -> Option<&TraceCertificate> {
        match self {
            Detection::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Reusable detector state for one hypergraph.
pub struct TraceDetector<'a> {
    h: &'a Hypergraph3,
    t: usize,
    links: Vec<Vec<Vertex>>,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

/// Per-pair search scratch.
struct PairState {
    x: Vertex,
    y: Vertex,
    in_d: Vec<bool>,
    out_x: Vec<u32>,
    out_y: Vec<u32>,
    chosen: Vec<Vertex>,
}

impl<'a> TraceDetector<'a> {
    pub fn new(h: &'a Hypergraph3, pattern: TracePattern) -> Self {
        TraceDetector {
            h,
            t: pattern.t(),
            links: h.pair_links(),
            deadline: None,
            nodes: 0,
            timed_out: false,
        }
    }

    pub fn with_budget(mut self, budget: Option<Duration>) -> Self {
        self.deadline = budget.map(|b| Instant::now() + b);
        self
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn link(&self, x: Vertex, u: Vertex) -> &[Vertex] {
        &self.links[x as usize * self.h.n() + u as usize]
    }

    /// Partners of `u` for center `x`, excluding the other center.
    fn partners(&self, x: Vertex, u: Vertex, other: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.link(x, u).iter().copied().filter(move |&w| w != other)
    }

    /// Searches every ordered center pair `x < y`.
    pub fn run(&mut self) -> Detection {
        let n = self.h.n() as Vertex;
        for x in 0..n {
            for y in x + 1..n {
                match self.search_pair(x, y, &[], &BTreeSet::new(), None) {
                    Detection::Absent => {}
                    other => return other,
                }
            }
        }
        Detection::Absent
    }

    /// Searches one center pair. `forced_in` must lie in `D`, `forced_out`
    /// must stay out of it; `prefer` is tried first when building the
    /// certificate.
    pub fn search_pair(
        &mut self,
        x: Vertex,
        y: Vertex,
        forced_in: &[Vertex],
        forced_out: &BTreeSet<Vertex>,
        prefer: Option<Triple>,
    ) -> Detection {
        let n = self.h.n();
        let mut st = PairState {
            x,
            y,
            in_d: vec![false; n],
            out_x: (0..n as Vertex).map(|u| self.partners(x, u, y).count() as u32).collect(),
            out_y: (0..n as Vertex).map(|u| self.partners(y, u, x).count() as u32).collect(),
            chosen: Vec::with_capacity(self.t),
        };
        for &u in forced_in {
            if u == x || u == y || forced_out.contains(&u) || st.in_d[u as usize] {
                return Detection::Absent;
            }
            if !self.try_add(&mut st, u) {
                return Detection::Absent;
            }
        }
        if st.chosen.len() > self.t {
            return Detection::Absent;
        }

        let mut cands: Vec<Vertex> = (0..n as Vertex)
            .filter(|&u| u != x && u != y && !st.in_d[u as usize] && !forced_out.contains(&u))
            .filter(|&u| st.out_x[u as usize] > 0 && st.out_y[u as usize] > 0)
            .collect();
        // candidates with many partners on both sides first
        cands.sort_by_key(|&u| {
            let dx = self.link(x, u).len();
            let dy = self.link(y, u).len();
            (std::cmp::Reverse(dx.min(dy)), u)
        });

        if self.extend(&mut st, &cands, 0) {
            Detection::Found(self.certificate(&st, prefer))
        } else if self.timed_out {
            Detection::Timeout
        } else {
            Detection::Absent
        }
    }

    /// Adds `c` to `D`, updating counts. On failure the state is restored.
    fn try_add(&self, st: &mut PairState, c: Vertex) -> bool {
        let ci = c as usize;
        if st.out_x[ci] == 0 || st.out_y[ci] == 0 {
            return false;
        }
        st.in_d[ci] = true;
        st.chosen.push(c);
        let mut ok = true;
        for (center, other, side) in [(st.x, st.y, Side::X), (st.y, st.x, Side::Y)] {
            for &u in self.link(center, c) {
                if u == other {
                    continue;
                }
                let counts = match side {
                    Side::X => &mut st.out_x,
                    Side::Y => &mut st.out_y,
                };
                counts[u as usize] -= 1;
                if counts[u as usize] == 0 && st.in_d[u as usize] {
                    ok = false;
                }
            }
        }
        if !ok {
            self.undo_add(st, c);
        }
        ok
    }

    fn undo_add(&self, st: &mut PairState, c: Vertex) {
        for (center, other, side) in [(st.x, st.y, Side::X), (st.y, st.x, Side::Y)] {
            for &u in self.link(center, c) {
                if u == other {
                    continue;
                }
                match side {
                    Side::X => st.out_x[u as usize] += 1,
                    Side::Y => st.out_y[u as usize] += 1,
                }
            }
        }
        st.in_d[c as usize] = false;
        st.chosen.pop();
    }

    fn extend(&mut self, st: &mut PairState, cands: &[Vertex], from: usize) -> bool {
        let need = self.t - st.chosen.len();
        if need == 0 {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let alive = cands[from..]
            .iter()
            .filter(|&&u| st.out_x[u as usize] > 0 && st.out_y[u as usize] > 0)
            .count();
        if alive < need {
            return false;
        }
        for i in from..cands.len() {
            if cands.len() - i < need {
                break;
            }
            let c = cands[i];
            if self.try_add(st, c) {
                if self.extend(st, cands, i + 1) {
                    return true;
                }
                self.undo_add(st, c);
                if self.timed_out {
                    return false;
                }
            }
        }
        false
    }

    fn certificate(&self, st: &PairState, prefer: Option<Triple>) -> TraceCertificate {
        let d: BTreeSet<Vertex> = st.chosen.iter().copied().collect();
        let mut assignment = Vec::with_capacity(2 * d.len());
        for &u in &d {
            for (center, other, side) in [(st.x, st.y, Side::X), (st.y, st.x, Side::Y)] {
                let options: Vec<Triple> = self
                    .partners(center, u, other)
                    .filter(|w| !d.contains(w))
                    .map(|w| Triple::from_distinct(center, u, w))
                    .collect();
                let e = prefer
                    .filter(|p| options.contains(p))
                    .or_else(|| options.iter().min().copied())
                    .expect("every member of D keeps an outside partner");
                assignment.push((PatternEdge { side, u }, e));
            }
        }
        canonical_order(&mut assignment);
        TraceCertificate {
            x: st.x,
            y: st.y,
            d,
            assignment,
        }
    }
}

/// A certificate on the fixed support `{x, y} ∪ d`, if one exists there.
pub fn certificate_on_support(
    h: &Hypergraph3,
    x: Vertex,
    y: Vertex,
    d: &BTreeSet<Vertex>,
) -> Option<TraceCertificate> {
    if d.len() < 2 || x == y || d.contains(&x) || d.contains(&y) {
        return None;
    }
    let s: BTreeSet<Vertex> = d.iter().copied().chain([x, y]).collect();
    let mut assignment = Vec::with_capacity(2 * d.len());
    for &u in d {
        for (side, c) in [(Side::X, x), (Side::Y, y)] {
            let e = h
                .edges()
                .find(|e| e.contains(c) && e.contains(u) && e.meet_count(&s) == 2)?;
            assignment.push((PatternEdge { side, u }, *e));
        }
    }
    canonical_order(&mut assignment);
    let cert = TraceCertificate {
        x,
        y,
        d: d.clone(),
        assignment,
    };
    super::verify_certificate(h, &cert).then_some(cert)
}

/// First trace found scanning center pairs in lexicographic order.
pub fn contains_trace(h: &Hypergraph3, pattern: TracePattern) -> Option<TraceCertificate> {
    match TraceDetector::new(h, pattern).run() {
        Detection::Found(c) => Some(c),
        _ => None,
    }
}

/// As [`contains_trace`] but gives up with `Timeout` once `budget` elapses.
pub fn contains_trace_within(
    h: &Hypergraph3,
    pattern: TracePattern,
    budget: Option<Duration>,
) -> Detection {
    TraceDetector::new(h, pattern).with_budget(budget).run()
}

/// Center pairs searched on the rayon pool. Returns the same certificate as
/// the sequential scan.
pub fn contains_trace_parallel(h: &Hypergraph3, pattern: TracePattern) -> Option<TraceCertificate> {
    let n = h.n() as Vertex;
    let links = h.pair_links();
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    pairs.par_iter().find_map_first(|&(x, y)| {
        let mut det = TraceDetector {
            h,
            t: pattern.t(),
            links: links.clone(),
            deadline: None,
            nodes: 0,
            timed_out: false,
        };
        det.search_pair(x, y, &[], &BTreeSet::new(), None)
            .certificate()
            .cloned()
    })
}

/// Looks for a trace in `h + e` that uses the new edge `e`.
///
/// When `h` is trace-free every trace of `h + e` uses `e`, so this decides
/// whether adding `e` keeps the hypergraph trace-free. The returned
/// certificate always assigns `e` to one of its pattern edges.
pub fn incremental_trace_check(
    h: &Hypergraph3,
    e: Triple,
    pattern: TracePattern,
) -> Result<Option<TraceCertificate>> {
    if h.contains_edge(&e) {
        return invalid(format!("edge {e} is already present"));
    }
    let h2 = h.with_edge(e)?;
    let mut det = TraceDetector::new(&h2, pattern);
    let n = h2.n() as Vertex;
    for c in e.vertices() {
        let (a, b) = e.others(c).expect("c lies in e");
        for (u, w) in [(a, b), (b, a)] {
            let out = BTreeSet::from([w]);
            for c2 in (0..n).filter(|v| !e.contains(*v)) {
                let (x, y) = (c.min(c2), c.max(c2));
                if let Detection::Found(cert) = det.search_pair(x, y, &[u], &out, Some(e)) {
                    debug_assert!(cert.uses_edge(&e));
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}
