//! Exhaustive trace search used as a test oracle.
//!
//! Enumerates every center pair, every `t`-subset `D` and every assignment of
//! hyperedges to the `2t` pattern edges, checking injectivity directly. It
//! shares nothing with the branch-and-bound detector beyond the types.

use super::{canonical_order, PatternEdge, Side, TraceCertificate, TracePattern};
use crate::hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};

pub fn contains_trace_naive(h: &Hypergraph3, pattern: TracePattern) -> Option<TraceCertificate> {
    search(h, pattern.t(), None)
}

/// Only traces whose assignment uses `e`; `e` must be an edge of `h`.
pub fn contains_trace_naive_through(
    h: &Hypergraph3,
    e: &Triple,
    pattern: TracePattern,
) -> Option<TraceCertificate> {
    search(h, pattern.t(), Some(e))
}

fn subsets(pool: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(pool: &[Vertex], k: usize, from: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(pool, k, 0, &mut cur, &mut out);
    out
}

fn search(h: &Hypergraph3, t: usize, must_use: Option<&Triple>) -> Option<TraceCertificate> {
    let n = h.n() as Vertex;
    let edges: Vec<Triple> = h.edges().copied().collect();
    for x in 0..n {
        for y in x + 1..n {
            let pool: Vec<Vertex> = (0..n).filter(|&v| v != x && v != y).collect();
            for d in subsets(&pool, t) {
                let s: VertexSet = d.iter().copied().chain([x, y]).collect();
                if let Some(e) = must_use {
                    // e must meet S in exactly one pattern edge
                    let meet: Vec<Vertex> = e.vertices().into_iter().filter(|v| s.contains(v)).collect();
                    if meet.len() != 2 || (meet.contains(&x) == meet.contains(&y)) {
                        continue;
                    }
                }
                let mut roles = Vec::with_capacity(2 * t);
                let mut options: Vec<Vec<Triple>> = Vec::with_capacity(2 * t);
                for (side, c) in [(Side::X, x), (Side::Y, y)] {
                    for &u in &d {
                        let want: VertexSet = [c, u].into_iter().collect();
                        let opts: Vec<Triple> = edges
                            .iter()
                            .filter(|e| {
                                let meet: VertexSet =
                                    e.vertices().into_iter().filter(|v| s.contains(v)).collect();
                                meet == want
                            })
                            .copied()
                            .collect();
                        roles.push(PatternEdge { side, u });
                        options.push(opts);
                    }
                }
                if options.iter().any(Vec::is_empty) {
                    continue;
                }
                let mut pick: Vec<Triple> = Vec::with_capacity(2 * t);
                if assign(&options, must_use, &mut pick) {
                    let mut assignment: Vec<(PatternEdge, Triple)> =
                        roles.into_iter().zip(pick).collect();
                    canonical_order(&mut assignment);
                    return Some(TraceCertificate {
                        x,
                        y,
                        d: d.into_iter().collect(),
                        assignment,
                    });
                }
            }
        }
    }
    None
}

/// Tries every combination of options, keeping the first injective one that
/// uses `must_use` when given.
fn assign(options: &[Vec<Triple>], must_use: Option<&Triple>, pick: &mut Vec<Triple>) -> bool {
    let i = pick.len();
    if i == options.len() {
        let distinct = (0..i).all(|a| (a + 1..i).all(|b| pick[a] != pick[b]));
        return distinct && must_use.is_none_or(|e| pick.contains(e));
    }
    for &e in &options[i] {
        pick.push(e);
        if assign(options, must_use, pick) {
            return true;
        }
        pick.pop();
    }
    false
}
