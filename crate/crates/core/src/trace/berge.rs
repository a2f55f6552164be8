//! Berge copies of `K_{2,t}`: each pattern edge `{c,u}` gets a distinct
//! hyperedge containing it, with no condition on the third vertex.
//!
//! Every trace is a Berge copy; the converse fails, so this is kept as a
//! comparison point.

use super::matching::max_matching;
use super::{canonical_order, PatternEdge, Side, TracePattern};
use crate::hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeWitness {
    pub x: Vertex,
    pub y: Vertex,
    pub d: VertexSet,
    pub assignment: Vec<(PatternEdge, Triple)>,
}

impl BergeWitness {
    pub fn is_valid_for(&self, h: &Hypergraph3) -> bool {
        let t = self.d.len();
        if t < 2 || self.assignment.len() != 2 * t {
            return false;
        }
        let mut roles: Vec<PatternEdge> = self.assignment.iter().map(|(p, _)| *p).collect();
        roles.sort_unstable();
        roles.dedup();
        let mut used: Vec<Triple> = self.assignment.iter().map(|(_, e)| *e).collect();
        used.sort_unstable();
        used.dedup();
        roles.len() == 2 * t
            && used.len() == 2 * t
            && self.assignment.iter().all(|(p, e)| {
                let c = if p.side == Side::X { self.x } else { self.y };
                self.d.contains(&p.u) && h.contains_edge(e) && e.contains(c) && e.contains(p.u)
            })
    }
}

pub fn contains_berge(h: &Hypergraph3, pattern: TracePattern) -> bool {
    berge_witness(h, pattern).is_some()
}

pub fn berge_witness(h: &Hypergraph3, pattern: TracePattern) -> Option<BergeWitness> {
    let t = pattern.t();
    let n = h.n() as Vertex;
    let links = h.pair_links();
    let link = |a: Vertex, b: Vertex| &links[a as usize * h.n() + b as usize];
    for x in 0..n {
        for y in x + 1..n {
            let cands: Vec<Vertex> = (0..n)
                .filter(|&u| u != x && u != y && !link(x, u).is_empty() && !link(y, u).is_empty())
                .collect();
            if cands.len() < t {
                continue;
            }
            let mut chosen = Vec::with_capacity(t);
            if let Some(assignment) = extend(&cands, 0, t, x, y, &link, &mut chosen) {
                return Some(BergeWitness {
                    x,
                    y,
                    d: chosen.into_iter().collect(),
                    assignment,
                });
            }
        }
    }
    None
}

fn matching_for<'a>(
    chosen: &[Vertex],
    x: Vertex,
    y: Vertex,
    link: &impl Fn(Vertex, Vertex) -> &'a Vec<Vertex>,
) -> Option<Vec<(PatternEdge, Triple)>> {
    let mut roles = Vec::new();
    let mut right: Vec<Triple> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    for (side, c) in [(Side::X, x), (Side::Y, y)] {
        for &u in chosen {
            let mut opts = Vec::new();
            for &w in link(c, u) {
                let e = Triple::from_distinct(c, u, w);
                let idx = match right.iter().position(|&f| f == e) {
                    Some(i) => i,
                    None => {
                        right.push(e);
                        right.len() - 1
                    }
                };
                opts.push(idx);
            }
            roles.push(PatternEdge { side, u });
            adj.push(opts);
        }
    }
    let mate = max_matching(&adj, right.len());
    let mut out = Vec::with_capacity(roles.len());
    for (p, m) in roles.into_iter().zip(mate) {
        out.push((p, right[m?]));
    }
    canonical_order(&mut out);
    Some(out)
}

fn extend<'a>(
    cands: &[Vertex],
    from: usize,
    t: usize,
    x: Vertex,
    y: Vertex,
    link: &impl Fn(Vertex, Vertex) -> &'a Vec<Vertex>,
    chosen: &mut Vec<Vertex>,
) -> Option<Vec<(PatternEdge, Triple)>> {
    // matchability is monotone under taking subsets, so prune every prefix
    let m = matching_for(chosen, x, y, link)?;
    if chosen.len() == t {
        return Some(m);
    }
    for i in from..cands.len() {
        if cands.len() - i < t - chosen.len() {
            break;
        }
        chosen.push(cands[i]);
        if let Some(found) = extend(cands, i + 1, t, x, y, link, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}
