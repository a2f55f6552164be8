//! Turning sets dominated in two link graphs into trace certificates.
//!
//! With `S` avoiding `x` and `y`, a set `D ⊆ S` dominated in both
//! `L_x(H,S,y)` and `L_y(H,S,x)` carries a `K_{2,|D|}` trace on `{x,y} ∪ D`:
//! a loop at `u` is an edge `{x,u,w}` with `w ∉ S ∪ {y}`, and an outside
//! neighbor `v ∈ S \ D` is the edge `{x,u,v}`.

use super::{canonical_order, verify_certificate, PatternEdge, Side, TraceCertificate};
use crate::dominated::{
    dominated_pair_min1, simultaneous_dominated_min_degree, DominatedSetResult, Witness,
};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};
use crate::link::link_graph;

/// Builds and verifies the certificate for `dom`, whose witness maps are for
/// `L_x(H,S,y)` and `L_y(H,S,x)` in that order.
pub fn trace_from_dominated(
    h: &Hypergraph3,
    x: Vertex,
    y: Vertex,
    s: &VertexSet,
    dom: &DominatedSetResult,
) -> Result<TraceCertificate> {
    if dom.witnesses.len() != 2 {
        return invalid("need one witness map per center");
    }
    if !dom.set.is_subset(s) || s.contains(&x) || s.contains(&y) || x == y {
        return invalid("D must lie in S, and S must avoid both centers");
    }
    if dom.set.len() < 2 {
        return invalid("a trace needs |D| >= 2");
    }
    let mut assignment = Vec::with_capacity(2 * dom.set.len());
    for (side, c, other, map) in [
        (Side::X, x, y, &dom.witnesses[0]),
        (Side::Y, y, x, &dom.witnesses[1]),
    ] {
        for &u in &dom.set {
            let bad = || Error::PreconditionViolation(format!("no valid witness for {u} at center {c}"));
            let e = match map.get(&u).ok_or_else(bad)? {
                Witness::Loop => h
                    .edges()
                    .filter(|e| e.contains(c) && e.contains(u))
                    .find(|e| e.third(c, u).is_some_and(|w| w != other && !s.contains(&w)))
                    .copied()
                    .ok_or_else(bad)?,
                Witness::OutsideNeighbor(v) => {
                    let e = Triple::new(c, u, *v)?;
                    if dom.set.contains(v) || !s.contains(v) || !h.contains_edge(&e) {
                        return Err(bad());
                    }
                    e
                }
            };
            assignment.push((PatternEdge { side, u }, e));
        }
    }
    canonical_order(&mut assignment);
    let cert = TraceCertificate {
        x,
        y,
        d: dom.set.clone(),
        assignment,
    };
    if !verify_certificate(h, &cert) {
        return Err(Error::PreconditionViolation(
            "assembled certificate failed verification".into(),
        ));
    }
    Ok(cert)
}

fn finish(
    h: &Hypergraph3,
    x: Vertex,
    y: Vertex,
    s: &VertexSet,
    dom: DominatedSetResult,
    t: usize,
) -> Result<Option<TraceCertificate>> {
    if dom.len() < t || t < 2 {
        return Ok(None);
    }
    trace_from_dominated(h, x, y, s, &dom.truncated(t)).map(Some)
}

/// A `K_{2,t}` certificate from the minimum-degree-one pair algorithm, when
/// it yields at least `t` vertices. Both link graphs need minimum degree 1.
pub fn certify_min1(
    h: &Hypergraph3,
    x: Vertex,
    y: Vertex,
    s: &VertexSet,
    t: usize,
) -> Result<Option<TraceCertificate>> {
    let gx = link_graph(h, x, s, y)?;
    let gy = link_graph(h, y, s, x)?;
    let dom = dominated_pair_min1(&gx, &gy)?;
    finish(h, x, y, s, dom, t)
}

/// A `K_{2,t}` certificate from the minimum-degree-`delta` algorithm applied
/// to both link graphs.
pub fn certify_min_degree(
    h: &Hypergraph3,
    x: Vertex,
    y: Vertex,
    s: &VertexSet,
    delta: u32,
    t: usize,
    seed: u64,
) -> Result<Option<TraceCertificate>> {
    let gx = link_graph(h, x, s, y)?;
    let gy = link_graph(h, y, s, x)?;
    let dom = simultaneous_dominated_min_degree(&gx, &gy, delta, seed)?;
    finish(h, x, y, s, dom, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominated::witness_map;

    #[test]
    fn loops_become_outside_edges() {
        let h = Hypergraph3::from_edges(8, [[0, 2, 4], [0, 3, 5], [1, 2, 6], [1, 3, 7]]).unwrap();
        let s = VertexSet::from([2, 3]);
        let c = certify_min1(&h, 0, 1, &s, 2).unwrap().unwrap();
        assert_eq!(c.d, s);
        assert!(verify_certificate(&h, &c));
    }

    #[test]
    fn neighbor_witnesses_used() {
        // in L_0 on S={2,3,4}: edges 2-4 and 3-4; L_1 likewise
        let h = Hypergraph3::from_edges(5, [[0, 2, 4], [0, 3, 4], [1, 2, 4], [1, 3, 4]]).unwrap();
        let s = VertexSet::from([2, 3, 4]);
        let gx = link_graph(&h, 0, &s, 1).unwrap();
        let gy = link_graph(&h, 1, &s, 0).unwrap();
        let d = VertexSet::from([2, 3]);
        let dom = DominatedSetResult {
            witnesses: vec![witness_map(&gx, &d), witness_map(&gy, &d)],
            set: d,
        };
        let c = trace_from_dominated(&h, 0, 1, &s, &dom).unwrap();
        assert!(c.uses_edge(&Triple::new(0, 2, 4).unwrap()));
    }

    #[test]
    fn forged_witness_rejected() {
        let h = Hypergraph3::from_edges(5, [[0, 2, 4], [0, 3, 4], [1, 2, 4], [1, 3, 4]]).unwrap();
        let s = VertexSet::from([2, 3, 4]);
        let d = VertexSet::from([2, 3]);
        let all_loops = d.iter().map(|&v| (v, Witness::Loop)).collect();
        let dom = DominatedSetResult {
            witnesses: vec![all_loops, Default::default()],
            set: d,
        };
        assert!(trace_from_dominated(&h, 0, 1, &s, &dom).is_err());
    }
}
