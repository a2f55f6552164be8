//! Distance-one and distance-two neighborhoods inside an edge subset, and the
//! private edge sets `E_u` / covered sets `V_u` hanging off a first neighbor.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};

/// `(N1, N2)` of `v` using only the edges in `restrict`.
pub fn neighborhoods(
    h: &Hypergraph3,
    v: Vertex,
    restrict: &BTreeSet<Triple>,
) -> Result<(VertexSet, VertexSet)> {
    h.check_vertex(v)?;
    Ok(neighborhoods_in(v, restrict))
}

pub(crate) fn neighborhoods_in(v: Vertex, restrict: &BTreeSet<Triple>) -> (VertexSet, VertexSet) {
    let mut n1 = VertexSet::new();
    for e in restrict {
        if let Some((p, q)) = e.others(v) {
            n1.insert(p);
            n1.insert(q);
        }
    }
    let mut n2 = VertexSet::new();
    for e in restrict {
        if e.vertices().iter().any(|w| n1.contains(w)) {
            for w in e.vertices() {
                if w != v && !n1.contains(&w) {
                    n2.insert(w);
                }
            }
        }
    }
    (n1, n2)
}

/// Edges of `restrict` meeting `N1(v)` in exactly `{u}`, and the `N2(v)`
/// vertices they cover.
pub fn eu_vu(
    h: &Hypergraph3,
    v: Vertex,
    u: Vertex,
    restrict: &BTreeSet<Triple>,
) -> Result<(BTreeSet<Triple>, VertexSet)> {
    h.check_vertex(v)?;
    let (n1, n2) = neighborhoods_in(v, restrict);
    if !n1.contains(&u) {
        return invalid(format!("{u} is not a first neighbor of {v}"));
    }
    Ok(eu_vu_in(u, &n1, &n2, restrict))
}

pub(crate) fn eu_vu_in(
    u: Vertex,
    n1: &VertexSet,
    n2: &VertexSet,
    restrict: &BTreeSet<Triple>,
) -> (BTreeSet<Triple>, VertexSet) {
    let eu: BTreeSet<Triple> = restrict
        .iter()
        .filter(|e| e.contains(u) && e.meet_count(n1) == 1)
        .copied()
        .collect();
    let vu = eu
        .iter()
        .flat_map(|e| e.vertices())
        .filter(|w| n2.contains(w))
        .collect();
    (eu, vu)
}
