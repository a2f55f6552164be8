//! Dominated sets in graphs with loops.
//!
//! A set `D` is dominated in `G` when every member has a loop or a neighbor
//! outside `D`. Any subset of a dominated set is again dominated, which is
//! what lets callers shrink results to an exact size.

mod min_degree;
mod star;

use std::collections::BTreeMap;

pub use min_degree::{
    dominated_min_degree, dominated_min_degree_with, epsilon_of, simultaneous_dominated_min_degree,
    size_target, MinDegreeConfig, MinDegreeOutcome, DEFAULT_RETRIES,
};
pub use star::{dominated_pair_min1, star_loop_decomposition, Component, StarDecomposition};

use crate::hypergraph::{Vertex, VertexSet};
use crate::link::LoopGraph;

/// Why a member of a dominated set is allowed to be there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Loop,
    OutsideNeighbor(Vertex),
}

pub type WitnessMap = BTreeMap<Vertex, Witness>;

/// A dominated set together with one witness map per graph it is dominated in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatedSetResult {
    pub set: VertexSet,
    pub witnesses: Vec<WitnessMap>,
}

impl DominatedSetResult {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Keeps the `k` smallest members; witnesses stay valid for subsets.
    pub fn truncated(&self, k: usize) -> DominatedSetResult {
        let set: VertexSet = self.set.iter().copied().take(k).collect();
        let witnesses = self
            .witnesses
            .iter()
            .map(|w| w.iter().filter(|(v, _)| set.contains(v)).map(|(&v, &w)| (v, w)).collect())
            .collect();
        DominatedSetResult { set, witnesses }
    }
}

/// True iff every member of `d` has a loop or a neighbor outside `d`.
pub fn is_dominated(g: &LoopGraph, d: &VertexSet) -> bool {
    d.iter().all(|&v| {
        g.has_vertex(v) && (g.loops(v) > 0 || g.neighbors(v).any(|u| !d.contains(&u)))
    })
}

pub fn witness_is_valid(g: &LoopGraph, d: &VertexSet, v: Vertex, w: Witness) -> bool {
    if !g.has_vertex(v) {
        return false;
    }
    match w {
        Witness::Loop => g.loops(v) > 0,
        Witness::OutsideNeighbor(u) => !d.contains(&u) && g.has_edge(v, u),
    }
}

/// Every member of the result has a valid witness in the matching graph.
pub fn witnesses_are_valid(graphs: &[&LoopGraph], r: &DominatedSetResult) -> bool {
    graphs.len() == r.witnesses.len()
        && graphs.iter().zip(&r.witnesses).all(|(g, map)| {
            r.set
                .iter()
                .all(|v| map.get(v).is_some_and(|&w| witness_is_valid(g, &r.set, *v, w)))
        })
}

/// Witness for `v` in `g` against the final set `d`: a loop if any, else the
/// smallest neighbor outside `d`.
pub(crate) fn pick_witness(g: &LoopGraph, d: &VertexSet, v: Vertex) -> Option<Witness> {
    if g.loops(v) > 0 {
        return Some(Witness::Loop);
    }
    g.neighbors(v)
        .find(|u| !d.contains(u))
        .map(Witness::OutsideNeighbor)
}

pub(crate) fn witness_map(g: &LoopGraph, d: &VertexSet) -> WitnessMap {
    d.iter()
        .map(|&v| {
            let w = pick_witness(g, d, v).expect("member of a dominated set has a witness");
            (v, w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn is_dominated_examples() {
        let mut g = LoopGraph::new([0, 1]);
        g.add_edge(0, 1).unwrap();
        assert!(is_dominated(&g, &set(&[0])));
        assert!(!is_dominated(&g, &set(&[0, 1])));

        let mut g = LoopGraph::new([0]);
        g.add_loop(0, 1).unwrap();
        assert!(is_dominated(&g, &set(&[0])));
    }

    #[test]
    fn empty_set_is_dominated() {
        let g = LoopGraph::new([0, 1, 2]);
        assert!(is_dominated(&g, &VertexSet::new()));
    }

    #[test]
    fn truncation_keeps_witnesses_valid() {
        let mut g = LoopGraph::new(0..6);
        for (u, v) in [(0, 3), (1, 4), (2, 5)] {
            g.add_edge(u, v).unwrap();
        }
        let d = set(&[0, 1, 2]);
        let r = DominatedSetResult {
            witnesses: vec![witness_map(&g, &d)],
            set: d,
        };
        let t = r.truncated(2);
        assert_eq!(t.set, set(&[0, 1]));
        assert!(witnesses_are_valid(&[&g], &t));
    }
}
