//! Spanning star/loop decompositions and sets dominated in two graphs of
//! minimum degree one.

use std::collections::{BTreeMap, BTreeSet};

use crate::dominated::{is_dominated, witness_map, DominatedSetResult};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Vertex, VertexSet};
use crate::link::LoopGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    LoopVertex(Vertex),
    /// Order-2 stars are stored with the smaller endpoint as center.
    Star { center: Vertex, leaves: VertexSet },
}

impl Component {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Component::LoopVertex(v) => vec![*v],
            Component::Star { center, leaves } => {
                std::iter::once(*center).chain(leaves.iter().copied()).collect()
            }
        }
    }

    fn pair(a: Vertex, b: Vertex) -> Component {
        Component::Star {
            center: a.min(b),
            leaves: BTreeSet::from([a.max(b)]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    pub components: Vec<Component>,
}

impl StarDecomposition {
    /// Checks that the components partition `g`'s vertices and use only
    /// loops and edges present in `g`.
    pub fn is_valid_for(&self, g: &LoopGraph) -> bool {
        let mut seen = VertexSet::new();
        for c in &self.components {
            match c {
                Component::LoopVertex(v) => {
                    if g.loops(*v) == 0 || !seen.insert(*v) {
                        return false;
                    }
                }
                Component::Star { center, leaves } => {
                    if leaves.is_empty() || !seen.insert(*center) {
                        return false;
                    }
                    for &l in leaves {
                        if !g.has_edge(*center, l) || !seen.insert(l) {
                            return false;
                        }
                    }
                }
            }
        }
        seen == g.vertex_set()
    }
}

/// Greedy spanning decomposition into looped vertices and stars with at least
/// one leaf, scanning vertices in increasing order.
///
/// A vertex whose neighbors are all taken is repaired by absorbing a looped
/// singleton, stealing a leaf from a star with two or more leaves, turning a
/// single-edge star into a two-leaf star, or joining a star whose center it
/// is adjacent to.
pub fn star_loop_decomposition(g: &LoopGraph) -> Result<StarDecomposition> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::PreconditionViolation(format!(
            "vertex {v} has degree 0"
        )));
    }
    let mut comps: Vec<Option<Component>> = Vec::new();
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();

    for v in g.vertices() {
        if owner.contains_key(&v) {
            continue;
        }
        if g.loops(v) > 0 {
            owner.insert(v, comps.len());
            comps.push(Some(Component::LoopVertex(v)));
            continue;
        }
        let free: VertexSet = g.neighbors(v).filter(|u| !owner.contains_key(u)).collect();
        if !free.is_empty() {
            let idx = comps.len();
            owner.insert(v, idx);
            for &u in &free {
                owner.insert(u, idx);
            }
            comps.push(Some(Component::Star {
                center: v,
                leaves: free,
            }));
            continue;
        }
        let u = g.neighbors(v).next().expect("degree >= 1 without loops");
        let j = owner[&u];
        let old = comps[j].take().expect("owner points at a live component");
        match old {
            Component::LoopVertex(_) => {
                let idx = comps.len();
                comps.push(Some(Component::pair(u, v)));
                owner.insert(u, idx);
                owner.insert(v, idx);
            }
            Component::Star { center, mut leaves } if center == u => {
                leaves.insert(v);
                owner.insert(v, j);
                comps[j] = Some(Component::Star { center, leaves });
            }
            Component::Star { center, mut leaves } if leaves.len() >= 2 => {
                leaves.remove(&u);
                comps[j] = Some(Component::Star { center, leaves });
                let idx = comps.len();
                comps.push(Some(Component::pair(u, v)));
                owner.insert(u, idx);
                owner.insert(v, idx);
            }
            Component::Star { center, .. } => {
                // single edge {center, u}; u becomes the center of a two-leaf star
                comps[j] = Some(Component::Star {
                    center: u,
                    leaves: BTreeSet::from([center, v]),
                });
                owner.insert(v, j);
            }
        }
    }
    Ok(StarDecomposition {
        components: comps.into_iter().flatten().collect(),
    })
}

fn check_pair(gx: &LoopGraph, gy: &LoopGraph) -> Result<()> {
    if gx.vertex_set() != gy.vertex_set() {
        return invalid("the two graphs must share one vertex set");
    }
    for g in [gx, gy] {
        if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
            return invalid(format!("vertex {v} has degree 0"));
        }
    }
    Ok(())
}

/// A set dominated in both `gx` and `gy` of size at least `ceil(|S|/3)`, and of
/// size 2 when `|S| = 3` unless the loopless union of the graphs is a triangle.
///
/// Any set independent in the union `U` of spanning star forests of both
/// graphs is dominated in each. `U` always has a vertex of degree at most 2:
/// one that is a center in neither forest qualifies, and if every vertex is a
/// center somewhere both forests are perfect matchings. Induced subgraphs keep
/// that shape, so taking a minimum-degree vertex and deleting its closed
/// neighborhood gains one member per at most three vertices. The result is
/// then grown greedily while it stays dominated in both graphs.
pub fn dominated_pair_min1(gx: &LoopGraph, gy: &LoopGraph) -> Result<DominatedSetResult> {
    check_pair(gx, gy)?;
    let s = gx.vertex_set();
    if s.len() == 3 {
        let v: Vec<Vertex> = s.iter().copied().collect();
        for (a, b) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
            if !gx.has_edge(a, b) && !gy.has_edge(a, b) {
                let d = VertexSet::from([a, b]);
                return Ok(DominatedSetResult {
                    witnesses: vec![witness_map(gx, &d), witness_map(gy, &d)],
                    set: d,
                });
            }
        }
    }

    let mut adj: BTreeMap<Vertex, VertexSet> = s.iter().map(|&v| (v, VertexSet::new())).collect();
    for dec in [star_loop_decomposition(gx)?, star_loop_decomposition(gy)?] {
        for c in dec.components {
            if let Component::Star { center, leaves } = c {
                for l in leaves {
                    adj.get_mut(&center).unwrap().insert(l);
                    adj.get_mut(&l).unwrap().insert(center);
                }
            }
        }
    }

    let mut d = VertexSet::new();
    while let Some(v) = adj.iter().min_by_key(|(&v, nb)| (nb.len(), v)).map(|(&v, _)| v) {
        let closed: Vec<Vertex> = std::iter::once(v).chain(adj[&v].iter().copied()).collect();
        for u in &closed {
            for w in adj.remove(u).unwrap_or_default() {
                if let Some(nb) = adj.get_mut(&w) {
                    nb.remove(u);
                }
            }
        }
        d.insert(v);
    }
    for v in &s {
        if d.contains(v) {
            continue;
        }
        d.insert(*v);
        if !(is_dominated(gx, &d) && is_dominated(gy, &d)) {
            d.remove(v);
        }
    }

    Ok(DominatedSetResult {
        witnesses: vec![witness_map(gx, &d), witness_map(gy, &d)],
        set: d,
    })
}
