//! Graphs with loops and the link graph of a vertex relative to a set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph3, Vertex, VertexSet};

/// A simple graph on an arbitrary vertex set where each vertex may also carry
/// loops, counted with multiplicity in the degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoopGraph {
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
    loops: BTreeMap<Vertex, u32>,
}

impl LoopGraph {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        LoopGraph {
            adjacency: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
            loops: BTreeMap::new(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adjacency.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adjacency.contains_key(&v)
    }

    /// Adds the simple edge `uv`; returns `false` if it already existed.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return invalid(format!("use add_loop for a loop at {u}"));
        }
        if !self.has_vertex(u) || !self.has_vertex(v) {
            return invalid(format!("edge {u}-{v} leaves the vertex set"));
        }
        let fresh = self.adjacency.get_mut(&u).unwrap().insert(v);
        self.adjacency.get_mut(&v).unwrap().insert(u);
        Ok(fresh)
    }

    pub fn add_loop(&mut self, v: Vertex, multiplicity: u32) -> Result<()> {
        if !self.has_vertex(v) {
            return invalid(format!("loop at {v} outside the vertex set"));
        }
        if multiplicity > 0 {
            *self.loops.entry(v).or_insert(0) += multiplicity;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn loops(&self, v: Vertex) -> u32 {
        self.loops.get(&v).copied().unwrap_or(0)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn simple_degree(&self, v: Vertex) -> usize {
        self.adjacency.get(&v).map_or(0, |s| s.len())
    }

    /// Simple edges at `v` plus loops at `v` with multiplicity.
    pub fn degree(&self, v: Vertex) -> usize {
        self.simple_degree(v) + self.loops(v) as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn simple_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn simple_edge_count(&self) -> usize {
        self.adjacency.values().map(|s| s.len()).sum::<usize>() / 2
    }
}

fn validate_link_args(h: &Hypergraph3, x: Vertex, s: &VertexSet, y: Vertex) -> Result<()> {
    h.check_vertex(x)?;
    h.check_vertex(y)?;
    if x == y {
        return invalid(format!("link graph needs x != y, got {x} twice"));
    }
    if s.contains(&x) || s.contains(&y) {
        return invalid(format!("set S must avoid both {x} and {y}"));
    }
    if let Some(&v) = s.iter().next_back() {
        h.check_vertex(v)?;
    }
    Ok(())
}

/// The link graph of `x` on `s`, discounting the partner `y`.
///
/// An edge `{x,u,v}` with `u, v` in `s` becomes the simple edge `uv`. An edge
/// `{x,u,v}` with `u` in `s`, `v` outside `s` and `v != y` adds one loop at `u`.
/// Edges through both `x` and `y` contribute nothing.
pub fn link_graph(h: &Hypergraph3, x: Vertex, s: &VertexSet, y: Vertex) -> Result<LoopGraph> {
    validate_link_args(h, x, s, y)?;
    let mut g = LoopGraph::new(s.iter().copied());
    for e in h.edges() {
        let Some((p, q)) = e.others(x) else { continue };
        match (s.contains(&p), s.contains(&q)) {
            (true, true) => {
                g.add_edge(p, q)?;
            }
            (true, false) if q != y => g.add_loop(p, 1)?,
            (false, true) if p != y => g.add_loop(q, 1)?,
            _ => {}
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeInequality {
    Pass,
    /// `u` has link degree below `codegree(x, u) - 1`.
    Violation {
        u: Vertex,
        link_degree: usize,
        codegree: u32,
    },
}

/// Checks `deg_L(u) >= codegree(x, u) - 1` for every `u` in `s`.
pub fn verify_degree_inequality(
    h: &Hypergraph3,
    x: Vertex,
    s: &VertexSet,
    y: Vertex,
) -> Result<DegreeInequality> {
    let g = link_graph(h, x, s, y)?;
    for &u in s {
        let d = g.degree(u);
        let c = h.codeg_unchecked(x, u);
        if (d as i64) < c as i64 - 1 {
            return Ok(DegreeInequality::Violation {
                u,
                link_degree: d,
                codegree: c,
            });
        }
    }
    Ok(DegreeInequality::Pass)
}
