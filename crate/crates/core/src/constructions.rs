//! Lower-bound constructions: polarity graphs of projective planes, their
//! one-vertex lift to trace-free 3-graphs, and randomized greedy packings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{triple_count, Hypergraph3, Triple, Vertex};
use crate::trace::{incremental_trace_check, TracePattern};

pub const DEFAULT_RESTARTS: u32 = 32;

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return invalid(format!("loop at {u}"));
        }
        if u.max(v) as usize >= self.n {
            return invalid(format!("edge {u} {v} outside 0..{}", self.n));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Checks every 4-set and each of its three 4-cycles.
    pub fn is_c4_free(&self) -> bool {
        let n = self.n as Vertex;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for [p, q, r, s] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                            if self.has_edge(p, q)
                                && self.has_edge(q, r)
                                && self.has_edge(r, s)
                                && self.has_edge(s, p)
                            {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// `n m` then `m` lines `u v`.
    fn from_str(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, head) = lines.next().ok_or_else(|| perr(1, "empty input".into()))?;
        let nums = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("not a number: {t:?}"))))
                .collect()
        };
        let h = nums(hl, head)?;
        if h.len() != 2 {
            return Err(perr(hl, "header must be \"n m\"".into()));
        }
        let mut g = Graph::new(h[0]);
        for (line, l) in lines {
            let v = nums(line, l)?;
            if v.len() != 2 {
                return Err(perr(line, "edge needs two vertices".into()));
            }
            match g.add_edge(v[0] as Vertex, v[1] as Vertex) {
                Ok(true) => {}
                Ok(false) => return Err(perr(line, "duplicate edge".into())),
                Err(e) => return Err(perr(line, e.to_string())),
            }
        }
        if g.edge_count() != h[1] {
            return Err(perr(hl, format!("header says {} edges, found {}", h[1], g.edge_count())));
        }
        Ok(g)
    }
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Points of PG(2, q) with first nonzero coordinate 1, in the order
/// `(1,a,b)`, `(0,1,b)`, `(0,0,1)`.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for b in 0..q {
        pts.push([0, 1, b]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// The orthogonal-polarity graph of PG(2, q) for prime `q`: points adjacent
/// when their dot product vanishes mod `q`. Absolute points lose only the
/// loop, leaving `q(q+1)^2 / 2` edges on `q^2 + q + 1` vertices.
pub fn polarity_graph(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return invalid(format!("q must be prime, got {q}"));
    }
    let pts = projective_points(q);
    let mut g = Graph::new(pts.len());
    for (i, u) in pts.iter().enumerate() {
        for (j, v) in pts.iter().enumerate().skip(i + 1) {
            let dot = (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q;
            if dot == 0 {
                g.add_edge(i as Vertex, j as Vertex)?;
            }
        }
    }
    Ok(g)
}

/// Adds one vertex `z = n` and the triple `{u, v, z}` for each edge `uv`.
///
/// If `G` has no 4-cycle the result has no `C_4` trace: a support avoiding
/// `z` sees exactly the graph edges, and a support containing `z` sees only
/// pairs through `z`, which cannot form a 4-cycle.
pub fn lift_to_trace_free(g: &Graph) -> Hypergraph3 {
    let z = g.n() as Vertex;
    Hypergraph3::from_edges(g.n() + 1, g.edges().map(|(u, v)| [u, v, z]))
        .expect("edges of a simple graph give distinct triples")
}

/// Best of `restarts` random-order greedy runs; each run keeps a triple iff
/// it creates no trace. Ties go to the earliest run.
pub fn greedy_lower_bound_with(n: usize, t: usize, seed: u64, restarts: u32) -> Result<Hypergraph3> {
    let pattern = TracePattern::new(t)?;
    let mut best = Hypergraph3::new(n);
    for run in 0..restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(run));
        let mut order: Vec<usize> = (0..triple_count(n)).collect();
        order.shuffle(&mut rng);
        let mut h = Hypergraph3::new(n);
        for r in order {
            let e = Triple::from_colex_rank(r);
            if incremental_trace_check(&h, e, pattern)?.is_none() {
                h.insert(e)?;
            }
        }
        if h.edge_count() > best.edge_count() {
            best = h;
        }
    }
    Ok(best)
}

pub fn greedy_lower_bound(n: usize, t: usize, seed: u64) -> Result<Hypergraph3> {
    greedy_lower_bound_with(n, t, seed, DEFAULT_RESTARTS)
}
