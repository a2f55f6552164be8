//! `K_{2,t}` traces: certificates, the exact detector, an exhaustive oracle,
//! the Berge comparator and certificate construction from dominated sets.
//!
//! A `K_{2,t}` trace on `S = {x, y} ∪ D` (`|D| = t`) is a choice of `2t`
//! distinct hyperedges, one for each pattern edge `{x,u}` / `{y,u}` with
//! `u ∈ D`, each meeting `S` in exactly its pattern edge.

mod berge;
mod constructive;
mod detect;
pub mod matching;
mod naive;

use std::fmt;
use std::str::FromStr;

pub use berge::{berge_witness, contains_berge, BergeWitness};
pub use constructive::{certify_min1, certify_min_degree, trace_from_dominated};
pub use detect::{
    certificate_on_support, contains_trace, contains_trace_parallel, contains_trace_within, incremental_trace_check,
    Detection, TraceDetector,
};
pub use naive::{contains_trace_naive, contains_trace_naive_through};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};

/// The forbidden pattern `K_{2,t}`, `t >= 2`; `t = 2` is `C_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TracePattern {
    t: usize,
}

impl TracePattern {
    pub fn new(t: usize) -> Result<Self> {
        if t < 2 {
            return invalid(format!("K_{{2,t}} needs t >= 2, got {t}"));
        }
        Ok(TracePattern { t })
    }

    pub fn c4() -> Self {
        TracePattern { t: 2 }
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

/// A pattern edge `{x,u}` (side `X`) or `{y,u}` (side `Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternEdge {
    pub side: Side,
    pub u: Vertex,
}

/// A witness that a hypergraph contains `K_{2,|D|}` as a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCertificate {
    pub x: Vertex,
    pub y: Vertex,
    pub d: VertexSet,
    /// Ordered x-side by `u`, then y-side by `u`.
    pub assignment: Vec<(PatternEdge, Triple)>,
}

impl TraceCertificate {
    pub fn t(&self) -> usize {
        self.d.len()
    }

    pub fn support(&self) -> VertexSet {
        let mut s = self.d.clone();
        s.insert(self.x);
        s.insert(self.y);
        s
    }

    pub fn edges(&self) -> impl Iterator<Item = &Triple> + '_ {
        self.assignment.iter().map(|(_, e)| e)
    }

    pub fn uses_edge(&self, e: &Triple) -> bool {
        self.edges().any(|f| f == e)
    }

    fn center(&self, side: Side) -> Vertex {
        match side {
            Side::X => self.x,
            Side::Y => self.y,
        }
    }
}

/// True iff `cert` is a valid `K_{2,t}` trace in `h` (`t = |D| >= 2`).
pub fn verify_certificate(h: &Hypergraph3, cert: &TraceCertificate) -> bool {
    let t = cert.d.len();
    if t < 2 || cert.x == cert.y || cert.d.contains(&cert.x) || cert.d.contains(&cert.y) {
        return false;
    }
    let s = cert.support();
    if s.iter().any(|&v| v as usize >= h.n()) || cert.assignment.len() != 2 * t {
        return false;
    }
    let mut roles: Vec<PatternEdge> = cert.assignment.iter().map(|(p, _)| *p).collect();
    roles.sort_unstable();
    roles.dedup();
    if roles.len() != 2 * t || roles.iter().any(|p| !cert.d.contains(&p.u)) {
        return false;
    }
    let mut used: Vec<Triple> = Vec::with_capacity(2 * t);
    for (p, e) in &cert.assignment {
        if !h.contains_edge(e) {
            return false;
        }
        let c = cert.center(p.side);
        let meet: Vec<Vertex> = e.vertices().into_iter().filter(|v| s.contains(v)).collect();
        let mut want = [c, p.u];
        want.sort_unstable();
        if meet != want {
            return false;
        }
        if used.contains(e) {
            return false;
        }
        used.push(*e);
    }
    true
}

/// Orders the assignment x-side first, each side by `u`.
pub(crate) fn canonical_order(assignment: &mut [(PatternEdge, Triple)]) {
    assignment.sort_by_key(|(p, _)| *p);
}

impl fmt::Display for TraceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} |", self.x, self.y)?;
        for u in &self.d {
            write!(f, " {u}")?;
        }
        writeln!(f, " |")?;
        for (p, e) in &self.assignment {
            let side = match p.side {
                Side::X => 'x',
                Side::Y => 'y',
            };
            writeln!(f, "{side}:{} -> {e}", p.u)?;
        }
        Ok(())
    }
}

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn pvert(tok: &str, line: usize) -> Result<Vertex> {
    tok.parse::<Vertex>()
        .or_else(|_| perr(line, format!("expected a vertex, found {tok:?}")))
}

impl FromStr for TraceCertificate {
    type Err = Error;

    /// Parses the block written by `Display`.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let Some((hl, head)) = lines.next() else {
            return perr(1, "empty certificate");
        };
        let parts: Vec<&str> = head.split('|').map(str::trim).collect();
        if parts.len() != 3 || !parts[2].is_empty() {
            return perr(hl, "header must read \"x y | d1 .. dt |\"");
        }
        let xy: Vec<&str> = parts[0].split_whitespace().collect();
        if xy.len() != 2 {
            return perr(hl, "header needs the two centers before the first '|'");
        }
        let (x, y) = (pvert(xy[0], hl)?, pvert(xy[1], hl)?);
        let d = parts[1]
            .split_whitespace()
            .map(|t| pvert(t, hl))
            .collect::<Result<VertexSet>>()?;
        let mut assignment = Vec::new();
        for (line, l) in lines {
            let Some((role, edge)) = l.split_once("->") else {
                return perr(line, "expected \"side:u -> a b c\"");
            };
            let Some((side, u)) = role.trim().split_once(':') else {
                return perr(line, "role must read \"x:u\" or \"y:u\"");
            };
            let side = match side {
                "x" => Side::X,
                "y" => Side::Y,
                other => return perr(line, format!("unknown side {other:?}")),
            };
            let u = pvert(u, line)?;
            let v: Vec<Vertex> = edge
                .split_whitespace()
                .map(|t| pvert(t, line))
                .collect::<Result<_>>()?;
            if v.len() != 3 {
                return perr(line, "edge needs three vertices");
            }
            let e = Triple::new(v[0], v[1], v[2]).or_else(|e| perr(line, e.to_string()))?;
            assignment.push((PatternEdge { side, u }, e));
        }
        Ok(TraceCertificate { x, y, d, assignment })
    }
}
