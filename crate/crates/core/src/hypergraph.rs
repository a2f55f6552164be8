//! 3-uniform hypergraphs with a pair co-degree index.
//!
//! Vertices are dense integers `0..n`. Edges are stored as sorted triples in
//! a `BTreeSet`, so iteration is always in canonical (lexicographic) order.
//! The co-degree of every pair is kept in a flat `n * n` table that is
//! updated on every insert and remove.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

pub type Vertex = u32;
pub type VertexSet = BTreeSet<Vertex>;

/// A hyperedge: three distinct vertices in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple([Vertex; 3]);

impl Triple {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return invalid(format!("triple {a} {b} {c} repeats a vertex"));
        }
        Ok(Triple(v))
    }

    /// Caller guarantees the three vertices are distinct.
    pub(crate) fn from_distinct(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        debug_assert!(v[0] < v[1] && v[1] < v[2]);
        Triple(v)
    }

    #[inline]
    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// The two vertices other than `v`, if `v` is in the triple.
    pub fn others(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        let [a, b, c] = self.0;
        if v == a {
            Some((b, c))
        } else if v == b {
            Some((a, c))
        } else if v == c {
            Some((a, b))
        } else {
            None
        }
    }

    /// The vertex completing the pair `{x, y}`, if the pair lies in the triple.
    pub fn third(&self, x: Vertex, y: Vertex) -> Option<Vertex> {
        let (p, q) = self.others(x)?;
        if p == y {
            Some(q)
        } else if q == y {
            Some(p)
        } else {
            None
        }
    }

    /// Number of vertices shared with `set`.
    pub fn meet_count(&self, set: &VertexSet) -> usize {
        self.0.iter().filter(|v| set.contains(v)).count()
    }

    /// Position of the triple in colex order: `C(c,3) + C(b,2) + a`.
    pub fn colex_rank(&self) -> usize {
        let [a, b, c] = self.0.map(|v| v as usize);
        binom3(c) + b * b.saturating_sub(1) / 2 + a
    }

    pub fn from_colex_rank(mut rank: usize) -> Self {
        let mut c = 2;
        while binom3(c + 1) <= rank {
            c += 1;
        }
        rank -= binom3(c);
        let mut b = 1;
        while (b + 1) * b / 2 <= rank {
            b += 1;
        }
        rank -= b * (b - 1) / 2;
        Triple([rank as Vertex, b as Vertex, c as Vertex])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

#[inline]
pub(crate) fn binom3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Number of triples on `n` vertices.
pub fn triple_count(n: usize) -> usize {
    binom3(n)
}

/// A 3-uniform hypergraph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: BTreeSet<Triple>,
    codeg: Vec<u32>,
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph3(n={}, {{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let [a, b, c] = e.vertices();
            write!(f, "{a}{b}{c}")?;
        }
        write!(f, "}})")
    }
}

impl Hypergraph3 {
    pub fn new(n: usize) -> Self {
        Hypergraph3 {
            n,
            edges: BTreeSet::new(),
            codeg: vec![0; n * n],
        }
    }

    /// Builds a hypergraph from raw triples, rejecting duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut h = Hypergraph3::new(n);
        for [a, b, c] in edges {
            let t = Triple::new(a, b, c)?;
            if !h.insert(t)? {
                return invalid(format!("duplicate edge {t}"));
            }
        }
        Ok(h)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Triple> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Triple> {
        &self.edges
    }

    #[inline]
    pub fn contains_edge(&self, t: &Triple) -> bool {
        self.edges.contains(t)
    }

    fn check_triple(&self, t: &Triple) -> Result<()> {
        if t.0[2] as usize >= self.n {
            return invalid(format!("edge {t} leaves the vertex range 0..{}", self.n));
        }
        Ok(())
    }

    /// Inserts an edge; returns `false` if it was already present.
    pub fn insert(&mut self, t: Triple) -> Result<bool> {
        self.check_triple(&t)?;
        if !self.edges.insert(t) {
            return Ok(false);
        }
        self.bump(&t, true);
        Ok(true)
    }

    /// Removes an edge; returns `false` if it was absent.
    pub fn remove(&mut self, t: &Triple) -> bool {
        if !self.edges.remove(t) {
            return false;
        }
        self.bump(t, false);
        true
    }

    fn bump(&mut self, t: &Triple, up: bool) {
        let [a, b, c] = t.0.map(|v| v as usize);
        for (x, y) in [(a, b), (a, c), (b, c)] {
            for idx in [x * self.n + y, y * self.n + x] {
                if up {
                    self.codeg[idx] += 1;
                } else {
                    self.codeg[idx] -= 1;
                }
            }
        }
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, t: Triple) -> Result<Self> {
        let mut h = self.clone();
        if !h.insert(t)? {
            return invalid(format!("edge {t} already present"));
        }
        Ok(h)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            invalid(format!("vertex {v} outside 0..{}", self.n))
        }
    }

    /// Number of edges containing both `x` and `y`.
    pub fn codegree(&self, x: Vertex, y: Vertex) -> Result<u32> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return invalid(format!("co-degree needs two distinct vertices, got {x} twice"));
        }
        Ok(self.codeg_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn codeg_unchecked(&self, x: Vertex, y: Vertex) -> u32 {
        self.codeg[x as usize * self.n + y as usize]
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Largest co-degree over all pairs (0 for fewer than one edge).
    pub fn max_codegree(&self) -> u32 {
        self.codeg.iter().copied().max().unwrap_or(0)
    }

    /// For every ordered pair `(x, u)`, the vertices `w` with `{x, u, w}` an edge.
    /// Indexed by `x * n + u`.
    pub fn pair_links(&self) -> Vec<Vec<Vertex>> {
        let mut links = vec![Vec::new(); self.n * self.n];
        let n = self.n;
        for e in &self.edges {
            let [a, b, c] = e.0;
            let (ua, ub, uc) = (a as usize, b as usize, c as usize);
            links[ua * n + ub].push(c);
            links[ub * n + ua].push(c);
            links[ua * n + uc].push(b);
            links[uc * n + ua].push(b);
            links[ub * n + uc].push(a);
            links[uc * n + ub].push(a);
        }
        links
    }

    /// Canonical text form: `n m` then one sorted triple per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("expected {what}, found {tok:?}"),
    })
}

impl FromStr for Hypergraph3 {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: hline,
                message: format!("header must be \"n m\", found {header:?}"),
            });
        }
        let n = parse_usize(toks[0], hline, "vertex count")?;
        let m = parse_usize(toks[1], hline, "edge count")?;
        let mut h = Hypergraph3::new(n);
        let mut seen = 0;
        for (line, l) in lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: format!("edge line needs three vertices, found {l:?}"),
                });
            }
            let mut v = [0 as Vertex; 3];
            for (slot, tok) in v.iter_mut().zip(&toks) {
                let x = parse_usize(tok, line, "vertex")?;
                if x >= n {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex {x} outside 0..{n}"),
                    });
                }
                *slot = x as Vertex;
            }
            let t = Triple::new(v[0], v[1], v[2]).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if !h.insert(t)? {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate edge {t}"),
                });
            }
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {m} edges, file has {seen}"),
            });
        }
        Ok(h)
    }
}
