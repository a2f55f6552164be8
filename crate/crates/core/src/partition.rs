//! Splitting the edge set by co-degree: edges with a co-degree-1 pair (`A`),
//! edges whose pairs all have co-degree at least 2 but some pair at most
//! `delta` (`B`), and edges whose pairs all exceed `delta` (`C`).

use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph3, Triple};

/// Which hypergraph the `B`/`C` threshold is measured in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CodegreeBasis {
    /// Co-degrees in the whole hypergraph.
    #[default]
    Full,
    /// Co-degrees in the hypergraph with `A` removed.
    OutsideA,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePartition {
    pub delta: u32,
    pub a: BTreeSet<Triple>,
    pub b: BTreeSet<Triple>,
    pub c: BTreeSet<Triple>,
}

impl EdgePartition {
    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn pairs(e: &Triple) -> [(u32, u32); 3] {
    let [a, b, c] = e.vertices();
    [(a, b), (a, c), (b, c)]
}

/// Partition with every threshold measured against the full hypergraph.
pub fn partition_edges(h: &Hypergraph3, delta: u32) -> Result<EdgePartition> {
    partition_edges_with(h, delta, CodegreeBasis::Full)
}

pub fn partition_edges_with(
    h: &Hypergraph3,
    delta: u32,
    basis: CodegreeBasis,
) -> Result<EdgePartition> {
    if delta < 2 {
        return invalid(format!("partition threshold must be at least 2, got {delta}"));
    }
    let a: BTreeSet<Triple> = h
        .edges()
        .filter(|e| pairs(e).iter().any(|&(x, y)| h.codeg_unchecked(x, y) == 1))
        .copied()
        .collect();
    let rest = match basis {
        CodegreeBasis::Full => None,
        CodegreeBasis::OutsideA => {
            let mut r = h.clone();
            for e in &a {
                r.remove(e);
            }
            Some(r)
        }
    };
    let basis_h = rest.as_ref().unwrap_or(h);
    let (mut b, mut c) = (BTreeSet::new(), BTreeSet::new());
    for e in h.edges().filter(|e| !a.contains(e)) {
        if pairs(e)
            .iter()
            .any(|&(x, y)| basis_h.codeg_unchecked(x, y) <= delta)
        {
            b.insert(*e);
        } else {
            c.insert(*e);
        }
    }
    Ok(EdgePartition { delta, a, b, c })
}

/// `H` with the co-degree-1 edges removed.
pub fn without_a(h: &Hypergraph3) -> Hypergraph3 {
    let mut r = h.clone();
    let a: Vec<Triple> = h
        .edges()
        .filter(|e| pairs(e).iter().any(|&(x, y)| h.codeg_unchecked(x, y) == 1))
        .copied()
        .collect();
    for e in &a {
        r.remove(e);
    }
    r
}

/// The sub-hypergraph on the same vertex set spanned by `edges`.
pub fn sub_hypergraph<'a, I>(n: usize, edges: I) -> Hypergraph3
where
    I: IntoIterator<Item = &'a Triple>,
{
    let mut r = Hypergraph3::new(n);
    for e in edges {
        r.insert(*e).expect("edge comes from a hypergraph on the same vertex range");
    }
    r
}
