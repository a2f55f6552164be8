//! Lexicographically least labelings of 3-uniform hypergraphs.
//!
//! A labeling is scored by the sorted colex ranks of the relabeled edges.
//! Since every triple with largest label `k` ranks in `[C(k,3), C(k+1,3))`,
//! the score splits into one block per label, and a partial labeling of
//! `0..k` fixes the first `k` blocks. Blocks are compared one at a time: at
//! the first differing block the element-wise smaller one wins, and when one
//! is a prefix of the other the longer one wins (its next rank is below any
//! rank of a later block).
//!
//! Two unlabeled vertices whose transposition is an automorphism lead to
//! identical subtrees, so only one of them is expanded at each level.

use std::cmp::Ordering;

use crate::hypergraph::{Hypergraph3, Vertex};

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn c3(k: usize) -> usize {
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}

/// Colex rank of labels `i < j < k`.
#[inline]
fn rank3(i: usize, j: usize, k: usize) -> u32 {
    (c3(k) + c2(j) + i) as u32
}

fn cmp_block(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    // longer block is smaller
    b.len().cmp(&a.len())
}

fn cmp_prefix(a: &[Vec<u32>], b: &[Vec<u32>]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp_block(x, y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Dense membership table plus twin relation.
struct Table {
    n: usize,
    bits: Vec<u64>,
    twins: Vec<bool>,
}

impl Table {
    fn new(h: &Hypergraph3) -> Self {
        let n = h.n();
        let mut t = Table {
            n,
            bits: vec![0; (n * n * n).div_ceil(64).max(1)],
            twins: vec![false; n * n],
        };
        for e in h.edges() {
            let [a, b, c] = e.vertices().map(|v| v as usize);
            for (p, q, r) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                let i = (p * n + q) * n + r;
                t.bits[i / 64] |= 1 << (i % 64);
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let twin = (0..n).filter(|&a| a != u && a != v).all(|a| {
                    (a + 1..n)
                        .filter(|&b| b != u && b != v)
                        .all(|b| t.has(u, a, b) == t.has(v, a, b))
                });
                t.twins[u * n + v] = twin;
                t.twins[v * n + u] = twin;
            }
        }
        t
    }

    #[inline]
    fn has(&self, a: usize, b: usize, c: usize) -> bool {
        let i = (a * self.n + b) * self.n + c;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Block of ranks created by giving `v` label `k` after `order`.
    fn block(&self, order: &[usize], v: usize) -> Vec<u32> {
        let k = order.len();
        let mut out = Vec::new();
        for j in 1..k {
            for i in 0..j {
                if self.has(order[i], order[j], v) {
                    out.push(rank3(i, j, k));
                }
            }
        }
        out
    }
}

/// Identity-labeling blocks of `h`.
fn identity_blocks(h: &Hypergraph3) -> Vec<Vec<u32>> {
    let mut blocks = vec![Vec::new(); h.n()];
    for e in h.edges() {
        let [a, b, c] = e.vertices().map(|v| v as usize);
        blocks[c].push(rank3(a, b, c));
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks
}

struct Search<'a> {
    table: &'a Table,
    /// Allowed vertices per label position.
    allowed: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    blocks: Vec<Vec<u32>>,
    best: Option<Vec<Vec<u32>>>,
    best_order: Vec<usize>,
    /// In test mode, stop as soon as a labeling beats `best`.
    stop_on_less: bool,
    beaten: bool,
}

impl Search<'_> {
    fn run(&mut self) {
        let k = self.order.len();
        if k == self.table.n {
            let better = match &self.best {
                None => true,
                Some(b) => cmp_prefix(&self.blocks, b) == Ordering::Less,
            };
            if better {
                if self.stop_on_less && self.best.is_some() {
                    self.beaten = true;
                }
                self.best = Some(self.blocks.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for idx in 0..self.allowed[k].len() {
            let v = self.allowed[k][idx];
            if self.used[v] || tried.iter().any(|&u| self.table.twins[u * self.table.n + v]) {
                continue;
            }
            tried.push(v);
            let block = self.table.block(&self.order, v);
            if let Some(best) = &self.best {
                // best may have improved inside an earlier sibling
                match cmp_prefix(&self.blocks, best) {
                    Ordering::Greater => return,
                    Ordering::Equal => match cmp_block(&block, &best[k]) {
                        Ordering::Greater => continue,
                        Ordering::Less if self.stop_on_less => {
                            self.beaten = true;
                            return;
                        }
                        _ => {}
                    },
                    Ordering::Less => {}
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.blocks.push(block);
            self.run();
            self.blocks.pop();
            self.order.pop();
            self.used[v] = false;
            if self.beaten {
                return;
            }
        }
    }
}

/// True iff the identity labeling of `h` is the least over all labelings.
pub fn is_lexmin(h: &Hypergraph3) -> bool {
    let table = Table::new(h);
    let n = h.n();
    let mut s = Search {
        table: &table,
        allowed: vec![(0..n).collect(); n],
        used: vec![false; n],
        order: Vec::with_capacity(n),
        blocks: Vec::with_capacity(n),
        best: Some(identity_blocks(h)),
        best_order: Vec::new(),
        stop_on_less: true,
        beaten: false,
    };
    s.run();
    !s.beaten
}

/// Least labeling over all permutations, by exhaustive search (tests only).
#[cfg(test)]
pub(crate) fn lexmin_relabel(h: &Hypergraph3) -> Hypergraph3 {
    let table = Table::new(h);
    let n = h.n();
    let mut s = Search {
        table: &table,
        allowed: vec![(0..n).collect(); n],
        used: vec![false; n],
        order: Vec::new(),
        blocks: Vec::new(),
        best: None,
        best_order: Vec::new(),
        stop_on_less: false,
        beaten: false,
    };
    s.run();
    relabel(h, &s.best_order)
}

/// Applies `order` (label -> old vertex).
pub(crate) fn relabel(h: &Hypergraph3, order: &[usize]) -> Hypergraph3 {
    let mut label = vec![0 as Vertex; h.n()];
    for (l, &v) in order.iter().enumerate() {
        label[v] = l as Vertex;
    }
    Hypergraph3::from_edges(
        h.n(),
        h.edges().map(|e| e.vertices().map(|v| label[v as usize])),
    )
    .expect("relabeling is a bijection")
}

/// Isomorphism-invariant vertex colors by iterated refinement, numbered by
/// the sorted order of their signatures.
fn refine_colors(h: &Hypergraph3) -> Vec<usize> {
    let n = h.n();
    let nv = n as Vertex;
    let number = |sigs: &[Vec<u64>]| -> Vec<usize> {
        let mut distinct: Vec<&Vec<u64>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        sigs.iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect()
    };
    let initial: Vec<Vec<u64>> = (0..nv)
        .map(|v| {
            let mut prof: Vec<u64> = (0..nv)
                .filter(|&u| u != v)
                .map(|u| u64::from(h.codeg_unchecked(v, u)))
                .collect();
            prof.sort_unstable();
            let mut sig = vec![h.degree(v) as u64];
            sig.extend(prof);
            sig
        })
        .collect();
    let mut colors = number(&initial);
    loop {
        let count = colors.iter().max().map_or(0, |m| m + 1);
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for e in h.edges() {
            let [a, b, c] = e.vertices().map(|v| v as usize);
            for (v, p, q) in [(a, b, c), (b, a, c), (c, a, b)] {
                let (x, y) = (colors[p].min(colors[q]), colors[p].max(colors[q]));
                incident[v].push((x, y));
            }
        }
        let sigs: Vec<Vec<u64>> = (0..n)
            .map(|v| {
                incident[v].sort_unstable();
                let mut s = vec![colors[v] as u64];
                s.extend(incident[v].iter().flat_map(|&(x, y)| [x as u64, y as u64]));
                s
            })
            .collect();
        let next = number(&sigs);
        let next_count = next.iter().max().map_or(0, |m| m + 1);
        colors = next;
        if next_count == count {
            return colors;
        }
    }
}

/// Canonical relabeling: least labeling among those that list color classes
/// in refinement order.
pub fn canonical_relabel(h: &Hypergraph3) -> Hypergraph3 {
    let n = h.n();
    let colors = refine_colors(h);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (colors[v], v));
    let allowed: Vec<Vec<usize>> = by_color
        .iter()
        .map(|&slot| (0..n).filter(|&v| colors[v] == colors[slot]).collect())
        .collect();
    let table = Table::new(h);
    let mut s = Search {
        table: &table,
        allowed,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        blocks: Vec::with_capacity(n),
        best: None,
        best_order: Vec::new(),
        stop_on_less: false,
        beaten: false,
    };
    s.run();
    relabel(h, &s.best_order)
}

/// Byte string equal for two hypergraphs iff they are isomorphic:
/// `n`, `m`, then the sorted colex ranks of the canonical relabeling, all as
/// little-endian `u32`.
pub fn canonical_form(h: &Hypergraph3) -> Vec<u8> {
    let c = canonical_relabel(h);
    let mut out = Vec::with_capacity(8 + 4 * c.edge_count());
    out.extend((c.n() as u32).to_le_bytes());
    out.extend((c.edge_count() as u32).to_le_bytes());
    let mut ranks: Vec<u32> = c.edges().map(|e| e.colex_rank() as u32).collect();
    ranks.sort_unstable();
    for r in ranks {
        out.extend(r.to_le_bytes());
    }
    out
}
