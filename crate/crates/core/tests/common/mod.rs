#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trace_turan::hypergraph::{triple_count, Hypergraph3, Triple, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn hg(n: usize, edges: &[[Vertex; 3]]) -> Hypergraph3 {
    Hypergraph3::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn complete(n: usize) -> Hypergraph3 {
    Hypergraph3::from_edges(n, (0..triple_count(n)).map(|r| Triple::from_colex_rank(r).vertices())).unwrap()
}

/// Each triple kept independently with probability `p`.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Hypergraph3 {
    let mut h = Hypergraph3::new(n);
    for r in 0..triple_count(n) {
        if rng.gen_bool(p) {
            h.insert(Triple::from_colex_rank(r)).unwrap();
        }
    }
    h
}

/// The hypergraph whose edge set is the bit pattern `mask` over colex ranks.
pub fn from_mask(n: usize, mask: u64) -> Hypergraph3 {
    let mut h = Hypergraph3::new(n);
    for r in 0..triple_count(n) {
        if mask >> r & 1 == 1 {
            h.insert(Triple::from_colex_rank(r)).unwrap();
        }
    }
    h
}

/// A random absent triple.
pub fn random_absent(rng: &mut ChaCha8Rng, h: &Hypergraph3) -> Option<Triple> {
    let mut free: Vec<usize> = (0..triple_count(h.n()))
        .filter(|&r| !h.contains_edge(&Triple::from_colex_rank(r)))
        .collect();
    free.shuffle(rng);
    free.first().map(|&r| Triple::from_colex_rank(r))
}

/// Every vertex relabelled through `perm`.
pub fn permuted(h: &Hypergraph3, perm: &[Vertex]) -> Hypergraph3 {
    Hypergraph3::from_edges(
        h.n(),
        h.edges().map(|e| {
            let [a, b, c] = e.vertices();
            [perm[a as usize], perm[b as usize], perm[c as usize]]
        }),
    )
    .unwrap()
}
