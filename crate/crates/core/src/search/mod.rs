//! Exact values of `ex(n, Tr(K_{2,t}))` for small `n`.
//!
//! [`turan_search`] is an orderly generation: a hypergraph is kept only when
//! its own labeling is the least one (see [`canon`]), and children add an edge
//! whose colex rank exceeds every present rank. Deleting the largest edge of a
//! least labeling leaves a least labeling, so every isomorphism class is
//! produced exactly once.
//!
//! Every node carries the list of larger edges that individually keep it
//! trace-free. Trace containment is monotone, so descendants only ever use
//! edges from that list, and its length bounds how far a subtree can grow.
//!
//! [`turan_oracle`] shares none of this: it walks include/exclude decisions
//! over all triples and checks traces with the exhaustive searcher.

mod canon;
mod cnf;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use canon::{canonical_form, canonical_relabel, is_lexmin};
pub use cnf::{export_cnf, trace_free_cnf, CnfFormula, CNF_MAX_N};

use crate::error::{Error, Result};
use crate::hypergraph::{triple_count, Hypergraph3, Triple};
use crate::trace::{contains_trace_naive_through, incremental_trace_check, TracePattern};

pub const DEFAULT_SEARCH_CAP: usize = 12;
pub const DEFAULT_WITNESS_CAP: usize = 100;
pub const ORACLE_MAX_N: usize = 6;

/// Subtrees above this depth are handed to the thread pool.
const PARALLEL_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_n: usize,
    pub witness_cap: usize,
    /// 0 uses the global rayon pool.
    pub threads: usize,
    /// An achievable edge count used to prune from the start.
    pub lower_bound: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_n: DEFAULT_SEARCH_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
            threads: 0,
            lower_bound: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    pub t: usize,
    pub value: usize,
    /// Pairwise non-isomorphic, sorted by canonical form.
    pub witnesses: Vec<Hypergraph3>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SearchResult {
    pub const CSV_HEADER: &'static str = "n,t,value,witness_count,nodes,seconds";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3}",
            self.n,
            self.t,
            self.value,
            self.witnesses.len(),
            self.nodes_explored,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Best value seen in one subtree with its smallest canonical forms.
#[derive(Default)]
struct Local {
    value: usize,
    witnesses: BTreeMap<Vec<u8>, Hypergraph3>,
}

impl Local {
    fn offer(&mut self, g: &Hypergraph3, cap: usize) {
        let m = g.edge_count();
        if m < self.value {
            return;
        }
        if m > self.value {
            self.value = m;
            self.witnesses.clear();
        }
        if cap == 0 {
            return;
        }
        let form = canonical_form(g);
        if self.witnesses.len() >= cap {
            match self.witnesses.last_key_value() {
                Some((last, _)) if *last > form => {}
                _ => return,
            }
        }
        self.witnesses.insert(form, g.clone());
        while self.witnesses.len() > cap {
            self.witnesses.pop_last();
        }
    }

    fn merge(mut self, other: Local, cap: usize) -> Local {
        if other.value > self.value {
            return other;
        }
        if other.value == self.value {
            self.witnesses.extend(other.witnesses);
            while self.witnesses.len() > cap {
                self.witnesses.pop_last();
            }
        }
        self
    }
}

struct Orderly {
    pattern: TracePattern,
    cap: usize,
    best: AtomicUsize,
    nodes: AtomicU64,
}

impl Orderly {
    /// Larger edges among `pool` that keep `g` trace-free.
    fn extensions(&self, g: &Hypergraph3, pool: &[usize]) -> Vec<usize> {
        pool.iter()
            .copied()
            .filter(|&r| {
                incremental_trace_check(g, Triple::from_colex_rank(r), self.pattern)
                    .expect("candidate edge is absent")
                    .is_none()
            })
            .collect()
    }

    fn children(&self, g: &Hypergraph3, cands: &[usize]) -> Vec<(Hypergraph3, Vec<usize>)> {
        let mut out = Vec::new();
        let m = g.edge_count();
        for (i, &r) in cands.iter().enumerate() {
            if m + 1 + (cands.len() - i - 1) < self.best.load(Ordering::Relaxed) {
                break;
            }
            let child = g.with_edge(Triple::from_colex_rank(r)).expect("absent edge");
            if !is_lexmin(&child) {
                continue;
            }
            let next = self.extensions(&child, &cands[i + 1..]);
            out.push((child, next));
        }
        out
    }

    fn expand(&self, g: &Hypergraph3, cands: &[usize], depth: usize) -> Local {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let m = g.edge_count();
        self.best.fetch_max(m, Ordering::Relaxed);
        let mut local = Local::default();
        if m >= self.best.load(Ordering::Relaxed) {
            local.offer(g, self.cap);
        }
        if m + cands.len() < self.best.load(Ordering::Relaxed) {
            return local;
        }
        let kids = self.children(g, cands);
        if depth < PARALLEL_DEPTH {
            kids.par_iter()
                .map(|(c, next)| self.expand(c, next, depth + 1))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(local, |a, b| a.merge(b, self.cap))
        } else {
            kids.iter()
                .map(|(c, next)| self.expand(c, next, depth + 1))
                .fold(local, |a, b| a.merge(b, self.cap))
        }
    }
}

/// Exact maximum edge count of a `K_{2,t}`-trace-free hypergraph on `n`
/// vertices, with up to `witness_cap` extremal hypergraphs.
pub fn turan_search(n: usize, t: usize, config: &SearchConfig) -> Result<SearchResult> {
    let pattern = TracePattern::new(t)?;
    if n > config.max_n {
        return Err(Error::Refused(format!(
            "n = {n} exceeds the search cap {}",
            config.max_n
        )));
    }
    let start = Instant::now();
    let run = || {
        let o = Orderly {
            pattern,
            cap: config.witness_cap,
            best: AtomicUsize::new(config.lower_bound.unwrap_or(0)),
            nodes: AtomicU64::new(0),
        };
        let root = Hypergraph3::new(n);
        let all: Vec<usize> = (0..triple_count(n)).collect();
        let cands = o.extensions(&root, &all);
        let local = o.expand(&root, &cands, 0);
        (local, o.nodes.into_inner())
    };
    let (local, nodes) = if config.threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run)
    };
    if let Some(lb) = config.lower_bound {
        if local.value < lb {
            return Err(Error::InvalidArgument(format!(
                "lower bound {lb} is not achievable (maximum is {})",
                local.value
            )));
        }
    }
    Ok(SearchResult {
        n,
        t,
        value: local.value,
        witnesses: local.witnesses.into_values().collect(),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Brute-force maximum by include/exclude over all triples in colex order,
/// refusing `n > 6`. Returns one witness.
pub fn turan_oracle(n: usize, t: usize) -> Result<SearchResult> {
    let pattern = TracePattern::new(t)?;
    if n > ORACLE_MAX_N {
        return Err(Error::Refused(format!(
            "the oracle handles n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    struct State {
        pattern: TracePattern,
        total: usize,
        g: Hypergraph3,
        best: Option<Hypergraph3>,
        nodes: u64,
    }
    fn walk(s: &mut State, idx: usize) {
        s.nodes += 1;
        let m = s.g.edge_count();
        if s.best.as_ref().is_none_or(|b| m > b.edge_count()) {
            s.best = Some(s.g.clone());
        }
        if idx == s.total {
            return;
        }
        if let Some(b) = &s.best {
            if m + (s.total - idx) <= b.edge_count() {
                return;
            }
        }
        let e = Triple::from_colex_rank(idx);
        s.g.insert(e).expect("in range");
        if contains_trace_naive_through(&s.g, &e, s.pattern).is_none() {
            walk(s, idx + 1);
        }
        s.g.remove(&e);
        walk(s, idx + 1);
    }
    let start = Instant::now();
    let mut s = State {
        pattern,
        total: triple_count(n),
        g: Hypergraph3::new(n),
        best: None,
        nodes: 0,
    };
    walk(&mut s, 0);
    let w = s.best.expect("the empty hypergraph is visited");
    Ok(SearchResult {
        n,
        t,
        value: w.edge_count(),
        witnesses: vec![w],
        nodes_explored: s.nodes,
        elapsed: start.elapsed(),
    })
}
