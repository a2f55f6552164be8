//! One line per acceptance criterion; the test fails if any line says fail.

mod common;

use std::time::Instant;

use common::{complete, from_mask, hg, random_hypergraph, rng};
use rand::Rng;
use varisat::{ExtendFormula, Lit, Solver};

use trace_turan::bounds::{check_lemma_invariants, derivation_table, epsilon_interval};
use trace_turan::constructions::{lift_to_trace_free, polarity_graph, Graph};
use trace_turan::dominated::{
    dominated_min_degree, dominated_pair_min1, is_dominated, witnesses_are_valid,
};
use trace_turan::search::{trace_free_cnf, turan_oracle, turan_search, SearchConfig};
use trace_turan::trace::{contains_trace, contains_trace_naive, verify_certificate};
use trace_turan::{Hypergraph3, LoopGraph, TracePattern, Vertex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for t in [2, 3] {
        for n in 1..=6 {
            let s = turan_search(n, t, &SearchConfig::default()).map_err(|e| e.to_string())?.value;
            let o = turan_oracle(n, t).map_err(|e| e.to_string())?.value;
            ensure(s == o, || format!("n = {n}, t = {t}: search {s}, oracle {o}"))?;
        }
    }
    let forced = (turan_oracle(4, 2).unwrap().value, turan_oracle(5, 3).unwrap().value);
    ensure(forced == (4, 10), || format!("forced values {forced:?}"))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 600.0, || format!("took {secs:.1} s"))?;
    Ok(format!("n <= 6, t in {{2,3}} agree in {secs:.2} s"))
}

fn detector_equivalence() -> Outcome {
    let mut r = rng(2024);
    for i in 0..1000 {
        let n = r.gen_range(4..=8);
        let p = r.gen_range(0.03..0.45);
        let h = random_hypergraph(&mut r, n, p);
        let pattern = TracePattern::new(2 + i % 2).unwrap();
        let fast = contains_trace(&h, pattern);
        ensure(fast.is_some() == contains_trace_naive(&h, pattern).is_some(), || {
            format!("disagreement on\n{}", h.to_text())
        })?;
        ensure(fast.is_none_or(|c| verify_certificate(&h, &c)), || "bad certificate".into())?;
    }
    for mask in 0u64..1 << 10 {
        let h = from_mask(5, mask);
        for t in [2, 3] {
            let pattern = TracePattern::new(t).unwrap();
            ensure(contains_trace(&h, pattern).is_some() == contains_trace_naive(&h, pattern).is_some(), || {
                format!("disagreement on mask {mask:#x}")
            })?;
        }
    }
    Ok("1000 random + all 1024 five-vertex hypergraphs, zero disagreements".into())
}

fn certified(h: &Hypergraph3, t: usize, delta: u32) -> Result<usize, String> {
    let v = check_lemma_invariants(h, t, delta).map_err(|e| e.to_string())?;
    for x in &v {
        let c = x.certificate.certificate().ok_or_else(|| format!("uncertified {}", x.check))?;
        ensure(verify_certificate(h, c) && x.is_genuine(), || format!("bad violation {}", x.check))?;
    }
    Ok(v.len())
}

fn lemma_invariants() -> Outcome {
    let mut clean = 0;
    let mut corpus: Vec<(Hypergraph3, usize)> = Vec::new();
    for t in [2, 3] {
        for n in 3..=6 {
            for w in turan_search(n, t, &SearchConfig::default()).unwrap().witnesses {
                corpus.push((w, t));
            }
        }
    }
    for q in [2, 3, 5, 7] {
        corpus.push((lift_to_trace_free(&polarity_graph(q).unwrap()), 2));
    }
    for (h, t) in &corpus {
        for delta in [2, 14] {
            let v = check_lemma_invariants(h, *t, delta).map_err(|e| e.to_string())?;
            ensure(v.is_empty(), || format!("violation on trace-free input: {v:?}"))?;
            clean += 1;
        }
    }
    let codegree_three = hg(
        8,
        &[[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 5], [0, 3, 6], [0, 4, 7], [1, 2, 5], [1, 3, 6], [1, 4, 7]],
    );
    let mut violations = certified(&codegree_three, 2, 2)?;
    violations += certified(&complete(10), 2, 2)?;
    violations += certified(&complete(17), 2, 14)?;
    violations += certified(&complete(17), 14, 14)?;
    ensure(violations > 0, || "no violations on the violating instances".into())?;
    Ok(format!("{clean} clean runs, {violations} violations all certified"))
}

fn has_c4_by_common_neighbors(g: &Graph) -> bool {
    let n = g.n() as Vertex;
    (0..n).any(|u| {
        (u + 1..n).any(|v| (0..n).filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)).count() >= 2)
    })
}

fn construction_fidelity() -> Outcome {
    let mut ratio = 0.0;
    for q in [2u64, 3, 5, 7] {
        let g = polarity_graph(q).unwrap();
        ensure(g.n() as u64 == q * q + q + 1 && g.edge_count() as u64 == q * (q + 1) * (q + 1) / 2, || {
            format!("q = {q}: {} vertices, {} edges", g.n(), g.edge_count())
        })?;
        ensure(!has_c4_by_common_neighbors(&g), || format!("q = {q} has a 4-cycle"))?;
        let h = lift_to_trace_free(&g);
        ensure(contains_trace(&h, TracePattern::c4()).is_none(), || format!("lift q = {q} has a trace"))?;
        ratio = h.edge_count() as f64 / (h.n() as f64).powf(1.5);
    }
    ensure(ratio >= 0.45, || format!("q = 7 ratio {ratio}"))?;
    Ok(format!("q in {{2,3,5,7}} exact counts, C4-free, lifts trace-free, q = 7 ratio {ratio:.4}"))
}

fn numeric_derivation() -> Outcome {
    let rows = derivation_table(14.0, 1e6, 1000).map_err(|e| e.to_string())?;
    let bad: Vec<f64> = rows.iter().filter(|r| !r.holds).map(|r| r.t).collect();
    ensure(rows.len() == 1000 && bad.is_empty(), || format!("fails at t = {bad:?}"))?;
    let eps = epsilon_interval(14).unwrap();
    ensure(eps.hi <= 0.25, || format!("epsilon(14) <= {}", eps.hi))?;
    let slack = rows.iter().map(|r| r.main.lo - r.k2t.hi).fold(f64::INFINITY, f64::min);
    Ok(format!("1000-point grid over [14, 1e6] holds (min gap {slack:.3}), epsilon(14) <= {:.6}", eps.hi))
}

fn random_graph(r: &mut rand_chacha::ChaCha8Rng, n: usize, p: f64, delta: u32) -> LoopGraph {
    let mut g = LoopGraph::new(0..n as Vertex);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if r.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    for v in 0..n as Vertex {
        let short = (delta as usize).saturating_sub(g.degree(v));
        g.add_loop(v, short as u32).unwrap();
    }
    g
}

fn target(delta: u32, n: usize) -> usize {
    let d1 = f64::from(delta) + 1.0;
    ((1.0 - (1.0 + d1.ln()) / d1) * n as f64).ceil() as usize
}

/// Largest dominated set by trying every subset.
fn max_dominated(g: &LoopGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n as Vertex).all(|v| {
                m >> v & 1 == 0 || g.loops(v) > 0 || g.neighbors(v).any(|u| m >> u & 1 == 0)
            })
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

fn dominated_guarantees() -> Outcome {
    let mut r = rng(6);
    for i in 0..1000u64 {
        let n = r.gen_range(2..=40);
        let delta = r.gen_range(2..=8);
        let p = r.gen_range(0.02..0.6);
        let g = random_graph(&mut r, n, p, delta);
        let d = dominated_min_degree(&g, delta, i).map_err(|e| e.to_string())?;
        ensure(d.len() >= target(delta, n) && is_dominated(&g, &d.set) && witnesses_are_valid(&[&g], &d), || {
            format!("min-degree case n = {n}, delta = {delta}")
        })?;
        let p = r.gen_range(0.0..0.3);
        let gx = random_graph(&mut r, n, p, 1);
        let gy = random_graph(&mut r, n, p, 1);
        let d = dominated_pair_min1(&gx, &gy).map_err(|e| e.to_string())?;
        ensure(
            d.len() >= n.div_ceil(3)
                && is_dominated(&gx, &d.set)
                && is_dominated(&gy, &d.set)
                && witnesses_are_valid(&[&gx, &gy], &d),
            || format!("pair case n = {n}"),
        )?;
    }
    let mut exhaustive = 0;
    for n in 1..=12usize {
        for delta in [2u32, 3, 4] {
            for k in 0..10u64 {
                let g = random_graph(&mut r, n, [0.15, 0.35, 0.6][k as usize % 3], delta);
                let d = dominated_min_degree(&g, delta, k).map_err(|e| e.to_string())?;
                let best = max_dominated(&g);
                ensure(d.len() >= target(delta, n) && d.len() <= best && is_dominated(&g, &d.set), || {
                    format!("exhaustive case n = {n}, delta = {delta}")
                })?;
                exhaustive += 1;
            }
        }
    }
    Ok(format!("1000 random graphs for each guarantee, {exhaustive} small cases with n <= 12 checked against the brute-force optimum"))
}

fn monotone_regression() -> Outcome {
    const TABLE: [[usize; 5]; 2] = [[1, 4, 6, 7, 9], [1, 4, 10, 14, 15]];
    for (i, t) in [2, 3].into_iter().enumerate() {
        let mut prev = 0;
        for n in 3..=7 {
            let mut seen = Vec::new();
            for threads in [1, 4] {
                let cfg = SearchConfig {
                    threads,
                    ..SearchConfig::default()
                };
                let r = turan_search(n, t, &cfg).unwrap();
                seen.push((r.value, r.witnesses.iter().map(|w| w.to_text()).collect::<Vec<_>>()));
            }
            ensure(seen[0] == seen[1], || format!("n = {n}, t = {t} differs across thread counts"))?;
            let v = seen[0].0;
            ensure(v == TABLE[i][n - 3], || format!("n = {n}, t = {t}: {v}"))?;
            ensure(v >= prev && (i == 0 || v >= TABLE[0][n - 3]), || format!("not monotone at n = {n}"))?;
            prev = v;
        }
    }
    Ok("t = 2: 1 4 6 7 9, t = 3: 1 4 10 14 15 for n = 3..7, stable across 1 and 4 threads".into())
}

fn satisfiable(n: usize, m: usize) -> bool {
    let f = trace_free_cnf(n, m, 2).unwrap();
    let mut s = Solver::new();
    for c in &f.clauses {
        let lits: Vec<Lit> = c.iter().map(|&l| Lit::from_dimacs(l as isize)).collect();
        s.add_clause(&lits);
    }
    s.solve().unwrap()
}

fn cnf_crosscheck() -> Outcome {
    for n in 3..=5 {
        let v = turan_oracle(n, 2).unwrap().value;
        ensure(satisfiable(n, v) && !satisfiable(n, v + 1), || format!("n = {n} mismatch at {v}"))?;
    }
    Ok("n = 3..5: SAT at the value, UNSAT above".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence", oracle_equivalence),
        ("detector equivalence", detector_equivalence),
        ("lemma invariant suite", lemma_invariants),
        ("construction fidelity", construction_fidelity),
        ("numeric derivation of the headline bound", numeric_derivation),
        ("dominated-set guarantees", dominated_guarantees),
        ("monotonicity and regression", monotone_regression),
        ("CNF cross-check", cnf_crosscheck),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} ({name}): pass: {detail}", i + 1),
            Err(why) => {
                println!("criterion {} ({name}): FAIL: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
