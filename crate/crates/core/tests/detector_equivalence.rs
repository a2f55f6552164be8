mod common;

use common::{from_mask, random_absent, random_hypergraph, rng};
use rand::Rng;
use trace_turan::trace::{
    contains_berge, contains_trace, contains_trace_naive, contains_trace_naive_through,
    contains_trace_parallel, incremental_trace_check, verify_certificate,
};
use trace_turan::TracePattern;

#[test]
fn agrees_with_naive_on_seeded_random_hypergraphs() {
    let mut r = rng(2024);
    let mut found = [0usize; 2];
    for i in 0..1200 {
        let n = r.gen_range(4..=8);
        let p = r.gen_range(0.03..0.45);
        let t = 2 + i % 2;
        let h = random_hypergraph(&mut r, n, p);
        let pattern = TracePattern::new(t).unwrap();
        let fast = contains_trace(&h, pattern);
        let slow = contains_trace_naive(&h, pattern);
        assert_eq!(fast.is_some(), slow.is_some(), "t = {t}\n{}", h.to_text());
        if let Some(c) = &fast {
            assert!(verify_certificate(&h, c));
            assert_eq!(c.t(), t);
            found[t - 2] += 1;
        }
    }
    // both outcomes occur for both patterns
    assert!(found.iter().all(|&f| f > 50 && f < 550), "{found:?}");
}

#[test]
fn agrees_with_naive_on_every_five_vertex_hypergraph() {
    for mask in 0u64..1 << 10 {
        let h = from_mask(5, mask);
        for t in [2, 3] {
            let pattern = TracePattern::new(t).unwrap();
            let fast = contains_trace(&h, pattern);
            assert_eq!(fast.is_some(), contains_trace_naive(&h, pattern).is_some(), "mask {mask:#x}, t = {t}");
            if let Some(c) = fast {
                assert!(verify_certificate(&h, &c));
            }
        }
    }
}

#[test]
fn parallel_scan_returns_the_sequential_certificate() {
    let mut r = rng(7);
    for _ in 0..200 {
        let h = random_hypergraph(&mut r, 8, 0.2);
        for t in [2, 3] {
            let pattern = TracePattern::new(t).unwrap();
            assert_eq!(contains_trace(&h, pattern), contains_trace_parallel(&h, pattern));
        }
    }
}

#[test]
fn incremental_check_matches_naive_through_the_new_edge() {
    let mut r = rng(99);
    let mut checked = 0;
    let mut hits = 0;
    while checked < 500 {
        let n = r.gen_range(5..=8);
        let t = r.gen_range(2..=3);
        let pattern = TracePattern::new(t).unwrap();
        let p = r.gen_range(0.05..0.3);
        let h = random_hypergraph(&mut r, n, p);
        if contains_trace(&h, pattern).is_some() {
            continue;
        }
        let Some(e) = random_absent(&mut r, &h) else { continue };
        checked += 1;
        let inc = incremental_trace_check(&h, e, pattern).unwrap();
        let grown = h.with_edge(e).unwrap();
        let naive = contains_trace_naive_through(&grown, &e, pattern);
        assert_eq!(inc.is_some(), naive.is_some(), "e = {e}\n{}", h.to_text());
        // a trace-free base means any new trace must use e
        assert_eq!(inc.is_some(), contains_trace(&grown, pattern).is_some());
        if let Some(c) = inc {
            assert!(c.uses_edge(&e) && verify_certificate(&grown, &c));
            hits += 1;
        }
    }
    assert!(hits > 20 && hits < 480, "{hits}");
}

#[test]
fn every_trace_is_a_berge_copy() {
    let mut r = rng(5);
    let mut strict = 0;
    for _ in 0..400 {
        let (n, p) = (r.gen_range(4..=7), r.gen_range(0.05..0.4));
        let h = random_hypergraph(&mut r, n, p);
        for t in [2, 3] {
            let pattern = TracePattern::new(t).unwrap();
            let trace = contains_trace(&h, pattern).is_some();
            let berge = contains_berge(&h, pattern);
            assert!(!trace || berge);
            strict += usize::from(berge && !trace);
        }
    }
    // traces are strictly rarer
    assert!(strict > 0);
}
