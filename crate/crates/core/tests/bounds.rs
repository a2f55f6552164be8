use trace_turan::bounds::{
    bound_b_delta, bound_c_delta, bound_k2t, bound_main, clamped_g, derivation_check, derivation_csv,
    derivation_table, epsilon, epsilon_interval, evaluate_k2t, log_grid, paper_g, quadratic_root,
    ratio_table, RatioRow,
};
use trace_turan::search::{turan_oracle, turan_search, SearchConfig};

/// Plain-float evaluation written out independently of the library.
fn three_term(t: f64) -> f64 {
    let g = (t * t.ln()).sqrt() / 7.0;
    0.5 * (t - 1.0).sqrt() + 6f64.sqrt() / 2.0 * t.powf(1.5) / g + (t + 5.0 * g * t.ln()).powf(1.5) / 6.0
}

fn headline(t: f64) -> f64 {
    (t.powf(1.5) + 55.0 * t * t.ln().sqrt()) / 6.0
}

#[test]
fn derivation_holds_on_the_log_grid() {
    let rows = derivation_table(14.0, 1e6, 1000).unwrap();
    assert_eq!(rows.len(), 1000);
    assert_eq!((rows[0].t, rows[999].t), (14.0, 1e6));
    for r in &rows {
        assert!(r.holds, "t = {}", r.t);
        assert!(r.k2t.contains(three_term(r.t)) && r.main.contains(headline(r.t)), "t = {}", r.t);
        assert!(r.k2t.width() <= 1e-9 * r.k2t.hi);
    }
}

#[test]
fn derivation_holds_at_rounded_integers() {
    for t in log_grid(14.0, 1e6, 1000).unwrap() {
        let t = t.round();
        assert!(derivation_check(t).unwrap().holds, "t = {t}");
        assert!(three_term(t) < headline(t));
    }
}

#[test]
fn derivation_slack_is_comfortable() {
    // the chain is not tight; interval enclosures are far narrower than the gap
    let worst = log_grid(14.0, 1e6, 1000)
        .unwrap()
        .into_iter()
        .map(|t| three_term(t) / headline(t))
        .fold(0.0, f64::max);
    assert!(worst < 0.9, "{worst}");
}

#[test]
fn derivation_csv_has_all_true_column() {
    let csv = derivation_csv(&derivation_table(14.0, 1e6, 50).unwrap()).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().ends_with("derivation_check"));
    assert!(lines.all(|l| l.ends_with(",true")));
}

#[test]
fn derivation_rejects_small_t() {
    assert!(derivation_check(13.5).is_err());
    assert!(derivation_check(f64::NAN).is_err());
}

#[test]
fn epsilon_at_fourteen_is_at_most_a_quarter() {
    let e = epsilon_interval(14).unwrap();
    assert!(e.hi <= 0.25);
    assert!(e.contains((1.0 + 15f64.ln()) / 15.0));
    assert!((epsilon(14).unwrap() - 0.247_203).abs() < 1e-6);
}

#[test]
fn epsilon_is_decreasing() {
    let mut prev = epsilon(2).unwrap();
    let grid: Vec<u32> = log_grid(3.0, 1e6, 5000)
        .unwrap()
        .into_iter()
        .map(|d| d.round() as u32)
        .collect();
    for w in grid.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let e = epsilon(w[1]).unwrap();
        assert!(e < prev, "delta = {}", w[1]);
        prev = e;
    }
    for d in 14..2000 {
        assert!(epsilon(d).unwrap() <= 0.25);
    }
    assert!(epsilon(1).is_err());
}

#[test]
fn headline_ratio_tends_to_one() {
    let ratios: Vec<f64> = [1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8]
        .iter()
        .map(|&t| bound_main(1000, t as u64).unwrap().ratio_to_leading)
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
    assert!(ratios[6] > 1.0 && ratios[6] < 1.06);
    for t in [1e2f64, 1e8] {
        let expect = 1.0 + 55.0 * t.ln().sqrt() / t.sqrt();
        assert!((bound_main(1000, t as u64).unwrap().ratio_to_leading - expect).abs() < 1e-9);
    }
}

#[test]
fn reports_are_consistent_and_leading_order() {
    for t in [14u64, 100, 196, 10_000] {
        let m = bound_main(10_000, t).unwrap();
        assert!(m.is_consistent() && m.excludes_lower_order);
        let k = evaluate_k2t(10_000, t, &paper_g, "paper").unwrap();
        assert!(k.is_consistent() && k.excludes_lower_order);
        assert_eq!(k.terms.len(), 3);
        assert!(k.coefficient < m.coefficient);
    }
    assert!(bound_main(10, 13).is_err());
}

#[test]
fn g_window_is_enforced() {
    // sqrt(t ln t)/7 at t = 196 gives t/g = 7 sqrt(t / ln t) ~ 42.8
    let r = bound_k2t(1000, 196, &paper_g, "paper").unwrap();
    assert!((r.flags[0].rhs - 7.0 * (196f64 / 196f64.ln()).sqrt()).abs() < 1e-9);
    // for t in [14, 17] the unclamped g drops below 1, so t/g exceeds t
    let err = bound_k2t(1000, 14, &paper_g, "paper").unwrap_err().to_string();
    assert!(err.contains("exceeds t"), "{err}");
    assert!(bound_k2t(1000, 14, &clamped_g, "clamped").is_ok());
    let err = bound_k2t(1000, 100, &|t: f64| t / 10.0, "big").unwrap_err().to_string();
    assert!(err.contains("below 14"), "{err}");
}

#[test]
fn medium_bound_examples() {
    let n = 400u64;
    let n32 = 8000.0;
    let b = bound_b_delta(n, 4, 2, 2).unwrap();
    assert!((b - 2.0 * 0.5 * 11f64.sqrt() * n32).abs() < 1e-6);
    let t = 50u64;
    let at_ceiling = bound_b_delta(n, t, 14, 3 * t - 3).unwrap();
    assert!(at_ceiling <= 14.0 / 2.0 * (6.0 * t as f64).sqrt() * n32);
    let single = bound_b_delta(n, 10, 3, 5).unwrap();
    assert!((bound_b_delta(n, 10, 6, 5).unwrap() - 2.0 * single).abs() < 1e-6);
    assert!(bound_b_delta(n, 3, 2, 2).is_err());
    assert!(bound_b_delta(n, 4, 1, 2).is_err());
}

#[test]
fn large_bound_identity_and_root() {
    let t = 14.0;
    let eps = epsilon(14).unwrap();
    let k = (1.0 + 4.0 * eps) * t;
    let c = k * k / 4.0 * (1.0 + 4.0 * eps) * t;
    assert!((c.sqrt() - 0.5 * k.powf(1.5)).abs() <= 1e-9 * c.sqrt());
    for n in [1u64, 50, 10_000] {
        let nf = n as f64;
        assert!((quadratic_root(0.0, c, nf) - (c * nf).sqrt()).abs() < 1e-9 * (c * nf).sqrt());
        assert!((bound_c_delta(n, k) - k.powf(1.5) * nf.powf(1.5) / 6.0).abs() < 1e-9 * bound_c_delta(n, k));
    }
}

#[test]
fn quadratic_root_is_monotone() {
    let vals = [0.0, 0.5, 1.0, 3.0, 10.0, 1e3];
    for &a in &vals {
        for w in vals.windows(2) {
            assert!(quadratic_root(w[0], a, 7.0) <= quadratic_root(w[1], a, 7.0));
            assert!(quadratic_root(a, w[0], 7.0) <= quadratic_root(a, w[1], 7.0));
            assert!(quadratic_root(a, 2.0, w[0]) <= quadratic_root(a, 2.0, w[1]));
        }
        // the root solves d^2 - b d - c n = 0
        let d = quadratic_root(a, 2.0, 5.0);
        assert!((d * d - a * d - 10.0).abs() < 1e-6 * d.max(1.0) * d.max(1.0));
    }
}

#[test]
fn ratio_table_rows() {
    let oracle = turan_oracle(4, 2).unwrap();
    let search = turan_search(7, 2, &SearchConfig::default()).unwrap();
    let rows = vec![
        RatioRow::from_search("oracle", &oracle),
        RatioRow::from_search("search", &search),
        RatioRow::new("polarity-lift-7", 58, 2, 224),
    ];
    let csv = ratio_table(&rows).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("oracle,4,2,4,0.500000,"), "{}", lines[1]);
    assert!(lines[3].contains(",0.507"), "{}", lines[3]);
    assert_eq!(ratio_table(&[]).unwrap().lines().count(), 1);
}
