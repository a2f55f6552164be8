use trace_turan::hypergraph::{triple_count, Hypergraph3, Triple};
use trace_turan::search::{export_cnf, trace_free_cnf, turan_oracle, CnfFormula};
use trace_turan::trace::contains_trace;
use trace_turan::TracePattern;
use varisat::{ExtendFormula, Lit, Solver};

/// Solves with varisat; on success returns the hypergraph read off the
/// triple variables.
fn solve(f: &CnfFormula, n: usize) -> Option<Hypergraph3> {
    let mut solver = Solver::new();
    for c in &f.clauses {
        let lits: Vec<Lit> = c.iter().map(|&l| Lit::from_dimacs(l as isize)).collect();
        solver.add_clause(&lits);
    }
    if !solver.solve().unwrap() {
        return None;
    }
    let model = solver.model().unwrap();
    let mut h = Hypergraph3::new(n);
    for lit in model {
        let v = lit.to_dimacs();
        if v > 0 && (v as usize) <= triple_count(n) {
            h.insert(Triple::from_colex_rank(v as usize - 1)).unwrap();
        }
    }
    Some(h)
}

#[test]
fn satisfiability_matches_oracle_values() {
    for n in 3..=5 {
        let value = turan_oracle(n, 2).unwrap().value;
        let f = trace_free_cnf(n, value, 2).unwrap();
        let h = solve(&f, n).unwrap_or_else(|| panic!("n = {n}: UNSAT at the oracle value"));
        assert!(h.edge_count() >= value);
        assert!(contains_trace(&h, TracePattern::c4()).is_none());
        let f = trace_free_cnf(n, value + 1, 2).unwrap();
        assert!(solve(&f, n).is_none(), "n = {n}: SAT above the oracle value");
    }
}

#[test]
fn three_vertex_pattern_on_five_vertices() {
    assert!(solve(&trace_free_cnf(5, 10, 3).unwrap(), 5).is_some());
    assert!(solve(&trace_free_cnf(6, 14, 3).unwrap(), 6).is_some());
    assert!(solve(&trace_free_cnf(6, 15, 3).unwrap(), 6).is_none());
}

#[test]
fn more_edges_than_triples_is_unsat() {
    assert!(solve(&trace_free_cnf(4, 5, 2).unwrap(), 4).is_none());
    assert!(solve(&trace_free_cnf(4, 4, 2).unwrap(), 4).is_some());
}

#[test]
fn exported_file_round_trips_through_the_dimacs_parser() {
    let dir = std::env::temp_dir().join(format!("cnf-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.cnf");
    let f = export_cnf(5, 6, 2, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = varisat::dimacs::DimacsParser::parse(text.as_bytes()).unwrap();
    assert_eq!(parsed.var_count(), f.num_vars);
    assert_eq!(parsed.len(), f.clauses.len());
    let mut solver = Solver::new();
    solver.add_formula(&parsed);
    assert!(solver.solve().unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}
