//! DIMACS export: satisfiable iff some `n`-vertex trace-free hypergraph has
//! at least `m` edges.
//!
//! Variable `r + 1` says the triple of colex rank `r` is present. For every
//! center pair, every `t`-set `D` and every way to give each pattern edge
//! `{c,u}` a third vertex outside the support, the `2t` resulting triples are
//! distinct, and a clause forbids having all of them. The edge count is
//! bounded below by a sequential counter over the negated variables.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{triple_count, Triple, Vertex};
use crate::trace::TracePattern;

pub const CNF_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    /// Literals in DIMACS convention: `v` or `-v`, `v >= 1`.
    pub clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(out, "{l} ").expect("write to string");
            }
            out.push_str("0\n");
        }
        out
    }
}

fn var(a: Vertex, b: Vertex, c: Vertex) -> i64 {
    Triple::new(a, b, c).expect("distinct").colex_rank() as i64 + 1
}

/// Sequential-counter encoding of "at most `k` of `lits` are true".
fn at_most(lits: &[i64], k: usize, next_var: &mut usize, clauses: &mut Vec<Vec<i64>>) {
    let n = lits.len();
    if k >= n {
        return;
    }
    if k == 0 {
        clauses.extend(lits.iter().map(|&l| vec![-l]));
        return;
    }
    // s[i][j]: at least j+1 of lits[0..=i] are true
    let base = *next_var;
    *next_var += (n - 1) * k;
    let s = |i: usize, j: usize| (base + i * k + j + 1) as i64;
    clauses.push(vec![-lits[0], s(0, 0)]);
    for j in 1..k {
        clauses.push(vec![-s(0, j)]);
    }
    for i in 1..n - 1 {
        clauses.push(vec![-lits[i], s(i, 0)]);
        clauses.push(vec![-s(i - 1, 0), s(i, 0)]);
        for j in 1..k {
            clauses.push(vec![-lits[i], -s(i - 1, j - 1), s(i, j)]);
            clauses.push(vec![-s(i - 1, j), s(i, j)]);
        }
        clauses.push(vec![-lits[i], -s(i - 1, k - 1)]);
    }
    clauses.push(vec![-lits[n - 1], -s(n - 2, k - 1)]);
}

fn subsets(pool: &[Vertex], k: usize, from: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in from..pool.len() {
        cur.push(pool[i]);
        subsets(pool, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Builds the formula for `n` vertices, at least `m` edges, pattern `K_{2,t}`.
pub fn trace_free_cnf(n: usize, m: usize, t: usize) -> Result<CnfFormula> {
    let pattern = TracePattern::new(t)?;
    if n > CNF_MAX_N {
        return Err(Error::Refused(format!(
            "CNF export handles n <= {CNF_MAX_N}, got {n}"
        )));
    }
    if n < 3 {
        return invalid("need at least 3 vertices");
    }
    let total = triple_count(n);
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut next_var = total;
    if m > total {
        clauses.push(vec![1]);
        clauses.push(vec![-1]);
    } else {
        let negated: Vec<i64> = (1..=total as i64).map(|v| -v).collect();
        at_most(&negated, total - m, &mut next_var, &mut clauses);
    }

    let nv = n as Vertex;
    let t = pattern.t();
    for x in 0..nv {
        for y in x + 1..nv {
            let pool: Vec<Vertex> = (0..nv).filter(|&v| v != x && v != y).collect();
            let mut ds = Vec::new();
            subsets(&pool, t, 0, &mut Vec::new(), &mut ds);
            for d in ds {
                let outside: Vec<Vertex> = pool.iter().copied().filter(|v| !d.contains(v)).collect();
                if outside.is_empty() {
                    continue;
                }
                let roles: Vec<(Vertex, Vertex)> = d
                    .iter()
                    .map(|&u| (x, u))
                    .chain(d.iter().map(|&u| (y, u)))
                    .collect();
                // odometer over third-vertex choices
                let mut pick = vec![0usize; roles.len()];
                loop {
                    let clause: Vec<i64> = roles
                        .iter()
                        .zip(&pick)
                        .map(|(&(c, u), &i)| -var(c, u, outside[i]))
                        .collect();
                    clauses.push(clause);
                    let mut pos = 0;
                    while pos < pick.len() {
                        pick[pos] += 1;
                        if pick[pos] < outside.len() {
                            break;
                        }
                        pick[pos] = 0;
                        pos += 1;
                    }
                    if pos == pick.len() {
                        break;
                    }
                }
            }
        }
    }
    Ok(CnfFormula {
        num_vars: next_var,
        clauses,
    })
}

/// Writes the formula to `path` in DIMACS format.
pub fn export_cnf(n: usize, m: usize, t: usize, path: &Path) -> Result<CnfFormula> {
    let f = trace_free_cnf(n, m, t)?;
    std::fs::write(path, f.to_dimacs())?;
    Ok(f)
}
