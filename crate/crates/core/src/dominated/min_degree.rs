//! Large dominated sets in graphs of minimum degree `delta`.
//!
//! Each vertex is sampled with probability `p = 1 - ln(delta+1)/(delta+1)`;
//! loopless sampled vertices whose whole closed neighborhood was sampled are
//! dropped. The expected survivor count is at least `(p - p^(delta+1)) n`,
//! which is at least `(1 - eps) n` with `eps = (1 + ln(delta+1))/(delta+1)`.
//!
//! Sampling is retried a bounded number of times. If no draw reaches
//! `ceil((1 - eps) n)`, vertices are fixed one at a time by conditional
//! expectations. The estimator is evaluated in exact rational arithmetic over
//! the `f64` value of `p`, so the final count is at least the initial
//! expectation with no rounding slack.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dominated::{witness_map, DominatedSetResult};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Vertex, VertexSet};
use crate::link::LoopGraph;

pub const DEFAULT_RETRIES: u32 = 100;

/// `(1 + ln(delta+1)) / (delta+1)`, natural logarithm.
pub fn epsilon_of(delta: u32) -> f64 {
    let d1 = f64::from(delta) + 1.0;
    (1.0 + d1.ln()) / d1
}

/// `ceil((1 - eps_delta) * n)`, clamped at 0.
pub fn size_target(delta: u32, n: usize) -> usize {
    let v = (1.0 - epsilon_of(delta)) * n as f64;
    if v <= 0.0 {
        0
    } else {
        v.ceil() as usize
    }
}

fn sample_probability(delta: u32) -> f64 {
    let d1 = f64::from(delta) + 1.0;
    1.0 - d1.ln() / d1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinDegreeConfig {
    pub retries: u32,
}

impl Default for MinDegreeConfig {
    fn default() -> Self {
        MinDegreeConfig {
            retries: DEFAULT_RETRIES,
        }
    }
}

/// Which route produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinDegreeOutcome {
    Sampled { attempt: u32 },
    Derandomized,
}

fn check_min_degree(g: &LoopGraph, delta: u32) -> Result<()> {
    if delta < 2 {
        return invalid(format!("delta must be at least 2, got {delta}"));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < delta as usize) {
        return Err(Error::PreconditionViolation(format!(
            "vertex {v} has degree {} < {delta}",
            g.degree(v)
        )));
    }
    Ok(())
}

/// Drops loopless members whose neighbors all lie in `chosen`.
fn survivors(g: &LoopGraph, chosen: &VertexSet) -> VertexSet {
    chosen
        .iter()
        .copied()
        .filter(|&v| g.loops(v) > 0 || g.neighbors(v).any(|u| !chosen.contains(&u)))
        .collect()
}

/// A dominated set of size at least `ceil((1 - eps_delta) |V(G)|)`.
pub fn dominated_min_degree(g: &LoopGraph, delta: u32, seed: u64) -> Result<DominatedSetResult> {
    dominated_min_degree_with(g, delta, seed, MinDegreeConfig::default()).map(|(r, _)| r)
}

pub fn dominated_min_degree_with(
    g: &LoopGraph,
    delta: u32,
    seed: u64,
    config: MinDegreeConfig,
) -> Result<(DominatedSetResult, MinDegreeOutcome)> {
    check_min_degree(g, delta)?;
    let target = size_target(delta, g.vertex_count());
    let p = sample_probability(delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..config.retries {
        let chosen: VertexSet = g.vertices().filter(|_| rng.gen_bool(p)).collect();
        let d = survivors(g, &chosen);
        if d.len() >= target {
            return Ok((finish(g, d), MinDegreeOutcome::Sampled { attempt }));
        }
    }
    let d = derandomized(g, p);
    assert!(
        d.len() >= target,
        "conditional-expectation fallback fell short: {} < {target}",
        d.len()
    );
    Ok((finish(g, d), MinDegreeOutcome::Derandomized))
}

fn finish(g: &LoopGraph, d: VertexSet) -> DominatedSetResult {
    DominatedSetResult {
        witnesses: vec![witness_map(g, &d)],
        set: d,
    }
}

/// Fixes vertices in increasing order, keeping `E[|D \ T|]` non-decreasing.
///
/// With `u[v]` the undecided count in the closed neighborhood of `v`, putting
/// `w` in rather than out changes the estimator by
/// `1 - sum over loopless v in N[w] with no excluded neighbor of p^(u[v]-1)`.
fn derandomized(g: &LoopGraph, p: f64) -> VertexSet {
    let p_exact = BigRational::from_float(p).expect("p is finite");
    let verts: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| verts.binary_search(&v).expect("vertex of g");
    let closed: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            let mut nb: Vec<usize> = g.neighbors(v).map(index).collect();
            nb.push(index(v));
            nb
        })
        .collect();
    let max_deg = closed.iter().map(Vec::len).max().unwrap_or(0);
    let mut powers = vec![BigRational::one()];
    for k in 1..=max_deg {
        let next = &powers[k - 1] * &p_exact;
        powers.push(next);
    }
    let loopless: Vec<bool> = verts.iter().map(|&v| g.loops(v) == 0).collect();
    let mut undecided: Vec<usize> = closed.iter().map(Vec::len).collect();
    let mut has_out = vec![false; verts.len()];
    let mut inside = vec![false; verts.len()];
    let one = BigRational::one();

    for w in 0..verts.len() {
        let mut loss = BigRational::zero();
        for &v in &closed[w] {
            if loopless[v] && !has_out[v] {
                loss += &powers[undecided[v] - 1];
            }
        }
        let take = loss <= one;
        inside[w] = take;
        for &v in &closed[w] {
            undecided[v] -= 1;
            if !take {
                has_out[v] = true;
            }
        }
    }
    let chosen: VertexSet = verts
        .iter()
        .zip(&inside)
        .filter(|(_, &i)| i)
        .map(|(&v, _)| v)
        .collect();
    survivors(g, &chosen)
}

/// Exact value of the estimator `sum_v P(v in D) - P(v in T)` before any
/// decision, for tests.
#[cfg(test)]
pub(crate) fn initial_expectation(g: &LoopGraph, delta: u32) -> BigRational {
    let p = BigRational::from_float(sample_probability(delta)).unwrap();
    let mut total = BigRational::zero();
    for v in g.vertices() {
        total += &p;
        if g.loops(v) == 0 {
            let k = g.simple_degree(v) as i32 + 1;
            total -= p.pow(k);
        }
    }
    total
}

/// A set dominated in both graphs of size at least `ceil((1 - 2 eps) |S|)`,
/// the intersection of the two single-graph results.
pub fn simultaneous_dominated_min_degree(
    gx: &LoopGraph,
    gy: &LoopGraph,
    delta: u32,
    seed: u64,
) -> Result<DominatedSetResult> {
    if gx.vertex_set() != gy.vertex_set() {
        return invalid("the two graphs must share one vertex set");
    }
    let rx = dominated_min_degree(gx, delta, seed)?;
    let ry = dominated_min_degree(gy, delta, seed.wrapping_add(0x9E37_79B9_7F4A_7C15))?;
    let set: VertexSet = rx.set.intersection(&ry.set).copied().collect();
    let restrict = |m: &crate::dominated::WitnessMap| {
        m.iter()
            .filter(|(v, _)| set.contains(v))
            .map(|(&v, &w)| (v, w))
            .collect()
    };
    Ok(DominatedSetResult {
        witnesses: vec![restrict(&rx.witnesses[0]), restrict(&ry.witnesses[0])],
        set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominated::{is_dominated, witnesses_are_valid};

    fn complete(n: Vertex) -> LoopGraph {
        let mut g = LoopGraph::new(0..n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Largest dominated set by subset enumeration.
    fn brute_max_dominated(g: &LoopGraph) -> usize {
        let verts: Vec<Vertex> = g.vertices().collect();
        let mut best = 0;
        for mask in 0u32..(1 << verts.len()) {
            let d: VertexSet = (0..verts.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| verts[i])
                .collect();
            if d.len() > best && is_dominated(g, &d) {
                best = d.len();
            }
        }
        best
    }

    #[test]
    fn epsilon_values() {
        assert!((epsilon_of(14) - 0.247_203_4).abs() < 1e-6);
        assert!(epsilon_of(14) <= 0.25);
        assert!((epsilon_of(2) - 0.699_537_5).abs() < 1e-6);
        assert!((epsilon_of(4) - 0.521_887_6).abs() < 1e-6);
    }

    #[test]
    fn complete_five() {
        let g = complete(5);
        assert_eq!(size_target(4, 5), 3);
        assert_eq!(brute_max_dominated(&g), 4);
        let r = dominated_min_degree(&g, 4, 7).unwrap();
        assert!(r.len() >= 3);
        assert!(witnesses_are_valid(&[&g], &r));
    }

    #[test]
    fn complete_sixteen() {
        let g = complete(16);
        assert_eq!(size_target(14, 16), 13);
        let r = dominated_min_degree(&g, 14, 1).unwrap();
        assert!(r.len() >= 13);
        assert!(is_dominated(&g, &r.set));
    }

    #[test]
    fn looped_leaves_all_kept() {
        // star K_{1,2} with two loops on each leaf and one on the center
        let mut g = LoopGraph::new(0..3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_loop(1, 1).unwrap();
        g.add_loop(2, 1).unwrap();
        g.add_loop(0, 1).unwrap();
        let (r, _) = dominated_min_degree_with(&g, 2, 3, MinDegreeConfig { retries: 0 }).unwrap();
        assert_eq!(r.set, VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn low_degree_is_precondition_violation() {
        let mut g = LoopGraph::new(0..3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        assert!(matches!(
            dominated_min_degree(&g, 2, 0),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            dominated_min_degree(&complete(4), 1, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn fallback_beats_initial_expectation() {
        for n in 3..=9 {
            let g = complete(n);
            let delta = n - 1;
            let (r, how) =
                dominated_min_degree_with(&g, delta, 0, MinDegreeConfig { retries: 0 }).unwrap();
            assert_eq!(how, MinDegreeOutcome::Derandomized);
            let size = BigRational::from_integer((r.len() as i64).into());
            assert!(size >= initial_expectation(&g, delta));
            assert!(r.len() >= size_target(delta, n as usize));
        }
    }

    #[test]
    fn simultaneous_identical_graphs() {
        let g = complete(16);
        let r = simultaneous_dominated_min_degree(&g, &g, 14, 5).unwrap();
        assert!(r.len() >= size_target(14, 16) * 2 - 16);
        assert!(witnesses_are_valid(&[&g, &g], &r));
    }

    #[test]
    fn simultaneous_tiny_may_be_empty() {
        let g = complete(3);
        let r = simultaneous_dominated_min_degree(&g, &g, 2, 0).unwrap();
        assert!(is_dominated(&g, &r.set));
    }
}
