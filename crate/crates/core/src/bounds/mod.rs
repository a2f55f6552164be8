//! Leading-term evaluators for the extremal bounds, a rigorous numeric check
//! that the three-term `K_{2,t}` bound implies the headline bound, ratio
//! tables for computed values, and the lemma-invariant harness.
//!
//! Every bound here is the coefficient of `n^{3/2}` times `n^{3/2}`; the
//! `o(n^{3/2})` remainders are unquantified and never evaluated.

mod derivation;
pub mod interval;
mod lemmas;
mod ratio;

use serde::Serialize;

pub use derivation::{
    derivation_check, derivation_check_with, derivation_csv, derivation_table, derivation_table_with,
    epsilon_interval, log_grid, DerivationRow, GChoice, DERIVATION_HEADER,
};
pub use interval::Interval;
pub use lemmas::{
    check_lemma_invariants, lemma_report, CertificateSource, CertificateStatus, CheckOutcome,
    CheckStatus, LemmaReport, LemmaViolation, Relation, LARGE_DELTA,
};
pub use ratio::{ratio_table, RatioRow, RATIO_HEADER, WINDOW_HIGH, WINDOW_LOW};

use crate::dominated::epsilon_of;
use crate::error::{invalid, Result};

/// Smallest `t` covered by the headline bound.
pub const MAIN_MIN_T: u64 = 14;

/// `(1 + ln(delta+1)) / (delta+1)`.
pub fn epsilon(delta: u32) -> Result<f64> {
    if delta < 2 {
        return invalid(format!("delta must be at least 2, got {delta}"));
    }
    Ok(epsilon_of(delta))
}

/// `sqrt(t ln t) / 7`, the choice that turns the three-term bound into the
/// headline one.
pub fn paper_g(t: f64) -> f64 {
    (t * t.ln()).sqrt() / 7.0
}

/// [`paper_g`] raised to at least 1. The unclamped choice has `g < 1` for
/// `t` up to about 17, where `t/g <= t` fails.
pub fn clamped_g(t: f64) -> f64 {
    paper_g(t).max(1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Term {
    pub name: &'static str,
    /// Coefficient of `n^{3/2}`.
    pub coefficient: f64,
    pub value: f64,
}

/// An inequality `lhs <= rhs` evaluated on stored numbers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Flag {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl Flag {
    fn new(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Flag {
            name,
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub formula: &'static str,
    pub n: u64,
    pub t: u64,
    pub delta: Option<u32>,
    pub k: Option<f64>,
    pub g_choice: Option<String>,
    pub g: Option<f64>,
    pub terms: Vec<Term>,
    pub coefficient: f64,
    pub total: f64,
    pub ratio_to_n32: f64,
    /// `total / (t^{3/2} n^{3/2} / 6)`.
    pub ratio_to_leading: f64,
    pub flags: Vec<Flag>,
    /// Always true: the `o(n^{3/2})` term is not part of `total`.
    pub excludes_lower_order: bool,
}

/// Relative tolerance for identities between stored floats.
pub const REL_TOL: f64 = 1e-9;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

impl BoundReport {
    fn build(
        formula: &'static str,
        n: u64,
        t: u64,
        terms: Vec<(&'static str, f64)>,
        flags: Vec<Flag>,
    ) -> Self {
        let n32 = (n as f64).powf(1.5);
        let terms: Vec<Term> = terms
            .into_iter()
            .map(|(name, c)| Term {
                name,
                coefficient: c,
                value: c * n32,
            })
            .collect();
        let coefficient: f64 = terms.iter().map(|t| t.coefficient).sum();
        let total: f64 = terms.iter().map(|t| t.value).sum();
        let leading = (t as f64).powf(1.5) * n32 / 6.0;
        BoundReport {
            formula,
            n,
            t,
            delta: None,
            k: None,
            g_choice: None,
            g: None,
            terms,
            coefficient,
            total,
            ratio_to_n32: total / n32,
            ratio_to_leading: total / leading,
            flags,
            excludes_lower_order: true,
        }
    }

    /// Recomputes totals, ratios and flags from the stored terms.
    pub fn is_consistent(&self) -> bool {
        let n32 = (self.n as f64).powf(1.5);
        let total: f64 = self.terms.iter().map(|t| t.value).sum();
        let leading = (self.t as f64).powf(1.5) * n32 / 6.0;
        self.excludes_lower_order
            && self.terms.iter().all(|t| close(t.value, t.coefficient * n32))
            && close(total, self.total)
            && close(self.ratio_to_n32, total / n32)
            && close(self.ratio_to_leading, total / leading)
            && self.flags.iter().all(|f| f.holds == (f.lhs <= f.rhs))
    }
}

/// `(1/6)(t^{3/2} + 55 t sqrt(ln t)) n^{3/2}` for `t >= 14`.
pub fn bound_main(n: u64, t: u64) -> Result<BoundReport> {
    if t < MAIN_MIN_T {
        return invalid(format!("the headline bound needs t >= {MAIN_MIN_T}, got {t}"));
    }
    let tf = t as f64;
    Ok(BoundReport::build(
        "main",
        n,
        t,
        vec![
            ("leading", tf.powf(1.5) / 6.0),
            ("correction", 55.0 * tf * tf.ln().sqrt() / 6.0),
        ],
        vec![],
    ))
}

/// The three-term bound without the domain check on `g`; the report flags
/// both sides of `14 <= t/g(t) <= t`.
pub fn evaluate_k2t(n: u64, t: u64, g: &dyn Fn(f64) -> f64, g_label: &str) -> Result<BoundReport> {
    if t < 2 {
        return invalid(format!("t must be at least 2, got {t}"));
    }
    let tf = t as f64;
    let gv = g(tf);
    if !(gv.is_finite() && gv > 0.0) {
        return invalid(format!("g({t}) = {gv} must be positive and finite"));
    }
    let mut r = BoundReport::build(
        "k2t",
        n,
        t,
        vec![
            ("co-degree-one", 0.5 * (tf - 1.0).sqrt()),
            ("medium", 6f64.sqrt() / 2.0 * tf.powf(1.5) / gv),
            ("large", (tf + 5.0 * gv * tf.ln()).powf(1.5) / 6.0),
        ],
        vec![
            Flag::new("t/g at least 14", 14.0, tf / gv),
            Flag::new("t/g at most t", tf / gv, tf),
        ],
    );
    r.g_choice = Some(g_label.to_string());
    r.g = Some(gv);
    Ok(r)
}

/// `(1/2) sqrt(t-1) + (sqrt6/2) t^{3/2}/g + (1/6)(t + 5 g ln t)^{3/2}`, all
/// times `n^{3/2}`, for `g` with `14 <= t/g(t) <= t`.
pub fn bound_k2t(n: u64, t: u64, g: &dyn Fn(f64) -> f64, g_label: &str) -> Result<BoundReport> {
    let r = evaluate_k2t(n, t, g, g_label)?;
    let ratio = r.flags[0].rhs;
    if !r.flags[0].holds {
        return invalid(format!("t/g(t) = {ratio} is below 14"));
    }
    if !r.flags[1].holds {
        return invalid(format!("t/g(t) = {ratio} exceeds t = {t}"));
    }
    Ok(r)
}

/// `delta * (1/2) sqrt(k + 3t - 3) * n^{3/2}`.
pub fn bound_b_delta(n: u64, t: u64, delta: u32, k: u64) -> Result<f64> {
    if t < 4 {
        return invalid(format!("the medium bound needs t >= 4, got {t}"));
    }
    if delta < 2 || k < 2 {
        return invalid(format!("delta and k must be at least 2, got {delta} and {k}"));
    }
    let inner = (k + 3 * t - 3) as f64;
    Ok(f64::from(delta) * 0.5 * inner.sqrt() * (n as f64).powf(1.5))
}

/// `(1/6) k^{3/2} n^{3/2}`.
pub fn bound_c_delta(n: u64, k: f64) -> f64 {
    k.powf(1.5) * (n as f64).powf(1.5) / 6.0
}

/// Larger root of `d^2 - b d - c n`.
pub fn quadratic_root(b: f64, c: f64, n: f64) -> f64 {
    (b + (b * b + 4.0 * c * n).sqrt()) / 2.0
}
