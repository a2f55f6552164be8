//! Interval evaluation of the three-term bound with `g(t) = sqrt(t ln t)/7`
//! against the headline coefficient `(1/6)(t^{3/2} + 55 t sqrt(ln t))`.

use serde::Serialize;

use super::interval::Interval;
use super::MAIN_MIN_T;
use crate::error::{invalid, Error, Result};

pub const DERIVATION_HEADER: [&str; 8] = [
    "t",
    "g",
    "co_degree_one_term",
    "medium_term",
    "large_term",
    "k2t_coefficient_upper",
    "main_coefficient_lower",
    "derivation_check",
];

/// One grid point. Terms are coefficients of `n^{3/2}` as enclosures.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DerivationRow {
    pub t: f64,
    pub g: Interval,
    pub co_degree_one: Interval,
    pub medium: Interval,
    pub large: Interval,
    pub k2t: Interval,
    pub main: Interval,
    /// `k2t.hi <= main.lo`.
    pub holds: bool,
}

/// Encloses `(1 + ln(delta+1)) / (delta+1)`.
pub fn epsilon_interval(delta: u32) -> Result<Interval> {
    if delta < 2 {
        return invalid(format!("delta must be at least 2, got {delta}"));
    }
    let d1 = Interval::from(u64::from(delta) + 1);
    Ok((Interval::exact(1.0) + d1.ln()) / d1)
}

/// Which `g` the three-term bound is evaluated with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GChoice {
    /// `sqrt(t ln t) / 7`.
    #[default]
    Paper,
    /// `max(sqrt(t ln t) / 7, 1)`, which keeps `t/g <= t` near `t = 14`.
    Clamped,
}

/// Checks the inequality at the exactly representable point `t >= 14` with
/// the unclamped `g`.
pub fn derivation_check(t: f64) -> Result<DerivationRow> {
    derivation_check_with(t, GChoice::Paper)
}

pub fn derivation_check_with(t: f64, choice: GChoice) -> Result<DerivationRow> {
    if !(t >= MAIN_MIN_T as f64) || !t.is_finite() {
        return invalid(format!("the derivation check needs finite t >= {MAIN_MIN_T}, got {t}"));
    }
    let ti = Interval::exact(t);
    let one = Interval::exact(1.0);
    let six = Interval::exact(6.0);
    let ln_t = ti.ln();
    let mut g = (ti * ln_t).sqrt() / Interval::exact(7.0);
    if choice == GChoice::Clamped {
        g = Interval::new(g.lo.max(1.0), g.hi.max(1.0));
    }
    let co_degree_one = Interval::exact(0.5) * (ti - one).sqrt();
    let medium = six.sqrt() / Interval::exact(2.0) * ti.pow_three_halves() / g;
    let large = (ti + Interval::exact(5.0) * g * ln_t).pow_three_halves() / six;
    let k2t = co_degree_one + medium + large;
    let main = (ti.pow_three_halves() + Interval::exact(55.0) * ti * ln_t.sqrt()) / six;
    Ok(DerivationRow {
        t,
        g,
        co_degree_one,
        medium,
        large,
        k2t,
        main,
        holds: k2t.hi <= main.lo,
    })
}

/// `points` log-spaced values from `lo` to `hi`, both endpoints exact.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return invalid(format!("grid needs 0 < lo <= hi, got [{lo}, {hi}]"));
    }
    if points < 2 || lo == hi {
        return Ok(vec![lo]);
    }
    let ratio = (hi / lo).ln();
    let last = points - 1;
    Ok((0..points)
        .map(|i| match i {
            0 => lo,
            i if i == last => hi,
            i => lo * (ratio * i as f64 / last as f64).exp(),
        })
        .collect())
}

pub fn derivation_table(lo: f64, hi: f64, points: usize) -> Result<Vec<DerivationRow>> {
    derivation_table_with(lo, hi, points, GChoice::Paper)
}

pub fn derivation_table_with(lo: f64, hi: f64, points: usize, choice: GChoice) -> Result<Vec<DerivationRow>> {
    log_grid(lo, hi, points)?
        .into_iter()
        .map(|t| derivation_check_with(t, choice))
        .collect()
}

/// CSV with one row per grid point; enclosures print as their outward bound.
pub fn derivation_csv(rows: &[DerivationRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(DERIVATION_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            format!("{}", r.t),
            format!("{}", r.g.hi),
            format!("{}", r.co_degree_one.hi),
            format!("{}", r.medium.hi),
            format!("{}", r.large.hi),
            format!("{}", r.k2t.hi),
            format!("{}", r.main.lo),
            r.holds.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_k2t, paper_g};

    #[test]
    fn epsilon_fourteen_is_at_most_a_quarter() {
        let e = epsilon_interval(14).unwrap();
        assert!(e.hi <= 0.25);
        assert!(e.contains(crate::bounds::epsilon(14).unwrap()));
    }

    #[test]
    fn grid_shape() {
        let g = log_grid(14.0, 1e6, 1000).unwrap();
        assert_eq!(g.len(), 1000);
        assert_eq!((g[0], g[999]), (14.0, 1e6));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(log_grid(0.0, 1.0, 3).is_err());
    }

    #[test]
    fn enclosures_contain_float_evaluation() {
        for t in [14.0, 196.0, 5000.0] {
            let row = derivation_check(t).unwrap();
            let r = evaluate_k2t(1, t as u64, &paper_g, "paper").unwrap();
            assert!(row.k2t.contains(r.coefficient), "{t}");
            assert!(row.holds);
        }
        assert!(derivation_check(13.0).is_err());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = derivation_table(14.0, 100.0, 3).unwrap();
        let text = derivation_csv(&rows).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("t,g,"));
        assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
    }

    #[test]
    fn clamped_g_only_differs_below_the_crossover() {
        let low = derivation_check_with(14.0, GChoice::Clamped).unwrap();
        assert_eq!((low.g.lo, low.g.hi), (1.0, 1.0));
        assert!(low.holds);
        let high = 1000.0;
        assert_eq!(
            derivation_check_with(high, GChoice::Clamped).unwrap(),
            derivation_check(high).unwrap()
        );
        assert!(derivation_table_with(14.0, 1e6, 200, GChoice::Clamped)
            .unwrap()
            .iter()
            .all(|r| r.holds));
    }
}
