//! Computed or constructed edge counts normalized by `n^{3/2}` and by the
//! asymptotic leading term `t^{3/2} n^{3/2} / 6`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::search::SearchResult;

pub const RATIO_HEADER: [&str; 9] = [
    "source",
    "n",
    "t",
    "value",
    "value_over_n32",
    "value_over_leading",
    "window_low",
    "window_high",
    "in_window",
];

/// The asymptotic `C_4` window for `e(H) / n^{3/2}`; finite `n` may leave it.
pub const WINDOW_LOW: f64 = 0.5;
pub const WINDOW_HIGH: f64 = 5.0 / 6.0;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub source: String,
    pub n: usize,
    pub t: usize,
    pub value: usize,
}

impl RatioRow {
    pub fn new(source: impl Into<String>, n: usize, t: usize, value: usize) -> Self {
        RatioRow {
            source: source.into(),
            n,
            t,
            value,
        }
    }

    pub fn from_search(source: impl Into<String>, r: &SearchResult) -> Self {
        RatioRow::new(source, r.n, r.t, r.value)
    }

    pub fn over_n32(&self) -> f64 {
        self.value as f64 / (self.n as f64).powf(1.5)
    }

    pub fn over_leading(&self) -> f64 {
        self.over_n32() * 6.0 / (self.t as f64).powf(1.5)
    }
}

/// CSV with [`RATIO_HEADER`]; window columns are filled only for `t = 2`.
pub fn ratio_table(rows: &[RatioRow]) -> Result<String> {
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(RATIO_HEADER).map_err(io)?;
    for r in rows {
        let ratio = r.over_n32();
        let (lo, hi, inside) = if r.t == 2 {
            (
                WINDOW_LOW.to_string(),
                WINDOW_HIGH.to_string(),
                (WINDOW_LOW..=WINDOW_HIGH).contains(&ratio).to_string(),
            )
        } else {
            (String::new(), String::new(), String::new())
        };
        w.write_record([
            r.source.clone(),
            r.n.to_string(),
            r.t.to_string(),
            r.value.to_string(),
            format!("{ratio:.6}"),
            format!("{:.6}", r.over_leading()),
            lo,
            hi,
            inside,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
