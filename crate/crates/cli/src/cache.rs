//! Finished search results kept under `TRACE_TURAN_CACHE`, one file per
//! request: the CSV row, then each witness in hypergraph text form separated
//! by blank lines. Unreadable entries count as misses.

use std::fs;
use std::path::PathBuf;

use trace_turan::search::SearchResult;
use trace_turan::Hypergraph3;

pub const ENV: &str = "TRACE_TURAN_CACHE";

pub struct Key {
    pub n: usize,
    pub t: usize,
    pub witness_cap: usize,
    pub oracle: bool,
}

fn path(key: &Key) -> Option<PathBuf> {
    let dir = std::env::var_os(ENV)?;
    let mode = if key.oracle { "oracle" } else { "search" };
    Some(PathBuf::from(dir).join(format!("{mode}-n{}-t{}-cap{}.txt", key.n, key.t, key.witness_cap)))
}

pub fn load(key: &Key) -> Option<(String, Vec<Hypergraph3>)> {
    let text = fs::read_to_string(path(key)?).ok()?;
    let mut blocks = text.split("\n\n");
    let row = blocks.next()?.trim().to_string();
    if row.split(',').count() != SearchResult::CSV_HEADER.split(',').count() {
        return None;
    }
    let witnesses = blocks
        .filter(|b| !b.trim().is_empty())
        .map(|b| b.parse::<Hypergraph3>().ok())
        .collect::<Option<Vec<_>>>()?;
    Some((row, witnesses))
}

/// Best effort; a cache that cannot be written is skipped.
pub fn store(key: &Key, r: &SearchResult) {
    let Some(p) = path(key) else { return };
    let mut text = r.csv_row();
    text.push('\n');
    for w in &r.witnesses {
        text.push('\n');
        text.push_str(&w.to_text());
    }
    if let Some(dir) = p.parent() {
        let _ = fs::create_dir_all(dir);
    }
    let _ = fs::write(p, text);
}
