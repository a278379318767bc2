//! Canonical output formatting: byte-stable JSON (sorted keys), the
//! published set-with-interval-tail notation, and small CSV/table writers.

use serde::Serialize;

use sumbasis_core::{Interval, SumsetProfile};

/// Canonical JSON: object keys sorted, compact separators. Serializing
/// through `serde_json::Value` sorts keys because its map is a BTreeMap.
pub fn canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    Ok(serde_json::to_value(value)?.to_string())
}

/// Render a sorted value set the way the reference tables are written:
/// elements comma-separated in braces, except that a closing run of ten or
/// more integers is written as `∪ [a, b]`.
pub fn render_value_set(values: &[i64]) -> String {
    if values.is_empty() {
        return "{}".to_string();
    }
    let mut tail: Option<(i64, i64)> = None;
    let mut head_end = values.len();
    // maximal final run
    let last = values[values.len() - 1];
    let mut start_idx = values.len() - 1;
    while start_idx > 0 && values[start_idx - 1] + 1 == values[start_idx] {
        start_idx -= 1;
    }
    let run_len = values.len() - start_idx;
    if run_len >= 10 {
        tail = Some((values[start_idx], last));
        head_end = start_idx;
    }
    let head: Vec<String> = values[..head_end].iter().map(|v| v.to_string()).collect();
    match tail {
        None => format!("{{{}}}", head.join(", ")),
        Some((lo, hi)) if head.is_empty() => format!("[{lo}, {hi}]"),
        Some((lo, hi)) => format!("{{{}}} ∪ [{lo}, {hi}]", head.join(", ")),
    }
}

/// `[lo, hi]` with a space, as used in human-facing run listings.
pub fn render_interval(iv: &Interval) -> String {
    format!("[{}, {}]", iv.lo(), iv.hi())
}

pub fn render_opt_i64(v: Option<i64>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "absent".to_string(),
    }
}

/// Human rendering of a sumset profile.
pub fn profile_table(p: &SumsetProfile) -> String {
    let runs: Vec<String> = p.runs.iter().map(render_interval).collect();
    let ell_sharp = match &p.ell_sharp {
        Some(w) => format!("{} at {}", w.length, render_interval(&w.interval)),
        None => "absent".to_string(),
    };
    format!(
        "base:      {}\nh:         {}\nsums:      {}\nruns:      {}\nell:       {}\nell_sharp: {}\n",
        p.base,
        p.h,
        p.sums,
        runs.join(" "),
        render_opt_i64(p.ell),
        ell_sharp
    )
}

/// One CSV field, quoted (the spectra contain commas).
pub fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_set_rendering() {
        assert_eq!(render_value_set(&[]), "{}");
        assert_eq!(render_value_set(&[0]), "{0}");
        assert_eq!(render_value_set(&[0, 3, 6, 7]), "{0, 3, 6, 7}");
        let mut tail: Vec<i64> = vec![0, 3, 6, 7];
        tail.extend(9..=24);
        assert_eq!(render_value_set(&tail), "{0, 3, 6, 7} ∪ [9, 24]");
        // nine-element closing run stays inline
        let mut short: Vec<i64> = vec![0];
        short.extend(5..=13);
        assert_eq!(
            render_value_set(&short),
            "{0, 5, 6, 7, 8, 9, 10, 11, 12, 13}"
        );
        // a full interval renders bare
        let all: Vec<i64> = (2..=14).collect();
        assert_eq!(render_value_set(&all), "[2, 14]");
    }

    #[test]
    fn canonical_json_sorts_keys() {
        #[derive(Serialize)]
        struct T {
            zebra: u32,
            apple: u32,
        }
        let s = canonical_json(&T { zebra: 1, apple: 2 }).unwrap();
        assert_eq!(s, r#"{"apple":2,"zebra":1}"#);
    }

    #[test]
    fn csv_field_quotes() {
        assert_eq!(csv_field("a, b"), "\"a, b\"");
        assert_eq!(csv_field("x\"y"), "\"x\"\"y\"");
    }
}
