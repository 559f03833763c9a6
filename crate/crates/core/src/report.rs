//! JSON and aligned-table renderings of results.
//!
//! Rationals are always rendered as `"p/q"` strings. JSON output carries no
//! timings, so identical inputs give byte-identical JSON.

use serde_json::{json, Value};

use crate::hilbert::{multiplicity, HilbertFit};
use crate::lab::{CorpusResult, IdentityReport, IndependenceReport, SubmoduleReport, Verdict};
use crate::rational::to_pq;
use crate::weyl::Degree;

pub fn degree_json(d: Degree) -> Value {
    match d {
        Degree::NegInfinity => Value::Null,
        Degree::Finite(v) => json!(v),
    }
}

pub fn fit_json(n: usize, fit: &HilbertFit) -> Value {
    json!({
        "n": n,
        "samples": fit.samples.iter().map(|s| json!([s.t, s.value])).collect::<Vec<_>>(),
        "degree": degree_json(fit.degree),
        "leading": to_pq(&fit.leading),
        "multiplicity": multiplicity(fit).map(|m| to_pq(&m)),
        "exact": fit.exact_on_window,
        "stabilized": fit.window_stabilized(),
    })
}

pub fn identity_json(r: &IdentityReport) -> Value {
    let params: serde_json::Map<String, Value> = r
        .parameters
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "identity": r.identity,
        "parameters": params,
        "verdict": r.verdict.as_str(),
        "stabilized": r.stabilized,
        "witness": r.witness,
    })
}

pub fn independence_json(r: &IndependenceReport) -> Value {
    json!({
        "n": r.n,
        "h": r.h,
        "t": r.t,
        "rank": r.rank,
        "expected": r.expected.to_string(),
        "stabilized": r.stabilized,
        "verdict": r.verdict.as_str(),
    })
}

pub fn submodule_json(r: &SubmoduleReport) -> Value {
    json!({
        "p": r.p,
        "d_sub": degree_json(r.d_sub),
        "d_full": degree_json(r.d_full),
        "verdict": r.verdict.as_str(),
    })
}

pub fn corpus_json(results: &[CorpusResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "n": r.n,
                    "d": r.degree(),
                    "multiplicity": r.multiplicity().map(|m| to_pq(&m)),
                    "stabilized": r.stabilized(),
                    "zero_module": r.zero_module,
                    "verdict": r.verdict.as_str(),
                    "notes": r.notes,
                })
            })
            .collect(),
    )
}

fn looks_numeric(s: &str) -> bool {
    let s = s.strip_prefix('-').unwrap_or(s);
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '.')
}

/// Aligned table; numeric cells (integers, `p/q`, decimals) are right-aligned.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render = |cells: Vec<&str>, align_numbers: bool| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if align_numbers && looks_numeric(c) {
                    format!("{:>w$}", c, w = widths[i])
                } else {
                    format!("{:<w$}", c, w = widths[i])
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = vec![render(headers.to_vec(), false)];
    out.push(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .join("  "),
    );
    for row in rows {
        let cells: Vec<&str> = (0..cols)
            .map(|i| row.get(i).map_or("", String::as_str))
            .collect();
        out.push(render(cells, true));
    }
    out.join("\n") + "\n"
}

pub fn fit_table(n: usize, fit: &HilbertFit) -> String {
    let rows: Vec<Vec<String>> = fit
        .samples
        .iter()
        .map(|s| {
            vec![
                s.t.to_string(),
                s.value.to_string(),
                if s.stabilized { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    let mut out = table(&["t", "h(t)", "stabilized"], &rows);
    out.push_str(&format!("n = {}\n", n));
    out.push_str(&format!("degree = {}\n", fit.degree));
    out.push_str(&format!("leading = {}\n", to_pq(&fit.leading)));
    if let Some(m) = multiplicity(fit) {
        out.push_str(&format!("multiplicity = {}\n", to_pq(&m)));
    }
    out.push_str(&format!(
        "fit window = {}..={}\n",
        fit.fit_window.0, fit.fit_window.1
    ));
    out
}

pub fn corpus_table(results: &[CorpusResult]) -> String {
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.n.to_string(),
                r.degree().map_or_else(
                    || {
                        if r.zero_module {
                            "zero".into()
                        } else {
                            "?".into()
                        }
                    },
                    |d| d.to_string(),
                ),
                r.multiplicity().map_or_else(|| "-".into(), |m| to_pq(&m)),
                if r.stabilized() { "yes" } else { "no" }.into(),
                format!("{:.3}", r.runtime.as_secs_f64()),
                r.verdict.as_str().into(),
            ]
        })
        .collect();
    let mut out = table(
        &["name", "n", "d", "e", "stabilized", "runtime_s", "verdict"],
        &rows,
    );
    for r in results.iter().filter(|r| !r.notes.is_empty()) {
        out.push_str(&format!("{}: {}\n", r.name, r.notes.join("; ")));
    }
    out
}

/// Counts of each verdict.
pub fn tally<I: IntoIterator<Item = Verdict>>(vs: I) -> (usize, usize, usize) {
    vs.into_iter().fold((0, 0, 0), |(p, f, i), v| match v {
        Verdict::Pass => (p + 1, f, i),
        Verdict::Fail => (p, f + 1, i),
        Verdict::Inconclusive => (p, f, i + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_right_align() {
        let t = table(
            &["name", "value"],
            &[
                vec!["a".into(), "1".into()],
                vec!["bbbbbbb".into(), "1/12".into()],
            ],
        );
        assert_eq!(
            t,
            "name     value\n-------  -----\na            1\nbbbbbbb   1/12\n"
        );
    }

    #[test]
    fn tally_counts() {
        assert_eq!(
            tally([Verdict::Pass, Verdict::Pass, Verdict::Inconclusive]),
            (2, 0, 1)
        );
    }
}
