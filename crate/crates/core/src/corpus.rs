//! Corpus files: one cyclic module `A_n / I` per file.
//!
//! ```text
//! # comment
//! n=2
//! gen: d1
//! gen: x2*d2 - 1
//! expect_d: 2
//! expect_h: 1, 4, 10
//! filtration: 1, x1
//! shift: 0, 1
//! sub: x1
//! height: 1
//! ```
//!
//! The first non-comment line fixes `n`. `gen:` lines list the generators of
//! `I` (none at all means `I = 0`). The remaining keys are optional:
//!
//! - `expect_d:` expected module dimension,
//! - `expect_h:` expected Hilbert function values `h(0), h(1), ...`,
//! - `filtration:` generators `u_i` of an extra good filtration, with shifts
//!   from the following `shift:` line (all zero when absent); a `shift:` line
//!   with no open `filtration:` shifts the standard generator `1`,
//! - `sub:` an element generating a submodule to compare dimensions with,
//! - `height:` the `h` of a monomial prime `(x_1, ..., x_h)` presented by `I`,
//!   enabling the independence check.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::filtration::{GoodFiltrationSpec, LeftIdealPresentation};
use crate::parser::{parse, parse_list};
use crate::weyl::DiffOp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub n: usize,
    pub ideal: LeftIdealPresentation,
    pub expect_d: Option<u32>,
    pub expect_h: Vec<usize>,
    pub height: Option<usize>,
    pub filtrations: Vec<GoodFiltrationSpec>,
    pub subs: Vec<DiffOp>,
}

fn parse_ints<T: std::str::FromStr>(text: &str) -> Option<Vec<T>> {
    text.split(',').map(|v| v.trim().parse().ok()).collect()
}

pub fn parse_entry(name: &str, text: &str) -> Result<CorpusEntry> {
    let err = |line: usize, message: String| Error::Corpus {
        file: name.to_string(),
        line,
        message,
    };
    let mut n: Option<usize> = None;
    let mut gens = Vec::new();
    let mut expect_d = None;
    let mut expect_h = Vec::new();
    let mut height = None;
    let mut subs = Vec::new();
    // (generators, shifts, line of the filtration key)
    let mut filtrations: Vec<(Vec<DiffOp>, Option<Vec<u32>>, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = n else {
            let value = line
                .strip_prefix("n=")
                .or_else(|| line.strip_prefix("n ="))
                .ok_or_else(|| err(line_no, "the first line must be n=<int>".into()))?;
            let v: usize = value
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("bad n: {}", value)))?;
            if v == 0 {
                return Err(err(line_no, "n must be positive".into()));
            }
            n = Some(v);
            continue;
        };
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(line_no, format!("expected key: value, got {:?}", line)))?;
        let value = value.trim();
        let wrap = |e: Error| err(line_no, e.to_string());
        match key.trim() {
            "gen" => gens.push(parse(value, n).map_err(wrap)?),
            "expect_d" => {
                expect_d = Some(
                    value
                        .parse()
                        .map_err(|_| err(line_no, format!("bad expect_d: {}", value)))?,
                )
            }
            "expect_h" => {
                expect_h = parse_ints(value)
                    .ok_or_else(|| err(line_no, format!("bad expect_h: {}", value)))?
            }
            "height" => {
                height = Some(
                    value
                        .parse()
                        .map_err(|_| err(line_no, format!("bad height: {}", value)))?,
                )
            }
            "sub" => subs.push(parse(value, n).map_err(wrap)?),
            "filtration" => filtrations.push((parse_list(value, n).map_err(wrap)?, None, line_no)),
            "shift" => {
                let shifts: Vec<u32> = parse_ints(value)
                    .ok_or_else(|| err(line_no, format!("bad shift: {}", value)))?;
                match filtrations.last_mut() {
                    Some((_, s @ None, _)) => *s = Some(shifts),
                    _ => filtrations.push((vec![DiffOp::one(n)], Some(shifts), line_no)),
                }
            }
            other => return Err(err(line_no, format!("unknown key {:?}", other))),
        }
    }
    let n = n.ok_or_else(|| err(1, "missing n=<int> line".into()))?;
    let ideal = LeftIdealPresentation::new(n, gens).map_err(|e| err(1, e.to_string()))?;
    let filtrations = filtrations
        .into_iter()
        .map(|(g, s, line)| {
            let s = s.unwrap_or_else(|| vec![0; g.len()]);
            GoodFiltrationSpec::new(ideal.clone(), g, s).map_err(|e| err(line, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusEntry {
        name: name.to_string(),
        n,
        ideal,
        expect_d,
        expect_h,
        height,
        filtrations,
        subs,
    })
}

pub fn load_file(path: &Path) -> Result<CorpusEntry> {
    let text = fs::read_to_string(path).map_err(|e| Error::Corpus {
        file: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    let name = path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    );
    parse_entry(&name, &text)
}

/// Loads every `*.txt` file of a directory, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let io = |e: std::io::Error| Error::Corpus {
        file: dir.display().to_string(),
        line: 0,
        message: e.to_string(),
    };
    let mut paths = Vec::new();
    for item in fs::read_dir(dir).map_err(io)? {
        let path = item.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "txt") {
            paths.push(path);
        }
    }
    paths.sort();
    paths.iter().map(|p| load_file(p)).collect()
}
