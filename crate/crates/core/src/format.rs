//! Vertex-list text format: a header line `n m`, then `m` rows of `n`
//! integers. A row may instead read `alpha i j` for the interval vector with
//! ones in positions `i..=j` (1-based). Blank lines and `#` comments are
//! skipped.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::make_interval_vector;
use crate::lattice::IntVec;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_vertex_list(text: &str) -> Result<(usize, Vec<IntVec>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line `n m`"))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| parse_err(hl, format!("bad header: {e}")))?;
    let [n, m] = head[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    if n == 0 {
        return Err(parse_err(hl, "dimension must be positive"));
    }
    let mut rows = Vec::with_capacity(m);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let row = if toks[0] == "alpha" {
            let idx: Vec<usize> = toks[1..]
                .iter()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| parse_err(ln, format!("bad interval index: {e}")))?;
            let [i, j] = idx[..] else {
                return Err(parse_err(ln, "expected `alpha i j`"));
            };
            make_interval_vector(n, i, j)
                .map_err(|e| parse_err(ln, e.to_string()))?
                .to_intvec()
        } else {
            let coords: Vec<BigInt> = toks
                .iter()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| parse_err(ln, format!("bad integer: {e}")))?;
            if coords.len() != n {
                return Err(parse_err(
                    ln,
                    format!("expected {n} coordinates, found {}", coords.len()),
                ));
            }
            IntVec::new(coords)
        };
        rows.push(row);
    }
    if rows.len() != m {
        return Err(parse_err(
            hl,
            format!("header declares {m} rows, found {}", rows.len()),
        ));
    }
    if m == 0 {
        return Err(Error::EmptyInput("vertex list"));
    }
    Ok((n, rows))
}

pub fn write_vertex_list(n: usize, rows: &[IntVec]) -> String {
    let mut out = format!("{n} {}\n", rows.len());
    for r in rows {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}
