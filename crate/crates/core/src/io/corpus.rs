use std::fmt;

use crate::arith::{is_squarefree, largest_prime_factor};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::polygon::verify_certificate;
use crate::repgen::LatticeVector;
use crate::wide::Wide;

/// The published witnesses, one row per line, `±` entries expanded.
pub const CORPUS_TEXT: &str = include_str!("../../data/corpus.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Table1,
    Table2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusRow {
    pub m: u64,
    pub p: u64,
    pub vectors: Vec<LatticeVector>,
    pub source: Source,
}

impl CorpusRow {
    pub fn certificate(&self) -> Certificate {
        Certificate::from_vectors(self.m, self.vectors.clone())
    }
}

impl fmt::Display for CorpusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let src = match self.source {
            Source::Table1 => 1,
            Source::Table2 => 2,
        };
        write!(f, "m={} p={} src={src} :", self.m, self.p)?;
        for (i, v) in self.vectors.iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            write!(f, "{sep}{},{}", v.x, v.y)?;
        }
        Ok(())
    }
}

/// Loads and checks the embedded corpus.
pub fn load_corpus() -> Result<Vec<CorpusRow>> {
    parse_corpus(CORPUS_TEXT)
}

/// Parses corpus text; any row that fails to parse or verify aborts the load.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusRow>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1;
            let row = parse_row(l).map_err(|reason| Error::CorpusCorrupt { line, reason })?;
            check_row(&row).map_err(|reason| Error::CorpusCorrupt { line, reason })?;
            Ok(row)
        })
        .collect()
}

fn field<'a>(token: Option<&'a str>, key: &str) -> std::result::Result<&'a str, String> {
    token
        .and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| format!("expected {key}=..."))
}

fn parse_row(line: &str) -> std::result::Result<CorpusRow, String> {
    let (head, body) = line.split_once(':').ok_or("missing ':'")?;
    let mut tokens = head.split_whitespace();
    let m = field(tokens.next(), "m")?.parse::<u64>().map_err(|e| format!("m: {e}"))?;
    let p = field(tokens.next(), "p")?.parse::<u64>().map_err(|e| format!("p: {e}"))?;
    let source = match field(tokens.next(), "src")? {
        "1" => Source::Table1,
        "2" => Source::Table2,
        s => return Err(format!("unknown source {s:?}")),
    };
    if tokens.next().is_some() {
        return Err("unexpected token before ':'".into());
    }
    let vectors = body
        .split(';')
        .map(|pair| {
            let (x, y) = pair.trim().split_once(',').ok_or_else(|| format!("bad pair {pair:?}"))?;
            let x: Wide = x.trim().parse().map_err(|_| format!("bad integer {x:?}"))?;
            let y: Wide = y.trim().parse().map_err(|_| format!("bad integer {y:?}"))?;
            Ok(LatticeVector { x, y })
        })
        .collect::<std::result::Result<Vec<_>, String>>()?;
    Ok(CorpusRow { m, p, vectors, source })
}

fn check_row(row: &CorpusRow) -> std::result::Result<(), String> {
    if !is_squarefree(row.m) {
        return Err(format!("m = {} is not square-free", row.m));
    }
    if row.m % 4 != 3 {
        return Err(format!("m = {} is not 3 mod 4", row.m));
    }
    if largest_prime_factor(row.m) != Some(row.p) {
        return Err(format!("p = {} is not the largest prime factor of {}", row.p, row.m));
    }
    if row.vectors.len() as u64 != row.p {
        return Err(format!("{} vectors for p = {}", row.vectors.len(), row.p));
    }
    let report = verify_certificate(&row.certificate());
    if !report.valid {
        let msg: Vec<String> = report.failures.iter().map(ToString::to_string).collect();
        return Err(msg.join("; "));
    }
    Ok(())
}
