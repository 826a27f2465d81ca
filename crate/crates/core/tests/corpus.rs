use equigon::io::{load_corpus, parse_corpus, CORPUS_TEXT};
use equigon::polygon::{assemble_convex, verify_certificate};
use equigon::{canonicalize, LatticeVector, Wide};
use proptest::prelude::*;
use sha2::{Digest, Sha256};

const CORPUS_SHA256: &str = "ea61849464a93cef726866f91d98e884bd8b73acbab053e041b0bffb2340a8ae";

#[test]
fn corpus_is_unchanged() {
    let digest = Sha256::digest(CORPUS_TEXT.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, CORPUS_SHA256);
}

#[test]
fn every_row_verifies_and_assembles() {
    for row in load_corpus().unwrap() {
        let cert = row.certificate();
        let report = verify_certificate(&cert);
        assert!(report.valid, "m={}: {:?}", row.m, report.failures);
        assert!(report.advisories.is_empty(), "m={}: {:?}", row.m, report.advisories);
        let poly = assemble_convex(&cert).unwrap();
        assert!(poly.is_equilateral() && poly.is_strictly_convex(), "m={}", row.m);
    }
}

#[test]
fn canonicalize_is_idempotent_on_corpus() {
    for row in load_corpus().unwrap() {
        let once = canonicalize(&row.certificate()).unwrap();
        assert_eq!(canonicalize(&once).unwrap(), once, "m={}", row.m);
        let mut a = once.vectors.clone();
        let mut b = row.vectors.clone();
        a.sort();
        b.sort();
        // corpus rows are already primitive
        assert_eq!(a, b, "m={}", row.m);
    }
}

#[test]
fn largest_entries_survive_parsing() {
    let rows = load_corpus().unwrap();
    let row = rows.iter().find(|r| r.m == 111546435).unwrap();
    let side: Wide = "46923183273602".parse().unwrap();
    assert_eq!(row.certificate().side_sq, side.square());
    assert!(row.vectors.contains(&LatticeVector::new(-45189222912898i64, -1196604960i64)));
}

fn tamper(text: &str, row: usize, entry: usize, coord: usize, delta: i64) -> String {
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let (head, body) = lines[row].split_once(" : ").unwrap();
    let mut pairs: Vec<[Wide; 2]> = body
        .split("; ")
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            [x.parse().unwrap(), y.parse().unwrap()]
        })
        .collect();
    let e = entry % pairs.len();
    pairs[e][coord] = &pairs[e][coord] + &Wide::from(delta);
    let body: Vec<String> = pairs.iter().map(|[x, y]| format!("{x},{y}")).collect();
    lines[row] = format!("{head} : {}", body.join("; "));
    lines.join("\n")
}

proptest! {
    #[test]
    fn any_single_tamper_is_caught(
        row in 0usize..22,
        entry in 0usize..23,
        coord in 0usize..2,
        delta in prop_oneof![Just(-1i64), Just(1i64)],
    ) {
        let text = tamper(CORPUS_TEXT, row, entry, coord, delta);
        prop_assert!(parse_corpus(&text).is_err());
    }
}
