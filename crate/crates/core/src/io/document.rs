use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::polygon::verify_certificate;
use crate::repgen::LatticeVector;
use crate::wide::Wide;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Search,
    Constructed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub certificate: Certificate,
    pub provenance: Provenance,
}

impl CertificateDocument {
    pub fn new(certificate: Certificate, provenance: Provenance) -> CertificateDocument {
        CertificateDocument { schema_version: SCHEMA_VERSION.to_string(), certificate, provenance }
    }
}

/// On-disk shape; every integer is a decimal string.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    schema_version: String,
    m: String,
    n: String,
    side_sq: String,
    vectors: Vec<[String; 2]>,
    provenance: Provenance,
}

pub fn emit_certificate(doc: &CertificateDocument) -> String {
    let c = &doc.certificate;
    let raw = Raw {
        schema_version: doc.schema_version.clone(),
        m: c.m.to_string(),
        n: c.n.to_string(),
        side_sq: c.side_sq.to_string(),
        vectors: c.vectors.iter().map(|v| [v.x.to_string(), v.y.to_string()]).collect(),
        provenance: doc.provenance,
    };
    // pretty layout, but one line per vector
    let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let vectors: Vec<String> = raw.vectors.iter().map(|[x, y]| format!("    [{}, {}]", q(x), q(y))).collect();
    format!(
        "{{\n  \"schema_version\": {},\n  \"m\": {},\n  \"n\": {},\n  \"side_sq\": {},\n  \"vectors\": [\n{}\n  ],\n  \"provenance\": {}\n}}\n",
        q(&raw.schema_version),
        q(&raw.m),
        q(&raw.n),
        q(&raw.side_sq),
        vectors.join(",\n"),
        serde_json::to_string(&raw.provenance).expect("enum serializes"),
    )
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn int<T: std::str::FromStr>(field: &str, s: &str) -> Result<T> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(field, format!("{s:?} is not a decimal integer")));
    }
    s.parse().map_err(|_| parse_err(field, format!("{s:?} is out of range")))
}

/// Parses a document and verifies the certificate it carries.
pub fn parse_certificate(text: &str) -> Result<CertificateDocument> {
    let raw: Raw = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(parse_err("schema_version", format!("unsupported version {:?}", raw.schema_version)));
    }
    let m: u64 = int("m", &raw.m)?;
    let n: usize = int("n", &raw.n)?;
    let side_sq: Wide = int("side_sq", &raw.side_sq)?;
    let vectors = raw
        .vectors
        .iter()
        .enumerate()
        .map(|(i, [x, y])| {
            Ok(LatticeVector { x: int(&format!("vectors[{i}][0]"), x)?, y: int(&format!("vectors[{i}][1]"), y)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let certificate = Certificate { m, n, side_sq, vectors };
    let report = verify_certificate(&certificate);
    if !report.valid {
        let msg: Vec<String> = report.failures.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidCertificate(msg.join("; ")));
    }
    Ok(CertificateDocument { schema_version: raw.schema_version, certificate, provenance: raw.provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::load_corpus;

    fn triangle() -> CertificateDocument {
        let v = [(2, 0), (-1, 1), (-1, -1)].map(|(x, y)| LatticeVector::new(x, y));
        CertificateDocument::new(Certificate::from_vectors(3, v.to_vec()), Provenance::Search)
    }

    #[test]
    fn round_trip() {
        let doc = triangle();
        let text = emit_certificate(&doc);
        assert!(text.contains("\"side_sq\": \"4\""));
        assert_eq!(parse_certificate(&text).unwrap(), doc);

        let row = load_corpus().unwrap().into_iter().find(|r| r.m == 111546435).unwrap();
        let doc = CertificateDocument::new(row.certificate(), Provenance::Paper);
        let text = emit_certificate(&doc);
        assert!(text.contains("\"-45189222912898\""));
        assert_eq!(parse_certificate(&text).unwrap(), doc);
    }

    #[test]
    fn rejects_bad_documents() {
        let text = emit_certificate(&triangle());
        let wrong_side = text.replace("\"side_sq\": \"4\"", "\"side_sq\": \"5\"");
        assert!(matches!(parse_certificate(&wrong_side), Err(Error::InvalidCertificate(_))));

        let extra = text.replacen('{', "{\n  \"colour\": \"red\",", 1);
        match parse_certificate(&extra) {
            Err(Error::Parse { location, message }) => {
                assert!(location.starts_with("line 2"), "{location}");
                assert!(message.contains("colour"));
            }
            other => panic!("{other:?}"),
        }

        let bad_int = text.replace("\"-1\"", "\"-1.0\"");
        match parse_certificate(&bad_int) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "vectors[1][0]"),
            other => panic!("{other:?}"),
        }

        let number = text.replace("\"m\": \"3\"", "\"m\": 3");
        assert!(matches!(parse_certificate(&number), Err(Error::Parse { .. })));
    }
}
