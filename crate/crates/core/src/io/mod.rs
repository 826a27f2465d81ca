//! Serialization: the embedded table corpus, JSON certificate documents and SVG output.

mod corpus;
mod document;
mod svg;

pub use corpus::{load_corpus, parse_corpus, CorpusRow, Source, CORPUS_TEXT};
pub use document::{emit_certificate, parse_certificate, CertificateDocument, Provenance, SCHEMA_VERSION};
pub use svg::emit_svg;
