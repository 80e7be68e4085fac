//! Document format, built-in examples, seeded instance generators and the
//! `hgh` command-line front end for `hypergraph-homology`.

pub mod commands;
pub mod document;
pub mod fixtures;
pub mod random;
pub mod report;

pub use commands::{run, Outcome};
pub use document::{parse_document, DocumentError, EdgeDocument, HypergraphDocument};
