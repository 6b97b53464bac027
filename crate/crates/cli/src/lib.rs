#![forbid(unsafe_code)]

//! File formats, document serialization, and CSV reporting behind the
//! `antimagic` command-line tool.

pub mod csv;
pub mod document;
pub mod error;
pub mod formats;

pub use error::CliError;
