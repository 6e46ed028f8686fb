//! Input documents, poset generators, verification dispatch and JSON/DOT
//! output for the `duality` command-line tool.

pub mod app;
pub mod document;
pub mod emit;
mod error;
pub mod generate;
pub mod verify;

pub use document::{parse_poset, PosetDocument};
pub use emit::{emit_document, Format};
pub use error::CliError;
pub use verify::{run_verify, Claim, Status, VerificationReport, VerifyOptions};
