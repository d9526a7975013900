//! Front end for `schubert-ic`: input parsing, report emitters and the
//! verification sweep. The `schubert` binary is a thin layer over this.

pub mod error;
pub mod input;
pub mod report;
pub mod sweep;

pub use error::CliError;
