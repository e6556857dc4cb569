//! Command-line front end: JSON requests in, JSON reports, CSV and SVG out.

pub mod corpus;
pub mod error;
pub mod plot;
pub mod request;
pub mod run;

pub use error::{CliError, CliResult, ErrorCode};
pub use request::{parse_request, AnalysisRequest, Command, MonoidJson};
pub use run::{run, Report};
