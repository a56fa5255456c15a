//! Front end for `tri-inscribe`: polygon files, solver dispatch, JSON and SVG
//! output, and the benchmark harness behind the `inscribe-tri` binary.

pub mod bench;
pub mod input;
pub mod output;
pub mod solve;

pub use input::{format_polygon, parse_polygon_file, parse_polygon_str, read_vertices};
pub use output::{render_svg, JsonReport, SCHEMA_VERSION};
pub use solve::{run_solver, run_solver_on_input, SolveRequest, VariantName};

use tri_inscribe::Error;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Solver(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// 2 for bad input, 3 when the solver could not produce an answer.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Solver(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoTriangle | Error::EmptyInterior | Error::DegenerateBase | Error::AnchorNotInterior => {
                CliError::Solver(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}
