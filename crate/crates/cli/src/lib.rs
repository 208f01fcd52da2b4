//! File formats, SVG rendering and the `affframe` command line.
//!
//! - [`points`]: CSV point lists, exact (`p/q`) or decimal.
//! - [`profile`]: invariant profiles as JSON.
//! - [`svg`]: polyline rendering.
//! - [`app`]: the subcommands; [`app::run`] is the whole program.

pub mod app;
pub mod error;
pub mod literal;
pub mod points;
pub mod profile;
pub mod svg;

pub use app::run;
pub use error::CliError;
