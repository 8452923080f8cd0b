//! Command-line front end for `fermat-core`: triple enumeration and
//! classification, descent traces, parallel exhaustive verification and a
//! seeded property runner, with JSON-lines or text output.

mod app;
pub mod partition;
pub mod props;
pub mod report;
pub mod verify;

pub use app::{run_cli, ExitCode};
pub use partition::partition_range;
pub use verify::{run_verify, Task};
