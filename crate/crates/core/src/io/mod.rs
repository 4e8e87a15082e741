//! Text format, built-in examples, and report rendering.

pub mod builtin;
pub mod format;
pub mod report;

pub use builtin::{builtin, builtin_algebra, BUILTIN_NAMES};
pub use format::{parse_algebra, parse_rational, render_algebra};
pub use report::{analyze, render_report, AnalysisReport, AnalyzeOptions, Format, IdentityStatus};
