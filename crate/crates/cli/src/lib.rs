//! Family corpus, randomized arc suites, batch verification and report
//! emission around `stratlab-core`.

pub mod arcs;
pub mod corpus;
pub mod report;
pub mod suites;

pub use corpus::{Corpus, CorpusError, FamilyRecord, Geometry, SpiralKind, SpiralRecord};
pub use report::{OutputWriter, RunReport};
pub use suites::{run_suite, CheckResult, SuiteError, SuiteOutput, SUITE_NAMES};
