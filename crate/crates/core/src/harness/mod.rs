//! Instance generators, theorem-verification suites, and empirical searches.

pub mod generate;
pub mod search;
pub mod suites;

pub use generate::{GeneratorKind, GeneratorSpec};
pub use search::{counterexample_hunt, search_constant, ConstantSearchOutcome, HuntOutcome, HuntTarget};
pub use suites::{run_all, run_suite, SuiteConfig, SuiteName, VerificationReport, Violation};
