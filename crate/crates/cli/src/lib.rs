//! Expression language, verification suites and JSON reports for `twistlab`.

pub mod eval;
pub mod report;
pub mod suites;
pub mod syntax;

pub use eval::{eval, eval_str, EvalError, ExprError};
pub use report::{FailureRecord, Report};
pub use suites::{default_samples, run_suite, SuiteError, SUITES};
pub use syntax::{parse, parse_angle, parse_word, Expr, ExprKind, Span, SyntaxError};
