use thiserror::Error;
use twistlab_core::twistcore::{bar, psi, t_act_class, ClassRep, TwistError};

use crate::syntax::{line_col, parse, Expr, ExprKind, Span, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{error} (at {start}..{end})", start = span.start, end = span.end)]
pub struct EvalError {
    pub error: TwistError,
    pub span: Span,
}

impl EvalError {
    /// Message with the 1-based line and column of the failing subexpression.
    pub fn located(&self, src: &str) -> String {
        let (line, col) = line_col(src, self.span.start);
        format!("line {line}, column {col}: {}", self.error)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

pub fn eval(expr: &Expr) -> Result<ClassRep, EvalError> {
    match &expr.kind {
        ExprKind::Literal(c) => Ok(c.clone()),
        ExprKind::Product(a, b) => {
            let (l, r) = (eval(a)?, eval(b)?);
            psi(&l, &r).map_err(|error| EvalError {
                error,
                span: expr.span,
            })
        }
        ExprKind::Inverse(a) => Ok(bar(&eval(a)?)),
        ExprKind::Act(z, a) => Ok(t_act_class(z, &eval(a)?)),
    }
}

pub fn eval_str(src: &str) -> Result<ClassRep, ExprError> {
    Ok(eval(&parse(src)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(src: &str) -> String {
        eval_str(src).unwrap().to_string()
    }

    #[test]
    fn element_times_inverse_is_a_unit() {
        let src = "[abA | 1/3 + theta ; 1/5 | 2/7] * [abA | 1/3 + theta ; 1/5 | 2/7]^-1";
        assert_eq!(run(src), "[e | 1/3 + 1*theta ; 1/5 | 0]");
    }

    #[test]
    fn b_then_b_inverse_adds_phases() {
        assert_eq!(
            run("[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 1/8]"),
            "[e | 0 ; 1/3 | 3/8]"
        );
    }

    #[test]
    fn action_prefix() {
        assert_eq!(run("1/2 @ [e | 0 ; 0 | 1/4]"), "[e | 0 ; 0 | 3/4]");
        assert_eq!(run("theta @ [b | 0 ; 0 | 0]"), "[b | 0 ; 0 | 0 + 1*theta]");
    }

    #[test]
    fn mismatched_bases_name_both_points() {
        let src = "[a | 0 ; 0 | 0] *\n [a | 0 ; 0 | 0]";
        let err = match eval_str(src) {
            Err(ExprError::Eval(e)) => e,
            other => panic!("{other:?}"),
        };
        match &err.error {
            TwistError::NotComposable { left, right } => {
                assert!(left.contains("[a | 0 ; 0 | 0]"));
                assert!(right.contains("[a | 0 ; 0 | 0]"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            err.span,
            Span {
                start: 0,
                end: src.len()
            }
        );
        assert!(err.located(src).starts_with("line 1, column 1"));
    }
}
