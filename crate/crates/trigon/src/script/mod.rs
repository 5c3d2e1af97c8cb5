//! A small declarative construction-and-assertion language (`.geo` files):
//! single-assignment declarations over the kernel builtins, residual
//! assertions, and `forall` sampling over a side parameter. No control
//! flow; every builtin maps to exactly one kernel/centers operation.

mod ast;
mod builtins;
mod eval;
mod parser;
mod pretty;

pub use ast::{Assertion, Expr, ExprKind, ObjKind, PredName, Script, Span, Stmt, StmtKind};
pub use builtins::{find_builtin, Builtin, Sig, Ty, BUILTINS};
pub use eval::{
    declared_values, evaluate, AssertionReport, AssertionStatus, DeclaredValue, EvalOptions,
    EvalReport, TriangleSource,
};
pub use parser::{parse, Diagnostic, Severity};
pub use pretty::{fmt_assertion, pretty};
