//! Canonical formatting of scripts. `parse ∘ pretty ∘ parse` is a fixed
//! point: pretty-printing a parsed script and reparsing yields the same
//! tree, which the corpus tests pin down.

use super::ast::{Assertion, Expr, ExprKind, Script, Stmt, StmtKind};

pub fn pretty(script: &Script) -> String {
    let mut out = String::new();
    for stmt in &script.statements {
        out.push_str(&fmt_stmt(stmt));
        out.push('\n');
    }
    out
}

fn fmt_stmt(stmt: &Stmt) -> String {
    match &stmt.kind {
        StmtKind::Triangle { names } => {
            format!("triangle {} {} {}", names[0], names[1], names[2])
        }
        StmtKind::Decl { kind, name, expr } => {
            format!("{} {} = {}", kind.keyword(), name, fmt_expr(expr))
        }
        StmtKind::Assert { assertion } => format!("assert {}", fmt_assertion(assertion)),
        StmtKind::Forall { var, assertion } => {
            format!("forall {var} in (0,1): assert {}", fmt_assertion(assertion))
        }
        StmtKind::Emit { label } => format!("emit \"{label}\""),
    }
}

pub fn fmt_assertion(assertion: &Assertion) -> String {
    let args: Vec<String> = assertion.args.iter().map(fmt_expr).collect();
    format!("{}({})", assertion.pred.name(), args.join(", "))
}

fn fmt_expr(expr: &Expr) -> String {
    match &expr.kind {
        ExprKind::Call { func, args } => {
            let args: Vec<String> = args.iter().map(fmt_expr).collect();
            format!("{func}({})", args.join(", "))
        }
        ExprKind::Ident(name) => name.clone(),
        ExprKind::Number(n) => fmt_num(*n),
        ExprKind::Pair(x, y) => format!("({}, {})", fmt_num(*x), fmt_num(*y)),
    }
}

fn fmt_num(n: f64) -> String {
    // shortest representation that reparses to the same value
    format!("{n}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parser::parse;

    #[test]
    fn pretty_parse_is_a_fixed_point() {
        let src = "triangle A B C   # comment\npoint P=lerp(B,C,0.25)\nassert on(P ,line(B,C) )\nemit \"demo\"";
        let once = pretty(&parse(src).unwrap());
        let twice = pretty(&parse(&once).unwrap());
        assert_eq!(once, twice);
    }
}
