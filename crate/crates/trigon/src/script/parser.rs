//! Hand-written recursive-descent parser for `.geo` scripts, with
//! line/column diagnostics. Parsing also resolves names and checks arity
//! and types against the builtin table, so a script that parses cleanly can
//! only fail at evaluation time for geometric reasons.

use std::collections::HashMap;

use super::ast::{Assertion, Expr, ExprKind, ObjKind, PredName, Script, Span, Stmt, StmtKind};
use super::builtins::{find_builtin, Sig, Ty};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
}

/// A parse or evaluation problem, pointing into the original source.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub line: u32,
    pub col: u32,
    /// The source line the position indexes into.
    pub excerpt: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "error at {}:{}: {}", self.line, self.col, self.message)?;
        writeln!(f, "  {}", self.excerpt)?;
        write!(f, "  {}^", " ".repeat(self.col.saturating_sub(1) as usize))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Equals,
    Colon,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Str(_) => "string literal".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Equals => "`=`".to_string(),
            Tok::Colon => "`:`".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokenize(mut self, lines: &[String]) -> Result<Vec<Token>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.chars.peek() {
                if c == '#' {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else if c.is_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let span = Span {
                line: self.line,
                col: self.col,
            };
            let Some(&c) = self.chars.peek() else {
                return Ok(out);
            };
            let tok = match c {
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '=' => {
                    self.bump();
                    Tok::Equals
                }
                ':' => {
                    self.bump();
                    Tok::Colon
                }
                '"' => {
                    self.bump();
                    let mut s = String::new();
                    loop {
                        match self.bump() {
                            Some('"') => break,
                            Some('\n') | None => {
                                return Err(diag_at(span, "unterminated string literal", lines))
                            }
                            Some(ch) => s.push(ch),
                        }
                    }
                    Tok::Str(s)
                }
                c if c.is_ascii_digit() || c == '-' || c == '.' => {
                    let mut s = String::new();
                    if c == '-' {
                        s.push(c);
                        self.bump();
                        if !self.chars.peek().is_some_and(|c| c.is_ascii_digit() || *c == '.') {
                            return Err(diag_at(span, "expected a digit after `-`", lines));
                        }
                    }
                    while let Some(&ch) = self.chars.peek() {
                        if ch.is_ascii_digit() || ch == '.' {
                            s.push(ch);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    if let Some(&ch) = self.chars.peek() {
                        if ch == 'e' || ch == 'E' {
                            s.push(ch);
                            self.bump();
                            if let Some(&sign) = self.chars.peek() {
                                if sign == '+' || sign == '-' {
                                    s.push(sign);
                                    self.bump();
                                }
                            }
                            while let Some(&d) = self.chars.peek() {
                                if d.is_ascii_digit() {
                                    s.push(d);
                                    self.bump();
                                } else {
                                    break;
                                }
                            }
                        }
                    }
                    match s.parse::<f64>() {
                        Ok(n) if n.is_finite() => Tok::Number(n),
                        _ => return Err(diag_at(span, format!("invalid number `{s}`"), lines)),
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&ch) = self.chars.peek() {
                        if ch.is_alphanumeric() || ch == '_' || ch == '\'' {
                            s.push(ch);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                other => {
                    return Err(diag_at(span, format!("unexpected character `{other}`"), lines))
                }
            };
            out.push(Token { tok, span });
        }
    }
}

fn diag_at(span: Span, message: impl Into<String>, lines: &[String]) -> Diagnostic {
    Diagnostic {
        severity: Severity::Error,
        message: message.into(),
        line: span.line,
        col: span.col,
        excerpt: lines
            .get(span.line.saturating_sub(1) as usize)
            .cloned()
            .unwrap_or_default(),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    lines: Vec<String>,
    /// Symbol table: declared names and their types.
    symbols: HashMap<String, Ty>,
    vertices: Option<[String; 3]>,
    /// End-of-input position for diagnostics.
    eof: Span,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> Span {
        self.peek().map(|t| t.span).unwrap_or(self.eof)
    }

    fn err(&self, span: Span, message: impl Into<String>) -> Diagnostic {
        diag_at(span, message, &self.lines)
    }

    fn expect(&mut self, want: Tok, what: &str) -> PResult<Span> {
        match self.next() {
            Some(t) if t.tok == want => Ok(t.span),
            Some(t) => Err(self.err(
                t.span,
                format!("expected {what}, found {}", t.tok.describe()),
            )),
            None => Err(self.err(self.eof, format!("expected {what}, found end of input"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> PResult<(String, Span)> {
        match self.next() {
            Some(Token {
                tok: Tok::Ident(s),
                span,
            }) => Ok((s, span)),
            Some(t) => Err(self.err(
                t.span,
                format!("expected {what}, found {}", t.tok.describe()),
            )),
            None => Err(self.err(self.eof, format!("expected {what}, found end of input"))),
        }
    }

    fn declare(&mut self, name: &str, ty: Ty, span: Span) -> PResult<()> {
        if self.symbols.contains_key(name) {
            return Err(self.err(span, format!("`{name}` is already declared")));
        }
        self.symbols.insert(name.to_string(), ty);
        Ok(())
    }

    fn parse_script(&mut self) -> PResult<Script> {
        let mut statements = Vec::new();
        while self.peek().is_some() {
            statements.push(self.parse_stmt()?);
        }
        Ok(Script {
            statements,
            source_lines: self.lines.clone(),
        })
    }

    #[allow(clippy::redundant_guards)] // matching float literals in patterns is its own lint
    fn parse_stmt(&mut self) -> PResult<Stmt> {
        let (kw, span) = self.expect_ident("a statement keyword")?;
        let kind = match kw.as_str() {
            "triangle" => {
                if self.vertices.is_some() {
                    return Err(self.err(span, "the triangle is already declared"));
                }
                let (n1, s1) = self.expect_ident("a vertex name")?;
                let (n2, s2) = self.expect_ident("a vertex name")?;
                let (n3, s3) = self.expect_ident("a vertex name")?;
                self.declare(&n1, Ty::Point, s1)?;
                self.declare(&n2, Ty::Point, s2)?;
                self.declare(&n3, Ty::Point, s3)?;
                self.vertices = Some([n1.clone(), n2.clone(), n3.clone()]);
                StmtKind::Triangle {
                    names: [n1, n2, n3],
                }
            }
            "point" | "line" | "circle" => {
                let kind = match kw.as_str() {
                    "point" => ObjKind::Point,
                    "line" => ObjKind::Line,
                    _ => ObjKind::Circle,
                };
                let (name, name_span) = self.expect_ident("a name to declare")?;
                self.expect(Tok::Equals, "`=`")?;
                let (expr, ty) = self.parse_expr()?;
                let want = match kind {
                    ObjKind::Point => Ty::Point,
                    ObjKind::Line => Ty::Line,
                    ObjKind::Circle => Ty::Circle,
                };
                if ty != want {
                    return Err(self.err(
                        expr.span,
                        format!(
                            "`{name}` is declared as a {} but the expression has type {}",
                            want.name(),
                            ty.name()
                        ),
                    ));
                }
                self.declare(&name, want, name_span)?;
                StmtKind::Decl { kind, name, expr }
            }
            "assert" => StmtKind::Assert {
                assertion: self.parse_assertion()?,
            },
            "forall" => {
                let (var, var_span) = self.expect_ident("a parameter name")?;
                let (kw_in, in_span) = self.expect_ident("`in`")?;
                if kw_in != "in" {
                    return Err(self.err(in_span, format!("expected `in`, found `{kw_in}`")));
                }
                self.expect(Tok::LParen, "`(0,1)`")?;
                let lo = self.here();
                match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        ..
                    }) if n == 0.0 => (),
                    _ => return Err(self.err(lo, "the sampling domain must be written `(0,1)`")),
                }
                self.expect(Tok::Comma, "`,`")?;
                let hi = self.here();
                match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        ..
                    }) if n == 1.0 => {}
                    _ => return Err(self.err(hi, "the sampling domain must be written `(0,1)`")),
                }
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::Colon, "`:`")?;
                let (kw_assert, ka_span) = self.expect_ident("`assert`")?;
                if kw_assert != "assert" {
                    return Err(
                        self.err(ka_span, format!("expected `assert`, found `{kw_assert}`"))
                    );
                }
                self.declare(&var, Ty::Num, var_span)?;
                let assertion = self.parse_assertion()?;
                self.symbols.remove(&var); // scoped to this statement
                StmtKind::Forall { var, assertion }
            }
            "emit" => match self.next() {
                Some(Token {
                    tok: Tok::Str(label),
                    ..
                }) => StmtKind::Emit { label },
                Some(t) => {
                    return Err(self.err(
                        t.span,
                        format!("expected a string label, found {}", t.tok.describe()),
                    ))
                }
                None => {
                    return Err(self.err(self.eof, "expected a string label, found end of input"))
                }
            },
            other => {
                return Err(self.err(
                    span,
                    format!(
                        "unknown statement `{other}` (expected triangle, point, line, circle, assert, forall or emit)"
                    ),
                ))
            }
        };
        Ok(Stmt { kind, span })
    }

    fn parse_assertion(&mut self) -> PResult<Assertion> {
        let (name, span) = self.expect_ident("a predicate name")?;
        let Some(pred) = PredName::from_name(&name) else {
            return Err(self.err(span, format!("unknown predicate `{name}`")));
        };
        self.expect(Tok::LParen, "`(`")?;
        let (args, tys) = self.parse_args()?;
        self.check_pred_args(pred, &args, &tys, span)?;
        Ok(Assertion { pred, args, span })
    }

    /// Parses a parenthesized, comma-separated argument list; the opening
    /// `(` has already been consumed.
    fn parse_args(&mut self) -> PResult<(Vec<Expr>, Vec<Ty>)> {
        let mut args = Vec::new();
        let mut tys = Vec::new();
        if matches!(self.peek(), Some(t) if t.tok == Tok::RParen) {
            self.next();
            return Ok((args, tys));
        }
        loop {
            let (expr, ty) = self.parse_expr()?;
            args.push(expr);
            tys.push(ty);
            match self.next() {
                Some(t) if t.tok == Tok::Comma => continue,
                Some(t) if t.tok == Tok::RParen => break,
                Some(t) => {
                    return Err(self.err(
                        t.span,
                        format!("expected `,` or `)`, found {}", t.tok.describe()),
                    ))
                }
                None => return Err(self.err(self.eof, "unclosed argument list")),
            }
        }
        Ok((args, tys))
    }

    fn parse_expr(&mut self) -> PResult<(Expr, Ty)> {
        match self.next() {
            Some(Token {
                tok: Tok::Ident(name),
                span,
            }) => {
                if matches!(self.peek(), Some(t) if t.tok == Tok::LParen) {
                    self.next();
                    let (args, tys) = self.parse_args()?;
                    let ty = self.check_call(&name, &args, &tys, span)?;
                    Ok((
                        Expr {
                            kind: ExprKind::Call { func: name, args },
                            span,
                        },
                        ty,
                    ))
                } else {
                    let Some(&ty) = self.symbols.get(&name) else {
                        return Err(self.err(span, format!("`{name}` is not declared")));
                    };
                    Ok((
                        Expr {
                            kind: ExprKind::Ident(name),
                            span,
                        },
                        ty,
                    ))
                }
            }
            Some(Token {
                tok: Tok::Number(n),
                span,
            }) => Ok((
                Expr {
                    kind: ExprKind::Number(n),
                    span,
                },
                Ty::Num,
            )),
            Some(Token {
                tok: Tok::LParen,
                span,
            }) => {
                let xs = self.here();
                let x = match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        ..
                    }) => n,
                    _ => return Err(self.err(xs, "expected a number in a point literal")),
                };
                self.expect(Tok::Comma, "`,`")?;
                let ys = self.here();
                let y = match self.next() {
                    Some(Token {
                        tok: Tok::Number(n),
                        ..
                    }) => n,
                    _ => return Err(self.err(ys, "expected a number in a point literal")),
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok((
                    Expr {
                        kind: ExprKind::Pair(x, y),
                        span,
                    },
                    Ty::Point,
                ))
            }
            Some(t) => Err(self.err(
                t.span,
                format!("expected an expression, found {}", t.tok.describe()),
            )),
            None => Err(self.err(self.eof, "expected an expression, found end of input")),
        }
    }

    fn check_call(&self, name: &str, args: &[Expr], tys: &[Ty], span: Span) -> PResult<Ty> {
        let Some(builtin) = find_builtin(name) else {
            return Err(self.err(span, format!("unknown function `{name}`")));
        };
        if needs_triangle(name) && self.vertices.is_none() {
            return Err(self.err(
                span,
                format!("`{name}` needs the ambient triangle; declare one with `triangle A B C` first"),
            ));
        }
        match builtin.sig {
            Sig::Fixed(params, ret) => {
                if tys.len() != params.len() {
                    return Err(self.err(
                        span,
                        format!(
                            "`{name}` takes {} argument(s), got {}",
                            params.len(),
                            tys.len()
                        ),
                    ));
                }
                for (i, (&got, &want)) in tys.iter().zip(params.iter()).enumerate() {
                    if got != want {
                        return Err(self.err(
                            args[i].span,
                            format!(
                                "argument {} of `{name}` must be a {}, got {}",
                                i + 1,
                                want.name(),
                                got.name()
                            ),
                        ));
                    }
                }
                Ok(ret)
            }
            Sig::Intersect => {
                if tys.len() != 2 {
                    return Err(self.err(span, format!("`intersect` takes 2 arguments, got {}", tys.len())));
                }
                for (i, &ty) in tys.iter().enumerate() {
                    if !matches!(ty, Ty::Line | Ty::Circle) {
                        return Err(self.err(
                            args[i].span,
                            format!("argument {} of `intersect` must be a line or circle, got {}", i + 1, ty.name()),
                        ));
                    }
                }
                Ok(Ty::Point)
            }
            Sig::SecondIntersect => {
                if tys.len() != 3 {
                    return Err(self.err(
                        span,
                        format!("`second_intersect` takes 3 arguments, got {}", tys.len()),
                    ));
                }
                let mut circles = 0;
                for (i, &ty) in tys.iter().take(2).enumerate() {
                    match ty {
                        Ty::Circle => circles += 1,
                        Ty::Line => {}
                        other => {
                            return Err(self.err(
                                args[i].span,
                                format!(
                                    "argument {} of `second_intersect` must be a line or circle, got {}",
                                    i + 1,
                                    other.name()
                                ),
                            ))
                        }
                    }
                }
                if circles == 0 {
                    return Err(self.err(
                        span,
                        "`second_intersect` needs at least one circle (two lines meet at most once)",
                    ));
                }
                if tys[2] != Ty::Point {
                    return Err(self.err(args[2].span, "the anchor of `second_intersect` must be a point"));
                }
                Ok(Ty::Point)
            }
            Sig::VertexArg(ret) => {
                if args.len() != 1 {
                    return Err(self.err(span, format!("`{name}` takes 1 argument, got {}", args.len())));
                }
                let ok = matches!(&args[0].kind, ExprKind::Ident(id)
                    if self.vertices.as_ref().is_some_and(|v| v.contains(id)));
                if !ok {
                    return Err(self.err(
                        args[0].span,
                        format!("the argument of `{name}` must be one of the triangle's vertex names"),
                    ));
                }
                Ok(ret)
            }
        }
    }

    fn check_pred_args(&self, pred: PredName, args: &[Expr], tys: &[Ty], span: Span) -> PResult<()> {
        use PredName::*;
        let fixed: Option<(&[Ty], &str)> = match pred {
            Concyclic => Some((&[Ty::Point, Ty::Point, Ty::Point, Ty::Point], "4 points")),
            Collinear => Some((&[Ty::Point, Ty::Point, Ty::Point], "3 points")),
            Parallel => Some((&[Ty::Line, Ty::Line], "2 lines")),
            Perpendicular => Some((&[Ty::Line, Ty::Line], "2 lines")),
            Concurrent => Some((&[Ty::Line, Ty::Line, Ty::Line], "3 lines")),
            EqualLength => Some((&[Ty::Point, Ty::Point, Ty::Point, Ty::Point], "4 points")),
            IsMidpoint => Some((&[Ty::Point, Ty::Point, Ty::Point], "3 points")),
            Parallelogram => Some((&[Ty::Point, Ty::Point, Ty::Point, Ty::Point], "4 points")),
            Tangent | On => None,
        };
        if let Some((params, what)) = fixed {
            if tys.len() != params.len() {
                return Err(self.err(
                    span,
                    format!("`{}` takes {what}, got {} argument(s)", pred.name(), tys.len()),
                ));
            }
            for (i, (&got, &want)) in tys.iter().zip(params.iter()).enumerate() {
                if got != want {
                    return Err(self.err(
                        args[i].span,
                        format!(
                            "argument {} of `{}` must be a {}, got {}",
                            i + 1,
                            pred.name(),
                            want.name(),
                            got.name()
                        ),
                    ));
                }
            }
            return Ok(());
        }
        match pred {
            PredName::Tangent => {
                let ok = matches!(
                    tys,
                    [Ty::Circle, Ty::Circle] | [Ty::Line, Ty::Circle] | [Ty::Circle, Ty::Line]
                );
                if !ok {
                    return Err(self.err(
                        span,
                        "`tangent` takes two circles, or a line and a circle",
                    ));
                }
            }
            PredName::On => {
                let ok = matches!(tys, [Ty::Point, Ty::Circle] | [Ty::Point, Ty::Line]);
                if !ok {
                    return Err(self.err(span, "`on` takes a point and a circle or line"));
                }
            }
            _ => unreachable!(),
        }
        Ok(())
    }
}

/// Whether a builtin consults the ambient triangle.
fn needs_triangle(name: &str) -> bool {
    matches!(
        name,
        "isogonal"
            | "anticomplement"
            | "centroid"
            | "circumcenter"
            | "circumcircle"
            | "orthocenter"
            | "lemoine"
            | "ninepoint"
            | "brocard1"
            | "brocard2"
            | "brocard_circle"
            | "fixed_point_parallel"
            | "fixed_point_antiparallel"
            | "hagge_circle"
            | "orthocentroidal_circle"
    )
}

/// Parses a script; total (never panics or aborts), returning the first
/// error as a positioned diagnostic.
pub fn parse(text: &str) -> Result<Script, Vec<Diagnostic>> {
    let lines: Vec<String> = text.lines().map(|l| l.to_string()).collect();
    let tokens = Lexer::new(text).tokenize(&lines).map_err(|d| vec![d])?;
    let eof = tokens.last().map_or(
        Span { line: 1, col: 1 },
        |t| Span {
            line: t.span.line,
            col: t.span.col + 1,
        },
    );
    let mut parser = Parser {
        tokens,
        pos: 0,
        lines,
        symbols: HashMap::new(),
        vertices: None,
        eof,
    };
    parser.parse_script().map_err(|d| vec![d])
}
