//! Syntax tree for the `.geo` construction-and-assertion language.

/// 1-based position of a token in the original source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub statements: Vec<Stmt>,
    /// The original source, line by line; spans index into this text and
    /// diagnostics quote it.
    pub source_lines: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjKind {
    Point,
    Line,
    Circle,
}

impl ObjKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            ObjKind::Point => "point",
            ObjKind::Line => "line",
            ObjKind::Circle => "circle",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StmtKind {
    /// `triangle A B C`: binds the three vertex names.
    Triangle { names: [String; 3] },
    /// `point|line|circle NAME = expr` (single assignment).
    Decl {
        kind: ObjKind,
        name: String,
        expr: Expr,
    },
    /// `assert pred(args)`.
    Assert { assertion: Assertion },
    /// `forall t in (0,1): assert pred(args)` — the assertion is sampled
    /// over a grid of t plus seeded draws.
    Forall { var: String, assertion: Assertion },
    /// `emit "label"`: a figure label.
    Emit { label: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Assertion {
    pub pred: PredName,
    pub args: Vec<Expr>,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredName {
    Concyclic,
    Collinear,
    Parallel,
    Perpendicular,
    Concurrent,
    Tangent,
    On,
    EqualLength,
    IsMidpoint,
    Parallelogram,
}

impl PredName {
    pub const ALL: [PredName; 10] = [
        PredName::Concyclic,
        PredName::Collinear,
        PredName::Parallel,
        PredName::Perpendicular,
        PredName::Concurrent,
        PredName::Tangent,
        PredName::On,
        PredName::EqualLength,
        PredName::IsMidpoint,
        PredName::Parallelogram,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PredName::Concyclic => "concyclic",
            PredName::Collinear => "collinear",
            PredName::Parallel => "parallel",
            PredName::Perpendicular => "perpendicular",
            PredName::Concurrent => "concurrent",
            PredName::Tangent => "tangent",
            PredName::On => "on",
            PredName::EqualLength => "equal_length",
            PredName::IsMidpoint => "is_midpoint",
            PredName::Parallelogram => "parallelogram",
        }
    }

    pub fn from_name(s: &str) -> Option<PredName> {
        PredName::ALL.into_iter().find(|p| p.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// `func(arg, ...)`.
    Call { func: String, args: Vec<Expr> },
    /// A declared name, triangle vertex or `forall` variable.
    Ident(String),
    /// A numeric literal (side parameters, lerp amounts).
    Number(f64),
    /// A point literal `(x, y)`.
    Pair(f64, f64),
}
