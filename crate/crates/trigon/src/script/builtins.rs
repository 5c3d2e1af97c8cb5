//! The binding table between script builtins and kernel/centers operations:
//! every grammar function resolves to exactly one operation, with a fixed
//! signature the parser checks and the evaluator dispatches on.

/// Value types the script language knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ty {
    Point,
    Line,
    Circle,
    Num,
}

impl Ty {
    pub fn name(&self) -> &'static str {
        match self {
            Ty::Point => "point",
            Ty::Line => "line",
            Ty::Circle => "circle",
            Ty::Num => "number",
        }
    }
}

/// Signature shapes; `Intersect`-style entries carry their own overload rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sig {
    /// Exact parameter list.
    Fixed(&'static [Ty], Ty),
    /// `intersect(a, b)`: two of line|circle, unique intersection point.
    Intersect,
    /// `second_intersect(a, b, anchor)`: two of line|circle (at least one
    /// circle) and an anchor point; the intersection farthest from the
    /// anchor.
    SecondIntersect,
    /// One argument that must literally be a triangle vertex name.
    VertexArg(Ty),
}

#[derive(Debug, Clone, Copy)]
pub struct Builtin {
    pub name: &'static str,
    pub sig: Sig,
    /// The kernel/centers operation the name resolves to.
    pub binding: &'static str,
}

use Ty::{Circle as C, Line as L, Num as N, Point as P};

pub static BUILTINS: &[Builtin] = &[
    Builtin { name: "line", sig: Sig::Fixed(&[P, P], L), binding: "Line::through" },
    Builtin { name: "circle", sig: Sig::Fixed(&[P, P, P], C), binding: "Circle::through" },
    Builtin { name: "circle_tangent", sig: Sig::Fixed(&[P, P, L], C), binding: "Circle::through_tangent" },
    Builtin { name: "intersect", sig: Sig::Intersect, binding: "Line::intersect / Circle::intersect / Circle::intersect_line" },
    Builtin { name: "second_intersect", sig: Sig::SecondIntersect, binding: "second_intersection" },
    Builtin { name: "project", sig: Sig::Fixed(&[P, L], P), binding: "Line::project" },
    Builtin { name: "reflect_line", sig: Sig::Fixed(&[P, L], P), binding: "Line::reflect" },
    Builtin { name: "reflect_point", sig: Sig::Fixed(&[P, P], P), binding: "Point::reflect_through" },
    Builtin { name: "midpoint", sig: Sig::Fixed(&[P, P], P), binding: "Point::midpoint" },
    Builtin { name: "lerp", sig: Sig::Fixed(&[P, P, N], P), binding: "Point::lerp" },
    Builtin { name: "isogonal", sig: Sig::Fixed(&[P], P), binding: "isogonal_conjugate" },
    Builtin { name: "anticomplement", sig: Sig::Fixed(&[P], P), binding: "anticomplement" },
    Builtin { name: "centroid", sig: Sig::Fixed(&[], P), binding: "BasicCenters::centroid" },
    Builtin { name: "circumcenter", sig: Sig::Fixed(&[], P), binding: "BasicCenters::circumcenter" },
    Builtin { name: "circumcircle", sig: Sig::Fixed(&[], C), binding: "BasicCenters::circumcircle" },
    Builtin { name: "orthocenter", sig: Sig::Fixed(&[], P), binding: "BasicCenters::orthocenter" },
    Builtin { name: "lemoine", sig: Sig::Fixed(&[], P), binding: "BasicCenters::lemoine" },
    Builtin { name: "ninepoint", sig: Sig::Fixed(&[], C), binding: "BasicCenters::euler_circle" },
    Builtin { name: "brocard1", sig: Sig::Fixed(&[], P), binding: "BrocardData::z1" },
    Builtin { name: "brocard2", sig: Sig::Fixed(&[], P), binding: "BrocardData::z2" },
    Builtin { name: "brocard_circle", sig: Sig::Fixed(&[], C), binding: "BrocardData::circle" },
    Builtin { name: "fixed_point_parallel", sig: Sig::VertexArg(P), binding: "fixed_point_parallel" },
    Builtin { name: "fixed_point_antiparallel", sig: Sig::VertexArg(P), binding: "fixed_point_antiparallel" },
    Builtin { name: "hagge_circle", sig: Sig::Fixed(&[P], C), binding: "hagge" },
    Builtin { name: "orthocentroidal_circle", sig: Sig::Fixed(&[], C), binding: "orthocentroidal" },
    Builtin { name: "radical_axis", sig: Sig::Fixed(&[C, C], L), binding: "Circle::radical_axis" },
];

pub fn find_builtin(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_bound() {
        let mut names: Vec<&str> = BUILTINS.iter().map(|b| b.name).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before);
        for b in BUILTINS {
            assert!(!b.binding.is_empty(), "{} has no binding", b.name);
        }
    }

    #[test]
    fn grammar_function_list_is_complete() {
        // the grammar names exactly these builtins
        let expected = [
            "line", "circle", "circle_tangent", "intersect", "second_intersect", "project",
            "reflect_line", "reflect_point", "midpoint", "lerp", "isogonal", "anticomplement",
            "centroid", "circumcenter", "circumcircle", "orthocenter", "lemoine", "ninepoint",
            "brocard1", "brocard2", "brocard_circle", "fixed_point_parallel",
            "fixed_point_antiparallel", "hagge_circle", "orthocentroidal_circle", "radical_axis",
        ];
        assert_eq!(BUILTINS.len(), expected.len());
        for name in expected {
            assert!(find_builtin(name).is_some(), "missing builtin {name}");
        }
    }
}
