//! The registry: one entry per problem, lemma, theorem and corollary, each
//! binding a construction and a residual assertion to the statement it
//! verifies.

use super::checks::{self, EvalFn};

/// What a check consumes beyond the triangle itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputSpec {
    TriangleOnly,
    /// Side parameters t ∈ (0,1): the grid {0.2, 0.5, 0.8} plus two seeded
    /// draws per run.
    SideParameter,
    /// A seeded pivot strictly inside the triangle.
    InteriorPivot,
    /// Other seeded auxiliary data (points on sides, point pairs, a
    /// similarity multiplier).
    AuxiliaryRandom,
}

impl InputSpec {
    pub fn name(&self) -> &'static str {
        match self {
            InputSpec::TriangleOnly => "triangle-only",
            InputSpec::SideParameter => "triangle+side-parameter",
            InputSpec::InteriorPivot => "triangle+interior-pivot",
            InputSpec::AuxiliaryRandom => "triangle+auxiliary-random-data",
        }
    }
}

/// A registry entry: statement metadata plus the executable check.
#[derive(Clone)]
pub struct TheoremCheck {
    /// Stable identifier, unique across releases.
    pub id: &'static str,
    /// Where the statement sits in the numbered development.
    pub source: &'static str,
    /// The claim the residual verifies, in the configuration's own names.
    pub statement: &'static str,
    pub inputs: InputSpec,
    /// Interpretation caveats: what the statement literally says versus the
    /// reading implemented here, where those differ.
    pub notes: Option<&'static str>,
    /// Experimental entries are reported but excluded from the pass/fail gate.
    pub experimental: bool,
    pub(crate) eval: EvalFn,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .field("source", &self.source)
            .field("inputs", &self.inputs.name())
            .field("experimental", &self.experimental)
            .finish()
    }
}

macro_rules! entry {
    ($id:literal, $source:literal, $statement:literal, $inputs:expr, $eval:path) => {
        TheoremCheck {
            id: $id,
            source: $source,
            statement: $statement,
            inputs: $inputs,
            notes: None,
            experimental: false,
            eval: $eval,
        }
    };
    ($id:literal, $source:literal, $statement:literal, $inputs:expr, $eval:path, notes: $notes:literal) => {
        TheoremCheck {
            id: $id,
            source: $source,
            statement: $statement,
            inputs: $inputs,
            notes: Some($notes),
            experimental: false,
            eval: $eval,
        }
    };
}

static REGISTRY: &[TheoremCheck] = &[
    entry!(
        "p1_fixed",
        "Problem 1",
        "For P on BC with PQ parallel to AB and PR parallel to AC, the circle (AQR) passes through the fixed point A_X",
        InputSpec::SideParameter,
        checks::p1_fixed
    ),
    entry!(
        "p1_symmedian",
        "Problem 1",
        "The fixed point lies on the symmedian: the directed angle (AB, AG) equals (AA_X, AC)",
        InputSpec::TriangleOnly,
        checks::p1_symmedian
    ),
    entry!(
        "p2_fixed",
        "Problem 2",
        "For P on BC with PQ, PR antiparallel to AB, AC, the circle (AQR) passes through the fixed point A_Y",
        InputSpec::SideParameter,
        checks::p2_fixed,
        notes: "Antiparallelism is realized by concyclicity: Q is the second intersection of circle (ABP) with line AC, R of circle (ACP) with line AB."
    ),
    entry!(
        "p2_median",
        "Problem 2",
        "Line AA_Y passes through the midpoint of BC: A_Y lies on the A-median",
        InputSpec::TriangleOnly,
        checks::p2_median
    ),
    entry!(
        "t_ax_proj",
        "Theorem 2.1",
        "A_X is the projection of the circumcenter O on the A-symmedian",
        InputSpec::TriangleOnly,
        checks::t_ax_proj
    ),
    entry!(
        "t_brocard_circle",
        "Theorem 2.2",
        "A_X, B_X, C_X lie on the Brocard circle (diameter OL), forming the second Brocard triangle",
        InputSpec::TriangleOnly,
        checks::t_brocard_circle
    ),
    entry!(
        "lem_mannheim",
        "Lemma 2.1 (Mannheim)",
        "For L, M, N on the sides and cevians AA', BB', CC' concurrent at K with A' on (AMN), B' on (BNL), C' on (CLM): A', B', C', K are concyclic",
        InputSpec::AuxiliaryRandom,
        checks::lem_mannheim
    ),
    entry!(
        "lem_chord_mid",
        "Lemma 2.2",
        "The midpoints of the chords AS, BT, CU cut by the cevians through P lie on the circle with diameter OP",
        InputSpec::InteriorPivot,
        checks::lem_chord_mid,
        notes: "Alternative reading rejected: a circle with center O and radius OP cannot hold the chord midpoints in general; the right angles at the midpoints force the circle with diameter OP."
    ),
    entry!(
        "t_parallelogram_aycm",
        "Theorem 2.3",
        "B A_Y C A_M is a parallelogram, A_M being the second intersection of ray AA_Y with the circumcircle",
        InputSpec::TriangleOnly,
        checks::t_parallelogram_aycm
    ),
    entry!(
        "cor_ay_reflect",
        "Corollary 2.1",
        "A_Y is the reflection of A_S across line BC",
        InputSpec::TriangleOnly,
        checks::cor_ay_reflect
    ),
    entry!(
        "t_isogonal",
        "Theorem 2.4",
        "A_X is the isogonal conjugate of A_Y",
        InputSpec::TriangleOnly,
        checks::t_isogonal
    ),
    entry!(
        "t_ag_ninepoint",
        "Theorem 2.5",
        "A_G, the midpoint of AA_Y, lies on the nine-point circle",
        InputSpec::TriangleOnly,
        checks::t_ag_ninepoint,
        notes: "Naming convention: M_XY always denotes the midpoint of segment XY (a permuted labeling of M_AB, M_BC, M_CA circulates and is rejected as inconsistent with every later use)."
    ),
    entry!(
        "t_agy_mid",
        "Theorem 2.6",
        "A_GY, the fourth vertex of parallelogram M_AB A_G M_CA A_GY, is the midpoint of AA_M",
        InputSpec::TriangleOnly,
        checks::t_agy_mid
    ),
    entry!(
        "cor_agy_parallel",
        "Corollary 2.2",
        "Line A_X A_GY is parallel to BC",
        InputSpec::TriangleOnly,
        checks::cor_agy_parallel,
        notes: "Skipped per vertex when A_X = A_GY, which happens exactly for the isosceles case AB = AC."
    ),
    entry!(
        "cor_ax_reflect",
        "Corollary 2.3",
        "A_X is the reflection of A_G across the midline M_AB M_CA",
        InputSpec::TriangleOnly,
        checks::cor_ax_reflect
    ),
    entry!(
        "t_anticomplement",
        "Theorem 2.7",
        "A_Y is the anticomplement of A_GY (homothety at G with ratio -2)",
        InputSpec::TriangleOnly,
        checks::t_anticomplement
    ),
    entry!(
        "t_first_brocard",
        "Theorem 2.8",
        "The first Brocard triangle Z_A Z_B Z_C is inscribed in the circle (A_X B_X C_X)",
        InputSpec::TriangleOnly,
        checks::t_first_brocard,
        notes: "Of the two ways to pair the six cevians through Z1 and Z2, only Z_A = BZ1 ∩ CZ2 (cyclically) lands on the circle (A_X B_X C_X); the swapped pairing is kept behind an option for comparison."
    ),
    entry!(
        "cor_z_sym",
        "Corollary 2.4",
        "Z1 and Z2 are symmetric across line OL, and (OZ1, OZ2) = 2α with α = (AZ1, AB)",
        InputSpec::TriangleOnly,
        checks::cor_z_sym
    ),
    entry!(
        "t_owcw",
        "Theorem 2.9",
        "With O_W, C_W the second intersections of lines OA_X and CZ2 with ω₁: O_W C_W is parallel to O Z_A",
        InputSpec::TriangleOnly,
        checks::t_owcw,
        notes: "ω₁/ω₂ are vertex A's tangent circles (ω₁ through A, B tangent to AC at A; ω₂ through A, C tangent to AB at A). Z2 lies on ω₁ and Z1 on ω₂, so the chords anchor at the Brocard points; this resolution of the ambiguous circle names was validated numerically before being frozen."
    ),
    entry!(
        "lem_bwcw",
        "Lemma 2.3",
        "With B_W the second intersection of line BZ1 with ω₂: B_W C_W is parallel to BC",
        InputSpec::TriangleOnly,
        checks::lem_bwcw,
        notes: "Same ω₁/ω₂ resolution as Theorem 2.9; B_W, A, C_W come out collinear on the parallel to BC through A."
    ),
    entry!(
        "t_concur_g",
        "Theorem 2.10",
        "The lines A_X Z_A, B_X Z_B, C_X Z_C are concurrent at the centroid G",
        InputSpec::TriangleOnly,
        checks::t_concur_g
    ),
    entry!(
        "lem_parallelogram",
        "Lemma 2.4",
        "For directly similar apex triangles A'CB, B'AC, C'BA and D completing parallelogram BA'CD: A + D = B' + C'",
        InputSpec::AuxiliaryRandom,
        checks::lem_parallelogram,
        notes: "Phrased as the vertex identity A + D = B' + C', the form the centroid lemma consumes; the parallelogram wording 'A'CDB' merely restates the hypothesis BA'CD, while the substance is BD parallel to A'C and CD parallel to A'B."
    ),
    entry!(
        "lem_centroid_first",
        "Lemma 2.6",
        "G is the centroid of the first Brocard triangle Z_A Z_B Z_C",
        InputSpec::TriangleOnly,
        checks::lem_centroid_first
    ),
    entry!(
        "lem_proj_concur",
        "Lemma 2.7",
        "With X, Y, Z projections of P on the perpendiculars through Q to the sides, and X', Y', Z' projections of Q on AP, BP, CP: XX', YY', ZZ' are concurrent",
        InputSpec::AuxiliaryRandom,
        checks::lem_proj_concur
    ),
    entry!(
        "lem_hagge",
        "Lemma 2.5 (Hagge circle)",
        "Reflecting the circumcircle traces of the cevians through P across the sides gives three points concyclic with H",
        InputSpec::InteriorPivot,
        checks::lem_hagge,
        notes: "Alternative reading rejected: point-reflections through the vertices do not produce a circle through H. The reflections are across the sides BC, CA, AB, as required by the corollaries that identify A_Y B_Y C_Y as a Hagge triangle."
    ),
    entry!(
        "lem_ratio",
        "Lemma 2.8",
        "For isogonal conjugates S, S' with X, X' on the circumcircle and V = AS' ∩ BC: the signed ratios AS/SX and S'V/VX' are equal",
        InputSpec::InteriorPivot,
        checks::lem_ratio,
        notes: "Directed (signed) lengths along each cevian, compared by cross-multiplication."
    ),
    entry!(
        "lem_hagge_concur",
        "Lemma 2.9",
        "A_2 A_3, B_2 B_3, C_2 C_3 are concurrent at the pivot P, the A_3 points being the second intersections of the Hagge circle with the altitude lines",
        InputSpec::InteriorPivot,
        checks::lem_hagge_concur
    ),
    entry!(
        "t_ay_proj",
        "Theorem 3.1",
        "A_Y is the projection of the orthocenter H on the A-median",
        InputSpec::TriangleOnly,
        checks::t_ay_proj
    ),
    entry!(
        "cor_orthocentroidal",
        "Corollary 3.1",
        "The triangles A_Y B_Y C_Y and H_A H_B H_C are inscribed in the circle with diameter GH",
        InputSpec::TriangleOnly,
        checks::cor_orthocentroidal
    ),
    entry!(
        "cor_hagge_L",
        "Corollary 3.2",
        "The Hagge circle of the Lemoine point L is the orthocentroidal circle",
        InputSpec::TriangleOnly,
        checks::cor_hagge_l
    ),
    entry!(
        "t_x39",
        "Theorem 3.3",
        "The radical axis of (A_X B_X C_X) and (A_Y B_Y C_Y) passes through X(39), the midpoint of the Brocard points",
        InputSpec::TriangleOnly,
        checks::t_x39
    ),
    entry!(
        "t_l_concur",
        "Theorem 3.4",
        "A_Y H_A, B_Y H_B, C_Y H_C are concurrent at the Lemoine point L",
        InputSpec::TriangleOnly,
        checks::t_l_concur
    ),
    entry!(
        "lem_lemoine_sub",
        "Lemma 3.1",
        "L is also the Lemoine point of the triangle H_A H_B H_C",
        InputSpec::TriangleOnly,
        checks::lem_lemoine_sub
    ),
    entry!(
        "t_ln_parallel",
        "Theorem 3.5",
        "With L_N the cut of the perpendicular bisector of A_X A_GY on line AL: A_X A_Y is parallel to L_N M_BC",
        InputSpec::TriangleOnly,
        checks::t_ln_parallel,
        notes: "Skipped per vertex when A_X = A_GY (isosceles at the vertex), where L_N is undefined."
    ),
    entry!(
        "t_tangent_boc",
        "Theorem 3.6",
        "The circle (A_X A_GY L_N) is tangent to the circle (BOC)",
        InputSpec::TriangleOnly,
        checks::t_tangent_boc,
        notes: "The tangency can be internal or external depending on the triangle's shape; the residual accepts both."
    ),
    entry!(
        "t_mbc_equal",
        "Theorem 3.7",
        "With A_LX the projection of H on AL: M_BC A_Y = M_BC A_LX",
        InputSpec::TriangleOnly,
        checks::t_mbc_equal
    ),
    entry!(
        "cor_tangent_euler",
        "Corollary 3.3",
        "The circle (A_Y M_BC A_LX) is tangent to the Euler circle",
        InputSpec::TriangleOnly,
        checks::cor_tangent_euler,
        notes: "Skipped per vertex when A_Y = A_LX (isosceles at the vertex)."
    ),
    entry!(
        "t_symmedian_ay",
        "Theorem 3.8",
        "A_Y L_BC is a symmedian of triangle A_Y BC: the signed ratio L_BC B / L_BC C equals -(A_Y B / A_Y C)²",
        InputSpec::TriangleOnly,
        checks::t_symmedian_ay
    ),
    entry!(
        "t_tangent_bhc",
        "Theorem 3.9",
        "The circle (A_Y M_BC A_LX) is tangent to the circle (BHC)",
        InputSpec::TriangleOnly,
        checks::t_tangent_bhc,
        notes: "The tangency can be internal or external depending on the triangle's shape; the residual accepts both."
    ),
    entry!(
        "lem_isogonal_tangent",
        "Lemma 3.2",
        "For D, E on BC with AD, AE isogonal cevians: the circle (ADE) is tangent to the circumcircle",
        InputSpec::AuxiliaryRandom,
        checks::lem_isogonal_tangent
    ),
    entry!(
        "t_primes_on_al",
        "Theorem 3.10",
        "The reflections of A_BY, A_CY across CA, AB lie on line AL",
        InputSpec::TriangleOnly,
        checks::t_primes_on_al
    ),
    entry!(
        "t_alx_mid",
        "Theorem 3.11",
        "A_LX is the midpoint of A'_BY A'_CY",
        InputSpec::TriangleOnly,
        checks::t_alx_mid
    ),
];

/// All registered checks, in a stable order.
pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

/// Look up one check by id.
pub fn find_check(id: &str) -> Option<&'static TheoremCheck> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn at_least_31_entries_with_unique_ids() {
        let reg = registry();
        assert!(reg.len() >= 31, "registry has {} entries", reg.len());
        let mut ids: Vec<&str> = reg.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), reg.len());
    }

    #[test]
    fn every_entry_names_its_source_statement() {
        for c in registry() {
            assert!(!c.source.is_empty(), "{} has no source", c.id);
            assert!(!c.statement.is_empty(), "{} has no statement", c.id);
        }
    }
}
