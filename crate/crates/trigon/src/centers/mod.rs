//! Constructs every named point, circle and derived triangle of the
//! configuration for a given triangle, individually or as a bulk
//! [`Configuration`]. Pure constructors over immutable inputs.

mod basic;
mod brocard;
mod hagge;
mod orthocentroidal;
mod vertex;

pub use basic::{basic_centers, BasicCenters};
pub use brocard::{brocard, BrocardData, BrocardPairing};
pub use hagge::{hagge, HaggeData};
pub use orthocentroidal::{orthocentroidal, OrthocentroidalData};
pub use vertex::{
    fixed_point_antiparallel, fixed_point_parallel, gamma_circles, omega_circles,
    vertex_fixed_points, VertexConfig,
};

use crate::kernel::{GeomError, Point, Triangle, VertexId};
use crate::tol::Tolerance;

/// Options for the bulk constructor.
#[derive(Debug, Clone, Copy, Default)]
pub struct CentersOptions {
    pub brocard_pairing: BrocardPairing,
}

/// The full named-point dictionary for one triangle.
///
/// `orthocentroidal` is `None` when G ≈ H (equilateral input); the Brocard
/// data is always present but carries its own degeneracy flag.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub triangle: Triangle,
    pub basic: BasicCenters,
    pub vertices: [VertexConfig; 3],
    pub brocard: BrocardData,
    pub orthocentroidal: Option<OrthocentroidalData>,
    /// Side midpoints indexed opposite A, B, C: M_BC, M_CA, M_AB.
    pub side_midpoints: [Point; 3],
}

pub fn configuration(t: &Triangle, tol: &Tolerance) -> Result<Configuration, GeomError> {
    configuration_with(t, tol, CentersOptions::default())
}

pub fn configuration_with(
    t: &Triangle,
    tol: &Tolerance,
    options: CentersOptions,
) -> Result<Configuration, GeomError> {
    let basic = basic_centers(t, tol)?;
    let vertices = [
        vertex::vertex_config_with(t, VertexId::A, &basic, tol)?,
        vertex::vertex_config_with(t, VertexId::B, &basic, tol)?,
        vertex::vertex_config_with(t, VertexId::C, &basic, tol)?,
    ];
    let xs = [vertices[0].x, vertices[1].x, vertices[2].x];
    let ys = [vertices[0].y, vertices[1].y, vertices[2].y];
    let brocard = brocard::brocard_with(t, &basic, xs, tol, options.brocard_pairing)?;
    let orthocentroidal = match orthocentroidal::orthocentroidal_with(t, &basic, ys, tol) {
        Ok(data) => Some(data),
        Err(GeomError::EquilateralDegenerate) => None,
        Err(e) => return Err(e),
    };
    let side_midpoints = [
        t.side_midpoint_opposite(VertexId::A),
        t.side_midpoint_opposite(VertexId::B),
        t.side_midpoint_opposite(VertexId::C),
    ];
    Ok(Configuration {
        triangle: *t,
        basic,
        vertices,
        brocard,
        orthocentroidal,
        side_midpoints,
    })
}

impl Configuration {
    pub fn vertex(&self, v: VertexId) -> &VertexConfig {
        &self.vertices[v.index()]
    }

    /// M_BC for A, M_CA for B, M_AB for C.
    pub fn side_midpoint_opposite(&self, v: VertexId) -> Point {
        self.side_midpoints[v.index()]
    }

    /// Every named point in a fixed, stable order (the `centers` table).
    pub fn named_points(&self) -> Vec<(String, Point)> {
        let t = &self.triangle;
        let mut out: Vec<(String, Point)> = Vec::with_capacity(64);
        for v in VertexId::ALL {
            out.push((v.name().to_string(), t.vertex(v)));
        }
        out.push(("M_BC".into(), self.side_midpoints[0]));
        out.push(("M_CA".into(), self.side_midpoints[1]));
        out.push(("M_AB".into(), self.side_midpoints[2]));
        out.push(("G".into(), self.basic.centroid));
        out.push(("O".into(), self.basic.circumcenter));
        out.push(("H".into(), self.basic.orthocenter));
        out.push(("N".into(), self.basic.nine_point_center));
        out.push(("L".into(), self.basic.lemoine));
        for v in VertexId::ALL {
            let vc = self.vertex(v);
            let p = v.name();
            let (nx, pv) = (v.next().name(), v.prev().name());
            out.push((format!("{p}_X"), vc.x));
            out.push((format!("{p}_Y"), vc.y));
            out.push((format!("{p}_S"), vc.s));
            out.push((format!("{p}_M"), vc.m));
            out.push((format!("{p}_O"), vc.antipode));
            out.push((format!("{p}_G"), vc.g));
            out.push((format!("{p}_GY"), vc.gy));
            out.push((format!("{p}_N"), vc.n));
            if let Some(l_n) = vc.l_n {
                out.push((format!("{p}_LN"), l_n));
            }
            out.push((format!("{p}_LX"), vc.lx));
            out.push((format!("{p}_LBC"), vc.l_bc));
            out.push((format!("{p}_{nx}Y"), vc.by));
            out.push((format!("{p}_{pv}Y"), vc.cy));
            out.push((format!("{p}_{nx}Y'"), vc.by_reflected));
            out.push((format!("{p}_{pv}Y'"), vc.cy_reflected));
        }
        out.push(("Z1".into(), self.brocard.z1));
        out.push(("Z2".into(), self.brocard.z2));
        out.push(("X39".into(), self.brocard.midpoint));
        out.push(("Z_A".into(), self.brocard.first_triangle[0]));
        out.push(("Z_B".into(), self.brocard.first_triangle[1]));
        out.push(("Z_C".into(), self.brocard.first_triangle[2]));
        if let Some(oc) = &self.orthocentroidal {
            out.push(("H_A".into(), oc.projections[0]));
            out.push(("H_B".into(), oc.projections[1]));
            out.push(("H_C".into(), oc.projections[2]));
        }
        out
    }
}
