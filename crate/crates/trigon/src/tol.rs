use crate::kernel::GeomError;

/// Numeric thresholds shared by constructions and checks.
///
/// `eps_rel` is the dimensionless pass bound for scale-normalized residuals;
/// `degeneracy_eps` classifies inputs (coincident points, collapsed circles)
/// as degenerate rather than merely inaccurate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_rel: f64,
    pub degeneracy_eps: f64,
}

impl Tolerance {
    pub fn new(eps_rel: f64, degeneracy_eps: f64) -> Result<Tolerance, GeomError> {
        if !(0.0 < degeneracy_eps && degeneracy_eps < eps_rel && eps_rel < 1.0) {
            return Err(GeomError::InvalidTolerance);
        }
        Ok(Tolerance {
            eps_rel,
            degeneracy_eps,
        })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_rel: 1e-9,
            degeneracy_eps: 1e-12,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_enforced() {
        assert!(Tolerance::new(1e-9, 1e-12).is_ok());
        assert!(Tolerance::new(1e-12, 1e-9).is_err());
        assert!(Tolerance::new(2.0, 1e-12).is_err());
        assert!(Tolerance::new(1e-9, 0.0).is_err());
    }
}
