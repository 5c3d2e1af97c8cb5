use std::f64::consts::PI;

use super::line::Line;

/// An angle between lines, reduced modulo π. This is the "(XY, ZW) (mod π)"
/// calculus: directed angles of full lines, where identities stay valid
/// regardless of point order and triangle orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectedAngle {
    theta: f64,
}

impl DirectedAngle {
    pub fn new(theta: f64) -> DirectedAngle {
        let mut t = theta.rem_euclid(PI);
        if t >= PI {
            t = 0.0;
        }
        DirectedAngle { theta: t }
    }

    /// Directed angle from `l1` to `l2`.
    pub fn between(l1: &Line, l2: &Line) -> DirectedAngle {
        DirectedAngle::new(l2.angle() - l1.angle())
    }

    pub fn radians(&self) -> f64 {
        self.theta
    }

    /// Distance in the mod-π metric: min(|Δ|, π − |Δ|).
    pub fn distance(&self, other: DirectedAngle) -> f64 {
        let d = (self.theta - other.theta).abs();
        d.min(PI - d)
    }

    /// The acute representative, folding θ and π − θ together.
    pub fn acute(&self) -> f64 {
        self.theta.min(PI - self.theta)
    }

    pub fn double(&self) -> DirectedAngle {
        DirectedAngle::new(2.0 * self.theta)
    }
}

impl std::ops::Add for DirectedAngle {
    type Output = DirectedAngle;
    fn add(self, rhs: DirectedAngle) -> DirectedAngle {
        DirectedAngle::new(self.theta + rhs.theta)
    }
}

impl std::ops::Sub for DirectedAngle {
    type Output = DirectedAngle;
    fn sub(self, rhs: DirectedAngle) -> DirectedAngle {
        DirectedAngle::new(self.theta - rhs.theta)
    }
}

/// Directed angle from `l1` to `l2`, mod π.
pub fn directed_angle(l1: &Line, l2: &Line) -> DirectedAngle {
    DirectedAngle::between(l1, l2)
}
