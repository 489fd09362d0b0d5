use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::{self, approx_eq};

/// A membership / non-membership pair `(μ, ν)`.
///
/// A degree is *Pythagorean* when both components lie in `[0, 1]` and
/// `μ² + ν² ≤ 1` (within tolerance). The fields are public so that candidate
/// data can be held and reported on by [`crate::PfGraph::validate`]; use
/// [`PfDegree::new`] to get a checked value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PfDegree {
    pub mu: f64,
    pub nu: f64,
}

impl PfDegree {
    /// The `(0, 0)` degree; on an edge it means "no edge".
    pub const ZERO: PfDegree = PfDegree { mu: 0.0, nu: 0.0 };

    /// Checked constructor.
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        let d = PfDegree { mu, nu };
        if d.is_pythagorean() {
            Ok(d)
        } else {
            Err(Error::InvalidDegree { mu, nu })
        }
    }

    /// Unchecked constructor for candidate data.
    pub const fn raw(mu: f64, nu: f64) -> Self {
        PfDegree { mu, nu }
    }

    pub fn in_unit_range(&self) -> bool {
        let eps = tolerance::epsilon();
        (-eps..=1.0 + eps).contains(&self.mu) && (-eps..=1.0 + eps).contains(&self.nu)
    }

    pub fn is_pythagorean(&self) -> bool {
        self.in_unit_range() && self.mu * self.mu + self.nu * self.nu <= 1.0 + tolerance::epsilon()
    }

    /// Both components read as zero.
    pub fn is_zero(&self) -> bool {
        tolerance::is_zero(self.mu) && tolerance::is_zero(self.nu)
    }

    /// Hesitation degree `√(1 − μ² − ν²)`, clamped to 0 when the radicand is
    /// within tolerance of zero.
    pub fn hesitation(&self) -> Result<f64> {
        if !self.is_pythagorean() {
            return Err(Error::InvalidDegree {
                mu: self.mu,
                nu: self.nu,
            });
        }
        let radicand = 1.0 - self.mu * self.mu - self.nu * self.nu;
        if radicand <= tolerance::epsilon() {
            Ok(0.0)
        } else {
            Ok(radicand.sqrt())
        }
    }

    /// Intersection combine: `(min μ, max ν)`.
    pub fn min_max(self, other: PfDegree) -> PfDegree {
        PfDegree {
            mu: self.mu.min(other.mu),
            nu: self.nu.max(other.nu),
        }
    }

    /// Union combine: `(max μ, min ν)`.
    pub fn max_min(self, other: PfDegree) -> PfDegree {
        PfDegree {
            mu: self.mu.max(other.mu),
            nu: self.nu.min(other.nu),
        }
    }

    /// Componentwise equality within tolerance.
    pub fn approx_eq(&self, other: &PfDegree) -> bool {
        approx_eq(self.mu, other.mu) && approx_eq(self.nu, other.nu)
    }
}

/// Free-function form of [`PfDegree::hesitation`].
pub fn hesitation(d: PfDegree) -> Result<f64> {
    d.hesitation()
}

/// Free-function form of [`PfDegree::min_max`].
pub fn degree_min_max(a: PfDegree, b: PfDegree) -> PfDegree {
    a.min_max(b)
}

/// Free-function form of [`PfDegree::max_min`].
pub fn degree_max_min(a: PfDegree, b: PfDegree) -> PfDegree {
    a.max_min(b)
}

impl fmt::Display for PfDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

impl From<(f64, f64)> for PfDegree {
    fn from((mu, nu): (f64, f64)) -> Self {
        PfDegree::raw(mu, nu)
    }
}
