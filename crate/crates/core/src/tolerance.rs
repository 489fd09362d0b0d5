//! Process-wide absolute tolerance used by every comparison on degrees.
//!
//! Degrees are `f64`; equalities and inequalities in the graph predicates are
//! evaluated with an absolute slack `ε` (default `1e-9`). The value is global so
//! that the CLI can override it once from the environment.

use std::sync::atomic::{AtomicU64, Ordering};

/// Default absolute tolerance.
pub const DEFAULT_EPSILON: f64 = 1e-9;

// f64 bits of DEFAULT_EPSILON; 0 means "unset".
static EPSILON_BITS: AtomicU64 = AtomicU64::new(0);

/// Current tolerance.
pub fn epsilon() -> f64 {
    match EPSILON_BITS.load(Ordering::Relaxed) {
        0 => DEFAULT_EPSILON,
        bits => f64::from_bits(bits),
    }
}

/// Override the tolerance for the whole process.
///
/// Returns `false` (and leaves the value unchanged) if `eps` is not a finite,
/// non-negative number.
pub fn set_epsilon(eps: f64) -> bool {
    if !eps.is_finite() || eps < 0.0 {
        return false;
    }
    // 0.0 has all-zero bits, which collides with the "unset" marker; store the
    // smallest subnormal instead so that an explicit zero tolerance still works.
    let stored = if eps == 0.0 { f64::from_bits(1) } else { eps };
    EPSILON_BITS.store(stored.to_bits(), Ordering::Relaxed);
    true
}

/// `a == b` within tolerance.
#[inline]
pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= epsilon()
}

/// `a <= b` within tolerance.
#[inline]
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + epsilon()
}

/// `a < b` with a gap strictly larger than the tolerance.
#[inline]
pub fn strictly_lt(a: f64, b: f64) -> bool {
    a < b - epsilon()
}

/// Degree values within tolerance of zero read as zero.
#[inline]
pub fn is_zero(x: f64) -> bool {
    x.abs() <= epsilon()
}
