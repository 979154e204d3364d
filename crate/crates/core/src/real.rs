//! Real quadratic dynamics `f_c(x) = x² + c`.
//!
//! Everything downstream reduces to this family: in characteristic
//! coordinates a hyperbolic quadratic orbit is two independent real
//! orbits. This module provides the fixed points, the classification of
//! the real filled Julia set (Cantor subset / full interval / empty), an
//! analytic membership test where a closed form exists, and a finite-depth
//! iterative semi-decision that is sound for escape everywhere.

use crate::error::{Error, Result};

/// The two fixed points `p± = (1 ± √(1 − 4c))/2` of `x² + c`, real iff
/// `c ≤ ¼`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoints {
    pub p_minus: f64,
    pub p_plus: f64,
}

/// Classification of the real filled Julia set `K_R(f_c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RealJuliaClass {
    /// `c < −2`: a Cantor set contained in `[−p₊, p₊]`.
    CantorSubset { half_width: f64 },
    /// `−2 ≤ c ≤ ¼`: exactly the interval `[−p₊, p₊]`.
    FullInterval { half_width: f64 },
    /// `c > ¼`: no bounded real orbits.
    EmptySet,
}

/// Result of iterating to a finite depth.
///
/// `EscapedAt(n)` certifies the true orbit is unbounded (the escape
/// criterion is sound). `BoundedThroughDepth(d)` only says no witness was
/// found within `d` steps; it is not a proof of boundedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitOutcome {
    EscapedAt(u32),
    BoundedThroughDepth(u32),
}

impl OrbitOutcome {
    pub fn escaped(self) -> bool {
        matches!(self, OrbitOutcome::EscapedAt(_))
    }
}

/// One application of `x ↦ x² + c`, saturating overflow to `±f64::MAX`.
///
/// With finite inputs the only non-finite result is `+∞` (from `x²`), so
/// saturation keeps every orbit value finite and NaN-free; the saturated
/// value exceeds every escape radius, so callers report escape at that
/// step.
pub fn step(x: f64, c: f64) -> f64 {
    (x * x + c).clamp(f64::MIN, f64::MAX)
}

/// Radius beyond which an orbit point certifies divergence.
///
/// For `c ≤ ¼` this is the fixed point `p₊`, which is exact: `f_c` is even
/// and `f_c(x) > x` for `x > p₊`, so the orbit of any `|x| > p₊` increases
/// monotonically to ∞, while orbits started in `[−p₊, p₊]` never leave it.
/// For `c > ¼` there is no real fixed point; `max(2, |c|)` is the standard
/// sound growth bound.
pub fn escape_radius(c: f64) -> f64 {
    if c <= 0.25 {
        (1.0 + (1.0 - 4.0 * c).sqrt()) / 2.0
    } else {
        c.abs().max(2.0)
    }
}

/// Fixed points of `x² + c`, present iff `c ≤ ¼` (coincident at `½` when
/// `c = ¼`).
pub fn fixed_points(c: f64) -> Option<FixedPoints> {
    if c > 0.25 {
        return None;
    }
    let s = (1.0 - 4.0 * c).sqrt();
    Some(FixedPoints {
        p_minus: (1.0 - s) / 2.0,
        p_plus: (1.0 + s) / 2.0,
    })
}

/// Classifies `K_R(f_c)` by the trichotomy in `c`.
pub fn classify_julia(c: f64) -> RealJuliaClass {
    if c > 0.25 {
        RealJuliaClass::EmptySet
    } else {
        let half_width = escape_radius(c);
        if c < -2.0 {
            RealJuliaClass::CantorSubset { half_width }
        } else {
            RealJuliaClass::FullInterval { half_width }
        }
    }
}

/// Closed-form membership in `K_R(f_c)` where one exists.
///
/// `Some(|x| ≤ p₊)` for `−2 ≤ c ≤ ¼`, `Some(false)` for `c > ¼`, and
/// `None` in the Cantor regime `c < −2`, where no finite certificate of
/// membership exists and callers must fall back to iteration.
pub fn membership_analytic(x: f64, c: f64) -> Option<bool> {
    if c > 0.25 {
        Some(false)
    } else if c >= -2.0 {
        Some(x.abs() <= escape_radius(c))
    } else {
        None
    }
}

/// Iterates `x ↦ x² + c` up to `depth` times, testing the escape
/// criterion at every index `0 ..= depth`.
///
/// Returns `EscapedAt(n)` at the first `n` with `|xₙ|` beyond the escape
/// radius, else `BoundedThroughDepth(depth)`. Rejects non-finite inputs.
pub fn membership_iterative(x: f64, c: f64, depth: u32) -> Result<OrbitOutcome> {
    if !x.is_finite() {
        return Err(Error::NonFinite { what: "orbit start" });
    }
    if !c.is_finite() {
        return Err(Error::NonFinite { what: "parameter c" });
    }
    let radius = escape_radius(c);
    let mut xn = x;
    for n in 0..depth {
        if xn.abs() > radius {
            return Ok(OrbitOutcome::EscapedAt(n));
        }
        xn = step(xn, c);
    }
    if xn.abs() > radius {
        return Ok(OrbitOutcome::EscapedAt(depth));
    }
    Ok(OrbitOutcome::BoundedThroughDepth(depth))
}
