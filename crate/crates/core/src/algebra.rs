//! Hyperbolic (split-complex) arithmetic and characteristic coordinates.
//!
//! A hyperbolic number is `z = x + j·y` where `j² = 1`. The ring is
//! commutative but not a field: every point on the diagonals `x = ±y`
//! (other than 0) is a zero divisor. The linear change of variables
//! `X = x − y`, `Y = x + y` diagonalizes multiplication: in the idempotent
//! basis `α = ½(1 − j)`, `α* = ½(1 + j)` products act componentwise, and
//! the quadratic form `z z* = x² − y²` becomes the plain product `X·Y`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A hyperbolic number `x + j·y`, components kept finite by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyper {
    x: f64,
    y: f64,
}

/// Characteristic coordinates `(X, Y) = (x − y, x + y)`.
///
/// `u` is the coefficient of `α`, `v` the coefficient of `α*`. Kept as a
/// separate type so code that works on the decoupled axes says so.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharCoords {
    /// X coordinate (coefficient of α).
    pub u: f64,
    /// Y coordinate (coefficient of α*).
    pub v: f64,
}

impl Hyper {
    pub const ZERO: Hyper = Hyper { x: 0.0, y: 0.0 };
    pub const ONE: Hyper = Hyper { x: 1.0, y: 0.0 };
    /// The hyperbolic unit, `j² = 1`.
    pub const J: Hyper = Hyper { x: 0.0, y: 1.0 };
    /// Idempotent `α = ½(1 − j)`; characteristic coordinates `(1, 0)`.
    pub const ALPHA: Hyper = Hyper { x: 0.5, y: -0.5 };
    /// Idempotent `α* = ½(1 + j)`; characteristic coordinates `(0, 1)`.
    pub const ALPHA_STAR: Hyper = Hyper { x: 0.5, y: 0.5 };

    /// Internal constructor for values already known finite (e.g. after
    /// saturating arithmetic in the dynamics code).
    pub(crate) const fn raw(x: f64, y: f64) -> Hyper {
        Hyper { x, y }
    }

    /// Builds `x + j·y`, rejecting NaN and infinities.
    pub fn new(x: f64, y: f64) -> Result<Hyper> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite {
                what: "hyperbolic number component",
            });
        }
        Ok(Hyper { x, y })
    }

    /// Component along 1.
    pub fn x(self) -> f64 {
        self.x
    }

    /// Component along j.
    pub fn y(self) -> f64 {
        self.y
    }

    /// Hyperbolic conjugate `z* = x − j·y`.
    pub fn conj(self) -> Hyper {
        Hyper {
            x: self.x,
            y: -self.y,
        }
    }

    /// The quadratic form `z z* = x² − y²`.
    ///
    /// Equal to the product `X·Y` of the characteristic coordinates.
    pub fn quadratic_form(self) -> f64 {
        self.x * self.x - self.y * self.y
    }

    /// Modulus `√|x² − y²|`. Zero exactly on the diagonals.
    pub fn modulus(self) -> f64 {
        self.quadratic_form().abs().sqrt()
    }

    /// True iff `z ≠ 0` and `x = ±y` (exact comparison on the stored
    /// components). Zero divisors are precisely the nonzero points whose
    /// quadratic form vanishes; no epsilon variant is offered here.
    pub fn is_zero_divisor(self) -> bool {
        (self.x == self.y || self.x == -self.y) && !(self.x == 0.0 && self.y == 0.0)
    }

    /// Characteristic coordinates `(X, Y) = (x − y, x + y)`.
    pub fn to_characteristic(self) -> CharCoords {
        CharCoords {
            u: self.x - self.y,
            v: self.x + self.y,
        }
    }

    /// Inverse of [`to_characteristic`](Hyper::to_characteristic):
    /// `x = (X + Y)/2`, `y = (Y − X)/2`.
    ///
    /// Evaluated as `X/2 + Y/2` so the halvings are exact and large
    /// coordinates cannot overflow in the intermediate sum; the rounded
    /// result is the same as for `(X + Y)/2`.
    pub fn from_characteristic(c: CharCoords) -> Hyper {
        let hu = 0.5 * c.u;
        let hv = 0.5 * c.v;
        Hyper {
            x: hu + hv,
            y: hv - hu,
        }
    }
}

impl CharCoords {
    pub fn new(u: f64, v: f64) -> CharCoords {
        CharCoords { u, v }
    }
}

impl Add for Hyper {
    type Output = Hyper;

    fn add(self, w: Hyper) -> Hyper {
        Hyper {
            x: self.x + w.x,
            y: self.y + w.y,
        }
    }
}

impl Sub for Hyper {
    type Output = Hyper;

    fn sub(self, w: Hyper) -> Hyper {
        Hyper {
            x: self.x - w.x,
            y: self.y - w.y,
        }
    }
}

impl Mul for Hyper {
    type Output = Hyper;

    /// `(x₁ + j y₁)(x₂ + j y₂) = (x₁x₂ + y₁y₂) + j(x₁y₂ + x₂y₁)`.
    fn mul(self, w: Hyper) -> Hyper {
        Hyper {
            x: self.x * w.x + self.y * w.y,
            y: self.x * w.y + self.y * w.x,
        }
    }
}

impl Neg for Hyper {
    type Output = Hyper;

    fn neg(self) -> Hyper {
        Hyper {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl fmt::Display for Hyper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y < 0.0 {
            write!(f, "{} - j*{}", self.x, -self.y)
        } else {
            write!(f, "{} + j*{}", self.x, self.y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(x: f64, y: f64) -> Hyper {
        Hyper::new(x, y).unwrap()
    }

    #[test]
    fn j_squares_to_one() {
        assert_eq!(Hyper::J * Hyper::J, Hyper::ONE);
    }

    #[test]
    fn diagonal_conjugates_multiply_to_zero() {
        assert_eq!(h(1.0, 1.0) * h(1.0, -1.0), Hyper::ZERO);
    }

    #[test]
    fn squaring_expands_componentwise() {
        let z = h(3.0, 1.0);
        assert_eq!(z * z, h(10.0, 6.0));
    }

    #[test]
    fn conjugate_flips_j_component() {
        assert_eq!(h(3.0, 2.0).conj(), h(3.0, -2.0));
        assert_eq!(Hyper::ZERO.conj(), Hyper::ZERO);
        assert_eq!(h(3.0, -2.0).conj().conj(), h(3.0, -2.0));
    }

    #[test]
    fn conjugation_commutes_with_multiplication() {
        let z = h(1.0, 2.0);
        let w = h(3.0, -1.0);
        assert_eq!((z * w).conj(), z.conj() * w.conj());
        assert_eq!(z * w, h(1.0, 5.0));
    }

    #[test]
    fn quadratic_form_values() {
        assert_eq!(h(3.0, 1.0).quadratic_form(), 8.0);
        assert_eq!(h(2.0, 2.0).quadratic_form(), 0.0);
        let c = h(3.0, 1.0).to_characteristic();
        assert_eq!((c.u, c.v), (2.0, 4.0));
        assert_eq!(c.u * c.v, 8.0);
    }

    #[test]
    fn modulus_values() {
        assert_eq!(h(3.0, 2.0).modulus(), 5.0_f64.sqrt());
        assert_eq!(h(1.0, 1.0).modulus(), 0.0);
    }

    #[test]
    fn modulus_is_multiplicative() {
        let z = h(3.0, 1.0);
        let w = h(1.0, -2.0);
        let lhs = (z * w).modulus();
        let rhs = z.modulus() * w.modulus();
        assert_eq!(rhs, 8.0_f64.sqrt() * 3.0_f64.sqrt());
        assert!((lhs - rhs).abs() <= 1e-9 * rhs.max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn zero_divisor_predicate() {
        assert!(h(2.0, 2.0).is_zero_divisor());
        assert!(h(1.0, -1.0).is_zero_divisor());
        assert!(!Hyper::ZERO.is_zero_divisor());
        assert!(!h(3.0, 1.0).is_zero_divisor());
        assert!(Hyper::ALPHA.is_zero_divisor());
        assert!(Hyper::ALPHA_STAR.is_zero_divisor());
    }

    #[test]
    fn characteristic_coordinates() {
        let c = h(3.0, 1.0).to_characteristic();
        assert_eq!((c.u, c.v), (2.0, 4.0));
        let a = Hyper::ALPHA.to_characteristic();
        assert_eq!((a.u, a.v), (1.0, 0.0));
        let o = Hyper::ZERO.to_characteristic();
        assert_eq!((o.u, o.v), (0.0, 0.0));
    }

    #[test]
    fn from_characteristic_inverts() {
        assert_eq!(Hyper::from_characteristic(CharCoords::new(2.0, 4.0)), h(3.0, 1.0));
        assert_eq!(Hyper::from_characteristic(CharCoords::new(1.0, 1.0)), Hyper::ONE);
        assert_eq!(Hyper::from_characteristic(CharCoords::new(0.0, 2.0)), h(1.0, 1.0));
    }

    #[test]
    fn idempotents_square_to_themselves() {
        assert_eq!(Hyper::ALPHA * Hyper::ALPHA, Hyper::ALPHA);
        assert_eq!(Hyper::ALPHA_STAR * Hyper::ALPHA_STAR, Hyper::ALPHA_STAR);
        assert_eq!(Hyper::ALPHA * Hyper::ALPHA_STAR, Hyper::ZERO);
        assert_eq!(Hyper::ALPHA + Hyper::ALPHA_STAR, Hyper::ONE);
    }

    #[test]
    fn constructor_rejects_non_finite() {
        assert!(Hyper::new(f64::NAN, 0.0).is_err());
        assert!(Hyper::new(0.0, f64::INFINITY).is_err());
        assert!(Hyper::new(f64::NEG_INFINITY, f64::NAN).is_err());
    }

    #[test]
    fn products_act_componentwise_in_characteristic_coordinates() {
        let z = h(3.0, 1.0);
        let w = h(1.0, -2.0);
        let zc = z.to_characteristic();
        let wc = w.to_characteristic();
        let pc = (z * w).to_characteristic();
        assert_eq!(pc.u, zc.u * wc.u);
        assert_eq!(pc.v, zc.v * wc.v);
    }
}
