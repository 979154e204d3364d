//! Hyperbolic quadratic dynamics `f_c(z) = z² + c`.
//!
//! In characteristic coordinates the map decouples: if `z` has coordinates
//! `(X, Y)` and `c` has `(c₁, c₂) = (a − b, a + b)`, then `f_c(z)` has
//! coordinates `(X² + c₁, Y² + c₂)`, and by induction the n-th iterate is
//! the pair of n-th real iterates. Everything here leans on that: the
//! Mandelbrot set is a square, every filled Julia set is a product of two
//! real filled Julia sets, and all analytic predicates reduce to interval
//! tests from [`real`](crate::real).
//!
//! Two notions of boundedness are supported. The component variant asks
//! that both characteristic orbits stay bounded; the modulus variant asks
//! only that `|Xₙ·Yₙ|` stay bounded, which additionally admits the zero
//! divisors: on a diagonal one coordinate is exactly 0, the product
//! vanishes identically, and the parameter is modulus-bounded no matter
//! how wildly the other coordinate diverges.

use std::fmt;

use crate::algebra::{CharCoords, Hyper};
use crate::error::{Error, Result};
use crate::real::{self, OrbitOutcome, RealJuliaClass};

/// A parameter `c = a + j·b` with its characteristic coordinates
/// `c₁ = a − b`, `c₂ = a + b` cached at construction so the hot loops
/// never re-derive them.
///
/// Both constructors reject non-finite input, so every dynamics routine
/// taking a `HyperParam` is total.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParam {
    a: f64,
    b: f64,
    c1: f64,
    c2: f64,
}

/// Which orbits count as bounded when defining the Mandelbrot set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundednessVariant {
    /// Both characteristic component sequences stay bounded. The primary
    /// definition; the set is exactly the square S.
    Component,
    /// Only the modulus sequence `√|Xₙ·Yₙ|` stays bounded. Adds the two
    /// diagonals: the set is S ∪ D.
    Modulus,
}

/// One of the two characteristic axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharAxis {
    /// The X axis (coefficient of α).
    U,
    /// The Y axis (coefficient of α*).
    V,
}

/// Classification of the hyperbolic filled Julia set `K_H(f_c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JuliaClass {
    /// Both `c₁, c₂ ∈ [−2, ¼]`: the full rectangle
    /// `[−p₊¹, p₊¹] × [−p₊², p₊²]` in characteristic coordinates.
    ConnectedRectangle { half_u: f64, half_v: f64 },
    /// Both `c₁, c₂ < −2`: a product of two Cantor sets, totally
    /// disconnected.
    CantorDust,
    /// Exactly one axis carries an interval, the other a Cantor set:
    /// disconnected but not totally disconnected.
    DisconnectedMixed { connected: CharAxis },
    /// Either `c₁ > ¼` or `c₂ > ¼`: no bounded orbits at all.
    Empty,
}

/// Verdict of the analytic Julia membership test.
///
/// `In`/`Out` are exact. `BoundedThroughDepth` appears only when a Cantor
/// axis had to be probed iteratively and did not escape; like
/// [`OrbitOutcome::BoundedThroughDepth`] it is not a proof of membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JuliaMembership {
    In,
    Out,
    BoundedThroughDepth(u32),
}

/// Axis-aligned rectangle `[−half_u, half_u] × [−half_v, half_v]` in
/// characteristic coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRect {
    pub half_u: f64,
    pub half_v: f64,
}

impl CharRect {
    pub fn contains(&self, c: CharCoords) -> bool {
        c.u.abs() <= self.half_u && c.v.abs() <= self.half_v
    }
}

/// The square S: parameters with `−2 ≤ a − b ≤ ¼` and `−2 ≤ a + b ≤ ¼`,
/// i.e. the product `[−2, ¼]²` in characteristic coordinates. This is the
/// component-bounded hyperbolic Mandelbrot set; the modulus-bounded
/// variant adds the diagonals D (`c₁ = 0` or `c₂ = 0`).
pub struct MandelbrotSquare;

impl MandelbrotSquare {
    pub const CHAR_MIN: f64 = -2.0;
    pub const CHAR_MAX: f64 = 0.25;
    /// Area in the (a, b) plane: the square has side `9/8·√2`, so the
    /// area is `(9/4)²/2 = 81/32`.
    pub const AREA: f64 = 81.0 / 32.0;

    /// Closed-interval test in characteristic coordinates.
    pub fn contains_char(c1: f64, c2: f64) -> bool {
        (Self::CHAR_MIN..=Self::CHAR_MAX).contains(&c1)
            && (Self::CHAR_MIN..=Self::CHAR_MAX).contains(&c2)
    }

    pub fn contains(a: f64, b: f64) -> bool {
        Self::contains_char(a - b, a + b)
    }

    /// The diagonals D, as exact equalities.
    pub fn on_diagonals(c1: f64, c2: f64) -> bool {
        c1 == 0.0 || c2 == 0.0
    }
}

impl HyperParam {
    /// Parameter from plane coordinates `c = a + j·b`.
    pub fn new(a: f64, b: f64) -> Result<HyperParam> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite {
                what: "parameter component",
            });
        }
        Ok(HyperParam {
            a,
            b,
            c1: a - b,
            c2: a + b,
        })
    }

    /// Parameter from characteristic coordinates. The given `(c₁, c₂)` are
    /// stored verbatim and drive all dynamics; `(a, b)` are recovered as
    /// `((c₁+c₂)/2, (c₂−c₁)/2)` for display. Handy when a coordinate must
    /// be exactly 0 (a diagonal parameter).
    pub fn from_characteristic(c1: f64, c2: f64) -> Result<HyperParam> {
        if !c1.is_finite() || !c2.is_finite() {
            return Err(Error::NonFinite {
                what: "characteristic parameter component",
            });
        }
        let h1 = 0.5 * c1;
        let h2 = 0.5 * c2;
        Ok(HyperParam {
            a: h1 + h2,
            b: h2 - h1,
            c1,
            c2,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }
}

/// One application of `z ↦ z² + c` in plane coordinates:
/// `(x, y) ↦ (x² + y² + a, 2xy + b)`, each component saturated to
/// `±f64::MAX` (no NaN can arise: the first component only overflows to
/// `+∞`, the second has no cancelling infinities).
pub fn step(z: Hyper, c: HyperParam) -> Hyper {
    let (x, y) = (z.x(), z.y());
    Hyper::raw(
        (x * x + y * y + c.a).clamp(f64::MIN, f64::MAX),
        (2.0 * x * y + c.b).clamp(f64::MIN, f64::MAX),
    )
}

/// The first `n + 1` iterates `[z, f_c(z), …, f_cⁿ(z)]`.
///
/// Stops early once a component saturates at `±f64::MAX`; the saturated
/// iterate is kept as the final entry so the escape step stays visible.
pub fn orbit(z: Hyper, c: HyperParam, n: u32) -> Vec<Hyper> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut zn = z;
    out.push(zn);
    for _ in 0..n {
        if zn.x().abs() >= f64::MAX || zn.y().abs() >= f64::MAX {
            break;
        }
        zn = step(zn, c);
        out.push(zn);
    }
    out
}

/// Exact Mandelbrot membership.
///
/// Component variant: `c ∈ S`, i.e. both characteristic coordinates in
/// the closed interval `[−2, ¼]`. Modulus variant: `c ∈ S ∪ D`, where the
/// diagonal test is exact equality; grid renderings therefore show D only
/// where pixel centers hit a diagonal exactly.
pub fn mandelbrot_analytic(c: HyperParam, variant: BoundednessVariant) -> bool {
    let in_square = MandelbrotSquare::contains_char(c.c1, c.c2);
    match variant {
        BoundednessVariant::Component => in_square,
        BoundednessVariant::Modulus => in_square || MandelbrotSquare::on_diagonals(c.c1, c.c2),
    }
}

/// Finite-depth Mandelbrot semi-decision: iterates the orbit of 0 and
/// tests the escape criterion of the chosen variant at every index
/// `0 ..= depth`.
///
/// Component variant: escape as soon as either characteristic coordinate
/// passes its real escape radius (so `EscapedAt` carries the minimum of
/// the two per-axis witnesses). Modulus variant: escape when
/// `|Xₙ·Yₙ| > θ(c)` with `θ(c) = max(4, R₁·R₂)` clamped to `f64::MAX`,
/// `R_k` the per-axis escape radius; inside S the product never exceeds 4,
/// and a single witness above θ certifies the product sequence is
/// unbounded along a subsequence.
pub fn mandelbrot_iterative(
    c: HyperParam,
    depth: u32,
    variant: BoundednessVariant,
) -> OrbitOutcome {
    match variant {
        BoundednessVariant::Component => component_escape(0.0, 0.0, c.c1, c.c2, depth),
        BoundednessVariant::Modulus => modulus_escape(0.0, 0.0, c.c1, c.c2, depth),
    }
}

/// Lockstep iteration of both characteristic coordinates with per-axis
/// escape tests. Saturation in `real::step` keeps every value finite, and
/// a saturated value exceeds every radius, so overflow reads as escape at
/// that step.
fn component_escape(mut u: f64, mut v: f64, c1: f64, c2: f64, depth: u32) -> OrbitOutcome {
    let r1 = real::escape_radius(c1);
    let r2 = real::escape_radius(c2);
    for n in 0..depth {
        if u.abs() > r1 || v.abs() > r2 {
            return OrbitOutcome::EscapedAt(n);
        }
        u = real::step(u, c1);
        v = real::step(v, c2);
    }
    if u.abs() > r1 || v.abs() > r2 {
        OrbitOutcome::EscapedAt(depth)
    } else {
        OrbitOutcome::BoundedThroughDepth(depth)
    }
}

fn modulus_escape(mut u: f64, mut v: f64, c1: f64, c2: f64, depth: u32) -> OrbitOutcome {
    let theta = (real::escape_radius(c1) * real::escape_radius(c2)).clamp(4.0, f64::MAX);
    // Saturation keeps the coordinates at ±MAX rather than ∞, so a zero
    // divisor's product stays exactly 0 (MAX·0 = 0) instead of NaN.
    for n in 0..depth {
        if (u * v).abs() > theta {
            return OrbitOutcome::EscapedAt(n);
        }
        u = real::step(u, c1);
        v = real::step(v, c2);
    }
    if (u * v).abs() > theta {
        OrbitOutcome::EscapedAt(depth)
    } else {
        OrbitOutcome::BoundedThroughDepth(depth)
    }
}

/// Theorem-2 classification of `K_H(f_c)` from the two real classes.
pub fn classify_julia(c: HyperParam) -> JuliaClass {
    use RealJuliaClass as R;
    match (real::classify_julia(c.c1), real::classify_julia(c.c2)) {
        (R::EmptySet, _) | (_, R::EmptySet) => JuliaClass::Empty,
        (R::FullInterval { half_width: hu }, R::FullInterval { half_width: hv }) => {
            JuliaClass::ConnectedRectangle {
                half_u: hu,
                half_v: hv,
            }
        }
        (R::CantorSubset { .. }, R::CantorSubset { .. }) => JuliaClass::CantorDust,
        (R::FullInterval { .. }, R::CantorSubset { .. }) => JuliaClass::DisconnectedMixed {
            connected: CharAxis::U,
        },
        (R::CantorSubset { .. }, R::FullInterval { .. }) => JuliaClass::DisconnectedMixed {
            connected: CharAxis::V,
        },
    }
}

/// Membership of `z` in `K_H(f_c)`, analytically where possible.
///
/// `K_H` is the set of `z` whose characteristic coordinates lie in the two
/// real filled Julia sets. Interval axes give exact In/Out; an Out on
/// either axis is final. A Cantor axis is probed iteratively: escape means
/// Out, but survival only downgrades a would-be In to
/// `BoundedThroughDepth(depth)`.
pub fn julia_membership_analytic(z: Hyper, c: HyperParam, depth: u32) -> JuliaMembership {
    let cc = clamped_characteristic(z);
    let mut certain = true;
    for (w, ck) in [(cc.u, c.c1), (cc.v, c.c2)] {
        match real::membership_analytic(w, ck) {
            Some(false) => return JuliaMembership::Out,
            Some(true) => {}
            None => {
                if axis_escapes(w, ck, depth) {
                    return JuliaMembership::Out;
                }
                certain = false;
            }
        }
    }
    if certain {
        JuliaMembership::In
    } else {
        JuliaMembership::BoundedThroughDepth(depth)
    }
}

/// Finite-depth Julia semi-decision: lockstep iteration of both
/// characteristic coordinates of `z` with per-axis escape tests at every
/// index `0 ..= depth`.
pub fn julia_membership_iterative(z: Hyper, c: HyperParam, depth: u32) -> OrbitOutcome {
    let cc = clamped_characteristic(z);
    component_escape(cc.u, cc.v, c.c1, c.c2, depth)
}

/// The characteristic rectangle `[−p₊¹, p₊¹] × [−p₊², p₊²]` enclosing
/// `K_H(f_c)`, with equality in the connected case. Absent when either
/// real class is empty (then `K_H` is too).
pub fn julia_bounding_rectangle(c: HyperParam) -> Option<CharRect> {
    if c.c1 > 0.25 || c.c2 > 0.25 {
        return None;
    }
    Some(CharRect {
        half_u: real::escape_radius(c.c1),
        half_v: real::escape_radius(c.c2),
    })
}

/// `to_characteristic` can overflow for components near `±f64::MAX`; the
/// clamp keeps the coordinates finite, and a clamped value still exceeds
/// every escape radius, so verdicts are unaffected.
fn clamped_characteristic(z: Hyper) -> CharCoords {
    let cc = z.to_characteristic();
    CharCoords::new(
        cc.u.clamp(f64::MIN, f64::MAX),
        cc.v.clamp(f64::MIN, f64::MAX),
    )
}

fn axis_escapes(x0: f64, c: f64, depth: u32) -> bool {
    let r = real::escape_radius(c);
    let mut x = x0;
    for _ in 0..depth {
        if x.abs() > r {
            return true;
        }
        x = real::step(x, c);
    }
    x.abs() > r
}

impl fmt::Display for BoundednessVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundednessVariant::Component => "component",
            BoundednessVariant::Modulus => "modulus",
        })
    }
}

impl fmt::Display for CharAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharAxis::U => "X",
            CharAxis::V => "Y",
        })
    }
}

impl fmt::Display for JuliaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JuliaClass::ConnectedRectangle { .. } => "connected-rectangle",
            JuliaClass::CantorDust => "cantor-dust",
            JuliaClass::DisconnectedMixed { .. } => "disconnected-mixed",
            JuliaClass::Empty => "empty",
        })
    }
}
