//! Quadratic dynamics over hyperbolic (split-complex) numbers.
//!
//! Hyperbolic numbers are pairs `x + j·y` with `j² = 1`. Unlike the complex
//! plane, the ring has zero divisors (the diagonals `x = ±y`), and the
//! quadratic family `f_c(z) = z² + c` decouples into two independent real
//! quadratic maps in characteristic coordinates `X = x − y`, `Y = x + y`.
//! That decoupling makes the hyperbolic Mandelbrot set and every filled
//! Julia set exactly characterizable, so this crate ships both:
//!
//! * analytic predicates (exact interval tests in characteristic
//!   coordinates), and
//! * iterative escape-time procedures (semi-decisions, sound for escape),
//!
//! plus grid rendering that cross-validates the two, with PPM/CSV output.
//!
//! Rendering is row-parallel via rayon when the `parallel` feature (default)
//! is enabled; `*_seq` entry points and `--no-default-features` builds run
//! the same single-threaded kernel. Output is byte-identical either way.

pub mod algebra;
pub mod dynamics;
mod error;
pub mod real;
pub mod render;

pub use algebra::{CharCoords, Hyper};
pub use dynamics::{
    BoundednessVariant, CharAxis, CharRect, HyperParam, JuliaClass, JuliaMembership,
    MandelbrotSquare,
};
pub use error::{Error, Result};
pub use real::{FixedPoints, OrbitOutcome, RealJuliaClass};
pub use render::{EscapeGrid, Region, SampleMode};
