//! Grid sampling of parameter and dynamical planes.
//!
//! Renders are deterministic by construction: each pixel's verdict is a
//! pure function of its center coordinates, work is partitioned by rows
//! into disjoint output slots, and no verdict depends on scheduling. The
//! same grid (and therefore the same PPM/CSV bytes) comes out at any
//! thread count, and `render_*_seq` produce identical results to their
//! parallel counterparts.
//!
//! Analytic and iterative sampling share one grid representation so the
//! two can be diffed pixel-for-pixel; [`diff_grids`] is the supported way
//! to surface analytic-vs-iterative disagreement rather than reconciling
//! it silently.

mod colormap;
mod output;

pub use colormap::Colormap;
pub use output::{write_csv, write_csv_to, write_ppm, write_ppm_to};

use crate::algebra::Hyper;
use crate::dynamics::{self, BoundednessVariant, HyperParam, JuliaMembership};
use crate::error::{Error, Result};
use crate::real::OrbitOutcome;

/// Axis-aligned sampling window. For Mandelbrot renders the axes are the
/// parameter components (a, b); for Julia renders the plane components
/// (x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Region {
    /// Validates ordering, finiteness, and that the spans themselves do
    /// not overflow (so pixel centers stay finite).
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Result<Region> {
        for w in [xmin, xmax, ymin, ymax] {
            if !w.is_finite() {
                return Err(Error::NonFinite {
                    what: "region bound",
                });
            }
        }
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::InvalidRegion {
                reason: "bounds must satisfy xmin < xmax and ymin < ymax",
            });
        }
        if !(xmax - xmin).is_finite() || !(ymax - ymin).is_finite() {
            return Err(Error::InvalidRegion {
                reason: "span overflows",
            });
        }
        Ok(Region {
            xmin,
            xmax,
            ymin,
            ymax,
        })
    }

    pub fn xmin(&self) -> f64 {
        self.xmin
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn ymin(&self) -> f64 {
        self.ymin
    }

    pub fn ymax(&self) -> f64 {
        self.ymax
    }

    pub fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    pub fn height(&self) -> f64 {
        self.ymax - self.ymin
    }
}

/// How each pixel is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Finite-depth escape iteration (semi-decision).
    Iterative,
    /// Closed-form predicates; membership is encoded as bounded vs
    /// escaped-at-0. A Cantor Julia axis still needs an iterative probe;
    /// pixels decided that way are tallied in
    /// [`GridMeta::undetermined`].
    Analytic,
}

/// Render settings carried alongside the cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMeta {
    pub region: Region,
    pub depth: u32,
    pub variant: BoundednessVariant,
    pub mode: SampleMode,
    /// Pixels counted bounded without a certificate: analytic Julia
    /// renders whose Cantor-axis probe simply failed to escape. Zero for
    /// fully analytic verdicts and for iterative renders (there the
    /// semi-decision semantics is already explicit in the mode).
    pub undetermined: u64,
}

/// Row-major raster of per-pixel outcomes: `Some(n)` means proven escape
/// at step `n`, `None` means bounded (through `meta.depth` for iterative
/// renders, analytically for analytic ones).
#[derive(Debug, Clone, PartialEq)]
pub struct EscapeGrid {
    width: u32,
    height: u32,
    cells: Vec<Option<u32>>,
    meta: GridMeta,
}

/// Bounded-vs-escaped comparison of two same-shape grids.
#[derive(Debug, Clone, PartialEq)]
pub struct DisagreementReport {
    pub total_pixels: u64,
    pub disagree_count: u64,
    /// Exactly `disagree_count / total_pixels`.
    pub disagree_fraction: f64,
    /// Up to 16 disagreeing pixels in row-major order.
    pub samples: Vec<DisagreementSample>,
}

/// One disagreeing pixel with both verdicts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisagreementSample {
    pub i: u32,
    pub j: u32,
    pub x: f64,
    pub y: f64,
    pub first_escaped: bool,
    pub second_escaped: bool,
}

/// Center of pixel `(i, j)`: `x = xmin + (i + ½)·dx`,
/// `y = ymax − (j + ½)·dy`, row 0 at the top.
pub fn pixel_center(region: &Region, width: u32, height: u32, i: u32, j: u32) -> Result<(f64, f64)> {
    if i >= width || j >= height {
        return Err(Error::PixelOutOfRange {
            i,
            j,
            width,
            height,
        });
    }
    let dx = region.width() / f64::from(width);
    let dy = region.height() / f64::from(height);
    Ok((
        region.xmin + (f64::from(i) + 0.5) * dx,
        region.ymax - (f64::from(j) + 0.5) * dy,
    ))
}

/// Renders the hyperbolic Mandelbrot set over a window of the (a, b)
/// parameter plane. Analytic mode evaluates the exact S (or S ∪ D)
/// predicate at each pixel center; iterative mode runs the finite-depth
/// orbit of 0.
pub fn render_mandelbrot(
    region: Region,
    width: u32,
    height: u32,
    depth: u32,
    variant: BoundednessVariant,
    mode: SampleMode,
) -> Result<EscapeGrid> {
    run(
        PixelJob::Mandelbrot {
            depth,
            variant,
            mode,
        },
        region,
        width,
        height,
        depth,
        variant,
        mode,
        false,
    )
}

/// [`render_mandelbrot`] on the always-available sequential kernel.
pub fn render_mandelbrot_seq(
    region: Region,
    width: u32,
    height: u32,
    depth: u32,
    variant: BoundednessVariant,
    mode: SampleMode,
) -> Result<EscapeGrid> {
    run(
        PixelJob::Mandelbrot {
            depth,
            variant,
            mode,
        },
        region,
        width,
        height,
        depth,
        variant,
        mode,
        true,
    )
}

/// Renders the filled Julia set of `f_c` over a window of the dynamical
/// (x, y) plane. Julia sets use the component notion of boundedness.
pub fn render_julia(
    c: HyperParam,
    region: Region,
    width: u32,
    height: u32,
    depth: u32,
    mode: SampleMode,
) -> Result<EscapeGrid> {
    run(
        PixelJob::Julia { c, depth, mode },
        region,
        width,
        height,
        depth,
        BoundednessVariant::Component,
        mode,
        false,
    )
}

/// [`render_julia`] on the always-available sequential kernel.
pub fn render_julia_seq(
    c: HyperParam,
    region: Region,
    width: u32,
    height: u32,
    depth: u32,
    mode: SampleMode,
) -> Result<EscapeGrid> {
    run(
        PixelJob::Julia { c, depth, mode },
        region,
        width,
        height,
        depth,
        BoundednessVariant::Component,
        mode,
        true,
    )
}

/// Compares bounded-vs-escaped verdicts pixel by pixel (escape steps are
/// deliberately ignored: the two grids may have been produced by
/// different modes). Shapes and regions must match.
pub fn diff_grids(g1: &EscapeGrid, g2: &EscapeGrid) -> Result<DisagreementReport> {
    if g1.width != g2.width || g1.height != g2.height {
        return Err(Error::GridMismatch {
            reason: "dimensions differ",
        });
    }
    if g1.meta.region != g2.meta.region {
        return Err(Error::GridMismatch {
            reason: "regions differ",
        });
    }
    let total_pixels = u64::from(g1.width) * u64::from(g1.height);
    let mut disagree_count = 0u64;
    let mut samples = Vec::new();
    let dx = g1.meta.region.width() / f64::from(g1.width);
    let dy = g1.meta.region.height() / f64::from(g1.height);
    for j in 0..g1.height {
        let row = (j as usize) * (g1.width as usize);
        let y = g1.meta.region.ymax - (f64::from(j) + 0.5) * dy;
        for i in 0..g1.width {
            let e1 = g1.cells[row + i as usize].is_some();
            let e2 = g2.cells[row + i as usize].is_some();
            if e1 != e2 {
                disagree_count += 1;
                if samples.len() < 16 {
                    samples.push(DisagreementSample {
                        i,
                        j,
                        x: g1.meta.region.xmin + (f64::from(i) + 0.5) * dx,
                        y,
                        first_escaped: e1,
                        second_escaped: e2,
                    });
                }
            }
        }
    }
    Ok(DisagreementReport {
        total_pixels,
        disagree_count,
        disagree_fraction: disagree_count as f64 / total_pixels as f64,
        samples,
    })
}

impl EscapeGrid {
    /// Builds a grid from raw cells, checking the shape and that no
    /// recorded escape step exceeds `depth`. Mostly useful for fixtures.
    pub fn from_cells(
        width: u32,
        height: u32,
        cells: Vec<Option<u32>>,
        region: Region,
        depth: u32,
        variant: BoundednessVariant,
        mode: SampleMode,
    ) -> Result<EscapeGrid> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidGrid {
                reason: "zero dimension",
            });
        }
        if cells.len() != (width as usize) * (height as usize) {
            return Err(Error::InvalidGrid {
                reason: "cell count does not equal width * height",
            });
        }
        if cells.iter().flatten().any(|&n| n > depth) {
            return Err(Error::InvalidGrid {
                reason: "escape step exceeds depth",
            });
        }
        Ok(EscapeGrid {
            width,
            height,
            cells,
            meta: GridMeta {
                region,
                depth,
                variant,
                mode,
                undetermined: 0,
            },
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn meta(&self) -> &GridMeta {
        &self.meta
    }

    /// Row-major cells: `Some(n)` escaped at step `n`, `None` bounded.
    pub fn cells(&self) -> &[Option<u32>] {
        &self.cells
    }

    pub fn cell(&self, i: u32, j: u32) -> Result<Option<u32>> {
        if i >= self.width || j >= self.height {
            return Err(Error::PixelOutOfRange {
                i,
                j,
                width: self.width,
                height: self.height,
            });
        }
        Ok(self.cells[(j as usize) * (self.width as usize) + i as usize])
    }

    pub fn pixel_center(&self, i: u32, j: u32) -> Result<(f64, f64)> {
        pixel_center(&self.meta.region, self.width, self.height, i, j)
    }

    pub fn bounded_count(&self) -> u64 {
        self.cells.iter().filter(|c| c.is_none()).count() as u64
    }

    pub fn bounded_fraction(&self) -> f64 {
        self.bounded_count() as f64 / (u64::from(self.width) * u64::from(self.height)) as f64
    }
}

/// Per-pixel work item. A concrete enum (rather than a generic closure)
/// keeps the parallel and sequential kernels identical down to the code
/// they inline.
#[derive(Clone, Copy)]
enum PixelJob {
    Mandelbrot {
        depth: u32,
        variant: BoundednessVariant,
        mode: SampleMode,
    },
    Julia {
        c: HyperParam,
        depth: u32,
        mode: SampleMode,
    },
}

impl PixelJob {
    /// Verdict at a pixel center: `(escape step, undetermined)`.
    fn sample(self, x: f64, y: f64) -> (Option<u32>, bool) {
        match self {
            PixelJob::Mandelbrot {
                depth,
                variant,
                mode,
            } => {
                let c = HyperParam::new(x, y).expect("pixel centers are finite");
                match mode {
                    SampleMode::Analytic => {
                        if dynamics::mandelbrot_analytic(c, variant) {
                            (None, false)
                        } else {
                            (Some(0), false)
                        }
                    }
                    SampleMode::Iterative => {
                        match dynamics::mandelbrot_iterative(c, depth, variant) {
                            OrbitOutcome::EscapedAt(n) => (Some(n), false),
                            OrbitOutcome::BoundedThroughDepth(_) => (None, false),
                        }
                    }
                }
            }
            PixelJob::Julia { c, depth, mode } => {
                let z = Hyper::new(x, y).expect("pixel centers are finite");
                match mode {
                    SampleMode::Analytic => match dynamics::julia_membership_analytic(z, c, depth)
                    {
                        JuliaMembership::In => (None, false),
                        JuliaMembership::Out => (Some(0), false),
                        JuliaMembership::BoundedThroughDepth(_) => (None, true),
                    },
                    SampleMode::Iterative => {
                        match dynamics::julia_membership_iterative(z, c, depth) {
                            OrbitOutcome::EscapedAt(n) => (Some(n), false),
                            OrbitOutcome::BoundedThroughDepth(_) => (None, false),
                        }
                    }
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run(
    job: PixelJob,
    region: Region,
    width: u32,
    height: u32,
    depth: u32,
    variant: BoundednessVariant,
    mode: SampleMode,
    force_seq: bool,
) -> Result<EscapeGrid> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidGrid {
            reason: "zero dimension",
        });
    }
    let (cells, undetermined) = if force_seq {
        fill_seq(job, &region, width, height)
    } else {
        fill(job, &region, width, height)
    };
    Ok(EscapeGrid {
        width,
        height,
        cells,
        meta: GridMeta {
            region,
            depth,
            variant,
            mode,
            undetermined,
        },
    })
}

/// Fills one row of disjoint output slots; returns its undetermined
/// count. Pixel-center values are clamped to the finite range so the
/// samplers' constructors cannot fail even for near-MAX windows.
fn fill_row(row: &mut [Option<u32>], j: u32, region: &Region, dx: f64, dy: f64, job: PixelJob) -> u64 {
    let y = (region.ymax - (f64::from(j) + 0.5) * dy).clamp(f64::MIN, f64::MAX);
    let mut undetermined = 0u64;
    for (i, cell) in row.iter_mut().enumerate() {
        let x = (region.xmin + (i as f64 + 0.5) * dx).clamp(f64::MIN, f64::MAX);
        let (step, undet) = job.sample(x, y);
        *cell = step;
        undetermined += u64::from(undet);
    }
    undetermined
}

fn fill_seq(job: PixelJob, region: &Region, width: u32, height: u32) -> (Vec<Option<u32>>, u64) {
    let dx = region.width() / f64::from(width);
    let dy = region.height() / f64::from(height);
    let mut cells = vec![None; (width as usize) * (height as usize)];
    let mut undetermined = 0u64;
    for (j, row) in cells.chunks_mut(width as usize).enumerate() {
        undetermined += fill_row(row, j as u32, region, dx, dy, job);
    }
    (cells, undetermined)
}

#[cfg(feature = "parallel")]
fn fill(job: PixelJob, region: &Region, width: u32, height: u32) -> (Vec<Option<u32>>, u64) {
    use rayon::prelude::*;

    let dx = region.width() / f64::from(width);
    let dy = region.height() / f64::from(height);
    let mut cells = vec![None; (width as usize) * (height as usize)];
    let mut row_counts = vec![0u64; height as usize];
    cells
        .par_chunks_mut(width as usize)
        .zip(row_counts.par_iter_mut())
        .enumerate()
        .for_each(|(j, (row, count))| {
            *count = fill_row(row, j as u32, region, dx, dy, job);
        });
    (cells, row_counts.iter().sum())
}

#[cfg(not(feature = "parallel"))]
fn fill(job: PixelJob, region: &Region, width: u32, height: u32) -> (Vec<Option<u32>>, u64) {
    fill_seq(job, region, width, height)
}
