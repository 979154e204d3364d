//! Bit-exact grid serialization: binary PPM (P6) images and CSV dumps.
//!
//! Both formats are fully determined by the grid contents, so re-running
//! a render at the same settings reproduces files byte for byte. PPM
//! paints bounded pixels black and escaped pixels through the colormap;
//! CSV keeps the raw verdicts with full-precision (shortest round-trip)
//! pixel-center coordinates and LF line endings.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::colormap::Colormap;
use super::EscapeGrid;
use crate::error::{Error, Result};

/// Writes `grid` as a binary PPM: `"P6\n<width> <height>\n255\n"` then
/// `width × height × 3` bytes, row-major from the top-left. Bounded
/// pixels are black; a pixel escaped at step `n` gets
/// `colormap[floor(255·n/depth)]`.
pub fn write_ppm(grid: &EscapeGrid, colormap: &Colormap, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut out = BufWriter::new(file);
    write_ppm_to(grid, colormap, &mut out)
        .and_then(|()| out.flush())
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

/// [`write_ppm`] into any writer.
pub fn write_ppm_to<W: Write>(grid: &EscapeGrid, colormap: &Colormap, out: &mut W) -> io::Result<()> {
    write!(out, "P6\n{} {}\n255\n", grid.width(), grid.height())?;
    let depth = grid.meta().depth;
    let mut row = Vec::with_capacity(grid.width() as usize * 3);
    for cells in grid.cells().chunks(grid.width() as usize) {
        row.clear();
        for cell in cells {
            let rgb = match cell {
                None => [0, 0, 0],
                Some(n) => colormap.color_for(*n, depth),
            };
            row.extend_from_slice(&rgb);
        }
        out.write_all(&row)?;
    }
    Ok(())
}

/// Writes `grid` as CSV: header `i,j,x,y,escaped,step`, then one line per
/// pixel in row-major order. `x, y` are the pixel-center coordinates;
/// `step` is empty for bounded pixels.
pub fn write_csv(grid: &EscapeGrid, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut out = BufWriter::new(file);
    write_csv_to(grid, &mut out)
        .and_then(|()| out.flush())
        .map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
}

/// [`write_csv`] into any writer.
pub fn write_csv_to<W: Write>(grid: &EscapeGrid, out: &mut W) -> io::Result<()> {
    out.write_all(b"i,j,x,y,escaped,step\n")?;
    let region = grid.meta().region;
    let dx = region.width() / f64::from(grid.width());
    let dy = region.height() / f64::from(grid.height());
    for j in 0..grid.height() {
        let y = region.ymax() - (f64::from(j) + 0.5) * dy;
        let row = (j as usize) * (grid.width() as usize);
        for i in 0..grid.width() {
            let x = region.xmin() + (f64::from(i) + 0.5) * dx;
            match grid.cells()[row + i as usize] {
                None => writeln!(out, "{i},{j},{x},{y},false,")?,
                Some(n) => writeln!(out, "{i},{j},{x},{y},true,{n}")?,
            }
        }
    }
    Ok(())
}
