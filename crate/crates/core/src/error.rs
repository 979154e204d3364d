use std::io;
use std::path::PathBuf;

/// Crate-wide error type: input validation and I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A constructor received NaN or an infinity.
    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    /// Region bounds out of order or not finite.
    #[error("invalid region: {reason}")]
    InvalidRegion { reason: &'static str },

    /// Grid dimensions or cell storage do not line up.
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },

    /// Pixel index outside the grid.
    #[error("pixel ({i}, {j}) out of range for {width}x{height} grid")]
    PixelOutOfRange {
        i: u32,
        j: u32,
        width: u32,
        height: u32,
    },

    /// Two grids that were expected to be comparable differ in shape or window.
    #[error("grid mismatch: {reason}")]
    GridMismatch { reason: &'static str },

    /// I/O failure, tagged with the path involved.
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
