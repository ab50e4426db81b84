//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by parsing, rendering, fitting, and export.
#[derive(Debug, Error)]
pub enum Error {
    /// The input SVG uses a feature outside the supported subset.
    /// Carries the name of the offending element or attribute.
    #[error("unsupported SVG feature: {0}")]
    UnsupportedFeature(String),

    /// A path `d` attribute failed to parse.
    #[error("malformed path data: {0}")]
    MalformedPath(String),

    /// A recolored path is absent from the restoration map.
    #[error("no color assignment recorded for path {path}")]
    MissingAssignment { path: usize },

    /// Two buffers that must agree in shape do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A homography drove a point's homogeneous w-component to (or past)
    /// zero.
    #[error("degenerate projection: homogeneous w = {w:.3e} at point {point}")]
    DegenerateProjection { point: usize, w: f64 },

    /// A gradient entry became NaN or infinite; the optimizer step is
    /// aborted.
    #[error("non-finite gradient at parameter {param}")]
    NonFiniteGradient { param: String },

    /// Invalid configuration (bad field value, or a schedule that cannot
    /// activate all keyframes within the iteration budget).
    #[error("config error: {0}")]
    Config(String),

    /// An operation needed palette assignments but the document was never
    /// recolored and no user masks were supplied.
    #[error("palette assignments required: recolor the document first or supply mask directories")]
    PaletteRequired,

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("image error on {path}: {source}")]
    Image {
        path: String,
        #[source]
        source: image::ImageError,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("xml error: {0}")]
    Xml(#[from] roxmltree::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn image(path: impl Into<String>, source: image::ImageError) -> Self {
        Error::Image {
            path: path.into(),
            source,
        }
    }

    /// Exit code class for the CLI: usage errors are 1, domain errors 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
