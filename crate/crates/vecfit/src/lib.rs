//! Fits a static SVG's vector geometry to a target frame sequence and
//! exports a standalone animated SVG.
//!
//! The pipeline has five stages, each usable on its own:
//!
//! 1. [`svg`] parses a restricted SVG subset into a canonical model of
//!    closed cubic-Bézier paths with solid fills, flat groups, and an
//!    explicit painter order.
//! 2. [`palette`] temporarily recolors paths with maximally separated RGB
//!    colors taken from precomputed packings of equal spheres in the unit
//!    cube, so pixel-space fitting can tell similarly colored paths apart.
//! 3. [`layers`] estimates a motion-consistent painter order from
//!    per-group mask evidence before fitting.
//! 4. [`fitter`] optimizes a dual-level motion parameterization
//!    ([`motion`]): one 8-DOF homography per group per keyframe plus
//!    per-path control-point offsets, driven by the loss stack in
//!    [`objective`] over the soft rasterizer in [`raster`].
//! 5. [`export`] bakes the fitted motion into per-keyframe path geometry
//!    and writes a standalone SMIL-animated SVG in the original colors.
//!
//! The [`harness`] module provides synthetic ground-truth generation and
//! evaluation, plus the `vecfit` CLI entry point.

pub mod error;
pub mod export;
pub mod fitter;
pub mod geom;
pub mod harness;
pub mod layers;
pub mod motion;
pub mod objective;
pub mod palette;
pub mod raster;
pub mod rng;
pub mod svg;

pub use error::Error;
pub use svg::{Group, PathGeometry, SvgDocument};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
