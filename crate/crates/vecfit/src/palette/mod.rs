//! High-separation recolorization and original-color restoration.
//!
//! Each recolorable path is assigned a color from the centers of a
//! precomputed packing of K equal spheres in the unit RGB cube, which
//! guarantees every pair of assigned colors is at least `2r` apart. For
//! path counts beyond the table an HSV distinct-color fallback is used.
//! Assignments are recorded so the original fills can be restored exactly
//! on export.

mod packing_data;

pub use packing_data::K_MAX;

use crate::error::Error;
use crate::geom::{shoelace_area, Vec2};
use crate::rng::Lcg64;
use crate::svg::{Rgb, SvgDocument};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Result of looking up a packing for a given color count.
#[derive(Debug, Clone, PartialEq)]
pub enum Packing {
    /// Tabulated packing: radius and the K sphere centers.
    Table { radius: f64, centers: Vec<[f64; 3]> },
    /// K exceeds the table; callers switch to [`hsv_fallback`].
    Fallback,
}

/// Best tabulated packing of `k` equal spheres in the unit cube, or the
/// fallback marker for `k > K_MAX`.
pub fn packing_centers(k: usize) -> Packing {
    assert!(k >= 1, "k must be positive");
    if k > K_MAX {
        return Packing::Fallback;
    }
    let radius = packing_data::RADII[k - 1];
    let start = k * (k - 1) / 2;
    let centers = packing_data::CENTERS[start..start + k].to_vec();
    Packing::Table { radius, centers }
}

/// `k` pairwise-distinct colors: hues `i/k`, full saturation, and values
/// alternating between 1.0 and 0.6 so nearby hues cannot collide at
/// large `k`.
pub fn hsv_fallback(k: usize) -> Vec<Rgb> {
    assert!(k >= 1, "k must be positive");
    (0..k)
        .map(|i| {
            let h = i as f64 / k as f64;
            let v = if i % 2 == 0 { 1.0 } else { 0.6 };
            hsv_to_rgb(h, 1.0, v)
        })
        .collect()
}

/// Standard HSV -> RGB with h in [0, 1).
fn hsv_to_rgb(h: f64, s: f64, v: f64) -> Rgb {
    let h6 = (h.fract() + 1.0).fract() * 6.0;
    let i = h6.floor() as i64;
    let f = h6 - i as f64;
    let p = v * (1.0 - s);
    let q = v * (1.0 - s * f);
    let t = v * (1.0 - s * (1.0 - f));
    let (r, g, b) = match i.rem_euclid(6) {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    Rgb::new(r, g, b)
}

/// Where the assigned colors came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PaletteSource {
    Packing,
    HsvFallback,
}

/// One path's recorded recolorization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Assignment {
    pub original: Rgb,
    pub assigned: Rgb,
}

/// Path-index keyed record of original and assigned colors.
#[derive(Debug, Clone, PartialEq)]
pub struct RecolorMap {
    pub assignments: BTreeMap<usize, Assignment>,
    pub source: PaletteSource,
    /// Packing radius when `source` is `Packing`; half the minimum
    /// pairwise assigned-color distance either way.
    pub separation_radius: f64,
}

impl RecolorMap {
    /// Half the guaranteed separation among assigned colors; the radius
    /// for palette-nearest-color classification.
    pub fn classify_radius(&self) -> f64 {
        self.separation_radius
    }
}

/// Options for [`assign_palette_with`].
#[derive(Debug, Clone)]
pub struct PaletteOptions {
    /// Seed for the deterministic center shuffle.
    pub seed: u64,
    /// Fills excluded from recolorization (e.g. a white background).
    pub exclude_fills: Vec<Rgb>,
}

impl Default for PaletteOptions {
    fn default() -> Self {
        PaletteOptions {
            seed: 0,
            exclude_fills: Vec::new(),
        }
    }
}

/// Recolor `doc` in place with default options (seed 0, no exclusions) and
/// return the map needed to restore the original fills.
pub fn assign_palette(doc: &mut SvgDocument) -> RecolorMap {
    assign_palette_with(doc, &PaletteOptions::default())
}

/// Recolor `doc` in place. Paths are ranked by descending filled area
/// (ties by document order); packing centers are permuted by a fixed
/// linear-congruential shuffle of the seed; larger paths receive
/// earlier-shuffled centers.
pub fn assign_palette_with(doc: &mut SvgDocument, opts: &PaletteOptions) -> RecolorMap {
    let excluded = |fill: Rgb| opts.exclude_fills.iter().any(|e| *e == fill);
    let mut recolorable: Vec<usize> = (0..doc.paths.len())
        .filter(|&i| !excluded(doc.paths[i].fill))
        .collect();
    let areas: Vec<f64> = doc.paths.iter().map(|p| filled_area(p, 0.1)).collect();
    recolorable.sort_by(|&a, &b| {
        areas[b]
            .partial_cmp(&areas[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });

    let k = recolorable.len();
    let mut map = RecolorMap {
        assignments: BTreeMap::new(),
        source: PaletteSource::Packing,
        separation_radius: 0.0,
    };
    if k == 0 {
        return map;
    }
    let colors: Vec<Rgb> = match packing_centers(k) {
        Packing::Table { radius, centers } => {
            map.source = PaletteSource::Packing;
            map.separation_radius = radius;
            centers.iter().map(|c| Rgb::new(c[0], c[1], c[2])).collect()
        }
        Packing::Fallback => {
            let colors = hsv_fallback(k);
            map.source = PaletteSource::HsvFallback;
            map.separation_radius = min_pairwise_distance(&colors) * 0.5;
            colors
        }
    };
    let mut order: Vec<usize> = (0..k).collect();
    Lcg64::new(opts.seed).shuffle(&mut order);
    for (rank, &path_idx) in recolorable.iter().enumerate() {
        let assigned = colors[order[rank]];
        map.assignments.insert(
            path_idx,
            Assignment {
                original: doc.paths[path_idx].fill,
                assigned,
            },
        );
        doc.paths[path_idx].fill = assigned;
    }
    map
}

fn min_pairwise_distance(colors: &[Rgb]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..colors.len() {
        for j in i + 1..colors.len() {
            best = best.min(colors[i].distance(colors[j]));
        }
    }
    best
}

/// Filled area of a path: absolute sum of signed shoelace areas of its
/// subpaths flattened at the given tolerance (nonzero-rule reading, so
/// opposite-winding holes subtract).
pub fn filled_area(path: &crate::svg::PathGeometry, tol: f64) -> f64 {
    let mut total = 0.0;
    for sp in &path.subpaths {
        let mut poly: Vec<Vec2> = Vec::new();
        for j in 0..sp.len() {
            let cubic = sp.cubic(j);
            flatten_cubic_into(&cubic, tol, &mut poly);
        }
        total += shoelace_area(&poly);
    }
    total.abs()
}

fn flatten_cubic_into(c: &crate::geom::CubicBez, tol: f64, out: &mut Vec<Vec2>) {
    if c.flatness() <= tol {
        out.push(c.p0);
        return;
    }
    let m01 = (c.p0 + c.p1) * 0.5;
    let m12 = (c.p1 + c.p2) * 0.5;
    let m23 = (c.p2 + c.p3) * 0.5;
    let m012 = (m01 + m12) * 0.5;
    let m123 = (m12 + m23) * 0.5;
    let mid = (m012 + m123) * 0.5;
    let left = crate::geom::CubicBez::new(c.p0, m01, m012, mid);
    let right = crate::geom::CubicBez::new(mid, m123, m23, c.p3);
    flatten_cubic_into(&left, tol, out);
    flatten_cubic_into(&right, tol, out);
}

/// Restore every recolored path's fill from the map. Errors if a path
/// whose current fill differs from its original is missing from the map.
pub fn restore_colors(doc: &mut SvgDocument, map: &RecolorMap) -> Result<()> {
    for (idx, assignment) in &map.assignments {
        let path = doc
            .paths
            .get_mut(*idx)
            .ok_or(Error::MissingAssignment { path: *idx })?;
        path.fill = assignment.original;
    }
    for (i, p) in doc.paths.iter().enumerate() {
        if p.fill != p.original_fill {
            return Err(Error::MissingAssignment { path: i });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Map file I/O (`{"<path_index>": {"original": "#..", "assigned": "#.."}}`)
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MapEntry {
    original: String,
    assigned: String,
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    #[serde(flatten)]
    entries: BTreeMap<String, MapEntry>,
    #[serde(rename = "__source", default, skip_serializing_if = "Option::is_none")]
    source: Option<PaletteSource>,
    #[serde(
        rename = "__separation_radius",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    separation_radius: Option<f64>,
}

/// Serialize the map as JSON keyed by path index.
pub fn map_to_json(map: &RecolorMap) -> String {
    let file = MapFile {
        entries: map
            .assignments
            .iter()
            .map(|(k, v)| {
                (
                    k.to_string(),
                    MapEntry {
                        original: v.original.to_hex(),
                        assigned: v.assigned.to_hex(),
                    },
                )
            })
            .collect(),
        source: Some(map.source),
        separation_radius: Some(map.separation_radius),
    };
    serde_json::to_string_pretty(&file).expect("map serialization")
}

/// Parse a map JSON file.
pub fn map_from_json(text: &str) -> Result<RecolorMap> {
    let file: MapFile = serde_json::from_str(text)?;
    let mut assignments = BTreeMap::new();
    for (k, v) in file.entries {
        let idx: usize = k
            .parse()
            .map_err(|_| Error::Config(format!("map key {:?} is not a path index", k)))?;
        assignments.insert(
            idx,
            Assignment {
                original: Rgb::parse(&v.original)?,
                assigned: Rgb::parse(&v.assigned)?,
            },
        );
    }
    let assigned: Vec<Rgb> = assignments.values().map(|a| a.assigned).collect();
    let separation_radius = file.separation_radius.unwrap_or_else(|| {
        if assigned.len() > 1 {
            min_pairwise_distance(&assigned) * 0.5
        } else {
            0.5
        }
    });
    Ok(RecolorMap {
        assignments,
        source: file.source.unwrap_or(PaletteSource::Packing),
        separation_radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::svg::parse_svg;

    #[test]
    fn k1_packing_is_cube_center() {
        match packing_centers(1) {
            Packing::Table { radius, centers } => {
                assert_eq!(radius, 0.5);
                assert_eq!(centers, vec![[0.5, 0.5, 0.5]]);
            }
            Packing::Fallback => panic!("K=1 must be tabulated"),
        }
    }

    #[test]
    fn k2_packing_matches_diagonal_closed_form() {
        // 1D optimization along the main diagonal: sqrt(3)(1-2r) = 2r.
        let r_expect = 3f64.sqrt() / (2.0 + 2.0 * 3f64.sqrt());
        match packing_centers(2) {
            Packing::Table { radius, centers } => {
                assert!((radius - r_expect).abs() < 1e-9, "radius {}", radius);
                for c in &centers {
                    assert!((c[0] - c[1]).abs() < 1e-9 && (c[1] - c[2]).abs() < 1e-9);
                }
                let lo = centers.iter().map(|c| c[0]).fold(f64::INFINITY, f64::min);
                let hi = centers.iter().map(|c| c[0]).fold(0.0, f64::max);
                assert!((lo - radius).abs() < 1e-9);
                assert!((hi - (1.0 - radius)).abs() < 1e-9);
            }
            Packing::Fallback => panic!("K=2 must be tabulated"),
        }
    }

    #[test]
    fn beyond_table_is_fallback() {
        assert_eq!(packing_centers(K_MAX + 1), Packing::Fallback);
    }

    #[test]
    fn all_tabulated_entries_satisfy_radius_invariant() {
        for k in 1..=K_MAX {
            match packing_centers(k) {
                Packing::Table { radius, centers } => {
                    for c in &centers {
                        for &x in c {
                            assert!(
                                x >= radius - 1e-9 && x <= 1.0 - radius + 1e-9,
                                "K={} center {:?} outside [r, 1-r]",
                                k,
                                c
                            );
                        }
                    }
                    for i in 0..k {
                        for j in i + 1..k {
                            let d = (0..3)
                                .map(|a| (centers[i][a] - centers[j][a]).powi(2))
                                .sum::<f64>()
                                .sqrt();
                            assert!(
                                d >= 2.0 * radius - 1e-9,
                                "K={} pair ({}, {}) too close: {} < {}",
                                k,
                                i,
                                j,
                                d,
                                2.0 * radius
                            );
                        }
                    }
                }
                Packing::Fallback => panic!("K={} must be tabulated", k),
            }
        }
    }

    #[test]
    fn hsv_fallback_small_cases() {
        // K=1: hue 0, S=1, V=1 is pure red.
        assert_eq!(hsv_fallback(1), vec![Rgb::new(1.0, 0.0, 0.0)]);
        // K=3: hues {0, 1/3, 2/3} at V = 1, 0.6, 1. Oracle: direct HSV
        // formula evaluation.
        let got = hsv_fallback(3);
        assert!((got[0].r - 1.0).abs() < 1e-12 && got[0].g.abs() < 1e-12);
        assert!((got[1].g - 0.6).abs() < 1e-12 && got[1].r.abs() < 1e-12);
        assert!((got[2].b - 1.0).abs() < 1e-12 && got[2].g.abs() < 1e-12);
    }

    #[test]
    fn hsv_fallback_360_pairwise_distinct() {
        let colors = hsv_fallback(360);
        for i in 0..colors.len() {
            for j in i + 1..colors.len() {
                assert!(
                    colors[i].distance(colors[j]) > 1e-9,
                    "colors {} and {} collide",
                    i,
                    j
                );
            }
        }
    }

    fn two_rect_doc() -> SvgDocument {
        parse_svg(
            r##"<svg viewBox="0 0 10 10">
                <rect x="0" y="0" width="4" height="4" fill="#112233"/>
                <rect x="5" y="5" width="2" height="2" fill="#445566"/>
            </svg>"##,
        )
        .unwrap()
    }

    #[test]
    fn single_path_gets_k1_center() {
        let mut doc = parse_svg(
            r##"<svg viewBox="0 0 10 10"><rect width="4" height="4" fill="#123456"/></svg>"##,
        )
        .unwrap();
        let map = assign_palette(&mut doc);
        assert_eq!(doc.paths[0].fill, Rgb::new(0.5, 0.5, 0.5));
        assert_eq!(map.assignments[&0].original, Rgb::parse("#123456").unwrap());
    }

    #[test]
    fn recolor_restore_identity() {
        let mut doc = two_rect_doc();
        let original: Vec<Rgb> = doc.paths.iter().map(|p| p.fill).collect();
        let map = assign_palette(&mut doc);
        let recolored: Vec<Rgb> = doc.paths.iter().map(|p| p.fill).collect();
        assert_ne!(original, recolored);
        restore_colors(&mut doc, &map).unwrap();
        let restored: Vec<Rgb> = doc.paths.iter().map(|p| p.fill).collect();
        assert_eq!(original, restored);
    }

    #[test]
    fn larger_paths_ranked_first_and_ties_by_document_order() {
        let mut doc = two_rect_doc();
        let map = assign_palette(&mut doc);
        // Path 0 (area 16) outranks path 1 (area 4): it receives the
        // first-shuffled center.
        let k = 2;
        let centers = match packing_centers(k) {
            Packing::Table { centers, .. } => centers,
            _ => unreachable!(),
        };
        let mut order: Vec<usize> = (0..k).collect();
        Lcg64::new(0).shuffle(&mut order);
        let expect0 = centers[order[0]];
        assert_eq!(
            map.assignments[&0].assigned,
            Rgb::new(expect0[0], expect0[1], expect0[2])
        );

        // Equal-area paths tie-break by document order.
        let mut doc2 = parse_svg(
            r##"<svg viewBox="0 0 10 10">
                <rect x="0" y="0" width="2" height="2" fill="#aaaaaa"/>
                <rect x="5" y="5" width="2" height="2" fill="#bbbbbb"/>
            </svg>"##,
        )
        .unwrap();
        let map2 = assign_palette(&mut doc2);
        assert_eq!(
            map2.assignments[&0].assigned,
            Rgb::new(expect0[0], expect0[1], expect0[2])
        );
    }

    #[test]
    fn assign_is_deterministic() {
        let mut a = two_rect_doc();
        let mut b = two_rect_doc();
        assert_eq!(assign_palette(&mut a), assign_palette(&mut b));
        assert_eq!(a, b);
    }

    #[test]
    fn restore_missing_assignment_errors() {
        let mut doc = two_rect_doc();
        let mut map = assign_palette(&mut doc);
        map.assignments.remove(&1);
        match restore_colors(&mut doc, &map) {
            Err(Error::MissingAssignment { path }) => assert_eq!(path, 1),
            other => panic!("expected MissingAssignment, got {:?}", other),
        }
    }

    #[test]
    fn restore_on_unrecolored_doc_with_empty_map_is_noop() {
        let mut doc = two_rect_doc();
        let before = doc.clone();
        let map = RecolorMap {
            assignments: BTreeMap::new(),
            source: PaletteSource::Packing,
            separation_radius: 0.0,
        };
        restore_colors(&mut doc, &map).unwrap();
        assert_eq!(doc, before);
    }

    #[test]
    fn exclude_fills_skips_paths() {
        let mut doc = two_rect_doc();
        let opts = PaletteOptions {
            seed: 0,
            exclude_fills: vec![Rgb::parse("#112233").unwrap()],
        };
        let map = assign_palette_with(&mut doc, &opts);
        assert!(!map.assignments.contains_key(&0));
        assert!(map.assignments.contains_key(&1));
        assert_eq!(doc.paths[0].fill, Rgb::parse("#112233").unwrap());
    }

    #[test]
    fn map_json_roundtrip() {
        let mut doc = two_rect_doc();
        let map = assign_palette(&mut doc);
        let text = map_to_json(&map);
        let back = map_from_json(&text).unwrap();
        assert_eq!(back.assignments.len(), map.assignments.len());
        for (k, v) in &map.assignments {
            let b = &back.assignments[k];
            // Hex quantization: within half an 8-bit step per channel.
            assert!(v.assigned.distance(b.assigned) < 3e-3);
            assert!(v.original.distance(b.original) < 3e-3);
        }
    }

    #[test]
    fn hole_subtracts_from_area() {
        // Ring: outer CCW square, inner CW square (opposite winding).
        let doc = parse_svg(
            r##"<svg viewBox="0 0 10 10">
              <path d="M0 0 L10 0 L10 10 L0 10 Z M2 2 L2 8 L8 8 L8 2 Z" fill="#000"/>
            </svg>"##,
        )
        .unwrap();
        let area = filled_area(&doc.paths[0], 0.1);
        assert!((area - (100.0 - 36.0)).abs() < 1e-6, "area {}", area);
    }
}
