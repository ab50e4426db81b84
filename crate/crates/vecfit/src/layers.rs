//! Mask-evidence layer reordering: estimate a motion-consistent painter
//! order before fitting.
//!
//! Groups that stay in front keep their exclusive visible area while
//! overlapping; occluded groups lose it. Per-frame group masks come from
//! palette-nearest-color classification of the (recolored) target frames,
//! or from user-supplied mask directories. Pairwise occlusion scores are
//! weighted by bounding-box intersection area and resolved into a global
//! order by topological sort, falling back to the original order when the
//! evidence is cyclic.

use crate::error::Error;
use crate::palette::RecolorMap;
use crate::raster::{ForegroundMask, RasterFrame};
use crate::svg::SvgDocument;
use crate::Result;

/// Per-group mask track over the frame sequence.
#[derive(Debug, Clone)]
pub struct GroupMaskSequence {
    /// `masks[g][t]` is group g's mask at frame t.
    pub masks: Vec<Vec<ForegroundMask>>,
    /// Baseline areas: pixels of each group's frame-0 mask.
    pub baseline: Vec<usize>,
}

impl GroupMaskSequence {
    pub fn group_count(&self) -> usize {
        self.masks.len()
    }

    pub fn frame_count(&self) -> usize {
        self.masks.first().map(|m| m.len()).unwrap_or(0)
    }
}

/// Classify every non-white pixel of a frame to the nearest assigned
/// palette color (within half the guaranteed separation) and return one
/// mask per group.
pub fn classify_frame_by_palette(
    frame: &RasterFrame,
    map: &RecolorMap,
    doc: &SvgDocument,
    white_thresh: f64,
) -> Result<Vec<ForegroundMask>> {
    if map.assignments.is_empty() {
        return Err(Error::PaletteRequired);
    }
    let group_of_path = doc.group_of_path();
    let palette: Vec<(usize, [f64; 3])> = map
        .assignments
        .iter()
        .map(|(path, a)| (group_of_path[*path], a.assigned.channels()))
        .collect();
    let radius = map.classify_radius().max(1e-6);
    let mut masks = vec![ForegroundMask::new(frame.width, frame.height); doc.groups.len()];
    for y in 0..frame.height {
        for x in 0..frame.width {
            let px = frame.pixel(x, y);
            if px[0].min(px[1]).min(px[2]) >= white_thresh {
                continue;
            }
            let mut best = f64::INFINITY;
            let mut best_group = usize::MAX;
            for (g, c) in &palette {
                let d2 = (px[0] - c[0]) * (px[0] - c[0])
                    + (px[1] - c[1]) * (px[1] - c[1])
                    + (px[2] - c[2]) * (px[2] - c[2]);
                if d2 < best {
                    best = d2;
                    best_group = *g;
                }
            }
            // Unassigned when no palette color is within the separation
            // radius.
            if best.sqrt() <= radius && best_group != usize::MAX {
                masks[best_group].set(x, y, true);
            }
        }
    }
    Ok(masks)
}

/// Build the per-group mask sequence from target frames via palette
/// classification.
pub fn group_masks_from_palette(
    frames: &[RasterFrame],
    map: &RecolorMap,
    doc: &SvgDocument,
    white_thresh: f64,
) -> Result<GroupMaskSequence> {
    let mut masks: Vec<Vec<ForegroundMask>> = vec![Vec::new(); doc.groups.len()];
    for frame in frames {
        let per_group = classify_frame_by_palette(frame, map, doc, white_thresh)?;
        for (g, m) in per_group.into_iter().enumerate() {
            masks[g].push(m);
        }
    }
    let baseline = masks
        .iter()
        .map(|track| track.first().map(|m| m.count()).unwrap_or(0))
        .collect();
    Ok(GroupMaskSequence { masks, baseline })
}

/// Build the sequence from user-supplied mask tracks (one per group, in
/// group order).
pub fn group_masks_from_tracks(tracks: Vec<Vec<ForegroundMask>>) -> GroupMaskSequence {
    let baseline = tracks
        .iter()
        .map(|t| t.first().map(|m| m.count()).unwrap_or(0))
        .collect();
    GroupMaskSequence {
        masks: tracks,
        baseline,
    }
}

/// Pairwise occlusion evidence. `scores[(i, j)] = s(i, j)` with
/// `s(i, j) = -s(j, i)`; pairs whose bounding boxes never intersect are
/// absent.
#[derive(Debug, Clone)]
pub struct OcclusionScores {
    pub scores: std::collections::BTreeMap<(usize, usize), f64>,
    /// Scores with |s| <= epsilon are ambiguous and add no edge.
    pub epsilon: f64,
}

/// Default ambiguity threshold.
pub const DEFAULT_EPSILON: f64 = 0.05;

/// Exclusive-area retention score of group `i` against `j`: the
/// box-intersection-weighted mean of `R_i(t) - R_j(t)`, where `R` is the
/// exclusive area (pixels claimed by no other group) divided by the
/// frame-0 baseline. Returns None when the boxes never intersect.
pub fn occlusion_score(seq: &GroupMaskSequence, i: usize, j: usize) -> Option<f64> {
    let frames = seq.frame_count();
    assert!(seq.baseline[i] > 0 && seq.baseline[j] > 0, "empty baseline");
    let mut num = 0.0;
    let mut den = 0.0;
    for t in 0..frames {
        let w = bbox_intersection_area(&seq.masks[i][t], &seq.masks[j][t]);
        if w == 0.0 {
            continue;
        }
        let ri = exclusive_area(seq, i, t) as f64 / seq.baseline[i] as f64;
        let rj = exclusive_area(seq, j, t) as f64 / seq.baseline[j] as f64;
        num += w * (ri - rj);
        den += w;
    }
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

/// Pixels of group `g` at frame `t` claimed by no other group.
fn exclusive_area(seq: &GroupMaskSequence, g: usize, t: usize) -> usize {
    let mask = &seq.masks[g][t];
    let mut count = 0;
    'pixel: for idx in 0..mask.bits.len() {
        if !mask.bits[idx] {
            continue;
        }
        for (other, track) in seq.masks.iter().enumerate() {
            if other != g && track[t].bits[idx] {
                continue 'pixel;
            }
        }
        count += 1;
    }
    count
}

fn bbox_intersection_area(a: &ForegroundMask, b: &ForegroundMask) -> f64 {
    let (Some(ba), Some(bb)) = (a.bbox(), b.bbox()) else {
        return 0.0;
    };
    let x0 = ba.0.max(bb.0);
    let y0 = ba.1.max(bb.1);
    let x1 = ba.2.min(bb.2);
    let y1 = ba.3.min(bb.3);
    if x0 > x1 || y0 > y1 {
        0.0
    } else {
        ((x1 - x0 + 1) * (y1 - y0 + 1)) as f64
    }
}

/// Compute all pairwise scores for groups with positive baselines.
pub fn compute_scores(seq: &GroupMaskSequence, epsilon: f64) -> OcclusionScores {
    let g = seq.group_count();
    let mut scores = std::collections::BTreeMap::new();
    for i in 0..g {
        for j in i + 1..g {
            if seq.baseline[i] == 0 || seq.baseline[j] == 0 {
                continue;
            }
            if let Some(s) = occlusion_score(seq, i, j) {
                scores.insert((i, j), s);
                scores.insert((j, i), -s);
            }
        }
    }
    OcclusionScores { scores, epsilon }
}

/// Outcome of reordering: the new painter order and whether the cyclic
/// fallback fired.
#[derive(Debug, Clone, PartialEq)]
pub struct ReorderOutcome {
    pub painter_order: Vec<usize>,
    pub used_fallback: bool,
}

/// Derive a new painter order from occlusion scores: `s(i, j) > epsilon`
/// means "i in front of j". Groups are topologically sorted back to
/// front (Kahn's algorithm, in-degree ties by original group order);
/// within a group the original relative path order is preserved. A cycle
/// keeps the original order and reports the fallback.
pub fn reorder(doc: &SvgDocument, scores: &OcclusionScores) -> ReorderOutcome {
    let g = doc.groups.len();
    // Edge behind -> front: j -> i when i occludes j.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g];
    let mut indegree = vec![0usize; g];
    for (&(i, j), &s) in &scores.scores {
        if s > scores.epsilon {
            // i in front of j: paint j first.
            adj[j].push(i);
            indegree[i] += 1;
        }
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let mut ready: Vec<usize> = (0..g).filter(|&n| indegree[n] == 0).collect();
    let mut order = Vec::with_capacity(g);
    while !ready.is_empty() {
        // In-degree ties resolve by original group order.
        ready.sort_unstable();
        let n = ready.remove(0);
        order.push(n);
        for &m in &adj[n] {
            indegree[m] -= 1;
            if indegree[m] == 0 {
                ready.push(m);
            }
        }
    }
    if order.len() != g {
        log::warn!("occlusion evidence is cyclic; keeping the original painter order");
        return ReorderOutcome {
            painter_order: doc.painter_order.clone(),
            used_fallback: true,
        };
    }
    let mut painter_order = Vec::with_capacity(doc.paths.len());
    for &gi in &order {
        // Original relative path order within the group follows the
        // current painter order.
        for &pi in &doc.painter_order {
            if doc.groups[gi].path_indices.contains(&pi) {
                painter_order.push(pi);
            }
        }
    }
    ReorderOutcome {
        painter_order,
        used_fallback: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palette::assign_palette;
    use crate::raster::{Renderer, Scene};
    use crate::svg::parse_svg;

    fn mask_rect(w: usize, h: usize, x0: usize, y0: usize, x1: usize, y1: usize) -> ForegroundMask {
        let mut m = ForegroundMask::new(w, h);
        for y in y0..=y1 {
            for x in x0..=x1 {
                m.set(x, y, true);
            }
        }
        m
    }

    #[test]
    fn classify_recovers_rendered_groups() {
        let mut doc = parse_svg(
            r##"<svg viewBox="0 0 32 32">
              <g id="a"><rect x="2" y="2" width="12" height="12" fill="#777777"/></g>
              <g id="b"><rect x="18" y="18" width="10" height="10" fill="#777778"/></g>
            </svg>"##,
        )
        .unwrap();
        let map = assign_palette(&mut doc);
        let frame = Renderer::new(0.25).render(&Scene::from_document(&doc, 32, 32));
        let masks = classify_frame_by_palette(&frame, &map, &doc, 0.98).unwrap();
        assert!(masks[0].get(8, 8));
        assert!(!masks[1].get(8, 8));
        assert!(masks[1].get(22, 22));
        assert!(!masks[0].get(22, 22));
        assert!(!masks[0].get(31, 0) && !masks[1].get(31, 0));
    }

    #[test]
    fn classify_with_noise_mostly_correct() {
        let mut doc = parse_svg(
            r##"<svg viewBox="0 0 64 64">
              <g id="a"><rect x="4" y="4" width="24" height="24" fill="#101010"/></g>
              <g id="b"><rect x="36" y="4" width="24" height="24" fill="#202020"/></g>
              <g id="c"><rect x="4" y="36" width="24" height="24" fill="#303030"/></g>
              <g id="d"><rect x="36" y="36" width="24" height="24" fill="#404040"/></g>
            </svg>"##,
        )
        .unwrap();
        let map = assign_palette(&mut doc);
        let mut frame = Renderer::new(0.25).render(&Scene::from_document(&doc, 64, 64));
        let mut rng = crate::rng::Lcg64::new(17);
        for v in frame.data.iter_mut() {
            *v = (*v + rng.uniform(-0.05, 0.05)).clamp(0.0, 1.0);
        }
        let masks = classify_frame_by_palette(&frame, &map, &doc, 0.98).unwrap();
        // Interior pixels (2px margin) of each group must classify >= 99%
        // correctly; nearest-color is definitional, so the oracle is the
        // group geometry itself.
        let regions = [
            (6, 6, 26, 26, 0usize),
            (38, 6, 58, 26, 1),
            (6, 38, 26, 58, 2),
            (38, 38, 58, 58, 3),
        ];
        for (x0, y0, x1, y1, g) in regions {
            let mut total = 0;
            let mut correct = 0;
            for y in y0..y1 {
                for x in x0..x1 {
                    total += 1;
                    if masks[g].get(x, y) {
                        correct += 1;
                    }
                }
            }
            assert!(
                correct as f64 >= 0.99 * total as f64,
                "group {}: {}/{}",
                g,
                correct,
                total
            );
        }
    }

    #[test]
    fn classify_requires_palette() {
        let doc = parse_svg(
            r##"<svg viewBox="0 0 16 16"><rect width="4" height="4" fill="#123"/></svg>"##,
        )
        .unwrap();
        let empty = RecolorMap {
            assignments: Default::default(),
            source: crate::palette::PaletteSource::Packing,
            separation_radius: 0.0,
        };
        let frame = RasterFrame::filled(16, 16, crate::svg::Rgb::WHITE);
        match classify_frame_by_palette(&frame, &empty, &doc, 0.98) {
            Err(Error::PaletteRequired) => {}
            other => panic!("expected PaletteRequired, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn occlusion_score_weighted_mean() {
        // Group 0: fixed 8x8 block. Group 1: disjoint for two frames,
        // then slides next to group 0 with one shared column.
        let (w, h) = (32, 16);
        let m0: Vec<ForegroundMask> = (0..4).map(|_| mask_rect(w, h, 4, 4, 11, 11)).collect();
        let mut m1 = vec![
            mask_rect(w, h, 20, 4, 27, 11),
            mask_rect(w, h, 20, 4, 27, 11),
        ];
        for _ in 2..4 {
            m1.push(mask_rect(w, h, 11, 4, 15, 11));
        }
        let seq = group_masks_from_tracks(vec![m0, m1]);
        // Overlap frames: shared column x=11 (8 px) is exclusive to
        // neither. exclusive(0) = 64-8, R_0 = 56/64; exclusive(1) = 40-8,
        // R_1 = 32/40. Weights are equal across the two overlap frames,
        // so s is their plain difference.
        let s = occlusion_score(&seq, 0, 1).unwrap();
        let expect = 56.0 / 64.0 - 32.0 / 40.0;
        assert!((s - expect).abs() < 1e-9, "s = {}", s);
        let s_ji = occlusion_score(&seq, 1, 0).unwrap();
        assert!((s + s_ji).abs() < 1e-9);
    }

    #[test]
    fn identical_masks_score_zero() {
        let m: Vec<ForegroundMask> = (0..3).map(|_| mask_rect(16, 16, 2, 2, 9, 9)).collect();
        let seq = group_masks_from_tracks(vec![m.clone(), m]);
        let s = occlusion_score(&seq, 0, 1).unwrap();
        assert!(s.abs() < 1e-9);
    }

    #[test]
    fn never_overlapping_pairs_have_no_edge() {
        let a: Vec<ForegroundMask> = (0..3).map(|_| mask_rect(32, 16, 1, 1, 6, 6)).collect();
        let b: Vec<ForegroundMask> = (0..3).map(|_| mask_rect(32, 16, 20, 8, 27, 14)).collect();
        let seq = group_masks_from_tracks(vec![a, b]);
        assert!(occlusion_score(&seq, 0, 1).is_none());
        let scores = compute_scores(&seq, DEFAULT_EPSILON);
        assert!(scores.scores.is_empty());
    }

    fn three_group_doc() -> SvgDocument {
        parse_svg(
            r##"<svg viewBox="0 0 32 32">
              <g id="a"><rect x="1" y="1" width="6" height="6" fill="#111111"/></g>
              <g id="b"><rect x="12" y="1" width="6" height="6" fill="#222222"/></g>
              <g id="c"><rect x="22" y="1" width="6" height="6" fill="#333333"/></g>
            </svg>"##,
        )
        .unwrap()
    }

    #[test]
    fn reorder_all_ambiguous_is_identity() {
        let doc = three_group_doc();
        let scores = OcclusionScores {
            scores: Default::default(),
            epsilon: DEFAULT_EPSILON,
        };
        let out = reorder(&doc, &scores);
        assert_eq!(out.painter_order, doc.painter_order);
        assert!(!out.used_fallback);
    }

    #[test]
    fn reorder_chain_front_to_back() {
        // Edge chain c in front of b in front of a, on groups originally
        // ordered a, b, c: painter order paints a first.
        let doc = three_group_doc();
        let mut scores = std::collections::BTreeMap::new();
        scores.insert((2, 1), 0.5);
        scores.insert((1, 2), -0.5);
        scores.insert((1, 0), 0.5);
        scores.insert((0, 1), -0.5);
        let out = reorder(
            &doc,
            &OcclusionScores {
                scores,
                epsilon: DEFAULT_EPSILON,
            },
        );
        assert_eq!(out.painter_order, vec![0, 1, 2]);
        assert!(!out.used_fallback);
        // Reversed chain: a in front of b in front of c.
        let mut scores2 = std::collections::BTreeMap::new();
        scores2.insert((0, 1), 0.5);
        scores2.insert((1, 0), -0.5);
        scores2.insert((1, 2), 0.5);
        scores2.insert((2, 1), -0.5);
        let out2 = reorder(
            &doc,
            &OcclusionScores {
                scores: scores2,
                epsilon: DEFAULT_EPSILON,
            },
        );
        assert_eq!(out2.painter_order, vec![2, 1, 0]);
    }

    #[test]
    fn reorder_cycle_falls_back() {
        let doc = three_group_doc();
        let mut scores = std::collections::BTreeMap::new();
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            scores.insert((i, j), 0.5);
            scores.insert((j, i), -0.5);
        }
        let out = reorder(
            &doc,
            &OcclusionScores {
                scores,
                epsilon: DEFAULT_EPSILON,
            },
        );
        assert_eq!(out.painter_order, doc.painter_order);
        assert!(out.used_fallback);
    }

    #[test]
    fn reorder_preserves_within_group_path_order() {
        let doc = parse_svg(
            r##"<svg viewBox="0 0 32 32">
              <g id="a">
                <rect x="1" y="1" width="6" height="6" fill="#111111"/>
                <rect x="2" y="2" width="6" height="6" fill="#444444"/>
              </g>
              <g id="b"><rect x="12" y="1" width="6" height="6" fill="#222222"/></g>
            </svg>"##,
        )
        .unwrap();
        let mut scores = std::collections::BTreeMap::new();
        // a in front of b: paint b first.
        scores.insert((0, 1), 0.5);
        scores.insert((1, 0), -0.5);
        let out = reorder(
            &doc,
            &OcclusionScores {
                scores,
                epsilon: DEFAULT_EPSILON,
            },
        );
        assert_eq!(out.painter_order, vec![2, 0, 1]);
    }
}
