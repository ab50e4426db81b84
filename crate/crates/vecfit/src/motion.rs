//! Dual-level motion parameterization: one absolute 8-DOF homography per
//! group per keyframe (with a learned per-group rotation center), plus
//! per-path per-keyframe control-point offsets.
//!
//! A point deforms as `x̂ = π(H · [x⁰ + Δ, 1]ᵀ)` with
//! `H = P · T · T_c · R · Sh · S · T_{-c}`: perspective, translation, and
//! a similarity block (rotation, shear, anisotropic log-scale) conjugated
//! by the group center so shapes rotate and scale about themselves.
//! Keyframe 0 is pinned at the identity (all parameters zero) and stays
//! frozen throughout optimization.

use crate::error::Error;
use crate::geom::{Mat3, Vec2};
use crate::svg::{flatten_params, SvgDocument};
use crate::Result;
use serde::{Deserialize, Serialize};

/// Minimum homogeneous w before the perspective divide is considered
/// degenerate.
pub const W_EPSILON: f64 = 1e-6;

/// The 8 degrees of freedom of one group's transform at one keyframe.
/// All-zero parameters give the identity; scale is parameterized in log
/// space so it stays positive.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct HomographyParams {
    /// Translation, pixels.
    pub tx: f64,
    pub ty: f64,
    /// Rotation about the group center, radians.
    pub theta: f64,
    /// Log-scale; the applied scale is exp(sx), exp(sy).
    pub sx: f64,
    pub sy: f64,
    pub shear: f64,
    /// Perspective row entries, 1/pixels.
    pub p1: f64,
    pub p2: f64,
}

impl HomographyParams {
    pub fn as_array(&self) -> [f64; 8] {
        [
            self.tx, self.ty, self.theta, self.sx, self.sy, self.shear, self.p1, self.p2,
        ]
    }

    pub fn from_array(a: [f64; 8]) -> Self {
        HomographyParams {
            tx: a[0],
            ty: a[1],
            theta: a[2],
            sx: a[3],
            sy: a[4],
            shear: a[5],
            p1: a[6],
            p2: a[7],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|v| v.is_finite())
    }
}

/// Compose the full homography `P·T·T_c·R·Sh·S·T_{-c}` about center `c`.
pub fn compose_homography(h: &HomographyParams, c: Vec2) -> Mat3 {
    factor_matrices(h, c)
        .iter()
        .fold(Mat3::IDENTITY, |acc, f| acc.mul(f))
}

/// The seven factors of the composition, left to right.
fn factor_matrices(h: &HomographyParams, c: Vec2) -> [Mat3; 7] {
    [
        Mat3::perspective(h.p1, h.p2),
        Mat3::translation(Vec2::new(h.tx, h.ty)),
        Mat3::translation(c),
        Mat3::rotation(h.theta),
        Mat3::shear_x(h.shear),
        Mat3::scale(h.sx.exp(), h.sy.exp()),
        Mat3::translation(-c),
    ]
}

fn unit_mat(r: usize, cidx: usize) -> Mat3 {
    let mut m = Mat3::ZERO;
    m.0[r * 3 + cidx] = 1.0;
    m
}

/// Derivatives of [`compose_homography`] with respect to the 8 parameters
/// and the 2 center coordinates, as 10 matrices in the order
/// `[tx, ty, theta, sx, sy, shear, p1, p2, cx, cy]`.
pub fn homography_jacobian(h: &HomographyParams, c: Vec2) -> [Mat3; 10] {
    let factors = factor_matrices(h, c);
    // Left products L[j] = F0..F_{j-1}, right products R[j] = F_{j+1}..F6.
    let mut left = [Mat3::IDENTITY; 7];
    for j in 1..7 {
        left[j] = left[j - 1].mul(&factors[j - 1]);
    }
    let mut right = [Mat3::IDENTITY; 7];
    for j in (0..6).rev() {
        right[j] = factors[j + 1].mul(&right[j + 1]);
    }
    let around = |j: usize, df: Mat3| left[j].mul(&df).mul(&right[j]);
    let minus = |a: Mat3, b: Mat3| {
        let mut m = [0.0; 9];
        for i in 0..9 {
            m[i] = a.0[i] - b.0[i];
        }
        Mat3(m)
    };

    let (sin_t, cos_t) = h.theta.sin_cos();
    let d_rot = Mat3([-sin_t, -cos_t, 0.0, cos_t, -sin_t, 0.0, 0.0, 0.0, 0.0]);
    let mut d_sx = Mat3::ZERO;
    d_sx.0[0] = h.sx.exp();
    let mut d_sy = Mat3::ZERO;
    d_sy.0[4] = h.sy.exp();

    [
        around(1, unit_mat(0, 2)), // tx
        around(1, unit_mat(1, 2)), // ty
        around(3, d_rot),          // theta
        around(5, d_sx),           // sx
        around(5, d_sy),           // sy
        around(4, unit_mat(0, 1)), // shear
        around(0, unit_mat(2, 0)), // p1
        around(0, unit_mat(2, 1)), // p2
        minus(around(2, unit_mat(0, 2)), around(6, unit_mat(0, 2))), // cx
        minus(around(2, unit_mat(1, 2)), around(6, unit_mat(1, 2))), // cy
    ]
}

/// All motion parameters of a fit: `G x K` homographies, `G` shared
/// centers, and per-keyframe document-wide control-point offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct MotionParams {
    pub group_count: usize,
    pub keyframes: usize,
    /// Indexed `k * group_count + g`.
    pub homographies: Vec<HomographyParams>,
    /// One learned center per group, shared across keyframes.
    pub centers: Vec<Vec2>,
    /// `offsets[k][point]` over the document-wide flattened point vector.
    pub offsets: Vec<Vec<Vec2>>,
    /// Canvas center, the constant pivot `c0`.
    pub global_center: Vec2,
}

impl MotionParams {
    pub fn homography(&self, group: usize, k: usize) -> &HomographyParams {
        &self.homographies[k * self.group_count + group]
    }

    pub fn homography_mut(&mut self, group: usize, k: usize) -> &mut HomographyParams {
        &mut self.homographies[k * self.group_count + group]
    }

    /// Copy keyframe `src`'s homographies and offsets into keyframe `dst`.
    pub fn copy_keyframe(&mut self, src: usize, dst: usize) {
        let g = self.group_count;
        for i in 0..g {
            self.homographies[dst * g + i] = self.homographies[src * g + i];
        }
        let src_offsets = self.offsets[src].clone();
        self.offsets[dst] = src_offsets;
    }
}

/// Rest-pose initialization: all parameters zero, centers at group
/// bounding-box centroids, `c0` at the canvas center. Keyframe 0 is the
/// frozen identity anchor.
pub fn init_params(doc: &SvgDocument, keyframes: usize) -> MotionParams {
    assert!(keyframes >= 1);
    let g = doc.groups.len();
    let n = doc.control_point_count();
    MotionParams {
        group_count: g,
        keyframes,
        homographies: vec![HomographyParams::default(); g * keyframes],
        centers: doc.groups.iter().map(|gr| gr.centroid).collect(),
        offsets: vec![vec![Vec2::ZERO; n]; keyframes],
        global_center: doc.canvas_center(),
    }
}

/// Gradients with the shapes of one keyframe slice of [`MotionParams`].
#[derive(Debug, Clone)]
pub struct KeyframeGrads {
    pub homographies: Vec<[f64; 8]>,
    pub centers: Vec<Vec2>,
    pub offsets: Vec<Vec2>,
}

impl KeyframeGrads {
    pub fn zeros(group_count: usize, points: usize) -> Self {
        KeyframeGrads {
            homographies: vec![[0.0; 8]; group_count],
            centers: vec![Vec2::ZERO; group_count],
            offsets: vec![Vec2::ZERO; points],
        }
    }
}

/// Canonical geometry prepared for motion application: the flattened
/// rest-pose points and each point's owning group.
#[derive(Debug, Clone)]
pub struct MotionModel {
    pub base_points: Vec<Vec2>,
    pub point_group: Vec<usize>,
    pub group_count: usize,
    pub c0: Vec2,
}

/// Per-point values the backward pass reuses.
#[derive(Debug, Clone)]
pub struct MotionCache {
    matrices: Vec<Mat3>,
    jacobians: Vec<[Mat3; 10]>,
    /// (q = x0 + Δ, clamped homogeneous triple) per point.
    points: Vec<(Vec2, [f64; 3])>,
}

impl MotionModel {
    pub fn from_document(doc: &SvgDocument) -> MotionModel {
        let (base_points, table) = flatten_params(doc);
        let path_group = doc.group_of_path();
        let point_group = table.iter().map(|e| path_group[e.path]).collect();
        MotionModel {
            base_points,
            point_group,
            group_count: doc.groups.len(),
            c0: doc.canvas_center(),
        }
    }

    /// Deform every point by keyframe `k`, clamping degenerate w away
    /// from zero (gradients pass through the clamp). Infallible; use
    /// [`MotionModel::forward_strict`] where degeneracy must surface.
    pub fn forward(&self, params: &MotionParams, k: usize) -> (Vec<Vec2>, MotionCache) {
        let matrices: Vec<Mat3> = (0..self.group_count)
            .map(|g| compose_homography(params.homography(g, k), params.centers[g]))
            .collect();
        let jacobians: Vec<[Mat3; 10]> = (0..self.group_count)
            .map(|g| homography_jacobian(params.homography(g, k), params.centers[g]))
            .collect();
        let offsets = &params.offsets[k];
        let mut deformed = Vec::with_capacity(self.base_points.len());
        let mut points = Vec::with_capacity(self.base_points.len());
        for (i, &x0) in self.base_points.iter().enumerate() {
            let q = x0 + offsets[i];
            let h = &matrices[self.point_group[i]];
            let mut v = h.apply_homogeneous(q);
            if v[2].abs() < W_EPSILON {
                v[2] = if v[2] < 0.0 { -W_EPSILON } else { W_EPSILON };
            }
            deformed.push(Vec2::new(v[0] / v[2], v[1] / v[2]));
            points.push((q, v));
        }
        (
            deformed,
            MotionCache {
                matrices,
                jacobians,
                points,
            },
        )
    }

    /// Like [`MotionModel::forward`] but errors on `w <= W_EPSILON`.
    pub fn forward_strict(&self, params: &MotionParams, k: usize) -> Result<Vec<Vec2>> {
        let matrices: Vec<Mat3> = (0..self.group_count)
            .map(|g| compose_homography(params.homography(g, k), params.centers[g]))
            .collect();
        let offsets = &params.offsets[k];
        let mut deformed = Vec::with_capacity(self.base_points.len());
        for (i, &x0) in self.base_points.iter().enumerate() {
            let q = x0 + offsets[i];
            let v = matrices[self.point_group[i]].apply_homogeneous(q);
            if v[2] <= W_EPSILON {
                return Err(Error::DegenerateProjection { point: i, w: v[2] });
            }
            deformed.push(Vec2::new(v[0] / v[2], v[1] / v[2]));
        }
        Ok(deformed)
    }

    /// Chain upstream gradients on deformed points back to the keyframe's
    /// offsets, homography parameters, and group centers.
    pub fn backward(&self, cache: &MotionCache, upstream: &[Vec2]) -> KeyframeGrads {
        assert_eq!(upstream.len(), self.base_points.len());
        let mut grads = KeyframeGrads::zeros(self.group_count, self.base_points.len());
        // Accumulate dL/dH per group as a 3x3, then contract with each
        // parameter's matrix derivative once per group.
        let mut dl_dh = vec![Mat3::ZERO; self.group_count];
        for (i, (&up, &(q, v))) in upstream.iter().zip(cache.points.iter()).enumerate() {
            let g = self.point_group[i];
            let h = &cache.matrices[g];
            let w = v[2];
            let inv_w = 1.0 / w;
            // u = (∂x̂/∂v)ᵀ · upstream, with straight-through w clamp.
            let u = [
                up.x * inv_w,
                up.y * inv_w,
                -(up.x * v[0] + up.y * v[1]) * inv_w * inv_w,
            ];
            // dL/dq through the linear columns of H.
            grads.offsets[i] = Vec2::new(
                u[0] * h.at(0, 0) + u[1] * h.at(1, 0) + u[2] * h.at(2, 0),
                u[0] * h.at(0, 1) + u[1] * h.at(1, 1) + u[2] * h.at(2, 1),
            );
            // dL/dH += u · [q, 1]ᵀ
            let qh = [q.x, q.y, 1.0];
            let m = &mut dl_dh[g].0;
            for r in 0..3 {
                for cidx in 0..3 {
                    m[r * 3 + cidx] += u[r] * qh[cidx];
                }
            }
        }
        for g in 0..self.group_count {
            let jac = &cache.jacobians[g];
            let contract = |dm: &Mat3| -> f64 {
                dl_dh[g]
                    .0
                    .iter()
                    .zip(dm.0.iter())
                    .map(|(a, b)| a * b)
                    .sum()
            };
            for (pi, grad_slot) in grads.homographies[g].iter_mut().enumerate() {
                *grad_slot = contract(&jac[pi]);
            }
            grads.centers[g] = Vec2::new(contract(&jac[8]), contract(&jac[9]));
        }
        grads
    }
}

// ---------------------------------------------------------------------------
// Checkpoint serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct KeyframeCk {
    groups: Vec<[f64; 8]>,
    offsets: Vec<[f64; 2]>,
}

/// JSON checkpoint: group centers plus per-keyframe homography 8-vectors
/// and point offsets, together with the pixel resolution and canvas size
/// the parameters were fitted at (needed to map back to user units).
#[derive(Serialize, Deserialize)]
struct CheckpointFile {
    resolution: [usize; 2],
    canvas: [f64; 2],
    centers: Vec<[f64; 2]>,
    keyframes: Vec<KeyframeCk>,
}

/// Serialize fitted parameters to the checkpoint JSON format.
pub fn params_to_json(
    params: &MotionParams,
    resolution: (usize, usize),
    canvas: (f64, f64),
) -> String {
    let file = CheckpointFile {
        resolution: [resolution.0, resolution.1],
        canvas: [canvas.0, canvas.1],
        centers: params.centers.iter().map(|c| [c.x, c.y]).collect(),
        keyframes: (0..params.keyframes)
            .map(|k| KeyframeCk {
                groups: (0..params.group_count)
                    .map(|g| params.homography(g, k).as_array())
                    .collect(),
                offsets: params.offsets[k].iter().map(|d| [d.x, d.y]).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("checkpoint serialization")
}

/// Parse a checkpoint produced by [`params_to_json`]. Returns the
/// parameters plus the fit resolution and canvas recorded in the file.
pub fn params_from_json(text: &str) -> Result<(MotionParams, (usize, usize), (f64, f64))> {
    let file: CheckpointFile = serde_json::from_str(text)?;
    let keyframes = file.keyframes.len();
    if keyframes == 0 {
        return Err(Error::Config("checkpoint has no keyframes".into()));
    }
    let group_count = file.centers.len();
    let points = file.keyframes[0].offsets.len();
    let mut homographies = Vec::with_capacity(group_count * keyframes);
    let mut offsets = Vec::with_capacity(keyframes);
    for (k, kf) in file.keyframes.iter().enumerate() {
        if kf.groups.len() != group_count || kf.offsets.len() != points {
            return Err(Error::Config(format!(
                "checkpoint keyframe {} has inconsistent shapes",
                k
            )));
        }
        for g in &kf.groups {
            homographies.push(HomographyParams::from_array(*g));
        }
        offsets.push(kf.offsets.iter().map(|o| Vec2::new(o[0], o[1])).collect());
    }
    let params = MotionParams {
        group_count,
        keyframes,
        homographies,
        centers: file.centers.iter().map(|c| Vec2::new(c[0], c[1])).collect(),
        offsets,
        global_center: Vec2::new(
            file.resolution[0] as f64 * 0.5,
            file.resolution[1] as f64 * 0.5,
        ),
    };
    Ok((
        params,
        (file.resolution[0], file.resolution[1]),
        (file.canvas[0], file.canvas[1]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::svg::parse_svg;

    #[test]
    fn zero_params_identity_for_any_center() {
        let h = HomographyParams::default();
        for c in [Vec2::ZERO, Vec2::new(10.0, -3.0), Vec2::new(1e3, 1e3)] {
            let m = compose_homography(&h, c);
            for (i, (a, b)) in m.0.iter().zip(Mat3::IDENTITY.0.iter()).enumerate() {
                assert!((a - b).abs() < 1e-12, "entry {} differs", i);
            }
        }
    }

    #[test]
    fn pure_translation_ignores_center() {
        let h = HomographyParams {
            tx: 5.0,
            ..Default::default()
        };
        let m = compose_homography(&h, Vec2::new(100.0, 200.0));
        let expect = Mat3::translation(Vec2::new(5.0, 0.0));
        for (a, b) in m.0.iter().zip(expect.0.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn quarter_turn_about_center() {
        // Oracle: multiply the factor matrices numerically.
        let h = HomographyParams {
            theta: std::f64::consts::FRAC_PI_2,
            ..Default::default()
        };
        let c = Vec2::new(10.0, 10.0);
        let m = compose_homography(&h, c);
        let p = m.apply_affine(Vec2::new(11.0, 10.0));
        assert!((p - Vec2::new(10.0, 11.0)).norm() < 1e-12, "got {:?}", p);
    }

    fn toy_doc() -> SvgDocument {
        parse_svg(
            r##"<svg viewBox="0 0 64 64">
              <g id="a"><rect x="8" y="8" width="16" height="12" fill="#123456"/></g>
              <g id="b"><rect x="32" y="30" width="20" height="20" fill="#654321"/></g>
            </svg>"##,
        )
        .unwrap()
    }

    #[test]
    fn init_is_rest_pose() {
        let doc = toy_doc();
        let params = init_params(&doc, 15);
        assert_eq!(params.keyframes, 15);
        assert_eq!(params.homographies.len(), 2 * 15);
        // Centers at group bbox centroids.
        assert_eq!(params.centers[0], Vec2::new(16.0, 14.0));
        assert_eq!(params.centers[1], Vec2::new(42.0, 40.0));
        assert_eq!(params.global_center, Vec2::new(32.0, 32.0));
        let model = MotionModel::from_document(&doc);
        let (deformed, _) = model.forward(&params, 0);
        assert_eq!(deformed, model.base_points);
    }

    #[test]
    fn identity_with_offset_shifts_single_point() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 2);
        let model = MotionModel::from_document(&doc);
        params.offsets[1][3] = Vec2::new(2.0, 3.0);
        let (deformed, _) = model.forward(&params, 1);
        for (i, (&d, &b)) in deformed.iter().zip(model.base_points.iter()).enumerate() {
            let expect = if i == 3 { b + Vec2::new(2.0, 3.0) } else { b };
            assert!((d - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn perspective_matches_homogeneous_oracle() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 2);
        params.homography_mut(0, 1).p1 = 0.001;
        params.homography_mut(0, 1).tx = 2.0;
        let model = MotionModel::from_document(&doc);
        let (deformed, _) = model.forward(&params, 1);
        // Oracle: independent homogeneous evaluation.
        let m = compose_homography(params.homography(0, 1), params.centers[0]);
        for (i, &b) in model.base_points.iter().enumerate() {
            if model.point_group[i] != 0 {
                continue;
            }
            let v = m.apply_homogeneous(b);
            let expect = Vec2::new(v[0] / v[2], v[1] / v[2]);
            assert!((deformed[i] - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn pure_translation_moves_all_points_exactly() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 2);
        for g in 0..2 {
            params.homography_mut(g, 1).tx = -7.5;
            params.homography_mut(g, 1).ty = 3.25;
        }
        let model = MotionModel::from_document(&doc);
        let (deformed, _) = model.forward(&params, 1);
        for (d, b) in deformed.iter().zip(model.base_points.iter()) {
            assert!((*d - (*b + Vec2::new(-7.5, 3.25))).norm() < 1e-12);
        }
    }

    #[test]
    fn strict_forward_rejects_degenerate_w() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 2);
        // Large negative perspective drives w through zero for far points.
        params.homography_mut(0, 1).p1 = -0.2;
        let model = MotionModel::from_document(&doc);
        match model.forward_strict(&params, 1) {
            Err(Error::DegenerateProjection { .. }) => {}
            other => panic!("expected DegenerateProjection, got {:?}", other.map(|_| ())),
        }
        // The clamped forward stays finite.
        let (deformed, _) = model.forward(&params, 1);
        assert!(deformed.iter().all(|p| p.is_finite()));
    }

    #[test]
    fn backward_zero_upstream_zero_grads() {
        let doc = toy_doc();
        let params = init_params(&doc, 2);
        let model = MotionModel::from_document(&doc);
        let (_, cache) = model.forward(&params, 1);
        let grads = model.backward(&cache, &vec![Vec2::ZERO; model.base_points.len()]);
        assert!(grads.offsets.iter().all(|g| *g == Vec2::ZERO));
        assert!(grads
            .homographies
            .iter()
            .all(|h| h.iter().all(|v| *v == 0.0)));
        assert!(grads.centers.iter().all(|c| *c == Vec2::ZERO));
    }

    #[test]
    fn backward_identity_passes_upstream_to_offsets() {
        let doc = toy_doc();
        let params = init_params(&doc, 2);
        let model = MotionModel::from_document(&doc);
        let (_, cache) = model.forward(&params, 1);
        let mut upstream = vec![Vec2::ZERO; model.base_points.len()];
        upstream[5] = Vec2::new(0.5, -1.5);
        let grads = model.backward(&cache, &upstream);
        assert!((grads.offsets[5] - Vec2::new(0.5, -1.5)).norm() < 1e-12);
    }

    /// Loss for the finite-difference oracle: a fixed random linear
    /// functional of the deformed points.
    fn probe_loss(model: &MotionModel, params: &MotionParams, k: usize, coeffs: &[Vec2]) -> f64 {
        let (deformed, _) = model.forward(params, k);
        deformed
            .iter()
            .zip(coeffs.iter())
            .map(|(p, c)| p.x * c.x + p.y * c.y)
            .sum()
    }

    #[test]
    fn backward_matches_finite_differences() {
        let doc = toy_doc();
        let model = MotionModel::from_document(&doc);
        let mut rng = crate::rng::Lcg64::new(7);
        let mut params = init_params(&doc, 2);
        for g in 0..2 {
            let h = params.homography_mut(g, 1);
            h.tx = rng.uniform(-5.0, 5.0);
            h.ty = rng.uniform(-5.0, 5.0);
            h.theta = rng.uniform(-0.5, 0.5);
            h.sx = rng.uniform(-0.2, 0.2);
            h.sy = rng.uniform(-0.2, 0.2);
            h.shear = rng.uniform(-0.3, 0.3);
            h.p1 = rng.uniform(-1e-3, 1e-3);
            h.p2 = rng.uniform(-1e-3, 1e-3);
        }
        for o in params.offsets[1].iter_mut() {
            *o = Vec2::new(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        }
        let coeffs: Vec<Vec2> = (0..model.base_points.len())
            .map(|_| Vec2::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)))
            .collect();

        let (_, cache) = model.forward(&params, 1);
        let grads = model.backward(&cache, &coeffs);

        let h_step = 1e-5;
        let check = |analytic: f64, plus: f64, minus: f64, label: &str| {
            let fd = (plus - minus) / (2.0 * h_step);
            let denom = fd.abs().max(1e-9);
            assert!(
                (analytic - fd).abs() / denom <= 1e-4,
                "{}: analytic {} vs fd {}",
                label,
                analytic,
                fd
            );
        };

        for g in 0..2 {
            for pi in 0..8 {
                let mut plus = params.clone();
                let mut minus = params.clone();
                let mut ap = plus.homography(g, 1).as_array();
                let mut am = minus.homography(g, 1).as_array();
                ap[pi] += h_step;
                am[pi] -= h_step;
                *plus.homography_mut(g, 1) = HomographyParams::from_array(ap);
                *minus.homography_mut(g, 1) = HomographyParams::from_array(am);
                check(
                    grads.homographies[g][pi],
                    probe_loss(&model, &plus, 1, &coeffs),
                    probe_loss(&model, &minus, 1, &coeffs),
                    &format!("group {} h[{}]", g, pi),
                );
            }
            for axis in 0..2 {
                let mut plus = params.clone();
                let mut minus = params.clone();
                if axis == 0 {
                    plus.centers[g].x += h_step;
                    minus.centers[g].x -= h_step;
                } else {
                    plus.centers[g].y += h_step;
                    minus.centers[g].y -= h_step;
                }
                let analytic = if axis == 0 {
                    grads.centers[g].x
                } else {
                    grads.centers[g].y
                };
                check(
                    analytic,
                    probe_loss(&model, &plus, 1, &coeffs),
                    probe_loss(&model, &minus, 1, &coeffs),
                    &format!("group {} center[{}]", g, axis),
                );
            }
        }
        for i in (0..model.base_points.len()).step_by(5) {
            for axis in 0..2 {
                let mut plus = params.clone();
                let mut minus = params.clone();
                if axis == 0 {
                    plus.offsets[1][i].x += h_step;
                    minus.offsets[1][i].x -= h_step;
                } else {
                    plus.offsets[1][i].y += h_step;
                    minus.offsets[1][i].y -= h_step;
                }
                let analytic = if axis == 0 {
                    grads.offsets[i].x
                } else {
                    grads.offsets[i].y
                };
                check(
                    analytic,
                    probe_loss(&model, &plus, 1, &coeffs),
                    probe_loss(&model, &minus, 1, &coeffs),
                    &format!("offset {} axis {}", i, axis),
                );
            }
        }
    }

    #[test]
    fn checkpoint_roundtrip_bit_exact() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 3);
        params.homography_mut(1, 2).theta = 0.25;
        params.offsets[1][7] = Vec2::new(0.125, -2.5);
        let text = params_to_json(&params, (256, 256), (64.0, 64.0));
        let (back, res, canvas) = params_from_json(&text).unwrap();
        assert_eq!(res, (256, 256));
        assert_eq!(canvas, (64.0, 64.0));
        assert_eq!(back.group_count, params.group_count);
        assert_eq!(back.keyframes, params.keyframes);
        assert_eq!(back.homographies, params.homographies);
        assert_eq!(back.offsets, params.offsets);
        assert_eq!(back.centers, params.centers);
    }

    #[test]
    fn copy_keyframe_is_exact() {
        let doc = toy_doc();
        let mut params = init_params(&doc, 3);
        params.homography_mut(0, 1).tx = 4.5;
        params.offsets[1][2] = Vec2::new(1.0, -1.0);
        params.copy_keyframe(1, 2);
        assert_eq!(params.homography(0, 2), params.homography(0, 1));
        assert_eq!(params.offsets[2], params.offsets[1]);
    }
}
