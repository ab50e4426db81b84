//! Adaptive Bézier flattening that records, for every polyline vertex, its
//! exact linear weights onto the owning segment's four control points.
//!
//! Subdivision is recursive de Casteljau until the handles deviate from
//! the chord by at most the tolerance. Vertices land on the curve at known
//! parameters, so each is the Bernstein-weighted convex combination of at
//! most four control points; those weights make the rasterizer's vertex
//! gradients exact in closed form.

use crate::geom::{bernstein3, CubicBez, Vec2};

/// One polyline vertex with its sparse control-point weights.
/// `controls` are path-local flattened point indices; `weights` are the
/// Bernstein coefficients at the vertex parameter (nonnegative, sum 1).
#[derive(Debug, Clone, Copy)]
pub struct OutlineVertex {
    pub pos: Vec2,
    pub controls: [u32; 4],
    pub weights: [f64; 4],
}

/// Flattened closed outline of one path: one polyline loop per subpath.
#[derive(Debug, Clone, Default)]
pub struct FlattenedOutline {
    pub loops: Vec<Vec<OutlineVertex>>,
}

impl FlattenedOutline {
    pub fn vertex_count(&self) -> usize {
        self.loops.iter().map(|l| l.len()).sum()
    }
}

/// Subdivision parameters of one cubic: returns the split parameters
/// (piece start values in (0,1]) such that every piece is flat within
/// `tol`.
fn flatten_params_rec(c: &CubicBez, t0: f64, t1: f64, tol: f64, depth: u32, out: &mut Vec<f64>) {
    if depth >= 24 || c.flatness() <= tol {
        out.push(t0);
        return;
    }
    let m01 = (c.p0 + c.p1) * 0.5;
    let m12 = (c.p1 + c.p2) * 0.5;
    let m23 = (c.p2 + c.p3) * 0.5;
    let m012 = (m01 + m12) * 0.5;
    let m123 = (m12 + m23) * 0.5;
    let mid = (m012 + m123) * 0.5;
    let tm = 0.5 * (t0 + t1);
    let left = CubicBez::new(c.p0, m01, m012, mid);
    let right = CubicBez::new(mid, m123, m23, c.p3);
    flatten_params_rec(&left, t0, tm, tol, depth + 1, out);
    flatten_params_rec(&right, tm, t1, tol, depth + 1, out);
}

/// Flatten one cubic in isolation, returning `(t, point)` pairs including
/// the final endpoint at t = 1. Consecutive duplicate points collapse.
pub fn flatten_cubic(c: &CubicBez, tol: f64) -> Vec<(f64, Vec2)> {
    let mut ts = Vec::new();
    flatten_params_rec(c, 0.0, 1.0, tol, 0, &mut ts);
    ts.push(1.0);
    let mut out: Vec<(f64, Vec2)> = Vec::with_capacity(ts.len());
    for t in ts {
        let p = c.eval(t);
        if out.last().map(|(_, q)| *q == p).unwrap_or(false) {
            continue;
        }
        out.push((t, p));
    }
    out
}

/// Flatten one path given its deformed flattened points and subpath
/// segment counts. `points` holds 3 entries per segment (anchor,
/// outgoing handle, incoming handle) in document order.
pub fn flatten_path(points: &[Vec2], subpath_lens: &[usize], tol: f64) -> FlattenedOutline {
    let mut loops = Vec::with_capacity(subpath_lens.len());
    let mut base = 0usize;
    for &segs in subpath_lens {
        let mut verts: Vec<OutlineVertex> = Vec::new();
        for j in 0..segs {
            let i0 = base + 3 * j;
            let i1 = base + 3 * j + 1;
            let i2 = base + 3 * j + 2;
            let i3 = base + 3 * ((j + 1) % segs);
            let c = CubicBez::new(points[i0], points[i1], points[i2], points[i3]);
            let mut ts = Vec::new();
            flatten_params_rec(&c, 0.0, 1.0, tol, 0, &mut ts);
            // The piece at t=1 is the next segment's start vertex.
            for t in ts {
                let w = bernstein3(t);
                let pos = c.eval(t);
                if verts.last().map(|v| v.pos == pos).unwrap_or(false) {
                    continue;
                }
                verts.push(OutlineVertex {
                    pos,
                    controls: [i0 as u32, i1 as u32, i2 as u32, i3 as u32],
                    weights: w,
                });
            }
        }
        // Collapse a duplicate closing vertex.
        while verts.len() > 1 && verts.last().unwrap().pos == verts[0].pos {
            verts.pop();
        }
        if !verts.is_empty() {
            loops.push(verts);
        }
        base += 3 * segs;
    }
    FlattenedOutline { loops }
}
