//! Signed-distance soft rasterizer with an analytic backward pass.
//!
//! Coverage model: per pixel and path, the signed distance `d` to the
//! path's flattened outline (negative inside by the nonzero winding rule)
//! drives a band-normalized logistic `alpha(d)`. Distances are exact
//! within a band of `B = 4*softness + 2` pixels around the outline;
//! outside it coverage saturates to exactly 0 or 1, so pixels beyond the
//! band carry no gradient. Paths composite in painter order over a white
//! background: `out = alpha * fill + (1 - alpha) * out`.

use super::flatten::{flatten_path, FlattenedOutline};
use super::RasterFrame;
use crate::geom::Vec2;
use crate::svg::{flatten_params, Rgb, SvgDocument};

/// Band half-width in pixels: exact distances near edges, saturation
/// beyond. The +2 covers the blur radius so blurred losses still see
/// exact coverage wherever their gradient is nonzero.
pub fn band_radius(softness: f64) -> f64 {
    4.0 * softness + 2.0
}

/// One path's deformed geometry in pixel coordinates.
#[derive(Debug, Clone)]
pub struct ScenePath {
    /// Flattened control points, 3 per segment (anchor, outgoing handle,
    /// incoming handle), subpaths concatenated.
    pub points: Vec<Vec2>,
    /// Segment count per subpath.
    pub subpath_lens: Vec<usize>,
    pub fill: Rgb,
}

/// Everything the rasterizer needs for one frame.
#[derive(Debug, Clone)]
pub struct Scene {
    pub width: usize,
    pub height: usize,
    pub paths: Vec<ScenePath>,
    pub painter_order: Vec<usize>,
}

impl Scene {
    /// Static scene from a document whose coordinates are already in
    /// pixel space.
    pub fn from_document(doc: &SvgDocument, width: usize, height: usize) -> Scene {
        let (points, _) = flatten_params(doc);
        let mut paths = Vec::with_capacity(doc.paths.len());
        for (pi, p) in doc.paths.iter().enumerate() {
            let range = doc.path_point_range(pi);
            paths.push(ScenePath {
                points: points[range].to_vec(),
                subpath_lens: p.subpaths.iter().map(|s| s.len()).collect(),
                fill: p.fill,
            });
        }
        Scene {
            width,
            height,
            paths,
            painter_order: doc.painter_order.clone(),
        }
    }

    /// Replace one path's deformed points (same topology).
    pub fn with_path_points(&self, path: usize, points: Vec<Vec2>) -> Scene {
        let mut s = self.clone();
        assert_eq!(s.paths[path].points.len(), points.len());
        s.paths[path].points = points;
        s
    }
}

/// A pixel with fractional coverage, plus what the backward pass needs:
/// the nearest outline edge and the composite color underneath.
#[derive(Debug, Clone, Copy)]
struct BandPixel {
    x: u32,
    y: u32,
    /// Signed distance (negative inside), |d| <= band.
    signed: f64,
    loop_idx: u32,
    edge_idx: u32,
    /// Closest-point parameter along the edge, in [0, 1].
    u: f64,
    /// Composite color below this path at this pixel.
    below: [f64; 3],
}

#[derive(Debug, Clone)]
struct PathRaster {
    outline: FlattenedOutline,
    /// Full-resolution coverage.
    alpha: Vec<f64>,
    band: Vec<BandPixel>,
}

/// Forward products kept for the backward pass.
#[derive(Debug, Clone)]
pub struct RenderCache {
    pub frame: RasterFrame,
    /// One raster per painter-order position.
    rasters: Vec<PathRaster>,
    softness: f64,
}

/// The soft rasterizer. `flatten_tol` is the outline flattening tolerance
/// in pixels (0.1 for fitting, 0.01 for export-quality output).
#[derive(Debug, Clone, Copy)]
pub struct Renderer {
    pub softness: f64,
    pub flatten_tol: f64,
}

impl Renderer {
    pub fn new(softness: f64) -> Renderer {
        assert!(softness > 0.0);
        Renderer {
            softness,
            flatten_tol: 0.1,
        }
    }

    /// Band-normalized logistic coverage: exactly 1 at d <= -B, exactly 0
    /// at d >= B, 1/2 on the outline.
    fn alpha_of(&self, d: f64) -> f64 {
        let b = band_radius(self.softness);
        let sig = |z: f64| 1.0 / (1.0 + (-z).exp());
        let lo = sig(-b / self.softness);
        let hi = sig(b / self.softness);
        ((sig(-d / self.softness) - lo) / (hi - lo)).clamp(0.0, 1.0)
    }

    /// d(alpha)/d(d) for |d| <= band.
    fn dalpha_dd(&self, d: f64) -> f64 {
        let b = band_radius(self.softness);
        let sig = |z: f64| 1.0 / (1.0 + (-z).exp());
        let lo = sig(-b / self.softness);
        let hi = sig(b / self.softness);
        let s = sig(-d / self.softness);
        -(s * (1.0 - s)) / (self.softness * (hi - lo))
    }

    pub fn render(&self, scene: &Scene) -> RasterFrame {
        self.render_with_cache(scene).frame
    }

    /// Render and keep per-path coverage and band records for
    /// [`Renderer::backward`].
    pub fn render_with_cache(&self, scene: &Scene) -> RenderCache {
        let (w, h) = (scene.width, scene.height);
        assert!(w >= 8 && h >= 8, "render target must be at least 8x8");
        let mut frame = RasterFrame::filled(w, h, Rgb::WHITE);
        let mut rasters = Vec::with_capacity(scene.painter_order.len());
        for &pi in &scene.painter_order {
            let path = &scene.paths[pi];
            let mut pr = self.rasterize_path(path, w, h);
            // Record the composite underneath at fractional pixels, then
            // composite this path on top.
            for bp in &mut pr.band {
                bp.below = frame.pixel(bp.x as usize, bp.y as usize);
            }
            let fill = path.fill.channels();
            for i in 0..w * h {
                let a = pr.alpha[i];
                if a == 0.0 {
                    continue;
                }
                for c in 0..3 {
                    frame.data[i * 3 + c] = a * fill[c] + (1.0 - a) * frame.data[i * 3 + c];
                }
            }
            rasters.push(pr);
        }
        RenderCache {
            frame,
            rasters,
            softness: self.softness,
        }
    }

    fn rasterize_path(&self, path: &ScenePath, w: usize, h: usize) -> PathRaster {
        let outline = flatten_path(&path.points, &path.subpath_lens, self.flatten_tol);
        let band = band_radius(self.softness);

        // Winding number per pixel center via row crossings.
        let mut winding = vec![0i32; w * h];
        let mut crossings: Vec<(f64, i32)> = Vec::new();
        for y in 0..h {
            let cy = y as f64 + 0.5;
            crossings.clear();
            for lp in &outline.loops {
                let n = lp.len();
                if n < 2 {
                    continue;
                }
                for e in 0..n {
                    let a = lp[e].pos;
                    let b = lp[(e + 1) % n].pos;
                    let (dir, ya, yb) = if a.y <= b.y { (1, a, b) } else { (-1, b, a) };
                    if ya.y <= cy && cy < yb.y {
                        let t = (cy - ya.y) / (yb.y - ya.y);
                        let x = ya.x + t * (yb.x - ya.x);
                        crossings.push((x, dir));
                    }
                }
            }
            crossings.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
            let mut acc = 0i32;
            let mut ci = 0usize;
            for x in 0..w {
                let cx = x as f64 + 0.5;
                while ci < crossings.len() && crossings[ci].0 <= cx {
                    acc += crossings[ci].1;
                    ci += 1;
                }
                winding[y * w + x] = acc;
            }
        }

        // Exact unsigned distance within the band around each edge.
        let mut dist = vec![f64::INFINITY; w * h];
        let mut nearest = vec![(0u32, 0u32, 0.0f64); w * h];
        for (li, lp) in outline.loops.iter().enumerate() {
            let n = lp.len();
            if n < 2 {
                continue;
            }
            for e in 0..n {
                let a = lp[e].pos;
                let b = lp[(e + 1) % n].pos;
                let pad = band + 1.0;
                let x0 = ((a.x.min(b.x) - pad).floor().max(0.0)) as usize;
                let x1 = ((a.x.max(b.x) + pad).ceil().min(w as f64 - 1.0)) as usize;
                let y0 = ((a.y.min(b.y) - pad).floor().max(0.0)) as usize;
                let y1 = ((a.y.max(b.y) + pad).ceil().min(h as f64 - 1.0)) as usize;
                if a.x.max(b.x) + pad < 0.0 || a.y.max(b.y) + pad < 0.0 {
                    continue;
                }
                let ab = b - a;
                let len_sq = ab.norm_sq().max(1e-24);
                for y in y0..=y1 {
                    for x in x0..=x1 {
                        let p = Vec2::new(x as f64 + 0.5, y as f64 + 0.5);
                        let u = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
                        let q = a + ab * u;
                        let d = (p - q).norm();
                        let i = y * w + x;
                        if d < dist[i] {
                            dist[i] = d;
                            nearest[i] = (li as u32, e as u32, u);
                        }
                    }
                }
            }
        }

        let mut alpha = vec![0.0f64; w * h];
        let mut band_px = Vec::new();
        for y in 0..h {
            for x in 0..w {
                let i = y * w + x;
                let inside = winding[i] != 0;
                if dist[i] <= band {
                    let sd = if inside { -dist[i] } else { dist[i] };
                    alpha[i] = self.alpha_of(sd);
                    let (li, ei, u) = nearest[i];
                    band_px.push(BandPixel {
                        x: x as u32,
                        y: y as u32,
                        signed: sd,
                        loop_idx: li,
                        edge_idx: ei,
                        u,
                        below: [0.0; 3],
                    });
                } else if inside {
                    alpha[i] = 1.0;
                }
            }
        }
        PathRaster {
            outline,
            alpha,
            band: band_px,
        }
    }

    /// Gradient of `sum(upstream ⊙ frame)` with respect to every path's
    /// flattened control points. Pixels outside all bands contribute zero.
    pub fn backward(
        &self,
        scene: &Scene,
        cache: &RenderCache,
        upstream: &RasterFrame,
    ) -> Vec<Vec<Vec2>> {
        assert_eq!(cache.softness, self.softness);
        let (w, h) = (scene.width, scene.height);
        assert!(upstream.width == w && upstream.height == h);
        let mut grads: Vec<Vec<Vec2>> = scene
            .paths
            .iter()
            .map(|p| vec![Vec2::ZERO; p.points.len()])
            .collect();

        // Suffix transparency: product of (1 - alpha_q) over paths above.
        let mut trans = vec![1.0f64; w * h];
        for (pos, &pi) in scene.painter_order.iter().enumerate().rev() {
            let pr = &cache.rasters[pos];
            let fill = scene.paths[pi].fill.channels();
            let g = &mut grads[pi];
            for bp in &pr.band {
                let i = bp.y as usize * w + bp.x as usize;
                let mut dl_da = 0.0;
                for c in 0..3 {
                    dl_da += upstream.data[i * 3 + c] * (fill[c] - bp.below[c]);
                }
                dl_da *= trans[i];
                if dl_da == 0.0 {
                    continue;
                }
                let dl_dd = dl_da * self.dalpha_dd(bp.signed);

                let lp = &pr.outline.loops[bp.loop_idx as usize];
                let n = lp.len();
                let va = &lp[bp.edge_idx as usize];
                let vb = &lp[(bp.edge_idx as usize + 1) % n];
                let p = Vec2::new(bp.x as f64 + 0.5, bp.y as f64 + 0.5);
                let q = va.pos + (vb.pos - va.pos) * bp.u;
                let r = p - q;
                let rn = r.norm();
                let sign = if bp.signed < 0.0 { -1.0 } else { 1.0 };
                let rhat = if rn > 1e-9 {
                    r / rn
                } else {
                    // Pixel exactly on the outline: use the edge normal,
                    // oriented toward the pixel's own side (outward when
                    // the pixel is outside). Coverage drops along the
                    // outward normal, which the path's alpha map tells us.
                    let t = vb.pos - va.pos;
                    let tl = t.norm().max(1e-12);
                    let mut n = Vec2::new(-t.y / tl, t.x / tl);
                    let probe = |d: Vec2| -> f64 {
                        let px = (bp.x as f64 + d.x).round().clamp(0.0, (w - 1) as f64);
                        let py = (bp.y as f64 + d.y).round().clamp(0.0, (h - 1) as f64);
                        pr.alpha[py as usize * w + px as usize]
                    };
                    if probe(n) > probe(-n) {
                        n = -n;
                    }
                    n * sign
                };
                // Envelope theorem: at the closest point the tangential
                // derivative vanishes, so only the endpoint weights and
                // the radial direction remain.
                let ga = rhat * (-sign * (1.0 - bp.u) * dl_dd);
                let gb = rhat * (-sign * bp.u * dl_dd);
                for (ctrl, wgt) in va.controls.iter().zip(va.weights.iter()) {
                    g[*ctrl as usize] += ga * *wgt;
                }
                for (ctrl, wgt) in vb.controls.iter().zip(vb.weights.iter()) {
                    g[*ctrl as usize] += gb * *wgt;
                }
            }
            for i in 0..w * h {
                trans[i] *= 1.0 - pr.alpha[i];
            }
        }
        grads
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::flatten::flatten_path;
    use crate::rng::Lcg64;

    /// Seed chosen so no test coordinate sits on an adaptive-subdivision
    /// structure flip (see `fd_check`).
    const SCENE_SEED: u64 = 2025;

    fn square_path(x0: f64, y0: f64, size: f64, fill: Rgb) -> ScenePath {
        let corners = [
            Vec2::new(x0, y0),
            Vec2::new(x0 + size, y0),
            Vec2::new(x0 + size, y0 + size),
            Vec2::new(x0, y0 + size),
        ];
        let mut points = Vec::new();
        for i in 0..4 {
            let a = corners[i];
            let b = corners[(i + 1) % 4];
            let d = b - a;
            points.push(a);
            points.push(a + d * (1.0 / 3.0));
            points.push(a + d * (2.0 / 3.0));
        }
        ScenePath {
            points,
            subpath_lens: vec![4],
            fill,
        }
    }

    #[test]
    fn empty_scene_is_white() {
        let scene = Scene {
            width: 16,
            height: 16,
            paths: vec![],
            painter_order: vec![],
        };
        let frame = Renderer::new(0.7).render(&scene);
        assert!(frame.data.iter().all(|&v| v == 1.0));
    }

    #[test]
    fn deep_interior_saturates_to_fill() {
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![square_path(0.0, 0.0, 32.0, Rgb::BLACK)],
            painter_order: vec![0],
        };
        let frame = Renderer::new(0.7).render(&scene);
        let c = frame.pixel(16, 16);
        for ch in c {
            assert!(ch.abs() < 1e-6, "center channel {}", ch);
        }
    }

    #[test]
    fn painter_order_wins_in_overlap() {
        // Overlap must be deeper than the saturation band on both paths.
        let red = square_path(2.0, 2.0, 20.0, Rgb::new(1.0, 0.0, 0.0));
        let blue = square_path(10.0, 10.0, 20.0, Rgb::new(0.0, 0.0, 1.0));
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![red, blue],
            painter_order: vec![0, 1],
        };
        let frame = Renderer::new(0.7).render(&scene);
        // Deep inside the overlap, the later (blue) path wins.
        let c = frame.pixel(16, 16);
        assert!(c[2] > 1.0 - 1e-6 && c[0] < 1e-6, "overlap pixel {:?}", c);
        // Reversed painter order flips it.
        let scene2 = Scene {
            painter_order: vec![1, 0],
            ..scene
        };
        let c2 = Renderer::new(0.7).render(&scene2).pixel(16, 16);
        assert!(c2[0] > 1.0 - 1e-6 && c2[2] < 1e-6, "overlap pixel {:?}", c2);
    }

    #[test]
    fn outline_pixels_half_covered() {
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![square_path(8.0, 8.5, 16.0, Rgb::BLACK)],
            painter_order: vec![0],
        };
        let frame = Renderer::new(0.7).render(&scene);
        // Top edge passes exactly through pixel-center row y=8: alpha 1/2.
        let c = frame.pixel(16, 8);
        assert!((c[0] - 0.5).abs() < 1e-9, "edge pixel {}", c[0]);
    }

    #[test]
    fn hole_is_unfilled_by_winding() {
        // Outer square with opposite-winding inner square (a ring). Both
        // the hole and the ring are wider than twice the saturation band.
        let outer = [
            Vec2::new(2.0, 2.0),
            Vec2::new(38.0, 2.0),
            Vec2::new(38.0, 38.0),
            Vec2::new(2.0, 38.0),
        ];
        let inner = [
            Vec2::new(14.0, 14.0),
            Vec2::new(14.0, 26.0),
            Vec2::new(26.0, 26.0),
            Vec2::new(26.0, 14.0),
        ];
        let mut points = Vec::new();
        for ring in [&outer[..], &inner[..]] {
            for i in 0..4 {
                let a = ring[i];
                let b = ring[(i + 1) % 4];
                let d = b - a;
                points.push(a);
                points.push(a + d * (1.0 / 3.0));
                points.push(a + d * (2.0 / 3.0));
            }
        }
        let path = ScenePath {
            points,
            subpath_lens: vec![4, 4],
            fill: Rgb::BLACK,
        };
        let scene = Scene {
            width: 40,
            height: 40,
            paths: vec![path],
            painter_order: vec![0],
        };
        let frame = Renderer::new(0.7).render(&scene);
        assert!(frame.pixel(20, 20)[0] > 1.0 - 1e-6, "hole must stay white");
        assert!(frame.pixel(8, 20)[0] < 1e-6, "ring must be filled");
    }

    #[test]
    fn zero_upstream_zero_gradient() {
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![square_path(8.0, 8.0, 12.0, Rgb::BLACK)],
            painter_order: vec![0],
        };
        let r = Renderer::new(0.7);
        let cache = r.render_with_cache(&scene);
        let upstream = RasterFrame::new(32, 32);
        let grads = r.backward(&scene, &cache, &upstream);
        assert!(grads[0].iter().all(|g| *g == Vec2::ZERO));
    }

    fn loss_and_grad(r: &Renderer, scene: &Scene, upstream: &RasterFrame) -> (f64, Vec<Vec<Vec2>>) {
        let cache = r.render_with_cache(scene);
        let loss: f64 = cache
            .frame
            .data
            .iter()
            .zip(&upstream.data)
            .map(|(a, b)| a * b)
            .sum();
        let grads = r.backward(scene, &cache, upstream);
        (loss, grads)
    }

    /// Central-difference check of every control coordinate. A coordinate
    /// whose perturbation flips the adaptive subdivision structure sits on
    /// a genuine discontinuity of the flattened loss, where FD measures
    /// the jump rather than a derivative; those are counted and must not
    /// occur (test scenes are seeded to avoid them).
    fn fd_check(scene: &Scene, upstream: &RasterFrame, h_step: f64) -> (usize, usize) {
        let r = Renderer::new(0.7);
        let (_, grads) = loss_and_grad(&r, scene, upstream);
        let structure = |s: &Scene, pi: usize| -> Vec<usize> {
            flatten_path(&s.paths[pi].points, &s.paths[pi].subpath_lens, r.flatten_tol)
                .loops
                .iter()
                .map(|l| l.len())
                .collect()
        };
        let mut checked = 0;
        let mut flipped = 0;
        for pi in 0..scene.paths.len() {
            for k in 0..scene.paths[pi].points.len() {
                for axis in 0..2 {
                    let mut plus = scene.clone();
                    let mut minus = scene.clone();
                    if axis == 0 {
                        plus.paths[pi].points[k].x += h_step;
                        minus.paths[pi].points[k].x -= h_step;
                    } else {
                        plus.paths[pi].points[k].y += h_step;
                        minus.paths[pi].points[k].y -= h_step;
                    }
                    if structure(&plus, pi) != structure(&minus, pi) {
                        flipped += 1;
                        continue;
                    }
                    let (lp, _) = loss_and_grad(&r, &plus, upstream);
                    let (lm, _) = loss_and_grad(&r, &minus, upstream);
                    let fd = (lp - lm) / (2.0 * h_step);
                    let an = if axis == 0 {
                        grads[pi][k].x
                    } else {
                        grads[pi][k].y
                    };
                    if fd.abs() > 1e-6 {
                        let rel = (an - fd).abs() / fd.abs();
                        assert!(
                            rel <= 5e-2 || (an - fd).abs() <= 1e-4,
                            "path {} point {} axis {}: analytic {} vs fd {} (rel {})",
                            pi,
                            k,
                            axis,
                            an,
                            fd,
                            rel
                        );
                    } else {
                        assert!(
                            (an - fd).abs() <= 1e-4,
                            "path {} point {} axis {}: analytic {} vs fd {}",
                            pi,
                            k,
                            axis,
                            an,
                            fd
                        );
                    }
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
        (checked, flipped)
    }

    #[test]
    fn gradient_matches_finite_differences_single_square() {
        // Loss: sum of red channel.
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![square_path(9.3, 8.1, 13.4, Rgb::new(0.1, 0.7, 0.2))],
            painter_order: vec![0],
        };
        let mut upstream = RasterFrame::new(32, 32);
        for px in upstream.data.chunks_exact_mut(3) {
            px[0] = 1.0;
        }
        let (_, flipped) = fd_check(&scene, &upstream, 1e-3);
        assert_eq!(flipped, 0);
    }

    #[test]
    fn translation_directional_derivative_matches_fd() {
        let r = Renderer::new(0.7);
        let scene = Scene {
            width: 32,
            height: 32,
            paths: vec![square_path(10.2, 9.7, 10.0, Rgb::new(0.1, 0.1, 0.1))],
            painter_order: vec![0],
        };
        // Loss: mean image intensity.
        let mut upstream = RasterFrame::new(32, 32);
        let inv = 1.0 / (32.0 * 32.0 * 3.0);
        for v in upstream.data.iter_mut() {
            *v = inv;
        }
        let (_, grads) = loss_and_grad(&r, &scene, &upstream);
        let dir: f64 = grads[0].iter().map(|g| g.x).sum();
        let h = 1e-3;
        let shift = |s: f64| {
            let mut sc = scene.clone();
            for p in sc.paths[0].points.iter_mut() {
                p.x += s;
            }
            sc
        };
        let (lp, _) = loss_and_grad(&r, &shift(h), &upstream);
        let (lm, _) = loss_and_grad(&r, &shift(-h), &upstream);
        let fd = (lp - lm) / (2.0 * h);
        let rel = (dir - fd).abs() / fd.abs().max(1e-12);
        assert!(rel <= 5e-2 || (dir - fd).abs() <= 1e-4, "{} vs {}", dir, fd);
    }

    #[test]
    fn gradient_matches_fd_on_random_overlapping_scenes() {
        let mut rng = Lcg64::new(SCENE_SEED);
        for trial in 0..4 {
            let mut paths = Vec::new();
            let n_paths = 1 + rng.below(3);
            for _ in 0..n_paths {
                let cx = rng.uniform(10.0, 22.0);
                let cy = rng.uniform(10.0, 22.0);
                let n_seg = 3 + rng.below(3);
                let mut anchors = Vec::new();
                for s in 0..n_seg {
                    let ang = std::f64::consts::TAU * s as f64 / n_seg as f64;
                    let rad = rng.uniform(4.0, 8.0);
                    anchors.push(Vec2::new(cx + rad * ang.cos(), cy + rad * ang.sin()));
                }
                let mut points = Vec::new();
                for s in 0..n_seg {
                    let a = anchors[s];
                    let b = anchors[(s + 1) % n_seg];
                    let d = b - a;
                    let jx = rng.uniform(-1.0, 1.0);
                    let jy = rng.uniform(-1.0, 1.0);
                    points.push(a);
                    points.push(a + d * (1.0 / 3.0) + Vec2::new(jx, jy));
                    points.push(a + d * (2.0 / 3.0) + Vec2::new(jy, -jx));
                }
                paths.push(ScenePath {
                    points,
                    subpath_lens: vec![n_seg],
                    fill: Rgb::new(rng.next_f64(), rng.next_f64(), rng.next_f64()),
                });
            }
            let order: Vec<usize> = (0..paths.len()).collect();
            let scene = Scene {
                width: 32,
                height: 32,
                paths,
                painter_order: order,
            };
            let mut upstream = RasterFrame::new(32, 32);
            for v in upstream.data.iter_mut() {
                *v = rng.uniform(-1.0, 1.0) / 100.0;
            }
            eprintln!("random gradcheck trial {}", trial);
            let (checked, flipped) = fd_check(&scene, &upstream, 1e-3);
            assert!(flipped == 0, "trial {}: {} structure flips", trial, flipped);
            assert!(checked > 0);
        }
    }

    #[test]
    fn resolution_consistency_under_downsampling() {
        use crate::svg::parse_svg;
        let doc = parse_svg(
            r##"<svg viewBox="0 0 64 64">
              <circle cx="28" cy="30" r="16" fill="#204060"/>
              <rect x="32" y="8" width="20" height="40" fill="#a03010"/>
            </svg>"##,
        )
        .unwrap();
        let lo = Renderer::new(0.7).render(&Scene::from_document(&doc, 64, 64));
        let doc2 = doc.scaled(2.0, 2.0);
        let hi = Renderer::new(0.7).render(&Scene::from_document(&doc2, 128, 128));
        let down = hi.box_downsample();
        let mae = lo.mean_abs_diff(&down);
        assert!(mae <= 0.02, "mean abs error {}", mae);
    }
}
