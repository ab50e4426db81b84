//! Soft rasterization and the image-space utilities the losses need:
//! Gaussian blur, foreground masks, target cleanup, and exact Euclidean
//! distance transforms.

pub mod flatten;
pub mod render;

pub use flatten::{flatten_cubic, flatten_path, FlattenedOutline, OutlineVertex};
pub use render::{band_radius, RenderCache, Renderer, Scene, ScenePath};

use crate::error::Error;
use crate::geom::Vec2;
use crate::svg::Rgb;
use crate::Result;

/// Default near-white foreground threshold.
pub const DEFAULT_WHITE_THRESH: f64 = 0.98;

/// An H x W RGB image with channel values in [0, 1] (row-major,
/// interleaved). The same container carries loss-gradient images, which
/// are not range-restricted.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterFrame {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f64>,
}

impl RasterFrame {
    pub fn new(width: usize, height: usize) -> Self {
        RasterFrame {
            width,
            height,
            data: vec![0.0; width * height * 3],
        }
    }

    pub fn filled(width: usize, height: usize, color: Rgb) -> Self {
        let mut f = RasterFrame::new(width, height);
        for px in f.data.chunks_exact_mut(3) {
            px[0] = color.r;
            px[1] = color.g;
            px[2] = color.b;
        }
        f
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize) -> usize {
        (y * self.width + x) * 3
    }

    pub fn pixel(&self, x: usize, y: usize) -> [f64; 3] {
        let i = self.idx(x, y);
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    pub fn set_pixel(&mut self, x: usize, y: usize, c: [f64; 3]) {
        let i = self.idx(x, y);
        self.data[i] = c[0];
        self.data[i + 1] = c[1];
        self.data[i + 2] = c[2];
    }

    pub fn same_shape(&self, o: &RasterFrame) -> bool {
        self.width == o.width && self.height == o.height
    }

    /// Mean absolute per-channel difference.
    pub fn mean_abs_diff(&self, o: &RasterFrame) -> f64 {
        assert!(self.same_shape(o));
        let n = self.data.len() as f64;
        self.data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n
    }

    /// 2x box downsample (both dimensions must be even).
    pub fn box_downsample(&self) -> RasterFrame {
        assert!(self.width % 2 == 0 && self.height % 2 == 0);
        let mut out = RasterFrame::new(self.width / 2, self.height / 2);
        for y in 0..out.height {
            for x in 0..out.width {
                let mut acc = [0.0; 3];
                for dy in 0..2 {
                    for dx in 0..2 {
                        let p = self.pixel(2 * x + dx, 2 * y + dy);
                        for c in 0..3 {
                            acc[c] += p[c];
                        }
                    }
                }
                out.set_pixel(x, y, [acc[0] * 0.25, acc[1] * 0.25, acc[2] * 0.25]);
            }
        }
        out
    }
}

/// Boolean foreground mask with the dimensions of the frame it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct ForegroundMask {
    pub width: usize,
    pub height: usize,
    pub bits: Vec<bool>,
}

impl ForegroundMask {
    pub fn new(width: usize, height: usize) -> Self {
        ForegroundMask {
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.bits[y * self.width + x] = v;
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Dilate by one pixel with a 3x3 structuring element.
    pub fn dilate(&self) -> ForegroundMask {
        let mut out = ForegroundMask::new(self.width, self.height);
        for y in 0..self.height {
            for x in 0..self.width {
                if !self.get(x, y) {
                    continue;
                }
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        let nx = x as i64 + dx;
                        let ny = y as i64 + dy;
                        if nx >= 0 && ny >= 0 && (nx as usize) < self.width && (ny as usize) < self.height
                        {
                            out.set(nx as usize, ny as usize, true);
                        }
                    }
                }
            }
        }
        out
    }

    /// Tight bounding box of set pixels: (x0, y0, x1, y1) inclusive, or
    /// None when empty.
    pub fn bbox(&self) -> Option<(usize, usize, usize, usize)> {
        let mut out: Option<(usize, usize, usize, usize)> = None;
        for y in 0..self.height {
            for x in 0..self.width {
                if self.get(x, y) {
                    out = Some(match out {
                        None => (x, y, x, y),
                        Some((x0, y0, x1, y1)) => (x0.min(x), y0.min(y), x1.max(x), y1.max(y)),
                    });
                }
            }
        }
        out
    }
}

/// Clamped distance-to-foreground map: zero on (and within one pixel of)
/// the foreground, Euclidean pixel distance minus one elsewhere.
#[derive(Debug, Clone)]
pub struct SdfMap {
    pub width: usize,
    pub height: usize,
    pub dist: Vec<f64>,
}

impl SdfMap {
    #[inline]
    pub fn at(&self, x: usize, y: usize) -> f64 {
        self.dist[y * self.width + x]
    }

    /// Bilinear sample at a continuous point (pixel centers at integer
    /// coordinates + 0.5). Points outside the canvas clamp to the border
    /// value. Returns the value and its spatial gradient — the exact
    /// derivative of the bilinear interpolant, zero in a clamped
    /// direction, so finite differences of the sampled value agree with
    /// it everywhere off cell boundaries.
    pub fn sample(&self, p: Vec2) -> (f64, Vec2) {
        let u_raw = p.x - 0.5;
        let v_raw = p.y - 0.5;
        let u = u_raw.clamp(0.0, (self.width - 1) as f64);
        let v = v_raw.clamp(0.0, (self.height - 1) as f64);
        let x0 = (u.floor() as usize).min(self.width - 1);
        let y0 = (v.floor() as usize).min(self.height - 1);
        let x1 = (x0 + 1).min(self.width - 1);
        let y1 = (y0 + 1).min(self.height - 1);
        let fx = u - x0 as f64;
        let fy = v - y0 as f64;
        let f00 = self.dist[y0 * self.width + x0];
        let f10 = self.dist[y0 * self.width + x1];
        let f01 = self.dist[y1 * self.width + x0];
        let f11 = self.dist[y1 * self.width + x1];
        let value = f00 * (1.0 - fx) * (1.0 - fy)
            + f10 * fx * (1.0 - fy)
            + f01 * (1.0 - fx) * fy
            + f11 * fx * fy;
        let mut gx = (f10 - f00) * (1.0 - fy) + (f11 - f01) * fy;
        let mut gy = (f01 - f00) * (1.0 - fx) + (f11 - f10) * fx;
        if u_raw != u {
            gx = 0.0;
        }
        if v_raw != v {
            gy = 0.0;
        }
        (value, Vec2::new(gx, gy))
    }
}

// ---------------------------------------------------------------------------
// Gaussian blur
// ---------------------------------------------------------------------------

/// Normalized 1D kernel: weights proportional to exp(-i^2/2), i in -2..=2.
pub fn blur_kernel() -> [f64; 5] {
    let raw = [
        (-2.0f64).exp(),
        (-0.5f64).exp(),
        1.0,
        (-0.5f64).exp(),
        (-2.0f64).exp(),
    ];
    let sum: f64 = raw.iter().sum();
    let mut k = [0.0; 5];
    for (o, r) in k.iter_mut().zip(raw.iter()) {
        *o = r / sum;
    }
    k
}

fn blur_pass(
    src: &[f64],
    dst: &mut [f64],
    width: usize,
    height: usize,
    horizontal: bool,
    kernel: &[f64; 5],
) {
    for y in 0..height {
        for x in 0..width {
            let mut acc = [0.0; 3];
            for (ti, w) in kernel.iter().enumerate() {
                let t = ti as i64 - 2;
                // clamp-to-edge replication
                let (sx, sy) = if horizontal {
                    (((x as i64 + t).clamp(0, width as i64 - 1)) as usize, y)
                } else {
                    (x, ((y as i64 + t).clamp(0, height as i64 - 1)) as usize)
                };
                let base = (sy * width + sx) * 3;
                for c in 0..3 {
                    acc[c] += w * src[base + c];
                }
            }
            let base = (y * width + x) * 3;
            for c in 0..3 {
                dst[base + c] = acc[c];
            }
        }
    }
}

/// Separable 5x5 Gaussian blur with clamp-to-edge borders.
pub fn gaussian_blur(frame: &RasterFrame) -> RasterFrame {
    let kernel = blur_kernel();
    let mut tmp = vec![0.0; frame.data.len()];
    let mut out = RasterFrame::new(frame.width, frame.height);
    blur_pass(&frame.data, &mut tmp, frame.width, frame.height, true, &kernel);
    blur_pass(&tmp, &mut out.data, frame.width, frame.height, false, &kernel);
    out
}

fn blur_adjoint_pass(
    src: &[f64],
    dst: &mut [f64],
    width: usize,
    height: usize,
    horizontal: bool,
    kernel: &[f64; 5],
) {
    dst.fill(0.0);
    for y in 0..height {
        for x in 0..width {
            let base = (y * width + x) * 3;
            for (ti, w) in kernel.iter().enumerate() {
                let t = ti as i64 - 2;
                let (sx, sy) = if horizontal {
                    (((x as i64 + t).clamp(0, width as i64 - 1)) as usize, y)
                } else {
                    (x, ((y as i64 + t).clamp(0, height as i64 - 1)) as usize)
                };
                let tgt = (sy * width + sx) * 3;
                for c in 0..3 {
                    dst[tgt + c] += w * src[base + c];
                }
            }
        }
    }
}

/// Exact adjoint of [`gaussian_blur`]. The kernel is symmetric so this
/// equals the blur away from borders; the scatter form keeps the
/// clamp-to-edge boundary exact for gradient computation.
pub fn gaussian_blur_adjoint(frame: &RasterFrame) -> RasterFrame {
    let kernel = blur_kernel();
    let mut tmp = vec![0.0; frame.data.len()];
    let mut out = RasterFrame::new(frame.width, frame.height);
    // adjoint of (vertical after horizontal) is (horizontal^T after vertical^T)
    blur_adjoint_pass(&frame.data, &mut tmp, frame.width, frame.height, false, &kernel);
    blur_adjoint_pass(&tmp, &mut out.data, frame.width, frame.height, true, &kernel);
    out
}

// ---------------------------------------------------------------------------
// Masks, cleanup, distance transform
// ---------------------------------------------------------------------------

/// A pixel is foreground iff its minimum channel is below `white_thresh`.
pub fn foreground_mask(frame: &RasterFrame, white_thresh: f64) -> ForegroundMask {
    assert!(
        white_thresh > 0.0 && white_thresh < 1.0,
        "white_thresh must be in (0,1)"
    );
    let mut mask = ForegroundMask::new(frame.width, frame.height);
    for (i, px) in frame.data.chunks_exact(3).enumerate() {
        let m = px[0].min(px[1]).min(px[2]);
        mask.bits[i] = m < white_thresh;
    }
    mask
}

/// Dilate the mask by one pixel and whiten everything outside it; inside
/// pixels are unchanged.
pub fn clean_target(frame: &RasterFrame, mask: &ForegroundMask) -> Result<RasterFrame> {
    if frame.width != mask.width || frame.height != mask.height {
        return Err(Error::DimensionMismatch(format!(
            "frame {}x{} vs mask {}x{}",
            frame.width, frame.height, mask.width, mask.height
        )));
    }
    let dilated = mask.dilate();
    let mut out = frame.clone();
    for (i, keep) in dilated.bits.iter().enumerate() {
        if !keep {
            out.data[i * 3] = 1.0;
            out.data[i * 3 + 1] = 1.0;
            out.data[i * 3 + 2] = 1.0;
        }
    }
    Ok(out)
}

/// 1D squared-distance transform (Felzenszwalb–Huttenlocher lower
/// envelope of parabolas).
fn edt_1d(f: &[f64], out: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0usize;
    v[0] = 0;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    for q in 1..n {
        let mut s;
        loop {
            let p = v[k];
            s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q - p) as f64);
            if s <= z[k] {
                if k == 0 {
                    break;
                }
                k -= 1;
            } else {
                break;
            }
        }
        k += 1;
        v[k] = q;
        z[k] = s;
        z[k + 1] = f64::INFINITY;
    }
    k = 0;
    for q in 0..n {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let p = v[k];
        let d = q as f64 - p as f64;
        out[q] = d * d + f[p];
    }
}

/// Exact Euclidean distance to the nearest foreground pixel, minus the
/// one-pixel margin, clamped at zero. Zero everywhere when the mask is
/// empty or full.
pub fn distance_transform(mask: &ForegroundMask) -> SdfMap {
    let (w, h) = (mask.width, mask.height);
    let inf = 1e18;
    let mut sq = vec![0.0f64; w * h];
    for (i, &fg) in mask.bits.iter().enumerate() {
        sq[i] = if fg { 0.0 } else { inf };
    }
    if mask.bits.iter().all(|&b| !b) {
        // No foreground anywhere: define the map as all-zero rather than
        // infinite.
        return build_sdf(w, h, vec![0.0; w * h]);
    }
    // columns
    {
        let n = h.max(w);
        let mut f = vec![0.0; n];
        let mut out1 = vec![0.0; n];
        let mut v = vec![0usize; n];
        let mut z = vec![0.0; n + 1];
        for x in 0..w {
            for y in 0..h {
                f[y] = sq[y * w + x];
            }
            edt_1d(&f[..h], &mut out1[..h], &mut v, &mut z);
            for y in 0..h {
                sq[y * w + x] = out1[y];
            }
        }
        // rows
        for y in 0..h {
            f[..w].copy_from_slice(&sq[y * w..y * w + w]);
            edt_1d(&f[..w], &mut out1[..w], &mut v, &mut z);
            sq[y * w..y * w + w].copy_from_slice(&out1[..w]);
        }
    }
    let dist: Vec<f64> = sq.iter().map(|&d2| (d2.sqrt() - 1.0).max(0.0)).collect();
    build_sdf(w, h, dist)
}

fn build_sdf(width: usize, height: usize, dist: Vec<f64>) -> SdfMap {
    SdfMap {
        width,
        height,
        dist,
    }
}

// ---------------------------------------------------------------------------
// PNG I/O
// ---------------------------------------------------------------------------

/// Read an 8-bit PNG as an RGB frame; alpha is composited over white.
pub fn read_frame_png(path: &std::path::Path) -> Result<RasterFrame> {
    let img = image::open(path)
        .map_err(|e| Error::image(path.display().to_string(), e))?
        .to_rgba8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let mut out = RasterFrame::new(w, h);
    for (i, px) in img.pixels().enumerate() {
        let a = px[3] as f64 / 255.0;
        for c in 0..3 {
            let v = px[c] as f64 / 255.0;
            out.data[i * 3 + c] = a * v + (1.0 - a);
        }
    }
    Ok(out)
}

/// Write an RGB frame as an 8-bit PNG.
pub fn write_frame_png(frame: &RasterFrame, path: &std::path::Path) -> Result<()> {
    let mut img = image::RgbImage::new(frame.width as u32, frame.height as u32);
    for (i, px) in img.pixels_mut().enumerate() {
        for c in 0..3 {
            px[c] = (frame.data[i * 3 + c].clamp(0.0, 1.0) * 255.0).round() as u8;
        }
    }
    img.save(path)
        .map_err(|e| Error::image(path.display().to_string(), e))
}

/// Read an 8-bit grayscale PNG as a mask (luma >= 128 is foreground).
pub fn read_mask_png(path: &std::path::Path) -> Result<ForegroundMask> {
    let img = image::open(path)
        .map_err(|e| Error::image(path.display().to_string(), e))?
        .to_luma8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let mut mask = ForegroundMask::new(w, h);
    for (i, px) in img.pixels().enumerate() {
        mask.bits[i] = px[0] >= 128;
    }
    Ok(mask)
}

/// Write a mask as an 8-bit grayscale PNG (foreground = 255).
pub fn write_mask_png(mask: &ForegroundMask, path: &std::path::Path) -> Result<()> {
    let mut img = image::GrayImage::new(mask.width as u32, mask.height as u32);
    for (i, px) in img.pixels_mut().enumerate() {
        px[0] = if mask.bits[i] { 255 } else { 0 };
    }
    img.save(path)
        .map_err(|e| Error::image(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blur_preserves_constant_images() {
        let f = RasterFrame::filled(16, 12, Rgb::new(0.3, 0.6, 0.9));
        let b = gaussian_blur(&f);
        for (a, e) in b.data.iter().zip(f.data.iter()) {
            assert!((a - e).abs() < 1e-12);
        }
    }

    #[test]
    fn blur_impulse_center_weight() {
        // Oracle: evaluate and normalize the 1D Gaussian, square the
        // center weight.
        let raw: [f64; 5] = [
            (-2.0f64).exp(),
            (-0.5f64).exp(),
            1.0,
            (-0.5f64).exp(),
            (-2.0f64).exp(),
        ];
        let sum: f64 = raw.iter().sum();
        let expect = (1.0 / sum) * (1.0 / sum);
        assert!((expect - 0.1621).abs() < 5e-4);

        let mut f = RasterFrame::new(11, 11);
        f.set_pixel(5, 5, [1.0, 1.0, 1.0]);
        let b = gaussian_blur(&f);
        assert!((b.pixel(5, 5)[0] - expect).abs() < 1e-12);
    }

    #[test]
    fn blur_is_linear() {
        let mut a = RasterFrame::new(9, 9);
        let mut b = RasterFrame::new(9, 9);
        a.set_pixel(3, 4, [0.5, 0.0, 0.25]);
        b.set_pixel(6, 2, [0.0, 0.75, 0.1]);
        let mut sum = RasterFrame::new(9, 9);
        for i in 0..sum.data.len() {
            sum.data[i] = a.data[i] + b.data[i];
        }
        let blurred_sum = gaussian_blur(&sum);
        let ba = gaussian_blur(&a);
        let bb = gaussian_blur(&b);
        for i in 0..sum.data.len() {
            assert!((blurred_sum.data[i] - ba.data[i] - bb.data[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn blur_self_adjoint_on_interior_support() {
        // <blur(a), b> == <a, blur(b)> for images zero within 2px of
        // borders.
        let mut rng = crate::rng::Lcg64::new(11);
        let (w, h) = (12, 10);
        let mut a = RasterFrame::new(w, h);
        let mut b = RasterFrame::new(w, h);
        for y in 2..h - 2 {
            for x in 2..w - 2 {
                a.set_pixel(x, y, [rng.next_f64(), rng.next_f64(), rng.next_f64()]);
                b.set_pixel(x, y, [rng.next_f64(), rng.next_f64(), rng.next_f64()]);
            }
        }
        let dot = |u: &RasterFrame, v: &RasterFrame| -> f64 {
            u.data.iter().zip(&v.data).map(|(x, y)| x * y).sum()
        };
        let lhs = dot(&gaussian_blur(&a), &b);
        let rhs = dot(&a, &gaussian_blur(&b));
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn blur_adjoint_matches_inner_product_everywhere() {
        // <blur(a), b> == <a, adjoint(b)> including border effects.
        let mut rng = crate::rng::Lcg64::new(5);
        let (w, h) = (7, 6);
        let mut a = RasterFrame::new(w, h);
        let mut b = RasterFrame::new(w, h);
        for i in 0..a.data.len() {
            a.data[i] = rng.next_f64();
            b.data[i] = rng.next_f64();
        }
        let dot = |u: &RasterFrame, v: &RasterFrame| -> f64 {
            u.data.iter().zip(&v.data).map(|(x, y)| x * y).sum()
        };
        let lhs = dot(&gaussian_blur(&a), &b);
        let rhs = dot(&a, &gaussian_blur_adjoint(&b));
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn blur_preserves_mean_of_interior_images() {
        let mut rng = crate::rng::Lcg64::new(3);
        let (w, h) = (16, 16);
        let mut a = RasterFrame::new(w, h);
        for y in 2..h - 2 {
            for x in 2..w - 2 {
                a.set_pixel(x, y, [rng.next_f64(), rng.next_f64(), rng.next_f64()]);
            }
        }
        let b = gaussian_blur(&a);
        let mean = |f: &RasterFrame| f.data.iter().sum::<f64>() / f.data.len() as f64;
        assert!((mean(&a) - mean(&b)).abs() < 1e-9);
    }

    #[test]
    fn foreground_mask_thresholds() {
        let mut f = RasterFrame::filled(4, 4, Rgb::WHITE);
        assert_eq!(foreground_mask(&f, DEFAULT_WHITE_THRESH).count(), 0);
        f.set_pixel(1, 2, [0.0, 0.0, 0.0]);
        let m = foreground_mask(&f, DEFAULT_WHITE_THRESH);
        assert_eq!(m.count(), 1);
        assert!(m.get(1, 2));
        // Faint off-white noise stays background.
        let noisy = RasterFrame::filled(4, 4, Rgb::new(0.985, 0.99, 1.0));
        assert_eq!(foreground_mask(&noisy, DEFAULT_WHITE_THRESH).count(), 0);
    }

    #[test]
    fn clean_target_dilates_and_whitens() {
        let mut f = RasterFrame::filled(5, 5, Rgb::new(0.2, 0.4, 0.6));
        f.set_pixel(2, 2, [0.0, 0.0, 0.0]);
        let mut mask = ForegroundMask::new(5, 5);
        mask.set(2, 2, true);
        let cleaned = clean_target(&f, &mask).unwrap();
        // 3x3 neighborhood preserved, rest white.
        for y in 0..5 {
            for x in 0..5 {
                let inside = (1..=3).contains(&x) && (1..=3).contains(&y);
                let px = cleaned.pixel(x, y);
                if inside {
                    assert_eq!(px, f.pixel(x, y));
                } else {
                    assert_eq!(px, [1.0, 1.0, 1.0]);
                }
            }
        }
        // All-foreground mask: unchanged.
        let full = foreground_mask(&RasterFrame::filled(5, 5, Rgb::BLACK), 0.5);
        assert_eq!(clean_target(&f, &full).unwrap(), f);
        // Empty mask: all white.
        let empty = ForegroundMask::new(5, 5);
        let white = clean_target(&f, &empty).unwrap();
        assert!(white.data.iter().all(|&v| v == 1.0));
        // Dimension mismatch errors.
        let small = ForegroundMask::new(3, 3);
        assert!(clean_target(&f, &small).is_err());
    }

    /// Brute-force nearest-foreground oracle.
    fn edt_brute(mask: &ForegroundMask) -> Vec<f64> {
        let mut out = vec![0.0; mask.width * mask.height];
        let fg: Vec<(usize, usize)> = (0..mask.height)
            .flat_map(|y| (0..mask.width).map(move |x| (x, y)))
            .filter(|&(x, y)| mask.get(x, y))
            .collect();
        for y in 0..mask.height {
            for x in 0..mask.width {
                let d = fg
                    .iter()
                    .map(|&(fx, fy)| {
                        let dx = fx as f64 - x as f64;
                        let dy = fy as f64 - y as f64;
                        (dx * dx + dy * dy).sqrt()
                    })
                    .fold(f64::INFINITY, f64::min);
                let d = if fg.is_empty() { 0.0 } else { d };
                out[y * mask.width + x] = (d - 1.0).max(0.0);
            }
        }
        out
    }

    #[test]
    fn distance_transform_matches_brute_force() {
        let mut rng = crate::rng::Lcg64::new(42);
        for trial in 0..8 {
            let w = 8 + rng.below(56);
            let h = 8 + rng.below(56);
            let mut mask = ForegroundMask::new(w, h);
            let fill = 0.02 + 0.2 * rng.next_f64();
            for i in 0..mask.bits.len() {
                mask.bits[i] = rng.next_f64() < fill;
            }
            let sdf = distance_transform(&mask);
            let brute = edt_brute(&mask);
            for (i, (&a, &b)) in sdf.dist.iter().zip(brute.iter()).enumerate() {
                assert!(
                    (a - b).abs() < 1e-9,
                    "trial {} pixel {}: {} vs {}",
                    trial,
                    i,
                    a,
                    b
                );
            }
        }
    }

    #[test]
    fn distance_transform_single_pixel_and_margin() {
        let mut mask = ForegroundMask::new(32, 16);
        mask.set(10, 8, true);
        let sdf = distance_transform(&mask);
        // Five pixels to the right: max(0, 5-1) = 4.
        assert!((sdf.at(15, 8) - 4.0).abs() < 1e-12);
        // Zero at every pixel within Euclidean distance 1.
        for (dx, dy) in [(0i64, 0i64), (1, 0), (-1, 0), (0, 1), (0, -1)] {
            let x = (10 + dx) as usize;
            let y = (8 + dy) as usize;
            assert_eq!(sdf.at(x, y), 0.0);
        }
        // All-foreground mask: all-zero map.
        let full_bits = vec![true; 12 * 9];
        let full = ForegroundMask {
            width: 12,
            height: 9,
            bits: full_bits,
        };
        assert!(distance_transform(&full).dist.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn sdf_bilinear_sampling_interpolates() {
        let mut mask = ForegroundMask::new(16, 16);
        mask.set(2, 8, true);
        let sdf = distance_transform(&mask);
        // Between pixel centers (10, 8) and (11, 8): distances 7 and 8.
        let (v, g) = sdf.sample(Vec2::new(11.0, 8.5));
        assert!((v - 7.5).abs() < 1e-9, "value {}", v);
        assert!((g.x - 1.0).abs() < 1e-9, "grad {:?}", g);
        // Clamped outside the canvas.
        let (v_out, _) = sdf.sample(Vec2::new(-5.0, 8.5));
        assert!((v_out - sdf.at(0, 8)).abs() < 1e-9);
    }

    #[test]
    fn png_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.png");
        let mut f = RasterFrame::filled(9, 7, Rgb::new(0.25, 0.5, 0.75));
        f.set_pixel(3, 3, [0.0, 1.0, 0.5]);
        write_frame_png(&f, &path).unwrap();
        let back = read_frame_png(&path).unwrap();
        assert_eq!(back.width, 9);
        for (a, b) in f.data.iter().zip(&back.data) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-9);
        }
        let mpath = dir.path().join("m.png");
        let mask = foreground_mask(&f, 0.9);
        write_mask_png(&mask, &mpath).unwrap();
        assert_eq!(read_mask_png(&mpath).unwrap(), mask);
    }
}
