//! Restricted-subset SVG parsing, the canonical geometric model, and
//! static serialization.
//!
//! Supported input: `svg` root with `viewBox` (or width/height), flat
//! `<g>` tags, and solid-filled `path`/`rect`/`circle`/`ellipse`/
//! `polygon`/`line` elements. Everything is canonicalized at parse time:
//! shapes become paths, all segments become cubics, subpaths are closed,
//! transforms are baked into absolute coordinates, and the viewBox is
//! normalized to `[0, W] x [0, H]`.

mod color;
pub mod path_data;
pub mod transform;

pub use color::Rgb;

use crate::error::Error;
use crate::geom::{CubicBez, Mat3, Vec2};
use crate::Result;
use std::fmt::Write as _;

/// One cubic segment's stored controls: the start anchor `a_j`, the
/// outgoing handle `c+_j`, and the incoming handle `c-_{j+1}` of the next
/// anchor. The segment's end anchor is owned by the following segment
/// (cyclically), which keeps every subpath closed by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub anchor: Vec2,
    pub handle_out: Vec2,
    pub handle_in: Vec2,
}

/// A closed loop of cubic segments.
#[derive(Debug, Clone, PartialEq)]
pub struct Subpath {
    pub segments: Vec<Segment>,
}

impl Subpath {
    /// Build from a chain of cubics whose endpoints meet (last one closing
    /// back to the first anchor).
    pub fn from_cubics(cubics: &[CubicBez]) -> Subpath {
        let segments = cubics
            .iter()
            .map(|c| Segment {
                anchor: c.p0,
                handle_out: c.p1,
                handle_in: c.p2,
            })
            .collect();
        Subpath { segments }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// The `j`-th cubic. Its end anchor is the next segment's start.
    pub fn cubic(&self, j: usize) -> CubicBez {
        let s = &self.segments[j];
        let next = &self.segments[(j + 1) % self.segments.len()];
        CubicBez::new(s.anchor, s.handle_out, s.handle_in, next.anchor)
    }
}

/// A filled path: closed cubic subpaths plus its current and original
/// solid fill. `fill` changes under recolorization; `original_fill` never
/// does.
#[derive(Debug, Clone, PartialEq)]
pub struct PathGeometry {
    pub subpaths: Vec<Subpath>,
    pub fill: Rgb,
    pub original_fill: Rgb,
}

impl PathGeometry {
    pub fn control_point_count(&self) -> usize {
        self.subpaths.iter().map(|s| s.len() * 3).sum()
    }

    /// Axis-aligned bounding box of the control points (contains the
    /// curves by the convex-hull property).
    pub fn control_bbox(&self) -> Option<(Vec2, Vec2)> {
        let mut bbox: Option<(Vec2, Vec2)> = None;
        for sp in &self.subpaths {
            for seg in &sp.segments {
                for p in [seg.anchor, seg.handle_out, seg.handle_in] {
                    bbox = Some(match bbox {
                        None => (p, p),
                        Some((lo, hi)) => (
                            Vec2::new(lo.x.min(p.x), lo.y.min(p.y)),
                            Vec2::new(hi.x.max(p.x), hi.y.max(p.y)),
                        ),
                    });
                }
            }
        }
        bbox
    }
}

/// A flat semantic group of paths.
#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub id: String,
    pub path_indices: Vec<usize>,
    /// Bounding-box center of the group's geometry, in user units.
    pub centroid: Vec2,
}

/// The parsed vector scene.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    pub canvas_width: f64,
    pub canvas_height: f64,
    pub groups: Vec<Group>,
    pub paths: Vec<PathGeometry>,
    /// Painter order as a permutation of path indices; later entries are
    /// drawn on top.
    pub painter_order: Vec<usize>,
}

/// Placement of one 2D control point in the document-wide flattened
/// parameter vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ControlPointIndex {
    pub path: usize,
    pub subpath: usize,
    pub segment: usize,
    pub role: CpRole,
    pub flat_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpRole {
    Anchor,
    HandleOut,
    HandleIn,
}

impl SvgDocument {
    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn control_point_count(&self) -> usize {
        self.paths.iter().map(|p| p.control_point_count()).sum()
    }

    /// Group index for every path.
    pub fn group_of_path(&self) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.paths.len()];
        for (gi, g) in self.groups.iter().enumerate() {
            for &pi in &g.path_indices {
                map[pi] = gi;
            }
        }
        map
    }

    /// Flat-index range of one path's control points.
    pub fn path_point_range(&self, path: usize) -> std::ops::Range<usize> {
        let mut start = 0;
        for p in &self.paths[..path] {
            start += p.control_point_count();
        }
        start..start + self.paths[path].control_point_count()
    }

    /// Canvas center, the pivot all group homographies share.
    pub fn canvas_center(&self) -> Vec2 {
        Vec2::new(self.canvas_width * 0.5, self.canvas_height * 0.5)
    }

    /// A copy with every coordinate scaled by `(sx, sy)`; used to map the
    /// document into pixel space before fitting.
    pub fn scaled(&self, sx: f64, sy: f64) -> SvgDocument {
        let map = |p: Vec2| Vec2::new(p.x * sx, p.y * sy);
        let mut doc = self.clone();
        doc.canvas_width *= sx;
        doc.canvas_height *= sy;
        for path in &mut doc.paths {
            for sp in &mut path.subpaths {
                for seg in &mut sp.segments {
                    seg.anchor = map(seg.anchor);
                    seg.handle_out = map(seg.handle_out);
                    seg.handle_in = map(seg.handle_in);
                }
            }
        }
        for g in &mut doc.groups {
            g.centroid = map(g.centroid);
        }
        doc
    }

    /// Check the structural invariants. Parsing always produces a valid
    /// document; this guards hand-built ones.
    pub fn validate(&self) -> Result<()> {
        if !(self.canvas_width > 0.0) || !(self.canvas_height > 0.0) {
            return Err(Error::Config("canvas dimensions must be positive".into()));
        }
        let mut seen = vec![false; self.paths.len()];
        for g in &self.groups {
            if g.path_indices.is_empty() {
                return Err(Error::Config(format!("group {:?} is empty", g.id)));
            }
            for &pi in &g.path_indices {
                if pi >= self.paths.len() || seen[pi] {
                    return Err(Error::Config(format!(
                        "path {} missing or claimed by two groups",
                        pi
                    )));
                }
                seen[pi] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Config("a path belongs to no group".into()));
        }
        let mut perm = self.painter_order.clone();
        perm.sort_unstable();
        if perm != (0..self.paths.len()).collect::<Vec<_>>() {
            return Err(Error::Config(
                "painter_order is not a permutation of path indices".into(),
            ));
        }
        Ok(())
    }
}

/// Group bounding-box center over the given paths.
fn group_centroid(paths: &[PathGeometry], indices: &[usize]) -> Vec2 {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &pi in indices {
        if let Some((plo, phi)) = paths[pi].control_bbox() {
            lo = Vec2::new(lo.x.min(plo.x), lo.y.min(plo.y));
            hi = Vec2::new(hi.x.max(phi.x), hi.y.max(phi.y));
        }
    }
    if lo.x > hi.x {
        Vec2::ZERO
    } else {
        (lo + hi) * 0.5
    }
}

/// Recompute every group's bounding-box centroid in place.
pub fn recompute_centroids(doc: &mut SvgDocument) {
    for gi in 0..doc.groups.len() {
        doc.groups[gi].centroid = group_centroid(&doc.paths, &doc.groups[gi].path_indices);
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parser behavior switches.
#[derive(Debug, Clone)]
pub struct ParseOptions {
    /// When true (default), stroke/opacity/style/fill-rule violations are
    /// hard errors; when false they are ignored with a warning.
    pub strict: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { strict: true }
    }
}

/// Parse under the default (strict) options.
pub fn parse_svg(text: &str) -> Result<SvgDocument> {
    parse_svg_with(text, &ParseOptions::default()).map(|(doc, _)| doc)
}

/// Elements that cannot be represented in the subset no matter the options.
const HARD_UNSUPPORTED: &[&str] = &[
    "linearGradient",
    "radialGradient",
    "pattern",
    "clipPath",
    "mask",
    "filter",
    "text",
    "tspan",
    "textPath",
    "image",
    "use",
    "style",
    "script",
    "symbol",
    "marker",
    "foreignObject",
];

/// Elements that carry no geometry and are skipped silently.
const IGNORED: &[&str] = &["title", "desc", "metadata", "defs"];

/// Parse SVG text, returning the document and any non-strict warnings.
pub fn parse_svg_with(text: &str, opts: &ParseOptions) -> Result<(SvgDocument, Vec<String>)> {
    let xml = roxmltree::Document::parse(text)?;
    let root = xml.root_element();
    if root.tag_name().name() != "svg" {
        return Err(Error::UnsupportedFeature(format!(
            "root element <{}>",
            root.tag_name().name()
        )));
    }
    for node in root.descendants().filter(|n| n.is_element()) {
        let name = node.tag_name().name();
        if HARD_UNSUPPORTED.contains(&name) {
            return Err(Error::UnsupportedFeature(format!("<{}>", name)));
        }
    }

    let (canvas_w, canvas_h, norm) = canvas_geometry(&root)?;

    let mut warnings = Vec::new();
    let mut paths: Vec<PathGeometry> = Vec::new();
    let mut groups: Vec<Group> = Vec::new();
    let mut auto_group = 0usize;

    for child in root.children().filter(|n| n.is_element()) {
        let name = child.tag_name().name();
        if IGNORED.contains(&name) {
            continue;
        }
        if name == "g" {
            let gt = element_transform(&child)?;
            let total_g = norm.mul(&gt);
            let mut indices = Vec::new();
            for shape in child.children().filter(|n| n.is_element()) {
                let sname = shape.tag_name().name();
                if IGNORED.contains(&sname) {
                    continue;
                }
                if sname == "g" {
                    return Err(Error::UnsupportedFeature("nested <g>".into()));
                }
                if let Some(path) =
                    parse_shape(&shape, &total_g, Some(&child), opts, &mut warnings)?
                {
                    indices.push(paths.len());
                    paths.push(path);
                }
            }
            if !indices.is_empty() {
                let id = child
                    .attribute("id")
                    .map(str::to_owned)
                    .unwrap_or_else(|| format!("g{}", groups.len()));
                let centroid = group_centroid(&paths, &indices);
                groups.push(Group {
                    id,
                    path_indices: indices,
                    centroid,
                });
            }
        } else if let Some(path) = parse_shape(&child, &norm, None, opts, &mut warnings)? {
            // Paths outside any <g> each become a singleton group.
            let idx = paths.len();
            paths.push(path);
            let id = child
                .attribute("id")
                .map(str::to_owned)
                .unwrap_or_else(|| {
                    auto_group += 1;
                    format!("p{}", auto_group - 1)
                });
            let centroid = group_centroid(&paths, &[idx]);
            groups.push(Group {
                id,
                path_indices: vec![idx],
                centroid,
            });
        }
    }

    let painter_order: Vec<usize> = (0..paths.len()).collect();
    let doc = SvgDocument {
        canvas_width: canvas_w,
        canvas_height: canvas_h,
        groups,
        paths,
        painter_order,
    };
    doc.validate()?;
    Ok((doc, warnings))
}

fn canvas_geometry(root: &roxmltree::Node) -> Result<(f64, f64, Mat3)> {
    if let Some(vb) = root.attribute("viewBox") {
        let nums: Vec<f64> = vb
            .split(|c: char| c.is_ascii_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|_| Error::UnsupportedFeature(format!("viewBox {:?}", vb)))
            })
            .collect::<Result<_>>()?;
        if nums.len() != 4 || nums[2] <= 0.0 || nums[3] <= 0.0 {
            return Err(Error::UnsupportedFeature(format!("viewBox {:?}", vb)));
        }
        let norm = Mat3::translation(Vec2::new(-nums[0], -nums[1]));
        return Ok((nums[2], nums[3], norm));
    }
    let dim = |attr: &str| -> Result<f64> {
        let raw = root
            .attribute(attr)
            .ok_or_else(|| Error::UnsupportedFeature("missing viewBox and width/height".into()))?;
        let trimmed = raw.trim().trim_end_matches("px");
        trimmed
            .parse::<f64>()
            .map_err(|_| Error::UnsupportedFeature(format!("{} {:?}", attr, raw)))
    };
    let w = dim("width")?;
    let h = dim("height")?;
    if w <= 0.0 || h <= 0.0 {
        return Err(Error::UnsupportedFeature("non-positive canvas size".into()));
    }
    Ok((w, h, Mat3::IDENTITY))
}

fn element_transform(node: &roxmltree::Node) -> Result<Mat3> {
    match node.attribute("transform") {
        Some(t) => transform::parse_transform(t),
        None => Ok(Mat3::IDENTITY),
    }
}

/// Look up a presentation attribute on the element, falling back to the
/// enclosing group.
fn presentation<'a>(
    node: &'a roxmltree::Node,
    parent: Option<&'a roxmltree::Node>,
    attr: &str,
) -> Option<&'a str> {
    node.attribute(attr)
        .or_else(|| parent.and_then(|p| p.attribute(attr)))
}

fn check_presentation(
    node: &roxmltree::Node,
    parent: Option<&roxmltree::Node>,
    opts: &ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<()> {
    let mut flag = |what: String| -> Result<()> {
        if opts.strict {
            Err(Error::UnsupportedFeature(what))
        } else {
            warnings.push(format!("ignored {}", what));
            Ok(())
        }
    };
    if let Some(stroke) = presentation(node, parent, "stroke") {
        if stroke != "none" {
            flag(format!("stroke={:?}", stroke))?;
        }
    }
    for attr in ["opacity", "fill-opacity", "stroke-opacity"] {
        if let Some(v) = presentation(node, parent, attr) {
            if v.trim().parse::<f64>().map(|x| x != 1.0).unwrap_or(true) {
                flag(format!("{}={:?}", attr, v))?;
            }
        }
    }
    if let Some(rule) = presentation(node, parent, "fill-rule") {
        if rule == "evenodd" {
            flag("fill-rule=\"evenodd\"".to_string())?;
        }
    }
    if presentation(node, parent, "style").is_some() {
        flag("style attribute".to_string())?;
    }
    Ok(())
}

/// Parse one drawable element into a canonical path, or `None` when it is
/// skipped under non-strict options.
fn parse_shape(
    node: &roxmltree::Node,
    outer: &Mat3,
    parent: Option<&roxmltree::Node>,
    opts: &ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<Option<PathGeometry>> {
    let name = node.tag_name().name();
    let supported = ["path", "rect", "circle", "ellipse", "polygon", "line"];
    if !supported.contains(&name) {
        return Err(Error::UnsupportedFeature(format!("<{}>", name)));
    }
    check_presentation(node, parent, opts, warnings)?;

    let fill_attr = presentation(node, parent, "fill").unwrap_or("black");
    if fill_attr.trim() == "none" {
        if opts.strict {
            return Err(Error::UnsupportedFeature("fill=\"none\"".into()));
        }
        warnings.push(format!("skipped <{}> with fill=\"none\"", name));
        return Ok(None);
    }
    let fill = Rgb::parse(fill_attr)?;

    let total = outer.mul(&element_transform(node)?);
    // The transform can magnify arc error, so tighten the local tolerance.
    let arc_tol = path_data::ARC_TOLERANCE / transform::max_scale(&total).max(1e-9);

    let num = |attr: &str, default: f64| -> Result<f64> {
        match node.attribute(attr) {
            None => Ok(default),
            Some(v) => v.trim().parse::<f64>().map_err(|_| {
                Error::UnsupportedFeature(format!("<{}> {}={:?}", name, attr, v))
            }),
        }
    };

    let loops: Vec<Vec<CubicBez>> = match name {
        "path" => {
            let d = node
                .attribute("d")
                .ok_or_else(|| Error::MalformedPath("<path> without d attribute".into()))?;
            path_data::parse_path_data(d, arc_tol)?
        }
        "rect" => {
            if node.attribute("rx").is_some() || node.attribute("ry").is_some() {
                return Err(Error::UnsupportedFeature("<rect> with rounded corners".into()));
            }
            let x = num("x", 0.0)?;
            let y = num("y", 0.0)?;
            let w = num("width", 0.0)?;
            let h = num("height", 0.0)?;
            if w <= 0.0 || h <= 0.0 {
                return Err(Error::UnsupportedFeature(
                    "<rect> with non-positive size".into(),
                ));
            }
            let corners = [
                Vec2::new(x, y),
                Vec2::new(x + w, y),
                Vec2::new(x + w, y + h),
                Vec2::new(x, y + h),
            ];
            vec![(0..4)
                .map(|i| CubicBez::from_line(corners[i], corners[(i + 1) % 4]))
                .collect()]
        }
        "circle" => {
            let c = Vec2::new(num("cx", 0.0)?, num("cy", 0.0)?);
            let r = num("r", 0.0)?;
            let mut cubics = Vec::new();
            path_data::append_ellipse_arc(
                &mut cubics,
                c,
                r,
                r,
                0.0,
                0.0,
                std::f64::consts::TAU,
                arc_tol,
            );
            vec![cubics]
        }
        "ellipse" => {
            let c = Vec2::new(num("cx", 0.0)?, num("cy", 0.0)?);
            let rx = num("rx", 0.0)?;
            let ry = num("ry", 0.0)?;
            let mut cubics = Vec::new();
            path_data::append_ellipse_arc(
                &mut cubics,
                c,
                rx,
                ry,
                0.0,
                0.0,
                std::f64::consts::TAU,
                arc_tol,
            );
            vec![cubics]
        }
        "polygon" => {
            let pts_attr = node.attribute("points").unwrap_or("");
            let nums: Vec<f64> = pts_attr
                .split(|c: char| c.is_ascii_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<f64>().map_err(|_| {
                        Error::MalformedPath(format!("<polygon> points {:?}", pts_attr))
                    })
                })
                .collect::<Result<_>>()?;
            if nums.len() < 6 || nums.len() % 2 != 0 {
                return Err(Error::MalformedPath("<polygon> needs >= 3 points".into()));
            }
            let pts: Vec<Vec2> = nums.chunks(2).map(|c| Vec2::new(c[0], c[1])).collect();
            vec![(0..pts.len())
                .map(|i| CubicBez::from_line(pts[i], pts[(i + 1) % pts.len()]))
                .collect()]
        }
        "line" => {
            let a = Vec2::new(num("x1", 0.0)?, num("y1", 0.0)?);
            let b = Vec2::new(num("x2", 0.0)?, num("y2", 0.0)?);
            vec![vec![CubicBez::from_line(a, b), CubicBez::from_line(b, a)]]
        }
        _ => unreachable!(),
    };

    let subpaths: Vec<Subpath> = loops
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|cubics| {
            let transformed: Vec<CubicBez> = cubics
                .iter()
                .map(|c| {
                    CubicBez::new(
                        total.apply_affine(c.p0),
                        total.apply_affine(c.p1),
                        total.apply_affine(c.p2),
                        total.apply_affine(c.p3),
                    )
                })
                .collect();
            Subpath::from_cubics(&transformed)
        })
        .collect();
    if subpaths.is_empty() {
        if opts.strict {
            return Err(Error::MalformedPath(format!("<{}> produced no geometry", name)));
        }
        warnings.push(format!("skipped empty <{}>", name));
        return Ok(None);
    }
    Ok(Some(PathGeometry {
        subpaths,
        fill,
        original_fill: fill,
    }))
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Shortest-round-trip float formatting for coordinates.
pub fn fmt_coord(v: f64) -> String {
    format!("{}", v)
}

/// The `d` attribute of one path's current geometry.
pub fn path_to_d(path: &PathGeometry) -> String {
    let mut d = String::new();
    for sp in &path.subpaths {
        if sp.is_empty() {
            continue;
        }
        let n = sp.len();
        let first = sp.segments[0].anchor;
        let _ = write!(d, "M{} {}", fmt_coord(first.x), fmt_coord(first.y));
        for j in 0..n {
            let c = sp.cubic(j);
            let _ = write!(
                d,
                " C{} {} {} {} {} {}",
                fmt_coord(c.p1.x),
                fmt_coord(c.p1.y),
                fmt_coord(c.p2.x),
                fmt_coord(c.p2.y),
                fmt_coord(c.p3.x),
                fmt_coord(c.p3.y)
            );
        }
        d.push_str(" Z ");
    }
    d.trim_end().to_string()
}

/// Serialize the document as static SVG text. Paths are written in painter
/// order; consecutive paths of the same group share one `<g>` tag.
pub fn serialize_static(doc: &SvgDocument) -> String {
    let group_of = doc.group_of_path();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">",
        fmt_coord(doc.canvas_width),
        fmt_coord(doc.canvas_height)
    );
    let mut i = 0;
    let mut run_counts: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    while i < doc.painter_order.len() {
        let gi = group_of[doc.painter_order[i]];
        let mut j = i;
        while j < doc.painter_order.len() && group_of[doc.painter_order[j]] == gi {
            j += 1;
        }
        let runs_seen = run_counts.entry(gi).or_insert(0);
        let id = if *runs_seen == 0 {
            doc.groups[gi].id.clone()
        } else {
            // A group split across non-contiguous painter runs needs
            // distinct ids to stay well-formed.
            format!("{}__{}", doc.groups[gi].id, *runs_seen + 1)
        };
        *runs_seen += 1;
        let _ = writeln!(out, "  <g id=\"{}\">", xml_escape(&id));
        for &pi in &doc.painter_order[i..j] {
            let p = &doc.paths[pi];
            let _ = writeln!(
                out,
                "    <path d=\"{}\" fill=\"{}\"/>",
                path_to_d(p),
                p.fill.to_hex()
            );
        }
        out.push_str("  </g>\n");
        i = j;
    }
    out.push_str("</svg>\n");
    out
}

pub(crate) fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

// ---------------------------------------------------------------------------
// Flattened parameter vector
// ---------------------------------------------------------------------------

/// Flatten all control points into one vector with a dense index table.
/// Order: document path order, then subpath, then segment, then
/// anchor / outgoing handle / incoming handle.
pub fn flatten_params(doc: &SvgDocument) -> (Vec<Vec2>, Vec<ControlPointIndex>) {
    let mut points = Vec::with_capacity(doc.control_point_count());
    let mut table = Vec::with_capacity(doc.control_point_count());
    for (pi, path) in doc.paths.iter().enumerate() {
        for (si, sp) in path.subpaths.iter().enumerate() {
            for (ji, seg) in sp.segments.iter().enumerate() {
                for (role, p) in [
                    (CpRole::Anchor, seg.anchor),
                    (CpRole::HandleOut, seg.handle_out),
                    (CpRole::HandleIn, seg.handle_in),
                ] {
                    table.push(ControlPointIndex {
                        path: pi,
                        subpath: si,
                        segment: ji,
                        role,
                        flat_index: points.len(),
                    });
                    points.push(p);
                }
            }
        }
    }
    (points, table)
}

/// Inverse of [`flatten_params`]: write a flattened point vector back into
/// a copy of the document's geometry.
pub fn unflatten_params(doc: &SvgDocument, points: &[Vec2]) -> Result<SvgDocument> {
    if points.len() != doc.control_point_count() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} control points, got {}",
            doc.control_point_count(),
            points.len()
        )));
    }
    let mut out = doc.clone();
    let mut k = 0;
    for path in &mut out.paths {
        for sp in &mut path.subpaths {
            for seg in &mut sp.segments {
                seg.anchor = points[k];
                seg.handle_out = points[k + 1];
                seg.handle_in = points[k + 2];
                k += 3;
            }
        }
    }
    Ok(out)
}
