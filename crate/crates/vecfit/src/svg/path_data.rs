//! SVG path `d` attribute parsing and canonicalization to closed cubic
//! loops.
//!
//! All commands (including H/V, S/T shortcuts, quadratics, and elliptical
//! arcs) are reduced to absolute cubic segments. Quadratics are degree
//! elevated exactly; arcs are approximated by cubics within a caller-chosen
//! deviation bound. Every subpath is closed: a missing `Z` (or a `Z` whose
//! endpoint differs from the subpath start) gets an explicit closing
//! segment.

use crate::error::Error;
use crate::geom::{CubicBez, Vec2};
use crate::Result;

/// Maximum deviation (in the curve's own units) allowed when replacing an
/// elliptical arc by cubic segments.
pub const ARC_TOLERANCE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Command(char),
    Number(f64),
}

struct Lexer<'a> {
    rest: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { rest: s, pos: 0 }
    }

    fn skip_separators(&mut self) {
        let trimmed = self
            .rest
            .trim_start_matches(|c: char| c.is_ascii_whitespace() || c == ',');
        self.pos += self.rest.len() - trimmed.len();
        self.rest = trimmed;
    }

    fn peek_command(&mut self) -> Option<char> {
        self.skip_separators();
        let c = self.rest.chars().next()?;
        if c.is_ascii_alphabetic() {
            Some(c)
        } else {
            None
        }
    }

    fn take_command(&mut self) -> Option<char> {
        let c = self.peek_command()?;
        self.rest = &self.rest[1..];
        self.pos += 1;
        Some(c)
    }

    fn at_end(&mut self) -> bool {
        self.skip_separators();
        self.rest.is_empty()
    }

    fn take_number(&mut self) -> Result<f64> {
        self.skip_separators();
        let bytes = self.rest.as_bytes();
        if bytes.is_empty() {
            return Err(Error::MalformedPath(format!(
                "expected number at offset {}, found end of data",
                self.pos
            )));
        }
        let mut i = 0;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            i += 1;
        }
        let mut digits = 0;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
            digits += 1;
        }
        if i < bytes.len() && bytes[i] == b'.' {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
                digits += 1;
            }
        }
        if digits == 0 {
            return Err(Error::MalformedPath(format!(
                "expected number at offset {}, found {:?}",
                self.pos,
                &self.rest[..self.rest.len().min(8)]
            )));
        }
        if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
            let mut j = i + 1;
            if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                j += 1;
            }
            let mut exp_digits = 0;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
                exp_digits += 1;
            }
            if exp_digits > 0 {
                i = j;
            }
        }
        let (num, rest) = self.rest.split_at(i);
        let value: f64 = num.parse().map_err(|_| {
            Error::MalformedPath(format!("invalid number {:?} at offset {}", num, self.pos))
        })?;
        self.rest = rest;
        self.pos += i;
        Ok(value)
    }

    /// Arc flags are single characters `0` or `1` and may be run together
    /// with the following number, so they need their own lexer rule.
    fn take_flag(&mut self) -> Result<bool> {
        self.skip_separators();
        match self.rest.as_bytes().first() {
            Some(b'0') => {
                self.rest = &self.rest[1..];
                self.pos += 1;
                Ok(false)
            }
            Some(b'1') => {
                self.rest = &self.rest[1..];
                self.pos += 1;
                Ok(true)
            }
            _ => Err(Error::MalformedPath(format!(
                "expected arc flag 0/1 at offset {}",
                self.pos
            ))),
        }
    }

    fn take_pair(&mut self) -> Result<Vec2> {
        let x = self.take_number()?;
        let y = self.take_number()?;
        Ok(Vec2::new(x, y))
    }

    fn has_more_arguments(&mut self) -> bool {
        self.skip_separators();
        match self.rest.as_bytes().first() {
            Some(c) => !c.is_ascii_alphabetic(),
            None => false,
        }
    }
}

/// Parse a `d` attribute into closed loops of cubic segments.
///
/// `arc_tolerance` bounds the deviation of arc approximations; pass
/// [`ARC_TOLERANCE`] scaled by any subsequent coordinate scaling.
pub fn parse_path_data(d: &str, arc_tolerance: f64) -> Result<Vec<Vec<CubicBez>>> {
    let mut lx = Lexer::new(d);
    let mut loops: Vec<Vec<CubicBez>> = Vec::new();
    let mut current: Vec<CubicBez> = Vec::new();

    let mut start = Vec2::ZERO;
    let mut pos = Vec2::ZERO;
    // Reflection state for S/T shortcuts.
    let mut last_cubic_ctrl: Option<Vec2> = None;
    let mut last_quad_ctrl: Option<Vec2> = None;
    let mut seen_move = false;
    let mut prev_cmd = ' ';

    let close_loop =
        |current: &mut Vec<CubicBez>, loops: &mut Vec<Vec<CubicBez>>, pos: &mut Vec2, start: Vec2| {
            if !current.is_empty() {
                if (*pos - start).norm() > 1e-12 {
                    current.push(CubicBez::from_line(*pos, start));
                }
                loops.push(std::mem::take(current));
            }
            *pos = start;
        };

    while !lx.at_end() {
        let cmd = match lx.take_command() {
            Some(c) => c,
            None => {
                // Bare numbers after M/L/etc. repeat the previous command;
                // a bare number with no command at all is malformed.
                if prev_cmd == ' ' {
                    return Err(Error::MalformedPath(
                        "path data does not start with a command".into(),
                    ));
                }
                match prev_cmd {
                    'M' => 'L',
                    'm' => 'l',
                    c => c,
                }
            }
        };
        if !seen_move && !matches!(cmd, 'M' | 'm') {
            return Err(Error::MalformedPath(format!(
                "first command must be M or m, found {:?}",
                cmd
            )));
        }
        match cmd {
            'M' | 'm' => {
                close_loop(&mut current, &mut loops, &mut pos, start);
                let p = lx.take_pair()?;
                pos = if cmd == 'm' && seen_move { pos + p } else { p };
                start = pos;
                seen_move = true;
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
                // Extra pairs are implicit linetos.
                while lx.has_more_arguments() {
                    let q = lx.take_pair()?;
                    let target = if cmd == 'm' { pos + q } else { q };
                    push_line(&mut current, pos, target);
                    pos = target;
                }
            }
            'L' | 'l' => loop {
                let q = lx.take_pair()?;
                let target = if cmd == 'l' { pos + q } else { q };
                push_line(&mut current, pos, target);
                pos = target;
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'H' | 'h' => loop {
                let x = lx.take_number()?;
                let target = if cmd == 'h' {
                    Vec2::new(pos.x + x, pos.y)
                } else {
                    Vec2::new(x, pos.y)
                };
                push_line(&mut current, pos, target);
                pos = target;
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'V' | 'v' => loop {
                let y = lx.take_number()?;
                let target = if cmd == 'v' {
                    Vec2::new(pos.x, pos.y + y)
                } else {
                    Vec2::new(pos.x, y)
                };
                push_line(&mut current, pos, target);
                pos = target;
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'C' | 'c' => loop {
                let c1 = lx.take_pair()?;
                let c2 = lx.take_pair()?;
                let p = lx.take_pair()?;
                let (c1, c2, p) = if cmd == 'c' {
                    (pos + c1, pos + c2, pos + p)
                } else {
                    (c1, c2, p)
                };
                current.push(CubicBez::new(pos, c1, c2, p));
                last_cubic_ctrl = Some(c2);
                last_quad_ctrl = None;
                pos = p;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'S' | 's' => loop {
                let c2 = lx.take_pair()?;
                let p = lx.take_pair()?;
                let (c2, p) = if cmd == 's' { (pos + c2, pos + p) } else { (c2, p) };
                let c1 = match last_cubic_ctrl {
                    Some(prev) => pos + (pos - prev),
                    None => pos,
                };
                current.push(CubicBez::new(pos, c1, c2, p));
                last_cubic_ctrl = Some(c2);
                last_quad_ctrl = None;
                pos = p;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'Q' | 'q' => loop {
                let q = lx.take_pair()?;
                let p = lx.take_pair()?;
                let (q, p) = if cmd == 'q' { (pos + q, pos + p) } else { (q, p) };
                current.push(CubicBez::from_quadratic(pos, q, p));
                last_quad_ctrl = Some(q);
                last_cubic_ctrl = None;
                pos = p;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'T' | 't' => loop {
                let p = lx.take_pair()?;
                let p = if cmd == 't' { pos + p } else { p };
                let q = match last_quad_ctrl {
                    Some(prev) => pos + (pos - prev),
                    None => pos,
                };
                current.push(CubicBez::from_quadratic(pos, q, p));
                last_quad_ctrl = Some(q);
                last_cubic_ctrl = None;
                pos = p;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'A' | 'a' => loop {
                let rx = lx.take_number()?;
                let ry = lx.take_number()?;
                let rot_deg = lx.take_number()?;
                let large_arc = lx.take_flag()?;
                let sweep = lx.take_flag()?;
                let p = lx.take_pair()?;
                let p = if cmd == 'a' { pos + p } else { p };
                arc_to_cubics(
                    &mut current,
                    pos,
                    rx,
                    ry,
                    rot_deg.to_radians(),
                    large_arc,
                    sweep,
                    p,
                    arc_tolerance,
                );
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
                pos = p;
                if !lx.has_more_arguments() {
                    break;
                }
            },
            'Z' | 'z' => {
                close_loop(&mut current, &mut loops, &mut pos, start);
                last_cubic_ctrl = None;
                last_quad_ctrl = None;
            }
            other => {
                return Err(Error::MalformedPath(format!(
                    "unknown path command {:?}",
                    other
                )));
            }
        }
        prev_cmd = cmd;
    }
    // Implicit closure of a trailing open subpath.
    close_loop(&mut current, &mut loops, &mut pos, start);
    Ok(loops)
}

fn push_line(current: &mut Vec<CubicBez>, from: Vec2, to: Vec2) {
    current.push(CubicBez::from_line(from, to));
}

/// Convert an SVG endpoint-parameterized elliptical arc to cubic segments
/// appended to `out`. Follows the W3C endpoint-to-center conversion with
/// out-of-range radius correction.
#[allow(clippy::too_many_arguments)]
pub fn arc_to_cubics(
    out: &mut Vec<CubicBez>,
    from: Vec2,
    rx: f64,
    ry: f64,
    x_rot: f64,
    large_arc: bool,
    sweep: bool,
    to: Vec2,
    tolerance: f64,
) {
    let mut rx = rx.abs();
    let mut ry = ry.abs();
    if rx < 1e-12 || ry < 1e-12 || (from - to).norm() < 1e-12 {
        // Degenerate arcs render as straight lines per the SVG spec.
        if (from - to).norm() > 1e-12 {
            out.push(CubicBez::from_line(from, to));
        }
        return;
    }
    let (cos_r, sin_r) = (x_rot.cos(), x_rot.sin());
    // Rotate into the ellipse frame.
    let d = (from - to) * 0.5;
    let x1p = cos_r * d.x + sin_r * d.y;
    let y1p = -sin_r * d.x + cos_r * d.y;
    // Scale radii up if the endpoints cannot be connected.
    let lambda = x1p * x1p / (rx * rx) + y1p * y1p / (ry * ry);
    if lambda > 1.0 {
        let s = lambda.sqrt();
        rx *= s;
        ry *= s;
    }
    let num = (rx * rx * ry * ry - rx * rx * y1p * y1p - ry * ry * x1p * x1p).max(0.0);
    let den = rx * rx * y1p * y1p + ry * ry * x1p * x1p;
    let mut coef = (num / den).sqrt();
    if large_arc == sweep {
        coef = -coef;
    }
    let cxp = coef * rx * y1p / ry;
    let cyp = -coef * ry * x1p / rx;
    let mid = (from + to) * 0.5;
    let cx = cos_r * cxp - sin_r * cyp + mid.x;
    let cy = sin_r * cxp + cos_r * cyp + mid.y;

    let angle_of = |x: f64, y: f64| y.atan2(x);
    let theta1 = angle_of((x1p - cxp) / rx, (y1p - cyp) / ry);
    let theta2 = angle_of((-x1p - cxp) / rx, (-y1p - cyp) / ry);
    let mut delta = theta2 - theta1;
    if sweep && delta < 0.0 {
        delta += std::f64::consts::TAU;
    } else if !sweep && delta > 0.0 {
        delta -= std::f64::consts::TAU;
    }

    append_ellipse_arc(
        out,
        Vec2::new(cx, cy),
        rx,
        ry,
        x_rot,
        theta1,
        delta,
        tolerance,
    );
}

/// Append cubics approximating the ellipse arc with center `c`, radii
/// `(rx, ry)`, axis rotation `x_rot`, from angle `theta1` sweeping `delta`
/// radians. Each piece uses the tangent-length construction; the piece
/// count is chosen so the radial deviation stays below `tolerance`.
#[allow(clippy::too_many_arguments)]
pub fn append_ellipse_arc(
    out: &mut Vec<CubicBez>,
    c: Vec2,
    rx: f64,
    ry: f64,
    x_rot: f64,
    theta1: f64,
    delta: f64,
    tolerance: f64,
) {
    let (cos_r, sin_r) = (x_rot.cos(), x_rot.sin());
    let point_at = |theta: f64| {
        let (s, co) = theta.sin_cos();
        let ex = rx * co;
        let ey = ry * s;
        Vec2::new(
            c.x + cos_r * ex - sin_r * ey,
            c.y + sin_r * ex + cos_r * ey,
        )
    };
    let deriv_at = |theta: f64| {
        let (s, co) = theta.sin_cos();
        let ex = -rx * s;
        let ey = ry * co;
        Vec2::new(cos_r * ex - sin_r * ey, sin_r * ex + cos_r * ey)
    };

    // Deviation of a single cubic piece scales like sweep^6; 2.8e-4*r is
    // the quarter-turn figure for the tangent-length construction.
    let r_max = rx.max(ry).max(1e-9);
    let quarter_err = 2.8e-4 * r_max;
    let quality = (quarter_err / tolerance.max(1e-12)).max(1.0).powf(1.0 / 6.0);
    let quarters = delta.abs() / std::f64::consts::FRAC_PI_2;
    let n = ((quarters * quality).ceil() as usize).max(1);

    let step = delta / n as f64;
    let k = (4.0 / 3.0) * (step / 4.0).tan();
    for i in 0..n {
        let t0 = theta1 + step * i as f64;
        let t1 = t0 + step;
        let p0 = point_at(t0);
        let p3 = point_at(t1);
        let d0 = deriv_at(t0);
        let d1 = deriv_at(t1);
        out.push(CubicBez::new(p0, p0 + d0 * k, p3 - d1 * k, p3));
    }
}
