//! SVG `transform` attribute parsing (affine subset).
//!
//! Transforms are baked into coordinates at parse time, so only the parsed
//! affine matrix leaves this module.

use crate::error::Error;
use crate::geom::Mat3;
use crate::Result;

/// Parse a `transform` attribute into a single affine matrix
/// (matrix/translate/scale/rotate/skewX/skewY, left-to-right composition).
pub fn parse_transform(text: &str) -> Result<Mat3> {
    let mut m = Mat3::IDENTITY;
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| {
            Error::UnsupportedFeature(format!("transform {:?} (expected '(')", rest))
        })?;
        let name = rest[..open].trim();
        let close = rest[open..].find(')').ok_or_else(|| {
            Error::UnsupportedFeature(format!("transform {:?} (expected ')')", rest))
        })? + open;
        let args: Vec<f64> = rest[open + 1..close]
            .split(|c: char| c.is_ascii_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<f64>().map_err(|_| {
                    Error::UnsupportedFeature(format!("transform argument {:?}", s))
                })
            })
            .collect::<Result<_>>()?;
        let t = match (name, args.len()) {
            ("matrix", 6) => Mat3([
                args[0], args[2], args[4], args[1], args[3], args[5], 0.0, 0.0, 1.0,
            ]),
            ("translate", 1) => Mat3::translation(crate::geom::Vec2::new(args[0], 0.0)),
            ("translate", 2) => Mat3::translation(crate::geom::Vec2::new(args[0], args[1])),
            ("scale", 1) => Mat3::scale(args[0], args[0]),
            ("scale", 2) => Mat3::scale(args[0], args[1]),
            ("rotate", 1) => Mat3::rotation(args[0].to_radians()),
            ("rotate", 3) => {
                let c = crate::geom::Vec2::new(args[1], args[2]);
                Mat3::translation(c)
                    .mul(&Mat3::rotation(args[0].to_radians()))
                    .mul(&Mat3::translation(-c))
            }
            ("skewX", 1) => Mat3::shear_x(args[0].to_radians().tan()),
            ("skewY", 1) => Mat3([
                1.0,
                0.0,
                0.0,
                args[0].to_radians().tan(),
                1.0,
                0.0,
                0.0,
                0.0,
                1.0,
            ]),
            _ => {
                return Err(Error::UnsupportedFeature(format!(
                    "transform function {:?} with {} arguments",
                    name,
                    args.len()
                )))
            }
        };
        m = m.mul(&t);
        rest = rest[close + 1..].trim_start_matches(|c: char| c.is_ascii_whitespace() || c == ',');
    }
    Ok(m)
}

/// Largest singular value of the affine 2x2 block; bounds how much the
/// transform can magnify arc-approximation error.
pub fn max_scale(m: &Mat3) -> f64 {
    let a = m.at(0, 0);
    let b = m.at(0, 1);
    let c = m.at(1, 0);
    let d = m.at(1, 1);
    let e = (a * a + b * b + c * c + d * d) * 0.5;
    let f = {
        let det = a * d - b * c;
        let g = (a * a + b * b - c * c - d * d) * 0.5;
        let h = a * c + b * d;
        let _ = det;
        (g * g + h * h).sqrt()
    };
    (e + f).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec2;

    #[test]
    fn translate_then_scale() {
        let m = parse_transform("translate(10, 5) scale(2)").unwrap();
        let p = m.apply_affine(Vec2::new(1.0, 1.0));
        assert_eq!(p, Vec2::new(12.0, 7.0));
    }

    #[test]
    fn rotate_about_center() {
        let m = parse_transform("rotate(90 10 10)").unwrap();
        let p = m.apply_affine(Vec2::new(11.0, 10.0));
        assert!((p - Vec2::new(10.0, 11.0)).norm() < 1e-12);
    }

    #[test]
    fn matrix_column_order() {
        let m = parse_transform("matrix(1 0 0 1 7 -3)").unwrap();
        assert_eq!(m.apply_affine(Vec2::ZERO), Vec2::new(7.0, -3.0));
    }

    #[test]
    fn max_scale_of_anisotropic() {
        let m = parse_transform("scale(3 0.5)").unwrap();
        assert!((max_scale(&m) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_function_rejected() {
        assert!(parse_transform("perspective(4)").is_err());
    }
}
