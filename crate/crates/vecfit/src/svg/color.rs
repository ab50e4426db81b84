//! Solid fill colors.

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};

/// An RGB color with channels in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rgb {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl Rgb {
    pub const WHITE: Rgb = Rgb {
        r: 1.0,
        g: 1.0,
        b: 1.0,
    };
    pub const BLACK: Rgb = Rgb {
        r: 0.0,
        g: 0.0,
        b: 0.0,
    };

    pub fn new(r: f64, g: f64, b: f64) -> Self {
        Rgb { r, g, b }
    }

    pub fn channels(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn distance(self, o: Rgb) -> f64 {
        let dr = self.r - o.r;
        let dg = self.g - o.g;
        let db = self.b - o.b;
        (dr * dr + dg * dg + db * db).sqrt()
    }

    /// `#rrggbb` form, rounding each channel to 8 bits.
    pub fn to_hex(self) -> String {
        let q = |v: f64| (v.clamp(0.0, 1.0) * 255.0).round() as u8;
        format!("#{:02x}{:02x}{:02x}", q(self.r), q(self.g), q(self.b))
    }

    /// Parse a fill value: `#rgb`, `#rrggbb`, `rgb(...)`, or a small set of
    /// keyword colors. `none` is rejected here; the caller decides how to
    /// treat unfilled shapes.
    pub fn parse(text: &str) -> Result<Rgb> {
        let t = text.trim();
        if let Some(hex) = t.strip_prefix('#') {
            return match hex.len() {
                3 => {
                    let v: Vec<u8> = hex
                        .chars()
                        .map(|c| {
                            c.to_digit(16)
                                .map(|d| (d * 17) as u8)
                                .ok_or_else(|| bad_color(t))
                        })
                        .collect::<Result<_>>()?;
                    Ok(Rgb::from_u8(v[0], v[1], v[2]))
                }
                6 => {
                    let v = u32::from_str_radix(hex, 16).map_err(|_| bad_color(t))?;
                    Ok(Rgb::from_u8(
                        (v >> 16) as u8,
                        (v >> 8) as u8,
                        v as u8,
                    ))
                }
                _ => Err(bad_color(t)),
            };
        }
        if let Some(body) = t.strip_prefix("rgb(").and_then(|s| s.strip_suffix(')')) {
            let parts: Vec<&str> = body.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(bad_color(t));
            }
            let chan = |s: &str| -> Result<f64> {
                if let Some(pct) = s.strip_suffix('%') {
                    Ok(pct.parse::<f64>().map_err(|_| bad_color(t))? / 100.0)
                } else {
                    Ok(s.parse::<f64>().map_err(|_| bad_color(t))? / 255.0)
                }
            };
            return Ok(Rgb::new(chan(parts[0])?, chan(parts[1])?, chan(parts[2])?));
        }
        match t.to_ascii_lowercase().as_str() {
            "black" => Ok(Rgb::BLACK),
            "white" => Ok(Rgb::WHITE),
            "red" => Ok(Rgb::new(1.0, 0.0, 0.0)),
            "green" => Ok(Rgb::from_u8(0, 128, 0)),
            "lime" => Ok(Rgb::new(0.0, 1.0, 0.0)),
            "blue" => Ok(Rgb::new(0.0, 0.0, 1.0)),
            "yellow" => Ok(Rgb::new(1.0, 1.0, 0.0)),
            "gray" | "grey" => Ok(Rgb::from_u8(128, 128, 128)),
            _ => Err(Error::UnsupportedFeature(format!("fill color {:?}", t))),
        }
    }

    pub fn from_u8(r: u8, g: u8, b: u8) -> Rgb {
        Rgb::new(r as f64 / 255.0, g as f64 / 255.0, b as f64 / 255.0)
    }
}

fn bad_color(t: &str) -> Error {
    Error::UnsupportedFeature(format!("fill color {:?}", t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_roundtrip_is_exact() {
        for v in [0u8, 1, 17, 128, 254, 255] {
            let c = Rgb::from_u8(v, 255 - v, v / 2);
            let back = Rgb::parse(&c.to_hex()).unwrap();
            assert_eq!(c, back);
        }
    }

    #[test]
    fn short_hex_and_rgb_forms() {
        assert_eq!(Rgb::parse("#f00").unwrap(), Rgb::new(1.0, 0.0, 0.0));
        assert_eq!(
            Rgb::parse("rgb(255, 0, 127)").unwrap(),
            Rgb::from_u8(255, 0, 127)
        );
        assert_eq!(Rgb::parse("rgb(50%, 100%, 0%)").unwrap(), Rgb::new(0.5, 1.0, 0.0));
    }

    #[test]
    fn unknown_color_rejected() {
        assert!(Rgb::parse("url(#grad)").is_err());
    }
}
