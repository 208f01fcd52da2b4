//! SVG rendering of a curve's first two coordinates.

use std::fmt::Write;

use affframe::{DiscreteCurve, Scalar};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    pub stroke: String,
    /// In user units; defaults to 1/500 of the larger extent.
    pub stroke_width: Option<f64>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            stroke: "black".into(),
            stroke_width: None,
        }
    }
}

impl SvgStyle {
    pub fn new(stroke: &str, stroke_width: Option<f64>) -> Result<Self, CliError> {
        let plain = |c: char| c.is_ascii_alphanumeric() || "#(),.% -".contains(c);
        if stroke.is_empty() || !stroke.chars().all(plain) {
            return Err(CliError::Usage(format!("unsupported stroke color {stroke:?}")));
        }
        if let Some(w) = stroke_width {
            if !(w.is_finite() && w > 0.0) {
                return Err(CliError::Usage(format!("stroke width must be positive, got {w}")));
            }
        }
        Ok(SvgStyle {
            stroke: stroke.into(),
            stroke_width,
        })
    }
}

/// One `<polyline>` (or `<polygon>` for closed curves) with a vertex per
/// point, drawn with `y` pointing up, in a view box 5% larger than the
/// bounding box.
pub fn render_svg<S: Scalar, const D: usize>(curve: &DiscreteCurve<S, D>, style: &SvgStyle) -> String {
    let pts: Vec<(f64, f64)> = curve
        .points()
        .iter()
        .map(|p| (p[0].to_f64(), -p[1].to_f64()))
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 0.0, 0.0);
    }
    let extent = (x1 - x0).max(y1 - y0);
    let extent = if extent > 0.0 { extent } else { 1.0 };
    let margin = 0.05 * extent;
    let width = style.stroke_width.unwrap_or(extent / 500.0);

    let mut coords = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        if i > 0 {
            coords.push(' ');
        }
        write!(coords, "{},{}", x + 0.0, y + 0.0).expect("string write");
    }
    let element = if curve.is_closed() { "polygon" } else { "polyline" };
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n\
         <{element} fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\" points=\"{coords}\"/>\n\
         </svg>\n",
        x0 - margin,
        y0 - margin,
        (x1 - x0) + 2.0 * margin,
        (y1 - y0) + 2.0 * margin,
        style.stroke,
        width,
    )
}

/// Number of vertices in a rendered SVG.
pub fn vertex_count(svg: &str) -> Option<usize> {
    let start = svg.find("points=\"")? + "points=\"".len();
    let end = start + svg[start..].find('"')?;
    Some(svg[start..end].split_whitespace().count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use affframe::Point2;

    #[test]
    fn open_curve() {
        let c = DiscreteCurve::open(vec![
            Point2::<f64>::new([0.0, 0.0]),
            Point2::new([10.0, 0.0]),
            Point2::new([10.0, 10.0]),
        ])
        .unwrap();
        let svg = render_svg(&c, &SvgStyle::default());
        assert!(svg.contains("viewBox=\"-0.5 -10.5 11 11\""), "{svg}");
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("points=\"0,0 10,0 10,-10\""), "{svg}");
        assert_eq!(vertex_count(&svg), Some(3));
    }

    #[test]
    fn closed_curve_is_a_polygon() {
        let c = DiscreteCurve::closed(vec![
            Point2::<f64>::new([0.0, 0.0]),
            Point2::new([1.0, 0.0]),
            Point2::new([0.0, 1.0]),
        ])
        .unwrap();
        let svg = render_svg(&c, &SvgStyle::new("#336699", Some(0.01)).unwrap());
        assert!(svg.contains("<polygon") && svg.contains("stroke=\"#336699\"") && svg.contains("stroke-width=\"0.01\""));
    }

    #[test]
    fn rejects_markup_in_stroke() {
        assert!(SvgStyle::new("red\"/><script", None).is_err());
        assert!(SvgStyle::new("red", Some(-1.0)).is_err());
    }
}
