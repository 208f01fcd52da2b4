//! Point lists as CSV.
//!
//! ```text
//! # dim=2 closed=false
//! 0,0
//! 1/3,0
//! ```
//!
//! The header is optional; without it the dimension is the row arity and the
//! curve is open. Blank lines and other `#` lines are ignored.

use affframe::{DiscreteCurve, Point, Rational};

use crate::error::CliError;
use crate::literal::{detect_mode, Literal, NumberMode};

/// A parsed but not yet evaluated points file.
#[derive(Clone, Debug, PartialEq)]
pub struct PointsFile {
    pub dim: usize,
    pub closed: bool,
    pub mode: NumberMode,
    rows: Vec<Vec<String>>,
}

/// A curve in whichever dimension and arithmetic its input called for.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyCurve {
    Exact2(DiscreteCurve<Rational, 2>),
    Float2(DiscreteCurve<f64, 2>),
    Exact3(DiscreteCurve<Rational, 3>),
    Float3(DiscreteCurve<f64, 3>),
}

impl AnyCurve {
    pub fn len(&self) -> usize {
        match self {
            AnyCurve::Exact2(c) => c.len(),
            AnyCurve::Float2(c) => c.len(),
            AnyCurve::Exact3(c) => c.len(),
            AnyCurve::Float3(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyCurve::Exact2(_) | AnyCurve::Float2(_) => 2,
            AnyCurve::Exact3(_) | AnyCurve::Float3(_) => 3,
        }
    }

    pub fn mode(&self) -> NumberMode {
        match self {
            AnyCurve::Exact2(_) | AnyCurve::Exact3(_) => NumberMode::Exact,
            AnyCurve::Float2(_) | AnyCurve::Float3(_) => NumberMode::Float,
        }
    }

    /// The same curve in float arithmetic.
    pub fn to_float(&self) -> AnyCurve {
        match self {
            AnyCurve::Exact2(c) => AnyCurve::Float2(c.to_f64()),
            AnyCurve::Exact3(c) => AnyCurve::Float3(c.to_f64()),
            other => other.clone(),
        }
    }

    pub fn to_csv(&self) -> String {
        match self {
            AnyCurve::Exact2(c) => write_points(c),
            AnyCurve::Float2(c) => write_points(c),
            AnyCurve::Exact3(c) => write_points(c),
            AnyCurve::Float3(c) => write_points(c),
        }
    }
}

macro_rules! any_curve_from {
    ($($variant:ident: $s:ty, $d:literal;)*) => {$(
        impl From<DiscreteCurve<$s, $d>> for AnyCurve {
            fn from(c: DiscreteCurve<$s, $d>) -> Self {
                AnyCurve::$variant(c)
            }
        }
    )*};
}

any_curve_from! {
    Exact2: Rational, 2;
    Float2: f64, 2;
    Exact3: Rational, 3;
    Float3: f64, 3;
}

fn parse_header(line: &str, dim: &mut Option<usize>, closed: &mut bool, at: usize) -> Result<(), CliError> {
    for field in line.split_whitespace() {
        let Some((key, value)) = field.split_once('=') else {
            continue;
        };
        match key {
            "dim" => {
                *dim = Some(
                    value
                        .parse()
                        .map_err(|_| CliError::parse_at(at, format!("bad dim {value:?}")))?,
                )
            }
            "closed" => {
                *closed = value
                    .parse()
                    .map_err(|_| CliError::parse_at(at, format!("bad closed flag {value:?}")))?
            }
            _ => {}
        }
    }
    Ok(())
}

impl PointsFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut dim = None;
        let mut closed = false;
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut seen_content = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let at = i + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if !seen_content {
                    parse_header(comment, &mut dim, &mut closed, at)?;
                }
                continue;
            }
            seen_content = true;
            let row: Vec<String> = line.split(',').map(|t| t.trim().to_string()).collect();
            let expected = dim.or_else(|| rows.first().map(Vec::len)).unwrap_or(row.len());
            if row.len() != expected {
                return Err(CliError::parse_at(
                    at,
                    format!("expected {expected} coordinates, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        let dim = dim.or_else(|| rows.first().map(Vec::len)).unwrap_or(2);
        if dim != 2 && dim != 3 {
            return Err(CliError::Parse(format!("dimension must be 2 or 3, got {dim}")));
        }
        let mode = detect_mode(rows.iter().flatten().map(String::as_str))?;
        Ok(PointsFile {
            dim,
            closed,
            mode,
            rows,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn points<S: Literal, const D: usize>(&self) -> Result<Vec<Point<S, D>>, CliError> {
        if D != self.dim {
            return Err(CliError::Parse(format!("expected {D}D points, file has {}D", self.dim)));
        }
        self.rows
            .iter()
            .map(|row| {
                let coords: Vec<S> = row.iter().map(|t| S::parse_literal(t)).collect::<Result<_, _>>()?;
                let coords: [S; D] = coords
                    .try_into()
                    .map_err(|_| CliError::Parse("coordinate count changed".into()))?;
                Ok(Point::new(coords))
            })
            .collect()
    }

    pub fn curve<S: Literal, const D: usize>(&self) -> Result<DiscreteCurve<S, D>, CliError> {
        let points = self.points()?;
        Ok(if self.closed {
            DiscreteCurve::closed(points)?
        } else {
            DiscreteCurve::open(points)?
        })
    }

    /// Evaluates the file in its detected mode, or in float mode if `float`.
    pub fn any_curve(&self, float: bool) -> Result<AnyCurve, CliError> {
        let exact = self.mode == NumberMode::Exact && !float;
        Ok(match (self.dim, exact) {
            (2, true) => AnyCurve::Exact2(self.curve()?),
            (2, false) => AnyCurve::Float2(self.curve()?),
            (_, true) => AnyCurve::Exact3(self.curve()?),
            (_, false) => AnyCurve::Float3(self.curve()?),
        })
    }
}

pub fn write_points<S: Literal, const D: usize>(curve: &DiscreteCurve<S, D>) -> String {
    let mut out = format!("# dim={D} closed={}\n", curve.is_closed());
    for p in curve.points() {
        let row: Vec<String> = p.coords().iter().map(Literal::render).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
