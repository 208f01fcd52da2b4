//! Command-line surface.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use affframe::equivalence::{are_equivalent, AffineMap, EquivalenceMode, EquivalenceReport};
use affframe::frame::{
    planar_curvatures_with, reconstruct_planar, reconstruct_planar_closed, reconstruct_space, space_invariants_with,
    Admissibility,
};
use affframe::hilbert::{
    expand_word, extend_space_hilbert, generate_hilbert, hilbert_kappa_sequence, inflection_count,
    standard_hilbert_init,
};
use affframe::koch::{extend_space_koch, generate_koch, koch_code, standard_koch_init, AnglePair};
use affframe::snowflake::{generate_snowflake, snowflake_code};
use affframe::{DiscreteCurve, InvariantProfile, Point, Point2, Point3, Rational, Scalar, Tolerance};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{exit, CliError};
use crate::literal::{detect_mode, Literal, NumberMode};
use crate::points::{AnyCurve, PointsFile};
use crate::profile::{parse_profile, AnyProfile};
use crate::svg::{render_svg, SvgStyle};

/// Environment variable capping the number of generated points.
pub const MAX_POINTS_VAR: &str = "AFFRAME_MAX_POINTS";

const KOCH_MAX_STEP: u32 = 12;
const HILBERT_MAX_STEP: u32 = 10;

#[derive(Parser, Debug)]
#[command(name = "affframe", version, about = "Affine Koch and Hilbert curves from discrete centroaffine invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a curve from its family code and three initial points.
    Generate(GenerateArgs),
    /// Print the code of a curve family.
    Code(CodeArgs),
    /// Compute the invariant profile of a points file.
    Curvatures(CurvaturesArgs),
    /// Decide whether two curves are affinely or centroaffinely equivalent.
    Equiv(EquivArgs),
    /// Rebuild a curve from three points and an invariant profile.
    Reconstruct(ReconstructArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Koch,
    Snowflake,
    Hilbert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Notation {
    Binary,
    Letters,
    Symbols,
    Kappas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    PlanarAffine,
    Centroaffine,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Arithmetic {
    /// Use exact rational arithmetic; decimal literals are converted exactly.
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Use floating-point arithmetic.
    #[arg(long)]
    float: bool,
}

impl Arithmetic {
    fn resolve(&self, detected: NumberMode) -> NumberMode {
        if self.exact {
            NumberMode::Exact
        } else if self.float {
            NumberMode::Float
        } else {
            detected
        }
    }
}

#[derive(Args, Debug)]
struct Rendering {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// SVG stroke color.
    #[arg(long, default_value = "black")]
    stroke: String,
    /// SVG stroke width in curve units.
    #[arg(long)]
    stroke_width: Option<f64>,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    step: u32,
    /// Initial points as "x,y;x,y;x,y" (or three 3D points).
    #[arg(long, allow_hyphen_values = true)]
    init: String,
    /// Give only two points and complete them with the standard third point.
    #[arg(long)]
    standard: bool,
    /// Space curves: `κ̄ = bar_ratio·κ` (Hilbert only).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    bar_ratio: String,
    /// Space curves: `τ = tau_ratio·κ`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    tau_ratio: String,
    /// Space curves: reject an initial frame that does not span space.
    #[arg(long)]
    enforce_admissibility: bool,
    /// Allow steps beyond the default bounds.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    arithmetic: Arithmetic,
    #[command(flatten)]
    rendering: Rendering,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    step: u32,
    /// Defaults to `binary` for Koch curves and snowflakes, `letters` for Hilbert curves.
    #[arg(long, value_enum)]
    notation: Option<Notation>,
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct CurvaturesArgs {
    /// Points file, or `-` for standard input.
    input: PathBuf,
    /// Relative threshold below which a float determinant counts as zero.
    #[arg(long, default_value_t = affframe::scalar::DEFAULT_RELATIVE_TOLERANCE)]
    zero_tol: f64,
    #[command(flatten)]
    arithmetic: Arithmetic,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EquivArgs {
    a: PathBuf,
    b: PathBuf,
    /// Defaults to planar-affine for 2D files and centroaffine for 3D files.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Absolute tolerance for float profile comparison.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Compare closed curves up to a change of starting vertex.
    #[arg(long)]
    cyclic: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long)]
    float: bool,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    /// Profile file, or `-` for standard input.
    #[arg(long)]
    profile: PathBuf,
    /// Initial points as "x,y;x,y;x,y".
    #[arg(long, allow_hyphen_values = true, required_unless_present = "init_from", conflicts_with = "init_from")]
    init: Option<String>,
    /// Take the initial points from the first three rows of a points file.
    #[arg(long)]
    init_from: Option<PathBuf>,
    #[arg(long)]
    enforce_admissibility: bool,
    #[command(flatten)]
    arithmetic: Arithmetic,
    #[command(flatten)]
    rendering: Rendering,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let max_points = std::env::var(MAX_POINTS_VAR).ok();
    match dispatch(cli.command, max_points.as_deref(), stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "affframe: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, max_points: Option<&str>, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Generate(args) => {
            let limit = max_points
                .map(|v| {
                    v.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::Usage(format!("{MAX_POINTS_VAR} must be an integer, got {v:?}")))
                })
                .transpose()?;
            let text = generate(&args, limit)?;
            emit(&text, args.rendering.output.as_deref(), stdout)?;
            Ok(exit::OK)
        }
        Command::Code(args) => {
            let text = code(&args)?;
            emit(&text, None, stdout)?;
            Ok(exit::OK)
        }
        Command::Curvatures(args) => {
            let file = PointsFile::parse(&read_input(&args.input)?)?;
            let float = args.arithmetic.resolve(file.mode) == NumberMode::Float;
            let curve = if args.arithmetic.exact && file.mode == NumberMode::Float {
                exact_from_file(&file)?
            } else {
                file.any_curve(float)?
            };
            let profile = curvatures(&curve, Tolerance { relative: args.zero_tol })?;
            emit(&profile.to_json(), args.output.as_deref(), stdout)?;
            Ok(exit::OK)
        }
        Command::Equiv(args) => {
            let (text, equivalent) = equiv(&args)?;
            emit(&text, None, stdout)?;
            Ok(if equivalent { exit::OK } else { exit::NEGATIVE })
        }
        Command::Reconstruct(args) => {
            let text = reconstruct(&args)?;
            emit(&text, args.rendering.output.as_deref(), stdout)?;
            Ok(exit::OK)
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text)
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Write {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

/// Splits `"x,y;x,y"` into coordinate tokens per point.
fn split_points(text: &str) -> Result<Vec<Vec<&str>>, CliError> {
    let rows: Vec<Vec<&str>> = text
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| r.split(',').map(str::trim).collect())
        .collect();
    let dim = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != dim) || !(dim == 2 || dim == 3) {
        return Err(CliError::Parse(format!(
            "initial points must all have 2 or all have 3 coordinates: {text:?}"
        )));
    }
    Ok(rows)
}

fn parse_point<S: Literal, const D: usize>(row: &[&str]) -> Result<Point<S, D>, CliError> {
    let coords: Vec<S> = row.iter().map(|t| S::parse_literal(t)).collect::<Result<_, _>>()?;
    let coords: [S; D] = coords
        .try_into()
        .map_err(|_| CliError::Parse(format!("expected {D} coordinates")))?;
    Ok(Point::new(coords))
}

fn parse_triple<S: Literal, const D: usize>(rows: &[Vec<&str>]) -> Result<[Point<S, D>; 3], CliError> {
    if rows.len() != 3 {
        return Err(CliError::Parse(format!("expected 3 initial points, got {}", rows.len())));
    }
    Ok([parse_point(&rows[0])?, parse_point(&rows[1])?, parse_point(&rows[2])?])
}

fn predicted_points(family: Family, n: u32) -> Result<u64, CliError> {
    Ok(match family {
        Family::Koch => affframe::koch::koch_counts(n)?.points,
        Family::Snowflake => affframe::snowflake::point_count(n)?,
        Family::Hilbert => inflection_count(n)?,
    })
}

fn check_bounds(family: Family, n: u32, force: bool) -> Result<(), CliError> {
    let max = match family {
        Family::Koch | Family::Snowflake => KOCH_MAX_STEP,
        Family::Hilbert => HILBERT_MAX_STEP,
    };
    if n > max && !force {
        return Err(CliError::Usage(format!(
            "step {n} exceeds the default bound {max} for this family; pass --force to lift it"
        )));
    }
    Ok(())
}

fn style(r: &Rendering) -> Result<SvgStyle, CliError> {
    SvgStyle::new(&r.stroke, r.stroke_width)
}

fn generate(args: &GenerateArgs, limit: Option<u64>) -> Result<String, CliError> {
    check_bounds(args.family, args.step, args.force)?;
    let predicted = predicted_points(args.family, args.step)?;
    if let Some(limit) = limit {
        if predicted > limit {
            return Err(CliError::Limit(format!(
                "step {} would produce {predicted} points, above {MAX_POINTS_VAR}={limit}",
                args.step
            )));
        }
    }
    let rows = split_points(&args.init)?;
    let needed = if args.standard { 2 } else { 3 };
    if rows.len() != needed {
        return Err(CliError::Parse(format!("expected {needed} initial points, got {}", rows.len())));
    }
    let tokens = rows.iter().flatten().copied().chain([args.bar_ratio.as_str(), args.tau_ratio.as_str()]);
    let mut mode = args.arithmetic.resolve(detect_mode(tokens)?);
    if args.standard && args.family != Family::Hilbert {
        if args.arithmetic.exact {
            return Err(CliError::Usage(
                "the standard Koch third point is irrational; drop --exact".into(),
            ));
        }
        mode = NumberMode::Float;
    }
    let dim = rows[0].len();
    let curve = match (dim, mode) {
        (2, NumberMode::Exact) => AnyCurve::Exact2(generate_planar::<Rational>(args, &rows)?),
        (2, NumberMode::Float) => AnyCurve::Float2(generate_planar::<f64>(args, &rows)?),
        (_, NumberMode::Exact) => AnyCurve::Exact3(generate_space::<Rational>(args, &rows)?),
        (_, NumberMode::Float) => AnyCurve::Float3(generate_space::<f64>(args, &rows)?),
    };
    render(&curve, &args.rendering)
}

fn generate_planar<S: Literal>(args: &GenerateArgs, rows: &[Vec<&str>]) -> Result<DiscreteCurve<S, 2>, CliError> {
    let init: [Point2<S>; 3] = if args.standard {
        let r1: Point2<S> = parse_point(&rows[0])?;
        let r2: Point2<S> = parse_point(&rows[1])?;
        let r3 = match args.family {
            Family::Hilbert => standard_hilbert_init(&r1, &r2)?,
            _ => {
                let p = standard_koch_init(&r1.to_f64(), &r2.to_f64())?;
                Point2::new([S::parse_literal(&p[0].render())?, S::parse_literal(&p[1].render())?])
            }
        };
        [r1, r2, r3]
    } else {
        parse_triple(rows)?
    };
    Ok(match args.family {
        Family::Koch => generate_koch(&init, args.step)?,
        Family::Snowflake => generate_snowflake(&init, args.step)?,
        Family::Hilbert => generate_hilbert(&init, args.step)?,
    })
}

fn generate_space<S: Literal>(args: &GenerateArgs, rows: &[Vec<&str>]) -> Result<DiscreteCurve<S, 3>, CliError> {
    if args.standard {
        return Err(CliError::Usage("--standard applies to planar initial points only".into()));
    }
    let init: [Point3<S>; 3] = parse_triple(rows)?;
    let admissibility = if args.enforce_admissibility {
        Admissibility::Enforce
    } else {
        Admissibility::Skip
    };
    let bar = S::parse_literal(&args.bar_ratio)?;
    let tau = S::parse_literal(&args.tau_ratio)?;
    Ok(match args.family {
        Family::Koch => {
            if !bar.is_zero() {
                return Err(CliError::Usage("--bar-ratio is not used by space Koch curves".into()));
            }
            extend_space_koch(&init, args.step, tau, admissibility)?
        }
        Family::Hilbert => extend_space_hilbert(&init, args.step, bar, tau, admissibility)?,
        Family::Snowflake => {
            return Err(CliError::Usage("snowflakes are planar; give 2D initial points".into()))
        }
    })
}

fn curve_json<S: Literal, const D: usize>(curve: &DiscreteCurve<S, D>) -> String {
    let points: Vec<Value> = curve
        .points()
        .iter()
        .map(|p| Value::Array(p.coords().iter().map(Literal::to_json).collect()))
        .collect();
    let mut s = serde_json::to_string_pretty(&json!({
        "closed": curve.is_closed(),
        "dim": D,
        "points": points,
    }))
    .expect("curve serializes");
    s.push('\n');
    s
}

fn render(curve: &AnyCurve, rendering: &Rendering) -> Result<String, CliError> {
    Ok(match rendering.format {
        OutputFormat::Csv => curve.to_csv(),
        OutputFormat::Json => match curve {
            AnyCurve::Exact2(c) => curve_json(c),
            AnyCurve::Float2(c) => curve_json(c),
            AnyCurve::Exact3(c) => curve_json(c),
            AnyCurve::Float3(c) => curve_json(c),
        },
        OutputFormat::Svg => {
            let style = style(rendering)?;
            match curve {
                AnyCurve::Exact2(c) => render_svg(c, &style),
                AnyCurve::Float2(c) => render_svg(c, &style),
                AnyCurve::Exact3(c) => render_svg(c, &style),
                AnyCurve::Float3(c) => render_svg(c, &style),
            }
        }
    })
}

fn join_kappas(values: impl IntoIterator<Item = Rational>) -> String {
    values.into_iter().map(|v| v.render()).collect::<Vec<_>>().join(" ")
}

fn code(args: &CodeArgs) -> Result<String, CliError> {
    check_bounds(args.family, args.step, args.force)?;
    let n = args.step;
    let notation = args.notation.unwrap_or(match args.family {
        Family::Hilbert => Notation::Letters,
        _ => Notation::Binary,
    });
    let bits_to_kappas = |bits: &[bool]| {
        join_kappas(
            bits.iter()
                .flat_map(|&b| AnglePair::from_bit(b).values())
                .map(|(k, _)| Rational::from_integer(k.into())),
        )
    };
    let text = match (args.family, notation) {
        (Family::Koch, Notation::Binary) => koch_code(n)?.to_string(),
        (Family::Koch, Notation::Kappas) => bits_to_kappas(koch_code(n)?.bits()),
        (Family::Snowflake, Notation::Binary) => snowflake_code(n)?.to_string(),
        (Family::Snowflake, Notation::Kappas) => bits_to_kappas(snowflake_code(n)?.bits()),
        (Family::Hilbert, Notation::Letters) => expand_word(n)?.to_string(),
        (Family::Hilbert, Notation::Symbols) => expand_word(n)?.symbols().iter().map(|s| s.as_char()).collect(),
        (Family::Hilbert, Notation::Kappas) => join_kappas(hilbert_kappa_sequence::<Rational>(n)?),
        (family, notation) => {
            return Err(CliError::Usage(format!(
                "{} notation is not defined for the {} family",
                notation.to_possible_value().expect("named").get_name(),
                family.to_possible_value().expect("named").get_name(),
            )))
        }
    };
    Ok(text + "\n")
}

fn exact_from_file(file: &PointsFile) -> Result<AnyCurve, CliError> {
    Ok(match file.dim {
        2 => AnyCurve::Exact2(file.curve()?),
        _ => AnyCurve::Exact3(file.curve()?),
    })
}

fn curvatures(curve: &AnyCurve, tol: Tolerance) -> Result<AnyProfile, CliError> {
    Ok(match curve {
        AnyCurve::Exact2(c) => AnyProfile::Exact(planar_curvatures_with(c, tol)?),
        AnyCurve::Float2(c) => AnyProfile::Float(planar_curvatures_with(c, tol)?),
        AnyCurve::Exact3(c) => AnyProfile::Exact(space_invariants_with(c, tol)?),
        AnyCurve::Float3(c) => AnyProfile::Float(space_invariants_with(c, tol)?),
    })
}

fn map_json<S: Literal, const D: usize>(map: &AffineMap<S, D>) -> Value {
    json!({
        "matrix": map.matrix.iter().map(|row| row.iter().map(Literal::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "translation": map.translation.coords().iter().map(Literal::to_json).collect::<Vec<_>>(),
    })
}

struct Verdict {
    equivalent: bool,
    mode: EquivalenceMode,
    max_deviation: Option<f64>,
    shift: usize,
    witness: Option<Value>,
    reason: Option<String>,
}

impl Verdict {
    fn from_report<S: Literal, const D: usize>(r: &EquivalenceReport<S, D>) -> Self {
        Verdict {
            equivalent: r.equivalent,
            mode: r.mode,
            max_deviation: r.max_deviation.is_finite().then_some(r.max_deviation),
            shift: r.shift,
            witness: r.witness.as_ref().map(map_json),
            reason: None,
        }
    }

    fn negative(mode: EquivalenceMode, reason: String) -> Self {
        Verdict {
            equivalent: false,
            mode,
            max_deviation: None,
            shift: 0,
            witness: None,
            reason: Some(reason),
        }
    }

    fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => {
                let mut v = json!({
                    "equivalent": self.equivalent,
                    "max_deviation": self.max_deviation,
                    "mode": self.mode.as_str(),
                    "shift": self.shift,
                    "witness": self.witness,
                });
                if let Some(reason) = &self.reason {
                    v["reason"] = json!(reason);
                }
                let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
                s.push('\n');
                s
            }
            ReportFormat::Text => {
                let mut s = format!("equivalent: {}\nmode: {}\n", self.equivalent, self.mode);
                match self.max_deviation {
                    Some(d) => s += &format!("max_deviation: {d:?}\n"),
                    None => s += "max_deviation: none\n",
                }
                s += &format!("shift: {}\n", self.shift);
                if let Some(w) = &self.witness {
                    s += &format!("witness: {w}\n");
                }
                if let Some(reason) = &self.reason {
                    s += &format!("reason: {reason}\n");
                }
                s
            }
        }
    }
}

fn equiv(args: &EquivArgs) -> Result<(String, bool), CliError> {
    let fa = PointsFile::parse(&read_input(&args.a)?)?;
    let fb = PointsFile::parse(&read_input(&args.b)?)?;
    let mode = match (args.cyclic, args.mode) {
        (true, _) | (_, Some(Mode::Cyclic)) => EquivalenceMode::Cyclic,
        (_, Some(Mode::PlanarAffine)) => EquivalenceMode::PlanarAffine,
        (_, Some(Mode::Centroaffine)) => EquivalenceMode::Centroaffine,
        (_, None) if fa.dim == 3 => EquivalenceMode::Centroaffine,
        (_, None) => EquivalenceMode::PlanarAffine,
    };
    if fa.dim != fb.dim {
        let v = Verdict::negative(mode, format!("dimension mismatch: {}D vs {}D", fa.dim, fb.dim));
        return Ok((v.render(args.format), false));
    }
    let float = args.float || fa.mode == NumberMode::Float || fb.mode == NumberMode::Float;
    let (a, b) = (fa.any_curve(float)?, fb.any_curve(float)?);
    let result = match (&a, &b) {
        (AnyCurve::Exact2(a), AnyCurve::Exact2(b)) => {
            are_equivalent(a, b, mode, &Rational::from_integer(0.into())).map(|r| Verdict::from_report(&r))
        }
        (AnyCurve::Float2(a), AnyCurve::Float2(b)) => {
            are_equivalent(a, b, mode, &args.tol).map(|r| Verdict::from_report(&r))
        }
        (AnyCurve::Exact3(a), AnyCurve::Exact3(b)) => {
            are_equivalent(a, b, mode, &Rational::from_integer(0.into())).map(|r| Verdict::from_report(&r))
        }
        (AnyCurve::Float3(a), AnyCurve::Float3(b)) => {
            are_equivalent(a, b, mode, &args.tol).map(|r| Verdict::from_report(&r))
        }
        _ => unreachable!("both files are read in the same mode and dimension"),
    };
    let verdict = match result {
        Ok(v) => v,
        Err(affframe::Error::ShapeMismatch) => {
            Verdict::negative(mode, "shape mismatch: one curve is closed and the other open".into())
        }
        Err(affframe::Error::ModeMismatch) => {
            return Err(CliError::Usage(format!("{mode} mode does not apply to {}D curves", fa.dim)))
        }
        Err(e) => return Err(e.into()),
    };
    Ok((verdict.render(args.format), verdict.equivalent))
}

fn reconstruct(args: &ReconstructArgs) -> Result<String, CliError> {
    let profile = parse_profile(&read_input(&args.profile)?)?;
    let init_text;
    let rows: Vec<Vec<&str>> = match (&args.init, &args.init_from) {
        (Some(init), _) => split_points(init)?,
        (None, Some(path)) => {
            init_text = read_input(path)?;
            let rows: Vec<Vec<&str>> = init_text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .take(3)
                .map(|l| l.split(',').map(str::trim).collect())
                .collect();
            rows
        }
        (None, None) => return Err(CliError::Usage("--init or --init-from is required".into())),
    };
    if rows.len() != 3 {
        return Err(CliError::Parse(format!("expected 3 initial points, got {}", rows.len())));
    }
    if rows.iter().any(|r| r.len() != profile.dim()) {
        return Err(CliError::Parse(format!(
            "the profile is {}D but the initial points are not",
            profile.dim()
        )));
    }
    let init_mode = detect_mode(rows.iter().flatten().copied())?;
    let detected = match (&profile, init_mode) {
        (AnyProfile::Exact(_), NumberMode::Exact) => NumberMode::Exact,
        _ => NumberMode::Float,
    };
    let mode = args.arithmetic.resolve(detected);
    let admissibility = if args.enforce_admissibility {
        Admissibility::Enforce
    } else {
        Admissibility::Skip
    };
    let curve = match (profile, mode) {
        (AnyProfile::Exact(p), NumberMode::Exact) => rebuild::<Rational>(&p, &rows, admissibility)?,
        (AnyProfile::Float(p), NumberMode::Float) => rebuild::<f64>(&p, &rows, admissibility)?,
        (AnyProfile::Exact(p), NumberMode::Float) => rebuild::<f64>(&to_float_profile(&p), &rows, admissibility)?,
        (AnyProfile::Float(p), NumberMode::Exact) => rebuild::<Rational>(&to_exact_profile(&p)?, &rows, admissibility)?,
    };
    render(&curve, &args.rendering)
}

fn to_float_profile(p: &InvariantProfile<Rational>) -> InvariantProfile<f64> {
    let f = |x: &Rational| x.to_f64();
    InvariantProfile {
        dim: p.dim,
        closed: p.closed,
        entries: p
            .entries
            .iter()
            .map(|e| affframe::ProfileEntry {
                k: e.k,
                kappa: f(&e.kappa),
                kappa_bar: e.kappa_bar.as_ref().map(f),
                tau: e.tau.as_ref().map(f),
            })
            .collect(),
    }
}

fn to_exact_profile(p: &InvariantProfile<f64>) -> Result<InvariantProfile<Rational>, CliError> {
    let f = |x: &f64| Rational::parse_literal(&x.render());
    let entries = p
        .entries
        .iter()
        .map(|e| {
            Ok(affframe::ProfileEntry {
                k: e.k,
                kappa: f(&e.kappa)?,
                kappa_bar: e.kappa_bar.as_ref().map(f).transpose()?,
                tau: e.tau.as_ref().map(f).transpose()?,
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(InvariantProfile {
        dim: p.dim,
        closed: p.closed,
        entries,
    })
}

fn rebuild<S: Literal>(
    profile: &InvariantProfile<S>,
    rows: &[Vec<&str>],
    admissibility: Admissibility,
) -> Result<AnyCurve, CliError>
where
    AnyCurve: From<DiscreteCurve<S, 2>> + From<DiscreteCurve<S, 3>>,
{
    Ok(match (profile.dim, profile.closed) {
        (2, false) => reconstruct_planar(&parse_triple(rows)?, &profile.planar_steps()?)?.into(),
        (2, true) => reconstruct_planar_closed(&parse_triple(rows)?, &profile.planar_steps()?)?.into(),
        (_, false) => reconstruct_space(&parse_triple(rows)?, &profile.space_steps()?, admissibility)?.into(),
        (_, true) => {
            return Err(CliError::Usage("closed space profiles cannot be reconstructed".into()));
        }
    })
}
