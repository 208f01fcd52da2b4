//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report reads top to bottom.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use affframe::equivalence::{are_equivalent, AffineMap, EquivalenceMode};
use affframe::frame::{advance, inverse_step, planar_curvatures, space_invariants};
use affframe::hilbert::{
    classify_index, expand_word, generate_hilbert, hilbert_kappa_sequence, inflection_count, letter_counts,
    parity_step_kappas, standard_hilbert_init, symbol_length, LetterCounts, StepParity,
};
use affframe::koch::{
    decode_koch, generate_koch, is_sharp_element, koch_code, koch_counts, standard_koch_init, SIN_60,
};
use affframe::oracle::classical_koch_oracle;
use affframe::snowflake::{decode_snowflake, generate_snowflake, snowflake_code, snowflake_one_positions};
use affframe::{det2, det3, ratio, DiscreteCurve, Point, Point2, Point3, Rational, Scalar, SpaceStep};
use affframe_cli::points::PointsFile;
use affframe_cli::profile::{parse_profile, AnyProfile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pow4(e: u32) -> u64 {
    4u64.pow(e)
}

fn within_budget(start: Instant, budget: Duration, what: &str) -> Outcome {
    let took = start.elapsed();
    ensure!(took <= budget, "{what} took {took:?}, budget {budget:?}");
    Ok(())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.random_range(-20..=20), rng.random_range(1..=5))
}

fn random_point2(rng: &mut ChaCha8Rng) -> Point2<Rational> {
    Point2::new([random_rational(rng), random_rational(rng)])
}

fn random_init(rng: &mut ChaCha8Rng) -> [Point2<Rational>; 3] {
    loop {
        let init = [random_point2(rng), random_point2(rng), random_point2(rng)];
        if !det2(&init[1].sub(&init[0]), &init[2].sub(&init[1])).is_zero() {
            return init;
        }
    }
}

fn random_invertible2(rng: &mut ChaCha8Rng) -> [[Rational; 2]; 2] {
    loop {
        let m = [
            [random_rational(rng), random_rational(rng)],
            [random_rational(rng), random_rational(rng)],
        ];
        if !(m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()).is_zero() {
            return m;
        }
    }
}

fn random_invertible3(rng: &mut ChaCha8Rng) -> [[Rational; 3]; 3] {
    loop {
        let m: [[Rational; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| random_rational(rng)));
        let col = |j: usize| Point3::new([m[0][j].clone(), m[1][j].clone(), m[2][j].clone()]);
        if !det3(&col(0), &col(1), &col(2)).is_zero() {
            return m;
        }
    }
}

fn bits_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Koch code strings.
fn c01() -> Outcome {
    let start = Instant::now();
    let c2 = koch_code(2).map_err(|e| e.to_string())?.to_string();
    let c3 = koch_code(3).map_err(|e| e.to_string())?.to_string();
    let c4 = koch_code(4).map_err(|e| e.to_string())?.to_string();
    let elapsed = start.elapsed();
    ensure!(c2 == "1", "koch_code(2) = {c2}");
    ensure!(c3 == "1011101", "koch_code(3) = {c3}");
    let displayed = ["1011101", "0", "1011101", "1", "1011101", "0", "1011101"].concat();
    ensure!(c4 == displayed, "koch_code(4) = {c4}");
    ensure!(c4.len() == 31, "length {}", c4.len());
    ensure!(elapsed <= Duration::from_millis(1), "took {elapsed:?}, budget 1ms");
    Ok(())
}

/// Koch closed form equals the recursion.
fn c02() -> Outcome {
    let start = Instant::now();
    for n in 2..=10 {
        let code = koch_code(n).unwrap();
        let built: Vec<bool> = (1..=code.len() as u64).map(|i| is_sharp_element(n, i).unwrap()).collect();
        ensure!(built == code.bits(), "n={n}: classifier string differs from recursion");
    }
    within_budget(start, Duration::from_secs(1), "n=2..10")
}

/// Koch counts.
fn c03() -> Outcome {
    for n in 2..=10 {
        let code = koch_code(n).unwrap();
        let ones = code.bits().iter().filter(|&&b| b).count() as u64;
        let zeros = code.len() as u64 - ones;
        ensure!(ones == (pow4(n - 1) - 1) / 3, "n={n}: {ones} ones");
        ensure!(zeros == 2 * (pow4(n - 2) - 1) / 3, "n={n}: {zeros} zeros");
        let counts = koch_counts(n).unwrap();
        ensure!(counts.sharp_pairs == ones, "n={n}: sharp pairs {}", counts.sharp_pairs);
        ensure!(counts.obtuse_pairs == (pow4(n - 1) - 4) / 6, "n={n}: obtuse pairs {}", counts.obtuse_pairs);
        ensure!(counts.obtuse_pairs == zeros, "n={n}: obtuse pairs vs zeros");
        ensure!(counts.points == pow4(n - 1) + 1, "n={n}: points {}", counts.points);
        ensure!(counts.elements == 2 * pow4(n - 2) - 1, "n={n}: elements {}", counts.elements);
    }
    Ok(())
}

/// Standard Koch geometry against the classical construction.
fn c04() -> Outcome {
    let start = Instant::now();
    let r1 = Point2::new([0.0, 0.0]);
    let r2 = Point2::new([1.0, 0.0]);
    let r3 = standard_koch_init(&r1, &r2).unwrap();
    ensure!((r3[0] - 1.5).abs() < 1e-15 && (r3[1] - SIN_60).abs() < 1e-15, "standard init {r3:?}");
    for n in 2..=8 {
        let g = generate_koch(&[r1.clone(), r2.clone(), r3.clone()], n).unwrap();
        let o = classical_koch_oracle(n);
        ensure!(g.len() == o.len(), "n={n}: {} vs {} points", g.len(), o.len());
        // Fix the endpoints: the oracle spans the unit segment.
        let last = &g.points()[g.len() - 1];
        let span = last[0] - g.points()[0][0];
        let worst = g
            .points()
            .iter()
            .zip(o.points())
            .map(|(p, q)| ((p[0] / span - q[0]).abs()).max((p[1] / span - q[1]).abs()))
            .fold(0.0, f64::max);
        ensure!(worst <= 1e-9, "n={n}: max relative deviation {worst:e}");
    }
    within_budget(start, Duration::from_secs(5), "n=2..8")
}

/// Snowflake codes and position formulas.
fn c05() -> Outcome {
    ensure!(snowflake_code(2).unwrap().to_string() == "111111", "n=2");
    ensure!(snowflake_code(3).unwrap().to_string() == "1101".repeat(6), "n=3");
    let line = [
        "1101", "1101", "0101", "1101", "1101", "1101", "0101", "1101", "1101", "1101", "0101", "1101",
    ]
    .concat();
    let displayed = [line.as_str(), line.as_str()].concat();
    let c4 = snowflake_code(4).unwrap().to_string();
    ensure!(c4.len() == 96 && c4 == displayed, "n=4: {c4}");
    for n in 2..=9 {
        let from_code = snowflake_code(n).unwrap().one_positions();
        ensure!(snowflake_one_positions(n).unwrap() == from_code, "n={n}: position sets differ");
    }
    Ok(())
}

/// Exact snowflake closure for random rational inits.
fn c06() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 2..=7 {
        for trial in 0..20 {
            let init = random_init(&mut rng);
            let c = generate_snowflake(&init, n).map_err(|e| format!("n={n} trial {trial}: {e}"))?;
            ensure!(c.is_closed(), "n={n}: not closed");
            ensure!(c.len() as u64 == 3 * pow4(n - 1), "n={n}: {} points", c.len());
            ensure!(c.points()[..3] == init, "n={n}: does not start at init");
        }
    }
    Ok(())
}

/// Hilbert point counts and symbol lengths.
fn c07() -> Outcome {
    let expected = [(1, 4), (2, 14), (3, 52)];
    for (n, count) in expected {
        ensure!(inflection_count(n).unwrap() == count, "N({n})");
    }
    for n in 1..=12 {
        let closed = if n % 2 == 1 {
            (pow4(n + 1) + 4) / 5
        } else {
            (pow4(n + 1) + 6) / 5
        };
        ensure!(inflection_count(n).unwrap() == closed, "N({n}) closed form");
    }
    for k in 1..=6 {
        let even = inflection_count(2 * k).unwrap();
        ensure!(even == 4 * inflection_count(2 * k - 1).unwrap() - 2, "N({})", 2 * k);
        if 2 * k < 12 {
            ensure!(inflection_count(2 * k + 1).unwrap() == 4 * even - 4, "N({})", 2 * k + 1);
        }
    }
    ensure!(symbol_length(3).unwrap() == 19, "y(3)");
    for n in 2..=9 {
        let y = if n % 2 == 0 {
            (6 * pow4(n - 1) + 1) / 5
        } else {
            (6 * pow4(n - 1) - 1) / 5
        };
        let symbols = expand_word(n).unwrap().symbols().len() as u64;
        ensure!(symbol_length(n).unwrap() == y && symbols == y, "y({n}): {symbols} symbols");
    }
    Ok(())
}

/// Hilbert words, classifier and letter counts.
fn c08() -> Outcome {
    let start = Instant::now();
    let w3 = expand_word(3).unwrap();
    ensure!(w3.to_string() == "PSPTPUP", "K_3 = {w3}");
    let symbols: String = w3.symbols().iter().map(|s| s.as_char()).collect();
    ensure!(symbols == "1ABCC1ABCDABC1AABC1", "symbols {symbols}");
    for n in 2..=9 {
        let word = expand_word(n).unwrap();
        for (i, &letter) in word.letters().iter().enumerate() {
            let idx = i as u64 + 1;
            ensure!(classify_index(n, idx).unwrap() == letter, "n={n} idx={idx}");
        }
        let formula = letter_counts(n).unwrap();
        ensure!(formula == LetterCounts::tally(word.letters()), "n={n}: {formula:?}");
        ensure!(formula.total() == 2 * pow4(n - 2) - 1, "n={n}: total");
    }
    within_budget(start, Duration::from_secs(5), "n=2..9")
}

/// Parity iteration reproduces the κ sequence.
fn c09() -> Outcome {
    let mut kappas = hilbert_kappa_sequence::<Rational>(2).unwrap();
    for n in 3..=7 {
        kappas = parity_step_kappas(&kappas, StepParity::of(n - 1)).map_err(|e| e.to_string())?;
        ensure!(kappas == hilbert_kappa_sequence::<Rational>(n).unwrap(), "n={n}");
    }
    Ok(())
}

fn decode_family(family: &str, profile: &affframe::InvariantProfile<Rational>, n: u32) -> Outcome {
    let zero = Rational::zero();
    match family {
        "koch" => {
            let bits = decode_koch(profile, &zero).map_err(|e| e.to_string())?;
            ensure!(bits == koch_code(n).unwrap().bits(), "koch n={n}: decoded {}", bits_string(&bits));
        }
        "snowflake" => {
            let bits = decode_snowflake(profile, &zero).map_err(|e| e.to_string())?;
            ensure!(bits == snowflake_code(n).unwrap().bits(), "snowflake n={n}: decoded {}", bits_string(&bits));
        }
        _ => {
            ensure!(
                profile.entries.iter().all(|e| e.kappa_bar == Some(Rational::zero())),
                "hilbert n={n}: nonzero second curvature"
            );
            let kappas: Vec<Rational> = profile.kappas().cloned().collect();
            ensure!(kappas == hilbert_kappa_sequence::<Rational>(n).unwrap(), "hilbert n={n}: κ sequence");
        }
    }
    Ok(())
}

fn generate_family(family: &str, init: &[Point2<Rational>; 3], n: u32) -> DiscreteCurve<Rational, 2> {
    match family {
        "koch" => generate_koch(init, n).unwrap(),
        "snowflake" => generate_snowflake(init, n).unwrap(),
        _ => generate_hilbert(init, n).unwrap(),
    }
}

/// Round-trip decode for random rational inits.
fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for family in ["koch", "snowflake", "hilbert"] {
        for n in 2..=7 {
            for _ in 0..10 {
                let init = random_init(&mut rng);
                let profile = planar_curvatures(&generate_family(family, &init, n)).unwrap();
                decode_family(family, &profile, n)?;
            }
        }
    }
    Ok(())
}

/// Affine and centroaffine invariance, and the translation counterexample.
fn c11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let families = ["koch", "snowflake", "hilbert"];
    for trial in 0..100 {
        let family = families[trial % 3];
        let curve = generate_family(family, &random_init(&mut rng), 4);
        let map = AffineMap {
            matrix: random_invertible2(&mut rng),
            translation: random_point2(&mut rng),
        };
        let profile = planar_curvatures(&map.apply_curve(&curve)).unwrap();
        decode_family(family, &profile, 4).map_err(|e| format!("trial {trial}: {e}"))?;
    }

    let space = loop {
        let pts: Vec<Point3<Rational>> = (0..12)
            .map(|_| Point3::new([random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng)]))
            .collect();
        if pts.windows(3).all(|w| !det3(&w[0], &w[1], &w[2]).is_zero()) {
            break DiscreteCurve::open(pts).unwrap();
        }
    };
    let base = space_invariants(&space).unwrap();
    for trial in 0..100 {
        let map = AffineMap {
            matrix: random_invertible3(&mut rng),
            translation: Point::origin(),
        };
        let image = space_invariants(&map.apply_curve(&space)).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(image == base, "trial {trial}: space profile changed");
    }

    let fixture = DiscreteCurve::open(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]].map(Point3::<Rational>::from_i64).to_vec(),
    )
    .unwrap();
    let p = space_invariants(&fixture).unwrap();
    let e = &p.entries[0];
    ensure!(
        e.kappa == ratio(1, 1) && e.kappa_bar == Some(ratio(-2, 1)) && e.tau == Some(ratio(2, 1)),
        "fixture profile {e:?}"
    );
    let shifted = fixture.map(|q| q.add(&Point3::from_i64([1, 2, 3])));
    ensure!(space_invariants(&shifted).unwrap() != p, "translation left the profile unchanged");
    Ok(())
}

/// Standard Hilbert curves are equivalent to their reversals.
fn c12() -> Outcome {
    let r1 = Point2::<Rational>::from_i64([0, 0]);
    let r2 = Point2::from_i64([0, 1]);
    let r3 = standard_hilbert_init(&r1, &r2).unwrap();
    for n in 2..=6 {
        let c = generate_hilbert(&[r1.clone(), r2.clone(), r3.clone()], n).unwrap();
        let rev = c.reversed();
        let report = are_equivalent(&c, &rev, EquivalenceMode::PlanarAffine, &Rational::zero()).unwrap();
        ensure!(report.equivalent, "n={n}: not equivalent");
        let p = planar_curvatures(&rev).unwrap();
        ensure!(p == planar_curvatures(&c).unwrap(), "n={n}: reversed profile differs");
        ensure!(p.entries.iter().all(|e| e.kappa_bar == Some(Rational::zero())), "n={n}: κ̄ ≠ 0");
        if let Some(w) = &report.witness {
            ensure!(w.apply_curve(&c) == rev, "n={n}: witness does not map the curve");
        }
    }
    Ok(())
}

/// Inverse step undoes the forward step.
fn c13() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let random_point3 =
        |rng: &mut ChaCha8Rng| Point3::new([random_rational(rng), random_rational(rng), random_rational(rng)]);
    for trial in 0..1000 {
        let w = [random_point3(&mut rng), random_point3(&mut rng), random_point3(&mut rng)];
        let kappa = loop {
            let k = random_rational(&mut rng);
            if !k.is_zero() {
                break k;
            }
        };
        let step = SpaceStep::new(kappa, random_rational(&mut rng), random_rational(&mut rng));
        let next = advance([&w[0], &w[1], &w[2]], &step.coefficients());
        let back = inverse_step([&w[1], &w[2], &next], &step).map_err(|e| e.to_string())?;
        ensure!(back == w[0], "trial {trial}: {back:?} != {:?}", w[0]);
    }
    Ok(())
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_affframe"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "affframe {}: {}\n{}",
        args.join(" "),
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    Ok(out.stdout)
}

fn render_init(init: &[Point2<Rational>; 3]) -> String {
    init.iter().map(|p| format!("{},{}", p[0], p[1])).collect::<Vec<_>>().join(";")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

/// The round trip through files, and determinism of every output.
fn c14() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for family in ["koch", "snowflake", "hilbert"] {
        for n in 2..=7 {
            let init = render_init(&random_init(&mut rng));
            let step = n.to_string();
            let gen = dir.path().join(format!("{family}{n}.csv"));
            let prof = dir.path().join(format!("{family}{n}.json"));
            let rec = dir.path().join(format!("{family}{n}.rebuilt.csv"));
            let args = ["generate", "--family", family, "--step", &step, "--init", &init];
            let csv = cli(&args)?;
            std::fs::write(&gen, &csv).map_err(|e| e.to_string())?;
            ensure!(cli(&args)? == csv, "{family} n={n}: csv differs between runs");
            for format in ["json", "svg"] {
                let mut with_format = args.to_vec();
                with_format.extend(["--format", format]);
                ensure!(cli(&with_format)? == cli(&with_format)?, "{family} n={n}: {format} differs between runs");
            }

            let profile_text = cli(&["curvatures", path_str(&gen)])?;
            ensure!(cli(&["curvatures", path_str(&gen)])? == profile_text, "{family} n={n}: profile differs");
            std::fs::write(&prof, &profile_text).map_err(|e| e.to_string())?;
            let profile = match parse_profile(&String::from_utf8_lossy(&profile_text)).map_err(|e| e.to_string())? {
                AnyProfile::Exact(p) => p,
                AnyProfile::Float(_) => return Err(format!("{family} n={n}: profile is not exact")),
            };
            decode_family(family, &profile, n)?;

            cli(&["reconstruct", "--profile", path_str(&prof), "--init-from", path_str(&gen), "-o", path_str(&rec)])?;
            let rebuilt = std::fs::read(&rec).map_err(|e| e.to_string())?;
            ensure!(rebuilt == csv, "{family} n={n}: reconstructed file differs from generated file");
            let parsed = PointsFile::parse(&String::from_utf8_lossy(&rebuilt)).map_err(|e| e.to_string())?;
            ensure!(parsed.mode == affframe_cli::literal::NumberMode::Exact, "{family} n={n}: not exact");
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("Koch code strings", c01),
        ("Koch closed form equals recursion", c02),
        ("Koch counts", c03),
        ("standard Koch geometry", c04),
        ("snowflake codes", c05),
        ("snowflake closure", c06),
        ("Hilbert counts", c07),
        ("Hilbert words", c08),
        ("Hilbert parity iteration", c09),
        ("round-trip decode", c10),
        ("invariance suite", c11),
        ("Hilbert reversal", c12),
        ("forward/inverse chain", c13),
        ("CLI round trip", c14),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
