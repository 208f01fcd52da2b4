//! Affine Hilbert curves.
//!
//! Only inflection vertices are kept, i.e. collinear interior points of the
//! classical construction are discarded. Every tangent `t_{k-1}` is parallel
//! to `t_{k+1}`, so `κ̄ ≡ 0` and the chain reduces to
//! `r_{k+2} = κ_k r_{k-1} - κ_k r_k + r_{k+1}`.
//!
//! The `κ` sequence is written over five letters,
//!
//! | letter | symbols | `κ` values                     |
//! |--------|---------|--------------------------------|
//! | `P`    | `ABC`   | -2 1 ½  -1 1 -1  2 1 -½        |
//! | `S`    | `C1`    | 2 1 -½  1                      |
//! | `T`    | `D`     | 3 1 ⅓                          |
//! | `U`    | `1A`    | 1  -2 1 ½                      |
//! | `V`    | `1B1`   | 1  -1 1 -1  1                  |
//!
//! with `K_2 = P`, `K_n = K U K V K S K` for even `n` and `K S K T K U K` for
//! odd `n` (where `K = K_{n-1}`), and one extra `κ = 1` at each end.

use alloc::vec::Vec;
use core::fmt;

use crate::counting::{check_index, check_step, pow4, strip_fours};
use crate::curve::{DiscreteCurve, PlanarCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::frame::{ensure_planar_frame, push_step, reconstruct_space, Admissibility, SpaceStep};
use crate::point::{Point2, Point3};
use crate::scalar::Scalar;

/// One of the base curvature blocks, or a lone `κ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HilbertSymbol {
    One,
    A,
    B,
    C,
    D,
}

impl HilbertSymbol {
    /// `κ` values as `(numerator, denominator)`.
    pub fn kappas(self) -> &'static [(i64, i64)] {
        match self {
            HilbertSymbol::One => &[(1, 1)],
            HilbertSymbol::A => &[(-2, 1), (1, 1), (1, 2)],
            HilbertSymbol::B => &[(-1, 1), (1, 1), (-1, 1)],
            HilbertSymbol::C => &[(2, 1), (1, 1), (-1, 2)],
            HilbertSymbol::D => &[(3, 1), (1, 1), (1, 3)],
        }
    }

    pub fn as_char(self) -> char {
        match self {
            HilbertSymbol::One => '1',
            HilbertSymbol::A => 'A',
            HilbertSymbol::B => 'B',
            HilbertSymbol::C => 'C',
            HilbertSymbol::D => 'D',
        }
    }
}

/// Aggregated letters of the Hilbert word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HilbertLetter {
    P,
    S,
    T,
    U,
    V,
}

impl HilbertLetter {
    pub fn symbols(self) -> &'static [HilbertSymbol] {
        use HilbertSymbol::*;
        match self {
            HilbertLetter::P => &[A, B, C],
            HilbertLetter::S => &[C, One],
            HilbertLetter::T => &[D],
            HilbertLetter::U => &[One, A],
            HilbertLetter::V => &[One, B, One],
        }
    }

    pub fn kappas<S: Scalar>(self) -> impl Iterator<Item = S> {
        self.symbols()
            .iter()
            .flat_map(|s| s.kappas().iter().map(|&(p, q)| S::from_ratio(p, q)))
    }

    pub fn as_char(self) -> char {
        match self {
            HilbertLetter::P => 'P',
            HilbertLetter::S => 'S',
            HilbertLetter::T => 'T',
            HilbertLetter::U => 'U',
            HilbertLetter::V => 'V',
        }
    }
}

/// `K_n`: the letter word of a step-`n` curve without its boundary ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertWord {
    step: u32,
    letters: Vec<HilbertLetter>,
}

impl HilbertWord {
    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn letters(&self) -> &[HilbertLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word over `{1, A, B, C, D}` with a `1` added at each end.
    pub fn symbols(&self) -> Vec<HilbertSymbol> {
        let mut out = Vec::new();
        out.push(HilbertSymbol::One);
        out.extend(self.letters.iter().flat_map(|l| l.symbols().iter().copied()));
        out.push(HilbertSymbol::One);
        out
    }

    /// The full `κ` sequence, boundary ones included.
    pub fn kappas<S: Scalar>(&self) -> Vec<S> {
        let mut out = Vec::new();
        out.push(S::one());
        out.extend(self.letters.iter().flat_map(|l| l.kappas::<S>()));
        out.push(S::one());
        out
    }
}

impl fmt::Display for HilbertWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| fmt::Write::write_char(f, l.as_char()))
    }
}

/// Number of inflection points `N(n)`.
pub fn inflection_count(n: u32) -> Result<u64> {
    check_step(n, 1)?;
    let p = pow4(n + 1);
    Ok(if n % 2 == 1 { (p + 4) / 5 } else { (p + 6) / 5 })
}

/// Length `y(n)` of the symbol sequence over `{1, A, B, C, D}`, boundary ones
/// included.
pub fn symbol_length(n: u32) -> Result<u64> {
    check_step(n, 2)?;
    let p = 6 * pow4(n - 1);
    Ok(if n % 2 == 0 { (p + 1) / 5 } else { (p - 1) / 5 })
}

/// `2·4^(n-2) - 1`.
pub fn word_length(n: u32) -> Result<u64> {
    check_step(n, 2)?;
    Ok(2 * pow4(n - 2) - 1)
}

/// `K_n` by the letter recurrence.
pub fn expand_word(n: u32) -> Result<HilbertWord> {
    use HilbertLetter::*;
    let len = word_length(n)? as usize;
    let mut letters = Vec::with_capacity(len);
    letters.push(P);
    for m in 3..=n {
        let prev = letters.clone();
        let joints = if m % 2 == 0 { [U, V, S] } else { [S, T, U] };
        for j in joints {
            letters.push(j);
            letters.extend_from_slice(&prev);
        }
    }
    debug_assert_eq!(letters.len(), len);
    Ok(HilbertWord { step: n, letters })
}

/// Letter at 1-based position `idx` of `K_n`, from the index alone.
///
/// Odd indices are `P`. Otherwise write `idx = 4^e m` with `4 ∤ m`: odd `m`
/// gives `T` (odd `e`) or `V` (even `e`); `m = 2m'` gives `S` when `e` is even
/// and `m' ≡ 1 (mod 4)` or `e` is odd and `m' ≡ 3 (mod 4)`, and `U` otherwise.
pub fn classify_index(n: u32, idx: u64) -> Result<HilbertLetter> {
    check_index(idx, word_length(n)?)?;
    Ok(letter_at(idx))
}

fn letter_at(idx: u64) -> HilbertLetter {
    if idx % 2 == 1 {
        return HilbertLetter::P;
    }
    let (e, m) = strip_fours(idx);
    if m % 2 == 1 {
        return if e % 2 == 1 {
            HilbertLetter::T
        } else {
            HilbertLetter::V
        };
    }
    let half = m / 2;
    if (e % 2 == 0 && half % 4 == 1) || (e % 2 == 1 && half % 4 == 3) {
        HilbertLetter::S
    } else {
        HilbertLetter::U
    }
}

/// Letter frequencies of `K_n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LetterCounts {
    pub p: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
}

impl LetterCounts {
    pub fn total(&self) -> u64 {
        self.p + self.s + self.t + self.u + self.v
    }

    /// Counts by inspecting a word.
    pub fn tally(letters: &[HilbertLetter]) -> Self {
        let mut c = LetterCounts::default();
        for l in letters {
            match l {
                HilbertLetter::P => c.p += 1,
                HilbertLetter::S => c.s += 1,
                HilbertLetter::T => c.t += 1,
                HilbertLetter::U => c.u += 1,
                HilbertLetter::V => c.v += 1,
            }
        }
        c
    }
}

/// Letter frequencies of `K_n` from the closed forms.
pub fn letter_counts(n: u32) -> Result<LetterCounts> {
    check_step(n, 2)?;
    Ok(if n % 2 == 0 {
        let m = n / 2;
        let a = pow4(2 * m - 2);
        LetterCounts {
            p: a,
            v: (a - 1) / 15,
            t: (pow4(2 * m - 1) - 4) / 15,
            s: (a - 1) / 3,
            u: (a - 1) / 3,
        }
    } else {
        let m = (n - 1) / 2;
        let a = pow4(2 * m - 1);
        LetterCounts {
            p: a,
            v: (a - 4) / 15,
            t: (pow4(2 * m) - 1) / 15,
            s: (a - 1) / 3,
            u: (a - 1) / 3,
        }
    })
}

/// `κ` at every interior vertex of the step-`n` curve: `N(n) - 3` values.
pub fn hilbert_kappa_sequence<S: Scalar>(n: u32) -> Result<Vec<S>> {
    Ok(expand_word(n)?.kappas())
}

/// Parity of the step a curvature array belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepParity {
    Odd,
    Even,
}

impl StepParity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            StepParity::Even
        } else {
            StepParity::Odd
        }
    }
}

/// Advances a step-`m` curvature array to step `m + 1` by direct index
/// maps, without going through letters.
///
/// Indices below are 1-based with the array holding `κ(2)..κ(N-2)`, where
/// `N = N(m)`.
///
/// From an odd step:
///
/// ```text
/// κ(N-1), κ(N), κ(N+1)       = -2, 1, ½
/// κ(N+l)                     = κ(l+1),  l = 2..N-3
/// κ(2N-2), κ(2N-1), κ(2N)    = -1, 1, -1
/// κ(2N+l)                    = κ(l+1),  l = 1..N-4
/// κ(3N-3), κ(3N-2), κ(3N-1)  = 2, 1, -½
/// κ(3N-1+l)                  = κ(l+1),  l = 1..N-3
/// ```
///
/// From an even step, with `κ' = κ(N-2)` saved first:
///
/// ```text
/// κ(N-2), κ(N-1), κ(N)       = 2, 1, -½
/// κ(N+l)                     = κ(l+1),  l = 1..N-4
/// κ(2N-3), κ(2N-2), κ(2N-1)  = 3, 1, ⅓
/// κ(2N-1+l)                  = κ(l+2),  l = 1..N-5
/// κ(3N-5)                    = κ'
/// κ(3N-4), κ(3N-3), κ(3N-2)  = -2, 1, ½
/// κ(3N-2+l)                  = κ(l+2),  l = 1..N-5
/// κ(4N-6)                    = κ'
/// ```
pub fn parity_step_kappas<S: Scalar>(kappas: &[S], from: StepParity) -> Result<Vec<S>> {
    let n_points = kappas.len() + 3;
    let valid = (1..=crate::counting::MAX_COUNT_STEP - 1)
        .filter(|&m| StepParity::of(m) == from)
        .filter_map(|m| inflection_count(m).ok())
        .any(|count| count == n_points as u64);
    if !valid || n_points < 6 {
        return Err(Error::InvalidKappaLength { len: kappas.len() });
    }
    let big_n = n_points;
    let out_len = match from {
        StepParity::Odd => 4 * big_n - 5,
        StepParity::Even => 4 * big_n - 7,
    };
    let src = |i: usize| kappas[i - 2].clone();
    let q = S::from_ratio;
    let mut out: Vec<Option<S>> = Vec::with_capacity(out_len);
    out.resize(out_len, None);
    let mut set = |i: usize, v: S| out[i - 2] = Some(v);

    match from {
        StepParity::Odd => {
            for i in 2..=big_n - 2 {
                set(i, src(i));
            }
            set(big_n - 1, q(-2, 1));
            set(big_n, q(1, 1));
            set(big_n + 1, q(1, 2));
            for l in 2..=big_n - 3 {
                set(big_n + l, src(l + 1));
            }
            set(2 * big_n - 2, q(-1, 1));
            set(2 * big_n - 1, q(1, 1));
            set(2 * big_n, q(-1, 1));
            for l in 1..=big_n - 4 {
                set(2 * big_n + l, src(l + 1));
            }
            set(3 * big_n - 3, q(2, 1));
            set(3 * big_n - 2, q(1, 1));
            set(3 * big_n - 1, q(-1, 2));
            for l in 1..=big_n - 3 {
                set(3 * big_n - 1 + l, src(l + 1));
            }
        }
        StepParity::Even => {
            let saved = src(big_n - 2);
            for i in 2..=big_n - 3 {
                set(i, src(i));
            }
            set(big_n - 2, q(2, 1));
            set(big_n - 1, q(1, 1));
            set(big_n, q(-1, 2));
            for l in 1..=big_n - 4 {
                set(big_n + l, src(l + 1));
            }
            set(2 * big_n - 3, q(3, 1));
            set(2 * big_n - 2, q(1, 1));
            set(2 * big_n - 1, q(1, 3));
            for l in 1..=big_n - 5 {
                set(2 * big_n - 1 + l, src(l + 2));
            }
            set(3 * big_n - 5, saved.clone());
            set(3 * big_n - 4, q(-2, 1));
            set(3 * big_n - 3, q(1, 1));
            set(3 * big_n - 2, q(1, 2));
            for l in 1..=big_n - 5 {
                set(3 * big_n - 2 + l, src(l + 2));
            }
            set(4 * big_n - 6, saved);
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(Error::InvalidKappaLength { len: i + 2 }))
        .collect()
}

fn chain_hilbert<S: Scalar>(init: &[Point2<S>; 3], kappas: &[S]) -> Result<PlanarCurve<S>> {
    ensure_planar_frame(init)?;
    let mut points = Vec::with_capacity(3 + kappas.len());
    points.extend_from_slice(init);
    for k in kappas {
        push_step(&mut points, &(k.clone(), -k.clone(), S::one()));
    }
    DiscreteCurve::open(points)
}

/// Generates the step-`n` affine Hilbert curve, `N(n)` points.
pub fn generate_hilbert<S: Scalar>(init: &[Point2<S>; 3], n: u32) -> Result<PlanarCurve<S>> {
    chain_hilbert(init, &hilbert_kappa_sequence::<S>(n)?)
}

/// The same generation driven letter by letter from [`classify_index`], with
/// the boundary steps `κ = 1` added at both ends.
pub fn generate_hilbert_indexed<S: Scalar>(init: &[Point2<S>; 3], n: u32) -> Result<PlanarCurve<S>> {
    let len = word_length(n)?;
    let mut kappas = Vec::new();
    kappas.push(S::one());
    for idx in 1..=len {
        kappas.extend(letter_at(idx).kappas::<S>());
    }
    kappas.push(S::one());
    chain_hilbert(init, &kappas)
}

/// Space Hilbert curve with `κ̄ = bar_ratio·κ` and `τ = tau_ratio·κ`.
pub fn extend_space_hilbert<S: Scalar>(
    init: &[Point3<S>; 3],
    n: u32,
    bar_ratio: S,
    tau_ratio: S,
    admissibility: Admissibility,
) -> Result<SpaceCurve<S>> {
    let steps: Vec<_> = hilbert_kappa_sequence::<S>(n)?
        .into_iter()
        .map(|k| {
            SpaceStep::new(
                k.clone(),
                bar_ratio.clone() * k.clone(),
                tau_ratio.clone() * k,
            )
        })
        .collect();
    reconstruct_space(init, &steps, admissibility)
}

/// `r_2 + Rot(π/2)(r_2 - r_1)`, the third point of a standard Hilbert curve.
pub fn standard_hilbert_init<S: Scalar>(r1: &Point2<S>, r2: &Point2<S>) -> Result<Point2<S>> {
    if r1 == r2 {
        return Err(Error::DegenerateInit);
    }
    let d = r2.sub(r1);
    Ok(Point2::new([r2[0].clone() - d[1].clone(), r2[1].clone() + d[0].clone()]))
}
