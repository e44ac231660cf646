//! Generators for the 4-segment and 3-segment curve families.
//!
//! Curves are indexed by lex rank `r` of their pair `(i, j)`. Two rank
//! thresholds drive everything: `up_rank` is the last B-part (or S-part) the
//! curve's left part must cross and `down_rank` is the first B-part (or S-part)
//! its D-part must cross. Ranks strictly between them are the pairs `(j, *)`,
//! exactly the curves that have to stay disjoint from `c(i, j)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::geometry::{int, ratio, Line, PartTag, Point, PolylineCurve, Rational, Segment};
use crate::shift_graph::{lex_pairs, lex_rank, pair_count, PairVertex};

/// Rank of `(j - 1, m)`: last curve whose B-part the A-part of `c(i, j)` crosses.
pub fn up_rank(i: usize, j: usize, m: usize) -> Result<usize> {
    PairVertex::new(i, j, m)?;
    lex_rank(j - 1, m, m)
}

/// Rank of `(j + 1, j + 2)` when `j <= m - 2`: first curve whose B-part the
/// D-part of `c(i, j)` crosses.
pub fn down_rank(i: usize, j: usize, m: usize) -> Result<Option<usize>> {
    PairVertex::new(i, j, m)?;
    if j + 2 <= m {
        lex_rank(j + 1, j + 2, m).map(Some)
    } else {
        Ok(None)
    }
}

/// Free constants of the 4-segment layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamProfile {
    /// A-part x spacing.
    pub alpha: Rational,
    /// B-level spacing.
    pub beta: Rational,
    /// B right-end decrement per rank.
    pub gamma_b: Rational,
    /// Right end of the first B-part.
    pub b1: Rational,
    /// D-part x spacing.
    pub delta: Rational,
}

impl ParamProfile {
    /// Unit spacings with `b_r = 3N - 2(r - 1)`; valid for every `m`.
    pub fn canonical(m: usize) -> Self {
        let n = pair_count(m) as i64;
        ParamProfile {
            alpha: int(1),
            beta: int(1),
            gamma_b: int(2),
            b1: int(3 * n),
            delta: int(1),
        }
    }

    /// The constants of the drawn `H_4` illustration.
    pub fn figure() -> Self {
        ParamProfile {
            alpha: ratio(1, 5),
            beta: ratio(1, 5),
            gamma_b: ratio(1, 2),
            b1: ratio(21, 5),
            delta: ratio(1, 5),
        }
    }

    fn b(&self, r: usize) -> Rational {
        &self.b1 - &self.gamma_b * int(r as i64 - 1)
    }

    fn c(&self, r: usize) -> Rational {
        self.b(r) + &self.beta * int(r as i64 - 1)
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        let n = pair_count(m);
        let zero = int(0);
        for (name, v) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma_b", &self.gamma_b),
            ("b1", &self.b1),
            ("delta", &self.delta),
        ] {
            if v <= &zero {
                return Err(Error::ProfileConstraint(format!("{name} = {v} must be positive")));
            }
        }
        if self.gamma_b <= self.beta {
            return Err(Error::ProfileConstraint(format!(
                "gamma_b > beta (C-lines must decrease): {} <= {}",
                self.gamma_b, self.beta
            )));
        }
        let last_d = &self.delta * int(n as i64 - 1);
        if self.b(n) <= last_d {
            return Err(Error::ProfileConstraint(format!(
                "b_N > delta(N-1) (D-parts inside every B span): b_N = {} <= {}",
                self.b(n),
                last_d
            )));
        }
        let top_clear = &self.beta * int(n as i64);
        for r in 1..=n {
            let top = self.c(r) - &self.delta * int(r as i64 - 1);
            if top <= top_clear {
                return Err(Error::ProfileConstraint(format!(
                    "c_r - delta(r-1) > beta*N (D-tops clear all B-levels) fails at r = {r}: {top} <= {top_clear}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ParamProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} gamma_b={} b1={} delta={}",
            self.alpha, self.beta, self.gamma_b, self.b1, self.delta
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    FourSegment,
    ThreeSegment,
}

impl FamilyKind {
    pub fn segments(self) -> usize {
        match self {
            FamilyKind::FourSegment => 4,
            FamilyKind::ThreeSegment => 3,
        }
    }

    pub fn tags(self) -> &'static [PartTag] {
        match self {
            FamilyKind::FourSegment => &[PartTag::A, PartTag::B, PartTag::C, PartTag::D],
            FamilyKind::ThreeSegment => &[PartTag::S, PartTag::C, PartTag::D],
        }
    }

    /// Tag of the part that other curves' left and D-parts cross.
    pub fn crossed_part(self) -> PartTag {
        match self {
            FamilyKind::FourSegment => PartTag::B,
            FamilyKind::ThreeSegment => PartTag::S,
        }
    }

    /// Tag of the part that crosses later curves "upward".
    pub fn rising_part(self) -> PartTag {
        match self {
            FamilyKind::FourSegment => PartTag::A,
            FamilyKind::ThreeSegment => PartTag::S,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::FourSegment => "four_segment",
            FamilyKind::ThreeSegment => "three_segment",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Profile(ParamProfile),
    StretchBase(BigInt),
}

/// A family `F_m`: one curve per pair, in lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub m: usize,
    pub kind: FamilyKind,
    pub params: FamilyParams,
    pub curves: Vec<PolylineCurve>,
}

impl CurveFamily {
    pub fn profile(&self) -> Option<&ParamProfile> {
        match &self.params {
            FamilyParams::Profile(p) => Some(p),
            FamilyParams::StretchBase(_) => None,
        }
    }

    pub fn stretch_base(&self) -> Option<&BigInt> {
        match &self.params {
            FamilyParams::StretchBase(k) => Some(k),
            FamilyParams::Profile(_) => None,
        }
    }

    /// Regenerates the family these parameters describe.
    pub fn regenerate(&self) -> Result<CurveFamily> {
        match &self.params {
            FamilyParams::Profile(p) => four_segment_family(self.m, p),
            FamilyParams::StretchBase(k) => three_segment_family(self.m, Some(k.clone())),
        }
    }
}

fn half(v: i64) -> Rational {
    ratio(v, 2)
}

pub fn four_segment_family(m: usize, profile: &ParamProfile) -> Result<CurveFamily> {
    if m < 2 {
        return Err(Error::OrderTooSmall(m));
    }
    profile.validate(m)?;
    let n = pair_count(m);
    let ParamProfile {
        alpha, beta, delta, ..
    } = profile;
    let mut curves = Vec::with_capacity(n);
    for (idx, pair) in lex_pairs(m).into_iter().enumerate() {
        let r = idx + 1;
        let ri = r as i64;
        let up = up_rank(pair.i(), pair.j(), m)? as i64;
        let down = down_rank(pair.i(), pair.j(), m)?.unwrap_or(n + 1) as i64;
        let ax = -(alpha * int(ri));
        let level = beta * int(ri - 1);
        let dx = delta * int(ri - 1);
        let vertices = vec![
            Point::new(ax.clone(), beta * half(2 * up - 1)),
            Point::new(ax, level.clone()),
            Point::new(profile.b(r), level),
            Point::new(dx.clone(), profile.c(r) - &dx),
            Point::new(dx, beta * half(2 * down - 3)),
        ];
        curves.push(PolylineCurve::new(
            pair,
            vertices,
            FamilyKind::FourSegment.tags().to_vec(),
        )?);
    }
    Ok(CurveFamily {
        m,
        kind: FamilyKind::FourSegment,
        params: FamilyParams::Profile(profile.clone()),
        curves,
    })
}

/// Smallest admissible stretch base is `12 N^2 + 1`.
pub fn default_stretch_base(m: usize) -> BigInt {
    let n = pair_count(m) as u64;
    BigInt::from(12 * n * n + 1)
}

pub fn three_segment_family(m: usize, k: Option<BigInt>) -> Result<CurveFamily> {
    if m < 2 {
        return Err(Error::OrderTooSmall(m));
    }
    let n = pair_count(m);
    let bound = BigInt::from(12 * (n as u64) * (n as u64));
    let k = k.unwrap_or_else(|| default_stretch_base(m));
    if k <= bound {
        return Err(Error::StretchBaseTooSmall {
            k: k.to_string(),
            bound: bound.to_string(),
        });
    }
    let c0 = 3 * n as i64;
    let nn = n as i64;
    let mut curves = Vec::with_capacity(n);
    let mut k_pow = BigInt::one();
    for (idx, pair) in lex_pairs(m).into_iter().enumerate() {
        let r = idx as i64 + 1;
        k_pow *= &k;
        let up = up_rank(pair.i(), pair.j(), m)? as i64;
        let d_bottom = match down_rank(pair.i(), pair.j(), m)? {
            Some(d) => half(2 * d as i64 - 1),
            None => half(2 * nn + 1),
        };
        let right = c0 - 2 * (r - 1);
        let vertices = vec![
            Point::new(Rational::from_integer(-k_pow.clone()), half(2 * up + 1)),
            Point::from_ints(right, r),
            Point::from_ints(r - 1, c0 + 3 - 2 * r),
            Point::new(int(r - 1), d_bottom),
        ];
        curves.push(PolylineCurve::new(
            pair,
            vertices,
            FamilyKind::ThreeSegment.tags().to_vec(),
        )?);
    }
    Ok(CurveFamily {
        m,
        kind: FamilyKind::ThreeSegment,
        params: FamilyParams::StretchBase(k),
        curves,
    })
}

/// `K^r` for checking left endpoints.
pub fn stretch_power(k: &BigInt, r: usize) -> BigInt {
    Pow::pow(k, r as u32)
}

/// The line `x + y + beta = 0` through every A-B corner; needs `alpha == beta`.
pub fn touching_line(profile: &ParamProfile) -> Result<Line> {
    if profile.alpha != profile.beta {
        return Err(Error::UnsupportedProfile(format!(
            "touching line requires alpha == beta, got alpha={} beta={}",
            profile.alpha, profile.beta
        )));
    }
    Line::new(int(1), int(1), profile.beta.clone())
}

/// Height of a non-vertical segment above `x`, if `x` is within its x-range.
pub fn height_at(segment: &Segment, x: &Rational) -> Option<Rational> {
    let (a, b) = (segment.a(), segment.b());
    if a.x == b.x {
        return None;
    }
    let (lo, hi) = if a.x < b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    if x < lo || x > hi {
        return None;
    }
    Some(&a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x))
}
