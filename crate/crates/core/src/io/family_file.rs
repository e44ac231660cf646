//! Versioned JSON file format for curve families.
//!
//! Rationals are written as `"num/den"` strings (denominator always present)
//! and keys are emitted in sorted order, so serialization is canonical.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::constructions::{CurveFamily, FamilyKind, FamilyParams, ParamProfile};
use crate::error::{Error, Result};
use crate::geometry::{PartTag, Point, PolylineCurve, Rational};
use crate::shift_graph::{lex_rank, PairVertex};

pub const FORMAT_VERSION: u32 = 1;

pub fn rational_to_string(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Accepts `"n"` or `"n/d"` with `d != 0`; the result is normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

// Field order below is alphabetical; serde_json writes struct fields in
// declaration order, which keeps the output keys sorted.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileV1 {
    pub alpha: String,
    pub b1: String,
    pub beta: String,
    pub delta: String,
    pub gamma_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveV1 {
    pub i: usize,
    pub j: usize,
    pub part_tags: Vec<String>,
    pub rank: usize,
    pub vertices: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFileV1 {
    pub curves: Vec<CurveV1>,
    pub format_version: u32,
    pub kind: String,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileV1>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stretch_base: Option<String>,
}

fn kind_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::FourSegment => "four_segment",
        FamilyKind::ThreeSegment => "three_segment",
    }
}

impl FamilyFileV1 {
    pub fn from_family(f: &CurveFamily) -> Self {
        let (profile, stretch_base) = match &f.params {
            FamilyParams::Profile(p) => (
                Some(ProfileV1 {
                    alpha: rational_to_string(&p.alpha),
                    b1: rational_to_string(&p.b1),
                    beta: rational_to_string(&p.beta),
                    delta: rational_to_string(&p.delta),
                    gamma_b: rational_to_string(&p.gamma_b),
                }),
                None,
            ),
            FamilyParams::StretchBase(k) => (None, Some(k.to_string())),
        };
        let curves = f
            .curves
            .iter()
            .map(|c| {
                let p = c.pair();
                CurveV1 {
                    i: p.i(),
                    j: p.j(),
                    part_tags: c.tags().iter().map(|t| t.as_str().to_string()).collect(),
                    rank: lex_rank(p.i(), p.j(), f.m).unwrap_or(0),
                    vertices: c
                        .vertices()
                        .iter()
                        .map(|v| [rational_to_string(&v.x), rational_to_string(&v.y)])
                        .collect(),
                }
            })
            .collect();
        FamilyFileV1 {
            curves,
            format_version: FORMAT_VERSION,
            kind: kind_name(f.kind).to_string(),
            m: f.m,
            profile,
            stretch_base,
        }
    }

    pub fn into_family(self) -> Result<CurveFamily> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        if self.m < 2 {
            return Err(Error::OrderTooSmall(self.m));
        }
        let kind = match self.kind.as_str() {
            "four_segment" => FamilyKind::FourSegment,
            "three_segment" => FamilyKind::ThreeSegment,
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        };
        let params = match (kind, self.profile, self.stretch_base) {
            (FamilyKind::FourSegment, Some(p), None) => FamilyParams::Profile(ParamProfile {
                alpha: parse_rational(&p.alpha)?,
                beta: parse_rational(&p.beta)?,
                gamma_b: parse_rational(&p.gamma_b)?,
                b1: parse_rational(&p.b1)?,
                delta: parse_rational(&p.delta)?,
            }),
            (FamilyKind::ThreeSegment, None, Some(k)) => FamilyParams::StretchBase(
                k.parse()
                    .map_err(|_| Error::Parse(format!("invalid stretch_base {k:?}")))?,
            ),
            _ => {
                return Err(Error::Parse(
                    "four_segment needs exactly a profile, three_segment exactly a stretch_base"
                        .into(),
                ))
            }
        };
        let curves = self
            .curves
            .into_iter()
            .map(|c| {
                let pair = PairVertex::new(c.i, c.j, self.m)?;
                if lex_rank(c.i, c.j, self.m)? != c.rank {
                    return Err(Error::Parse(format!(
                        "curve {pair} declares rank {}, lex rank is {}",
                        c.rank,
                        lex_rank(c.i, c.j, self.m)?
                    )));
                }
                let tags = c
                    .part_tags
                    .iter()
                    .map(|t| PartTag::parse(t).ok_or_else(|| Error::Parse(format!("unknown part tag {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                let vertices = c
                    .vertices
                    .iter()
                    .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>>>()?;
                PolylineCurve::new(pair, vertices, tags)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CurveFamily {
            m: self.m,
            kind,
            params,
            curves,
        })
    }
}

/// Canonical text form, newline terminated.
pub fn serialize_family(f: &CurveFamily) -> String {
    let mut s = serde_json::to_string_pretty(&FamilyFileV1::from_family(f))
        .expect("family file is always serializable");
    s.push('\n');
    s
}

pub fn parse_family(text: &str) -> Result<CurveFamily> {
    let file: FamilyFileV1 =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_family()
}
