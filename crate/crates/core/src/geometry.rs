//! Exact planar primitives over arbitrary-precision rationals.
//!
//! Nothing in this module touches floating point. Every predicate is decided
//! from signs of exact rational expressions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::shift_graph::PairVertex;

/// Exact fraction; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer-valued rational shorthand.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` as a normalized rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign as -1, 0 or +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
}

impl Orientation {
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    fn of(v: &Rational) -> Self {
        match v.cmp(&Rational::zero()) {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        }
    }
}

fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Sign of `(q - p) x (r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    Orientation::of(&cross(p, q, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateSegment(a.to_string()));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    /// Same segment with endpoints in lexicographic (x, then y) order.
    pub fn normalized(&self) -> Segment {
        if self.a <= self.b {
            self.clone()
        } else {
            Segment {
                a: self.b.clone(),
                b: self.a.clone(),
            }
        }
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn is_endpoint(&self, p: &Point) -> bool {
        &self.a == p || &self.b == p
    }

    /// Whether a point known to be collinear with the segment lies within its box.
    fn spans_collinear(&self, p: &Point) -> bool {
        let (lo_x, hi_x) = minmax(&self.a.x, &self.b.x);
        let (lo_y, hi_y) = minmax(&self.a.y, &self.b.y);
        lo_x <= &p.x && &p.x <= hi_x && lo_y <= &p.y && &p.y <= hi_y
    }

    pub fn contains(&self, p: &Point) -> bool {
        orient(&self.a, &self.b, p) == Orientation::Collinear && self.spans_collinear(p)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

fn minmax<'a>(u: &'a Rational, v: &'a Rational) -> (&'a Rational, &'a Rational) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Exact classification of the intersection of two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    SinglePoint(Point),
    /// Positive-length collinear overlap, endpoints in lexicographic order.
    OverlapSegment(Segment),
}

impl SegmentIntersection {
    pub fn is_empty(&self) -> bool {
        matches!(self, SegmentIntersection::Empty)
    }
}

pub fn seg_intersect(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let (a, b) = (&s1.a, &s1.b);
    let (c, d) = (&s2.a, &s2.b);
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(s1, s2);
    }

    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == o2 || o3 == o4 {
        // Both endpoints of one segment strictly on the same side of the other's line.
        return SegmentIntersection::Empty;
    }

    // Touching cases resolve to the touching endpoint exactly.
    if o1 == Orientation::Collinear {
        return SegmentIntersection::SinglePoint(c.clone());
    }
    if o2 == Orientation::Collinear {
        return SegmentIntersection::SinglePoint(d.clone());
    }
    if o3 == Orientation::Collinear {
        return SegmentIntersection::SinglePoint(a.clone());
    }
    if o4 == Orientation::Collinear {
        return SegmentIntersection::SinglePoint(b.clone());
    }

    // Proper crossing: a + t (b - a) with t = cross(c - a, d - c) / cross(b - a, d - c).
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let ex = &d.x - &c.x;
    let ey = &d.y - &c.y;
    let denom = &dx * &ey - &dy * &ex;
    let t = ((&c.x - &a.x) * &ey - (&c.y - &a.y) * &ex) / denom;
    SegmentIntersection::SinglePoint(Point::new(&a.x + &t * &dx, &a.y + &t * &dy))
}

fn collinear_overlap(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let n1 = s1.normalized();
    let n2 = s2.normalized();
    // On a common line, lexicographic order on points is a total order along the line.
    let lo = std::cmp::max(&n1.a, &n2.a);
    let hi = std::cmp::min(&n1.b, &n2.b);
    match lo.cmp(hi) {
        Ordering::Greater => SegmentIntersection::Empty,
        Ordering::Equal => SegmentIntersection::SinglePoint(lo.clone()),
        Ordering::Less => SegmentIntersection::OverlapSegment(Segment {
            a: lo.clone(),
            b: hi.clone(),
        }),
    }
}

/// Segment labels within a constructed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum PartTag {
    A,
    B,
    C,
    D,
    /// Stretched replacement for the A and B parts.
    S,
}

impl PartTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PartTag::A => "A",
            PartTag::B => "B",
            PartTag::C => "C",
            PartTag::D => "D",
            PartTag::S => "S",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "A" => PartTag::A,
            "B" => PartTag::B,
            "C" => PartTag::C,
            "D" => PartTag::D,
            "S" => PartTag::S,
            _ => return None,
        })
    }
}

impl fmt::Display for PartTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A labeled polygonal curve `c(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineCurve {
    pair: PairVertex,
    vertices: Vec<Point>,
    tags: Vec<PartTag>,
    segments: Vec<Segment>,
}

impl PolylineCurve {
    /// Builds the curve; rejects repeated consecutive vertices and tag count mismatches.
    /// Simplicity is not enforced here (see [`PolylineCurve::is_simple`]) so that
    /// corrupted inputs can still be loaded and reported on.
    pub fn new(pair: PairVertex, vertices: Vec<Point>, tags: Vec<PartTag>) -> Result<Self> {
        if vertices.len() < 2 || tags.len() + 1 != vertices.len() {
            return Err(Error::MalformedPolyline {
                vertices: vertices.len(),
                tags: tags.len(),
            });
        }
        let segments = vertices
            .windows(2)
            .map(|w| Segment::new(w[0].clone(), w[1].clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolylineCurve {
            pair,
            vertices,
            tags,
            segments,
        })
    }

    pub fn pair(&self) -> PairVertex {
        self.pair
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn tags(&self) -> &[PartTag] {
        &self.tags
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn part(&self, tag: PartTag) -> Option<&Segment> {
        self.tags
            .iter()
            .position(|&t| t == tag)
            .map(|idx| &self.segments[idx])
    }

    /// Adjacent segments meet only at their shared vertex and non-adjacent
    /// segments are disjoint.
    pub fn is_simple(&self) -> bool {
        self.first_self_contact().is_none()
    }

    /// First offending segment index pair, if the curve is not simple.
    pub fn first_self_contact(&self) -> Option<(usize, usize)> {
        let segs = &self.segments;
        for p in 0..segs.len() {
            for q in p + 1..segs.len() {
                let hit = seg_intersect(&segs[p], &segs[q]);
                let ok = if q == p + 1 {
                    hit == SegmentIntersection::SinglePoint(segs[p].b.clone())
                } else {
                    hit.is_empty()
                };
                if !ok {
                    return Some((p, q));
                }
            }
        }
        None
    }
}

/// One non-empty segment-pair contact between two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentContact {
    pub first: usize,
    pub second: usize,
    pub kind: SegmentIntersection,
}

/// Everything two curves have in common.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveIntersection {
    /// Distinct intersection points, sorted.
    pub points: Vec<Point>,
    pub overlap_detected: bool,
    pub contacts: Vec<SegmentContact>,
}

impl CurveIntersection {
    pub fn is_disjoint(&self) -> bool {
        self.points.is_empty() && !self.overlap_detected
    }
}

/// Exhaustive segment-pair intersection of two curves.
pub fn curve_pair_intersections(c1: &PolylineCurve, c2: &PolylineCurve) -> CurveIntersection {
    let mut points = BTreeSet::new();
    let mut overlap_detected = false;
    let mut contacts = Vec::new();
    for (p, s1) in c1.segments.iter().enumerate() {
        for (q, s2) in c2.segments.iter().enumerate() {
            let kind = seg_intersect(s1, s2);
            match &kind {
                SegmentIntersection::Empty => continue,
                SegmentIntersection::SinglePoint(pt) => {
                    points.insert(pt.clone());
                }
                SegmentIntersection::OverlapSegment(seg) => {
                    overlap_detected = true;
                    points.insert(seg.a.clone());
                    points.insert(seg.b.clone());
                }
            }
            contacts.push(SegmentContact {
                first: p,
                second: q,
                kind,
            });
        }
    }
    CurveIntersection {
        points: points.into_iter().collect(),
        overlap_detected,
        contacts,
    }
}

/// `a x + b y + c = 0` with coprime integer coefficients, first nonzero one positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        let lcm = a
            .denom()
            .lcm(b.denom())
            .lcm(c.denom());
        let scale = Rational::from_integer(lcm);
        let [a, b, c] = [a, b, c].map(|v| (v * &scale).to_integer());
        let mut g = a.gcd(&b).gcd(&c);
        let leading = if a.is_zero() { &b } else { &a };
        if leading.is_negative() {
            g = -g;
        }
        Ok(Line {
            a: &a / &g,
            b: &b / &g,
            c: &c / &g,
        })
    }

    pub fn coefficients(&self) -> (Rational, Rational, Rational) {
        (
            Rational::from_integer(self.a.clone()),
            Rational::from_integer(self.b.clone()),
            Rational::from_integer(self.c.clone()),
        )
    }

    /// Value of `a x + b y + c`; its sign tells the side of the line.
    pub fn eval(&self, p: &Point) -> Rational {
        let (a, b, c) = self.coefficients();
        a * &p.x + b * &p.y + c
    }

    pub fn side(&self, p: &Point) -> Ordering {
        self.eval(p).cmp(&Rational::zero())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tangency {
    Disjoint,
    /// Meets the line in these points (sorted) and stays in one closed half-plane.
    Touches(Vec<Point>),
    Crosses,
    /// Some segment lies inside the line.
    LiesAlong,
}

pub fn tangency_profile(c: &PolylineCurve, line: &Line) -> Tangency {
    let sides: Vec<Ordering> = c.vertices.iter().map(|p| line.side(p)).collect();
    if sides
        .windows(2)
        .any(|w| w[0] == Ordering::Equal && w[1] == Ordering::Equal)
    {
        return Tangency::LiesAlong;
    }
    let above = sides.contains(&Ordering::Greater);
    let below = sides.contains(&Ordering::Less);
    if above && below {
        return Tangency::Crosses;
    }
    let on: BTreeSet<Point> = c
        .vertices
        .iter()
        .zip(&sides)
        .filter(|(_, s)| **s == Ordering::Equal)
        .map(|(p, _)| p.clone())
        .collect();
    if on.is_empty() {
        Tangency::Disjoint
    } else {
        Tangency::Touches(on.into_iter().collect())
    }
}
