//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use disjoint_curves::geometry::{int, ratio};
use disjoint_curves::{Graph, Point, Rational, Segment, SegmentIntersection};
use rand::Rng;

fn zero() -> Rational {
    int(0)
}

/// Solves `a + t (b - a) = c + u (d - c)` by Cramer's rule; in the parallel case
/// projects onto the first segment's direction with dot products.
pub fn linear_system_intersection(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
    let (m11, m12) = (&b.x - &a.x, &c.x - &d.x);
    let (m21, m22) = (&b.y - &a.y, &c.y - &d.y);
    let (r1, r2) = (&c.x - &a.x, &c.y - &a.y);
    let det = &m11 * &m22 - &m12 * &m21;
    let unit = int(1);
    let at = |t: &Rational| Point::new(&a.x + t * &m11, &a.y + t * &m21);
    if det != zero() {
        let t = (&r1 * &m22 - &m12 * &r2) / &det;
        let u = (&m11 * &r2 - &m21 * &r1) / &det;
        if t >= zero() && t <= unit && u >= zero() && u <= unit {
            return SegmentIntersection::SinglePoint(at(&t));
        }
        return SegmentIntersection::Empty;
    }
    // parallel: c must satisfy the first segment's line equation
    if &r1 * &m21 - &r2 * &m11 != zero() {
        return SegmentIntersection::Empty;
    }
    let len2 = &m11 * &m11 + &m21 * &m21;
    let param = |p: &Point| ((&p.x - &a.x) * &m11 + (&p.y - &a.y) * &m21) / &len2;
    let (tc, td) = (param(c), param(d));
    let (lo_cd, hi_cd) = if tc <= td { (tc, td) } else { (td, tc) };
    let lo = std::cmp::max(zero(), lo_cd);
    let hi = std::cmp::min(unit, hi_cd);
    if lo > hi {
        SegmentIntersection::Empty
    } else if lo == hi {
        SegmentIntersection::SinglePoint(at(&lo))
    } else {
        let (p, q) = (at(&lo), at(&hi));
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        SegmentIntersection::OverlapSegment(Segment::new(p, q).unwrap())
    }
}

/// Coordinate in [-10, 10] with denominator at most 16.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let den = rng.gen_range(1..=16i64);
    ratio(rng.gen_range(-10 * den..=10 * den), den)
}

/// Mixes generic positions with a coarse lattice so that collinear, touching
/// and overlapping configurations show up often.
pub fn random_segment<R: Rng>(rng: &mut R) -> Segment {
    loop {
        let coarse = rng.gen_bool(0.5);
        let coord = |rng: &mut R| {
            if coarse {
                ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))
            } else {
                small_rational(rng)
            }
        };
        let a = Point::new(coord(rng), coord(rng));
        let b = Point::new(coord(rng), coord(rng));
        if let Ok(s) = Segment::new(a, b) {
            return s;
        }
    }
}

/// Chromatic number by enumerating every set partition of the vertices
/// (restricted growth strings); exponential, for tiny graphs only.
pub fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut labels = vec![0usize; n];
    let mut best = n;
    fn rec(g: &Graph, labels: &mut Vec<usize>, pos: usize, blocks: usize, best: &mut usize) {
        if pos == labels.len() {
            let proper = g.edges().iter().all(|&(u, v)| labels[u] != labels[v]);
            if proper {
                *best = (*best).min(blocks);
            }
            return;
        }
        for b in 0..=blocks {
            labels[pos] = b;
            rec(g, labels, pos + 1, blocks.max(b + 1), best);
        }
    }
    labels[0] = 0;
    rec(g, &mut labels, 1, 1, &mut best);
    best
}

pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.9);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
