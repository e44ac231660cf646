//! Certification of a curve family against `H_m`.
//!
//! All pairwise work is exhaustive: every pair of curves, every pair of
//! segments, exact arithmetic throughout. The per-pair observations are
//! computed once and shared by the individual checks.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::constructions::{down_rank, touching_line, up_rank, CurveFamily, FamilyKind};
use crate::error::{Error, Result};
use crate::geometry::{
    curve_pair_intersections, tangency_profile, CurveIntersection, PartTag, Point, PolylineCurve,
    SegmentIntersection, Tangency,
};
use crate::shift_graph::{
    build_shift_graph, ceil_log2, chromatic_number_exact, find_triangle, formula_coloring,
    lex_pairs, pair_count, ChromaticOutcome, Graph, PairGraph, PairVertex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Intersect,
    Disjoint,
}

/// For `u < v` in lex order, `c(u)` and `c(v)` meet exactly when `u.j != v.i`.
pub fn combinatorial_oracle(u: &PairVertex, v: &PairVertex) -> Result<OracleVerdict> {
    if u >= v {
        return Err(Error::NotLexOrdered {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    Ok(if u.j() != v.i() {
        OracleVerdict::Intersect
    } else {
        OracleVerdict::Disjoint
    })
}

/// Edge exactly between curves with empty intersection. Vertices are sorted
/// lexicographically; `m` is the largest index appearing in a label.
pub fn disjointness_graph(curves: &[PolylineCurve]) -> Result<PairGraph> {
    let mut order: Vec<usize> = (0..curves.len()).collect();
    order.sort_by_key(|&idx| curves[idx].pair());
    let sorted: Vec<&PolylineCurve> = order.iter().map(|&idx| &curves[idx]).collect();
    let observations = observe_pairs(&sorted);
    graph_from_observations(&sorted, &observations)
}

fn graph_from_observations(
    curves: &[&PolylineCurve],
    observations: &[PairObservation],
) -> Result<PairGraph> {
    let mut graph = Graph::empty(curves.len());
    for obs in observations {
        if obs.hit.overlap_detected {
            return Err(Error::Overlap {
                u: curves[obs.first].pair().to_string(),
                v: curves[obs.second].pair().to_string(),
            });
        }
        if obs.hit.is_disjoint() {
            graph.add_edge(obs.first, obs.second);
        }
    }
    Ok(PairGraph {
        m: curves.iter().map(|c| c.pair().j()).max().unwrap_or(0),
        vertices: curves.iter().map(|c| c.pair()).collect(),
        graph,
    })
}

struct PairObservation {
    first: usize,
    second: usize,
    hit: CurveIntersection,
}

fn observe_pairs(curves: &[&PolylineCurve]) -> Vec<PairObservation> {
    let mut out = Vec::with_capacity(curves.len() * curves.len().saturating_sub(1) / 2);
    for a in 0..curves.len() {
        for b in a + 1..curves.len() {
            out.push(PairObservation {
                first: a,
                second: b,
                hit: curve_pair_intersections(curves[a], curves[b]),
            });
        }
    }
    out
}

/// Which part pair two curves of ranks `r < s` are supposed to cross through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpectedContact {
    CrossViaAB,
    CrossViaDB,
    CrossViaSS,
    CrossViaDS,
    Disjoint,
}

impl ExpectedContact {
    /// Expected tags for (curve r, curve s).
    pub fn tags(self) -> Option<(PartTag, PartTag)> {
        match self {
            ExpectedContact::CrossViaAB => Some((PartTag::A, PartTag::B)),
            ExpectedContact::CrossViaDB => Some((PartTag::D, PartTag::B)),
            ExpectedContact::CrossViaSS => Some((PartTag::S, PartTag::S)),
            ExpectedContact::CrossViaDS => Some((PartTag::D, PartTag::S)),
            ExpectedContact::Disjoint => None,
        }
    }
}

/// `s <= up` crosses via the left part, `s >= down` via the D-part, otherwise disjoint.
pub fn expected_contact(kind: FamilyKind, up: usize, down: Option<usize>, s: usize) -> ExpectedContact {
    let rising = s <= up;
    let falling = down.is_some_and(|d| s >= d);
    match (kind, rising, falling) {
        (FamilyKind::FourSegment, true, _) => ExpectedContact::CrossViaAB,
        (FamilyKind::FourSegment, false, true) => ExpectedContact::CrossViaDB,
        (FamilyKind::ThreeSegment, true, _) => ExpectedContact::CrossViaSS,
        (FamilyKind::ThreeSegment, false, true) => ExpectedContact::CrossViaDS,
        (_, false, false) => ExpectedContact::Disjoint,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservedContact {
    pub first: PartTag,
    pub second: PartTag,
    pub kind: SegmentIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    pub r: usize,
    pub s: usize,
    pub u: PairVertex,
    pub v: PairVertex,
    pub expected: ExpectedContact,
    pub observed: Vec<ObservedContact>,
    pub pass: bool,
}

impl fmt::Display for PairClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ranks ({},{}) {}x{}: expected {:?}, observed [",
            self.r, self.s, self.u, self.v, self.expected
        )?;
        for (idx, o) in self.observed.iter().enumerate() {
            if idx > 0 {
                write!(f, "; ")?;
            }
            match &o.kind {
                SegmentIntersection::SinglePoint(p) => write!(f, "{}{} at {}", o.first, o.second, p)?,
                SegmentIntersection::OverlapSegment(s) => {
                    write!(f, "{}{} overlap {}", o.first, o.second, s)?
                }
                SegmentIntersection::Empty => write!(f, "{}{} empty", o.first, o.second)?,
            }
        }
        write!(f, "]")
    }
}

/// Part-level crossing pattern of every pair against the rank thresholds.
pub fn part_pattern_audit(f: &CurveFamily) -> Vec<PairClassification> {
    let refs: Vec<&PolylineCurve> = f.curves.iter().collect();
    classify(f, &refs, &observe_pairs(&refs))
}

fn classify(
    f: &CurveFamily,
    curves: &[&PolylineCurve],
    observations: &[PairObservation],
) -> Vec<PairClassification> {
    observations
        .iter()
        .map(|obs| {
            let (cu, cv) = (curves[obs.first], curves[obs.second]);
            let (u, v) = (cu.pair(), cv.pair());
            let (r, s) = (obs.first + 1, obs.second + 1);
            let up = up_rank(u.i(), u.j(), f.m).unwrap_or(0);
            let down = down_rank(u.i(), u.j(), f.m).unwrap_or(None);
            let expected = expected_contact(f.kind, up, down, s);
            let observed: Vec<ObservedContact> = obs
                .hit
                .contacts
                .iter()
                .map(|c| ObservedContact {
                    first: cu.tags()[c.first],
                    second: cv.tags()[c.second],
                    kind: c.kind.clone(),
                })
                .collect();
            let pass = match expected.tags() {
                None => observed.is_empty(),
                Some((a, b)) => {
                    observed.len() == 1
                        && observed[0].first == a
                        && observed[0].second == b
                        && matches!(observed[0].kind, SegmentIntersection::SinglePoint(_))
                }
            };
            PairClassification {
                r,
                s,
                u,
                v,
                expected,
                observed,
                pass,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub summary: String,
    pub counterexamples: Vec<String>,
    pub elapsed_ms: f64,
}

const MAX_COUNTEREXAMPLES: usize = 5;

impl CheckResult {
    fn from_failures(name: &'static str, ok_summary: String, failures: Vec<String>) -> Self {
        let status = if failures.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        let summary = if failures.is_empty() {
            ok_summary
        } else {
            format!("{} violation(s)", failures.len())
        };
        CheckResult {
            name,
            status,
            summary,
            counterexamples: failures.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
            elapsed_ms: 0.0,
        }
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Skipped,
            summary: reason.into(),
            counterexamples: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub kind: String,
    pub curves: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn first_counterexample(&self) -> Option<(&'static str, &str)> {
        self.failed_checks().find_map(|c| {
            c.counterexamples
                .first()
                .map(|s| (c.name, s.as_str()))
                .or(Some((c.name, c.summary.as_str())))
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "family: m={} kind={} curves={}",
            self.m, self.kind, self.curves
        )?;
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            writeln!(f, "  [{tag}] {:<24} {}", c.name, c.summary)?;
            for ce in &c.counterexamples {
                writeln!(f, "         - {ce}")?;
            }
        }
        write!(
            f,
            "overall: {} ({:.1} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Run the exact chromatic number check (only for `m <= 10`).
    pub chromatic: bool,
    pub chromatic_budget: u64,
    /// Compare coordinates against a fresh generation from the family's parameters.
    pub conformance: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            chromatic: false,
            chromatic_budget: 50_000_000,
            conformance: true,
        }
    }
}

pub const CHROMATIC_MAX_M: usize = 10;

fn timed(mut f: impl FnMut() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let mut res = f();
    res.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    res
}

pub fn verify_family(f: &CurveFamily, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let curves: Vec<&PolylineCurve> = f.curves.iter().collect();
    let mut checks = Vec::new();

    checks.push(timed(|| check_labels(f)));
    let labels_ok = checks[0].status == CheckStatus::Pass;

    checks.push(timed(|| {
        let want = f.kind.segments();
        let failures = curves
            .iter()
            .filter(|c| c.segment_count() != want || c.tags() != f.kind.tags())
            .map(|c| format!("{} has {} segments tagged {:?}", c.pair(), c.segment_count(), c.tags()))
            .collect();
        CheckResult::from_failures("segment_count", format!("every curve has {want} segments"), failures)
    }));

    checks.push(timed(|| {
        let failures = curves
            .iter()
            .filter_map(|c| {
                c.first_self_contact()
                    .map(|(p, q)| format!("{}: segments {} and {} touch", c.pair(), c.tags()[p], c.tags()[q]))
            })
            .collect();
        CheckResult::from_failures("simplicity", "every curve is a simple polyline".into(), failures)
    }));

    let obs_start = Instant::now();
    let observations = observe_pairs(&curves);
    let obs_ms = obs_start.elapsed().as_secs_f64() * 1e3;

    checks.push(timed(|| {
        let failures = observations
            .iter()
            .filter(|o| o.hit.overlap_detected || o.hit.points.len() > 1)
            .map(|o| describe_points(&curves, o))
            .collect();
        CheckResult::from_failures(
            "at_most_one_point",
            format!("{} pairs, each meets in at most one point", observations.len()),
            failures,
        )
    }));
    checks.last_mut().unwrap().elapsed_ms += obs_ms;

    checks.push(timed(|| {
        if !labels_ok {
            return CheckResult::skipped("exact_point_counts", "labels do not match H_m");
        }
        let failures = observations
            .iter()
            .filter(|o| {
                let want = usize::from(!curves[o.first].pair().shift_adjacent(&curves[o.second].pair()));
                o.hit.overlap_detected || o.hit.points.len() != want
            })
            .map(|o| describe_points(&curves, o))
            .collect();
        CheckResult::from_failures(
            "exact_point_counts",
            "one point on every non-edge, none on edges".into(),
            failures,
        )
    }));

    checks.push(timed(|| {
        let mut failures = Vec::new();
        for o in &observations {
            for c in &o.hit.contacts {
                if let SegmentIntersection::SinglePoint(p) = &c.kind {
                    let s1 = &curves[o.first].segments()[c.first];
                    let s2 = &curves[o.second].segments()[c.second];
                    if s1.is_endpoint(p) || s2.is_endpoint(p) {
                        failures.push(format!(
                            "{}x{}: contact at {} is a segment endpoint",
                            curves[o.first].pair(),
                            curves[o.second].pair(),
                            p
                        ));
                    }
                }
            }
        }
        CheckResult::from_failures(
            "transversal_crossings",
            "every contact is interior to both segments".into(),
            failures,
        )
    }));

    let realized = graph_from_observations(&curves, &observations);
    let shift = build_shift_graph(f.m).ok();

    checks.push(timed(|| match (&realized, &shift) {
        (Err(e), _) => CheckResult::from_failures("graph_identity", String::new(), vec![e.to_string()]),
        (_, None) => CheckResult::from_failures(
            "graph_identity",
            String::new(),
            vec![format!("m = {} is below the domain", f.m)],
        ),
        (Ok(g), Some(h)) => {
            let mut failures = Vec::new();
            if g.vertices != h.vertices {
                failures.push("vertex labels differ from the lex-ordered pairs of H_m".to_string());
            } else {
                let ge = g.labeled_edges();
                let he = h.labeled_edges();
                for (u, v) in ge.difference(&he) {
                    failures.push(format!("{u}x{v} disjoint but not an H_m edge"));
                }
                for (u, v) in he.difference(&ge) {
                    failures.push(format!("{u}x{v} is an H_m edge but the curves meet"));
                }
            }
            CheckResult::from_failures(
                "graph_identity",
                format!("disjointness graph equals H_{} ({} edges)", f.m, h.graph.edge_count()),
                failures,
            )
        }
    }));

    checks.push(timed(|| match (&realized, &shift) {
        (Ok(g), Some(h)) if g.vertices == h.vertices => {
            let mut failures = Vec::new();
            for o in &observations {
                let (u, v) = (g.vertices[o.first], g.vertices[o.second]);
                let geometric_disjoint = g.graph.has_edge(o.first, o.second);
                let rule = u.j() == v.i() || v.j() == u.i();
                let oracle = combinatorial_oracle(&u, &v) == Ok(OracleVerdict::Disjoint);
                let in_h = h.graph.has_edge(o.first, o.second);
                if !(geometric_disjoint == rule && rule == oracle && oracle == in_h) {
                    failures.push(format!(
                        "{u}x{v}: geometry={geometric_disjoint} rule={rule} oracle={oracle} H_m={in_h}"
                    ));
                }
            }
            CheckResult::from_failures(
                "oracle_agreement",
                "geometry, shift rule and ordered-pair oracle coincide".into(),
                failures,
            )
        }
        _ => CheckResult::skipped("oracle_agreement", "realized graph unavailable"),
    }));

    checks.push(timed(|| {
        if !labels_ok {
            return CheckResult::skipped("part_pattern", "labels do not match H_m");
        }
        let failures = classify(f, &curves, &observations)
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| c.to_string())
            .collect();
        CheckResult::from_failures(
            "part_pattern",
            "every pair crosses exactly through the predicted parts".into(),
            failures,
        )
    }));

    checks.push(timed(|| match &realized {
        Ok(g) => {
            let failures = find_triangle(&g.graph)
                .map(|(a, b, c)| {
                    vec![format!(
                        "triangle {} {} {}",
                        g.vertices[a], g.vertices[b], g.vertices[c]
                    )]
                })
                .unwrap_or_default();
            CheckResult::from_failures("triangle_free", "no triangle in the disjointness graph".into(), failures)
        }
        Err(_) => CheckResult::skipped("triangle_free", "realized graph unavailable"),
    }));

    checks.push(timed(|| check_tangency(f)));

    checks.push(timed(|| {
        if !opts.chromatic {
            return CheckResult::skipped("chromatic", "not requested");
        }
        if f.m > CHROMATIC_MAX_M {
            return CheckResult::skipped("chromatic", format!("m > {CHROMATIC_MAX_M}"));
        }
        match &realized {
            Ok(g) => check_chromatic(f.m, &g.graph, opts.chromatic_budget),
            Err(_) => CheckResult::skipped("chromatic", "realized graph unavailable"),
        }
    }));

    checks.push(timed(|| {
        if !opts.conformance {
            return CheckResult::skipped("construction_conformance", "not requested");
        }
        check_conformance(f)
    }));

    let pass = checks.iter().all(CheckResult::passed);
    VerificationReport {
        m: f.m,
        kind: f.kind.to_string(),
        curves: f.curves.len(),
        pass,
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn describe_points(curves: &[&PolylineCurve], o: &PairObservation) -> String {
    let pts: Vec<String> = o.hit.points.iter().map(Point::to_string).collect();
    format!(
        "{}x{}: {} point(s) [{}]{}",
        curves[o.first].pair(),
        curves[o.second].pair(),
        pts.len(),
        pts.join(", "),
        if o.hit.overlap_detected { " with overlap" } else { "" }
    )
}

fn check_labels(f: &CurveFamily) -> CheckResult {
    let want = lex_pairs(f.m);
    let got: Vec<PairVertex> = f.curves.iter().map(|c| c.pair()).collect();
    let mut failures = Vec::new();
    if f.m < 2 {
        failures.push(format!("m = {} is below the domain", f.m));
    } else if got != want {
        failures.push(format!(
            "expected {} curves labeled by the lex-ordered pairs, got {}",
            pair_count(f.m),
            got.len()
        ));
    }
    CheckResult::from_failures("labels", format!("{} curves in lex order", want.len()), failures)
}

fn check_tangency(f: &CurveFamily) -> CheckResult {
    const NAME: &str = "touching_line";
    let profile = match (f.kind, f.profile()) {
        (FamilyKind::FourSegment, Some(p)) => p,
        _ => return CheckResult::skipped(NAME, "only claimed for the 4-segment family"),
    };
    let line = match touching_line(profile) {
        Ok(l) => l,
        Err(e) => return CheckResult::skipped(NAME, e.to_string()),
    };
    let mut failures = Vec::new();
    let mut touch_points = BTreeSet::new();
    for c in &f.curves {
        match tangency_profile(c, &line) {
            Tangency::Touches(points) if points.len() == 1 => {
                let p = points.into_iter().next().unwrap();
                if c.vertices().get(1) != Some(&p) {
                    failures.push(format!("{} touches at {}, not at its A-B corner", c.pair(), p));
                }
                if !touch_points.insert(p.clone()) {
                    failures.push(format!("{} shares touch point {}", c.pair(), p));
                }
            }
            other => failures.push(format!("{}: {:?} against {}", c.pair(), other, line)),
        }
    }
    CheckResult::from_failures(
        NAME,
        format!("{} distinct touch points on {}", touch_points.len(), line),
        failures,
    )
}

fn check_chromatic(m: usize, g: &Graph, budget: u64) -> CheckResult {
    const NAME: &str = "chromatic";
    let want = ceil_log2(m);
    let mut failures = Vec::new();
    match formula_coloring(m) {
        Ok(c) if c.is_proper(g) && c.color_count() == want => {}
        Ok(c) => failures.push(format!(
            "bit coloring not proper with {want} colors (uses {}, conflict {:?})",
            c.color_count(),
            c.first_conflict(g)
        )),
        Err(e) => failures.push(e.to_string()),
    }
    let summary = match chromatic_number_exact(g, budget) {
        ChromaticOutcome::Determined {
            chi, witness, nodes, ..
        } => {
            if chi != want || !witness.is_proper(g) {
                failures.push(format!("exact chi = {chi}, expected ceil(log2 {m}) = {want}"));
            }
            format!("chi = {chi} = ceil(log2 {m}) ({nodes} search nodes)")
        }
        ChromaticOutcome::Inconclusive { lower_bound, nodes, .. } => {
            failures.push(format!(
                "inconclusive after {nodes} nodes (chi >= {lower_bound})"
            ));
            String::new()
        }
    };
    CheckResult::from_failures(NAME, summary, failures)
}

fn check_conformance(f: &CurveFamily) -> CheckResult {
    const NAME: &str = "construction_conformance";
    let fresh = match f.regenerate() {
        Ok(fresh) => fresh,
        Err(e) => return CheckResult::from_failures(NAME, String::new(), vec![e.to_string()]),
    };
    let mut failures = Vec::new();
    if fresh.curves.len() != f.curves.len() {
        failures.push(format!(
            "{} curves, parameters generate {}",
            f.curves.len(),
            fresh.curves.len()
        ));
    }
    for (got, want) in f.curves.iter().zip(&fresh.curves) {
        if got.pair() != want.pair() || got.tags() != want.tags() {
            failures.push(format!("{} labeled or tagged differently from {}", got.pair(), want.pair()));
            continue;
        }
        for (idx, (p, q)) in got.vertices().iter().zip(want.vertices()).enumerate() {
            if p != q {
                failures.push(format!("{} vertex {}: {} instead of {}", got.pair(), idx, p, q));
            }
        }
        if got.vertices().len() != want.vertices().len() {
            failures.push(format!("{} has {} vertices", got.pair(), got.vertices().len()));
        }
    }
    CheckResult::from_failures(NAME, "coordinates match the declared construction".into(), failures)
}
