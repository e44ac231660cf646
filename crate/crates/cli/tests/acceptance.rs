//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Every check is exact; the only numeric thresholds are the wall-clock budgets.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use disjoint_curves::constructions::{default_stretch_base, stretch_power};
use disjoint_curves::geometry::int;
use disjoint_curves::io::{parse_family, serialize_family};
use disjoint_curves::shift_graph::{ceil_log2, lex_pairs, pair_count, Refutation};
use disjoint_curves::verification::{CheckStatus, OracleVerdict};
use disjoint_curves::{
    build_shift_graph, chromatic_number_exact, combinatorial_oracle, curve_pair_intersections,
    disjointness_graph, formula_coloring, four_segment_family, is_triangle_free, seg_intersect,
    tangency_profile, three_segment_family, touching_line, verify_family, ChromaticOutcome,
    CurveFamily, ParamProfile, Point, PolylineCurve, Rational, Tangency, VerifyOptions,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<String, String>;

const FOUR_SEGMENT_MS: std::ops::RangeInclusive<usize> = 2..=12;
const THREE_SEGMENT_MS: std::ops::RangeInclusive<usize> = 2..=10;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("{what} took {spent:?}, budget {budget:?}"))
}

fn require_checks(
    fam: &CurveFamily,
    opts: &VerifyOptions,
    names: &[&str],
) -> Result<(), String> {
    let report = verify_family(fam, opts);
    for name in names {
        let check = report
            .check(name)
            .ok_or_else(|| format!("m={} missing check {name}", fam.m))?;
        ensure(check.status == CheckStatus::Pass, || {
            format!("m={} {name}: {:?} {} {:?}", fam.m, check.status, check.summary, check.counterexamples)
        })?;
    }
    ensure(report.pass, || format!("m={} report failed:\n{report}", fam.m))
}

fn ac1_four_segment_realization() -> Result<String, String> {
    let start = Instant::now();
    for m in FOUR_SEGMENT_MS {
        let fam = four_segment_family(m, &ParamProfile::canonical(m)).map_err(|e| e.to_string())?;
        require_checks(
            &fam,
            &VerifyOptions::default(),
            &[
                "segment_count",
                "graph_identity",
                "at_most_one_point",
                "exact_point_counts",
                "part_pattern",
            ],
        )?;
    }
    within(start, Duration::from_secs(60), "four-segment m=2..12")?;
    Ok(format!("m=2..12 all checks pass in {:?}", start.elapsed()))
}

/// The six drawn polylines of the `H_4` illustration, in lex order.
const FIGURE_PATHS: [&str; 6] = [
    "(-0.2,0.5)--(-0.2,0)--(4.2,0)--(0,4.2)--(0,0.9)",
    "(-0.4,0.9)--(-0.4,0.2)--(3.7,0.2)--(0.2,3.7)--(0.2,1.1)",
    "(-0.6,1.1)--(-0.6,0.4)--(3.2,0.4)--(0.4,3.2)--(0.4,1.1)",
    "(-0.8,0.9)--(-0.8,0.6)--(2.7,0.6)--(0.6,2.7)--(0.6,1.1)",
    "(-1,1.1)--(-1,0.8)--(2.2,0.8)--(0.8,2.2)--(0.8,1.1)",
    "(-1.2,1.1)--(-1.2,1)--(1.7,1)--(1,1.7)--(1,1.1)",
];

fn decimal(s: &str) -> Rational {
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int_part}{frac}").parse().unwrap();
    Rational::new(digits, BigInt::from(10).pow(frac.len() as u32))
}

fn parse_path(path: &str) -> Vec<Point> {
    path.split("--")
        .map(|p| {
            let (x, y) = p.trim_matches(|c| c == '(' || c == ')').split_once(',').unwrap();
            Point::new(decimal(x), decimal(y))
        })
        .collect()
}

fn ac2_figure_reproduction() -> Result<String, String> {
    let fam = four_segment_family(4, &ParamProfile::figure()).map_err(|e| e.to_string())?;
    ensure(fam.curves.len() == 6, || "expected 6 curves".into())?;
    let mut compared = 0;
    for (curve, path) in fam.curves.iter().zip(FIGURE_PATHS) {
        let want = parse_path(path);
        ensure(curve.vertices() == want.as_slice(), || {
            format!("{}: got {:?}, drawn {:?}", curve.pair(), curve.vertices(), want)
        })?;
        compared += want.len();
    }
    ensure(compared == 30, || format!("compared {compared} vertices"))?;
    let opts = VerifyOptions {
        chromatic: true,
        ..VerifyOptions::default()
    };
    let report = verify_family(&fam, &opts);
    ensure(report.pass, || report.to_string())?;
    ensure(report.checks.iter().all(|c| c.status == CheckStatus::Pass), || {
        format!("some check skipped:\n{report}")
    })?;
    Ok("30/30 vertices equal the drawing; full verification passes".into())
}

fn ac3_three_segment_realization() -> Result<String, String> {
    let start = Instant::now();
    for m in THREE_SEGMENT_MS {
        let fam = three_segment_family(m, None).map_err(|e| e.to_string())?;
        let k = fam.stretch_base().cloned().ok_or("no stretch base")?;
        let n = pair_count(m) as u64;
        ensure(k == BigInt::from(12 * n * n + 1) && k == default_stretch_base(m), || {
            format!("m={m}: K={k}")
        })?;
        for (idx, c) in fam.curves.iter().enumerate() {
            ensure(c.segment_count() == 3, || format!("{} has {} segments", c.pair(), c.segment_count()))?;
            let left = &c.vertices()[0].x;
            ensure(*left == Rational::from_integer(-stretch_power(&k, idx + 1)), || {
                format!("{}: left endpoint {left} is not -K^{}", c.pair(), idx + 1)
            })?;
        }
        require_checks(
            &fam,
            &VerifyOptions::default(),
            &["segment_count", "graph_identity", "at_most_one_point", "exact_point_counts", "part_pattern"],
        )?;
    }
    within(start, Duration::from_secs(300), "three-segment m=2..10")?;
    Ok(format!("m=2..10 pass in {:?}", start.elapsed()))
}

fn ac4_touching_line() -> Result<String, String> {
    let mut families = Vec::new();
    for m in FOUR_SEGMENT_MS {
        families.push(ParamProfile::canonical(m));
    }
    let mut checked = 0;
    for (m, profile) in FOUR_SEGMENT_MS.zip(families).chain([(4, ParamProfile::figure())]) {
        let fam = four_segment_family(m, &profile).map_err(|e| e.to_string())?;
        let line = touching_line(&profile).map_err(|e| e.to_string())?;
        ensure(line == disjoint_curves::Line::new(int(1), int(1), profile.beta.clone()).unwrap(), || {
            format!("line {line} is not x + y + beta = 0")
        })?;
        let mut touches = std::collections::BTreeSet::new();
        for (idx, c) in fam.curves.iter().enumerate() {
            let r = int(idx as i64 + 1);
            let corner = Point::new(-(&profile.alpha * &r), &profile.beta * (&r - int(1)));
            match tangency_profile(c, &line) {
                Tangency::Touches(points) if points == vec![corner.clone()] => {
                    touches.insert(corner);
                }
                other => return Err(format!("m={m} {}: {other:?}", c.pair())),
            }
        }
        ensure(touches.len() == fam.curves.len(), || format!("m={m}: touch points not distinct"))?;
        checked += 1;
    }
    Ok(format!("{checked} families touch x+y+beta=0 once per curve at the A-B corners"))
}

fn ac5_chromatic_formula() -> Result<String, String> {
    let start = Instant::now();
    let expected = [1, 2, 2, 3, 3, 3, 3, 4, 4];
    for (m, &want) in (2..=10).zip(&expected) {
        ensure(ceil_log2(m) == want, || format!("ceil_log2({m})"))?;
        let g = build_shift_graph(m).map_err(|e| e.to_string())?;
        match chromatic_number_exact(&g.graph, 50_000_000) {
            ChromaticOutcome::Determined {
                chi,
                witness,
                refutation,
                ..
            } => {
                ensure(chi == want, || format!("m={m}: chi={chi}, want {want}"))?;
                ensure(witness.is_proper(&g.graph) && witness.color_count() == chi, || {
                    format!("m={m}: bad witness")
                })?;
                let refuted = match refutation {
                    Some(Refutation::NonEmpty) => chi == 1,
                    Some(Refutation::Edge(u, v)) => chi == 2 && g.graph.has_edge(u, v),
                    Some(Refutation::OddCycle(c)) => {
                        chi == 3
                            && c.len() % 2 == 1
                            && (0..c.len()).all(|w| g.graph.has_edge(c[w], c[(w + 1) % c.len()]))
                    }
                    Some(Refutation::Exhausted { k, .. }) => k == chi - 1,
                    None => false,
                };
                ensure(refuted, || format!("m={m}: no valid certificate for {} colors", chi - 1))?;
            }
            other => return Err(format!("m={m}: {other:?}")),
        }
    }
    for m in 2..=64 {
        let c = formula_coloring(m).map_err(|e| e.to_string())?;
        let g = build_shift_graph(m).map_err(|e| e.to_string())?;
        ensure(c.is_proper(&g.graph) && c.color_count() == ceil_log2(m), || {
            format!("bit coloring fails at m={m}")
        })?;
    }
    within(start, Duration::from_secs(120), "chromatic checks")?;
    Ok(format!("chi = 1,2,2,3,3,3,3,4,4 certified; bit coloring proper to m=64 ({:?})", start.elapsed()))
}

fn all_families() -> Result<Vec<CurveFamily>, String> {
    let mut out = Vec::new();
    for m in FOUR_SEGMENT_MS {
        out.push(four_segment_family(m, &ParamProfile::canonical(m)).map_err(|e| e.to_string())?);
    }
    out.push(four_segment_family(4, &ParamProfile::figure()).map_err(|e| e.to_string())?);
    for m in THREE_SEGMENT_MS {
        out.push(three_segment_family(m, None).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn ac6_triangle_free() -> Result<String, String> {
    for m in 2..=12 {
        let g = build_shift_graph(m).map_err(|e| e.to_string())?;
        ensure(is_triangle_free(&g.graph), || format!("H_{m} has a triangle"))?;
    }
    let families = all_families()?;
    for fam in &families {
        let g = disjointness_graph(&fam.curves).map_err(|e| e.to_string())?;
        ensure(is_triangle_free(&g.graph), || format!("{} m={} realized graph has a triangle", fam.kind, fam.m))?;
    }
    Ok(format!("H_2..H_12 and {} realized graphs are triangle-free", families.len()))
}

fn ac7_oracle_agreement() -> Result<String, String> {
    let mut pairs_checked = 0usize;
    for fam in all_families()? {
        let h = build_shift_graph(fam.m).map_err(|e| e.to_string())?;
        let labels = lex_pairs(fam.m);
        for a in 0..labels.len() {
            for b in a + 1..labels.len() {
                let (u, v) = (labels[a], labels[b]);
                let geometric = curve_pair_intersections(&fam.curves[a], &fam.curves[b]).is_disjoint();
                let rule = u.j() == v.i() || v.j() == u.i();
                let oracle = combinatorial_oracle(&u, &v).map_err(|e| e.to_string())? == OracleVerdict::Disjoint;
                ensure(geometric == rule && rule == oracle && h.graph.has_edge(a, b) == rule, || {
                    format!("{} m={} {u}x{v}: geometric={geometric} rule={rule} oracle={oracle}", fam.kind, fam.m)
                })?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!("{pairs_checked} pairs agree three ways"))
}

fn mutate(fam: &CurveFamily, curve: usize, vertex: usize, delta: &Rational) -> CurveFamily {
    let mut out = fam.clone();
    let c = &fam.curves[curve];
    let mut vs = c.vertices().to_vec();
    vs[vertex].y += delta;
    out.curves[curve] = PolylineCurve::new(c.pair(), vs, c.tags().to_vec()).expect("mutation stays non-degenerate");
    out
}

fn ac8_mutation_sensitivity() -> Result<String, String> {
    let m = 6;
    let profile = ParamProfile::canonical(m);
    let fam = four_segment_family(m, &profile).map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_dcurves");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;

    let pristine = dir.path().join("pristine.json");
    std::fs::write(&pristine, serialize_family(&fam)).map_err(|e| e.to_string())?;
    let status = Command::new(bin).args(["verify", "--in"]).arg(&pristine).output().map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(0), || "unmutated file does not verify".into())?;

    let mut rng = rand::rngs::StdRng::seed_from_u64(0xac8_0006);
    let samples = 40;
    let mut geometric = 0;
    for idx in 0..samples {
        let curve = rng.gen_range(0..fam.curves.len());
        let vertex = rng.gen_range(0..5);
        let delta = if rng.gen_bool(0.5) { profile.beta.clone() } else { -profile.beta.clone() };
        let mutated = mutate(&fam, curve, vertex, &delta);
        let path = dir.path().join(format!("mutant-{idx}.json"));
        std::fs::write(&path, serialize_family(&mutated)).map_err(|e| e.to_string())?;
        let out = Command::new(bin).args(["verify", "--in"]).arg(&path).output().map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(1), || {
            format!(
                "mutation curve {} vertex {vertex} dy={delta}: exit {:?}",
                fam.curves[curve].pair(),
                out.status.code()
            )
        })?;
        let geometric_only = VerifyOptions {
            conformance: false,
            ..VerifyOptions::default()
        };
        if !verify_family(&mutated, &geometric_only).pass {
            geometric += 1;
        }
    }
    Ok(format!(
        "{samples}/{samples} random one-beta mutations exit 1 ({geometric} caught by geometric checks alone)"
    ))
}

fn ac9_kernel_oracle() -> Result<String, String> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xac9_0001);
    let total = 100_000;
    let mut non_empty = 0;
    for _ in 0..total {
        let s1 = support::random_segment(&mut rng);
        let s2 = support::random_segment(&mut rng);
        let got = seg_intersect(&s1, &s2);
        let want = support::linear_system_intersection(&s1, &s2);
        ensure(got == want, || format!("{s1} vs {s2}: kernel {got:?}, oracle {want:?}"))?;
        if !got.is_empty() {
            non_empty += 1;
        }
    }
    Ok(format!("{total} random pairs agree ({non_empty} non-empty)"))
}

fn main() {
    let criteria: [(&str, &str, Check); 9] = [
        ("AC1", "four-segment realization m=2..12", ac1_four_segment_realization),
        ("AC2", "figure reproduction", ac2_figure_reproduction),
        ("AC3", "three-segment realization m=2..10", ac3_three_segment_realization),
        ("AC4", "touching line", ac4_touching_line),
        ("AC5", "chromatic formula", ac5_chromatic_formula),
        ("AC6", "triangle-freeness", ac6_triangle_free),
        ("AC7", "oracle triple agreement", ac7_oracle_agreement),
        ("AC8", "mutation sensitivity", ac8_mutation_sensitivity),
        ("AC9", "kernel oracle equivalence", ac9_kernel_oracle),
    ];
    // Round-trip sanity so file-based criteria are meaningful.
    let fam = four_segment_family(3, &ParamProfile::canonical(3)).unwrap();
    assert_eq!(parse_family(&serialize_family(&fam)).unwrap(), fam);

    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
