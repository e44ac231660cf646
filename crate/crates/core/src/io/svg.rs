//! SVG drawing of a curve family, laid out like the `H_4` illustration.
//!
//! Floating point appears only here, after all exact work is done.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::constructions::{touching_line, CurveFamily, FamilyKind};
use crate::geometry::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum XCompression {
    #[default]
    None,
    /// `x -> sign(x) ln(1 + |x|)`; display only, not an isometry.
    SignedLog,
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub labels: bool,
    pub x_compression: XCompression,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800,
            height: 800,
            labels: true,
            x_compression: XCompression::None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Rendered {
    pub svg: String,
    pub warnings: Vec<String>,
}

/// Beyond this |x| an uncompressed 3-segment drawing is unreadable.
pub const HUGE_X: f64 = 1e6;

fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        let top: BigInt = n >> shift;
        top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

pub fn signed_log(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    let mag = x.abs();
    let value = match mag.to_f64() {
        Some(f) if f.is_finite() && f < 1e300 => f.ln_1p(),
        // ln(1 + |x|) = ln|x| to double precision at this size
        _ => ln_big(mag.numer()) - ln_big(mag.denom()),
    };
    sign * value
}

fn to_display_x(x: &Rational, mode: XCompression) -> f64 {
    match mode {
        XCompression::None => x.to_f64().unwrap_or(f64::NAN),
        XCompression::SignedLog => signed_log(x),
    }
}

fn to_display_y(y: &Rational) -> f64 {
    y.to_f64().unwrap_or(f64::NAN)
}

pub fn render_svg(f: &CurveFamily, opts: &RenderOptions) -> Rendered {
    let mut warnings = Vec::new();
    let max_abs_x = f
        .curves
        .iter()
        .flat_map(|c| c.vertices())
        .map(|p| p.x.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let huge = max_abs_x.to_f64().is_none_or(|v| v > HUGE_X);
    if f.kind == FamilyKind::ThreeSegment && opts.x_compression == XCompression::None && huge {
        warnings.push(format!(
            "|x| reaches about 10^{:.0}; rerun with --x-compress signed-log for a readable drawing",
            signed_log(&max_abs_x) / std::f64::consts::LN_10
        ));
    }

    let polylines: Vec<Vec<(f64, f64)>> = f
        .curves
        .iter()
        .map(|c| {
            c.vertices()
                .iter()
                .map(|p| (to_display_x(&p.x, opts.x_compression), to_display_y(&p.y)))
                .collect()
        })
        .collect();

    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in polylines.iter().flatten() {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let margin = 60.0;
    let w = opts.width as f64;
    let h = opts.height as f64;
    let scale_x = (w - 2.0 * margin) / (max_x - min_x).max(span * 1e-9);
    let scale_y = (h - 2.0 * margin) / (max_y - min_y).max(span * 1e-9);
    // Keep the aspect ratio unless the x-axis is already distorted.
    let (sx, sy) = match opts.x_compression {
        XCompression::None => {
            let s = scale_x.min(scale_y);
            (s, s)
        }
        XCompression::SignedLog => (scale_x, scale_y),
    };
    let px = |x: f64| margin + (x - min_x) * sx;
    let py = |y: f64| h - margin - (y - min_y) * sy;

    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}" data-x-compression="{}">"#,
        opts.width,
        opts.height,
        opts.width,
        opts.height,
        match opts.x_compression {
            XCompression::None => "none",
            XCompression::SignedLog => "signed-log",
        }
    )
    .unwrap();
    let meta = match opts.x_compression {
        XCompression::None => "x-compression: none (isometric up to uniform scale)".to_string(),
        XCompression::SignedLog => {
            "x-compression: signed-log x -> sign(x)*ln(1+|x|); NON-ISOMETRIC display transform, segments are drawn between transformed vertices".to_string()
        }
    };
    writeln!(
        svg,
        "  <metadata>m={} kind={} curves={}; {}</metadata>",
        f.m,
        f.kind,
        f.curves.len(),
        meta
    )
    .unwrap();
    writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();

    if let (FamilyKind::FourSegment, Some(profile)) = (f.kind, f.profile()) {
        if let Ok(line) = touching_line(profile) {
            if opts.x_compression == XCompression::None {
                let beta = profile.beta.to_f64().unwrap_or(0.0);
                // x + y = -beta across the drawing's x-range
                let (x0, x1) = (min_x, max_x);
                writeln!(
                    svg,
                    r#"  <line id="touching-line" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-dasharray="6 4" stroke-width="1"><title>{}</title></line>"#,
                    px(x0),
                    py(-beta - x0),
                    px(x1),
                    py(-beta - x1),
                    line
                )
                .unwrap();
            }
        }
    }

    for (c, pts) in f.curves.iter().zip(&polylines) {
        let pair = c.pair();
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
            .collect();
        writeln!(
            svg,
            r#"  <polyline id="c-{}-{}" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pair.i(),
            pair.j(),
            coords.join(" ")
        )
        .unwrap();
        if opts.labels {
            // Label at the A-B corner (4 segments) or the left end (3 segments).
            let anchor = match f.kind {
                FamilyKind::FourSegment => pts.get(1),
                FamilyKind::ThreeSegment => pts.first(),
            };
            if let Some(&(x, y)) = anchor {
                writeln!(
                    svg,
                    r#"  <text x="{:.3}" y="{:.3}" font-size="11" font-family="serif" text-anchor="end">{}</text>"#,
                    px(x) - 4.0,
                    py(y) + 4.0,
                    pair
                )
                .unwrap();
            }
        }
    }
    svg.push_str("</svg>\n");
    Rendered { svg, warnings }
}
