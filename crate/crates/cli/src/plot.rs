//! CSV and SVG renderings of `M ∩ window` in dimension 2.

use std::fmt::Write;

use monocone::monoid::{atoms, MonoidSpec, Window};

use crate::error::{CliError, CliResult, ErrorCode};

/// `(x, y, atom)` for every member of the window, in lex order.
pub fn plot_points(m: &MonoidSpec, w: &Window) -> CliResult<Vec<(i64, i64, bool)>> {
    if m.dim() != 2 {
        return Err(CliError::new(ErrorCode::UnsupportedForKind, "plots need a monoid in dimension 2"));
    }
    let table = m.member_table(&w.bounds);
    let report = atoms(m, w);
    let mut out = Vec::new();
    for p in table.points() {
        if *table.get(&p).unwrap() {
            out.push((p[0], p[1], report.atoms.binary_search(&p).is_ok()));
        }
    }
    Ok(out)
}

pub fn to_csv(points: &[(i64, i64, bool)]) -> String {
    let mut s = String::from("x,y,atom_flag\n");
    for (x, y, a) in points {
        writeln!(s, "{x},{y},{}", u8::from(*a)).unwrap();
    }
    s
}

const CANVAS: i64 = 640;
const MARGIN: i64 = 40;

/// Fixed 640×640 canvas; atoms are filled light-blue discs, other members
/// hollow grey rings.
pub fn to_svg(points: &[(i64, i64, bool)], w: &Window) -> String {
    let span = CANVAS - 2 * MARGIN;
    let cx = span / w.bounds[0].max(1);
    let cy = span / w.bounds[1].max(1);
    let px = |x: i64| MARGIN + x * cx;
    let py = |y: i64| CANVAS - MARGIN - y * cy;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    writeln!(s, r##"<rect width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>"##).unwrap();
    writeln!(s, r##"<g stroke="#e0e0e0" stroke-width="1">"##).unwrap();
    for x in 0..=w.bounds[0] {
        writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(0), py(w.bounds[1])).unwrap();
    }
    for y in 0..=w.bounds[1] {
        writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(0), px(w.bounds[0])).unwrap();
    }
    s.push_str("</g>\n");
    writeln!(s, r##"<g stroke="#000000" stroke-width="2"><line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/><line x1="{0}" y1="{1}" x2="{0}" y2="{3}"/></g>"##, px(0), py(0), px(w.bounds[0]), py(w.bounds[1])).unwrap();
    for (x, y, atom) in points {
        if *atom {
            writeln!(
                s,
                r##"<circle class="atom" cx="{}" cy="{}" r="4" fill="#6cb4ee" stroke="#1f5f99" stroke-width="1"/>"##,
                px(*x),
                py(*y)
            )
            .unwrap();
        } else {
            writeln!(
                s,
                r##"<circle class="member" cx="{}" cy="{}" r="3" fill="none" stroke="#555555" stroke-width="1"/>"##,
                px(*x),
                py(*y)
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}
