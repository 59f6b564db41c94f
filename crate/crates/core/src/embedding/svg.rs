use std::fmt::Write as _;

use super::Embedding;
use crate::error::Result;
use crate::profile::Profile;

/// Draws voters as labelled squares (`v1..vn`) and alternatives as labelled
/// circles (`a1..am`). The view box fits all points with 10% padding and the
/// y axis points up. Output is a pure function of the inputs.
pub fn render_svg(p: &Profile, e: &Embedding) -> Result<String> {
    e.check_dimensions(p)?;
    let all = e.voters.iter().chain(&e.alternatives);
    let (mut min_x, mut max_x, mut min_y, mut max_y) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for pt in all {
        min_x = min_x.min(pt.x);
        max_x = max_x.max(pt.x);
        min_y = min_y.min(pt.y);
        max_y = max_y.max(pt.y);
    }
    let extent = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let pad = 0.1 * extent;
    let (vx, vy) = (min_x - pad, -max_y - pad);
    let (vw, vh) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let size = 0.02 * extent;
    let font = 0.04 * extent;
    let stroke = 0.004 * extent;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}" width="600" height="{:.0}">"#,
        600.0 * vh / vw
    );
    let _ = writeln!(
        s,
        r#"<g font-family="sans-serif" font-size="{font:.6}" stroke-width="{stroke:.6}">"#
    );
    for (i, a) in e.alternatives.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"<circle class="alternative" cx="{:.6}" cy="{:.6}" r="{size:.6}" fill="#4878d0" stroke="black"/><text x="{:.6}" y="{:.6}">a{}</text>"##,
            a.x,
            -a.y,
            a.x + 1.5 * size,
            -a.y - 1.5 * size,
            i + 1
        );
    }
    for (i, v) in e.voters.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"<rect class="voter" x="{:.6}" y="{:.6}" width="{:.6}" height="{:.6}" fill="#d65f5f" stroke="black"/><text x="{:.6}" y="{:.6}">v{}</text>"##,
            v.x - size,
            -v.y - size,
            2.0 * size,
            2.0 * size,
            v.x + 1.5 * size,
            -v.y + 2.5 * size,
            i + 1
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}
