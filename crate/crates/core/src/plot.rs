//! Static SVG of a term set's membership trapezoids on `[0, 1]`.

use std::fmt::Write as _;

use crate::report::fmt_sig;
use crate::termset::TermSet;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn x_px(x: f64) -> f64 {
    MARGIN + x * (WIDTH - 2.0 * MARGIN)
}

fn y_px(mu: f64) -> f64 {
    HEIGHT - MARGIN - mu * (HEIGHT - 2.0 * MARGIN)
}

fn point(x: f64, mu: f64) -> String {
    format!("{},{}", fmt_sig(x_px(x)), fmt_sig(y_px(mu)))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// One polyline per term; crisp terms are drawn as vertical spikes.
pub fn termset_svg(ts: &TermSet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(
        out,
        "<title>Membership distributions of {}</title>",
        escape(ts.name())
    );
    let _ = writeln!(
        out,
        r##"<path d="M{} L{} L{}" fill="none" stroke="#444"/>"##,
        point(0.0, 1.0),
        point(0.0, 0.0),
        point(1.0, 0.0)
    );
    for k in 0..=10 {
        let x = k as f64 / 10.0;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt_sig(x_px(x)),
            fmt_sig(HEIGHT - MARGIN + 14.0),
            fmt_sig(x)
        );
    }
    for (i, term) in ts.terms().iter().enumerate() {
        let (a, b, alpha, beta) = term.semantics.get().tuple();
        let color = PALETTE[i % PALETTE.len()];
        let pts = [
            point(a - alpha, 0.0),
            point(a, 1.0),
            point(b, 1.0),
            point(b + beta, 0.0),
        ];
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"><title>{} {}</title></polyline>"#,
            pts.join(" "),
            escape(&term.label),
            term.semantics
        );
        let label_y = y_px(1.0) - 6.0 - 12.0 * (i % 3) as f64;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" fill="{color}">{}</text>"#,
            fmt_sig(x_px((a + b) / 2.0)),
            fmt_sig(label_y),
            escape(&term.label)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_polyline_per_term() {
        let ts = TermSet::builtin("L3").unwrap();
        let svg = termset_svg(&ts);
        assert_eq!(svg.matches("<polyline").count(), 13);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains(">very_high_chance</text>"));
        assert_eq!(svg, termset_svg(&ts));
    }
}
