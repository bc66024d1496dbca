use std::fmt::Write as _;
use std::path::Path;

use super::LayoutConfiguration;
use crate::error::{Error, Result};

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 50.0;

/// Linear-interpolation sample quantile (`h = (m - 1) p`).
pub fn quantile(values: &[f64], p: f64) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let h = (sorted.len() - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG target plot.
///
/// Circles are drawn at `-ln q` for the 75%, 50%, 25% and 0% quantiles of the
/// centralities, so the innermost circle holds the top quarter and the
/// outermost passes through the least central vertex. The median is the
/// filled black marker at the canvas center; other vertices at radius zero
/// are nudged by a pixel so they stay visible.
pub fn render_target_plot(config: &LayoutConfiguration, centralities: &[f64], labels: &[&str]) -> String {
    let n = config.radii.len();
    let center = CANVAS / 2.0;
    let max_r = config.radii.iter().copied().fold(0.0, f64::max);
    let scale = if max_r > 0.0 { (center - MARGIN) / max_r } else { 1.0 };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    for p in [0.75, 0.5, 0.25, 0.0] {
        let q = quantile(centralities, p);
        let r = -q.ln() * scale;
        let _ = writeln!(
            out,
            r#"<circle class="quartile" cx="{center:.3}" cy="{center:.3}" r="{r:.3}" fill="none" stroke="gray" stroke-dasharray="3 3"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" fill="red" font-family="sans-serif" font-size="11">{q:.3}</text>"#,
            center + r + 2.0,
            center - 2.0
        );
    }

    let mut nudged = 0;
    for (i, [x, y]) in config.positions().into_iter().enumerate() {
        let mut px = center + x * scale;
        let py = center - y * scale;
        if i != config.median && config.radii[i] == 0.0 {
            nudged += 1;
            px += nudged as f64;
        }
        let fill = if i == config.median { "black" } else { "gray" };
        let _ = writeln!(
            out,
            r#"<circle class="vertex" cx="{px:.3}" cy="{py:.3}" r="4" fill="{fill}" stroke="black" stroke-width="0.5"><title>{}</title></circle>"#,
            escape(labels.get(i).copied().unwrap_or(""))
        );
    }
    debug_assert_eq!(labels.len(), n);
    let _ = writeln!(
        out,
        r#"<text x="10" y="{:.0}" font-family="sans-serif" font-size="11">stress = {:.4}</text>"#,
        CANVAS - 10.0,
        config.stress
    );
    out.push_str("</svg>\n");
    out
}

pub fn write_target_plot(
    config: &LayoutConfiguration,
    centralities: &[f64],
    labels: &[&str],
    path: &Path,
) -> Result<()> {
    std::fs::write(path, render_target_plot(config, centralities, labels)).map_err(|e| Error::io(path, e))
}
