//! Lorenz curve and Gini coefficient of a set of centrality values.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Empirical Lorenz curve: knots `(k/m, L(k/m))`, linear in between.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    pub sorted_values: Vec<f64>,
    /// `m + 1` knots from `(0, 0)` to `(1, 1)`.
    pub knots: Vec<(f64, f64)>,
    pub gini: f64,
}

fn sorted_checked(values: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::invalid("no values"));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
        return Err(Error::invalid(format!(
            "values must be finite and nonnegative, got {bad}"
        )));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted[sorted.len() - 1] == 0.0 {
        return Err(Error::invalid("all values are zero"));
    }
    Ok(sorted)
}

/// `sum_i sum_j |x_i - x_j| / (2 m^2 mean)`, via the sorted-gap identity
/// `sum_{i<j} (x_(j) - x_(i)) = sum_k k (m - k) (x_(k+1) - x_(k))`.
/// Every term is nonnegative and equal inputs give exactly zero.
fn gini_sorted(sorted: &[f64]) -> f64 {
    let m = sorted.len();
    let total: f64 = sorted.iter().sum();
    let gaps: f64 = sorted
        .windows(2)
        .enumerate()
        .map(|(k, w)| ((k + 1) * (m - k - 1)) as f64 * (w[1] - w[0]))
        .sum();
    gaps / (m as f64 * total)
}

pub fn lorenz(values: &[f64]) -> Result<LorenzCurve> {
    let sorted = sorted_checked(values)?;
    let m = sorted.len();
    let total: f64 = sorted.iter().sum();
    let mut knots = Vec::with_capacity(m + 1);
    knots.push((0.0, 0.0));
    let mut acc = 0.0;
    for (k, x) in sorted.iter().enumerate() {
        acc += x;
        let p = (k + 1) as f64 / m as f64;
        knots.push((p, if k + 1 == m { 1.0 } else { acc / total }));
    }
    let gini = gini_sorted(&sorted);
    Ok(LorenzCurve {
        sorted_values: sorted,
        knots,
        gini,
    })
}

pub fn gini(values: &[f64]) -> Result<f64> {
    Ok(gini_sorted(&sorted_checked(values)?))
}

impl LorenzCurve {
    /// `L(p)` by linear interpolation between knots; `p` is clamped to `[0, 1]`.
    pub fn eval(&self, p: f64) -> f64 {
        let p = p.clamp(0.0, 1.0);
        let m = self.sorted_values.len();
        let pos = p * m as f64;
        let k = (pos.floor() as usize).min(m - 1);
        let (p0, l0) = self.knots[k];
        let (p1, l1) = self.knots[k + 1];
        l0 + (l1 - l0) * (p - p0) / (p1 - p0)
    }

    /// Twice the area between the diagonal and the curve (trapezoid rule,
    /// exact for the piecewise-linear curve).
    pub fn gini_from_area(&self) -> f64 {
        let area: f64 = self
            .knots
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
            .sum();
        2.0 * (0.5 - area)
    }

    /// Knots as TSV (`p`, `L`) followed by a `# gini` comment line.
    pub fn to_tsv(&self, decimals: Option<usize>) -> String {
        let fmt = |x: f64| match decimals {
            Some(dp) => format!("{x:.dp$}"),
            None => format!("{x}"),
        };
        let mut out = String::from("p\tL\n");
        for &(p, l) in &self.knots {
            let _ = writeln!(out, "{}\t{}", fmt(p), fmt(l));
        }
        let _ = writeln!(out, "# gini\t{}", fmt(self.gini));
        out
    }

    /// Square SVG plot: diagonal, curve, and the shaded gap between them.
    pub fn to_svg(&self) -> String {
        const SIZE: f64 = 400.0;
        const PAD: f64 = 40.0;
        let span = SIZE - 2.0 * PAD;
        let x = |p: f64| PAD + p * span;
        let y = |l: f64| SIZE - PAD - l * span;
        let curve: Vec<String> = self
            .knots
            .iter()
            .map(|&(p, l)| format!("{:.2},{:.2}", x(p), y(l)))
            .collect();
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            out,
            r##"<polygon points="{} {:.2},{:.2}" fill="#c6dbef" stroke="none"/>"##,
            curve.join(" "),
            x(0.0),
            y(0.0)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="4 3"/>"#,
            x(0.0),
            y(0.0),
            x(1.0),
            y(1.0)
        );
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            curve.join(" ")
        );
        let _ = writeln!(
            out,
            r#"<rect x="{PAD}" y="{PAD}" width="{span}" height="{span}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">Gini = {:.4}</text>"#,
            PAD + 8.0,
            PAD + 16.0,
            self.gini
        );
        out.push_str("</svg>\n");
        out
    }
}
