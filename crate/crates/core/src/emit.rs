//! CSV, SVG and JSON writers. Output is a pure function of the input values.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::Serialize;

use crate::config::Kind;
use crate::series::{PatternSeries, COLUMNS};

/// Writes `#`-prefixed metadata lines, a header row, then one row per sample.
/// Numbers use 17 significant digits in scientific notation.
pub fn write_csv<W: Write>(series: &PatternSeries, mut out: W) -> io::Result<()> {
    for (key, value) in series.metadata.csv_fields() {
        writeln!(out, "# {key}: {value}")?;
    }
    writeln!(out, "{}", COLUMNS.join(","))?;
    for r in &series.rows {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.y, r.intensity_factor, r.visibility, r.predictability, r.phase, r.duality_residual
        )?;
    }
    Ok(())
}

pub fn csv_string(series: &PatternSeries) -> String {
    let mut buf = Vec::new();
    write_csv(series, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv output is ASCII")
}

/// Reads back the `# key: value` header lines.
pub fn parse_csv_metadata(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map_while(|line| line.strip_prefix("# "))
        .filter_map(|line| line.split_once(": "))
        .map(|(k, v)| (k.to_owned(), v.to_owned()))
        .collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlotKind {
    /// Intensity factor against phase in units of 2π, with `1 ± K/e` guides and a `ν` marker.
    #[default]
    Fringes,
    /// `P²` and `V²` against the abscissa (against `cos θ` for Mott scattering).
    Duality,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - TOP - BOTTOM)
    }

    fn polyline(&self, out: &mut String, points: &[(f64, f64)], colour: &str) {
        out.push_str("<polyline fill=\"none\" stroke=\"");
        out.push_str(colour);
        out.push_str("\" stroke-width=\"1.5\" points=\"");
        for (i, &(x, y)) in points.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.2},{:.2}", self.px(x), self.py(y));
        }
        out.push_str("\"/>\n");
    }

    fn hline(&self, out: &mut String, y: f64) {
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>",
            self.px(self.x_min),
            self.py(y),
            self.px(self.x_max),
            self.py(y)
        );
    }

    fn vline(&self, out: &mut String, x: f64, colour: &str) {
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{colour}\" stroke-width=\"2\"/>",
            self.px(x),
            self.py(self.y_min),
            self.px(x),
            self.py(self.y_max)
        );
    }

    fn axes(&self, out: &mut String, x_label: &str, y_label: &str) {
        let _ = writeln!(
            out,
            "<rect x=\"{LEFT}\" y=\"{TOP}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>",
            WIDTH - LEFT - RIGHT,
            HEIGHT - TOP - BOTTOM
        );
        for i in 0..=4 {
            let fx = self.x_min + (self.x_max - self.x_min) * f64::from(i) / 4.0;
            let fy = self.y_min + (self.y_max - self.y_min) * f64::from(i) / 4.0;
            let _ = writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
                self.px(fx),
                HEIGHT - BOTTOM + 18.0,
                tick(fx)
            );
            let _ = writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{}</text>",
                LEFT - 6.0,
                self.py(fy) + 4.0,
                tick(fy)
            );
        }
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\">{x_label}</text>",
            0.5 * (LEFT + WIDTH - RIGHT),
            HEIGHT - 15.0
        );
        let _ = writeln!(
            out,
            "<text x=\"18\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">{y_label}</text>",
            0.5 * (TOP + HEIGHT - BOTTOM),
            0.5 * (TOP + HEIGHT - BOTTOM)
        );
    }
}

fn tick(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" width=\"{WIDTH}\" height=\"{HEIGHT}\">"
    );
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{title}</text>",
        0.5 * WIDTH
    );
}

pub fn render_svg(series: &PatternSeries, plot: PlotKind) -> String {
    let meta = &series.metadata;
    let mut out = String::new();
    match plot {
        PlotKind::Fringes => {
            let two_pi = 2.0 * std::f64::consts::PI;
            let points: Vec<(f64, f64)> = series
                .rows
                .iter()
                .map(|r| (r.phase / two_pi, r.intensity_factor))
                .collect();
            let (x_min, x_max) = extent(points.iter().map(|p| p.0));
            let frame = Frame {
                x_min,
                x_max,
                y_min: 0.0,
                y_max: 2.0,
            };
            let title = match meta.nu {
                Some(nu) => format!("{}: R = {:.4}, nu = {:.4}", meta.kind, meta.r, nu),
                None => format!("{}: R = 0, unbounded fringes", meta.kind),
            };
            header(&mut out, &title);
            frame.axes(&mut out, "phase / 2π (fringes)", "I / F");
            let guide = meta.k / std::f64::consts::E;
            frame.hline(&mut out, 1.0 - guide);
            frame.hline(&mut out, 1.0 + guide);
            frame.polyline(&mut out, &points, "#1f4e9c");
            if let Some(nu) = meta.nu {
                // ν counts one-sided fringes; mark both sides of a symmetric window
                for x in [nu, -nu] {
                    if x >= x_min && x <= x_max {
                        frame.vline(&mut out, x, "#c0392b");
                    }
                }
            }
        }
        PlotKind::Duality => {
            let abscissa = |y: f64| match meta.kind {
                // cos θ = -tanh(x/2) for x = ln tan²(θ/2)
                Kind::Mott => -(0.5 * y).tanh(),
                _ => y,
            };
            let p2: Vec<(f64, f64)> = series
                .rows
                .iter()
                .map(|r| (abscissa(r.y), r.predictability * r.predictability))
                .collect();
            let v2: Vec<(f64, f64)> = series
                .rows
                .iter()
                .map(|r| (abscissa(r.y), r.visibility * r.visibility))
                .collect();
            let (x_min, x_max) = extent(p2.iter().map(|p| p.0));
            let frame = Frame {
                x_min,
                x_max,
                y_min: 0.0,
                y_max: 1.0,
            };
            header(&mut out, &format!("{}: P² (red) and V² (blue)", meta.kind));
            let x_label = if meta.kind == Kind::Mott { "cos θ" } else { "y" };
            frame.axes(&mut out, x_label, "P², V²");
            frame.polyline(&mut out, &p2, "#c0392b");
            frame.polyline(&mut out, &v2, "#1f4e9c");
        }
    }
    out.push_str("</svg>\n");
    out
}

fn extent(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, lo + 0.5)
    }
}
