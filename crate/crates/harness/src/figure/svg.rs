//! A small exact-to-SVG canvas. Geometry stays rational until the final
//! coordinate formatting, which is the only rounding step.

use std::fmt::Write;

use num_traits::{Signed, ToPrimitive, Zero};
use trigroup::kernel::{int, rat, HomLine, HomPoint, Scalar};

pub const SIZE: i64 = 800;
const PAD: i64 = 40;
const ARROW: i64 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Base,
    Second,
    Result,
    Aux,
}

impl Style {
    fn stroke(self) -> &'static str {
        match self {
            Style::Base => "#1f4e9c",
            Style::Second => "#2e7d32",
            Style::Result => "#c62828",
            Style::Aux => "#777777",
        }
    }

    fn dash(self) -> &'static str {
        if self == Style::Aux {
            r#" stroke-dasharray="6 4""#
        } else {
            ""
        }
    }
}

enum Item {
    Point { p: HomPoint, label: String, style: Style },
    Line { l: HomLine, label: String, style: Style },
    Segment { a: HomPoint, b: HomPoint, style: Style },
    Path { pts: Vec<HomPoint>, style: Style },
}

/// Figure under construction. Incidences registered with [`Canvas::incident`]
/// are checked exactly when the figure is rendered.
pub struct Canvas {
    title: String,
    items: Vec<Item>,
    incidences: Vec<(String, HomPoint, String, HomLine)>,
    pub warnings: Vec<String>,
}

struct View {
    xmin: Scalar,
    ymin: Scalar,
    xmax: Scalar,
    ymax: Scalar,
    scale: Scalar,
}

fn fmt(x: &Scalar) -> String {
    let s = format!("{:.2}", x.to_f64().unwrap_or(f64::NAN));
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl View {
    fn screen(&self, x: &Scalar, y: &Scalar) -> (Scalar, Scalar) {
        (int(PAD) + (x - &self.xmin) * &self.scale, int(SIZE - PAD) - (y - &self.ymin) * &self.scale)
    }

    /// Endpoints of the visible part of `ux + vy + w = 0`.
    fn clip(&self, l: &HomLine) -> Option<((Scalar, Scalar), (Scalar, Scalar))> {
        let [u, v, w] = l.scalars();
        if u.is_zero() && v.is_zero() {
            return None;
        }
        let mut hits: Vec<(Scalar, Scalar)> = Vec::new();
        let mut push = |p: (Scalar, Scalar)| {
            if !hits.contains(&p) {
                hits.push(p);
            }
        };
        if !v.is_zero() {
            for x in [&self.xmin, &self.xmax] {
                let y = -(&u * x + &w) / &v;
                if y >= self.ymin && y <= self.ymax {
                    push((x.clone(), y));
                }
            }
        }
        if !u.is_zero() {
            for y in [&self.ymin, &self.ymax] {
                let x = -(&v * y + &w) / &u;
                if x >= self.xmin && x <= self.xmax {
                    push((x, y.clone()));
                }
            }
        }
        hits.sort();
        match (hits.first(), hits.last()) {
            (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
            _ => None,
        }
    }
}

impl Canvas {
    pub fn new(title: &str) -> Self {
        Self { title: title.into(), items: Vec::new(), incidences: Vec::new(), warnings: Vec::new() }
    }

    pub fn point(&mut self, p: &HomPoint, label: &str, style: Style) {
        self.items.push(Item::Point { p: p.clone(), label: label.into(), style });
    }

    pub fn line(&mut self, l: &HomLine, label: &str, style: Style) {
        self.items.push(Item::Line { l: l.clone(), label: label.into(), style });
    }

    pub fn segment(&mut self, a: &HomPoint, b: &HomPoint, style: Style) {
        self.items.push(Item::Segment { a: a.clone(), b: b.clone(), style });
    }

    pub fn triangle(&mut self, t: &[HomPoint; 3], names: &str, style: Style) {
        for k in 0..3 {
            self.segment(&t[k], &t[(k + 1) % 3], style);
        }
        for (k, p) in t.iter().enumerate() {
            self.point(p, &format!("{names}{}", k + 1), style);
        }
    }

    pub fn path(&mut self, pts: Vec<HomPoint>, style: Style) {
        self.items.push(Item::Path { pts, style });
    }

    pub fn incident(&mut self, point: &str, p: &HomPoint, line: &str, l: &HomLine) {
        self.incidences.push((point.into(), p.clone(), line.into(), l.clone()));
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    fn view(&self) -> View {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let mut take = |p: &HomPoint| {
            if let Some((x, y)) = p.to_affine() {
                xs.push(x);
                ys.push(y);
            }
        };
        for item in &self.items {
            match item {
                Item::Point { p, .. } => take(p),
                Item::Segment { a, b, .. } => {
                    take(a);
                    take(b);
                }
                Item::Path { pts, .. } => pts.iter().for_each(&mut take),
                Item::Line { .. } => {}
            }
        }
        let lo = |v: &[Scalar]| v.iter().min().cloned().unwrap_or_else(|| int(-1));
        let hi = |v: &[Scalar]| v.iter().max().cloned().unwrap_or_else(|| int(1));
        let (mut xmin, mut xmax, mut ymin, mut ymax) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
        // Square window with a tenth of margin on every side.
        let span = std::cmp::max(&xmax - &xmin, &ymax - &ymin).max(int(1));
        let cx = (&xmin + &xmax) / int(2);
        let cy = (&ymin + &ymax) / int(2);
        let half = span * rat(6, 10);
        xmin = &cx - &half;
        xmax = &cx + &half;
        ymin = &cy - &half;
        ymax = &cy + &half;
        let scale = int(SIZE - 2 * PAD) / (&xmax - &xmin);
        View { xmin, ymin, xmax, ymax, scale }
    }

    /// Boundary point of the drawing area in the direction of an infinite
    /// point, with the start of an arrow pointing at it.
    fn arrow(&self, p: &HomPoint) -> ((Scalar, Scalar), (Scalar, Scalar)) {
        let [dx, dy, _] = p.scalars();
        // Screen y grows downward.
        let (dx, dy) = (dx, -dy);
        let c = int(SIZE / 2);
        let reach = int(SIZE / 2 - PAD / 2);
        let mut t: Option<Scalar> = None;
        for d in [&dx, &dy] {
            if !d.is_zero() {
                let cand = &reach / d.abs();
                t = Some(t.map_or(cand.clone(), |t| t.min(cand)));
            }
        }
        let t = t.expect("nonzero direction");
        let end = (&c + &dx * &t, &c + &dy * &t);
        let norm = dx.abs().max(dy.abs());
        let back = int(ARROW) / norm;
        let start = (&end.0 - &dx * &back, &end.1 - &dy * &back);
        (start, end)
    }

    pub fn render(mut self) -> (String, Vec<String>) {
        for (pl, p, ll, l) in &self.incidences {
            if !l.contains(p) {
                self.warnings.push(format!("{pl} does not lie on {ll}"));
            }
        }
        let view = self.view();
        let mut out = String::new();
        let n = SIZE;
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{n}" height="{n}" viewBox="0 0 {n} {n}">"#
        )
        .unwrap();
        writeln!(out, "<title>{}</title>", escape(&self.title)).unwrap();
        writeln!(
            out,
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker></defs>"#
        )
        .unwrap();
        writeln!(out, r#"<rect width="{n}" height="{n}" fill="white"/>"#).unwrap();
        let mut labels = String::new();
        for item in &self.items {
            match item {
                Item::Line { l, label, style } => {
                    if let Some((a, b)) = view.clip(l) {
                        let (ax, ay) = view.screen(&a.0, &a.1);
                        let (bx, by) = view.screen(&b.0, &b.1);
                        writeln!(
                            out,
                            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1"{}/>"#,
                            fmt(&ax), fmt(&ay), fmt(&bx), fmt(&by), style.stroke(), style.dash()
                        )
                        .unwrap();
                        if !label.is_empty() {
                            let (lx, ly) = (&ax * rat(9, 10) + &bx * rat(1, 10), &ay * rat(9, 10) + &by * rat(1, 10));
                            writeln!(
                                labels,
                                r#"<text x="{}" y="{}" font-size="12" font-style="italic" fill="{}">{}</text>"#,
                                fmt(&lx), fmt(&(ly - int(4))), style.stroke(), escape(label)
                            )
                            .unwrap();
                        }
                    }
                }
                Item::Segment { a, b, style } => match (a.to_affine(), b.to_affine()) {
                    (Some((ax, ay)), Some((bx, by))) => {
                        let (ax, ay) = view.screen(&ax, &ay);
                        let (bx, by) = view.screen(&bx, &by);
                        writeln!(
                            out,
                            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="2"/>"#,
                            fmt(&ax), fmt(&ay), fmt(&bx), fmt(&by), style.stroke()
                        )
                        .unwrap();
                    }
                    _ => {}
                },
                Item::Path { pts, style } => {
                    let coords: Vec<String> = pts
                        .iter()
                        .filter_map(HomPoint::to_affine)
                        .map(|(x, y)| {
                            let (sx, sy) = view.screen(&x, &y);
                            format!("{},{}", fmt(&sx), fmt(&sy))
                        })
                        .collect();
                    writeln!(
                        out,
                        r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
                        coords.join(" "),
                        style.stroke()
                    )
                    .unwrap();
                }
                Item::Point { p, label, style } => {
                    if let Some((x, y)) = p.to_affine() {
                        let (sx, sy) = view.screen(&x, &y);
                        writeln!(out, r#"<circle cx="{}" cy="{}" r="3.5" fill="{}"/>"#, fmt(&sx), fmt(&sy), style.stroke())
                            .unwrap();
                        writeln!(
                            labels,
                            r#"<text x="{}" y="{}" font-size="14" fill="{}">{}</text>"#,
                            fmt(&(sx + int(6))), fmt(&(sy - int(6))), style.stroke(), escape(label)
                        )
                        .unwrap();
                    } else {
                        let ((x1, y1), (x2, y2)) = self.arrow(p);
                        writeln!(
                            out,
                            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="2" marker-end="url(#arrow)"/>"#,
                            fmt(&x1), fmt(&y1), fmt(&x2), fmt(&y2), style.stroke()
                        )
                        .unwrap();
                        writeln!(
                            labels,
                            r#"<text x="{}" y="{}" font-size="14" fill="{}">{} (∞)</text>"#,
                            fmt(&x1), fmt(&(y1 - int(6))), style.stroke(), escape(label)
                        )
                        .unwrap();
                    }
                }
            }
        }
        out.push_str(&labels);
        for (i, w) in self.warnings.iter().enumerate() {
            writeln!(
                out,
                r##"<text x="{}" y="{}" font-size="14" font-weight="bold" fill="#d00000">warning: {}</text>"##,
                PAD / 2,
                PAD / 2 + 18 * (i as i64 + 1),
                escape(w)
            )
            .unwrap();
        }
        out.push_str("</svg>\n");
        (out, self.warnings)
    }
}
