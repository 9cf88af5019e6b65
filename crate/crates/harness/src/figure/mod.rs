//! The figure roster, rendered as deterministic SVG.

mod svg;

use clap::ValueEnum;
use serde::Serialize;

use trigroup::config::axis::main_construction_axis;
use trigroup::config::hexagon::{hexagon_triples, q_points};
use trigroup::config::scene::side;
use trigroup::config::{main_construction_central, pascal_line, AxisScene, CentralScene, Scene, SceneJson};
use trigroup::group::{central_half, presum_geometric, Frame, TriangleElement};
use trigroup::kernel::{cross_ratio, int, join, meet, rat, HomPoint, Scalar};

use crate::HarnessError;
use svg::{Canvas, Style};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FigureName {
    Fig1Desargues,
    Fig2Pascal,
    Fig3Dual,
    Fig4AxisInfinity,
    Fig5BoxplusZero,
    Fig6Degenerate,
    Fig7ABoxplusA,
}

impl FigureName {
    pub const ALL: [FigureName; 7] = [
        FigureName::Fig1Desargues,
        FigureName::Fig2Pascal,
        FigureName::Fig3Dual,
        FigureName::Fig4AxisInfinity,
        FigureName::Fig5BoxplusZero,
        FigureName::Fig6Degenerate,
        FigureName::Fig7ABoxplusA,
    ];

    pub fn name(self) -> String {
        self.to_possible_value().expect("named").get_name().to_string()
    }
}

/// A rendered figure. Non-empty `warnings` mean part of the construction
/// was undefined or an expected incidence failed; the SVG shows them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub svg: String,
    pub warnings: Vec<String>,
}

fn pt(x: i64, y: i64) -> HomPoint {
    HomPoint::affine_int(x, y)
}

fn ratpt(x: Scalar, y: Scalar) -> HomPoint {
    HomPoint::affine(x, y)
}

pub fn demo_central_scene() -> CentralScene {
    let s = pt(0, 0);
    let a = [pt(6, 1), pt(1, 6), pt(-5, -4)];
    let b = [pt(12, 2), ratpt(rat(3, 2), int(9)), ratpt(rat(-5, 2), int(-2))];
    CentralScene::new(s, a, b).expect("demo scene")
}

pub fn demo_axis_scene() -> AxisScene {
    // Perspective from (1, 1) with different ratios, hence from a line.
    let o = (int(1), int(1));
    let a = [pt(0, 4), pt(-4, -1), pt(5, 0)];
    let ratios = [rat(2, 1), rat(3, 2), rat(5, 2)];
    let b = [0, 1, 2].map(|i| {
        let (x, y) = a[i].to_affine().expect("finite");
        ratpt(&o.0 + &ratios[i] * (x - &o.0), &o.1 + &ratios[i] * (y - &o.1))
    });
    AxisScene::new(a, b).expect("demo axis scene")
}

fn central_from(scene: Option<&SceneJson>) -> Result<CentralScene, HarnessError> {
    match scene.map(SceneJson::to_scene).transpose()? {
        None => Ok(demo_central_scene()),
        Some(Scene::Central(s)) => Ok(s),
        Some(Scene::Axis(_)) => Err(HarnessError::Usage("this figure needs a central scene".into())),
    }
}

fn axis_from(scene: Option<&SceneJson>) -> Result<AxisScene, HarnessError> {
    match scene.map(SceneJson::to_scene).transpose()? {
        None => Ok(demo_axis_scene()),
        Some(Scene::Axis(s)) => Ok(s),
        Some(Scene::Central(_)) => Err(HarnessError::Usage("this figure needs an axis scene".into())),
    }
}

fn label(name: &str, idx: &[usize]) -> String {
    let digits: String = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{name}{digits}")
}

fn fig1(scene: &CentralScene) -> Canvas {
    let mut c = Canvas::new("Desargues theorem and its generalization");
    c.point(&scene.s, "S", Style::Aux);
    for i in 0..3 {
        c.line(&scene.lines[i], &label("l", &[i]), Style::Aux);
    }
    c.triangle(&scene.a, "A", Style::Base);
    c.triangle(&scene.b, "B", Style::Second);
    let mc = match main_construction_central(scene) {
        Ok(mc) => mc,
        Err(e) => {
            c.warn(format!("main construction undefined: {e}"));
            return c;
        }
    };
    for ((i, j), p) in mc.p_points() {
        c.point(p, &label("P", &[i, j]), Style::Aux);
    }
    for k in 0..3 {
        c.point(&mc.s[k], &label("S", &[k]), Style::Second);
        c.point(&mc.c[k], &label("C", &[k]), Style::Result);
        c.incident(&label("C", &[k]), &mc.c[k], &label("l", &[k]), &scene.lines[k]);
    }
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        if let Ok(l) = mc.p_line(i, k) {
            c.line(&l, "", Style::Result);
        }
    }
    match join(&mc.s[0], &mc.s[1]) {
        Ok(axis) => {
            c.line(&axis, "s", Style::Second);
            c.incident("S3", &mc.s[2], "s", &axis);
        }
        Err(e) => c.warn(format!("Desargues axis undefined: {e}")),
    }
    c
}

/// Rational points of the unit circle, `t ↦ ((1 − t²), 2t, (1 + t²))`.
fn circle_point(t: Scalar) -> HomPoint {
    let t2 = &t * &t;
    HomPoint::new(int(1) - &t2, int(2) * t, int(1) + t2).expect("on circle")
}

fn fig2() -> Canvas {
    let mut c = Canvas::new("Pascal theorem and its generalization");
    let circle: Vec<HomPoint> =
        (-48..=48).map(|k| circle_point(rat(k, 6))).chain(std::iter::once(circle_point(rat(-48, 6)))).collect();
    c.path(circle, Style::Aux);
    // Traversal A₁ B₃ A₂ B₁ A₃ B₂.
    let ts = [rat(0, 1), rat(1, 2), rat(2, 1), rat(-3, 1), rat(-1, 3), rat(3, 4)];
    let h: [HomPoint; 6] = ts.map(circle_point);
    for i in 0..6 {
        c.segment(&h[i], &h[(i + 1) % 6], Style::Base);
    }
    let (a, b) = hexagon_triples(&h);
    for k in 0..3 {
        c.point(&a[k], &label("A", &[k]), Style::Base);
        c.point(&b[k], &label("B", &[k]), Style::Second);
    }
    match pascal_line(&h) {
        Ok(l) => c.line(&l, "Pascal", Style::Second),
        Err(e) => c.warn(format!("Pascal line undefined: {e}")),
    }
    let q = match q_points(&a, &b) {
        Ok(q) => q,
        Err(e) => {
            c.warn(format!("Q points undefined: {e}"));
            return c;
        }
    };
    let mut lines = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if let Some(p) = &q[i][j] {
                c.point(p, &label("Q", &[i, j]), Style::Result);
            }
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (Some(p), Some(r)) = (&q[i][j], &q[j][i]) else { continue };
        if let Ok(l) = join(p, r) {
            c.line(&l, "", Style::Result);
            lines.push((label("Q", &[i, j]), l));
        }
    }
    if lines.len() == 3 {
        if let Ok(center) = meet(&lines[0].1, &lines[1].1) {
            c.point(&center, "O", Style::Result);
            let (name, l) = lines[2].clone();
            c.incident("O", &center, &format!("line through {name}"), &l);
        }
    }
    c
}

fn fig3(scene: &AxisScene) -> Canvas {
    let mut c = Canvas::new("Triangles perspective from a line");
    c.line(&scene.s, "s", Style::Aux);
    c.triangle(&scene.a, "A", Style::Base);
    c.triangle(&scene.b, "B", Style::Second);
    for k in 0..3 {
        c.point(&scene.l[k], &label("L", &[k]), Style::Aux);
        c.incident(&label("L", &[k]), &scene.l[k], "s", &scene.s);
    }
    match main_construction_axis(scene) {
        Ok(ct) => {
            c.triangle(&ct, "C", Style::Result);
            for k in 0..3 {
                if let Ok(sk) = side(&ct, k) {
                    c.line(&sk, "", Style::Aux);
                    c.incident(&label("L", &[k]), &scene.l[k], &format!("side {} of C", k + 1), &sk);
                }
            }
        }
        Err(e) => c.warn(format!("main construction undefined: {e}")),
    }
    c
}

fn draw_presum(c: &mut Canvas, frame: &Frame, x: &TriangleElement, y: &TriangleElement) -> Option<[Option<HomPoint>; 3]> {
    let a = frame.vertices_of(x);
    let b = frame.vertices_of(y);
    let p = match presum_geometric(frame, x, y) {
        Ok(p) => p,
        Err(e) => {
            c.warn(format!("pre-sum undefined: {e}"));
            return None;
        }
    };
    for (k, v) in p.vertices.iter().enumerate() {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let (Some(v), Some(ai), Some(bj)) = (v, &a[i], &b[j]) else { continue };
        if let Ok(l) = join(ai, bj) {
            c.incident(&label("C", &[k]), v, &format!("{}{}", label("A", &[i]), label("B", &[j])), &l);
        }
    }
    Some(p.vertices)
}

fn draw_vertices(c: &mut Canvas, v: &[Option<HomPoint>; 3], name: &str, style: Style) {
    if v.iter().all(|p| p.as_ref().is_some_and(|p| !p.is_at_infinity())) {
        let t = v.clone().map(|p| p.expect("finite"));
        c.triangle(&t, name, style);
    } else {
        for (k, p) in v.iter().enumerate() {
            if let Some(p) = p {
                c.point(p, &label(name, &[k]), style);
            }
        }
    }
}

fn fig4() -> Canvas {
    let mut c = Canvas::new("Perspective axis at infinity");
    let f = Frame::new("E", [pt(0, 0), pt(4, 0), pt(1, 3)]).expect("frame");
    let x = TriangleElement::new([rat(1, 2), rat(1, 4), rat(1, 2)]);
    let y = TriangleElement::new([rat(-1, 3), rat(1, 2), rat(1, 6)]);
    draw_vertices(&mut c, &f.vertices_of(&x), "A", Style::Base);
    draw_vertices(&mut c, &f.vertices_of(&y), "B", Style::Second);
    if let Some(v) = draw_presum(&mut c, &f, &x, &y) {
        draw_vertices(&mut c, &v, "C", Style::Result);
    }
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        c.point(&f.side_direction(i, j), &label("L", &[k]), Style::Aux);
    }
    c
}

fn fig5() -> Canvas {
    let mut c = Canvas::new("Addition of a triangle with the zero triangle");
    let f = Frame::standard();
    let x = TriangleElement::new([rat(1, 2), rat(1, 4), rat(1, 2)]);
    let zero = TriangleElement::zero();
    let a = f.vertices_of(&x);
    draw_vertices(&mut c, &a, "A", Style::Base);
    draw_vertices(&mut c, &f.vertices_of(&zero), "B", Style::Second);
    if let Some(v) = draw_presum(&mut c, &f, &x, &zero) {
        draw_vertices(&mut c, &v, "C", Style::Result);
        if let Ok(t) = f.triangle_from_bary(&x) {
            let center = t.centroid();
            c.point(&center, "A0", Style::Aux);
            for k in 0..3 {
                let (Some(ak), Some(ck)) = (&a[k], &v[k]) else { continue };
                if let Ok(l) = join(ak, ck) {
                    c.line(&l, "", Style::Aux);
                    c.incident("A0", &center, &format!("A{}C{}", k + 1, k + 1), &l);
                }
            }
        }
    }
    c
}

fn fig6() -> Canvas {
    let mut c = Canvas::new("Two coinciding sides");
    let f = Frame::standard();
    let x = TriangleElement::new([rat(2, 3), rat(1, 6), rat(1, 6)]);
    let a = f.triangle_from_bary(&x).expect("geometric");
    // B is the image of A under the homothety about A₁ with ratio 2.
    let (ox, oy) = a.vertices[0].to_affine().expect("finite");
    let b = a.vertices.clone().map(|p| {
        let (px, py) = p.to_affine().expect("finite");
        ratpt(&ox + int(2) * (px - &ox), &oy + int(2) * (py - &oy))
    });
    let y = f.bary_from_triangle(&trigroup::group::GeometricTriangle::new("E", b.clone()).expect("triangle"));
    c.triangle(&a.vertices, "A", Style::Base);
    c.triangle(&b, "B", Style::Second);
    let Ok(y) = y else {
        c.warn("second triangle is not parallel to the first");
        return c;
    };
    if let Some(v) = draw_presum(&mut c, &f, &x, &y) {
        draw_vertices(&mut c, &v, "C", Style::Result);
        let s3 = f.side_direction(0, 1);
        c.point(&s3, "S3", Style::Aux);
        if let (Some(c1), Some(c2)) = (&v[0], &v[1]) {
            if let Ok(l) = join(c1, &s3) {
                c.line(&l, "", Style::Aux);
                c.incident("C2", c2, "C1S3", &l);
            }
        }
        for (k, j) in [(1, 2), (2, 1)] {
            if let (Some(ck), Ok(l)) = (&v[k], join(&a.vertices[0], &b[j])) {
                c.line(&l, "", Style::Aux);
                c.incident(&label("C", &[k]), ck, &format!("A1{}", label("B", &[j])), &l);
            }
        }
    }
    c
}

fn fig7(scene: &CentralScene) -> Canvas {
    let mut c = Canvas::new("Adding a triangle to itself");
    c.point(&scene.s, "S", Style::Aux);
    for i in 0..3 {
        c.line(&scene.lines[i], "", Style::Aux);
    }
    c.triangle(&scene.a, "A", Style::Base);
    let h = match central_half(&scene.s, &scene.a) {
        Ok(h) => h,
        Err(e) => {
            c.warn(format!("half construction undefined: {e}"));
            return c;
        }
    };
    c.triangle(&h.x, "X", Style::Second);
    c.triangle(&h.y, "Y", Style::Result);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        if let Ok(l) = join(&h.y[j], &h.y[k]) {
            c.incident(&label("A", &[i]), &scene.a[i], &format!("{}{}", label("Y", &[j]), label("Y", &[k])), &l);
        }
        match cross_ratio(&scene.s, &h.y[i], &scene.a[i], &h.x[i]) {
            Ok(r) if r == int(-1) => {}
            _ => c.warn(format!("quadruple {{S,Y{0}}}{{A{0},X{0}}} is not harmonic", i + 1)),
        }
    }
    c
}

pub fn emit_figure(name: FigureName, scene: Option<&SceneJson>) -> Result<Figure, HarnessError> {
    let takes_scene = matches!(name, FigureName::Fig1Desargues | FigureName::Fig3Dual | FigureName::Fig7ABoxplusA);
    if scene.is_some() && !takes_scene {
        return Err(HarnessError::Usage(format!("{} does not take a scene", name.name())));
    }
    let canvas = match name {
        FigureName::Fig1Desargues => fig1(&central_from(scene)?),
        FigureName::Fig2Pascal => fig2(),
        FigureName::Fig3Dual => fig3(&axis_from(scene)?),
        FigureName::Fig4AxisInfinity => fig4(),
        FigureName::Fig5BoxplusZero => fig5(),
        FigureName::Fig6Degenerate => fig6(),
        FigureName::Fig7ABoxplusA => fig7(&central_from(scene)?),
    };
    let (svg, warnings) = canvas.render();
    Ok(Figure { svg, warnings })
}
