//! Human-readable rendering of elements and scenes.

use std::fmt::Write;

use serde_json::Value;
use trigroup::config::{
    main_construction_axis, main_construction_central, verify_axis_theorem, verify_generalized_desargues, Scene,
    SceneJson,
};
use trigroup::group::{Frame, TriangleElement};
use trigroup::HomPoint;

use crate::expr::parse_element;
use crate::HarnessError;

/// What a JSON document holds.
pub enum Shown {
    Element(TriangleElement),
    Scene(SceneJson),
}

pub fn parse_shown(v: &Value) -> Result<Shown, HarnessError> {
    if v.get("model").is_some() {
        Ok(Shown::Scene(serde_json::from_value(v.clone())?))
    } else {
        Ok(Shown::Element(parse_element(v)?))
    }
}

fn point(p: &HomPoint) -> String {
    if p.is_at_infinity() {
        format!("{p} at infinity")
    } else {
        p.affine_string()
    }
}

pub fn show_element(x: &TriangleElement) -> String {
    let mut out = String::new();
    writeln!(out, "kind: {}", serde_json::to_value(x.kind()).expect("kind").as_str().expect("string")).unwrap();
    writeln!(out, "delta: {x}").unwrap();
    writeln!(out, "coordinate sum: {}", x.coordinate_sum()).unwrap();
    let frame = Frame::standard();
    writeln!(out, "vertices in E = (0,0), (1,0), (0,1):").unwrap();
    for (k, v) in frame.vertices_of(x).iter().enumerate() {
        match v {
            Some(p) => writeln!(out, "  D{} = {}", k + 1, point(p)).unwrap(),
            None => writeln!(out, "  D{} undefined", k + 1).unwrap(),
        }
    }
    out
}

pub fn show_scene(json: &SceneJson) -> Result<String, HarnessError> {
    let mut out = String::new();
    let scene = json.to_scene()?;
    let canonical = match &scene {
        Scene::Central(s) => s.to_json(),
        Scene::Axis(s) => s.to_json(),
    };
    writeln!(out, "model: {}", serde_json::to_value(canonical.model)?.as_str().unwrap_or("?")).unwrap();
    for (name, p) in &canonical.points {
        writeln!(out, "  {name} = {}", point(p)).unwrap();
    }
    for (name, l) in &canonical.lines {
        writeln!(out, "  {name}: {l}").unwrap();
    }
    let (c, holds) = match &scene {
        Scene::Central(s) => (main_construction_central(s).map(|m| m.c), verify_generalized_desargues(s)),
        Scene::Axis(s) => (main_construction_axis(s), verify_axis_theorem(s)),
    };
    match c {
        Ok(c) => {
            for (k, p) in c.iter().enumerate() {
                writeln!(out, "  C{} = {}", k + 1, point(p)).unwrap();
            }
        }
        Err(e) => writeln!(out, "  main construction undefined: {e}").unwrap(),
    }
    match holds {
        Ok(h) => writeln!(out, "theorem holds: {h}").unwrap(),
        Err(e) => writeln!(out, "theorem not checkable: {e}").unwrap(),
    }
    Ok(out)
}
