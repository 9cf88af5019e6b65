//! Central and axis scenes, their generators, and the scene JSON format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::random::{self, MAX_REJECTIONS};
use crate::kernel::{collinear, join, meet, HomLine, HomPoint, ProjMap};
use crate::{Error, Result};

/// Index triple `(i, j, k)`: `k` is the index not in `{i, j}`.
pub const fn third(i: usize, j: usize) -> usize {
    3 - i - j
}

/// All ordered pairs `(i, j)` with `i ≠ j`, i.e. all permutations of three
/// indices written by their first two entries.
pub const PERMUTATIONS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// Triangles `A` and `B` perspective from the point `S`, with `Aᵢ, Bᵢ` on `ℓᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralScene {
    pub s: HomPoint,
    pub lines: [HomLine; 3],
    pub a: [HomPoint; 3],
    pub b: [HomPoint; 3],
}

impl CentralScene {
    pub fn new(s: HomPoint, a: [HomPoint; 3], b: [HomPoint; 3]) -> Result<Self> {
        let invalid = |m: &str| Error::InvalidInput(format!("central scene: {m}"));
        let mut lines = Vec::with_capacity(3);
        for i in 0..3 {
            let l = join(&s, &a[i]).map_err(|_| invalid("S coincides with a vertex of A"))?;
            if !b[i].lies_on(&l) {
                return Err(invalid("B is not perspective to A from S"));
            }
            if a[i] == b[i] || b[i] == s {
                return Err(invalid("coincident points on a perspective line"));
            }
            lines.push(l);
        }
        let lines: [HomLine; 3] = lines.try_into().expect("three lines");
        if lines[0] == lines[1] || lines[0] == lines[2] || lines[1] == lines[2] {
            return Err(invalid("perspective lines coincide"));
        }
        if collinear(&a[0], &a[1], &a[2]) || collinear(&b[0], &b[1], &b[2]) {
            return Err(invalid("degenerate triangle"));
        }
        Ok(Self { s, lines, a, b })
    }

    pub fn transform(&self, map: &ProjMap) -> Self {
        Self {
            s: map.apply(&self.s),
            lines: self.lines.clone().map(|l| map.apply_line(&l)),
            a: self.a.clone().map(|p| map.apply(&p)),
            b: self.b.clone().map(|p| map.apply(&p)),
        }
    }

    /// Points `S, A₁..A₃, B₁..B₃` with only the intended collinearities
    /// `{S, Aᵢ, Bᵢ}`.
    pub fn is_general(&self) -> bool {
        let mut pts: Vec<(&HomPoint, Option<usize>)> = vec![(&self.s, None)];
        for i in 0..3 {
            pts.push((&self.a[i], Some(i)));
            pts.push((&self.b[i], Some(i)));
        }
        for x in 0..pts.len() {
            for y in x + 1..pts.len() {
                if pts[x].0 == pts[y].0 {
                    return false;
                }
                for z in y + 1..pts.len() {
                    let on_one_line = {
                        // Triples contained in {S, Aᵢ, Bᵢ} for a single i.
                        let idx: Vec<usize> = [pts[x].1, pts[y].1, pts[z].1].into_iter().flatten().collect();
                        idx.windows(2).all(|w| w[0] == w[1])
                    };
                    if !on_one_line && collinear(pts[x].0, pts[y].0, pts[z].0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> SceneJson {
        let mut points = BTreeMap::new();
        points.insert("S".to_string(), self.s.clone());
        for i in 0..3 {
            points.insert(format!("A{}", i + 1), self.a[i].clone());
            points.insert(format!("B{}", i + 1), self.b[i].clone());
        }
        let lines = (0..3).map(|i| (format!("l{}", i + 1), self.lines[i].clone())).collect();
        SceneJson { model: Model::Central, points, lines }
    }
}

/// Generates a central scene in general position, deterministically per seed.
///
/// Rejection-samples until the points are in general position and every
/// element of the main construction exists and is distinct.
pub fn random_central_scene(seed: u64) -> Result<CentralScene> {
    let mut rng = random::rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let s = random::affine_point(&mut rng);
        let a = [(); 3].map(|_| random::affine_point(&mut rng));
        let b = [0, 1, 2].map(|i| random::point_between(&mut rng, &s, &a[i]));
        let Ok(scene) = CentralScene::new(s, a, b) else { continue };
        if !scene.is_general() {
            continue;
        }
        let Ok(mc) = super::central::main_construction_central(&scene) else { continue };
        if mc.all_points_distinct(&scene) {
            return Ok(scene);
        }
    }
    Err(Error::GeneralPositionExhausted(MAX_REJECTIONS))
}

/// Triangles `A` and `B` perspective from the line `s`; side `AᵢAⱼ` and side
/// `BᵢBⱼ` meet at `L_k` on `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisScene {
    pub s: HomLine,
    pub l: [HomPoint; 3],
    pub a: [HomPoint; 3],
    pub b: [HomPoint; 3],
}

/// Side `k` of a triangle: the line through the two other vertices.
pub fn side(t: &[HomPoint; 3], k: usize) -> Result<HomLine> {
    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
    join(&t[i], &t[j])
}

impl AxisScene {
    pub fn new(a: [HomPoint; 3], b: [HomPoint; 3]) -> Result<Self> {
        let invalid = |m: &str| Error::InvalidInput(format!("axis scene: {m}"));
        if collinear(&a[0], &a[1], &a[2]) || collinear(&b[0], &b[1], &b[2]) {
            return Err(invalid("degenerate triangle"));
        }
        let mut l = Vec::with_capacity(3);
        for k in 0..3 {
            let meet_k = meet(&side(&a, k)?, &side(&b, k)?).map_err(|_| invalid("corresponding sides coincide"))?;
            l.push(meet_k);
        }
        let l: [HomPoint; 3] = l.try_into().expect("three points");
        let s = join(&l[0], &l[1]).map_err(|_| invalid("axis points coincide"))?;
        if !l[2].lies_on(&s) {
            return Err(invalid("triangles are not perspective from a line"));
        }
        Ok(Self { s, l, a, b })
    }

    pub fn transform(&self, map: &ProjMap) -> Self {
        Self {
            s: map.apply_line(&self.s),
            l: self.l.clone().map(|p| map.apply(&p)),
            a: self.a.clone().map(|p| map.apply(&p)),
            b: self.b.clone().map(|p| map.apply(&p)),
        }
    }

    pub fn to_json(&self) -> SceneJson {
        let mut points = BTreeMap::new();
        for i in 0..3 {
            points.insert(format!("A{}", i + 1), self.a[i].clone());
            points.insert(format!("B{}", i + 1), self.b[i].clone());
            points.insert(format!("L{}", i + 1), self.l[i].clone());
        }
        let mut lines = BTreeMap::new();
        lines.insert("s".to_string(), self.s.clone());
        SceneJson { model: Model::Axis, points, lines }
    }
}

/// Triangle with side `k` through `through[k]`, built from a free vertex,
/// a free point on side 2, and the intersection closing the triangle.
fn triangle_through(rng: &mut impl rand::Rng, through: &[HomPoint; 3]) -> Result<[HomPoint; 3]> {
    let a0 = random::affine_point(rng);
    let a1 = if through[2].is_at_infinity() {
        let (x, y) = a0.to_affine().expect("affine");
        let d = through[2].scalars();
        let t = random::rational(rng, 10, 3);
        HomPoint::affine(x + &t * &d[0], y + &t * &d[1])
    } else {
        random::point_between(rng, &a0, &through[2])
    };
    let a2 = meet(&join(&a0, &through[1])?, &join(&a1, &through[0])?)?;
    Ok([a0, a1, a2])
}

/// Axis scene in general position. With `at_infinity` the axis is the line
/// at infinity, so corresponding sides are parallel.
pub fn random_axis_scene(seed: u64, at_infinity: bool) -> Result<AxisScene> {
    let mut rng = random::rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let l: [HomPoint; 3] = if at_infinity {
            let Ok(l) = [(); 3]
                .map(|_| HomPoint::from_ints(random::coord(&mut rng), random::coord(&mut rng), 0))
                .into_iter()
                .collect::<Result<Vec<_>>>()
            else {
                continue;
            };
            l.try_into().expect("three")
        } else {
            let l0 = random::affine_point(&mut rng);
            let l1 = random::affine_point(&mut rng);
            let l2 = random::point_between(&mut rng, &l0, &l1);
            [l0, l1, l2]
        };
        if l[0] == l[1] || l[0] == l[2] || l[1] == l[2] {
            continue;
        }
        let (Ok(a), Ok(b)) = (triangle_through(&mut rng, &l), triangle_through(&mut rng, &l)) else { continue };
        if a.iter().chain(&b).any(HomPoint::is_at_infinity) {
            continue;
        }
        let Ok(scene) = AxisScene::new(a, b) else { continue };
        if scene.l != l {
            continue;
        }
        // No vertex on the axis and no shared vertex.
        if scene.a.iter().chain(&scene.b).any(|p| p.lies_on(&scene.s)) || scene.a.iter().any(|p| scene.b.contains(p)) {
            continue;
        }
        if super::axis::main_construction_axis(&scene).is_ok() {
            return Ok(scene);
        }
    }
    Err(Error::GeneralPositionExhausted(MAX_REJECTIONS))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Central,
    Axis,
}

/// Serialized scene: labeled points and lines in kernel JSON format.
///
/// Central scenes use labels `S, A1..A3, B1..B3` (lines `l1..l3` are
/// optional and recomputed). Axis scenes use `A1..A3, B1..B3`; the axis `s`
/// and points `L1..L3` are recomputed and checked if present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneJson {
    pub model: Model,
    pub points: BTreeMap<String, HomPoint>,
    #[serde(default)]
    pub lines: BTreeMap<String, HomLine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scene {
    Central(CentralScene),
    Axis(AxisScene),
}

impl SceneJson {
    fn point(&self, label: &str) -> Result<HomPoint> {
        self.points.get(label).cloned().ok_or_else(|| Error::Parse(format!("missing point {label}")))
    }

    fn triangle(&self, name: char) -> Result<[HomPoint; 3]> {
        Ok([self.point(&format!("{name}1"))?, self.point(&format!("{name}2"))?, self.point(&format!("{name}3"))?])
    }

    pub fn to_scene(&self) -> Result<Scene> {
        let a = self.triangle('A')?;
        let b = self.triangle('B')?;
        match self.model {
            Model::Central => {
                let scene = CentralScene::new(self.point("S")?, a, b)?;
                for (i, l) in scene.lines.iter().enumerate() {
                    if let Some(given) = self.lines.get(&format!("l{}", i + 1)) {
                        if given != l {
                            return Err(Error::InvalidInput(format!("line l{} does not match S A{}", i + 1, i + 1)));
                        }
                    }
                }
                Ok(Scene::Central(scene))
            }
            Model::Axis => {
                let scene = AxisScene::new(a, b)?;
                if let Some(s) = self.lines.get("s") {
                    if s != &scene.s {
                        return Err(Error::InvalidInput("axis s does not match the triangles".into()));
                    }
                }
                for (i, l) in scene.l.iter().enumerate() {
                    if let Some(given) = self.points.get(&format!("L{}", i + 1)) {
                        if given != l {
                            return Err(Error::InvalidInput(format!("point L{} does not match the sides", i + 1)));
                        }
                    }
                }
                Ok(Scene::Axis(scene))
            }
        }
    }
}
