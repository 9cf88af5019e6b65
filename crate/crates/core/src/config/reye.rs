//! Labeled point/line configurations and the Reye-dual incidence count.

use std::collections::BTreeSet;

use serde::Serialize;

use super::central::{label, main_construction_central};
use super::scene::{side, CentralScene};
use crate::kernel::{HomLine, HomPoint};
use crate::{Error, Result};

/// Labeled points and lines with the incidences that hold exactly between
/// them. Incidences are computed, never asserted.
#[derive(Clone, Debug, Serialize)]
pub struct Configuration {
    pub points: Vec<(String, HomPoint)>,
    pub lines: Vec<(String, HomLine)>,
    /// `(point index, line index)`.
    pub incidences: BTreeSet<(usize, usize)>,
}

impl Configuration {
    pub fn new(points: Vec<(String, HomPoint)>, lines: Vec<(String, HomLine)>) -> Self {
        let mut incidences = BTreeSet::new();
        for (pi, (_, p)) in points.iter().enumerate() {
            for (li, (_, l)) in lines.iter().enumerate() {
                if p.lies_on(l) {
                    incidences.insert((pi, li));
                }
            }
        }
        Self { points, lines, incidences }
    }

    pub fn lines_through(&self, point: usize) -> usize {
        self.incidences.iter().filter(|(p, _)| *p == point).count()
    }

    pub fn points_on(&self, line: usize) -> usize {
        self.incidences.iter().filter(|(_, l)| *l == line).count()
    }

    pub fn without_line(&self, line: usize) -> Self {
        let mut lines = self.lines.clone();
        lines.remove(line);
        Self::new(self.points.clone(), lines)
    }

    fn has_repeats(&self) -> bool {
        let mut ps: Vec<_> = self.points.iter().map(|(_, p)| p).collect();
        ps.sort();
        let mut ls: Vec<_> = self.lines.iter().map(|(_, l)| l).collect();
        ls.sort();
        ps.windows(2).any(|w| w[0] == w[1]) || ls.windows(2).any(|w| w[0] == w[1])
    }

    /// `(points, lines per point, lines, points per line)` when both counts
    /// are uniform.
    pub fn uniform_parameters(&self) -> Option<ReyeCounts> {
        let per_point: BTreeSet<usize> = (0..self.points.len()).map(|p| self.lines_through(p)).collect();
        let per_line: BTreeSet<usize> = (0..self.lines.len()).map(|l| self.points_on(l)).collect();
        match (per_point.len(), per_line.len()) {
            (1, 1) => Some(ReyeCounts {
                point_count: self.points.len(),
                lines_per_point: *per_point.first()?,
                line_count: self.lines.len(),
                points_per_line: *per_line.first()?,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReyeCounts {
    pub point_count: usize,
    pub lines_per_point: usize,
    pub line_count: usize,
    pub points_per_line: usize,
}

impl ReyeCounts {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.point_count, self.lines_per_point, self.line_count, self.points_per_line)
    }
}

/// Points `S, Aᵢ, Bᵢ, Cᵢ, P_ij` and lines `ℓᵢ`, the sides of `A` and `B`,
/// and the lines `P_ij P_ji`.
pub fn generalized_desargues_configuration(scene: &CentralScene) -> Result<Configuration> {
    let mc = main_construction_central(scene)?;
    let mut points = vec![("S".to_string(), scene.s.clone())];
    for i in 0..3 {
        points.push((label("A", &[i]), scene.a[i].clone()));
        points.push((label("B", &[i]), scene.b[i].clone()));
        points.push((label("C", &[i]), mc.c[i].clone()));
    }
    points.extend(mc.p_points().map(|((i, j), p)| (label("P", &[i, j]), p.clone())));

    let mut lines = Vec::with_capacity(12);
    for k in 0..3 {
        lines.push((label("l", &[k]), scene.lines[k].clone()));
    }
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        lines.push((format!("A{}A{}", i + 1, j + 1), side(&scene.a, k)?));
        lines.push((format!("B{}B{}", i + 1, j + 1), side(&scene.b, k)?));
        lines.push((format!("P{}{}P{}{}", i + 1, j + 1, j + 1, i + 1), mc.p_line(i, j)?));
    }
    Ok(Configuration::new(points, lines))
}

/// Uniform incidence parameters of the generalized Desargues configuration.
/// Accidental extra incidences or repeated elements count as degenerate.
pub fn reye_dual_counts(scene: &CentralScene) -> Result<ReyeCounts> {
    let cfg = generalized_desargues_configuration(scene)?;
    if cfg.has_repeats() {
        return Err(Error::undefined("configuration (repeated elements)"));
    }
    cfg.uniform_parameters().ok_or_else(|| Error::undefined("configuration (non-uniform incidences)"))
}
