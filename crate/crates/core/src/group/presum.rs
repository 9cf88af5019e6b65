//! The pre-sum built from the axis construction, with the degenerate cases
//! resolved so that it always agrees with `−(x + y)`.

use serde::Serialize;

use super::element::{Kind, TriangleElement};
use super::frame::{Frame, GeometricTriangle};
use super::pseudo::corrected_parameter_triangle;
use crate::kernel::{join, meet, midpoint, HomLine, HomPoint};
use crate::{Error, Result};

/// Which branch produced a pre-sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresumCase {
    /// `A ⊞ A`: the medial triangle.
    Equal,
    /// `Aᵢ = Bⱼ` and `Aⱼ = Bᵢ`; the result is completely pseudo in slot `k`.
    SymmetricSide(usize),
    /// Some `AᵢBⱼ` and `AⱼBᵢ` coincide and the vertex is recovered from the
    /// parallel sides.
    SharedLine,
    /// Triangles symmetric about a point: all constructed vertices at infinity.
    SymmetricPoint,
    Generic,
    /// Triangle with the zero pseudo-triangle: the central reflection.
    WithZero,
    WithPseudo,
    WithCompletelyPseudo,
    /// Two pseudo elements, through their parameterizing triangles.
    PseudoPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presum {
    pub element: TriangleElement,
    pub case: PresumCase,
    /// Constructed vertices; `None` only for the collapsed slot of a
    /// completely-pseudo result.
    pub vertices: [Option<HomPoint>; 3],
}

fn others(k: usize) -> (usize, usize) {
    ((k + 1) % 3, (k + 2) % 3)
}

enum Slot {
    Point(HomPoint),
    /// Both lines through `C_k` are undefined or equal; keep the one known
    /// line carrying `C_k`, if any.
    Missing(Option<HomLine>),
}

/// `C_k = AᵢBⱼ ∩ AⱼBᵢ` with undefined vertices recovered from a defined
/// neighbour `C_m`: side `C_mC_k` is parallel to `E_mE_k`. Returns whether
/// any repair was needed.
fn axis_vertices(frame: &Frame, a: &[HomPoint; 3], b: &[HomPoint; 3]) -> Result<([Option<HomPoint>; 3], bool)> {
    let mut slots: Vec<Slot> = (0..3)
        .map(|k| {
            let (i, j) = others(k);
            match (join(&a[i], &b[j]).ok(), join(&a[j], &b[i]).ok()) {
                (Some(l1), Some(l2)) if l1 != l2 => Slot::Point(meet(&l1, &l2).expect("distinct lines")),
                (l1, l2) => Slot::Missing(l1.or(l2)),
            }
        })
        .collect();
    let repaired = slots.iter().any(|s| matches!(s, Slot::Missing(Some(_))));
    loop {
        let mut progress = false;
        for k in 0..3 {
            let Slot::Missing(Some(carrier)) = &slots[k] else { continue };
            let (i, j) = others(k);
            let mut found: Option<HomPoint> = None;
            for m in [i, j] {
                let Slot::Point(cm) = &slots[m] else { continue };
                let Ok(through) = join(cm, &frame.side_direction(m, k)) else { continue };
                let Ok(ck) = meet(carrier, &through) else { continue };
                match &found {
                    Some(prev) if prev != &ck => return Err(Error::undefined(format!("inconsistent repair of C{}", k + 1))),
                    _ => found = Some(ck),
                }
            }
            if let Some(ck) = found {
                slots[k] = Slot::Point(ck);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    let missing = slots.iter().filter(|s| matches!(s, Slot::Missing(_))).count();
    let stuck = slots.iter().any(|s| matches!(s, Slot::Missing(Some(_))));
    if stuck || missing > 1 {
        return Err(Error::undefined("pre-sum vertices"));
    }
    let out = slots.into_iter().map(|s| match s {
        Slot::Point(p) => Some(p),
        Slot::Missing(_) => None,
    });
    Ok((out.collect::<Vec<_>>().try_into().expect("three"), repaired))
}

fn symmetric_side(a: &[HomPoint; 3], b: &[HomPoint; 3]) -> Option<usize> {
    (0..3).find(|&k| {
        let (i, j) = others(k);
        a[i] == b[j] && a[j] == b[i]
    })
}

fn finish(frame: &Frame, vertices: [Option<HomPoint>; 3], case: PresumCase) -> Result<Presum> {
    let element = frame.element_from_vertices(&vertices)?;
    Ok(Presum { element, case, vertices })
}

pub(crate) fn presum_triangles(frame: &Frame, a: &[HomPoint; 3], b: &[HomPoint; 3]) -> Result<Presum> {
    if a == b {
        let c = [0, 1, 2].map(|k| {
            let (i, j) = others(k);
            midpoint(&a[i], &a[j]).ok()
        });
        return finish(frame, c, PresumCase::Equal);
    }
    let (c, repaired) = axis_vertices(frame, a, b)?;
    let case = match symmetric_side(a, b) {
        Some(k) => PresumCase::SymmetricSide(k),
        None if c.iter().flatten().all(HomPoint::is_at_infinity) => PresumCase::SymmetricPoint,
        None if repaired => PresumCase::SharedLine,
        None => PresumCase::Generic,
    };
    finish(frame, c, case)
}

/// `Bᵢ = Aⱼ`, `Bⱼ = Aᵢ`, `B_k = Aᵢ + Aⱼ − A_k`: the point reflection of `A`
/// in the midpoint of side `AᵢAⱼ`.
pub fn reflect_in_side_midpoint(a: &GeometricTriangle, k: usize) -> Result<GeometricTriangle> {
    let (i, j) = others(k);
    let (ix, iy) = a.vertices[i].to_affine().expect("finite");
    let (jx, jy) = a.vertices[j].to_affine().expect("finite");
    let (kx, ky) = a.vertices[k].to_affine().expect("finite");
    let mut v = a.vertices.clone();
    v.swap(i, j);
    v[k] = HomPoint::affine(&ix + &jx - kx, &iy + &jy - ky);
    GeometricTriangle::new(&a.frame, v)
}

/// Geometric pre-sum of any two elements, dispatched on their kinds. The
/// result always equals `presum_coords(x, y)`.
pub fn presum_geometric(frame: &Frame, x: &TriangleElement, y: &TriangleElement) -> Result<Presum> {
    use Kind::*;
    match (x.kind(), y.kind()) {
        (CompletelyPseudo, CompletelyPseudo) => {
            Err(Error::Unsupported("pre-sum of two completely-pseudo elements".into()))
        }
        (Geometric, Geometric) => {
            let a = frame.triangle_from_bary(x)?.vertices;
            let b = frame.triangle_from_bary(y)?.vertices;
            presum_triangles(frame, &a, &b)
        }
        (Geometric, CompletelyPseudo) => {
            let a = frame.triangle_from_bary(x)?;
            let k = y.completely_pseudo_slot().expect("completely pseudo");
            let b = reflect_in_side_midpoint(&a, k)?;
            let element = frame.bary_from_triangle(&b)?;
            Ok(Presum { element, case: PresumCase::WithCompletelyPseudo, vertices: b.vertices.map(Some) })
        }
        (Geometric, Pseudo) => {
            let a = frame.triangle_from_bary(x)?.vertices;
            let b = [0, 1, 2].map(|k| frame.vertex(y, k).expect("pseudo vertex"));
            let (c, _) = axis_vertices(frame, &a, &b)?;
            let case = if y == &TriangleElement::zero() { PresumCase::WithZero } else { PresumCase::WithPseudo };
            finish(frame, c, case)
        }
        (_, Geometric) => presum_geometric(frame, y, x),
        _ => {
            let d = corrected_parameter_triangle(frame, x, y)?;
            let e = frame.triangle_from_bary(&TriangleElement::reference())?;
            let mut p = presum_triangles(frame, &e.vertices, &d.vertices)?;
            p.case = PresumCase::PseudoPair;
            Ok(p)
        }
    }
}

/// The sum: reflection of the pre-sum in its mass center for actual
/// triangles, negated coordinates otherwise.
pub fn sum_geometric(frame: &Frame, x: &TriangleElement, y: &TriangleElement) -> Result<TriangleElement> {
    let p = presum_geometric(frame, x, y)?;
    if p.element.is_geometric() {
        let t = frame.triangle_from_bary(&p.element)?.reflect_mass_center();
        frame.bary_from_triangle(&t)
    } else {
        Ok(-&p.element)
    }
}
