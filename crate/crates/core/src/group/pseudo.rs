//! Pseudo-triangles: their directions and their description through
//! triangles symmetric to the reference.

use serde::Serialize;

use super::element::{Kind, TriangleElement};
use super::frame::{Frame, GeometricTriangle};
use super::presum::{presum_triangles, Presum, PresumCase};
use crate::kernel::{int, midpoint, HomPoint, Scalar};
use crate::{Error, Result};

/// A point at infinity, stored in the Cartesian chart of its frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Direction(pub HomPoint);

impl Direction {
    pub fn new(p: HomPoint) -> Result<Self> {
        if p.is_at_infinity() {
            Ok(Self(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not at infinity")))
        }
    }

    pub fn point(&self) -> &HomPoint {
        &self.0
    }
}

/// The three directions `δ − (1/3,1/3,1/3) + e_k`. Completely-pseudo
/// elements have one vanishing triple and are rejected.
pub fn pseudo_vertices(frame: &Frame, p: &TriangleElement) -> Result<[Direction; 3]> {
    match p.kind() {
        Kind::Geometric => Err(Error::InvalidInput(format!("{p} is an actual triangle"))),
        Kind::CompletelyPseudo => Err(Error::CompletelyPseudo),
        Kind::Pseudo => Ok(frame.vertices_of(p).map(|v| Direction(v.expect("pseudo vertex")))),
    }
}

/// The triangle `B` symmetric to the reference with `p = E ⊞ B`, i.e.
/// `β = −p − (1/3,1/3,1/3)`.
pub fn pseudo_parameterize(frame: &Frame, p: &TriangleElement) -> Result<GeometricTriangle> {
    if p.kind() == Kind::Geometric {
        return Err(Error::InvalidInput(format!("{p} is an actual triangle")));
    }
    let beta = &(-p) + &(-&TriangleElement::reference());
    frame.triangle_from_bary(&beta)
}

/// `Dᵢ = (Bᵢ + Cᵢ)/2` for the parameterizing triangles `B`, `C` of `x`, `y`.
pub fn midpoint_triangle(frame: &Frame, x: &TriangleElement, y: &TriangleElement) -> Result<GeometricTriangle> {
    let b = pseudo_parameterize(frame, x)?;
    let c = pseudo_parameterize(frame, y)?;
    let [d0, d1, d2] = [0, 1, 2].map(|k| midpoint(&b.vertices[k], &c.vertices[k]));
    GeometricTriangle::new(frame.label(), [d0?, d1?, d2?])
}

/// `E ⊞ D` for the midpoint triangle `D`. In coordinates this is
/// `(x + y)/2`, which differs from `x ⊞ y = −(x + y)` unless `x + y = 0`.
pub fn pseudo_presum_via_lemma(frame: &Frame, x: &TriangleElement, y: &TriangleElement) -> Result<Presum> {
    let d = midpoint_triangle(frame, x, y)?;
    let e = frame.triangle_from_bary(&TriangleElement::reference())?;
    let mut p = presum_triangles(frame, &e.vertices, &d.vertices)?;
    p.case = PresumCase::PseudoPair;
    Ok(p)
}

fn affine(p: &HomPoint) -> (Scalar, Scalar) {
    p.to_affine().expect("finite")
}

/// The triangle `D'` symmetric to the reference whose pre-sum with it is
/// `x ⊞ y`. Its mass center is `3E₀ − B₀ − C₀`: the image of the midpoint
/// triangle's mass center under the homothety about `E₀` with ratio `−2`.
pub fn corrected_parameter_triangle(
    frame: &Frame,
    x: &TriangleElement,
    y: &TriangleElement,
) -> Result<GeometricTriangle> {
    let b = pseudo_parameterize(frame, x)?;
    let c = pseudo_parameterize(frame, y)?;
    let e = frame.triangle_from_bary(&TriangleElement::reference())?;
    let (e0x, e0y) = affine(&e.centroid());
    let (b0x, b0y) = affine(&b.centroid());
    let (c0x, c0y) = affine(&c.centroid());
    let dx = int(3) * &e0x - b0x - c0x;
    let dy = int(3) * &e0y - b0y - c0y;
    let v = e.vertices.clone().map(|ek| {
        let (ex, ey) = affine(&ek);
        HomPoint::affine(&dx + &e0x - ex, &dy + &e0y - ey)
    });
    GeometricTriangle::new(frame.label(), v)
}
