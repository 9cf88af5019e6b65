//! Halving a triangle, in the axis model and through the harmonic
//! construction of the central model.

use super::element::{half_coords, TriangleElement};
use super::frame::{Frame, GeometricTriangle};
use crate::config::axis::polar_triangle;
use crate::config::scene::side;
use crate::kernel::{collinear, cross_ratio, harmonic_conjugate, int, join, meet, HomLine, HomPoint, Mat3, ProjMap, Scalar};
use crate::{Error, Result};

/// The element `X` with `X ⊞ X = a`.
pub fn half(a: &TriangleElement) -> Result<TriangleElement> {
    if !a.is_geometric() {
        return Err(Error::ZeroSum);
    }
    Ok(half_coords(a))
}

/// Axis-model realization of the half: the triangle whose side midpoints are
/// the vertices of `a`, `X_k = Aᵢ + Aⱼ − A_k`.
pub fn half_triangle(frame: &Frame, a: &TriangleElement) -> Result<GeometricTriangle> {
    let t = frame.triangle_from_bary(a)?;
    let p = t.vertices.clone().map(|v| v.to_affine().expect("finite"));
    let v = [0, 1, 2].map(|k| {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        HomPoint::affine(&p[i].0 + &p[j].0 - &p[k].0, &p[i].1 + &p[j].1 - &p[k].1)
    });
    GeometricTriangle::new(frame.label(), v)
}

/// Central-model data for halving `A` from the center `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralHalf {
    /// `Xᵢ = AⱼA_k ∩ SAᵢ`, the half of `A`.
    pub x: [HomPoint; 3],
    /// `Yⱼ`, the harmonic conjugate of `S` in `{Aⱼ, Xⱼ}`: the double `A ⊞ A`.
    pub y: [HomPoint; 3],
}

pub fn central_half(s: &HomPoint, a: &[HomPoint; 3]) -> Result<CentralHalf> {
    let mut x = Vec::with_capacity(3);
    let mut y = Vec::with_capacity(3);
    for i in 0..3 {
        let xi = meet(&side(a, i)?, &join(s, &a[i])?)?;
        y.push(harmonic_conjugate(s, &a[i], &xi)?);
        x.push(xi);
    }
    Ok(CentralHalf { x: x.try_into().expect("three"), y: y.try_into().expect("three") })
}

/// Checks the harmonic quadruples `(S, Yⱼ; Aⱼ, Xⱼ) = −1`, that `Aᵢ` lies on
/// side `YⱼY_k`, and that doubling the half returns `A`.
pub fn verify_central_half(s: &HomPoint, a: &[HomPoint; 3]) -> Result<bool> {
    let h = central_half(s, a)?;
    for j in 0..3 {
        if cross_ratio(s, &h.y[j], &a[j], &h.x[j])? != -Scalar::from_integer(1.into()) {
            return Ok(false);
        }
    }
    for i in 0..3 {
        if !collinear(&a[i], &h.y[(i + 1) % 3], &h.y[(i + 2) % 3]) {
            return Ok(false);
        }
    }
    Ok(central_half(s, &h.x)?.y == *a)
}

/// Coordinates for triangles of the central model with center `S`, relative
/// to a reference triangle with vertices on the three lines `SEᵢ`.
///
/// The polarity `x² + y² + z² = 0` turns the central picture into the axis
/// picture; a projective map then sends the polar reference onto the
/// standard frame and the polar of `S` to the line at infinity.
#[derive(Clone, Debug)]
pub struct CentralFrame {
    s: HomPoint,
    lines: [HomLine; 3],
    to_axis: ProjMap,
    frame: Frame,
}

impl CentralFrame {
    pub fn new(s: HomPoint, reference: &[HomPoint; 3]) -> Result<Self> {
        let lines = [0, 1, 2].map(|i| join(&s, &reference[i]));
        let [l0, l1, l2] = lines;
        let lines = [l0?, l1?, l2?];
        for i in 0..3 {
            if side(reference, i)?.contains(&s) {
                return Err(Error::InvalidInput("center lies on a reference side".into()));
            }
        }
        let dual = polar_triangle(reference)?;
        let basis = Mat3::from_columns(dual.clone().map(|p| p.scalars()));
        let axis = s.polar().scalars();
        let u = dual.map(|p| {
            let v = p.scalars();
            (0..3).map(|c| &axis[c] * &v[c]).sum::<Scalar>()
        });
        let frame = Frame::standard();
        let cols = frame.vertices().clone().map(|p| {
            let (x, y) = p.to_affine().expect("finite");
            [x, y, int(1)]
        });
        let m = Mat3::from_columns(cols).mul(&Mat3::diagonal(u)).mul(&basis.inverse()?);
        Ok(Self { s, lines, to_axis: ProjMap::new(m)?, frame })
    }

    pub fn center(&self) -> &HomPoint {
        &self.s
    }

    pub fn lines(&self) -> &[HomLine; 3] {
        &self.lines
    }

    /// Coordinates of a triangle with vertex `i` on the line `SEᵢ`.
    pub fn element_of(&self, t: &[HomPoint; 3]) -> Result<TriangleElement> {
        if (0..3).any(|i| !self.lines[i].contains(&t[i])) {
            return Err(Error::InvalidInput("vertex off its line through the center".into()));
        }
        let image = polar_triangle(t)?.map(|p| Some(self.to_axis.apply(&p)));
        self.frame.element_from_vertices(&image)
    }
}
