//! Seeded random elements and the degenerate classes of pairs.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use super::element::{Kind, TriangleElement};
use super::frame::{Frame, GeometricTriangle};
use super::presum::reflect_in_side_midpoint;
use crate::config::random::rational;
use crate::kernel::{int, HomPoint, Scalar};
use crate::Result;

fn small(rng: &mut impl Rng) -> Scalar {
    rational(rng, 9, 6)
}

fn small_except(rng: &mut impl Rng, banned: &[Scalar]) -> Scalar {
    loop {
        let r = small(rng);
        if !banned.contains(&r) {
            return r;
        }
    }
}

pub fn random_element(rng: &mut impl Rng, kind: Kind) -> TriangleElement {
    match kind {
        Kind::Geometric => loop {
            let x = TriangleElement::new([small(rng), small(rng), small(rng)]);
            if x.is_geometric() {
                return x;
            }
        },
        Kind::Pseudo => loop {
            let (a, b) = (small(rng), small(rng));
            let c = -(&a + &b);
            let x = TriangleElement::new([a, b, c]);
            if x.kind() == Kind::Pseudo {
                return x;
            }
        },
        Kind::CompletelyPseudo => TriangleElement::completely_pseudo(rng.random_range(0..3)),
    }
}

/// Any kind, completely-pseudo ones about one time in ten.
pub fn random_any(rng: &mut impl Rng) -> TriangleElement {
    let kind = match rng.random_range(0..10) {
        0 => Kind::CompletelyPseudo,
        1..=4 => Kind::Pseudo,
        _ => Kind::Geometric,
    };
    random_element(rng, kind)
}

/// Classes of geometric pairs the pre-sum treats specially.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Generic,
    Equal,
    /// `Aᵢ = Bᵢ`.
    SharedVertex,
    /// `Aᵢ = Bⱼ` with `i ≠ j`, not symmetric.
    CrossVertex,
    /// Sides `AᵢAⱼ` and `BᵢBⱼ` on one line.
    CollinearSides,
    /// Symmetric about the midpoint of a side.
    SymmetricSide,
    /// Symmetric about a point that is not a side midpoint.
    SymmetricPoint,
}

impl PairClass {
    pub const ALL: [PairClass; 7] = [
        PairClass::Generic,
        PairClass::Equal,
        PairClass::SharedVertex,
        PairClass::CrossVertex,
        PairClass::CollinearSides,
        PairClass::SymmetricSide,
        PairClass::SymmetricPoint,
    ];
}

fn affine(p: &HomPoint) -> (Scalar, Scalar) {
    p.to_affine().expect("finite")
}

/// Image of a triangle under `x ↦ to + r·(x − from)`.
fn homothety(t: &GeometricTriangle, from: &HomPoint, to: &HomPoint, r: &Scalar) -> Result<GeometricTriangle> {
    let (fx, fy) = affine(from);
    let (tx, ty) = affine(to);
    let v = t.vertices.clone().map(|p| {
        let (x, y) = affine(&p);
        HomPoint::affine(&tx + r * (x - &fx), &ty + r * (y - &fy))
    });
    GeometricTriangle::new(&t.frame, v)
}

/// A geometric pair of the given class.
pub fn random_pair(rng: &mut impl Rng, frame: &Frame, class: PairClass) -> Result<(TriangleElement, TriangleElement)> {
    let x = random_element(rng, Kind::Geometric);
    let a = frame.triangle_from_bary(&x)?;
    let one = Scalar::one();
    let zero = Scalar::zero();
    let b = match class {
        PairClass::Generic => return Ok((x, random_element(rng, Kind::Geometric))),
        PairClass::Equal => return Ok((x.clone(), x)),
        PairClass::SharedVertex => {
            let i = rng.random_range(0..3);
            let r = small_except(rng, &[zero, one]);
            homothety(&a, &a.vertices[i], &a.vertices[i], &r)?
        }
        PairClass::CrossVertex => {
            let i = rng.random_range(0..3);
            let j = (i + rng.random_range(1..3)) % 3;
            let r = small_except(rng, &[zero, -one]);
            homothety(&a, &a.vertices[i], &a.vertices[j], &r)?
        }
        PairClass::CollinearSides => {
            let k = rng.random_range(0..3);
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let t = small_except(rng, &[zero.clone(), one.clone()]);
            let (ix, iy) = affine(&a.vertices[i]);
            let (jx, jy) = affine(&a.vertices[j]);
            let p = HomPoint::affine(&ix + &t * (jx - &ix), &iy + &t * (jy - &iy));
            let r = small_except(rng, &[zero, one.clone(), -one]);
            homothety(&a, &p, &p, &r)?
        }
        PairClass::SymmetricSide => reflect_in_side_midpoint(&a, rng.random_range(0..3))?,
        PairClass::SymmetricPoint => loop {
            let o = HomPoint::affine(small(rng), small(rng));
            let (ox, oy) = affine(&o);
            let midpoint_of_side = (0..3).any(|k| {
                let (i, j) = ((k + 1) % 3, (k + 2) % 3);
                let (ix, iy) = affine(&a.vertices[i]);
                let (jx, jy) = affine(&a.vertices[j]);
                ix + jx == int(2) * &ox && iy + jy == int(2) * &oy
            });
            if !midpoint_of_side {
                break homothety(&a, &o, &o, &-Scalar::one())?;
            }
        },
    };
    Ok((x, frame.bary_from_triangle(&b)?))
}
