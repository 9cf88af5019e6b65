//! Elements of the space of triangles and the coordinate group law.

use std::fmt;
use std::ops::{Add, Neg};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::kernel::scalar::{format_scalar, serde_triple, third};
use crate::kernel::{rat, Scalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `δ₁ + δ₂ + δ₃ ≠ 0`: an actual triangle.
    Geometric,
    /// Zero sum: an ordered triple of directions.
    Pseudo,
    /// One of the three zero-sum triples whose direction formulas collapse.
    CompletelyPseudo,
}

/// Barycentric coordinates `(δ₁, δ₂, δ₃)` of a triangle with sides parallel to
/// the reference triangle: `δ₁:δ₂:δ₃` is its mass center and `Σδᵢ` the
/// coefficient of the homothety carrying it onto the reference.
///
/// Coordinates are exact and not homogeneous; the kind is derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementJson")]
pub struct TriangleElement {
    kind: Kind,
    #[serde(with = "serde_triple")]
    delta: [Scalar; 3],
}

#[derive(Deserialize)]
struct ElementJson {
    kind: Option<Kind>,
    #[serde(with = "serde_triple")]
    delta: [Scalar; 3],
}

impl TryFrom<ElementJson> for TriangleElement {
    type Error = Error;

    fn try_from(raw: ElementJson) -> Result<Self> {
        let e = TriangleElement::new(raw.delta);
        match raw.kind {
            Some(k) if k != e.kind => Err(Error::Parse(format!("kind {k:?} does not match coordinates ({e})"))),
            _ => Ok(e),
        }
    }
}

/// `(1/3, 1/3, −2/3)` with the `−2/3` in slot `k`.
pub fn completely_pseudo_delta(k: usize) -> [Scalar; 3] {
    let mut d = [third(), third(), third()];
    d[k] = rat(-2, 3);
    d
}

fn classify(delta: &[Scalar; 3]) -> Kind {
    let sum: Scalar = delta.iter().sum();
    if !sum.is_zero() {
        Kind::Geometric
    } else if (0..3).any(|k| delta == &completely_pseudo_delta(k)) {
        Kind::CompletelyPseudo
    } else {
        Kind::Pseudo
    }
}

impl TriangleElement {
    pub fn new(delta: [Scalar; 3]) -> Self {
        Self { kind: classify(&delta), delta }
    }

    pub fn from_ints(d: [i64; 3]) -> Self {
        Self::new(d.map(|x| Scalar::from_integer(x.into())))
    }

    /// The zero of the group, the pseudo-triangle `(0, 0, 0)`.
    pub fn zero() -> Self {
        Self::new(Default::default())
    }

    /// Coordinates of the reference triangle itself.
    pub fn reference() -> Self {
        Self::new([third(), third(), third()])
    }

    pub fn completely_pseudo(k: usize) -> Self {
        Self::new(completely_pseudo_delta(k))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_geometric(&self) -> bool {
        self.kind == Kind::Geometric
    }

    pub fn delta(&self) -> &[Scalar; 3] {
        &self.delta
    }

    /// `d = δ₁ + δ₂ + δ₃`.
    pub fn coordinate_sum(&self) -> Scalar {
        self.delta.iter().sum()
    }

    /// Index `k` for the completely-pseudo element with `−2/3` in slot `k`.
    pub fn completely_pseudo_slot(&self) -> Option<usize> {
        (0..3).find(|&k| self.delta == completely_pseudo_delta(k))
    }

    pub fn scale(&self, f: &Scalar) -> Self {
        Self::new(self.delta.clone().map(|x| x * f))
    }

    /// Homogeneous barycentric coordinates of vertex `k`:
    /// `δ − (1/3, 1/3, 1/3) + e_k`. For a geometric element these are the
    /// vertex coordinates times `d`; for a pseudo element a direction.
    pub fn vertex_bary(&self, k: usize) -> [Scalar; 3] {
        let mut v = self.delta.clone().map(|x| x - third());
        v[k] += Scalar::one();
        v
    }
}

impl fmt::Display for TriangleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.delta;
        write!(f, "({}, {}, {})", format_scalar(a), format_scalar(b), format_scalar(c))
    }
}

impl Add for &TriangleElement {
    type Output = TriangleElement;

    fn add(self, rhs: &TriangleElement) -> TriangleElement {
        TriangleElement::new([0, 1, 2].map(|i| &self.delta[i] + &rhs.delta[i]))
    }
}

impl Neg for &TriangleElement {
    type Output = TriangleElement;

    fn neg(self) -> TriangleElement {
        TriangleElement::new(self.delta.clone().map(|x| -x))
    }
}

/// Pre-sum in coordinates: `−(x + y)`.
pub fn presum_coords(x: &TriangleElement, y: &TriangleElement) -> TriangleElement {
    -&(x + y)
}

/// The group law: coordinate-wise addition.
pub fn sum(x: &TriangleElement, y: &TriangleElement) -> TriangleElement {
    x + y
}

/// Sum relative to an arbitrary fixed element: `F ⊞ (x ⊞ y)`.
pub fn sum_with_fixed(f: &TriangleElement, x: &TriangleElement, y: &TriangleElement) -> TriangleElement {
    presum_coords(f, &presum_coords(x, y))
}

/// Point reflection of a triangle in its mass center negates its coordinates.
pub fn reflect_mass_center(x: &TriangleElement) -> Result<TriangleElement> {
    if !x.is_geometric() {
        return Err(Error::ZeroSum);
    }
    Ok(-x)
}

/// The element `h` with `h ⊞ h = a`, i.e. `−a/2`.
pub fn half_coords(a: &TriangleElement) -> TriangleElement {
    a.scale(&rat(-1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    fn e(d: [i64; 3]) -> TriangleElement {
        TriangleElement::from_ints(d)
    }

    #[test]
    fn kinds() {
        assert_eq!(TriangleElement::reference().kind(), Kind::Geometric);
        assert_eq!(TriangleElement::zero().kind(), Kind::Pseudo);
        assert_eq!(e([1, -1, 0]).kind(), Kind::Pseudo);
        for k in 0..3 {
            let cp = TriangleElement::completely_pseudo(k);
            assert_eq!(cp.kind(), Kind::CompletelyPseudo);
            assert_eq!(cp.completely_pseudo_slot(), Some(k));
        }
        // Scaling a completely-pseudo triple gives an ordinary pseudo one.
        assert_eq!(TriangleElement::completely_pseudo(0).scale(&int(2)).kind(), Kind::Pseudo);
    }

    #[test]
    fn coordinate_laws() {
        assert_eq!(presum_coords(&e([1, 0, 0]), &e([0, 1, 0])), e([-1, -1, 0]));
        // Coordinate sum −2: an actual triangle.
        assert_eq!(presum_coords(&e([1, 0, 0]), &e([0, 1, 0])).kind(), Kind::Geometric);
        assert_eq!(sum(&e([1, 0, 0]), &e([0, 1, 0])), e([1, 1, 0]));
        let r = TriangleElement::reference();
        assert_eq!(presum_coords(&r, &r), TriangleElement::new([rat(-2, 3), rat(-2, 3), rat(-2, 3)]));
        assert_eq!(reflect_mass_center(&r).unwrap(), TriangleElement::new([rat(-1, 3), rat(-1, 3), rat(-1, 3)]));
        assert_eq!(reflect_mass_center(&TriangleElement::zero()), Err(Error::ZeroSum));
        assert_eq!(half_coords(&e([1, 0, 0])), TriangleElement::new([rat(-1, 2), int(0), int(0)]));
        let f = e([2, 1, 1]);
        assert_eq!(sum_with_fixed(&f, &e([1, 0, 0]), &e([0, 1, 0])), &sum(&e([1, 0, 0]), &e([0, 1, 0])) + &(-&f));
    }

    #[test]
    fn json_form() {
        let x = TriangleElement::new([rat(1, 3), int(-2), int(0)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"kind":"geometric","delta":["1/3","-2","0"]}"#);
        assert_eq!(serde_json::from_str::<TriangleElement>(&s).unwrap(), x);
        let bad = r#"{"kind":"pseudo","delta":["1","0","0"]}"#;
        assert!(serde_json::from_str::<TriangleElement>(bad).is_err());
        let cp: TriangleElement = serde_json::from_str(r#"{"delta":["1/3","-2/3","1/3"]}"#).unwrap();
        assert_eq!(cp.kind(), Kind::CompletelyPseudo);
    }
}
