//! Reference triangles, barycentric coordinates and the passage between
//! elements and actual vertex triples.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::TriangleElement;
use crate::kernel::linalg::{solve, Mat3};
use crate::kernel::scalar::third;
use crate::kernel::{collinear, int, parse_scalar, HomPoint, Scalar};
use crate::{Error, Result};

/// A reference triangle `E` in the affine chart `z = 1`.
///
/// Barycentric coordinates `w` of a point are those with
/// `p ~ w₁E₁ + w₂E₂ + w₃E₃`; the line at infinity is `w₁ + w₂ + w₃ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    label: String,
    vertices: [HomPoint; 3],
    from_bary: Mat3,
    to_bary: Mat3,
}

impl Frame {
    pub fn new(label: impl Into<String>, vertices: [HomPoint; 3]) -> Result<Self> {
        if vertices.iter().any(HomPoint::is_at_infinity) {
            return Err(Error::InvalidInput("reference vertices must be finite".into()));
        }
        if collinear(&vertices[0], &vertices[1], &vertices[2]) {
            return Err(Error::DegeneratePoints);
        }
        let cols = vertices.clone().map(|v| {
            let (x, y) = v.to_affine().expect("finite");
            [x, y, Scalar::one()]
        });
        let from_bary = Mat3::from_columns(cols);
        let to_bary = from_bary.inverse()?;
        Ok(Self { label: label.into(), vertices, from_bary, to_bary })
    }

    /// `E₁ = (0,0)`, `E₂ = (1,0)`, `E₃ = (0,1)`.
    pub fn standard() -> Self {
        Self::new("E", [HomPoint::affine_int(0, 0), HomPoint::affine_int(1, 0), HomPoint::affine_int(0, 1)])
            .expect("standard frame")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vertices(&self) -> &[HomPoint; 3] {
        &self.vertices
    }

    /// Barycentric coordinates, normalized to sum 1 for finite points.
    pub fn to_bary(&self, p: &HomPoint) -> [Scalar; 3] {
        let w = self.to_bary.apply(&p.scalars());
        let s: Scalar = w.iter().sum();
        if s.is_zero() {
            w
        } else {
            w.map(|x| x / &s)
        }
    }

    pub fn from_bary(&self, w: &[Scalar; 3]) -> Result<HomPoint> {
        HomPoint::from_scalars(&self.from_bary.apply(w))
    }

    /// Vertex `k` of an element: a finite point for geometric elements, a
    /// point at infinity for pseudo ones. `CompletelyPseudo` for the one
    /// collapsed slot.
    pub fn vertex(&self, x: &TriangleElement, k: usize) -> Result<HomPoint> {
        self.from_bary(&x.vertex_bary(k)).map_err(|_| Error::CompletelyPseudo)
    }

    pub fn vertices_of(&self, x: &TriangleElement) -> [Option<HomPoint>; 3] {
        [0, 1, 2].map(|k| self.vertex(x, k).ok())
    }

    /// The point at infinity of the reference side through `Eᵢ` and `Eⱼ`.
    pub fn side_direction(&self, i: usize, j: usize) -> HomPoint {
        let mut w: [Scalar; 3] = Default::default();
        w[i] = -Scalar::one();
        w[j] = Scalar::one();
        self.from_bary(&w).expect("distinct reference vertices")
    }

    pub fn triangle_from_bary(&self, x: &TriangleElement) -> Result<GeometricTriangle> {
        if !x.is_geometric() {
            return Err(Error::ZeroSum);
        }
        let v = [0, 1, 2].map(|k| self.vertex(x, k).expect("geometric vertex"));
        GeometricTriangle::new(&self.label, v)
    }

    /// Coordinates of an actual triangle whose sides are parallel to the
    /// reference: `d` is read off the homothety `Dⱼ − Dᵢ = (Eⱼ − Eᵢ)/d` and
    /// `δ = d·D₀` for the mass center `D₀`.
    pub fn bary_from_triangle(&self, t: &GeometricTriangle) -> Result<TriangleElement> {
        let b = t.vertices.clone().map(|v| self.to_bary(&v));
        let diff = |i: usize, j: usize| -> [Scalar; 3] { [0, 1, 2].map(|c| &b[j][c] - &b[i][c]) };
        let ratio = diff(0, 1)[1].clone();
        if ratio.is_zero() {
            return Err(Error::SideMismatch);
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let d = diff(i, j);
            let mut expect: [Scalar; 3] = Default::default();
            expect[i] = -ratio.clone();
            expect[j] = ratio.clone();
            if d != expect {
                return Err(Error::SideMismatch);
            }
        }
        let d = ratio.recip();
        Ok(TriangleElement::new([0, 1, 2].map(|c| (&b[0][c] + &b[1][c] + &b[2][c]) * third() * &d)))
    }

    /// Recovers an element from its vertices, finite or infinite, by solving
    /// `δ − μₖ·wₖ = (1/3,1/3,1/3) − eₖ` for every given vertex `wₖ`. A missing
    /// vertex stands for the collapsed slot of a completely-pseudo element.
    pub fn element_from_vertices(&self, v: &[Option<HomPoint>; 3]) -> Result<TriangleElement> {
        let given: Vec<(usize, [Scalar; 3])> =
            (0..3).filter_map(|k| v[k].as_ref().map(|p| (k, self.to_bary.apply(&p.scalars())))).collect();
        let n = 3 + given.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (m, (k, w)) in given.iter().enumerate() {
            for c in 0..3 {
                let mut row = vec![Scalar::zero(); n];
                row[c] = Scalar::one();
                row[3 + m] = -w[c].clone();
                rows.push(row);
                rhs.push(if c == *k { third() - int(1) } else { third() });
            }
        }
        let sol = solve(&rows, &rhs).map_err(|e| match e {
            Error::Singular => Error::SideMismatch,
            _ => Error::undefined("vertices do not determine an element"),
        })?;
        if sol[3..].iter().any(Zero::is_zero) {
            return Err(Error::SideMismatch);
        }
        Ok(TriangleElement::new([sol[0].clone(), sol[1].clone(), sol[2].clone()]))
    }
}

impl Default for Frame {
    fn default() -> Self {
        Self::standard()
    }
}

/// An actual triangle with finite, non-collinear vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TriangleJson", into = "TriangleJson")]
pub struct GeometricTriangle {
    pub frame: String,
    pub vertices: [HomPoint; 3],
}

impl GeometricTriangle {
    pub fn new(frame: &str, vertices: [HomPoint; 3]) -> Result<Self> {
        if vertices.iter().any(HomPoint::is_at_infinity) {
            return Err(Error::InvalidInput("triangle vertices must be finite".into()));
        }
        if collinear(&vertices[0], &vertices[1], &vertices[2]) {
            return Err(Error::DegeneratePoints);
        }
        Ok(Self { frame: frame.into(), vertices })
    }

    pub fn centroid(&self) -> HomPoint {
        let mut sx = Scalar::zero();
        let mut sy = Scalar::zero();
        for v in &self.vertices {
            let (x, y) = v.to_affine().expect("finite");
            sx += x;
            sy += y;
        }
        HomPoint::affine(sx * third(), sy * third())
    }

    /// Point reflection in the mass center.
    pub fn reflect_mass_center(&self) -> Self {
        let (cx, cy) = self.centroid().to_affine().expect("finite");
        let v = self.vertices.clone().map(|p| {
            let (x, y) = p.to_affine().expect("finite");
            HomPoint::affine(int(2) * &cx - x, int(2) * &cy - y)
        });
        Self { frame: self.frame.clone(), vertices: v }
    }
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    frame: String,
    vertices: [[String; 2]; 3],
}

impl From<GeometricTriangle> for TriangleJson {
    fn from(t: GeometricTriangle) -> Self {
        let vertices = t.vertices.map(|p| {
            let (x, y) = p.to_affine().expect("finite");
            [x.to_string(), y.to_string()]
        });
        Self { frame: t.frame, vertices }
    }
}

impl TryFrom<TriangleJson> for GeometricTriangle {
    type Error = Error;

    fn try_from(raw: TriangleJson) -> Result<Self> {
        let mut v = Vec::with_capacity(3);
        for [x, y] in &raw.vertices {
            v.push(HomPoint::affine(parse_scalar(x)?, parse_scalar(y)?));
        }
        Self::new(&raw.frame, v.try_into().expect("three"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn pt(x: i64, y: i64) -> HomPoint {
        HomPoint::affine_int(x, y)
    }

    #[test]
    fn reference_has_thirds() {
        let f = Frame::standard();
        let e = GeometricTriangle::new("E", f.vertices().clone()).unwrap();
        assert_eq!(f.bary_from_triangle(&e).unwrap(), TriangleElement::reference());
        assert_eq!(f.triangle_from_bary(&TriangleElement::reference()).unwrap(), e);
    }

    #[test]
    fn shifted_and_scaled() {
        let f = Frame::standard();
        // Translate E by E₂ − E₁: coordinates (−2/3, 4/3, 1/3).
        let t = GeometricTriangle::new("E", [pt(1, 0), pt(2, 0), pt(1, 1)]).unwrap();
        let x = f.bary_from_triangle(&t).unwrap();
        assert_eq!(x, TriangleElement::new([rat(-2, 3), rat(4, 3), rat(1, 3)]));
        assert_eq!(f.triangle_from_bary(&x).unwrap(), t);
        // E scaled by 2 about E₁: d = 1/2, centroid (1/3, 2/3, 2/3)·… in E.
        let t2 = GeometricTriangle::new("E", [pt(0, 0), pt(2, 0), pt(0, 2)]).unwrap();
        let x2 = f.bary_from_triangle(&t2).unwrap();
        assert_eq!(x2.coordinate_sum(), rat(1, 2));
        assert_eq!(f.element_from_vertices(&t2.vertices.clone().map(Some)).unwrap(), x2);
    }

    #[test]
    fn non_parallel_sides_rejected() {
        let f = Frame::standard();
        let t = GeometricTriangle::new("E", [pt(0, 0), pt(2, 1), pt(0, 1)]).unwrap();
        assert_eq!(f.bary_from_triangle(&t), Err(Error::SideMismatch));
        assert_eq!(f.element_from_vertices(&t.vertices.clone().map(Some)), Err(Error::SideMismatch));
    }

    #[test]
    fn pseudo_vertices_are_directions() {
        let f = Frame::standard();
        let x = TriangleElement::from_ints([1, -1, 0]);
        let v = f.vertices_of(&x);
        assert!(v.iter().all(|p| p.as_ref().unwrap().is_at_infinity()));
        assert_eq!(f.element_from_vertices(&v).unwrap(), x);
        let cp = TriangleElement::completely_pseudo(2);
        let v = f.vertices_of(&cp);
        assert!(v[2].is_none());
        assert_eq!(v[0].as_ref().unwrap(), &f.side_direction(2, 0));
        assert_eq!(f.element_from_vertices(&v).unwrap(), cp);
    }

    #[test]
    fn json_roundtrip() {
        let t = GeometricTriangle::new("E", [pt(0, 0), pt(2, 0), pt(0, 2)]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"frame":"E","vertices":[["0","0"],["2","0"],["0","2"]]}"#);
        assert_eq!(serde_json::from_str::<GeometricTriangle>(&s).unwrap(), t);
    }
}
