use num_traits::Zero;

use super::linalg::Mat3;
use super::point::{HomLine, HomPoint};
use super::scalar::Scalar;
use crate::{Error, Result};

/// Invertible projective transformation. Points map by `M·p`, lines by
/// `M⁻ᵀ·l`, so incidence is preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    m: Mat3,
    inv: Mat3,
}

impl ProjMap {
    pub fn new(m: Mat3) -> Result<Self> {
        let inv = m.inverse()?;
        Ok(Self { m, inv })
    }

    pub fn identity() -> Self {
        Self { m: Mat3::identity(), inv: Mat3::identity() }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(Mat3(rows.map(|r| r.map(|x| Scalar::from_integer(x.into())))))
    }

    /// The map sending `src[i]` to `dst[i]` for all four points.
    pub fn from_correspondence(src: &[HomPoint; 4], dst: &[HomPoint; 4]) -> Result<Self> {
        let a = frame_matrix(src)?;
        let b = frame_matrix(dst)?;
        Self::new(b.mul(&a.inverse()?))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn apply(&self, p: &HomPoint) -> HomPoint {
        HomPoint::from_scalars(&self.m.apply(&p.scalars())).expect("invertible map")
    }

    pub fn apply_line(&self, l: &HomLine) -> HomLine {
        HomLine::from_scalars(&self.inv.transpose().apply(&l.scalars())).expect("invertible map")
    }

    pub fn inverse(&self) -> Self {
        Self { m: self.inv.clone(), inv: self.m.clone() }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &ProjMap) -> Self {
        Self { m: self.m.mul(&first.m), inv: first.inv.mul(&self.inv) }
    }
}

/// Columns `λᵢ·pᵢ` with `Σ λᵢ·pᵢ = p₄`, sending the standard frame to `pts`.
fn frame_matrix(pts: &[HomPoint; 4]) -> Result<Mat3> {
    let base = Mat3::from_columns([pts[0].scalars(), pts[1].scalars(), pts[2].scalars()]);
    let inv = base.inverse().map_err(|_| Error::DegenerateQuadruple)?;
    let lambda = inv.apply(&pts[3].scalars());
    if lambda.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateQuadruple);
    }
    let cols = [0, 1, 2].map(|j| pts[j].scalars().map(|x| x * &lambda[j]));
    Ok(Mat3::from_columns(cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::point::{join, meet};
    use crate::kernel::scalar::int;

    fn basis() -> [HomPoint; 4] {
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)].map(|(x, y, z)| HomPoint::from_ints(x, y, z).unwrap())
    }

    #[test]
    fn identity_from_basis() {
        let m = ProjMap::from_correspondence(&basis(), &basis()).unwrap();
        assert_eq!(m.matrix(), &Mat3::identity());
    }

    #[test]
    fn diagonal_rescaling() {
        let mut dst = basis();
        dst[3] = HomPoint::from_ints(2, 1, 1).unwrap();
        let m = ProjMap::from_correspondence(&basis(), &dst).unwrap();
        // Solving λ·(columns) = (2,1,1) gives λ = (2,1,1).
        assert_eq!(m.matrix(), &Mat3::diagonal([int(2), int(1), int(1)]));
    }

    #[test]
    fn round_trip_and_degenerate() {
        let src = [(0, 0, 1), (3, 1, 1), (-2, 5, 1), (1, -4, 2)].map(|(x, y, z)| HomPoint::from_ints(x, y, z).unwrap());
        let m = ProjMap::from_correspondence(&basis(), &src).unwrap();
        let back = m.inverse().after(&m);
        for p in &src {
            assert_eq!(&back.apply(p), p);
        }
        for (b, s) in basis().iter().zip(&src) {
            assert_eq!(&m.apply(b), s);
        }
        let collinear = [(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 1)].map(|(x, y, z)| HomPoint::from_ints(x, y, z).unwrap());
        assert_eq!(ProjMap::from_correspondence(&collinear, &src), Err(Error::DegenerateQuadruple));
    }

    #[test]
    fn lines_follow_points() {
        let m = ProjMap::from_ints([[1, 2, 0], [0, 1, -3], [4, 0, 1]]).unwrap();
        let (p, q) = (HomPoint::affine_int(1, 2), HomPoint::affine_int(-5, 7));
        let l = join(&p, &q).unwrap();
        assert_eq!(m.apply_line(&l), join(&m.apply(&p), &m.apply(&q)).unwrap());
        let k = HomLine::from_ints(1, 1, 1).unwrap();
        assert_eq!(m.apply(&meet(&l, &k).unwrap()), meet(&m.apply_line(&l), &m.apply_line(&k)).unwrap());
    }
}
