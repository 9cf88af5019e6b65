use num_traits::{One, Zero};

use super::linalg::{nullspace, Mat3};
use super::point::HomPoint;
use super::projmap::ProjMap;
use super::scalar::{canonical_ints, Scalar};
use crate::{Error, Result};

/// Conic `pᵀ·S·p = 0`, with `S` symmetric and scaled to coprime integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    sym: Mat3,
}

impl Conic {
    pub fn new(sym: Mat3) -> Result<Self> {
        if sym != sym.transpose() {
            return Err(Error::Parse("conic matrix must be symmetric".into()));
        }
        let flat: Vec<Scalar> = sym.0.iter().flatten().cloned().collect();
        let ints = canonical_ints(&flat).ok_or(Error::ZeroVector)?;
        let mut it = ints.into_iter().map(Scalar::from_integer);
        let m = Mat3([0, 1, 2].map(|_| [0, 1, 2].map(|_| it.next().expect("9 entries"))));
        Ok(Self { sym: m })
    }

    /// `x² + y² − z²`.
    pub fn unit_circle() -> Self {
        let one = Scalar::one();
        Self::new(Mat3::diagonal([one.clone(), one.clone(), -one])).expect("nonzero")
    }

    /// Conic from `a x² + b xy + c y² + d xz + e yz + f z²`.
    pub fn from_coefficients(c: &[Scalar; 6]) -> Result<Self> {
        let h = |x: &Scalar| x / Scalar::from_integer(2.into());
        Self::new(Mat3([
            [c[0].clone(), h(&c[1]), h(&c[3])],
            [h(&c[1]), c[2].clone(), h(&c[4])],
            [h(&c[3]), h(&c[4]), c[5].clone()],
        ]))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.sym
    }

    pub fn eval(&self, p: &HomPoint) -> Scalar {
        self.bilinear(&p.scalars(), &p.scalars())
    }

    fn bilinear(&self, u: &[Scalar; 3], v: &[Scalar; 3]) -> Scalar {
        let sv = self.sym.apply(v);
        u.iter().zip(sv.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_degenerate(&self) -> bool {
        self.sym.det().is_zero()
    }

    /// Image under `map`: `S' = M⁻ᵀ·S·M⁻¹`.
    pub fn transform(&self, map: &ProjMap) -> Conic {
        let inv = map.inverse();
        let m = inv.matrix();
        Conic::new(m.transpose().mul(&self.sym).mul(m)).expect("invertible map")
    }

    /// Second intersection with the line through `base` of affine slope `t`,
    /// i.e. the line towards the point at infinity `(1 : t : 0)`.
    pub fn rational_point(&self, base: &HomPoint, t: &Scalar) -> Result<HomPoint> {
        if self.is_degenerate() {
            return Err(Error::DegenerateConic);
        }
        if !self.contains(base) {
            return Err(Error::NotOnConic);
        }
        let b = base.scalars();
        let d = [Scalar::one(), t.clone(), Scalar::zero()];
        let bd = self.bilinear(&b, &d);
        if bd.is_zero() {
            return Err(Error::TangentParameter);
        }
        // q(b + μ d) = μ (2 bᵀSd + μ q(d)), second root μ = −2 bᵀSd / q(d).
        let qd = self.bilinear(&d, &d);
        let two_bd = &bd + &bd;
        let v = [0, 1, 2].map(|i| &qd * &b[i] - &two_bd * &d[i]);
        HomPoint::from_scalars(&v)
    }
}

fn conic_row(p: &HomPoint) -> Vec<Scalar> {
    let [x, y, z] = p.scalars();
    vec![&x * &x, &x * &y, &y * &y, &x * &z, &y * &z, &z * &z]
}

/// The conic through five points. Fails when the points do not determine a
/// unique conic.
pub fn conic_through_5(pts: &[HomPoint; 5]) -> Result<Conic> {
    for i in 0..5 {
        if pts[i + 1..].contains(&pts[i]) {
            return Err(Error::DegeneratePoints);
        }
    }
    let rows: Vec<Vec<Scalar>> = pts.iter().map(conic_row).collect();
    let ns = nullspace(&rows, 6);
    if ns.len() != 1 {
        return Err(Error::UnderDetermined(ns.len()));
    }
    let c: [Scalar; 6] = ns[0].clone().try_into().expect("6 coefficients");
    Conic::from_coefficients(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{int, rat};

    fn p(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn unit_circle_through_five() {
        let pts = [p(1, 0, 1), p(0, 1, 1), p(-1, 0, 1), p(0, -1, 1), p(3, 4, 5)];
        let c = conic_through_5(&pts).unwrap();
        assert_eq!(c, Conic::unit_circle());
        assert!(pts.iter().all(|q| c.contains(q)));
        assert!(!c.is_degenerate());
    }

    #[test]
    fn three_collinear_gives_degenerate() {
        // Three points on y = 0 and two off it: the pair of lines y·(x + y − 5) = 0
        // is the only conic, and it is singular.
        let pts = [p(0, 0, 1), p(1, 0, 1), p(3, 0, 1), p(2, 3, 1), p(4, 1, 1)];
        let c = conic_through_5(&pts).unwrap();
        assert!(c.is_degenerate());
        assert!(pts.iter().all(|q| c.contains(q)));
        let four = [p(0, 0, 1), p(1, 0, 1), p(3, 0, 1), p(5, 0, 1), p(4, 1, 1)];
        assert_eq!(conic_through_5(&four), Err(Error::UnderDetermined(2)));
    }

    /// Oracle: ((1 − t²) : 2t : (1 + t²)) parametrizes the unit circle from (−1 : 0 : 1).
    fn param(t: &Scalar) -> HomPoint {
        let one = int(1);
        HomPoint::new(&one - t * t, t + t, one + t * t).unwrap()
    }

    #[test]
    fn rational_points_on_unit_circle() {
        let c = Conic::unit_circle();
        let base = p(-1, 0, 1);
        assert_eq!(c.rational_point(&base, &int(1)).unwrap(), p(0, 1, 1));
        assert_eq!(c.rational_point(&base, &int(0)).unwrap(), p(1, 0, 1));
        for t in [rat(1, 2), rat(-7, 3), int(5), rat(11, 13)] {
            let q = c.rational_point(&base, &t).unwrap();
            assert_eq!(q, param(&t));
            assert!(c.contains(&q));
        }
        // The slope-1 direction lies on x² − y² = 0, an asymptote case.
        let hyperbola = Conic::from_coefficients(&[int(1), int(0), int(-1), int(0), int(0), int(-1)]).unwrap();
        let q = hyperbola.rational_point(&p(1, 0, 1), &int(1)).unwrap();
        assert_eq!(q, p(1, 1, 0));
    }

    #[test]
    fn tangent_and_off_conic() {
        let c = Conic::unit_circle();
        // The tangent at (1:0:1) is vertical; slope parameters never reach it,
        // but the tangent at (0:1:1) is horizontal (t = 0).
        assert_eq!(c.rational_point(&p(0, 1, 1), &int(0)), Err(Error::TangentParameter));
        assert_eq!(c.rational_point(&p(2, 0, 1), &int(1)), Err(Error::NotOnConic));
    }

    #[test]
    fn transform_keeps_points() {
        let c = Conic::unit_circle();
        let m = ProjMap::from_ints([[2, 1, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        let image = c.transform(&m);
        for q in [p(1, 0, 1), p(3, 4, 5), p(-5, 12, 13)] {
            assert!(image.contains(&m.apply(&q)));
        }
    }
}
