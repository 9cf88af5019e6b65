//! Homogeneous points and lines of the rational projective plane.
//!
//! Both are stored as coprime integer triples whose first nonzero entry is
//! positive, so equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{canonical_bigints, canonical_ints, format_scalar, parse_scalar, Scalar};
use crate::{Error, Result};

macro_rules! homogeneous_triple {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            c: [BigInt; 3],
        }

        impl $name {
            pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<Self> {
                Self::from_scalars(&[x, y, z])
            }

            pub fn from_scalars(v: &[Scalar; 3]) -> Result<Self> {
                let c = canonical_ints(v).ok_or(Error::ZeroVector)?;
                Ok(Self::from_canonical(c))
            }

            pub fn from_bigints(v: [BigInt; 3]) -> Result<Self> {
                let c = canonical_bigints(v.to_vec()).ok_or(Error::ZeroVector)?;
                Ok(Self::from_canonical(c))
            }

            pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
                Self::from_bigints([x.into(), y.into(), z.into()])
            }

            fn from_canonical(c: Vec<BigInt>) -> Self {
                let [a, b, d]: [BigInt; 3] = c.try_into().expect("triple");
                Self { c: [a, b, d] }
            }

            /// Canonical integer coordinates.
            pub fn coords(&self) -> &[BigInt; 3] {
                &self.c
            }

            pub fn scalars(&self) -> [Scalar; 3] {
                self.c.clone().map(Scalar::from_integer)
            }

            pub fn to_strings(&self) -> [String; 3] {
                [self.c[0].to_string(), self.c[1].to_string(), self.c[2].to_string()]
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}:{}:{})", self.c[0], self.c[1], self.c[2])
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.to_strings().serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                use serde::de::Error as _;
                let raw = <[String; 3]>::deserialize(d)?;
                let mut v: [Scalar; 3] = Default::default();
                for (o, s) in v.iter_mut().zip(raw.iter()) {
                    *o = parse_scalar(s).map_err(D::Error::custom)?;
                }
                Self::from_scalars(&v).map_err(D::Error::custom)
            }
        }
    };
}

homogeneous_triple!(HomPoint);
homogeneous_triple!(HomLine);

impl HomPoint {
    /// The affine point `(x, y)`, i.e. `(x : y : 1)`.
    pub fn affine(x: Scalar, y: Scalar) -> Self {
        Self::new(x, y, Scalar::from_integer(1.into())).expect("z = 1")
    }

    pub fn affine_int(x: i64, y: i64) -> Self {
        Self::from_ints(x, y, 1).expect("z = 1")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.c[2].is_zero()
    }

    pub fn to_affine(&self) -> Option<(Scalar, Scalar)> {
        if self.is_at_infinity() {
            return None;
        }
        let z = Scalar::from_integer(self.c[2].clone());
        Some((Scalar::from_integer(self.c[0].clone()) / &z, Scalar::from_integer(self.c[1].clone()) / z))
    }

    /// Line with the same coordinates: the polar with respect to `x² + y² + z² = 0`.
    pub fn polar(&self) -> HomLine {
        HomLine { c: self.c.clone() }
    }

    pub fn lies_on(&self, l: &HomLine) -> bool {
        dot(&self.c, &l.c).is_zero()
    }

    pub fn affine_string(&self) -> String {
        match self.to_affine() {
            Some((x, y)) => format!("({}, {})", format_scalar(&x), format_scalar(&y)),
            None => format!("{self} at infinity"),
        }
    }
}

impl HomLine {
    pub fn at_infinity() -> Self {
        Self::from_ints(0, 0, 1).expect("nonzero")
    }

    pub fn pole(&self) -> HomPoint {
        HomPoint { c: self.c.clone() }
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        p.lies_on(self)
    }

    /// Point at infinity of this line. Fails for the line at infinity itself.
    pub fn point_at_infinity(&self) -> Result<HomPoint> {
        meet(self, &HomLine::at_infinity())
    }
}

pub(crate) fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn det3(a: &[BigInt; 3], b: &[BigInt; 3], c: &[BigInt; 3]) -> BigInt {
    dot(&cross(a, b), c)
}

/// Line through two distinct points.
pub fn join(p: &HomPoint, q: &HomPoint) -> Result<HomLine> {
    HomLine::from_bigints(cross(&p.c, &q.c)).map_err(|_| Error::CoincidentPoints)
}

/// Intersection of two distinct lines.
pub fn meet(l: &HomLine, m: &HomLine) -> Result<HomPoint> {
    HomPoint::from_bigints(cross(&l.c, &m.c)).map_err(|_| Error::CoincidentLines)
}

pub fn collinear(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> bool {
    det3(&p.c, &q.c, &r.c).is_zero()
}

pub fn concurrent(l: &HomLine, m: &HomLine, n: &HomLine) -> bool {
    det3(&l.c, &m.c, &n.c).is_zero()
}

/// `a·p + b·q` on representatives; used to place points on a given line.
pub fn combine(a: &BigInt, p: &HomPoint, b: &BigInt, q: &HomPoint) -> Result<HomPoint> {
    HomPoint::from_bigints([0, 1, 2].map(|i| a * &p.c[i] + b * &q.c[i]))
}

/// Affine midpoint of two finite points.
pub fn midpoint(p: &HomPoint, q: &HomPoint) -> Result<HomPoint> {
    if p.is_at_infinity() || q.is_at_infinity() {
        return Err(Error::undefined("midpoint of a point at infinity"));
    }
    // q_z·p + p_z·q has weight 2·p_z·q_z, and averages the affine positions.
    combine(&q.c[2], p, &p.c[2], q)
}

/// A coordinate unit vector that does not lie on `l`.
pub(crate) fn basis_point_off(l: &HomLine) -> [BigInt; 3] {
    let i = (0..3).find(|&i| !l.c[i].is_zero()).expect("nonzero line");
    let mut v: [BigInt; 3] = Default::default();
    v[i] = BigInt::from(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::rat;

    fn p(x: i64, y: i64, z: i64) -> HomPoint {
        HomPoint::from_ints(x, y, z).unwrap()
    }
    fn l(x: i64, y: i64, z: i64) -> HomLine {
        HomLine::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&p(1, 0, 0), &p(0, 1, 0)).unwrap(), l(0, 0, 1));
        assert_eq!(join(&p(0, 0, 1), &p(1, 1, 1)).unwrap(), l(1, -1, 0));
        assert_eq!(join(&p(2, 4, 2), &p(1, 2, 1)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&l(1, 0, 0), &l(0, 1, 0)).unwrap(), p(0, 0, 1));
        assert_eq!(meet(&l(1, 0, -1), &l(0, 1, -1)).unwrap(), p(1, 1, 1));
        let inf = meet(&l(1, 0, -1), &l(1, 0, -2)).unwrap();
        assert_eq!(inf, p(0, 1, 0));
        assert!(inf.is_at_infinity());
        assert_eq!(meet(&l(2, 0, -2), &l(1, 0, -1)), Err(Error::CoincidentLines));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&p(1, 0, 1), &p(0, 1, 1), &p(1, 1, 2)));
        assert!(!collinear(&p(1, 0, 0), &p(0, 1, 0), &p(0, 0, 1)));
        assert!(collinear(&p(3, 1, 1), &p(3, 1, 1), &p(0, 7, 1)));
        assert!(concurrent(&l(1, 0, 0), &l(0, 1, 0), &l(1, 1, 0)));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(-2, 4, -6), p(1, -2, 3));
        assert_eq!(p(0, -3, 6).coords()[1], BigInt::from(1));
        let q = HomPoint::new(rat(1, 3), rat(-2, 1), rat(0, 1)).unwrap();
        assert_eq!(q.to_strings(), ["1", "-6", "0"]);
        assert_eq!(HomPoint::from_ints(0, 0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn midpoint_and_json() {
        let m = midpoint(&p(0, 0, 1), &p(4, 2, 2)).unwrap();
        assert_eq!(m.to_affine().unwrap(), (rat(1, 1), rat(1, 2)));
        let json = serde_json::to_string(&p(2, -4, 6)).unwrap();
        assert_eq!(json, r#"["1","-2","3"]"#);
        let back: HomPoint = serde_json::from_str(r#"["1/3","-2","0"]"#).unwrap();
        assert_eq!(back, p(1, -6, 0));
        assert!(serde_json::from_str::<HomLine>(r#"["0","0","0"]"#).is_err());
    }
}
