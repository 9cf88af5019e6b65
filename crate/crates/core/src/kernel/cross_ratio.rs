//! Cross-ratio and harmonic conjugates.
//!
//! Convention: `(a, b; c, d) = ((c − a)/(c − b)) / ((d − a)/(d − b))` in any
//! affine chart of the common line. It is evaluated chart-free with 3×3
//! brackets against a fixed point off the line, so `(a, b; c, d) = −1`
//! says `c` and `d` separate `a` and `b` harmonically.

use num_bigint::BigInt;
use num_traits::Zero;

use super::point::{basis_point_off, det3, join, HomPoint};
use super::scalar::Scalar;
use crate::{Error, Result};

struct Brackets {
    r: [BigInt; 3],
}

impl Brackets {
    fn on_line_of(a: &HomPoint, b: &HomPoint) -> Result<Self> {
        let l = join(a, b).map_err(|_| Error::DegeneratePoints)?;
        Ok(Self { r: basis_point_off(&l) })
    }

    fn of(&self, p: &HomPoint, q: &HomPoint) -> BigInt {
        det3(p.coords(), q.coords(), &self.r)
    }
}

fn all_distinct(ps: &[&HomPoint]) -> bool {
    ps.iter().enumerate().all(|(i, p)| ps[i + 1..].iter().all(|q| p != q))
}

pub fn cross_ratio(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<Scalar> {
    if !all_distinct(&[a, b, c, d]) {
        return Err(Error::DegeneratePoints);
    }
    let line = join(a, b)?;
    if !c.lies_on(&line) || !d.lies_on(&line) {
        return Err(Error::NotCollinear);
    }
    let br = Brackets::on_line_of(a, b)?;
    let num = br.of(a, c) * br.of(b, d);
    let den = br.of(a, d) * br.of(b, c);
    Ok(Scalar::new(num, den))
}

/// The point `y` on the line through `a` and `x` with `(s, y; a, x) = −1`.
pub fn harmonic_conjugate(s: &HomPoint, a: &HomPoint, x: &HomPoint) -> Result<HomPoint> {
    if !all_distinct(&[s, a, x]) {
        return Err(Error::DegeneratePoints);
    }
    if !s.lies_on(&join(a, x)?) {
        return Err(Error::NotCollinear);
    }
    let br = Brackets::on_line_of(a, x)?;
    // s = α·a + β·x with α ∝ [s,x], β ∝ [a,s]; the conjugate is α·a − β·x.
    let alpha = br.of(s, x);
    let beta = br.of(a, s);
    debug_assert!(!alpha.is_zero() && !beta.is_zero());
    super::point::combine(&alpha, a, &(-beta), x)
}
