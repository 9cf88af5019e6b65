//! Seeded generators for general-position test instances.
//!
//! Raw draws are small integers so that the rational bit growth through
//! several rounds of joins and meets stays bounded.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::{rat, HomPoint, Scalar};

/// Upper bound on rejection rounds of a single generator call.
pub const MAX_REJECTIONS: usize = 1000;

pub const COORD_RANGE: i64 = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coord(rng: &mut impl Rng) -> i64 {
    rng.random_range(-COORD_RANGE..=COORD_RANGE)
}

pub fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

pub fn affine_point(rng: &mut impl Rng) -> HomPoint {
    HomPoint::affine_int(coord(rng), coord(rng))
}

/// Point `u·p + v·q` on the line `pq`, kept finite.
pub fn point_between(rng: &mut impl Rng, p: &HomPoint, q: &HomPoint) -> HomPoint {
    loop {
        let (u, v) = (nonzero(rng, COORD_RANGE), nonzero(rng, COORD_RANGE));
        if let Ok(r) = crate::kernel::combine(&BigInt::from(u), p, &BigInt::from(v), q) {
            if !r.is_at_infinity() && &r != p && &r != q {
                return r;
            }
        }
    }
}

/// Rational `n/d` with `|n| ≤ num_bound`, `1 ≤ d ≤ den_bound`.
pub fn rational(rng: &mut impl Rng, num_bound: i64, den_bound: i64) -> Scalar {
    let n = rng.random_range(-num_bound..=num_bound);
    let d = rng.random_range(1..=den_bound);
    rat(n, d)
}
