//! Pappus and Pascal, classic and generalized.
//!
//! Throughout, `Q_ij = AᵢB_k ∩ BⱼA_k` for every permutation `(i, j, k)`.
//! Pascal hexagons are given in the traversal order `A₁ B₃ A₂ B₁ A₃ B₂`.

use super::central::{join_as, label, meet_as};
use super::random::{self, MAX_REJECTIONS};
use super::scene::{third, PERMUTATIONS};
use crate::kernel::{collinear, concurrent, conic_through_5, join, HomLine, HomPoint};
use crate::{Error, Result};

type Triple = [HomPoint; 3];

fn check_distinct(pts: &[&HomPoint]) -> Result<()> {
    for (i, p) in pts.iter().enumerate() {
        if pts[i + 1..].contains(p) {
            return Err(Error::InvalidInput("points must be distinct".into()));
        }
    }
    Ok(())
}

fn check_pappus_input(a: &Triple, b: &Triple) -> Result<()> {
    check_distinct(&[&a[0], &a[1], &a[2], &b[0], &b[1], &b[2]])?;
    if !collinear(&a[0], &a[1], &a[2]) || !collinear(&b[0], &b[1], &b[2]) {
        return Err(Error::InvalidInput("Pappus triples must be collinear".into()));
    }
    if join(&a[0], &a[1])? == join(&b[0], &b[1])? {
        return Err(Error::InvalidInput("Pappus triples lie on one line".into()));
    }
    Ok(())
}

/// The cross meets `X_k = AᵢBⱼ ∩ AⱼBᵢ`.
pub fn cross_points(a: &Triple, b: &Triple) -> Result<Triple> {
    let mut out = Vec::with_capacity(3);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let what = || label("X", &[k]);
        out.push(meet_as(&join_as(&a[i], &b[j], what)?, &join_as(&a[j], &b[i], what)?, what)?);
    }
    Ok(out.try_into().expect("three"))
}

fn line_through_three(x: &Triple) -> Result<HomLine> {
    let l = join_as(&x[0], &x[1], || "Pappus line".into())?;
    if !x[2].lies_on(&l) {
        return Err(Error::NotCollinear);
    }
    Ok(l)
}

/// Line through the three cross meets of two collinear triples.
pub fn pappus_line(a: &Triple, b: &Triple) -> Result<HomLine> {
    check_pappus_input(a, b)?;
    line_through_three(&cross_points(a, b)?)
}

/// `Q[i][j]` for `i ≠ j`.
pub fn q_points(a: &Triple, b: &Triple) -> Result<[[Option<HomPoint>; 3]; 3]> {
    let mut q: [[Option<HomPoint>; 3]; 3] = Default::default();
    for &(i, j) in &PERMUTATIONS {
        let k = third(i, j);
        let what = || label("Q", &[i, j]);
        q[i][j] = Some(meet_as(&join_as(&a[i], &b[k], what)?, &join_as(&b[j], &a[k], what)?, what)?);
    }
    Ok(q)
}

fn qp(q: &[[Option<HomPoint>; 3]; 3], i: usize, j: usize) -> &HomPoint {
    q[i][j].as_ref().expect("off-diagonal")
}

/// Common point of `Q₁₂Q₂₁`, `Q₁₃Q₃₁`, `Q₂₃Q₃₂`.
fn q_center(a: &Triple, b: &Triple) -> Result<HomPoint> {
    let q = q_points(a, b)?;
    let line = |i: usize, j: usize| join_as(qp(&q, i, j), qp(&q, j, i), || format!("line {}{}", label("Q", &[i, j]), label("Q", &[j, i])));
    let (l12, l13, l23) = (line(0, 1)?, line(0, 2)?, line(1, 2)?);
    if !concurrent(&l12, &l13, &l23) {
        return Err(Error::NotConcurrent);
    }
    meet_as(&l12, &l13, || "Q-line center".into())
}

pub fn generalized_pappus_center(a: &Triple, b: &Triple) -> Result<HomPoint> {
    check_pappus_input(a, b)?;
    q_center(a, b)
}

/// The reduction used for the generalized Pappus theorem: the triangles
/// `Q₁₂Q₂₃Q₃₁` and `Q₂₁Q₃₂Q₁₃` meet side by side on the Pappus line.
pub fn verify_pappus_reduction(a: &Triple, b: &Triple) -> Result<bool> {
    let pl = pappus_line(a, b)?;
    let q = q_points(a, b)?;
    let t1 = [qp(&q, 0, 1), qp(&q, 1, 2), qp(&q, 2, 0)];
    let t2 = [qp(&q, 1, 0), qp(&q, 2, 1), qp(&q, 0, 2)];
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        let s1 = join_as(t1[u], t1[v], || "Q triangle side".into())?;
        let s2 = join_as(t2[u], t2[v], || "Q triangle side".into())?;
        let x = meet_as(&s1, &s2, || "Q triangle side meet".into())?;
        if !x.lies_on(&pl) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `A₁ B₃ A₂ B₁ A₃ B₂` into the two triples.
pub fn hexagon_triples(h: &[HomPoint; 6]) -> (Triple, Triple) {
    (
        [h[0].clone(), h[2].clone(), h[4].clone()],
        [h[3].clone(), h[5].clone(), h[1].clone()],
    )
}

fn check_on_conic(h: &[HomPoint; 6]) -> Result<()> {
    check_distinct(&h.iter().collect::<Vec<_>>())?;
    let five: [HomPoint; 5] = [h[0].clone(), h[1].clone(), h[2].clone(), h[3].clone(), h[4].clone()];
    let conic = conic_through_5(&five).map_err(|_| Error::InvalidInput("hexagon does not fix a conic".into()))?;
    if conic.is_degenerate() || !conic.contains(&h[5]) {
        return Err(Error::InvalidInput("hexagon is not inscribed in a nondegenerate conic".into()));
    }
    Ok(())
}

/// Classic Pascal line: opposite sides of the hexagon meet on one line.
pub fn pascal_line(h: &[HomPoint; 6]) -> Result<HomLine> {
    check_on_conic(h)?;
    let side = |i: usize| join_as(&h[i % 6], &h[(i + 1) % 6], || format!("hexagon side {}", i + 1));
    let mut x = Vec::with_capacity(3);
    for i in 0..3 {
        x.push(meet_as(&side(i)?, &side(i + 3)?, || "opposite sides".into())?);
    }
    line_through_three(&x.try_into().expect("three"))
}

pub fn generalized_pascal_center(h: &[HomPoint; 6]) -> Result<HomPoint> {
    check_on_conic(h)?;
    let (a, b) = hexagon_triples(h);
    q_center(&a, &b)
}

/// `S_ik = AᵢAⱼ ∩ BⱼB_k` for the permutation `(i, j, k)`.
fn s_point(a: &Triple, b: &Triple, i: usize, k: usize) -> Result<HomPoint> {
    let j = third(i, k);
    let what = || label("S", &[i, k]);
    meet_as(&join_as(&a[i], &a[j], what)?, &join_as(&b[j], &b[k], what)?, what)
}

/// Common point of the lines `lᵢ = S_jk S_kj`.
pub fn another_pascal_center(h: &[HomPoint; 6]) -> Result<HomPoint> {
    check_on_conic(h)?;
    let (a, b) = hexagon_triples(h);
    let mut lines = Vec::with_capacity(3);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let (sjk, skj) = (s_point(&a, &b, j, k)?, s_point(&a, &b, k, j)?);
        lines.push(join_as(&sjk, &skj, || label("l", &[i]))?);
    }
    if !concurrent(&lines[0], &lines[1], &lines[2]) {
        return Err(Error::NotConcurrent);
    }
    meet_as(&lines[0], &lines[1], || "l-line center".into())
}

/// First step of the proof: `S = A₃B₃ ∩ A₂B₂`, `S₃₂`, `S₂₃` are collinear.
pub fn verify_another_pascal_step(h: &[HomPoint; 6]) -> Result<bool> {
    check_on_conic(h)?;
    let (a, b) = hexagon_triples(h);
    let s = meet_as(&join_as(&a[2], &b[2], || "A3B3".into())?, &join_as(&a[1], &b[1], || "A2B2".into())?, || "S".into())?;
    Ok(collinear(&s, &s_point(&a, &b, 2, 1)?, &s_point(&a, &b, 1, 2)?))
}

/// Two collinear triples in general position, deterministic per seed.
pub fn random_pappus_triples(seed: u64) -> Result<(Triple, Triple)> {
    let mut rng = random::rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let (p, q) = (random::affine_point(&mut rng), random::affine_point(&mut rng));
        let (u, v) = (random::affine_point(&mut rng), random::affine_point(&mut rng));
        if p == q || u == v {
            continue;
        }
        let a = [p.clone(), q.clone(), random::point_between(&mut rng, &p, &q)];
        let b = [u.clone(), v.clone(), random::point_between(&mut rng, &u, &v)];
        if check_pappus_input(&a, &b).is_err() || a.iter().chain(&b).any(|x| on_both(x, &a, &b)) {
            continue;
        }
        if q_points(&a, &b).is_ok() && cross_points(&a, &b).is_ok() {
            return Ok((a, b));
        }
    }
    Err(Error::GeneralPositionExhausted(MAX_REJECTIONS))
}

fn on_both(x: &HomPoint, a: &Triple, b: &Triple) -> bool {
    let (la, lb) = (join(&a[0], &a[1]), join(&b[0], &b[1]));
    matches!((la, lb), (Ok(la), Ok(lb)) if x.lies_on(&la) && x.lies_on(&lb))
}

/// Six distinct points on a random nondegenerate conic, in hexagon order.
///
/// Five integer points fix the conic; the sixth is its second intersection
/// with a line of random rational slope through the first.
pub fn random_conic_hexagon(seed: u64) -> Result<[HomPoint; 6]> {
    let mut rng = random::rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let five = [(); 5].map(|_| random::affine_point(&mut rng));
        let general = (0..5).all(|x| (x + 1..5).all(|y| five[x] != five[y] && (y + 1..5).all(|z| !collinear(&five[x], &five[y], &five[z]))));
        if !general {
            continue;
        }
        let Ok(conic) = conic_through_5(&five) else { continue };
        if conic.is_degenerate() {
            continue;
        }
        let t = random::rational(&mut rng, 20, 7);
        let Ok(sixth) = conic.rational_point(&five[0], &t) else { continue };
        if five.contains(&sixth) {
            continue;
        }
        let h: [HomPoint; 6] = [five[0].clone(), five[1].clone(), five[2].clone(), five[3].clone(), five[4].clone(), sixth];
        let (a, b) = hexagon_triples(&h);
        if q_points(&a, &b).is_ok() && pascal_line(&h).is_ok() && (0..3).all(|i| (0..3).all(|k| i == k || s_point(&a, &b, i, k).is_ok())) {
            return Ok(h);
        }
    }
    Err(Error::GeneralPositionExhausted(MAX_REJECTIONS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, Conic, ProjMap};

    fn collinear_triples(seed: u64) -> (Triple, Triple) {
        random_pappus_triples(seed).unwrap()
    }

    fn unit_hexagon() -> [HomPoint; 6] {
        let c = Conic::unit_circle();
        let base = HomPoint::from_ints(-1, 0, 1).unwrap();
        let ts = [int(1), int(3), crate::kernel::rat(1, 2), int(-2), crate::kernel::rat(-1, 3)];
        let mut h = vec![base.clone()];
        h.extend(ts.iter().map(|t| c.rational_point(&base, t).unwrap()));
        h.try_into().unwrap()
    }

    #[test]
    fn pappus_and_generalization() {
        for seed in 0..30 {
            let (a, b) = collinear_triples(seed);
            assert!(pappus_line(&a, &b).is_ok(), "seed {seed}");
            assert!(generalized_pappus_center(&a, &b).is_ok(), "seed {seed}");
            assert!(verify_pappus_reduction(&a, &b).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn pappus_equivariance_and_rejection() {
        let (a, b) = collinear_triples(3);
        let m = ProjMap::from_ints([[2, 1, 0], [1, 3, 1], [0, 1, 4]]).unwrap();
        let img = |t: &Triple| t.clone().map(|p| m.apply(&p));
        assert_eq!(m.apply_line(&pappus_line(&a, &b).unwrap()), pappus_line(&img(&a), &img(&b)).unwrap());
        assert_eq!(m.apply(&generalized_pappus_center(&a, &b).unwrap()), generalized_pappus_center(&img(&a), &img(&b)).unwrap());
        let same_line = (a.clone(), [a[0].clone(), a[1].clone(), a[2].clone()]);
        assert!(matches!(pappus_line(&same_line.0, &same_line.1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn pascal_family_on_unit_circle() {
        let h = unit_hexagon();
        assert!(pascal_line(&h).is_ok());
        let center = generalized_pascal_center(&h).unwrap();
        assert!(another_pascal_center(&h).is_ok());
        assert!(verify_another_pascal_step(&h).unwrap());
        let m = ProjMap::from_ints([[1, 1, 0], [0, 2, 1], [1, 0, 3]]).unwrap();
        let mapped = h.clone().map(|p| m.apply(&p));
        assert_eq!(generalized_pascal_center(&mapped).unwrap(), m.apply(&center));
        assert_eq!(another_pascal_center(&mapped).unwrap(), m.apply(&another_pascal_center(&h).unwrap()));
    }

    #[test]
    fn random_hexagons() {
        for seed in 0..20 {
            let h = random_conic_hexagon(seed).unwrap();
            assert!(generalized_pascal_center(&h).is_ok(), "seed {seed}");
            assert!(another_pascal_center(&h).is_ok(), "seed {seed}");
            assert!(verify_another_pascal_step(&h).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn off_conic_hexagon_rejected() {
        let mut h = unit_hexagon();
        h[5] = HomPoint::affine_int(7, 7);
        assert!(matches!(generalized_pascal_center(&h), Err(Error::InvalidInput(_))));
    }
}
