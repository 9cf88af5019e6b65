//! Plane quartics and the four-line grid of the second proof.

use num_traits::Zero;

use super::central::{join_as, main_construction_central, meet_as, MainConstruction};
use super::scene::CentralScene;
use crate::kernel::linalg::{nullspace, rank};
use crate::kernel::{HomLine, HomPoint, Scalar};
use crate::Result;

/// Exponents `(a, b, c)` of `xᵃ yᵇ zᶜ`, lexicographically descending.
pub const MONOMIALS: [(u32, u32, u32); 15] = [
    (4, 0, 0),
    (3, 1, 0),
    (3, 0, 1),
    (2, 2, 0),
    (2, 1, 1),
    (2, 0, 2),
    (1, 3, 0),
    (1, 2, 1),
    (1, 1, 2),
    (1, 0, 3),
    (0, 4, 0),
    (0, 3, 1),
    (0, 2, 2),
    (0, 1, 3),
    (0, 0, 4),
];

/// Homogeneous form of degree four, coefficients in [`MONOMIALS`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticForm {
    pub coeffs: [Scalar; 15],
}

fn monomial_values(v: &[Scalar; 3]) -> Vec<Scalar> {
    MONOMIALS.iter().map(|&(a, b, c)| num_traits::pow(v[0].clone(), a as usize) * num_traits::pow(v[1].clone(), b as usize) * num_traits::pow(v[2].clone(), c as usize)).collect()
}

impl QuarticForm {
    pub fn eval_scalars(&self, v: &[Scalar; 3]) -> Scalar {
        monomial_values(v).iter().zip(&self.coeffs).map(|(m, c)| m * c).sum()
    }

    pub fn eval(&self, p: &HomPoint) -> Scalar {
        self.eval_scalars(&p.scalars())
    }

    pub fn vanishes_at(&self, p: &HomPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Product of four linear forms.
    pub fn product_of_lines(lines: &[HomLine; 4]) -> Self {
        // Polynomial product on exponent-indexed coefficients.
        let mut poly: Vec<((u32, u32, u32), Scalar)> = vec![((0, 0, 0), Scalar::from_integer(1.into()))];
        for l in lines {
            let c = l.scalars();
            let mut next: Vec<((u32, u32, u32), Scalar)> = Vec::new();
            for ((a, b, d), coef) in &poly {
                for (axis, lc) in c.iter().enumerate() {
                    let e = match axis {
                        0 => (a + 1, *b, *d),
                        1 => (*a, b + 1, *d),
                        _ => (*a, *b, d + 1),
                    };
                    let term = coef * lc;
                    match next.iter_mut().find(|(k, _)| *k == e) {
                        Some((_, v)) => *v += term,
                        None => next.push((e, term)),
                    }
                }
            }
            poly = next;
        }
        let coeffs = MONOMIALS.map(|m| poly.iter().find(|(k, _)| *k == m).map(|(_, v)| v.clone()).unwrap_or_else(Scalar::zero));
        Self { coeffs }
    }
}

/// Basis of all quartics vanishing on `points`.
pub fn fit_quartics(points: &[HomPoint]) -> Vec<QuarticForm> {
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| monomial_values(&p.scalars())).collect();
    nullspace(&rows, 15)
        .into_iter()
        .map(|v| QuarticForm { coeffs: v.try_into().expect("15 coefficients") })
        .collect()
}

/// Whether `form` is a linear combination of `basis`.
pub fn span_contains(basis: &[QuarticForm], form: &QuarticForm) -> bool {
    let mut rows: Vec<Vec<Scalar>> = basis.iter().map(|f| f.coeffs.to_vec()).collect();
    let r = rank(&rows, 15);
    rows.push(form.coeffs.to_vec());
    rank(&rows, 15) == r
}

/// The 4×4 grid of the second proof: lines `pᵢ`, `qⱼ`, their sixteen meets,
/// and the four lines `r₁..r₄` covering thirteen of them.
#[derive(Clone, Debug)]
pub struct Proof2Grid {
    pub p: [HomLine; 4],
    pub q: [HomLine; 4],
    pub r: [HomLine; 4],
    /// `grid[i][j] = pᵢ ∩ qⱼ`.
    pub grid: [[HomPoint; 4]; 4],
    /// `C'₁ = grid[3][2]`, `C'₂ = grid[3][3]`, `C'₃ = grid[2][3]`.
    pub c_prime: [HomPoint; 3],
    construction: MainConstruction,
}

/// Grid positions of the three points the quartic argument has to place.
pub const C_PRIME_CELLS: [(usize, usize); 3] = [(3, 2), (3, 3), (2, 3)];

impl Proof2Grid {
    pub fn build(scene: &CentralScene) -> Result<Self> {
        let mc = main_construction_central(scene)?;
        let (a, b) = (&scene.a, &scene.b);
        let ln = |x: &HomPoint, y: &HomPoint, name: &'static str| join_as(x, y, || format!("proof 2 line {name}"));
        let p = [ln(&a[0], &a[1], "p1")?, ln(&b[0], &b[1], "p2")?, scene.lines[2].clone(), mc.p_line(0, 1)?];
        let q = [ln(&a[1], &a[2], "q1")?, ln(&b[1], &b[2], "q2")?, scene.lines[0].clone(), mc.p_line(2, 1)?];
        let r = [ln(mc.p(2, 0), mc.p(0, 2), "r1")?, ln(&a[0], &a[2], "r2")?, ln(&b[0], &b[2], "r3")?, scene.lines[1].clone()];
        let mut cells = Vec::with_capacity(16);
        for (i, pi) in p.iter().enumerate() {
            for (j, qj) in q.iter().enumerate() {
                cells.push(meet_as(pi, qj, || format!("proof 2 grid point A{}{}", i + 1, j + 1))?);
            }
        }
        let mut it = cells.into_iter();
        let grid: [[HomPoint; 4]; 4] = [(); 4].map(|_| [(); 4].map(|_| it.next().expect("16 cells")));
        let c_prime = C_PRIME_CELLS.map(|(i, j)| grid[i][j].clone());
        Ok(Self { p, q, r, grid, c_prime, construction: mc })
    }

    /// The thirteen grid points that avoid the `C'` cells.
    pub fn thirteen(&self) -> Vec<HomPoint> {
        let mut out = Vec::with_capacity(13);
        for i in 0..4 {
            for j in 0..4 {
                if !C_PRIME_CELLS.contains(&(i, j)) {
                    out.push(self.grid[i][j].clone());
                }
            }
        }
        out
    }

    pub fn split_quartic(&self) -> QuarticForm {
        QuarticForm::product_of_lines(&self.r)
    }

    pub fn distinct(&self) -> bool {
        let mut all: Vec<&HomPoint> = self.grid.iter().flatten().collect();
        all.sort();
        all.windows(2).all(|w| w[0] != w[1])
    }

    /// Named scene points expected in each grid cell.
    fn expected_cells(&self, scene: &CentralScene) -> [[HomPoint; 4]; 4] {
        let mc = &self.construction;
        let (a, b) = (&scene.a, &scene.b);
        [
            [a[1].clone(), mc.p(0, 2).clone(), a[0].clone(), mc.p(1, 2).clone()],
            [mc.p(2, 0).clone(), b[1].clone(), b[0].clone(), mc.p(2, 1).clone()],
            [a[2].clone(), b[2].clone(), scene.s.clone(), mc.c[2].clone()],
            [mc.p(1, 0).clone(), mc.p(0, 1).clone(), mc.c[0].clone(), mc.c[1].clone()],
        ]
    }
}

/// Replays the second proof: the grid cells are the named points, thirteen
/// of them lie on `r₁ ∪ … ∪ r₄`, no `rᵢ` holds five grid points, `C'₃, C'₁`
/// lie on `r₁`, `C'₂` on `r₄`, and the `C'` points agree with the main
/// construction.
///
/// A grid with repeated points is outside the four-line lemma and reported
/// as a degenerate construction.
pub fn verify_proof2_path(scene: &CentralScene) -> Result<bool> {
    let g = Proof2Grid::build(scene)?;
    if !g.distinct() {
        return Err(crate::Error::undefined("proof 2 grid (repeated points)"));
    }
    let expected = g.expected_cells(scene);
    if g.grid != expected {
        return Ok(false);
    }
    let on_union = |x: &HomPoint| g.r.iter().any(|r| x.lies_on(r));
    if !g.thirteen().iter().all(on_union) {
        return Ok(false);
    }
    let at_most_four = g.r.iter().all(|r| g.grid.iter().flatten().filter(|x| x.lies_on(r)).count() <= 4);
    let [c1, c2, c3] = &g.c_prime;
    let placed = c3.lies_on(&g.r[0]) && c1.lies_on(&g.r[0]) && c2.lies_on(&g.r[3]);
    Ok(at_most_four && placed && g.c_prime == g.construction.c)
}

/// The quartic fact on one scene: the quartics through the thirteen grid
/// points include `r₁r₂r₃r₄`, and every one of them vanishes at the `C'`.
pub fn verify_quartic_fact(scene: &CentralScene) -> Result<bool> {
    let g = Proof2Grid::build(scene)?;
    if !g.distinct() {
        return Err(crate::Error::undefined("proof 2 grid (repeated points)"));
    }
    let basis = fit_quartics(&g.thirteen());
    let contains_split = span_contains(&basis, &g.split_quartic());
    let c_vanish = basis.iter().all(|f| g.c_prime.iter().all(|c| f.vanishes_at(c)));
    Ok(!basis.is_empty() && contains_split && c_vanish)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::random::{self, affine_point};
    use crate::config::scene::random_central_scene;
    use crate::kernel::{int, HomPoint};

    #[test]
    fn scale_covariance() {
        let f = QuarticForm { coeffs: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14].map(|c| int(c - 7)) };
        let v = [int(2), int(-3), int(5)];
        let lambda = int(3);
        let scaled = v.clone().map(|x| x * &lambda);
        assert_eq!(f.eval_scalars(&scaled), f.eval_scalars(&v) * int(81));
    }

    #[test]
    fn product_vanishes_on_each_line() {
        let lines = [(1, 2, 3), (0, 1, -1), (4, 0, 1), (1, -1, 0)].map(|(a, b, c)| HomLine::from_ints(a, b, c).unwrap());
        let f = QuarticForm::product_of_lines(&lines);
        // (3 : 0 : -1) lies on the first line; (1 : 1 : 1) on the second and fourth.
        assert!(f.vanishes_at(&HomPoint::from_ints(3, 0, -1).unwrap()));
        assert!(f.vanishes_at(&HomPoint::from_ints(1, 1, 1).unwrap()));
        assert!(!f.vanishes_at(&HomPoint::from_ints(2, 1, 0).unwrap()));
    }

    #[test]
    fn fourteen_generic_points_give_one_quartic() {
        let mut rng = random::rng(77);
        let pts: Vec<HomPoint> = (0..14).map(|_| affine_point(&mut rng)).collect();
        let basis = fit_quartics(&pts);
        assert_eq!(basis.len(), 1);
        assert!(pts.iter().all(|p| basis[0].vanishes_at(p)));
        assert!(fit_quartics(&[]).len() == 15);
    }

    #[test]
    fn proof2_on_seeds() {
        for seed in 0..10 {
            let sc = random_central_scene(seed).unwrap();
            assert!(verify_proof2_path(&sc).unwrap(), "seed {seed}");
            assert!(verify_quartic_fact(&sc).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn grid_cells_and_split_form() {
        let sc = random_central_scene(21).unwrap();
        let g = Proof2Grid::build(&sc).unwrap();
        let thirteen = g.thirteen();
        assert_eq!(thirteen.len(), 13);
        let split = g.split_quartic();
        assert!(thirteen.iter().all(|p| split.vanishes_at(p)));
        let basis = fit_quartics(&thirteen);
        assert!(span_contains(&basis, &split));
        // C'₂ sits on r₄ = S A₂ B₂.
        assert!(g.c_prime[1].lies_on(&g.r[3]));
        assert!(sc.a[1].lies_on(&g.r[3]) && sc.b[1].lies_on(&g.r[3]));
    }
}
