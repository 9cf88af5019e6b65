//! The main construction in the central model and its two proof paths.

use super::scene::{third, CentralScene, PERMUTATIONS};
use crate::kernel::{collinear, join, meet, HomLine, HomPoint};
use crate::{Error, Result};

pub(crate) fn label(name: &str, idx: &[usize]) -> String {
    let digits: String = idx.iter().map(|i| char::from(b'1' + *i as u8)).collect();
    format!("{name}{digits}")
}

pub(crate) fn join_as(p: &HomPoint, q: &HomPoint, what: impl FnOnce() -> String) -> Result<HomLine> {
    join(p, q).map_err(|_| Error::undefined(what()))
}

pub(crate) fn meet_as(l: &HomLine, m: &HomLine, what: impl FnOnce() -> String) -> Result<HomPoint> {
    meet(l, m).map_err(|_| Error::undefined(what()))
}

/// Derived points of the main construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainConstruction {
    /// `p[i][j] = AᵢA_k ∩ BⱼB_k`; the diagonal is unused.
    p: [[Option<HomPoint>; 3]; 3],
    /// `S_k = AᵢAⱼ ∩ BᵢBⱼ`.
    pub s: [HomPoint; 3],
    /// `C_k = P_ik P_ki ∩ P_jk P_kj`.
    pub c: [HomPoint; 3],
}

impl MainConstruction {
    pub fn p(&self, i: usize, j: usize) -> &HomPoint {
        self.p[i][j].as_ref().expect("P_ij needs i ≠ j")
    }

    /// `P_ij P_ji`, which carries both `Cᵢ` and `Cⱼ`.
    pub fn p_line(&self, i: usize, j: usize) -> Result<HomLine> {
        join_as(self.p(i, j), self.p(j, i), || format!("line {}{}", label("P", &[i, j]), label("P", &[j, i])))
    }

    pub fn p_points(&self) -> impl Iterator<Item = ((usize, usize), &HomPoint)> {
        PERMUTATIONS.iter().map(move |&(i, j)| ((i, j), self.p(i, j)))
    }

    /// True when the seven scene points and the twelve derived points are
    /// pairwise distinct.
    pub fn all_points_distinct(&self, scene: &CentralScene) -> bool {
        let mut all: Vec<&HomPoint> = vec![&scene.s];
        all.extend(scene.a.iter().chain(&scene.b).chain(&self.s).chain(&self.c));
        all.extend(self.p_points().map(|(_, p)| p));
        all.sort();
        all.windows(2).all(|w| w[0] != w[1])
    }
}

pub fn main_construction_central(scene: &CentralScene) -> Result<MainConstruction> {
    let (a, b) = (&scene.a, &scene.b);
    let mut p: [[Option<HomPoint>; 3]; 3] = Default::default();
    for &(i, j) in &PERMUTATIONS {
        let k = third(i, j);
        let what = || label("P", &[i, j]);
        let la = join_as(&a[i], &a[k], what)?;
        let lb = join_as(&b[j], &b[k], what)?;
        p[i][j] = Some(meet_as(&la, &lb, what)?);
    }
    let mut s = Vec::with_capacity(3);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let what = || label("S", &[k]);
        s.push(meet_as(&join_as(&a[i], &a[j], what)?, &join_as(&b[i], &b[j], what)?, what)?);
    }
    let partial = MainConstruction { p, s: s.try_into().expect("three"), c: [scene.s.clone(), scene.s.clone(), scene.s.clone()] };
    let mut c = Vec::with_capacity(3);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let what = || label("C", &[k]);
        let l1 = partial.p_line(i, k).map_err(|_| Error::undefined(what()))?;
        let l2 = partial.p_line(j, k).map_err(|_| Error::undefined(what()))?;
        c.push(meet_as(&l1, &l2, what)?);
    }
    Ok(MainConstruction { c: c.try_into().expect("three"), ..partial })
}

/// Classic Desargues: `S₁, S₂, S₃` are collinear.
pub fn verify_desargues(scene: &CentralScene) -> Result<bool> {
    let mc = main_construction_central(scene)?;
    Ok(collinear(&mc.s[0], &mc.s[1], &mc.s[2]))
}

/// The generalized Desargues claim: `C_k ∈ ℓ_k` for every `k`, together with
/// the collinearity of the `S_k`.
pub fn verify_generalized_desargues(scene: &CentralScene) -> Result<bool> {
    let mc = main_construction_central(scene)?;
    let perspective = (0..3).all(|k| mc.c[k].lies_on(&scene.lines[k]));
    Ok(perspective && collinear(&mc.s[0], &mc.s[1], &mc.s[2]))
}

/// Replays the first proof for every `k` (with `i, j` the other indices):
/// triangles `Sᵢ P_ki P_ik` and `Sⱼ P_kj P_jk` are perspective from `S_k`,
/// and their corresponding sides meet in `A_k`, `B_k`, `C_k`, which are
/// collinear.
pub fn verify_proof1_path(scene: &CentralScene) -> Result<bool> {
    let mc = main_construction_central(scene)?;
    let (a, b) = (&scene.a, &scene.b);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let (p_ki, p_ik, p_kj, p_jk) = (mc.p(k, i), mc.p(i, k), mc.p(k, j), mc.p(j, k));
        let (s_i, s_j, s_k) = (&mc.s[i], &mc.s[j], &mc.s[k]);
        let d1 = [s_i, p_ki, p_ik];
        let d2 = [s_j, p_kj, p_jk];

        // Lines joining corresponding vertices.
        let through = |x: &HomPoint, y: &HomPoint, w: &str| join_as(x, y, || format!("proof 1 line {w} (k = {})", k + 1));
        let via_s = through(s_i, s_j, "SiSj")?;
        let via_b = through(p_ki, p_kj, "PkiPkj")?;
        let via_a = through(p_ik, p_jk, "PikPjk")?;
        if via_b != join_as(&b[i], &b[j], || "side of B".into())? || via_a != join_as(&a[i], &a[j], || "side of A".into())? {
            return Ok(false);
        }
        if !(s_k.lies_on(&via_s) && s_k.lies_on(&via_b) && s_k.lies_on(&via_a)) {
            return Ok(false);
        }

        // Corresponding sides of the two triangles.
        let side = |t: &[&HomPoint; 3], u: usize, v: usize| join_as(t[u], t[v], || format!("proof 1 side (k = {})", k + 1));
        let meet_sides = |u: usize, v: usize| -> Result<HomPoint> {
            meet_as(&side(&d1, u, v)?, &side(&d2, u, v)?, || format!("proof 1 side meet (k = {})", k + 1))
        };
        let x_a = meet_sides(0, 1)?;
        let x_b = meet_sides(0, 2)?;
        let x_c = meet_sides(1, 2)?;
        if x_a != a[k] || x_b != b[k] || x_c != mc.c[k] || !collinear(&x_a, &x_b, &x_c) {
            return Ok(false);
        }
    }
    Ok(true)
}
