//! The main construction in the axis model, and the polarity linking it to
//! the central model.

use super::central::{join_as, label, meet_as, main_construction_central};
use super::scene::{side, AxisScene, CentralScene};
use crate::kernel::{HomPoint};
use crate::Result;

/// `C_k = AᵢBⱼ ∩ AⱼBᵢ`.
pub fn main_construction_axis(scene: &AxisScene) -> Result<[HomPoint; 3]> {
    let (a, b) = (&scene.a, &scene.b);
    let mut c = Vec::with_capacity(3);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let what = || label("C", &[k]);
        c.push(meet_as(&join_as(&a[i], &b[j], what)?, &join_as(&a[j], &b[i], what)?, what)?);
    }
    Ok(c.try_into().expect("three"))
}

/// Side `CᵢCⱼ` passes through `L_k` for all `k`.
pub fn verify_axis_theorem(scene: &AxisScene) -> Result<bool> {
    let c = main_construction_axis(scene)?;
    for k in 0..3 {
        let sk = join_as(&c[(k + 1) % 3], &c[(k + 2) % 3], || label("side C", &[k]))?;
        if !scene.l[k].lies_on(&sk) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dual triangle: vertex `i` is the pole of side `i`.
pub fn polar_triangle(t: &[HomPoint; 3]) -> Result<[HomPoint; 3]> {
    let sides = [side(t, 0)?, side(t, 1)?, side(t, 2)?];
    Ok(sides.map(|l| l.pole()))
}

/// Image of a central scene under the polarity `x² + y² + z² = 0`.
pub fn polar_scene(scene: &CentralScene) -> Result<AxisScene> {
    AxisScene::new(polar_triangle(&scene.a)?, polar_triangle(&scene.b)?)
}

/// The axis construction on the polar scene is the polar of the central
/// construction: `C*_k` is the pole of side `k` of `C`.
pub fn verify_polar_duality(scene: &CentralScene) -> Result<bool> {
    let dual = polar_scene(scene)?;
    if dual.s != scene.s.polar() || (0..3).any(|k| dual.l[k] != scene.lines[k].pole()) {
        return Ok(false);
    }
    let c_star = main_construction_axis(&dual)?;
    let c = main_construction_central(scene)?.c;
    Ok(c_star == polar_triangle(&c)?)
}
