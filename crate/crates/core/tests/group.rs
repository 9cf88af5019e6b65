use proptest::prelude::*;
use trigroup::config::random::rng;
use trigroup::config::{main_construction_central, random_central_scene};
use trigroup::group::*;
use trigroup::kernel::{int, join, rat, HomPoint, Scalar};
use trigroup::Error;

fn el(d: [(i64, i64); 3]) -> TriangleElement {
    TriangleElement::new(d.map(|(n, q)| rat(n, q)))
}

fn affine(p: &HomPoint) -> (Scalar, Scalar) {
    p.to_affine().unwrap()
}

/// Independent oracle: vertex `k` from `D₀ + (E_k − E₀)/d` computed with
/// plain affine arithmetic in the standard frame.
fn vertex_oracle(x: &TriangleElement, k: usize) -> (Scalar, Scalar) {
    let d = x.coordinate_sum();
    let e = [(int(0), int(0)), (int(1), int(0)), (int(0), int(1))];
    let (mut cx, mut cy) = (int(0), int(0));
    for i in 0..3 {
        cx += &x.delta()[i] / &d * &e[i].0;
        cy += &x.delta()[i] / &d * &e[i].1;
    }
    let (e0x, e0y) = (rat(1, 3), rat(1, 3));
    (cx + (&e[k].0 - e0x) / &d, cy + (&e[k].1 - e0y) / &d)
}

#[test]
fn vertex_formula_examples() {
    let f = Frame::standard();
    let t = f.triangle_from_bary(&TriangleElement::from_ints([1, 0, 0])).unwrap();
    assert_eq!(f.to_bary(&t.vertices[2]), [rat(2, 3), rat(-1, 3), rat(2, 3)]);
    let t = f.triangle_from_bary(&el([(2, 3), (2, 3), (2, 3)])).unwrap();
    assert_eq!(f.to_bary(&t.vertices[2]), [rat(1, 6), rat(1, 6), rat(2, 3)]);
    let mut r = rng(5);
    for _ in 0..50 {
        let x = random_element(&mut r, Kind::Geometric);
        let t = f.triangle_from_bary(&x).unwrap();
        for k in 0..3 {
            assert_eq!(affine(&t.vertices[k]), vertex_oracle(&x, k));
        }
        assert_eq!(f.bary_from_triangle(&t).unwrap(), x);
    }
}

#[test]
fn pseudo_directions() {
    let f = Frame::standard();
    let dirs = pseudo_vertices(&f, &TriangleElement::zero()).unwrap();
    // Medians of E: from Eₖ toward the centroid.
    for (k, d) in dirs.iter().enumerate() {
        let median = join(&f.vertices()[k], &HomPoint::affine(rat(1, 3), rat(1, 3))).unwrap();
        assert_eq!(d.point(), &median.point_at_infinity().unwrap());
    }
    assert_eq!(pseudo_vertices(&f, &TriangleElement::completely_pseudo(0)), Err(Error::CompletelyPseudo));
    let p = TriangleElement::from_ints([1, -1, 0]);
    assert_ne!(pseudo_vertices(&f, &p).unwrap(), dirs);
}

#[test]
fn presum_matches_coordinates_on_every_class() {
    let f = Frame::standard();
    let mut r = rng(11);
    for class in PairClass::ALL {
        for _ in 0..25 {
            let (x, y) = random_pair(&mut r, &f, class).unwrap();
            let p = presum_geometric(&f, &x, &y).unwrap();
            assert_eq!(p.element, presum_coords(&x, &y), "{class:?} {x} {y}");
            let expected_case = match class {
                PairClass::Equal => Some(PresumCase::Equal),
                PairClass::SymmetricSide => None,
                PairClass::SharedVertex | PairClass::CrossVertex | PairClass::CollinearSides => {
                    Some(PresumCase::SharedLine)
                }
                PairClass::SymmetricPoint => Some(PresumCase::SymmetricPoint),
                PairClass::Generic => None,
            };
            if let Some(c) = expected_case {
                assert_eq!(p.case, c, "{class:?}");
            }
        }
    }
}

#[test]
fn symmetric_side_gives_completely_pseudo() {
    let f = Frame::standard();
    let a = f.triangle_from_bary(&TriangleElement::reference()).unwrap();
    for k in 0..3 {
        let b = reflect_in_side_midpoint(&a, k).unwrap();
        let y = f.bary_from_triangle(&b).unwrap();
        let p = presum_geometric(&f, &TriangleElement::reference(), &y).unwrap();
        assert_eq!(p.case, PresumCase::SymmetricSide(k));
        assert_eq!(p.element, TriangleElement::completely_pseudo(k));
        assert!(p.vertices[k].is_none());
        // And the converse rule recovers B.
        let back = presum_geometric(&f, &TriangleElement::reference(), &p.element).unwrap();
        assert_eq!(back.element, y);
    }
    let cp = TriangleElement::completely_pseudo(2);
    assert_eq!(cp.delta(), &[rat(1, 3), rat(1, 3), rat(-2, 3)]);
}

#[test]
fn medial_and_central_reflection() {
    let f = Frame::standard();
    let mut r = rng(3);
    for _ in 0..40 {
        let x = random_element(&mut r, Kind::Geometric);
        let a = f.triangle_from_bary(&x).unwrap();
        let p = presum_geometric(&f, &x, &x).unwrap();
        assert_eq!(p.element, x.scale(&int(-2)));
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let (ix, iy) = affine(&a.vertices[i]);
            let (jx, jy) = affine(&a.vertices[j]);
            let m = ((ix + jx) / int(2), (iy + jy) / int(2));
            assert_eq!(affine(p.vertices[k].as_ref().unwrap()), m);
        }
        let z = presum_geometric(&f, &x, &TriangleElement::zero()).unwrap();
        assert_eq!(z.case, PresumCase::WithZero);
        let (cx, cy) = affine(&a.centroid());
        for k in 0..3 {
            let (vx, vy) = affine(&a.vertices[k]);
            let want = (int(2) * &cx - vx, int(2) * &cy - vy);
            assert_eq!(affine(z.vertices[k].as_ref().unwrap()), want);
        }
        assert_eq!(sum_geometric(&f, &x, &TriangleElement::zero()).unwrap(), x);
    }
}

#[test]
fn symmetric_point_directions() {
    let f = Frame::standard();
    let mut r = rng(8);
    for _ in 0..30 {
        let (x, y) = random_pair(&mut r, &f, PairClass::SymmetricPoint).unwrap();
        let a = f.triangle_from_bary(&x).unwrap();
        let b = f.triangle_from_bary(&y).unwrap();
        let p = presum_geometric(&f, &x, &y).unwrap();
        assert_eq!(p.element.kind(), Kind::Pseudo);
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let c = p.vertices[k].as_ref().unwrap();
            assert!(c.is_at_infinity());
            assert!(join(&a.vertices[i], &b.vertices[j]).unwrap().contains(c));
        }
    }
}

#[test]
fn mixed_kinds_match_coordinates() {
    let f = Frame::standard();
    let mut r = rng(21);
    for _ in 0..60 {
        let x = random_element(&mut r, Kind::Geometric);
        for kind in [Kind::Pseudo, Kind::CompletelyPseudo] {
            let y = random_element(&mut r, kind);
            assert_eq!(presum_geometric(&f, &x, &y).unwrap().element, presum_coords(&x, &y));
            assert_eq!(presum_geometric(&f, &y, &x).unwrap().element, presum_coords(&x, &y));
        }
        let p = random_element(&mut r, Kind::Pseudo);
        let q = random_any(&mut r);
        if q.is_geometric() {
            continue;
        }
        let s = presum_geometric(&f, &p, &q).unwrap();
        assert_eq!(s.case, PresumCase::PseudoPair);
        assert_eq!(s.element, presum_coords(&p, &q));
    }
    let cp = TriangleElement::completely_pseudo(1);
    assert!(matches!(presum_geometric(&f, &cp, &cp), Err(Error::Unsupported(_))));
}

#[test]
fn parameterization_and_midpoint_lemma() {
    let f = Frame::standard();
    let zero = TriangleElement::zero();
    let b = pseudo_parameterize(&f, &zero).unwrap();
    assert_eq!(f.bary_from_triangle(&b).unwrap(), el([(-1, 3), (-1, 3), (-1, 3)]));
    let mut r = rng(13);
    for _ in 0..50 {
        let x = random_element(&mut r, Kind::Pseudo);
        let y = random_element(&mut r, Kind::Pseudo);
        let bx = f.bary_from_triangle(&pseudo_parameterize(&f, &x).unwrap()).unwrap();
        let by = f.bary_from_triangle(&pseudo_parameterize(&f, &y).unwrap()).unwrap();
        assert_eq!(bx.coordinate_sum(), int(-1));
        assert_eq!(presum_coords(&TriangleElement::reference(), &bx), x);
        let d = f.bary_from_triangle(&midpoint_triangle(&f, &x, &y).unwrap()).unwrap();
        assert_eq!(d, (&bx + &by).scale(&rat(1, 2)));
        // The midpoint route lands on (x + y)/2, not on −(x + y).
        let lemma = pseudo_presum_via_lemma(&f, &x, &y).unwrap();
        assert_eq!(lemma.element, (&x + &y).scale(&rat(1, 2)));
    }
}

#[test]
fn half_in_both_models() {
    let f = Frame::standard();
    assert_eq!(half(&TriangleElement::from_ints([1, 0, 0])).unwrap(), el([(-1, 2), (0, 1), (0, 1)]));
    assert_eq!(half(&TriangleElement::zero()), Err(Error::ZeroSum));
    let mut r = rng(17);
    for _ in 0..30 {
        let a = random_element(&mut r, Kind::Geometric);
        let h = half(&a).unwrap();
        assert_eq!(presum_coords(&h, &h), a);
        let t = half_triangle(&f, &a).unwrap();
        let ht = f.bary_from_triangle(&t).unwrap();
        assert_eq!(ht, h);
        assert_eq!(presum_geometric(&f, &ht, &ht).unwrap().element, a);
        assert_eq!(presum_coords(&a, &presum_coords(&a, &a)), a);
    }
    for seed in 0..30 {
        let scene = random_central_scene(seed).unwrap();
        assert!(verify_central_half(&scene.s, &scene.a).unwrap(), "seed {seed}");
    }
}

#[test]
fn central_model_coordinates() {
    for seed in 0..25 {
        let scene = random_central_scene(seed).unwrap();
        let cf = CentralFrame::new(scene.s.clone(), &scene.a).unwrap();
        let a = cf.element_of(&scene.a).unwrap();
        assert_eq!(a, TriangleElement::reference());
        let b = cf.element_of(&scene.b).unwrap();
        let c = main_construction_central(&scene).unwrap().c;
        assert_eq!(cf.element_of(&c).unwrap(), presum_coords(&a, &b), "seed {seed}");
        let h = central_half(&scene.s, &scene.b).unwrap();
        assert_eq!(cf.element_of(&h.x).unwrap(), half(&b).unwrap(), "seed {seed}");
        assert_eq!(cf.element_of(&h.y).unwrap(), presum_coords(&b, &b), "seed {seed}");
    }
}

#[test]
fn frame_change_keeps_the_group_law() {
    let e = Frame::standard();
    let mut r = rng(29);
    for _ in 0..30 {
        // Another reference triangle with sides parallel to E.
        let shift = random_element(&mut r, Kind::Geometric);
        let other = Frame::new("F", e.triangle_from_bary(&shift).unwrap().vertices).unwrap();
        let x = random_element(&mut r, Kind::Geometric);
        let y = random_element(&mut r, Kind::Geometric);
        let p = presum_geometric(&e, &x, &y).unwrap();
        if !p.element.is_geometric() {
            continue;
        }
        let coords = |el: &TriangleElement| {
            let t = e.triangle_from_bary(el).unwrap();
            other.bary_from_triangle(&GeometricTriangle::new("F", t.vertices).unwrap()).unwrap()
        };
        assert_eq!(coords(&p.element), presum_coords(&coords(&x), &coords(&y)));
        let q = presum_geometric(&other, &coords(&x), &coords(&y)).unwrap();
        assert_eq!(q.element, coords(&p.element));
    }
}

#[test]
fn json_roundtrip() {
    let x = el([(1, 3), (-2, 1), (5, 7)]);
    let back: TriangleElement = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
    assert_eq!(back, x);
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn element() -> impl Strategy<Value = TriangleElement> {
    prop_oneof![
        [scalar(), scalar(), scalar()].prop_map(TriangleElement::new),
        (scalar(), scalar()).prop_map(|(a, b)| {
            let c = -(&a + &b);
            TriangleElement::new([a, b, c])
        }),
        (0usize..3).prop_map(TriangleElement::completely_pseudo),
    ]
}

fn geometric() -> impl Strategy<Value = TriangleElement> {
    [scalar(), scalar(), scalar()].prop_map(TriangleElement::new).prop_filter("nonzero sum", |x| x.is_geometric())
}

proptest! {
    #[test]
    fn sum_is_an_abelian_group(x in element(), y in element(), z in element()) {
        prop_assert_eq!(sum(&x, &y), sum(&y, &x));
        prop_assert_eq!(sum(&sum(&x, &y), &z), sum(&x, &sum(&y, &z)));
        prop_assert_eq!(sum(&x, &TriangleElement::zero()), x.clone());
        prop_assert_eq!(sum(&x, &-&x), TriangleElement::zero());
    }

    #[test]
    fn presum_is_an_involution_in_each_slot(x in element(), y in element()) {
        prop_assert_eq!(presum_coords(&x, &presum_coords(&x, &y)), y.clone());
        prop_assert_eq!(presum_coords(&x, &y), presum_coords(&y, &x));
    }

    #[test]
    fn kind_follows_coordinates(x in element()) {
        let zero_sum = x.coordinate_sum() == int(0);
        prop_assert_eq!(x.is_geometric(), !zero_sum);
        prop_assert_eq!(x.kind() == Kind::CompletelyPseudo, x.completely_pseudo_slot().is_some());
    }

    #[test]
    fn vertices_roundtrip(x in geometric()) {
        let f = Frame::standard();
        let t = f.triangle_from_bary(&x).unwrap();
        prop_assert_eq!(f.bary_from_triangle(&t).unwrap(), x.clone());
        prop_assert_eq!(f.element_from_vertices(&t.vertices.clone().map(Some)).unwrap(), x.clone());
        prop_assert_eq!(f.bary_from_triangle(&t.reflect_mass_center()).unwrap(), reflect_mass_center(&x).unwrap());
    }

    #[test]
    fn geometric_presum_agrees(x in geometric(), y in element()) {
        let f = Frame::standard();
        let p = presum_geometric(&f, &x, &y).unwrap();
        prop_assert_eq!(p.element, presum_coords(&x, &y));
    }

    #[test]
    fn half_then_double(a in geometric()) {
        let h = half(&a).unwrap();
        prop_assert_eq!(presum_coords(&h, &h), a);
    }

    #[test]
    fn sum_with_fixed_reference(f in element(), x in element(), y in element()) {
        let s = sum_with_fixed(&f, &x, &y);
        prop_assert_eq!(s, &sum(&x, &y) + &-&f);
    }
}
