mod common;

use affframe::equivalence::{are_equivalent, recover_affine_map, AffineMap, EquivalenceMode};
use affframe::frame::{
    advance, inverse_step, planar_curvatures, reconstruct_planar, reconstruct_space, space_invariants, Admissibility,
};
use affframe::hilbert::{generate_hilbert, hilbert_kappa_sequence};
use affframe::koch::{decode_koch, generate_koch, koch_code};
use affframe::snowflake::{decode_snowflake, generate_snowflake, snowflake_code};
use affframe::{det3, DiscreteCurve, Point, Rational, Scalar, SpaceStep};
use common::*;
use proptest::prelude::*;

fn affine2(m: &[[Rational; 2]; 2], b: &affframe::Point2<Rational>) -> AffineMap<Rational, 2> {
    AffineMap {
        matrix: m.clone(),
        translation: b.clone(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_round_trip(curve in turning_curve(4..12)) {
        let steps = planar_curvatures(&curve).unwrap().planar_steps().unwrap();
        let init = [curve.points()[0].clone(), curve.points()[1].clone(), curve.points()[2].clone()];
        let rebuilt = reconstruct_planar(&init, &steps).unwrap();
        prop_assert_eq!(rebuilt, curve);
    }

    #[test]
    fn space_round_trip(curve in admissible_space_curve(4..10)) {
        let steps = space_invariants(&curve).unwrap().space_steps().unwrap();
        let init = [curve.points()[0].clone(), curve.points()[1].clone(), curve.points()[2].clone()];
        let rebuilt = reconstruct_space(&init, &steps, Admissibility::Enforce).unwrap();
        prop_assert_eq!(rebuilt, curve);
    }

    #[test]
    fn planar_affine_invariance(curve in turning_curve(4..10), m in invertible2(), b in point2()) {
        let image = affine2(&m, &b).apply_curve(&curve);
        prop_assert_eq!(planar_curvatures(&image).unwrap(), planar_curvatures(&curve).unwrap());
    }

    #[test]
    fn centroaffine_invariance(curve in admissible_space_curve(4..9), m in invertible3()) {
        let map = AffineMap { matrix: m, translation: Point::origin() };
        let image = map.apply_curve(&curve);
        prop_assert_eq!(space_invariants(&image).unwrap(), space_invariants(&curve).unwrap());
    }

    #[test]
    fn planar_reduction(curve in turning_curve(4..10)) {
        let planar = planar_curvatures(&curve).unwrap();
        let space = space_invariants(&curve.lift()).unwrap();
        for (p, s) in planar.entries.iter().zip(&space.entries) {
            prop_assert_eq!(p.k, s.k);
            prop_assert_eq!(&p.kappa, &s.kappa);
            prop_assert_eq!(&p.kappa_bar, &s.kappa_bar);
            prop_assert_eq!(s.tau.clone(), Some(Rational::zero()));
        }
    }

    #[test]
    fn kappa_bar_forms_agree(curve in admissible_space_curve(4..9)) {
        let profile = space_invariants(&curve).unwrap();
        for e in &profile.entries {
            let k = e.k as isize;
            let d = det3(curve.vertex(k - 1), curve.vertex(k), curve.vertex(k + 1));
            let tangent_form = det3(curve.vertex(k + 1), &curve.tangent(k - 1), &curve.tangent(k + 1)) / d;
            prop_assert_eq!(e.kappa_bar.clone(), Some(tangent_form));
        }
    }

    #[test]
    fn inverse_undoes_forward(
        w in [point3(), point3(), point3()],
        kappa in nonzero_rational(),
        kappa_bar in rational(),
        tau in rational(),
    ) {
        let step = SpaceStep::new(kappa, kappa_bar, tau);
        let next = advance([&w[0], &w[1], &w[2]], &step.coefficients());
        prop_assert_eq!(inverse_step([&w[1], &w[2], &next], &step).unwrap(), w[0].clone());
    }

    #[test]
    fn recovered_maps_are_sound(curve in turning_curve(4..8), m in invertible2(), b in point2()) {
        let image = affine2(&m, &b).apply_curve(&curve);
        if let Ok(Some(w)) = recover_affine_map(curve.points(), image.points()) {
            prop_assert_eq!(w.apply_curve(&curve), image);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn koch_decodes_from_any_init(init in planar_init(), n in 2u32..=5) {
        let curve = generate_koch(&init, n).unwrap();
        let bits = decode_koch(&planar_curvatures(&curve).unwrap(), &Rational::zero()).unwrap();
        prop_assert_eq!(bits, koch_code(n).unwrap().bits().to_vec());
    }

    #[test]
    fn koch_code_survives_affine_maps(init in planar_init(), m in invertible2(), b in point2()) {
        let curve = affine2(&m, &b).apply_curve(&generate_koch(&init, 4).unwrap());
        let bits = decode_koch(&planar_curvatures(&curve).unwrap(), &Rational::zero()).unwrap();
        prop_assert_eq!(bits, koch_code(4).unwrap().bits().to_vec());
    }

    #[test]
    fn snowflake_decodes_from_any_init(init in planar_init(), n in 2u32..=4) {
        let curve = generate_snowflake(&init, n).unwrap();
        let bits = decode_snowflake(&planar_curvatures(&curve).unwrap(), &Rational::zero()).unwrap();
        prop_assert_eq!(bits, snowflake_code(n).unwrap().bits().to_vec());
    }

    #[test]
    fn hilbert_decodes_from_any_init(init in planar_init(), n in 2u32..=4) {
        let profile = planar_curvatures(&generate_hilbert(&init, n).unwrap()).unwrap();
        prop_assert!(profile.entries.iter().all(|e| e.kappa_bar == Some(Rational::zero())));
        let kappas: Vec<Rational> = profile.kappas().cloned().collect();
        prop_assert_eq!(kappas, hilbert_kappa_sequence::<Rational>(n).unwrap());
    }

    #[test]
    fn generated_families_are_equivalent(a in planar_init(), b in planar_init(), family in 0usize..3) {
        let build = |init: &[affframe::Point2<Rational>; 3]| -> DiscreteCurve<Rational, 2> {
            match family {
                0 => generate_koch(init, 3).unwrap(),
                1 => generate_snowflake(init, 3).unwrap(),
                _ => generate_hilbert(init, 3).unwrap(),
            }
        };
        let (ca, cb) = (build(&a), build(&b));
        let forward = are_equivalent(&ca, &cb, EquivalenceMode::PlanarAffine, &Rational::zero()).unwrap();
        let backward = are_equivalent(&cb, &ca, EquivalenceMode::PlanarAffine, &Rational::zero()).unwrap();
        prop_assert!(forward.equivalent);
        prop_assert_eq!(forward.equivalent, backward.equivalent);
        let witness = forward.witness.expect("witness");
        prop_assert_eq!(witness.apply_curve(&ca), cb);
    }
}
