use equigon::io::load_corpus;
use equigon::polygon::{
    apply_fmap, assemble_convex, descend_by_prime, make_side_integral, make_side_integral_with, scale_certificate,
    verify_certificate, FMapParams,
};
use equigon::{canonicalize, Certificate, Wide};
use proptest::prelude::*;

fn row(i: usize) -> Certificate {
    let rows = load_corpus().unwrap();
    rows[i % rows.len()].certificate()
}

proptest! {
    #[test]
    fn canonical_form_ignores_order_and_scale(i in 0usize..22, t in 1u64..50, seed in any::<u64>()) {
        let cert = row(i);
        let mut shuffled = scale_certificate(&cert, t);
        let n = shuffled.vectors.len();
        for k in 0..n {
            let j = (seed.rotate_left(k as u32) as usize) % n;
            shuffled.vectors.swap(k, j);
        }
        prop_assert_eq!(canonicalize(&shuffled).unwrap(), canonicalize(&cert).unwrap());
    }

    #[test]
    fn fmap_is_a_similarity(i in 0usize..22, s in -30i64..30, t in -30i64..30) {
        prop_assume!(s != 0 || t != 0);
        let cert = row(i);
        let params = FMapParams::new(s, t).unwrap();
        let image = Certificate::from_vectors(cert.m, apply_fmap(&cert.vectors, &params, cert.m));
        prop_assert!(verify_certificate(&image).valid);
        prop_assert_eq!(&image.side_sq, &(&cert.side_sq * &params.scale_sq(cert.m)));
        prop_assert!(assemble_convex(&image).unwrap().is_strictly_convex());
    }

    #[test]
    fn side_integral_map_gives_integer_side(i in 0usize..22, s in -9i64..9, t in 1i64..9) {
        // rotate the row so that its side is (usually) irrational first
        let cert = row(i);
        let params = FMapParams::new(s, t).unwrap();
        let rotated = Certificate::from_vectors(cert.m, apply_fmap(&cert.vectors, &params, cert.m));
        let fixed = make_side_integral(&rotated).unwrap();
        prop_assert!(verify_certificate(&fixed).valid);
        prop_assert!(fixed.integer_side().is_some());
        prop_assert_eq!(make_side_integral(&fixed).unwrap(), canonicalize(&fixed).unwrap());
        let forced = make_side_integral_with(&rotated, 0).unwrap();
        prop_assert!(forced.integer_side().is_some());
    }

    #[test]
    fn descent_undoes_scaling(i in 0usize..22, q in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101])) {
        let cert = row(i);
        prop_assert_eq!(descend_by_prime(&scale_certificate(&cert, q), q).unwrap(), cert.clone());
        if cert.coordinate_gcd() == Wide::ONE {
            prop_assert!(descend_by_prime(&cert, q).is_err());
        }
    }
}
