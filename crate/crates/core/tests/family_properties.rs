//! Structural invariants of the counterexample family across orders and
//! parameter values, and the exactness of the b = 0 split.

use pencilforge_core::charpoly::char_poly;
use pencilforge_core::family::{
    build_a, build_b, build_pencil, k_closed_form, split_at_b0, FamilyParams,
};
use pencilforge_core::matrix::ExactMatrix;
use pencilforge_core::quantizer::{quantize, standard_quantisation_pair};
use pencilforge_core::scalar::{rat, rat_int, GaussianRational, Rational};
use proptest::prelude::*;

fn sample_bs() -> Vec<Rational> {
    vec![
        rat_int(1),
        rat_int(-2),
        rat(1, 3),
        rat(7, 5),
        rat(22, 7),
        // large numerator/denominator heights
        rat(982451653, 15485863),
        rat(-15485863, 982451653),
    ]
}

#[test]
fn construction_invariants_across_orders() {
    for n in 4..=8 {
        for b in sample_bs() {
            let params = FamilyParams::new(n, b).unwrap();
            let a = build_a(&params);
            let bmat = build_b(n);
            assert!(a.is_skew_symmetric());
            assert_eq!(&bmat * &bmat, -&ExactMatrix::identity(2 * n));
            let pencil = build_pencil(&params).unwrap();
            assert_eq!(pencil.h(), &(&a * &a));
            assert!(pencil.h().is_hermitian() && pencil.h().is_real());
            assert_eq!(pencil.k(), &k_closed_form(n));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pencil_square_identity(
        xn in -9i64..=9, xd in 1i64..=4,
        yn in -9i64..=9, yd in 1i64..=4,
        bn in -9i64..=9, bd in 1i64..=4,
    ) {
        // (xA + yB)² = x²H + xyK − y²I as an exact matrix identity
        let x = rat(xn, xd);
        let y = rat(yn, yd);
        let b = rat(bn, bd);
        let params = FamilyParams::new(4, b).unwrap();
        let a = build_a(&params);
        let bmat = build_b(4);
        let gx = GaussianRational::from_rational(x.clone());
        let gy = GaussianRational::from_rational(y.clone());
        let lhs = {
            let s = &a.scale(&gx) + &bmat.scale(&gy);
            &s * &s
        };
        let pencil = build_pencil(&params).unwrap();
        let rhs = &(&pencil.h().scale(&GaussianRational::from_rational(&x * &x))
            + &pencil.k().scale(&GaussianRational::from_rational(&x * &y)))
            - &ExactMatrix::identity(8).scale(&GaussianRational::from_rational(&y * &y));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn even_multiplicity_across_sampled_pencils() {
    // char(xH + yK) is a perfect square for sampled rational (x, y, b)
    let points = [
        (rat_int(1), rat_int(0)),
        (rat_int(0), rat_int(1)),
        (rat_int(1), rat_int(1)),
        (rat_int(2), rat_int(-3)),
        (rat(1, 2), rat(22, 7)),
    ];
    for n in 4..=6 {
        for b in [rat_int(1), rat(7, 5), rat(982451653, 15485863)] {
            let pencil = build_pencil(&FamilyParams::new(n, b).unwrap()).unwrap();
            for (x, y) in &points {
                let m = pencil.evaluate(x, y);
                let p = char_poly(&m).unwrap();
                let g = p.poly_sqrt().unwrap_or_else(|| panic!("char not a square at n={n}"));
                assert_eq!(&(&g * &g), &p);
            }
        }
    }
}

#[test]
fn split_permutation_preserves_char_polys() {
    for n in 4..=6 {
        let params = FamilyParams::new(n, Rational::from_integer(0.into())).unwrap();
        let pencil = build_pencil(&params).unwrap();
        let split = split_at_b0(n).unwrap();

        // the permuted H decomposes the spectrum: char(H₍₀₎) = char(H1)·char(H2)
        let h_char = char_poly(pencil.h()).unwrap();
        let product = &char_poly(&split.h1).unwrap() * &char_poly(&split.h2).unwrap();
        assert_eq!(h_char, product);

        // H1 and H2 are similar: identical char polys
        assert_eq!(char_poly(&split.h1).unwrap(), char_poly(&split.h2).unwrap());

        // the permutation applied to H reproduces diag(H1, H2) exactly
        let permuted = pencil.h().permute_symmetric(&split.permutation).unwrap();
        let assembled = ExactMatrix::block_diag(&[&split.h1, &split.h2]);
        assert_eq!(permuted, assembled);

        // char of the full quantisation equals char(L1)·char(L2)
        let (x, y) = standard_quantisation_pair(&params.q());
        let l0 = quantize(&x, &y, &pencil).unwrap();
        let l_char = char_poly(&l0).unwrap();
        let l_product = &char_poly(&split.l1).unwrap() * &char_poly(&split.l2).unwrap();
        assert_eq!(l_char, l_product);
    }
}

#[test]
fn split_rejects_small_n() {
    assert!(split_at_b0(3).is_err());
    assert!(FamilyParams::new(3, rat_int(1)).is_err());
}
