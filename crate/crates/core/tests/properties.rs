use proptest::prelude::*;

use su3st::invariants::{self, cubic_invariant_in};
use su3st::numerics::{commutator, matrix_exp, Complex64, ExactScalar, Matrix, RealSurd, Scalar};
use su3st::su3::{self, Branch, StructureConstants};
use su3st::suite::Corruption;
use su3st::transforms::{self, NineVector, TransformParams};

fn surd() -> impl Strategy<Value = RealSurd> {
    let q = (-6i64..=6, 1i64..=5);
    (q.clone(), q.clone(), q.clone(), q).prop_map(|(a, b, c, d)| {
        let r = |(n, m): (i64, i64)| RealSurd::rational(n, m);
        let s6 = RealSurd::sqrt2().mul(&RealSurd::sqrt3());
        r(a).add(&r(b).mul(&RealSurd::sqrt2()))
            .add(&r(c).mul(&RealSurd::sqrt3()))
            .add(&r(d).mul(&s6))
    })
}

fn exact() -> impl Strategy<Value = ExactScalar> {
    (surd(), surd()).prop_map(|(re, im)| ExactScalar::new(re, im))
}

fn angles(max: f64) -> impl Strategy<Value = [f64; 8]> {
    prop::array::uniform8(-max..max)
}

fn vector() -> impl Strategy<Value = NineVector> {
    prop::array::uniform9(-2.0f64..2.0).prop_map(NineVector::new)
}

fn branch() -> impl Strategy<Value = Branch> {
    prop_oneof![Just(Branch::Plus), Just(Branch::Minus)]
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn surd_ring_laws(a in surd(), b in surd(), c in surd()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&a.neg()), RealSurd::zero());
    }

    #[test]
    fn surd_inverse_and_float_image(a in surd(), b in surd()) {
        if let Some(inv) = a.recip() {
            prop_assert_eq!(a.mul(&inv), RealSurd::one());
        } else {
            prop_assert!(a.is_zero());
        }
        prop_assert!(close(a.mul(&b).to_f64(), a.to_f64() * b.to_f64(), 1e-12));
    }

    #[test]
    fn surd_display_round_trips(a in surd()) {
        let back: RealSurd = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_field_laws(a in exact(), b in exact(), c in exact()) {
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.times(&b).conj(), a.conj().times(&b.conj()));
        match a.recip() {
            Some(inv) => prop_assert_eq!(a.times(&inv), ExactScalar::one()),
            None => prop_assert!(a.is_zero()),
        }
        let f = a.times(&b).to_c64();
        let g = a.to_c64() * b.to_c64();
        prop_assert!((f - g).norm() <= 1e-10 * (1.0 + f.norm()));
    }

    #[test]
    fn backends_agree_on_commutators(
        ca in prop::collection::vec((-5i64..=5, 1i64..=4), 8),
        cb in prop::collection::vec((-5i64..=5, 1i64..=4), 8),
    ) {
        let ge = su3::gellmann::<ExactScalar>();
        let gf = su3::gellmann::<Complex64>();
        let comb = |c: &[(i64, i64)]| {
            let ce: Vec<ExactScalar> = c.iter().map(|&(n, d)| ExactScalar::from_ratio(n, d)).collect();
            let cf: Vec<Complex64> = c.iter().map(|&(n, d)| Complex64::from_ratio(n, d)).collect();
            (Matrix::linear_combination(&ce, &ge.j).unwrap(), Matrix::linear_combination(&cf, &gf.j).unwrap())
        };
        let (ae, af) = comb(&ca);
        let (be, bf) = comb(&cb);
        let exact = commutator(&ae, &be).unwrap().to_c64();
        let float = commutator(&af, &bf).unwrap();
        prop_assert!(exact.frobenius_distance(&float).unwrap() <= 1e-12);
    }

    #[test]
    fn exp_of_commuting_sum_factorises(s in -3.0f64..3.0, t in -3.0f64..3.0) {
        let g = su3::gellmann::<Complex64>();
        let i = Complex64::new(0.0, 1.0);
        // J3 and J8 are diagonal, so they commute.
        let a = g.j(3).scale(&(i * s));
        let b = g.j(8).scale(&(i * t));
        let lhs = matrix_exp(&(&a + &b)).unwrap();
        let rhs = &matrix_exp(&a).unwrap() * &matrix_exp(&b).unwrap();
        prop_assert!(lhs.frobenius_distance(&rhs).unwrap() <= 1e-12);
        // Same generator, different parameters.
        let x = g.j(5).scale(&Complex64::new(s, 0.0));
        let y = g.j(5).scale(&Complex64::new(t, 0.0));
        let lhs = matrix_exp(&(&x + &y)).unwrap();
        let rhs = &matrix_exp(&x).unwrap() * &matrix_exp(&y).unwrap();
        prop_assert!(lhs.frobenius_distance(&rhs).unwrap() <= 1e-10 * (1.0 + lhs.max_modulus()));
    }

    #[test]
    fn rotations_preserve_space_invariants(theta in angles(3.0), x in vector()) {
        let r = transforms::lorentz9(&TransformParams::rotation(theta)).unwrap();
        let y = transforms::apply(&r, &x).unwrap();
        prop_assert!(close(invariants::quad_space(&y), invariants::quad_space(&x), 1e-10));
        prop_assert!(close(invariants::cubic_sym(&y), invariants::cubic_sym(&x), 1e-9));
        prop_assert!((y.time() - x.time()).abs() <= 1e-12);
    }

    #[test]
    fn boosts_preserve_matched_cubic(phi in angles(0.5), x in vector(), b in branch()) {
        let l = transforms::lorentz9(&TransformParams::boost(phi, b)).unwrap();
        let y = transforms::apply(&l, &x).unwrap();
        let (before, after) = (invariants::cubic_invariant(&x, b), invariants::cubic_invariant(&y, b));
        prop_assert!(close(after, before, 1e-9), "{before} vs {after}");
    }

    #[test]
    fn translations_preserve_cubic_of_differences(
        a in prop::array::uniform9(-2.0f64..2.0),
        x in vector(),
        y in vector(),
        b in branch(),
    ) {
        let p = TransformParams { branch: b, ..TransformParams::translation(a) };
        let t = transforms::poincare10(&p).unwrap();
        let (tx, ty) = (transforms::apply(&t, &x).unwrap(), transforms::apply(&t, &y).unwrap());
        let before = invariants::cubic_invariant(&x.sub(&y), b);
        let after = invariants::cubic_invariant(&tx.sub(&ty), b);
        prop_assert!(close(after, before, 1e-10));
    }

    #[test]
    fn exact_cubic_matches_float(
        xs in prop::collection::vec((-4i64..=4, 1i64..=3), 9),
        b in branch(),
    ) {
        let sc = StructureConstants::<ExactScalar>::fundamental();
        let ex: Vec<ExactScalar> = xs.iter().map(|&(n, d)| ExactScalar::from_ratio(n, d)).collect();
        let fx = NineVector::from_slice(&xs.iter().map(|&(n, d)| n as f64 / d as f64).collect::<Vec<_>>()).unwrap();
        let exact = cubic_invariant_in(&sc, &ex, b).to_c64();
        prop_assert!(exact.im == 0.0);
        prop_assert!(close(exact.re, invariants::cubic_invariant(&fx, b), 1e-12));
    }

    #[test]
    fn corruption_labels_round_trip(i in 0usize..1458) {
        let c = Corruption::all()[i];
        let back: Corruption = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }
}
