use invdecomp::armature::{ArmatureElement, ArmaturePresentation};
use invdecomp::gauge::ArmatureGauge;
use invdecomp::oracle;
use invdecomp::quaternion::QuatAlg;
use invdecomp::scalar::{BaseField, Fp, LaurentScalar};
use invdecomp::{Quaternion, Rational, Scalar};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero<F: BaseField>(r: &mut ChaCha8Rng, arity: usize) -> LaurentScalar<F> {
    loop {
        let x = oracle::random_scalar::<F, _>(r, arity);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Unit of valuation zero.
fn unit<F: BaseField>(x: &LaurentScalar<F>) -> LaurentScalar<F> {
    x / &x.valuation_monomial().unwrap()
}

fn field_laws<F: BaseField>(seed: u64, arity: usize) {
    let mut r = rng(seed);
    let (x, y, z) = (nonzero::<F>(&mut r, arity), nonzero::<F>(&mut r, arity), nonzero::<F>(&mut r, arity));
    assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
    assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    assert_eq!(&x / &x, LaurentScalar::one());
    assert!((&x - &x).is_zero());
    assert_eq!(&(&x / &y) * &y, x);
}

fn valuation_and_residue<F: BaseField>(seed: u64, arity: usize) {
    let mut r = rng(seed);
    let (x, y) = (nonzero::<F>(&mut r, arity), nonzero::<F>(&mut r, arity));
    assert_eq!((&x * &y).valuation(), &x.valuation() + &y.valuation());
    let (u, v) = (unit(&x), unit(&y));
    assert_eq!(
        (&u * &v).residue().unwrap(),
        u.residue().unwrap() * v.residue().unwrap()
    );
}

fn square_invariance<F: BaseField>(seed: u64, arity: usize) {
    let mut r = rng(seed);
    let (x, y) = (nonzero::<F>(&mut r, arity), nonzero::<F>(&mut r, arity));
    assert_eq!((&y.square() * &x).is_square().unwrap(), x.is_square().unwrap());
    assert!(x.square().square_class().unwrap().is_trivial());
    let class = x.square_class().unwrap();
    assert!((&x / &class.representative()).is_square().unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_towers_are_fields(seed: u64, arity in 0usize..=2) {
        field_laws::<Rational>(seed, arity);
    }

    #[test]
    fn prime_towers_are_fields(seed: u64, arity in 0usize..=2) {
        field_laws::<Fp<7>>(seed, arity);
        field_laws::<Fp<13>>(seed, arity);
    }

    #[test]
    fn valuation_is_additive_and_residue_multiplicative(seed: u64, arity in 1usize..=2) {
        valuation_and_residue::<Rational>(seed, arity);
        valuation_and_residue::<Fp<5>>(seed, arity);
    }

    #[test]
    fn square_classes_ignore_squares(seed: u64, arity in 0usize..=2) {
        square_invariance::<Rational>(seed, arity);
        square_invariance::<Fp<11>>(seed, arity);
    }

    #[test]
    fn norm_is_conjugation_invariant(seed: u64) {
        let mut r = rng(seed);
        let alg = QuatAlg::new(nonzero(&mut r, 1), nonzero(&mut r, 1)).unwrap();
        let x = Quaternion::new(
            oracle::random_scalar(&mut r, 1),
            oracle::random_scalar(&mut r, 1),
            oracle::random_scalar(&mut r, 1),
            oracle::random_scalar(&mut r, 1),
        );
        let cx = alg.conj(&x);
        let n = alg.nrd(&x);
        prop_assert_eq!(alg.nrd(&cx), n.clone());
        prop_assert_eq!(alg.mul(&x, &cx), Quaternion::scalar(n.clone()).with_arity(1));
        prop_assert_eq!(alg.mul(&cx, &x), Quaternion::scalar(n).with_arity(1));
    }

    #[test]
    fn splitting_matches_isotropy_search(a in -12i64..=12, b in -12i64..=12) {
        prop_assume!(a != 0 && b != 0);
        let alg = QuatAlg::new(Scalar::from_i64(a), Scalar::from_i64(b)).unwrap();
        let split = alg.is_split().unwrap();
        let point = oracle::isotropic_point(a, b, 30);
        prop_assert_eq!(split, point.is_some(), "({}, {})", a, b);
    }

    #[test]
    fn involution_laws_on_random_presentations(seed: u64, m in 1usize..=3) {
        let mut r = rng(seed);
        let squares: Vec<Scalar> = (0..2 * m).map(|_| Scalar::from_i64(r.gen_range(1..=5) * if r.gen_bool(0.5) { 1 } else { -1 })).collect();
        let signs: Vec<i8> = (0..2 * m).map(|_| if r.gen_bool(0.5) { 1 } else { -1 }).collect();
        let p = ArmaturePresentation::standard(0, squares, signs).unwrap();
        for a in p.classes() {
            for b in p.classes() {
                prop_assert_eq!(
                    p.involution_sign(a ^ b),
                    p.involution_sign(a) * p.involution_sign(b) * p.pairing(a, b)
                );
                for c in p.classes() {
                    prop_assert_eq!(p.pairing(a ^ b, c), p.pairing(a, c) * p.pairing(b, c));
                }
            }
        }
        let x = oracle::random_element::<Rational, _>(&mut r, &p, 4);
        let y = oracle::random_element::<Rational, _>(&mut r, &p, 4);
        prop_assert_eq!(
            p.apply_involution(&p.mul(&x, &y)),
            p.mul(&p.apply_involution(&y), &p.apply_involution(&x))
        );
        prop_assert_eq!(p.apply_involution(&p.apply_involution(&x)), x);
    }

    #[test]
    fn armature_gauges_are_special(seed: u64, m in 1usize..=2) {
        let mut r = rng(seed);
        let squares: Vec<Scalar> = (0..2 * m)
            .map(|_| {
                let e = [r.gen_range(-2..=2), r.gen_range(-2..=2)];
                Scalar::monomial(Rational::from_integer(r.gen_range(1..=5).into()), &e).with_arity(2)
            })
            .collect();
        let signs: Vec<i8> = (0..2 * m).map(|_| if r.gen_bool(0.5) { 1 } else { -1 }).collect();
        let p = ArmaturePresentation::standard(2, squares, signs).unwrap();
        let g = ArmatureGauge::new(&p);
        let pairs: Vec<(ArmatureElement<Rational>, ArmatureElement<Rational>)> = (0..8)
            .map(|_| (oracle::random_element(&mut r, &p, 3), oracle::random_element(&mut r, &p, 3)))
            .collect();
        let singles: Vec<_> = pairs.iter().map(|(x, _)| x.clone()).collect();
        let mut report = g.check_surmultiplicative(&pairs);
        report.merge(g.check_special(&singles));
        report.merge(g.check_homomorphism());
        prop_assert!(report.passed(), "{:?}", report.violations);
        let rep = g.kernel_and_residue().unwrap();
        prop_assert!(rep.cardinality_law_holds());
    }
}
