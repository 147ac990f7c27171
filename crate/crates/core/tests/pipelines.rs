use invdecomp::armature::ArmaturePresentation;
use invdecomp::decompose::{
    adjoint, lemma32_exchange, lift_by_q, lift_by_t, prop31_normalize, scramble, split_factors_in_lambda_form,
    thm1_descend, thm2_descend, DecompError, DecompositionWitness,
};
use invdecomp::quaternion::{QuatAlg, QuatElem, QuatInvolution};
use invdecomp::scalar::{Fp, LaurentScalar};
use invdecomp::{oracle, Presentation, Scalar, Witness};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Scalar7 = LaurentScalar<Fp<7>>;

const SMALL: [i64; 10] = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7];

fn int(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

fn t() -> Scalar {
    Scalar::var(0).with_arity(1)
}

/// A random `S` over ℚ: one factor `(a, b)` with random involution signs,
/// tensored with up to two adjoint factors `Ad⟨⟨λ⟩⟩`.
fn random_s(r: &mut ChaCha8Rng) -> Presentation {
    let (a, b) = (*SMALL.choose(r).unwrap(), *SMALL.choose(r).unwrap());
    let signs = [(-1, -1), (-1, 1), (1, -1), (1, 1)][r.gen_range(0..4)];
    let mut p = ArmaturePresentation::quaternion(int(a), int(b), signs).unwrap();
    for _ in 0..r.gen_range(0..=2) {
        p = p.tensor(&adjoint(int(*SMALL.choose(r).unwrap())).unwrap()).unwrap();
    }
    p
}

fn descend_t(w: &Witness, r: &mut ChaCha8Rng) -> Result<Witness, DecompError> {
    let (d, _) = scramble(&lift_by_t(w)?, 8, r, |_| true)?;
    Ok(thm1_descend(&prop31_normalize(&d)?)?.witness)
}

fn descend_q(w: &Witness, r: &mut ChaCha8Rng) -> Result<Witness, DecompError> {
    let lifted = lift_by_q(w, (-1, -1))?;
    let (d, _) = scramble(&lifted, 8, r, split_factors_in_lambda_form)?;
    Ok(thm2_descend(&d)?.witness)
}

#[test]
fn random_lifts_never_reach_the_contradiction() {
    let mut r = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..50 {
        let s = random_s(&mut r);
        let w = DecompositionWitness::standard(s).unwrap();
        let (d, moves) = scramble(&lift_by_t(&w).unwrap(), 8, &mut r, |_| true).unwrap();
        match prop31_normalize(&d) {
            Err(DecompError::Contradiction(msg)) => panic!("case {case}: {msg} after {moves:?}"),
            Err(e) => panic!("case {case}: {e}"),
            Ok(n) => assert!(n.witness.verify().passed(), "case {case}"),
        }
    }
}

#[test]
fn descent_along_t_keeps_split_count() {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for case in 0..30 {
        let w = DecompositionWitness::standard(random_s(&mut r)).unwrap();
        let out = descend_t(&w, &mut r).unwrap_or_else(|e| panic!("case {case}: {e}"));
        let report = out.verify();
        assert!(report.passed(), "case {case}: {:?}", report.violations);
        assert_eq!(out.arity(), 0);
        assert_eq!(out.split_count, w.split_count, "case {case}");
    }
}

#[test]
fn descent_along_q_keeps_split_count() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    let mut tested = 0;
    for case in 0..60 {
        let w = DecompositionWitness::standard(random_s(&mut r)).unwrap();
        // split factors must already be adjoint forms Ad⟨⟨λ⟩⟩
        if !split_factors_in_lambda_form(&lift_by_q(&w, (-1, -1)).unwrap()) {
            continue;
        }
        tested += 1;
        let out = descend_q(&w, &mut r).unwrap_or_else(|e| panic!("case {case}: {e}"));
        let report = out.verify();
        assert!(report.passed(), "case {case}: {:?}", report.violations);
        assert_eq!(out.arity(), 0);
        assert_eq!(out.split_count, w.split_count, "case {case}");
    }
    assert!(tested >= 20, "only {tested} admissible cases");
}

#[test]
fn pipelines_run_over_prime_fields() {
    let p = ArmaturePresentation::quaternion(Scalar7::from_i64(3), Scalar7::from_i64(-1), (-1, -1))
        .unwrap()
        .tensor(&adjoint(Scalar7::from_i64(5)).unwrap())
        .unwrap();
    let w = DecompositionWitness::standard(p).unwrap();
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let (d, _) = scramble(&lift_by_t(&w).unwrap(), 6, &mut r, |_| true).unwrap();
    let out = thm1_descend(&prop31_normalize(&d).unwrap()).unwrap().witness;
    assert!(out.verify().passed());
    assert_eq!(out.split_count, w.split_count);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exchange_preserves_brauer_class_and_splitting(
        v in proptest::array::uniform4(proptest::sample::select(SMALL.to_vec())),
        k1 in 0usize..3,
        k2 in 0usize..3,
    ) {
        let build = |a: i64, b: i64, k: usize| {
            let alg = QuatAlg::new(&int(a) * &t(), int(b)).unwrap();
            QuatInvolution::twisted(&alg, QuatElem::basis(k)).unwrap()
        };
        let (h1, h2) = (build(v[0], v[1], k1), build(v[2], v[3], k2));
        let e = lemma32_exchange(&h1, &h2).unwrap();
        prop_assert!(e.witness.verify().passed());
        let (f1, f2) = (e.first(), e.second());
        let split_in = [h1.algebra().is_split().unwrap(), h2.algebra().is_split().unwrap()];
        if split_in.iter().any(|&s| s) {
            prop_assert!(f1.split, "a split input must leave a split first factor");
        }
        if split_in.iter().all(|&s| s) {
            prop_assert!(f2.split);
        }
        let symbols: Vec<(Scalar, Scalar)> = [h1.algebra(), h2.algebra(), &f1.alg, &f2.alg]
            .iter()
            .map(|a| (a.a().clone(), a.b().clone()))
            .collect();
        prop_assert_eq!(oracle::brauer_product_trivial(&symbols), Ok(true));
    }

    #[test]
    fn scrambling_preserves_witness_relations(seed: u64, moves in 0usize..12) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let w = DecompositionWitness::standard(random_s(&mut r)).unwrap();
        let (d, _) = scramble(&lift_by_t(&w).unwrap(), moves, &mut r, |_| true).unwrap();
        prop_assert!(d.verify().passed());
        prop_assert_eq!(d.split_count, w.split_count + 1);
    }
}
