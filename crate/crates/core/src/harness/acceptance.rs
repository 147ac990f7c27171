//! The acceptance suite: eleven exact, seeded criteria.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_traits::One;
use serde::Serialize;

use crate::armature::{signs_for_twist, ArmatureElement, ArmaturePresentation, Class};
use crate::decompose::{
    adjoint, lemma32_exchange, lift_by_q, lift_by_t, lm22_residue_split, lm23_hermitian_normalize,
    prop31_normalize, scramble, split_factors_in_lambda_form, thm1_descend, thm2_descend,
    DecompositionWitness,
};
use crate::gauge::{ArmatureGauge, CheckReport};
use crate::oracle;
use crate::quaternion::{QuatAlg, QuatElem, QuatInvolution};
use crate::scalar::{GammaValue, Rational};
use crate::{Element, Presentation, Scalar};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("[{tag}] {:>2} {} ({} checks)", self.id, self.name, self.checked);
        if !self.detail.is_empty() {
            s.push_str(": ");
            s.push_str(&self.detail);
        }
        s
    }
}

/// Tally of one criterion; the first failure is kept as the detail.
struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn absorb(&mut self, report: &CheckReport, label: &str) {
        self.checked += report.checked;
        if let (None, Some(v)) = (&self.failure, report.violations.first()) {
            self.failure = Some(format!("{label}: {} ({})", v.check, v.detail));
        }
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionResult {
        CriterionResult {
            id,
            name,
            passed: self.failure.is_none() && self.checked > 0,
            checked: self.checked,
            detail: self.failure.unwrap_or_default(),
        }
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn int(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

fn t(k: usize, arity: usize) -> Scalar {
    Scalar::var(k).with_arity(arity)
}

fn rng_for(seed: u64, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (u64::from(id) << 56))
}

/// `((−1,−1), γ) ⊗ Ad⟨⟨λ⟩⟩ ⊗ …` over ℚ.
pub fn example_s(adjoints: &[i64]) -> Presentation {
    let mut p = ArmaturePresentation::quaternion(int(-1), int(-1), (-1, -1)).unwrap();
    for &l in adjoints {
        p = p.tensor(&adjoint(int(l)).unwrap()).unwrap();
    }
    p
}

fn square_classes(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 1);
    let mut tally = Tally::new();
    for _ in 0..500 {
        let x = oracle::random_qt(&mut rng);
        let Ok(class) = x.square_class() else {
            tally.check(false, || format!("square_class failed on {x}"));
            continue;
        };
        tally.check(class.parity.iter().all(|&p| p <= 1), || format!("parity of {x}"));
        let normalized = &x / &class.representative();
        tally.check(normalized.is_square() == Ok(true), || format!("{x}/{} not square", class.representative()));
        tally.check(oracle::series_is_square(&normalized, 10), || {
            format!("series oracle rejects {normalized}")
        });
    }
    tally.finish(1, "square-class dichotomy")
}

fn exchange(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 2);
    let vals = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7];
    let mut tally = Tally::new();
    for _ in 0..100 {
        let mut v: Vec<i64> = (0..4).map(|_| *vals.choose(&mut rng).unwrap()).collect();
        let twists: Vec<usize> = (0..2).map(|_| rng.gen_range(0..3)).collect();
        let build = |a: i64, b: i64, k: usize| {
            let alg = QuatAlg::new(&int(a) * &t(0, 1), int(b)).unwrap();
            QuatInvolution::twisted(&alg, QuatElem::basis(k)).unwrap()
        };
        let h1 = build(v[0], v[1], twists[0]);
        let h2 = build(v[2], v[3], twists[1]);
        let label = format!("({}t, {}) ⊗ ({}t, {})", v[0], v[1], v[2], v[3]);
        let e = match lemma32_exchange(&h1, &h2) {
            Ok(e) => e,
            Err(err) => {
                tally.check(false, || format!("{label}: {err}"));
                continue;
            }
        };
        let splits = (h1.algebra().is_split().unwrap(), h2.algebra().is_split().unwrap());
        if e.swapped {
            v.swap(0, 2);
            v.swap(1, 3);
        }
        let (f1, f2) = (e.first(), e.second());
        tally.check(
            *f1.alg.a() == int(v[0] * v[2])
                && *f1.alg.b() == int(v[1])
                && *f2.alg.a() == &int(v[2]) * &t(0, 1)
                && *f2.alg.b() == int(v[1] * v[3]),
            || format!("{label}: got {} ⊗ {}", f1.symbol(), f2.symbol()),
        );
        let report = e.witness.verify();
        tally.check(report.passed(), || format!("{label}: {:?}", report.violations));
        match splits {
            (true, true) => tally.check(f1.split && f2.split, || format!("{label}: split pair lost")),
            (true, false) | (false, true) => {
                tally.check(f1.split && !f2.split, || format!("{label}: split + nonsplit not kept"))
            }
            _ => {}
        }
        let symbols: Vec<(Scalar, Scalar)> = [h1.algebra(), h2.algebra(), &f1.alg, &f2.alg]
            .iter()
            .map(|a| (a.a().clone(), a.b().clone()))
            .collect();
        tally.check(oracle::brauer_product_trivial(&symbols) == Ok(true), || {
            format!("{label}: Brauer classes differ")
        });
    }
    tally.finish(2, "exchange of ramified factors")
}

fn gauge_vs_norm(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 3);
    let mut tally = Tally::new();
    let (a, b) = (t(0, 2), t(1, 2));
    let alg = QuatAlg::new(a.clone(), b.clone()).unwrap();
    let pres = ArmaturePresentation::quaternion(a, b, (-1, -1)).unwrap();
    let gauge = ArmatureGauge::new(&pres);
    let check = |c: Class, s: Scalar, tally: &mut Tally| {
        let x = ArmatureElement::term(c, s.clone());
        let qx = QuatElem::basis(c as usize).with_arity(2).scale(&s);
        let half_nrd = GammaValue::from_halves(alg.nrd(&qx).with_arity(2).valuation_vector().unwrap());
        let g = gauge.eval(&x);
        tally.check(g == half_nrd, || format!("{x}: gauge {g} vs ½v(Nrd) {half_nrd}"));
    };
    for c in 0..4 {
        check(c, Scalar::one().with_arity(2), &mut tally);
    }
    for _ in 0..200 {
        let c = rng.gen_range(0..4);
        let s = oracle::random_scalar(&mut rng, 2);
        check(c, s, &mut tally);
    }
    tally.finish(3, "armature gauge equals half the norm valuation")
}

fn sample_pairs(rng: &mut ChaCha8Rng, p: &Presentation, n: usize) -> Vec<(Element, Element)> {
    (0..n)
        .map(|_| (oracle::random_element(rng, p, 4), oracle::random_element(rng, p, 4)))
        .collect()
}

fn gauge_axioms(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 4);
    let mut tally = Tally::new();
    let e = example_s(&[]);
    let s1 = e.tensor(&adjoint(t(0, 1)).unwrap()).unwrap();
    let q = ArmaturePresentation::quaternion(t(0, 2), t(1, 2), (-1, -1)).unwrap();
    let s2 = e.with_arity(2).tensor(&q).unwrap();
    for (name, p) in [("g1", s1), ("g2", s2)] {
        let gauge = ArmatureGauge::new(&p);
        let pairs = sample_pairs(&mut rng, &p, 500);
        let singles: Vec<Element> = pairs.iter().map(|(x, _)| x.clone()).collect();
        let mut report = gauge.check_surmultiplicative(&pairs);
        report.merge(gauge.check_special(&singles));
        report.merge(gauge.check_homomorphism());
        tally.absorb(&report, name);
    }
    tally.finish(4, "gauge axioms")
}

fn residue_structure(_seed: u64) -> CriterionResult {
    let mut tally = Tally::new();
    let e = example_s(&[]);
    let quat = ArmaturePresentation::quaternion(t(0, 2), t(1, 2), (-1, -1)).unwrap();
    let s2 = e.with_arity(2).tensor(&quat).unwrap();
    match ArmatureGauge::new(&s2).kernel_and_residue() {
        Ok(rep) => {
            tally.check(4 * rep.kernel.len() == s2.order(), || {
                format!("|𝒞₀| = {} of {}", rep.kernel.len(), s2.order())
            });
            tally.check(rep.cardinality_law_holds(), || "cardinality law".into());
            tally.check(rep.residue == e, || "residue is not ((−1,−1), γ)".into());
            tally.check(rep.degree0_algebra().is_semisimple() == Ok(true), || {
                "degree-0 part not semisimple".into()
            });
        }
        Err(err) => tally.check(false, || err.to_string()),
    }
    let s1 = e.tensor(&adjoint(t(0, 1)).unwrap()).unwrap();
    match ArmatureGauge::new(&s1).kernel_and_residue() {
        Ok(rep) => {
            let alg = rep.degree0_algebra();
            match alg.central_idempotent() {
                Ok(Some(idem)) => {
                    let zero = vec![q(0); alg.dim()];
                    let one: Vec<Rational> = (0..alg.dim()).map(|k| if k == 0 { q(1) } else { q(0) }).collect();
                    tally.check(alg.mul(&idem, &idem) == idem && idem != zero && idem != one, || {
                        "idempotent is trivial".into()
                    });
                }
                other => tally.check(false, || format!("no central idempotent: {other:?}")),
            }
        }
        Err(err) => tally.check(false, || err.to_string()),
    }
    tally.finish(5, "residue structure")
}

fn lm22_round_trip(_seed: u64) -> CriterionResult {
    let mut tally = Tally::new();
    let e = example_s(&[]).with_arity(2);
    let alg = QuatAlg::new(t(0, 2), t(1, 2)).unwrap();
    for k in 0..4 {
        let u = QuatElem::basis(k).with_arity(2);
        let theta = QuatInvolution::twisted(&alg, u.clone()).unwrap();
        let signs = signs_for_twist(&theta).unwrap();
        let q = ArmaturePresentation::quaternion(t(0, 2), t(1, 2), signs).unwrap();
        let c = e.tensor(&q).unwrap();
        match lm22_residue_split(&c) {
            Ok(r) => tally.check(r.twist == u && r.theta0 == e.signs(), || {
                format!("twist {u}: recovered {}", r.twist)
            }),
            Err(err) => tally.check(false, || format!("twist {u}: {err}")),
        }
    }
    tally.finish(6, "degree-0 splitting recovers the twist")
}

fn lm23_normalization(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 7);
    let mut tally = Tally::new();
    let signs = [(-1, -1), (-1, 1), (1, -1), (1, 1)];
    for _ in 0..100 {
        let l0 = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let l = Scalar::monomial(
            q(rng.gen_range(1..=4)),
            &[rng.gen_range(-3..=3), rng.gen_range(-3..=3)],
        );
        let mut lambda = &int(l0) * &l.square();
        if rng.gen_bool(0.5) {
            lambda = &lambda * &(&Scalar::one() + &t(0, 2));
        }
        let sg = *signs.choose(&mut rng).unwrap();
        match lm23_hermitian_normalize(&lambda, sg) {
            Ok(r) => {
                let ok = oracle::hermitian_base_change(&lambda, sg, &r) == Ok(true);
                tally.check(ok, || format!("λ = {lambda}: base change to {} fails", r.lambda0));
            }
            Err(err) => tally.check(false, || format!("λ = {lambda}: {err}")),
        }
    }
    tally.finish(7, "Hermitian normalization of λ")
}

fn thm1_round_trip(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 8);
    let mut tally = Tally::new();
    let mut run = || -> Result<DecompositionWitness<Rational>, String> {
        let w = DecompositionWitness::standard(example_s(&[5])).map_err(|e| e.to_string())?;
        let lifted = lift_by_t(&w).map_err(|e| e.to_string())?;
        let (d, _) = scramble(&lifted, 10, &mut rng, |_| true).map_err(|e| e.to_string())?;
        let n = prop31_normalize(&d).map_err(|e| e.to_string())?;
        Ok(thm1_descend(&n).map_err(|e| e.to_string())?.witness)
    };
    match run() {
        Ok(w) => {
            let report = w.verify();
            tally.check(report.passed(), || format!("{:?}", report.violations));
            tally.check(w.split_count >= 1, || format!("split count {}", w.split_count));
        }
        Err(err) => tally.check(false, || err),
    }
    tally.finish(8, "descent along Ad⟨⟨t⟩⟩")
}

fn thm2_round_trip(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 9);
    let mut tally = Tally::new();
    let mut run = || -> Result<DecompositionWitness<Rational>, String> {
        let w = DecompositionWitness::standard(example_s(&[5])).map_err(|e| e.to_string())?;
        let lifted = lift_by_q(&w, (-1, -1)).map_err(|e| e.to_string())?;
        let (d, _) =
            scramble(&lifted, 10, &mut rng, split_factors_in_lambda_form).map_err(|e| e.to_string())?;
        Ok(thm2_descend(&d).map_err(|e| e.to_string())?.witness)
    };
    match run() {
        Ok(w) => {
            let report = w.verify();
            tally.check(report.passed(), || format!("{:?}", report.violations));
            tally.check(w.split_count == 1, || format!("split count {}", w.split_count));
        }
        Err(err) => tally.check(false, || err),
    }
    tally.finish(9, "descent along (t₁, t₂)")
}

fn symplectic_bases(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 10);
    let mut tally = Tally::new();
    for k in 0..50 {
        let m = 1 + k % 4;
        let p = oracle::random_alternating(&mut rng, m);
        match p.symplectic_base() {
            Ok(base) => tally.check(oracle::is_symplectic_base(&p, &base), || format!("form {k}, m = {m}")),
            Err(err) => tally.check(false, || format!("form {k}: {err}")),
        }
    }
    tally.finish(10, "symplectic Gram–Schmidt")
}

fn cross_module(seed: u64) -> CriterionResult {
    let mut rng = rng_for(seed, 11);
    let mut tally = Tally::new();
    for _ in 0..20 {
        let a: Scalar = oracle::random_scalar(&mut rng, 1);
        let b: Scalar = oracle::random_scalar(&mut rng, 1);
        tally.check(oracle::products_agree(&a, &b) == Ok(true), || format!("({a}, {b})"));
    }
    tally.finish(11, "group-algebra and quaternion products agree")
}

/// Runs every criterion with the given seed, in order.
pub fn run_acceptance(seed: u64) -> Vec<CriterionResult> {
    let suite: [fn(u64) -> CriterionResult; 11] = [
        square_classes,
        exchange,
        gauge_vs_norm,
        gauge_axioms,
        residue_structure,
        lm22_round_trip,
        lm23_normalization,
        thm1_round_trip,
        thm2_round_trip,
        symplectic_bases,
        cross_module,
    ];
    suite.iter().map(|f| f(seed)).collect()
}
