//! Witness-producing decomposition procedures: the exchange of ramified
//! factors, normalization over `F((t))`, and the two descent pipelines.
//!
//! Every procedure returns a [`DecompositionWitness`]: generator images
//! inside a fixed source presentation, re-checkable with
//! [`DecompositionWitness::verify`]. Pipelines require single-class images,
//! because grades and residues are read off class by class.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::armature::{
    twist_for_signs, ArmatureElement, ArmatureError, ArmaturePresentation, Class, SubPresentation,
};
use crate::gauge::{ArmatureGauge, CheckReport, GaugeError};
use crate::quaternion::{FormKind, QuatAlg, QuatElem, QuatError, QuatInvolution};
use crate::scalar::{BaseField, GammaValue, LaurentScalar, ScalarError};

type S<F> = LaurentScalar<F>;
type Elem<F> = ArmatureElement<F>;
type Pair<F> = (Elem<F>, Elem<F>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("generator image {0} is not a multiple of a single class")]
    NotSingleClass(String),
    #[error("square of {0} is not a scalar")]
    NotScalarSquare(String),
    #[error("{0} is not an eigenvector of the involution")]
    NotEigen(String),
    #[error("expected a tower of height {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("residual factor {0} is a division algebra: the assumed decomposition is contradictory")]
    Contradiction(String),
    #[error("no factor is ramified")]
    NoRamifiedFactor,
    #[error("residual involution is symplectic")]
    Symplectic,
    #[error("residual involution is isotropic (split factor with unit discriminant)")]
    Isotropic,
    #[error("generator {element} has nonzero grade {grade}")]
    NonZeroGrade { element: String, grade: String },
    #[error("split count dropped from {before} to {after}")]
    SplitCountDropped { before: usize, after: usize },
    #[error("split factor {0} has no generator pair of the form (square, λ)")]
    NotLambdaForm(usize),
    #[error("split factor {0} carries a hyperbolic involution")]
    Hyperbolic(usize),
    #[error("residue radical {0:?} is not a single central symmetric class with square value")]
    Radical(Vec<Class>),
    #[error("no class of grade class {0} centralizes the degree-0 part")]
    NoQuaternionClass(String),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
    #[error("witness failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Quaternion(#[from] QuatError),
    #[error(transparent)]
    Armature(#[from] ArmatureError),
    #[error(transparent)]
    Gauge(#[from] GaugeError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// One quaternion factor of a witness.
#[derive(Clone, Debug)]
pub struct WitnessFactor<F> {
    pub alg: QuatAlg<F>,
    pub inv: QuatInvolution<F>,
    /// `(θ(i)/i, θ(j)/j)`.
    pub signs: (i8, i8),
    pub i_image: Elem<F>,
    pub j_image: Elem<F>,
    pub split: bool,
}

impl<F: BaseField> WitnessFactor<F> {
    /// `"(a, b)"`.
    pub fn symbol(&self) -> String {
        format!("({}, {})", self.alg.a(), self.alg.b())
    }
}

/// A total decomposition of the algebra of `source` into quaternion
/// factors, given by generator images.
#[derive(Clone, Debug)]
pub struct DecompositionWitness<F> {
    pub source: ArmaturePresentation<F>,
    pub factors: Vec<WitnessFactor<F>>,
    pub split_count: usize,
}

fn single<F: BaseField>(x: &Elem<F>) -> Result<(Class, S<F>), DecompError> {
    x.single_class()
        .map(|(c, s)| (c, s.clone()))
        .ok_or_else(|| DecompError::NotSingleClass(x.to_string()))
}

fn square_scalar<F: BaseField>(p: &ArmaturePresentation<F>, x: &Elem<F>) -> Result<S<F>, DecompError> {
    let sq = p.mul(x, x);
    if sq.is_zero() {
        return Err(DecompError::NotScalarSquare(x.to_string()));
    }
    match sq.single_class() {
        Some((0, c)) => Ok(c.with_arity(p.arity())),
        _ => Err(DecompError::NotScalarSquare(x.to_string())),
    }
}

fn eigen<F: BaseField>(p: &ArmaturePresentation<F>, x: &Elem<F>) -> Option<i8> {
    let y = p.apply_involution(x);
    if y == *x {
        Some(1)
    } else if y == x.neg() {
        Some(-1)
    } else {
        None
    }
}

fn valuation<F: BaseField>(x: &S<F>, arity: usize) -> Vec<i64> {
    x.with_arity(arity).valuation_vector().expect("nonzero scalar")
}

/// `x·t^{-k}` so that the square valuation becomes `target` (which must
/// agree with it modulo 2).
fn rescale<F: BaseField>(x: &Elem<F>, sq: &S<F>, target: &[i64]) -> (Elem<F>, S<F>) {
    let v = valuation(sq, target.len());
    let k: Vec<i64> = v
        .iter()
        .zip(target)
        .map(|(a, b)| -(a - b).div_euclid(2))
        .collect();
    if k.iter().all(|&e| e == 0) {
        return (x.clone(), sq.clone());
    }
    let m = S::monomial(F::one(), &k);
    (x.scale(&m), sq * &m.square())
}

/// Divides `x` (with `x² = sq` a square) by a monomial square root when
/// one exists.
fn unit_square<F: BaseField>(x: &Elem<F>, sq: &S<F>) -> (Elem<F>, S<F>) {
    match sq.sqrt_monomial() {
        Some(r) => {
            let r_inv = r.inverse().unwrap();
            (x.scale(&r_inv), S::one().with_arity(sq.arity()))
        }
        None => (x.clone(), sq.clone()),
    }
}

fn parity<F: BaseField>(x: &S<F>, arity: usize) -> Vec<i64> {
    valuation(x, arity).iter().map(|e| e.rem_euclid(2)).collect()
}

impl<F: BaseField> DecompositionWitness<F> {
    /// Builds a witness from generator pairs, computing squares, signs,
    /// involutions and split verdicts.
    pub fn from_images(
        source: ArmaturePresentation<F>,
        images: Vec<Pair<F>>,
    ) -> Result<Self, DecompError> {
        let n = source.arity();
        let mut factors = Vec::with_capacity(images.len());
        for (i, j) in images {
            let a = square_scalar(&source, &i)?;
            let b = square_scalar(&source, &j)?;
            let si = eigen(&source, &i).ok_or_else(|| DecompError::NotEigen(i.to_string()))?;
            let sj = eigen(&source, &j).ok_or_else(|| DecompError::NotEigen(j.to_string()))?;
            let alg = QuatAlg::new(a, b)?.with_arity(n);
            let inv = QuatInvolution::twisted(&alg, twist_for_signs(si, sj))?;
            let split = alg.is_split()?;
            factors.push(WitnessFactor {
                alg,
                inv,
                signs: (si, sj),
                i_image: i,
                j_image: j,
                split,
            });
        }
        let split_count = factors.iter().filter(|f| f.split).count();
        Ok(DecompositionWitness {
            source,
            factors,
            split_count,
        })
    }

    /// The witness read off a symplectic base of the source.
    pub fn standard(source: ArmaturePresentation<F>) -> Result<Self, DecompError> {
        let images = source
            .symplectic_base()?
            .into_iter()
            .map(|(a, b)| (Elem::basis(a), Elem::basis(b)))
            .collect();
        Self::from_images(source, images)
    }

    pub fn arity(&self) -> usize {
        self.source.arity()
    }

    pub fn images(&self) -> Vec<Pair<F>> {
        self.factors
            .iter()
            .map(|f| (f.i_image.clone(), f.j_image.clone()))
            .collect()
    }

    /// Re-checks every relation from scratch.
    pub fn verify(&self) -> CheckReport {
        let p = &self.source;
        let mut report = CheckReport::default();
        let one = Elem::one();
        for (k, f) in self.factors.iter().enumerate() {
            let (i, j) = (&f.i_image, &f.j_image);
            report.record(
                p.mul(i, i) == one.scale(f.alg.a()),
                "witness.square",
                || format!("factor {k}: i² ≠ {}", f.alg.a()),
            );
            report.record(
                p.mul(j, j) == one.scale(f.alg.b()),
                "witness.square",
                || format!("factor {k}: j² ≠ {}", f.alg.b()),
            );
            report.record(!i.is_zero() && p.anticommutes(i, j), "witness.anticommute", || {
                format!("factor {k}: i, j do not anticommute")
            });
            report.record(eigen(p, i) == Some(f.signs.0), "witness.sign", || {
                format!("factor {k}: θ(i) ≠ {}·i", f.signs.0)
            });
            report.record(eigen(p, j) == Some(f.signs.1), "witness.sign", || {
                format!("factor {k}: θ(j) ≠ {}·j", f.signs.1)
            });
            report.record(
                crate::armature::signs_for_twist(&f.inv) == Some(f.signs),
                "witness.twist",
                || format!("factor {k}: twist {} does not realize the signs", f.inv.twist()),
            );
            let split = f.alg.is_split().ok();
            report.record(split == Some(f.split), "witness.split", || {
                format!("factor {k}: split flag {} disagrees", f.split)
            });
        }
        for (k, f) in self.factors.iter().enumerate() {
            for (l, g) in self.factors.iter().enumerate().skip(k + 1) {
                for x in [&f.i_image, &f.j_image] {
                    for y in [&g.i_image, &g.j_image] {
                        report.record(p.commutes(x, y), "witness.commute", || {
                            format!("factors {k} and {l} do not commute: {x} vs {y}")
                        });
                    }
                }
            }
        }
        let dim = 1usize
            .checked_shl(2 * self.factors.len() as u32)
            .unwrap_or(0);
        report.record(dim == p.order(), "witness.dimension", || {
            format!("4^{} ≠ {}", self.factors.len(), p.order())
        });
        let all: Vec<Class> = (0..p.rank()).map(|k| 1 << k).collect();
        report.record(p.radical_of(&all).is_empty(), "witness.central", || {
            "source pairing is degenerate".to_string()
        });
        let count = self.factors.iter().filter(|f| f.split).count();
        report.record(count == self.split_count, "witness.split_count", || {
            format!("stored {} but counted {count}", self.split_count)
        });
        report
    }

    fn verified(self) -> Result<Self, DecompError> {
        let r = self.verify();
        match r.violations.first() {
            None => Ok(self),
            Some(v) => Err(DecompError::Verification(format!("{}: {}", v.check, v.detail))),
        }
    }
}

impl<F: BaseField> fmt::Display for DecompositionWitness<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<String> = self.factors.iter().map(|x| x.symbol()).collect();
        write!(f, "{} [split {}]", syms.join(" ⊗ "), self.split_count)
    }
}

/// `Ad⟨⟨λ⟩⟩`: `(1, λ)` with `i` symmetric and `j` skew.
pub fn adjoint<F: BaseField>(lambda: S<F>) -> Result<ArmaturePresentation<F>, DecompError> {
    let one = S::one().with_arity(lambda.arity());
    Ok(ArmaturePresentation::quaternion(one, lambda, (1, -1))?)
}

fn append<F: BaseField>(
    w: &DecompositionWitness<F>,
    extra: &ArmaturePresentation<F>,
    arity: usize,
) -> Result<DecompositionWitness<F>, DecompError> {
    let r = w.source.rank();
    let source = w.source.with_arity(arity).tensor(&extra.with_arity(arity))?;
    let mut images = w.images();
    images.push((Elem::basis(1 << r), Elem::basis(1 << (r + 1))));
    DecompositionWitness::from_images(source, images)
}

/// `w ⊗ Ad⟨⟨t_{n+1}⟩⟩` over a tower one step higher.
pub fn lift_by_t<F: BaseField>(w: &DecompositionWitness<F>) -> Result<DecompositionWitness<F>, DecompError> {
    let n = w.arity();
    append(w, &adjoint(S::var(n))?, n + 1)
}

/// `w ⊗ ((t₁, t₂), θ)` for a witness over `F`, with the given signs on
/// the new factor.
pub fn lift_by_q<F: BaseField>(
    w: &DecompositionWitness<F>,
    signs: (i8, i8),
) -> Result<DecompositionWitness<F>, DecompError> {
    if w.arity() != 0 {
        return Err(DecompError::Arity {
            expected: 0,
            got: w.arity(),
        });
    }
    let q = ArmaturePresentation::quaternion(S::var(0).with_arity(2), S::var(1), signs)?;
    append(w, &q, 2)
}

// ---------------------------------------------------------------------------
// exchange over F((t))

/// Normalized generators of a factor over `F((t))`: `v(i²) ∈ {0, 1}`,
/// `v(j²) = 0`. Returns whether `i²` is ramified.
fn normalize_factor<F: BaseField>(
    p: &ArmaturePresentation<F>,
    pair: &Pair<F>,
) -> Result<(Pair<F>, bool), DecompError> {
    let (mut i, mut j) = pair.clone();
    let mut a = square_scalar(p, &i)?;
    let mut b = square_scalar(p, &j)?;
    match (parity(&a, 1)[0], parity(&b, 1)[0]) {
        (0, 1) => {
            std::mem::swap(&mut i, &mut j);
            std::mem::swap(&mut a, &mut b);
        }
        (1, 1) => {
            j = p.mul(&i, &j);
            b = square_scalar(p, &j)?;
        }
        _ => {}
    }
    let ramified = parity(&a, 1)[0] == 1;
    let (i, _) = rescale(&i, &a, &[i64::from(ramified)]);
    let (j, _) = rescale(&j, &b, &[0]);
    Ok(((i, j), ramified))
}

/// New generators from the exchange: `(t⁻¹·i₁i₂, j₁)` and `(i₂, j₁j₂)`.
fn exchange_images<F: BaseField>(
    p: &ArmaturePresentation<F>,
    h1: &Pair<F>,
    h2: &Pair<F>,
) -> (Pair<F>, Pair<F>) {
    let t_inv = S::var(0).pow(-1).with_arity(p.arity());
    let i1 = p.mul(&h1.0, &h2.0).scale(&t_inv);
    let j1 = h1.1.clone();
    let i2 = h2.0.clone();
    let j2 = p.mul(&h1.1, &h2.1);
    ((i1, j1), (i2, j2))
}

/// Result of exchanging two quaternion factors over `F((t))`.
#[derive(Clone, Debug)]
pub struct Exchange<F> {
    /// An input was defined over `F`; the outputs are the inputs.
    pub identity: bool,
    /// The inputs were taken in reverse order so the split one comes first.
    pub swapped: bool,
    /// Generators of the (possibly reordered) inputs inside their own
    /// algebras; the witness source is presented on them.
    pub input_generators: [(QuatElem<F>, QuatElem<F>); 2],
    pub witness: DecompositionWitness<F>,
}

impl<F: BaseField> Exchange<F> {
    pub fn first(&self) -> &WitnessFactor<F> {
        &self.witness.factors[0]
    }

    pub fn second(&self) -> &WitnessFactor<F> {
        &self.witness.factors[1]
    }
}

/// Eigen-generators of a quaternion algebra with involution: the
/// standard ones for γ, otherwise the twist and an invertible element
/// anticommuting with it.
fn eigen_generators<F: BaseField>(
    theta: &QuatInvolution<F>,
) -> Result<(QuatElem<F>, QuatElem<F>), DecompError> {
    let alg = theta.algebra();
    let n = alg.arity();
    if theta.is_symplectic() {
        return Ok((QuatElem::basis(1).with_arity(n), QuatElem::basis(2).with_arity(n)));
    }
    let u = theta.twist().clone();
    let v = alg
        .invertible_in(&alg.anticommutant(&u))
        .ok_or_else(|| QuatError::Internal("no invertible anticommuting element".into()))?;
    Ok((u, v))
}

fn presented<F: BaseField>(
    theta: &QuatInvolution<F>,
    i: &QuatElem<F>,
    j: &QuatElem<F>,
) -> Result<ArmaturePresentation<F>, DecompError> {
    let alg = theta.algebra();
    let (a, b) = (-&alg.nrd(i), -&alg.nrd(j));
    if !alg.check_generators(i, j, &a, &b) {
        return Err(QuatError::Internal("generator relations failed".into()).into());
    }
    let si = theta.eigen_sign(i).ok_or_else(|| DecompError::NotEigen(i.to_string()))?;
    let sj = theta.eigen_sign(j).ok_or_else(|| DecompError::NotEigen(j.to_string()))?;
    Ok(ArmaturePresentation::quaternion(a, b, (si, sj))?)
}

/// Exchanges two quaternion algebras with involution over `F((t))`:
/// `(a₁t, b₁) ⊗ (a₂t, b₂) ≅ (a₁a₂, b₁) ⊗ (a₂t, b₁b₂)`, the first output
/// being defined over `F`. A split input is moved to the first slot.
pub fn lemma32_exchange<F: BaseField>(
    h1: &QuatInvolution<F>,
    h2: &QuatInvolution<F>,
) -> Result<Exchange<F>, DecompError> {
    for h in [h1, h2] {
        if h.algebra().arity() != 1 {
            return Err(DecompError::Arity {
                expected: 1,
                got: h.algebra().arity(),
            });
        }
    }
    let over_f = |h: &QuatInvolution<F>| -> Result<bool, DecompError> {
        Ok(h.algebra().canonical_form_over_k()?.kind == FormKind::Unramified)
    };
    if over_f(h1)? || over_f(h2)? {
        let g1 = eigen_generators(h1)?;
        let g2 = eigen_generators(h2)?;
        let p = presented(h1, &g1.0, &g1.1)?.tensor(&presented(h2, &g2.0, &g2.1)?)?;
        let witness = DecompositionWitness::standard(p)?.verified()?;
        return Ok(Exchange {
            identity: true,
            swapped: false,
            input_generators: [g1, g2],
            witness,
        });
    }
    let swapped = !h1.algebra().is_split()? && h2.algebra().is_split()?;
    let (h1, h2) = if swapped { (h2, h1) } else { (h1, h2) };
    let l1 = h1.algebra().ramified_generators(Some(h1))?;
    let l2 = h2.algebra().ramified_generators(Some(h2))?;
    let p = presented(h1, &l1.i, &l1.j)?.tensor(&presented(h2, &l2.i, &l2.j)?)?;
    let e = |c: Class| Elem::basis(c);
    let (x, y) = exchange_images(&p, &(e(1), e(2)), &(e(4), e(8)));
    let witness = DecompositionWitness::from_images(p, vec![x, y])?.verified()?;
    Ok(Exchange {
        identity: false,
        swapped,
        input_generators: [(l1.i, l1.j), (l2.i, l2.j)],
        witness,
    })
}

// ---------------------------------------------------------------------------
// normalization over F((t))

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExchangeStep {
    pub first: usize,
    pub second: usize,
    pub split_before: usize,
    pub split_after: usize,
}

/// `(S₁, σ) ≅ Ad⟨⟨a′t⟩⟩ ⊗ (S′, σ′)` with every factor of `S′` defined over `F`.
#[derive(Clone, Debug)]
pub struct Prop31<F> {
    pub a_prime: F,
    /// Factor 0 is `Ad⟨⟨a′t⟩⟩` (`i` symmetric with square value, `j` skew
    /// with `j² ∈ a′t·K^{×2}`); the rest have unit squares.
    pub witness: DecompositionWitness<F>,
    pub steps: Vec<ExchangeStep>,
    pub input_split_count: usize,
}

fn split_of<F: BaseField>(p: &ArmaturePresentation<F>, pair: &Pair<F>) -> Result<bool, DecompError> {
    let a = square_scalar(p, &pair.0)?;
    let b = square_scalar(p, &pair.1)?;
    Ok(QuatAlg::new(a, b)?.with_arity(p.arity()).is_split()?)
}

pub fn prop31_normalize<F: BaseField>(d: &DecompositionWitness<F>) -> Result<Prop31<F>, DecompError> {
    if d.arity() != 1 {
        return Err(DecompError::Arity {
            expected: 1,
            got: d.arity(),
        });
    }
    let p = &d.source;
    let mut gens = Vec::new();
    let mut ramified = Vec::new();
    for pair in d.images() {
        single(&pair.0)?;
        single(&pair.1)?;
        let (g, r) = normalize_factor(p, &pair)?;
        gens.push(g);
        ramified.push(r);
    }
    let mut split: Vec<bool> = gens
        .iter()
        .map(|g| split_of(p, g))
        .collect::<Result<_, _>>()?;
    let mut steps = Vec::new();
    loop {
        let ram: Vec<usize> = (0..gens.len()).filter(|&k| ramified[k]).collect();
        if ram.len() < 2 {
            break;
        }
        let (mut k, mut l) = (ram[0], ram[1]);
        if !split[k] && split[l] {
            std::mem::swap(&mut k, &mut l);
        }
        let before = split.iter().filter(|&&s| s).count();
        let split_input = split[k] || split[l];
        let (x, y) = exchange_images(p, &gens[k], &gens[l]);
        let (x, rx) = normalize_factor(p, &x)?;
        let (y, ry) = normalize_factor(p, &y)?;
        if rx || !ry {
            return Err(QuatError::Internal("exchange produced unexpected ramification".into()).into());
        }
        split[k] = split_of(p, &x)?;
        split[l] = split_of(p, &y)?;
        gens[k] = x;
        gens[l] = y;
        ramified[k] = false;
        let after = split.iter().filter(|&&s| s).count();
        if after < before || (split_input && after != before) {
            return Err(DecompError::SplitCountDropped { before, after });
        }
        steps.push(ExchangeStep {
            first: k,
            second: l,
            split_before: before,
            split_after: after,
        });
    }
    let r = (0..gens.len())
        .find(|&k| ramified[k])
        .ok_or(DecompError::NoRamifiedFactor)?;
    let (i, j) = gens[r].clone();
    if !split[r] {
        let a = square_scalar(p, &i)?;
        let b = square_scalar(p, &j)?;
        return Err(DecompError::Contradiction(format!("({a}, {b})")));
    }
    let si = eigen(p, &i).ok_or_else(|| DecompError::NotEigen(i.to_string()))?;
    let sj = eigen(p, &j).ok_or_else(|| DecompError::NotEigen(j.to_string()))?;
    let (u, w) = match (si, sj) {
        (-1, -1) => return Err(DecompError::Symplectic),
        (1, -1) => return Err(DecompError::Isotropic),
        (-1, 1) => (i, j),
        _ => (p.mul(&i, &j), j),
    };
    let (u, u_sq) = rescale(&u, &square_scalar(p, &u)?, &[1]);
    let (w, _) = unit_square(&w, &square_scalar(p, &w)?);
    let a_prime = (&u_sq / &S::var(0)).leading_coefficient().unwrap();
    let mut images = vec![(w, u)];
    images.extend(
        gens.into_iter()
            .enumerate()
            .filter(|&(k, _)| k != r)
            .map(|(_, g)| g),
    );
    let witness = DecompositionWitness::from_images(p.clone(), images)?.verified()?;
    Ok(Prop31 {
        a_prime,
        witness,
        steps,
        input_split_count: d.split_count,
    })
}

// ---------------------------------------------------------------------------
// descent along Ad⟨⟨t⟩⟩

#[derive(Clone, Debug)]
pub struct Thm1<F> {
    /// Decomposition of `S`, presented on a complement of the central class.
    pub witness: DecompositionWitness<F>,
    /// Residue class spanning the center of `gr(S₁)₀ ≅ S × S`.
    pub central_class: Class,
}

fn require_grade_zero<F: BaseField>(
    g: &ArmatureGauge<F>,
    x: &Elem<F>,
) -> Result<(), DecompError> {
    let v = g.eval(x);
    if v != GammaValue::zero(g.presentation().arity()) {
        return Err(DecompError::NonZeroGrade {
            element: x.to_string(),
            grade: v.to_string(),
        });
    }
    Ok(())
}

/// Projects the remainder of a normalized witness through the degree-0
/// part `S × S` onto one copy of `S`.
pub fn thm1_descend<F: BaseField>(n: &Prop31<F>) -> Result<Thm1<F>, DecompError> {
    let p = &n.witness.source;
    let gauge = ArmatureGauge::new(p);
    let rep = gauge.kernel_and_residue()?;
    let res = &rep.residue;
    let mut projected = Vec::new();
    for f in &n.witness.factors[1..] {
        let mut pair = Vec::new();
        for x in [&f.i_image, &f.j_image] {
            require_grade_zero(&gauge, x)?;
            pair.push(rep.project(x)?);
        }
        projected.push((pair[0].clone(), pair[1].clone()));
    }
    let all: Vec<Class> = (0..res.rank()).map(|k| 1 << k).collect();
    let radical = res.radical_of(&all);
    if radical.len() != 1 || res.involution_sign(radical[0]) != 1 {
        return Err(DecompError::Radical(radical));
    }
    let c = radical[0];
    let s = res
        .square_of(c)
        .constant_value()
        .and_then(|v| v.sqrt())
        .ok_or_else(|| DecompError::Radical(vec![c]))?;
    let s = S::constant(s);
    let top = 63 - c.leading_zeros();
    let complement: Vec<Class> = all.into_iter().filter(|&b| b != 1 << top).collect();
    let quot = res.span_presentation(&complement)?;
    // x_c ↦ s, so x_{h+c} = x_h x_c / β(h, c) ↦ p(x_h)·s / β(h, c)
    let map = |z: &Elem<F>| -> Result<Elem<F>, DecompError> {
        let mut out = Elem::zero();
        for (d, coeff) in z.terms() {
            let (h, factor) = if d >> top & 1 == 0 {
                (d, S::one())
            } else {
                (d ^ c, &s / &res.cocycle(d ^ c, c))
            };
            let y = quot.from_parent(&Elem::basis(h))?;
            out = out.add(&y.scale(&(coeff * &factor)));
        }
        Ok(out)
    };
    let images = projected
        .iter()
        .map(|(i, j)| Ok((map(i)?, map(j)?)))
        .collect::<Result<Vec<_>, DecompError>>()?;
    let witness = DecompositionWitness::from_images(quot.presentation, images)?.verified()?;
    Ok(Thm1 {
        witness,
        central_class: c,
    })
}

// ---------------------------------------------------------------------------
// descent along (t₁, t₂)

/// Splitting of the degree-0 part off a presentation of `E ⊗ (t₁, t₂)`.
#[derive(Clone, Debug)]
pub struct Lm22<F> {
    /// Classes of `1⊗i` and `1⊗j`: grades `(½, 0)` and `(0, ½)` modulo
    /// integers, centralizing the degree-0 classes.
    pub c1: Class,
    pub c2: Class,
    pub zeta: (i8, i8),
    /// `u` with the `Q`-involution equal to `Int(u)∘γ`.
    pub twist: QuatElem<F>,
    /// Involution signs on the residue generators.
    pub theta0: Vec<i8>,
    pub residue: ArmaturePresentation<F>,
}

pub fn lm22_residue_split<F: BaseField>(c: &ArmaturePresentation<F>) -> Result<Lm22<F>, DecompError> {
    if c.arity() != 2 {
        return Err(DecompError::Arity {
            expected: 2,
            got: c.arity(),
        });
    }
    let gauge = ArmatureGauge::new(c);
    let kernel = gauge.kernel();
    let find = |target: [u8; 2]| -> Result<Class, DecompError> {
        c.classes()
            .find(|&a| {
                gauge.grade(a).class_mod_integers().as_deref() == Some(&target[..])
                    && kernel.iter().all(|&k| c.pairing(a, k) == 1)
            })
            .ok_or_else(|| DecompError::NoQuaternionClass(format!("{target:?}")))
    };
    let c1 = find([1, 0])?;
    let c2 = find([0, 1])?;
    let zeta = (c.involution_sign(c1), c.involution_sign(c2));
    let rep = gauge.kernel_and_residue()?;
    Ok(Lm22 {
        c1,
        c2,
        zeta,
        twist: twist_for_signs(zeta.0, zeta.1),
        theta0: rep.residue.signs().to_vec(),
        residue: rep.residue,
    })
}

/// Normal form of a Hermitian scalar over `(t₁, t₂)`.
#[derive(Clone, Debug)]
pub struct Lm23<F> {
    /// One of `1, i, j, ij` in `(t₁, t₂)`.
    pub u: QuatElem<F>,
    /// `θ₂(u) = eps_u·u`.
    pub eps_u: i8,
    /// `θ₂(u⁻¹)·λ·u⁻¹ = eps_u·λ/u²`, of even valuation.
    pub shifted: S<F>,
    /// `shifted / t^{2k}`, a unit.
    pub unit: S<F>,
    pub lambda0: F,
}

/// Moves `λ` into `F^×` up to squares by the base change `e₂ ↦ u⁻¹e₂`
/// followed by an even power of `t`.
pub fn lm23_hermitian_normalize<F: BaseField>(
    lambda: &S<F>,
    q_signs: (i8, i8),
) -> Result<Lm23<F>, DecompError> {
    if lambda.is_zero() {
        return Err(ScalarError::ZeroInput("lm23_hermitian_normalize").into());
    }
    let par = parity(lambda, 2);
    let (t1, t2) = (S::var(0).with_arity(2), S::var(1));
    let (k, eps_u, u_sq) = match (par[0], par[1]) {
        (0, 0) => (0, 1, S::one().with_arity(2)),
        (1, 0) => (1, q_signs.0, t1),
        (0, _) => (2, q_signs.1, t2),
        _ => (3, -q_signs.0 * q_signs.1, -&(&t1 * &t2)),
    };
    let shifted = &(lambda * &S::from_i64(i64::from(eps_u))) / &u_sq;
    let half: Vec<i64> = valuation(&shifted, 2).iter().map(|e| -e / 2).collect();
    let unit = &shifted * &S::monomial(F::one(), &half).square();
    let lambda0 = unit.residue()?;
    Ok(Lm23 {
        u: QuatElem::basis(k).with_arity(2),
        eps_u,
        shifted,
        unit,
        lambda0,
    })
}

/// The degree-0 part of `C` decomposed along a symplectic base of `𝒞₀`.
pub fn prop21_descend<F: BaseField>(
    c: &ArmaturePresentation<F>,
) -> Result<DecompositionWitness<F>, DecompError> {
    let rep = ArmatureGauge::new(c).kernel_and_residue()?;
    DecompositionWitness::standard(rep.residue)?.verified()
}

#[derive(Clone, Debug)]
pub struct Thm2<F> {
    /// Decomposition of `S`, presented on the degree-0 part of the source.
    pub witness: DecompositionWitness<F>,
    /// `λ_k ∈ F^×` with the `k`-th split factor `Ad⟨⟨λ_k⟩⟩`.
    pub lambdas: Vec<F>,
    pub lm22: Lm22<F>,
}

/// A split orthogonal factor as `(w, u)`: `w` symmetric with square value
/// normalized to a unit, `u` the skew generator.
fn lambda_form<F: BaseField>(
    p: &ArmaturePresentation<F>,
    pair: &Pair<F>,
    k: usize,
) -> Result<Pair<F>, DecompError> {
    let ij = p.mul(&pair.0, &pair.1);
    let cands = [pair.0.clone(), pair.1.clone(), ij];
    let signs: Vec<Option<i8>> = cands.iter().map(|x| eigen(p, x)).collect();
    let skew: Vec<usize> = (0..3).filter(|&m| signs[m] == Some(-1)).collect();
    if skew.len() != 1 {
        return Err(DecompError::NotLambdaForm(k));
    }
    let u = cands[skew[0]].clone();
    if square_scalar(p, &u)?.is_square()? {
        return Err(DecompError::Hyperbolic(k));
    }
    for (m, w) in cands.iter().enumerate() {
        if m == skew[0] {
            continue;
        }
        let sq = square_scalar(p, w)?;
        if sq.is_square()? {
            let zero = vec![0; p.arity()];
            let (w, sq) = rescale(w, &sq, &zero);
            let (w, _) = unit_square(&w, &sq);
            return Ok((w, u));
        }
    }
    Err(DecompError::NotLambdaForm(k))
}

/// Checks the shape `thm2_descend` expects of its split factors.
pub fn split_factors_in_lambda_form<F: BaseField>(w: &DecompositionWitness<F>) -> bool {
    w.factors.iter().enumerate().filter(|(_, f)| f.split).all(|(k, f)| {
        lambda_form(&w.source, &(f.i_image.clone(), f.j_image.clone()), k).is_ok()
    })
}

fn remainder_sub<F: BaseField>(
    p: &ArmaturePresentation<F>,
    rem: &[Pair<F>],
) -> Result<SubPresentation<F>, DecompError> {
    let mut basis = Vec::new();
    for (x, y) in rem {
        basis.push(single(x)?.0);
        basis.push(single(y)?.0);
    }
    Ok(p.span_presentation(&basis)?)
}

/// Descends a decomposition of `S ⊗ (t₁, t₂)` to one of `S` with the same
/// number of split factors.
pub fn thm2_descend<F: BaseField>(d: &DecompositionWitness<F>) -> Result<Thm2<F>, DecompError> {
    if d.arity() != 2 {
        return Err(DecompError::Arity {
            expected: 2,
            got: d.arity(),
        });
    }
    let p = &d.source;
    let mut adj = Vec::new();
    let mut rem = Vec::new();
    for (k, f) in d.factors.iter().enumerate() {
        let pair = (f.i_image.clone(), f.j_image.clone());
        single(&pair.0)?;
        single(&pair.1)?;
        if f.split {
            adj.push(lambda_form(p, &pair, k)?);
        } else {
            rem.push(pair);
        }
    }
    let zero = vec![0i64; 2];
    let mut lambdas = Vec::new();
    for (w, u) in adj.iter_mut() {
        let sub = remainder_sub(p, &rem)?;
        let lm = lm22_residue_split(&sub.presentation)?;
        let par = parity(&square_scalar(p, u)?, 2);
        let uc = (if par[0] == 1 { lm.c1 } else { 0 }) ^ (if par[1] == 1 { lm.c2 } else { 0 });
        if uc != 0 {
            // u ↦ u·x_U⁻¹; remainder generators anticommuting with x_U
            // absorb w so they still commute with the new factor
            let pc = sub.parent_class(uc);
            let xu = Elem::basis(pc);
            let xu_inv = xu.scale(&p.square_of(pc).inverse().unwrap());
            *u = p.mul(u, &xu_inv);
            for (x, y) in rem.iter_mut() {
                if p.anticommutes(x, &xu) {
                    *x = p.mul(x, w);
                }
                if p.anticommutes(y, &xu) {
                    *y = p.mul(y, w);
                }
            }
        }
        let (u0, _) = rescale(u, &square_scalar(p, u)?, &zero);
        *u = u0;
        let skew = if eigen(p, u) == Some(-1) {
            u.clone()
        } else {
            p.mul(w, u)
        };
        lambdas.push(square_scalar(p, &skew)?.residue()?);
    }
    let sub = remainder_sub(p, &rem)?;
    let lm = lm22_residue_split(&sub.presentation)?;
    let rep = ArmatureGauge::new(&sub.presentation).kernel_and_residue()?;
    let mut gens = adj;
    for (a, b) in rep.residue.symplectic_base()? {
        let lift = |z: Class| -> Result<Elem<F>, DecompError> {
            let pc = sub.parent_class(rep.sub.parent_class(z));
            Ok(rescale(&Elem::basis(pc), &p.square_of(pc), &zero).0)
        };
        gens.push((lift(a)?, lift(b)?));
    }
    let gauge = ArmatureGauge::new(p);
    let full = gauge.kernel_and_residue()?;
    let mut images = Vec::new();
    for (x, y) in &gens {
        require_grade_zero(&gauge, x)?;
        require_grade_zero(&gauge, y)?;
        images.push((full.project(x)?, full.project(y)?));
    }
    let witness = DecompositionWitness::from_images(full.residue, images)?.verified()?;
    Ok(Thm2 {
        witness,
        lambdas,
        lm22: lm,
    })
}

// ---------------------------------------------------------------------------
// scrambling

/// Generator changes that keep a witness valid.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// `(i, j) ↦ (j, i)`.
    Swap { factor: usize },
    /// `(i, j) ↦ (i, ij)`.
    Product { factor: usize },
    /// `j_k ↦ j_k i_l`, `j_l ↦ j_l i_k`.
    Transvect { first: usize, second: usize },
    /// `i ↦ t_var^power · i`.
    Rescale { factor: usize, var: usize, power: i64 },
    /// The exchange on two ramified factors over `F((t))`.
    Exchange { first: usize, second: usize },
}

pub fn apply_move<F: BaseField>(
    w: &DecompositionWitness<F>,
    mv: &Move,
) -> Result<DecompositionWitness<F>, DecompError> {
    let p = &w.source;
    let mut g = w.images();
    let m = g.len();
    let check = |k: usize| -> Result<(), DecompError> {
        if k < m {
            Ok(())
        } else {
            Err(DecompError::Inapplicable(format!("no factor {k}")))
        }
    };
    match *mv {
        Move::Swap { factor } => {
            check(factor)?;
            let (i, j) = g[factor].clone();
            g[factor] = (j, i);
        }
        Move::Product { factor } => {
            check(factor)?;
            let (i, j) = g[factor].clone();
            g[factor] = (i.clone(), p.mul(&i, &j));
        }
        Move::Transvect { first, second } => {
            check(first)?;
            check(second)?;
            if first == second {
                return Err(DecompError::Inapplicable("transvection needs two factors".into()));
            }
            let jk = p.mul(&g[first].1, &g[second].0);
            let jl = p.mul(&g[second].1, &g[first].0);
            g[first].1 = jk;
            g[second].1 = jl;
        }
        Move::Rescale { factor, var, power } => {
            check(factor)?;
            if var >= p.arity() {
                return Err(DecompError::Inapplicable(format!("no variable t{}", var + 1)));
            }
            let t = S::var(var).pow(power).with_arity(p.arity());
            g[factor].0 = g[factor].0.scale(&t);
        }
        Move::Exchange { first, second } => {
            check(first)?;
            check(second)?;
            if p.arity() != 1 || first == second {
                return Err(DecompError::Inapplicable("exchange needs two factors over F((t))".into()));
            }
            let (x, rx) = normalize_factor(p, &g[first])?;
            let (y, ry) = normalize_factor(p, &g[second])?;
            if !(rx && ry) {
                return Err(DecompError::Inapplicable("exchange needs two ramified factors".into()));
            }
            let (a, b) = exchange_images(p, &x, &y);
            g[first] = a;
            g[second] = b;
        }
    }
    DecompositionWitness::from_images(p.clone(), g)
}

/// Applies `count` random moves that keep the split count and satisfy
/// `accept`.
pub fn scramble<F: BaseField, R: Rng>(
    w: &DecompositionWitness<F>,
    count: usize,
    rng: &mut R,
    accept: impl Fn(&DecompositionWitness<F>) -> bool,
) -> Result<(DecompositionWitness<F>, Vec<Move>), DecompError> {
    let m = w.factors.len();
    let mut cur = w.clone();
    let mut moves = Vec::new();
    if m == 0 {
        return Ok((cur, moves));
    }
    let mut attempts = 0;
    while moves.len() < count {
        attempts += 1;
        if attempts > 200 * (count + 1) {
            return Err(DecompError::Inapplicable(format!(
                "found only {} of {count} admissible moves",
                moves.len()
            )));
        }
        let k = rng.gen_range(0..m);
        let l = rng.gen_range(0..m);
        let mv = match rng.gen_range(0..5) {
            0 => Move::Swap { factor: k },
            1 => Move::Product { factor: k },
            2 => Move::Transvect {
                first: k,
                second: l,
            },
            3 => Move::Rescale {
                factor: k,
                var: rng.gen_range(0..w.arity().max(1)),
                power: if rng.gen_bool(0.5) { 1 } else { -1 },
            },
            _ => Move::Exchange {
                first: k,
                second: l,
            },
        };
        let Ok(next) = apply_move(&cur, &mv) else {
            continue;
        };
        if next.split_count == w.split_count && accept(&next) {
            cur = next;
            moves.push(mv);
        }
    }
    Ok((cur.verified()?, moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type L = S<Rational>;

    fn s(src: &str, n: usize) -> L {
        parse_scalar(src, n).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn theta(a: &str, b: &str, twist: usize) -> QuatInvolution<Rational> {
        let alg = QuatAlg::new(s(a, 1), s(b, 1)).unwrap();
        QuatInvolution::twisted(&alg, QuatElem::basis(twist)).unwrap()
    }

    /// `(−1,−1), γ` tensored with `Ad⟨⟨λ⟩⟩` for each λ.
    fn s_with(adjoints: &[i64]) -> DecompositionWitness<Rational> {
        let mut p = ArmaturePresentation::quaternion(L::from_i64(-1), L::from_i64(-1), (-1, -1)).unwrap();
        for &l in adjoints {
            p = p.tensor(&adjoint(L::from_i64(l)).unwrap()).unwrap();
        }
        DecompositionWitness::standard(p).unwrap()
    }

    #[test]
    fn exchange_split_pair() {
        let e = lemma32_exchange(&theta("3t", "4", 1), &theta("5t", "9", 1)).unwrap();
        assert!(!e.identity && !e.swapped);
        assert_eq!(e.first().symbol(), "(15, 4)");
        assert_eq!(e.second().symbol(), "(5t, 36)");
        assert!(e.first().split && e.second().split);
        assert!(e.witness.verify().passed());
    }

    #[test]
    fn exchange_nonsplit_pair() {
        let e = lemma32_exchange(&theta("3t", "2", 0), &theta("5t", "7", 0)).unwrap();
        assert_eq!(e.first().symbol(), "(15, 2)");
        assert_eq!(e.second().symbol(), "(5t, 14)");
        let r = e.witness.verify();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn exchange_moves_split_input_first() {
        let e = lemma32_exchange(&theta("3t", "2", 0), &theta("5t", "9", 0)).unwrap();
        assert!(e.swapped);
        assert!(e.first().split && !e.second().split);
    }

    #[test]
    fn exchange_identity_over_f() {
        let e = lemma32_exchange(&theta("t", "1", 0), &theta("2", "3", 1)).unwrap();
        assert!(e.identity);
        assert!(e.witness.verify().passed());
    }

    #[test]
    fn exchange_rejects_other_towers() {
        let alg = QuatAlg::new(s("t1", 2), s("t2", 2)).unwrap();
        let h = QuatInvolution::canonical(&alg);
        assert!(matches!(
            lemma32_exchange(&h, &theta("t", "2", 0)),
            Err(DecompError::Arity { .. })
        ));
    }

    #[test]
    fn normalize_unscrambled_lift() {
        let d = lift_by_t(&s_with(&[5])).unwrap();
        assert_eq!(d.split_count, 2);
        let n = prop31_normalize(&d).unwrap();
        assert!(n.steps.is_empty());
        assert_eq!(n.a_prime, q(1));
        assert!(n.witness.verify().passed());
    }

    #[test]
    fn normalize_after_exchange_scramble() {
        let d = lift_by_t(&s_with(&[5])).unwrap();
        // spread the ramification to the first factor, then exchange back
        let d = apply_move(&d, &Move::Swap { factor: 2 }).unwrap();
        let d = apply_move(&d, &Move::Transvect { first: 1, second: 2 }).unwrap();
        assert_eq!(d.split_count, 2);
        let n = prop31_normalize(&d).unwrap();
        assert!(n.witness.verify().passed());
        let u2 = n.witness.factors[0].alg.b().square_class().unwrap();
        assert_eq!(u2.parity, vec![1]);
        for f in &n.witness.factors[1..] {
            assert_eq!(valuation(f.alg.a(), 1), vec![0]);
            assert_eq!(valuation(f.alg.b(), 1), vec![0]);
        }
    }

    #[test]
    fn normalize_contradiction_branch() {
        let p = ArmaturePresentation::quaternion(s("3t", 1), s("5", 1), (-1, 1)).unwrap();
        let d = DecompositionWitness::standard(p).unwrap();
        assert_eq!(
            prop31_normalize(&d).unwrap_err(),
            DecompError::Contradiction("(3t, 5)".into())
        );
    }

    #[test]
    fn descend_t_unscrambled_recovers_factors() {
        let w = s_with(&[5]);
        let t = thm1_descend(&prop31_normalize(&lift_by_t(&w).unwrap()).unwrap()).unwrap();
        assert_eq!(t.witness.source, w.source);
        assert_eq!(t.witness.images(), w.images());
        assert_eq!(t.witness.split_count, 1);
    }

    #[test]
    fn descend_t_round_trip() {
        let w = s_with(&[5]);
        let lifted = lift_by_t(&w).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (d, moves) = scramble(&lifted, 10, &mut rng, |_| true).unwrap();
        assert_eq!(moves.len(), 10);
        let t = thm1_descend(&prop31_normalize(&d).unwrap()).unwrap();
        assert!(t.witness.verify().passed());
        assert!(t.witness.split_count >= 1);
    }

    #[test]
    fn descend_t_without_split_factors() {
        let w = s_with(&[]);
        let t = thm1_descend(&prop31_normalize(&lift_by_t(&w).unwrap()).unwrap()).unwrap();
        assert_eq!(t.witness.split_count, 0);
        assert_eq!(t.witness.factors.len(), 1);
    }

    #[test]
    fn lm22_recovers_twists() {
        let e = ArmaturePresentation::quaternion(L::from_i64(-1), L::from_i64(-1), (-1, -1)).unwrap();
        for (signs, k) in [((-1, -1), 0), ((-1, 1), 1), ((1, -1), 2), ((1, 1), 3)] {
            let q = ArmaturePresentation::quaternion(s("t1", 2), s("t2", 2), signs).unwrap();
            let lm = lm22_residue_split(&e.with_arity(2).tensor(&q).unwrap()).unwrap();
            assert_eq!(lm.twist, QuatElem::basis(k));
            assert_eq!(lm.theta0, vec![-1, -1]);
            assert_eq!((lm.c1, lm.c2), (4, 8));
        }
    }

    #[test]
    fn lm23_examples() {
        assert_eq!(lm23_hermitian_normalize(&s("7", 2), (-1, -1)).unwrap().lambda0, q(7));
        let r = lm23_hermitian_normalize(&s("7t1", 2), (-1, -1)).unwrap();
        assert_eq!(r.u, QuatElem::basis(1).with_arity(2));
        assert_eq!(r.lambda0, q(-7));
        let r = lm23_hermitian_normalize(&s("5(1+t2)t1t2", 2), (-1, -1)).unwrap();
        assert_eq!(r.u, QuatElem::basis(3).with_arity(2));
        assert_eq!(r.lambda0, q(5));
    }

    #[test]
    fn prop21_examples() {
        let e = ArmaturePresentation::quaternion(L::from_i64(-1), L::from_i64(-1), (-1, -1)).unwrap();
        let q = ArmaturePresentation::quaternion(s("t1", 2), s("t2", 2), (-1, -1)).unwrap();
        let w = prop21_descend(&e.with_arity(2).tensor(&q).unwrap()).unwrap();
        assert_eq!(w.source, e);
        let w = prop21_descend(&q).unwrap();
        assert!(w.factors.is_empty());
        assert_eq!(w.source.order(), 1);
    }

    #[test]
    fn descend_q_round_trips() {
        for adj in [vec![], vec![5]] {
            let w = s_with(&adj);
            let lifted = lift_by_q(&w, (-1, -1)).unwrap();
            let t = thm2_descend(&lifted).unwrap();
            assert_eq!(t.witness.split_count, adj.len());
            assert_eq!(t.witness.source, w.source);
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let (d, _) = scramble(&lifted, 10, &mut rng, split_factors_in_lambda_form).unwrap();
            let t = thm2_descend(&d).unwrap();
            assert!(t.witness.verify().passed());
            assert_eq!(t.witness.split_count, adj.len());
        }
    }

    #[test]
    fn descend_q_normalizes_ramified_lambda() {
        let w = s_with(&[]);
        let ad = adjoint(s("5t1t2", 2)).unwrap();
        let p = w.source.with_arity(2).tensor(&ad).unwrap();
        let q = ArmaturePresentation::quaternion(s("t1", 2), s("t2", 2), (-1, -1)).unwrap();
        let d = DecompositionWitness::standard(p.tensor(&q).unwrap()).unwrap();
        assert_eq!(d.split_count, 1);
        let t = thm2_descend(&d).unwrap();
        assert_eq!(t.witness.split_count, 1);
        assert_eq!(t.lambdas.len(), 1);
        assert!(t.witness.verify().passed());
    }

    #[test]
    fn verify_flags_broken_witness() {
        let mut w = s_with(&[5]);
        w.factors[1].j_image = w.factors[0].i_image.clone();
        assert!(!w.verify().passed());
    }
}
