//! Independent checks used to cross-examine the main algorithms, plus the
//! seeded samplers that feed them.
//!
//! The oracles deliberately take other routes than the code they check:
//! brute-force search instead of Hilbert symbols, dense power series instead
//! of Hensel criteria, quaternion structure constants instead of cocycles.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::armature::{twist_for_signs, ArmatureElement, ArmaturePresentation, Class};
use crate::decompose::Lm23;
use crate::quaternion::{QuatAlg, QuatElem, QuatError, QuatInvolution};
use crate::scalar::integer::{self, Place, DEFAULT_FACTOR_BOUND};
use crate::scalar::{BaseField, LaurentScalar, Rational, ScalarError};

type S<F> = LaurentScalar<F>;
type L = LaurentScalar<Rational>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Some `(x, y, z) ≠ 0` with `a x² + b y² = z²` and `|x|, |y| ≤ bound`.
///
/// Existence of such a point is equivalent to `(a, b)` splitting over ℚ.
pub fn isotropic_point(a: i64, b: i64, bound: i64) -> Option<(i64, i64, i64)> {
    for x in 0..=bound {
        for y in -bound..=bound {
            if x == 0 && y <= 0 {
                continue;
            }
            let v = a as i128 * (x * x) as i128 + b as i128 * (y * y) as i128;
            if v < 0 {
                continue;
            }
            let z = (v as f64).sqrt().round() as i128;
            for c in [z - 1, z, z + 1] {
                if c >= 0 && c * c == v {
                    return Some((x, y, c as i64));
                }
            }
        }
    }
    None
}

fn squarefree_integer(x: &Rational) -> Result<BigInt, ScalarError> {
    integer::squarefree_part(&(x.numer() * x.denom()), DEFAULT_FACTOR_BOUND)
}

/// Whether a sum of quaternion symbols over `ℚ((t))` is trivial in the
/// Brauer group.
///
/// Writing each slot as `c·t^e·(1 + O(t))`, the symbol `(u t^e, w t^f)`
/// equals `(u, w) + (t, (−1)^{ef} u^f w^e)`; the sum is trivial iff the
/// `t`-parts multiply to a square and the constant symbols cancel at every
/// place of ℚ.
pub fn brauer_product_trivial(symbols: &[(L, L)]) -> Result<bool, ScalarError> {
    let mut chi = BigInt::one();
    let mut constants = Vec::new();
    for (a, b) in symbols {
        let (Some(e), Some(f)) = (a.with_arity(1).valuation_vector(), b.with_arity(1).valuation_vector())
        else {
            return Err(ScalarError::ZeroInput("brauer_product_trivial"));
        };
        let u = squarefree_integer(&a.leading_coefficient().unwrap())?;
        let w = squarefree_integer(&b.leading_coefficient().unwrap())?;
        let (e, f) = (e[0].rem_euclid(2), f[0].rem_euclid(2));
        if e == 1 {
            chi *= &w;
        }
        if f == 1 {
            chi *= &u;
        }
        if e * f == 1 {
            chi = -chi;
        }
        constants.push((u, w));
    }
    if !integer::is_perfect_square(&chi) {
        return Ok(false);
    }
    let mut places = vec![Place::Infinite, Place::Prime(BigUint::from(2u32))];
    for (u, w) in &constants {
        for x in [u, w] {
            for (p, _) in integer::factor_bounded(x.magnitude(), DEFAULT_FACTOR_BOUND)? {
                let place = Place::Prime(p);
                if !places.contains(&place) {
                    places.push(place);
                }
            }
        }
    }
    Ok(places.iter().all(|v| {
        constants
            .iter()
            .map(|(u, w)| integer::hilbert_symbol(u, w, v))
            .product::<i32>()
            == 1
    }))
}

fn dense(p: &crate::scalar::poly::Poly<Rational>) -> (usize, Vec<Rational>) {
    let low = p.min_degree_in(0) as usize;
    let high = p.degree_in(0) as usize;
    let mut v = vec![q(0); high - low + 1];
    for (m, c) in p.terms() {
        v[m.exponent(0) as usize - low] = c.clone();
    }
    (low, v)
}

/// Coefficients `c₀ … c_{order-1}` and the order `k` of
/// `x = t^k (c₀ + c₁t + …)` for nonzero `x ∈ ℚ(t)`.
pub fn laurent_series(x: &L, order: usize) -> (i64, Vec<Rational>) {
    let (nl, num) = dense(x.numerator());
    let (dl, den) = dense(x.denominator());
    let mut out = Vec::with_capacity(order);
    let mut rem: Vec<Rational> = num;
    rem.resize(order.max(rem.len()), q(0));
    for n in 0..order {
        let c = rem[n].clone() / den[0].clone();
        for (k, d) in den.iter().enumerate().skip(1) {
            if n + k < rem.len() {
                rem[n + k] = rem[n + k].clone() - c.clone() * d.clone();
            }
        }
        out.push(c);
    }
    (nl as i64 - dl as i64, out)
}

/// Whether `x ∈ ℚ(t)` is a square in `ℚ((t))`, checked by extracting a
/// square root of its power series term by term and squaring it back.
pub fn series_is_square(x: &L, order: usize) -> bool {
    let (k, c) = laurent_series(x, order);
    if c.is_empty() || c[0].is_zero() || k.rem_euclid(2) != 0 {
        return false;
    }
    let Some(s0) = c[0].sqrt() else {
        return false;
    };
    let mut s = vec![s0];
    for n in 1..order {
        let mut acc = c[n].clone();
        for i in 1..n {
            acc -= s[i].clone() * s[n - i].clone();
        }
        s.push(acc / (q(2) * s[0].clone()));
    }
    (0..order).all(|n| {
        let sq = (0..=n).fold(q(0), |a, i| a + s[i].clone() * s[n - i].clone());
        sq == c[n]
    })
}

/// Checks `⟨1, −λ⟩ ≅ ⟨1, −λ₀⟩` as Hermitian forms over `((t₁, t₂), θ₂)`:
/// the base change `e₂ ↦ u⁻¹e₂` turns `−λ` into `−θ₂(u⁻¹)λu⁻¹ = −μ`,
/// computed here by quaternion multiplication, and `μ/λ₀` must be a square.
pub fn hermitian_base_change<F: BaseField>(
    lambda: &S<F>,
    q_signs: (i8, i8),
    r: &Lm23<F>,
) -> Result<bool, QuatError> {
    let alg = QuatAlg::new(S::var(0).with_arity(2), S::var(1))?;
    let theta = QuatInvolution::twisted(&alg, twist_for_signs(q_signs.0, q_signs.1))?;
    let u_inv = alg
        .inverse(&r.u.with_arity(2))
        .ok_or_else(|| QuatError::NotInvertible(r.u.to_string()))?;
    let lam = QuatElem::scalar(lambda.with_arity(2));
    let mu = alg.mul(&alg.mul(&theta.apply(&u_inv), &lam), &u_inv);
    if !mu.is_central() || r.lambda0.is_zero() {
        return Ok(false);
    }
    let ratio = &mu.c[0] / &S::constant(r.lambda0.clone());
    Ok(ratio.is_square()?)
}

/// Compares the twisted group algebra product with the quaternion
/// structure constants on all 16 basis products.
pub fn products_agree<F: BaseField>(a: &S<F>, b: &S<F>) -> Result<bool, QuatError> {
    let alg = QuatAlg::new(a.clone(), b.clone())?;
    let pres = ArmaturePresentation::quaternion(a.clone(), b.clone(), (-1, -1))
        .map_err(|e| QuatError::Internal(e.to_string()))?;
    let n = alg.arity();
    for x in 0..4 {
        for y in 0..4 {
            let qx = QuatElem::basis(x).with_arity(n);
            let qy = QuatElem::basis(y).with_arity(n);
            let expected = ArmaturePresentation::from_quat_elem(&alg.mul(&qx, &qy));
            let got = pres.mul(
                &ArmatureElement::basis(x as Class),
                &ArmatureElement::basis(y as Class),
            );
            if expected != got {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// samplers

/// Nonzero element of `ℚ(t)`: a ratio of random quadratics times `t^e`.
pub fn random_qt<R: Rng>(rng: &mut R) -> L {
    let poly = |rng: &mut R| -> L {
        loop {
            let p = (0..3).fold(L::zero_in(1), |acc, k| {
                acc + L::monomial(q(rng.gen_range(-6..=6)), &[k])
            });
            if !p.is_zero() {
                return p;
            }
        }
    };
    let e = rng.gen_range(-3..=3);
    &(&poly(rng) / &poly(rng)) * &L::monomial(q(1), &[e])
}

/// `±c·t^e·(1 + k t_j)^{±1}` over a tower of height `arity`.
pub fn random_scalar<F: BaseField, R: Rng>(rng: &mut R, arity: usize) -> S<F> {
    let c = loop {
        let n = F::from_i64(rng.gen_range(1..=7));
        let d = F::from_i64(rng.gen_range(1..=3));
        if !n.is_zero() && !d.is_zero() {
            break n / d;
        }
    };
    let c = if rng.gen_bool(0.5) { -c } else { c };
    let exps: Vec<i64> = (0..arity).map(|_| rng.gen_range(-2..=2)).collect();
    let mut x = S::monomial(c, &exps);
    if arity > 0 && rng.gen_bool(0.3) {
        let j = rng.gen_range(0..arity);
        let f = &S::one() + &(&S::var(j).with_arity(arity) * &S::from_i64(rng.gen_range(1..=3)));
        if !f.is_zero() {
            x = if rng.gen_bool(0.5) { &x * &f } else { &x / &f };
        }
    }
    x
}

/// Random combination of up to `terms` basis words.
pub fn random_element<F: BaseField, R: Rng>(
    rng: &mut R,
    pres: &ArmaturePresentation<F>,
    terms: usize,
) -> ArmatureElement<F> {
    let mut x = ArmatureElement::zero();
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let c = rng.gen_range(0..pres.order()) as Class;
        x = x.add(&ArmatureElement::term(c, random_scalar(rng, pres.arity())));
    }
    if x.is_zero() {
        ArmatureElement::one()
    } else {
        x
    }
}

/// Presentation with a random nondegenerate alternating pairing on
/// `F₂^{2m}`, unit squares and trivial signs.
pub fn random_alternating<R: Rng>(rng: &mut R, m: usize) -> ArmaturePresentation<Rational> {
    let r = 2 * m;
    loop {
        let mut pairing = vec![vec![1i8; r]; r];
        for k in 0..r {
            for l in k + 1..r {
                if rng.gen_bool(0.5) {
                    pairing[k][l] = -1;
                    pairing[l][k] = -1;
                }
            }
        }
        let p = ArmaturePresentation::new(0, vec![L::one(); r], pairing, vec![1; r]).unwrap();
        let all: Vec<Class> = (0..r).map(|k| 1 << k).collect();
        if p.radical_of(&all).is_empty() {
            return p;
        }
    }
}

/// Every defining relation of a symplectic base, exhaustively.
pub fn is_symplectic_base(p: &ArmaturePresentation<Rational>, base: &[(Class, Class)]) -> bool {
    let flat: Vec<Class> = base.iter().flat_map(|&(a, b)| [a, b]).collect();
    if crate::armature::gf2_rank(&flat) != p.rank() {
        return false;
    }
    base.iter().enumerate().all(|(k, &(a, b))| {
        p.pairing(a, b) == -1
            && base.iter().enumerate().all(|(l, &(c, d))| {
                k == l || (p.pairing(a, c) == 1 && p.pairing(a, d) == 1 && p.pairing(b, c) == 1 && p.pairing(b, d) == 1)
            })
    })
}

/// Signed squarefree integer of a nonzero rational, as `i64`.
pub fn squarefree_i64(x: &Rational) -> Option<i64> {
    squarefree_integer(x).ok()?.to_i64()
}
