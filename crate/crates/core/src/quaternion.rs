//! Quaternion algebras `(a, b)` over a Laurent tower, their involutions
//! `Int(u)∘γ`, splitting, and normal forms over `F((t))`.

use std::fmt;

use num_traits::{One, Zero};

use crate::linalg;
use crate::scalar::{BaseField, LaurentScalar, ScalarError, SquareClass};

type S<F> = LaurentScalar<F>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuatError {
    #[error("structure constant {0} is zero")]
    ZeroSlot(&'static str),
    #[error("twist element {0} is not invertible")]
    NotInvertible(String),
    #[error("twist element {0} is neither central nor pure")]
    NotCentralOrPure(String),
    #[error("involution is symplectic")]
    Symplectic,
    #[error("algebra is defined over the base field")]
    DefinedOverF,
    #[error("algebra is split")]
    Split,
    #[error("expected a tower of height {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Coordinates on the basis `1, i, j, ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatElem<F> {
    pub c: [S<F>; 4],
}

impl<F: BaseField> QuatElem<F> {
    pub fn new(x0: S<F>, x1: S<F>, x2: S<F>, x3: S<F>) -> Self {
        QuatElem { c: [x0, x1, x2, x3] }
    }

    pub fn zero() -> Self {
        Self::scalar(S::zero())
    }

    pub fn scalar(c: S<F>) -> Self {
        QuatElem::new(c, S::zero(), S::zero(), S::zero())
    }

    /// The `k`-th basis element (0 → 1, 1 → i, 2 → j, 3 → ij).
    pub fn basis(k: usize) -> Self {
        let mut c = [S::zero(), S::zero(), S::zero(), S::zero()];
        c[k] = S::one();
        QuatElem { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn is_pure(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        QuatElem {
            c: std::array::from_fn(|k| &self.c[k] + &o.c[k]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuatElem {
            c: std::array::from_fn(|k| &self.c[k] - &o.c[k]),
        }
    }

    pub fn neg(&self) -> Self {
        QuatElem {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }

    pub fn scale(&self, s: &S<F>) -> Self {
        QuatElem {
            c: std::array::from_fn(|k| &self.c[k] * s),
        }
    }

    pub fn with_arity(&self, n: usize) -> Self {
        QuatElem {
            c: std::array::from_fn(|k| self.c[k].with_arity(n)),
        }
    }
}

impl<F: BaseField> fmt::Display for QuatElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "i", "j", "ij"];
        let mut out = String::new();
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let s = x.to_string();
            let compound = s[1..].contains(['+', '-']) || s.contains('/');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let body = if compound { format!("({})", body) } else { body };
            let term = match (k, body.as_str()) {
                (0, _) => body.clone(),
                (_, "1") => NAMES[k].to_string(),
                _ => format!("{}*{}", body, NAMES[k]),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{}", out)
    }
}

/// The quaternion algebra with `i² = a`, `j² = b`, `ij = −ji`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatAlg<F> {
    arity: usize,
    a: S<F>,
    b: S<F>,
}

impl<F: BaseField> QuatAlg<F> {
    pub fn new(a: S<F>, b: S<F>) -> Result<Self, QuatError> {
        if a.is_zero() {
            return Err(QuatError::ZeroSlot("a"));
        }
        if b.is_zero() {
            return Err(QuatError::ZeroSlot("b"));
        }
        let arity = a.arity().max(b.arity());
        Ok(QuatAlg {
            arity,
            a: a.with_arity(arity),
            b: b.with_arity(arity),
        })
    }

    /// Same algebra viewed in a taller tower.
    pub fn with_arity(&self, n: usize) -> Self {
        QuatAlg {
            arity: n,
            a: self.a.with_arity(n),
            b: self.b.with_arity(n),
        }
    }

    pub fn a(&self) -> &S<F> {
        &self.a
    }

    pub fn b(&self) -> &S<F> {
        &self.b
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn one(&self) -> QuatElem<F> {
        QuatElem::basis(0).with_arity(self.arity)
    }

    pub fn mul(&self, x: &QuatElem<F>, y: &QuatElem<F>) -> QuatElem<F> {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        let [x0, x1, x2, x3] = &x.c;
        let [y0, y1, y2, y3] = &y.c;
        let z0 = &(&(&(x0 * y0) + &(a * &(x1 * y1))) + &(b * &(x2 * y2))) - &(&ab * &(x3 * y3));
        let z1 = &(&(&(x0 * y1) + &(x1 * y0)) - &(b * &(x2 * y3))) + &(b * &(x3 * y2));
        let z2 = &(&(&(x0 * y2) + &(x2 * y0)) + &(a * &(x1 * y3))) - &(a * &(x3 * y1));
        let z3 = &(&(&(x0 * y3) + &(x3 * y0)) + &(x1 * y2)) - &(x2 * y1);
        QuatElem::new(z0, z1, z2, z3).with_arity(self.arity)
    }

    pub fn square(&self, x: &QuatElem<F>) -> QuatElem<F> {
        self.mul(x, x)
    }

    /// The canonical involution γ.
    pub fn conj(&self, x: &QuatElem<F>) -> QuatElem<F> {
        QuatElem::new(x.c[0].clone(), -&x.c[1], -&x.c[2], -&x.c[3])
    }

    pub fn nrd(&self, x: &QuatElem<F>) -> S<F> {
        let [x0, x1, x2, x3] = &x.c;
        let ab = &self.a * &self.b;
        &(&(&x0.square() - &(&self.a * &x1.square())) - &(&self.b * &x2.square()))
            + &(&ab * &x3.square())
    }

    pub fn trd(&self, x: &QuatElem<F>) -> S<F> {
        &x.c[0] + &x.c[0]
    }

    pub fn inverse(&self, x: &QuatElem<F>) -> Option<QuatElem<F>> {
        let n = self.nrd(x).inverse()?;
        Some(self.conj(x).scale(&n))
    }

    pub fn commutes(&self, x: &QuatElem<F>, y: &QuatElem<F>) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn anticommutes(&self, x: &QuatElem<F>, y: &QuatElem<F>) -> bool {
        self.mul(x, y) == self.mul(y, x).neg()
    }

    /// Whether the algebra is isomorphic to `M₂`.
    pub fn is_split(&self) -> Result<bool, QuatError> {
        Ok(symbol_splits(&self.a, &self.b, self.arity)?)
    }

    fn require_arity(&self, n: usize) -> Result<(), QuatError> {
        if self.arity != n {
            return Err(QuatError::Arity {
                expected: n,
                got: self.arity,
            });
        }
        Ok(())
    }

    /// Rewrites an algebra over `F((t))` as `(α, β)` or `(αt, β)` with
    /// `α, β` square-class representatives in `F`.
    pub fn canonical_form_over_k(&self) -> Result<CanonicalForm<F>, QuatError> {
        self.require_arity(1)?;
        let (i1, isq) = reduce_to_class(&QuatElem::basis(1), &self.a)?;
        let (j1, jsq) = reduce_to_class(&QuatElem::basis(2), &self.b)?;
        let pa = isq.square_class()?.parity[0];
        let pb = jsq.square_class()?.parity[0];
        let (i2, isq2, j2, jsq2) = match (pa, pb) {
            (0, 1) => (j1, jsq, i1, isq),
            (1, 1) => {
                let t_inv = S::var(0).inverse().unwrap();
                let k = self.mul(&i1, &j1).scale(&t_inv);
                let ksq = -&(&(&isq * &jsq) * &t_inv.square());
                let (k, ksq) = reduce_to_class(&k, &ksq)?;
                (i1, isq, k, ksq)
            }
            _ => (i1, isq, j1, jsq),
        };
        let ci = isq2.square_class()?;
        let cj = jsq2.square_class()?;
        let kind = if ci.parity[0] == 1 {
            FormKind::Ramified
        } else {
            FormKind::Unramified
        };
        let form = CanonicalForm {
            kind,
            alpha: ci.unit,
            beta: cj.unit,
            i_image: self.normalize(&i2),
            j_image: self.normalize(&j2),
            i_square: isq2,
            j_square: jsq2,
        };
        Ok(form)
    }

    fn normalize(&self, x: &QuatElem<F>) -> QuatElem<F> {
        x.with_arity(self.arity)
    }

    /// Checks that `(i', j')` are quaternion generators of this algebra
    /// with the given squares: the relations hold and `1, i', j', i'j'`
    /// are linearly independent.
    pub fn check_generators(
        &self,
        i: &QuatElem<F>,
        j: &QuatElem<F>,
        i_square: &S<F>,
        j_square: &S<F>,
    ) -> bool {
        let ij = self.mul(i, j);
        if self.square(i) != QuatElem::scalar(i_square.clone()).with_arity(self.arity)
            || self.square(j) != QuatElem::scalar(j_square.clone()).with_arity(self.arity)
            || ij != self.mul(j, i).neg()
        {
            return false;
        }
        let rows: Vec<Vec<S<F>>> = [self.one(), i.clone(), j.clone(), ij]
            .iter()
            .map(|e| e.c.to_vec())
            .collect();
        !linalg::determinant(&rows).is_zero()
    }

    /// Pure elements anticommuting with the pure element `u`.
    pub(crate) fn anticommutant(&self, u: &QuatElem<F>) -> Vec<QuatElem<F>> {
        let images: Vec<QuatElem<F>> = (0..4)
            .map(|k| {
                let e = QuatElem::basis(k);
                self.mul(u, &e).add(&self.mul(&e, u))
            })
            .collect();
        let rows: Vec<Vec<S<F>>> = (0..4)
            .map(|r| (0..4).map(|k| images[k].c[r].clone()).collect())
            .collect();
        linalg::nullspace(&rows, 4)
            .into_iter()
            .map(|v| QuatElem::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
            .collect()
    }

    pub(crate) fn invertible_in(&self, candidates: &[QuatElem<F>]) -> Option<QuatElem<F>> {
        let mut tries: Vec<QuatElem<F>> = candidates.to_vec();
        if candidates.len() == 2 {
            tries.push(candidates[0].add(&candidates[1]));
        }
        tries.into_iter().find(|x| !self.nrd(x).is_zero())
    }

    /// Generators `i, j` with `v(i²)` odd, `v(j²)` even, each an eigenvector
    /// of the involution (when one is given). Does not reject split
    /// algebras; used by the exchange lemma.
    pub(crate) fn ramified_generators(
        &self,
        inv: Option<&QuatInvolution<F>>,
    ) -> Result<Lemma31<F>, QuatError> {
        self.require_arity(1)?;
        let parity = |x: &S<F>| -> Result<u8, QuatError> { Ok(x.square_class()?.parity[0]) };
        let sq = |x: &QuatElem<F>| -> S<F> { -&self.nrd(x) };
        let orthogonal = inv.filter(|v| !v.is_symplectic());
        let (i, j, branch, substituted) = if let Some(theta) = orthogonal {
            let u = theta.twist().clone();
            let plane = self.anticommutant(&u);
            let v = self
                .invertible_in(&plane)
                .ok_or_else(|| QuatError::Internal("no invertible anticommuting element".into()))?;
            if parity(&sq(&u))? == 1 {
                if parity(&sq(&v))? == 0 {
                    (u, v, TwistBranch::I, false)
                } else {
                    let uv = self.mul(&u, &v);
                    (u, uv, TwistBranch::I, true)
                }
            } else if parity(&sq(&v))? == 1 {
                (v, u, TwistBranch::J, false)
            } else {
                return Err(QuatError::DefinedOverF);
            }
        } else {
            let (ei, ej) = (QuatElem::basis(1), QuatElem::basis(2));
            let branch = TwistBranch::Central;
            match (parity(&self.a)?, parity(&self.b)?) {
                (1, 0) => (ei, ej, branch, false),
                (0, 1) => (ej, ei, branch, false),
                (1, 1) => {
                    let k = self.mul(&ei, &ej);
                    (ei, k, branch, true)
                }
                _ => return Err(QuatError::DefinedOverF),
            }
        };
        let (i, i_square) = scale_by_t(&i, &sq(&i), 1);
        let (j, j_square) = scale_by_t(&j, &sq(&j), 0);
        let (i, j) = (self.normalize(&i), self.normalize(&j));
        if !self.check_generators(&i, &j, &i_square, &j_square) {
            return Err(QuatError::Internal("generator relations failed".into()));
        }
        let a = (&i_square / &S::var(0)).leading_coefficient().unwrap();
        let b = j_square.leading_coefficient().unwrap();
        Ok(Lemma31 {
            i,
            j,
            i_square,
            j_square,
            a,
            b,
            branch,
            substituted,
        })
    }
}

/// `x · t^{-k}` with `k` chosen so the square has valuation `parity`.
fn scale_by_t<F: BaseField>(x: &QuatElem<F>, sq: &S<F>, parity: i64) -> (QuatElem<F>, S<F>) {
    let v = sq.valuation_vector().unwrap()[0];
    let k = (v - parity).div_euclid(2);
    if k == 0 {
        return (x.clone(), sq.clone());
    }
    let tk = S::var(0).pow(-k);
    (x.scale(&tk), sq * &tk.square())
}

/// Divides a generator `x` with `x² = sq` by a monomial square root of
/// `sq / rep(sq)` when one exists, so the new square is the class
/// representative; otherwise leaves `x` alone.
fn reduce_to_class<F: BaseField>(
    x: &QuatElem<F>,
    sq: &S<F>,
) -> Result<(QuatElem<F>, S<F>), QuatError> {
    let rep = sq.square_class()?.representative();
    let ratio = sq / &rep;
    match ratio.sqrt_monomial() {
        Some(r) => {
            let r_inv = r.inverse().unwrap();
            Ok((x.scale(&r_inv), rep.with_arity(sq.arity())))
        }
        None => Ok((x.clone(), sq.clone())),
    }
}

/// Splitting of `(a, b)` over `F((t₁))…((tₙ))`, recursing on the outermost
/// indeterminate.
pub fn symbol_splits<F: BaseField>(a: &S<F>, b: &S<F>, arity: usize) -> Result<bool, ScalarError> {
    if a.is_zero() || b.is_zero() {
        return Err(ScalarError::ZeroInput("symbol_splits"));
    }
    if arity == 0 {
        let (Some(x), Some(y)) = (a.constant_value(), b.constant_value()) else {
            return Err(ScalarError::Unsupported(
                "non-constant slot in a tower of height 0".into(),
            ));
        };
        return F::quaternion_splits(&x, &y);
    }
    let (ea, ca) = a.with_arity(arity).split_outermost().unwrap();
    let (eb, cb) = b.with_arity(arity).split_outermost().unwrap();
    match (ea.rem_euclid(2), eb.rem_euclid(2)) {
        (0, 0) => symbol_splits(&ca, &cb, arity - 1),
        (1, 0) => cb.is_square(),
        (0, 1) => ca.is_square(),
        _ => (-&(&ca * &cb)).is_square(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `(α, β)`: defined over `F`.
    Unramified,
    /// `(αt, β)`.
    Ramified,
}

/// Normal form of an algebra over `F((t))` with explicit generator images.
///
/// `i_square` equals `α·t^e` times a square of `K`; the extra square factor
/// is 1 whenever it has a monomial square root.
#[derive(Clone, Debug)]
pub struct CanonicalForm<F> {
    pub kind: FormKind,
    pub alpha: F,
    pub beta: F,
    pub i_image: QuatElem<F>,
    pub j_image: QuatElem<F>,
    pub i_square: S<F>,
    pub j_square: S<F>,
}

impl<F: BaseField> CanonicalForm<F> {
    pub fn target(&self) -> (S<F>, S<F>) {
        let a = match self.kind {
            FormKind::Unramified => S::constant(self.alpha.clone()).with_arity(1),
            FormKind::Ramified => &S::constant(self.alpha.clone()) * &S::var(0),
        };
        (a, S::constant(self.beta.clone()).with_arity(1))
    }

    /// Generator relations plus the certificate that the image squares
    /// differ from the target slots by squares.
    pub fn verify(&self, source: &QuatAlg<F>) -> Result<bool, QuatError> {
        let (a, b) = self.target();
        Ok(
            source.check_generators(&self.i_image, &self.j_image, &self.i_square, &self.j_square)
                && (&self.i_square / &a).is_square()?
                && (&self.j_square / &b).is_square()?,
        )
    }
}

impl<F: BaseField> fmt::Display for CanonicalForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            FormKind::Unramified => "Unramified",
            FormKind::Ramified => "Ramified",
        };
        write!(f, "{}({}, {})", tag, self.alpha, self.beta)
    }
}

/// Which generator realizes the involution `Int(·)∘γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistBranch {
    /// Involution is `Int(i)∘γ`; discriminant is the class of `at`.
    I,
    /// Involution is `Int(j)∘γ`; discriminant is the class of `b`.
    J,
    /// Involution is γ (no twist).
    Central,
}

/// Generators `i² = at·(square)`, `j² = b·(square)` over `F((t))`.
#[derive(Clone, Debug)]
pub struct Lemma31<F> {
    pub i: QuatElem<F>,
    pub j: QuatElem<F>,
    pub i_square: S<F>,
    pub j_square: S<F>,
    pub a: F,
    pub b: F,
    pub branch: TwistBranch,
    /// `j` was replaced by `i·j⁻¹` (rescaled by a power of `t` and a
    /// constant) because the first complement had ramified square.
    pub substituted: bool,
}

/// Generators adapted to an orthogonal involution on a quaternion algebra
/// over `F((t))` that is neither defined over `F` nor split.
pub fn lemma31_generators<F: BaseField>(
    alg: &QuatAlg<F>,
    theta: &QuatInvolution<F>,
) -> Result<Lemma31<F>, QuatError> {
    alg.require_arity(1)?;
    if theta.is_symplectic() {
        return Err(QuatError::Symplectic);
    }
    if alg.canonical_form_over_k()?.kind == FormKind::Unramified {
        return Err(QuatError::DefinedOverF);
    }
    if alg.is_split()? {
        return Err(QuatError::Split);
    }
    alg.ramified_generators(Some(theta))
}

/// The involution `x ↦ u·γ(x)·u⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatInvolution<F> {
    alg: QuatAlg<F>,
    u: QuatElem<F>,
    u_inv: QuatElem<F>,
}

impl<F: BaseField> QuatInvolution<F> {
    pub fn canonical(alg: &QuatAlg<F>) -> Self {
        QuatInvolution {
            alg: alg.clone(),
            u: alg.one(),
            u_inv: alg.one(),
        }
    }

    pub fn twisted(alg: &QuatAlg<F>, u: QuatElem<F>) -> Result<Self, QuatError> {
        let u = u.with_arity(alg.arity());
        if !(u.is_central() || u.is_pure()) {
            return Err(QuatError::NotCentralOrPure(u.to_string()));
        }
        let u_inv = alg
            .inverse(&u)
            .ok_or_else(|| QuatError::NotInvertible(u.to_string()))?;
        if u.is_central() {
            return Ok(Self::canonical(alg));
        }
        Ok(QuatInvolution {
            alg: alg.clone(),
            u,
            u_inv,
        })
    }

    pub fn algebra(&self) -> &QuatAlg<F> {
        &self.alg
    }

    pub fn twist(&self) -> &QuatElem<F> {
        &self.u
    }

    pub fn is_symplectic(&self) -> bool {
        self.u.is_central()
    }

    pub fn apply(&self, x: &QuatElem<F>) -> QuatElem<F> {
        if self.is_symplectic() {
            return self.alg.conj(x);
        }
        let g = self.alg.conj(x);
        self.alg.mul(&self.alg.mul(&self.u, &g), &self.u_inv)
    }

    /// `Some(±1)` when `θ(x) = ±x`.
    pub fn eigen_sign(&self, x: &QuatElem<F>) -> Option<i8> {
        let y = self.apply(x);
        if y == *x {
            Some(1)
        } else if y == x.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// Square class of `−Nrd(u)`.
    pub fn discriminant(&self) -> Result<SquareClass<F>, QuatError> {
        if self.is_symplectic() {
            return Err(QuatError::Symplectic);
        }
        Ok((-&self.alg.nrd(&self.u)).square_class()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Fp, Rational};

    type L = S<Rational>;

    fn s(src: &str, n: usize) -> L {
        parse_scalar(src, n).unwrap()
    }

    fn alg(a: &str, b: &str, n: usize) -> QuatAlg<Rational> {
        QuatAlg::new(s(a, n), s(b, n)).unwrap()
    }

    fn e(k: usize) -> QuatElem<Rational> {
        QuatElem::basis(k)
    }

    #[test]
    fn basis_products() {
        let q = alg("t1", "t2", 2);
        assert_eq!(q.mul(&e(1), &e(2)), e(3).with_arity(2));
        assert_eq!(q.mul(&e(2), &e(1)), e(3).neg().with_arity(2));
        let h = alg("-1", "-1", 0);
        let one_plus_i = e(0).add(&e(1));
        let one_minus_i = e(0).sub(&e(1));
        assert_eq!(h.mul(&one_plus_i, &one_minus_i), QuatElem::scalar(s("2", 0)));
        assert_eq!(h.nrd(&one_plus_i), s("2", 0));
        assert_eq!(q.nrd(&e(1)), s("-t1", 2));
        // (ij)² = −ab
        assert_eq!(q.square(&e(3)), QuatElem::scalar(s("-t1*t2", 2)));
    }

    #[test]
    fn twisted_involutions() {
        let h = alg("3t", "5", 1);
        let theta = QuatInvolution::twisted(&h, e(1)).unwrap();
        assert_eq!(theta.eigen_sign(&e(1)), Some(-1));
        assert_eq!(theta.eigen_sign(&e(2)), Some(1));
        assert_eq!(theta.eigen_sign(&e(3)), Some(1));
        let d = theta.discriminant().unwrap();
        assert_eq!(d.representative(), s("3t", 1));
        let theta_j = QuatInvolution::twisted(&h, e(2)).unwrap();
        assert_eq!(theta_j.discriminant().unwrap().representative(), s("5", 1));
        let gamma = QuatInvolution::canonical(&h);
        assert_eq!(gamma.apply(&e(3)), e(3).neg().with_arity(1));
        assert!(gamma.discriminant().is_err());
        // −Nrd(i) = i² = −1 on (−1, −1)
        let hq = alg("-1", "-1", 0);
        let d = QuatInvolution::twisted(&hq, e(1)).unwrap().discriminant().unwrap();
        assert_eq!(d.unit, Rational::from_integer((-1).into()));
        assert!(QuatInvolution::twisted(&h, e(0).add(&e(1))).is_err());
    }

    #[test]
    fn splitting() {
        assert!(!alg("-1", "-1", 0).is_split().unwrap());
        assert!(alg("t", "4", 1).is_split().unwrap());
        assert!(alg("1", "t", 1).is_split().unwrap());
        assert!(!alg("3t", "5", 1).is_split().unwrap());
        assert!(!alg("t1", "t2", 2).is_split().unwrap());
        assert!(alg("t", "-t", 1).is_split().unwrap());
        assert!(!alg("-1", "-1", 2).is_split().unwrap());
        let fp = QuatAlg::<Fp<7>>::new(S::from_i64(3), S::from_i64(5)).unwrap();
        assert!(fp.is_split().unwrap());
    }

    #[test]
    fn canonical_forms() {
        let cases = [
            ("t", "t", FormKind::Ramified, 1, -1),
            ("4t^2", "9", FormKind::Unramified, 1, 1),
            ("3t", "5", FormKind::Ramified, 3, 5),
            ("5", "3t", FormKind::Ramified, 3, 5),
            ("12t^3", "1+t", FormKind::Ramified, 3, 1),
        ];
        for (a, b, kind, al, be) in cases {
            let h = alg(a, b, 1);
            let f = h.canonical_form_over_k().unwrap();
            assert_eq!(f.kind, kind, "({}, {})", a, b);
            assert_eq!(f.alpha, Rational::from_integer(al.into()));
            assert_eq!(f.beta, Rational::from_integer(be.into()));
            assert!(f.verify(&h).unwrap());
        }
    }

    #[test]
    fn lemma31_branches() {
        let h = alg("3t", "5", 1);
        let theta = QuatInvolution::twisted(&h, e(1)).unwrap();
        let g = lemma31_generators(&h, &theta).unwrap();
        assert_eq!(g.branch, TwistBranch::I);
        assert_eq!(g.i_square, s("3t", 1));
        assert_eq!(g.j_square, s("5", 1));

        let h2 = alg("3t", "5t", 1);
        let theta2 = QuatInvolution::twisted(&h2, e(1)).unwrap();
        let g2 = lemma31_generators(&h2, &theta2).unwrap();
        assert!(g2.substituted);
        assert_eq!(g2.j_square, s("-15", 1));
        assert_eq!(theta2.eigen_sign(&g2.j), Some(1));

        let theta3 = QuatInvolution::twisted(&h, e(2)).unwrap();
        let g3 = lemma31_generators(&h, &theta3).unwrap();
        assert_eq!(g3.branch, TwistBranch::J);
        assert_eq!(g3.j_square, s("5", 1));
        assert_eq!(g3.i_square.valuation_vector(), Some(vec![1]));

        assert_eq!(
            lemma31_generators(&h, &QuatInvolution::canonical(&h)).unwrap_err(),
            QuatError::Symplectic
        );
        let over_f = alg("2", "3", 1);
        let th = QuatInvolution::twisted(&over_f, e(1)).unwrap();
        assert_eq!(lemma31_generators(&over_f, &th).unwrap_err(), QuatError::DefinedOverF);
        let split = alg("3t", "4", 1);
        let th = QuatInvolution::twisted(&split, e(1)).unwrap();
        assert_eq!(lemma31_generators(&split, &th).unwrap_err(), QuatError::Split);
    }
}
