//! Tensor products of quaternion algebras as twisted group algebras of
//! `F₂^r`.
//!
//! A class `a ∈ F₂^r` is a bitmask (bit `k` ↔ generator `g_{k+1}`); its
//! representative `x_a` is the ascending generator word. The pairing
//! entry `P_kl` is the commutator `g_k g_l g_k⁻¹ g_l⁻¹ ∈ {±1}` and the
//! involution acts by `θ(g_k) = ε_k g_k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::quaternion::{QuatAlg, QuatElem, QuatError, QuatInvolution};
use crate::scalar::{BaseField, LaurentScalar};

type S<F> = LaurentScalar<F>;

pub type Class = u64;

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArmatureError {
    #[error("presentation data has inconsistent lengths")]
    Shape,
    #[error("at most {MAX_GENERATORS} generators are supported")]
    TooManyGenerators,
    #[error("square of generator {0} is zero")]
    ZeroSquare(usize),
    #[error("pairing entry ({0}, {1}) must be ±1")]
    PairingValue(usize, usize),
    #[error("pairing matrix is not symmetric at ({0}, {1})")]
    PairingAsymmetric(usize, usize),
    #[error("pairing diagonal entry {0} is not 1")]
    PairingDiagonal(usize),
    #[error("involution sign {0} must be ±1")]
    SignValue(usize),
    #[error("pairing is degenerate; radical basis {radical:?}")]
    Degenerate { radical: Vec<Class> },
    #[error("class set is not a subgroup")]
    NotSubgroup,
    #[error("classes {0:?} are linearly dependent")]
    Dependent(Vec<Class>),
    #[error("element has support outside the subgroup")]
    OutsideSubgroup,
    #[error("tower heights differ")]
    ArityMismatch,
    #[error(transparent)]
    Quaternion(#[from] QuatError),
}

/// Finitely supported map `F₂^r → F(t₁,…,tₙ)`, read as `Σ λ_a x_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArmatureElement<F> {
    coeffs: BTreeMap<Class, S<F>>,
}

impl<F: BaseField> ArmatureElement<F> {
    pub fn zero() -> Self {
        ArmatureElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(c: S<F>) -> Self {
        Self::term(0, c)
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn term(class: Class, c: S<F>) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(class, c);
        }
        ArmatureElement { coeffs }
    }

    pub fn basis(class: Class) -> Self {
        Self::term(class, S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, class: Class) -> S<F> {
        self.coeffs.get(&class).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Class, &S<F>)> {
        self.coeffs.iter().map(|(&c, x)| (c, x))
    }

    pub fn support(&self) -> Vec<Class> {
        self.coeffs.keys().copied().collect()
    }

    /// The class and coefficient when the element is supported on one class.
    pub fn single_class(&self) -> Option<(Class, &S<F>)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(&c, x)| (c, x))
        } else {
            None
        }
    }

    fn add_term(&mut self, class: Class, c: S<F>) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(class).or_insert_with(S::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&class);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (c, x) in o.terms() {
            out.add_term(c, x.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ArmatureElement {
            coeffs: self.coeffs.iter().map(|(&c, x)| (c, -x)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &S<F>) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ArmatureElement {
            coeffs: self.coeffs.iter().map(|(&c, x)| (c, x * s)).collect(),
        }
    }
}

impl<F: BaseField> fmt::Display for ArmatureElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(c, x)| format!("({})*x[{}]", x, class_label(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e1+e3` style label; `0` for the trivial class.
pub fn class_label(c: Class) -> String {
    if c == 0 {
        return "0".into();
    }
    let parts: Vec<String> = (0..64)
        .filter(|k| c >> k & 1 == 1)
        .map(|k| format!("e{}", k + 1))
        .collect();
    parts.join("+")
}

fn parity(x: u64) -> bool {
    x.count_ones() % 2 == 1
}

fn sign_of(odd: bool) -> i8 {
    if odd {
        -1
    } else {
        1
    }
}

/// Generator data of a twisted group algebra with involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArmaturePresentation<F> {
    arity: usize,
    squares: Vec<S<F>>,
    pairing: Vec<Vec<i8>>,
    signs: Vec<i8>,
    /// Bit `l` of `anti[k]` is set iff `P_kl = −1`.
    anti: Vec<u64>,
    /// `∏_{k∈c} λ_k` for every class `c`.
    lambda: Vec<S<F>>,
}

impl<F: BaseField> ArmaturePresentation<F> {
    pub fn new(
        arity: usize,
        squares: Vec<S<F>>,
        pairing: Vec<Vec<i8>>,
        signs: Vec<i8>,
    ) -> Result<Self, ArmatureError> {
        let r = squares.len();
        if r > MAX_GENERATORS {
            return Err(ArmatureError::TooManyGenerators);
        }
        if pairing.len() != r || signs.len() != r || pairing.iter().any(|row| row.len() != r) {
            return Err(ArmatureError::Shape);
        }
        let arity = squares.iter().map(|s| s.arity()).fold(arity, usize::max);
        for (k, s) in squares.iter().enumerate() {
            if s.is_zero() {
                return Err(ArmatureError::ZeroSquare(k));
            }
        }
        for k in 0..r {
            if pairing[k][k] != 1 {
                return Err(ArmatureError::PairingDiagonal(k));
            }
            if signs[k] != 1 && signs[k] != -1 {
                return Err(ArmatureError::SignValue(k));
            }
            for l in 0..r {
                if pairing[k][l] != 1 && pairing[k][l] != -1 {
                    return Err(ArmatureError::PairingValue(k, l));
                }
                if pairing[k][l] != pairing[l][k] {
                    return Err(ArmatureError::PairingAsymmetric(k, l));
                }
            }
        }
        let anti = (0..r)
            .map(|k| {
                (0..r)
                    .filter(|&l| pairing[k][l] == -1)
                    .fold(0u64, |m, l| m | 1 << l)
            })
            .collect();
        let squares: Vec<S<F>> = squares.iter().map(|s| s.with_arity(arity)).collect();
        let mut lambda = vec![S::one().with_arity(arity); 1 << r];
        for c in 1usize..1 << r {
            let k = c.trailing_zeros() as usize;
            lambda[c] = &lambda[c & (c - 1)] * &squares[k];
        }
        Ok(ArmaturePresentation {
            arity,
            squares,
            pairing,
            signs,
            anti,
            lambda,
        })
    }

    /// Standard symplectic block form: generators `(i₁, j₁, i₂, j₂, …)`.
    pub fn standard(
        arity: usize,
        squares: Vec<S<F>>,
        signs: Vec<i8>,
    ) -> Result<Self, ArmatureError> {
        if !squares.len().is_multiple_of(2) {
            return Err(ArmatureError::Shape);
        }
        let pairing = standard_pairing(squares.len());
        Self::new(arity, squares, pairing, signs)
    }

    pub fn trivial(arity: usize) -> Self {
        Self::new(arity, Vec::new(), Vec::new(), Vec::new()).unwrap()
    }

    /// One quaternion factor `(a, b)` with signs `(ε_i, ε_j)`.
    pub fn quaternion(a: S<F>, b: S<F>, signs: (i8, i8)) -> Result<Self, ArmatureError> {
        let arity = a.arity().max(b.arity());
        Self::standard(arity, vec![a, b], vec![signs.0, signs.1])
    }

    /// Presentation of a quaternion algebra with involution `Int(u)∘γ`
    /// where `u` is a multiple of `1, i, j` or `ij`.
    pub fn from_quaternion(theta: &QuatInvolution<F>) -> Result<Self, ArmatureError> {
        let alg = theta.algebra();
        let signs = (
            theta.eigen_sign(&QuatElem::basis(1).with_arity(alg.arity())),
            theta.eigen_sign(&QuatElem::basis(2).with_arity(alg.arity())),
        );
        match signs {
            (Some(si), Some(sj)) => Self::quaternion(alg.a().clone(), alg.b().clone(), (si, sj)),
            _ => Err(QuatError::NotCentralOrPure(theta.twist().to_string()).into()),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rank(&self) -> usize {
        self.squares.len()
    }

    pub fn order(&self) -> usize {
        1 << self.rank()
    }

    pub fn classes(&self) -> impl Iterator<Item = Class> {
        0..self.order() as Class
    }

    pub fn squares(&self) -> &[S<F>] {
        &self.squares
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn pairing_matrix(&self) -> &[Vec<i8>] {
        &self.pairing
    }

    /// Same presentation in a taller tower.
    pub fn with_arity(&self, arity: usize) -> Self {
        Self::new(arity, self.squares.clone(), self.pairing.clone(), self.signs.clone()).unwrap()
    }

    /// Sign part of the cocycle: `∏_{k∈a, l∈b, k>l} P_kl`.
    pub fn cocycle_sign(&self, a: Class, b: Class) -> i8 {
        let mut odd = false;
        for l in 0..self.rank() {
            if b >> l & 1 == 1 {
                let above = a & !((2u64 << l) - 1);
                odd ^= parity(above & self.anti[l]);
            }
        }
        sign_of(odd)
    }

    /// `β(a, b)` with `x_a·x_b = β(a, b)·x_{a+b}`.
    pub fn cocycle(&self, a: Class, b: Class) -> S<F> {
        let lam = &self.lambda[(a & b) as usize];
        if self.cocycle_sign(a, b) == 1 {
            lam.clone()
        } else {
            -lam
        }
    }

    /// `x_a² ∈ F(t₁,…,tₙ)^×`.
    pub fn square_of(&self, a: Class) -> S<F> {
        self.cocycle(a, a)
    }

    /// `⟨a, b⟩ = x_a x_b x_a⁻¹ x_b⁻¹`.
    pub fn pairing(&self, a: Class, b: Class) -> i8 {
        let mut odd = false;
        for k in 0..self.rank() {
            if a >> k & 1 == 1 {
                odd ^= parity(b & self.anti[k]);
            }
        }
        sign_of(odd)
    }

    /// `θ(x_a) = ε(a)·x_a`.
    pub fn involution_sign(&self, a: Class) -> i8 {
        let mut odd = false;
        for k in 0..self.rank() {
            if a >> k & 1 == 1 {
                odd ^= self.signs[k] == -1;
                // pairs k < l inside a
                let above = a & !((2u64 << k) - 1);
                odd ^= parity(above & self.anti[k]);
            }
        }
        sign_of(odd)
    }

    pub fn mul(&self, x: &ArmatureElement<F>, y: &ArmatureElement<F>) -> ArmatureElement<F> {
        let mut out = ArmatureElement::zero();
        for (a, xa) in x.terms() {
            for (b, yb) in y.terms() {
                out.add_term(a ^ b, &(xa * yb) * &self.cocycle(a, b));
            }
        }
        out
    }

    pub fn apply_involution(&self, x: &ArmatureElement<F>) -> ArmatureElement<F> {
        ArmatureElement {
            coeffs: x
                .terms()
                .map(|(a, c)| {
                    let v = if self.involution_sign(a) == 1 { c.clone() } else { -c };
                    (a, v)
                })
                .collect(),
        }
    }

    pub fn commutes(&self, x: &ArmatureElement<F>, y: &ArmatureElement<F>) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn anticommutes(&self, x: &ArmatureElement<F>, y: &ArmatureElement<F>) -> bool {
        self.mul(x, y) == self.mul(y, x).neg()
    }

    /// Block-diagonal tensor product; `other`'s generators follow ours.
    pub fn tensor(&self, other: &Self) -> Result<Self, ArmatureError> {
        let r1 = self.rank();
        let r = r1 + other.rank();
        let mut pairing = vec![vec![1i8; r]; r];
        for k in 0..r1 {
            for l in 0..r1 {
                pairing[k][l] = self.pairing[k][l];
            }
        }
        for k in 0..other.rank() {
            for l in 0..other.rank() {
                pairing[r1 + k][r1 + l] = other.pairing[k][l];
            }
        }
        let mut squares = self.squares.clone();
        squares.extend(other.squares.iter().cloned());
        let mut signs = self.signs.clone();
        signs.extend(other.signs.iter().copied());
        Self::new(self.arity.max(other.arity), squares, pairing, signs)
    }

    /// Presentation on the given independent classes, with generators
    /// `x_{c₁}, x_{c₂}, …` of this presentation.
    pub fn span_presentation(&self, basis: &[Class]) -> Result<SubPresentation<F>, ArmatureError> {
        if gf2_rank(basis) != basis.len() {
            return Err(ArmatureError::Dependent(basis.to_vec()));
        }
        let r = basis.len();
        let squares = basis.iter().map(|&c| self.square_of(c)).collect();
        let pairing = (0..r)
            .map(|k| (0..r).map(|l| self.pairing(basis[k], basis[l])).collect())
            .collect();
        let signs = basis.iter().map(|&c| self.involution_sign(c)).collect();
        let sub = ArmaturePresentation::new(self.arity, squares, pairing, signs)?;
        // y_d = corr[d]·x_{φ(d)}, built by appending generators in order
        let mut image = vec![0 as Class; 1 << r];
        let mut corr = vec![S::one().with_arity(self.arity); 1 << r];
        for d in 1usize..1 << r {
            let k = 63 - (d as u64).leading_zeros() as usize;
            let rest = d & !(1 << k);
            image[d] = image[rest] ^ basis[k];
            corr[d] = &corr[rest] * &self.cocycle(image[rest], basis[k]);
        }
        let index = image.iter().enumerate().map(|(d, &c)| (c, d as Class)).collect();
        Ok(SubPresentation {
            presentation: sub,
            basis: basis.to_vec(),
            image,
            corr,
            index,
        })
    }

    /// Presentation of `F[𝓑]` for a subgroup given by all of its elements.
    pub fn subgroup_presentation(&self, subgroup: &[Class]) -> Result<SubPresentation<F>, ArmatureError> {
        let set: std::collections::BTreeSet<Class> = subgroup.iter().copied().collect();
        if !set.contains(&0)
            || set.iter().any(|&c| c >= self.order() as Class)
            || set.iter().any(|&a| set.iter().any(|&b| !set.contains(&(a ^ b))))
        {
            return Err(ArmatureError::NotSubgroup);
        }
        let basis = gf2_basis(&set.into_iter().collect::<Vec<_>>());
        self.span_presentation(&basis)
    }

    /// Gram matrix of the pairing on the given classes, over F₂.
    fn gram_rows(&self, basis: &[Class]) -> Vec<u64> {
        basis
            .iter()
            .map(|&a| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.pairing(a, b) == -1)
                    .fold(0u64, |m, (l, _)| m | 1 << l)
            })
            .collect()
    }

    /// Radical of the pairing restricted to the span of `basis`.
    pub fn radical_of(&self, basis: &[Class]) -> Vec<Class> {
        let gram = self.gram_rows(basis);
        gf2_nullspace(&gram, basis.len())
            .into_iter()
            .map(|v| combine(basis, v))
            .collect()
    }

    /// Symplectic Gram–Schmidt on the span of `basis`: lowest-index
    /// vector first, lowest-index partner next.
    pub fn symplectic_base_of(&self, basis: &[Class]) -> Result<Vec<(Class, Class)>, ArmatureError> {
        let radical = self.radical_of(basis);
        if !radical.is_empty() {
            return Err(ArmatureError::Degenerate { radical });
        }
        let b = |x: Class, y: Class| self.pairing(x, y) == -1;
        let mut work: Vec<Class> = basis.to_vec();
        let mut pairs = Vec::new();
        while !work.is_empty() {
            let a = work[0];
            let Some(pos) = (1..work.len()).find(|&p| b(a, work[p])) else {
                return Err(ArmatureError::Degenerate { radical: vec![a] });
            };
            let partner = work[pos];
            work.remove(pos);
            work.remove(0);
            for w in work.iter_mut() {
                let mut v = *w;
                if b(*w, partner) {
                    v ^= a;
                }
                if b(*w, a) {
                    v ^= partner;
                }
                *w = v;
            }
            work.retain(|&w| w != 0);
            pairs.push((a, partner));
        }
        Ok(pairs)
    }

    pub fn symplectic_base(&self) -> Result<Vec<(Class, Class)>, ArmatureError> {
        let basis: Vec<Class> = (0..self.rank()).map(|k| 1 << k).collect();
        self.symplectic_base_of(&basis)
    }

    /// The quaternion factor generated by `x_a, x_b` with `⟨a, b⟩ = −1`.
    pub fn factor_on(&self, a: Class, b: Class) -> Result<Factor<F>, ArmatureError> {
        let alg = QuatAlg::new(self.square_of(a), self.square_of(b))?.with_arity(self.arity);
        let u = twist_for_signs(self.involution_sign(a), self.involution_sign(b));
        let inv = QuatInvolution::twisted(&alg, u)?;
        Ok(Factor {
            alg,
            inv,
            i_image: ArmatureElement::basis(a),
            j_image: ArmatureElement::basis(b),
        })
    }

    /// Quaternion factors along the symplectic base.
    pub fn factorize(&self) -> Result<Vec<Factor<F>>, ArmatureError> {
        self.symplectic_base()?
            .into_iter()
            .map(|(a, b)| self.factor_on(a, b))
            .collect()
    }

    /// `x₀ + x₁ i + x₂ j + x₃ ij ↦ x₀ + x₁ x_{e1} + x₂ x_{e2} + x₃ x_{e1+e2}`.
    pub fn from_quat_elem(x: &QuatElem<F>) -> ArmatureElement<F> {
        let mut out = ArmatureElement::zero();
        for k in 0..4 {
            out.add_term(k as Class, x.c[k].clone());
        }
        out
    }

    pub fn to_quat_elem(x: &ArmatureElement<F>) -> Option<QuatElem<F>> {
        if x.terms().any(|(c, _)| c > 3) {
            return None;
        }
        Some(QuatElem::new(x.coeff(0), x.coeff(1), x.coeff(2), x.coeff(3)))
    }
}

/// Twist `u` realizing the signs `(θ(i)/i, θ(j)/j)`:
/// `(−,−) → 1`, `(−,+) → i`, `(+,−) → j`, `(+,+) → ij`.
pub fn twist_for_signs<F: BaseField>(si: i8, sj: i8) -> QuatElem<F> {
    match (si, sj) {
        (-1, -1) => QuatElem::basis(0),
        (-1, _) => QuatElem::basis(1),
        (_, -1) => QuatElem::basis(2),
        _ => QuatElem::basis(3),
    }
}

/// Inverse of [`twist_for_signs`] on the four twist shapes.
pub fn signs_for_twist<F: BaseField>(theta: &QuatInvolution<F>) -> Option<(i8, i8)> {
    let n = theta.algebra().arity();
    Some((
        theta.eigen_sign(&QuatElem::basis(1).with_arity(n))?,
        theta.eigen_sign(&QuatElem::basis(2).with_arity(n))?,
    ))
}

pub fn standard_pairing(r: usize) -> Vec<Vec<i8>> {
    let mut p = vec![vec![1i8; r]; r];
    for k in (0..r.saturating_sub(1)).step_by(2) {
        p[k][k + 1] = -1;
        p[k + 1][k] = -1;
    }
    p
}

/// A quaternion factor with the classes generating it.
#[derive(Clone, Debug)]
pub struct Factor<F> {
    pub alg: QuatAlg<F>,
    pub inv: QuatInvolution<F>,
    pub i_image: ArmatureElement<F>,
    pub j_image: ArmatureElement<F>,
}

/// A presentation on a subgroup together with its embedding.
#[derive(Clone, Debug)]
pub struct SubPresentation<F> {
    pub presentation: ArmaturePresentation<F>,
    pub basis: Vec<Class>,
    image: Vec<Class>,
    corr: Vec<S<F>>,
    index: BTreeMap<Class, Class>,
}

impl<F: BaseField> SubPresentation<F> {
    /// Parent class of the sub-class `d`.
    pub fn parent_class(&self, d: Class) -> Class {
        self.image[d as usize]
    }

    pub fn classes(&self) -> Vec<Class> {
        self.image.clone()
    }

    pub fn to_parent(&self, x: &ArmatureElement<F>) -> ArmatureElement<F> {
        let mut out = ArmatureElement::zero();
        for (d, c) in x.terms() {
            out.add_term(self.image[d as usize], c * &self.corr[d as usize]);
        }
        out
    }

    pub fn from_parent(&self, x: &ArmatureElement<F>) -> Result<ArmatureElement<F>, ArmatureError> {
        let mut out = ArmatureElement::zero();
        for (c, v) in x.terms() {
            let d = *self.index.get(&c).ok_or(ArmatureError::OutsideSubgroup)?;
            out.add_term(d, v / &self.corr[d as usize]);
        }
        Ok(out)
    }
}

/// XOR of `basis[k]` over the set bits `k` of `v`.
pub fn combine(basis: &[Class], v: u64) -> Class {
    basis
        .iter()
        .enumerate()
        .filter(|(k, _)| v >> k & 1 == 1)
        .fold(0, |acc, (_, &c)| acc ^ c)
}

pub fn gf2_rank(vectors: &[Class]) -> usize {
    gf2_basis(vectors).len()
}

/// Reduced echelon basis of the span, sorted ascending.
pub fn gf2_basis(vectors: &[Class]) -> Vec<Class> {
    let mut basis: Vec<Class> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            for b in basis.iter_mut() {
                *b = (*b).min(*b ^ x);
            }
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.sort_unstable();
    basis
}

/// Null space of an F₂ matrix given by rows (bit `l` = column `l`).
pub fn gf2_nullspace(rows: &[u64], cols: usize) -> Vec<u64> {
    let mut m: Vec<u64> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| m[k] >> c & 1 == 1) else {
            continue;
        };
        m.swap(r, p);
        for k in 0..m.len() {
            if k != r && m[k] >> c & 1 == 1 {
                m[k] ^= m[r];
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u64 << free;
            for (row, &p) in pivots.iter().enumerate() {
                if m[row] >> free & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, Rational};

    fn s(src: &str, n: usize) -> S<Rational> {
        parse_scalar(src, n).unwrap()
    }

    fn quat(a: &str, b: &str, signs: (i8, i8)) -> ArmaturePresentation<Rational> {
        ArmaturePresentation::quaternion(s(a, 2), s(b, 2), signs).unwrap()
    }

    #[test]
    fn cocycle_values() {
        let p = quat("t1", "t2", (-1, -1));
        assert_eq!(p.cocycle(1, 2), s("1", 2));
        assert_eq!(p.cocycle(2, 1), s("-1", 2));
        assert_eq!(p.cocycle(1, 1), s("t1", 2));
        assert_eq!(p.cocycle(3, 3), s("-t1*t2", 2));
        let x = ArmatureElement::basis(1);
        let one = ArmatureElement::one();
        let prod = p.mul(&one.add(&x), &one.sub(&x));
        assert_eq!(prod, ArmatureElement::scalar(s("1-t1", 2)));
    }

    #[test]
    fn involution_signs_and_pairing() {
        let g = quat("3", "5", (-1, -1));
        assert_eq!(g.involution_sign(3), -1);
        assert_eq!(g.involution_sign(0), 1);
        let h = quat("3", "5", (1, -1));
        assert_eq!(h.involution_sign(3), 1);
        let p = ArmaturePresentation::standard(
            0,
            vec![s("-1", 0), s("-1", 0), s("2", 0), s("3", 0)],
            vec![-1, 1, 1, -1],
        )
        .unwrap();
        for a in p.classes() {
            for b in p.classes() {
                let lhs = p.involution_sign(a ^ b);
                let rhs = p.involution_sign(a) * p.involution_sign(b) * p.pairing(a, b);
                assert_eq!(lhs, rhs);
                assert_eq!(p.pairing(a, b), p.pairing(b, a));
            }
        }
    }

    #[test]
    fn tensor_and_subgroups() {
        let q1 = quat("-1", "-1", (-1, -1));
        let q2 = quat("t1", "t2", (-1, -1));
        let t = q1.tensor(&q2).unwrap();
        assert_eq!(t.rank(), 4);
        assert_eq!(t.pairing(0b0001, 0b0100), 1);
        let triv = ArmaturePresentation::trivial(2);
        assert_eq!(q1.tensor(&triv).unwrap(), q1);
        let sub = q2.subgroup_presentation(&[0, 1]).unwrap();
        assert_eq!(sub.presentation.squares(), &[s("t1", 2)]);
        assert!(q2.subgroup_presentation(&[0, 1, 2]).is_err());
        let zero = q2.subgroup_presentation(&[0]).unwrap();
        assert_eq!(zero.presentation.rank(), 0);
    }

    #[test]
    fn embedding_is_multiplicative() {
        let t = quat("-1", "-1", (-1, -1))
            .tensor(&quat("t1", "t2", (-1, -1)))
            .unwrap();
        let sub = t.span_presentation(&[0b0011, 0b0110]).unwrap();
        let sp = &sub.presentation;
        for a in sp.classes() {
            for b in sp.classes() {
                let (x, y) = (ArmatureElement::basis(a), ArmatureElement::basis(b));
                let lhs = sub.to_parent(&sp.mul(&x, &y));
                let rhs = t.mul(&sub.to_parent(&x), &sub.to_parent(&y));
                assert_eq!(lhs, rhs);
                assert_eq!(sub.from_parent(&lhs).unwrap(), sp.mul(&x, &y));
            }
        }
    }

    #[test]
    fn symplectic_bases() {
        assert_eq!(quat("1", "1", (-1, -1)).symplectic_base().unwrap(), vec![(1, 2)]);
        let t = quat("-1", "-1", (-1, -1))
            .tensor(&quat("t1", "t2", (-1, -1)))
            .unwrap();
        assert_eq!(t.symplectic_base().unwrap(), vec![(1, 2), (4, 8)]);
        let degenerate = ArmaturePresentation::<Rational>::new(
            0,
            vec![s("1", 0), s("1", 0)],
            vec![vec![1, 1], vec![1, 1]],
            vec![1, 1],
        )
        .unwrap();
        match degenerate.symplectic_base() {
            Err(ArmatureError::Degenerate { radical }) => assert_eq!(radical.len(), 2),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn factorization_round_trip() {
        let p = quat("3", "5", (1, -1));
        let f = p.factorize().unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].inv.twist(), &QuatElem::basis(2).with_arity(2));
        assert_eq!(signs_for_twist(&f[0].inv), Some((1, -1)));
        for (si, sj) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
            let alg = QuatAlg::new(s("2", 0), s("7", 0)).unwrap();
            let theta = QuatInvolution::twisted(&alg, twist_for_signs(si, sj)).unwrap();
            assert_eq!(signs_for_twist(&theta), Some((si, sj)));
        }
    }

    #[test]
    fn gf2_helpers() {
        assert_eq!(gf2_rank(&[0b011, 0b110, 0b101]), 2);
        assert_eq!(gf2_nullspace(&[0b11, 0b11], 2), vec![0b11]);
    }
}
