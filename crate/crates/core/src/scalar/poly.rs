//! Sparse multivariate polynomials over a base field.
//!
//! Exponent vectors carry no trailing zeros, so a polynomial does not know
//! how many indeterminates its ambient ring has; constants compare equal
//! across towers of different height.

use std::cmp::Ordering;
use std::collections::BTreeMap;


use super::field::BaseField;

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v = exps.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn var(index: usize, power: u32) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = power;
        Monomial::from_exponents(&v)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of indeterminates mentioned (index of last nonzero + 1).
    pub fn span(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v: Vec<u32> = (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial::from_exponents(&v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..self.0.len()).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let n = other.0.len().max(self.0.len());
        let v: Vec<u32> = (0..n).map(|i| other.exponent(i) - self.exponent(i)).collect();
        Monomial::from_exponents(&v)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().min(other.0.len());
        let v: Vec<u32> = (0..n).map(|i| self.exponent(i).min(other.exponent(i))).collect();
        Monomial::from_exponents(&v)
    }

    pub fn without(&self, index: usize) -> Monomial {
        let mut v = self.0.clone();
        if index < v.len() {
            v[index] = 0;
        }
        Monomial::from_exponents(&v)
    }
}

/// Right-to-left lexicographic comparison: the last indeterminate dominates.
pub fn rlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let n = a.span().max(b.span());
    for i in (0..n).rev() {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: BaseField> Poly<F> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            return Some(F::zero());
        }
        if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    /// Highest variable index appearing, plus one.
    pub fn span(&self) -> usize {
        self.terms.keys().map(|m| m.span()).max().unwrap_or(0)
    }

    /// Term with the right-lex smallest monomial.
    pub fn min_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().min_by(|a, b| rlex_cmp(a.0, b.0))
    }

    /// Term with the right-lex largest monomial.
    pub fn max_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| rlex_cmp(a.0, b.0))
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).min().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of all monomials in the support.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if d.is_monomial() {
            let (dm, dc) = d.terms.iter().next().unwrap();
            let inv = F::one() / dc.clone();
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.insert(dm.quotient_of(m), c.clone() * inv.clone());
            }
            return Some(Poly { terms });
        }
        let (lm, lc) = d.max_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.max_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let t = Poly::term(rc / lc.clone(), lm.quotient_of(&rm));
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Coefficients with respect to the indeterminate `index`, by degree.
    fn to_univariate(&self, index: usize) -> Vec<Poly<F>> {
        let deg = self.degree_in(index) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(index) as usize;
            out[e].add_term(m.without(index), c.clone());
        }
        out
    }

    fn from_univariate(coeffs: &[Poly<F>], index: usize) -> Poly<F> {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_monomial(&Monomial::var(index, e as u32)));
        }
        out
    }

    /// Greatest common divisor, normalized so that its right-lex largest
    /// coefficient is 1 (the zero polynomial only for `gcd(0, 0)`).
    pub fn gcd(&self, other: &Self) -> Self {
        let g = gcd_inner(self, other);
        match g.max_term() {
            Some((_, c)) => {
                let inv = F::one() / c.clone();
                g.scale(&inv)
            }
            None => g,
        }
    }
}

fn content<F: BaseField>(coeffs: &[Poly<F>]) -> Poly<F> {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd_inner(&g, c);
        if g.is_constant() && !g.is_zero() {
            return Poly::one();
        }
    }
    g
}

fn primitive_part<F: BaseField>(coeffs: &[Poly<F>]) -> Vec<Poly<F>> {
    let c = content(coeffs);
    coeffs
        .iter()
        .map(|x| x.div_exact(&c).expect("content divides every coefficient"))
        .collect()
}

fn trim<F: BaseField>(mut v: Vec<Poly<F>>) -> Vec<Poly<F>> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn udeg<F: BaseField>(v: &[Poly<F>]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Pseudo-remainder of univariate polynomials over a coefficient domain.
fn pseudo_rem<F: BaseField>(a: &[Poly<F>], b: &[Poly<F>]) -> Vec<Poly<F>> {
    let db = udeg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r: Vec<Poly<F>> = a.to_vec();
    while let Some(dr) = udeg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Poly<F>> = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bk) in b.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&bk.mul(&lr));
        }
        r = trim(next);
    }
    trim(r)
}

/// Scales so the leading coefficient's top term is 1; keeps rationals small.
fn monic_lead<F: BaseField>(v: &mut [Poly<F>]) {
    if let Some(d) = udeg(v) {
        if let Some((_, c)) = v[d].max_term() {
            let inv = F::one() / c.clone();
            for x in v.iter_mut() {
                *x = x.scale(&inv);
            }
        }
    }
}

/// Euclid over the base field for polynomials in `t₁` alone.
fn univariate_gcd<F: BaseField>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let dense = |p: &Poly<F>| -> Vec<F> {
        let mut v = vec![F::zero(); p.degree_in(0) as usize + 1];
        for (m, c) in &p.terms {
            v[m.exponent(0) as usize] = c.clone();
        }
        v
    };
    let monic = |mut v: Vec<F>| -> Vec<F> {
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        let inv = F::one() / v.last().unwrap().clone();
        v.into_iter().map(|c| c * inv.clone()).collect()
    };
    let (mut p, mut q) = (monic(dense(a)), monic(dense(b)));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !(q.len() == 1 && q[0].is_zero()) {
        let mut r = p.clone();
        while r.len() >= q.len() && !(r.len() == 1 && r[0].is_zero()) {
            let lead = r.last().unwrap().clone();
            let shift = r.len() - q.len();
            for (k, c) in q.iter().enumerate() {
                r[k + shift] = r[k + shift].clone() - lead.clone() * c.clone();
            }
            r.pop();
            if r.is_empty() {
                r.push(F::zero());
            }
            while r.len() > 1 && r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        p = q;
        q = if r.iter().all(|c| c.is_zero()) { vec![F::zero()] } else { monic(r) };
    }
    let mut out = Poly::zero();
    for (e, c) in p.into_iter().enumerate() {
        out.add_term(Monomial::var(0, e as u32), c);
    }
    out
}

fn gcd_inner<F: BaseField>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        let m = a.monomial_content().gcd(&b.monomial_content());
        return Poly::term(F::one(), m);
    }
    let index = a.span().max(b.span()) - 1;
    if index == 0 {
        return univariate_gcd(a, b);
    }
    let ua = a.to_univariate(index);
    let ub = b.to_univariate(index);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd_inner(&ca, &cb);
    let mut p = primitive_part(&ua);
    let mut q = primitive_part(&ub);
    if udeg(&p) < udeg(&q) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if udeg(&q).is_none() {
            break p;
        }
        if udeg(&q) == Some(0) {
            break vec![Poly::one()];
        }
        let r = pseudo_rem(&p, &q);
        if udeg(&r).is_none() {
            break q;
        }
        p = q;
        q = primitive_part(&r);
        monic_lead(&mut q);
    };
    let g = primitive_part(&g);
    Poly::from_univariate(&g, index).mul(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field::Rational;
    use num_bigint::BigInt;

    fn c(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn x(i: usize) -> Poly<Rational> {
        Poly::term(c(1), Monomial::var(i, 1))
    }

    #[test]
    fn rlex_order() {
        let a = Monomial::from_exponents(&[1, 0]);
        let b = Monomial::from_exponents(&[0, 1]);
        assert_eq!(rlex_cmp(&a, &b), Ordering::Less);
        assert_eq!(Monomial::from_exponents(&[2, 0, 0]), Monomial::var(0, 2));
    }

    #[test]
    fn exact_division_and_gcd() {
        // (x0 + x1)(x0 - 2 x1 + 1) / (x0 + x1)
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1).scale(&c(2))).add(&Poly::one());
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&x(0).add(&Poly::one())), None);
        let q = a.mul(&x(0).add(&Poly::constant(c(3))));
        let g = p.gcd(&q);
        assert_eq!(g, a);
    }

    #[test]
    fn gcd_three_variables() {
        let f = x(0).mul(&x(2)).add(&x(1)); // x0 x2 + x1
        let g1 = x(2).add(&Poly::one());
        let g2 = x(0).sub(&x(1));
        let a = f.mul(&g1).mul(&x(0));
        let b = f.mul(&g2).mul(&x(0)).mul(&x(1));
        let g = a.gcd(&b);
        let expected = f.mul(&x(0));
        let ratio = g.div_exact(&expected).expect("gcd is a multiple of f·x0");
        assert!(ratio.is_constant());
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = x(0).add(&Poly::one());
        let b = x(0).sub(&Poly::one());
        assert!(a.gcd(&b).is_one());
    }
}
