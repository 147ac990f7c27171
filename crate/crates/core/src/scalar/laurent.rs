use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::field::BaseField;
use super::gamma::GammaValue;
use super::poly::{Monomial, Poly};
use super::ScalarError;

/// Element of `F(t₁,…,tₙ)`, read inside the iterated Laurent series field
/// `F((t₁))…((tₙ))`.
///
/// The fraction is kept reduced with the coefficient of the right-lex
/// smallest denominator term equal to 1. `arity` is the height of the
/// tower the value lives in; arithmetic takes the larger of the two
/// operands' arities, so constants embed in every tower.
#[derive(Clone, Debug)]
pub struct LaurentScalar<F> {
    arity: usize,
    num: Poly<F>,
    den: Poly<F>,
}

/// Square class `unit · t₁^{e₁}…tₙ^{eₙ}` with `eᵢ ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClass<F> {
    pub unit: F,
    pub parity: Vec<u8>,
}

impl<F: BaseField> SquareClass<F> {
    pub fn representative(&self) -> LaurentScalar<F> {
        let exps: Vec<i64> = self.parity.iter().map(|&e| e as i64).collect();
        LaurentScalar::monomial(self.unit.clone(), &exps)
    }

    pub fn is_trivial(&self) -> bool {
        self.unit.is_one() && self.parity.iter().all(|&e| e == 0)
    }

    pub fn is_unramified(&self) -> bool {
        self.parity.iter().all(|&e| e == 0)
    }
}

impl<F: BaseField> fmt::Display for SquareClass<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

impl<F: BaseField> LaurentScalar<F> {
    fn normalized(num: Poly<F>, den: Poly<F>, arity: usize) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return LaurentScalar {
                arity,
                num,
                den: Poly::one(),
            };
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lead = den.min_term().map(|(_, c)| c.clone()).unwrap();
        if !lead.is_one() {
            let inv = F::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        let arity = arity.max(num.span()).max(den.span());
        LaurentScalar { arity, num, den }
    }

    pub fn from_polys(num: Poly<F>, den: Poly<F>, arity: usize) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(num, den, arity))
    }

    pub fn zero_in(arity: usize) -> Self {
        LaurentScalar {
            arity,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        LaurentScalar {
            arity: 0,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    /// The indeterminate `t_{index+1}`.
    pub fn var(index: usize) -> Self {
        LaurentScalar {
            arity: index + 1,
            num: Poly::term(F::one(), Monomial::var(index, 1)),
            den: Poly::one(),
        }
    }

    /// `c · t₁^{e₁}…tₙ^{eₙ}` with integer (possibly negative) exponents.
    pub fn monomial(c: F, exps: &[i64]) -> Self {
        let pos: Vec<u32> = exps.iter().map(|&e| e.max(0) as u32).collect();
        let neg: Vec<u32> = exps.iter().map(|&e| (-e).max(0) as u32).collect();
        let num = Poly::term(c, Monomial::from_exponents(&pos));
        let den = Poly::term(F::one(), Monomial::from_exponents(&neg));
        let mut x = Self::normalized(num, den, exps.len());
        x.arity = exps.len().max(x.arity);
        x
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Same value viewed in a tower of height `arity` (which must be at
    /// least the number of indeterminates the value mentions).
    pub fn with_arity(&self, arity: usize) -> Self {
        assert!(
            arity >= self.num.span().max(self.den.span()),
            "value mentions indeterminates beyond the requested tower"
        );
        LaurentScalar {
            arity,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// `c · monomial` with a possibly negative exponent vector.
    pub fn is_monomial(&self) -> bool {
        self.num.num_terms() <= 1 && self.den.is_monomial()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone(), self.arity))
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        let inv = other.inverse().ok_or(ScalarError::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            let inv = self.inverse().expect("negative power of zero");
            return inv.pow(-e);
        }
        let e = e as u32;
        LaurentScalar {
            arity: self.arity,
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Valuation in `(ℤ)ⁿ ⊂ (½ℤ)ⁿ`, right-lex ordered.
    pub fn valuation(&self) -> GammaValue {
        match self.valuation_vector() {
            None => GammaValue::Infinity,
            Some(v) => GammaValue::from_integers(&v),
        }
    }

    /// Integer exponent vector of the valuation, `None` for zero.
    pub fn valuation_vector(&self) -> Option<Vec<i64>> {
        let (nm, _) = self.num.min_term()?;
        let (dm, _) = self.den.min_term().unwrap();
        Some(
            (0..self.arity)
                .map(|i| nm.exponent(i) as i64 - dm.exponent(i) as i64)
                .collect(),
        )
    }

    /// Coefficient of the lowest term: `x = c·t^{v(x)}·(1 + higher)`.
    pub fn leading_coefficient(&self) -> Option<F> {
        let (_, nc) = self.num.min_term()?;
        let (_, dc) = self.den.min_term().unwrap();
        Some(nc.clone() / dc.clone())
    }

    pub fn residue(&self) -> Result<F, ScalarError> {
        match self.valuation_vector() {
            None => Ok(F::zero()),
            Some(v) if v.iter().all(|&e| e == 0) => Ok(self.leading_coefficient().unwrap()),
            Some(_) => Err(ScalarError::NonZeroValuation(self.valuation().to_string())),
        }
    }

    /// The monomial `t^{v(x)}` attached to a nonzero value.
    pub fn valuation_monomial(&self) -> Option<Self> {
        let v = self.valuation_vector()?;
        Some(Self::monomial(F::one(), &v).with_arity(self.arity))
    }

    /// Squareness in `F((t₁))…((tₙ))`: by Hensel's lemma, `x` is a square
    /// iff its valuation is in `2ℤⁿ` and its leading coefficient is a
    /// square in `F`.
    pub fn is_square(&self) -> Result<bool, ScalarError> {
        let v = self
            .valuation_vector()
            .ok_or(ScalarError::ZeroInput("is_square"))?;
        if v.iter().any(|e| e.rem_euclid(2) != 0) {
            return Ok(false);
        }
        self.leading_coefficient().unwrap().is_square()
    }

    pub fn square_class(&self) -> Result<SquareClass<F>, ScalarError> {
        let v = self
            .valuation_vector()
            .ok_or(ScalarError::ZeroInput("square_class"))?;
        let unit = self.leading_coefficient().unwrap().square_class_rep()?;
        Ok(SquareClass {
            unit,
            parity: v.iter().map(|e| e.rem_euclid(2) as u8).collect(),
        })
    }

    /// Exact square root for values of the form `c·t^{2k}` with `c` a square
    /// in `F`; `None` otherwise (including non-monomial squares).
    pub fn sqrt_monomial(&self) -> Option<Self> {
        if self.num.is_zero() {
            return Some(self.clone());
        }
        if !self.is_monomial() {
            return None;
        }
        let v = self.valuation_vector()?;
        if v.iter().any(|e| e.rem_euclid(2) != 0) {
            return None;
        }
        let c = self.leading_coefficient()?.sqrt()?;
        let half: Vec<i64> = v.iter().map(|e| e / 2).collect();
        Some(Self::monomial(c, &half).with_arity(self.arity))
    }

    /// Splits off the outermost indeterminate `tₙ`: returns `(e, c)` with
    /// `x = tₙ^e · c · (1 + O(tₙ))` and `c ∈ F(t₁,…,t_{n-1})`.
    pub fn split_outermost(&self) -> Option<(i64, LaurentScalar<F>)> {
        if self.num.is_zero() || self.arity == 0 {
            return None;
        }
        let last = self.arity - 1;
        let lowest = |p: &Poly<F>| -> (u32, Poly<F>) {
            let e = p.min_degree_in(last);
            let mut out = Poly::zero();
            for (m, c) in p.terms() {
                if m.exponent(last) == e {
                    out = out.add(&Poly::term(c.clone(), m.without(last)));
                }
            }
            (e, out)
        };
        let (en, cn) = lowest(&self.num);
        let (ed, cd) = lowest(&self.den);
        Some((
            en as i64 - ed as i64,
            Self::normalized(cn, cd, last).with_arity(last),
        ))
    }

    pub fn is_zero_value(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: PartialEq> PartialEq for LaurentScalar<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<F: Eq> Eq for LaurentScalar<F> {}

impl<F: Hash> Hash for LaurentScalar<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<F: BaseField> Zero for LaurentScalar<F> {
    fn zero() -> Self {
        Self::zero_in(0)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: BaseField> One for LaurentScalar<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: BaseField> From<F> for LaurentScalar<F> {
    fn from(c: F) -> Self {
        Self::constant(c)
    }
}

impl<'a, F: BaseField> Add<&'a LaurentScalar<F>> for &'a LaurentScalar<F> {
    type Output = LaurentScalar<F>;

    fn add(self, rhs: &LaurentScalar<F>) -> LaurentScalar<F> {
        let arity = self.arity.max(rhs.arity);
        if rhs.num.is_zero() {
            return self.with_arity(arity);
        }
        if self.num.is_zero() {
            return rhs.with_arity(arity);
        }
        if self.den == rhs.den {
            return LaurentScalar::normalized(self.num.add(&rhs.num), self.den.clone(), arity);
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        LaurentScalar::normalized(num, self.den.mul(&rhs.den), arity)
    }
}

impl<'a, F: BaseField> Sub<&'a LaurentScalar<F>> for &'a LaurentScalar<F> {
    type Output = LaurentScalar<F>;

    fn sub(self, rhs: &LaurentScalar<F>) -> LaurentScalar<F> {
        self + &(-rhs)
    }
}

impl<'a, F: BaseField> Mul<&'a LaurentScalar<F>> for &'a LaurentScalar<F> {
    type Output = LaurentScalar<F>;

    fn mul(self, rhs: &LaurentScalar<F>) -> LaurentScalar<F> {
        let arity = self.arity.max(rhs.arity);
        if self.num.is_zero() || rhs.num.is_zero() {
            return LaurentScalar::zero_in(arity);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return LaurentScalar {
                arity,
                num: self.num.mul(&rhs.num),
                den: Poly::one(),
            };
        }
        LaurentScalar::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den), arity)
    }
}

impl<'a, F: BaseField> Div<&'a LaurentScalar<F>> for &'a LaurentScalar<F> {
    type Output = LaurentScalar<F>;

    fn div(self, rhs: &LaurentScalar<F>) -> LaurentScalar<F> {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl<F: BaseField> Neg for &LaurentScalar<F> {
    type Output = LaurentScalar<F>;

    fn neg(self) -> LaurentScalar<F> {
        LaurentScalar {
            arity: self.arity,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: BaseField> $tr for LaurentScalar<F> {
            type Output = LaurentScalar<F>;
            fn $m(self, rhs: LaurentScalar<F>) -> LaurentScalar<F> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<F: BaseField> Neg for LaurentScalar<F> {
    type Output = LaurentScalar<F>;
    fn neg(self) -> LaurentScalar<F> {
        -&self
    }
}

pub(crate) fn var_name(index: usize, arity: usize) -> String {
    if arity == 1 && index == 0 {
        "t".to_string()
    } else {
        format!("t{}", index + 1)
    }
}

fn fmt_monomial(m: &Monomial, arity: usize) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = var_name(i, arity);
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, e));
        }
    }
    parts.join("*")
}

fn fmt_poly<F: BaseField>(p: &Poly<F>, arity: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Monomial, &F)> = p.terms().collect();
    terms.sort_by(|a, b| super::poly::rlex_cmp(a.0, b.0));
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let cs = c.to_string();
        let (negative, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { "-" } else { "+" });
        }
        if m.is_one() {
            out.push_str(&mag);
        } else {
            let mono = fmt_monomial(m, arity);
            if mag == "1" {
                out.push_str(&mono);
            } else if mag.contains('/') {
                out.push_str(&format!("{}*{}", mag, mono));
            } else {
                out.push_str(&format!("{}{}", mag, mono));
            }
        }
    }
    out
}

impl<F: BaseField> fmt::Display for LaurentScalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = fmt_poly(&self.num, self.arity);
        if self.den.is_one() {
            return write!(f, "{}", n);
        }
        let d = fmt_poly(&self.den, self.arity);
        let n = if self.num.num_terms() > 1 {
            format!("({})", n)
        } else {
            n
        };
        let d = if self.den.num_terms() > 1 || self.den.constant_value().is_some() {
            format!("({})", d)
        } else {
            d
        };
        write!(f, "{}/{}", n, d)
    }
}

impl<F: BaseField> Serialize for LaurentScalar<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field::{Fp, Rational};
    use num_bigint::BigInt;

    type L = LaurentScalar<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn t(i: usize) -> L {
        L::var(i)
    }

    #[test]
    fn valuations() {
        let x = t(0).with_arity(1);
        assert_eq!(x.valuation(), GammaValue::from_integers(&[1]));
        let s = &t(0).with_arity(2) + &t(1);
        assert_eq!(s.valuation(), GammaValue::from_integers(&[1, 0]));
        assert_eq!(L::zero_in(2).valuation(), GammaValue::Infinity);
    }

    #[test]
    fn residues() {
        let x = &(&t(0).with_arity(2) + &t(1)) / &t(0);
        assert_eq!(x.residue().unwrap(), q(1));
        assert_eq!(L::from_i64(5).residue().unwrap(), q(5));
        let tt = t(0).with_arity(1);
        let y = &(&L::from_i64(3) + &tt) / &(&L::from_i64(1) - &tt);
        assert_eq!(y.residue().unwrap(), q(3));
        assert!(tt.residue().is_err());
    }

    #[test]
    fn squares_and_classes() {
        let tt = t(0).with_arity(1);
        let four_t2 = &L::from_i64(4) * &tt.square();
        assert!(four_t2.is_square().unwrap());
        assert!(!tt.is_square().unwrap());
        let x = &L::from_i64(9) + &t(0).with_arity(2);
        assert!(x.is_square().unwrap());
        let c = (&L::from_i64(12) * &tt.pow(3)).square_class().unwrap();
        assert_eq!(c.unit, q(3));
        assert_eq!(c.parity, vec![1]);
        let c = L::from_i64(25).square_class().unwrap();
        assert_eq!((c.unit, c.parity), (q(1), vec![]));
        let m = &t(0).with_arity(2) * &t(1);
        assert_eq!(m.square_class().unwrap().parity, vec![1, 1]);
        assert!(L::zero_in(1).is_square().is_err());
    }

    #[test]
    fn reduced_fractions() {
        let tt = t(0).with_arity(1);
        let a = &(&tt.square() - &L::from_i64(1)) / &(&tt - &L::from_i64(1));
        assert_eq!(a, &tt + &L::from_i64(1));
        assert!(a.denominator().is_one());
        let b = &L::from_i64(2) / &L::from_i64(4);
        assert_eq!(b, L::constant(Rational::new(BigInt::from(1), BigInt::from(2))));
        assert_eq!(a.to_string(), "1+t");
        let c = &(&L::from_i64(3) * &t(0).pow(2)) / &t(1);
        assert_eq!(c.to_string(), "3t1^2/t2");
        let d = &L::from_i64(5) * &tt;
        assert_eq!(d.to_string(), "5t");
    }

    #[test]
    fn outermost_split() {
        // t1 + t2 in F((t1))((t2)): lowest t2-power is 0, coefficient t1
        let x = &t(0).with_arity(2) + &t(1);
        let (e, c) = x.split_outermost().unwrap();
        assert_eq!(e, 0);
        assert_eq!(c, t(0).with_arity(1));
        assert_eq!(c.arity(), 1);
        let y = &(&L::from_i64(3) * &t(0)) * &t(1).pow(3);
        let (e, c) = y.split_outermost().unwrap();
        assert_eq!(e, 3);
        assert_eq!(c, &L::from_i64(3) * &t(0).with_arity(1));
    }

    #[test]
    fn prime_field_tower() {
        type M = LaurentScalar<Fp<7>>;
        let x = &M::from_i64(2) * &M::var(0).pow(2);
        assert!(x.is_square().unwrap());
        assert_eq!(x.sqrt_monomial().unwrap().square(), x);
        let y = M::from_i64(3);
        assert!(!y.is_square().unwrap());
    }
}
