//! Base fields `F` of characteristic different from 2.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::integer::{self, DEFAULT_FACTOR_BOUND};
use super::ScalarError;

/// Exact base field of characteristic ≠ 2 with decidable square classes and
/// a decision procedure for splitting of quaternion symbols.
pub trait BaseField:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// 0 for ℚ, `p` for `F_p`.
    fn characteristic() -> u64;

    /// Short name used in reports ("Q", "F_7").
    fn name() -> String;

    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn is_square(&self) -> Result<bool, ScalarError>;

    /// Canonical representative of the square class of a nonzero element.
    fn square_class_rep(&self) -> Result<Self, ScalarError>;

    /// Exact square root when the element is a square.
    fn sqrt(&self) -> Option<Self>;

    /// Whether `(a, b)` is isomorphic to `M_2(F)`.
    fn quaternion_splits(a: &Self, b: &Self) -> Result<bool, ScalarError>;

    /// Some root in `F` of `c_0 + c_1 x + … + c_d x^d`, if one exists.
    fn find_root(coeffs: &[Self]) -> Result<Option<Self>, ScalarError>;
}

/// The rational numbers.
pub type Rational = BigRational;

impl BaseField for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn is_square(&self) -> Result<bool, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInput("is_square"));
        }
        Ok(!self.is_negative()
            && integer::is_perfect_square(self.numer())
            && integer::is_perfect_square(self.denom()))
    }

    fn square_class_rep(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInput("square_class"));
        }
        let n = self.numer() * self.denom();
        let s = integer::squarefree_part(&n, DEFAULT_FACTOR_BOUND)?;
        Ok(BigRational::from_integer(s))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.is_square().ok()? {
            Some(BigRational::new(self.numer().sqrt(), self.denom().sqrt()))
        } else {
            None
        }
    }

    fn quaternion_splits(a: &Self, b: &Self) -> Result<bool, ScalarError> {
        let sa = a.square_class_rep()?.to_integer();
        let sb = b.square_class_rep()?.to_integer();
        integer::rational_symbol_splits(&sa, &sb, DEFAULT_FACTOR_BOUND)
    }

    fn find_root(coeffs: &[Self]) -> Result<Option<Self>, ScalarError> {
        let mut c: Vec<BigRational> = coeffs.to_vec();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.len() <= 1 {
            return Ok(None);
        }
        if c[0].is_zero() {
            return Ok(Some(BigRational::zero()));
        }
        // clear denominators
        let lcm = c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().unwrap().magnitude().clone();
        let constant = ints[0].magnitude().clone();
        let ps = integer::divisors(&constant, DEFAULT_FACTOR_BOUND)?;
        let qs = integer::divisors(&lead, DEFAULT_FACTOR_BOUND)?;
        for q in &qs {
            for p in &ps {
                for sign in [1i32, -1] {
                    let cand = BigRational::new(
                        BigInt::from(p.clone()) * sign,
                        BigInt::from(q.clone()),
                    );
                    let value = c
                        .iter()
                        .rev()
                        .fold(BigRational::zero(), |acc, x| acc * &cand + x);
                    if value.is_zero() {
                        return Ok(Some(cand));
                    }
                }
            }
        }
        Ok(None)
    }
}

pub const fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field `F_P` for an odd prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_odd_prime(P), "modulus must be an odd prime");

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(value % P)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn legendre(&self) -> i32 {
        if self.0 == 0 {
            0
        } else if self.pow((P - 1) / 2).0 == 1 {
            1
        } else {
            -1
        }
    }

    fn smallest_nonresidue() -> Self {
        (2..P)
            .map(Fp::new)
            .find(|x| x.legendre() == -1)
            .expect("odd prime fields have nonresidues")
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp::new(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp::new(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp::new(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp::new((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{}", P);
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> BaseField for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("F_{}", P)
    }

    fn from_integer(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Fp::new(r.to_u64().unwrap_or(0))
    }

    fn is_square(&self) -> Result<bool, ScalarError> {
        match self.legendre() {
            0 => Err(ScalarError::ZeroInput("is_square")),
            l => Ok(l == 1),
        }
    }

    fn square_class_rep(&self) -> Result<Self, ScalarError> {
        if self.is_square()? {
            Ok(Fp::new(1))
        } else {
            Ok(Self::smallest_nonresidue())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.0 == 0 {
            return Some(*self);
        }
        if self.legendre() != 1 {
            return None;
        }
        // Tonelli-Shanks
        let mut q = P - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = Self::smallest_nonresidue();
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.0 != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt.0 != 1 {
                tt = tt * tt;
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }

    fn quaternion_splits(a: &Self, b: &Self) -> Result<bool, ScalarError> {
        if a.is_zero() || b.is_zero() {
            return Err(ScalarError::ZeroInput("is_split"));
        }
        // every quaternion algebra over a finite field is split
        Ok(true)
    }

    fn find_root(coeffs: &[Self]) -> Result<Option<Self>, ScalarError> {
        if P > (1 << 22) {
            return Err(ScalarError::Unsupported(format!(
                "root search over F_{} is limited to small primes",
                P
            )));
        }
        let nonzero = coeffs.iter().any(|c| !c.is_zero());
        if !nonzero || coeffs.iter().skip(1).all(|c| c.is_zero()) {
            return Ok(None);
        }
        Ok((0..P).map(Fp::new).find(|x| {
            coeffs
                .iter()
                .rev()
                .fold(Fp::new(0), |acc, c| acc * *x + *c)
                .is_zero()
        }))
    }
}

/// Integer value of a rational, when it is one.
pub fn rational_to_i64(x: &BigRational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_square_classes() {
        assert!(q(9, 4).is_square().unwrap());
        assert!(!q(-9, 4).is_square().unwrap());
        assert_eq!(q(12, 1).square_class_rep().unwrap(), q(3, 1));
        assert_eq!(q(3, 5).square_class_rep().unwrap(), q(15, 1));
        assert_eq!(q(-3, 5).square_class_rep().unwrap(), q(-15, 1));
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert!(q(0, 1).is_square().is_err());
    }

    #[test]
    fn rational_roots() {
        // 2x^2 - 3x + 1 = (2x-1)(x-1)
        let r = Rational::find_root(&[q(1, 1), q(-3, 1), q(2, 1)]).unwrap().unwrap();
        assert!(r == q(1, 1) || r == q(1, 2));
        assert_eq!(Rational::find_root(&[q(-2, 1), q(0, 1), q(1, 1)]).unwrap(), None);
    }

    #[test]
    fn prime_field_arithmetic() {
        type F7 = Fp<7>;
        let a = F7::new(3);
        assert_eq!(a * a.inverse().unwrap(), F7::one());
        assert!(F7::new(2).is_square().unwrap()); // 3^2 = 2
        assert!(!F7::new(3).is_square().unwrap());
        assert_eq!(F7::new(3).square_class_rep().unwrap(), F7::new(3));
        let s = F7::new(2).sqrt().unwrap();
        assert_eq!(s * s, F7::new(2));
        type F13 = Fp<13>;
        for v in 1..13 {
            let x = F13::new(v);
            if let Some(r) = x.sqrt() {
                assert_eq!(r * r, x);
            }
        }
        assert!(F7::quaternion_splits(&F7::new(3), &F7::new(5)).unwrap());
    }

    #[test]
    fn odd_prime_check() {
        assert!(is_odd_prime(3));
        assert!(is_odd_prime(10007));
        assert!(!is_odd_prime(2));
        assert!(!is_odd_prime(9));
    }
}
