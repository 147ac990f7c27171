//! Integer helpers for the rational base field: bounded factorization,
//! squarefree parts, Legendre and Hilbert symbols.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ScalarError;

/// Trial-division bound used when no other bound is configured.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Factors `n > 0` by trial division up to `bound`.
///
/// A cofactor left over once the divisor exceeds its square root is prime.
/// If the divisor runs past `bound` first, the factorization is incomplete
/// and an error is returned.
pub fn factor_bounded(n: &BigUint, bound: u64) -> Result<Vec<(BigUint, u32)>, ScalarError> {
    let mut factors = Vec::new();
    if n.is_zero() {
        return Err(ScalarError::ZeroInput("factor"));
    }
    let mut rest = n.clone();
    let mut d: u64 = 2;
    loop {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        if d > bound {
            return Err(ScalarError::FactorBound {
                value: n.to_string(),
                bound,
            });
        }
        let mut e = 0u32;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            e += 1;
        }
        if e > 0 {
            factors.push((dd, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }
    Ok(factors)
}

/// Squarefree integer `s` with `n = s·k²` (sign kept).
pub fn squarefree_part(n: &BigInt, bound: u64) -> Result<BigInt, ScalarError> {
    if n.is_zero() {
        return Err(ScalarError::ZeroInput("squarefree_part"));
    }
    if is_perfect_square(&n.abs()) {
        return Ok(if n.is_negative() { -BigInt::one() } else { BigInt::one() });
    }
    let mut s = BigUint::one();
    for (p, e) in factor_bounded(n.magnitude(), bound)? {
        if e % 2 == 1 {
            s *= p;
        }
    }
    let sign = if n.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok(BigInt::from_biguint(sign, s))
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Legendre symbol `(a/p)` for an odd prime `p`, as -1, 0 or 1.
pub fn legendre(a: &BigInt, p: &BigUint) -> i32 {
    let p_int = BigInt::from(p.clone());
    let a = a.mod_floor(&p_int);
    if a.is_zero() {
        return 0;
    }
    let e = (&p_int - 1u32) / 2u32;
    let r = a.modpow(&e, &p_int);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// A place of ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Infinite,
    Prime(BigUint),
}

/// Hilbert symbol `(a, b)_v` for nonzero squarefree integers.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, place: &Place) -> i32 {
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigUint::from(2u32) => hilbert_at_two(a, b),
        Place::Prime(p) => hilbert_at_odd(a, b, p),
    }
}

fn split_prime(x: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut x = x.clone();
    let mut e = 0;
    while (&x % p).is_zero() {
        x /= p;
        e += 1;
    }
    (e, x)
}

fn hilbert_at_odd(a: &BigInt, b: &BigInt, p: &BigUint) -> i32 {
    let p_int = BigInt::from(p.clone());
    let (alpha, u) = split_prime(a, &p_int);
    let (beta, v) = split_prime(b, &p_int);
    // epsilon(p) = (p-1)/2 mod 2
    let eps = ((&p_int - 1i32) / 2i32 % 2i32).to_u32().unwrap_or(0);
    let mut sign = if (alpha * beta * eps) % 2 == 1 { -1 } else { 1 };
    if beta % 2 == 1 {
        sign *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        sign *= legendre(&v, p);
    }
    sign
}

fn hilbert_at_two(a: &BigInt, b: &BigInt) -> i32 {
    let two = BigInt::from(2);
    let (alpha, u) = split_prime(a, &two);
    let (beta, v) = split_prime(b, &two);
    let eps = |x: &BigInt| -> u32 { ((x - 1i32) / 2i32).mod_floor(&two).to_u32().unwrap_or(0) };
    let omega = |x: &BigInt| -> u32 {
        ((x * x - 1i32) / 8i32).mod_floor(&two).to_u32().unwrap_or(0)
    };
    let exponent = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
    if exponent % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Decides whether the quaternion algebra `(a, b)` over ℚ splits, for
/// nonzero squarefree integers `a`, `b`.
pub fn rational_symbol_splits(a: &BigInt, b: &BigInt, bound: u64) -> Result<bool, ScalarError> {
    if hilbert_symbol(a, b, &Place::Infinite) == -1 {
        return Ok(false);
    }
    let mut primes: Vec<BigUint> = vec![BigUint::from(2u32)];
    for x in [a, b] {
        for (p, _) in factor_bounded(x.magnitude(), bound)? {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
    }
    primes.sort();
    Ok(primes
        .into_iter()
        .all(|p| hilbert_symbol(a, b, &Place::Prime(p)) == 1))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &BigUint, bound: u64) -> Result<Vec<BigUint>, ScalarError> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factor_bounded(n, bound)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&bi(12), DEFAULT_FACTOR_BOUND).unwrap(), bi(3));
        assert_eq!(squarefree_part(&bi(-50), DEFAULT_FACTOR_BOUND).unwrap(), bi(-2));
        assert_eq!(squarefree_part(&bi(25), DEFAULT_FACTOR_BOUND).unwrap(), bi(1));
        assert!(squarefree_part(&bi(0), DEFAULT_FACTOR_BOUND).is_err());
    }

    #[test]
    fn factor_bound_is_enforced() {
        // 1000003 * 1000033 has no factor below 10^6.
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        assert!(matches!(
            factor_bounded(&n, 1000),
            Err(ScalarError::FactorBound { .. })
        ));
        let f = factor_bounded(&n, 2_000_000).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn hilbert_symbols_known_values() {
        // (-1,-1) is ramified exactly at 2 and infinity.
        assert_eq!(hilbert_symbol(&bi(-1), &bi(-1), &Place::Infinite), -1);
        assert_eq!(hilbert_symbol(&bi(-1), &bi(-1), &Place::Prime(BigUint::from(2u32))), -1);
        assert_eq!(hilbert_symbol(&bi(-1), &bi(-1), &Place::Prime(BigUint::from(3u32))), 1);
        // (2,5)_5 = (2/5) = -1
        assert_eq!(hilbert_symbol(&bi(2), &bi(5), &Place::Prime(BigUint::from(5u32))), -1);
        // (3,5) over Q: ramified at 3 and 5 since 5 mod 3 = 2 nonresidue
        assert!(!rational_symbol_splits(&bi(3), &bi(5), DEFAULT_FACTOR_BOUND).unwrap());
        assert!(rational_symbol_splits(&bi(1), &bi(7), DEFAULT_FACTOR_BOUND).unwrap());
        assert!(rational_symbol_splits(&bi(2), &bi(7), DEFAULT_FACTOR_BOUND).unwrap());
        assert!(!rational_symbol_splits(&bi(-1), &bi(-1), DEFAULT_FACTOR_BOUND).unwrap());
        assert!(!rational_symbol_splits(&bi(-1), &bi(3), DEFAULT_FACTOR_BOUND).unwrap());
    }

    #[test]
    fn divisor_lists() {
        let d = divisors(&BigUint::from(12u32), DEFAULT_FACTOR_BOUND).unwrap();
        let d: Vec<u32> = d.iter().map(|x| x.to_u32().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
