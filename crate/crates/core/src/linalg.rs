//! Dense exact linear algebra over any field-like scalar.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Exact field arithmetic; implemented by the base fields and by the
/// Laurent scalars.
pub trait FieldElement:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> FieldElement for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Row-reduces `m` in place; returns the pivot columns.
pub fn row_reduce<T: FieldElement>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in 0..cols {
                    let v = m[k][j].clone() - f.clone() * m[r][j].clone();
                    m[k][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: FieldElement>(m: &[Vec<T>]) -> usize {
    let mut m = m.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column, in column order.
pub fn nullspace<T: FieldElement>(m: &[Vec<T>], cols: usize) -> Vec<Vec<T>> {
    let mut m = m.to_vec();
    let pivots = row_reduce(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `m·x = rhs`, if the system is consistent.
pub fn solve<T: FieldElement>(m: &[Vec<T>], rhs: &[T]) -> Option<Vec<T>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn determinant<T: FieldElement>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !a[k][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        for k in c + 1..n {
            if !a[k][c].is_zero() {
                let f = a[k][c].clone() / piv.clone();
                for j in c..n {
                    let v = a[k][j].clone() - f.clone() * a[c][j].clone();
                    a[k][j] = v;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(q(0), |acc, (a, b)| acc + a.clone() * b.clone());
            assert_eq!(dot, q(0));
        }
    }

    #[test]
    fn solve_and_determinant() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&m), q(5));
        let x = solve(&m, &[q(3), q(4)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let singular = mat(&[&[1, 1], &[1, 1]]);
        assert!(solve(&singular, &[q(1), q(2)]).is_none());
        assert_eq!(determinant(&singular), q(0));
    }
}
