use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// Element of the value group `(½ℤ)ⁿ ∪ {∞}`, ordered right-to-left
/// lexicographically (the last coordinate dominates).
///
/// Finite values are stored as doubled integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GammaValue {
    Finite(Vec<i64>),
    Infinity,
}

impl GammaValue {
    pub fn zero(arity: usize) -> Self {
        GammaValue::Finite(vec![0; arity])
    }

    pub fn from_integers(v: &[i64]) -> Self {
        GammaValue::Finite(v.iter().map(|x| 2 * x).collect())
    }

    /// Builds a value from doubled coordinates: `[1, 0]` is `(½, 0)`.
    pub fn from_halves(v: Vec<i64>) -> Self {
        GammaValue::Finite(v)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, GammaValue::Infinity)
    }

    pub fn halves(&self) -> Option<&[i64]> {
        match self {
            GammaValue::Finite(v) => Some(v),
            GammaValue::Infinity => None,
        }
    }

    pub fn arity(&self) -> Option<usize> {
        self.halves().map(|v| v.len())
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        let h = self.halves()?;
        if h.iter().all(|x| x % 2 == 0) {
            Some(h.iter().map(|x| x / 2).collect())
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.integer_coords().is_some()
    }

    /// `½·self`; only defined when every coordinate is an integer.
    pub fn halve(&self) -> Option<GammaValue> {
        match self {
            GammaValue::Infinity => Some(GammaValue::Infinity),
            GammaValue::Finite(_) => self.integer_coords().map(GammaValue::Finite),
        }
    }

    pub fn double(&self) -> GammaValue {
        match self {
            GammaValue::Infinity => GammaValue::Infinity,
            GammaValue::Finite(h) => GammaValue::Finite(h.iter().map(|x| 2 * x).collect()),
        }
    }

    pub fn neg(&self) -> GammaValue {
        match self {
            GammaValue::Infinity => panic!("negation of infinity"),
            GammaValue::Finite(h) => GammaValue::Finite(h.iter().map(|x| -x).collect()),
        }
    }

    /// Class in `Γ / ℤⁿ`, as a parity vector of doubled coordinates.
    pub fn class_mod_integers(&self) -> Option<Vec<u8>> {
        self.halves()
            .map(|h| h.iter().map(|x| x.rem_euclid(2) as u8).collect())
    }
}

impl Add for &GammaValue {
    type Output = GammaValue;

    fn add(self, rhs: &GammaValue) -> GammaValue {
        match (self, rhs) {
            (GammaValue::Finite(a), GammaValue::Finite(b)) => {
                assert_eq!(a.len(), b.len(), "value group arity mismatch");
                GammaValue::Finite(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => GammaValue::Infinity,
        }
    }
}

impl Add for GammaValue {
    type Output = GammaValue;

    fn add(self, rhs: GammaValue) -> GammaValue {
        &self + &rhs
    }
}

impl Ord for GammaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GammaValue::Infinity, GammaValue::Infinity) => Ordering::Equal,
            (GammaValue::Infinity, _) => Ordering::Greater,
            (_, GammaValue::Infinity) => Ordering::Less,
            (GammaValue::Finite(a), GammaValue::Finite(b)) => {
                assert_eq!(a.len(), b.len(), "value group arity mismatch");
                for (x, y) in a.iter().zip(b).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl PartialOrd for GammaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_half(x: i64) -> String {
    if x % 2 == 0 {
        format!("{}", x / 2)
    } else {
        format!("{}/2", x)
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaValue::Infinity => write!(f, "inf"),
            GammaValue::Finite(h) => {
                let parts: Vec<String> = h.iter().map(|x| fmt_half(*x)).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

impl Serialize for GammaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
