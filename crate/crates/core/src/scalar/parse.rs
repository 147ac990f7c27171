//! Scalar literals: `3*t1^2/t2`, `-1`, `1+t1`, `5t`, `(3+t)/(1-t)`.
//!
//! Juxtaposition multiplies (`5t`, `t1t2`, `2(1+t)`). `t` alone names the
//! first indeterminate.

use std::fmt;

use num_bigint::BigInt;

use super::field::BaseField;
use super::laurent::LaurentScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    arity: usize,
    src: &'a str,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr<F: BaseField>(&mut self) -> PResult<LaurentScalar<F>> {
        let mut acc = self.term::<F>()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term::<F>()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term::<F>()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<F: BaseField>(&mut self) -> PResult<LaurentScalar<F>> {
        let mut acc = self.unary::<F>()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary::<F>()?;
                }
                '/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary::<F>()?;
                    match acc.checked_div(&d) {
                        Ok(q) => acc = q,
                        Err(_) => {
                            self.pos = at;
                            return self.err("division by zero");
                        }
                    }
                }
                't' | '(' => acc = &acc * &self.power::<F>()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary<F: BaseField>(&mut self) -> PResult<LaurentScalar<F>> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary::<F>()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary::<F>()
            }
            _ => self.power::<F>(),
        }
    }

    fn power<F: BaseField>(&mut self) -> PResult<LaurentScalar<F>> {
        let base = self.atom::<F>()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits = self.digits();
        if digits.is_empty() {
            return self.err("expected integer exponent after '^'");
        }
        let e: i64 = match digits.parse() {
            Ok(e) if e <= 4096 => e,
            _ => return self.err("exponent too large"),
        };
        if negative && base.is_zero_value() {
            return self.err("negative power of zero");
        }
        Ok(base.pow(if negative { -e } else { e }))
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom<F: BaseField>(&mut self) -> PResult<LaurentScalar<F>> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr::<F>()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('t') => {
                self.pos += 1;
                // no whitespace allowed inside a variable name
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let idx: String = self.chars[start..self.pos].iter().collect();
                let index = if idx.is_empty() {
                    1
                } else {
                    match idx.parse::<usize>() {
                        Ok(k) if k >= 1 => k,
                        _ => {
                            self.pos = start;
                            return self.err(format!("bad indeterminate index '{}'", idx));
                        }
                    }
                };
                if index > self.arity {
                    self.pos = start - 1;
                    return self.err(format!(
                        "indeterminate t{} outside a tower of height {}",
                        index, self.arity
                    ));
                }
                Ok(LaurentScalar::var(index - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(LaurentScalar::constant(F::from_integer(&n)))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c)),
        }
    }
}

/// Parses a scalar literal in a tower of height `arity`.
pub fn parse_scalar<F: BaseField>(src: &str, arity: usize) -> Result<LaurentScalar<F>, ParseError> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        arity,
        src,
    };
    if p.peek().is_none() {
        return p.err(format!("empty scalar literal '{}'", p.src));
    }
    let value = p.expr::<F>()?;
    if p.peek().is_some() {
        let c = p.chars[p.pos];
        return p.err(format!("unexpected character '{}'", c));
    }
    Ok(value.with_arity(arity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::field::{Fp, Rational};

    fn q(s: &str, n: usize) -> LaurentScalar<Rational> {
        parse_scalar(s, n).unwrap()
    }

    #[test]
    fn literals_round_trip_through_display() {
        for (src, n, shown) in [
            ("3*t1^2/t2", 2, "3t1^2/t2"),
            ("-1", 0, "-1"),
            ("1+t1", 1, "1+t"),
            ("5t", 1, "5t"),
            ("t1t2", 2, "t1*t2"),
            ("(3+t)/(1-t)", 1, "(3+t)/(1-t)"),
            ("1/2", 0, "1/2"),
            ("t/2", 1, "1/2*t"),
            ("2(1+t)", 1, "2+2t"),
            ("t^-2", 1, "1/t^2"),
        ] {
            let x = q(src, n);
            assert_eq!(x.to_string(), shown, "{}", src);
            assert_eq!(q(shown, n), x);
        }
    }

    #[test]
    fn malformed_literals_report_columns() {
        let e = parse_scalar::<Rational>("t^^2", 1).unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_scalar::<Rational>("1+", 0).unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_scalar::<Rational>("t3", 2).unwrap_err();
        assert_eq!(e.column, 1);
        assert!(parse_scalar::<Rational>("1/0", 0).is_err());
        assert!(parse_scalar::<Rational>("(1+t", 1).is_err());
        assert!(parse_scalar::<Rational>("", 1).is_err());
        assert!(parse_scalar::<Rational>("2 3", 1).is_err());
    }

    #[test]
    fn prime_field_literals() {
        let x = parse_scalar::<Fp<7>>("10", 0).unwrap();
        assert_eq!(x.to_string(), "3");
    }
}
