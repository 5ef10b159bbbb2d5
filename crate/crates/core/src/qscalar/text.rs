//! Canonical text form of [`QScalar`] and its parser.
//!
//! Printed form: Laurent polynomials as `c*q^(a/2)` terms with `c = p/r`, in
//! decreasing exponent, joined by ` + `; a proper fraction as `(N)/(D)`; a part
//! carrying radicals as `(C)*sqrt(A)*sqrt(B)`; parts joined by ` + `.
//! The parser accepts any arithmetic expression over rationals, `q`, `sqrt(..)`,
//! `[n]` (q-integer), `+ - * /`, and `^` with integer or half-integer exponents
//! on `q`. Everything the printer emits parses back to the same value.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{q_int, Laurent, QScalar, RatFunc};
use crate::error::{Error, Result};

fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn format_laurent(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .rev()
        .map(|(e, c)| format!("{}*q^({}/2)", format_rational(c), e))
        .collect();
    terms.join(" + ")
}

pub fn format_ratfunc(r: &RatFunc) -> String {
    if r.is_polynomial() {
        format_laurent(r.numer())
    } else {
        format!("({})/({})", format_laurent(r.numer()), format_laurent(&r.denom()))
    }
}

pub fn format_scalar(x: &QScalar) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = x
        .parts()
        .iter()
        .map(|(rad, c)| {
            if rad.is_empty() {
                format_ratfunc(c)
            } else {
                let mut s = format!("({})", format_ratfunc(c));
                for a in rad.atoms() {
                    s.push_str(&format!("*sqrt({})", format_ratfunc(a)));
                }
                s
            }
        })
        .collect();
    parts.join(" + ")
}

/// Parses a scalar expression. Spans in errors are byte offsets into `src`.
pub fn parse_scalar(src: &str) -> Result<QScalar> {
    parse_scalar_at(src, 0)
}

/// Like [`parse_scalar`], reporting spans shifted by `offset`.
pub fn parse_scalar_at(src: &str, offset: usize) -> Result<QScalar> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, offset };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::parse("empty scalar expression", offset, offset));
    }
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input", p.pos, p.src.len()));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str, start: usize, end: usize) -> Error {
        Error::parse(msg, start + self.offset, end + self.offset)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char), self.pos, (self.pos + 1).min(self.src.len())))
        }
    }

    fn expr(&mut self) -> Result<QScalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let start = self.pos;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|_| self.error("division by a non-invertible scalar", start, self.pos))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QScalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QScalar> {
        let start = self.pos;
        let is_q = self.peek() == Some(b'q');
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let estart = self.pos;
        let e = self.exponent()?;
        if is_q {
            let twice = &e * BigRational::from_integer(BigInt::from(2));
            if !twice.is_integer() {
                return Err(self.error("exponent of q must be a multiple of 1/2", estart, self.pos));
            }
            let half: i32 = i32::try_from(twice.to_integer())
                .map_err(|_| self.error("exponent out of range", estart, self.pos))?;
            return Ok(QScalar::q_half_pow(half));
        }
        if !e.is_integer() {
            return Err(self.error("only q takes fractional exponents", estart, self.pos));
        }
        let n: i32 = i32::try_from(e.to_integer()).map_err(|_| self.error("exponent out of range", estart, self.pos))?;
        base.pow(n).map_err(|_| self.error("negative power of a non-invertible scalar", start, self.pos))
    }

    fn exponent(&mut self) -> Result<BigRational> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let neg = self.sign();
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    BigInt::one()
                };
                self.expect(b')')?;
                if den.is_zero() {
                    return Err(self.error("zero denominator in exponent", self.pos - 1, self.pos));
                }
                let v = BigRational::new(num, den);
                Ok(if neg { -v } else { v })
            }
            _ => {
                let neg = self.sign();
                let v = BigRational::from_integer(self.integer()?);
                Ok(if neg { -v } else { v })
            }
        }
    }

    fn sign(&mut self) -> bool {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer", start, (start + 1).min(self.src.len())));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.error("malformed integer", start, self.pos))
    }

    fn atom(&mut self) -> Result<QScalar> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'[') => {
                self.pos += 1;
                let neg = self.sign();
                let n = self.integer()?;
                self.expect(b']')?;
                let n: i64 = i64::try_from(n).map_err(|_| self.error("q-integer out of range", start, self.pos))?;
                Ok(q_int(if neg { -n } else { n }))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(QScalar::q_pow(1))
            }
            Some(b's') => {
                let rest = &self.src[self.pos..];
                if rest.starts_with(b"sqrt") {
                    self.pos += 4;
                    self.expect(b'(')?;
                    let inner_start = self.pos;
                    let v = self.expr()?;
                    self.expect(b')')?;
                    v.sqrt().map_err(|e| self.error(&e.to_string(), inner_start, self.pos))
                } else {
                    Err(self.error("unknown identifier", start, start + 1))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QScalar::from_big_rational(BigRational::from_integer(n)))
            }
            Some(_) => Err(self.error("unexpected character", self.pos, self.pos + 1)),
            None => Err(self.error("unexpected end of input", self.pos, self.pos)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q_int, q_trinomial};
    use super::*;

    #[test]
    fn prints_canonical_terms() {
        assert_eq!(format_scalar(&q_int(2)), "1/1*q^(2/2) + 1/1*q^(-2/2)");
        assert_eq!(format_scalar(&QScalar::zero()), "0");
        assert_eq!(format_scalar(&QScalar::rational(-3, 4)), "-3/4*q^(0/2)");
    }

    #[test]
    fn round_trips() {
        let a = q_int(3).div(&q_int(2)).unwrap();
        let b = q_trinomial(1, 1, 0).unwrap().sqrt().unwrap().mul(&q_int(2)).add(&QScalar::rational(1, 3));
        for x in [a, b, q_int(5), QScalar::q_half_pow(-3)] {
            let s = format_scalar(&x);
            assert_eq!(parse_scalar(&s).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn parses_expressions() {
        assert_eq!(parse_scalar("q + q^-1").unwrap(), q_int(2));
        assert_eq!(parse_scalar("[3]").unwrap(), q_int(3));
        assert_eq!(parse_scalar("q^(1/2)*q^(1/2)").unwrap(), QScalar::q_pow(1));
        assert_eq!(parse_scalar("(q^2 - q^-2)/(q - q^-1)").unwrap(), q_int(2));
    }

    #[test]
    fn reports_spans() {
        match parse_scalar("q + $") {
            Err(Error::Parse { start, end, .. }) => assert_eq!((start, end), (4, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("q^(1/3)").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("(q").is_err());
    }
}
