//! Text form of [`NCPoly`].
//!
//! ```text
//! poly    := term (';' term)*
//! term    := ['-'] ['{' scalar '}'] factor*
//! factor  := primary '*'*            postfix '*' is the star
//! primary := 'u[' i '][' j ']' | 'p[' i '][' j ']' | 'z[' i ']' | '1' | '(' poly ')'
//! ```
//!
//! Factors are juxtaposed (separated by whitespace). `p[i][j]` abbreviates
//! `u[3][i]* u[3][j]` and `z[i]` abbreviates `u[3][i]`. The printer emits one
//! term per normal-form word, `{coefficient} u[i][j] u[k][l] …`, in word order,
//! and `0` for the zero polynomial.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Algebra, Generator, NCPoly};
use crate::error::{Error, Result};
use crate::qscalar::text::{format_scalar, parse_scalar_at};
use crate::qscalar::QScalar;

pub fn format_word(w: &[u8]) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|x| {
            let g = Generator::from_letter(*x);
            format!("u[{}][{}]", g.row, g.col)
        })
        .collect();
    parts.join(" ")
}

pub fn format_ncpoly(p: &NCPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(w, c)| {
            if w.is_empty() {
                format!("{{{}}}", format_scalar(c))
            } else {
                format!("{{{}}} {}", format_scalar(c), format_word(w))
            }
        })
        .collect();
    terms.join("; ")
}

/// Parses and reduces to normal form.
pub fn parse_ncpoly(src: &str, alg: &Algebra) -> Result<NCPoly> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, alg };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::parse("empty expression", 0, 0));
    }
    let v = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse("unexpected trailing input", p.pos, p.src.len()));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alg: &'a Algebra,
}

impl Parser<'_> {
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
            let end = (self.pos + 1).min(self.src.len());
            Err(Error::parse(format!("expected '{}'", c as char), self.pos, end))
        }
    }

    fn poly(&mut self) -> Result<NCPoly> {
        let mut acc = self.term()?;
        while self.peek() == Some(b';') {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'u' | b'p' | b'z' | b'1' | b'('))
    }

    fn term(&mut self) -> Result<NCPoly> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut coef = QScalar::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            coef = coef.neg();
        }
        let mut seen = false;
        if self.peek() == Some(b'{') {
            self.pos += 1;
            let open = self.pos;
            let close = self.src[open..]
                .iter()
                .position(|c| *c == b'}')
                .map(|k| open + k)
                .ok_or_else(|| Error::parse("unterminated '{'", open - 1, self.src.len()))?;
            let text = core::str::from_utf8(&self.src[open..close])
                .map_err(|_| Error::parse("invalid UTF-8", open, close))?;
            coef = coef.mul(&parse_scalar_at(text, open)?);
            self.pos = close + 1;
            seen = true;
        }
        let mut acc = NCPoly::constant(coef);
        while self.starts_factor() {
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f)?;
            seen = true;
        }
        if !seen {
            let end = (self.pos + 1).min(self.src.len());
            return Err(Error::parse("expected a term", start, end.max(start)));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly> {
        let mut v = self.primary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            v = self.alg.star(&v)?;
        }
        Ok(v)
    }

    fn index(&mut self) -> Result<u8> {
        self.expect(b'[')?;
        self.skip_ws();
        let at = self.pos;
        let d = match self.src.get(self.pos) {
            Some(c @ b'1'..=b'3') => c - b'0',
            _ => return Err(Error::parse("index must be 1, 2 or 3", at, (at + 1).min(self.src.len()))),
        };
        self.pos += 1;
        self.expect(b']')?;
        Ok(d)
    }

    fn primary(&mut self) -> Result<NCPoly> {
        match self.peek() {
            Some(b'u') => {
                self.pos += 1;
                let i = self.index()?;
                let j = self.index()?;
                Ok(NCPoly::u(i, j))
            }
            Some(b'p') => {
                self.pos += 1;
                let i = self.index()?;
                let j = self.index()?;
                self.alg.p(i, j)
            }
            Some(b'z') => {
                self.pos += 1;
                let i = self.index()?;
                Ok(NCPoly::u(3, i))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(NCPoly::one())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.poly()?;
                self.expect(b')')?;
                Ok(v)
            }
            _ => {
                let end = (self.pos + 1).min(self.src.len());
                Err(Error::parse("expected a factor", self.pos, end))
            }
        }
    }
}
