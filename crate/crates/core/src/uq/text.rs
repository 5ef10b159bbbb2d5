//! Text form of [`UqElement`]: words are generator names
//! `K1, K1inv, K2, K2inv, E1, E2, F1, F2` joined by `.`, the empty word is `1`.
//! Linear combinations use the polynomial conventions: `{coef} word` terms
//! separated by `;`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{UqElement, UqGen};
use crate::error::{Error, Result};
use crate::qscalar::text::{format_scalar, parse_scalar_at};
use crate::qscalar::QScalar;

pub fn format_uq_word(w: &[UqGen]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let names: Vec<&str> = w.iter().map(|g| g.name()).collect();
    names.join(".")
}

pub fn format_uq(x: &UqElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = x
        .terms()
        .map(|(w, c)| {
            if c.is_one() {
                format_uq_word(w)
            } else {
                format!("{{{}}} {}", format_scalar(c), format_uq_word(w))
            }
        })
        .collect();
    terms.join("; ")
}

pub fn parse_uq(src: &str) -> Result<UqElement> {
    let mut out = UqElement::zero();
    let mut offset = 0;
    for part in src.split(';') {
        out = out.add(&parse_term(part, offset)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn parse_term(part: &str, offset: usize) -> Result<UqElement> {
    let bytes = part.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip(&mut pos);
    let mut coef = QScalar::one();
    if pos < bytes.len() && bytes[pos] == b'-' {
        coef = coef.neg();
        pos += 1;
        skip(&mut pos);
    }
    if pos < bytes.len() && bytes[pos] == b'{' {
        let close = part[pos..]
            .find('}')
            .map(|k| pos + k)
            .ok_or_else(|| Error::parse("unterminated '{'", offset + pos, offset + part.len()))?;
        coef = coef.mul(&parse_scalar_at(&part[pos + 1..close], offset + pos + 1)?);
        pos = close + 1;
        skip(&mut pos);
    }
    let rest = part[pos..].trim_end();
    if rest.is_empty() {
        return Err(Error::parse("expected a generator word", offset + pos, offset + part.len()));
    }
    let mut word = Vec::new();
    if rest != "1" {
        let mut at = offset + pos;
        for name in rest.split('.') {
            let g = UqGen::from_name(name.trim()).ok_or_else(|| {
                Error::parse(format!("unknown generator '{}'", name.trim()), at, at + name.len())
            })?;
            word.push(g);
            at += name.len() + 1;
        }
    }
    let mut e = UqElement::zero();
    e.add_term(&word, coef);
    Ok(e)
}
