//! Bounded-degree ideal membership, computed without the determinant
//! reduction: the two-sided ideal generated by `D - 1` is spanned, in each
//! degree, by the straightened products `w (D - 1) w'`, and membership is a
//! linear solve over ℚ(q^{1/2}).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::{Algebra, NCPoly, Word};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::qscalar::{QScalar, RatFunc, SAMPLE_POINTS};

/// Outcome of a zero test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeroVerdict {
    Zero,
    Nonzero,
    Undecided,
}

type Class = ([u8; 3], [u8; 3]);

/// Row and column letter counts, taken modulo adding one to every entry (which
/// is what multiplying by the determinant does).
fn class_of(w: &[u8]) -> Class {
    let mut r = [0u8; 3];
    let mut c = [0u8; 3];
    for x in w {
        r[(x / 3) as usize] += 1;
        c[(x % 3) as usize] += 1;
    }
    let t = r.iter().chain(c.iter()).copied().min().unwrap_or(0);
    for v in r.iter_mut().chain(c.iter_mut()) {
        *v -= t;
    }
    (r, c)
}

/// All non-decreasing words of length `len`.
pub(crate) fn ordered_words(len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Word::new();
    fn rec(cur: &mut Word, len: usize, min: u8, out: &mut Vec<Word>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in min..9 {
            cur.push(x);
            rec(cur, len, x, out);
            cur.pop();
        }
    }
    rec(&mut cur, len, 0, &mut out);
    out
}

struct Coords {
    index: BTreeMap<Word, usize>,
}

impl Coords {
    fn vector(&mut self, terms: impl Iterator<Item = (Word, RatFunc)>) -> SparseVec {
        let mut v = SparseVec::new();
        for (w, c) in terms {
            let n = self.index.len();
            let k = *self.index.entry(w).or_insert(n);
            let e = v.entry(k).or_insert_with(RatFunc::zero);
            *e = e.add(&c);
            if e.is_zero() {
                v.remove(&k);
            }
        }
        v
    }
}

/// Straightened form (quadratic relations only) of a radical-free polynomial.
fn pbw_terms(alg: &Algebra, p: &NCPoly) -> Result<Vec<(Word, RatFunc)>> {
    let mut out = Vec::new();
    for (w, c) in p.terms() {
        let c = c
            .as_ratfunc()
            .ok_or_else(|| Error::Precondition("ideal membership needs radical-free coefficients".into()))?;
        for (u, z) in alg.word_pbw(w)? {
            out.push((u, c.mul(&z.to_ratfunc())));
        }
    }
    Ok(out)
}

/// Decides whether `p` lies in the span of `w (D - 1) w'` with
/// `|w| + |w'| + 3 ≤ degree_bound`, working modulo the quadratic relations
/// only. `Ok(true)` is a membership certificate.
pub fn ideal_membership(alg: &Algebra, p: &NCPoly, degree_bound: usize) -> Result<bool> {
    let target = pbw_terms(alg, p)?;
    if target.is_empty() {
        return Ok(true);
    }
    let classes: BTreeSet<Class> = target.iter().map(|(w, _)| class_of(w)).collect();
    let mut coords = Coords { index: BTreeMap::new() };
    let mut ech = Echelon::new();
    let det = Algebra::determinant_raw();
    if degree_bound >= 3 {
        let spare = degree_bound - 3;
        let words: Vec<Vec<Word>> = (0..=spare).map(ordered_words).collect();
        for la in 0..=spare {
            for lb in 0..=(spare - la) {
                for a in &words[la] {
                    for b in &words[lb] {
                        let mut ab = a.clone();
                        ab.extend_from_slice(b);
                        if !classes.contains(&class_of(&ab)) {
                            continue;
                        }
                        let mut g = NCPoly::monomial(ab, QScalar::one().neg());
                        for (d, c) in det.terms() {
                            let mut w = a.clone();
                            w.extend_from_slice(d);
                            w.extend_from_slice(b);
                            g.add_term(w, c.clone());
                        }
                        let v = coords.vector(pbw_terms(alg, &g)?.into_iter());
                        ech.insert(v);
                        if ech.generators() > alg.max_terms() {
                            return Err(Error::ResourceLimit(format!(
                                "more than {} ideal generators",
                                alg.max_terms()
                            )));
                        }
                    }
                }
            }
        }
    }
    let t = coords.vector(target.into_iter());
    Ok(ech.solve(&t).is_some())
}

impl Algebra {
    /// Zero test: canonical normal form first, then bounded ideal membership,
    /// then numeric sampling of the remaining coefficients (which can only
    /// establish `Nonzero`).
    pub fn equals_zero(&self, p: &NCPoly, degree_bound: usize) -> Result<ZeroVerdict> {
        if degree_bound < p.degree() {
            return Err(Error::Precondition(format!(
                "degree bound {degree_bound} is below the degree {} of the input",
                p.degree()
            )));
        }
        let nf = self.normal_form(p)?;
        if nf.is_zero() {
            return Ok(ZeroVerdict::Zero);
        }
        if p.is_radical_free() && ideal_membership(self, p, degree_bound)? {
            return Ok(ZeroVerdict::Zero);
        }
        for (_, c) in nf.terms() {
            for q0 in SAMPLE_POINTS {
                if libm::fabs(c.eval_unchecked(q0)) > 1e-12 {
                    return Ok(ZeroVerdict::Nonzero);
                }
            }
        }
        Ok(ZeroVerdict::Undecided)
    }
}
