//! The Haar state on invariant elements by invariant projection.
//!
//! The Haar state vanishes off the words of left and right weight zero, i.e.
//! normal-form words whose row counts and column counts are all equal. On that
//! span it kills every `x ▷ v` and `v ◁ x` with `x ∈ {E_i, F_i}`. Such vectors
//! come from sources `v` whose weight is one simple root away from zero. The
//! quotient by their span, restricted to degree at most `3m`, is expected to
//! be one-dimensional and spanned by the class of `1`; `φ(a)` is the
//! coordinate of the class of `a`.

use alloc::format;
use alloc::vec::Vec;

use super::{split_radicals, WordIndex};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ncalg::{Algebra, NCPoly, Word};
use crate::qscalar::{QScalar, RatFunc};
use crate::uq::{act_left, act_right, UqElement, UqGen};

type Margins = [usize; 3];

/// Non-negative 3×3 integer matrices with the given row and column sums.
fn tables(rows: Margins, cols: Margins) -> Vec<[[usize; 3]; 3]> {
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    for a in 0..=rows[0].min(cols[0]) {
        for b in 0..=(rows[0] - a).min(cols[1]) {
            let c = rows[0] - a - b;
            if c > cols[2] {
                continue;
            }
            for d in 0..=rows[1].min(cols[0] - a) {
                for e in 0..=(rows[1] - d).min(cols[1] - b) {
                    let f = rows[1] - d - e;
                    if f > cols[2] - c {
                        continue;
                    }
                    let (g, h, i) = (cols[0] - a - d, cols[1] - b - e, cols[2] - c - f);
                    if g + h + i == rows[2] {
                        out.push([[a, b, c], [d, e, f], [g, h, i]]);
                    }
                }
            }
        }
    }
    out
}

/// Ordered words with the given letter multiplicities that are not divisible
/// by the leading monomial `u^1_1 u^2_2 u^3_3` of the determinant.
fn basis_words(rows: Margins, cols: Margins) -> Vec<Word> {
    tables(rows, cols)
        .into_iter()
        .filter(|t| t[0][0] == 0 || t[1][1] == 0 || t[2][2] == 0)
        .map(|t| {
            let mut w = Word::new();
            for (x, n) in t.iter().flatten().enumerate() {
                for _ in 0..*n {
                    w.push(x as u8);
                }
            }
            w
        })
        .collect()
}

fn shifted(k: usize, i: usize, sign: i32) -> Option<Margins> {
    let mut m = [k; 3];
    if sign > 0 {
        m[i] = m[i].checked_add(1)?;
        m[i + 1] = m[i + 1].checked_sub(1)?;
    } else {
        m[i] = m[i].checked_sub(1)?;
        m[i + 1] = m[i + 1].checked_add(1)?;
    }
    Some(m)
}

fn balanced(w: &[u8]) -> bool {
    let mut r = [0usize; 3];
    let mut c = [0usize; 3];
    for x in w {
        r[(x / 3) as usize] += 1;
        c[(x % 3) as usize] += 1;
    }
    r[0] == r[1] && r[1] == r[2] && c[0] == c[1] && c[1] == c[2]
}

/// Degree-indexed invariant-projection data for the Haar state.
pub struct HaarContext {
    /// Largest `m` such that words of degree `3m` are covered.
    level: usize,
    index: WordIndex,
    relations: Echelon,
    /// Residual of the class of `1`.
    one: SparseVec,
}

impl HaarContext {
    pub fn new() -> Self {
        let mut index = WordIndex::default();
        let one_id = index.id(&Word::new());
        let mut one = SparseVec::new();
        one.insert(one_id, RatFunc::one());
        HaarContext { level: 0, index, relations: Echelon::new(), one }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Dimension of the relation span found so far.
    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Adds the relations needed for words of degree up to `3m`.
    pub fn extend_to(&mut self, alg: &Algebra, m: usize) -> Result<()> {
        while self.level < m {
            let k = self.level + 1;
            self.add_level(alg, k)?;
            self.level = k;
        }
        let (res, _) = self.relations.reduce(&self.one);
        self.one = res;
        if self.one.is_empty() {
            return Err(Error::AmbiguousProjection("the class of 1 vanished".into()));
        }
        Ok(())
    }

    fn add_level(&mut self, alg: &Algebra, k: usize) -> Result<()> {
        let flat = [k; 3];
        for (i, (e, f)) in [(UqGen::E1, UqGen::F1), (UqGen::E2, UqGen::F2)].into_iter().enumerate() {
            for (g, sign) in [(e, 1), (f, -1)] {
                let x = UqElement::gen(g);
                // left action moves columns: E_i takes column i to i+1
                if let Some(cols) = shifted(k, i, sign) {
                    for w in basis_words(flat, cols) {
                        let v = act_left(alg, &x, &NCPoly::monomial(w, QScalar::one()))?;
                        self.add_relation(&v)?;
                    }
                }
                // right action moves rows: E_i takes row i+1 to i
                if let Some(rows) = shifted(k, i, -sign) {
                    for w in basis_words(rows, flat) {
                        let v = act_right(alg, &NCPoly::monomial(w, QScalar::one()), &x)?;
                        self.add_relation(&v)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn add_relation(&mut self, v: &NCPoly) -> Result<()> {
        if v.is_zero() {
            return Ok(());
        }
        let vec = self.index.vector(v)?;
        self.relations.insert(vec);
        Ok(())
    }

    /// `φ(a)` for a radical-free polynomial.
    fn eval_plain(&mut self, alg: &Algebra, a: &NCPoly) -> Result<QScalar> {
        let mut kept = NCPoly::zero();
        for (w, c) in a.terms() {
            if balanced(w) {
                kept.add_term(w.clone(), c.clone());
            }
        }
        if kept.is_zero() {
            return Ok(QScalar::zero());
        }
        self.extend_to(alg, kept.degree().div_ceil(3))?;
        let v = self.index.vector(&kept)?;
        let (res, _) = self.relations.reduce(&v);
        proportional(&res, &self.one).map(QScalar::from).ok_or_else(|| {
            Error::AmbiguousProjection(format!("class of {a} is not a multiple of the class of 1"))
        })
    }

    /// The Haar state. Radical coefficients are carried through linearly.
    pub fn haar(&mut self, alg: &Algebra, a: &NCPoly) -> Result<QScalar> {
        let a = alg.normal_form(a)?;
        let mut out = QScalar::zero();
        for (root, part) in split_radicals(&a) {
            out = out.add(&root.mul(&self.eval_plain(alg, &part)?));
        }
        Ok(out)
    }
}

impl Default for HaarContext {
    fn default() -> Self {
        HaarContext::new()
    }
}

fn proportional(v: &SparseVec, base: &SparseVec) -> Option<RatFunc> {
    if v.is_empty() {
        return Some(RatFunc::zero());
    }
    let (k, b0) = base.iter().next()?;
    let c = v.get(k)?.mul(&b0.inv()?);
    let keys_match = v.len() == base.len() && v.keys().all(|k| base.contains_key(k));
    (keys_match && base.iter().all(|(k, b)| v[k] == c.mul(b))).then_some(c)
}

