//! The *-algebra A(SU_q(3)) on the nine generators `u^i_j`.
//!
//! Words are sequences of letters `0..9`, letter `3(i-1) + (j-1)` standing for
//! `u^i_j`, so the letter order is the row-major generator order.
//!
//! Normal forms are computed in two stages. The 36 quadratic commutation rules
//! straighten any word into a combination of *ordered* words (non-decreasing
//! letters); the quadratic algebra has these as a basis. The determinant
//! relation `D = 1` is then used to remove every ordered word that contains
//! `u^1_1`, `u^2_2` and `u^3_3`: for such a word `w = v ∪ {u^1_1, u^2_2, u^3_3}`
//! the straightened product `v·D` has `w` as its leading term (under the
//! commutative degree-lexicographic order with `u^1_1` largest) and `v·D ≡ v`.
//! Because `D` is central, `{D - 1}` is a Gröbner basis of the ideal, so the
//! result is canonical: two elements are equal iff their normal forms agree.

mod ideal;
mod rewrite;
pub mod suite;
pub mod text;
mod zpoly;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use hashbrown::HashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::qscalar::{QScalar, RatFunc};

pub use ideal::{ideal_membership, ZeroVerdict};
pub use rewrite::{Ambiguity, ConfluenceReport, RewriteRule, RewriteSystem};
pub(crate) use zpoly::ZPoly;

/// A word in the generators, letter `3(i-1) + (j-1)` for `u^i_j`.
pub type Word = SmallVec<[u8; 16]>;

/// Expansion over ordered words with coefficients in ℤ[q^{±1/2}].
pub(crate) type Expansion = Vec<(Word, ZPoly)>;

/// The leading monomial of the quantum determinant: `u^1_1 u^2_2 u^3_3`.
const DET_LEAD: [u8; 3] = [0, 4, 8];

/// Generator `u^row_col` with `row, col ∈ {1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub row: u8,
    pub col: u8,
}

impl Generator {
    pub fn new(row: u8, col: u8) -> Result<Self> {
        if !(1..=3).contains(&row) || !(1..=3).contains(&col) {
            return Err(Error::Precondition(format!("generator index u[{row}][{col}] out of range")));
        }
        Ok(Generator { row, col })
    }

    pub fn letter(self) -> u8 {
        3 * (self.row - 1) + (self.col - 1)
    }

    pub fn from_letter(x: u8) -> Self {
        Generator { row: x / 3 + 1, col: x % 3 + 1 }
    }

    pub fn all() -> impl Iterator<Item = Generator> {
        (0..9).map(Generator::from_letter)
    }
}

pub(crate) fn letter(row: u8, col: u8) -> u8 {
    3 * (row - 1) + (col - 1)
}

/// Noncommutative polynomial: words mapped to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, QScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(QScalar::one())
    }

    pub fn constant(c: QScalar) -> Self {
        NCPoly::monomial(Word::new(), c)
    }

    /// `c · w` with `w` taken literally (not reduced).
    pub fn monomial(w: Word, c: QScalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    /// The generator `u^row_col`; single letters are already normal.
    pub fn generator(g: Generator) -> Self {
        NCPoly::monomial(Word::from_slice(&[g.letter()]), QScalar::one())
    }

    pub fn u(row: u8, col: u8) -> Self {
        NCPoly::generator(Generator { row, col })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[u8]) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn is_radical_free(&self) -> bool {
        self.terms.values().all(|c| c.is_radical_free())
    }

    /// The coefficient of the empty word.
    pub fn constant_term(&self) -> QScalar {
        self.coefficient(&[])
    }

    pub fn add_term(&mut self, w: Word, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&QScalar) -> QScalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl core::fmt::Display for NCPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&text::format_ncpoly(self))
    }
}

fn is_ordered(w: &[u8]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// Whether the ordered word contains `u^1_1`, `u^2_2` and `u^3_3`.
fn det_divisible(w: &[u8]) -> bool {
    DET_LEAD.iter().all(|x| w.contains(x))
}

/// Straightening of `y x` for letters `y > x`, as `Σ c · a b` with `a ≤ b`.
fn swap_rule(y: u8, x: u8) -> SmallVec<[(ZPoly, u8, u8); 2]> {
    let (a, b) = (y / 3, y % 3);
    let (c, d) = (x / 3, x % 3);
    let mut out = SmallVec::new();
    if a == c || b == d {
        // same row or same column
        out.push((ZPoly::monomial(1, -2), x, y));
    } else if b < d {
        out.push((ZPoly::one(), x, y));
    } else {
        // u^a_b u^c_d with c < a, d < b
        out.push((ZPoly::one(), x, y));
        let mut t = ZPoly::q_minus_qinv();
        t = t.scaled(-1, 0).expect("small");
        out.push((t, 3 * c + b, 3 * a + d));
    }
    out
}

fn accumulate(acc: &mut HashMap<Word, ZPoly>, w: &Word, c: &ZPoly, scale: &ZPoly) -> Result<()> {
    let t = c.mul(scale)?;
    if t.is_zero() {
        return Ok(());
    }
    match acc.get_mut(w) {
        Some(x) => {
            x.add_assign(&t)?;
            if x.is_zero() {
                acc.remove(w);
            }
        }
        None => {
            acc.insert(w.clone(), t);
        }
    }
    Ok(())
}

fn into_expansion(acc: HashMap<Word, ZPoly>) -> Expansion {
    let mut v: Expansion = acc.into_iter().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

/// Default ceiling on the number of terms of any intermediate result.
pub const DEFAULT_MAX_TERMS: usize = 200_000;

/// The algebra together with its memo tables. Memoization makes an `Algebra`
/// single-threaded; use one instance per worker.
pub struct Algebra {
    max_terms: usize,
    insert_memo: RefCell<HashMap<(Word, u8), Rc<Expansion>>>,
    det_memo: RefCell<HashMap<Word, Rc<Expansion>>>,
    mul_memo: RefCell<HashMap<(Word, Word), Rc<Expansion>>>,
    star_memo: RefCell<HashMap<Word, Rc<Expansion>>>,
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra::new()
    }
}

impl Algebra {
    pub fn new() -> Self {
        Algebra::with_max_terms(DEFAULT_MAX_TERMS)
    }

    pub fn with_max_terms(max_terms: usize) -> Self {
        Algebra {
            max_terms,
            insert_memo: RefCell::default(),
            det_memo: RefCell::default(),
            mul_memo: RefCell::default(),
            star_memo: RefCell::default(),
        }
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_terms {
            Err(Error::ResourceLimit(format!("{n} terms exceed the limit of {}", self.max_terms)))
        } else {
            Ok(())
        }
    }

    /// Ordered expansion of `w · x` for an ordered word `w`.
    fn insert(&self, w: &Word, x: u8) -> Result<Rc<Expansion>> {
        match w.last() {
            None => return Ok(Rc::new(vec![(Word::from_slice(&[x]), ZPoly::one())])),
            Some(&y) if y <= x => {
                let mut v = w.clone();
                v.push(x);
                return Ok(Rc::new(vec![(v, ZPoly::one())]));
            }
            _ => {}
        }
        let key = (w.clone(), x);
        if let Some(r) = self.insert_memo.borrow().get(&key) {
            return Ok(r.clone());
        }
        let y = *w.last().unwrap();
        let prefix: Word = Word::from_slice(&w[..w.len() - 1]);
        let mut acc: HashMap<Word, ZPoly> = HashMap::new();
        for (c, a, b) in swap_rule(y, x) {
            let first = self.insert(&prefix, a)?;
            for (v, c1) in first.iter() {
                let coef = c.mul(c1)?;
                let second = self.insert(v, b)?;
                for (u, c2) in second.iter() {
                    accumulate(&mut acc, u, c2, &coef)?;
                }
            }
        }
        self.check_size(acc.len())?;
        let r = Rc::new(into_expansion(acc));
        self.insert_memo.borrow_mut().insert(key, r.clone());
        Ok(r)
    }

    /// Straightens `w · letters` (with `w` ordered) into ordered words.
    fn straighten(&self, w: &Word, letters: &[u8]) -> Result<HashMap<Word, ZPoly>> {
        let mut cur: HashMap<Word, ZPoly> = HashMap::new();
        cur.insert(w.clone(), ZPoly::one());
        for &x in letters {
            let mut next: HashMap<Word, ZPoly> = HashMap::new();
            for (v, c) in cur.iter() {
                for (u, d) in self.insert(v, x)?.iter() {
                    accumulate(&mut next, u, d, c)?;
                }
            }
            self.check_size(next.len())?;
            cur = next;
        }
        Ok(cur)
    }

    /// Reduction of an ordered word by the determinant relation, before the
    /// final division: returns `(1/c)(v - (v·D - c·w))`.
    fn det_step(&self, w: &Word) -> Result<Expansion> {
        let mut v = w.clone();
        for x in DET_LEAD {
            let pos = v.iter().position(|y| *y == x).expect("divisible word");
            v.remove(pos);
        }
        let mut acc: HashMap<Word, ZPoly> = HashMap::new();
        for (perm, inversions) in PERMUTATIONS {
            let letters = [letter(1, perm[0]), letter(2, perm[1]), letter(3, perm[2])];
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let coef = ZPoly::monomial(sign, 2 * inversions);
            for (u, c) in self.straighten(&v, &letters)? {
                accumulate(&mut acc, &u, &c, &coef)?;
            }
        }
        let lead = acc.remove(w).ok_or_else(|| Error::Precondition("determinant leading term missing".into()))?;
        let (lc, le) = lead
            .as_monomial()
            .filter(|(c, _)| *c == 1 || *c == -1)
            .ok_or_else(|| Error::Precondition("determinant leading coefficient is not a unit".into()))?;
        // w ≡ (1/c) (v - rest), rest = everything else in v·D
        let inv = ZPoly::monomial(lc, -le);
        let mut out: HashMap<Word, ZPoly> = HashMap::new();
        accumulate(&mut out, &v, &ZPoly::one(), &inv)?;
        let neg_inv = inv.scaled(-1, 0)?;
        for (u, c) in acc.iter() {
            accumulate(&mut out, u, c, &neg_inv)?;
        }
        Ok(into_expansion(out))
    }

    /// Full normal form of a single ordered word.
    fn det_reduce(&self, w: &Word) -> Result<Rc<Expansion>> {
        if !det_divisible(w) {
            return Ok(Rc::new(vec![(w.clone(), ZPoly::one())]));
        }
        if let Some(r) = self.det_memo.borrow().get(w) {
            return Ok(r.clone());
        }
        let mut stack: Vec<(Word, Expansion)> = vec![(w.clone(), self.det_step(w)?)];
        while let Some((top, raw)) = stack.last() {
            let pending = raw
                .iter()
                .find(|(t, _)| det_divisible(t) && !self.det_memo.borrow().contains_key(t))
                .map(|(t, _)| t.clone());
            if let Some(t) = pending {
                let step = self.det_step(&t)?;
                stack.push((t, step));
                continue;
            }
            let mut acc: HashMap<Word, ZPoly> = HashMap::new();
            {
                let memo = self.det_memo.borrow();
                for (t, c) in raw.iter() {
                    if det_divisible(t) {
                        for (u, d) in memo[t].iter() {
                            accumulate(&mut acc, u, d, c)?;
                        }
                    } else {
                        accumulate(&mut acc, t, &ZPoly::one(), c)?;
                    }
                }
            }
            self.check_size(acc.len())?;
            let key = top.clone();
            self.det_memo.borrow_mut().insert(key, Rc::new(into_expansion(acc)));
            stack.pop();
        }
        Ok(self.det_memo.borrow()[w].clone())
    }

    fn finish(&self, pbw: HashMap<Word, ZPoly>) -> Result<HashMap<Word, ZPoly>> {
        let mut acc: HashMap<Word, ZPoly> = HashMap::new();
        for (w, c) in pbw.iter() {
            for (u, d) in self.det_reduce(w)?.iter() {
                accumulate(&mut acc, u, d, c)?;
            }
        }
        self.check_size(acc.len())?;
        Ok(acc)
    }

    /// Normal form of `a · b` for a normal word `a` and any word `b`.
    fn mul_words(&self, a: &Word, b: &Word) -> Result<Rc<Expansion>> {
        if b.is_empty() {
            return Ok(Rc::new(vec![(a.clone(), ZPoly::one())]));
        }
        let key = (a.clone(), b.clone());
        if let Some(r) = self.mul_memo.borrow().get(&key) {
            return Ok(r.clone());
        }
        let pbw = self.straighten(a, b)?;
        let r = Rc::new(into_expansion(self.finish(pbw)?));
        self.mul_memo.borrow_mut().insert(key, r.clone());
        Ok(r)
    }

    /// Normal form of an arbitrary word.
    pub(crate) fn word_nf(&self, w: &[u8]) -> Result<Rc<Expansion>> {
        if is_ordered(w) && !det_divisible(w) {
            return Ok(Rc::new(vec![(Word::from_slice(w), ZPoly::one())]));
        }
        self.mul_words(&Word::new(), &Word::from_slice(w))
    }

    /// Straightened (quadratic-relations-only) form of an arbitrary word.
    pub(crate) fn word_pbw(&self, w: &[u8]) -> Result<Expansion> {
        Ok(into_expansion(self.straighten(&Word::new(), w)?))
    }

    /// Sums `Σ c_i · e_i`, grouping equal coefficients so the big-number work
    /// happens once per distinct scalar.
    fn combine(&self, items: impl Iterator<Item = (QScalar, Rc<Expansion>)>) -> Result<NCPoly> {
        let mut groups: HashMap<QScalar, HashMap<Word, ZPoly>> = HashMap::new();
        for (c, e) in items {
            if c.is_zero() {
                continue;
            }
            let g = groups.entry(c).or_default();
            for (w, z) in e.iter() {
                accumulate(g, w, z, &ZPoly::one())?;
            }
        }
        let mut keys: Vec<QScalar> = groups.keys().cloned().collect();
        keys.sort();
        let mut out = NCPoly::zero();
        let mut cache: HashMap<ZPoly, RatFunc> = HashMap::new();
        for c in keys {
            let g = &groups[&c];
            for (w, z) in g.iter() {
                let f = cache.entry(z.clone()).or_insert_with(|| z.to_ratfunc());
                out.add_term(w.clone(), c.mul_ratfunc(f));
            }
        }
        self.check_size(out.len())?;
        Ok(out)
    }

    /// Reduces arbitrary words to normal form.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut items = Vec::with_capacity(p.len());
        for (w, c) in p.terms() {
            items.push((c.clone(), self.word_nf(w)?));
        }
        self.combine(items.into_iter())
    }

    /// Product of two normal-form polynomials.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        let mut items = Vec::with_capacity(a.len() * b.len());
        for (wa, ca) in a.terms() {
            debug_assert!(is_ordered(wa));
            for (wb, cb) in b.terms() {
                items.push((ca.mul(cb), self.mul_words(wa, wb)?));
            }
        }
        self.combine(items.into_iter())
    }

    /// Product of several normal-form polynomials, left to right.
    pub fn product(&self, factors: &[&NCPoly]) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &NCPoly, n: u32) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `(u^i_j)^* = (-q)^{j-i}(u^{k1}_{l1} u^{k2}_{l2} - q u^{k1}_{l2} u^{k2}_{l1})`.
    fn star_letter(x: u8) -> Expansion {
        let (i, j) = (x / 3, x % 3);
        let rows: SmallVec<[u8; 2]> = (0..3).filter(|r| *r != i).collect();
        let cols: SmallVec<[u8; 2]> = (0..3).filter(|c| *c != j).collect();
        let e = j as i32 - i as i32;
        let sign: i128 = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let a = Word::from_slice(&[3 * rows[0] + cols[0], 3 * rows[1] + cols[1]]);
        let b = Word::from_slice(&[3 * rows[0] + cols[1], 3 * rows[1] + cols[0]]);
        vec![(a, ZPoly::monomial(sign, 2 * e)), (b, ZPoly::monomial(-sign, 2 * e + 2))]
    }

    fn star_word(&self, w: &Word) -> Result<Rc<Expansion>> {
        if w.is_empty() {
            return Ok(Rc::new(vec![(Word::new(), ZPoly::one())]));
        }
        if let Some(r) = self.star_memo.borrow().get(w) {
            return Ok(r.clone());
        }
        // (x_1 … x_n)^* = x_n^* · (x_1 … x_{n-1})^*
        let last = Algebra::star_letter(*w.last().unwrap());
        let rest = self.star_word(&Word::from_slice(&w[..w.len() - 1]))?;
        let mut acc: HashMap<Word, ZPoly> = HashMap::new();
        for (a, ca) in last.iter() {
            for (b, cb) in rest.iter() {
                let c = ca.mul(cb)?;
                for (u, d) in self.mul_words(a, b)?.iter() {
                    accumulate(&mut acc, u, d, &c)?;
                }
            }
        }
        self.check_size(acc.len())?;
        let r = Rc::new(into_expansion(acc));
        self.star_memo.borrow_mut().insert(w.clone(), r.clone());
        Ok(r)
    }

    /// The antilinear antimultiplicative involution. Coefficients are fixed:
    /// `q` is real and radical atoms are square roots of positive reals.
    pub fn star(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut items = Vec::with_capacity(p.len());
        for (w, c) in p.terms() {
            let nf = self.word_nf(w)?;
            for (u, z) in nf.iter() {
                items.push((c.mul_ratfunc(&z.to_ratfunc()), self.star_word(u)?));
            }
        }
        self.combine(items.into_iter())
    }

    /// `(z_i)^* = (u^3_i)^*`.
    pub fn z_star(&self, i: u8) -> Result<NCPoly> {
        self.star(&NCPoly::u(3, i))
    }

    /// `p_ij = (u^3_i)^* u^3_j`.
    pub fn p(&self, i: u8, j: u8) -> Result<NCPoly> {
        self.mul(&self.z_star(i)?, &NCPoly::u(3, j))
    }

    /// The quantum determinant `Σ_π (-q)^{l(π)} u^1_{π1} u^2_{π2} u^3_{π3}` as a raw
    /// (unreduced) polynomial.
    pub fn determinant_raw() -> NCPoly {
        let mut d = NCPoly::zero();
        for (perm, inv) in PERMUTATIONS {
            let w = Word::from_slice(&[letter(1, perm[0]), letter(2, perm[1]), letter(3, perm[2])]);
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            d.add_term(w, QScalar::q_pow(inv).mul(&QScalar::from(sign)));
        }
        d
    }

    /// Number of memoized entries (insertions, reductions, products, stars).
    pub fn cache_sizes(&self) -> [usize; 4] {
        [
            self.insert_memo.borrow().len(),
            self.det_memo.borrow().len(),
            self.mul_memo.borrow().len(),
            self.star_memo.borrow().len(),
        ]
    }
}

/// Permutations of {1,2,3} with their inversion counts.
pub(crate) const PERMUTATIONS: [([u8; 3], i32); 6] = [
    ([1, 2, 3], 0),
    ([1, 3, 2], 1),
    ([2, 1, 3], 1),
    ([2, 3, 1], 2),
    ([3, 1, 2], 2),
    ([3, 2, 1], 3),
];

/// Degree-lexicographic order on words with the row-major letter order.
pub fn deglex_cmp(a: &[u8], b: &[u8]) -> core::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests;
