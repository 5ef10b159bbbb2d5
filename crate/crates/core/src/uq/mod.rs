//! U_q(su(3)) as formal linear combinations of words in `K_i^{±1}, E_i, F_i`,
//! and its actions on A(SU_q(3)).
//!
//! Relations of U_q(su(3)) are not rewritten; elements act through their word
//! representatives. Consecutive `K` letters are collected into
//! `K_1^a K_2^b`, so `K_i K_i^{-1}` cancels on construction.

pub mod suite;
pub mod text;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use smallvec::SmallVec;

use crate::error::Result;
use crate::ncalg::{Algebra, NCPoly, Word};
use crate::qscalar::QScalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum UqGen {
    K1,
    K1Inv,
    K2,
    K2Inv,
    E1,
    E2,
    F1,
    F2,
}

impl UqGen {
    pub const ALL: [UqGen; 8] =
        [UqGen::K1, UqGen::K1Inv, UqGen::K2, UqGen::K2Inv, UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2];

    pub fn name(self) -> &'static str {
        match self {
            UqGen::K1 => "K1",
            UqGen::K1Inv => "K1inv",
            UqGen::K2 => "K2",
            UqGen::K2Inv => "K2inv",
            UqGen::E1 => "E1",
            UqGen::E2 => "E2",
            UqGen::F1 => "F1",
            UqGen::F2 => "F2",
        }
    }

    pub fn from_name(s: &str) -> Option<UqGen> {
        UqGen::ALL.iter().copied().find(|g| g.name() == s)
    }

    /// Index `i ∈ {1, 2}` of the generator.
    pub fn index(self) -> u8 {
        match self {
            UqGen::K1 | UqGen::K1Inv | UqGen::E1 | UqGen::F1 => 1,
            _ => 2,
        }
    }

    fn is_k(self) -> bool {
        matches!(self, UqGen::K1 | UqGen::K1Inv | UqGen::K2 | UqGen::K2Inv)
    }

    /// Exponent pair `(a, b)` of `K_1^a K_2^b` for a `K` letter.
    fn k_exponents(self) -> (i32, i32) {
        match self {
            UqGen::K1 => (1, 0),
            UqGen::K1Inv => (-1, 0),
            UqGen::K2 => (0, 1),
            UqGen::K2Inv => (0, -1),
            _ => (0, 0),
        }
    }

    fn k(i: u8, inverse: bool) -> UqGen {
        match (i, inverse) {
            (1, false) => UqGen::K1,
            (1, true) => UqGen::K1Inv,
            (_, false) => UqGen::K2,
            (_, true) => UqGen::K2Inv,
        }
    }
}

pub type UqWord = SmallVec<[UqGen; 8]>;

/// Collects runs of commuting `K` letters into `K_1^a K_2^b`.
pub fn canonical_word(w: &[UqGen]) -> UqWord {
    let mut out = UqWord::new();
    let mut i = 0;
    while i < w.len() {
        if !w[i].is_k() {
            out.push(w[i]);
            i += 1;
            continue;
        }
        let (mut a, mut b) = (0, 0);
        while i < w.len() && w[i].is_k() {
            let (x, y) = w[i].k_exponents();
            a += x;
            b += y;
            i += 1;
        }
        for _ in 0..a.abs() {
            out.push(UqGen::k(1, a < 0));
        }
        for _ in 0..b.abs() {
            out.push(UqGen::k(2, b < 0));
        }
    }
    out
}

/// Formal linear combination of generator words.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UqElement {
    terms: BTreeMap<UqWord, QScalar>,
}

/// `Δ(x) = Σ c · left ⊗ right`.
pub type CoproductExpansion = Vec<(UqWord, UqWord, QScalar)>;

impl UqElement {
    pub fn zero() -> Self {
        UqElement::default()
    }

    pub fn one() -> Self {
        UqElement::word(&[])
    }

    pub fn word(w: &[UqGen]) -> Self {
        let mut e = UqElement::zero();
        e.add_term(w, QScalar::one());
        e
    }

    pub fn gen(g: UqGen) -> Self {
        UqElement::word(&[g])
    }

    pub fn add_term(&mut self, w: &[UqGen], c: QScalar) {
        if c.is_zero() {
            return;
        }
        let w = canonical_word(w);
        let e = self.terms.entry(w.clone()).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqWord, &QScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UqElement) -> UqElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UqElement) -> UqElement {
        self.add(&other.scale(&QScalar::from(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> UqElement {
        let mut out = UqElement::zero();
        for (w, x) in &self.terms {
            out.add_term(w, x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(&w, ca.mul(cb));
            }
        }
        out
    }

    pub fn counit(&self) -> QScalar {
        let mut out = QScalar::zero();
        for (w, c) in &self.terms {
            if w.iter().all(|g| g.is_k()) {
                out = out.add(c);
            }
        }
        out
    }

    fn map_antihom(&self, f: impl Fn(UqGen) -> (UqGen, QScalar)) -> UqElement {
        let mut out = UqElement::zero();
        for (w, c) in &self.terms {
            let mut coef = c.clone();
            let mut word = UqWord::new();
            for g in w.iter().rev() {
                let (h, x) = f(*g);
                coef = coef.mul(&x);
                word.push(h);
            }
            out.add_term(&word, coef);
        }
        out
    }

    /// `S(K) = K^{-1}`, `S(E) = -q E`, `S(F) = -q^{-1} F`, antimultiplicative.
    pub fn antipode(&self) -> UqElement {
        self.map_antihom(|g| match g {
            UqGen::E1 | UqGen::E2 => (g, QScalar::q_pow(1).neg()),
            UqGen::F1 | UqGen::F2 => (g, QScalar::q_pow(-1).neg()),
            k => (inverse_k(k), QScalar::one()),
        })
    }

    /// `S^{-1}(K) = K^{-1}`, `S^{-1}(E) = -q^{-1} E`, `S^{-1}(F) = -q F`.
    pub fn antipode_inv(&self) -> UqElement {
        self.map_antihom(|g| match g {
            UqGen::E1 | UqGen::E2 => (g, QScalar::q_pow(-1).neg()),
            UqGen::F1 | UqGen::F2 => (g, QScalar::q_pow(1).neg()),
            k => (inverse_k(k), QScalar::one()),
        })
    }

    /// `Δ(K) = K ⊗ K`, `Δ(E) = E ⊗ K + K^{-1} ⊗ E`, `Δ(F) = F ⊗ K + K^{-1} ⊗ F`.
    pub fn coproduct(&self) -> CoproductExpansion {
        let mut acc: BTreeMap<(UqWord, UqWord), QScalar> = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut cur: Vec<(UqWord, UqWord, QScalar)> = alloc::vec![(UqWord::new(), UqWord::new(), c.clone())];
            for g in w.iter() {
                let mut next = Vec::with_capacity(cur.len() * 2);
                for (a, b, x) in &cur {
                    for (l, r) in gen_coproduct(*g) {
                        let mut a2 = a.clone();
                        a2.push(l);
                        let mut b2 = b.clone();
                        b2.push(r);
                        next.push((a2, b2, x.clone()));
                    }
                }
                cur = next;
            }
            for (a, b, x) in cur {
                let key = (canonical_word(&a), canonical_word(&b));
                let e = acc.entry(key.clone()).or_default();
                *e = e.add(&x);
                if e.is_zero() {
                    acc.remove(&key);
                }
            }
        }
        acc.into_iter().map(|((a, b), c)| (a, b, c)).collect()
    }

    /// Applies `f` to every word (as a linear map).
    pub fn apply_words(&self, mut f: impl FnMut(&UqWord) -> Result<NCPoly>) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out = out.add(&f(w)?.scale(c));
        }
        Ok(out)
    }
}

fn inverse_k(g: UqGen) -> UqGen {
    match g {
        UqGen::K1 => UqGen::K1Inv,
        UqGen::K1Inv => UqGen::K1,
        UqGen::K2 => UqGen::K2Inv,
        UqGen::K2Inv => UqGen::K2,
        other => other,
    }
}

fn gen_coproduct(g: UqGen) -> SmallVec<[(UqGen, UqGen); 2]> {
    let mut out = SmallVec::new();
    match g {
        UqGen::E1 | UqGen::E2 | UqGen::F1 | UqGen::F2 => {
            let i = g.index();
            out.push((g, UqGen::k(i, false)));
            out.push((UqGen::k(i, true), g));
        }
        k => out.push((k, k)),
    }
    out
}

/// How a single generator acts on a single letter `u^j_k`: a power of
/// `q^{1/2}` for `K`s, a replacement letter (or zero) for `E`, `F`.
enum LetterAction {
    Weight(i32),
    Letter(Option<u8>),
}

fn delta(a: u8, b: u8) -> i32 {
    (a == b) as i32
}

/// `K_i ▷ u^j_k = q^{(δ_{i+1,k} - δ_{i,k})/2} u^j_k`, `E_i ▷ u^j_k = δ_{i,k} u^j_{i+1}`,
/// `F_i ▷ u^j_k = δ_{i+1,k} u^j_i`.
fn left_on_letter(g: UqGen, x: u8) -> LetterAction {
    let (j, k) = (x / 3 + 1, x % 3 + 1);
    let i = g.index();
    match g {
        UqGen::K1 | UqGen::K2 => LetterAction::Weight(delta(i + 1, k) - delta(i, k)),
        UqGen::K1Inv | UqGen::K2Inv => LetterAction::Weight(delta(i, k) - delta(i + 1, k)),
        UqGen::E1 | UqGen::E2 => LetterAction::Letter((k == i).then(|| 3 * (j - 1) + i)),
        UqGen::F1 | UqGen::F2 => LetterAction::Letter((k == i + 1).then(|| 3 * (j - 1) + (i - 1))),
    }
}

/// `u^j_k ◁ K_i = q^{(δ_{i+1,j} - δ_{i,j})/2} u^j_k`, `u^j_k ◁ E_i = δ_{i+1,j} u^i_k`,
/// `u^j_k ◁ F_i = δ_{i,j} u^{i+1}_k`.
fn right_on_letter(g: UqGen, x: u8) -> LetterAction {
    let (j, k) = (x / 3 + 1, x % 3 + 1);
    let i = g.index();
    match g {
        UqGen::K1 | UqGen::K2 => LetterAction::Weight(delta(i + 1, j) - delta(i, j)),
        UqGen::K1Inv | UqGen::K2Inv => LetterAction::Weight(delta(i, j) - delta(i + 1, j)),
        UqGen::E1 | UqGen::E2 => LetterAction::Letter((j == i + 1).then(|| 3 * (i - 1) + (k - 1))),
        UqGen::F1 | UqGen::F2 => LetterAction::Letter((j == i).then(|| 3 * i + (k - 1))),
    }
}

fn weight(f: fn(UqGen, u8) -> LetterAction, g: UqGen, x: u8) -> i32 {
    match f(g, x) {
        LetterAction::Weight(e) => e,
        LetterAction::Letter(_) => 0,
    }
}

/// One generator acting on one word through the coproduct. Both actions use
/// the same leg order: `g·(ab) = (g₍₁₎·a)(g₍₂₎·b)`.
fn gen_on_word(f: fn(UqGen, u8) -> LetterAction, g: UqGen, w: &[u8]) -> NCPoly {
    let mut out = NCPoly::zero();
    if g.is_k() {
        let e: i32 = w.iter().map(|x| weight(f, g, *x)).sum();
        out.add_term(Word::from_slice(w), QScalar::q_half_pow(e));
        return out;
    }
    let i = g.index();
    let (k, kinv) = (UqGen::k(i, false), UqGen::k(i, true));
    for pos in 0..w.len() {
        let LetterAction::Letter(Some(y)) = f(g, w[pos]) else { continue };
        let e: i32 = w[..pos].iter().map(|x| weight(f, kinv, *x)).sum::<i32>()
            + w[pos + 1..].iter().map(|x| weight(f, k, *x)).sum::<i32>();
        let mut u = Word::from_slice(w);
        u[pos] = y;
        out.add_term(u, QScalar::q_half_pow(e));
    }
    out
}

fn gen_on_poly(alg: &Algebra, f: fn(UqGen, u8) -> LetterAction, g: UqGen, a: &NCPoly) -> Result<NCPoly> {
    let mut raw = NCPoly::zero();
    for (w, c) in a.terms() {
        raw = raw.add(&gen_on_word(f, g, w).scale(c));
    }
    alg.normal_form(&raw)
}

/// `x ▷ a`, with `(xy) ▷ a = x ▷ (y ▷ a)`.
pub fn act_left(alg: &Algebra, x: &UqElement, a: &NCPoly) -> Result<NCPoly> {
    x.apply_words(|w| {
        let mut cur = a.clone();
        for g in w.iter().rev() {
            cur = gen_on_poly(alg, left_on_letter, *g, &cur)?;
        }
        Ok(cur)
    })
}

/// `a ◁ x`, with `a ◁ (xy) = (a ◁ x) ◁ y`.
pub fn act_right(alg: &Algebra, a: &NCPoly, x: &UqElement) -> Result<NCPoly> {
    x.apply_words(|w| {
        let mut cur = a.clone();
        for g in w.iter() {
            cur = gen_on_poly(alg, right_on_letter, *g, &cur)?;
        }
        Ok(cur)
    })
}

/// `L_x a = a ◁ S^{-1}(x)`.
pub fn act_l(alg: &Algebra, x: &UqElement, a: &NCPoly) -> Result<NCPoly> {
    act_right(alg, a, &x.antipode_inv())
}

/// Left weight exponents of an ordered word: `K_i ▷ w = q^{e_i / 2} w`.
pub fn left_weight(w: &[u8]) -> [i32; 2] {
    [
        w.iter().map(|x| weight(left_on_letter, UqGen::K1, *x)).sum(),
        w.iter().map(|x| weight(left_on_letter, UqGen::K2, *x)).sum(),
    ]
}

/// Right weight exponents: `w ◁ K_i = q^{e_i / 2} w`.
pub fn right_weight(w: &[u8]) -> [i32; 2] {
    [
        w.iter().map(|x| weight(right_on_letter, UqGen::K1, *x)).sum(),
        w.iter().map(|x| weight(right_on_letter, UqGen::K2, *x)).sum(),
    ]
}

#[cfg(test)]
mod tests;
