//! Constructions on CP²_q: invariance, monopole vectors Ψ_N, projections
//! P_N = Ψ_N Ψ_N^†, the Haar state, the matrices σ^N and the equivariant
//! pairing with the Haar state.

mod haar;
mod sigma;

pub use haar::HaarContext;
pub use sigma::{action_matrix, check_covariance, equivariant_ch0, mat_mul, modular_element, sigma_matrix, QMatrix};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ncalg::{Algebra, NCPoly, Word, ZeroVerdict};
use crate::qscalar::{q_trinomial, QScalar, RatFunc};
use crate::uq::{act_right, UqElement, UqGen};

/// `r_N = (|N|+1)(|N|+2)/2`.
pub fn rank(n: i32) -> usize {
    let m = n.unsigned_abs() as usize;
    (m + 1) * (m + 2) / 2
}

/// Exponent triples `(j,k,l)` with `j+k+l = m`, lexicographically descending.
pub fn index_set(m: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for j in (0..=m).rev() {
        for k in (0..=m - j).rev() {
            out.push([j, k, m - j - k]);
        }
    }
    out
}

/// The column vector Ψ_N. Component `a` is `coefficients[a] · monomials[a]`,
/// where the monomial is radical-free and in normal form.
#[derive(Clone, Debug)]
pub struct MonopoleVector {
    pub charge: i32,
    pub index: Vec<[u32; 3]>,
    pub coefficients: Vec<QScalar>,
    pub monomials: Vec<NCPoly>,
}

impl MonopoleVector {
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn component(&self, a: usize) -> NCPoly {
        self.monomials[a].scale(&self.coefficients[a])
    }

    pub fn components(&self) -> Vec<NCPoly> {
        (0..self.len()).map(|a| self.component(a)).collect()
    }
}

/// Components `ψ_{j,k,l}`:
/// `√[j,k,l]! (z_3^*)^l (z_2^*)^k (z_1^*)^j` for `N > 0` and
/// `q^{-N+j-l} √[j,k,l]! z_1^j z_2^k z_3^l` for `N < 0`.
pub fn build_psi(alg: &Algebra, n: i32) -> Result<MonopoleVector> {
    if n == 0 {
        return Ok(MonopoleVector {
            charge: 0,
            index: alloc::vec![[0, 0, 0]],
            coefficients: alloc::vec![QScalar::one()],
            monomials: alloc::vec![NCPoly::one()],
        });
    }
    let m = n.unsigned_abs();
    let index = index_set(m);
    let zs: Vec<NCPoly> = (1..=3).map(|i| alg.z_star(i)).collect::<Result<_>>()?;
    let mut coefficients = Vec::with_capacity(index.len());
    let mut monomials = Vec::with_capacity(index.len());
    for &[j, k, l] in &index {
        let root = q_trinomial(j as i64, k as i64, l as i64)?.sqrt()?;
        if n > 0 {
            let mut mono = NCPoly::one();
            for (i, e) in [(2usize, l), (1, k), (0, j)] {
                for _ in 0..e {
                    mono = alg.mul(&mono, &zs[i])?;
                }
            }
            coefficients.push(root);
            monomials.push(mono);
        } else {
            let mut w = Word::new();
            for (col, e) in [(1u8, j), (2, k), (3, l)] {
                for _ in 0..e {
                    w.push(crate::ncalg::letter(3, col));
                }
            }
            coefficients.push(root.mul(&QScalar::q_pow(-n + j as i32 - l as i32)));
            monomials.push(NCPoly::monomial(w, QScalar::one()));
        }
    }
    Ok(MonopoleVector { charge: n, index, coefficients, monomials })
}

/// `Σ_a ψ_a^* ψ_a`, reduced.
pub fn gram(alg: &Algebra, psi: &MonopoleVector) -> Result<NCPoly> {
    let mut acc = NCPoly::zero();
    for a in 0..psi.len() {
        let m = &psi.monomials[a];
        let c = psi.coefficients[a].mul(&psi.coefficients[a]);
        acc = acc.add(&alg.mul(&alg.star(m)?, m)?.scale(&c));
    }
    Ok(acc)
}

/// Zero test of `Ψ_N^† Ψ_N - 1`.
pub fn gram_identity(alg: &Algebra, n: i32, degree_bound: usize) -> Result<ZeroVerdict> {
    let psi = build_psi(alg, n)?;
    let g = gram(alg, &psi)?.sub(&NCPoly::one());
    alg.equals_zero(&g, degree_bound.max(g.degree()))
}

/// `P_N = Ψ_N Ψ_N^†` with certification flags.
#[derive(Clone, Debug)]
pub struct ProjectionMatrix {
    pub charge: i32,
    pub entries: Vec<Vec<NCPoly>>,
    pub idempotent_checked: bool,
    pub selfadjoint_checked: bool,
}

impl ProjectionMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn trace(&self) -> NCPoly {
        let mut t = NCPoly::zero();
        for (a, row) in self.entries.iter().enumerate() {
            t = t.add(&row[a]);
        }
        t
    }

    /// `P² = P`, entry by entry, with products in normal form.
    pub fn check_idempotent(&mut self, alg: &Algebra) -> Result<bool> {
        let r = self.size();
        for a in 0..r {
            for b in 0..r {
                let mut acc = NCPoly::zero();
                for c in 0..r {
                    acc = acc.add(&alg.mul(&self.entries[a][c], &self.entries[c][b])?);
                }
                if acc != self.entries[a][b] {
                    return Ok(false);
                }
            }
        }
        self.idempotent_checked = true;
        Ok(true)
    }

    /// `(P_{ab})^* = P_{ba}`.
    pub fn check_selfadjoint(&mut self, alg: &Algebra) -> Result<bool> {
        let r = self.size();
        for a in 0..r {
            for b in a..r {
                if alg.star(&self.entries[a][b])? != self.entries[b][a] {
                    return Ok(false);
                }
            }
        }
        self.selfadjoint_checked = true;
        Ok(true)
    }
}

pub fn build_projection(alg: &Algebra, psi: &MonopoleVector) -> Result<ProjectionMatrix> {
    let r = psi.len();
    let comps = psi.components();
    let stars: Vec<NCPoly> = comps.iter().map(|c| alg.star(c)).collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(r);
    for a in 0..r {
        let mut row = Vec::with_capacity(r);
        for b in 0..r {
            row.push(alg.mul(&comps[a], &stars[b])?);
        }
        entries.push(row);
    }
    Ok(ProjectionMatrix { charge: psi.charge, entries, idempotent_checked: false, selfadjoint_checked: false })
}

/// Generators of the right U_q(u(2)) action used for invariance tests.
pub fn invariance_generators() -> Vec<UqElement> {
    use UqGen::*;
    [&[K1][..], &[K1Inv], &[E1], &[F1], &[K1, K2, K2], &[K1Inv, K2Inv, K2Inv]]
        .iter()
        .map(|w| UqElement::word(w))
        .collect()
}

/// `a ◁ x = ε(x) a` for the generators of U_q(u(2)).
pub fn is_invariant(alg: &Algebra, a: &NCPoly) -> Result<bool> {
    let a = alg.normal_form(a)?;
    for x in invariance_generators() {
        let lhs = act_right(alg, &a, &x)?;
        if lhs != a.scale(&x.counit()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Words in the nine symbols `p_ij`; a symbol is the pair `(i, j)`.
pub type PWord = Vec<(u8, u8)>;

fn p_words(max_len: usize) -> Vec<PWord> {
    let mut out = alloc::vec![PWord::new()];
    let mut layer = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 1..=3u8 {
                for j in 1..=3u8 {
                    let mut v = w.clone();
                    v.push((i, j));
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Normal form of a product of `p_ij` symbols.
pub fn eval_p_word(alg: &Algebra, w: &[(u8, u8)]) -> Result<NCPoly> {
    let mut acc = NCPoly::one();
    for (i, j) in w {
        acc = alg.mul(&acc, &alg.p(*i, *j)?)?;
    }
    Ok(acc)
}

/// Index of normal-form words, shared by the linear solves of this module.
#[derive(Default)]
pub(crate) struct WordIndex {
    map: BTreeMap<Word, usize>,
}

impl WordIndex {
    pub(crate) fn id(&mut self, w: &Word) -> usize {
        let n = self.map.len();
        *self.map.entry(w.clone()).or_insert(n)
    }

    /// Coordinates of a radical-free polynomial.
    pub(crate) fn vector(&mut self, p: &NCPoly) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (w, c) in p.terms() {
            let r = c
                .as_ratfunc()
                .ok_or_else(|| Error::Precondition(format!("coefficient with radicals: {c}")))?;
            v.insert(self.id(w), r);
        }
        Ok(v)
    }
}

/// Splits a polynomial by the radical part of its coefficients:
/// `p = Σ_r ρ_r · p_r` with `ρ_r` a product of radical atoms and `p_r`
/// radical-free.
pub fn split_radicals(p: &NCPoly) -> Vec<(QScalar, NCPoly)> {
    let mut groups: BTreeMap<QScalar, NCPoly> = BTreeMap::new();
    for (w, c) in p.terms() {
        for (rad, f) in c.parts() {
            let mut root = QScalar::one();
            for atom in rad.atoms() {
                root = root.mul(&QScalar::from(atom.clone()).sqrt().unwrap_or_else(|_| QScalar::one()));
            }
            let e = groups.entry(root).or_insert_with(NCPoly::zero);
            e.add_term(w.clone(), QScalar::from(f.clone()));
        }
    }
    groups.into_iter().filter(|(_, p)| !p.is_zero()).collect()
}

/// Expresses an invariant `a` as a combination of `p`-words of length at most
/// `max_len`. Returns `(word, coefficient)` pairs with nonzero coefficients.
pub fn balanced_to_p(alg: &Algebra, a: &NCPoly, max_len: usize) -> Result<Vec<(PWord, RatFunc)>> {
    let a = alg.normal_form(a)?;
    let mut idx = WordIndex::default();
    let mut ech = Echelon::new();
    let words = p_words(max_len);
    for w in &words {
        let v = idx.vector(&eval_p_word(alg, w)?)?;
        ech.insert(v);
    }
    let target = idx.vector(&a)?;
    let combo = ech
        .solve(&target)
        .ok_or_else(|| Error::NotInSpan(format!("{a} is not a combination of p-words of length <= {max_len}")))?;
    Ok(combo.into_iter().map(|(g, c)| (words[g].clone(), c)).collect())
}

/// Recombines the output of [`balanced_to_p`].
pub fn p_combination(alg: &Algebra, terms: &[(PWord, RatFunc)]) -> Result<NCPoly> {
    let mut acc = NCPoly::zero();
    for (w, c) in terms {
        acc = acc.add(&eval_p_word(alg, w)?.scale(&QScalar::from(c.clone())));
    }
    Ok(acc)
}
