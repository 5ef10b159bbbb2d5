//! Dolbeault operators on CP²_q, the q-wedge of (0,1)-forms, the involution
//! `J` and the decomposition of 1-forms along `dp_ij`.
//!
//! Forms are vectors of elements of A(SU_q(3)): a (1,0)- or (0,1)-form is a
//! pair, a (0,0)- or (0,2)-form a single element.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly, ZeroVerdict};
use crate::qscalar::{q_int, QScalar};
use crate::uq::{act_l, UqElement, UqGen};

pub type Pair = [NCPoly; 2];

fn s(half: i32) -> QScalar {
    QScalar::q_half_pow(half)
}

fn l(alg: &Algebra, w: &[UqGen], a: &NCPoly) -> Result<NCPoly> {
    act_l(alg, &UqElement::word(w), a)
}

/// `∂a = (q^{-1/2} L_{E_2} a, -q^{1/2} L_{E_1 E_2} a)`.
pub fn del(alg: &Algebra, a: &NCPoly) -> Result<Pair> {
    Ok([
        l(alg, &[UqGen::E2], a)?.scale(&s(-1)),
        l(alg, &[UqGen::E1, UqGen::E2], a)?.scale(&s(1).neg()),
    ])
}

/// `∂̄a = q^{-3/2} (-q^{-1/2} L_{F_1 F_2} a, q^{1/2} L_{F_2} a)`.
pub fn dbar(alg: &Algebra, a: &NCPoly) -> Result<Pair> {
    Ok([
        l(alg, &[UqGen::F1, UqGen::F2], a)?.scale(&s(-4).neg()),
        l(alg, &[UqGen::F2], a)?.scale(&s(-2)),
    ])
}

/// `v ∧_q v' = (2/[2]) (q^{1/2} v₊ v'₋ - q^{-1/2} v₋ v'₊)`.
pub fn wedge01(alg: &Algebra, v: &Pair, w: &Pair) -> Result<NCPoly> {
    let c = QScalar::from(2).div(&q_int(2))?;
    let x = alg.mul(&v[0], &w[1])?.scale(&s(1));
    let y = alg.mul(&v[1], &w[0])?.scale(&s(-1));
    Ok(x.sub(&y).scale(&c))
}

pub fn scale_pair(alg: &Algebra, a: &NCPoly, v: &Pair) -> Result<Pair> {
    Ok([alg.mul(a, &v[0])?, alg.mul(a, &v[1])?])
}

pub fn add_pair(v: &Pair, w: &Pair) -> Pair {
    [v[0].add(&w[0]), v[1].add(&w[1])]
}

pub fn zero_pair() -> Pair {
    [NCPoly::zero(), NCPoly::zero()]
}

/// A 1-form: the (1,0) part from `∂` and the (0,1) part from `∂̄`.
#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    pub holo: Pair,
    pub antiholo: Pair,
}

impl OneForm {
    pub fn zero() -> Self {
        OneForm { holo: zero_pair(), antiholo: zero_pair() }
    }

    /// `da = ∂a + ∂̄a`.
    pub fn exact(alg: &Algebra, a: &NCPoly) -> Result<Self> {
        Ok(OneForm { holo: del(alg, a)?, antiholo: dbar(alg, a)? })
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        OneForm { holo: add_pair(&self.holo, &other.holo), antiholo: add_pair(&self.antiholo, &other.antiholo) }
    }

    pub fn left_mul(&self, alg: &Algebra, a: &NCPoly) -> Result<OneForm> {
        Ok(OneForm { holo: scale_pair(alg, a, &self.holo)?, antiholo: scale_pair(alg, a, &self.antiholo)? })
    }

    pub fn is_zero(&self) -> bool {
        self.holo.iter().chain(self.antiholo.iter()).all(|x| x.is_zero())
    }
}

/// An antiholomorphic form `(a, v, b)` of degrees (0,0), (0,1), (0,2).
#[derive(Clone, Debug, PartialEq)]
pub struct AntiholoForm {
    pub a: NCPoly,
    pub v: Pair,
    pub b: NCPoly,
}

impl AntiholoForm {
    /// `ωω' = (aa', av' + va', ab' + ba' + v ∧_q v')`.
    pub fn mul(&self, alg: &Algebra, o: &AntiholoForm) -> Result<AntiholoForm> {
        let v = add_pair(&scale_pair(alg, &self.a, &o.v)?, &[alg.mul(&self.v[0], &o.a)?, alg.mul(&self.v[1], &o.a)?]);
        let b = alg.mul(&self.a, &o.b)?.add(&alg.mul(&self.b, &o.a)?).add(&wedge01(alg, &self.v, &o.v)?);
        Ok(AntiholoForm { a: alg.mul(&self.a, &o.a)?, v, b })
    }
}

/// Coefficients of `ω = Σ (a_ij + b_ij) dp_ij`, indexed `[i-1][j-1]`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub a: [[NCPoly; 3]; 3],
    pub b: [[NCPoly; 3]; 3],
}

/// The closed-form coefficients
/// `a_ij = -q^{3-2j} {q² v₁ (u²_j)^* + v₂ (u¹_j)^*} u³_i` and
/// `b_ij = q^{7-2j} {-q^{1/2} w₁ (u³_j)^* u¹_i + q^{-1/2} w₂ (u³_j)^* u²_i}`.
/// With the exponents `1-2j` and `5-2j` instead, the recombination returns
/// `q^{-2} ω`.
pub fn decompose_one_form(alg: &Algebra, w: &OneForm) -> Result<Decomposition> {
    let [v1, v2] = &w.holo;
    let [w1, w2] = &w.antiholo;
    let mut a: [[NCPoly; 3]; 3] = Default::default();
    let mut b: [[NCPoly; 3]; 3] = Default::default();
    for j in 1..=3u8 {
        let u1s = alg.star(&NCPoly::u(1, j))?;
        let u2s = alg.star(&NCPoly::u(2, j))?;
        let u3s = alg.star(&NCPoly::u(3, j))?;
        let inner = alg.mul(v1, &u2s)?.scale(&QScalar::q_pow(2)).add(&alg.mul(v2, &u1s)?);
        let w1u = alg.mul(w1, &u3s)?;
        let w2u = alg.mul(w2, &u3s)?;
        for i in 1..=3u8 {
            let ca = QScalar::q_pow(3 - 2 * j as i32).neg();
            a[i as usize - 1][j as usize - 1] = alg.mul(&inner, &NCPoly::u(3, i))?.scale(&ca);
            let x = alg.mul(&w1u, &NCPoly::u(1, i))?.scale(&s(1).neg());
            let y = alg.mul(&w2u, &NCPoly::u(2, i))?.scale(&s(-1));
            b[i as usize - 1][j as usize - 1] = x.add(&y).scale(&QScalar::q_pow(7 - 2 * j as i32));
        }
    }
    Ok(Decomposition { a, b })
}

/// `Σ_ij c_ij dp_ij` for a 3×3 family of coefficients.
pub fn recombine(alg: &Algebra, c: &[[NCPoly; 3]; 3]) -> Result<OneForm> {
    let mut out = OneForm::zero();
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let coef = &c[i as usize - 1][j as usize - 1];
            if coef.is_zero() {
                continue;
            }
            let dp = OneForm::exact(alg, &alg.p(i, j)?)?;
            out = out.add(&dp.left_mul(alg, coef)?);
        }
    }
    Ok(out)
}

/// `ω - Σ (a_ij + b_ij) dp_ij`, which the closed formulas make zero.
pub fn reconstruction_residual(alg: &Algebra, w: &OneForm) -> Result<OneForm> {
    let d = decompose_one_form(alg, w)?;
    let mut c: [[NCPoly; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = d.a[i][j].add(&d.b[i][j]);
        }
    }
    let r = recombine(alg, &c)?;
    Ok(OneForm {
        holo: [w.holo[0].sub(&r.holo[0]), w.holo[1].sub(&r.holo[1])],
        antiholo: [w.antiholo[0].sub(&r.antiholo[0]), w.antiholo[1].sub(&r.antiholo[1])],
    })
}

/// `∂̄(∂̄a)`, with `∂̄a` first written as `Σ b_ij ∂̄p_ij` and then
/// `∂̄(Σ b_ij ∂̄p_ij) := Σ ∂̄b_ij ∧_q ∂̄p_ij`.
pub fn dbar_squared(alg: &Algebra, a: &NCPoly) -> Result<NCPoly> {
    let w = OneForm { holo: zero_pair(), antiholo: dbar(alg, a)? };
    let d = decompose_one_form(alg, &w)?;
    // the presentation must reproduce ∂̄a with no (1,0) part
    let r = recombine(alg, &d.b)?;
    if r != w {
        return Err(Error::NoPresentation(format!("∂̄ of {a} is not Σ b_ij ∂̄p_ij")));
    }
    let mut out = NCPoly::zero();
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let c = &d.b[i as usize - 1][j as usize - 1];
            if c.is_zero() {
                continue;
            }
            let dp = dbar(alg, &alg.p(i, j)?)?;
            out = out.add(&wedge01(alg, &dbar(alg, c)?, &dp)?);
        }
    }
    Ok(out)
}

pub fn dbar2_zero_check(alg: &Algebra, a: &NCPoly) -> Result<ZeroVerdict> {
    let x = dbar_squared(alg, a)?;
    alg.equals_zero(&x, x.degree())
}

/// Twice the spin: 0, 1 or 2.
pub type Spin2 = u8;

/// `Ja = a^*`, `J(v₁,v₂) = (-q^{-1/2} v₂^*, q^{1/2} v₁^*)`,
/// `J(w₁,w₂,w₃) = (-q^{-1} w₃^*, w₂^*, -q w₁^*)`.
pub fn j_involution(alg: &Algebra, c: &[NCPoly], spin2: Spin2) -> Result<Vec<NCPoly>> {
    let expected = spin2 as usize + 1;
    if c.len() != expected || spin2 > 2 {
        return Err(Error::Arity { expected, got: c.len() });
    }
    let st = |x: &NCPoly| alg.star(x);
    Ok(match spin2 {
        0 => alloc::vec![st(&c[0])?],
        1 => alloc::vec![st(&c[1])?.scale(&s(-1).neg()), st(&c[0])?.scale(&s(1))],
        _ => alloc::vec![
            st(&c[2])?.scale(&QScalar::q_pow(-1).neg()),
            st(&c[1])?,
            st(&c[0])?.scale(&QScalar::q_pow(1).neg()),
        ],
    })
}

/// Forms of bidegree `(i, j)` with `i, j ≤ 2` outside the middle (1,1)
/// slot, stored by bidegree.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BiForm {
    pub parts: alloc::collections::BTreeMap<(u8, u8), Vec<NCPoly>>,
}

fn spin_of(deg: (u8, u8)) -> Result<Spin2> {
    match deg {
        (0, 0) | (2, 0) | (0, 2) => Ok(0),
        (1, 0) | (0, 1) => Ok(1),
        other => Err(Error::Precondition(format!("bidegree {other:?} is not supported"))),
    }
}

/// `(ω^⋆)_{i,j} = (-1)^i J(ω_{j,i})`.
pub fn star_form(alg: &Algebra, w: &BiForm) -> Result<BiForm> {
    let mut out = BiForm::default();
    for (&(j, i), c) in &w.parts {
        let mut v = j_involution(alg, c, spin_of((j, i))?)?;
        if i % 2 == 1 {
            v = v.iter().map(|x| x.neg()).collect();
        }
        out.parts.insert((i, j), v);
    }
    Ok(out)
}
