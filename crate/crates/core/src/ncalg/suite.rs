//! The defining relations of A(SU_q(3)) written out term by term and checked
//! against the normal form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{letter, Algebra, NCPoly, Word};
use crate::error::Result;
use crate::qscalar::QScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: &'static str,
    pub name: String,
    pub holds: bool,
}

fn mono(c: QScalar, gens: &[(u8, u8)]) -> NCPoly {
    let w: Word = gens.iter().map(|&(i, j)| letter(i, j)).collect();
    NCPoly::monomial(w, c)
}

fn one() -> QScalar {
    QScalar::one()
}

/// Raw (unreduced) commutation relations `lhs - rhs`, with names.
pub fn commutation_relations() -> Vec<(String, NCPoly)> {
    let q = QScalar::q_pow(1);
    let qq = QScalar::q_pow(1).sub(&QScalar::q_pow(-1));
    let mut out = Vec::new();
    for i in 1..=3u8 {
        for j in i + 1..=3 {
            for k in 1..=3u8 {
                // u^i_k u^j_k = q u^j_k u^i_k
                let r = mono(one(), &[(i, k), (j, k)]).sub(&mono(q.clone(), &[(j, k), (i, k)]));
                out.push((format!("u{i}{k} u{j}{k} = q u{j}{k} u{i}{k}"), r));
                // u^k_i u^k_j = q u^k_j u^k_i
                let r = mono(one(), &[(k, i), (k, j)]).sub(&mono(q.clone(), &[(k, j), (k, i)]));
                out.push((format!("u{k}{i} u{k}{j} = q u{k}{j} u{k}{i}"), r));
            }
            for k in 1..=3u8 {
                for l in k + 1..=3 {
                    let r = mono(one(), &[(i, l), (j, k)]).sub(&mono(one(), &[(j, k), (i, l)]));
                    out.push((format!("[u{i}{l}, u{j}{k}] = 0"), r));
                    let r = mono(one(), &[(i, k), (j, l)])
                        .sub(&mono(one(), &[(j, l), (i, k)]))
                        .sub(&mono(qq.clone(), &[(i, l), (j, k)]));
                    out.push((format!("[u{i}{k}, u{j}{l}] = (q - q^-1) u{i}{l} u{j}{k}"), r));
                }
            }
        }
    }
    out
}

/// `Σ_π (-q)^{l(π)} u^1_{π1} u^2_{π2} u^3_{π3} - 1`, unreduced.
pub fn cubic_relation() -> NCPoly {
    let perms: [([u8; 3], i32); 6] =
        [([1, 2, 3], 0), ([1, 3, 2], 1), ([2, 1, 3], 1), ([2, 3, 1], 2), ([3, 1, 2], 2), ([3, 2, 1], 3)];
    let mut p = NCPoly::one().neg();
    for (pi, inv) in perms {
        let c = QScalar::q_pow(inv);
        let c = if inv % 2 == 1 { c.neg() } else { c };
        p = p.add(&mono(c, &[(1, pi[0]), (2, pi[1]), (3, pi[2])]));
    }
    p
}

/// `(u^i_j)^*` from the minor formula, reduced.
pub fn star_from_minor(alg: &Algebra, i: u8, j: u8) -> Result<NCPoly> {
    let rest = |x: u8| -> (u8, u8) {
        let v: Vec<u8> = (1..=3).filter(|&y| y != x).collect();
        (v[0], v[1])
    };
    let (k1, k2) = rest(i);
    let (l1, l2) = rest(j);
    let e = j as i32 - i as i32;
    let sign = QScalar::q_pow(e);
    let sign = if e.rem_euclid(2) == 1 { sign.neg() } else { sign };
    let m = mono(one(), &[(k1, l1), (k2, l2)]).sub(&mono(QScalar::q_pow(1), &[(k1, l2), (k2, l1)]));
    alg.normal_form(&m.scale(&sign))
}

/// The star of an unreduced polynomial, built letter by letter from the minor
/// formula: `(x_1 ⋯ x_n)^* = x_n^* ⋯ x_1^*`.
pub fn star_unreduced(alg: &Algebra, p: &NCPoly) -> Result<NCPoly> {
    let mut stars = Vec::with_capacity(9);
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            stars.push(star_from_minor(alg, i, j)?);
        }
    }
    let mut acc = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut t = NCPoly::constant(c.clone());
        for x in w.iter().rev() {
            t = alg.mul(&t, &stars[*x as usize])?;
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn zero(alg: &Algebra, p: &NCPoly) -> Result<bool> {
    Ok(alg.normal_form(p)?.is_zero())
}

/// Every commutation relation, the cubic relation, the star formula on the
/// generators, `**= id`, the stars of all relations, and the unitarity sums
/// `Σ_k u^i_k (u^j_k)^* = δ_ij = Σ_k (u^k_i)^* u^k_j`.
pub fn relation_suite(alg: &Algebra) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    let mut push = |family, name: String, holds| out.push(RelationCheck { family, name, holds });
    let comm = commutation_relations();
    for (name, r) in &comm {
        push("commutation", name.clone(), zero(alg, r)?);
    }
    push("cubic", "det_q u = 1".into(), zero(alg, &cubic_relation())?);
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let u = NCPoly::u(i, j);
            let st = alg.star(&u)?;
            push("star", format!("(u{i}{j})* minor formula"), st == star_from_minor(alg, i, j)?);
            push("star", format!("(u{i}{j})** = u{i}{j}"), alg.star(&st)? == u);
        }
    }
    for (name, r) in &comm {
        push("star", format!("({name})*"), star_unreduced(alg, r)?.is_zero());
    }
    push("star", "(det_q u - 1)*".into(), star_unreduced(alg, &cubic_relation())?.is_zero());
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let mut rows = NCPoly::zero();
            let mut cols = NCPoly::zero();
            for k in 1..=3u8 {
                rows = rows.add(&alg.mul(&NCPoly::u(i, k), &alg.star(&NCPoly::u(j, k))?)?);
                cols = cols.add(&alg.mul(&alg.star(&NCPoly::u(k, i))?, &NCPoly::u(k, j))?);
            }
            let delta = if i == j { NCPoly::one() } else { NCPoly::zero() };
            push("unitarity", format!("sum_k u{i}k (u{j}k)* = {}", (i == j) as u8), rows == delta);
            push("unitarity", format!("sum_k (uk{i})* uk{j} = {}", (i == j) as u8), cols == delta);
        }
    }
    Ok(out)
}
