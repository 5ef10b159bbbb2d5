//! Hopf relations of U_q(su(3)) checked through both actions on
//! A(SU_q(3)), with the module-algebra and commutation properties.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::text::parse_uq;
use super::{act_left, act_right, UqElement};
use crate::error::Result;
use crate::ncalg::suite::RelationCheck;
use crate::ncalg::{Algebra, Generator, NCPoly, Word};
use crate::qscalar::QScalar;

fn uq(x: &str) -> UqElement {
    parse_uq(x).expect("well-formed relation text")
}

/// Pairs `(name, lhs, rhs)` with `lhs = rhs` in U_q(su(3)).
pub fn hopf_relations() -> Vec<(String, UqElement, UqElement)> {
    let qq = QScalar::q_pow(1).sub(&QScalar::q_pow(-1));
    let mut out = Vec::new();
    for i in [1u8, 2] {
        let j = 3 - i;
        // [E_i, F_i] (q - q^-1) = K_i^2 - K_i^-2
        let lhs = uq(&format!("E{i}.F{i}")).sub(&uq(&format!("F{i}.E{i}"))).scale(&qq);
        let rhs = uq(&format!("K{i}.K{i}")).sub(&uq(&format!("K{i}inv.K{i}inv")));
        out.push((format!("[E{i},F{i}]"), lhs, rhs));
        out.push((format!("[E{i},F{j}]"), uq(&format!("E{i}.F{j}")), uq(&format!("F{j}.E{i}"))));
        for (x, k, c) in [("E", i, "q"), ("E", j, "q^(-1/2)"), ("F", i, "q^-1"), ("F", j, "q^(1/2)")] {
            let c = crate::qscalar::text::parse_scalar(c).expect("constant");
            out.push((
                format!("K{i} {x}{k} K{i}^-1"),
                uq(&format!("K{i}.{x}{k}.K{i}inv")),
                uq(&format!("{x}{k}")).scale(&c),
            ));
        }
        // [a, [b, a]_q]_q = 0 with [x, y]_q = xy - q^-1 yx
        for x in ["E", "F"] {
            let (a, b) = (format!("{x}{i}"), format!("{x}{j}"));
            let serre = uq(&format!("{a}.{b}.{a}"))
                .scale(&QScalar::one().add(&QScalar::q_pow(-2)))
                .sub(&uq(&format!("{a}.{a}.{b}; {b}.{a}.{a}")).scale(&QScalar::q_pow(-1)));
            out.push((format!("Serre {a}{a}{b}"), serre, UqElement::zero()));
        }
    }
    out
}

/// Generators and all ordered products of two generators, reduced.
pub fn sample_polys(alg: &Algebra) -> Result<Vec<NCPoly>> {
    let mut out: Vec<NCPoly> = Generator::all().map(NCPoly::generator).collect();
    for a in 0..9u8 {
        for b in 0..9u8 {
            out.push(alg.normal_form(&NCPoly::monomial(Word::from_slice(&[a, b]), QScalar::one()))?);
        }
    }
    Ok(out)
}

/// Each Hopf relation through `▷` and `◁` on the samples, the Leibniz rule
/// `x ▷ (ab) = (x₍₁₎ ▷ a)(x₍₂₎ ▷ b)` for every generator, and `▷` commuting
/// with `◁`.
pub fn action_suite(alg: &Algebra) -> Result<Vec<RelationCheck>> {
    let polys = sample_polys(alg)?;
    let mut out = Vec::new();
    for (name, lhs, rhs) in hopf_relations() {
        let mut holds = true;
        for a in &polys {
            holds &= act_left(alg, &lhs, a)? == act_left(alg, &rhs, a)?;
            holds &= act_right(alg, a, &lhs)? == act_right(alg, a, &rhs)?;
        }
        out.push(RelationCheck { family: "hopf", name, holds });
    }
    let gens: Vec<NCPoly> = polys[..9].to_vec();
    for g in super::UqGen::ALL {
        let x = UqElement::gen(g);
        let mut holds = true;
        for a in &gens {
            for b in &gens {
                let ab = alg.mul(a, b)?;
                let (mut left, mut right) = (NCPoly::zero(), NCPoly::zero());
                for (l, r, c) in x.coproduct() {
                    let (l, r) = (UqElement::word(&l), UqElement::word(&r));
                    left = left.add(&alg.mul(&act_left(alg, &l, a)?, &act_left(alg, &r, b)?)?.scale(&c));
                    right = right.add(&alg.mul(&act_right(alg, a, &l)?, &act_right(alg, b, &r)?)?.scale(&c));
                }
                holds &= left == act_left(alg, &x, &ab)? && right == act_right(alg, &ab, &x)?;
            }
        }
        out.push(RelationCheck { family: "leibniz", name: format!("{} on products of generators", g.name()), holds });
    }
    for x in ["E1", "E2", "F1", "F2", "K1"] {
        let mut holds = true;
        for y in ["E1", "E2", "F1", "F2", "K2"] {
            let (xe, ye) = (uq(x), uq(y));
            for a in &polys {
                holds &= act_left(alg, &xe, &act_right(alg, a, &ye)?)? == act_right(alg, &act_left(alg, &xe, a)?, &ye)?;
            }
        }
        out.push(RelationCheck { family: "bimodule", name: format!("{x} ▷ commutes with ◁"), holds });
    }
    Ok(out)
}
