use alloc::vec::Vec;
use super::text::{format_uq, parse_uq};
use super::*;
use crate::ncalg::Generator;
use crate::qscalar::text::parse_scalar;
use crate::qscalar::q_int;

fn s(x: &str) -> QScalar {
    parse_scalar(x).unwrap()
}

fn uq(x: &str) -> UqElement {
    parse_uq(x).unwrap()
}

fn u(i: u8, j: u8) -> NCPoly {
    NCPoly::u(i, j)
}

fn sample_polys(alg: &Algebra) -> Vec<NCPoly> {
    let mut out: Vec<NCPoly> = Generator::all().map(NCPoly::generator).collect();
    for a in 0..9u8 {
        for b in a..9u8 {
            let w: Word = Word::from_slice(&[a, b]);
            out.push(alg.normal_form(&NCPoly::monomial(w, QScalar::one())).unwrap());
        }
    }
    out
}

#[test]
fn spec_action_examples() {
    let alg = Algebra::new();
    assert_eq!(act_left(&alg, &uq("E1"), &u(1, 1)).unwrap(), u(1, 2));
    assert_eq!(act_left(&alg, &uq("K1"), &u(1, 1)).unwrap(), u(1, 1).scale(&QScalar::q_half_pow(-1)));
    let sq = alg.mul(&u(1, 1), &u(1, 1)).unwrap();
    let got = act_left(&alg, &uq("E1"), &sq).unwrap();
    let want = alg.mul(&u(1, 1), &u(1, 2)).unwrap().scale(&s("q^(-3/2) + q^(1/2)"));
    assert_eq!(got, want);
    assert_eq!(act_right(&alg, &u(2, 3), &uq("F2")).unwrap(), u(3, 3));
    assert!(act_right(&alg, &u(3, 3), &uq("F2")).unwrap().is_zero());
    assert_eq!(act_right(&alg, &u(3, 1), &uq("K1.K2")).unwrap(), u(3, 1).scale(&QScalar::q_half_pow(1)));
    assert_eq!(act_l(&alg, &uq("K1"), &NCPoly::one()).unwrap(), NCPoly::one());
}

#[test]
fn antipode_and_counit() {
    assert_eq!(uq("E1").antipode(), uq("E1").scale(&s("-q")));
    assert_eq!(uq("K1.K2").antipode(), uq("K2inv.K1inv"));
    assert_eq!(uq("K1.K2").antipode(), uq("K1inv.K2inv"));
    assert!(uq("E2.F1").counit().is_zero());
    assert!(uq("K1.K1inv").counit().is_one());
    assert_eq!(uq("K1.K1inv"), UqElement::one());
    for g in UqGen::ALL {
        let x = UqElement::gen(g);
        assert_eq!(x.antipode().antipode_inv(), x);
        assert_eq!(x.antipode_inv().antipode(), x);
    }
    assert_eq!(format_uq(&uq("{q} E1.K2; F2")), "{1/1*q^(2/2)} E1.K2; F2");
    assert!(parse_uq("E3").is_err());
}

fn words_up_to(n: usize) -> Vec<UqWord> {
    let mut out = alloc::vec![UqWord::new()];
    let mut layer = out.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for g in UqGen::ALL {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[test]
fn counit_axiom() {
    for w in words_up_to(3) {
        let x = UqElement::word(&w);
        let mut left = UqElement::zero();
        let mut right = UqElement::zero();
        for (a, b, c) in x.coproduct() {
            left.add_term(&b, c.mul(&UqElement::word(&a).counit()));
            right.add_term(&a, c.mul(&UqElement::word(&b).counit()));
        }
        assert_eq!(left, x);
        assert_eq!(right, x);
    }
}


#[test]
fn actions_respect_products() {
    let alg = Algebra::new();
    let a = alg.mul(&u(2, 1), &u(3, 2)).unwrap().add(&u(1, 3));
    let b = alg.star(&u(3, 1)).unwrap();
    let ab = alg.mul(&a, &b).unwrap();
    for x in ["E1", "F2", "E1.F1", "K2.E2", "F1.F2", "E2.E1"] {
        let x = uq(x);
        let mut lhs = NCPoly::zero();
        let mut rhs = NCPoly::zero();
        for (l, r, c) in x.coproduct() {
            let (l, r) = (UqElement::word(&l), UqElement::word(&r));
            let t = alg.mul(&act_left(&alg, &l, &a).unwrap(), &act_left(&alg, &r, &b).unwrap()).unwrap();
            lhs = lhs.add(&t.scale(&c));
            let t = alg.mul(&act_right(&alg, &a, &l).unwrap(), &act_right(&alg, &b, &r).unwrap()).unwrap();
            rhs = rhs.add(&t.scale(&c));
        }
        assert_eq!(lhs, act_left(&alg, &x, &ab).unwrap());
        assert_eq!(rhs, act_right(&alg, &ab, &x).unwrap());
        // L_x(ab) = (L_{x(2)} a)(L_{x(1)} b)
        let mut twisted = NCPoly::zero();
        for (l, r, c) in x.coproduct() {
            let (l, r) = (UqElement::word(&l), UqElement::word(&r));
            let t = alg.mul(&act_l(&alg, &r, &a).unwrap(), &act_l(&alg, &l, &b).unwrap()).unwrap();
            twisted = twisted.add(&t.scale(&c));
        }
        assert_eq!(twisted, act_l(&alg, &x, &ab).unwrap());
    }
}

#[test]
fn actions_commute() {
    let alg = Algebra::new();
    let polys = sample_polys(&alg);
    for (k, a) in polys.iter().enumerate().step_by(5) {
        for x in ["E1", "F2", "K1.E2"] {
            for y in ["F1", "E2", "K2inv"] {
                let (x, y) = (uq(x), uq(y));
                let l = act_left(&alg, &x, &act_right(&alg, a, &y).unwrap()).unwrap();
                let r = act_right(&alg, &act_left(&alg, &x, a).unwrap(), &y).unwrap();
                assert_eq!(l, r, "sample {k}");
            }
        }
    }
}

#[test]
fn sphere_monomials_have_uniform_weight() {
    let alg = Algebra::new();
    let mut m = NCPoly::one();
    for (d, j) in [1u8, 3, 2, 3].iter().enumerate() {
        m = alg.mul(&m, &u(3, *j)).unwrap();
        let got = act_right(&alg, &m, &uq("K1.K2")).unwrap();
        assert_eq!(got, m.scale(&QScalar::q_half_pow(d as i32 + 1)));
    }
    assert_eq!(q_int(2), s("q + q^-1"));
}

#[test]
fn action_suite_holds() {
    let alg = Algebra::new();
    for c in suite::action_suite(&alg).unwrap() {
        assert!(c.holds, "{}: {}", c.family, c.name);
    }
}
