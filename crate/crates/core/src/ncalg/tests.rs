use super::text::{format_ncpoly, parse_ncpoly};
use super::*;
use crate::qscalar::text::parse_scalar;

fn s(x: &str) -> QScalar {
    parse_scalar(x).unwrap()
}

fn w(letters: &[(u8, u8)]) -> Word {
    letters.iter().map(|(i, j)| letter(*i, *j)).collect()
}

fn raw(terms: &[(&str, &[(u8, u8)])]) -> NCPoly {
    let mut p = NCPoly::zero();
    for (c, l) in terms {
        p.add_term(w(l), s(c));
    }
    p
}

#[test]
fn same_row_swap() {
    let alg = Algebra::new();
    let nf = alg.normal_form(&raw(&[("1", &[(1, 2), (1, 1)])])).unwrap();
    assert_eq!(nf, raw(&[("q^-1", &[(1, 1), (1, 2)])]));
}

#[test]
fn diagonal_straightening() {
    let alg = Algebra::new();
    let nf = alg.normal_form(&raw(&[("1", &[(2, 2), (1, 1)])])).unwrap();
    assert_eq!(nf, raw(&[("1", &[(1, 1), (2, 2)]), ("-(q - q^-1)", &[(1, 2), (2, 1)])]));
}

#[test]
fn determinant_reduces_to_one() {
    let alg = Algebra::new();
    let d = Algebra::determinant_raw();
    assert_eq!(alg.normal_form(&d).unwrap(), NCPoly::one());
}

#[test]
fn star_of_corner_generator() {
    let alg = Algebra::new();
    let st = alg.star(&NCPoly::u(3, 3)).unwrap();
    assert_eq!(st, raw(&[("1", &[(1, 1), (2, 2)]), ("-q", &[(1, 2), (2, 1)])]));
    assert_eq!(alg.star(&NCPoly::one()).unwrap(), NCPoly::one());
    for g in Generator::all() {
        let x = NCPoly::generator(g);
        assert_eq!(alg.star(&alg.star(&x).unwrap()).unwrap(), x, "{g:?}");
    }
}

#[test]
fn sphere_unit_sums() {
    let alg = Algebra::new();
    let mut a = NCPoly::one().neg();
    let mut b = NCPoly::one().neg();
    for j in 1..=3u8 {
        let z = NCPoly::u(3, j);
        let zs = alg.star(&z).unwrap();
        a = a.add(&alg.mul(&z, &zs).unwrap());
        b = b.add(&alg.mul(&zs, &z).unwrap().scale(&QScalar::q_pow(6 - 2 * j as i32)));
    }
    assert!(a.is_zero(), "{}", format_ncpoly(&a));
    assert!(b.is_zero(), "{}", format_ncpoly(&b));
}

#[test]
fn orthogonality_relations() {
    let alg = Algebra::new();
    for a in 1..=3u8 {
        for b in 1..=3u8 {
            let mut x = NCPoly::zero();
            let mut y = NCPoly::zero();
            for j in 1..=3u8 {
                let ua = NCPoly::u(a, j);
                let ub = NCPoly::u(b, j);
                let t = alg.mul(&alg.star(&ua).unwrap(), &ub).unwrap();
                x = x.add(&t.scale(&QScalar::q_pow(2 * (a as i32 - j as i32))));
                y = y.add(&alg.mul(&ua, &alg.star(&ub).unwrap()).unwrap());
            }
            let expect = if a == b { NCPoly::one() } else { NCPoly::zero() };
            assert_eq!(x, expect, "({a},{b})");
            assert_eq!(y, expect, "({a},{b})");
        }
    }
}

#[test]
fn text_round_trip() {
    let alg = Algebra::new();
    let p = parse_ncpoly("{q + 1} u[2][2] u[1][1]; -{1/2} p[1][2]; u[3][1]* u[1][1]", &alg).unwrap();
    let printed = format_ncpoly(&p);
    let back = parse_ncpoly(&printed, &alg).unwrap();
    assert_eq!(back, p);
    assert_eq!(format_ncpoly(&back), printed);
    assert_eq!(parse_ncpoly("(u[1][1]; u[2][2])*", &alg).unwrap(), {
        let a = alg.star(&NCPoly::u(1, 1)).unwrap();
        a.add(&alg.star(&NCPoly::u(2, 2)).unwrap())
    });
    match parse_ncpoly("u[1][4]", &alg) {
        Err(Error::Parse { start, .. }) => assert_eq!(start, 5),
        other => panic!("{other:?}"),
    }
}

#[test]
fn confluence_of_commutation_rules() {
    let alg = Algebra::new();
    let rep = RewriteSystem::commutation().check_local_confluence(3, &alg).unwrap();
    assert!(rep.overlaps_checked > 0);
    assert!(rep.is_confluent(), "{:?}", rep.resolved_by_membership.len());
    let rep = RewriteSystem::empty().check_local_confluence(4, &alg).unwrap();
    assert_eq!(rep.overlaps_checked, 0);
    assert!(rep.is_confluent());
}

#[test]
fn cubic_orientation_report() {
    let alg = Algebra::new();
    let sys = RewriteSystem::with_cubic();
    assert!(sys.is_decreasing());
    let rep = sys.check_local_confluence(4, &alg).unwrap();
    assert!(rep.all_resolve());
}

#[test]
fn zero_verdicts() {
    let alg = Algebra::new();
    assert_eq!(alg.equals_zero(&NCPoly::u(1, 1), 4).unwrap(), ZeroVerdict::Nonzero);
    let d = Algebra::determinant_raw().sub(&NCPoly::one());
    assert_eq!(alg.equals_zero(&d, 4).unwrap(), ZeroVerdict::Zero);
    assert!(ideal_membership(&alg, &d, 3).unwrap());
    assert!(!ideal_membership(&alg, &NCPoly::u(1, 1), 4).unwrap());
}

#[test]
fn confluence_counts_and_nf_oracle() {
    let alg = Algebra::new();
    let rep = RewriteSystem::with_cubic().check_local_confluence(4, &alg).unwrap();
    assert_eq!(rep.overlaps_checked, 96);
    assert_eq!((rep.resolved, rep.resolved_by_membership.len(), rep.unresolved.len()), (90, 6, 0));
    // x - nf(x) lies in the ideal
    let x = raw(&[("1", &[(3, 3), (2, 2), (1, 1), (1, 2)])]);
    let nf = alg.normal_form(&x).unwrap();
    assert!(ideal_membership(&alg, &x.sub(&nf), 4).unwrap());
}

#[test]
fn relation_suite_holds() {
    let alg = Algebra::new();
    let checks = suite::relation_suite(&alg).unwrap();
    assert_eq!(checks.iter().filter(|c| c.family == "commutation").count(), 36);
    for c in &checks {
        assert!(c.holds, "{}: {}", c.family, c.name);
    }
    // a relation with a wrong coefficient is caught
    let bad = raw(&[("1", &[(1, 1), (2, 1)]), ("-q^2", &[(2, 1), (1, 1)])]);
    assert!(!alg.normal_form(&bad).unwrap().is_zero());
}
