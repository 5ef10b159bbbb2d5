use super::*;
use crate::qscalar::text::parse_scalar;

fn s(x: &str) -> QScalar {
    parse_scalar(x).unwrap()
}

/// `[x]_q` straight from the quotient formula.
fn qf(x: f64, q: f64) -> f64 {
    (libm::pow(q, x) - libm::pow(q, -x)) / (q - 1.0 / q)
}

#[test]
fn dirac_level_one() {
    let spec = dirac_spectrum(2, Some(0.5)).unwrap();
    assert_eq!(spec[0].family, Family::Kernel);
    assert_eq!(spec[0].multiplicity, Some(1));
    assert!(spec[0].eigenvalue.is_zero());
    assert_eq!(spec.iter().filter(|e| e.eigenvalue.is_zero()).count(), 1);
    let a = spec.iter().find(|e| e.family == Family::APlus && e.n == 1).unwrap();
    assert_eq!(a.multiplicity, Some(8));
    assert_eq!(a.eigenvalue.mul(&a.eigenvalue), s("2*[1]*[3]/[2]"));
    let b = spec.iter().find(|e| e.family == Family::BMinus && e.n == 1).unwrap();
    assert_eq!(b.multiplicity, Some(10));
    assert_eq!(b.eigenvalue.mul(&b.eigenvalue), s("[2]*[3]"));
    let q = 0.5;
    assert!((b.numeric.unwrap() + libm::sqrt(qf(2.0, q) * qf(3.0, q))).abs() < 1e-12);
    assert!((a.numeric.unwrap() - libm::sqrt(2.0 * qf(3.0, q) / qf(2.0, q))).abs() < 1e-12);
    assert!(dirac_spectrum(0, None).is_err());
}

#[test]
fn multiplicities_balance() {
    let spec = dirac_spectrum(10, None).unwrap();
    assert_eq!(spec.len(), 41);
    for n in 1..=10i64 {
        let level = spec.iter().filter(|e| e.n == n);
        let (mut plus, mut minus) = (0, 0);
        for e in level {
            match e.family.sign() {
                1 => plus += e.multiplicity.unwrap(),
                -1 => minus += e.multiplicity.unwrap(),
                _ => unreachable!(),
            }
        }
        assert_eq!(plus, minus);
        let m = n as u64;
        assert_eq!(plus + minus, 2 * (m + 1).pow(3) + m * (m + 3) * (2 * m + 3));
        assert_eq!(plus + minus, level_multiplicity(m));
    }
}

#[test]
fn dirac_classical_limit() {
    let q = 1.0 - 1e-4;
    for n in 1..=5i64 {
        let nf = n as f64;
        let a = dirac_a_squared(n).sqrt().unwrap().eval(q).unwrap();
        assert!((a - libm::sqrt(nf * (nf + 2.0))).abs() < 1e-3 * nf * nf);
        let b = dirac_b_squared(n).sqrt().unwrap().eval(q).unwrap();
        assert!((b - libm::sqrt((nf + 1.0) * (nf + 2.0))).abs() < 1e-3 * nf * nf);
    }
    // [n]_q increases to n as q -> 1
    let mut last = 0.0;
    for q in [0.9, 0.99, 0.999, 1.0 - 1e-4] {
        let v = q_int(4).eval(q).unwrap();
        assert!(v > 4.0 && (last == 0.0 || v < last));
        last = v;
    }
}

#[test]
fn laplacian_values() {
    assert_eq!(laplacian_eigenvalue(0, 3), s("[2]*[3]"));
    assert!(laplacian_eigenvalue(0, 0).is_zero());
    assert_eq!(laplacian_eigenvalue(1, 1), s("(1 + q^-3)*[1]*[4] + [2]*[1]"));
    for n in 0..=5 {
        assert_eq!(laplacian_eigenvalue(0, n).sub(&q_int(2).mul(&q_int(n))), QScalar::zero());
    }
    // the two branches agree at N = 0
    for n in 0..=4 {
        let by_neg = QScalar::one().add(&QScalar::q_pow(-3)).mul(&q_int(n + 2)).mul(&q_int(n));
        assert_eq!(laplacian_eigenvalue(n, 0), by_neg);
    }
    let table = laplacian_spectrum(2, 3, Some(0.4)).unwrap();
    assert_eq!(table.len(), 4);
    assert!(table.iter().all(|e| e.multiplicity.is_none()));
}

#[test]
fn laplacian_positivity_and_bracket_symmetry() {
    for charge in -4..=4i64 {
        for n in 0..=6i64 {
            let v = laplacian_eigenvalue(n, charge);
            if (n, charge) != (0, 0) {
                for q in [0.2, 0.5, 0.9] {
                    assert!(v.eval(q).unwrap() > 0.0, "n={n} N={charge}");
                }
            }
            // only the prefactor 1+q^{-3} breaks q <-> 1/q
            let pre = QScalar::one().add(&QScalar::q_pow(-3));
            let bracket = v.sub(&q_int(2).mul(&q_int(charge))).div(&pre).unwrap();
            assert_eq!(bracket.invert_q(), bracket);
        }
    }
    for m in -5..=5 {
        assert_eq!(q_int(m).invert_q(), q_int(m));
    }
}

#[test]
fn asymmetry_witnesses() {
    for charge in [1, 2] {
        let r = check_asymmetry(charge, 3).unwrap();
        assert!(r.found());
        assert_eq!(r.swap_witnesses, alloc::vec![0, 1, 2, 3]);
        assert_eq!(r.inverted_witnesses, alloc::vec![0, 1, 2, 3]);
    }
    assert!(check_asymmetry(0, 3).is_err());
    // at n = 0: λ_{0,-1} = q^{-3}[2] against λ_{0,1} = [2]
    assert_eq!(laplacian_eigenvalue(0, -1), s("q^-3*[2]"));
}

#[test]
fn summability_tail() {
    let s1 = summability_partial(1.0, 40, 0.5).unwrap();
    let tail = s1.tail_bound.unwrap();
    assert!(tail < 1e-15);
    assert!(s1.term_ratios.iter().rev().take(10).all(|r| *r < 0.3));
    // the sum from n_max = 20 lies within its own certified bound of the sum at 40
    let s20 = summability_partial(1.0, 20, 0.5).unwrap();
    let gap = s1.total() - s20.total();
    assert!(gap >= 0.0 && gap <= s20.tail_bound.unwrap());

    let slow = summability_certified(0.1, 0.9, 1e-6, 40, 4096).unwrap();
    assert!(slow.n_max > 40);
    let last = *slow.term_ratios.last().unwrap();
    assert!(last < 1.0 && last > s1.term_ratios[s1.term_ratios.len() - 1]);
    assert!(summability_partial(0.0, 5, 0.5).is_err());
    assert!(summability_partial(1.0, 5, 1.0).is_err());
}

#[test]
fn summability_terms_match_exact_eigenvalues() {
    let (eps, q) = (0.7, 0.35);
    let sm = summability_partial(eps, 6, q).unwrap();
    let spec = dirac_spectrum(6, Some(q)).unwrap();
    let mut total = 0.0;
    for e in &spec {
        let l = e.numeric.unwrap();
        total += e.multiplicity.unwrap() as f64 * libm::pow(1.0 + l * l, -eps);
    }
    assert!((sm.total() - total).abs() < 1e-12 * total);
}
