//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use cp2q_core::dolbeault::{dbar, dbar2_zero_check, del, j_involution, reconstruction_residual, OneForm};
use cp2q_core::geom::{
    build_projection, build_psi, eval_p_word, equivariant_ch0, gram, gram_identity, modular_element, rank,
    HaarContext, PWord,
};
use cp2q_core::khomology::{
    approximate_pi_pairing, charge_pairing, instanton_reference, inverse3, pairing_matrix, qchern2, qchern4,
    rank_pairing,
};
use cp2q_core::ncalg::suite::relation_suite;
use cp2q_core::ncalg::{Algebra, NCPoly, RewriteSystem, ZeroVerdict};
use cp2q_core::spectra::{
    check_asymmetry, dirac_a_squared, dirac_b_squared, dirac_spectrum, laplacian_eigenvalue, summability_certified,
    summability_partial, Family,
};
use cp2q_core::uq::suite::action_suite;
use cp2q_core::uq::{act_left, act_right};
use cp2q_core::{q_int, QScalar, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<Vec<String>>;

fn check(failures: &mut Vec<String>, cond: bool, what: impl Into<String>) {
    if !cond {
        failures.push(what.into());
    }
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> PWord {
    (0..len).map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3))).collect()
}

fn random_invariant(alg: &Algebra, rng: &mut ChaCha8Rng, max_len: usize) -> Result<NCPoly> {
    let mut a = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=max_len);
        let c = QScalar::rational(rng.gen_range(-3..=3), 1).mul(&QScalar::q_pow(rng.gen_range(-1..=1)));
        a = a.add(&eval_p_word(alg, &random_word(rng, len))?.scale(&c));
    }
    Ok(a)
}

fn random_degree_two(alg: &Algebra, rng: &mut ChaCha8Rng) -> Result<NCPoly> {
    let mut a = NCPoly::zero();
    while a.is_zero() {
        for _ in 0..2 {
            let c = QScalar::rational(rng.gen_range(1..=3), 1);
            a = a.add(&eval_p_word(alg, &random_word(rng, 2))?.scale(&c));
        }
    }
    Ok(a)
}

fn relations(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for c in relation_suite(alg)?.into_iter().chain(action_suite(alg)?) {
        check(&mut f, c.holds, format!("{}: {}", c.family, c.name));
    }
    let rep = RewriteSystem::with_cubic().check_local_confluence(4, alg)?;
    check(&mut f, rep.all_resolve(), format!("{} unresolved overlaps", rep.unresolved.len()));
    println!(
        "    confluence to degree 4: {} overlaps, {} resolved syntactically, {} by ideal membership, {} unresolved",
        rep.overlaps_checked,
        rep.resolved,
        rep.resolved_by_membership.len(),
        rep.unresolved.len()
    );
    Ok(f)
}

fn gram_identities(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for n in [-3, -2, -1, 1, 2, 3] {
        check(&mut f, gram_identity(alg, n, 0)? == ZeroVerdict::Zero, format!("N={n}"));
    }
    // Σ_j z_j z_j^* = 1 and Σ_j q^{6-2j} z_j^* z_j = 1
    let (mut a, mut b) = (NCPoly::zero(), NCPoly::zero());
    for j in 1..=3u8 {
        let z = NCPoly::u(3, j);
        let zs = alg.star(&z)?;
        a = a.add(&alg.mul(&z, &zs)?);
        b = b.add(&alg.mul(&zs, &z)?.scale(&QScalar::q_pow(6 - 2 * j as i32)));
    }
    check(&mut f, gram(alg, &build_psi(alg, 1)?)? == a && a == NCPoly::one(), "N=1 unit sum");
    check(&mut f, gram(alg, &build_psi(alg, -1)?)? == b && b == NCPoly::one(), "N=-1 unit sum");
    Ok(f)
}

fn projections(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for n in [-2, -1, 1, 2] {
        let mut p = build_projection(alg, &build_psi(alg, n)?)?;
        check(&mut f, p.check_idempotent(alg)?, format!("P_{n} idempotent"));
        check(&mut f, p.check_selfadjoint(alg)?, format!("P_{n} self-adjoint"));
        let m = n.unsigned_abs() as usize;
        check(&mut f, p.size() == rank(n) && rank(n) == (m + 1) * (m + 2) / 2, format!("size of P_{n}"));
    }
    Ok(f)
}

fn haar(alg: &Algebra, h: &mut HaarContext) -> Outcome {
    let mut f = Vec::new();
    check(&mut f, h.haar(alg, &NCPoly::one())?.is_one(), "phi(1) = 1");
    check(&mut f, h.haar(alg, &alg.p(1, 2)?)?.is_zero(), "phi(p12) = 0");
    let k = modular_element();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pairs = 60;
    for i in 0..pairs {
        let a = random_invariant(alg, &mut rng, 1)?;
        let b = random_invariant(alg, &mut rng, 2)?;
        let lhs = h.haar(alg, &alg.mul(&a, &b)?)?;
        let kb = act_right(alg, &act_left(alg, &k, &b)?, &k)?;
        let rhs = h.haar(alg, &alg.mul(&kb, &a)?)?;
        check(&mut f, lhs == rhs, format!("pair {i}"));
    }
    println!("    modular property on {pairs} random pairs");
    Ok(f)
}

fn equivariant(alg: &Algebra, h: &mut HaarContext) -> Outcome {
    let mut f = Vec::new();
    let mut values = Vec::new();
    for n in -3..=3 {
        let psi = build_psi(alg, n)?;
        let p = build_projection(alg, &psi)?;
        let v = equivariant_ch0(alg, h, &psi, &p)?;
        check(&mut f, v == QScalar::q_pow(-2 * n), format!("N={n}: got {v}"));
        values.push(v);
    }
    for i in 0..values.len() {
        for j in 0..i {
            check(&mut f, values[i] != values[j], format!("values {i} and {j} coincide"));
        }
    }
    Ok(f)
}

fn classical(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for n in -2..=2 {
        let r = rank_pairing(alg, n)?;
        check(&mut f, r.certified && r.raw == 1.0, format!("rank of P_{n}"));
        for q0 in [0.3, 0.5, 0.8] {
            let c = charge_pairing(alg, n, q0, 1e-6)?;
            let ok = c.nearest_integer == n as i64 && c.residual < 1e-6;
            check(&mut f, ok, format!("charge N={n} q0={q0}: raw {}", c.raw));
        }
    }
    let m = pairing_matrix(alg, 0.5, 1e-6)?;
    check(&mut f, m == [[1, 1, 1], [0, -1, 1], [0, 0, 1]], format!("pairing matrix {m:?}"));
    check(&mut f, inverse3(&m) == Some([[1, 1, -2], [0, -1, 1], [0, 0, 1]]), "inverse");
    Ok(f)
}

fn dirac(_: &Algebra) -> Outcome {
    let mut f = Vec::new();
    let spec = dirac_spectrum(10, Some(0.5))?;
    let kernel: u64 = spec.iter().filter(|e| e.eigenvalue.is_zero()).filter_map(|e| e.multiplicity).sum();
    check(&mut f, kernel == 1, "kernel dimension");
    for n in 1..=10i64 {
        let m = n as u64;
        let (mut plus, mut minus) = (0, 0);
        for e in spec.iter().filter(|e| e.n == n) {
            let sq = e.eigenvalue.mul(&e.eigenvalue);
            let (want_sq, want_mult) = match e.family {
                Family::APlus | Family::AMinus => (dirac_a_squared(n), (m + 1).pow(3)),
                _ => (dirac_b_squared(n), m * (m + 3) * (2 * m + 3) / 2),
            };
            check(&mut f, sq == want_sq && e.multiplicity == Some(want_mult), format!("n={n} {}", e.family));
            let sign_ok = e.numeric.unwrap() * e.family.sign() as f64 > 0.0;
            check(&mut f, sign_ok, format!("sign n={n} {}", e.family));
            if e.family.sign() > 0 {
                plus += e.multiplicity.unwrap();
            } else {
                minus += e.multiplicity.unwrap();
            }
        }
        check(&mut f, plus == minus, format!("mu+ = mu- at n={n}"));
    }
    // [n][n+2] and [n+1][n+2] against the closed forms
    check(&mut f, dirac_a_squared(1) == QScalar::from(2).mul(&q_int(3)).div(&q_int(2))?, "A at n=1");
    let s1 = summability_partial(1.0, 40, 0.5)?;
    let s01 = summability_certified(0.1, 0.9, 1e-6, 40, 1 << 14)?;
    for s in [&s1, &s01] {
        check(&mut f, s.certified(), format!("eps={} tail", s.epsilon));
        let r = s.term_ratios.last().copied().unwrap_or(1.0);
        check(&mut f, r < 1.0, format!("eps={} last ratio {r}", s.epsilon));
        println!(
            "    eps={} q0={}: n_max={} partial sum {:.12e}, tail bound {:.3e}, last ratio {:.6}",
            s.epsilon,
            s.q0,
            s.n_max,
            s.total(),
            s.tail_bound.unwrap_or(f64::NAN),
            r
        );
    }
    Ok(f)
}

fn laplacian(_: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for n in 0..=5 {
        check(&mut f, laplacian_eigenvalue(0, n) == q_int(2).mul(&q_int(n)), format!("lambda_0,{n}"));
    }
    for n in [1, 2] {
        let r = check_asymmetry(n, 3)?;
        check(&mut f, r.found(), format!("asymmetry N={n}"));
    }
    Ok(f)
}

fn calculus(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    let sh = QScalar::q_half_pow;
    for i in 1..=3u8 {
        for j in 1..=3u8 {
            let p = alg.p(i, j)?;
            let us = alg.star(&NCPoly::u(3, i))?;
            let c = QScalar::q_pow(-1).neg();
            let want = [alg.mul(&us, &NCPoly::u(2, j))?.scale(&c), alg.mul(&us, &NCPoly::u(1, j))?.scale(&c)];
            check(&mut f, del(alg, &p)? == want, format!("del p{i}{j}"));
            let want = [
                alg.mul(&alg.star(&NCPoly::u(1, i))?, &NCPoly::u(3, j))?.scale(&sh(-3).neg()),
                alg.mul(&alg.star(&NCPoly::u(2, i))?, &NCPoly::u(3, j))?.scale(&sh(-1)),
            ];
            check(&mut f, dbar(alg, &p)? == want, format!("dbar p{i}{j}"));
            check(&mut f, dbar2_zero_check(alg, &p)? == ZeroVerdict::Zero, format!("dbar^2 p{i}{j}"));
            let w = OneForm::exact(alg, &p)?;
            check(&mut f, reconstruction_residual(alg, &w)?.is_zero(), format!("reconstruction of dp{i}{j}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..10 {
        let a = random_degree_two(alg, &mut rng)?;
        check(&mut f, dbar2_zero_check(alg, &a)? == ZeroVerdict::Zero, format!("dbar^2 of random invariant {k}"));
    }
    // J² = (-1)^{2l}
    let samples = [alg.p(1, 2)?, NCPoly::u(3, 1), alg.mul(&NCPoly::u(1, 2), &NCPoly::u(2, 3))?];
    for spin2 in 0..=2u8 {
        let c: Vec<NCPoly> = samples[..spin2 as usize + 1].to_vec();
        let jj = j_involution(alg, &j_involution(alg, &c, spin2)?, spin2)?;
        let want: Vec<NCPoly> = if spin2 % 2 == 1 { c.iter().map(|x| x.neg()).collect() } else { c.clone() };
        check(&mut f, jj == want, format!("J^2 at spin {spin2}/2"));
    }
    Ok(f)
}

fn chern(alg: &Algebra) -> Outcome {
    let mut f = Vec::new();
    for n in -3..=3i32 {
        let r4 = qchern4(n).div(&qchern4(1))?;
        check(&mut f, r4 == q_int(n as i64).mul(&q_int(n as i64)), format!("qchern4 N={n}"));
        let r2 = qchern2(n).div(&qchern2(1))?;
        check(&mut f, r2 == QScalar::q_pow(1 - n).mul(&q_int(n as i64)), format!("qchern2 N={n}"));
        check(&mut f, instanton_reference(n as i64) * 2 == (n * (n + 1)) as i64, format!("instanton N={n}"));
    }
    let lit = approximate_pi_pairing(alg, 1, 40, 60, 0.5)?;
    check(&mut f, !lit.certified, "literal pi pairing flagged");
    println!("    literal pi pairing for N=1 at q0=0.5 (not certified): {:.12}", lit.raw);
    Ok(f)
}

fn main() -> ExitCode {
    let alg = Algebra::new();
    let mut haar_ctx = HaarContext::new();
    let mut all_ok = true;
    let mut run = |name: &str, outcome: Outcome, t: Instant| {
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(f) if f.is_empty() => println!("PASS {name} ({secs:.1}s)"),
            Ok(f) => {
                all_ok = false;
                println!("FAIL {name} ({secs:.1}s): {}", f.join("; "));
            }
            Err(e) => {
                all_ok = false;
                println!("FAIL {name} ({secs:.1}s): error {e}");
            }
        }
    };
    let t = Instant::now();
    run("1 relation suite and confluence", relations(&alg), t);
    let t = Instant::now();
    run("2 Gram identities", gram_identities(&alg), t);
    let t = Instant::now();
    run("3 projection certificates", projections(&alg), t);
    let t = Instant::now();
    run("4 Haar modular property", haar(&alg, &mut haar_ctx), t);
    let t = Instant::now();
    run("5 equivariant pairing", equivariant(&alg, &mut haar_ctx), t);
    let t = Instant::now();
    run("6 classical pairings", classical(&alg), t);
    let t = Instant::now();
    run("7 Dirac spectrum", dirac(&alg), t);
    let t = Instant::now();
    run("8 Laplacian", laplacian(&alg), t);
    let t = Instant::now();
    run("9 calculus", calculus(&alg), t);
    let t = Instant::now();
    run("10 q-Chern layer", chern(&alg), t);
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
