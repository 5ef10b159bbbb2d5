use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{eval_p_word, PWord};
use crate::ncalg::{Algebra, NCPoly};
use crate::qscalar::QScalar;

/// A random combination of at most three `p`-words of length at most `max_len`.
pub fn random_invariant(alg: &Algebra, rng: &mut ChaCha8Rng, max_len: usize) -> NCPoly {
    let mut a = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=max_len);
        let w: PWord = (0..len).map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3))).collect();
        let c = QScalar::rational(rng.gen_range(-3..=3), 1).mul(&QScalar::q_pow(rng.gen_range(-1..=1)));
        a = a.add(&eval_p_word(alg, &w).unwrap().scale(&c));
    }
    a
}

/// A random element of degree exactly two in the `p_ij`.
pub fn random_degree_two(alg: &Algebra, rng: &mut ChaCha8Rng) -> NCPoly {
    let mut a = NCPoly::zero();
    while a.is_zero() {
        for _ in 0..2 {
            let w: PWord = (0..2).map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3))).collect();
            let c = QScalar::rational(rng.gen_range(1..=3), 1);
            a = a.add(&eval_p_word(alg, &w).unwrap().scale(&c));
        }
    }
    a
}
