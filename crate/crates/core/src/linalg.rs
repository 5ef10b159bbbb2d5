//! Sparse Gaussian elimination over ℚ(q^{1/2}).
//!
//! Vectors are sparse maps from coordinate index to a nonzero field element.
//! [`Echelon`] keeps a reduced row-echelon basis of a growing span and records,
//! for every stored row, its expression in terms of the inserted generators, so
//! membership queries also return a certificate.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::qscalar::RatFunc;

pub type SparseVec = BTreeMap<usize, RatFunc>;

fn axpy(target: &mut SparseVec, factor: &RatFunc, row: &SparseVec) {
    for (k, v) in row {
        let t = factor.mul(v);
        match target.get_mut(k) {
            Some(x) => {
                *x = x.add(&t);
                if x.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    target.insert(*k, t);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    /// Coefficients on the inserted generators: `vec = Σ combo[g] · generator[g]`.
    combo: SparseVec,
}

/// Row-echelon basis of the span of inserted vectors.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of generators inserted so far.
    pub fn generators(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` against the basis; returns the residual and the combination
    /// of generators that was subtracted (so `v = residual + Σ combo·gen`).
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut res = v.clone();
        let mut combo = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = res.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let row = &self.rows[&p];
            let factor = res[&p].clone();
            axpy(&mut res, &factor.neg(), &row.vec);
            axpy(&mut combo, &factor, &row.combo);
            cursor = p + 1;
        }
        (res, combo)
    }

    /// Inserts a generator; returns true when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut res, combo) = self.reduce(&v);
        let Some((&pivot, lead)) = res.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let mut c = SparseVec::new();
        c.insert(id, RatFunc::one());
        for (k, x) in combo {
            c.insert(k, x.neg());
        }
        for x in res.values_mut() {
            *x = x.mul(&inv);
        }
        for x in c.values_mut() {
            *x = x.mul(&inv);
        }
        // keep the basis fully reduced so earlier rows never carry this pivot
        let row = Row { vec: res, combo: c };
        let updates: Vec<usize> = self.rows.iter().filter(|(_, r)| r.vec.contains_key(&pivot)).map(|(k, _)| *k).collect();
        for k in updates {
            let r = self.rows.get_mut(&k).unwrap();
            let f = r.vec[&pivot].neg();
            axpy(&mut r.vec, &f, &row.vec);
            axpy(&mut r.combo, &f, &row.combo);
        }
        self.rows.insert(pivot, row);
        true
    }

    /// `Some(coefficients on generators)` when `v` lies in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (res, combo) = self.reduce(v);
        res.is_empty().then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::QScalar;

    fn f(x: QScalar) -> RatFunc {
        x.as_ratfunc().unwrap()
    }

    fn v(entries: &[(usize, QScalar)]) -> SparseVec {
        entries.iter().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (*k, f(x.clone()))).collect()
    }

    #[test]
    fn membership_with_certificate() {
        let q = QScalar::q_pow(1);
        let one = QScalar::one();
        let a = v(&[(0, one.clone()), (1, q.clone())]);
        let b = v(&[(1, one.clone()), (2, one.clone())]);
        let mut e = Echelon::new();
        assert!(e.insert(a.clone()));
        assert!(e.insert(b.clone()));
        assert!(!e.insert(v(&[(0, one.clone()), (1, q.add(&one)), (2, one.clone())])));
        assert_eq!(e.rank(), 2);
        // target = 2a + q b
        let two = QScalar::from(2);
        let target = v(&[(0, two.clone()), (1, two.mul(&q).add(&q)), (2, q.clone())]);
        let c = e.solve(&target).unwrap();
        assert_eq!(c[&0], f(two));
        assert_eq!(c[&1], f(q));
        assert!(e.solve(&v(&[(3, one)])).is_none());
    }
}
