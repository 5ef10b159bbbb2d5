//! Subword rewriting systems over the generator words and their critical-pair
//! (overlap) analysis.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{letter, swap_rule, Algebra, NCPoly, Word, ZPoly, PERMUTATIONS};
use crate::error::Result;
use crate::qscalar::QScalar;

/// `lhs → Σ c · w`.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Vec<(Word, ZPoly)>,
}

impl RewriteRule {
    pub fn rhs_poly(&self) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w, c) in &self.rhs {
            p.add_term(w.clone(), c.to_ratfunc().into());
        }
        p
    }
}

/// An ordered list of rules, applied leftmost-first.
#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: Vec<RewriteRule>,
}

/// An overlap word whose two one-step reductions were followed to irreducible
/// forms.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Word,
    pub rules: (usize, usize),
    pub left: NCPoly,
    pub right: NCPoly,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub overlaps_checked: usize,
    /// Both sides rewrote to the same irreducible polynomial.
    pub resolved: usize,
    /// The sides differ under this rule set, but their difference lies in the
    /// two-sided ideal (its canonical normal form vanishes).
    pub resolved_by_membership: Vec<Ambiguity>,
    /// Differences that are not in the ideal. Expected to be empty.
    pub unresolved: Vec<Ambiguity>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.resolved_by_membership.is_empty() && self.unresolved.is_empty()
    }

    pub fn all_resolve(&self) -> bool {
        self.unresolved.is_empty()
    }
}

impl RewriteSystem {
    pub fn empty() -> Self {
        RewriteSystem::default()
    }

    /// The 36 quadratic commutation rules `y x → …` for letters `y > x`.
    pub fn commutation() -> Self {
        let mut rules = Vec::new();
        for y in 0..9u8 {
            for x in 0..y {
                let rhs = swap_rule(y, x)
                    .into_iter()
                    .map(|(c, a, b)| (Word::from_slice(&[a, b]), c))
                    .collect();
                rules.push(RewriteRule { lhs: Word::from_slice(&[y, x]), rhs });
            }
        }
        RewriteSystem { rules }
    }

    /// Commutation rules plus the determinant relation oriented against the
    /// word `u^1_3 u^2_2 u^3_1`.
    pub fn with_cubic() -> Self {
        let mut sys = RewriteSystem::commutation();
        let lhs = Word::from_slice(&[letter(1, 3), letter(2, 2), letter(3, 1)]);
        // (-q)^3 lhs = 1 - Σ_{π ≠ (321)} (-q)^{l(π)} w_π
        let mut rhs = Vec::new();
        rhs.push((Word::new(), ZPoly::monomial(-1, -6)));
        for (perm, inv) in PERMUTATIONS {
            if inv == 3 {
                continue;
            }
            let w = Word::from_slice(&[letter(1, perm[0]), letter(2, perm[1]), letter(3, perm[2])]);
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            rhs.push((w, ZPoly::monomial(sign, 2 * inv - 6)));
        }
        sys.rules.push(RewriteRule { lhs, rhs });
        sys
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (k, r) in self.rules.iter().enumerate() {
                if w[pos..].starts_with(&r.lhs) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    fn apply(rule: &RewriteRule, w: &[u8], pos: usize) -> Vec<(Word, ZPoly)> {
        rule.rhs
            .iter()
            .map(|(r, c)| {
                let mut u = Word::from_slice(&w[..pos]);
                u.extend_from_slice(r);
                u.extend_from_slice(&w[pos + rule.lhs.len()..]);
                (u, c.clone())
            })
            .collect()
    }

    /// Rewrites until no left-hand side occurs, always at the leftmost match.
    pub fn reduce_terms(&self, start: Vec<(Word, ZPoly)>) -> Result<HashMap<Word, ZPoly>> {
        let mut done: HashMap<Word, ZPoly> = HashMap::new();
        let mut work = start;
        while let Some((w, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            match self.find(&w) {
                None => {
                    let e = done.entry(w.clone()).or_default();
                    e.add_assign(&c)?;
                    if e.is_zero() {
                        done.remove(&w);
                    }
                }
                Some((pos, k)) => {
                    for (u, d) in RewriteSystem::apply(&self.rules[k], &w, pos) {
                        work.push((u, d.mul(&c)?));
                    }
                }
            }
        }
        Ok(done)
    }

    pub fn reduce(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            for (u, z) in self.reduce_terms(alloc::vec![(w.clone(), ZPoly::one())])? {
                out.add_term(u, c.mul_ratfunc(&z.to_ratfunc()));
            }
        }
        Ok(out)
    }

    /// Every rule replaces its left-hand side by words that are strictly
    /// smaller in the degree-lexicographic order.
    pub fn is_decreasing(&self) -> bool {
        self.rules
            .iter()
            .all(|r| r.rhs.iter().all(|(w, _)| super::deglex_cmp(w, &r.lhs) == core::cmp::Ordering::Less))
    }

    /// All overlap and inclusion ambiguities of total length at most
    /// `max_degree`, each reduced both ways.
    pub fn check_local_confluence(&self, max_degree: usize, alg: &Algebra) -> Result<ConfluenceReport> {
        let mut report = ConfluenceReport::default();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // proper overlaps: a suffix of l1 equals a prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let mut word = l1.clone();
                    word.extend_from_slice(&l2[k..]);
                    if word.len() > max_degree {
                        continue;
                    }
                    self.resolve(&mut report, word, (i, j), 0, l1.len() - k, alg)?;
                }
                // inclusions: l2 occurs inside l1
                if i != j && l2.len() < l1.len() {
                    for pos in 0..=(l1.len() - l2.len()) {
                        if l1[pos..pos + l2.len()] == l2[..] && l1.len() <= max_degree {
                            self.resolve(&mut report, l1.clone(), (i, j), 0, pos, alg)?;
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    fn resolve(
        &self,
        report: &mut ConfluenceReport,
        word: Word,
        rules: (usize, usize),
        pos1: usize,
        pos2: usize,
        alg: &Algebra,
    ) -> Result<()> {
        report.overlaps_checked += 1;
        let left = self.reduce_terms(RewriteSystem::apply(&self.rules[rules.0], &word, pos1))?;
        let right = self.reduce_terms(RewriteSystem::apply(&self.rules[rules.1], &word, pos2))?;
        let to_poly = |m: HashMap<Word, ZPoly>| {
            let mut p = NCPoly::zero();
            for (w, c) in m {
                p.add_term(w, QScalar::from(c.to_ratfunc()));
            }
            p
        };
        let (left, right) = (to_poly(left), to_poly(right));
        if left == right {
            report.resolved += 1;
            return Ok(());
        }
        let amb = Ambiguity { word, rules, left: left.clone(), right: right.clone() };
        if alg.normal_form(&left.sub(&right))?.is_zero() {
            report.resolved_by_membership.push(amb);
        } else {
            report.unresolved.push(amb);
        }
        Ok(())
    }
}
