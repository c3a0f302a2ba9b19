//! Evaluation of symbol words on a formal highest-weight vector.
//!
//! A vector is stored as an exact linear combination of *normally
//! ordered* lowering monomials applied to the generating vector of
//! weight `lambda`: each monomial is a list of divided lowering powers
//! `E_{hi,lo}^{(exp)}` sorted by `(hi ascending, lo descending)`, with
//! equal roots merged.  Applying a word walks its symbols right to
//! left: Cartan symbols act diagonally through the weight of each
//! monomial, lowering powers are inserted into the normal order, and
//! raising powers are pushed rightward through the commutation table
//! until they reach the generating vector and vanish.
//!
//! Straightening terminates, but as a hard backstop every elementary
//! step draws from a fixed fuel budget and exhausting it panics rather
//! than looping.

use std::collections::BTreeMap;

use super::rules::commute;
use super::{Algebra, GenSymbol, UElement};
use crate::qarith::{gauss_binom, LaurentPoly};
use crate::weights::Weight;

/// One ordered factor `E_{hi,lo}^{(exp)}` (`hi > lo`, `exp >= 1`) of a
/// lowering monomial.
pub type NegEntry = (usize, usize, u32);

fn entry_key(hi: usize, lo: usize) -> (usize, usize) {
    (hi, usize::MAX - lo)
}

/// An element of the module generated by a formal highest-weight
/// vector of weight `lambda`, expressed in normally ordered lowering
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HWVector {
    lambda: Weight,
    terms: BTreeMap<Vec<NegEntry>, LaurentPoly>,
}

impl HWVector {
    /// The generating vector itself.
    pub fn maximal(lambda: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), LaurentPoly::one());
        HWVector { lambda, terms }
    }

    pub fn zero(lambda: Weight) -> Self {
        HWVector {
            lambda,
            terms: BTreeMap::new(),
        }
    }

    fn single(lambda: Weight, key: Vec<NegEntry>, coeff: LaurentPoly) -> Self {
        let mut out = HWVector::zero(lambda);
        out.add_term(key, coeff);
        out
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is exactly the generating vector.
    pub fn is_maximal_unit(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&[]).is_one()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<NegEntry>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[NegEntry]) -> LaurentPoly {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add_term(&mut self, key: Vec<NegEntry>, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> HWVector {
        let mut out = HWVector::zero(self.lambda.clone());
        if c.is_zero() {
            return out;
        }
        for (key, coeff) in &self.terms {
            out.terms.insert(key.clone(), c * coeff);
        }
        out
    }

    /// The weight of the monomial `key` applied to the generator.
    pub fn weight_of(&self, key: &[NegEntry]) -> Weight {
        let mut entries = self.lambda.entries().to_vec();
        for &(hi, lo, exp) in key {
            entries[hi - 1] += exp as i64;
            entries[lo - 1] -= exp as i64;
        }
        Weight::new(entries, self.lambda.m(), self.lambda.n())
    }
}

impl std::ops::Add for HWVector {
    type Output = HWVector;

    fn add(mut self, other: HWVector) -> HWVector {
        assert_eq!(self.lambda, other.lambda, "mismatched ground weights");
        for (key, coeff) in other.terms {
            self.add_term(key, coeff);
        }
        self
    }
}

impl std::fmt::Display for HWVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, coeff)| {
                if key.is_empty() {
                    return format!("({}) 1", coeff);
                }
                let word: Vec<String> = key
                    .iter()
                    .map(|&(hi, lo, exp)| format!("E({},{},{})", hi, lo, exp))
                    .collect();
                format!("({}) {}", coeff, word.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

const FUEL: u64 = 100_000_000;

/// Apply an element of the algebra to the formal highest-weight vector
/// of weight `lambda` and return the straightened result.
pub fn act_on_hw(alg: &Algebra, u: &UElement, lambda: &Weight) -> HWVector {
    assert_eq!(
        (lambda.m(), lambda.n()),
        (alg.m(), alg.n()),
        "weight split must match the algebra"
    );
    let mut fuel = FUEL;
    let mut out = HWVector::zero(lambda.clone());
    for (word, coeff) in u.terms() {
        let start = HWVector::single(lambda.clone(), Vec::new(), coeff.clone());
        out = out + apply_word(alg, word, start, &mut fuel);
    }
    out
}

fn burn(fuel: &mut u64) {
    if *fuel == 0 {
        panic!("straightening step budget exhausted (possible nontermination)");
    }
    *fuel -= 1;
}

fn apply_word(alg: &Algebra, word: &[GenSymbol], start: HWVector, fuel: &mut u64) -> HWVector {
    let mut vec = start;
    for sym in word.iter().rev() {
        if vec.is_zero() {
            break;
        }
        vec = apply_symbol(alg, sym, vec, fuel);
    }
    vec
}

fn apply_symbol(alg: &Algebra, sym: &GenSymbol, vec: HWVector, fuel: &mut u64) -> HWVector {
    burn(fuel);
    match *sym {
        GenSymbol::CartanPow { a, exp } => {
            let mut out = HWVector::zero(vec.lambda().clone());
            for (key, coeff) in vec.terms() {
                let mu = vec.weight_of(key);
                out.add_term(key.clone(), &alg.qpow(a, exp * mu.get(a)) * coeff);
            }
            out
        }
        GenSymbol::CartanBinom { a, b, c, t } => {
            let mut out = HWVector::zero(vec.lambda().clone());
            for (key, coeff) in vec.terms() {
                let mu = vec.weight_of(key);
                let mut arg = mu.get(a) + c;
                if let Some(b) = b {
                    let eps = if alg.root_parity(a, b) == 1 { -1 } else { 1 };
                    arg -= eps * mu.get(b);
                }
                out.add_term(key.clone(), &gauss_binom(arg, t as i64) * coeff);
            }
            out
        }
        GenSymbol::RootPow { a, b, exp } if a > b => {
            let mut out = HWVector::zero(vec.lambda().clone());
            let lambda = vec.lambda().clone();
            for (key, coeff) in vec.terms() {
                out = out + prepend_lowering(alg, (a, b, exp), key, coeff.clone(), &lambda, fuel);
            }
            out
        }
        GenSymbol::RootPow { a, b, exp } => {
            // Raising power: annihilates the bare generator, otherwise
            // commutes past the leading lowering factor and recurses.
            let mut out = HWVector::zero(vec.lambda().clone());
            let lambda = vec.lambda().clone();
            for (key, coeff) in vec.terms() {
                if key.is_empty() {
                    continue;
                }
                let (hhi, hlo, hexp) = key[0];
                let head = GenSymbol::RootPow {
                    a: hhi,
                    b: hlo,
                    exp: hexp,
                };
                let tail = key[1..].to_vec();
                let rewritten = commute(alg, &GenSymbol::RootPow { a, b, exp }, &head);
                for (w, cw) in rewritten.terms() {
                    let start = HWVector::single(lambda.clone(), tail.clone(), coeff * cw);
                    out = out + apply_word(alg, w, start, fuel);
                }
            }
            out
        }
    }
}

/// Insert one lowering power into the normal order of `key`.
fn prepend_lowering(
    alg: &Algebra,
    (hi, lo, exp): NegEntry,
    key: &[NegEntry],
    coeff: LaurentPoly,
    lambda: &Weight,
    fuel: &mut u64,
) -> HWVector {
    burn(fuel);
    if key.is_empty() || entry_key(hi, lo) < entry_key(key[0].0, key[0].1) {
        let mut out = Vec::with_capacity(key.len() + 1);
        out.push((hi, lo, exp));
        out.extend_from_slice(key);
        return HWVector::single(lambda.clone(), out, coeff);
    }
    let (hhi, hlo, hexp) = key[0];
    if (hi, lo) == (hhi, hlo) {
        // Merge equal roots: odd squares vanish.
        if alg.is_odd_root(hi, lo) {
            return HWVector::zero(lambda.clone());
        }
        let merged = exp + hexp;
        let mut out = Vec::with_capacity(key.len());
        out.push((hi, lo, merged));
        out.extend_from_slice(&key[1..]);
        let binom = gauss_binom(merged as i64, exp as i64);
        return HWVector::single(lambda.clone(), out, &coeff * &binom);
    }
    // Out of order: rewrite the leading pair and re-apply.
    let x = GenSymbol::RootPow {
        a: hi,
        b: lo,
        exp,
    };
    let head = GenSymbol::RootPow {
        a: hhi,
        b: hlo,
        exp: hexp,
    };
    let rewritten = commute(alg, &x, &head);
    let tail = &key[1..];
    let mut out = HWVector::zero(lambda.clone());
    for (w, cw) in rewritten.terms() {
        let start = HWVector::single(lambda.clone(), tail.to_vec(), &coeff * cw);
        out = out + apply_word(alg, w, start, fuel);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::root_vector;
    use super::*;

    fn e(a: usize, b: usize, exp: u32) -> GenSymbol {
        GenSymbol::RootPow { a, b, exp }
    }

    fn act_word(alg: &Algebra, word: Vec<GenSymbol>, lambda: &Weight) -> HWVector {
        act_on_hw(alg, &UElement::from_word(alg, LaurentPoly::one(), word), lambda)
    }

    #[test]
    fn cartan_scales_the_generator() {
        let alg = Algebra::new(2, 1);
        let lambda = Weight::new(vec![3, 1, 2], 2, 1);
        let got = act_word(&alg, vec![GenSymbol::CartanPow { a: 1, exp: 1 }], &lambda);
        assert_eq!(got.coeff(&[]), LaurentPoly::monomial(3, 1));
        // Index 3 is odd, so K_3 scales by v^{-2}.
        let got = act_word(&alg, vec![GenSymbol::CartanPow { a: 3, exp: 1 }], &lambda);
        assert_eq!(got.coeff(&[]), LaurentPoly::monomial(-2, 1));
    }

    #[test]
    fn raising_annihilates_the_generator() {
        let alg = Algebra::new(2, 1);
        let lambda = Weight::new(vec![3, 1, 2], 2, 1);
        assert!(act_word(&alg, vec![e(1, 2, 1)], &lambda).is_zero());
        assert!(act_word(&alg, vec![e(1, 3, 1)], &lambda).is_zero());
        assert!(act_word(&alg, vec![e(1, 2, 4)], &lambda).is_zero());
    }

    #[test]
    fn odd_pairing_on_the_generator() {
        // E_{1,2} E_{2,1} m = [lambda_1 + lambda_2] m for the odd root.
        let alg = Algebra::new(1, 1);
        let lambda = Weight::new(vec![1, 0], 1, 1);
        let got = act_word(&alg, vec![e(1, 2, 1), e(2, 1, 1)], &lambda);
        assert!(got.is_maximal_unit(), "got {}", got);

        let lambda = Weight::new(vec![2, 1], 1, 1);
        let got = act_word(&alg, vec![e(1, 2, 1), e(2, 1, 1)], &lambda);
        assert_eq!(got.coeff(&[]), crate::qarith::quantum_int(3));
    }

    #[test]
    fn lowering_straightening_anchor() {
        // F_2^{(2)} F_1 m for lambda = (2,1,0) lands on two monomials
        // with coefficients v^2 and v.
        let alg = Algebra::new(3, 0);
        let lambda = Weight::new(vec![2, 1, 0], 3, 0);
        let got = act_word(&alg, vec![e(3, 2, 2), e(2, 1, 1)], &lambda);
        assert_eq!(got.coeff(&[(2, 1, 1), (3, 2, 2)]), LaurentPoly::monomial(2, 1));
        assert_eq!(got.coeff(&[(3, 2, 1), (3, 1, 1)]), LaurentPoly::monomial(1, 1));
        assert_eq!(got.support_size(), 2);
        // Every monomial sits in the expected weight space.
        for (key, _) in got.terms() {
            assert_eq!(got.weight_of(key).entries(), &[1, 0, 2]);
        }
    }

    #[test]
    fn raising_peels_one_stage() {
        // E_1 applied to the previous anchor collapses to E_{3,2}^{(2)} m.
        let alg = Algebra::new(3, 0);
        let lambda = Weight::new(vec![2, 1, 0], 3, 0);
        let got = act_word(&alg, vec![e(1, 2, 1), e(3, 2, 2), e(2, 1, 1)], &lambda);
        assert_eq!(got.coeff(&[(3, 2, 2)]), LaurentPoly::one());
        assert_eq!(got.support_size(), 1);
    }

    #[test]
    fn full_staircase_recovery_rank_three() {
        // E_1 E_2^{(2)} F_2^{(2)} F_1 m = m for lambda = (2,1,0).
        let alg = Algebra::new(3, 0);
        let lambda = Weight::new(vec![2, 1, 0], 3, 0);
        let got = act_word(
            &alg,
            vec![e(1, 2, 1), e(2, 3, 2), e(3, 2, 2), e(2, 1, 1)],
            &lambda,
        );
        assert!(got.is_maximal_unit(), "got {}", got);
    }

    #[test]
    fn divided_powers_match_iterated_singles() {
        // E^{(M)} * [M]! = E^M, checked through the evaluator on both
        // raising and lowering powers over contexts that force real
        // straightening.
        use crate::qarith::quantum_factorial;
        let alg = Algebra::new(2, 2);
        let lambda = Weight::new(vec![3, 1, 0, -1], 2, 2);
        let contexts: Vec<Vec<GenSymbol>> = vec![
            vec![e(2, 1, 2)],
            vec![e(3, 1, 1), e(4, 3, 1)],
            vec![e(2, 1, 1), e(4, 2, 1)],
            vec![e(3, 2, 1), e(3, 1, 1)],
        ];
        for (a, b, m) in [(1usize, 2usize, 2u32), (1, 2, 3), (2, 1, 2), (2, 1, 3)] {
            for ctx in &contexts {
                let mut divided = vec![e(a, b, m)];
                divided.extend(ctx.iter().copied());
                let mut singles = vec![e(a, b, 1); m as usize];
                singles.extend(ctx.iter().copied());
                let lhs = act_word(&alg, divided, &lambda).scaled(&quantum_factorial(m));
                let rhs = act_word(&alg, singles, &lambda);
                assert_eq!(lhs, rhs, "divided power mismatch for E({},{})^({})", a, b, m);
            }
        }
    }

    #[test]
    fn composite_roots_match_their_expansions() {
        // Acting with a composite root vector agrees with acting with
        // its expansion into simple generators, across every span and
        // both directions, over contexts that reach the staggered
        // rules.
        for (m, n) in [(4usize, 0usize), (2, 2), (1, 3), (0, 4)] {
            let alg = Algebra::new(m, n);
            let lambda = Weight::new(vec![3, 1, 0, -2], m, n);
            let contexts: Vec<Vec<GenSymbol>> = vec![
                vec![],
                vec![e(4, 2, 1)],
                vec![e(3, 1, 1)],
                vec![e(2, 1, 1), e(4, 3, 1)],
                vec![e(4, 1, 1), e(3, 2, 1)],
                vec![e(3, 2, 1), e(4, 2, 1)],
                vec![e(2, 1, 1), e(3, 1, 1), e(4, 1, 1)],
            ];
            for &(a, b) in &[(1usize, 3usize), (1, 4), (2, 4), (3, 1), (4, 1), (4, 2)] {
                let composite = UElement::symbol(&alg, e(a, b, 1));
                let expansion = root_vector(&alg, a, b);
                for ctx in &contexts {
                    let tail = UElement::from_word(&alg, LaurentPoly::one(), ctx.clone());
                    let lhs = act_on_hw(&alg, &composite.mul(&tail, &alg), &lambda);
                    let rhs = act_on_hw(&alg, &expansion.mul(&tail, &alg), &lambda);
                    assert_eq!(
                        lhs, rhs,
                        "expansion mismatch for E({},{}) at split ({},{})",
                        a, b, m, n
                    );
                }
            }
        }
    }

    #[test]
    fn odd_squares_act_by_zero() {
        // Applying the same odd root vector twice kills every vector,
        // even though the two applications straighten separately.
        let alg = Algebra::new(2, 2);
        let lambda = Weight::new(vec![3, 1, 0, -1], 2, 2);
        let contexts: Vec<Vec<GenSymbol>> = vec![
            vec![e(3, 1, 1), e(4, 3, 1)],
            vec![e(3, 2, 1), e(4, 2, 1)],
            vec![e(2, 1, 2), e(4, 1, 1)],
        ];
        for &(a, b) in &[(2usize, 3usize), (1, 3), (2, 4), (3, 2), (4, 2)] {
            assert!(alg.is_odd_root(a, b));
            for ctx in &contexts {
                let mut word = vec![e(a, b, 1), e(a, b, 1)];
                word.extend(ctx.iter().copied());
                let got = act_word(&alg, word, &lambda);
                assert!(
                    got.is_zero(),
                    "E({},{}) squared should kill the module, got {}",
                    a,
                    b,
                    got
                );
            }
        }
    }

    #[test]
    fn weights_are_homogeneous_under_words() {
        // Odd roots must keep exponent 1 for the word to survive at
        // all; this one straightens to a single nonzero monomial.
        let alg = Algebra::new(2, 1);
        let lambda = Weight::new(vec![4, 1, 1], 2, 1);
        let word = vec![e(3, 1, 1), e(3, 2, 1), e(2, 1, 2)];
        let got = act_word(&alg, word, &lambda);
        assert!(!got.is_zero());
        let mut expected = lambda.entries().to_vec();
        // Net shift of the word: each E_{hi,lo}^{(exp)} moves exp from
        // lo to hi.
        for &(hi, lo, exp) in &[(3usize, 1usize, 1i64), (3, 2, 1), (2, 1, 2)] {
            expected[hi - 1] += exp;
            expected[lo - 1] -= exp;
        }
        for (key, _) in got.terms() {
            assert_eq!(got.weight_of(key).entries(), expected.as_slice());
        }
    }
}
