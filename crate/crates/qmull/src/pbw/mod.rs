//! A term-rewriting engine for words in divided-power root vectors and
//! Cartan symbols of the quantized enveloping superalgebra of
//! `gl(m|n)`, with exact evaluation on a formal highest-weight vector.
//!
//! The engine works with three layers:
//!
//! * free words of [`GenSymbol`]s with Laurent coefficients
//!   ([`UElement`]),
//! * a commutation table ([`rules`]) that reorders adjacent root-vector
//!   pairs and moves Cartan symbols across root powers, and
//! * a straightening evaluator ([`action`]) that applies a word to a
//!   formal highest-weight vector, producing an exact linear
//!   combination of ordered lowering monomials ([`action::HWVector`]).
//!
//! On top of those, [`verify`] packages the word identities that the
//! rest of the crate relies on (coefficient products for raising words
//! against lowering words, non-vanishing witnesses, and the lowest
//! weight staircase) as mechanically checkable computations.

pub mod action;
pub mod rules;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use crate::qarith::LaurentPoly;
use crate::weights::parity;

pub use action::{act_on_hw, HWVector};
pub use rules::{commute, move_cartan};
pub use verify::{verify_comp, verify_lowe2, verify_non, CompCheck, LoweStage, LoweTrace, NonCheck};

/// The ambient split: all symbol indices live in `1..=m+n` and their
/// parities and `q_i = v^{±1}` deformations are read off the split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Algebra {
    m: usize,
    n: usize,
}

impl Algebra {
    pub fn new(m: usize, n: usize) -> Self {
        Algebra { m, n }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn parity(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.dim(), "index {} out of range", i);
        parity(i, self.m)
    }

    /// `q_i^e`, i.e. `v^e` for even `i` and `v^-e` for odd `i`.
    pub fn qpow(&self, i: usize, e: i64) -> LaurentPoly {
        if self.parity(i) == 0 {
            LaurentPoly::var_pow(e)
        } else {
            LaurentPoly::var_pow(-e)
        }
    }

    /// `q_i - q_i^-1`.
    pub fn q_minus_qinv(&self, i: usize) -> LaurentPoly {
        &self.qpow(i, 1) - &self.qpow(i, -1)
    }

    pub fn root_parity(&self, a: usize, b: usize) -> u8 {
        (self.parity(a) + self.parity(b)) % 2
    }

    pub fn is_odd_root(&self, a: usize, b: usize) -> bool {
        self.root_parity(a, b) == 1
    }
}

/// One generator-level symbol of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSymbol {
    /// The divided power `E_{a,b}^{(exp)}`; raising when `a < b`,
    /// lowering when `a > b`.  Odd root vectors only ever carry
    /// exponent 1 (their squares vanish).
    RootPow { a: usize, b: usize, exp: u32 },
    /// `K_a^{exp}` with a nonzero integer exponent.
    CartanPow { a: usize, exp: i64 },
    /// The Cartan binomial `[K_a; c ; t]` (`b = None`) or
    /// `[K_{a,b}; c ; t]` (`b = Some(..)`), evaluating on a vector of
    /// weight `mu` to the Gaussian binomial with top entry `mu_a + c`
    /// resp. `mu_a - (-1)^{parity(a)+parity(b)} mu_b + c`.
    CartanBinom {
        a: usize,
        b: Option<usize>,
        c: i64,
        t: u32,
    },
}

impl GenSymbol {
    /// Parity of the symbol: root powers contribute their root parity
    /// times the exponent; Cartan symbols are even.
    pub fn parity(&self, alg: &Algebra) -> u8 {
        match *self {
            GenSymbol::RootPow { a, b, exp } => (alg.root_parity(a, b) * (exp % 2) as u8) % 2,
            _ => 0,
        }
    }

    fn is_trivial(&self) -> bool {
        match *self {
            GenSymbol::RootPow { exp, .. } => exp == 0,
            GenSymbol::CartanPow { exp, .. } => exp == 0,
            GenSymbol::CartanBinom { t, .. } => t == 0,
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSymbol::RootPow { a, b, exp } => write!(f, "E({},{},{})", a, b, exp),
            GenSymbol::CartanPow { a, exp } => {
                // Emit unit tokens so the output re-parses under the
                // word grammar.
                let unit = if exp > 0 { "+1" } else { "-1" };
                let parts: Vec<String> = (0..exp.unsigned_abs())
                    .map(|_| format!("K({},{})", a, unit))
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
            GenSymbol::CartanBinom { a, b: None, c, t } => write!(f, "KB({},{},{})", a, c, t),
            GenSymbol::CartanBinom {
                a,
                b: Some(b),
                c,
                t,
            } => write!(f, "KB2({},{},{},{})", a, b, c, t),
        }
    }
}

/// Normalize a free word: drop trivial symbols, reject words containing
/// an odd root power with exponent at least 2 (those terms are zero),
/// and put each maximal run of Cartan symbols — which all commute with
/// one another — into a canonical order, merging equal-index powers.
pub fn normalize_word(alg: &Algebra, word: Vec<GenSymbol>) -> Option<Vec<GenSymbol>> {
    let mut out = Vec::with_capacity(word.len());
    let mut run: Vec<GenSymbol> = Vec::new();

    fn flush(out: &mut Vec<GenSymbol>, run: &mut Vec<GenSymbol>) {
        if run.is_empty() {
            return;
        }
        let mut powers: BTreeMap<usize, i64> = BTreeMap::new();
        let mut binoms = Vec::new();
        for sym in run.drain(..) {
            match sym {
                GenSymbol::CartanPow { a, exp } => *powers.entry(a).or_insert(0) += exp,
                binom => binoms.push(binom),
            }
        }
        for (a, exp) in powers {
            if exp != 0 {
                out.push(GenSymbol::CartanPow { a, exp });
            }
        }
        binoms.sort();
        out.extend(binoms);
    }

    for sym in word {
        if sym.is_trivial() {
            continue;
        }
        match sym {
            GenSymbol::RootPow { a, b, exp } => {
                assert!(a != b && a >= 1 && b >= 1 && a <= alg.dim() && b <= alg.dim());
                if exp >= 2 && alg.is_odd_root(a, b) {
                    return None;
                }
                flush(&mut out, &mut run);
                out.push(sym);
            }
            cartan => run.push(cartan),
        }
    }
    flush(&mut out, &mut run);
    Some(out)
}

/// A finite formal sum of coefficiented words, with identical words
/// merged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<Vec<GenSymbol>, LaurentPoly>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), LaurentPoly::one());
        UElement { terms }
    }

    pub fn from_word(alg: &Algebra, coeff: LaurentPoly, word: Vec<GenSymbol>) -> Self {
        let mut out = UElement::zero();
        out.add_word(alg, coeff, word);
        out
    }

    pub fn symbol(alg: &Algebra, sym: GenSymbol) -> Self {
        UElement::from_word(alg, LaurentPoly::one(), vec![sym])
    }

    pub fn add_word(&mut self, alg: &Algebra, coeff: LaurentPoly, word: Vec<GenSymbol>) {
        if coeff.is_zero() {
            return;
        }
        let word = match normalize_word(alg, word) {
            Some(w) => w,
            None => return,
        };
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GenSymbol>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &[GenSymbol]) -> LaurentPoly {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            // Words stored in a UElement are already normalized, so a
            // plain merge suffices.
            use std::collections::btree_map::Entry;
            match out.terms.entry(w.clone()) {
                Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                Entry::Occupied(mut e) => {
                    let sum = e.get() + c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        out
    }

    pub fn scaled(&self, c: &LaurentPoly) -> UElement {
        let mut out = UElement::zero();
        if c.is_zero() {
            return out;
        }
        for (w, d) in &self.terms {
            out.terms.insert(w.clone(), c * d);
        }
        out
    }

    /// Free (juxtaposition) product.
    pub fn mul(&self, other: &UElement, alg: &Algebra) -> UElement {
        let mut out = UElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut word = w1.clone();
                word.extend_from_slice(w2);
                out.add_word(alg, c1 * c2, word);
            }
        }
        out
    }

    /// The bar-linear antiautomorphism exchanging raising and lowering
    /// vectors: reverse each word, swap `E_{a,b} -> E_{b,a}`, invert
    /// Cartan powers, fix Cartan binomials, and bar the coefficients.
    pub fn upsilon(&self, alg: &Algebra) -> UElement {
        let mut out = UElement::zero();
        for (w, c) in &self.terms {
            let word: Vec<GenSymbol> = w
                .iter()
                .rev()
                .map(|sym| match *sym {
                    GenSymbol::RootPow { a, b, exp } => GenSymbol::RootPow { a: b, b: a, exp },
                    GenSymbol::CartanPow { a, exp } => GenSymbol::CartanPow { a, exp: -exp },
                    binom @ GenSymbol::CartanBinom { .. } => binom,
                })
                .collect();
            out.add_word(alg, c.bar(), word);
        }
        out
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    return format!("({})", c);
                }
                let word: Vec<String> = w.iter().map(|s| s.to_string()).collect();
                format!("({}) {}", c, word.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Expand the root vector `E_{a,b}` into a word in the simple
/// generators, using the recursion through `c = b - 1` (for `a < b`)
/// resp. `c = b + 1` (for `a > b`):
/// `E_{a,b} = E_{a,c} E_{c,b} - q_c^{-(-1)^?} E_{c,b} E_{a,c}` with the
/// coefficient `q_c^{-1}` in the raising and `q_c` in the lowering case.
pub fn root_vector(alg: &Algebra, a: usize, b: usize) -> UElement {
    assert!(a != b && a >= 1 && b >= 1 && a <= alg.dim() && b <= alg.dim());
    if a.abs_diff(b) == 1 {
        return UElement::symbol(alg, GenSymbol::RootPow { a, b, exp: 1 });
    }
    let (c, q_c) = if a < b {
        (b - 1, alg.qpow(b - 1, -1))
    } else {
        (b + 1, alg.qpow(b + 1, 1))
    };
    let outer = root_vector(alg, a, c);
    let inner = UElement::symbol(alg, GenSymbol::RootPow { a: c, b, exp: 1 });
    outer
        .mul(&inner, alg)
        .add(&inner.mul(&outer, alg).scaled(&-&q_c))
}

/// Parse the whitespace-separated word grammar: tokens `E(a,b,M)`,
/// `K(a,+1)`, `K(a,-1)`, `KB(a,c,t)`, `KB2(a,b,c,t)`.  Errors carry the
/// byte position of the offending token.
pub fn parse_word(alg: &Algebra, input: &str) -> Result<Vec<GenSymbol>, String> {
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < input.len() {
        let rest = &input[pos..];
        let skip = rest.len() - rest.trim_start().len();
        pos += skip;
        if pos >= input.len() {
            break;
        }
        let start = pos;
        let token: &str = input[pos..]
            .split_whitespace()
            .next()
            .expect("nonempty remainder");
        pos += token.len();

        let err = |msg: &str| format!("at byte {}: {}", start, msg);
        let open = token
            .find('(')
            .ok_or_else(|| err("expected NAME(args...)"))?;
        if !token.ends_with(')') {
            return Err(err("missing closing parenthesis"));
        }
        let name = &token[..open];
        let args: Vec<&str> = token[open + 1..token.len() - 1].split(',').collect();
        let int = |s: &str, what: &str| -> Result<i64, String> {
            s.trim()
                .parse::<i64>()
                .map_err(|_| err(&format!("invalid {} '{}'", what, s)))
        };
        let index = |s: &str| -> Result<usize, String> {
            let v = int(s, "index")?;
            if v < 1 || v as usize > alg.dim() {
                return Err(err(&format!("index {} out of range 1..={}", v, alg.dim())));
            }
            Ok(v as usize)
        };
        let sym = match name {
            "E" => {
                if args.len() != 3 {
                    return Err(err("E takes (a,b,M)"));
                }
                let a = index(args[0])?;
                let b = index(args[1])?;
                if a == b {
                    return Err(err("E needs a != b"));
                }
                let exp = int(args[2], "exponent")?;
                if exp < 1 {
                    return Err(err("exponent must be at least 1"));
                }
                if exp > 1 && alg.is_odd_root(a, b) {
                    return Err(err("odd root vectors only carry exponent 1"));
                }
                GenSymbol::RootPow {
                    a,
                    b,
                    exp: exp as u32,
                }
            }
            "K" => {
                if args.len() != 2 {
                    return Err(err("K takes (a,+1) or (a,-1)"));
                }
                let a = index(args[0])?;
                let exp = match args[1].trim() {
                    "+1" | "1" => 1,
                    "-1" => -1,
                    other => return Err(err(&format!("invalid Cartan exponent '{}'", other))),
                };
                GenSymbol::CartanPow { a, exp }
            }
            "KB" => {
                if args.len() != 3 {
                    return Err(err("KB takes (a,c,t)"));
                }
                let a = index(args[0])?;
                let c = int(args[1], "shift")?;
                let t = int(args[2], "binomial depth")?;
                if t < 0 {
                    return Err(err("binomial depth must be nonnegative"));
                }
                GenSymbol::CartanBinom {
                    a,
                    b: None,
                    c,
                    t: t as u32,
                }
            }
            "KB2" => {
                if args.len() != 4 {
                    return Err(err("KB2 takes (a,b,c,t)"));
                }
                let a = index(args[0])?;
                let b = index(args[1])?;
                let c = int(args[2], "shift")?;
                let t = int(args[3], "binomial depth")?;
                if t < 0 {
                    return Err(err("binomial depth must be nonnegative"));
                }
                GenSymbol::CartanBinom {
                    a,
                    b: Some(b),
                    c,
                    t: t as u32,
                }
            }
            other => return Err(err(&format!("unknown symbol '{}'", other))),
        };
        out.push(sym);
    }
    Ok(out)
}
