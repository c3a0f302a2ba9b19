//! Exact arithmetic in the Laurent polynomial ring `Z[v, v^-1]` and its
//! specialisations at a root of unity.
//!
//! Everything downstream (Hecke algebras, straightening rules, word
//! identities) is computed over [`LaurentPoly`], so this module keeps the
//! representation simple and exact: a sparse map from exponents to nonzero
//! integer coefficients.  Specialisation at a primitive `l'`-th root of
//! unity `q` is handled by [`eval_at_q`], which reduces modulo the `l'`-th
//! cyclotomic polynomial, while vanishing of Gaussian binomials in either
//! characteristic is decided combinatorially by [`lucas_nonzero`].
//!
//! Throughout, `l'` is the multiplicative order of `q` and `l` is the
//! order of `q^2`, so `l = l'` for odd `l'` and `l = l'/2` for even `l'`.
//! Quantum integers `[i]` vanish at `q` exactly when `l` divides `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Sparse Laurent polynomial in `v` with integer coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(0, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `v^e`.
    pub fn var_pow(e: i64) -> Self {
        LaurentPoly::monomial(e, 1)
    }

    /// The monomial `c * v^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == 1
    }

    /// Coefficient of `v^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Iterate `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    fn insert(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, a) in self.iter() {
            out.insert(e, a * c);
        }
        out
    }

    /// Multiply by the monomial `v^e`.
    pub fn shifted(&self, e: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (d, a) in self.iter() {
            out.insert(d + e, a);
        }
        out
    }

    /// The bar involution `v -> v^-1` (negates every exponent).
    pub fn bar(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.iter() {
            out.insert(-e, c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    ///
    /// Division proceeds over the integers, so "exact" means exact in
    /// `Z[v, v^-1]`, not merely over the rationals.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let (dlead_e, dlead_c) = d.iter().next_back()?;
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = rem.iter().next_back().unwrap();
            if rlead_c % dlead_c != 0 {
                return None;
            }
            let span_r = rlead_e - rem.iter().next().unwrap().0;
            let span_d = dlead_e - d.iter().next().unwrap().0;
            if span_r < span_d {
                return None;
            }
            let qe = rlead_e - dlead_e;
            let qc = rlead_c / dlead_c;
            quot.insert(qe, qc);
            rem = &rem - &d.shifted(qe).scaled(qc);
        }
        Some(quot)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.insert(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.insert(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scaled(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (sign, mag) = if *c < 0 { ("-", -*c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match (*e, mag) {
                (0, m) => write!(f, "{}", m)?,
                (1, 1) => write!(f, "v")?,
                (1, m) => write!(f, "{}v", m)?,
                (exp, 1) => write!(f, "v^{}", exp)?,
                (exp, m) => write!(f, "{}v^{}", m, exp)?,
            }
        }
        Ok(())
    }
}

/// The quantum integer `[i] = (v^i - v^-i)/(v - v^-1)`.
///
/// `[0] = 0`, `[-i] = -[i]`, and `[i] = v^(i-1) + v^(i-3) + ... + v^(1-i)`
/// for `i > 0`.
pub fn quantum_int(i: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let sign = if i < 0 { -1 } else { 1 };
    let n = i.unsigned_abs();
    for k in 0..n {
        out.insert(i.abs() - 1 - 2 * k as i64, sign);
    }
    out
}

/// The quantum factorial `[t]! = [t][t-1]...[1]`.
pub fn quantum_factorial(t: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..=t {
        out = &out * &quantum_int(i as i64);
    }
    out
}

/// The symmetric Gaussian binomial `[s ; t] = [s][s-1]...[s-t+1] / [t]!`.
///
/// Defined for every integer `s`; vanishes for `t < 0`.  For negative top
/// entry it satisfies `[-a ; t] = (-1)^t [a+t-1 ; t]`.  Always bar-invariant.
pub fn gauss_binom(s: i64, t: i64) -> LaurentPoly {
    if t < 0 {
        return LaurentPoly::zero();
    }
    // Divide by [i] as soon as the factor [s-i+1] is multiplied in, so
    // every intermediate value is the Gaussian binomial [s ; i] times a
    // single quantum integer.  Deferring the whole division by [t]!
    // makes the numerator's coefficients overflow already around s = 40.
    let mut out = LaurentPoly::one();
    for i in 1..=t {
        out = &out * &quantum_int(s - i + 1);
        out = out
            .div_exact(&quantum_int(i))
            .expect("Gaussian binomial numerator is always divisible by [t]!");
    }
    out
}

/// Either a finite positive order or infinite order.
///
/// Used both for `l'` (the order of `q`) and `l` (the order of `q^2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinity,
}

impl Order {
    /// Divisibility with the convention that infinity divides only zero.
    pub fn divides(self, x: i64) -> bool {
        match self {
            Order::Infinity => x == 0,
            Order::Finite(l) => x % l as i64 == 0,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(l) => write!(f, "{}", l),
            Order::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Order {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "infinity" | "oo" => Ok(Order::Infinity),
            _ => s
                .parse::<u64>()
                .map(Order::Finite)
                .map_err(|_| format!("expected a positive integer or 'inf', got '{}'", s)),
        }
    }
}

/// Ambient data for specialising at a root of unity: the order `l'` of
/// `q`, the derived order `l` of `q^2`, and the field characteristic.
///
/// The characteristic is `0` or an odd prime not dividing a finite `l'`
/// (so that a primitive `l'`-th root of unity exists); `l'` is at least 3
/// or infinite.
#[derive(Clone, Debug)]
pub struct CycloContext {
    l_prime: Order,
    l: Order,
    field_char: u64,
    /// Ascending coefficients of the `l'`-th cyclotomic polynomial
    /// (cached for finite `l'`).
    phi: Option<Vec<i64>>,
}

impl CycloContext {
    pub fn new(l_prime: Order, field_char: u64) -> Self {
        if field_char != 0 {
            assert!(
                field_char % 2 == 1 && is_prime(field_char),
                "field characteristic must be 0 or an odd prime, got {}",
                field_char
            );
        }
        let l = match l_prime {
            Order::Infinity => Order::Infinity,
            Order::Finite(lp) => {
                assert!(lp >= 3, "the order of q must be at least 3, got {}", lp);
                if field_char != 0 {
                    assert!(
                        lp % field_char != 0,
                        "no primitive {}-th root of unity in characteristic {}",
                        lp,
                        field_char
                    );
                }
                Order::Finite(if lp % 2 == 0 { lp / 2 } else { lp })
            }
        };
        let phi = match l_prime {
            Order::Finite(lp) => Some(cyclotomic(lp)),
            Order::Infinity => None,
        };
        CycloContext {
            l_prime,
            l,
            field_char,
            phi,
        }
    }

    /// Build a context whose `q^2` has the given order `l`, picking the
    /// canonical `l'` (`l` itself when odd, `2l` when even).
    pub fn with_q_square_order(l: Order, field_char: u64) -> Self {
        let l_prime = match l {
            Order::Infinity => Order::Infinity,
            Order::Finite(l) => {
                assert!(l >= 2, "the order of q^2 must be at least 2, got {}", l);
                Order::Finite(if l % 2 == 1 { l } else { 2 * l })
            }
        };
        CycloContext::new(l_prime, field_char)
    }

    pub fn l_prime(&self) -> Order {
        self.l_prime
    }

    /// The order of `q^2`.
    pub fn l(&self) -> Order {
        self.l
    }

    pub fn field_char(&self) -> u64 {
        self.field_char
    }

    /// Whether the quantum integer `[i]` vanishes at `q` (any characteristic).
    pub fn quantum_int_is_zero(&self, i: i64) -> bool {
        self.l.divides(i)
    }
}

/// Residue of a Laurent polynomial at the chosen root of unity: the
/// canonical representative modulo the `l'`-th cyclotomic polynomial
/// (degree below `phi(l')`, computed after folding exponents modulo `l'`),
/// or the unreduced polynomial when `l'` is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycloElt {
    Exact(LaurentPoly),
    Reduced { l_prime: u64, coeffs: Vec<i64> },
}

impl CycloElt {
    pub fn is_zero(&self) -> bool {
        match self {
            CycloElt::Exact(p) => p.is_zero(),
            CycloElt::Reduced { coeffs, .. } => coeffs.is_empty(),
        }
    }
}

impl fmt::Display for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloElt::Exact(p) => write!(f, "{}", p),
            CycloElt::Reduced { coeffs, .. } => {
                let mut poly = LaurentPoly::zero();
                for (e, &c) in coeffs.iter().enumerate() {
                    poly.insert(e as i64, c);
                }
                write!(f, "{}", poly)
            }
        }
    }
}

/// Evaluate at the root of unity in characteristic 0.
///
/// Panics in positive characteristic, where exact cyclotomic residues are
/// not available; vanishing questions there go through [`lucas_nonzero`].
pub fn eval_at_q(p: &LaurentPoly, ctx: &CycloContext) -> CycloElt {
    assert_eq!(
        ctx.field_char(),
        0,
        "exact cyclotomic evaluation requires characteristic 0; use lucas_nonzero"
    );
    match ctx.l_prime {
        Order::Infinity => CycloElt::Exact(p.clone()),
        Order::Finite(lp) => {
            // v^(l') = 1, so fold every exponent into [0, l') first.
            let mut dense = vec![0i64; lp as usize];
            for (e, c) in p.iter() {
                dense[e.rem_euclid(lp as i64) as usize] += c;
            }
            let phi = ctx.phi.as_ref().expect("finite context caches phi");
            let mut coeffs = poly_rem(&dense, phi);
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
            CycloElt::Reduced {
                l_prime: lp,
                coeffs,
            }
        }
    }
}

/// Whether `p` vanishes at the root of unity (characteristic 0 only).
pub fn is_zero_at_q(p: &LaurentPoly, ctx: &CycloContext) -> bool {
    eval_at_q(p, ctx).is_zero()
}

/// Digit criterion for non-vanishing of the Gaussian binomial `[s ; t]`
/// at the root of unity, valid in every admissible characteristic.
///
/// With `l` the order of `q^2`, write `s = s1*l + s0` and `t = t1*l + t0`
/// (`0 <= s0, t0 < l`).  In characteristic 0 the binomial is nonzero at
/// `q` iff `t0 <= s0` and `t1 <= s1`; in characteristic `p` the integer
/// binomial `C(s1, t1)` must additionally be nonzero mod `p` (checked by
/// base-`p` digits).  For infinite `l` the binomial never vanishes for
/// `0 <= t <= s`.  Negative tops reduce through
/// `[-a ; t] = (-1)^t [a+t-1 ; t]`.
pub fn lucas_nonzero(s: i64, t: i64, ctx: &CycloContext) -> bool {
    if t < 0 {
        return false;
    }
    if t == 0 {
        return true;
    }
    if s < 0 {
        return lucas_nonzero(-s + t - 1, t, ctx);
    }
    match ctx.l() {
        Order::Infinity => t <= s,
        Order::Finite(l) => {
            let l = l as i64;
            let (s1, s0) = (s / l, s % l);
            let (t1, t0) = (t / l, t % l);
            if t0 > s0 || t1 > s1 {
                return false;
            }
            let p = ctx.field_char();
            if p == 0 {
                return true;
            }
            binom_nonzero_mod_p(s1 as u64, t1 as u64, p)
        }
    }
}

/// `C(n, k) != 0 (mod p)` via base-`p` digits.
fn binom_nonzero_mod_p(mut n: u64, mut k: u64, p: u64) -> bool {
    while n > 0 || k > 0 {
        if k % p > n % p {
            return false;
        }
        n /= p;
        k /= p;
    }
    true
}

/// `q_a^e` where `q_a = v` for indices in the even block (`a <= m`) and
/// `q_a = v^-1` in the odd block.  Indices are 1-based in `1..=m+n`.
pub fn q_a_power(a: usize, e: i64, m: usize, n: usize) -> LaurentPoly {
    assert!(a >= 1 && a <= m + n, "index {} out of range 1..={}", a, m + n);
    if a <= m {
        LaurentPoly::var_pow(e)
    } else {
        LaurentPoly::var_pow(-e)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficients (ascending, monic) of the `n`-th cyclotomic polynomial,
/// by dividing `x^n - 1` by all lower cyclotomic factors.
fn cyclotomic(n: u64) -> Vec<i64> {
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let cd = cyclotomic(d);
            poly = poly_div_exact(&poly, &cd);
        }
    }
    poly
}

/// Exact division of dense integer polynomials (ascending coefficients);
/// the divisor must be monic or have leading coefficient dividing exactly
/// at every step.  Panics when the division is not exact.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    let dl = den[dd];
    assert!(dl != 0);
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        assert!(c % dl == 0, "inexact polynomial division");
        let q = c / dl;
        quot[i] = q;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= q * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    quot
}

/// Remainder of dense integer polynomial division by a monic divisor.
fn poly_rem(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "poly_rem expects a monic divisor");
    let mut rem: Vec<i64> = num.to_vec();
    while rem.len() > dd {
        let c = *rem.last().unwrap();
        let shift = rem.len() - 1 - dd;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[shift + j] -= c * dc;
            }
        }
        rem.pop();
    }
    rem
}
