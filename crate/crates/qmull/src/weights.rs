//! Integer weights for the general linear supergroup: split sequences,
//! parities, the super bilinear form, dominance orders, partitions, and
//! the enumerators used by the classification routines.
//!
//! A [`Weight`] is an integer vector of length `m + n` together with its
//! split `(m, n)`; index `i` (1-based) is even when `i <= m` and odd
//! otherwise, and all bilinear forms and root conventions below are
//! driven by that parity.  Compositions are simply weights with
//! nonnegative entries, so no separate type is introduced; partitions get
//! their own type because transposition and regularity conditions only
//! make sense there.

use std::fmt;
use std::str::FromStr;

use crate::qarith::Order;

/// Parity of the (1-based) index `i` under the split `(m, n)`: `0` for
/// `i <= m`, `1` otherwise.
pub fn parity(i: usize, m: usize) -> u8 {
    if i <= m {
        0
    } else {
        1
    }
}

/// `(-1)^parity(i)` as an integer sign.
pub fn index_sign(i: usize, m: usize) -> i64 {
    if i <= m {
        1
    } else {
        -1
    }
}

/// An integer weight with split `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    entries: Vec<i64>,
    m: usize,
    n: usize,
}

impl Weight {
    pub fn new(entries: Vec<i64>, m: usize, n: usize) -> Self {
        assert_eq!(
            entries.len(),
            m + n,
            "weight of length {} does not match split ({},{})",
            entries.len(),
            m,
            n
        );
        Weight { entries, m, n }
    }

    pub fn from_blocks(even: Vec<i64>, odd: Vec<i64>) -> Self {
        let (m, n) = (even.len(), odd.len());
        let mut entries = even;
        entries.extend(odd);
        Weight { entries, m, n }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Weight::new(vec![0; m + n], m, n)
    }

    /// The standard basis weight `eps_i` (1-based).
    pub fn eps(i: usize, m: usize, n: usize) -> Self {
        let mut w = Weight::zero(m, n);
        w.entries[i - 1] = 1;
        w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry at 1-based index `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    /// Add `c` to the entry at 1-based index `i`.
    pub fn add_at(&mut self, i: usize, c: i64) {
        self.entries[i - 1] += c;
    }

    /// The even block `(lambda_1, ..., lambda_m)`.
    pub fn even_block(&self) -> &[i64] {
        &self.entries[..self.m]
    }

    /// The odd block `(lambda_{m+1}, ..., lambda_{m+n})`.
    pub fn odd_block(&self) -> &[i64] {
        &self.entries[self.m..]
    }

    pub fn parity_of(&self, i: usize) -> u8 {
        parity(i, self.m)
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_composition(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// Both blocks weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        let dec = |b: &[i64]| b.windows(2).all(|w| w[0] >= w[1]);
        dec(self.even_block()) && dec(self.odd_block())
    }

    /// Reversal of the whole sequence; the split becomes `(n, m)`.
    pub fn dagger(&self) -> Weight {
        let mut entries = self.entries.clone();
        entries.reverse();
        Weight::new(entries, self.n, self.m)
    }

    /// Swap the two blocks and reverse each; the split becomes `(n, m)`.
    ///
    /// On split weights this agrees with [`Weight::dagger`]; it is kept
    /// separate because it is the form the block-level arguments use.
    pub fn super_dagger(&self) -> Weight {
        let mut even: Vec<i64> = self.odd_block().to_vec();
        even.reverse();
        let mut odd: Vec<i64> = self.even_block().to_vec();
        odd.reverse();
        Weight::from_blocks(even, odd)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |b: &[i64]| {
            b.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(self.even_block()), join(self.odd_block()))
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (even, odd) = s
            .split_once('|')
            .ok_or_else(|| format!("weight '{}' is missing the '|' block separator", s))?;
        let parse_block = |b: &str| -> Result<Vec<i64>, String> {
            if b.is_empty() {
                return Ok(Vec::new());
            }
            b.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("invalid weight entry '{}'", e))
                })
                .collect()
        };
        Ok(Weight::from_blocks(parse_block(even)?, parse_block(odd)?))
    }
}

/// The super bilinear form `sum_i (-1)^{parity(i)} mu_i nu_i`.
///
/// Panics when the splits disagree.
pub fn super_dot(mu: &Weight, nu: &Weight) -> i64 {
    assert!(
        mu.m() == nu.m() && mu.n() == nu.n(),
        "split mismatch: ({},{}) vs ({},{})",
        mu.m(),
        mu.n(),
        nu.m(),
        nu.n()
    );
    mu.entries()
        .iter()
        .zip(nu.entries())
        .enumerate()
        .map(|(k, (a, b))| index_sign(k + 1, mu.m()) * a * b)
        .sum()
}

/// Whether `mu <= lambda` in the root order: `lambda - mu` is a
/// nonnegative sum of simple roots, i.e. all prefix sums of the
/// difference are nonnegative and the total is zero.
pub fn root_order_leq(mu: &Weight, lambda: &Weight) -> bool {
    assert!(
        mu.m() == lambda.m() && mu.n() == lambda.n(),
        "split mismatch in root order comparison"
    );
    let mut acc = 0;
    for (a, b) in lambda.entries().iter().zip(mu.entries()) {
        acc += a - b;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

/// Whether `mu_i <= lambda_i` for every `i`.
pub fn componentwise_leq(mu: &Weight, lambda: &Weight) -> bool {
    mu.entries()
        .iter()
        .zip(lambda.entries())
        .all(|(a, b)| a <= b)
}

/// The root `alpha_{i,j} = eps_i - eps_j` (`i != j`, 1-based); positive
/// when `i < j`, odd when exactly one endpoint lies in the odd block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "alpha_{{i,i}} is not a root");
        Root { i, j }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn parity(&self, m: usize) -> u8 {
        (parity(self.i, m) + parity(self.j, m)) % 2
    }

    /// The root as a weight vector `eps_i - eps_j`.
    pub fn as_weight(&self, m: usize, n: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        w.add_at(self.i, 1);
        w.add_at(self.j, -1);
        w
    }
}

/// All weak compositions of `r` into `m + n` parts, as split weights,
/// in lexicographic order from the front.
pub fn enumerate_compositions(m: usize, n: usize, r: u64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut current = vec![0i64; m + n];
    fn rec(pos: usize, remaining: u64, current: &mut Vec<i64>, m: usize, n: usize, out: &mut Vec<Weight>) {
        if pos + 1 == current.len() {
            current[pos] = remaining as i64;
            out.push(Weight::new(current.clone(), m, n));
            return;
        }
        for v in (0..=remaining).rev() {
            current[pos] = v as i64;
            rec(pos + 1, remaining - v, current, m, n, out);
        }
    }
    if m + n == 0 {
        if r == 0 {
            out.push(Weight::zero(0, 0));
        }
        return out;
    }
    rec(0, r, &mut current, m, n, &mut out);
    out
}

/// All dominant compositions of `r` (both blocks weakly decreasing).
pub fn enumerate_dominant(m: usize, n: usize, r: u64) -> Vec<Weight> {
    enumerate_compositions(m, n, r)
        .into_iter()
        .filter(Weight::is_dominant)
        .collect()
}

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts {:?} are not weakly decreasing",
            parts
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Part at 1-based index `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The transposed (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 1..=cols {
            t.push(self.parts.iter().filter(|&&p| p >= j as u64).count() as u64);
        }
        Partition { parts: t }
    }

    /// Whether consecutive differences stay below `l` (including the last
    /// nonzero part against zero).  Everything is `l`-restricted for
    /// infinite `l`.
    pub fn is_l_restricted(&self, l: Order) -> bool {
        let l = match l {
            Order::Infinity => return true,
            Order::Finite(l) => l,
        };
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < l)
    }

    /// Whether no part repeats `l` or more times.  The transpose of an
    /// `l`-restricted partition is `l`-regular and vice versa.
    pub fn is_l_regular(&self, l: Order) -> bool {
        self.transpose().is_l_restricted(l)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write!(
            f,
            "{}",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u64>, String> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("invalid partition part '{}'", p))
            })
            .collect();
        let parts = parts?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts '{}' are not weakly decreasing", s));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `r`, largest-first part ordering.
pub fn partitions_of(r: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(r, r.max(1), &mut current, &mut out);
    out
}

/// All `l`-restricted partitions of `r`.
pub fn l_restricted_partitions(r: u64, l: Order) -> Vec<Partition> {
    partitions_of(r)
        .into_iter()
        .filter(|p| p.is_l_restricted(l))
        .collect()
}
