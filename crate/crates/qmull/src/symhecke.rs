//! Symmetric-group combinatorics and the Hecke algebra of type A.
//!
//! This module provides permutations with reduced words, parabolic
//! subgroups attached to compositions, minimal double-coset
//! representatives and their matrix encoding, the dagger involution on
//! all of these, and exact Hecke-algebra arithmetic.  The Hecke
//! parameter is the square `v^2` of the coefficient variable, encoded by
//! exponent doubling in [`LaurentPoly`], so a single coefficient ring
//! serves the whole crate.

use std::collections::BTreeMap;
use std::fmt;

use crate::qarith::LaurentPoly;
use crate::weights::{parity, Weight};

/// A permutation of `{1, ..., r}` in one-line notation (stored 0-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm { map: (0..r).collect() }
    }

    /// From 1-based one-line notation; validates bijectivity.
    pub fn from_one_line(line: &[usize]) -> Self {
        let r = line.len();
        let mut seen = vec![false; r];
        for &v in line {
            assert!(v >= 1 && v <= r && !seen[v - 1], "{:?} is not a permutation", line);
            seen[v - 1] = true;
        }
        Perm { map: line.iter().map(|&v| v - 1).collect() }
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    /// The simple transposition `s_i` swapping `i` and `i+1` (`1 <= i < r`).
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{} is not a generator of S_{}", i, r);
        let mut map: Vec<usize> = (0..r).collect();
        map.swap(i - 1, i);
        Perm { map }
    }

    pub fn r(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// Function composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.r(), other.r());
        Perm { map: other.map.iter().map(|&v| self.map[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.r()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.r() {
            for j in i + 1..self.r() {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether `s_i` is a right descent, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.map[i - 1] > self.map[i]
    }

    /// A reduced word `(a_1, ..., a_k)` with `w = s_{a_1} ∘ ... ∘ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..w.r())
                .find(|&i| w.has_right_descent(i))
                .expect("non-identity permutation has a right descent");
            w = w.compose(&Perm::simple(w.r(), i));
            word.push(i);
        }
        word.reverse();
        word
    }

    /// The dagger conjugate `w†(i) = r + 1 - w(r + 1 - i)`.
    pub fn dagger(&self) -> Perm {
        let r = self.r();
        Perm { map: (0..r).map(|i| r - 1 - self.map[r - 1 - i]).collect() }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.one_line()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All permutations of `{1, ..., r}` (lexicographic in one-line order).
pub fn all_perms(r: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    let mut used = vec![false; r];
    fn rec(r: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if current.len() == r {
            out.push(Perm { map: current.clone() });
            return;
        }
        for v in 0..r {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(r, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(r, &mut current, &mut used, &mut out);
    out
}

/// Consecutive row blocks `R_i = {c_1+...+c_{i-1}+1, ..., c_1+...+c_i}`
/// of a composition, plus the simple generators lying inside a block.
///
/// Zero parts yield empty blocks, which keeps block indices aligned with
/// composition indices.
pub fn parabolic_data(composition: &[i64]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut blocks = Vec::with_capacity(composition.len());
    let mut start = 1usize;
    for &c in composition {
        assert!(c >= 0, "composition parts must be nonnegative");
        let c = c as usize;
        blocks.push((start..start + c).collect::<Vec<usize>>());
        start += c;
    }
    let mut generators = Vec::new();
    for b in &blocks {
        for w in b.windows(2) {
            generators.push(w[0]);
        }
    }
    (generators, blocks)
}

/// All elements of the parabolic subgroup preserving each block of the
/// given composition inside `S_r`.
pub fn parabolic_elements(r: usize, composition: &[i64]) -> Vec<Perm> {
    let (_, blocks) = parabolic_data(composition);
    assert!(
        composition.iter().sum::<i64>() as usize <= r,
        "composition does not fit inside S_{}",
        r
    );
    let mut out = vec![Perm::identity(r)];
    for block in &blocks {
        if block.len() < 2 {
            continue;
        }
        let arrangements = all_perms(block.len());
        let mut next = Vec::with_capacity(out.len() * arrangements.len());
        for w in &out {
            for a in &arrangements {
                let mut map = w.map.clone();
                for (k, &pos) in block.iter().enumerate() {
                    map[pos - 1] = block[a.map[k]] - 1;
                }
                next.push(Perm { map });
            }
        }
        out = next;
    }
    out
}

fn is_min_double_coset_rep(d: &Perm, lam_blocks: &[Vec<usize>], mu_blocks: &[Vec<usize>]) -> bool {
    let dinv = d.inverse();
    for b in lam_blocks {
        for w in b.windows(2) {
            if dinv.apply(w[0]) > dinv.apply(w[1]) {
                return false;
            }
        }
    }
    for b in mu_blocks {
        for w in b.windows(2) {
            if d.apply(w[0]) > d.apply(w[1]) {
                return false;
            }
        }
    }
    true
}

/// Minimal-length representatives of the `S_lambda`–`S_mu` double cosets
/// in `S_r`: permutations increasing on each `mu`-block whose inverse is
/// increasing on each `lambda`-block.
pub fn min_double_cosets(lambda: &[i64], mu: &[i64], r: usize) -> Vec<Perm> {
    assert_eq!(lambda.iter().sum::<i64>() as usize, r);
    assert_eq!(mu.iter().sum::<i64>() as usize, r);
    let (_, lam_blocks) = parabolic_data(lambda);
    let (_, mu_blocks) = parabolic_data(mu);
    all_perms(r)
        .into_iter()
        .filter(|d| is_min_double_coset_rep(d, &lam_blocks, &mu_blocks))
        .collect()
}

/// The subset of [`min_double_cosets`] whose matrix encoding has all
/// odd-parity entries at most 1 (trivial intersections with the odd
/// parabolic factors).
pub fn super_double_cosets(lambda: &Weight, mu: &Weight, r: usize) -> Vec<Perm> {
    min_double_cosets(lambda.entries(), mu.entries(), r)
        .into_iter()
        .filter(|d| {
            let a = iota(lambda, d, mu);
            a.is_odd_bounded()
        })
        .collect()
}

/// A square matrix of nonnegative integers with a parity split `(m, n)`
/// on its rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMatrix {
    m: usize,
    n: usize,
    data: Vec<u64>,
}

impl SuperMatrix {
    pub fn new(m: usize, n: usize, data: Vec<u64>) -> Self {
        let size = m + n;
        assert_eq!(data.len(), size * size, "expected a {0}x{0} matrix", size);
        SuperMatrix { m, n, data }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        SuperMatrix::new(m, n, vec![0; (m + n) * (m + n)])
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

    /// Entry `a_{i,j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[(i - 1) * self.dim() + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        let n = self.dim();
        self.data[(i - 1) * n + (j - 1)] = v;
    }

    /// Sum of all entries.
    pub fn size(&self) -> u64 {
        self.data.iter().sum()
    }

    /// Whether the entry position `(i, j)` has odd parity.
    pub fn is_odd_position(&self, i: usize, j: usize) -> bool {
        (parity(i, self.m) + parity(j, self.m)) % 2 == 1
    }

    /// All odd-parity entries lie in `{0, 1}`.
    pub fn is_odd_bounded(&self) -> bool {
        (1..=self.dim()).all(|i| {
            (1..=self.dim()).all(|j| !self.is_odd_position(i, j) || self.get(i, j) <= 1)
        })
    }

    /// Membership in the degree-`r` matrix set: odd entries bounded by 1
    /// and total sum `r`.
    pub fn is_degree_matrix(&self, r: u64) -> bool {
        self.is_odd_bounded() && self.size() == r
    }

    /// Membership in the root-multiplicity set: zero diagonal and odd
    /// entries bounded by 1.
    pub fn is_root_matrix(&self) -> bool {
        self.is_odd_bounded() && (1..=self.dim()).all(|i| self.get(i, i) == 0)
    }

    /// Row sums as a composition with this matrix's split (`ro`).
    pub fn row_sums(&self) -> Weight {
        let v: Vec<i64> = (1..=self.dim())
            .map(|i| (1..=self.dim()).map(|j| self.get(i, j) as i64).sum())
            .collect();
        Weight::new(v, self.m, self.n)
    }

    /// Column sums as a composition with this matrix's split (`co`).
    pub fn col_sums(&self) -> Weight {
        let v: Vec<i64> = (1..=self.dim())
            .map(|j| (1..=self.dim()).map(|i| self.get(i, j) as i64).sum())
            .collect();
        Weight::new(v, self.m, self.n)
    }

    /// The dagger involution `a†_{i,j} = a_{N-j+1, N-i+1}` (transpose
    /// along the antidiagonal); the split becomes `(n, m)`.
    pub fn dagger(&self) -> SuperMatrix {
        let nn = self.dim();
        let mut out = SuperMatrix::zero(self.n, self.m);
        for i in 1..=nn {
            for j in 1..=nn {
                out.set(i, j, self.get(nn - j + 1, nn - i + 1));
            }
        }
        out
    }

    /// The content composition: entry `h` is the sum of all matrix
    /// entries `a_{i,h}` and `a_{h,i}` with `i < h`.  For off-diagonal
    /// matrices the content entries sum to the matrix size.
    pub fn content(&self) -> Weight {
        let v: Vec<i64> = (1..=self.dim())
            .map(|h| {
                (1..h)
                    .map(|i| (self.get(i, h) + self.get(h, i)) as i64)
                    .sum()
            })
            .collect();
        Weight::new(v, self.m, self.n)
    }

    /// Parse "a,b;c,d" text (rows separated by ';') with the given split.
    pub fn from_text(s: &str, m: usize, n: usize) -> Result<SuperMatrix, String> {
        let size = m + n;
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != size {
            return Err(format!("expected {} rows, got {}", size, rows.len()));
        }
        let mut data = Vec::with_capacity(size * size);
        for row in rows {
            let entries: Vec<&str> = row.split(',').collect();
            if entries.len() != size {
                return Err(format!("expected {} entries per row, got {}", size, entries.len()));
            }
            for e in entries {
                data.push(
                    e.trim()
                        .parse::<u64>()
                        .map_err(|_| format!("invalid matrix entry '{}'", e))?,
                );
            }
        }
        Ok(SuperMatrix::new(m, n, data))
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.dim())
            .map(|i| {
                (1..=self.dim())
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// The matrix `a_{i,j} = |R^lambda_i ∩ d(R^mu_j)|` encoding the double
/// coset of `d`; its row sums are `lambda` and column sums `mu`.
///
/// Panics when `d` is not the minimal representative of its double coset.
pub fn iota(lambda: &Weight, d: &Perm, mu: &Weight) -> SuperMatrix {
    assert_eq!(lambda.m(), mu.m());
    assert_eq!(lambda.n(), mu.n());
    let (_, lam_blocks) = parabolic_data(lambda.entries());
    let (_, mu_blocks) = parabolic_data(mu.entries());
    assert!(
        is_min_double_coset_rep(d, &lam_blocks, &mu_blocks),
        "{} is not a minimal double-coset representative",
        d
    );
    let mut block_of = vec![0usize; d.r() + 1];
    for (bi, b) in lam_blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = bi + 1;
        }
    }
    let mut a = SuperMatrix::zero(lambda.m(), lambda.n());
    for (j, b) in mu_blocks.iter().enumerate() {
        for &x in b {
            let i = block_of[d.apply(x)];
            let cur = a.get(i, j + 1);
            a.set(i, j + 1, cur + 1);
        }
    }
    a
}

/// Recover `(ro(A), d, co(A))` from a matrix by searching the minimal
/// double-coset representatives; inverse to [`iota`].
pub fn iota_inverse(a: &SuperMatrix) -> (Weight, Perm, Weight) {
    let lambda = a.row_sums();
    let mu = a.col_sums();
    let r = a.size() as usize;
    for d in min_double_cosets(lambda.entries(), mu.entries(), r) {
        if iota(&lambda, &d, &mu) == *a {
            return (lambda, d, mu);
        }
    }
    panic!("no double coset maps to {}", a);
}

/// All matrices with the given split, odd entries bounded by 1, and
/// total sum `r`.
pub fn enumerate_degree_matrices(m: usize, n: usize, r: u64) -> Vec<SuperMatrix> {
    let size = m + n;
    let mut out = Vec::new();
    let mut data = vec![0u64; size * size];
    fn rec(
        cell: usize,
        remaining: u64,
        m: usize,
        size: usize,
        data: &mut Vec<u64>,
        out: &mut Vec<SuperMatrix>,
    ) {
        if cell == size * size {
            if remaining == 0 {
                out.push(SuperMatrix::new(m, size - m, data.clone()));
            }
            return;
        }
        let (i, j) = (cell / size + 1, cell % size + 1);
        let odd = (parity(i, m) + parity(j, m)) % 2 == 1;
        let cap = if odd { remaining.min(1) } else { remaining };
        for v in 0..=cap {
            data[cell] = v;
            rec(cell + 1, remaining - v, m, size, data, out);
        }
        data[cell] = 0;
    }
    if size == 0 {
        if r == 0 {
            out.push(SuperMatrix::zero(0, 0));
        }
        return out;
    }
    rec(0, r, m, size, &mut data, &mut out);
    out
}

/// All zero-diagonal matrices with odd entries bounded by 1 and total
/// sum at most `max_size`.
pub fn enumerate_root_matrices(m: usize, n: usize, max_size: u64) -> Vec<SuperMatrix> {
    let size = m + n;
    let mut out = Vec::new();
    let mut data = vec![0u64; size * size];
    fn rec(
        cell: usize,
        budget: u64,
        m: usize,
        size: usize,
        data: &mut Vec<u64>,
        out: &mut Vec<SuperMatrix>,
    ) {
        if cell == size * size {
            out.push(SuperMatrix::new(m, size - m, data.clone()));
            return;
        }
        let (i, j) = (cell / size + 1, cell % size + 1);
        if i == j {
            rec(cell + 1, budget, m, size, data, out);
            return;
        }
        let odd = (parity(i, m) + parity(j, m)) % 2 == 1;
        let cap = if odd { budget.min(1) } else { budget };
        for v in 0..=cap {
            data[cell] = v;
            rec(cell + 1, budget - v, m, size, data, out);
        }
        data[cell] = 0;
    }
    if size == 0 {
        out.push(SuperMatrix::zero(0, 0));
        return out;
    }
    rec(0, max_size, m, size, &mut data, &mut out);
    out
}

/// All pairs `(A, lambda)` with `A` a root matrix, `lambda` a composition
/// of `r`, and `content(A)` componentwise below `lambda`.
pub fn enumerate_content_pairs(m: usize, n: usize, r: u64) -> Vec<(SuperMatrix, Weight)> {
    use crate::weights::{componentwise_leq, enumerate_compositions};
    let compositions = enumerate_compositions(m, n, r);
    let mut out = Vec::new();
    for a in enumerate_root_matrices(m, n, r) {
        let chi = a.content();
        for lam in &compositions {
            if componentwise_leq(&chi, lam) {
                out.push((a.clone(), lam.clone()));
            }
        }
    }
    out
}

/// An element of the Hecke algebra of `S_r`: a finitely supported map
/// from permutations to Laurent coefficients, with parameter `v^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElt {
    r: usize,
    terms: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero(r: usize) -> Self {
        HeckeElt { r, terms: BTreeMap::new() }
    }

    /// The identity `T_id`.
    pub fn unit(r: usize) -> Self {
        HeckeElt::basis(Perm::identity(r))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Perm) -> Self {
        let r = w.r();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElt { r, terms }
    }

    /// The generator `T_i = T_{s_i}`.
    pub fn generator(r: usize, i: usize) -> Self {
        HeckeElt::basis(Perm::simple(r, i))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeff(&self, w: &Perm) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.r, other.r);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero(self.r);
        for (w, d) in &self.terms {
            out.insert(w.clone(), c * d);
        }
        out
    }

    /// Right multiplication by the generator `T_i`.
    fn mul_generator(&self, i: usize) -> HeckeElt {
        let mut out = HeckeElt::zero(self.r);
        let s = Perm::simple(self.r, i);
        let q2 = LaurentPoly::var_pow(2);
        let q2m1 = &q2 - &LaurentPoly::one();
        for (w, c) in &self.terms {
            let ws = w.compose(&s);
            if !w.has_right_descent(i) {
                out.insert(ws, c.clone());
            } else {
                out.insert(w.clone(), c * &q2m1);
                out.insert(ws, c * &q2);
            }
        }
        out
    }

    /// Hecke product, computed letter-by-letter on reduced words of the
    /// right factor.
    pub fn mul(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.r, other.r);
        let mut out = HeckeElt::zero(self.r);
        for (u, d) in &other.terms {
            let mut acc = self.scaled(d);
            for i in u.reduced_word() {
                acc = acc.mul_generator(i);
            }
            out = out.add(&acc);
        }
        out
    }

    /// The algebra involution sending `T_i` to `(q^2 - 1) - T_i`,
    /// extended to `T_w` along reduced words.
    pub fn sharp(&self) -> HeckeElt {
        let q2m1 = &LaurentPoly::var_pow(2) - &LaurentPoly::one();
        let mut out = HeckeElt::zero(self.r);
        for (w, c) in &self.terms {
            let mut acc = HeckeElt::unit(self.r).scaled(c);
            for i in w.reduced_word() {
                let image = HeckeElt::unit(self.r)
                    .scaled(&q2m1)
                    .add(&HeckeElt::generator(self.r, i).scaled(&LaurentPoly::constant(-1)));
                acc = acc.mul(&image);
            }
            out = out.add(&acc);
        }
        out
    }

    /// The algebra involution `T_w -> T_{w†}` induced by reversing the
    /// Dynkin diagram (`s_i -> s_{r-i}`).
    pub fn dagger(&self) -> HeckeElt {
        let mut out = HeckeElt::zero(self.r);
        for (w, c) in &self.terms {
            out.insert(w.dagger(), c.clone());
        }
        out
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({})*T[{}]", c, w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The signed parabolic sum attached to a split composition: the plain
/// sum `x = Σ T_w` over the parabolic subgroup of the even block (acting
/// on the first positions) times the alternating sum
/// `y = Σ (-q^2)^{-ℓ(w)} T_w` over the parabolic subgroup of the odd
/// block (acting on the remaining positions).
pub fn xy_element(lambda: &Weight) -> HeckeElt {
    assert!(lambda.is_composition(), "xy element needs a composition");
    let r = lambda.degree() as usize;
    let even_sum: i64 = lambda.even_block().iter().sum();
    // Odd-block parabolic positions start after the even block's points;
    // padding with singleton parts shifts the blocks without introducing
    // any generators on the skipped positions.
    let mut odd_shifted: Vec<i64> = vec![1; even_sum as usize];
    odd_shifted.extend(lambda.odd_block());

    let mut x = HeckeElt::zero(r);
    for w in parabolic_elements(r, lambda.even_block()) {
        x = x.add(&HeckeElt::basis(w));
    }
    let mut y = HeckeElt::zero(r);
    for w in parabolic_elements(r, &odd_shifted) {
        let l = w.length() as i64;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        y = y.add(&HeckeElt::basis(w).scaled(&LaurentPoly::monomial(-2 * l, sign)));
    }
    x.mul(&y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Weight;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn perm_basics() {
        let s1 = Perm::simple(3, 1);
        let s2 = Perm::simple(3, 2);
        let w = s1.compose(&s2);
        assert_eq!(w.one_line(), vec![2, 3, 1]);
        assert_eq!(w.length(), 2);
        assert_eq!(w.reduced_word(), vec![1, 2]);
        assert_eq!(w.inverse().compose(&w), Perm::identity(3));
        // Reduced words recompose to the permutation.
        for p in all_perms(4) {
            let mut u = Perm::identity(4);
            for i in p.reduced_word() {
                u = u.compose(&Perm::simple(4, i));
            }
            assert_eq!(u, p);
            assert_eq!(p.reduced_word().len(), p.length());
        }
    }

    #[test]
    fn perm_dagger_preserves_length() {
        for p in all_perms(5) {
            assert_eq!(p.dagger().length(), p.length());
            assert_eq!(p.dagger().dagger(), p);
        }
        assert_eq!(Perm::simple(4, 1).dagger(), Perm::simple(4, 3));
    }

    #[test]
    fn quadratic_relation() {
        let r = 3;
        for i in 1..r {
            let t = HeckeElt::generator(r, i);
            let got = t.mul(&t);
            let expected = t
                .scaled(&(&LaurentPoly::var_pow(2) - &LaurentPoly::one()))
                .add(&HeckeElt::unit(r).scaled(&LaurentPoly::var_pow(2)));
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn hecke_associativity_exhaustive_r3() {
        let basis: Vec<HeckeElt> = all_perms(3).into_iter().map(HeckeElt::basis).collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn unit_is_neutral() {
        for p in all_perms(4) {
            let t = HeckeElt::basis(p);
            assert_eq!(HeckeElt::unit(4).mul(&t), t);
            assert_eq!(t.mul(&HeckeElt::unit(4)), t);
        }
    }

    #[test]
    fn sharp_is_involutive_homomorphism() {
        for p in all_perms(4) {
            let t = HeckeElt::basis(p);
            assert_eq!(t.sharp().sharp(), t);
        }
        assert_eq!(HeckeElt::unit(3).sharp(), HeckeElt::unit(3));
        // Homomorphism: sharp(xy) = sharp(x) sharp(y).
        for a in all_perms(3) {
            for b in all_perms(3) {
                let x = HeckeElt::basis(a.clone());
                let y = HeckeElt::basis(b.clone());
                assert_eq!(x.mul(&y).sharp(), x.sharp().mul(&y.sharp()));
            }
        }
    }

    #[test]
    fn dagger_is_involutive_homomorphism() {
        assert_eq!(
            HeckeElt::generator(4, 1).dagger(),
            HeckeElt::generator(4, 3)
        );
        for a in all_perms(3) {
            for b in all_perms(3) {
                let x = HeckeElt::basis(a.clone());
                let y = HeckeElt::basis(b.clone());
                assert_eq!(x.dagger().dagger(), x);
                assert_eq!(x.mul(&y).dagger(), x.dagger().mul(&y.dagger()));
                // sharp and dagger commute.
                assert_eq!(x.sharp().dagger(), x.dagger().sharp());
            }
        }
    }

    #[test]
    fn parabolic_blocks_and_generators() {
        let (gens, blocks) = parabolic_data(&[2, 1]);
        assert_eq!(blocks, vec![vec![1, 2], vec![3]]);
        assert_eq!(gens, vec![1]);
        let (gens, _) = parabolic_data(&[4]);
        assert_eq!(gens, vec![1, 2, 3]);
        let (gens, _) = parabolic_data(&[1, 1, 1]);
        assert!(gens.is_empty());
        // Zero parts keep block indices aligned.
        let (_, blocks) = parabolic_data(&[1, 0, 2]);
        assert_eq!(blocks, vec![vec![1], vec![], vec![2, 3]]);
        assert_eq!(parabolic_elements(3, &[2, 1]).len(), 2);
        assert_eq!(parabolic_elements(4, &[2, 2]).len(), 4);
    }

    #[test]
    fn double_coset_representatives() {
        assert_eq!(min_double_cosets(&[3], &[3], 3), vec![Perm::identity(3)]);
        assert_eq!(min_double_cosets(&[1, 1], &[1, 1], 2).len(), 2);
        assert_eq!(min_double_cosets(&[1, 1, 1], &[1, 1, 1], 3).len(), 6);
        // |D_lambda_mu| = #matrices with row sums lambda, column sums mu.
        for lam in [vec![2i64, 1], vec![1, 2], vec![2, 0, 1]] {
            for mu in [vec![2i64, 1], vec![1, 1, 1]] {
                let r = 3;
                let count = min_double_cosets(&lam, &mu, r).len();
                let matrices = enumerate_degree_matrices(lam.len(), 0, 3)
                    .into_iter()
                    .filter(|a| {
                        a.dim() == lam.len()
                            && a.row_sums().entries() == lam.as_slice()
                            && a.col_sums().entries().len() == mu.len()
                            && a.col_sums().entries() == mu.as_slice()
                    })
                    .count();
                if lam.len() == mu.len() {
                    assert_eq!(count, matrices, "lam={:?}, mu={:?}", lam, mu);
                }
            }
        }
    }

    #[test]
    fn iota_examples() {
        // Identity coset gives the diagonal matrix.
        let lam = w("2,1|");
        let a = iota(&lam, &Perm::identity(3), &lam);
        assert_eq!(a.get(1, 1), 2);
        assert_eq!(a.get(2, 2), 1);
        assert_eq!(a.size(), 3);
        // Antidiagonal matrix with split (2,0) comes from d = s_1.
        let anti = SuperMatrix::new(2, 0, vec![0, 1, 1, 0]);
        let (l, d, m) = iota_inverse(&anti);
        assert_eq!(d, Perm::simple(2, 1));
        assert_eq!(l, w("1,1|"));
        assert_eq!(m, w("1,1|"));
    }

    #[test]
    fn iota_is_bijective_small() {
        for (m, n, r) in [(2usize, 0usize, 3u64), (1, 1, 3), (2, 1, 3)] {
            use crate::weights::enumerate_compositions;
            let comps = enumerate_compositions(m, n, r);
            let mut seen = std::collections::BTreeSet::new();
            let mut total = 0usize;
            for lam in &comps {
                for mu in &comps {
                    for d in super_double_cosets(lam, mu, r as usize) {
                        let a = iota(lam, &d, mu);
                        assert_eq!(&a.row_sums(), lam);
                        assert_eq!(&a.col_sums(), mu);
                        assert!(a.is_degree_matrix(r));
                        assert!(seen.insert(a), "duplicate matrix");
                        total += 1;
                    }
                }
            }
            assert_eq!(
                total,
                enumerate_degree_matrices(m, n, r).len(),
                "m={}, n={}, r={}",
                m,
                n,
                r
            );
        }
    }

    #[test]
    fn super_cosets_without_odd_block() {
        let lam = w("2,1|");
        let mu = w("1,2|");
        assert_eq!(
            super_double_cosets(&lam, &mu, 3).len(),
            min_double_cosets(lam.entries(), mu.entries(), 3).len()
        );
        // All-singleton even blocks: every coset survives.
        let omega = w("1,1,1|");
        assert_eq!(super_double_cosets(&omega, &omega, 3).len(), 6);
    }

    #[test]
    fn matrix_dagger_properties() {
        // The flip is across the anti-diagonal, so for N = 2 the corner
        // entries swap while both anti-diagonal entries stay put.
        let a = SuperMatrix::new(1, 1, vec![2, 1, 0, 3]);
        let d = a.dagger();
        assert_eq!(d.get(1, 1), 3);
        assert_eq!(d.get(1, 2), 1);
        assert_eq!(d.get(2, 1), 0);
        assert_eq!(d.get(2, 2), 2);
        assert_eq!(d.dagger(), a);
        for a in enumerate_degree_matrices(1, 2, 3) {
            assert_eq!(a.dagger().dagger(), a);
            assert_eq!(a.dagger().row_sums(), a.col_sums().dagger());
            assert_eq!(a.dagger().col_sums(), a.row_sums().dagger());
        }
    }

    #[test]
    fn content_examples() {
        let mut a = SuperMatrix::zero(2, 1);
        assert_eq!(a.content(), w("0,0|0"));
        a.set(1, 2, 1);
        assert_eq!(a.content(), w("0,1|0"));
        let mut b = SuperMatrix::zero(2, 1);
        b.set(2, 1, 1);
        assert_eq!(b.content(), w("0,1|0"));
        // Content entries of an off-diagonal matrix sum to its size.
        for a in enumerate_root_matrices(1, 2, 3) {
            assert_eq!(a.content().degree(), a.size() as i64);
        }
    }

    #[test]
    fn matrix_set_counts() {
        // |M(m|0,r)| = C(m^2 + r - 1, r).
        fn binom(n: u64, k: u64) -> u64 {
            let mut num = 1u64;
            let mut den = 1u64;
            for i in 0..k {
                num *= n - i;
                den *= i + 1;
            }
            num / den
        }
        assert_eq!(enumerate_degree_matrices(2, 0, 1).len(), 4);
        for m in 1..=2usize {
            for r in 0..=3u64 {
                assert_eq!(
                    enumerate_degree_matrices(m, 0, r).len() as u64,
                    binom((m * m) as u64 + r - 1, r)
                );
            }
        }
    }

    #[test]
    fn content_pair_counts() {
        // One pair when there are no roots at all.
        let pairs = enumerate_content_pairs(1, 0, 3);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0, SuperMatrix::zero(1, 0));
        assert_eq!(pairs[0].1, w("3|"));
        assert_eq!(enumerate_content_pairs(2, 0, 1).len(), 4);
        for (m, n) in [(2usize, 0usize), (1, 1), (2, 1)] {
            for r in 0..=3u64 {
                assert_eq!(
                    enumerate_content_pairs(m, n, r).len(),
                    enumerate_degree_matrices(m, n, r).len(),
                    "m={}, n={}, r={}",
                    m,
                    n,
                    r
                );
            }
        }
    }

    #[test]
    fn xy_element_anchors() {
        // (2|0): plain parabolic sum.
        let x = xy_element(&w("2|0"));
        assert_eq!(x.coeff(&Perm::identity(2)), LaurentPoly::one());
        assert_eq!(x.coeff(&Perm::simple(2, 1)), LaurentPoly::one());
        assert_eq!(x.support_size(), 2);
        // (0|2): signed parabolic sum.
        let y = xy_element(&w("0|2"));
        assert_eq!(y.coeff(&Perm::identity(2)), LaurentPoly::one());
        assert_eq!(y.coeff(&Perm::simple(2, 1)), LaurentPoly::monomial(-2, -1));
        // (1,1,...): trivial parabolic.
        assert_eq!(xy_element(&w("1,1|1")), HeckeElt::unit(3));
    }

    #[test]
    fn xy_eigenvalue_relations() {
        // x_lambda T_s = q^2 x_lambda on even generators,
        // y_lambda T_s = -y_lambda on odd generators.
        let lam = w("2|2");
        let e = xy_element(&lam);
        let even_gen = HeckeElt::generator(4, 1);
        let odd_gen = HeckeElt::generator(4, 3);
        assert_eq!(e.mul(&even_gen), e.scaled(&LaurentPoly::var_pow(2)));
        assert_eq!(e.mul(&odd_gen), e.scaled(&LaurentPoly::constant(-1)));
    }

    #[test]
    fn matrix_text_roundtrip() {
        let a = SuperMatrix::from_text("1,0;0,1", 1, 1).unwrap();
        assert_eq!(a.to_string(), "1,0;0,1");
        assert!(SuperMatrix::from_text("1,0;0", 1, 1).is_err());
        assert!(SuperMatrix::from_text("1,0", 1, 1).is_err());
    }
}
