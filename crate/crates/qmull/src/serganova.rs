//! The odd-root weight recursion: walking a dominant weight through the
//! ordered list of positive odd roots, subtracting each root whose
//! pairing with the running weight is not divisible by `l`.
//!
//! The recursion computes the highest weight of the twisted irreducible
//! (after swapping the parity blocks), and — applied to a partition
//! embedded in the even block — it computes the Mullineux map.  That
//! route is the authoritative one in this crate; the symbol algorithm in
//! [`crate::mullclass`] only cross-checks it.

use crate::qarith::Order;
use crate::weights::{super_dot, Partition, Root, Weight};

/// One step of the recursion: the root `beta_k`, the pairing of the
/// running weight against it, and whether the subtraction fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SergStep {
    pub k: usize,
    pub beta: Root,
    pub pairing: i64,
    pub applied: bool,
}

/// Full trace of the recursion, from `start` through all `m * n` steps
/// to `result`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SergTrace {
    pub start: Weight,
    pub steps: Vec<SergStep>,
    pub result: Weight,
}

/// The fixed ordering on positive odd roots:
/// `beta_{(j-1)m + k} = alpha_{m-k+1, m+j}`, i.e. odd column `m + j`
/// outermost, even row climbing from `m` up to `1` inside.
pub fn odd_root_schedule(m: usize, n: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(m * n);
    for j in 1..=n {
        for k in 1..=m {
            out.push(Root::new(m - k + 1, m + j));
        }
    }
    out
}

/// Run the recursion on a dominant weight: for each `beta_k = eps_a -
/// eps_b` in schedule order, subtract it from the running weight exactly
/// when `l` does not divide the super pairing `wt_a + wt_b`.
pub fn serganova_tilde(lambda: &Weight, l: Order) -> SergTrace {
    assert!(
        lambda.is_dominant(),
        "the recursion requires a dominant weight, got {}",
        lambda
    );
    let (m, n) = (lambda.m(), lambda.n());
    let mut wt = lambda.clone();
    let mut steps = Vec::with_capacity(m * n);
    for (k0, beta) in odd_root_schedule(m, n).into_iter().enumerate() {
        let pairing = super_dot(&wt, &beta.as_weight(m, n));
        let applied = !l.divides(pairing);
        if applied {
            wt.add_at(beta.i, -1);
            wt.add_at(beta.j, 1);
        }
        steps.push(SergStep {
            k: k0 + 1,
            beta,
            pairing,
            applied,
        });
    }
    SergTrace {
        start: lambda.clone(),
        steps,
        result: wt,
    }
}

/// Highest weight of the parity-twisted irreducible when `m = n`: run
/// the recursion, then swap the two blocks (no reversal).
pub fn sigma_weight(lambda: &Weight, l: Order) -> Weight {
    assert_eq!(
        lambda.m(),
        lambda.n(),
        "the block swap needs a symmetric split"
    );
    let tilde = serganova_tilde(lambda, l).result;
    Weight::from_blocks(tilde.odd_block().to_vec(), tilde.even_block().to_vec())
}

/// Embed a partition into the even block: `(lambda, 0^(m-len) | 0^n)`.
pub fn embed_x(lambda: &Partition, m: usize, n: usize) -> Weight {
    assert!(
        lambda.len() <= m,
        "partition {} has more than {} parts",
        lambda,
        m
    );
    let even: Vec<i64> = (1..=m).map(|i| lambda.part(i) as i64).collect();
    Weight::from_blocks(even, vec![0; n])
}

/// Embed a partition into the odd block: `(0^m | lambda, 0^(n-len))`.
pub fn embed_y(lambda: &Partition, m: usize, n: usize) -> Weight {
    assert!(
        lambda.len() <= n,
        "partition {} has more than {} parts",
        lambda,
        n
    );
    let odd: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64).collect();
    Weight::from_blocks(vec![0; m], odd)
}

/// The Mullineux map, computed by the odd-root recursion: embed the
/// `l`-restricted partition in the even block with `m = n = |lambda|`,
/// run the recursion, and read the image off the odd block.
///
/// The even block of the result is asserted to vanish and the odd block
/// to be partition-shaped; a failure there is an implementation bug, not
/// bad input.
pub fn mull_via_serganova(lambda: &Partition, l: Order) -> Partition {
    assert!(
        lambda.is_l_restricted(l),
        "{} is not l-restricted for l = {}",
        lambda,
        l
    );
    let r = lambda.size() as usize;
    let x = embed_x(lambda, r, r);
    let tilde = serganova_tilde(&x, l).result;
    assert!(
        tilde.even_block().iter().all(|&e| e == 0),
        "recursion left a nonzero even block {} for input {}",
        tilde,
        lambda
    );
    let image = Partition::new(tilde.odd_block().iter().map(|&e| e as u64).collect());
    assert_eq!(image.size(), lambda.size());
    image
}
