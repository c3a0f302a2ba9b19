//! Mechanically checked word identities.
//!
//! Each function here builds a concrete word, evaluates it through the
//! straightening engine, and compares the result against an
//! independently computed closed form, returning a structured report
//! rather than a bare boolean so callers can display counterexamples.

use super::{act_on_hw, Algebra, GenSymbol, UElement};
use crate::mullclass::nonpoly_witness;
use crate::qarith::{gauss_binom, quantum_int, CycloContext, LaurentPoly};
use crate::weights::Weight;

fn rp(a: usize, b: usize, exp: u32) -> GenSymbol {
    GenSymbol::RootPow { a, b, exp }
}

fn word_element(alg: &Algebra, word: Vec<GenSymbol>) -> UElement {
    UElement::from_word(alg, LaurentPoly::one(), word)
}

/// Outcome of one raising-against-lowering coefficient check.
#[derive(Clone, Debug)]
pub struct CompCheck {
    pub engine: LaurentPoly,
    pub closed_form: LaurentPoly,
    pub equal: bool,
}

/// Apply `E_{h,i_1}^{(a_1)} .. E_{h,i_s}^{(a_s)} E_{i_s,h}^{(a_s)} ..
/// E_{i_1,h}^{(a_1)}` to the generator of weight `lambda` and compare
/// the resulting multiple of the generator with the closed-form
/// product of Gaussian binomials
/// `prod_t [lambda_h - (-1)^{par(h)+par(i_t)} lambda_{i_t} - (a_1 + ... +
/// a_{t-1}) ; a_t]`.
pub fn verify_comp(
    alg: &Algebra,
    h: usize,
    indices: &[usize],
    exps: &[u32],
    lambda: &Weight,
) -> CompCheck {
    assert!(!indices.is_empty(), "need at least one column index");
    assert_eq!(indices.len(), exps.len());
    assert!(h >= 1 && h < indices[0], "indices must start above h");
    assert!(
        indices.windows(2).all(|w| w[0] < w[1]),
        "indices must be strictly increasing"
    );
    assert!(*indices.last().unwrap() <= alg.dim());
    for (&i, &a) in indices.iter().zip(exps) {
        assert!(a >= 1, "exponents must be positive");
        if alg.is_odd_root(h, i) {
            assert!(a == 1, "odd root vectors only carry exponent 1");
        }
    }

    let mut word = Vec::with_capacity(2 * indices.len());
    for (&i, &a) in indices.iter().zip(exps) {
        word.push(rp(h, i, a));
    }
    for (&i, &a) in indices.iter().zip(exps).rev() {
        word.push(rp(i, h, a));
    }
    let result = act_on_hw(alg, &word_element(alg, word), lambda);
    // Weight bookkeeping confines the result to the generator's line.
    assert!(result.support_size() <= 1);
    let engine = result.coeff(&[]);

    let mut closed_form = LaurentPoly::one();
    let mut prefix: i64 = 0;
    for (&i, &a) in indices.iter().zip(exps) {
        let eps: i64 = if alg.is_odd_root(h, i) { -1 } else { 1 };
        let top = lambda.get(h) - eps * lambda.get(i) - prefix;
        closed_form = &closed_form * &gauss_binom(top, a as i64);
        prefix += a as i64;
    }

    let equal = engine == closed_form;
    CompCheck {
        engine,
        closed_form,
        equal,
    }
}

/// Outcome of a non-membership witness check.
#[derive(Clone, Debug)]
pub struct NonCheck {
    pub indices: Vec<usize>,
    pub witness: Weight,
    pub engine: LaurentPoly,
    pub closed_form: LaurentPoly,
    pub nonzero_at_q: bool,
    pub ok: bool,
}

/// For a dominant composition outside the polynomial range, take the
/// witness odd-column set from the classification, push the
/// corresponding odd lowering word into the module and pull it back:
/// the resulting coefficient must match the product
/// `prod_t [lambda_m + lambda_{m+i_t} - t + 1]` and must not vanish at
/// the chosen root of unity.
pub fn verify_non(lambda: &Weight, ctx: &CycloContext) -> NonCheck {
    let m = lambda.m();
    let alg = Algebra::new(m, lambda.n());
    let (indices, witness) = nonpoly_witness(lambda, ctx);

    let comp_indices: Vec<usize> = indices.iter().map(|&i| m + i).collect();
    let exps = vec![1u32; comp_indices.len()];
    let comp = verify_comp(&alg, m, &comp_indices, &exps, lambda);

    // The closed form specializes to a product of quantum integers.
    let mut product = LaurentPoly::one();
    let mut factors_nonzero = true;
    for (t0, &i) in indices.iter().enumerate() {
        let t = (t0 + 1) as i64;
        let arg = lambda.get(m) + lambda.get(m + i) - t + 1;
        product = &product * &quantum_int(arg);
        factors_nonzero &= !ctx.quantum_int_is_zero(arg);
    }
    assert_eq!(
        comp.closed_form, product,
        "binomial product must collapse to quantum integers"
    );

    // The lowering half alone lands in the witness weight space.
    let lowering: Vec<GenSymbol> = comp_indices.iter().rev().map(|&i| rp(i, m, 1)).collect();
    let fvec = act_on_hw(&alg, &word_element(&alg, lowering), lambda);
    let witness_ok =
        !fvec.is_zero() && fvec.terms().all(|(key, _)| fvec.weight_of(key) == witness);

    let ok = comp.equal && witness_ok && factors_nonzero && !comp.engine.is_zero();
    NonCheck {
        indices,
        witness,
        engine: comp.engine,
        closed_form: comp.closed_form,
        nonzero_at_q: factors_nonzero,
        ok,
    }
}

/// One rung of the lowest-weight staircase.
#[derive(Clone, Debug)]
pub struct LoweStage {
    pub k: usize,
    /// Weight of the stage's ground vector.
    pub ground: Vec<i64>,
    /// Expected weight after the stage's lowering word.
    pub expected: Vec<i64>,
    /// Number of monomials in the lowered vector.
    pub support: usize,
    /// The lowering word produced a nonzero vector in the expected
    /// weight space.
    pub descent_ok: bool,
    /// The matching raising word returned the ground vector exactly.
    pub recovered: bool,
}

/// Full report of the staircase run.
#[derive(Clone, Debug)]
pub struct LoweTrace {
    pub stages: Vec<LoweStage>,
    pub final_weight: Vec<i64>,
    pub ok: bool,
}

/// Walk a weakly decreasing integer weight down to its reversal.
///
/// Stage `k` starts from a formal maximal vector of weight
/// `omega^(k-1) = (lambda_k, .., lambda_m, lambda_{k-1}, .., lambda_1)`
/// and applies `F_{m-k}^{(e_{m-k})} .. F_1^{(e_1)}` with
/// `e_j = lambda_k - lambda_{k+j}`; the result must be nonzero of
/// weight `omega^(k)`, and the mirrored raising word
/// `E_1^{(e_1)} .. E_{m-k}^{(e_{m-k})}` must recover the ground vector
/// on the nose.  Each stage only touches indices `1..=m-k+1`, which is
/// what justifies restarting from a formal maximal vector: the real
/// vector reached after `k-1` stages is maximal for exactly that index
/// range.  After stage `m-1` the weight is the reversal of `lambda`.
pub fn verify_lowe2(lambda: &[i64]) -> LoweTrace {
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]),
        "staircase input must be weakly decreasing"
    );
    let m = lambda.len();
    let omega = |j: usize| -> Vec<i64> {
        let mut v = lambda[j..].to_vec();
        v.extend(lambda[..j].iter().rev());
        v
    };

    let mut stages = Vec::new();
    let mut ok = true;
    for k in 1..m {
        let ground = omega(k - 1);
        let alg = Algebra::new(m, 0);
        let ground_w = Weight::new(ground.clone(), m, 0);
        let expected = omega(k);
        let exps: Vec<u32> = (1..=m - k)
            .map(|j| (lambda[k - 1] - lambda[k - 1 + j]) as u32)
            .collect();

        let mut f_word = Vec::new();
        for j in (1..=m - k).rev() {
            f_word.push(rp(j + 1, j, exps[j - 1]));
        }
        let mut e_word = Vec::new();
        for j in 1..=m - k {
            e_word.push(rp(j, j + 1, exps[j - 1]));
        }

        let lowered = act_on_hw(&alg, &word_element(&alg, f_word.clone()), &ground_w);
        let descent_ok = !lowered.is_zero()
            && lowered
                .terms()
                .all(|(key, _)| lowered.weight_of(key).entries() == expected.as_slice());

        let mut round_trip = e_word;
        round_trip.extend(f_word);
        let recovered =
            act_on_hw(&alg, &word_element(&alg, round_trip), &ground_w).is_maximal_unit();

        ok &= descent_ok && recovered;
        stages.push(LoweStage {
            k,
            ground,
            expected,
            support: lowered.support_size(),
            descent_ok,
            recovered,
        });
    }

    let final_weight = if m == 0 { Vec::new() } else { omega(m - 1) };
    let reversed: Vec<i64> = lambda.iter().rev().copied().collect();
    ok &= final_weight == reversed;
    LoweTrace {
        stages,
        final_weight,
        ok,
    }
}
