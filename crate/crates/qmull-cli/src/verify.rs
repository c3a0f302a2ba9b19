//! Seeded verification suites behind `qmull verify`.
//!
//! Each suite mirrors one of the cross-checks from the library's
//! acceptance tests: an exhaustive sweep by default, with `--samples`
//! switching the randomized suites to that instance count (or capping
//! the exhaustive ones to a seeded subsample).  Instances are
//! independent, so the suites fan out over the rayon pool; every
//! instance derives its own generator from the seed and the instance
//! index, which keeps runs bit-reproducible under any thread schedule.

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use qmull::mullclass::{is_polynomial_hw, jl_subsequence_check, nonpoly_witness};
use qmull::pbw::{verify_comp, verify_lowe2, verify_non, Algebra};
use qmull::qarith::{gauss_binom, is_zero_at_q, lucas_nonzero, CycloContext, LaurentPoly, Order};
use qmull::symhecke::{all_perms, HeckeElt, Perm};
use qmull::weights::{enumerate_dominant, Partition, Weight};

use crate::{Outcome, SCHEMA};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Subsequence criterion: recursion trace vs exact Gaussian vanishing.
    MullLemma,
    /// Straightening engine vs closed-form Gaussian coefficient products.
    Comp,
    /// Nonpolynomiality witnesses certified by the engine.
    Non,
    /// Lowering staircase to the reversed weight with exact recovery.
    Lowe2,
    /// Combinatorial binomial vanishing vs exact cyclotomic evaluation.
    Lucas,
    /// Hecke twist involutions, relations, and multiplicativity.
    Involution,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::MullLemma => "mull-lemma",
            Suite::Comp => "comp",
            Suite::Non => "non",
            Suite::Lowe2 => "lowe2",
            Suite::Lucas => "lucas",
            Suite::Involution => "involution",
        }
    }
}

/// Aggregated result of one suite.
struct SuiteRun {
    checks: u64,
    failures: u64,
    counterexample: Option<Value>,
}

impl SuiteRun {
    /// Fold per-instance outcomes (order-preserving, so the reported
    /// counterexample is the first by instance index).
    fn collect(results: Vec<Option<Value>>) -> SuiteRun {
        let failures = results.iter().filter(|r| r.is_some()).count() as u64;
        SuiteRun {
            checks: results.len() as u64,
            failures,
            counterexample: results.into_iter().flatten().next(),
        }
    }
}

pub fn run(suite: Suite, samples: u64, seed: u64) -> Outcome {
    let (run, effective) = match suite {
        Suite::MullLemma => run_mull_lemma(samples, seed),
        Suite::Comp => run_comp(samples, seed),
        Suite::Non => run_non(samples),
        Suite::Lowe2 => run_lowe2(samples, seed),
        Suite::Lucas => run_lucas(samples, seed),
        Suite::Involution => run_involution(samples, seed),
    };
    let pass = run.failures == 0;
    Outcome {
        value: json!({
            "schema": SCHEMA,
            "suite": suite.name(),
            "seed": seed,
            "samples": effective,
            "checks": run.checks,
            "failures": run.failures,
            "pass": pass,
            "counterexample": run.counterexample.unwrap_or(Value::Null),
        }),
        failed: !pass,
    }
}

fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Seeded subsample used to cap the exhaustive sweeps: a shuffle of the
/// index range, truncated to `samples`.
fn subsample(len: usize, samples: u64, seed: u64) -> Vec<usize> {
    let mut indices: Vec<usize> = (0..len).collect();
    if samples == 0 || samples as usize >= len {
        return indices;
    }
    indices.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    indices.truncate(samples as usize);
    indices.sort_unstable();
    indices
}

/// All partitions with at most `max_len` parts, each at most `max_part`.
fn box_partitions(max_len: usize, max_part: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    fn rec(cap: u64, left: usize, parts: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()));
        if left == 0 {
            return;
        }
        for p in (1..=cap).rev() {
            parts.push(p);
            rec(p, left - 1, parts, out);
            parts.pop();
        }
    }
    rec(max_part, max_len, &mut parts, &mut out);
    out
}

// ---------------------------------------------------------------------
// mull-lemma: subsequence criterion, trace side vs Gaussian side.

fn run_mull_lemma(samples: u64, seed: u64) -> (SuiteRun, u64) {
    let lambdas = box_partitions(6, 8);
    let ctxs: Vec<(u64, CycloContext)> = (2..=7u64)
        .map(|l| (l, CycloContext::with_q_square_order(Order::Finite(l), 0)))
        .collect();

    let check_one = |lam: &Partition, mask: u32, l: u64, ctx: &CycloContext| -> Option<Value> {
        let indices: Vec<usize> = (1..=lam.len())
            .filter(|i| mask >> (i - 1) & 1 == 1)
            .collect();
        let (by_trace, by_gauss) = jl_subsequence_check(lam, &indices, ctx);
        if by_trace == by_gauss {
            None
        } else {
            Some(json!({
                "lambda": lam.parts(),
                "indices": indices,
                "l": l,
                "trace": by_trace,
                "gauss": by_gauss,
            }))
        }
    };

    if samples > 0 {
        let results: Vec<Option<Value>> = (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = instance_rng(seed, i);
                let lam = &lambdas[rng.gen_range(0..lambdas.len())];
                let mask = rng.gen_range(0..(1u32 << lam.len()));
                let (l, ctx) = &ctxs[rng.gen_range(0..ctxs.len())];
                check_one(lam, mask, *l, ctx)
            })
            .collect();
        return (SuiteRun::collect(results), samples);
    }

    // Full sweep: every partition in the 6 x 8 box, every subsequence,
    // every order.  One item per (partition, order) pair.
    let results: Vec<Option<Value>> = lambdas
        .par_iter()
        .flat_map_iter(|lam| ctxs.iter().map(move |pair| (lam, pair)))
        .map(|(lam, (l, ctx))| {
            let mut first = None;
            for mask in 0..(1u32 << lam.len()) {
                if let Some(bad) = check_one(lam, mask, *l, ctx) {
                    first = Some(bad);
                    break;
                }
            }
            first
        })
        .collect();
    let total = results.len() as u64;
    (SuiteRun::collect(results), total)
}

// ---------------------------------------------------------------------
// comp: straightening engine vs closed Gaussian products.

fn run_comp(samples: u64, seed: u64) -> (SuiteRun, u64) {
    let samples = if samples == 0 { 200 } else { samples };
    let ctxs: Vec<CycloContext> = [3u64, 4, 5, 7]
        .iter()
        .map(|&lp| CycloContext::new(Order::Finite(lp), 0))
        .collect();
    let results: Vec<Option<Value>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            let dim = rng.gen_range(2..=5usize);
            let m = rng.gen_range(1..=dim);
            let alg = Algebra::new(m, dim - m);
            let h = rng.gen_range(1..dim);
            let count = rng.gen_range(1..=(dim - h).min(3));
            let mut cols: Vec<usize> = (h + 1..=dim).collect();
            cols.shuffle(&mut rng);
            let mut indices: Vec<usize> = cols[..count].to_vec();
            indices.sort_unstable();

            let mut budget = 5i64;
            let mut exps: Vec<u32> = Vec::with_capacity(indices.len());
            for (k, &col) in indices.iter().enumerate() {
                let reserve = (indices.len() - k - 1) as i64;
                let cap = if alg.is_odd_root(h, col) {
                    1
                } else {
                    (budget - reserve).clamp(1, 3)
                };
                let e = rng.gen_range(1..=cap) as u32;
                budget -= e as i64;
                exps.push(e);
            }
            let entries: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=6)).collect();
            let lambda = Weight::new(entries, m, dim - m);

            let check = verify_comp(&alg, h, &indices, &exps, &lambda);
            let diff = &check.engine - &check.closed_form;
            let at_q_ok = ctxs.iter().all(|ctx| is_zero_at_q(&diff, ctx));
            if check.equal && at_q_ok {
                None
            } else {
                Some(json!({
                    "instance": i,
                    "h": h,
                    "indices": indices,
                    "exps": exps,
                    "lambda": lambda.to_string(),
                    "engine": check.engine.to_string(),
                    "closed_form": check.closed_form.to_string(),
                }))
            }
        })
        .collect();
    (SuiteRun::collect(results), samples)
}

// ---------------------------------------------------------------------
// non: witness construction plus engine confirmation.

fn run_non(samples: u64) -> (SuiteRun, u64) {
    let samples = if samples == 0 { 50 } else { samples };
    let mut results: Vec<Option<Value>> = Vec::new();
    let mut cases: Vec<(Weight, u64)> = Vec::new();
    for l in 2..=5u64 {
        let ctx = CycloContext::with_q_square_order(Order::Finite(l), 0);
        for m in 1..=5usize {
            for n in 0..=5usize {
                for r in 0..=5u64 {
                    for lam in enumerate_dominant(m, n, r) {
                        if is_polynomial_hw(&lam, ctx.l()) {
                            continue;
                        }
                        let (indices, witness) = nonpoly_witness(&lam, &ctx);
                        let mut product = LaurentPoly::one();
                        for (t0, &i) in indices.iter().enumerate() {
                            let arg = lam.get(m) + lam.get(m + i) - t0 as i64;
                            product = &product * &qmull::qarith::quantum_int(arg);
                        }
                        let ok = witness.get(m) == -1 && !is_zero_at_q(&product, &ctx);
                        results.push(if ok {
                            None
                        } else {
                            Some(json!({
                                "lambda": lam.to_string(),
                                "l": l,
                                "witness": witness.to_string(),
                            }))
                        });
                        cases.push((lam, l));
                    }
                }
            }
        }
    }

    // Deterministic spread of engine confirmations across the sweep.
    let stride = (cases.len() / samples as usize).max(1);
    let engine: Vec<Option<Value>> = cases
        .par_iter()
        .step_by(stride)
        .map(|(lam, l)| {
            let ctx = CycloContext::with_q_square_order(Order::Finite(*l), 0);
            let non = verify_non(lam, &ctx);
            if non.ok {
                None
            } else {
                Some(json!({
                    "lambda": lam.to_string(),
                    "l": l,
                    "engine": non.engine.to_string(),
                    "closed_form": non.closed_form.to_string(),
                }))
            }
        })
        .collect();
    results.extend(engine.into_iter().take(samples as usize));
    (SuiteRun::collect(results), samples)
}

// ---------------------------------------------------------------------
// lowe2: staircase descent with exact recovery.

fn run_lowe2(samples: u64, seed: u64) -> (SuiteRun, u64) {
    let mut tuples: Vec<Vec<i64>> = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        tuples.push(prefix.clone());
        if prefix.len() == 4 {
            continue;
        }
        let cap = prefix.last().copied().unwrap_or(4);
        for e in -4..=cap {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    let picked = subsample(tuples.len(), samples, seed);
    let results: Vec<Option<Value>> = picked
        .par_iter()
        .map(|&i| {
            let lam = &tuples[i];
            let trace = verify_lowe2(lam);
            if trace.ok {
                None
            } else {
                let stage = trace
                    .stages
                    .iter()
                    .find(|s| !s.descent_ok || !s.recovered)
                    .map(|s| s.k);
                Some(json!({
                    "lambda": lam,
                    "stage": stage,
                    "final_weight": trace.final_weight,
                }))
            }
        })
        .collect();
    let total = results.len() as u64;
    (SuiteRun::collect(results), total)
}

// ---------------------------------------------------------------------
// lucas: combinatorial vanishing rule vs exact evaluation.

fn run_lucas(samples: u64, seed: u64) -> (SuiteRun, u64) {
    let pairs: Vec<(i64, i64)> = (0..=40i64)
        .flat_map(|s| (0..=s).map(move |t| (s, t)))
        .collect();
    let ctxs: Vec<CycloContext> = (3..=12u64)
        .map(|lp| CycloContext::new(Order::Finite(lp), 0))
        .collect();
    let picked = subsample(pairs.len(), samples, seed);
    let results: Vec<Option<Value>> = picked
        .par_iter()
        .map(|&i| {
            let (s, t) = pairs[i];
            let binom = gauss_binom(s, t);
            for ctx in &ctxs {
                let by_rule = lucas_nonzero(s, t, ctx);
                let by_eval = !is_zero_at_q(&binom, ctx);
                if by_rule != by_eval {
                    return Some(json!({
                        "s": s,
                        "t": t,
                        "lprime": match ctx.l_prime() {
                            Order::Finite(lp) => lp,
                            Order::Infinity => 0,
                        },
                        "rule": by_rule,
                        "eval": by_eval,
                    }));
                }
            }
            None
        })
        .collect();
    let total = results.len() as u64;
    (SuiteRun::collect(results), total)
}

// ---------------------------------------------------------------------
// involution: Hecke twists.

fn run_involution(samples: u64, seed: u64) -> (SuiteRun, u64) {
    let samples = if samples == 0 { 500 } else { samples };
    let q2 = LaurentPoly::var_pow(2);
    let q2m1 = &q2 - &LaurentPoly::one();
    let mut results: Vec<Option<Value>> = Vec::new();

    for r in 1..=4usize {
        for w in all_perms(r) {
            let x = HeckeElt::basis(w.clone());
            let ok = x.sharp().sharp() == x
                && x.dagger().dagger() == x
                && x.sharp().dagger() == x.dagger().sharp();
            results.push(if ok {
                None
            } else {
                Some(json!({"relation": "involution/commutation", "r": r, "w": w.to_string()}))
            });
        }
    }

    type Twist = (&'static str, Box<dyn Fn(&HeckeElt) -> HeckeElt>);
    for r in 2..=4usize {
        let maps: [Twist; 3] = [
            ("id", Box::new(|x: &HeckeElt| x.clone())),
            ("sharp", Box::new(HeckeElt::sharp)),
            ("dagger", Box::new(HeckeElt::dagger)),
        ];
        for (name, map) in &maps {
            let g: Vec<HeckeElt> = (1..r).map(|i| map(&HeckeElt::generator(r, i))).collect();
            for (i, gi) in g.iter().enumerate() {
                let quad_ok = gi.mul(gi) == gi.scaled(&q2m1).add(&HeckeElt::unit(r).scaled(&q2));
                results.push(if quad_ok {
                    None
                } else {
                    Some(json!({"relation": "quadratic", "map": name, "r": r, "i": i + 1}))
                });
                for (j, gj) in g.iter().enumerate().skip(i + 1) {
                    let ok = if j == i + 1 {
                        gi.mul(gj).mul(gi) == gj.mul(gi).mul(gj)
                    } else {
                        gi.mul(gj) == gj.mul(gi)
                    };
                    results.push(if ok {
                        None
                    } else {
                        Some(json!({
                            "relation": if j == i + 1 { "braid" } else { "commute" },
                            "map": name,
                            "r": r,
                            "pair": [i + 1, j + 1],
                        }))
                    });
                }
            }
        }
    }

    // Multiplicativity on seeded random basis pairs at r = 5.
    let r = 5usize;
    let random: Vec<Option<Value>> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = instance_rng(seed, i);
            let mut pick = || {
                let mut line: Vec<usize> = (1..=r).collect();
                line.shuffle(&mut rng);
                Perm::from_one_line(&line)
            };
            let (u, w) = (pick(), pick());
            let x = HeckeElt::basis(u.clone());
            let y = HeckeElt::basis(w.clone());
            let product = x.mul(&y);
            let ok = product.sharp() == x.sharp().mul(&y.sharp())
                && product.dagger() == x.dagger().mul(&y.dagger());
            if ok {
                None
            } else {
                Some(json!({
                    "relation": "multiplicativity",
                    "u": u.to_string(),
                    "w": w.to_string(),
                }))
            }
        })
        .collect();
    results.extend(random);
    (SuiteRun::collect(results), samples)
}
