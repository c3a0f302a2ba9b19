//! The `qmull` binary: a batch front end over the library with JSON
//! (default) or plain-text output, a JSONL batch mode, and seeded
//! verification suites.
//!
//! Exit codes: `0` on success, `1` when a verification run finds a
//! counterexample (the first one is reported), `2` on parse or
//! validation errors with a one-line diagnostic on stderr.  Every JSON
//! response carries `"schema": 1`; `QMULL_THREADS` caps the worker pool
//! used by the `verify` suites.

mod verify;

use std::io::{BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmull::mullclass::{
    enumerate_classification, is_polynomial_hw, jl, mullineux_symbol, nonpoly_witness,
};
use qmull::pbw::{act_on_hw, parse_word, Algebra, UElement};
use qmull::qarith::{
    eval_at_q, gauss_binom, is_zero_at_q, lucas_nonzero, CycloContext, LaurentPoly, Order,
};
use qmull::serganova::{mull_via_serganova, serganova_tilde, sigma_weight};
use qmull::symhecke::{
    enumerate_degree_matrices, iota, min_double_cosets, super_double_cosets, HeckeElt, Perm,
    SuperMatrix,
};
use qmull::weights::{enumerate_dominant, Partition, Weight};

/// Version tag present in every JSON response.
const SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(
    name = "qmull",
    version,
    about = "Exact quantum combinatorics: Mullineux maps, coset/matrix dictionaries, \
             Hecke twists, and a divided-power straightening engine"
)]
struct Cli {
    /// Output format for the response.
    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Json)]
    output: OutputKind,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MullMethod {
    /// The odd-root recursion through the block-swap embedding.
    Serganova,
    /// The rim-hook symbol computation.
    Symbol,
    /// Run both and report agreement.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a symmetric Gaussian binomial and its vanishing at a
    /// root of unity.
    Qbinom {
        /// Top entry (any integer).
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        /// Bottom entry.
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        /// Order of q: an integer >= 3 or "inf".
        #[arg(long, default_value = "inf")]
        lprime: String,
        /// Field characteristic: 0 or an odd prime.
        #[arg(long = "char", default_value_t = 0)]
        field_char: u64,
    },
    /// Run the descending 0/1-labelling recursion on a partition.
    Jl {
        /// Partition as a comma list, e.g. "3,3".
        #[arg(long)]
        partition: String,
        /// Order of q^2: an integer >= 1 or "inf".
        #[arg(long)]
        l: String,
    },
    /// Enumerate the dominant weights indexing polynomial irreducibles.
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        /// Order of q^2: an integer >= 2 or "inf".
        #[arg(long)]
        l: String,
        /// List every member weight.
        #[arg(long, conflicts_with_all = ["count", "witnesses"])]
        list: bool,
        /// Report counts only (the default).
        #[arg(long, conflicts_with = "witnesses")]
        count: bool,
        /// List the non-members with their witness data instead.
        #[arg(long)]
        witnesses: bool,
    },
    /// Apply the Mullineux map to an l-restricted partition.
    Mull {
        /// Partition as a comma list, e.g. "2,1".
        #[arg(long)]
        partition: String,
        /// Order of q^2: an integer >= 2 or "inf".
        #[arg(long)]
        l: String,
        /// Which implementation to run.
        #[arg(long, value_enum, default_value_t = MullMethod::Both)]
        method: MullMethod,
    },
    /// Run the odd-root subtraction recursion on a dominant weight.
    Serganova {
        /// Split weight "a,b,..|c,d,..".
        #[arg(long)]
        weight: String,
        /// Order of q^2: an integer >= 2 or "inf".
        #[arg(long)]
        l: String,
        /// Include the full step-by-step trace.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the block-swap twisted highest weight (requires m = n).
    Sigma {
        /// Split weight "a,b,..|c,d,..".
        #[arg(long)]
        weight: String,
        /// Order of q^2: an integer >= 2 or "inf".
        #[arg(long)]
        l: String,
    },
    /// List minimal double-coset representatives for two compositions.
    Cosets {
        /// Row composition: a comma list, or a split weight with --super.
        #[arg(long)]
        lambda: String,
        /// Column composition in the same format.
        #[arg(long)]
        mu: String,
        /// Treat the compositions as split and impose the parity-block
        /// intersection condition.
        #[arg(long = "super")]
        super_cosets: bool,
    },
    /// Map a super double-coset triple to its degree matrix.
    Iota {
        /// Row split composition "a,b,..|c,d,..".
        #[arg(long)]
        lambda: String,
        /// Column split composition.
        #[arg(long)]
        mu: String,
        /// Minimal representative in one-line notation, e.g. "2,1,3".
        #[arg(long)]
        d: String,
    },
    /// Enumerate the degree-r matrices with bounded odd block.
    Matrices {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        /// Report the count only.
        #[arg(long)]
        count: bool,
    },
    /// Flip a matrix across the anti-diagonal.
    Daggermat {
        /// Matrix rows separated by ';', entries by ',': "0,1;1,0".
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Multiply T-basis generators and optionally twist the result.
    Hecke {
        /// Number of strands (the symmetric group degree).
        #[arg(long)]
        r: usize,
        /// Product expression over generators, e.g. "T1*T2*T1" ("1" is
        /// the unit).
        #[arg(long)]
        expr: String,
        /// Apply the T_i -> (q^2 - 1) - T_i twist to the result.
        #[arg(long, conflicts_with = "dagger")]
        sharp: bool,
        /// Apply the diagram-reversal twist to the result.
        #[arg(long)]
        dagger: bool,
    },
    /// Apply a divided-power word to a formal highest-weight vector.
    Pbw {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Weight of the generating vector, "a,b,..|c,d,..".
        #[arg(long)]
        lambda: String,
        /// Whitespace-separated word: E(a,b,M), K(a,+1), K(a,-1),
        /// KB(a,c,t), KB2(a,b,c,t).
        #[arg(long)]
        word: String,
        /// Evaluate the coefficients at the root of unity.
        #[arg(long = "at-q")]
        at_q: bool,
        /// Order of q for --at-q: an integer >= 3 or "inf".
        #[arg(long, default_value = "inf")]
        lprime: String,
        /// Field characteristic for --at-q: 0 only (exact evaluation).
        #[arg(long = "char", default_value_t = 0)]
        field_char: u64,
    },
    /// Run a seeded verification suite; exits 1 on any failed check.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Instance count for the randomized suites, or a subsample cap
        /// for the exhaustive ones (0 = the suite's default sweep).
        #[arg(long, default_value_t = 0)]
        samples: u64,
        /// RNG seed; runs are bit-reproducible for a fixed seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Read JSONL requests {"cmd": "...", "args": {...}} from stdin and
    /// write one JSON response per line.
    Batch,
}

/// A completed command: the JSON payload plus whether a verification
/// failed (exit code 1).
struct Outcome {
    value: Value,
    failed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome {
            value,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("QMULL_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k >= 1 => {
                // A second initialization (e.g. in tests) is harmless.
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => {
                eprintln!("error: QMULL_THREADS must be a positive integer, got '{}'", threads);
                return ExitCode::from(2);
            }
        }
    }

    let cli = Cli::parse();
    if matches!(cli.command, Command::Batch) {
        return run_batch();
    }
    match run(cli.command) {
        Ok(outcome) => {
            emit(&outcome.value, cli.output);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn emit(value: &Value, kind: OutputKind) {
    match kind {
        OutputKind::Json => println!("{}", value),
        OutputKind::Text => {
            let obj = value.as_object().expect("responses are objects");
            for (key, val) in obj {
                if key == "schema" {
                    continue;
                }
                match val {
                    Value::String(s) => println!("{}: {}", key, s),
                    Value::Array(items) => {
                        println!("{}:", key);
                        for item in items {
                            match item {
                                Value::String(s) => println!("  {}", s),
                                other => println!("  {}", other),
                            }
                        }
                    }
                    other => println!("{}: {}", key, other),
                }
            }
        }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Qbinom {
            s,
            t,
            lprime,
            field_char,
        } => run_qbinom(s, t, &lprime, field_char),
        Command::Jl { partition, l } => run_jl(&partition, &l),
        Command::Classify {
            m,
            n,
            r,
            l,
            list,
            count: _,
            witnesses,
        } => run_classify(m, n, r, &l, list, witnesses),
        Command::Mull {
            partition,
            l,
            method,
        } => run_mull(&partition, &l, method),
        Command::Serganova { weight, l, trace } => run_serganova(&weight, &l, trace),
        Command::Sigma { weight, l } => run_sigma(&weight, &l),
        Command::Cosets {
            lambda,
            mu,
            super_cosets,
        } => run_cosets(&lambda, &mu, super_cosets),
        Command::Iota { lambda, mu, d } => run_iota(&lambda, &mu, &d),
        Command::Matrices { m, n, r, count } => run_matrices(m, n, r, count),
        Command::Daggermat { matrix, m, n } => run_daggermat(&matrix, m, n),
        Command::Hecke {
            r,
            expr,
            sharp,
            dagger,
        } => run_hecke(r, &expr, sharp, dagger),
        Command::Pbw {
            m,
            n,
            lambda,
            word,
            at_q,
            lprime,
            field_char,
        } => run_pbw(m, n, &lambda, &word, at_q, &lprime, field_char),
        Command::Verify {
            suite,
            samples,
            seed,
        } => Ok(verify::run(suite, samples, seed)),
        Command::Batch => unreachable!("batch is dispatched in main"),
    }
}

// ---------------------------------------------------------------------
// Parsing and validation helpers.

fn parse_order(s: &str) -> Result<Order, String> {
    s.parse()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse()
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validate and build a specialization context from the order of `q`.
fn cyclo_from_lprime(lprime: &str, field_char: u64) -> Result<CycloContext, String> {
    let lp = parse_order(lprime)?;
    if field_char != 0 && !is_odd_prime(field_char) {
        return Err(format!(
            "field characteristic must be 0 or an odd prime, got {}",
            field_char
        ));
    }
    if let Order::Finite(lp) = lp {
        if lp < 3 {
            return Err(format!("the order of q must be at least 3, got {}", lp));
        }
        if field_char != 0 && lp % field_char == 0 {
            return Err(format!(
                "no primitive {}-th root of unity in characteristic {}",
                lp, field_char
            ));
        }
    }
    Ok(CycloContext::new(lp, field_char))
}

/// Validate and build a characteristic-0 context from the order of `q^2`.
fn cyclo_from_l(l: Order) -> Result<CycloContext, String> {
    if let Order::Finite(l) = l {
        if l < 2 {
            return Err(format!("the order of q^2 must be at least 2, got {}", l));
        }
    }
    Ok(CycloContext::with_q_square_order(l, 0))
}

fn parse_composition(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|e| {
            let v = e
                .trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid composition entry '{}'", e))?;
            if v < 0 {
                return Err(format!("composition entries must be nonnegative, got {}", v));
            }
            Ok(v)
        })
        .collect()
}

fn parse_perm(s: &str) -> Result<Perm, String> {
    let line: Vec<usize> = s
        .split(',')
        .map(|e| {
            e.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid permutation entry '{}'", e))
        })
        .collect::<Result<_, _>>()?;
    let r = line.len();
    let mut seen = vec![false; r + 1];
    for &v in &line {
        if v < 1 || v > r || seen[v] {
            return Err(format!("'{}' is not a permutation in one-line notation", s));
        }
        seen[v] = true;
    }
    Ok(Perm::from_one_line(&line))
}

fn order_str(l: Order) -> String {
    match l {
        Order::Finite(l) => l.to_string(),
        Order::Infinity => "inf".to_string(),
    }
}

// ---------------------------------------------------------------------
// Command handlers.

fn run_qbinom(s: i64, t: i64, lprime: &str, field_char: u64) -> Result<Outcome, String> {
    let ctx = cyclo_from_lprime(lprime, field_char)?;
    let value = gauss_binom(s, t);
    let zero = if field_char == 0 {
        is_zero_at_q(&value, &ctx)
    } else {
        !lucas_nonzero(s, t, &ctx)
    };
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "s": s,
        "t": t,
        "lprime": order_str(ctx.l_prime()),
        "char": field_char,
        "value": value.to_string(),
        "zero": zero,
    })))
}

fn run_jl(partition: &str, l: &str) -> Result<Outcome, String> {
    let lam = parse_partition(partition)?;
    let order = parse_order(l)?;
    let trace = jl(&lam, order);
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "partition": lam.parts(),
        "l": order_str(order),
        "x": trace.x,
        "j": trace.j,
    })))
}

fn run_classify(
    m: usize,
    n: usize,
    r: u64,
    l: &str,
    list: bool,
    witnesses: bool,
) -> Result<Outcome, String> {
    let order = parse_order(l)?;
    let ctx = cyclo_from_l(order)?;
    let members = enumerate_classification(m, n, r, ctx.l());
    let total = enumerate_dominant(m, n, r).len();
    let mut response = json!({
        "schema": SCHEMA,
        "m": m,
        "n": n,
        "r": r,
        "l": order_str(ctx.l()),
        "count": members.len(),
        "total": total,
    });
    if list {
        response["members"] = members.iter().map(|w| w.to_string()).collect();
    }
    if witnesses {
        if m == 0 {
            return Err("witness construction needs a nonempty even block (m >= 1)".into());
        }
        let rows: Vec<Value> = enumerate_dominant(m, n, r)
            .into_iter()
            .filter(|lam| !is_polynomial_hw(lam, ctx.l()))
            .map(|lam| {
                let (indices, witness) = nonpoly_witness(&lam, &ctx);
                json!({
                    "lambda": lam.to_string(),
                    "indices": indices,
                    "witness": witness.to_string(),
                })
            })
            .collect();
        response["witnesses"] = Value::Array(rows);
    }
    Ok(Outcome::ok(response))
}

fn run_mull(partition: &str, l: &str, method: MullMethod) -> Result<Outcome, String> {
    let lam = parse_partition(partition)?;
    let order = parse_order(l)?;
    if let Order::Finite(l) = order {
        if l < 2 {
            return Err(format!("the order of q^2 must be at least 2, got {}", l));
        }
    }
    if !lam.is_l_restricted(order) {
        return Err(format!(
            "partition {} is not l-restricted for l = {}",
            lam,
            order_str(order)
        ));
    }
    let (image, agree) = match method {
        MullMethod::Symbol => (mullineux_symbol(&lam, order), None),
        MullMethod::Serganova => (mull_via_serganova(&lam, order), None),
        MullMethod::Both => {
            let by_symbol = mullineux_symbol(&lam, order);
            let by_recursion = mull_via_serganova(&lam, order);
            let agree = by_symbol == by_recursion;
            (by_recursion, Some(agree))
        }
    };
    let mut response = json!({
        "schema": SCHEMA,
        "partition": lam.parts(),
        "l": order_str(order),
        "M": image.parts(),
    });
    let failed = match agree {
        Some(flag) => {
            response["agree"] = Value::Bool(flag);
            !flag
        }
        None => false,
    };
    Ok(Outcome {
        value: response,
        failed,
    })
}

fn run_serganova(weight: &str, l: &str, trace: bool) -> Result<Outcome, String> {
    let lam = parse_weight(weight)?;
    let order = parse_order(l)?;
    if !lam.is_dominant() {
        return Err(format!("the recursion requires a dominant weight, got {}", lam));
    }
    let run = serganova_tilde(&lam, order);
    let applied = run.steps.iter().filter(|s| s.applied).count();
    let mut response = json!({
        "schema": SCHEMA,
        "start": run.start.to_string(),
        "l": order_str(order),
        "result": run.result.to_string(),
        "applied": applied,
    });
    if trace {
        let steps: Vec<Value> = run
            .steps
            .iter()
            .map(|s| {
                json!({
                    "k": s.k,
                    "beta": [s.beta.i, s.beta.j],
                    "pairing": s.pairing,
                    "applied": s.applied,
                })
            })
            .collect();
        response["steps"] = Value::Array(steps);
    }
    Ok(Outcome::ok(response))
}

fn run_sigma(weight: &str, l: &str) -> Result<Outcome, String> {
    let lam = parse_weight(weight)?;
    let order = parse_order(l)?;
    if lam.m() != lam.n() {
        return Err(format!(
            "the block swap needs m = n, got split ({}|{})",
            lam.m(),
            lam.n()
        ));
    }
    if !lam.is_dominant() {
        return Err(format!("the twist requires a dominant weight, got {}", lam));
    }
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "weight": lam.to_string(),
        "l": order_str(order),
        "result": sigma_weight(&lam, order).to_string(),
    })))
}

fn run_cosets(lambda: &str, mu: &str, super_cosets: bool) -> Result<Outcome, String> {
    let (reps, r) = if super_cosets {
        let lam = parse_weight(lambda)?;
        let mu = parse_weight(mu)?;
        if !lam.is_composition() || !mu.is_composition() {
            return Err("coset compositions must have nonnegative entries".into());
        }
        if (lam.m(), lam.n()) != (mu.m(), mu.n()) {
            return Err(format!(
                "splits disagree: ({}|{}) vs ({}|{})",
                lam.m(),
                lam.n(),
                mu.m(),
                mu.n()
            ));
        }
        if lam.degree() != mu.degree() {
            return Err(format!(
                "compositions have different sizes: {} vs {}",
                lam.degree(),
                mu.degree()
            ));
        }
        let r = lam.degree() as usize;
        (super_double_cosets(&lam, &mu, r), r)
    } else {
        let lam = parse_composition(lambda)?;
        let mu = parse_composition(mu)?;
        let size: i64 = lam.iter().sum();
        if size != mu.iter().sum::<i64>() {
            return Err(format!(
                "compositions have different sizes: {} vs {}",
                size,
                mu.iter().sum::<i64>()
            ));
        }
        let r = size as usize;
        (min_double_cosets(&lam, &mu, r), r)
    };
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "r": r,
        "count": reps.len(),
        "reps": reps.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })))
}

fn run_iota(lambda: &str, mu: &str, d: &str) -> Result<Outcome, String> {
    let lam = parse_weight(lambda)?;
    let mu = parse_weight(mu)?;
    let d = parse_perm(d)?;
    if !lam.is_composition() || !mu.is_composition() {
        return Err("coset compositions must have nonnegative entries".into());
    }
    if (lam.m(), lam.n()) != (mu.m(), mu.n()) {
        return Err("splits of lambda and mu disagree".into());
    }
    if lam.degree() != mu.degree() || lam.degree() as usize != d.r() {
        return Err(format!(
            "sizes disagree: |lambda| = {}, |mu| = {}, permutation degree {}",
            lam.degree(),
            mu.degree(),
            d.r()
        ));
    }
    let r = d.r();
    if !super_double_cosets(&lam, &mu, r).contains(&d) {
        return Err(format!(
            "{} is not a minimal super double-coset representative for ({}, {})",
            d, lam, mu
        ));
    }
    let a = iota(&lam, &d, &mu);
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "matrix": a.to_string(),
        "ro": a.row_sums().to_string(),
        "co": a.col_sums().to_string(),
    })))
}

fn run_matrices(m: usize, n: usize, r: u64, count: bool) -> Result<Outcome, String> {
    let matrices = enumerate_degree_matrices(m, n, r);
    let mut response = json!({
        "schema": SCHEMA,
        "m": m,
        "n": n,
        "r": r,
        "count": matrices.len(),
    });
    if !count {
        response["matrices"] = matrices.iter().map(|a| a.to_string()).collect();
    }
    Ok(Outcome::ok(response))
}

fn run_daggermat(matrix: &str, m: usize, n: usize) -> Result<Outcome, String> {
    let a = SuperMatrix::from_text(matrix, m, n)?;
    let d = a.dagger();
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "matrix": a.to_string(),
        "ro": a.row_sums().to_string(),
        "co": a.col_sums().to_string(),
        "dagger": d.to_string(),
        "dagger_ro": d.row_sums().to_string(),
        "dagger_co": d.col_sums().to_string(),
    })))
}

/// Parse a `*`-separated product of `T<i>` generators (or `1`).
fn parse_hecke_expr(r: usize, expr: &str) -> Result<HeckeElt, String> {
    let mut acc = HeckeElt::unit(r);
    for factor in expr.split('*') {
        let tok = factor.trim();
        if tok == "1" {
            continue;
        }
        let index = tok
            .strip_prefix('T')
            .ok_or_else(|| format!("expected T<i> or 1, got '{}'", tok))?;
        let i: usize = index
            .parse()
            .map_err(|_| format!("invalid generator index '{}'", index))?;
        if i < 1 || i >= r {
            return Err(format!("generator T{} out of range 1..{}", i, r));
        }
        acc = acc.mul(&HeckeElt::generator(r, i));
    }
    Ok(acc)
}

fn run_hecke(r: usize, expr: &str, sharp: bool, dagger: bool) -> Result<Outcome, String> {
    if r < 1 {
        return Err("r must be at least 1".into());
    }
    let mut elt = parse_hecke_expr(r, expr)?;
    if sharp {
        elt = elt.sharp();
    }
    if dagger {
        elt = elt.dagger();
    }
    let terms: Vec<Value> = elt
        .terms()
        .map(|(w, c)| json!({"w": w.to_string(), "coeff": c.to_string()}))
        .collect();
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "r": r,
        "support": terms.len(),
        "terms": terms,
    })))
}

fn run_pbw(
    m: usize,
    n: usize,
    lambda: &str,
    word: &str,
    at_q: bool,
    lprime: &str,
    field_char: u64,
) -> Result<Outcome, String> {
    let lam = parse_weight(lambda)?;
    if (lam.m(), lam.n()) != (m, n) {
        return Err(format!(
            "weight split ({}|{}) does not match --m {} --n {}",
            lam.m(),
            lam.n(),
            m,
            n
        ));
    }
    let alg = Algebra::new(m, n);
    let symbols = parse_word(&alg, word)?;
    let ctx = if at_q {
        if field_char != 0 {
            return Err("--at-q performs exact evaluation and needs characteristic 0".into());
        }
        Some(cyclo_from_lprime(lprime, 0)?)
    } else {
        None
    };
    let element = UElement::from_word(&alg, LaurentPoly::one(), symbols);
    let result = act_on_hw(&alg, &element, &lam);
    let terms: Vec<Value> = result
        .terms()
        .map(|(key, coeff)| {
            let monomial: Vec<String> = key
                .iter()
                .map(|&(hi, lo, exp)| format!("E({},{},{})", hi, lo, exp))
                .collect();
            let rendered = match &ctx {
                Some(ctx) => eval_at_q(coeff, ctx).to_string(),
                None => coeff.to_string(),
            };
            json!({
                "monomial": monomial.join(" "),
                "weight": result.weight_of(key).to_string(),
                "coeff": rendered,
            })
        })
        .filter(|term| term["coeff"] != "0")
        .collect();
    Ok(Outcome::ok(json!({
        "schema": SCHEMA,
        "lambda": lam.to_string(),
        "zero": terms.is_empty(),
        "terms": terms,
    })))
}

// ---------------------------------------------------------------------
// JSONL batch mode.

/// Convert one request object into an argv and run it through the
/// normal command parser, so batch semantics match the flag surface
/// exactly.
fn batch_line(line: &str) -> Result<Outcome, String> {
    let request: Value =
        serde_json::from_str(line).map_err(|e| format!("malformed request: {}", e))?;
    let cmd = request
        .get("cmd")
        .and_then(Value::as_str)
        .ok_or("request needs a string 'cmd' field")?;
    let mut argv: Vec<String> = std::iter::once("qmull".to_string())
        .chain(cmd.split_whitespace().map(str::to_string))
        .collect();
    if let Some(args) = request.get("args") {
        let args = args
            .as_object()
            .ok_or("request 'args' must be an object")?;
        for (key, value) in args {
            match value {
                Value::Bool(true) => argv.push(format!("--{}", key)),
                Value::Bool(false) => {}
                Value::String(s) => {
                    argv.push(format!("--{}", key));
                    argv.push(s.clone());
                }
                Value::Number(v) => {
                    argv.push(format!("--{}", key));
                    argv.push(v.to_string());
                }
                other => {
                    return Err(format!("unsupported argument type for '{}': {}", key, other))
                }
            }
        }
    }
    let cli = Cli::try_parse_from(&argv).map_err(|e| {
        // Collapse clap's rich rendering to the one-line kind.
        let line = e.to_string().lines().next().unwrap_or("bad request").to_string();
        line.strip_prefix("error: ").map(str::to_string).unwrap_or(line)
    })?;
    if matches!(cli.command, Command::Batch) {
        return Err("batch requests cannot nest".into());
    }
    run(cli.command)
}

fn run_batch() -> ExitCode {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut worst: u8 = 0;
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let response = match batch_line(&line) {
            Ok(outcome) => {
                if outcome.failed {
                    worst = worst.max(1);
                }
                outcome.value
            }
            Err(msg) => {
                worst = 2;
                json!({"schema": SCHEMA, "error": msg})
            }
        };
        writeln!(out, "{}", response).expect("stdout");
    }
    ExitCode::from(worst)
}
