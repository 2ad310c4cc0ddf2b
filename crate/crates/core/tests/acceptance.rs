//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `REFUTED` print FAIL like any other. They do not fail
//! the process as long as the concrete counterexamples behind them still
//! reproduce; anything else failing, or a refuted criterion passing, does.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secdom::crosscheck::{crosscheck, CrossCheckConfig, CrossCheckReport, Suite};
use secdom::domination::is_secure_dominating;
use secdom::graph::families::path;
use secdom::oracle::secure_domination_number;
use secdom::recognition::SplitPartition;
use secdom::reductions::{cbip_sdd_to_cbip_bisplit_sdd, split_sdd_to_bisplit_sdd};
use secdom::{Graph, VertexSet};

const SEED: u64 = 20_240_601;

/// Criteria contradicted by explicit counterexamples.
const REFUTED: &[(u32, &str)] = &[(
    4,
    "gamma_s(G') = 2 gamma_s(G) + 2 fails: P3 doubled on its leaves has gamma_s(G') = 4 < 6, \
     K1 as a split graph has gamma_s(G') = 3 < 4",
)];

/// Recomputes the counterexamples named in `REFUTED`.
fn doubling_counterexamples_hold() -> bool {
    let p3 = path(3);
    let leaves = VertexSet::from_iter(3, [0, 2]);
    let centre = VertexSet::from_iter(3, [1]);
    let cbip =
        cbip_sdd_to_cbip_bisplit_sdd(&p3, &leaves, &centre).expect("P3 is chordal bipartite");
    let k1 = Graph::new(1, &[]).expect("K1");
    let part = SplitPartition::new(1, &[0], &[]).expect("K1 is split");
    let split = split_sdd_to_bisplit_sdd(&k1, &part).expect("K1 doubles");
    let gs = |g: &Graph| secure_domination_number(g).expect("small enough for the oracle");
    gs(&p3) == 2 && gs(&cbip.target) == 4 && gs(&k1) == 1 && gs(&split.target) == 3
}

fn count_notes(reps: &[&CrossCheckReport], needle: &str) -> usize {
    reps.iter()
        .flat_map(|r| &r.rows)
        .filter_map(|r| r.note.as_deref())
        .map(|n| n.matches(needle).count())
        .sum()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(suite: Suite) -> CrossCheckReport {
    let t = Instant::now();
    let rep = crosscheck(suite, &CrossCheckConfig::new(suite, SEED)).expect("suite runs");
    eprintln!(
        "  ran {:<16} {:>5} rows in {:.1?}",
        suite.as_str(),
        rep.summary.rows,
        t.elapsed()
    );
    rep
}

fn misses(rep: &CrossCheckReport) -> Vec<String> {
    rep.rows
        .iter()
        .filter(|r| r.hit == Some(false) || r.claim_violations > 0 || r.verified == Some(false))
        .take(3)
        .map(|r| format!("{} [{}]", r.instance, r.note.clone().unwrap_or_default()))
        .collect()
}

fn equality(reps: &[&CrossCheckReport], limit_secs: f64, elapsed: f64) -> Outcome {
    let rows: usize = reps.iter().map(|r| r.summary.rows).sum();
    let miss: usize = reps.iter().map(|r| r.summary.misses).sum();
    let claims: usize = reps.iter().map(|r| r.summary.claim_violations).sum();
    let vf: usize = reps.iter().map(|r| r.summary.verification_failures).sum();
    let mut detail = format!(
        "{rows} instances, {miss} misses, {claims} claim violations, {vf} verification failures, {elapsed:.1}s"
    );
    let examples: Vec<String> = reps.iter().flat_map(|r| misses(r)).take(3).collect();
    if !examples.is_empty() {
        detail.push_str(&format!("; e.g. {}", examples.join(" | ")));
    }
    Outcome {
        pass: miss == 0 && claims == 0 && vf == 0 && elapsed < limit_secs,
        detail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed().as_secs_f64())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// Least-squares slope of log(time) against log(n).
fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn verifier_scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = Vec::new();
    let t0 = Instant::now();
    for n in [50usize, 100, 200, 400] {
        let graphs: Vec<(Graph, VertexSet)> = (0..4)
            .map(|_| {
                let g = random_graph(&mut rng, n, 0.3);
                let s = VertexSet::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5)));
                (g, s)
            })
            .collect();
        // repeat until the sample is long enough to time reliably
        let mut reps = 1;
        let per_call = loop {
            let t = Instant::now();
            for _ in 0..reps {
                for (g, s) in &graphs {
                    std::hint::black_box(is_secure_dominating(g, s));
                }
            }
            let el = t.elapsed().as_secs_f64();
            if el > 0.05 {
                break el / (reps * graphs.len()) as f64;
            }
            reps *= 2;
        };
        points.push((n as f64, per_call));
    }
    let slope = loglog_slope(&points);
    let elapsed = t0.elapsed().as_secs_f64();
    let times: Vec<String> = points
        .iter()
        .map(|(n, t)| format!("n={n}: {:.1}us", t * 1e6))
        .collect();
    Outcome {
        pass: slope <= 3.3 && elapsed < 120.0,
        detail: format!(
            "log-log slope {slope:.2} ({}), {elapsed:.1}s",
            times.join(", ")
        ),
    }
}

fn main() -> ExitCode {
    let mut lines: Vec<(u32, &str, Outcome)> = Vec::new();

    let (kpq, t) = timed(|| run(Suite::Kpq));
    lines.push((
        1,
        "K_{p,q} closed form",
        Outcome {
            pass: kpq.summary.rows == 15 && kpq.summary.hits == 15 && t < 10.0,
            detail: format!("{}/{} match, {t:.1}s", kpq.summary.hits, kpq.summary.rows),
        },
    ));

    let (split_eq, t) = timed(|| run(Suite::SplitEquality));
    lines.push((
        2,
        "split DD -> SDD equality",
        equality(&[&split_eq], 300.0, t),
    ));

    let (bisplit_eq, t) = timed(|| run(Suite::BisplitEquality));
    lines.push((
        3,
        "bisplit DD -> SDD equality",
        equality(&[&bisplit_eq], 600.0, t),
    ));

    let ((cbip, split_dbl), t) = timed(|| (run(Suite::CbipDoubling), run(Suite::SplitDoubling)));
    let mut dbl = equality(&[&cbip, &split_dbl], 1800.0, t);
    let both = [&cbip, &split_dbl];
    let over = both
        .iter()
        .flat_map(|r| &r.rows)
        .filter(|r| r.observed > r.expected)
        .count();
    dbl.detail = format!(
        "{}; observed > expected on {over}, backward lifts: {} conclusion false, {} procedure gap; \
         forward construction rejected {} times",
        dbl.detail,
        count_notes(&both, "(conclusion false)"),
        count_notes(&both, "(procedure gap)"),
        count_notes(&both, "forward: "),
    );
    lines.push((4, "doubling equalities", dbl));

    let reductions = [&split_eq, &bisplit_eq, &cbip, &split_dbl];
    let counted: usize = reductions.iter().map(|r| r.summary.rows).sum();
    let mismatched: usize = reductions.iter().map(|r| r.summary.count_mismatches).sum();
    lines.push((
        5,
        "vertex and edge count formulas",
        Outcome {
            pass: mismatched == 0 && counted > 0,
            detail: format!("{counted} targets, {mismatched} mismatches"),
        },
    ));

    let chain = run(Suite::Chain);
    let cbis = run(Suite::ChordalBisplit);
    let solver_fail = chain.summary.verification_failures + cbis.summary.verification_failures;
    lines.push((
        6,
        "solver soundness",
        Outcome {
            pass: solver_fail == 0,
            detail: format!(
                "{} chain + {} chordal-bisplit instances, {solver_fail} outputs rejected",
                chain.summary.rows, cbis.summary.rows
            ),
        },
    ));

    let audit = |r: &CrossCheckReport| {
        format!(
            "{} rows: raw>opt {}, safeguarded>opt {}, certified!=opt {}",
            r.summary.rows, r.summary.raw_gaps, r.summary.safeguard_gaps, r.summary.final_gaps
        )
    };
    lines.push((
        7,
        "solver optimality audit",
        Outcome {
            pass: chain.summary.rows >= 200
                && cbis.summary.rows >= 200
                && chain.summary.final_gaps == 0
                && cbis.summary.final_gaps == 0,
            detail: format!("chain {}; chordal-bisplit {}", audit(&chain), audit(&cbis)),
        },
    ));

    let prop = run(Suite::Prop1);
    let witnesses = run(Suite::Witnesses);
    let approx = run(Suite::Approx);
    let everything = [
        &kpq,
        &split_eq,
        &bisplit_eq,
        &cbip,
        &split_dbl,
        &chain,
        &cbis,
        &prop,
        &witnesses,
        &approx,
    ];
    let sets: usize = everything.iter().map(|r| r.summary.prop1_sets).sum();
    let bad: usize = everything.iter().map(|r| r.summary.prop1_violations).sum();
    lines.push((
        8,
        "epn sets induce cliques",
        Outcome {
            pass: bad == 0 && sets > 0,
            detail: format!("{sets} secure dominating sets, {bad} violations"),
        },
    ));

    let combs = witnesses
        .rows
        .iter()
        .filter(|r| r.branch.as_deref().is_some_and(|b| b.contains("comb")))
        .count();
    let istars = witnesses
        .rows
        .iter()
        .filter(|r| r.branch.as_deref().is_some_and(|b| b.contains("I*-star")))
        .count();
    lines.push((
        9,
        "star and comb convexity witnesses",
        Outcome {
            pass: witnesses.summary.misses == 0 && witnesses.summary.verification_failures == 0,
            detail: format!(
                "{} targets, K* star on all, {istars} extended I* stars, {combs} extended I* combs, {} failures",
                witnesses.summary.rows, witnesses.summary.misses
            ),
        },
    ));

    let doubled = approx.rows.iter().filter(|r| r.target_n.is_some()).count();
    let greedy_total: usize = approx.rows.iter().filter_map(|r| r.solver_final).sum();
    let opt_total: usize = approx.rows.iter().filter_map(|r| r.gamma_s).sum();
    lines.push((
        10,
        "split approximation wrapper",
        Outcome {
            pass: approx.summary.misses == 0
                && approx.summary.verification_failures == 0
                && approx.summary.claim_violations == 0,
            detail: format!(
                "{} instances ({doubled} past the short-circuit), exact inner solver optimal on {}, greedy total {greedy_total} vs optimum {opt_total}",
                approx.summary.rows, approx.summary.hits
            ),
        },
    ));

    lines.push((11, "verifier scaling", verifier_scaling()));

    let reproduced = doubling_counterexamples_hold();
    let mut ok = true;
    for (id, name, o) in &lines {
        println!(
            "[{}] criterion {id:>2}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        match REFUTED.iter().find(|(r, _)| r == id) {
            Some((_, why)) => {
                println!("       refuted: {why} (counterexamples reproduced: {reproduced})");
                ok &= !o.pass && reproduced;
            }
            None => ok &= o.pass,
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
