//! `secdom` command line: generate instances, recognize classes, verify and
//! solve secure domination, build reductions and run cross-checks.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification failure
//! was found, 3 a claim violation was found.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use secdom::crosscheck::{crosscheck, CrossCheckConfig, Suite};
use secdom::domination::{is_dominating, is_secure_dominating};
use secdom::generate::{generate, InstanceSpec};
use secdom::io::{read_edge_list_file, write_edge_list};
use secdom::oracle::{min_dominating_brute, min_secure_dominating_brute};
use secdom::recognition::{
    is_chordal, is_chordal_bipartite, recognize_bisplit, recognize_chain,
    recognize_chordal_bisplit, recognize_split, BisplitPartition, SplitPartition,
};
use secdom::reductions::{reduce, ReductionKind, SourcePartition};
use secdom::solvers::{solve_chain, solve_chordal_bisplit, SolveOptions};
use secdom::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "secdom", version, about = "Secure domination toolkit")]
struct Cli {
    /// Seed for generators and random cross-check instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance as an edge list (with `--out`, also `<out>.json`
    /// holding the instance parameters and class partition).
    Gen(GenArgs),
    /// Class membership verdict with a partition when one applies.
    Recognize {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Check a vertex set for (secure) domination.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        /// Require secure domination for a zero exit code.
        #[arg(long)]
        secure: bool,
    },
    /// Minimum (secure) dominating set, exactly or by a class algorithm.
    Solve(SolveArgs),
    /// Build a reduction target (edge list) and its JSON sidecar (`<out>.json`).
    Reduce {
        file: PathBuf,
        #[arg(long)]
        kind: ReductionKind,
        /// Source partition as JSON, inline or a file path. Recognized when omitted.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Run a cross-check suite and print the report.
    Crosscheck(CrossArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Split,
    Bisplit,
    Chain,
    Chordal,
    ChordalBipartite,
    ChordalBisplit,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    class: GenClass,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long)]
    independent: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    z: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenClass {
    Split,
    Bisplit,
    Chain,
    ChordalBisplit,
    ChordalBipartite,
    Path,
    Cycle,
    CompleteBipartite,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// Exhaustive oracle (at most 24 vertices).
    #[arg(long, group = "method")]
    exact: bool,
    #[arg(long, group = "method")]
    chain: bool,
    #[arg(long, group = "method")]
    chordal_bisplit: bool,
    /// With `--exact`: minimum dominating set instead.
    #[arg(long, requires = "exact", conflicts_with = "secure")]
    domination: bool,
    /// With `--exact`: minimum secure dominating set (the default).
    #[arg(long, requires = "exact")]
    secure: bool,
    /// Compare class solver output with the oracle.
    #[arg(long)]
    certify: bool,
    /// Bisplit partition as JSON for `--chordal-bisplit`.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Args)]
struct CrossArgs {
    #[arg(long)]
    suite: Suite,
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    exhaustive_max_n: Option<usize>,
    /// Seconds before the run stops scheduling instances.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Record per-row wall time (rows are then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    VerificationFailure,
    ClaimViolation,
}

impl Status {
    fn code(self) -> ExitCode {
        match self {
            Status::Ok => ExitCode::SUCCESS,
            Status::VerificationFailure => ExitCode::from(2),
            Status::ClaimViolation => ExitCode::from(3),
        }
    }
}

/// Partition given on the command line, tagged like the library types.
#[derive(Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
enum PartitionArg {
    Split {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    Bisplit {
        x: Vec<usize>,
        y: Vec<usize>,
        z: Vec<usize>,
    },
    Bipartition {
        x: Vec<usize>,
        y: Vec<usize>,
    },
}

impl PartitionArg {
    fn parse(text: &str) -> anyhow::Result<Self> {
        let raw = if text.trim_start().starts_with('{') {
            text.to_owned()
        } else {
            fs::read_to_string(text).with_context(|| format!("reading partition {text}"))?
        };
        serde_json::from_str(&raw).context("partition JSON")
    }

    fn into_source(self, n: usize) -> anyhow::Result<SourcePartition> {
        Ok(match self {
            Self::Split {
                clique,
                independent,
            } => SourcePartition::Split(SplitPartition::new(n, &clique, &independent)?),
            Self::Bisplit { x, y, z } => {
                SourcePartition::Bisplit(BisplitPartition::new(n, &x, &y, &z)?)
            }
            Self::Bipartition { x, y } => SourcePartition::Bipartition {
                x: VertexSet::try_from_slice(n, &x)?,
                y: VertexSet::try_from_slice(n, &y)?,
            },
        })
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, v: &Value) -> anyhow::Result<()> {
    if cli.format == Format::Csv {
        bail!("csv output is only available for crosscheck");
    }
    emit(
        cli.out.as_deref(),
        &(serde_json::to_string_pretty(v)? + "\n"),
    )
}

/// `<path>.json` next to an output file.
fn sidecar_path(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn need(v: Option<usize>, flag: &str) -> anyhow::Result<usize> {
    v.ok_or_else(|| anyhow!("missing --{flag}"))
}

fn spec_of(a: &GenArgs, seed: u64) -> anyhow::Result<InstanceSpec> {
    Ok(match a.class {
        GenClass::Split => InstanceSpec::Split {
            clique: need(a.clique, "clique")?,
            independent: need(a.independent, "independent")?,
            seed,
        },
        GenClass::Bisplit => InstanceSpec::Bisplit {
            x: need(a.x, "x")?,
            y: need(a.y, "y")?,
            z: need(a.z, "z")?,
            seed,
        },
        GenClass::Chain => InstanceSpec::Chain {
            x: need(a.x, "x")?,
            y: need(a.y, "y")?,
            seed,
        },
        GenClass::ChordalBisplit => InstanceSpec::ChordalBisplit {
            leaves: need(a.leaves, "leaves")?,
            x: need(a.x, "x")?,
            seed,
        },
        GenClass::ChordalBipartite => InstanceSpec::ChordalBipartite {
            x: need(a.x, "x")?,
            y: need(a.y, "y")?,
            seed,
        },
        GenClass::Path => InstanceSpec::Path { n: need(a.n, "n")? },
        GenClass::Cycle => InstanceSpec::Cycle { n: need(a.n, "n")? },
        GenClass::CompleteBipartite => InstanceSpec::CompleteBipartite {
            p: need(a.p, "p")?,
            q: need(a.q, "q")?,
        },
    })
}

fn gen(cli: &Cli, a: &GenArgs) -> anyhow::Result<Status> {
    let spec = spec_of(a, cli.seed)?;
    let inst = generate(&spec)?;
    emit(cli.out.as_deref(), &write_edge_list(&inst.graph))?;
    if let Some(p) = &cli.out {
        let meta = json!({ "schema": 1, "spec": spec, "partition": inst.partition });
        fs::write(sidecar_path(p), serde_json::to_string_pretty(&meta)? + "\n")?;
    }
    Ok(Status::Ok)
}

fn recognize(cli: &Cli, g: &Graph, class: ClassArg) -> anyhow::Result<Status> {
    let (name, member, partition) = match class {
        ClassArg::Split => {
            let p = recognize_split(g);
            ("split", p.is_some(), p.map(|p| json!(p)))
        }
        ClassArg::Bisplit => {
            let p = recognize_bisplit(g)?;
            ("bisplit", p.is_some(), p.map(|p| json!(p)))
        }
        ClassArg::Chain => {
            let p = recognize_chain(g)?;
            ("chain", p.is_some(), p.map(|p| json!(p)))
        }
        ClassArg::Chordal => ("chordal", is_chordal(g), None),
        ClassArg::ChordalBipartite => {
            let member = is_chordal_bipartite(g)?;
            let p = member.then(|| g.two_coloring()).flatten().map(|c| {
                let side = |k: u8| (0..g.n()).filter(|&v| c[v] == k).collect::<Vec<_>>();
                json!({ "x": side(0), "y": side(1) })
            });
            ("chordal-bipartite", member, p)
        }
        ClassArg::ChordalBisplit => {
            let p = recognize_chordal_bisplit(g)?;
            ("chordal-bisplit", p.is_some(), p.map(|p| json!(p)))
        }
    };
    let mut v = json!({ "class": name, "member": member });
    if let Some(p) = partition {
        v["partition"] = p;
    }
    emit_json(cli, &v)?;
    Ok(Status::Ok)
}

fn verify(cli: &Cli, g: &Graph, set: &[usize], secure: bool) -> anyhow::Result<Status> {
    let s = VertexSet::try_from_slice(g.n(), set)?;
    let dominating = is_dominating(g, &s);
    let cert = is_secure_dominating(g, &s);
    let mut v = json!({ "dominating": dominating, "secure": cert.is_some() });
    if let Some(c) = &cert {
        v["certificate"] = json!(c.assignments);
    }
    emit_json(cli, &v)?;
    let ok = if secure { cert.is_some() } else { dominating };
    Ok(if ok {
        Status::Ok
    } else {
        Status::VerificationFailure
    })
}

fn solve(cli: &Cli, g: &Graph, a: &SolveArgs) -> anyhow::Result<Status> {
    let opts = SolveOptions { certify: a.certify };
    let (v, set, secure) = if a.chain {
        let p = recognize_chain(g)?.ok_or_else(|| Error::Class("not a chain graph".into()))?;
        let r = solve_chain(g, &p, opts)?;
        (
            json!({ "size": r.size(), "set": r.set, "branch_taken": r.branch_taken, "certified": r.certified }),
            r.set,
            true,
        )
    } else if a.chordal_bisplit {
        let p = match &a.partition {
            Some(text) => match PartitionArg::parse(text)?.into_source(g.n())? {
                SourcePartition::Bisplit(p) => p,
                _ => bail!("--chordal-bisplit needs a bisplit partition"),
            },
            None => recognize_chordal_bisplit(g)?
                .ok_or_else(|| Error::Class("not a chordal bisplit graph".into()))?,
        };
        let r = solve_chordal_bisplit(g, &p, opts)?;
        let v = json!({
            "size": r.size(),
            "set": r.set,
            "branch_taken": r.branch_taken,
            "cases_detected": r.cases_detected,
            "certified": r.certified,
        });
        (v, r.set, true)
    } else if a.exact {
        let set = if a.domination {
            min_dominating_brute(g)?
        } else {
            min_secure_dominating_brute(g)?
        };
        (json!({ "size": set.len(), "set": set }), set, !a.domination)
    } else {
        bail!("choose one of --exact, --chain, --chordal-bisplit");
    };
    emit_json(cli, &v)?;
    let ok = if secure {
        is_secure_dominating(g, &set).is_some()
    } else {
        is_dominating(g, &set)
    };
    Ok(if ok {
        Status::Ok
    } else {
        Status::VerificationFailure
    })
}

fn default_partition(kind: ReductionKind, g: &Graph) -> anyhow::Result<SourcePartition> {
    Ok(match kind {
        ReductionKind::SplitDd | ReductionKind::SplitSdd => SourcePartition::Split(
            recognize_split(g).ok_or_else(|| Error::Class("not a split graph".into()))?,
        ),
        ReductionKind::BisplitDd => SourcePartition::Bisplit(
            recognize_bisplit(g)?.ok_or_else(|| Error::Class("not a bisplit graph".into()))?,
        ),
        ReductionKind::CbipSdd => {
            let c = g
                .two_coloring()
                .ok_or_else(|| Error::Class("not bipartite".into()))?;
            let n = g.n();
            SourcePartition::Bipartition {
                x: VertexSet::from_iter(n, (0..n).filter(|&v| c[v] == 0)),
                y: VertexSet::from_iter(n, (0..n).filter(|&v| c[v] == 1)),
            }
        }
    })
}

fn reduce_cmd(
    cli: &Cli,
    g: &Graph,
    kind: ReductionKind,
    partition: Option<&str>,
) -> anyhow::Result<Status> {
    if cli.format == Format::Csv {
        bail!("csv output is only available for crosscheck");
    }
    let part = match partition {
        Some(text) => PartitionArg::parse(text)?.into_source(g.n())?,
        None => default_partition(kind, g)?,
    };
    let r = reduce(kind, g, &part)?;
    let sidecar = serde_json::to_string_pretty(&r.sidecar())? + "\n";
    match &cli.out {
        Some(p) => {
            fs::write(p, write_edge_list(&r.target))?;
            fs::write(sidecar_path(p), sidecar)?;
        }
        None => {
            print!("{}", write_edge_list(&r.target));
            eprint!("{sidecar}");
        }
    }
    Ok(if r.counts_match() && r.target_partition_valid() {
        Status::Ok
    } else {
        Status::ClaimViolation
    })
}

fn crosscheck_cmd(cli: &Cli, a: &CrossArgs) -> anyhow::Result<Status> {
    let mut cfg = CrossCheckConfig::new(a.suite, cli.seed);
    if let Some(v) = a.random {
        cfg.budget.random = v;
    }
    if let Some(v) = a.max_n {
        cfg.budget.max_n = v;
    }
    if let Some(v) = a.exhaustive_max_n {
        cfg.budget.exhaustive_max_n = v;
    }
    cfg.budget.time_limit = a.time_limit.map(std::time::Duration::from_secs_f64);
    cfg.record_timing = a.timing;
    let rep = crosscheck(a.suite, &cfg)?;
    let text = match cli.format {
        Format::Json => rep.to_json() + "\n",
        Format::Csv => rep.to_csv()?,
    };
    emit(cli.out.as_deref(), &text)?;
    let s = &rep.summary;
    Ok(if s.claim_violations > 0 {
        Status::ClaimViolation
    } else if s.verification_failures > 0 {
        Status::VerificationFailure
    } else {
        Status::Ok
    })
}

fn run(cli: &Cli) -> anyhow::Result<Status> {
    let load = |p: &Path| read_edge_list_file(p).map_err(anyhow::Error::from);
    match &cli.cmd {
        Cmd::Gen(a) => gen(cli, a),
        Cmd::Recognize { file, class } => recognize(cli, &load(file)?, *class),
        Cmd::Verify { file, set, secure } => verify(cli, &load(file)?, set, *secure),
        Cmd::Solve(a) => solve(cli, &load(&a.file)?, a),
        Cmd::Reduce {
            file,
            kind,
            partition,
        } => reduce_cmd(cli, &load(file)?, *kind, partition.as_deref()),
        Cmd::Crosscheck(a) => crosscheck_cmd(cli, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => status.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::ClaimViolation(_)) => Status::ClaimViolation.code(),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
