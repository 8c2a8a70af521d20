//! Command-line front end: classification runs, single-pair explanation,
//! witness execution, diagram export, and the self-test battery.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nichols_core::braiding::{braiding_matrix, dynkin_diagram, Deg1Eval};
use nichols_core::centralizer::CentralizerPresentation;
use nichols_core::classifier::{
    classify, explain, max_m, ClassifyOptions, Outcome, RuleId, Verdict,
};
use nichols_core::perm::CycleType;
use nichols_core::witnesses::{self, WitnessReport};
use nichols_core::CentralizerIrrep;

#[derive(Parser)]
#[command(
    name = "nichols",
    about = "Finiteness obstructions for Nichols algebras over symmetric groups",
    long_about = "Enumerates the pairs (conjugacy class of S_m, irreducible representation \
of the centralizer), applies the obstruction rule catalog, and reports which pairs survive. \
Explicit constructions behind the rules can be re-verified and exported."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all pairs for one degree or a range of degrees
    Classify(ClassifyArgs),
    /// Trace every rule on a single (type, irrep) pair
    Explain(ExplainArgs),
    /// Run one witness construction and print its report
    Witness(WitnessArgs),
    /// Export the generalized Dynkin diagram of a family as DOT
    Diagram(DiagramArgs),
    /// Run the self-test battery
    Selftest,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Degree m or inclusive range like 3..10 (default 3..10)
    #[arg(long, default_value = "3..10")]
    m: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Disable a rule by id (a, a', b, b', c, d, e, e', e'', f, f', g, g',
    /// g'', g'''; ASCII aliases a2, b2, e2, e3, f2, g2, g3, g4); repeatable
    #[arg(long = "disable-rule")]
    disable_rule: Vec<String>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Verify the witness hook of every firing rule (slower)
    #[arg(long)]
    verify_witnesses: bool,
}

#[derive(Args)]
struct ExplainArgs {
    /// Cycle type, e.g. "2,4" or "1^2,2^3"
    #[arg(long = "type")]
    type_str: String,
    /// Irrep in the grammar `j=<j>:t=<list>;mu=<eps|sgn|[parts]>`, clauses
    /// joined by '|'; omitted clauses default to the trivial factor
    #[arg(long)]
    rho: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long = "disable-rule")]
    disable_rule: Vec<String>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Which construction: 3.1, 3.3, 3.5, 3.6, 3.7, 3.8, 3.9, 3.10
    #[arg(long)]
    prop: String,
    /// Cycle type (3.1, 3.5, 3.7, 3.8, 3.9, 3.10)
    #[arg(long = "type")]
    type_str: Option<String>,
    /// Irrep string where the construction evaluates a character
    #[arg(long)]
    rho: Option<String>,
    /// Cycle-length exponent k for the power-of-two family (3.3)
    #[arg(long)]
    k: Option<u32>,
    /// Number of 2^k-cycles, 1 or 2 (3.3)
    #[arg(long, default_value_t = 1)]
    n2k: u32,
    /// Rotation exponent t (3.1: of the triggering cycle; 3.3: of the
    /// 2^k-cycle)
    #[arg(long)]
    t: Option<u64>,
    /// Triggering cycle length (3.1)
    #[arg(long)]
    j: Option<usize>,
    /// Index of the triggering cycle, 1-based (3.1)
    #[arg(long, default_value_t = 1)]
    l: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long = "type")]
    type_str: String,
    #[arg(long)]
    rho: String,
    /// Family to draw: "lemma31" (needs a trigger) or "singleton"
    #[arg(long, default_value = "lemma31")]
    family: String,
    /// Write `<out-dir>/diagram.dot` instead of stdout
    #[arg(long = "out-dir")]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Explain(args) => cmd_explain(args),
        Command::Witness(args) => cmd_witness(args),
        Command::Diagram(args) => cmd_diagram(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn parse_rules(ids: &[String]) -> Result<BTreeSet<RuleId>> {
    ids.iter()
        .map(|s| RuleId::parse(s).map_err(|e| anyhow!("{e}")))
        .collect()
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().context("bad range start")?;
        let hi: usize = hi.trim().parse().context("bad range end")?;
        if lo > hi {
            bail!("empty range {s}");
        }
        Ok((lo, hi))
    } else {
        let m: usize = s.trim().parse().context("bad degree")?;
        Ok((m, m))
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode> {
    let disabled = parse_rules(&args.disable_rule)?;
    let (lo, hi) = parse_range(&args.m)?;
    if hi > max_m() {
        bail!(
            "degree {hi} exceeds the cap {}; raise NICHOLS_MAX_M to override",
            max_m()
        );
    }
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("worker pool")?;
    }
    let opts = ClassifyOptions {
        disabled_rules: disabled.clone(),
        verify_witnesses: args.verify_witnesses,
    };
    let mut all: Vec<Verdict> = Vec::new();
    for m in lo..=hi {
        all.extend(classify(m, &opts)?);
    }
    let discrepancies = all.iter().filter(|v| v.outcome.is_discrepancy()).count();
    match args.format {
        Format::Json => {
            let payload = serde_json::json!({
                "m_range": [lo, hi],
                "disabled_rules": disabled.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "discrepancies": discrepancies,
                "verdicts": all,
            });
            println!("{}", serde_json::to_string_pretty(&payload)?);
        }
        Format::Table => {
            if !disabled.is_empty() {
                let list: Vec<String> = disabled.iter().map(|r| r.to_string()).collect();
                println!("# disabled rules: {}", list.join(", "));
            }
            let mut current_m = 0;
            for v in &all {
                if v.m != current_m {
                    current_m = v.m;
                    println!("\n== S_{current_m} ==");
                    println!(
                        "{:<12} {:<46} {:<12} {:<5} citation/case",
                        "type", "irrep", "outcome", "rule"
                    );
                }
                match &v.outcome {
                    Outcome::Infinite { rule, citation } => println!(
                        "{:<12} {:<46} {:<12} {:<5} {}",
                        v.cycle_type.to_string(),
                        v.irrep.format(),
                        "infinite",
                        rule,
                        citation
                    ),
                    Outcome::Survivor { theorem1_case } => println!(
                        "{:<12} {:<46} {:<12} {:<5} case {}",
                        v.cycle_type.to_string(),
                        v.irrep.format(),
                        "survivor",
                        "-",
                        theorem1_case
                    ),
                    Outcome::Discrepancy => println!(
                        "{:<12} {:<46} {:<12} {:<5} unmatched survivor",
                        v.cycle_type.to_string(),
                        v.irrep.format(),
                        "DISCREPANCY",
                        "-"
                    ),
                }
            }
            let survivors = all.iter().filter(|v| v.outcome.is_survivor()).count();
            println!(
                "\n{} pairs, {survivors} survivors, {discrepancies} discrepancies",
                all.len()
            );
        }
    }
    Ok(if discrepancies == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn parse_pair(type_str: &str, rho_str: &str) -> Result<(CycleType, CentralizerIrrep)> {
    let t = CycleType::parse(type_str, None).map_err(|e| anyhow!("type: {e}"))?;
    let rho = CentralizerIrrep::parse(rho_str, &t).map_err(|e| anyhow!("rho: {e}"))?;
    Ok((t, rho))
}

fn cmd_explain(args: ExplainArgs) -> Result<ExitCode> {
    let (t, rho) = parse_pair(&args.type_str, &args.rho)?;
    let opts = ClassifyOptions {
        disabled_rules: parse_rules(&args.disable_rule)?,
        verify_witnesses: false,
    };
    let trace = explain(&t, &rho, &opts);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&trace)?),
        Format::Table => {
            println!("pair: ({}, {})", t, rho.format());
            println!("q_ss = {}", trace.q_sigma);
            for entry in &trace.rules {
                let mark = if entry.disabled {
                    "off "
                } else if entry.fired {
                    "FIRE"
                } else {
                    "    "
                };
                println!("  [{mark}] ({:<4}) {}", entry.rule, entry.citation);
            }
            match &trace.outcome {
                Outcome::Infinite { rule, citation } => {
                    println!("verdict: infinite-dimensional by rule ({rule}): {citation}")
                }
                Outcome::Survivor { theorem1_case } => {
                    println!("verdict: survivor, pattern ({theorem1_case})")
                }
                Outcome::Discrepancy => println!("verdict: DISCREPANCY (unmatched survivor)"),
            }
            if let Some(w) = &trace.witness {
                println!("\nwitness {}:", w.name);
                print_witness_table(w);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_witness_table(w: &WitnessReport) {
    for (k, v) in &w.params {
        println!("  param {k} = {v}");
    }
    for c in &w.checks {
        println!("  [{}] {}", if c.pass { "ok " } else { "FAIL" }, c.name);
    }
    for (label, value) in &w.evaluations {
        println!("  eval {label} = {value}");
    }
    if let Some(m) = &w.matrix {
        println!("  braiding matrix:");
        for row in &m.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("    [{}]", cells.join(", "));
        }
    }
    if let Some(cycle) = &w.long_cycle {
        let pts: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
        println!("  chordless cycle: {}", pts.join("-"));
    }
    if let Some(ft) = w.finite_type {
        println!("  finite type: {ft}");
    }
    match &w.verdict_support {
        Some(s) => println!("  supports: {s}"),
        None => println!("  supports: none (a check failed or did not apply)"),
    }
    for note in &w.notes {
        println!("  note: {note}");
    }
}

fn cmd_witness(args: WitnessArgs) -> Result<ExitCode> {
    let need_pair = || -> Result<(CycleType, CentralizerIrrep)> {
        let ts = args
            .type_str
            .as_deref()
            .ok_or_else(|| anyhow!("--type required for this witness"))?;
        let rs = args
            .rho
            .as_deref()
            .ok_or_else(|| anyhow!("--rho required for this witness"))?;
        parse_pair(ts, rs)
    };
    let report = match args.prop.as_str() {
        "3.1" => {
            let ts = args
                .type_str
                .as_deref()
                .ok_or_else(|| anyhow!("--type required"))?;
            let t = CycleType::parse(ts, None).map_err(|e| anyhow!("type: {e}"))?;
            let j = args.j.ok_or_else(|| anyhow!("--j required"))?;
            let t_val = args.t.ok_or_else(|| anyhow!("--t required"))? as u32;
            witnesses::lemma31_family(&t, j, args.l, t_val)?
        }
        "3.3" => {
            let k = args.k.ok_or_else(|| anyhow!("--k required"))?;
            let t_val = args.t.ok_or_else(|| anyhow!("--t required"))?;
            witnesses::prop33_family(k, args.n2k, t_val)?
        }
        "3.5" => {
            let (t, rho) = need_pair()?;
            witnesses::prop35_family(&t, &rho)?
        }
        "3.6" => {
            let rs = args
                .rho
                .as_deref()
                .ok_or_else(|| anyhow!("--rho required"))?;
            let t = CycleType::parse("2^2,4^2", None).unwrap();
            let rho = CentralizerIrrep::parse(rs, &t).map_err(|e| anyhow!("rho: {e}"))?;
            witnesses::prop36_family(&rho)?
        }
        "3.7" => {
            let (t, rho) = need_pair()?;
            witnesses::prop37_family(&t, &rho)?
        }
        "3.8" | "3.9" => {
            let (t, rho) = need_pair()?;
            witnesses::prop38_39_witness(&t, &rho)?
        }
        "3.10" => {
            let (t, rho) = need_pair()?;
            witnesses::prop310_family(&t, &rho)?
        }
        other => bail!("unknown witness '{other}'; use 3.1, 3.3, 3.5, 3.6, 3.7, 3.8, 3.9 or 3.10"),
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json())?),
        Format::Table => {
            println!("witness {}:", report.name);
            print_witness_table(&report);
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_diagram(args: DiagramArgs) -> Result<ExitCode> {
    let (t, rho) = parse_pair(&args.type_str, &args.rho)?;
    let diagram = match args.family.as_str() {
        "lemma31" => {
            let (j, l) = rho
                .lemma31_trigger()
                .ok_or_else(|| anyhow!("no rotation trigger in rho; the four-element family needs one"))?;
            let t_val = rho.factor(j).unwrap().t[l - 1];
            let report = witnesses::lemma31_family(&t, j, l, t_val)?;
            report.diagram.expect("family carries a diagram")
        }
        "singleton" => {
            let pres = CentralizerPresentation::new(&t);
            let fam = nichols_core::braiding::SubrackFamily::new(
                pres.sigma().clone(),
                vec![(pres.sigma().clone(), nichols_core::Perm::identity(t.m()))],
                nichols_core::braiding::FamilyKind::Abelian,
            )?;
            let q = braiding_matrix(&fam, &Deg1Eval { rho: &rho, pres: &pres })?;
            dynkin_diagram(&q)
        }
        other => bail!("unknown family '{other}'; use lemma31 or singleton"),
    };
    let dot = diagram.to_dot();
    match &args.out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).context("create out dir")?;
            let path = dir.join("diagram.dot");
            let mut f = std::fs::File::create(&path).context("create diagram.dot")?;
            f.write_all(dot.as_bytes())?;
            println!("wrote {}", path.display());
        }
        None => print!("{dot}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_selftest() -> Result<ExitCode> {
    let results = nichols_core::selftest::run_all();
    let mut ok = true;
    for r in &results {
        println!(
            "selftest: {:<48} {}",
            r.name,
            if r.pass { "ok" } else { "FAIL" }
        );
        if !r.pass {
            ok = false;
            println!("  detail: {}", r.detail);
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
