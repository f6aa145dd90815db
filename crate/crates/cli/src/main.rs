//! Command-line surface: group/graph queries and the verification harness.
//!
//! Exit codes: 0 when everything holds, 1 when any check reports a
//! violation, 2 on usage, parse, or validation errors.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbifix::bounds::{check_lemma3, n_threshold, LocalSpec};
use orbifix::catalog::{
    builtin_catalog, rfx_scatter, run_verification, CatalogEntry, Provenance, VerificationConfig,
};
use orbifix::group::PermGroup;
use orbifix::orbital::{orbital_digraph, suborbits};
use orbifix::random::random_transitive_group;
use orbifix::report::{BoundReport, LemmaId};
use orbifix::{relative_fixity, Rational, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "orbifix",
    version,
    about = "permutation groups, orbital graphs and fixity bounds"
)]
struct Cli {
    /// Group file (see README for the format).
    #[arg(long, global = true, value_name = "FILE")]
    group: Option<PathBuf>,

    /// Graph file (see README for the format).
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,

    /// Report format for verification output.
    #[arg(long, global = true, default_value = "csv", value_parser = ["csv", "jsonl"])]
    format: String,

    /// Fixed-point-ratio bound as an exact fraction P/Q; repeatable.
    #[arg(long, global = true, value_name = "P/Q")]
    alpha: Vec<String>,

    /// Seed for the randomized property sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order of the group via its stabilizer chain.
    Order,
    /// Orbit partition of the group.
    Orbits,
    /// Suborbits at a base point, with lengths and self-paired flags.
    Suborbits(SuborbitArgs),
    /// One orbital digraph, exported as an arc list with a header.
    Orbital(OrbitalArgs),
    /// Relative fixity, fixity and a maximizing witness.
    Fixity,
    /// Run the bound checkers over the catalog (plus an optional file instance).
    Verify(VerifyArgs),
    /// Catalog inspection.
    Catalog(CatalogArgs),
    /// Evaluate the threshold N_{L,alpha} in log10 form.
    Threshold(ThresholdArgs),
}

#[derive(Args)]
struct SuborbitArgs {
    /// Base point ω.
    #[arg(long, default_value_t = 0)]
    omega: usize,
}

#[derive(Args)]
struct OrbitalArgs {
    #[arg(long, default_value_t = 0)]
    omega: usize,
    /// Suborbit representative δ.
    #[arg(long)]
    delta: usize,
    /// Write the arc list here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lemmas to run: `all`, `none`, or a comma list like `L3a,L1,LCOVER`.
    #[arg(long, default_value = "all")]
    lemmas: String,

    /// Write report files into this directory instead of stdout.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Also check this many random transitive groups (seeded by --seed).
    #[arg(long, default_value_t = 0)]
    random: usize,

    /// Write an `id n_vertices rfx` scatter record file.
    #[arg(long, value_name = "FILE")]
    scatter: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    command: CatalogCommand,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in instances.
    List,
}

#[derive(Args)]
struct ThresholdArgs {
    /// Graph-restrictive constant c(L), given directly.
    #[arg(long)]
    c: Option<u64>,

    /// Name of a local group whose constant is registered: sym3, alt4, sym4,
    /// or an entry of the --constants file.
    #[arg(long)]
    local: Option<String>,

    /// Extra constants, one `name degree order constant` line each.
    #[arg(long, value_name = "FILE")]
    constants: Option<PathBuf>,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<u64>()?, d.trim().parse::<u64>()?),
        None => (s.trim().parse::<u64>()?, 1),
    };
    if den == 0 {
        bail!("zero denominator in {s:?}");
    }
    Ok(Rational::new(num, den))
}

fn load_group(cli: &Cli) -> Result<PermGroup> {
    let path = cli
        .group
        .as_ref()
        .ok_or_else(|| anyhow!("this command needs --group FILE"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PermGroup::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SimpleGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_lemmas(spec: &str) -> Result<BTreeSet<LemmaId>> {
    match spec {
        "all" => Ok(LemmaId::ALL.into_iter().collect()),
        "none" => Ok(BTreeSet::new()),
        list => list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| LemmaId::parse(s.trim()).ok_or_else(|| anyhow!("unknown lemma id {s:?}")))
            .collect(),
    }
}

fn alphas_from(cli: &Cli) -> Result<Vec<Rational>> {
    if cli.alpha.is_empty() {
        return Ok(vec![
            Rational::new(1, 2),
            Rational::new(1, 4),
            Rational::new(1, 10),
        ]);
    }
    cli.alpha.iter().map(|s| parse_rational(s)).collect()
}

fn render(reports: &[BoundReport], format: &str) -> String {
    let mut out = String::new();
    if format == "csv" {
        out.push_str(BoundReport::csv_header());
        out.push('\n');
        for report in reports {
            out.push_str(&report.csv_line());
            out.push('\n');
        }
    } else {
        for report in reports {
            out.push_str(&report.jsonl_line());
            out.push('\n');
        }
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Order => {
            let group = load_group(&cli)?;
            println!("{}", group.order());
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits => {
            let group = load_group(&cli)?;
            for orbit in group.orbits() {
                let points: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
                println!("{}", points.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Suborbits(args) => {
            let group = load_group(&cli)?;
            let specs = suborbits(&group, args.omega)?;
            println!("omega {}", args.omega);
            for spec in &specs {
                let points: Vec<String> = spec.suborbit.iter().map(|p| p.to_string()).collect();
                println!(
                    "suborbit size {} self_paired {} connected {} rep {} points {}",
                    spec.suborbit.len(),
                    spec.self_paired,
                    spec.is_connected(),
                    spec.rep,
                    points.join(" ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbital(args) => {
            let group = load_group(&cli)?;
            let spec = orbital_digraph(&group, args.omega, args.delta)?;
            let text = spec.export();
            match &args.out {
                Some(path) => {
                    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixity => {
            let group = load_group(&cli)?;
            let fixity = relative_fixity(&group)?;
            println!("rfx {}", fixity.rfx);
            println!("fixity {}", fixity.fixity);
            println!("witness {}", fixity.witness);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(&cli, args),
        Command::Catalog(args) => match args.command {
            CatalogCommand::List => {
                for entry in builtin_catalog()? {
                    let tags: Vec<String> = entry.tags.iter().cloned().collect();
                    println!(
                        "{} vertices {} edges {} order {} tags {}",
                        entry.id,
                        entry.graph.n_vertices(),
                        entry.graph.n_edges(),
                        entry.group.order(),
                        tags.join(",")
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Threshold(args) => {
            let alphas = alphas_from(&cli)?;
            let c = resolve_constant(args)?;
            for alpha in alphas {
                let t = n_threshold(c, alpha)?;
                let log10 = if t.log10.is_finite() {
                    format!("{:.6}", t.log10)
                } else {
                    "inf".to_string()
                };
                println!(
                    "c {} alpha {} log10_N {} log10_log10_N {:.6}",
                    c, alpha, log10, t.log10_log10
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_constant(args: &ThresholdArgs) -> Result<u64> {
    if let Some(c) = args.c {
        return Ok(c);
    }
    let name = args
        .local
        .as_ref()
        .ok_or_else(|| anyhow!("threshold needs --c or --local"))?;
    if let Some(spec) = LocalSpec::builtin(name) {
        return Ok(spec.constant);
    }
    if let Some(path) = &args.constants {
        for spec in parse_constants_file(path)? {
            if &spec.name == name {
                return Ok(spec.constant);
            }
        }
    }
    bail!("no registered constant for local group {name:?}")
}

/// Constants file: `name degree order constant` per line, `#` comments.
fn parse_constants_file(path: &Path) -> Result<Vec<LocalSpec>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut specs = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            bail!("expected 'name degree order constant', found {line:?}");
        }
        specs.push(LocalSpec {
            name: fields[0].to_string(),
            degree: fields[1].parse()?,
            order: fields[2].parse()?,
            constant: fields[3].parse()?,
        });
    }
    Ok(specs)
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode> {
    let mut catalog = builtin_catalog()?;
    if let (Some(graph_path), Some(group_path)) = (&cli.graph, &cli.group) {
        let graph = load_graph(graph_path)?;
        let text = fs::read_to_string(group_path)
            .with_context(|| format!("reading {}", group_path.display()))?;
        let group = PermGroup::parse(&text)?;
        let id = format!(
            "file:{}",
            graph_path.file_stem().unwrap_or_default().to_string_lossy()
        );
        let entry = CatalogEntry::new(&id, graph, group, Provenance::File, &["file"])
            .context("instance failed load-time validation")?;
        catalog.push(entry);
    }

    let config = VerificationConfig {
        lemmas: parse_lemmas(&args.lemmas)?,
        alphas: alphas_from(cli)?,
    };
    let mut outcome = run_verification(&catalog, &config)?;

    if args.random > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        for i in 0..args.random {
            let degree = rng.random_range(3..=8);
            let group = random_transitive_group(&mut rng, degree, 2);
            let (primitive, connected) = orbifix::orbital::higman_check(&group)?;
            if primitive != connected {
                bail!("primitivity/connectivity disagreement on random instance {i}");
            }
            let reps = orbifix::structure::conjugacy_class_reps(&group)?;
            if let Some(rep) = reps.iter().find(|r| !r.is_identity()) {
                let id = format!("random-{i:03}");
                let [a, b] = check_lemma3(&id, &group, rep, 0)?;
                outcome.reports.push(a);
                outcome.reports.push(b);
            }
        }
    }

    if let Some(path) = &args.scatter {
        fs::write(path, rfx_scatter(&catalog))
            .with_context(|| format!("writing {}", path.display()))?;
    }

    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join("verify.csv"), outcome.to_csv())?;
            fs::write(dir.join("verify.jsonl"), outcome.to_jsonl())?;
            let mut skipped = String::new();
            for skip in &outcome.skipped {
                skipped.push_str(&format!(
                    "{} {} {}\n",
                    skip.instance_id, skip.lemma_id, skip.reason
                ));
            }
            fs::write(dir.join("skipped.txt"), skipped)?;
        }
        None => print!("{}", render(&outcome.reports, &cli.format)),
    }

    let failures = outcome.reports.iter().filter(|r| !r.holds).count();
    eprintln!(
        "verify: {} reports, {} skipped, {} violations",
        outcome.reports.len(),
        outcome.skipped.len(),
        failures
    );
    for skip in &outcome.skipped {
        eprintln!(
            "  skipped {} {}: {}",
            skip.instance_id, skip.lemma_id, skip.reason
        );
    }
    if failures > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
