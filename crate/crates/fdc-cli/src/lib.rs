//! Command-line front end for `fdc-core`.
//!
//! Five subcommands: `lattice`, `rules`, `reduce`, `check`, `bench`. Exit
//! codes: 0 on success, 1 on usage errors, 2 on data errors (unreadable
//! files, parse failures, invalid labels). Input format (CSV or
//! Burmeister) is detected from the file content.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use fdc_core::{
    build_lattice, concept_text, discernibility_matrix, i_reductions, ii_reductions,
    necessary_rules, parse_context, reduction_to_json, rule_text, rules_to_json, sniff_format,
    AttributeSet, Concept, ConceptKind, ConceptLattice, FormalContext, FormalDecisionContext,
    ReductionResult, RuleSetOptions, RuleType,
};

const USAGE_EXIT: i32 = 1;
const DATA_EXIT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "fdc",
    version,
    about = "Concept lattices, decision rules and attribute reductions for formal decision tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a concept lattice from a table or one part of a decision table
    Lattice(LatticeArgs),
    /// Mine type-I or type-II decision rules
    Rules(RulesArgs),
    /// Compute rule-preserving attribute reductions
    Reduce(ReduceArgs),
    /// Parse a context and report canonicity violations
    Check(CheckArgs),
    /// Benchmark acquisition algorithms on random decision tables
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartArg {
    Conditional,
    Decision,
    ComplementDecision,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Formal,
    Object,
    Property,
}

impl KindArg {
    fn to_kind(self) -> ConceptKind {
        match self {
            KindArg::Formal => ConceptKind::Formal,
            KindArg::Object => ConceptKind::ObjectOriented,
            KindArg::Property => ConceptKind::PropertyOriented,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "II", alias = "ii")]
    II,
}

impl TypeArg {
    fn to_rule_type(self) -> RuleType {
        match self {
            TypeArg::I => RuleType::I,
            TypeArg::II => RuleType::II,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Alg1,
    Alg2,
    S1,
    S2,
    Complement,
    Bruteforce,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct LatticeArgs {
    /// Input table (CSV or Burmeister)
    input: PathBuf,
    /// Comma-separated decision attribute labels; omit to treat the whole
    /// table as one context
    #[arg(long, value_delimiter = ',')]
    decision: Vec<String>,
    /// Part of the decision table to use
    #[arg(long, value_enum, default_value_t = PartArg::Conditional)]
    part: PartArg,
    /// Concept lattice to build
    #[arg(long, value_enum, default_value_t = KindArg::Formal)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct RulesArgs {
    /// Input table (CSV or Burmeister)
    input: PathBuf,
    /// Comma-separated decision attribute labels
    #[arg(long, required = true, value_delimiter = ',')]
    decision: Vec<String>,
    /// Rule family
    #[arg(long = "type", value_enum, default_value_t = TypeArg::I)]
    rule_type: TypeArg,
    /// Emit only the necessary (non-redundant) rules
    #[arg(long)]
    necessary: bool,
    /// Admit rules with empty premises or full conclusions
    #[arg(long = "include-trivial")]
    include_trivial: bool,
    /// Acquisition algorithm; `auto` picks by attribute counts
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct ReduceArgs {
    /// Input table (CSV or Burmeister)
    input: PathBuf,
    /// Comma-separated decision attribute labels
    #[arg(long, required = true, value_delimiter = ',')]
    decision: Vec<String>,
    /// Which rule family the reduction must preserve
    #[arg(long = "type", value_enum, default_value_t = TypeArg::I)]
    rule_type: TypeArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Input table (CSV or Burmeister)
    input: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Size grid as UxMxN triples, e.g. `20x10x4,30x10x4`
    #[arg(long, required = true, value_delimiter = ',')]
    sizes: Vec<String>,
    /// Incidence densities in (0,1)
    #[arg(long, value_delimiter = ',', default_value = "0.3")]
    densities: Vec<String>,
    /// Seeds: a comma list (`1,2,3`) or a range (`1-5`)
    #[arg(long, default_value = "1-5")]
    seeds: String,
    /// Algorithms to race (alg1, alg2, bruteforce)
    #[arg(long, value_delimiter = ',', default_value = "alg1,alg2")]
    algorithms: Vec<String>,
}

enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<fdc_core::Error> for CliError {
    fn from(err: fdc_core::Error) -> Self {
        CliError::Data(err.to_string())
    }
}

type CliResult = Result<String, CliError>;

/// Parses `argv` (including the program name) and executes one command,
/// writing results to `out` and diagnostics to `err`. Returns the exit
/// code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => {
                    let _ = write!(err, "{e}");
                    return USAGE_EXIT;
                }
            }
        }
    };
    let result = match cli.command {
        Command::Lattice(args) => cmd_lattice(args, err),
        Command::Rules(args) => cmd_rules(args),
        Command::Reduce(args) => cmd_reduce(args, err),
        Command::Check(args) => cmd_check(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            USAGE_EXIT
        }
        Err(CliError::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            DATA_EXIT
        }
    }
}

fn read_context(path: &PathBuf) -> Result<FormalContext, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_context(&text, sniff_format(&text))?)
}

fn read_decision_context(
    path: &PathBuf,
    decision: &[String],
) -> Result<FormalDecisionContext, CliError> {
    let context = read_context(path)?;
    Ok(FormalDecisionContext::split(&context, decision)?)
}

fn lattice_text(lattice: &ConceptLattice, ctx: &FormalContext) -> String {
    let name = |c: &Concept| concept_text(c, ctx.objects(), ctx.attributes());
    let mut out = format!("kind: {}\nconcepts: {}\n", lattice.kind().as_str(), lattice.len());
    for concept in lattice.concepts() {
        out.push_str(&name(concept));
        out.push('\n');
    }
    out.push_str("covers:\n");
    for &(child, parent) in lattice.covers() {
        let _ = writeln!(
            out,
            "{} < {}",
            name(lattice.concept(child)),
            name(lattice.concept(parent))
        );
    }
    out
}

fn cmd_lattice(args: LatticeArgs, err: &mut dyn Write) -> CliResult {
    let ctx = if args.decision.is_empty() {
        if args.part != PartArg::Conditional {
            return Err(CliError::usage(
                "--part decision/complement-decision requires --decision",
            ));
        }
        read_context(&args.input)?
    } else {
        let fdc = read_decision_context(&args.input, &args.decision)?;
        match args.part {
            PartArg::Conditional => fdc.conditional().clone(),
            PartArg::Decision => fdc.decision().clone(),
            PartArg::ComplementDecision => fdc.complement_decision().decision().clone(),
        }
    };
    warn_if_not_canonical(&ctx, err);
    let lattice = build_lattice(&ctx, args.kind.to_kind());
    Ok(match args.format {
        OutputFormat::Text => lattice_text(&lattice, &ctx),
        OutputFormat::Json => pretty(lattice.to_json(&ctx)),
        OutputFormat::Dot => lattice.to_dot(&ctx),
    })
}

fn warn_if_not_canonical(ctx: &FormalContext, err: &mut dyn Write) {
    let report = ctx.check_canonical();
    for violation in &report.violations {
        let _ = writeln!(err, "warning: {violation}");
    }
}

fn pick_algorithm(
    arg: AlgorithmArg,
    rule_type: RuleType,
    fdc: &FormalDecisionContext,
) -> Result<fdc_core::Algorithm, CliError> {
    use fdc_core::Algorithm::*;
    let algorithm = match arg {
        AlgorithmArg::Auto => match rule_type {
            // Classifying the smaller side avoids the larger lattice.
            RuleType::I => {
                if fdc.decision().attribute_count() <= fdc.conditional().attribute_count() {
                    Alg2
                } else {
                    Alg1
                }
            }
            RuleType::II => S1,
        },
        AlgorithmArg::Alg1 => Alg1,
        AlgorithmArg::Alg2 => Alg2,
        AlgorithmArg::S1 => S1,
        AlgorithmArg::S2 => S2,
        AlgorithmArg::Complement => Complement,
        AlgorithmArg::Bruteforce => BruteForce,
    };
    let compatible = match rule_type {
        RuleType::I => matches!(algorithm, Alg1 | Alg2 | BruteForce),
        RuleType::II => matches!(algorithm, S1 | S2 | Complement | BruteForce),
    };
    if !compatible {
        return Err(CliError::usage(format!(
            "algorithm {} does not produce type-{} rules",
            algorithm.as_str(),
            rule_type.as_str()
        )));
    }
    Ok(algorithm)
}

fn cmd_rules(args: RulesArgs) -> CliResult {
    if args.format == OutputFormat::Dot {
        return Err(CliError::usage("rules support --format text|json"));
    }
    let fdc = read_decision_context(&args.input, &args.decision)?;
    let rule_type = args.rule_type.to_rule_type();
    let opts = RuleSetOptions {
        include_trivial: args.include_trivial,
    };
    let algorithm = pick_algorithm(args.algorithm, rule_type, &fdc)?;
    if algorithm == fdc_core::Algorithm::BruteForce && fdc.object_count() > 16 {
        return Err(CliError::Data(format!(
            "bruteforce is guarded to at most 16 objects, table has {}",
            fdc.object_count()
        )));
    }

    let necessary = necessary_rules(&fdc, rule_type, algorithm, opts)?.rules;
    let rules = if args.necessary {
        necessary.clone()
    } else {
        match rule_type {
            RuleType::I => fdc_core::all_i_rules(&fdc, opts),
            RuleType::II => fdc_core::all_ii_rules(&fdc, opts),
        }
    };

    Ok(match args.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for rule in &rules {
                out.push_str(&rule_text(rule, &fdc));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let flags: Vec<bool> = rules.iter().map(|r| necessary.contains(r)).collect();
            pretty(rules_to_json(&rules, &flags, &fdc))
        }
        OutputFormat::Dot => unreachable!(),
    })
}

fn braced(set: &AttributeSet, labels: &[String]) -> String {
    let members: Vec<&str> = set.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", members.join(","))
}

fn clause_formula(clauses: &[AttributeSet], labels: &[String]) -> String {
    if clauses.is_empty() {
        return "(empty)".into();
    }
    clauses
        .iter()
        .map(|clause| {
            let parts: Vec<&str> = clause.iter().map(|i| labels[i].as_str()).collect();
            if parts.len() == 1 {
                parts[0].to_string()
            } else {
                format!("({})", parts.join(" ∨ "))
            }
        })
        .collect::<Vec<_>>()
        .join(" ∧ ")
}

fn reduction_text(result: &ReductionResult, fdc: &FormalDecisionContext) -> String {
    let labels = fdc.conditional().attributes();
    let mut out = String::from("discernibility matrix:\n");
    let matrix = discernibility_matrix(fdc);
    out.push_str(&matrix.to_text(fdc));
    let _ = writeln!(out, "\nfunction: {}", clause_formula(&result.clauses, labels));
    out.push_str("reductions:\n");
    for reduction in &result.reductions {
        out.push_str(&braced(reduction, labels));
        out.push('\n');
    }
    let _ = writeln!(out, "core: {}", braced(&result.core, labels));
    out
}

fn cmd_reduce(args: ReduceArgs, err: &mut dyn Write) -> CliResult {
    if args.format == OutputFormat::Dot {
        return Err(CliError::usage("reduce supports --format text|json"));
    }
    let fdc = read_decision_context(&args.input, &args.decision)?;
    let result = match args.rule_type.to_rule_type() {
        RuleType::I => i_reductions(&fdc)?,
        RuleType::II => ii_reductions(&fdc)?,
    };
    if result.is_unconstrained() {
        let _ = writeln!(
            err,
            "warning: the discernibility function is empty — no conditional attribute is needed \
             to preserve the rules"
        );
    }
    // The matrix shown in text mode is the one the reduction was computed
    // from: the complement context's matrix for type II.
    let shown = match args.rule_type.to_rule_type() {
        RuleType::I => fdc.clone(),
        RuleType::II => fdc.complement_decision(),
    };
    Ok(match args.format {
        OutputFormat::Text => reduction_text(&result, &shown),
        OutputFormat::Json => pretty(reduction_to_json(&result, &fdc)),
        OutputFormat::Dot => unreachable!(),
    })
}

fn cmd_check(args: CheckArgs) -> CliResult {
    let ctx = read_context(&args.input)?;
    let report = ctx.check_canonical();
    let mut out = format!(
        "objects: {}\nattributes: {}\n",
        ctx.object_count(),
        ctx.attribute_count()
    );
    if report.is_canonical() {
        out.push_str("canonical: yes\n");
    } else {
        out.push_str("canonical: no\n");
        for violation in &report.violations {
            let _ = writeln!(out, "- {violation}");
        }
    }
    Ok(out)
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>, CliError> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once('-') {
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad seed range {spec:?}")))?;
        let hi: u64 = hi
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad seed range {spec:?}")))?;
        if lo > hi {
            return Err(CliError::usage(format!("empty seed range {spec:?}")));
        }
        return Ok((lo..=hi).collect());
    }
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("bad seed {s:?}")))
        })
        .collect()
}

fn parse_size(spec: &str) -> Result<(usize, usize, usize), CliError> {
    let parts: Vec<&str> = spec.trim().split('x').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "size {spec:?} is not of the form UxMxN"
        )));
    }
    let mut nums = [0usize; 3];
    for (slot, part) in nums.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad size component {part:?}")))?;
        if *slot == 0 {
            return Err(CliError::usage("size components must be at least 1"));
        }
    }
    Ok((nums[0], nums[1], nums[2]))
}

fn cmd_bench(args: BenchArgs) -> CliResult {
    use fdc_core::Algorithm;

    let algorithms: Vec<Algorithm> = args
        .algorithms
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| match s.trim() {
            "alg1" => Ok(Algorithm::Alg1),
            "alg2" => Ok(Algorithm::Alg2),
            "bruteforce" => Ok(Algorithm::BruteForce),
            other => Err(CliError::usage(format!(
                "unknown bench algorithm {other:?} (expected alg1, alg2, bruteforce)"
            ))),
        })
        .collect::<Result<_, _>>()?;
    if algorithms.is_empty() {
        return Err(CliError::usage("no algorithms selected"));
    }

    let sizes: Vec<(usize, usize, usize)> = args
        .sizes
        .iter()
        .map(|s| parse_size(s))
        .collect::<Result<_, _>>()?;
    let densities: Vec<f64> = args
        .densities
        .iter()
        .map(|s| {
            let d: f64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad density {s:?}")))?;
            if d <= 0.0 || d >= 1.0 {
                return Err(CliError::usage("densities must lie strictly between 0 and 1"));
            }
            Ok(d)
        })
        .collect::<Result<_, _>>()?;
    let seeds = parse_seeds(&args.seeds)?;

    if algorithms.contains(&Algorithm::BruteForce) {
        if let Some((u, _, _)) = sizes.iter().find(|&&(u, _, _)| u > 12) {
            return Err(CliError::usage(format!(
                "bruteforce is guarded to at most 12 objects, grid asks for {u}"
            )));
        }
    }

    let mut out = String::from("size_u,size_m,size_n,density,seed,algorithm,wall_ms,n_Lo,n_Ln,n_rules\n");
    for &(u, m, n) in &sizes {
        for &density in &densities {
            for &seed in &seeds {
                let fdc = FormalDecisionContext::random(u, m, n, density, seed);
                let n_lo = build_lattice(fdc.conditional(), ConceptKind::ObjectOriented).len();
                let n_ln = build_lattice(fdc.decision(), ConceptKind::Formal).len();

                let mut timed = Vec::new();
                for &algorithm in &algorithms {
                    let start = Instant::now();
                    let acquired =
                        necessary_rules(&fdc, RuleType::I, algorithm, RuleSetOptions::default())?;
                    let wall = start.elapsed();
                    timed.push((algorithm, wall, acquired.rules));
                }
                // Correctness precedes timing: all algorithms must agree.
                for window in timed.windows(2) {
                    if window[0].2 != window[1].2 {
                        return Err(CliError::Data(format!(
                            "algorithms {} and {} disagree at size {u}x{m}x{n}, density {density}, seed {seed}",
                            window[0].0.as_str(),
                            window[1].0.as_str()
                        )));
                    }
                }
                for (algorithm, wall, rules) in &timed {
                    let _ = writeln!(
                        out,
                        "{u},{m},{n},{density},{seed},{},{:.3},{n_lo},{n_ln},{}",
                        algorithm.as_str(),
                        wall.as_secs_f64() * 1e3,
                        rules.len()
                    );
                }
            }
        }
    }
    Ok(out)
}

fn pretty(value: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("JSON rendering cannot fail");
    text.push('\n');
    text
}
