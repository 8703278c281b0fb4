use std::io::{self, BufWriter, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use starter_forge::cover::{build_ordered_cover, orient, Orientation, OrientedList};
use starter_forge::document::{Metadata, PartitionDocument, ReportDocument};
use starter_forge::generate::{gen_canonical, require_cardioidal};
use starter_forge::nucleus::Nucleus;
use starter_forge::product::{product, product_starred, product_with_nucleus};
use starter_forge::search::{
    max_exhaustive_from_env, search, SearchMode, SearchSpec, Shard, Strategy,
};
use starter_forge::skolem::{parse_sequences, SkolemSequence};
use starter_forge::{
    build_composite, fixtures, Error, Factor, NucleusChoice, PredicateSet, TwoPartition,
};

/// Construct, verify, multiply and search for starters in Z_n.
///
/// Exit codes: 0 success, 1 predicate failure or no result, 2 parse or
/// usage error, 3 infeasible search.
#[derive(Parser)]
#[command(name = "starter-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every predicate of a 2-partition.
    Check(CheckArgs),
    /// Multiply two 2-partitions.
    Product(ProductArgs),
    /// Search for 2-partitions with the required predicates.
    Search(SearchArgs),
    /// Convert between Skolem sequences and Skolem starters.
    Convert(ConvertArgs),
    /// Generate canonical, cardioidal or composite 2-partitions.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
struct CheckArgs {
    /// Document path, `fixture:NAME`, or `-` for stdin.
    input: Option<String>,
    /// Order for inline pairs.
    #[arg(long, requires = "pairs")]
    order: Option<u64>,
    /// Inline pairs, e.g. "1,4 2,3".
    #[arg(long, requires = "order", conflicts_with = "input")]
    pairs: Option<String>,
    /// Comma-separated predicates that must hold for exit code 0.
    #[arg(long, default_value = "")]
    require: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Standard,
    Starred,
    Nucleus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationFlag {
    LoFirst,
    HiFirst,
    AsGiven,
}

#[derive(Args)]
struct ProductArgs {
    left: String,
    right: String,
    /// Defaults to `nucleus` when --nucleus is given, `standard` otherwise.
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    /// from-cover, cardioidal, or file:PATH (the nucleus of that file's cover).
    #[arg(long)]
    nucleus: Option<String>,
    /// Orientation of the factor not covered (left, or right for starred).
    /// Required when the left order is 3 and the right order exceeds 3.
    #[arg(long, value_enum)]
    orientation: Option<OrientationFlag>,
    /// Orientation of the right factor in nucleus products.
    #[arg(long, value_enum, default_value = "lo-first")]
    right_orientation: OrientationFlag,
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    order: u32,
    #[arg(long, default_value = "")]
    require: String,
    #[arg(long, default_value = "all")]
    mode: SearchMode,
    #[arg(long)]
    limit: Option<usize>,
    /// INDEX/TOTAL
    #[arg(long)]
    shard: Option<String>,
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    /// Maximum number of search nodes.
    #[arg(long)]
    budget: Option<u64>,
    /// Keep one partition per conjugate pair.
    #[arg(long)]
    reduce_conjugates: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    SeqToStarter,
    StarterToSeq,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(value_enum)]
    direction: Direction,
    /// A path, `fixture:NAME`, `-`, or the inline sequence / document.
    input: String,
}

#[derive(Subcommand)]
enum GenCommand {
    Canonical {
        #[arg(long)]
        order: u32,
    },
    Cardioidal {
        #[arg(long)]
        order: u32,
        /// Matching offset applied to every doubling cycle.
        #[arg(long, default_value_t = 0, conflicts_with = "offsets")]
        offset: u8,
        /// Per-cycle offsets, comma-separated, in cycle order.
        #[arg(long, value_delimiter = ',')]
        offsets: Option<Vec<u8>>,
    },
    Composite {
        /// SOURCE[@NUCLEUS], folded left to right. NUCLEUS is from-cover
        /// (default), cardioidal, or starter=SOURCE.
        #[arg(long = "factor", required = true, num_args = 1)]
        factors: Vec<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                Error::SearchInfeasible { .. } => 3,
                Error::Parse { .. }
                | Error::InvalidOrder(_)
                | Error::RepeatedElement { .. }
                | Error::ZeroElement { .. }
                | Error::WrongCount { .. }
                | Error::DegeneratePair { .. }
                | Error::NotAnOrientation(_)
                | Error::UnknownPredicate(_)
                | Error::InvalidSearch(_) => 2,
                _ => 1,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_source(source: &str) -> CliResult<String> {
    if let Some(name) = source.strip_prefix("fixture:") {
        return Ok(fixtures::document(name)?.render());
    }
    if source == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(source)
        .map_err(|e| CliError::Usage(format!("cannot read {source}: {e}")))
}

fn load_document(source: &str) -> CliResult<PartitionDocument> {
    if let Some(name) = source.strip_prefix("fixture:") {
        return Ok(fixtures::document(name)?);
    }
    Ok(PartitionDocument::parse(&read_source(source)?)?)
}

fn label(doc: &PartitionDocument, source: &str) -> String {
    doc.metadata.name.clone().unwrap_or_else(|| {
        let s = source.strip_prefix("fixture:").unwrap_or(source);
        Path::new(s)
            .file_stem()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_else(|| s.to_string())
    })
}

fn parse_set(text: &str) -> CliResult<PredicateSet> {
    Ok(text.parse()?)
}

fn oriented(
    doc: &PartitionDocument,
    p: &TwoPartition,
    flag: OrientationFlag,
) -> CliResult<OrientedList> {
    Ok(match flag {
        OrientationFlag::LoFirst => orient(p, Orientation::LoFirst),
        OrientationFlag::HiFirst => orient(p, Orientation::HiFirst),
        OrientationFlag::AsGiven => doc.as_given()?,
    })
}

fn flag_name(flag: OrientationFlag) -> &'static str {
    match flag {
        OrientationFlag::LoFirst => "lo-first",
        OrientationFlag::HiFirst => "hi-first",
        OrientationFlag::AsGiven => "as-given",
    }
}

fn emit(out: &mut impl Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("write failed: {e}")))
}

fn cmd_check(args: CheckArgs, out: &mut impl Write) -> CliResult<u8> {
    let required = parse_set(&args.require)?;
    let doc = match (&args.input, args.order, &args.pairs) {
        (None, Some(order), Some(pairs)) => PartitionDocument::from_inline(order, pairs)?,
        (Some(src), None, None) => load_document(src)?,
        _ => {
            return Err(CliError::Usage(
                "give an input document or --order with --pairs".into(),
            ))
        }
    };
    let p = doc.partition()?;
    let report = ReportDocument::new(p.report(), required);
    emit(out, &report.render())?;
    Ok(if report.passes() { 0 } else { 1 })
}

fn parse_nucleus_choice(spec: &str) -> CliResult<NucleusChoice> {
    match spec {
        "from-cover" => Ok(NucleusChoice::FromCover),
        "cardioidal" => Ok(NucleusChoice::Cardioidal),
        other => match other
            .strip_prefix("file:")
            .or_else(|| other.strip_prefix("starter="))
        {
            Some(src) => Ok(NucleusChoice::FromStarter(load_document(src)?.partition()?)),
            None => Err(CliError::Usage(format!(
                "unknown nucleus `{other}` (expected from-cover, cardioidal or file:PATH)"
            ))),
        },
    }
}

fn cmd_product(args: ProductArgs, out: &mut impl Write) -> CliResult<u8> {
    let left_doc = load_document(&args.left)?;
    let right_doc = load_document(&args.right)?;
    let s = left_doc.partition()?;
    let t = right_doc.partition()?;
    let variant = match (args.variant, &args.nucleus) {
        (Some(Variant::Nucleus) | None, Some(_)) => Variant::Nucleus,
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--nucleus only applies to the nucleus variant".into(),
            ))
        }
        (Some(v), None) => v,
        (None, None) => Variant::Standard,
    };
    let orientation = match args.orientation {
        Some(o) => o,
        None if s.order() == 3 && t.order() > 3 && !matches!(variant, Variant::Starred) => {
            return Err(CliError::Usage(
                "the product depends on the orientation of the order-3 factor; pass --orientation"
                    .into(),
            ))
        }
        None => OrientationFlag::LoFirst,
    };
    let (w, how) = match variant {
        Variant::Standard => {
            let tilde_s = oriented(&left_doc, &s, orientation)?;
            let bar_t = build_ordered_cover(&t);
            (
                product(&s, &t, &tilde_s, bar_t.as_list())?,
                "standard".to_string(),
            )
        }
        Variant::Starred => {
            let bar_s = build_ordered_cover(&s);
            let tilde_t = oriented(&right_doc, &t, orientation)?;
            (
                product_starred(&s, &t, bar_s.as_list(), &tilde_t)?,
                "starred".to_string(),
            )
        }
        Variant::Nucleus => {
            let spec = args.nucleus.as_deref().unwrap_or("from-cover");
            let x: Nucleus = parse_nucleus_choice(spec)?.nucleus_for(&t)?;
            let tilde_s = oriented(&left_doc, &s, orientation)?;
            let tilde_t = oriented(&right_doc, &t, args.right_orientation)?;
            (
                product_with_nucleus(&s, &t, &tilde_s, &tilde_t, &x)?,
                format!(
                    "nucleus {spec}, right {}",
                    flag_name(args.right_orientation)
                ),
            )
        }
    };
    let (a, b) = (label(&left_doc, &args.left), label(&right_doc, &args.right));
    let metadata = Metadata {
        name: Some(args.name.unwrap_or_else(|| format!("W({a},{b})"))),
        tags: vec!["product".into()],
        source: Some(format!(
            "product of {a} and {b}: {how}, left {}",
            flag_name(orientation)
        )),
    };
    emit(out, &PartitionDocument::from_product(&w, metadata).render())?;
    Ok(0)
}

fn cmd_search(args: SearchArgs, out: &mut impl Write) -> CliResult<u8> {
    let mut spec = SearchSpec::new(args.order, parse_set(&args.require)?, args.mode);
    spec.limit = args.limit;
    spec.shard = args.shard.as_deref().map(str::parse::<Shard>).transpose()?;
    spec.strategy = args.strategy;
    spec.max_exhaustive = max_exhaustive_from_env()?;
    spec.node_budget = args.budget;
    spec.reduce_conjugates = args.reduce_conjugates;
    let outcome = search(&spec)?;
    if spec.mode == SearchMode::Count {
        emit(out, &format!("{}\n", outcome.count))?;
    } else {
        for p in &outcome.partitions {
            let doc = PartitionDocument::from_partition(p, Metadata::default());
            emit(out, &format!("{}\n", doc.render_compact()))?;
        }
    }
    if let Some(b) = spec.node_budget.filter(|&b| outcome.nodes > b) {
        eprintln!("node budget of {b} exhausted; results are partial");
    }
    Ok(if outcome.count > 0 { 0 } else { 1 })
}

fn read_inline_or_source(input: &str) -> CliResult<String> {
    if input.starts_with("fixture:") || input == "-" || Path::new(input).is_file() {
        read_source(input)
    } else {
        Ok(input.to_string())
    }
}

fn cmd_convert(args: ConvertArgs, out: &mut impl Write) -> CliResult<u8> {
    let text = read_inline_or_source(&args.input)?;
    match args.direction {
        Direction::SeqToStarter => {
            let seqs = parse_sequences(&text)?;
            if seqs.is_empty() {
                return Err(CliError::Usage("no sequence given".into()));
            }
            for seq in &seqs {
                let metadata = Metadata {
                    source: Some(format!("Skolem sequence {seq}")),
                    ..Metadata::default()
                };
                let doc = PartitionDocument::from_partition(&seq.to_starter(), metadata);
                let rendered = if seqs.len() == 1 {
                    doc.render()
                } else {
                    format!("{}\n", doc.render_compact())
                };
                emit(out, &rendered)?;
            }
        }
        Direction::StarterToSeq => {
            for doc in PartitionDocument::parse_stream(&text)? {
                let seq = SkolemSequence::from_starter(&doc.partition()?)?;
                emit(out, &format!("{seq}\n"))?;
            }
        }
    }
    Ok(0)
}

fn parse_factor(spec: &str) -> CliResult<Factor> {
    let (source, choice) = match spec.split_once('@') {
        Some((s, c)) => (s, parse_nucleus_choice(c)?),
        None => (spec, NucleusChoice::FromCover),
    };
    Ok(Factor::new(load_document(source)?.partition()?, choice))
}

fn cmd_gen(cmd: GenCommand, out: &mut impl Write) -> CliResult<u8> {
    let (p, metadata, provenance) = match cmd {
        GenCommand::Canonical { order } => (
            gen_canonical(order)?,
            Metadata::named(format!("canonical-{order}")),
            None,
        ),
        GenCommand::Cardioidal {
            order,
            offset,
            offsets,
        } => {
            let offsets = offsets.unwrap_or_else(|| vec![offset; order as usize]);
            let p = require_cardioidal(order, &offsets)?;
            (p, Metadata::named(format!("cardioidal-{order}")), None)
        }
        GenCommand::Composite { factors } => {
            let factors = factors
                .iter()
                .map(|f| parse_factor(f))
                .collect::<CliResult<Vec<_>>>()?;
            let c = build_composite(&factors)?;
            for (i, step) in c.steps.iter().enumerate() {
                eprintln!(
                    "step {}: order {} starter={} strong={} skew={} skolem={} cardioidal={}",
                    i + 1,
                    step.order,
                    step.starter,
                    step.strong,
                    step.skew,
                    step.skolem,
                    step.cardioidal
                );
            }
            let metadata = Metadata {
                name: Some(format!("composite-{}", c.partition().order())),
                tags: vec!["composite".into()],
                source: None,
            };
            (c.partition().clone(), metadata, Some(c.result))
        }
    };
    let doc = match provenance {
        Some(w) => PartitionDocument::from_product(&w, metadata),
        None => PartitionDocument::from_partition(&p, metadata),
    };
    emit(out, &doc.render())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Check(a) => cmd_check(a, &mut out),
        Command::Product(a) => cmd_product(a, &mut out),
        Command::Search(a) => cmd_search(a, &mut out),
        Command::Convert(a) => cmd_convert(a, &mut out),
        Command::Gen(g) => cmd_gen(g, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
