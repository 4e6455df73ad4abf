//! Command-line orchestration of the ranking pipeline.
//!
//! Exit codes: 0 on success, 1 on command-line validation failures, 2 on
//! input parse failures. Errors print one machine-readable line on stderr:
//! `error: kind=<usage|input> message="..."`. Set `AAIDX_LOG` to any
//! non-empty value (other than `0` or `off`) for progress output on stderr.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use aaidx_core::elite::{
    assemble, build_elite_set, build_tier1, parse_ranking_lists, AliasTable, EliteSet,
};
use aaidx_core::indices::{score_journal, IndicatorTable, JournalScore, ScoreConfig, ScoreError};
use aaidx_core::records::{
    filter_doc_types, parse_canonical_jsonlines, parse_tagged_records, to_canonical_jsonlines,
    Corpus, DocType,
};
use aaidx_core::report::{
    emit_citing_table, emit_convergence_csv, emit_edges_csv, emit_institution_table,
    emit_nodes_csv, emit_panel, emit_scores_csv, RankingTable, SortKey, TableFormat,
};
use aaidx_core::sampling::{convergence_series, sample_articles};
use aaidx_core::stats::build_panel;
use aaidx_core::testkit::{gen_corpus, synthetic_ranking_lists, GenSpec};

#[derive(Parser)]
#[command(
    name = "aaidx",
    about = "Diversity-based author-affiliation indices for journal ranking",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse corpus files and write the canonical one-record-per-line form
    Ingest(IngestArgs),
    /// Build the tiered elite-institution set and report its composition
    Elite(EliteArgs),
    /// Score every journal in the corpus (AAI, D, AAID, AAIW, AAIWD)
    Score(ScoreArgs),
    /// Emit a ranking table sorted by one indicator
    Rank(RankArgs),
    /// Emit the three correlation panels comparing the five indicators
    Compare(CompareArgs),
    /// Emit the AAI convergence series for one journal
    Converge(ConvergeArgs),
    /// Emit keyword co-occurrence, institution output and collaboration data
    Network(NetworkArgs),
    /// Generate a seeded synthetic corpus with ground-truth labels
    Gen(GenArgs),
}

#[derive(Args)]
struct CorpusOpts {
    /// Corpus files (field-tagged or canonical JSON lines, auto-detected)
    #[arg(long = "corpus", value_name = "FILE", required = true, num_args = 1..)]
    corpus: Vec<PathBuf>,

    /// Abort on malformed records instead of skipping them
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct EliteOpts {
    /// Annual ranking lists CSV with header year,rank,name,location
    #[arg(long = "elite-lists", value_name = "FILE")]
    elite_lists: PathBuf,

    /// Alias table: lines of `canonical|alias|alias`
    #[arg(long, value_name = "FILE")]
    aliases: Option<PathBuf>,

    /// Rank cutoff for the elite set
    #[arg(long = "top-n", default_value_t = 50)]
    top_n: u32,

    /// Rank cutoff for the first tier
    #[arg(long = "tier1-top-n", default_value_t = 10)]
    tier1_top_n: u32,

    /// Weight of first-tier institutions (second tier is 1.0)
    #[arg(long = "tier1-weight", default_value_t = 1.2)]
    tier1_weight: f64,
}

#[derive(Args)]
struct SampleOpts {
    /// Sample size per journal
    #[arg(long, default_value_t = 60)]
    m: usize,

    /// Most recent publication year admitted to samples; also the anchor
    /// year of the ranking lists
    #[arg(long = "anchor-year", default_value_t = 2020)]
    anchor_year: i32,
}

#[derive(Args)]
struct IngestArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    /// Output file for the canonical corpus
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct EliteArgs {
    #[command(flatten)]
    elite: EliteOpts,

    /// Anchor year of the ranking lists
    #[arg(long = "anchor-year", default_value_t = 2020)]
    anchor_year: i32,

    /// Optional CSV report of the assembled set
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScoreArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    #[command(flatten)]
    elite: EliteOpts,

    #[command(flatten)]
    sample: SampleOpts,

    /// JCR-style summary CSV with header journal,jif,es
    #[arg(long, value_name = "FILE")]
    indicators: Option<PathBuf>,

    /// Output CSV of per-journal scores
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    #[command(flatten)]
    elite: EliteOpts,

    #[command(flatten)]
    sample: SampleOpts,

    #[arg(long, value_name = "FILE")]
    indicators: Option<PathBuf>,

    /// Indicator to sort by: aai, aaiw, aaid, aaiwd, d, jif, es
    #[arg(long = "sort-key", default_value = "aai")]
    sort_key: String,

    /// Rows to display (ranks stay global)
    #[arg(long = "top-k")]
    top_k: Option<usize>,

    /// Output format: csv, text or markdown
    #[arg(long, default_value = "csv")]
    format: String,

    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    #[command(flatten)]
    elite: EliteOpts,

    #[command(flatten)]
    sample: SampleOpts,

    /// JCR-style summary CSV; journals without both values are dropped
    #[arg(long, value_name = "FILE")]
    indicators: PathBuf,

    /// Output format: text or csv
    #[arg(long, default_value = "text")]
    format: String,

    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct ConvergeArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    #[command(flatten)]
    elite: EliteOpts,

    #[command(flatten)]
    sample: SampleOpts,

    /// Journal to trace
    #[arg(long)]
    journal: String,

    /// Largest sample size of the series (clamped to the sample)
    #[arg(long = "m-max")]
    m_max: Option<usize>,

    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct NetworkArgs {
    #[command(flatten)]
    corpus: CorpusOpts,

    /// Restrict to one journal's articles
    #[arg(long)]
    journal: Option<String>,

    /// A second corpus of citing papers for the citing-institution table
    #[arg(long = "citing-corpus", value_name = "FILE")]
    citing_corpus: Option<PathBuf>,

    /// Minimum co-occurrence count for displayed keywords
    #[arg(long = "min-cooccurrence", default_value_t = 2)]
    min_cooccurrence: u64,

    /// Rows in the institution tables
    #[arg(long = "top-k", default_value_t = 20)]
    top_k: usize,

    /// Directory for the emitted CSV files
    #[arg(long = "out-dir", value_name = "DIR")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, default_value_t = 20)]
    journals: usize,

    #[arg(long = "articles-per-journal", default_value_t = 80)]
    articles_per_journal: usize,

    /// Elite fraction per journal: one value broadcast to all journals, or
    /// a comma-separated list with one value per journal
    #[arg(long = "elite-fraction", default_value = "0.3")]
    elite_fraction: String,

    /// Dirichlet-style concentration over elite institutions (inf = uniform)
    #[arg(long, default_value_t = 1.0)]
    concentration: f64,

    #[arg(long = "authors-min", default_value_t = 1)]
    authors_min: usize,

    #[arg(long = "authors-max", default_value_t = 6)]
    authors_max: usize,

    #[arg(long = "keyword-pool", default_value_t = 30)]
    keyword_pool: usize,

    /// Institutions in the synthetic elite set
    #[arg(long = "elite-size", default_value_t = 20)]
    elite_size: usize,

    /// First-tier institutions in the synthetic elite set
    #[arg(long = "tier1-size", default_value_t = 5)]
    tier1_size: usize,

    #[arg(long = "tier1-weight", default_value_t = 1.2)]
    tier1_weight: f64,

    /// Directory for corpus.jsonl, truth.json, elite_lists.csv, aliases.txt
    /// and indicators.csv
    #[arg(long = "out-dir", value_name = "DIR")]
    out_dir: PathBuf,
}

enum CliError {
    Usage(String),
    Input(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

fn verbose() -> bool {
    static VERBOSE: OnceLock<bool> = OnceLock::new();
    *VERBOSE.get_or_init(|| {
        std::env::var("AAIDX_LOG")
            .map(|v| !v.is_empty() && v != "0" && !v.eq_ignore_ascii_case("off"))
            .unwrap_or(false)
    })
}

macro_rules! log_line {
    ($($arg:tt)*) => {
        if verbose() {
            eprintln!($($arg)*);
        }
    };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                eprintln!("error: kind=usage message=\"invalid command line\"");
                ExitCode::from(1)
            } else {
                // --help / --version
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!(
                "error: kind={} message={:?}",
                err.kind(),
                err.message()
            );
            ExitCode::from(err.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Ingest(args) => cmd_ingest(args),
        Command::Elite(args) => cmd_elite(args),
        Command::Score(args) => cmd_score(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Converge(args) => cmd_converge(args),
        Command::Network(args) => cmd_network(args),
        Command::Gen(args) => cmd_gen(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| CliError::Input(format!("creating {}: {e}", parent.display())))?;
        }
    }
    std::fs::write(path, contents)
        .map_err(|e| CliError::Input(format!("writing {}: {e}", path.display())))
}

/// Loads one corpus file, auto-detecting the canonical one-object-per-line
/// form against the field-tagged form.
fn load_corpus_file(path: &Path, strict: bool) -> Result<Corpus, CliError> {
    let contents = read_file(path)?;
    let looks_canonical = contents
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.trim_start().starts_with('{'));
    if looks_canonical {
        parse_canonical_jsonlines(&contents)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    } else {
        let report = parse_tagged_records(&contents, strict)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        for skipped in &report.skipped {
            eprintln!(
                "warning: {}: skipped record {} ({})",
                path.display(),
                skipped.ordinal,
                skipped.reason
            );
        }
        for warning in &report.warnings {
            log_line!("warning: {}: {warning}", path.display());
        }
        Ok(report.corpus)
    }
}

fn load_corpora(opts: &CorpusOpts) -> Result<Corpus, CliError> {
    let mut parts = Vec::with_capacity(opts.corpus.len());
    for path in &opts.corpus {
        parts.push(load_corpus_file(path, opts.strict)?);
    }
    let corpus = if parts.len() == 1 {
        parts.into_iter().next().expect("one part")
    } else {
        Corpus::merge(parts)
    };
    log_line!(
        "loaded {} records across {} journals",
        corpus.len(),
        corpus.journal_count()
    );
    Ok(corpus)
}

fn load_elite(opts: &EliteOpts, anchor_year: i32) -> Result<EliteSet, CliError> {
    if opts.tier1_weight < 1.0 {
        return Err(CliError::Usage(format!(
            "--tier1-weight must be at least 1.0 (got {})",
            opts.tier1_weight
        )));
    }
    let lists = parse_ranking_lists(&read_file(&opts.elite_lists)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", opts.elite_lists.display())))?;
    let names = build_elite_set(&lists, anchor_year, opts.top_n)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let tier1 = build_tier1(&lists, anchor_year, opts.tier1_top_n)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let aliases = match &opts.aliases {
        Some(path) => AliasTable::parse(&read_file(path)?),
        None => AliasTable::new(),
    };
    let locations: BTreeMap<String, String> = lists
        .iter()
        .flat_map(|l| l.entries.iter())
        .map(|e| (e.canonical_name.clone(), e.location.clone()))
        .collect();
    assemble(&names, &tier1, &aliases, &locations, opts.tier1_weight)
        .map_err(|e| CliError::Input(e.to_string()))
}

fn load_indicators(path: &Path) -> Result<IndicatorTable, CliError> {
    IndicatorTable::parse_csv(&read_file(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Doc-type filters, then scores every journal. Journals whose sample comes
/// out empty are skipped with a warning.
fn score_all(
    corpus: &Corpus,
    elite: &EliteSet,
    sample: &SampleOpts,
    indicators: Option<&IndicatorTable>,
) -> Result<Vec<JournalScore>, CliError> {
    if sample.m == 0 {
        return Err(CliError::Usage("--m must be at least 1".to_string()));
    }
    if corpus.is_empty() {
        return Err(CliError::Input("corpus contains no records".to_string()));
    }
    let filtered = filter_doc_types(corpus, &DocType::sampleable());
    if filtered.is_empty() {
        return Err(CliError::Input(
            "corpus contains no records of a sampleable document type".to_string(),
        ));
    }
    let config = ScoreConfig {
        m: sample.m,
        anchor_year: sample.anchor_year,
    };
    let journals: Vec<String> = filtered.journals().map(str::to_string).collect();
    // Scoring is pure over the immutable corpus and elite set, so journals
    // compute in parallel; results are handled in journal order afterwards
    // so warnings and error reporting stay deterministic.
    let results: Vec<(&String, Result<JournalScore, ScoreError>)> = journals
        .par_iter()
        .map(|journal| {
            (
                journal,
                score_journal(&filtered, journal, elite, &config, indicators),
            )
        })
        .collect();
    let mut scores = Vec::with_capacity(journals.len());
    for (journal, result) in results {
        match result {
            Ok(score) => {
                if score.m_used < sample.m {
                    log_line!(
                        "note: journal {journal:?} sample fell short: {} of {}",
                        score.m_used,
                        sample.m
                    );
                }
                scores.push(score);
            }
            Err(ScoreError::Index(e)) => {
                eprintln!("warning: skipping journal {journal:?}: {e}");
            }
            Err(ScoreError::Sample(e)) => {
                return Err(CliError::Input(e.to_string()));
            }
        }
    }
    if scores.is_empty() {
        return Err(CliError::Input(
            "no journal produced a non-empty sample".to_string(),
        ));
    }
    Ok(scores)
}

fn cmd_ingest(args: IngestArgs) -> Result<(), CliError> {
    let corpus = load_corpora(&args.corpus)?;
    write_file(&args.out, &to_canonical_jsonlines(&corpus))?;
    println!(
        "ingested {} records across {} journals -> {}",
        corpus.len(),
        corpus.journal_count(),
        args.out.display()
    );
    Ok(())
}

fn cmd_elite(args: EliteArgs) -> Result<(), CliError> {
    let set = load_elite(&args.elite, args.anchor_year)?;
    println!(
        "{} institutions ({} tier-1, {} tier-2)",
        set.len(),
        set.tier1_count(),
        set.tier2_count()
    );
    if let Some(out) = &args.out {
        let mut report = String::from("name,location,tier,weight\n");
        for institution in set.institutions() {
            let _ = writeln!(
                report,
                "{},{},{},{}",
                aaidx_core::report::csv_escape(&institution.canonical_name),
                aaidx_core::report::csv_escape(&institution.location),
                match institution.tier {
                    aaidx_core::elite::Tier::Tier1 => "tier1",
                    aaidx_core::elite::Tier::Tier2 => "tier2",
                },
                institution.weight
            );
        }
        write_file(out, &report)?;
    }
    Ok(())
}

fn cmd_score(args: ScoreArgs) -> Result<(), CliError> {
    let corpus = load_corpora(&args.corpus)?;
    let elite = load_elite(&args.elite, args.sample.anchor_year)?;
    let indicators = args.indicators.as_deref().map(load_indicators).transpose()?;
    let scores = score_all(&corpus, &elite, &args.sample, indicators.as_ref())?;
    write_file(&args.out, &emit_scores_csv(&scores))?;
    println!("scored {} journals -> {}", scores.len(), args.out.display());
    Ok(())
}

fn cmd_rank(args: RankArgs) -> Result<(), CliError> {
    let sort_key: SortKey = args.sort_key.parse().map_err(CliError::Usage)?;
    let format: TableFormat = args.format.parse().map_err(CliError::Usage)?;
    let corpus = load_corpora(&args.corpus)?;
    let elite = load_elite(&args.elite, args.sample.anchor_year)?;
    let indicators = args.indicators.as_deref().map(load_indicators).transpose()?;
    let scores = score_all(&corpus, &elite, &args.sample, indicators.as_ref())?;
    let table = RankingTable::from_scores(&scores, sort_key);
    let top_k = args.top_k.unwrap_or(table.rows.len());
    write_file(&args.out, &table.emit(format, top_k))?;
    println!(
        "ranked {} journals by {} -> {}",
        table.rows.len(),
        args.sort_key,
        args.out.display()
    );
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<(), CliError> {
    let format: TableFormat = args.format.parse().map_err(CliError::Usage)?;
    let corpus = load_corpora(&args.corpus)?;
    let elite = load_elite(&args.elite, args.sample.anchor_year)?;
    let indicators = load_indicators(&args.indicators)?;
    let full_scores = score_all(&corpus, &elite, &args.sample, Some(&indicators))?;
    let tier1_scores = score_all(&corpus, &elite.tier1_subset(), &args.sample, Some(&indicators))?;

    let plain_rows = |scores: &[JournalScore]| -> Vec<[Option<f64>; 5]> {
        scores
            .iter()
            .map(|s| [s.jif, s.es, Some(s.aai), Some(s.d), Some(s.aaid())])
            .collect()
    };
    let weighted_rows: Vec<[Option<f64>; 5]> = full_scores
        .iter()
        .map(|s| [s.jif, s.es, Some(s.aaiw), Some(s.d), Some(s.aaiwd())])
        .collect();

    let plain_labels = || ["JIF", "ES", "AAI", "D", "AAID"].map(str::to_string);
    let weighted_labels = ["JIF", "ES", "AAIW", "D", "AAIWD"].map(str::to_string);

    let panel_a = build_panel(plain_labels(), &plain_rows(&full_scores))
        .map_err(|e| CliError::Input(format!("panel A: {e}")))?;
    let panel_b = build_panel(plain_labels(), &plain_rows(&tier1_scores))
        .map_err(|e| CliError::Input(format!("panel B: {e}")))?;
    let panel_c = build_panel(weighted_labels, &weighted_rows)
        .map_err(|e| CliError::Input(format!("panel C: {e}")))?;

    let mut out = String::new();
    out.push_str(&emit_panel(
        &panel_a,
        "Panel A: five indicators over the full elite set",
        format,
    ));
    out.push('\n');
    out.push_str(&emit_panel(
        &panel_b,
        "Panel B: five indicators over the tier-1 elite set",
        format,
    ));
    out.push('\n');
    out.push_str(&emit_panel(
        &panel_c,
        "Panel C: weighted indicators over the full elite set",
        format,
    ));
    write_file(&args.out, &out)?;
    println!(
        "compared {} journals across three panels -> {}",
        panel_a.n,
        args.out.display()
    );
    Ok(())
}

fn cmd_converge(args: ConvergeArgs) -> Result<(), CliError> {
    let corpus = load_corpora(&args.corpus)?;
    let elite = load_elite(&args.elite, args.sample.anchor_year)?;
    let filtered = filter_doc_types(&corpus, &DocType::sampleable());
    let sample = sample_articles(&filtered, &args.journal, args.sample.m, args.sample.anchor_year)
        .map_err(|e| CliError::Input(e.to_string()))?;
    if sample.m_used == 0 {
        return Err(CliError::Input(format!(
            "journal {:?} has no eligible articles",
            args.journal
        )));
    }
    if sample.shortfall() > 0 {
        eprintln!(
            "warning: journal {:?} sample fell short: {} of {} requested",
            args.journal, sample.m_used, sample.m_requested
        );
    }
    let m_max = args.m_max.unwrap_or(sample.m_used);
    let series = convergence_series(&sample, &elite, m_max);
    write_file(&args.out, &emit_convergence_csv(&series))?;
    println!(
        "convergence series for {:?} up to m={} -> {}",
        args.journal,
        series.len(),
        args.out.display()
    );
    Ok(())
}

fn cmd_network(args: NetworkArgs) -> Result<(), CliError> {
    use aaidx_core::networks::{
        citing_institution_table, collaboration_network, institution_output_table,
        keyword_cooccurrence,
    };
    let corpus = load_corpora(&args.corpus)?;
    if corpus.is_empty() {
        return Err(CliError::Input("corpus contains no records".to_string()));
    }
    let articles: Vec<&aaidx_core::records::ArticleRecord> = match &args.journal {
        Some(journal) => corpus
            .articles_for(journal)
            .ok_or_else(|| CliError::Input(format!("unknown journal {journal:?}")))?,
        None => corpus.articles().iter().collect(),
    };

    let cooccurrence = keyword_cooccurrence(articles.iter().copied(), args.min_cooccurrence);
    let collaboration = collaboration_network(articles.iter().copied());
    let institutions = institution_output_table(articles.iter().copied(), args.top_k);

    write_file(
        &args.out_dir.join("keywords_nodes.csv"),
        &emit_nodes_csv(&cooccurrence.graph),
    )?;
    write_file(
        &args.out_dir.join("keywords_edges.csv"),
        &emit_edges_csv(&cooccurrence.graph),
    )?;
    write_file(
        &args.out_dir.join("collaboration_nodes.csv"),
        &emit_nodes_csv(&collaboration),
    )?;
    write_file(
        &args.out_dir.join("collaboration_edges.csv"),
        &emit_edges_csv(&collaboration),
    )?;
    write_file(
        &args.out_dir.join("institutions.csv"),
        &emit_institution_table(&institutions),
    )?;
    if let Some(citing_path) = &args.citing_corpus {
        let citing = load_corpus_file(citing_path, false)?;
        let rows = citing_institution_table(citing.articles().iter(), args.top_k);
        write_file(
            &args.out_dir.join("citing_institutions.csv"),
            &emit_citing_table(&rows),
        )?;
    }
    println!(
        "keywords: {} distinct, {} displayed at threshold {}; institutions: {} rows -> {}",
        cooccurrence.total_keywords,
        cooccurrence.displayed_keywords,
        args.min_cooccurrence,
        institutions.len(),
        args.out_dir.display()
    );
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let fractions: Vec<f64> = {
        let parts: Vec<&str> = args.elite_fraction.split(',').map(str::trim).collect();
        let parsed: Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
        let values =
            parsed.map_err(|_| CliError::Usage(format!("bad --elite-fraction {:?}", args.elite_fraction)))?;
        if values.len() == 1 {
            vec![values[0]; args.journals]
        } else {
            values
        }
    };
    if args.tier1_size > args.elite_size {
        return Err(CliError::Usage(
            "--tier1-size cannot exceed --elite-size".to_string(),
        ));
    }
    let spec = GenSpec {
        seed: args.seed,
        journals: args.journals,
        articles_per_journal: args.articles_per_journal,
        elite_fraction_per_journal: fractions,
        institution_concentration: args.concentration,
        authors_per_article: (args.authors_min, args.authors_max),
        keyword_pool: args.keyword_pool,
    };
    let elite = aaidx_core::testkit::synthetic_elite_set(
        args.elite_size,
        args.tier1_size,
        args.tier1_weight,
    );
    let (corpus, truth) =
        gen_corpus(&spec, &elite).map_err(|e| CliError::Usage(e.to_string()))?;

    write_file(&args.out_dir.join("corpus.jsonl"), &to_canonical_jsonlines(&corpus))?;
    write_file(
        &args.out_dir.join("truth.json"),
        &aaidx_core::testkit::truth_to_json(&truth),
    )?;

    let mut lists_csv = String::from("year,rank,name,location\n");
    for list in synthetic_ranking_lists(args.elite_size, 2020) {
        for entry in &list.entries {
            let _ = writeln!(
                lists_csv,
                "{},{},{},{}",
                list.year, entry.rank, entry.canonical_name, entry.location
            );
        }
    }
    write_file(&args.out_dir.join("elite_lists.csv"), &lists_csv)?;

    let mut aliases = String::from("# canonical|alias lines; canonical names match by themselves\n");
    for institution in elite.institutions() {
        aliases.push_str(&institution.canonical_name);
        aliases.push('\n');
    }
    write_file(&args.out_dir.join("aliases.txt"), &aliases)?;

    write_file(
        &args.out_dir.join("indicators.csv"),
        &aaidx_core::testkit::synthetic_indicator_csv(&truth, args.seed),
    )?;

    println!(
        "generated {} records across {} journals (seed {}) -> {}",
        corpus.len(),
        args.journals,
        args.seed,
        args.out_dir.display()
    );
    println!(
        "score against the planted tiers with --top-n {} --tier1-top-n {} --tier1-weight {}",
        args.elite_size, args.tier1_size, args.tier1_weight
    );
    Ok(())
}
