//! Command-line interface over the library.
//!
//! Conventions: diagnostics go to stderr and data to stdout or files;
//! output files are written to a temp file and renamed into place, so a
//! failed run leaves nothing partial behind; every seeded run prints the
//! resolved seed(s) to stderr; seeds are mandatory — reproducibility is
//! the point, so there is no wall-clock default.
//!
//! Exit codes: 0 success, 1 user error (flags, files, formats), 2
//! internal error.

use std::io::Write;
use std::panic::AssertUnwindSafe;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use textaug::aeda::{self, AedaParams};
use textaug::corpus::{read_tsv, split, stats, to_tsv_string, Corpus};
use textaug::eda::{self, EdaParams, StopwordSet, SynonymLexicon};
use textaug::error::{Error, Result};
use textaug::harness::{improvement_table, run_experiment, ExperimentConfig};
use textaug::ratio::Ratio;

#[derive(Parser)]
#[command(name = "textaug", version, about = "Deterministic text augmentation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a TSV corpus: each example is followed by augmented copies
    Augment(AugmentArgs),
    /// Print corpus statistics (N_class, L_avg, N, |V|)
    Stats(StatsArgs),
    /// Shuffle-split a corpus into train and test files
    Split(SplitArgs),
    /// Run a sweep, write the report, and print the improvement table
    Evaluate(SweepArgs),
    /// Run a sweep and write the report files
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    /// Random punctuation insertion
    Aeda,
    /// Synonym replacement, random insertion, random swap, random deletion
    Eda,
}

#[derive(clap::Args)]
struct AugmentArgs {
    /// Input corpus, one `label<TAB>text` per line
    #[arg(long)]
    input: PathBuf,
    /// Output corpus path (written atomically)
    #[arg(long)]
    output: PathBuf,
    /// Augmentation method
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Augmented copies per example
    #[arg(long, value_name = "N")]
    num_aug: usize,
    /// Master seed
    #[arg(long)]
    seed: u64,
    /// aeda: insertion ratio in (0, 1], e.g. `1/3` or `0.25`
    #[arg(long, value_name = "RATIO")]
    ratio: Option<Ratio>,
    /// eda: synonym lexicon TSV (`word<TAB>syn1,syn2,...`); bundled if omitted
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// eda: stopword list, one word per line; bundled if omitted
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// eda: synonym replacement rate in [0, 1]
    #[arg(long, value_name = "RATE")]
    alpha_sr: Option<Ratio>,
    /// eda: random insertion rate in [0, 1]
    #[arg(long, value_name = "RATE")]
    alpha_ri: Option<Ratio>,
    /// eda: random swap rate in [0, 1]
    #[arg(long, value_name = "RATE")]
    alpha_rs: Option<Ratio>,
    /// eda: per-token deletion probability in [0, 1]
    #[arg(long, value_name = "P")]
    p_rd: Option<f64>,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(clap::Args)]
struct StatsArgs {
    /// Input corpus
    #[arg(long)]
    input: PathBuf,
}

#[derive(clap::Args)]
struct SplitArgs {
    /// Input corpus
    #[arg(long)]
    input: PathBuf,
    /// Fraction assigned to the test side, strictly between 0 and 1
    #[arg(long, value_name = "FRACTION")]
    test_frac: Ratio,
    /// Shuffle seed
    #[arg(long)]
    seed: u64,
    /// Output path for the train side (written atomically)
    #[arg(long)]
    out_train: PathBuf,
    /// Output path for the test side (written atomically)
    #[arg(long)]
    out_test: PathBuf,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Sweep configuration file (flat `key = value` lines)
    #[arg(long)]
    config: PathBuf,
    /// Report JSON path; the cell CSV lands next to it as `.csv`
    #[arg(long)]
    report: PathBuf,
    /// Worker threads (default: all cores)
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
            Ok(Ok(())) => 0,
            Ok(Err(e)) => {
                eprintln!("error: {e}");
                1
            }
            Err(_) => {
                eprintln!("internal error (panic); please report this");
                2
            }
        },
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Augment(args) => cmd_augment(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Split(args) => cmd_split(args),
        Command::Evaluate(args) => cmd_sweep(args, true),
        Command::Sweep(args) => cmd_sweep(args, false),
    }
}

/// Writes to a temp file in the destination directory and renames into
/// place, so failures leave no partial output.
fn write_atomic(path: &Path, bytes: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(bytes.as_bytes())
        .map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

fn write_corpus_atomic(corpus: &Corpus, path: &Path) -> Result<()> {
    write_atomic(path, &to_tsv_string(corpus)?)
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    if jobs == Some(0) {
        return Err(Error::InvalidConfig("--jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot build thread pool: {e}")))
}

fn cmd_augment(args: AugmentArgs) -> Result<()> {
    let reject = |flag: &str, method: &str| {
        Err(Error::InvalidConfig(format!(
            "{flag} does not apply to --method {method}"
        )))
    };
    match args.method {
        MethodArg::Aeda => {
            if args.lexicon.is_some() || args.stopwords.is_some() {
                return reject("--lexicon/--stopwords", "aeda");
            }
            if args.alpha_sr.is_some() || args.alpha_ri.is_some() || args.alpha_rs.is_some() {
                return reject("--alpha-sr/--alpha-ri/--alpha-rs", "aeda");
            }
            if args.p_rd.is_some() {
                return reject("--p-rd", "aeda");
            }
        }
        MethodArg::Eda => {
            if args.ratio.is_some() {
                return reject("--ratio", "eda");
            }
        }
    }

    let corpus = read_tsv(&args.input)?;
    eprintln!("seed: {}", args.seed);
    let pool = thread_pool(args.jobs)?;
    let augmented = match args.method {
        MethodArg::Aeda => {
            let mut params = AedaParams::default();
            if let Some(ratio) = args.ratio {
                params.ratio = ratio;
            }
            params.validate()?;
            pool.install(|| aeda::batch(&corpus, args.num_aug, &params, args.seed))?
        }
        MethodArg::Eda => {
            let defaults = EdaParams::default();
            let params = EdaParams {
                alpha_sr: args.alpha_sr.unwrap_or(defaults.alpha_sr),
                alpha_ri: args.alpha_ri.unwrap_or(defaults.alpha_ri),
                alpha_rs: args.alpha_rs.unwrap_or(defaults.alpha_rs),
                p_rd: args.p_rd.unwrap_or(defaults.p_rd),
                num_aug: args.num_aug,
            };
            params.validate()?;
            let lexicon = match &args.lexicon {
                Some(p) => SynonymLexicon::from_file(p)?,
                None => SynonymLexicon::bundled(),
            };
            let stopwords = match &args.stopwords {
                Some(p) => StopwordSet::from_file(p)?,
                None => StopwordSet::bundled(),
            };
            pool.install(|| eda::batch(&corpus, &params, &lexicon, &stopwords, args.seed))?
        }
    };
    write_corpus_atomic(&augmented, &args.output)?;
    eprintln!(
        "wrote {} examples ({} originals) to {}",
        augmented.len(),
        corpus.len(),
        args.output.display()
    );
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let corpus = read_tsv(&args.input)?;
    let st = stats(&corpus)?;
    println!("N_class\tL_avg\tN\t|V|");
    println!(
        "{}\t{:.1}\t{}\t{}",
        st.n_class, st.avg_len, st.n_examples, st.vocab_size
    );
    Ok(())
}

fn cmd_split(args: SplitArgs) -> Result<()> {
    let corpus = read_tsv(&args.input)?;
    eprintln!("seed: {}", args.seed);
    let (train, test) = split(&corpus, args.test_frac, args.seed)?;
    write_corpus_atomic(&train, &args.out_train)?;
    write_corpus_atomic(&test, &args.out_test)?;
    eprintln!(
        "train: {} examples -> {}",
        train.len(),
        args.out_train.display()
    );
    eprintln!(
        "test: {} examples -> {}",
        test.len(),
        args.out_test.display()
    );
    Ok(())
}

fn cmd_sweep(args: SweepArgs, print_improvements: bool) -> Result<()> {
    let csv_path = args.report.with_extension("csv");
    if csv_path == args.report {
        return Err(Error::InvalidConfig(
            "--report must not use the .csv extension (it is reserved for the cell table)".into(),
        ));
    }
    let config = ExperimentConfig::from_file(&args.config)?;
    let seeds: Vec<String> = config.seeds.iter().map(u64::to_string).collect();
    eprintln!("seeds: {}", seeds.join(","));

    let pool = thread_pool(args.jobs)?;
    let report = pool.install(|| run_experiment(&config))?;
    write_atomic(&args.report, &report.to_json_string())?;
    write_atomic(&csv_path, &report.to_csv_string())?;
    eprintln!(
        "report: {} ({} cells), cell table: {}",
        args.report.display(),
        report.cells.len(),
        csv_path.display()
    );

    if print_improvements {
        let table = improvement_table(&report)?;
        println!("method\ttrain_size\tnum_aug\tdelta_points");
        for row in table {
            println!(
                "{}\t{}\t{}\t{:+.2}",
                row.method, row.train_size, row.num_aug, row.delta_points
            );
        }
    }
    Ok(())
}
