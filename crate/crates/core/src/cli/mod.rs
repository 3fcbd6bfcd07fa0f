//! The `palsym` command line.
//!
//! Exit status: 0 on success, 1 when a verification or table comparison
//! fails, 2 on usage errors and guard violations.

mod play;

use std::io::{self, BufRead, Write};
use std::num::NonZeroUsize;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{build_word, lemma4_bound, ConstructionParams};
use crate::error::Error;
use crate::extremal::{compare_with_paper, compute_table, SdTableRow, SearchConfig};
use crate::game::{g1, EngineMode, GameSolver, Transcript};
use crate::subseq::{sd, sd_witness, DeletionWitness};
use crate::verify::{run_suite, Suite};
use crate::word::{parse_word_with, Alphabet, SymmetryClass, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "palsym",
    version,
    about = "Deletion distance to palindromes and antipalindromes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Deletion distance of a single word.
    Sd(SdArgs),
    /// Exhaustive S_d(n) over a range of lengths.
    Table(TableArgs),
    /// Build a word of the extremal construction family.
    Construct(ConstructArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// The alternating deletion game.
    #[command(subcommand)]
    Game(GameCommand),
}

#[derive(Debug, Args)]
struct JobsArg {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "PALSYM_JOBS")]
    jobs: Option<usize>,
}

impl JobsArg {
    fn workers(&self) -> NonZeroUsize {
        self.jobs
            .and_then(NonZeroUsize::new)
            .or_else(|| std::thread::available_parallelism().ok())
            .unwrap_or(NonZeroUsize::MIN)
    }
}

#[derive(Debug, Args)]
struct SdArgs {
    /// Word over {a,b}.
    #[arg(required_unless_present = "stdin")]
    word: Option<String>,
    /// Read one word per line from stdin instead.
    #[arg(long, conflicts_with = "word")]
    stdin: bool,
    /// Also print one minimum deletion set and the resulting word.
    #[arg(long)]
    witness: bool,
    /// Accept 0/1 as aliases for a/b.
    #[arg(long)]
    digits: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 1)]
    from: usize,
    #[arg(long, default_value_t = 20)]
    to: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(flatten)]
    jobs: JobsArg,
    /// Fail with status 1 if any n <= 20 disagrees with the published values.
    #[arg(long)]
    compare_paper: bool,
    /// Extremal words kept per row.
    #[arg(long, default_value_t = 8)]
    extremal_limit: usize,
    /// Largest n the exhaustive search accepts.
    #[arg(long, default_value_t = crate::extremal::DEFAULT_MAX_SEARCH_LEN)]
    max_length: usize,
    /// Print progress to stderr every this many seconds.
    #[arg(long)]
    progress: Option<u64>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    n: u32,
    alpha: u32,
    beta: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: Suite,
    /// Suite-specific size limit; each suite has its own default.
    #[arg(long)]
    max_n: Option<usize>,
    #[command(flatten)]
    jobs: JobsArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Exact,
    Heuristic,
}

#[derive(Debug, Subcommand)]
enum GameCommand {
    /// Exact game value and a principal line.
    Solve {
        word: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Best game value over all words of length n.
    Best { n: usize },
    /// Play against the engine.
    Play {
        word: String,
        /// `first` plays the word's owner (maximizes moves), `second` the
        /// opponent who moves first and minimizes.
        #[arg(long, value_enum, default_value_t = Side::Second)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Engine::Exact)]
        engine: Engine,
        /// Print the transcript as JSON when the game ends.
        #[arg(long)]
        json: bool,
    },
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(err, "{}", rendered.ansi());
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, input, out, err) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

type CliResult = Result<i32, CliError>;

fn dispatch(
    command: Command,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    match command {
        Command::Sd(args) => cmd_sd(args, input, out),
        Command::Table(args) => cmd_table(args, out, err),
        Command::Construct(args) => cmd_construct(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Game(g) => cmd_game(g, input, out),
    }
}

#[derive(Serialize)]
struct SdReport {
    word: Word,
    sd: usize,
    lps: usize,
    las: usize,
    class: SymmetryClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<DeletionWitness>,
}

fn sd_report(word: Word, with_witness: bool) -> SdReport {
    let v = sd(word);
    SdReport {
        word,
        sd: v.value,
        lps: v.lps,
        las: v.las,
        class: word.symmetry_class(),
        witness: with_witness.then(|| sd_witness(word)),
    }
}

fn cmd_sd(args: SdArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> CliResult {
    let alphabet = if args.digits {
        Alphabet::LettersOrDigits
    } else {
        Alphabet::Letters
    };
    let texts: Vec<String> = match args.word {
        Some(w) => vec![w],
        None => input
            .lines()
            .map(|l| l.map(|s| s.trim().to_string()))
            .filter(|l| !matches!(l, Ok(s) if s.is_empty()))
            .collect::<Result<_, _>>()?,
    };
    for text in texts {
        let word = parse_word_with(&text, alphabet)?;
        let report = sd_report(word, args.witness);
        match args.format {
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
            OutputFormat::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(false)
                    .from_writer(&mut *out);
                w.write_record([
                    report.word.to_string(),
                    report.sd.to_string(),
                    report.lps.to_string(),
                    report.las.to_string(),
                    report.class.to_string(),
                ])?;
                w.flush()?;
            }
            OutputFormat::Text => {
                writeln!(out, "word: {}", display_word(report.word))?;
                writeln!(out, "length: {}", report.word.len())?;
                writeln!(out, "S_d = {}", report.sd)?;
                writeln!(out, "lps = {}", report.lps)?;
                writeln!(out, "las = {}", report.las)?;
                writeln!(out, "class: {}", report.class)?;
                if let Some(wit) = &report.witness {
                    let positions: Vec<String> = wit
                        .deleted_positions
                        .iter()
                        .map(|p| p.to_string())
                        .collect();
                    writeln!(out, "target: {:?}", wit.target)?;
                    writeln!(out, "delete: [{}]", positions.join(", "))?;
                    writeln!(out, "residual: {}", display_word(wit.residual))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn display_word(w: Word) -> String {
    if w.is_empty() {
        "(empty)".to_string()
    } else {
        w.to_string()
    }
}

fn cmd_table(args: TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let config = SearchConfig {
        worker_count: args.jobs.workers(),
        extremal_limit: args.extremal_limit,
        progress_interval: args.progress.map(Duration::from_secs),
        max_length: args.max_length.min(crate::word::MAX_WORD_LEN),
        canonical_pruning: true,
    };
    if args.from < 1 {
        return Err(CliError::Usage("--from must be at least 1".into()));
    }
    let rows = compute_table(args.from, args.to, &config)?;
    write_rows(&rows, args.format, out)?;
    if args.compare_paper {
        let mismatches = compare_with_paper(&rows);
        for m in &mismatches {
            writeln!(
                err,
                "mismatch at n={}: computed {}, published {}",
                m.n, m.computed, m.published
            )?;
        }
        if !mismatches.is_empty() {
            return Ok(EXIT_FAILED);
        }
        writeln!(err, "all rows with n <= 20 match the published table")?;
    }
    Ok(EXIT_OK)
}

pub fn write_rows(
    rows: &[SdTableRow],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), io::Error> {
    let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    match format {
        OutputFormat::Json => {
            for row in rows {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(row).map_err(io::Error::other)?
                )?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "sd", "lower", "upper", "extremal"])
                .map_err(io::Error::other)?;
            for row in rows {
                let extremal: Vec<String> = row.extremal.iter().map(|w| w.to_string()).collect();
                w.write_record([
                    row.n.to_string(),
                    row.sd_n.to_string(),
                    row.lower.map_or_else(String::new, |v| v.to_string()),
                    row.upper.to_string(),
                    extremal.join(";"),
                ])
                .map_err(io::Error::other)?;
            }
            w.flush()?;
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>3} {:>4} {:>6} {:>6} {:>10}  extremal",
                "n", "S_d", "lower", "upper", "scanned"
            )?;
            for row in rows {
                let extremal: Vec<String> = row.extremal.iter().map(|w| w.to_string()).collect();
                writeln!(
                    out,
                    "{:>3} {:>4} {:>6} {:>6} {:>10}  {}",
                    row.n,
                    row.sd_n,
                    opt(row.lower),
                    row.upper,
                    row.words_scanned,
                    extremal.join(" ")
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstructReport {
    n: u32,
    alpha: u32,
    beta: u32,
    word: Word,
    length: usize,
    bound: usize,
    computed: usize,
}

fn cmd_construct(args: ConstructArgs, out: &mut dyn Write) -> CliResult {
    let params = ConstructionParams::new(args.n, args.alpha, args.beta)?;
    let word = build_word(params)?;
    let report = ConstructReport {
        n: args.n,
        alpha: args.alpha,
        beta: args.beta,
        word,
        length: word.len(),
        bound: lemma4_bound(params)?,
        computed: sd(word).value,
    };
    match args.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.serialize(&report)?;
            w.flush()?;
        }
        OutputFormat::Text => {
            writeln!(out, "word: {}", report.word)?;
            writeln!(out, "length: {}", report.length)?;
            writeln!(out, "bound: {}", report.bound)?;
            writeln!(out, "computed: {}", report.computed)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> CliResult {
    let config = SearchConfig::with_workers(args.jobs.workers().get());
    let max_n = args.max_n.unwrap_or_else(|| args.suite.default_max_n());
    let report = run_suite(args.suite, max_n, &config)?;
    match args.format {
        OutputFormat::Json => {
            for check in &report.checks {
                writeln!(out, "{}", serde_json::to_string(check)?)?;
            }
        }
        OutputFormat::Text | OutputFormat::Csv => {
            for check in &report.checks {
                let tag = if check.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {}: {}", check.label, check.detail)?;
            }
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    writeln!(
        out,
        "suite {} (max-n {}): {} checks, {} failed",
        report.suite,
        report.max_n,
        report.checks.len(),
        failed
    )?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_game(command: GameCommand, input: &mut dyn BufRead, out: &mut dyn Write) -> CliResult {
    match command {
        GameCommand::Solve { word, format } => {
            let word = parse_word_with(&word, Alphabet::Letters)?;
            let outcome = GameSolver::new().outcome(word)?;
            let transcript = Transcript::replay(word, &outcome.principal_line)?;
            match format {
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&transcript)?)?;
                }
                _ => {
                    writeln!(out, "word: {}", display_word(word))?;
                    writeln!(out, "value: {}", outcome.value)?;
                    for (i, m) in transcript.moves.iter().enumerate() {
                        writeln!(
                            out,
                            "{:>3}. {:?} deletes {} at {} -> {}",
                            i + 1,
                            m.mover,
                            m.letter,
                            m.position,
                            display_word(m.word)
                        )?;
                    }
                    writeln!(out, "final: {}", transcript.final_kind)?;
                }
            }
            Ok(EXIT_OK)
        }
        GameCommand::Best { n } => {
            let (value, word) = g1(n)?;
            writeln!(out, "n: {n}")?;
            writeln!(out, "g1 = {value}")?;
            writeln!(out, "word: {word}")?;
            Ok(EXIT_OK)
        }
        GameCommand::Play {
            word,
            side,
            engine,
            json,
        } => {
            let word = parse_word_with(&word, Alphabet::Letters)?;
            let mode = match engine {
                Engine::Exact => EngineMode::Exact,
                Engine::Heuristic => EngineMode::Heuristic,
            };
            let human = match side {
                Side::First => crate::game::Mover::Maximizer,
                Side::Second => crate::game::Mover::Minimizer,
            };
            play::run(word, human, mode, json, input, out)
        }
    }
}
