use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pftopo::laws::{self, GridStep, LawId, LawVerdict, SearchDomain, DEFAULT_SAMPLES, DEFAULT_SEED};
use pftopo::{
    check_axioms, check_base, check_subbase_minimality, evaluate, generate_from_subbase, load_family_with, parse,
    partition_by_rho, rank_of, save_family, DocumentError, Error, Family, InclusionMode, SumCheck,
};

mod report;

use report::{Output, Report};

/// Picture fuzzy set algebra and topology toolkit.
#[derive(Debug, Parser)]
#[command(name = "pftopo", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Family document (JSON).
    file: PathBuf,

    /// Accept grade triples whose sum exceeds 1.
    #[arg(long)]
    relaxed_sums: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Literal,
    Reversed,
}

impl From<Mode> for InclusionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Literal => InclusionMode::PaperLiteral,
            Mode::Reversed => InclusionMode::NeutralReversed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the topology axioms; also reports base and sub-base minimality.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "literal")]
        mode: Mode,
    },
    /// Generate the topology of a sub-base.
    Generate {
        #[command(flatten)]
        input: Input,
        /// Comma-separated member names; defaults to the whole family.
        #[arg(long, value_delimiter = ',')]
        subbase: Option<Vec<String>>,
        /// Refuse sub-bases that fail the minimality check.
        #[arg(long)]
        require_minimal: bool,
        /// Write the topology as a family document.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Exit 1 unless the topology has this rank.
        #[arg(long)]
        expect_rank: Option<usize>,
    },
    /// Number of distinct rho vectors in the family.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        expect_rank: Option<usize>,
    },
    /// Partition the family by rho vector.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a set expression over the family's members.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        expr: String,
    },
    /// Search the law catalog for counterexamples.
    Laws {
        /// Only this law (e.g. L06).
        #[arg(long)]
        law: Option<String>,
        /// Grid step: 0.25, 0.10 or 0.05.
        #[arg(long)]
        step: Option<String>,
        #[arg(long)]
        universe_size: Option<usize>,
        #[arg(long, value_enum, default_value = "literal")]
        mode: Mode,
        #[arg(long)]
        seed: Option<u64>,
        /// Sample randomly instead of enumerating.
        #[arg(long)]
        samples: Option<u64>,
        /// Largest sub-base or chain for the structural laws.
        #[arg(long)]
        arity: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Document(DocumentError),
    Core(Error),
    Io(PathBuf, std::io::Error),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Document(e) => e.kind(),
            Failure::Core(Error::Syntax(_)) => "SyntaxError",
            Failure::Core(Error::UnknownName(_)) => "UnknownName",
            Failure::Core(Error::DomainTooLarge { .. }) => "DomainTooLarge",
            Failure::Core(_) => "ValidationError",
            Failure::Io(..) => "IoError",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Document(e) => e.to_string(),
            Failure::Core(e) => e.to_string(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Document(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output::new(cli.json);
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(f) => {
            out.error(f.kind(), &f.message());
            2
        }
    };
    ExitCode::from(code)
}

fn load(input: &Input, out: &mut Output) -> Result<Family, Failure> {
    let bytes = fs::read(&input.file).map_err(|e| Failure::Io(input.file.clone(), e))?;
    let check = if input.relaxed_sums { SumCheck::Relaxed } else { SumCheck::Strict };
    let family = load_family_with(&bytes, check)?;
    for m in &family {
        for (label, t) in m.set.inadmissible() {
            out.warn(&format!("{} at {label}: grade sum {} > 1", m.name, t.sum_text()));
        }
    }
    Ok(family)
}

fn run(command: Command, out: &mut Output) -> Result<u8, Failure> {
    match command {
        Command::Check { input, mode } => {
            let family = load(&input, out)?;
            let axioms = check_axioms(&family)?;
            let base = check_base(&family)?;
            let minimality = check_subbase_minimality(&family, mode.into())?;
            out.emit(Report::Check {
                family: &family,
                axioms: &axioms,
                base: &base,
                minimality: &minimality,
                mode: mode.into(),
            });
            Ok(if axioms.is_topology { 0 } else { 1 })
        }
        Command::Generate {
            input,
            subbase,
            require_minimal,
            output,
            expect_rank,
        } => {
            let family = load(&input, out)?;
            let s = match &subbase {
                Some(names) => family.select(names)?,
                None => family,
            };
            let trace = generate_from_subbase(&s, require_minimal)?;
            let rank = rank_of(&trace.topology)?.get();
            if let Some(path) = &output {
                write(path, &save_family(&trace.topology))?;
            }
            let bound = s.distinct_values() + 1;
            out.emit(Report::Generate {
                trace: &trace,
                rank,
                bound,
                expect_rank,
            });
            Ok(rank_exit(rank, expect_rank))
        }
        Command::Rank { input, expect_rank } => {
            let family = load(&input, out)?;
            let rank = rank_of(&family)?.get();
            out.emit(Report::Rank { rank, expect_rank });
            Ok(rank_exit(rank, expect_rank))
        }
        Command::Classify { input } => {
            let family = load(&input, out)?;
            let partition = partition_by_rho(&family)?;
            out.emit(Report::Classify { partition: &partition });
            Ok(0)
        }
        Command::Eval { input, expr } => {
            let family = load(&input, out)?;
            let ast = parse(&expr).map_err(Error::from)?;
            let value = evaluate(&ast, &family)?;
            out.emit(Report::Eval { ast: &ast, value: &value });
            Ok(0)
        }
        Command::Laws {
            law,
            step,
            universe_size,
            mode,
            seed,
            samples,
            arity,
        } => {
            let selected: Vec<LawId> = match law {
                Some(id) => vec![id.parse()?],
                None => LawId::ALL.to_vec(),
            };
            let mode: InclusionMode = mode.into();
            let custom = step.is_some() || universe_size.is_some() || samples.is_some() || arity.is_some();
            let verdicts: Vec<LawVerdict> = if custom {
                let step: GridStep = step.as_deref().unwrap_or("0.25").parse()?;
                let size = universe_size.unwrap_or(1);
                let mut domain = if samples.is_some() || seed.is_some() {
                    SearchDomain::randomized(size, step, samples.unwrap_or(DEFAULT_SAMPLES), seed.unwrap_or(DEFAULT_SEED))
                } else {
                    SearchDomain::exhaustive(size, step)
                };
                if let Some(k) = arity {
                    domain = domain.with_arity(k);
                }
                selected
                    .iter()
                    .map(|&l| laws::check_law(l, &domain, mode))
                    .collect::<Result<_, _>>()?
            } else {
                let seed = seed.unwrap_or(DEFAULT_SEED);
                selected
                    .iter()
                    .map(|&l| laws::check_law_default(l, mode, seed))
                    .collect::<Result<_, _>>()?
            };
            let all_hold = verdicts.iter().all(LawVerdict::holds);
            out.emit(Report::Laws { verdicts: &verdicts });
            Ok(if all_hold { 0 } else { 1 })
        }
    }
}

fn rank_exit(rank: usize, expected: Option<usize>) -> u8 {
    match expected {
        Some(e) if e != rank => 1,
        _ => 0,
    }
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}
