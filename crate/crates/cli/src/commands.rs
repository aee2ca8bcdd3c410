//! Subcommand dispatch. Every command writes one line of JSON to stdout; every
//! error writes one line of JSON to stderr and maps to an exit code.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::codec::{element_from_json, element_to_json, matrix_to_json};
use hecke_core::harness::{random_element, verify_all, verify_representation, verify_star_algebra, VerificationReport};
use hecke_core::norm::DEFAULT_TOL;
use hecke_core::rule::{ConvolutionRule, LeftCosetRule, RightCosetRule};
use hecke_core::{
    check_intertwining, left_action_matrix, operator_norm, right_action_matrix, roster, structure_constants,
    Error as CoreError, ExactHeckeElement, GroupConfig, HeckePair, QComplex, DEFAULT_GROUP_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::pair_spec::{parse_pair_spec, PairSpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

pub const CAP_ENV: &str = "HECKE_GROUP_CAP";

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Hecke algebras of finite pairs (G, H)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Algebra,
    Representation,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleChoice {
    /// Sum over right-coset representatives (the Hecke product)
    RightCoset,
    /// Sum over left-coset representatives; for experiments only
    LeftCoset,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ActionSide {
    /// Left convolution on l2(H\G)
    Left,
    /// Right convolution on l2(G/H)
    Right,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Right, left and double coset counts with per-class data
    Cosets {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Double cosets with sizes and coset counts
    DoubleCosets {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Integer structure constants c[i][j][k] of the double-coset basis
    StructureConstants {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Product of two Hecke elements
    Convolve {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Matrix of an element in the left or right regular representation
    Repr {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_enum)]
        side: ActionSide,
        #[arg(long)]
        element: String,
    },
    /// Check U M_f = N_f U on basis elements and random elements
    CheckIntertwine {
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites; exits 4 if any check fails
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pair: Option<PathBuf>,
        /// Convolution rule used by the algebra checks
        #[arg(long, value_enum, default_value = "right-coset")]
        rule: RuleChoice,
    },
    /// Operator norm of an element's representation matrix
    Norm {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "left")]
        side: ActionSide,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    /// Stdout produced before failing (verification reports).
    stdout: String,
}

impl Failure {
    fn usage(kind: &'static str, message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, kind, message: message.into(), stdout: String::new() }
    }

    fn domain(kind: &'static str, message: impl Into<String>) -> Self {
        Failure { code: EXIT_DOMAIN, kind, message: message.into(), stdout: String::new() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let kind = match &e {
            CoreError::GroupTooLarge { .. } => "GroupTooLarge",
            CoreError::InvalidPermutation(_) => "InvalidPermutation",
            CoreError::DegreeMismatch { .. } => "DegreeMismatch",
            CoreError::NotAMember(_) => "NotAMember",
            CoreError::PairMismatch => "PairMismatch",
            CoreError::CycleSyntax { .. } => return Failure::usage("SyntaxError", e.to_string()),
            CoreError::PointOutOfRange { .. } => "PointOutOfRange",
            CoreError::NonSquare { .. } => "NonSquare",
            CoreError::NoConvergence { .. } => "NoConvergence",
            CoreError::Codec(_) => return Failure::usage("MalformedElement", e.to_string()),
        };
        Failure::domain(kind, e.to_string())
    }
}

impl From<PairSpecError> for Failure {
    fn from(e: PairSpecError) -> Self {
        match e {
            PairSpecError::Syntax { .. } => Failure::usage("SyntaxError", e.to_string()),
            PairSpecError::Semantic { .. } => Failure::domain("SemanticError", e.to_string()),
            PairSpecError::Group(inner) => inner.into(),
        }
    }
}

fn error_line(kind: &str, message: &str, code: i32) -> String {
    let v = json!({ "error": kind, "message": message, "exit_code": code });
    format!("{}\n", serde_json::to_string(&v).expect("json"))
}

fn emit(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("json"))
}

/// Parses `HECKE_GROUP_CAP`-style overrides.
pub fn config_from_cap(cap: Option<&str>) -> Result<GroupConfig, String> {
    match cap {
        None => Ok(GroupConfig { cap: DEFAULT_GROUP_CAP }),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c >= 1)
            .map(|cap| GroupConfig { cap })
            .ok_or_else(|| format!("{CAP_ENV} must be a positive integer, got {s:?}")),
    }
}

/// Reads the group cap from the environment and runs `argv`.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cap = std::env::var(CAP_ENV).ok();
    dispatch_with_cap(argv, cap.as_deref())
}

pub fn dispatch_with_cap<I, T>(argv: I, cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
                }
                kind => {
                    let label = match kind {
                        ErrorKind::InvalidSubcommand => "UnknownSubcommand",
                        _ => "UsageError",
                    };
                    let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
                    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: error_line(label, &first, EXIT_USAGE) }
                }
            };
        }
    };
    let config = match config_from_cap(cap) {
        Ok(c) => c,
        Err(msg) => {
            return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: error_line("UsageError", &msg, EXIT_USAGE) }
        }
    };
    match run(cli.command, config) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: f.stdout, stderr: error_line(f.kind, &f.message, f.code) },
    }
}

fn load_pair(path: &PathBuf, config: GroupConfig) -> Result<Arc<HeckePair>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage("IoError", format!("{}: {e}", path.display())))?;
    Ok(parse_pair_spec(&text)?.build(config)?)
}

fn parse_element(pair: &Arc<HeckePair>, text: &str) -> Result<ExactHeckeElement, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Failure::usage("MalformedElement", format!("element JSON: {e}")))?;
    Ok(element_from_json(pair, &value)?)
}

fn class_table(pair: &HeckePair) -> Vec<Value> {
    let d = pair.double_cosets();
    (0..d.len())
        .map(|k| {
            json!({
                "rep": pair.group().element(d.rep(k)).to_cycle_string(),
                "size": d.size(k),
                "left_count": d.left_count(k),
                "right_count": d.right_count(k),
            })
        })
        .collect()
}

fn run(command: Command, config: GroupConfig) -> Result<String, Failure> {
    match command {
        Command::Cosets { pair } => {
            let pair = load_pair(&pair, config)?;
            Ok(emit(&json!({
                "n_right": pair.right_cosets().len(),
                "n_left": pair.left_cosets().len(),
                "n_double": pair.dimension(),
                "double_classes": class_table(&pair),
            })))
        }
        Command::DoubleCosets { pair } => {
            let pair = load_pair(&pair, config)?;
            Ok(emit(&json!({ "n_double": pair.dimension(), "double_classes": class_table(&pair) })))
        }
        Command::StructureConstants { pair } => {
            let pair = load_pair(&pair, config)?;
            Ok(emit(&json!(structure_constants(&pair).as_nested())))
        }
        Command::Convolve { pair, f1, f2 } => {
            let pair = load_pair(&pair, config)?;
            let a = parse_element(&pair, &f1)?;
            let b = parse_element(&pair, &f2)?;
            Ok(emit(&element_to_json(&a.convolve(&b)?)))
        }
        Command::Repr { pair, side, element } => {
            let pair = load_pair(&pair, config)?;
            let f = parse_element(&pair, &element)?;
            let m = match side {
                ActionSide::Left => left_action_matrix(&f),
                ActionSide::Right => right_action_matrix(&f),
            };
            Ok(emit(&matrix_to_json(&m)))
        }
        Command::Norm { pair, element, side, tol } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::usage("UsageError", "--tol must be positive"));
            }
            let pair = load_pair(&pair, config)?;
            let f = parse_element(&pair, &element)?;
            let m = match side {
                ActionSide::Left => left_action_matrix(&f),
                ActionSide::Right => right_action_matrix(&f),
            };
            Ok(emit(&json!(operator_norm(&m, tol)?)))
        }
        Command::CheckIntertwine { pair, trials, seed } => {
            let pairs = match pair {
                Some(p) => vec![load_pair(&p, config)?],
                None => roster::builtin(),
            };
            let mut holds = true;
            for pair in &pairs {
                holds &= intertwines_everywhere(pair, trials, seed)?;
            }
            let out = emit(&json!({ "holds": holds, "trials": trials }));
            if holds {
                Ok(out)
            } else {
                Err(Failure {
                    code: EXIT_VERIFICATION,
                    kind: "VerificationFailed",
                    message: "intertwining identity failed".into(),
                    stdout: out,
                })
            }
        }
        Command::Verify { suite, trials, seed, pair, rule } => {
            let pairs = match pair {
                Some(p) => vec![load_pair(&p, config)?],
                None => roster::builtin(),
            };
            let rule: &dyn ConvolutionRule<QComplex> = match rule {
                RuleChoice::RightCoset => &RightCosetRule,
                RuleChoice::LeftCoset => &LeftCosetRule,
            };
            let reports: Vec<VerificationReport> = pairs
                .iter()
                .map(|pair| match suite {
                    Suite::Algebra => verify_star_algebra(pair, trials, seed, Some(rule)),
                    Suite::Representation => verify_representation::<QComplex>(pair, trials, seed),
                    Suite::All => verify_all(pair, trials, seed, Some(rule)),
                })
                .collect();
            let passed = reports.iter().all(|r| r.passed);
            let suite_name = match suite {
                Suite::Algebra => "algebra",
                Suite::Representation => "representation",
                Suite::All => "all",
            };
            let out = emit(&json!({
                "suite": suite_name,
                "seed": seed,
                "trials": trials,
                "passed": passed,
                "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
            }));
            if passed {
                Ok(out)
            } else {
                let failed: Vec<String> = reports
                    .iter()
                    .flat_map(|r| r.failures().map(move |c| format!("{}: {}", r.pair, c.name)))
                    .collect();
                Err(Failure {
                    code: EXIT_VERIFICATION,
                    kind: "VerificationFailed",
                    message: failed.join("; "),
                    stdout: out,
                })
            }
        }
    }
}

fn intertwines_everywhere(pair: &Arc<HeckePair>, trials: usize, seed: u64) -> Result<bool, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = (0..pair.dimension()).map(|k| ExactHeckeElement::basis(pair, k));
    let random: Vec<ExactHeckeElement> = (0..trials).map(|_| random_element(pair, &mut rng)).collect();
    for f in basis.chain(random) {
        if !check_intertwining(&f)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

