//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property failure, 2 input error, 3 search
//! exhausted or goals infeasible, 4 entries that cannot be transformed.

mod file;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::construct::{
    build_four_algorism_with, build_latin_pair, build_two_algorism, ConstructError, DiagPolicy,
    GoalSet, SearchOptions,
};
use crate::digits::DigitAlphabet;
use crate::equation::{parse_equation, EquationError};
use crate::render::render_square;
use crate::square::{Square, TransformError};
use crate::verify::{classify, expected_sums};

pub use file::{read_square, write_square, FileError};
pub use report::{render_text, ReportJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SEARCH: i32 = 3;
pub const EXIT_TRANSFORM: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "updown",
    version,
    about = "Upside-down magic and bimagic squares"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line sums forced on a square holding every string of the given width.
    Sums {
        #[arg(long)]
        alphabet: DigitAlphabet,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        order: usize,
    },
    /// Build a square of order n (two digits) or n² (four digits).
    Build {
        #[arg(long)]
        alphabet: DigitAlphabet,
        #[arg(long)]
        order: usize,
        /// Comma-separated; defaults to magic for order n and
        /// bimagic,blocks,updown for order n².
        #[arg(long, value_delimiter = ',')]
        goals: Vec<Goal>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Search threads; defaults to all cores.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Classify a square file. Exit 0 when it is at least magic.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Turn a square file upside down.
    Rotate {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reflect a square file in a vertical mirror.
    Mirror {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a square file in seven-segment digits.
    Render {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
    /// Check whether an equation also holds upside down.
    Equation { text: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Goal {
    Magic,
    Bimagic,
    Blocks,
    Pandiag,
    Updown,
}

impl Goal {
    fn name(self) -> &'static str {
        match self {
            Goal::Magic => "magic",
            Goal::Bimagic => "bimagic",
            Goal::Blocks => "blocks",
            Goal::Pandiag => "pandiag",
            Goal::Updown => "updown",
        }
    }
}

/// Scheme constraints for the four-digit construction. `updown` adds none;
/// it is checked on the built square.
pub fn goal_set(goals: &[Goal]) -> GoalSet {
    let mut set = GoalSet::rows_cols();
    for g in goals {
        set = match g {
            Goal::Magic | Goal::Bimagic => set.with_diagonals(),
            Goal::Blocks => set.with_blocks(),
            Goal::Pandiag => set.with_diagonals().with_pandiag(),
            Goal::Updown => set,
        };
    }
    set
}

/// A command's failure: the message for stderr and the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, path: Option<&Path>, text: &str) -> Result<(), Failure> {
        match path {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", p.display()))),
            None => {
                let _ = self.out.write_all(text.as_bytes());
                Ok(())
            }
        }
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn load(path: &Path) -> Result<Square, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    read_square(&text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn sums(alphabet: &DigitAlphabet, width: usize, order: usize, io: &mut Io) -> Result<i32, Failure> {
    let p = expected_sums(alphabet, width, order)
        .map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
    let _ = writeln!(io.out, "S1={} S2={}", p.s1, p.s2);
    Ok(EXIT_OK)
}

fn policy_name(p: DiagPolicy) -> &'static str {
    match p {
        DiagPolicy::Transversal => "transversal diagonals",
        DiagPolicy::ConstantAtMean => "constant middle digit on one diagonal of each square",
        DiagPolicy::None => "none",
    }
}

fn build(
    alphabet: &DigitAlphabet,
    order: usize,
    goals: &[Goal],
    out: Option<&Path>,
    threads: Option<usize>,
    io: &mut Io,
) -> Result<i32, Failure> {
    let n = alphabet.len();
    if !matches!(n, 3..=5) {
        return Err(Failure::new(
            EXIT_INPUT,
            format!("alphabet {alphabet} has {n} digits; 3, 4 or 5 are supported"),
        ));
    }
    let wants_updown = goals.contains(&Goal::Updown);
    let sq = if order == n {
        let pair = build_latin_pair(n).map_err(construct_failure)?;
        io.note(&format!(
            "latin pair of order {n}, diagonal policy: {}",
            policy_name(pair.policy())
        ));
        build_two_algorism(alphabet).map_err(construct_failure)?
    } else if order == n * n {
        let set = goal_set(goals);
        let options = SearchOptions { threads };
        let (scheme, sq) =
            build_four_algorism_with(alphabet, set, &options).map_err(construct_failure)?;
        io.note(&format!("goals {set}, scheme {scheme}"));
        sq
    } else {
        return Err(Failure::new(
            EXIT_INPUT,
            format!("order must be {n} or {} for a {n}-digit alphabet", n * n),
        ));
    };

    let report = classify(&sq);
    if wants_updown && !report.flags.upside_down_closed {
        let why = report
            .rotation_note
            .clone()
            .unwrap_or_else(|| "the rotated square drops a magic level".to_string());
        return Err(Failure::new(
            EXIT_SEARCH,
            format!("goal updown cannot be met: {why}"),
        ));
    }
    let flags = report.flags;
    for g in goals {
        let met = match g {
            Goal::Magic => flags.magic,
            Goal::Bimagic => flags.bimagic,
            Goal::Blocks => flags.block_magic,
            Goal::Pandiag => flags.pandiagonal,
            Goal::Updown => true,
        };
        if !met {
            let detail = if order == n && matches!(g, Goal::Magic) {
                format!("; the diagonal policy needs the middle digit to be the mean of {alphabet}")
            } else {
                String::new()
            };
            io.note(&format!("warning: goal {} not met{detail}", g.name()));
        }
    }
    io.emit(out, &write_square(&sq))?;
    Ok(EXIT_OK)
}

fn construct_failure(e: ConstructError) -> Failure {
    let code = match e {
        ConstructError::NotFound { .. } => EXIT_SEARCH,
        _ => EXIT_INPUT,
    };
    Failure::new(code, e.to_string())
}

fn verify(path: &Path, json: bool, io: &mut Io) -> Result<i32, Failure> {
    let sq = load(path)?;
    let report = classify(&sq);
    let doc = ReportJson::new(&sq, &report);
    let text = if json {
        doc.to_json() + "\n"
    } else {
        render_text(&doc, &report)
    };
    io.emit(None, &text)?;
    Ok(if report.flags.magic {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    })
}

fn transform(
    path: &Path,
    out: Option<&Path>,
    f: fn(&Square) -> Result<Square, TransformError>,
    io: &mut Io,
) -> Result<i32, Failure> {
    let sq = load(path)?;
    let turned = f(&sq).map_err(|e| Failure::new(EXIT_TRANSFORM, e.to_string()))?;
    io.emit(out, &write_square(&turned))?;
    Ok(EXIT_OK)
}

fn render(path: &Path, scale: usize, io: &mut Io) -> Result<i32, Failure> {
    if scale == 0 {
        return Err(Failure::new(EXIT_INPUT, "scale must be at least 1"));
    }
    let sq = load(path)?;
    io.emit(None, &render_square(&sq, scale))?;
    Ok(EXIT_OK)
}

fn equation(text: &str, io: &mut Io) -> Result<i32, Failure> {
    let eq = match parse_equation(text) {
        Ok(eq) => eq,
        Err(EquationError::Syntax { position, message }) => {
            return Err(Failure::new(
                EXIT_INPUT,
                format!(
                    "syntax error: {message}\n  {text}\n  {}^",
                    " ".repeat(position)
                ),
            ))
        }
        Err(e) => return Err(Failure::new(EXIT_INPUT, e.to_string())),
    };
    let (l, r, holds) = eq.evaluate();
    match eq.rotate() {
        Ok(turned) => {
            let (tl, tr, turned_holds) = turned.evaluate();
            let valid = holds && turned_holds;
            let _ = writeln!(
                io.out,
                "{} {l}={r} rotated {turned} {tl}={tr}",
                if valid { "valid" } else { "invalid" }
            );
            Ok(if valid { EXIT_OK } else { EXIT_PROPERTY })
        }
        Err(e) => {
            let _ = writeln!(io.out, "non-rotatable {l}={r} ({e})");
            Ok(EXIT_TRANSFORM)
        }
    }
}

/// Runs one command and returns its exit code.
pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err };
    let result = match command {
        Command::Sums {
            alphabet,
            width,
            order,
        } => sums(alphabet, *width, *order, &mut io),
        Command::Build {
            alphabet,
            order,
            goals,
            out,
            threads,
        } => {
            let defaults;
            let goals = if goals.is_empty() {
                defaults = if *order == alphabet.len() {
                    vec![Goal::Magic]
                } else {
                    vec![Goal::Bimagic, Goal::Blocks, Goal::Updown]
                };
                &defaults
            } else {
                goals
            };
            build(alphabet, *order, goals, out.as_deref(), *threads, &mut io)
        }
        Command::Verify { file, json } => verify(file, *json, &mut io),
        Command::Rotate { file, out } => {
            transform(file, out.as_deref(), Square::rotate180, &mut io)
        }
        Command::Mirror { file, out } => transform(file, out.as_deref(), Square::mirror, &mut io),
        Command::Render { file, scale } => render(file, *scale, &mut io),
        Command::Equation { text } => equation(text, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            io.note(&format!("error: {}", f.message));
            f.code
        }
    }
}

/// Parses arguments and runs the command. Usage errors exit with 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            }
        }
    }
}
