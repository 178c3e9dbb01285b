//! `magic`: generate, verify and enumerate letter-pair magic squares.
//!
//! Exit codes: 0 success (or verdict Magic), 1 verification failure or a
//! family that cannot produce a magic square, 2 usage or input error.

mod document;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use magic_core::enumerate::{census_with, enumerate_family_variant, MAX_ORACLE_ORDER};
use magic_core::{
    canonicalize, editor_square, oracle_search, verify_magic, verify_orthogonality, Error, Family, FamilyId, Order,
    Square, ValueAssignment, Variant, Verdict,
};

pub use document::{
    parse_square, render, AssignmentDoc, ConstraintList, Format, ParseError, Render, SquareDocument, SquareList,
    VerifiedSquare,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "magic", version, about = "Magic squares from superposed Latin and Greek letter grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one square from a family and a value assignment.
    Gen(GenArgs),
    /// Audit a square read from a file, or `-` for stdin.
    Verify(VerifyArgs),
    /// List every square a family produces.
    Enumerate(EnumerateArgs),
    /// Show the conditions a family's figure places on letter values.
    Constraints(ConstraintArgs),
    /// Exhaustively search all magic squares of a small order.
    Oracle(OracleArgs),
    /// List the available families.
    Families(FormatArg),
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct FamilyArg {
    #[arg(long)]
    family: String,
    /// Which letter takes the second main-diagonal cell of the order-4 figure.
    #[arg(long, default_value = "c")]
    variant: Variant,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArg,
    /// Latin letter values in letter order (a,b,c,...).
    #[arg(long)]
    latin: Option<String>,
    /// Greek letter values in letter order (α,β,γ,...).
    #[arg(long)]
    greek: Option<String>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    path: PathBuf,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dedup {
    None,
    Dihedral,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[command(flatten)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "none")]
    dedup: Dedup,
    #[arg(long)]
    count_only: bool,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct ConstraintArgs {
    #[command(flatten)]
    family: FamilyArg,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    order: usize,
    #[arg(long)]
    count_only: bool,
    #[command(flatten)]
    format: FormatArg,
}

/// Outcome of a subcommand: an exit code and a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure { code: EXIT_FAILURE, message: message.into() }
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Verify(a) => cmd_verify(a, stdin, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Constraints(a) => cmd_constraints(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Families(a) => cmd_families(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "magic: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::failed(format!("write failed: {e}")))
}

fn family_id(name: &str) -> Result<FamilyId, Failure> {
    name.parse().map_err(|e: Error| Failure::usage(e.to_string()))
}

fn load_family(arg: &FamilyArg) -> Result<Family, Failure> {
    let id = family_id(&arg.family)?;
    Family::with_variant(id, arg.variant).map_err(|e| Failure::usage(e.to_string()))
}

fn parse_csv(text: &str, flag: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::usage(format!("--{flag}: `{t}` is not an integer"))))
        .collect()
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Outcome {
    let id = family_id(&args.family.family)?;
    if id == FamilyId::E6Editor {
        if args.latin.is_some() || args.greek.is_some() {
            return Err(Failure::usage("e6.editor is a fixed square and takes no assignment"));
        }
        let doc = SquareDocument::from_square(&editor_square()).with_family(id.as_str());
        emit(out, &render(&doc, args.format.format))?;
        return Ok(EXIT_OK);
    }
    let family = load_family(&args.family)?;
    let ortho = verify_orthogonality(family.figure());
    if !ortho.ok {
        let pairs: Vec<String> = ortho
            .duplicate_pairs
            .iter()
            .map(|((l, g), _)| {
                format!("{}{}", magic_core::model::latin_letter(*l), magic_core::model::greek_letter(*g))
            })
            .collect();
        return Err(Failure::failed(format!(
            "family {id} is not orthogonal (repeated pairs: {}); it cannot yield a magic square",
            pairs.join(", ")
        )));
    }
    let order = family.figure().order();
    let va = match (&args.latin, &args.greek) {
        (Some(l), Some(g)) => ValueAssignment::new(order, parse_csv(l, "latin")?, parse_csv(g, "greek")?)
            .map_err(|e| Failure::usage(e.to_string()))?,
        (None, None) => family
            .assignments()
            .map_err(|e| Failure::usage(e.to_string()))?
            .next()
            .ok_or_else(|| Failure::failed(format!("no assignment satisfies the constraints of {id}")))?,
        _ => return Err(Failure::usage("--latin and --greek must be given together")),
    };
    let square = family.build(&va).map_err(|e| Failure::failed(e.to_string()))?;
    let doc = SquareDocument::from_square(&square).with_family(id.as_str()).with_assignment(&va);
    emit(out, &render(&doc, args.format.format))?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let mut text = String::new();
    if args.path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(&args.path).map_err(|e| Failure::usage(format!("{}: {e}", args.path.display())))?;
    }
    let doc = parse_square(&text).map_err(|e| Failure::usage(e.to_string()))?;
    let square = doc.to_square();
    let report = verify_magic(&square);
    emit(out, &render(&VerifiedSquare { square: &square, report: &report }, args.format.format))?;
    Ok(if report.verdict == Verdict::Magic { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_enumerate(args: EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let id = family_id(&args.family.family)?;
    let not_enumerable = |e: Error| match e {
        Error::NotEnumerable(FamilyId::E6Paired) => {
            Failure::failed("e6.paired is not orthogonal and yields no magic squares")
        }
        other => Failure::usage(other.to_string()),
    };
    let format = args.format.format;
    if args.count_only {
        let census = census_with(id, args.family.variant, true).map_err(not_enumerable)?;
        emit(out, &render(&census, format))?;
        return Ok(EXIT_OK);
    }
    let squares = enumerate_family_variant(id, args.family.variant).map_err(not_enumerable)?;
    let listed: Vec<Square> = match args.dedup {
        Dedup::None => squares,
        Dedup::Dihedral => {
            let mut forms: Vec<Square> = squares.iter().map(|s| canonicalize(s).into_square()).collect();
            forms.sort();
            forms.dedup();
            forms
        }
    };
    let list = SquareList { label: id.as_str().to_string(), squares: listed.iter().collect() };
    emit(out, &render(&list, format))?;
    Ok(EXIT_OK)
}

fn cmd_constraints(args: ConstraintArgs, out: &mut dyn Write) -> Outcome {
    let family = load_family(&args.family)?;
    let list = ConstraintList { family: family.id().as_str(), constraints: family.constraints() };
    emit(out, &render(&list, args.format.format))?;
    Ok(EXIT_OK)
}

fn cmd_oracle(args: OracleArgs, out: &mut dyn Write) -> Outcome {
    if args.order > MAX_ORACLE_ORDER {
        return Err(Failure::usage(format!(
            "--order {}: exhaustive search is limited to order {MAX_ORACLE_ORDER}",
            args.order
        )));
    }
    let order = Order::new(args.order).map_err(|e| Failure::usage(e.to_string()))?;
    let oracle = oracle_search(order).map_err(|e| Failure::usage(e.to_string()))?;
    let format = args.format.format;
    if args.count_only {
        let classes: std::collections::BTreeSet<_> = oracle.squares().iter().map(canonicalize).collect();
        let text = match format {
            Format::Text => format!("order: {}\nsquares: {}\ndihedral classes: {}", order, oracle.len(), classes.len()),
            Format::Structured => serde_json::json!({
                "order": order.get(),
                "squares": oracle.len(),
                "dihedral_classes": classes.len(),
            })
            .to_string(),
        };
        emit(out, &text)?;
        return Ok(EXIT_OK);
    }
    let list = SquareList { label: format!("oracle order {order}"), squares: oracle.canonical_order() };
    emit(out, &render(&list, format))?;
    Ok(EXIT_OK)
}

fn cmd_families(args: FormatArg, out: &mut dyn Write) -> Outcome {
    let text = match args.format {
        Format::Text => FamilyId::ALL
            .iter()
            .map(|id| format!("{:<14} {}  {}", id.as_str(), id.order(), id.description()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Structured => serde_json::to_string_pretty(
            &FamilyId::ALL
                .iter()
                .map(|id| {
                    serde_json::json!({
                        "id": id.as_str(),
                        "order": id.order().get(),
                        "enumerable": id.is_enumerable(),
                        "description": id.description(),
                    })
                })
                .collect::<Vec<_>>(),
        )
        .expect("json values serialize"),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}
