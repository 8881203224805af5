//! The `verblogic` command line: `check`, `derive`, `ask`, `repl`,
//! `annotate`, and `serve`.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dialogue::{open_session, QuestionOperator, Session};
use crate::dsl::{parse_command, ReplCommand};
use crate::engine;
use crate::fuzzy;
use crate::kb::KnowledgeBase;
use crate::statement::{Compound, PlaceSlot, Tense};
use crate::taxonomy::Term;
use crate::wire::{AtomRecord, CompoundRecord, SessionRecord};

pub const DEFAULT_PORT: u16 = 7878;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "verblogic", version, about = "Reason over noun, place, and verb taxonomies")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct KbFile {
    /// Knowledge-base file
    file: Option<PathBuf>,
    /// Knowledge-base file (alternative to the positional argument)
    #[arg(long = "kb")]
    kb: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and load a knowledge base, reporting diagnostics
    Check(KbFile),
    /// Print every conclusion of every fact
    Derive(KbFile),
    /// Open a dialogue on a fact and apply operators: [FILE] OP...
    /// where OP is HOW, WHICH_PART[:slot], or WHICH_KIND
    Ask {
        #[arg(long = "kb")]
        kb: Option<PathBuf>,
        /// Fact index
        #[arg(long, default_value_t = 0)]
        fact: usize,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Interactive refinement dialogue
    Repl {
        #[command(flatten)]
        kb: KbFile,
        /// Fact index
        #[arg(long, default_value_t = 0)]
        fact: usize,
    },
    /// Frequency statement for a subject, verb, and noun: [FILE] SUBJECT VERB NOUN
    Annotate {
        #[arg(long = "kb")]
        kb: Option<PathBuf>,
        #[arg(long, default_value = "present")]
        tense: String,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Serve the JSON dialogue API
    Serve {
        #[command(flatten)]
        kb: KbFile,
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
    },
}

/// Failure carrying the process exit code.
struct Exit(i32);

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn usage(&mut self, msg: &str) -> Exit {
        let _ = writeln!(self.err, "error: {msg}");
        Exit(2)
    }

    fn fail(&mut self, msg: impl std::fmt::Display) -> Exit {
        let _ = writeln!(self.err, "error: {msg}");
        Exit(1)
    }
}

fn load(io: &mut Io<'_>, path: &Path) -> Result<KnowledgeBase, Exit> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io.fail(format!("{}: {e}", path.display())))?;
    KnowledgeBase::parse(&text).map_err(|diags| {
        for d in diags {
            let _ = writeln!(io.err, "{}:{d}", path.display());
        }
        Exit(1)
    })
}

fn resolve(io: &mut Io<'_>, f: KbFile) -> Result<PathBuf, Exit> {
    match (f.file, f.kb) {
        (Some(p), None) | (None, Some(p)) => Ok(p),
        (Some(_), Some(_)) => Err(io.usage("give the knowledge base either positionally or with --kb, not both")),
        (None, None) => Err(io.usage("missing knowledge-base file")),
    }
}

/// Splits `[FILE] rest...` when the file may instead come from `--kb`.
fn split_file(
    io: &mut Io<'_>,
    kb: Option<PathBuf>,
    mut args: Vec<String>,
) -> Result<(PathBuf, Vec<String>), Exit> {
    match kb {
        Some(p) => Ok((p, args)),
        None if args.is_empty() => Err(io.usage("missing knowledge-base file")),
        None => {
            let file = PathBuf::from(args.remove(0));
            Ok((file, args))
        }
    }
}

fn parse_op(s: &str) -> Option<(QuestionOperator, Option<PlaceSlot>)> {
    let (op, slot) = match s.split_once(':') {
        Some((op, slot)) => (op, Some(PlaceSlot::from_keyword(&slot.to_ascii_lowercase())?)),
        None => (s, None),
    };
    Some((QuestionOperator::parse(op)?, slot))
}

fn leaf_fact<'k>(io: &mut Io<'_>, kb: &'k KnowledgeBase, index: usize) -> Result<&'k crate::statement::Atom, Exit> {
    match kb.facts().get(index) {
        None => Err(io.fail(format!("no fact with index {index} ({} facts loaded)", kb.facts().len()))),
        Some(Compound::Leaf(atom)) => Ok(atom),
        Some(_) => Err(io.fail(format!("fact {index} is compound; dialogue needs a single statement"))),
    }
}

fn emit_json(out: &mut dyn Write, value: &impl serde::Serialize) {
    let _ = writeln!(out, "{}", serde_json::to_string(value).expect("records serialize"));
}

fn derive(io: &mut Io<'_>, kb: &KnowledgeBase, format: OutputFormat) {
    let many = kb.facts().len() > 1;
    for (i, fact) in kb.facts().iter().enumerate() {
        if many && format == OutputFormat::Text {
            let _ = writeln!(io.out, "== fact {i}: {}", kb.render_compound(fact));
        }
        let results: Vec<Compound> = match fact {
            Compound::Leaf(atom) => engine::conclusions(kb, atom)
                .into_iter()
                .map(Compound::Leaf)
                .collect(),
            other => engine::derive_all(kb, other).into_iter().collect(),
        };
        for c in &results {
            match format {
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "{}", kb.render_compound(c));
                }
                OutputFormat::Json => emit_json(io.out, &CompoundRecord::from_kb(kb, c)),
            }
        }
    }
}

fn say(io: &mut Io<'_>, kb: &KnowledgeBase, session: &Session, format: OutputFormat) {
    match format {
        OutputFormat::Text => {
            let _ = writeln!(io.out, "{}", session.render(kb));
        }
        OutputFormat::Json => emit_json(io.out, &SessionRecord::new(kb, session)),
    }
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<(), Exit> {
    let format = cli.format;
    match cli.command {
        Command::Check(f) => {
            let path = resolve(io, f)?;
            let kb = load(io, &path)?;
            match format {
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "OK");
                }
                OutputFormat::Json => emit_json(
                    io.out,
                    &serde_json::json!({"status": "ok", "facts": kb.facts().len()}),
                ),
            }
        }
        Command::Derive(f) => {
            let path = resolve(io, f)?;
            let kb = load(io, &path)?;
            derive(io, &kb, format);
        }
        Command::Ask { kb, fact, args } => {
            let (path, ops) = split_file(io, kb, args)?;
            let ops = ops
                .iter()
                .map(|s| parse_op(s).ok_or_else(|| s.clone()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|s| io.usage(&format!("unknown operator `{s}` (expected HOW, WHICH_PART[:in|from|to], WHICH_KIND)")))?;
            let kb = load(io, &path)?;
            let atom = leaf_fact(io, &kb, fact)?;
            let mut session = open_session(&kb, atom).map_err(|e| io.fail(e))?;
            say(io, &kb, &session, format);
            for (op, slot) in ops {
                session.ask(op, slot).map_err(|e| io.fail(e))?;
                say(io, &kb, &session, format);
            }
        }
        Command::Repl { kb: f, fact } => {
            let path = resolve(io, f)?;
            let kb = load(io, &path)?;
            let atom = leaf_fact(io, &kb, fact)?;
            let session = open_session(&kb, atom).map_err(|e| io.fail(e))?;
            use std::io::IsTerminal;
            let echo = !std::io::stdin().is_terminal();
            Repl::new(&kb, session)
                .run(io.stdin, io.out, echo)
                .map_err(|e| io.fail(e))?;
        }
        Command::Annotate { kb, tense, args } => {
            let (path, words) = split_file(io, kb, args)?;
            let [subject, verb, noun] = words.as_slice() else {
                return Err(io.usage("annotate needs SUBJECT VERB NOUN"));
            };
            let tense = Tense::from_keyword(&tense)
                .ok_or_else(|| io.usage("tense must be past, present, or future"))?;
            let kb = load(io, &path)?;
            let atom = fuzzy::describe(&kb, &Term::new(subject), &Term::new(verb), &Term::new(noun), tense)
                .map_err(|e| io.fail(e))?;
            match format {
                OutputFormat::Text => {
                    let _ = writeln!(io.out, "{}", kb.render(&atom));
                }
                OutputFormat::Json => emit_json(io.out, &AtomRecord::from_kb(&kb, &atom)),
            }
        }
        Command::Serve { kb: f, port } => {
            let path = resolve(io, f)?;
            let kb = Arc::new(load(io, &path)?);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| io.fail(e))?;
            runtime
                .block_on(async {
                    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
                    let _ = writeln!(io.err, "listening on http://{}", listener.local_addr()?);
                    crate::server::serve(kb, listener).await
                })
                .map_err(|e| io.fail(e))?;
        }
    }
    Ok(())
}

/// Runs the command line and returns the exit code: 0 on success, 1 on
/// diagnostics or failed operations, 2 on usage errors.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match execute(cli, &mut io) {
        Ok(()) => 0,
        Err(Exit(code)) => code,
    }
}

/// A line-oriented dialogue: engine lines start with `A: `, the prompt is
/// `B> `.
pub struct Repl<'k> {
    kb: &'k KnowledgeBase,
    session: Session,
}

impl<'k> Repl<'k> {
    pub fn new(kb: &'k KnowledgeBase, session: Session) -> Self {
        Repl { kb, session }
    }

    pub fn session(&self) -> &Session {
        &self.session
    }

    /// Reads commands until `quit` or end of input. With `echo`, each command
    /// is written after the prompt so the output is a complete transcript.
    pub fn run(&mut self, input: &mut dyn BufRead, out: &mut dyn Write, echo: bool) -> std::io::Result<()> {
        writeln!(out, "A: {}", self.session.render(self.kb))?;
        let mut line = String::new();
        loop {
            write!(out, "B> ")?;
            out.flush()?;
            line.clear();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                return Ok(());
            }
            let command = line.trim();
            if echo {
                writeln!(out, "{command}")?;
            }
            if command.is_empty() {
                continue;
            }
            match parse_command(command) {
                Ok(ReplCommand::Quit) => return Ok(()),
                Ok(cmd) => self.respond(cmd, out)?,
                Err(d) => writeln!(out, "! {}", d.message)?,
            }
        }
    }

    fn respond(&mut self, cmd: ReplCommand, out: &mut dyn Write) -> std::io::Result<()> {
        let kb = self.kb;
        match cmd {
            ReplCommand::Ask(op, slot) => match self.session.ask(op, slot) {
                Ok(_) => writeln!(out, "A: {}", self.session.render(kb)),
                Err(e) => writeln!(out, "! {e}"),
            },
            ReplCommand::ShowConclusions => {
                for c in engine::conclusions(kb, self.session.fact()) {
                    writeln!(out, "A: {}", kb.render(&c))?;
                }
                Ok(())
            }
            ReplCommand::ShowFact => writeln!(out, "A: {}", kb.render(self.session.fact())),
            ReplCommand::Annotate { subject, verb, noun } => {
                match fuzzy::describe(kb, &subject, &verb, &noun, Tense::Present) {
                    Ok(atom) => writeln!(out, "A: {}", kb.render(&atom)),
                    Err(e) => writeln!(out, "! {e}"),
                }
            }
            ReplCommand::Quit => Ok(()),
        }
    }
}
