//! The knowledge-base language and REPL commands.
//!
//! One declaration per line, `#` starts a comment:
//!
//! ```text
//! kind house < property
//! part CA < U.S.
//! way  buy < own
//! isa  my_brother : lawyer
//! iso  eat ~ food
//! subject I : American
//! mu American eat seaweed = 0.1
//! mass chicken
//! fact I future buy house in CA if "I get this job"
//! fact I past bake (potato and apple)
//! ```
//!
//! A fact is `fact <subject> <tense> [not] [can] [<adverb>] <verb> [<object>]
//! [in <t>] [from <t>] [to <t>] [if "<condition>"]`, where the verb and the
//! object may each be a parenthesized `and`/`or` list.

use std::collections::BTreeMap;
use std::fmt;

use crate::dialogue::QuestionOperator;
use crate::fuzzy::FrequencyAdverb;
use crate::kb::KnowledgeBase;
use crate::statement::{Atom, Fan, Junction, PlaceSlot, StatementError, Tense, TermList};
use crate::taxonomy::{RelationKind, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// A positioned message; line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    pub fn error(line: usize, column: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            line,
            column,
            severity: Severity::Error,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.severity, self.message)
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Debug, Clone, PartialEq)]
pub enum Declaration {
    Edge {
        kind: RelationKind,
        child: Term,
        parent: Term,
    },
    Isa {
        individual: Term,
        class: Term,
    },
    Iso {
        verb: Term,
        class: Term,
    },
    Subject {
        subject: Term,
        class: Term,
    },
    Mu {
        class: Term,
        verb: Term,
        noun: Term,
        value: f64,
    },
    Mass(Term),
    Fact(Fan),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Located<T> {
    pub line: usize,
    pub column: usize,
    pub item: T,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct KbSource {
    pub items: Vec<Located<Declaration>>,
}

impl KbSource {
    pub fn declarations(&self) -> impl Iterator<Item = &Declaration> {
        self.items.iter().map(|l| &l.item)
    }

    /// DSL text that parses back to the same declarations.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        for decl in self.declarations() {
            out.push_str(&write_declaration(decl));
            out.push('\n');
        }
        out
    }
}

fn write_list(list: &TermList) -> String {
    let sep = format!(" {} ", list.junction.keyword());
    let terms: Vec<&str> = list.terms.iter().map(Term::display).collect();
    format!("({})", terms.join(&sep))
}

fn write_declaration(decl: &Declaration) -> String {
    match decl {
        Declaration::Edge { kind, child, parent } => {
            format!("{} {child} < {parent}", kind.keyword())
        }
        Declaration::Isa { individual, class } => format!("isa {individual} : {class}"),
        Declaration::Iso { verb, class } => format!("iso {verb} ~ {class}"),
        Declaration::Subject { subject, class } => format!("subject {subject} : {class}"),
        Declaration::Mu {
            class,
            verb,
            noun,
            value,
        } => format!("mu {class} {verb} {noun} = {value}"),
        Declaration::Mass(noun) => format!("mass {noun}"),
        Declaration::Fact(fan) => {
            let a = &fan.template;
            let mut words = vec![
                "fact".to_string(),
                a.subject().display().to_string(),
                a.tense().keyword().to_string(),
            ];
            if a.negated() {
                words.push("not".into());
            }
            if a.can() {
                words.push("can".into());
            }
            if let Some(adverb) = a.adverb() {
                words.push(adverb.keyword().into());
            }
            words.push(match &fan.verbs {
                Some(list) => write_list(list),
                None => a.verb().display().to_string(),
            });
            match (&fan.objects, a.object()) {
                (Some(list), _) => words.push(write_list(list)),
                (None, Some(o)) => words.push(o.display().to_string()),
                (None, None) => {}
            }
            for (slot, place) in a.places().iter() {
                words.push(format!("{slot} {place}"));
            }
            if let Some(c) = a.condition() {
                words.push(format!("if \"{}\"", c.replace('\\', "\\\\").replace('"', "\\\"")));
            }
            words.join(" ")
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Str(String),
    Open,
    Close,
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

const PUNCT: &[char] = &['<', ':', '~', '='];

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !PUNCT.contains(&c) && !"()\"#".contains(c)
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == '(' || c == ')' {
            out.push(Token {
                tok: if c == '(' { Tok::Open } else { Tok::Close },
                column,
            });
            i += 1;
        } else if PUNCT.contains(&c) {
            out.push(Token {
                tok: Tok::Punct(c),
                column,
            });
            i += 1;
        } else if c == '"' {
            let mut text = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => {
                        return Err(Diagnostic::error(lineno, column, "unterminated string"));
                    }
                    Some('"') => break,
                    Some('\\') if i + 1 < chars.len() => {
                        text.push(chars[i + 1]);
                        i += 2;
                    }
                    Some(&ch) => {
                        text.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Token {
                tok: Tok::Str(text),
                column,
            });
        } else {
            let start = i;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Word(chars[start..i].iter().collect()),
                column,
            });
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end_column, |t| t.column)
    }

    fn err(&self, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(self.line, self.column(), message)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn peek_word(&self) -> Option<&'a str> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => Some(w),
            _ => None,
        }
    }

    fn term(&mut self, what: &str) -> Result<Term, Diagnostic> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => {
                self.pos += 1;
                Ok(Term::new(w))
            }
            Some(_) => Err(self.err(format!("expected {what}"))),
            None => Err(self.err(format!("missing {what}"))),
        }
    }

    fn punct(&mut self, p: char) -> Result<(), Diagnostic> {
        match self.peek() {
            Some(Token {
                tok: Tok::Punct(c), ..
            }) if *c == p => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected `{p}`"))),
        }
    }

    fn finish(&self) -> Result<(), Diagnostic> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("unexpected extra input")),
        }
    }

    /// A term or a parenthesized `and`/`or` list of terms.
    fn group(&mut self, what: &str) -> Result<(Term, Option<TermList>), Diagnostic> {
        if !matches!(self.peek(), Some(Token { tok: Tok::Open, .. })) {
            return Ok((self.term(what)?, None));
        }
        self.pos += 1;
        let mut terms = vec![self.term(what)?];
        let mut junction = None;
        loop {
            match self.next() {
                Some(Token { tok: Tok::Close, .. }) => break,
                Some(Token {
                    tok: Tok::Word(w),
                    column,
                }) if w == "and" || w == "or" => {
                    let j = if w == "and" { Junction::And } else { Junction::Or };
                    if junction.is_some_and(|k| k != j) {
                        return Err(Diagnostic::error(
                            self.line,
                            *column,
                            "cannot mix `and` and `or` in one list",
                        ));
                    }
                    junction = Some(j);
                    terms.push(self.term(what)?);
                }
                Some(t) => {
                    return Err(Diagnostic::error(self.line, t.column, "expected `and`, `or`, or `)`"))
                }
                None => return Err(Diagnostic::error(self.line, self.end_column, "unclosed `(`")),
            }
        }
        let first = terms[0].clone();
        let list = junction.map(|junction| TermList { junction, terms });
        Ok((first, list))
    }
}

const KEYWORDS: &str = "kind, part, way, isa, iso, subject, mu, mass, fact";

struct ParseState {
    iso_lines: BTreeMap<Term, usize>,
}

fn parse_line(
    tokens: &[Token],
    line: usize,
    end_column: usize,
    state: &mut ParseState,
) -> Result<Option<Located<Declaration>>, Diagnostic> {
    let mut c = Cursor {
        tokens,
        pos: 0,
        line,
        end_column,
    };
    let Some(first) = c.next() else {
        return Ok(None);
    };
    let column = first.column;
    let keyword = match &first.tok {
        Tok::Word(w) => w.as_str(),
        _ => return Err(Diagnostic::error(line, column, "expected a keyword")),
    };
    let decl = match keyword {
        "kind" | "part" | "way" => {
            let kind = match keyword {
                "kind" => RelationKind::KindOf,
                "part" => RelationKind::PartOf,
                _ => RelationKind::WayOf,
            };
            let child = c.term("child term")?;
            c.punct('<')?;
            let parent = c.term("parent term")?;
            Declaration::Edge { kind, child, parent }
        }
        "isa" => {
            let individual = c.term("individual")?;
            c.punct(':')?;
            let class = c.term("class")?;
            Declaration::Isa { individual, class }
        }
        "iso" => {
            let verb_col = c.column();
            let verb = c.term("verb")?;
            c.punct('~')?;
            let class = c.term("noun class")?;
            if let Some(prev) = state.iso_lines.get(&verb) {
                return Err(Diagnostic::error(
                    line,
                    verb_col,
                    format!("duplicate iso for verb `{verb}` (first declared on line {prev})"),
                ));
            }
            state.iso_lines.insert(verb.clone(), line);
            Declaration::Iso { verb, class }
        }
        "subject" => {
            let subject = c.term("subject")?;
            c.punct(':')?;
            let class = c.term("subject class")?;
            Declaration::Subject { subject, class }
        }
        "mu" => {
            let class = c.term("subject class")?;
            let verb = c.term("verb")?;
            let noun = c.term("noun")?;
            c.punct('=')?;
            let value_col = c.column();
            let raw = c.term("value")?;
            let value: f64 = raw
                .display()
                .parse()
                .map_err(|_| Diagnostic::error(line, value_col, format!("`{raw}` is not a number")))?;
            if !(0.0..=1.0).contains(&value) {
                return Err(Diagnostic::error(line, value_col, "value outside [0,1]"));
            }
            Declaration::Mu {
                class,
                verb,
                noun,
                value,
            }
        }
        "mass" => Declaration::Mass(c.term("noun")?),
        "fact" => Declaration::Fact(parse_fact(&mut c, column)?),
        other => {
            return Err(Diagnostic::error(
                line,
                column,
                format!("unknown keyword `{other}` (expected one of: {KEYWORDS})"),
            ))
        }
    };
    c.finish()?;
    Ok(Some(Located {
        line,
        column,
        item: decl,
    }))
}

fn is_frame_keyword(w: &str) -> bool {
    PlaceSlot::from_keyword(w).is_some() || w == "if"
}

fn parse_fact(c: &mut Cursor<'_>, column: usize) -> Result<Fan, Diagnostic> {
    let subject = c.term("subject")?;
    let tense_col = c.column();
    let tense_word = c.term("tense")?;
    let tense = Tense::from_keyword(tense_word.id()).ok_or_else(|| {
        Diagnostic::error(
            c.line,
            tense_col,
            format!("unknown tense `{tense_word}` (expected past, present, or future)"),
        )
    })?;
    let mut negated = false;
    let mut can = false;
    let mut adverb = None;
    if c.peek_word() == Some("not") {
        c.pos += 1;
        negated = true;
    }
    if c.peek_word() == Some("can") {
        c.pos += 1;
        can = true;
    }
    if let Some(a) = c.peek_word().and_then(FrequencyAdverb::from_keyword) {
        c.pos += 1;
        adverb = Some(a);
    }
    let (verb, verbs) = c.group("verb")?;

    let mut builder = Atom::builder(subject.clone(), verb.clone())
        .tense(tense)
        .negated(negated)
        .can(can);
    if let Some(a) = adverb {
        builder = builder.adverb(a);
    }

    let mut objects = None;
    let starts_object = match c.peek() {
        Some(Token { tok: Tok::Open, .. }) => true,
        Some(Token {
            tok: Tok::Word(w), ..
        }) => !is_frame_keyword(w),
        _ => false,
    };
    if starts_object {
        let (object, list) = c.group("object")?;
        builder = builder.object(object);
        objects = list;
    }

    let mut seen: Vec<PlaceSlot> = Vec::new();
    while let Some(slot) = c.peek_word().and_then(PlaceSlot::from_keyword) {
        if seen.contains(&slot) {
            return Err(c.err(format!("place slot `{slot}` given twice")));
        }
        seen.push(slot);
        c.pos += 1;
        builder = builder.place(slot, c.term("place")?);
    }
    if c.peek_word() == Some("if") {
        c.pos += 1;
        match c.next() {
            Some(Token {
                tok: Tok::Str(s), ..
            }) => builder = builder.condition(s.clone()),
            Some(t) => return Err(Diagnostic::error(c.line, t.column, "expected a quoted condition")),
            None => return Err(Diagnostic::error(c.line, c.end_column, "missing condition after `if`")),
        }
    }
    c.finish()?;
    let template = builder.build().map_err(|e| match e {
        StatementError::EmptyFrame { .. } => Diagnostic::error(
            c.line,
            column,
            format!("fact `{subject} {verb}` needs an object or a place"),
        ),
        other => Diagnostic::error(c.line, column, other.to_string()),
    })?;
    Ok(Fan {
        template,
        verbs,
        objects,
    })
}

/// Parses a whole file, collecting every error.
pub fn parse_kb(text: &str) -> Result<KbSource, Vec<Diagnostic>> {
    let mut items = Vec::new();
    let mut errors = Vec::new();
    let mut state = ParseState {
        iso_lines: BTreeMap::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let end_column = raw.chars().count() + 1;
        let result = tokenize(raw, line)
            .and_then(|tokens| parse_line(&tokens, line, end_column, &mut state));
        match result {
            Ok(Some(item)) => items.push(item),
            Ok(None) => {}
            Err(d) => errors.push(d),
        }
    }
    if errors.is_empty() {
        Ok(KbSource { items })
    } else {
        Err(errors)
    }
}

/// Builds a knowledge base from parsed declarations. Taxonomy cycles and
/// fuzzy conflicts are reported at the line that introduced them.
pub fn load(source: &KbSource) -> Result<KnowledgeBase, Vec<Diagnostic>> {
    let mut kb = KnowledgeBase::new();
    let mut errors = Vec::new();
    for item in &source.items {
        let at = |e: &dyn fmt::Display| Diagnostic::error(item.line, item.column, e.to_string());
        let result = match &item.item {
            Declaration::Edge { kind, child, parent } => {
                kb.add_edge(*kind, child, parent).map_err(|e| at(&e))
            }
            Declaration::Isa { individual, class } => {
                kb.add_individual(individual, class).map_err(|e| at(&e))
            }
            Declaration::Iso { verb, class } => {
                let (verb, class) = (kb.intern(verb), kb.intern(class));
                kb.fuzzy_mut()
                    .declare_isomorphism(verb, class)
                    .map_err(|e| at(&e))
            }
            Declaration::Subject { subject, class } => {
                kb.fuzzy_mut()
                    .declare_subject_class(subject.clone(), class.clone());
                Ok(())
            }
            Declaration::Mu {
                class,
                verb,
                noun,
                value,
            } => kb
                .fuzzy_mut()
                .set_mu(class.clone(), verb.clone(), noun.clone(), *value)
                .map_err(|e| at(&e)),
            Declaration::Mass(noun) => {
                kb.mark_bare(noun);
                Ok(())
            }
            Declaration::Fact(fan) => {
                kb.add_fact(fan.clone().into_compound());
                Ok(())
            }
        };
        if let Err(d) = result {
            errors.push(d);
        }
    }
    if errors.is_empty() {
        Ok(kb)
    } else {
        Err(errors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplCommand {
    Ask(QuestionOperator, Option<PlaceSlot>),
    ShowConclusions,
    ShowFact,
    Annotate { subject: Term, verb: Term, noun: Term },
    Quit,
}

const COMMANDS: &str =
    "HOW | WHICH PART [in|from|to] | WHICHPART [slot] | WHICH KIND | WHAT KIND | conclusions | fact | annotate <subject> <verb> <noun> | quit";

/// Parses one REPL line. Operator words are case-insensitive.
pub fn parse_command(line: &str) -> Result<ReplCommand, Diagnostic> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let upper: Vec<String> = words.iter().map(|w| w.to_ascii_uppercase()).collect();
    let upper: Vec<&str> = upper.iter().map(String::as_str).collect();
    let unknown = || {
        Diagnostic::error(
            1,
            1,
            format!("unknown command `{}`; accepted: {COMMANDS}", line.trim()),
        )
    };
    let slot = |w: Option<&&str>| -> Result<Option<PlaceSlot>, Diagnostic> {
        match w {
            None => Ok(None),
            Some(w) => PlaceSlot::from_keyword(&w.to_ascii_lowercase())
                .map(Some)
                .ok_or_else(unknown),
        }
    };
    let cmd = match upper.as_slice() {
        ["HOW"] => ReplCommand::Ask(QuestionOperator::How, None),
        ["WHICH" | "WHAT", "KIND"] | ["WHICHKIND" | "WHICH_KIND" | "WHAT_KIND"] => {
            ReplCommand::Ask(QuestionOperator::WhichKind, None)
        }
        ["WHICH", "PART", rest @ ..] if rest.len() <= 1 => {
            ReplCommand::Ask(QuestionOperator::WhichPart, slot(words.get(2))?)
        }
        ["WHICHPART" | "WHICH_PART", rest @ ..] if rest.len() <= 1 => {
            ReplCommand::Ask(QuestionOperator::WhichPart, slot(words.get(1))?)
        }
        ["CONCLUSIONS"] => ReplCommand::ShowConclusions,
        ["FACT"] => ReplCommand::ShowFact,
        ["ANNOTATE", _, _, _] => ReplCommand::Annotate {
            subject: Term::new(words[1]),
            verb: Term::new(words[2]),
            noun: Term::new(words[3]),
        },
        ["QUIT" | "EXIT"] => ReplCommand::Quit,
        _ => return Err(unknown()),
    };
    Ok(cmd)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOUSE: &str = "\
# house example
kind house < property   # a house is a kind of a property
part CA < U.S.
way buy < own

fact I future buy house in CA
";

    #[test]
    fn parses_house() {
        let src = parse_kb(HOUSE).unwrap();
        let edges = src
            .declarations()
            .filter(|d| matches!(d, Declaration::Edge { .. }))
            .count();
        let facts = src
            .declarations()
            .filter(|d| matches!(d, Declaration::Fact(_)))
            .count();
        assert_eq!((edges, facts), (3, 1));
        assert_eq!(src.items[0].line, 2);
        assert_eq!(src.items[3].line, 6);
    }

    #[test]
    fn empty_file() {
        assert_eq!(parse_kb("").unwrap(), KbSource::default());
        assert_eq!(parse_kb("\n  # only a comment\n\n").unwrap(), KbSource::default());
    }

    #[test]
    fn mu_out_of_range() {
        let errs = parse_kb("kind a < b\nmu American eat seaweed = 1.5\n").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].line, 2);
        assert_eq!(errs[0].column, 27);
        assert!(errs[0].message.contains("value outside [0,1]"));
    }

    #[test]
    fn collects_all_errors() {
        let text = "frobnicate x\nkind a b\nfact I past eat\nfact I someday eat x\niso eat ~ food\niso eat ~ meal\nmu any eat x = lots\n";
        let errs = parse_kb(text).unwrap_err();
        let lines: Vec<usize> = errs.iter().map(|d| d.line).collect();
        assert_eq!(lines, vec![1, 2, 3, 4, 6, 7]);
        assert!(errs[0].message.starts_with("unknown keyword `frobnicate`"));
        assert_eq!(errs[1].column, 8);
        assert!(errs[2].message.contains("needs an object or a place"));
        assert!(errs[3].message.contains("unknown tense"));
        assert!(errs[4].message.contains("duplicate iso"));
        assert!(errs.iter().all(|d| d.severity == Severity::Error));
    }

    #[test]
    fn fact_forms() {
        let src = parse_kb(
            "fact I past fly from Tokyo to Los_Angeles\n\
             fact I past not cook vegetable\n\
             fact I future buy house in CA if \"I get this job\"\n\
             fact I past bake (potato and apple)\n\
             fact I past (bake or eat) potato\n\
             fact I present can often eat bread\n",
        )
        .unwrap();
        let facts: Vec<&Fan> = src
            .declarations()
            .filter_map(|d| match d {
                Declaration::Fact(f) => Some(f),
                _ => None,
            })
            .collect();
        assert_eq!(facts[0].template.place(PlaceSlot::To).unwrap().display(), "Los_Angeles");
        assert!(facts[0].template.object().is_none());
        assert!(facts[1].template.negated());
        assert_eq!(facts[2].template.condition(), Some("I get this job"));
        assert_eq!(facts[3].objects.as_ref().unwrap().terms.len(), 2);
        assert_eq!(facts[4].verbs.as_ref().unwrap().junction, Junction::Or);
        assert!(facts[5].template.can());
        assert_eq!(facts[5].template.adverb(), Some(FrequencyAdverb::Often));
    }

    #[test]
    fn group_errors() {
        let errs = parse_kb("fact I past bake (a and b or c)\nfact I past bake (a and b\nfact I past fly to x to y\nfact I future buy x if \"open\n").unwrap_err();
        assert_eq!(errs.len(), 4);
        assert!(errs[0].message.contains("cannot mix"));
        assert!(errs[1].message.contains("unclosed"));
        assert!(errs[2].message.contains("given twice"));
        assert!(errs[3].message.contains("unterminated"));
    }

    #[test]
    fn round_trip() {
        let text = "kind house < property\npart CA < U.S.\nway buy < own\nisa my_brother : lawyer\niso eat ~ food\nsubject I : American\nmu American eat seaweed = 0.1\nmass chicken\nfact I future buy house in CA if \"say \\\"hi\\\"\"\nfact I past (bake and eat) (potato or apple)\n";
        let src = parse_kb(text).unwrap();
        let again = parse_kb(&src.to_dsl()).unwrap();
        let a: Vec<&Declaration> = src.declarations().collect();
        let b: Vec<&Declaration> = again.declarations().collect();
        assert_eq!(a, b);
        match &a[8] {
            Declaration::Fact(f) => assert_eq!(f.template.condition(), Some("say \"hi\"")),
            _ => unreachable!(),
        }
    }

    #[test]
    fn load_reports_cycles_at_line() {
        let errs = KnowledgeBase::parse("way fly < travel\n\nway travel < fly\nkind x < x\n").unwrap_err();
        assert_eq!(errs.iter().map(|d| d.line).collect::<Vec<_>>(), vec![3, 4]);
    }

    #[test]
    fn display_casing_from_first_occurrence() {
        let kb = KnowledgeBase::parse("part Tokyo < Japan\nfact I past fly from tokyo to japan\n").unwrap();
        let fact = kb.facts()[0].as_leaf().unwrap();
        assert_eq!(kb.render(fact), "I flew from Tokyo to Japan");
    }

    #[test]
    fn commands() {
        assert_eq!(
            parse_command("WHICH PART from").unwrap(),
            ReplCommand::Ask(QuestionOperator::WhichPart, Some(PlaceSlot::From))
        );
        assert_eq!(
            parse_command("HOW").unwrap(),
            ReplCommand::Ask(QuestionOperator::How, None)
        );
        assert_eq!(
            parse_command("whichpart in").unwrap(),
            ReplCommand::Ask(QuestionOperator::WhichPart, Some(PlaceSlot::In))
        );
        assert_eq!(
            parse_command("WHAT KIND").unwrap(),
            ReplCommand::Ask(QuestionOperator::WhichKind, None)
        );
        assert_eq!(parse_command(" conclusions ").unwrap(), ReplCommand::ShowConclusions);
        assert_eq!(parse_command("fact").unwrap(), ReplCommand::ShowFact);
        assert_eq!(parse_command("quit").unwrap(), ReplCommand::Quit);
        assert!(matches!(
            parse_command("annotate I eat chicken").unwrap(),
            ReplCommand::Annotate { .. }
        ));
        let err = parse_command("BANANA").unwrap_err();
        assert!(err.message.contains("unknown command `BANANA`"));
        assert!(err.message.contains("WHICH PART"));
        assert!(parse_command("WHICH PART sideways").is_err());
    }
}
