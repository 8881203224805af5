//! Statements built by applying a verb to a noun frame, plus the And/Or
//! algebra over them.
//!
//! An [`Atom`] is one subject-verb-frame statement. A [`Compound`] is a tree
//! of atoms joined by `and`/`or`; the [`Fan`] node is the parser's shorthand
//! for a verb or object list ("I baked potatoes and apples") and disappears
//! under [`distribute`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::fuzzy::FrequencyAdverb;
use crate::taxonomy::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tense {
    Past,
    Present,
    Future,
}

impl Tense {
    pub const ALL: [Tense; 3] = [Tense::Past, Tense::Present, Tense::Future];

    pub fn keyword(self) -> &'static str {
        match self {
            Tense::Past => "past",
            Tense::Present => "present",
            Tense::Future => "future",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Tense::ALL.into_iter().find(|t| t.keyword() == s)
    }
}

impl fmt::Display for Tense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaceSlot {
    In,
    From,
    To,
}

impl PlaceSlot {
    pub const ALL: [PlaceSlot; 3] = [PlaceSlot::In, PlaceSlot::From, PlaceSlot::To];

    pub fn keyword(self) -> &'static str {
        match self {
            PlaceSlot::In => "in",
            PlaceSlot::From => "from",
            PlaceSlot::To => "to",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        PlaceSlot::ALL.into_iter().find(|p| p.keyword() == s)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PlaceSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// At most one place term per slot, compared in `in`, `from`, `to` order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Places([Option<Term>; 3]);

impl Places {
    pub fn get(&self, slot: PlaceSlot) -> Option<&Term> {
        self.0[slot.index()].as_ref()
    }

    pub fn set(&mut self, slot: PlaceSlot, term: Option<Term>) {
        self.0[slot.index()] = term;
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Option::is_none)
    }

    /// Occupied slots in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (PlaceSlot, &Term)> {
        PlaceSlot::ALL
            .into_iter()
            .filter_map(|s| self.get(s).map(|t| (s, t)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatementError {
    #[error("statement `{subject} {verb}` has neither an object nor a place")]
    EmptyFrame { subject: Term, verb: Term },
    #[error("place slot `{0}` given twice")]
    DuplicatePlace(PlaceSlot),
}

/// One statement: `subject [not] verb [object] [in/from/to place] [if condition]`.
///
/// Field order is the canonical ordering used for sorting.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    subject: Term,
    negated: bool,
    verb: Term,
    object: Option<Term>,
    places: Places,
    tense: Tense,
    condition: Option<String>,
    adverb: Option<FrequencyAdverb>,
    can: bool,
}

impl Atom {
    pub fn builder(subject: impl Into<Term>, verb: impl Into<Term>) -> AtomBuilder {
        AtomBuilder {
            atom: Atom {
                subject: subject.into(),
                negated: false,
                verb: verb.into(),
                object: None,
                places: Places::default(),
                tense: Tense::Present,
                condition: None,
                adverb: None,
                can: false,
            },
            duplicate: None,
        }
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }
    pub fn negated(&self) -> bool {
        self.negated
    }
    pub fn verb(&self) -> &Term {
        &self.verb
    }
    pub fn object(&self) -> Option<&Term> {
        self.object.as_ref()
    }
    pub fn places(&self) -> &Places {
        &self.places
    }
    pub fn place(&self, slot: PlaceSlot) -> Option<&Term> {
        self.places.get(slot)
    }
    pub fn tense(&self) -> Tense {
        self.tense
    }
    pub fn condition(&self) -> Option<&str> {
        self.condition.as_deref()
    }
    pub fn adverb(&self) -> Option<FrequencyAdverb> {
        self.adverb
    }
    pub fn can(&self) -> bool {
        self.can
    }

    pub fn negate(&self) -> Atom {
        Atom {
            negated: !self.negated,
            ..self.clone()
        }
    }

    pub fn with_verb(&self, verb: Term) -> Atom {
        Atom {
            verb,
            ..self.clone()
        }
    }

    /// Replaces the object. Only meaningful on atoms that already have one.
    pub fn with_object(&self, object: Term) -> Atom {
        Atom {
            object: Some(object),
            ..self.clone()
        }
    }

    pub fn with_place(&self, slot: PlaceSlot, place: Term) -> Atom {
        let mut atom = self.clone();
        atom.places.set(slot, Some(place));
        atom
    }

    pub fn with_tense(&self, tense: Tense) -> Atom {
        Atom {
            tense,
            ..self.clone()
        }
    }

    pub fn with_condition(&self, condition: Option<String>) -> Atom {
        Atom {
            condition,
            ..self.clone()
        }
    }

    pub fn with_adverb(&self, adverb: Option<FrequencyAdverb>) -> Atom {
        Atom {
            adverb,
            ..self.clone()
        }
    }

    pub(crate) fn map_terms(&self, f: &impl Fn(&Term) -> Term) -> Atom {
        let mut places = Places::default();
        for (slot, t) in self.places.iter() {
            places.set(slot, Some(f(t)));
        }
        Atom {
            subject: f(&self.subject),
            verb: f(&self.verb),
            object: self.object.as_ref().map(f),
            places,
            ..self.clone()
        }
    }

    /// Flat `key=value` record in canonical field order.
    pub fn canonical_key(&self) -> String {
        let opt = |t: Option<&Term>| t.map(Term::id).unwrap_or("").to_string();
        format!(
            "subject={}\u{1f}negated={}\u{1f}verb={}\u{1f}object={}\u{1f}in={}\u{1f}from={}\u{1f}to={}\u{1f}tense={}\u{1f}condition={}\u{1f}adverb={}\u{1f}can={}",
            self.subject.id(),
            self.negated,
            self.verb.id(),
            opt(self.object()),
            opt(self.place(PlaceSlot::In)),
            opt(self.place(PlaceSlot::From)),
            opt(self.place(PlaceSlot::To)),
            self.tense,
            self.condition.as_deref().map(|c| format!("\"{c}\"")).unwrap_or_default(),
            self.adverb.map(|a| a.keyword()).unwrap_or(""),
            self.can,
        )
    }
}

#[derive(Debug, Clone)]
pub struct AtomBuilder {
    atom: Atom,
    duplicate: Option<PlaceSlot>,
}

impl AtomBuilder {
    pub fn object(mut self, object: impl Into<Term>) -> Self {
        self.atom.object = Some(object.into());
        self
    }

    pub fn place(mut self, slot: PlaceSlot, place: impl Into<Term>) -> Self {
        if self.atom.places.get(slot).is_some() {
            self.duplicate.get_or_insert(slot);
        }
        self.atom.places.set(slot, Some(place.into()));
        self
    }

    pub fn inside(self, place: impl Into<Term>) -> Self {
        self.place(PlaceSlot::In, place)
    }

    pub fn from(self, place: impl Into<Term>) -> Self {
        self.place(PlaceSlot::From, place)
    }

    pub fn to(self, place: impl Into<Term>) -> Self {
        self.place(PlaceSlot::To, place)
    }

    pub fn tense(mut self, tense: Tense) -> Self {
        self.atom.tense = tense;
        self
    }

    pub fn negated(mut self, negated: bool) -> Self {
        self.atom.negated = negated;
        self
    }

    pub fn condition(mut self, condition: impl Into<String>) -> Self {
        self.atom.condition = Some(condition.into());
        self
    }

    pub fn adverb(mut self, adverb: FrequencyAdverb) -> Self {
        self.atom.adverb = Some(adverb);
        self
    }

    pub fn can(mut self, can: bool) -> Self {
        self.atom.can = can;
        self
    }

    pub fn build(self) -> Result<Atom, StatementError> {
        if let Some(slot) = self.duplicate {
            return Err(StatementError::DuplicatePlace(slot));
        }
        if self.atom.object.is_none() && self.atom.places.is_empty() {
            return Err(StatementError::EmptyFrame {
                subject: self.atom.subject,
                verb: self.atom.verb,
            });
        }
        Ok(self.atom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Junction {
    And,
    Or,
}

impl Junction {
    pub fn keyword(self) -> &'static str {
        match self {
            Junction::And => "and",
            Junction::Or => "or",
        }
    }

    pub fn dual(self) -> Junction {
        match self {
            Junction::And => Junction::Or,
            Junction::Or => Junction::And,
        }
    }
}

/// A list of terms joined by one junction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermList {
    pub junction: Junction,
    pub terms: Vec<Term>,
}

/// Verb-list and/or object-list shorthand over a template atom.
///
/// `(A and C) * (E or G)` distributes verbs outermost:
/// `(A*E or A*G) and (C*E or C*G)`. The template's own verb/object are
/// ignored for whichever list is present.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fan {
    pub template: Atom,
    pub verbs: Option<TermList>,
    pub objects: Option<TermList>,
}

impl Fan {
    pub fn single(atom: Atom) -> Self {
        Fan {
            template: atom,
            verbs: None,
            objects: None,
        }
    }

    pub fn into_compound(self) -> Compound {
        if self.verbs.is_none() && self.objects.is_none() {
            Compound::Leaf(self.template)
        } else {
            Compound::Fan(self)
        }
    }

    fn negate(&self) -> Fan {
        let flip = |l: &Option<TermList>| {
            l.as_ref().map(|l| TermList {
                junction: l.junction.dual(),
                terms: l.terms.clone(),
            })
        };
        Fan {
            template: self.template.negate(),
            verbs: flip(&self.verbs),
            objects: flip(&self.objects),
        }
    }

    fn distribute(&self) -> Compound {
        if let Some(verbs) = &self.verbs {
            let children = verbs
                .terms
                .iter()
                .map(|v| {
                    Fan {
                        template: self.template.with_verb(v.clone()),
                        verbs: None,
                        objects: self.objects.clone(),
                    }
                    .distribute()
                })
                .collect();
            return Compound::junction(verbs.junction, children);
        }
        if let Some(objects) = &self.objects {
            let children = objects
                .terms
                .iter()
                .map(|o| Compound::Leaf(self.template.with_object(o.clone())))
                .collect();
            return Compound::junction(objects.junction, children);
        }
        Compound::Leaf(self.template.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Compound {
    Leaf(Atom),
    And(Vec<Compound>),
    Or(Vec<Compound>),
    Fan(Fan),
}

impl From<Atom> for Compound {
    fn from(atom: Atom) -> Self {
        Compound::Leaf(atom)
    }
}

impl Compound {
    /// Joins children; a single child is returned as is.
    pub fn junction(junction: Junction, mut children: Vec<Compound>) -> Compound {
        if children.len() == 1 {
            return children.pop().unwrap();
        }
        match junction {
            Junction::And => Compound::And(children),
            Junction::Or => Compound::Or(children),
        }
    }

    pub fn and(children: Vec<Compound>) -> Compound {
        Compound::junction(Junction::And, children)
    }

    pub fn or(children: Vec<Compound>) -> Compound {
        Compound::junction(Junction::Or, children)
    }

    pub fn as_leaf(&self) -> Option<&Atom> {
        match self {
            Compound::Leaf(a) => Some(a),
            _ => None,
        }
    }

    fn split(&self) -> Option<(Junction, &[Compound])> {
        match self {
            Compound::And(c) => Some((Junction::And, c)),
            Compound::Or(c) => Some((Junction::Or, c)),
            _ => None,
        }
    }

    /// Leaves in depth-first order. Fans count as their template.
    pub fn leaves(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Compound::Leaf(a) => out.push(a),
            Compound::Fan(f) => out.push(&f.template),
            Compound::And(c) | Compound::Or(c) => c.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// Rebuilds the tree with every leaf replaced, depth-first.
    pub fn map_leaves(&self, f: &mut impl FnMut(&Atom) -> Atom) -> Compound {
        match self {
            Compound::Leaf(a) => Compound::Leaf(f(a)),
            Compound::Fan(fan) => Compound::Fan(Fan {
                template: f(&fan.template),
                ..fan.clone()
            }),
            Compound::And(c) => Compound::And(c.iter().map(|c| c.map_leaves(f)).collect()),
            Compound::Or(c) => Compound::Or(c.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    pub fn canonical_key(&self) -> String {
        match self {
            Compound::Leaf(a) => format!("[{}]", a.canonical_key()),
            Compound::Fan(f) => {
                let list = |l: &Option<TermList>| match l {
                    None => String::new(),
                    Some(l) => format!(
                        "{}({})",
                        l.junction.keyword(),
                        l.terms.iter().map(Term::id).collect::<Vec<_>>().join(",")
                    ),
                };
                format!(
                    "fan{{{};{};{}}}",
                    f.template.canonical_key(),
                    list(&f.verbs),
                    list(&f.objects)
                )
            }
            Compound::And(c) | Compound::Or(c) => {
                let tag = if matches!(self, Compound::And(_)) { "and" } else { "or" };
                let inner: Vec<String> = c.iter().map(Compound::canonical_key).collect();
                format!("{tag}({})", inner.join(" "))
            }
        }
    }
}

/// Negation: atoms flip polarity, And/Or swap by De Morgan.
pub fn negate(c: &Compound) -> Compound {
    match c {
        Compound::Leaf(a) => Compound::Leaf(a.negate()),
        Compound::Fan(f) => Compound::Fan(f.negate()),
        Compound::And(cs) => Compound::Or(cs.iter().map(negate).collect()),
        Compound::Or(cs) => Compound::And(cs.iter().map(negate).collect()),
    }
}

/// Expands verb and object lists by the four distributive laws.
pub fn distribute(c: &Compound) -> Compound {
    match c {
        Compound::Leaf(_) => c.clone(),
        Compound::Fan(f) => f.distribute(),
        Compound::And(cs) => Compound::And(cs.iter().map(distribute).collect()),
        Compound::Or(cs) => Compound::Or(cs.iter().map(distribute).collect()),
    }
}

/// Distributed, flattened, sorted by canonical key, deduplicated.
pub fn canonical_form(c: &Compound) -> Compound {
    normalize(distribute(c))
}

fn normalize(c: Compound) -> Compound {
    let (junction, children) = match c {
        Compound::And(cs) => (Junction::And, cs),
        Compound::Or(cs) => (Junction::Or, cs),
        Compound::Fan(f) => return normalize(f.distribute()),
        leaf => return leaf,
    };
    let mut flat = Vec::new();
    for child in children.into_iter().map(normalize) {
        match child.split() {
            Some((j, grand)) if j == junction => flat.extend(grand.iter().cloned()),
            _ => flat.push(child),
        }
    }
    let mut keyed: Vec<(String, Compound)> = flat
        .into_iter()
        .map(|c| (c.canonical_key(), c))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Compound::junction(junction, keyed.into_iter().map(|(_, c)| c).collect())
}

/// Inverse of [`distribute`]: regroups sibling leaves that differ only in
/// their object, then in their verb, into fans.
///
/// `canonical_form(factor(c)) == canonical_form(c)` for every `c`.
pub fn factor(c: &Compound) -> Compound {
    let (junction, children) = match c {
        Compound::And(cs) => (Junction::And, cs),
        Compound::Or(cs) => (Junction::Or, cs),
        other => return other.clone(),
    };
    let mut rest = Vec::new();
    let mut leaves = Vec::new();
    for child in children.iter().map(factor) {
        match child {
            Compound::Leaf(a) => leaves.push(a),
            other => rest.push(other),
        }
    }

    let mut out = Vec::new();
    // object lists first: same everything but the object
    let mut by_frame: BTreeMap<Atom, Vec<Term>> = BTreeMap::new();
    let mut loose = Vec::new();
    for a in leaves {
        match a.object() {
            Some(o) => {
                let key = Atom {
                    object: None,
                    ..a.clone()
                };
                by_frame.entry(key).or_default().push(o.clone());
            }
            None => loose.push(a),
        }
    }
    let mut singles = loose;
    for (frame, objects) in by_frame {
        if objects.len() >= 2 {
            out.push(Compound::Fan(Fan {
                template: frame.with_object(objects[0].clone()),
                verbs: None,
                objects: Some(TermList { junction, terms: objects }),
            }));
        } else {
            singles.push(frame.with_object(objects[0].clone()));
        }
    }

    let mut by_rest: BTreeMap<Atom, Vec<Term>> = BTreeMap::new();
    let placeholder = Term::new("_");
    for a in singles {
        let key = a.with_verb(placeholder.clone());
        by_rest.entry(key).or_default().push(a.verb().clone());
    }
    for (frame, verbs) in by_rest {
        if verbs.len() >= 2 {
            out.push(Compound::Fan(Fan {
                template: frame.with_verb(verbs[0].clone()),
                verbs: Some(TermList { junction, terms: verbs }),
                objects: None,
            }));
        } else {
            out.push(Compound::Leaf(frame.with_verb(verbs[0].clone())));
        }
    }
    out.extend(rest);
    Compound::junction(junction, out)
}

/// Verb inflections and article suppression for rendering.
#[derive(Debug, Clone)]
pub struct Lexicon {
    forms: BTreeMap<String, (String, String)>,
    bare: BTreeSet<String>,
}

const IRREGULAR: &[(&str, &str, &str)] = &[
    ("fly", "flew", "flies"),
    ("eat", "ate", "eats"),
    ("buy", "bought", "buys"),
    ("drive", "drove", "drives"),
    ("run", "ran", "runs"),
    ("hit", "hit", "hits"),
    ("punch", "punched", "punches"),
    ("wipe", "wiped", "wipes"),
    ("bake", "baked", "bakes"),
    ("cook", "cooked", "cooks"),
    ("own", "owned", "owns"),
    ("travel", "traveled", "travels"),
    ("move", "moved", "moves"),
];

impl Default for Lexicon {
    fn default() -> Self {
        Lexicon {
            forms: IRREGULAR
                .iter()
                .map(|(b, p, s)| (b.to_string(), (p.to_string(), s.to_string())))
                .collect(),
            bare: BTreeSet::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// Object nouns take an article.
    #[default]
    Specific,
    /// Generic register: bare object nouns ("I will own property in U.S.").
    Generic,
}

impl Lexicon {
    pub fn insert(&mut self, base: &str, past: &str, present: &str) {
        self.forms
            .insert(base.to_lowercase(), (past.to_string(), present.to_string()));
    }

    /// Renders `noun` without an article (mass nouns, named individuals).
    pub fn mark_bare(&mut self, noun: &Term) {
        self.bare.insert(noun.id().to_string());
    }

    pub fn is_bare(&self, noun: &Term) -> bool {
        self.bare.contains(noun.id())
    }

    pub fn past(&self, base: &str) -> String {
        if let Some((past, _)) = self.forms.get(&base.to_lowercase()) {
            return past.clone();
        }
        if base.ends_with('e') {
            format!("{base}d")
        } else {
            format!("{base}ed")
        }
    }

    pub fn present(&self, base: &str) -> String {
        if let Some((_, present)) = self.forms.get(&base.to_lowercase()) {
            return present.clone();
        }
        if ["s", "sh", "ch", "x", "z", "o"].iter().any(|e| base.ends_with(e)) {
            format!("{base}es")
        } else {
            format!("{base}s")
        }
    }
}

fn is_third_person(subject: &Term) -> bool {
    !matches!(subject.id(), "i" | "you" | "we" | "they")
}

fn join(items: &[String], junction: Junction) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        _ => {
            let (last, init) = items.split_last().unwrap();
            format!("{} {} {}", init.join(", "), junction.keyword(), last)
        }
    }
}

fn noun_phrase(noun: &Term, lex: &Lexicon, style: RenderStyle) -> String {
    let words = noun.words();
    if style == RenderStyle::Generic || lex.is_bare(noun) {
        return words;
    }
    let vowel = words
        .chars()
        .next()
        .is_some_and(|c| "aeiouAEIOU".contains(c));
    format!("{} {words}", if vowel { "an" } else { "a" })
}

fn sentence(
    template: &Atom,
    verbs: (&[Term], Junction),
    objects: Option<(&[Term], Junction)>,
    lex: &Lexicon,
    style: RenderStyle,
) -> String {
    let subject = template.subject.words();
    let third = is_third_person(&template.subject);

    // multi-word verbs inflect their head word; the rest trails the object
    let split = |v: &Term| {
        let words = v.words();
        match words.split_once(' ') {
            Some((head, tail)) => (head.to_string(), Some(tail.to_string())),
            None => (words, None),
        }
    };
    let heads: Vec<(String, Option<String>)> = verbs.0.iter().map(split).collect();

    type Inflect = fn(&Lexicon, &str) -> String;
    let (aux, inflect): (Option<&str>, Inflect) = if template.can {
        (
            Some(if template.negated { "cannot" } else { "can" }),
            |_, b| b.to_string(),
        )
    } else {
        match (template.tense, template.negated) {
            (Tense::Future, false) => (Some("will"), |_, b| b.to_string()),
            (Tense::Future, true) => (Some("will not"), |_, b| b.to_string()),
            (Tense::Past, false) => (None, |l, b| l.past(b)),
            (Tense::Past, true) => (Some("did not"), |_, b| b.to_string()),
            (Tense::Present, false) if third => (None, |l, b| l.present(b)),
            (Tense::Present, false) => (None, |_, b| b.to_string()),
            (Tense::Present, true) if third => (Some("does not"), |_, b| b.to_string()),
            (Tense::Present, true) => (Some("do not"), |_, b| b.to_string()),
        }
    };

    let single_verb = heads.len() == 1;
    let verb_phrases: Vec<String> = heads
        .iter()
        .map(|(head, tail)| {
            let inflected = inflect(lex, head);
            match tail {
                Some(tail) if !single_verb => format!("{inflected} {tail}"),
                _ => inflected,
            }
        })
        .collect();

    let mut words: Vec<String> = vec![subject];
    if let Some(aux) = aux {
        words.push(aux.to_string());
    }
    if let Some(adverb) = template.adverb {
        words.push(adverb.phrase().to_string());
    }
    words.push(join(&verb_phrases, verbs.1));

    let object_terms: Vec<Term> = match objects {
        Some((list, _)) => list.to_vec(),
        None => template.object.iter().cloned().collect(),
    };
    if !object_terms.is_empty() {
        let phrases: Vec<String> = object_terms
            .iter()
            .map(|o| noun_phrase(o, lex, style))
            .collect();
        words.push(join(&phrases, objects.map_or(Junction::And, |o| o.1)));
    }
    if single_verb {
        if let Some(tail) = &heads[0].1 {
            words.push(tail.clone());
        }
    }
    for (slot, place) in template.places.iter() {
        words.push(format!("{slot} {}", place.words()));
    }

    let body = words.join(" ");
    match &template.condition {
        Some(c) => format!("If {c}, {body}"),
        None => body,
    }
}

/// English rendering of one atom, with articles on object nouns.
pub fn render_text(atom: &Atom, lex: &Lexicon) -> String {
    render_atom(atom, lex, RenderStyle::Specific)
}

pub fn render_atom(atom: &Atom, lex: &Lexicon, style: RenderStyle) -> String {
    sentence(
        atom,
        (std::slice::from_ref(&atom.verb), Junction::And),
        None,
        lex,
        style,
    )
}

/// English rendering of a compound, factoring shared frames back into verb
/// and object lists ("I cooked vegetable and fruit").
pub fn render_compound(c: &Compound, lex: &Lexicon, style: RenderStyle) -> String {
    fn go(c: &Compound, lex: &Lexicon, style: RenderStyle, nested: bool) -> String {
        match c {
            Compound::Leaf(a) => render_atom(a, lex, style),
            Compound::Fan(f) => {
                let verbs = match &f.verbs {
                    Some(l) => (l.terms.as_slice(), l.junction),
                    None => (std::slice::from_ref(&f.template.verb), Junction::And),
                };
                let objects = f.objects.as_ref().map(|l| (l.terms.as_slice(), l.junction));
                sentence(&f.template, verbs, objects, lex, style)
            }
            Compound::And(cs) | Compound::Or(cs) => {
                let j = if matches!(c, Compound::And(_)) {
                    Junction::And
                } else {
                    Junction::Or
                };
                let parts: Vec<String> = cs.iter().map(|c| go(c, lex, style, true)).collect();
                let text = parts.join(&format!(" {} ", j.keyword()));
                if nested {
                    format!("({text})")
                } else {
                    text
                }
            }
        }
    }
    go(&factor(&canonical_form(c)), lex, style, false)
}
