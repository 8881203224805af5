//! Frequency adverbs from fuzzy characteristic values.
//!
//! A verb paired with a noun class ("eat ~ food") licenses statements about
//! any noun under that class. How natural the statement is depends on the
//! characteristic value μ of the noun in the verb's frame, which in turn
//! depends on who the subject is.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::kb::KnowledgeBase;
use crate::statement::{Atom, Tense};
use crate::taxonomy::{RelationKind, Term};

/// The class μ falls back to when the subject has no entry of its own.
pub const DEFAULT_CLASS: &str = "any";

/// Ordered by rank: `Never` lowest, `Often` highest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrequencyAdverb {
    Never,
    Rarely,
    LessLikely,
    MoreOrLess,
    Often,
}

impl FrequencyAdverb {
    /// Highest rank first.
    pub const ALL: [FrequencyAdverb; 5] = [
        FrequencyAdverb::Often,
        FrequencyAdverb::MoreOrLess,
        FrequencyAdverb::LessLikely,
        FrequencyAdverb::Rarely,
        FrequencyAdverb::Never,
    ];

    pub fn rank(self) -> u8 {
        self as u8
    }

    /// Lower bound of the band, inclusive.
    pub fn lower_bound(self) -> f64 {
        match self {
            FrequencyAdverb::Often => 0.7,
            FrequencyAdverb::MoreOrLess => 0.4,
            FrequencyAdverb::LessLikely => 0.2,
            FrequencyAdverb::Rarely => 0.05,
            FrequencyAdverb::Never => 0.0,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            FrequencyAdverb::Often => "often",
            FrequencyAdverb::MoreOrLess => "more_or_less",
            FrequencyAdverb::LessLikely => "less_likely",
            FrequencyAdverb::Rarely => "rarely",
            FrequencyAdverb::Never => "never",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        FrequencyAdverb::ALL.into_iter().find(|a| a.keyword() == s)
    }

    pub fn phrase(self) -> &'static str {
        match self {
            FrequencyAdverb::MoreOrLess => "more or less",
            FrequencyAdverb::LessLikely => "less likely",
            other => other.keyword(),
        }
    }
}

impl fmt::Display for FrequencyAdverb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.phrase())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("value {0} outside [0,1]")]
    Range(f64),
    #[error("verb `{0}` has no isomorphic noun class")]
    NoIsomorphism(Term),
    #[error("`{noun}` is not a kind of `{class}`, the frame of `{verb}`")]
    FrameMismatch { verb: Term, noun: Term, class: Term },
    #[error("verb `{verb}` already paired with `{class}`")]
    DuplicateIsomorphism { verb: Term, class: Term },
}

/// Band lookup. Bands are half-open with the upper band owning its lower
/// endpoint; `often` is closed at 1.
pub fn adverb_for_mu(mu: f64) -> Result<FrequencyAdverb, FuzzyError> {
    if !(0.0..=1.0).contains(&mu) {
        return Err(FuzzyError::Range(mu));
    }
    Ok(FrequencyAdverb::ALL
        .into_iter()
        .find(|a| mu >= a.lower_bound())
        .expect("never band starts at 0"))
}

/// N-V pairs, subject classes, and the μ table.
#[derive(Debug, Clone, Default)]
pub struct FuzzyTables {
    iso: BTreeMap<Term, Term>,
    classes: BTreeMap<Term, Term>,
    mu: BTreeMap<(Term, Term, Term), f64>,
}

impl FuzzyTables {
    pub fn declare_isomorphism(&mut self, verb: Term, class: Term) -> Result<(), FuzzyError> {
        if let Some(existing) = self.iso.get(&verb) {
            return Err(FuzzyError::DuplicateIsomorphism {
                verb,
                class: existing.clone(),
            });
        }
        self.iso.insert(verb, class);
        Ok(())
    }

    pub fn declare_subject_class(&mut self, subject: Term, class: Term) {
        self.classes.insert(subject, class);
    }

    pub fn set_mu(&mut self, class: Term, verb: Term, noun: Term, mu: f64) -> Result<(), FuzzyError> {
        if !(0.0..=1.0).contains(&mu) {
            return Err(FuzzyError::Range(mu));
        }
        self.mu.insert((class, verb, noun), mu);
        Ok(())
    }

    pub fn isomorphic_class(&self, verb: &Term) -> Option<&Term> {
        self.iso.get(verb)
    }

    pub fn subject_class(&self, subject: &Term) -> Option<&Term> {
        self.classes.get(subject)
    }

    pub fn isomorphisms(&self) -> impl Iterator<Item = (&Term, &Term)> {
        self.iso.iter()
    }

    pub fn subject_classes(&self) -> impl Iterator<Item = (&Term, &Term)> {
        self.classes.iter()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Term, &Term, &Term, f64)> {
        self.mu.iter().map(|((c, v, n), mu)| (c, v, n, *mu))
    }

    /// Raw table lookup: subject's class, then the default class, then 0.
    pub fn membership(&self, subject: &Term, verb: &Term, noun: &Term) -> f64 {
        let default = Term::new(DEFAULT_CLASS);
        let key = |class: &Term| (class.clone(), verb.clone(), noun.clone());
        self.subject_class(subject)
            .and_then(|c| self.mu.get(&key(c)))
            .or_else(|| self.mu.get(&key(&default)))
            .copied()
            .unwrap_or(0.0)
    }
}

pub fn membership(kb: &KnowledgeBase, subject: &Term, verb: &Term, noun: &Term) -> f64 {
    kb.fuzzy().membership(subject, verb, noun)
}

fn frame_class<'a>(kb: &'a KnowledgeBase, verb: &Term, noun: &Term) -> Result<&'a Term, FuzzyError> {
    let class = kb
        .fuzzy()
        .isomorphic_class(verb)
        .ok_or_else(|| FuzzyError::NoIsomorphism(verb.clone()))?;
    let under = noun == class
        || kb
            .taxonomy()
            .strict_ancestors(RelationKind::KindOf, noun)
            .contains(class);
    if !under {
        return Err(FuzzyError::FrameMismatch {
            verb: verb.clone(),
            noun: noun.clone(),
            class: class.clone(),
        });
    }
    Ok(class)
}

/// "I often eat chicken": the statement carrying the adverb for its μ.
pub fn annotate(
    kb: &KnowledgeBase,
    subject: &Term,
    verb: &Term,
    noun: &Term,
    tense: Tense,
) -> Result<Atom, FuzzyError> {
    frame_class(kb, verb, noun)?;
    let mu = membership(kb, subject, verb, noun);
    Ok(statement(kb, subject, verb, noun, tense, adverb_for_mu(mu)?))
}

/// Like [`annotate`], but a noun outside the verb's class gets `never`
/// ("I never eat a book") instead of an error.
pub fn describe(
    kb: &KnowledgeBase,
    subject: &Term,
    verb: &Term,
    noun: &Term,
    tense: Tense,
) -> Result<Atom, FuzzyError> {
    match annotate(kb, subject, verb, noun, tense) {
        Err(FuzzyError::FrameMismatch { .. }) => Ok(statement(
            kb,
            subject,
            verb,
            noun,
            tense,
            FrequencyAdverb::Never,
        )),
        other => other,
    }
}

fn statement(
    kb: &KnowledgeBase,
    subject: &Term,
    verb: &Term,
    noun: &Term,
    tense: Tense,
    adverb: FrequencyAdverb,
) -> Atom {
    Atom::builder(kb.intern(subject), kb.intern(verb))
        .object(kb.intern(noun))
        .tense(tense)
        .adverb(adverb)
        .build()
        .expect("object present")
}

/// "I can eat X" is sound when X is in the verb's frame and μ is above the
/// `never` band.
pub fn is_sound_can(kb: &KnowledgeBase, subject: &Term, verb: &Term, noun: &Term) -> bool {
    frame_class(kb, verb, noun).is_ok()
        && adverb_for_mu(membership(kb, subject, verb, noun))
            .is_ok_and(|a| a != FrequencyAdverb::Never)
}
