//! Deduction over statements.
//!
//! A positive fact stays true when any of its verb, object, or place terms is
//! replaced by something more general: flying from Tokyo is traveling from
//! Japan. A negated fact runs the other way: not cooking a vegetable means
//! not baking a potato.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::kb::KnowledgeBase;
use crate::statement::{canonical_form, Atom, Compound, PlaceSlot};
use crate::taxonomy::{RelationKind, Term};

/// One generalizable slot of a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Verb,
    Object,
    Place(PlaceSlot),
}

impl Axis {
    pub const ALL: [Axis; 5] = [
        Axis::Verb,
        Axis::Object,
        Axis::Place(PlaceSlot::In),
        Axis::Place(PlaceSlot::From),
        Axis::Place(PlaceSlot::To),
    ];

    pub fn relation(self) -> RelationKind {
        match self {
            Axis::Verb => RelationKind::WayOf,
            Axis::Object => RelationKind::KindOf,
            Axis::Place(_) => RelationKind::PartOf,
        }
    }

    pub fn term(self, atom: &Atom) -> Option<&Term> {
        match self {
            Axis::Verb => Some(atom.verb()),
            Axis::Object => atom.object(),
            Axis::Place(slot) => atom.place(slot),
        }
    }

    /// Replaces the slot's term. The slot must be occupied.
    pub fn replace(self, atom: &Atom, term: Term) -> Atom {
        match self {
            Axis::Verb => atom.with_verb(term),
            Axis::Object => atom.with_object(term),
            Axis::Place(slot) => atom.with_place(slot, term),
        }
    }

    /// Axes occupied in `atom`, in canonical order.
    pub fn occupied(atom: &Atom) -> impl Iterator<Item = Axis> + '_ {
        Axis::ALL.into_iter().filter(|a| a.term(atom).is_some())
    }
}

/// Canonical atoms in lexicographic order; never contains the source fact.
pub type ConclusionSet = BTreeSet<Atom>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("fact is negated; negated facts specialize instead of generalizing")]
    NegatedFact,
    #[error("fact is not negated; only negated facts specialize")]
    PositiveFact,
}

#[derive(Clone, Copy)]
enum Direction {
    Up,
    Down,
}

fn vary(kb: &KnowledgeBase, fact: &Atom, direction: Direction) -> ConclusionSet {
    let mut frontier = vec![fact.clone()];
    for axis in Axis::occupied(fact) {
        let term = axis.term(fact).expect("occupied");
        let tax = kb.taxonomy();
        let options = match direction {
            Direction::Up => tax.strict_ancestors(axis.relation(), term),
            Direction::Down => tax.strict_descendants(axis.relation(), term),
        };
        let mut next = Vec::with_capacity(frontier.len() * (options.len() + 1));
        for partial in &frontier {
            next.push(partial.clone());
            next.extend(options.iter().map(|o| axis.replace(partial, o.clone())));
        }
        frontier = next;
    }
    let mut out: ConclusionSet = frontier.into_iter().collect();
    out.remove(fact);
    out
}

/// Every statement obtained by independently keeping or generalizing each
/// occupied axis, minus the fact itself.
pub fn derive_conclusions(kb: &KnowledgeBase, fact: &Atom) -> Result<ConclusionSet, EngineError> {
    if fact.negated() {
        return Err(EngineError::NegatedFact);
    }
    Ok(vary(kb, fact, Direction::Up))
}

/// Every statement obtained by independently keeping or specializing each
/// occupied axis of a negated fact, minus the fact itself.
pub fn specialize_negative(kb: &KnowledgeBase, fact: &Atom) -> Result<ConclusionSet, EngineError> {
    if !fact.negated() {
        return Err(EngineError::PositiveFact);
    }
    Ok(vary(kb, fact, Direction::Down))
}

/// Conclusions of an atom in whichever direction its polarity allows.
pub fn conclusions(kb: &KnowledgeBase, fact: &Atom) -> ConclusionSet {
    if fact.negated() {
        vary(kb, fact, Direction::Down)
    } else {
        vary(kb, fact, Direction::Up)
    }
}

/// Inference through And/Or: each leaf of the canonical fact is replaced by
/// itself or one of its conclusions.
pub fn derive_all(kb: &KnowledgeBase, fact: &Compound) -> BTreeSet<Compound> {
    let canonical = canonical_form(fact);
    let choices: Vec<Vec<Atom>> = canonical
        .leaves()
        .into_iter()
        .map(|leaf| {
            std::iter::once(leaf.clone())
                .chain(conclusions(kb, leaf))
                .collect()
        })
        .collect();

    let mut out = BTreeSet::new();
    let mut index = vec![0usize; choices.len()];
    loop {
        let mut leaf = 0;
        let candidate = canonical.map_leaves(&mut |_| {
            let atom = choices[leaf][index[leaf]].clone();
            leaf += 1;
            atom
        });
        out.insert(canonical_form(&candidate));

        // odometer over the choice lists
        let mut pos = 0;
        loop {
            if pos == index.len() {
                out.remove(&canonical);
                return out;
            }
            index[pos] += 1;
            if index[pos] < choices[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

pub fn entails(kb: &KnowledgeBase, fact: &Compound, candidate: &Compound) -> bool {
    let candidate = canonical_form(candidate);
    canonical_form(fact) == candidate || derive_all(kb, fact).contains(&candidate)
}
