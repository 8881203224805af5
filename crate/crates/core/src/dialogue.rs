//! Refinement dialogues.
//!
//! A session opens on the most general statement the fact supports and walks
//! back toward the fact one taxonomy step per question: `HOW` on the verb,
//! `WHICH PART` on a place, `WHICH KIND` on the object.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::engine::Axis;
use crate::kb::KnowledgeBase;
use crate::statement::{Atom, PlaceSlot, RenderStyle};
use crate::taxonomy::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuestionOperator {
    How,
    WhichPart,
    WhichKind,
}

impl QuestionOperator {
    pub fn name(self) -> &'static str {
        match self {
            QuestionOperator::How => "HOW",
            QuestionOperator::WhichPart => "WHICH_PART",
            QuestionOperator::WhichKind => "WHICH_KIND",
        }
    }

    /// Accepts `HOW`, `WHICH_PART`/`WHICHPART`, `WHICH_KIND`/`WHAT_KIND`,
    /// case-insensitively.
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "HOW" => Some(QuestionOperator::How),
            "WHICH_PART" | "WHICHPART" => Some(QuestionOperator::WhichPart),
            "WHICH_KIND" | "WHICHKIND" | "WHAT_KIND" | "WHATKIND" => Some(QuestionOperator::WhichKind),
            _ => None,
        }
    }
}

impl fmt::Display for QuestionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A question that can currently be asked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Refinement {
    pub operator: QuestionOperator,
    pub slot: Option<PlaceSlot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DialogueError {
    #[error("dialogue over negated facts is not supported")]
    NegatedFact,
    #[error("{0} is already fully specific")]
    FullySpecific(String),
    #[error("WHICH_PART needs a slot (in, from, or to): several places are present")]
    AmbiguousSlot,
    #[error("the statement has no {0} to refine")]
    AxisEmpty(String),
}

impl DialogueError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            DialogueError::NegatedFact => "negated_fact",
            DialogueError::FullySpecific(_) => "fully_specific",
            DialogueError::AmbiguousSlot => "ambiguous_slot",
            DialogueError::AxisEmpty(_) => "axis_empty",
        }
    }
}

fn axis_name(axis: Axis) -> String {
    match axis {
        Axis::Verb => "verb".into(),
        Axis::Object => "object".into(),
        Axis::Place(slot) => format!("`{slot}` place"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct AxisPath {
    axis: Axis,
    // from the fact's term up to the opening term
    path: Vec<Term>,
    cursor: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Session {
    id: String,
    fact: Atom,
    axes: Vec<AxisPath>,
}

static NEXT_SESSION: AtomicU64 = AtomicU64::new(1);

/// Opens a dialogue at the most general statement derivable from `fact`.
pub fn open_session(kb: &KnowledgeBase, fact: &Atom) -> Result<Session, DialogueError> {
    if fact.negated() {
        return Err(DialogueError::NegatedFact);
    }
    let tax = kb.taxonomy();
    let axes = Axis::occupied(fact)
        .map(|axis| {
            let term = axis.term(fact).expect("occupied");
            let top = tax.most_general(axis.relation(), term);
            let path = tax
                .path_up(axis.relation(), term, &top)
                .expect("most general term is reachable");
            AxisPath {
                axis,
                cursor: path.len() - 1,
                path,
            }
        })
        .collect();
    let n = NEXT_SESSION.fetch_add(1, Ordering::Relaxed);
    Ok(Session {
        id: format!("s{n:08x}"),
        fact: fact.clone(),
        axes,
    })
}

impl Session {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn fact(&self) -> &Atom {
        &self.fact
    }

    /// The statement the engine is currently making.
    pub fn utterance(&self) -> Atom {
        self.axes.iter().fold(self.fact.clone(), |atom, a| {
            a.axis.replace(&atom, a.path[a.cursor].clone())
        })
    }

    /// True while nothing has been refined and there is something to refine.
    pub fn is_opening(&self) -> bool {
        self.axes.iter().all(|a| a.cursor + 1 == a.path.len())
            && self.axes.iter().any(|a| a.cursor > 0)
    }

    pub fn is_fully_specific(&self) -> bool {
        self.axes.iter().all(|a| a.cursor == 0)
    }

    /// The opening is stated generically ("I will own property in U.S.");
    /// refinements use articles.
    pub fn render(&self, kb: &KnowledgeBase) -> String {
        let style = if self.is_opening() {
            RenderStyle::Generic
        } else {
            RenderStyle::Specific
        };
        kb.render_with(&self.utterance(), style)
    }

    fn axis(&self, axis: Axis) -> Option<&AxisPath> {
        self.axes.iter().find(|a| a.axis == axis)
    }

    fn target(&self, op: QuestionOperator, slot: Option<PlaceSlot>) -> Result<Axis, DialogueError> {
        let axis = match (op, slot) {
            (QuestionOperator::How, _) => Axis::Verb,
            (QuestionOperator::WhichKind, _) => Axis::Object,
            (QuestionOperator::WhichPart, Some(slot)) => Axis::Place(slot),
            (QuestionOperator::WhichPart, None) => {
                let places: Vec<Axis> = self
                    .axes
                    .iter()
                    .map(|a| a.axis)
                    .filter(|a| matches!(a, Axis::Place(_)))
                    .collect();
                match places.as_slice() {
                    [] => return Err(DialogueError::AxisEmpty("place".into())),
                    [one] => *one,
                    _ => return Err(DialogueError::AmbiguousSlot),
                }
            }
        };
        Ok(axis)
    }

    /// Specializes one axis by one step and returns the new utterance.
    pub fn ask(
        &mut self,
        op: QuestionOperator,
        slot: Option<PlaceSlot>,
    ) -> Result<Atom, DialogueError> {
        let axis = self.target(op, slot)?;
        let state = self
            .axes
            .iter_mut()
            .find(|a| a.axis == axis)
            .ok_or_else(|| DialogueError::AxisEmpty(axis_name(axis)))?;
        if state.cursor == 0 {
            return Err(DialogueError::FullySpecific(axis_name(axis)));
        }
        state.cursor -= 1;
        Ok(self.utterance())
    }

    /// Exactly the asks that would currently succeed.
    pub fn available_refinements(&self) -> Vec<Refinement> {
        let open = |axis| self.axis(axis).is_some_and(|a| a.cursor > 0);
        let mut out = Vec::new();
        if open(Axis::Verb) {
            out.push(Refinement {
                operator: QuestionOperator::How,
                slot: None,
            });
        }
        for slot in PlaceSlot::ALL {
            if open(Axis::Place(slot)) {
                out.push(Refinement {
                    operator: QuestionOperator::WhichPart,
                    slot: Some(slot),
                });
            }
        }
        if open(Axis::Object) {
            out.push(Refinement {
                operator: QuestionOperator::WhichKind,
                slot: None,
            });
        }
        out
    }

    /// Asks remaining before the utterance equals the fact.
    pub fn remaining_steps(&self) -> usize {
        self.axes.iter().map(|a| a.cursor).sum()
    }
}
