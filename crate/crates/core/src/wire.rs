//! JSON records shared by `--format json` output and the HTTP API.

use serde::{Deserialize, Serialize};

use crate::dialogue::{Refinement, Session};
use crate::kb::KnowledgeBase;
use crate::statement::{Atom, Compound, PlaceSlot};
use crate::taxonomy::Term;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacesRecord {
    #[serde(rename = "in")]
    pub inside: Option<String>,
    pub from: Option<String>,
    pub to: Option<String>,
}

/// One atom. Field set and order are part of the public contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomRecord {
    pub subject: String,
    pub negated: bool,
    pub verb: String,
    pub object: Option<String>,
    pub places: PlacesRecord,
    pub tense: String,
    pub condition: Option<String>,
    pub adverb: Option<String>,
    pub can: bool,
    pub rendered: String,
}

fn name(t: &Term) -> String {
    t.display().to_string()
}

impl AtomRecord {
    pub fn new(atom: &Atom, rendered: String) -> Self {
        let place = |s| atom.place(s).map(name);
        AtomRecord {
            subject: name(atom.subject()),
            negated: atom.negated(),
            verb: name(atom.verb()),
            object: atom.object().map(name),
            places: PlacesRecord {
                inside: place(PlaceSlot::In),
                from: place(PlaceSlot::From),
                to: place(PlaceSlot::To),
            },
            tense: atom.tense().keyword().to_string(),
            condition: atom.condition().map(str::to_string),
            adverb: atom.adverb().map(|a| a.keyword().to_string()),
            can: atom.can(),
            rendered,
        }
    }

    pub fn from_kb(kb: &KnowledgeBase, atom: &Atom) -> Self {
        Self::new(atom, kb.render(atom))
    }
}

/// A compound conclusion: either a bare atom record or a junction node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CompoundRecord {
    Atom(AtomRecord),
    Junction {
        junction: String,
        children: Vec<CompoundRecord>,
        rendered: String,
    },
}

impl CompoundRecord {
    pub fn from_kb(kb: &KnowledgeBase, c: &Compound) -> Self {
        match c {
            Compound::Leaf(a) => CompoundRecord::Atom(AtomRecord::from_kb(kb, a)),
            Compound::And(cs) | Compound::Or(cs) => CompoundRecord::Junction {
                junction: if matches!(c, Compound::And(_)) { "and" } else { "or" }.into(),
                children: cs.iter().map(|c| Self::from_kb(kb, c)).collect(),
                rendered: kb.render_compound(c),
            },
            Compound::Fan(_) => Self::from_kb(kb, &crate::statement::distribute(c)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementRecord {
    pub operator: String,
    pub slot: Option<String>,
}

impl From<&Refinement> for RefinementRecord {
    fn from(r: &Refinement) -> Self {
        RefinementRecord {
            operator: r.operator.name().to_string(),
            slot: r.slot.map(|s| s.keyword().to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub session_id: String,
    pub utterance: AtomRecord,
    pub rendered: String,
    pub available_refinements: Vec<RefinementRecord>,
    pub fully_specific: bool,
}

impl SessionRecord {
    pub fn new(kb: &KnowledgeBase, session: &Session) -> Self {
        let rendered = session.render(kb);
        SessionRecord {
            session_id: session.id().to_string(),
            utterance: AtomRecord::new(&session.utterance(), rendered.clone()),
            rendered,
            available_refinements: session
                .available_refinements()
                .iter()
                .map(RefinementRecord::from)
                .collect(),
            fully_specific: session.is_fully_specific(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactRecord {
    pub index: usize,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub error: String,
    pub message: String,
}
