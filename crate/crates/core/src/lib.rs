//! Deductive reasoning with verbs.
//!
//! Statements are built from a subject, a verb, an object, and places. Each
//! of the verb, object, and place slots is ordered by specificity (`fly <
//! travel`, `potato < vegetable`, `Tokyo < Japan`), and a true statement
//! stays true when any slot is made more general. Negated statements go the
//! other way. On top of this sit the And/Or distributive laws, fuzzy
//! frequency adverbs keyed by subject class, and a dialogue that opens with
//! the most general statement and refines it on request.
//!
//! ```
//! use verblogic::{engine, KnowledgeBase};
//!
//! let kb = KnowledgeBase::parse(
//!     "kind house < property\npart CA < U.S.\nway buy < own\nfact I future buy house in CA\n",
//! )
//! .unwrap();
//! let fact = kb.facts()[0].as_leaf().unwrap();
//! let conclusions = engine::derive_conclusions(&kb, fact).unwrap();
//! assert_eq!(conclusions.len(), 7);
//! assert!(conclusions.iter().any(|c| kb.render(c) == "I will own a property in U.S."));
//! ```

pub mod cli;
pub mod dialogue;
pub mod dsl;
pub mod engine;
pub mod fuzzy;
pub mod kb;
pub mod server;
pub mod statement;
pub mod taxonomy;
pub mod wire;

pub use dialogue::{open_session, QuestionOperator, Session};
pub use engine::{derive_all, derive_conclusions, entails, specialize_negative, Axis};
pub use kb::KnowledgeBase;
pub use statement::{Atom, Compound, PlaceSlot, Tense};
pub use taxonomy::{EdgeStore, RelationKind, Term};
