//! Specificity taxonomies.
//!
//! Every generalizable slot of a statement is governed by one strict
//! ordering: nouns by `kind_of`, places by `part_of`, verbs by `way_of`.
//! Each ordering is a DAG whose transitive closure is maintained
//! incrementally as edges are added.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// An interned symbol for a noun, verb, place, or subject.
///
/// Identity is the case-folded `id`; `display` keeps the spelling that
/// introduced the term and is only used for rendering.
#[derive(Clone)]
pub struct Term {
    id: Arc<str>,
    display: Arc<str>,
}

impl Term {
    /// Creates a term from its source spelling.
    ///
    /// Whitespace runs are joined with underscores and the id is lowercased.
    /// Panics on an empty or all-whitespace name.
    pub fn new(name: &str) -> Self {
        let display = name.split_whitespace().collect::<Vec<_>>().join("_");
        assert!(!display.is_empty(), "term name must not be empty");
        Term {
            id: display.to_lowercase().into(),
            display: display.into(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn display(&self) -> &str {
        &self.display
    }

    /// Display spelling with underscores turned into spaces.
    pub fn words(&self) -> String {
        self.display.replace('_', " ")
    }

    /// Same identity, different display spelling.
    pub(crate) fn with_display(&self, display: &Arc<str>) -> Self {
        Term {
            id: self.id.clone(),
            display: display.clone(),
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Term {}

impl std::hash::Hash for Term {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.id.cmp(&other.id)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display)
    }
}

impl From<&str> for Term {
    fn from(name: &str) -> Self {
        Term::new(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// noun < noun, including individual-to-class declarations
    KindOf,
    /// place < place
    PartOf,
    /// verb < verb
    WayOf,
}

impl RelationKind {
    pub const ALL: [RelationKind; 3] = [
        RelationKind::KindOf,
        RelationKind::PartOf,
        RelationKind::WayOf,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            RelationKind::KindOf => "kind",
            RelationKind::PartOf => "part",
            RelationKind::WayOf => "way",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::KindOf => "kind_of",
            RelationKind::PartOf => "part_of",
            RelationKind::WayOf => "way_of",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaxonomyError {
    #[error("{kind} edge from `{term}` to itself")]
    SelfLoop { kind: RelationKind, term: Term },
    #[error("{kind} edge {child} < {parent} would create a cycle")]
    Cycle {
        kind: RelationKind,
        child: Term,
        parent: Term,
    },
    #[error("`{to}` is not above `{from}` under {kind}")]
    NoPath {
        kind: RelationKind,
        from: Term,
        to: Term,
    },
}

#[derive(Debug, Clone, Default)]
struct Graph {
    parents: BTreeMap<Term, BTreeSet<Term>>,
    children: BTreeMap<Term, BTreeSet<Term>>,
    ancestors: BTreeMap<Term, BTreeSet<Term>>,
    descendants: BTreeMap<Term, BTreeSet<Term>>,
}

impl Graph {
    fn add(&mut self, child: &Term, parent: &Term) {
        if !self
            .parents
            .entry(child.clone())
            .or_default()
            .insert(parent.clone())
        {
            return;
        }
        self.children
            .entry(parent.clone())
            .or_default()
            .insert(child.clone());

        let mut lower = self.descendants.get(child).cloned().unwrap_or_default();
        lower.insert(child.clone());
        let mut upper = self.ancestors.get(parent).cloned().unwrap_or_default();
        upper.insert(parent.clone());

        for d in &lower {
            self.ancestors
                .entry(d.clone())
                .or_default()
                .extend(upper.iter().cloned());
        }
        for a in &upper {
            self.descendants
                .entry(a.clone())
                .or_default()
                .extend(lower.iter().cloned());
        }
    }
}

/// Strict specificity edges per relation kind, with their transitive closure.
#[derive(Debug, Clone, Default)]
pub struct EdgeStore {
    graphs: BTreeMap<RelationKind, Graph>,
}

static EMPTY: BTreeSet<Term> = BTreeSet::new();

impl EdgeStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `child < parent`. The store is left untouched on error.
    pub fn add_edge(
        &mut self,
        kind: RelationKind,
        child: &Term,
        parent: &Term,
    ) -> Result<(), TaxonomyError> {
        if child == parent {
            return Err(TaxonomyError::SelfLoop {
                kind,
                term: child.clone(),
            });
        }
        if self.strict_ancestors(kind, parent).contains(child) {
            return Err(TaxonomyError::Cycle {
                kind,
                child: child.clone(),
                parent: parent.clone(),
            });
        }
        self.graphs.entry(kind).or_default().add(child, parent);
        Ok(())
    }

    /// Everything strictly above `term`; empty for unknown terms.
    pub fn strict_ancestors(&self, kind: RelationKind, term: &Term) -> &BTreeSet<Term> {
        self.graphs
            .get(&kind)
            .and_then(|g| g.ancestors.get(term))
            .unwrap_or(&EMPTY)
    }

    /// Everything strictly below `term`; empty for unknown terms.
    pub fn strict_descendants(&self, kind: RelationKind, term: &Term) -> &BTreeSet<Term> {
        self.graphs
            .get(&kind)
            .and_then(|g| g.descendants.get(term))
            .unwrap_or(&EMPTY)
    }

    pub fn parents(&self, kind: RelationKind, term: &Term) -> &BTreeSet<Term> {
        self.graphs
            .get(&kind)
            .and_then(|g| g.parents.get(term))
            .unwrap_or(&EMPTY)
    }

    pub fn children(&self, kind: RelationKind, term: &Term) -> &BTreeSet<Term> {
        self.graphs
            .get(&kind)
            .and_then(|g| g.children.get(term))
            .unwrap_or(&EMPTY)
    }

    /// Declared edges of one kind as `(child, parent)` pairs, sorted.
    pub fn edges(&self, kind: RelationKind) -> impl Iterator<Item = (&Term, &Term)> {
        self.graphs
            .get(&kind)
            .into_iter()
            .flat_map(|g| g.parents.iter())
            .flat_map(|(c, ps)| ps.iter().map(move |p| (c, p)))
    }

    /// Upward path from `from` to `to`, both inclusive.
    ///
    /// At each step the lexicographically smallest parent that still reaches
    /// `to` is taken.
    pub fn path_up(
        &self,
        kind: RelationKind,
        from: &Term,
        to: &Term,
    ) -> Result<Vec<Term>, TaxonomyError> {
        if from != to && !self.strict_ancestors(kind, from).contains(to) {
            return Err(TaxonomyError::NoPath {
                kind,
                from: from.clone(),
                to: to.clone(),
            });
        }
        let mut path = vec![from.clone()];
        let mut here = from.clone();
        while &here != to {
            let next = self
                .parents(kind, &here)
                .iter()
                .find(|p| *p == to || self.strict_ancestors(kind, p).contains(to))
                .expect("closure guarantees a reaching parent")
                .clone();
            path.push(next.clone());
            here = next;
        }
        Ok(path)
    }

    /// The most general term above (or equal to) `term`.
    ///
    /// Among several maximal ancestors the smallest id wins.
    pub fn most_general(&self, kind: RelationKind, term: &Term) -> Term {
        self.strict_ancestors(kind, term)
            .iter()
            .find(|a| self.parents(kind, a).is_empty())
            .unwrap_or(term)
            .clone()
    }
}
