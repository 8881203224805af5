//! The knowledge base: taxonomies, fuzzy tables, rendering lexicon, and facts.
//!
//! Built once (usually from DSL text) and then shared read-only.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dsl::{self, Diagnostic};
use crate::fuzzy::FuzzyTables;
use crate::statement::{self, Atom, Compound, Lexicon, RenderStyle};
use crate::taxonomy::{EdgeStore, RelationKind, TaxonomyError, Term};

#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    taxonomy: EdgeStore,
    fuzzy: FuzzyTables,
    lexicon: Lexicon,
    facts: Vec<Compound>,
    // first spelling seen for each term id
    spellings: BTreeMap<Term, Arc<str>>,
}

impl KnowledgeBase {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses and loads DSL text.
    pub fn parse(text: &str) -> Result<Self, Vec<Diagnostic>> {
        let source = dsl::parse_kb(text)?;
        dsl::load(&source)
    }

    pub fn taxonomy(&self) -> &EdgeStore {
        &self.taxonomy
    }

    pub fn fuzzy(&self) -> &FuzzyTables {
        &self.fuzzy
    }

    pub fn fuzzy_mut(&mut self) -> &mut FuzzyTables {
        &mut self.fuzzy
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn lexicon_mut(&mut self) -> &mut Lexicon {
        &mut self.lexicon
    }

    pub fn facts(&self) -> &[Compound] {
        &self.facts
    }

    /// The term with its first-seen spelling; unknown terms pass through.
    pub fn intern(&self, term: &Term) -> Term {
        match self.spellings.get(term) {
            Some(display) => term.with_display(display),
            None => term.clone(),
        }
    }

    fn remember(&mut self, term: &Term) -> Term {
        let display = self
            .spellings
            .entry(term.clone())
            .or_insert_with(|| term.display().into());
        term.with_display(display)
    }

    pub fn add_edge(
        &mut self,
        kind: RelationKind,
        child: &Term,
        parent: &Term,
    ) -> Result<(), TaxonomyError> {
        let child = self.remember(child);
        let parent = self.remember(parent);
        self.taxonomy.add_edge(kind, &child, &parent)
    }

    /// An individual belonging to a class ("my brother" is a lawyer).
    /// Individuals render without an article.
    pub fn add_individual(&mut self, individual: &Term, class: &Term) -> Result<(), TaxonomyError> {
        self.add_edge(RelationKind::KindOf, individual, class)?;
        self.lexicon.mark_bare(individual);
        Ok(())
    }

    pub fn mark_bare(&mut self, noun: &Term) {
        self.remember(noun);
        self.lexicon.mark_bare(noun);
    }

    /// Adds a fact and returns its index.
    pub fn add_fact(&mut self, fact: Compound) -> usize {
        let mut remember = |a: &Atom| {
            let mut terms = vec![a.subject().clone(), a.verb().clone()];
            terms.extend(a.object().cloned());
            terms.extend(a.places().iter().map(|(_, t)| t.clone()));
            for t in &terms {
                self.remember(t);
            }
        };
        match &fact {
            Compound::Fan(f) => {
                remember(&f.template);
                let listed = f.verbs.iter().chain(f.objects.iter());
                for t in listed.flat_map(|l| l.terms.iter()).cloned().collect::<Vec<_>>() {
                    self.remember(&t);
                }
            }
            other => other.leaves().into_iter().for_each(remember),
        }
        let fact = self.intern_compound(&fact);
        self.facts.push(fact);
        self.facts.len() - 1
    }

    pub fn intern_atom(&self, atom: &Atom) -> Atom {
        atom.map_terms(&|t| self.intern(t))
    }

    pub fn intern_compound(&self, c: &Compound) -> Compound {
        let mut c = c.map_leaves(&mut |a| self.intern_atom(a));
        if let Compound::Fan(f) = &mut c {
            for list in f.verbs.iter_mut().chain(f.objects.iter_mut()) {
                for t in &mut list.terms {
                    *t = self.intern(t);
                }
            }
        }
        c
    }

    pub fn render(&self, atom: &Atom) -> String {
        statement::render_text(atom, &self.lexicon)
    }

    pub fn render_with(&self, atom: &Atom, style: RenderStyle) -> String {
        statement::render_atom(atom, &self.lexicon, style)
    }

    pub fn render_compound(&self, c: &Compound) -> String {
        statement::render_compound(c, &self.lexicon, RenderStyle::Specific)
    }
}
