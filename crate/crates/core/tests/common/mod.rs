#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::Rng;
use verblogic::{Atom, KnowledgeBase, PlaceSlot, RelationKind, Tense, Term};

/// A random DAG over `prefix0..prefix{n-1}`; edges only go from lower to
/// higher index so the graph is acyclic by construction.
pub struct RandomAxis {
    pub names: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl RandomAxis {
    pub fn new(rng: &mut StdRng, prefix: &str, max_nodes: usize) -> Self {
        let n = rng.random_range(2..=max_nodes);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.random_bool(0.35) {
                    edges.push((a, b));
                }
            }
        }
        RandomAxis {
            names: (0..n).map(|i| format!("{prefix}{i}")).collect(),
            edges,
        }
    }

    pub fn term(&self, i: usize) -> Term {
        Term::new(&self.names[i])
    }

    /// Indices reachable upward from `i` (excluding `i`), by plain DFS over
    /// the declared edges.
    pub fn reach_up(&self, i: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![i];
        while let Some(n) = stack.pop() {
            for &(c, p) in &self.edges {
                if c == n && seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    pub fn at_or_above(&self, low: usize, high: usize) -> bool {
        low == high || self.reach_up(low).contains(&high)
    }
}

/// A knowledge base with a random verb, object, and `in`-place taxonomy.
pub struct RandomKb {
    pub kb: KnowledgeBase,
    pub verbs: RandomAxis,
    pub objects: RandomAxis,
    pub places: RandomAxis,
}

impl RandomKb {
    pub fn new(rng: &mut StdRng, max_nodes: usize) -> Self {
        let verbs = RandomAxis::new(rng, "v", max_nodes);
        let objects = RandomAxis::new(rng, "o", max_nodes);
        let places = RandomAxis::new(rng, "p", max_nodes);
        let mut kb = KnowledgeBase::new();
        for (axis, kind) in [
            (&verbs, RelationKind::WayOf),
            (&objects, RelationKind::KindOf),
            (&places, RelationKind::PartOf),
        ] {
            for &(c, p) in &axis.edges {
                kb.add_edge(kind, &axis.term(c), &axis.term(p)).unwrap();
            }
        }
        RandomKb {
            kb,
            verbs,
            objects,
            places,
        }
    }

    pub fn atom(&self, v: usize, o: usize, p: usize) -> Atom {
        Atom::builder("I", self.verbs.term(v))
            .object(self.objects.term(o))
            .place(PlaceSlot::In, self.places.term(p))
            .tense(Tense::Past)
            .build()
            .unwrap()
    }

    /// Every positive atom over the three axes.
    pub fn universe(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.verbs.names.len() {
            for o in 0..self.objects.names.len() {
                for p in 0..self.places.names.len() {
                    out.push((v, o, p));
                }
            }
        }
        out
    }

    /// Brute force: all atoms whose every slot is at or above the fact's,
    /// minus the fact.
    pub fn oracle_conclusions(&self, fact: (usize, usize, usize)) -> BTreeSet<Atom> {
        self.universe()
            .into_iter()
            .filter(|&(v, o, p)| {
                (v, o, p) != fact
                    && self.verbs.at_or_above(fact.0, v)
                    && self.objects.at_or_above(fact.1, o)
                    && self.places.at_or_above(fact.2, p)
            })
            .map(|(v, o, p)| self.atom(v, o, p))
            .collect()
    }
}
