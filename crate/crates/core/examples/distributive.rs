//! Lists of verbs and objects: canonical forms, negation and what follows.
//!
//! cargo run --example distributive

use verblogic::statement::{canonical_form, negate};
use verblogic::{derive_all, KnowledgeBase};

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/distributive.vl")).unwrap();
    let kb = KnowledgeBase::parse(&text).unwrap();
    for fact in kb.facts() {
        println!("{}", kb.render_compound(fact));
        let canon = canonical_form(fact);
        let leaves: Vec<String> = canon.leaves().into_iter().map(|a| kb.render(a)).collect();
        println!("  leaves:  {}", leaves.join(" | "));
        println!("  negated: {}", kb.render_compound(&negate(fact)));
        for c in derive_all(&kb, fact) {
            println!("  => {}", kb.render_compound(&c));
        }
    }
}
