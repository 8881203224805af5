//! Negative facts specialize instead of generalizing.
//!
//! cargo run --example contraposition

use verblogic::engine::conclusions;
use verblogic::KnowledgeBase;

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cooking.vl")).unwrap();
    let kb = KnowledgeBase::parse(&text).unwrap();
    for fact in kb.facts().iter().filter_map(|f| f.as_leaf()) {
        let direction = if fact.negated() { "specializes to" } else { "generalizes to" };
        println!("{} {direction}:", kb.render(fact));
        for c in conclusions(&kb, fact) {
            println!("  {}", kb.render(&c));
        }
    }
}
