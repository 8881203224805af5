//! Generalizing along a verb chain and two place slots at once.
//!
//! cargo run --example travel_chain

use verblogic::{derive_conclusions, KnowledgeBase};

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/travel.vl")).unwrap();
    let kb = KnowledgeBase::parse(&text).unwrap();
    let fact = kb.facts()[0].as_leaf().unwrap();
    let conclusions = derive_conclusions(&kb, fact).unwrap();
    println!("{} => {} conclusions", kb.render(fact), conclusions.len());
    for c in &conclusions {
        println!("  {}", kb.render(c));
    }
}
