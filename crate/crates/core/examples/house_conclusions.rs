//! Everything that follows from "I will buy a house in CA", with and without
//! a condition attached.
//!
//! cargo run --example house_conclusions

use verblogic::{derive_conclusions, KnowledgeBase};

fn show(file: &str) {
    let text = std::fs::read_to_string(file).expect("bundled example");
    let kb = KnowledgeBase::parse(&text).expect("valid knowledge base");
    for fact in kb.facts() {
        let atom = fact.as_leaf().expect("house facts are atoms");
        println!("fact: {}", kb.render(atom));
        for (i, c) in derive_conclusions(&kb, atom).unwrap().iter().enumerate() {
            println!("  {}. {}", i + 1, kb.render(c));
        }
    }
}

fn main() {
    show(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house.vl"));
    println!();
    show(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house_conditional.vl"));
}
