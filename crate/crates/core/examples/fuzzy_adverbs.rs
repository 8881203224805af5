//! Frequency adverbs chosen from characteristic values.
//!
//! cargo run --example fuzzy_adverbs

use verblogic::fuzzy::{describe, membership};
use verblogic::{KnowledgeBase, Tense, Term};

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/food.vl")).unwrap();
    let kb = KnowledgeBase::parse(&text).unwrap();
    let eat = Term::new("eat");
    for subject in ["I", "Kenji"] {
        for noun in ["chicken", "seaweed", "bread", "deer_meat", "book"] {
            let (s, n) = (Term::new(subject), Term::new(noun));
            let mu = membership(&kb, &s, &eat, &n);
            let atom = describe(&kb, &s, &eat, &n, Tense::Present).unwrap();
            println!("{:<5} {:<9} mu={mu:.2}  {}", subject, noun, kb.render(&atom));
        }
    }
}
