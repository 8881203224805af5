//! A question-driven session that narrows a vague answer to the fact.
//!
//! cargo run --example dialogue

use verblogic::{open_session, KnowledgeBase, QuestionOperator};

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house.vl")).unwrap();
    let kb = KnowledgeBase::parse(&text).unwrap();
    let fact = kb.facts()[0].as_leaf().unwrap();
    let mut session = open_session(&kb, fact).unwrap();
    println!("A: {}", session.render(&kb));
    for op in [QuestionOperator::WhichPart, QuestionOperator::How, QuestionOperator::WhichKind] {
        println!("B> {}", op.name().replace('_', " "));
        session.ask(op, None).unwrap();
        println!("A: {}", session.render(&kb));
    }
    println!("fully specific: {}", session.is_fully_specific());
}
