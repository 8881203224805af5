//! Every error in a knowledge base is reported with its position.
//!
//! cargo run --example dsl_diagnostics

use verblogic::dsl::parse_kb;

const BROKEN: &str = "\
kind house < property
part CA U.S.
way buy < own
fact I someday buy house in CA
mu American eat seaweed = 1.5
fact I past bake (potato and apple
";

fn main() {
    match parse_kb(BROKEN) {
        Ok(_) => println!("no errors"),
        Err(diagnostics) => {
            for d in diagnostics {
                println!("broken.vl:{d}");
            }
        }
    }
}
