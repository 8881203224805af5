use std::io::Cursor;

use verblogic::cli::run;
use verblogic::wire::AtomRecord;

const HOUSE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house.vl");
const HOUSE_IF: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house_conditional.vl");
const FOOD: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/food.vl");
const TRAVEL: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/travel.vl");

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn verblogic(args: &[&str], stdin: &str) -> Output {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["verblogic"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn check_ok() {
    let o = verblogic(&["check", HOUSE], "");
    assert_eq!((o.code, o.out.as_str()), (0, "OK\n"));
    let o = verblogic(&["check", "--kb", HOUSE], "");
    assert_eq!(o.code, 0);
}

#[test]
fn derive_json_seven_atoms() {
    let o = verblogic(&["derive", HOUSE, "--format", "json"], "");
    assert_eq!(o.code, 0);
    let records: Vec<AtomRecord> = o
        .out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 7);
    assert!(records.iter().any(|r| r.rendered == "I will own a property in U.S."));
    assert!(records.iter().all(|r| r.tense == "future" && !r.negated));

    // schema is exactly these keys, in this order
    let first: serde_json::Value = serde_json::from_str(o.out.lines().next().unwrap()).unwrap();
    let keys: Vec<&String> = first.as_object().unwrap().keys().collect();
    let mut keys: Vec<&str> = keys.iter().map(|k| k.as_str()).collect();
    keys.sort();
    let mut want = vec![
        "subject", "negated", "verb", "object", "places", "tense", "condition", "adverb", "can",
        "rendered",
    ];
    want.sort();
    assert_eq!(keys, want);
    let places: Vec<&String> = first["places"].as_object().unwrap().keys().collect();
    assert_eq!(places.len(), 3);

    let again = verblogic(&["derive", HOUSE, "--format", "json"], "");
    assert_eq!(o.out, again.out, "byte-identical across runs");
}

#[test]
fn derive_conditional() {
    let o = verblogic(&["derive", HOUSE_IF], "");
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|l| l.starts_with("If I get this job, ")));
    assert!(lines.contains(&"If I get this job, I will buy a house in U.S."));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(verblogic(&["frobnicate"], "").code, 2);
    assert_eq!(verblogic(&["derive", HOUSE, "--bogus"], "").code, 2);
    assert_eq!(verblogic(&["derive"], "").code, 2);
    assert_eq!(verblogic(&["derive", HOUSE, "--kb", HOUSE], "").code, 2);
    assert_eq!(verblogic(&["ask", HOUSE, "WHY"], "").code, 2);
    assert_eq!(verblogic(&["annotate", FOOD, "I", "eat"], "").code, 2);
    assert_eq!(verblogic(&["--help"], "").code, 0);
}

#[test]
fn diagnostics_exit_1_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.vl");
    std::fs::write(&path, "kind a < b\n\nmu American eat seaweed = 1.5\nbanana\n").unwrap();
    let o = verblogic(&["check", path.to_str().unwrap()], "");
    assert_eq!(o.code, 1);
    let lines: Vec<&str> = o.err.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with(&format!("{}:3:27: error: value outside [0,1]", path.display())));
    assert!(lines[1].starts_with(&format!("{}:4:1: error: unknown keyword", path.display())));

    let o = verblogic(&["check", "/nonexistent/file.vl"], "");
    assert_eq!(o.code, 1);
}

#[test]
fn annotate_statements() {
    let o = verblogic(&["annotate", FOOD, "I", "eat", "chicken"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "I often eat chicken\n"));
    let o = verblogic(&["annotate", FOOD, "I", "eat", "seaweed"], "");
    assert_eq!(o.out, "I rarely eat seaweed\n");
    let o = verblogic(&["annotate", FOOD, "Kenji", "eat", "seaweed"], "");
    assert_eq!(o.out, "Kenji often eats seaweed\n");
    let o = verblogic(&["annotate", FOOD, "I", "eat", "book"], "");
    assert_eq!(o.out, "I never eat a book\n");
    let o = verblogic(&["annotate", "--kb", FOOD, "I", "eat", "bread", "--format", "json"], "");
    let r: AtomRecord = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(r.adverb.as_deref(), Some("often"));
    let o = verblogic(&["annotate", FOOD, "I", "sing", "song"], "");
    assert_eq!(o.code, 1);
}

#[test]
fn ask_one_shot() {
    let o = verblogic(&["ask", HOUSE, "WHICH_PART", "HOW", "WHICH_KIND"], "");
    assert_eq!(o.code, 0);
    assert_eq!(
        o.out,
        "I will own property in U.S.\nI will own a property in CA\nI will buy a property in CA\nI will buy a house in CA\n"
    );
    let o = verblogic(&["ask", HOUSE, "HOW", "HOW"], "");
    assert_eq!(o.code, 1);
    assert!(o.err.contains("fully specific"));
    let o = verblogic(&["ask", TRAVEL, "WHICH_PART:from", "HOW", "HOW"], "");
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out.lines().last().unwrap(), "I flew from Tokyo to U.S.");
    let o = verblogic(&["ask", TRAVEL, "WHICH_PART"], "");
    assert_eq!(o.code, 1);
    assert!(o.err.contains("needs a slot"));
}

#[test]
fn repl_golden_transcript() {
    let golden = include_str!("golden/house_dialogue.txt");
    let o = verblogic(&["repl", HOUSE], "WHICH PART\nHOW\nWHICH KIND\nquit\n");
    assert_eq!(o.code, 0, "{}", o.err);
    assert_eq!(o.out, golden);
}

#[test]
fn repl_other_commands() {
    let o = verblogic(
        &["repl", HOUSE],
        "fact\nBANANA\nWHAT KIND\nWHAT KIND\nconclusions\n",
    );
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.out.lines().collect();
    assert_eq!(lines[0], "A: I will own property in U.S.");
    assert_eq!(lines[1], "B> fact");
    assert_eq!(lines[2], "A: I will buy a house in CA");
    assert_eq!(lines[3], "B> BANANA");
    assert!(lines[4].starts_with("! unknown command `BANANA`"));
    assert_eq!(lines[6], "A: I will own a house in U.S.");
    assert!(lines[8].starts_with("! object is already fully specific"));
    assert_eq!(lines.iter().filter(|l| l.starts_with("A: I will")).count(), 3 + 7);
}
