//! The bundled knowledge bases under `examples/`.

use std::fs;
use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use verblogic::dsl::{load, parse_kb, Declaration};
use verblogic::KnowledgeBase;

fn bundled() -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut files: Vec<(PathBuf, String)> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "vl"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    files.sort();
    assert!(files.len() >= 6, "bundled knowledge bases missing");
    files
}

fn strip(text: &str) -> Vec<Declaration> {
    parse_kb(text).unwrap().items.into_iter().map(|l| l.item).collect()
}

#[test]
fn all_bundled_files_load() {
    for (path, text) in bundled() {
        let src = parse_kb(&text).unwrap_or_else(|d| panic!("{}: {d:?}", path.display()));
        load(&src).unwrap_or_else(|d| panic!("{}: {d:?}", path.display()));
    }
}

#[test]
fn house_has_three_edges_and_one_fact() {
    let text = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/house.vl")).unwrap();
    let decls = strip(&text);
    let edges = decls.iter().filter(|d| matches!(d, Declaration::Edge { .. })).count();
    let facts = decls.iter().filter(|d| matches!(d, Declaration::Fact(_))).count();
    assert_eq!((edges, facts), (3, 1));
}

#[test]
fn serialize_reparse_is_identical() {
    for (path, text) in bundled() {
        let first = parse_kb(&text).unwrap();
        let printed = first.to_dsl();
        let second = parse_kb(&printed).unwrap();
        assert_eq!(strip(&text), strip(&printed), "{}", path.display());
        assert_eq!(second.to_dsl(), printed, "{}", path.display());
    }
}

#[test]
fn comments_and_blank_lines_do_not_matter() {
    for (_, text) in bundled() {
        let noisy: String = text
            .lines()
            .map(|l| format!("\n   # noise\n{l}   # trailing\n"))
            .collect();
        assert_eq!(strip(&text), strip(&noisy));
    }
}

#[test]
fn load_order_is_irrelevant() {
    // declarations are set-like: reversing them yields the same conclusions
    for (_, text) in bundled() {
        let reversed: String = text.lines().rev().map(|l| format!("{l}\n")).collect();
        let a = KnowledgeBase::parse(&text).unwrap();
        let b = KnowledgeBase::parse(&reversed).unwrap();
        let mut fa: Vec<String> = a.facts().iter().map(|f| format!("{f:?}")).collect();
        let mut fb: Vec<String> = b.facts().iter().map(|f| format!("{f:?}")).collect();
        fa.sort();
        fb.sort();
        assert_eq!(fa, fb);
        for fact in a.facts() {
            assert_eq!(
                verblogic::derive_all(&a, fact),
                verblogic::derive_all(&b, fact)
            );
        }
    }
}

const CORRUPTIONS: &[&str] = &[
    "kind house property",
    "part < U.S.",
    "way buy < own < more",
    "fact I someday buy house",
    "fact I future buy",
    "mu American eat seaweed = 1.5",
    "mu American eat seaweed = often",
    "bogus line here",
    "isa brother lawyer",
    "fact I future buy house in",
    "fact I future buy house if \"unterminated",
    "fact I past bake (potato and",
];

#[test]
fn seeded_corruptions_report_their_line() {
    let mut rng = StdRng::seed_from_u64(31);
    for (path, text) in bundled() {
        let lines: Vec<&str> = text.lines().collect();
        for _ in 0..20 {
            let at = rng.random_range(0..=lines.len());
            let bad = CORRUPTIONS[rng.random_range(0..CORRUPTIONS.len())];
            let mut edited: Vec<&str> = lines.clone();
            edited.insert(at, bad);
            let errs = parse_kb(&edited.join("\n")).unwrap_err();
            assert_eq!(errs.len(), 1, "{}: {bad:?} -> {errs:?}", path.display());
            assert_eq!(errs[0].line, at + 1, "{}: {bad:?}", path.display());
            assert!(errs[0].column >= 1);
        }
    }
}
