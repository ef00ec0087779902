use std::path::PathBuf;

use ringlab_core::harness::{
    build_corpus, emit_report, load_ring, parse_ring, registry, ring_to_text, run_theorem_suite, save_ring,
    search_counterexample, CorpusSpec, Format, HarnessError, Recipe, SearchQuery, SuiteOptions,
};
use ringlab_core::Limits;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ringlab-harness-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn ring_files_round_trip() {
    let limits = Limits::default();
    let small = build_corpus(&CorpusSpec::default().with_max_order(32), &limits);
    for (i, e) in small.entries.iter().enumerate() {
        let path = scratch(&format!("{i}.ring"));
        save_ring(&e.ring, &path).unwrap();
        let back = load_ring(&path, &limits).unwrap();
        assert!(back.same_tables(&e.ring), "{}", e.id);
        assert_eq!(back.name(), e.ring.name());
        assert_eq!(ring_to_text(&back), ring_to_text(&e.ring));
    }
}

#[test]
fn broken_files_are_rejected() {
    let limits = Limits::default();
    let z2 = ring_to_text(&"zmod(2)".parse::<Recipe>().unwrap().build(&limits).unwrap());
    // Not a ring: 1 + 1 = 1.
    let bad = z2.replacen("1 0\nmul", "1 1\nmul", 1);
    assert_ne!(bad, z2);
    assert!(matches!(parse_ring(&bad, &limits), Err(HarnessError::Ring(_))));
    let truncated = z2.replace("end", "");
    assert!(matches!(parse_ring(&truncated, &limits), Err(HarnessError::Parse { .. })));
    assert!(matches!(parse_ring("ring X\norder two\n", &limits), Err(HarnessError::Parse { line: 2, .. })));
}

#[test]
fn recipes_build_and_print() {
    let limits = Limits::default();
    for (text, order) in [
        ("zmod(6)", 6),
        ("product(zmod(2),zmod(3))", 6),
        ("tri(zmod(2),2)", 8),
        ("cong2(zmod(4))", 64),
        ("dorroh(ideal(zmod(8),[2]),8)", 32),
        ("quotient(zmod(12),[4])", 4),
        ("polytrunc(alg(GF4),2,1)", 16),
        ("trivext(zmod(3))", 9),
    ] {
        let r: Recipe = text.parse().unwrap();
        assert_eq!(r.to_string(), text);
        assert_eq!(r.build(&limits).unwrap().order(), order, "{text}");
    }
    assert!("zmod(0)".parse::<Recipe>().and_then(|r| r.build(&limits)).is_err());
    assert!("bogus(1)".parse::<Recipe>().is_err());
}

#[test]
fn corpus_is_deterministic_and_distinct() {
    let limits = Limits::default();
    let a = build_corpus(&CorpusSpec::default().with_max_order(64), &limits);
    let b = build_corpus(&CorpusSpec::default().with_max_order(64), &limits);
    assert_eq!(a.manifest(), b.manifest());
    let mut ids: Vec<&str> = a.entries.iter().map(|e| e.id.as_str()).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), a.len());
    for (i, x) in a.entries.iter().enumerate() {
        for y in &a.entries[i + 1..] {
            assert!(!x.ring.same_tables(&y.ring), "{} and {}", x.id, y.id);
        }
    }
}

#[test]
fn small_suite_has_no_failures_and_is_job_independent() {
    let limits = Limits::default();
    let corpus = build_corpus(&CorpusSpec::default().with_max_order(8), &limits);
    let checks = registry();
    let one = run_theorem_suite(&corpus, &checks, &SuiteOptions { limits, jobs: 1 });
    let many = run_theorem_suite(&corpus, &checks, &SuiteOptions { limits, jobs: 3 });
    assert_eq!(one.failures(), 0);
    assert_eq!(emit_report(&one, Format::Json), emit_report(&many, Format::Json));
    assert_eq!(emit_report(&one, Format::Text), emit_report(&many, Format::Text));
    for t in &one.theorems {
        assert_eq!(t.fail, 0, "{}", t.id);
    }
    let chain = one.theorems.iter().find(|t| t.id == "def-chain").unwrap();
    assert_eq!(chain.pass, corpus.len());
}

#[test]
fn search_membership() {
    let limits = Limits::default();
    let corpus = build_corpus(&CorpusSpec::default().with_max_order(16), &limits);
    let q = SearchQuery::parse(&["reduced"], &["reversible"]).unwrap();
    let res = search_counterexample(&corpus, &q, &limits);
    assert_eq!(res.outcome, "none-in-corpus");
    let q = SearchQuery::parse(&["nil-reversible"], &["unit-central"]).unwrap();
    let res = search_counterexample(&corpus, &q, &limits);
    for hit in &res.found {
        let r = &corpus.get(&hit.ring).unwrap().ring;
        assert!(hit.witnesses.iter().all(|w| w.witness.is_some()));
        for w in &hit.witnesses {
            let wit = w.witness.as_ref().unwrap();
            assert!(wit.elements.iter().all(|e| e.element < r.order()));
        }
    }
    assert!(SearchQuery::parse(&["reduced-ideal"], &[] as &[&str]).is_err());
}
