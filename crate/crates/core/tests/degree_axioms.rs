use paritydeg::degree::{regular_corpus, verify_degree_axioms};

#[test]
fn corpus_satisfies_degree_axioms() {
    let corpus: Vec<_> = regular_corpus().into_iter().map(|e| e.tern).collect();
    let report = verify_degree_axioms(&corpus, 42).unwrap();
    println!("{report:#?}");
    assert!(report.all_passed(), "{:?}", report.witnesses);
    assert_eq!(report.additivity.skipped, 0);
    assert_eq!(report.excision.skipped, 0);
    assert!(report.homotopy.passed >= 20);
}
