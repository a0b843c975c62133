use std::collections::BTreeSet;

use tisub_core::all_subgroups;
use tisub_core::corpus::{default_corpus, CorpusConfig};

mod support;
use support::naive_subgroups;

#[test]
fn lattice_matches_subset_oracle_up_to_order_24() {
    let corpus = default_corpus(&CorpusConfig {
        max_order: 24,
        ..CorpusConfig::default()
    })
    .unwrap();
    assert!(corpus.iter().any(|g| g.order() == 24));
    for g in &corpus {
        let lattice = all_subgroups(g).unwrap();
        let engine: BTreeSet<Vec<usize>> = lattice.subgroups().iter().map(|h| h.elements().to_vec()).collect();
        assert_eq!(engine.len(), lattice.len(), "{}: duplicate subgroups", g.name());
        assert_eq!(engine, naive_subgroups(g), "{}", g.name());
    }
}
