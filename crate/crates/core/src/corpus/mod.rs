//! Construction of the groups the theorem checks run over.

mod enumerate;
mod recipe;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use enumerate::{enumerate_all_of_order, enumerate_all_of_order_capped, ENUMERATION_MAX_ORDER};
pub use recipe::{build, build_capped, GroupRecipe, Word};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::iso::{are_isomorphic, fingerprint, Fingerprint};
use crate::lattice::LatticeLimits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_order: usize,
    /// Orders up to this are enumerated exhaustively.
    pub enumeration_max: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_order: LatticeLimits::default().max_order,
            enumeration_max: ENUMERATION_MAX_ORDER,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub group: GroupTable,
    /// Built as a Frobenius group by construction.
    pub expect_frobenius: bool,
}

/// Named constructions, in corpus order. The flag marks Frobenius groups.
pub fn named_recipes() -> Vec<(String, GroupRecipe, bool)> {
    use GroupRecipe::*;
    let mut out: Vec<(String, GroupRecipe, bool)> = Vec::new();
    let mut add = |name: &str, r: GroupRecipe, frob: bool| out.push((name.into(), r, frob));
    let modular = |q: usize, m: usize, k: i64| {
        GroupRecipe::semidirect(Cyclic(q), Cyclic(m), vec![vec![Word::exponents(&[k])]])
    };
    let ea = |p: usize, rank: usize| ElementaryAbelian { p, rank };
    let q8 = || GeneralizedQuaternion(8);

    for n in 1..=12 {
        add(&alloc::format!("Z{n}"), Cyclic(n), false);
    }
    add("Z15", Cyclic(15), false);
    add("Z30", Cyclic(30), false);
    add("Z2^2", ea(2, 2), false);
    add("Z2^3", ea(2, 3), false);
    add("Z2^4", ea(2, 4), false);
    add("Z3^2", ea(3, 2), false);
    add("Z2xZ4", GroupRecipe::direct(Cyclic(2), Cyclic(4)), false);
    add("Z2xZ6", GroupRecipe::direct(Cyclic(2), Cyclic(6)), false);
    add("Z4xZ4", GroupRecipe::direct(Cyclic(4), Cyclic(4)), false);
    add("S3", Symmetric(3), true);
    add("A4", Alternating(4), true);
    add("S4", Symmetric(4), false);
    add("A5", Alternating(5), false);
    add("S5", Symmetric(5), false);
    for n in 3..=12 {
        add(&alloc::format!("D{n}"), Dihedral(n), n % 2 == 1);
    }
    add("Q8", q8(), false);
    add("Q16", GeneralizedQuaternion(16), false);
    add("Q32", GeneralizedQuaternion(32), false);
    add("Dic3", modular(3, 4, 2), false);
    add("Dic5", modular(5, 4, 4), false);
    for m in [3, 5, 7, 9] {
        add(&alloc::format!("Q8xZ{m}"), GroupRecipe::direct(q8(), Cyclic(m)), false);
    }
    add("Z2xQ8", GroupRecipe::direct(Cyclic(2), q8()), false);
    add("Z2xD4", GroupRecipe::direct(Cyclic(2), Dihedral(4)), false);
    add("Z3xS3", GroupRecipe::direct(Cyclic(3), Symmetric(3)), false);
    add("S3xS3", GroupRecipe::direct(Symmetric(3), Symmetric(3)), false);
    add("Z2xA4", GroupRecipe::direct(Cyclic(2), Alternating(4)), false);
    add(
        "SL(2,3)",
        GroupRecipe::semidirect(q8(), Cyclic(3), vec![vec![Word(vec![(1, 1)]), Word(vec![(0, 1), (1, 1)])]]),
        false,
    );

    add("Z5:Z4", modular(5, 4, 2), true);
    add("Z7:Z3", modular(7, 3, 2), true);
    add("Z7:Z6", modular(7, 6, 3), true);
    add("Z11:Z5", modular(11, 5, 3), true);
    add("Z11:Z10", modular(11, 10, 2), true);
    add("Z13:Z3", modular(13, 3, 3), true);
    add("Z13:Z4", modular(13, 4, 5), true);
    add("Z13:Z6", modular(13, 6, 4), true);
    add("Z13:Z12", modular(13, 12, 2), true);

    let dic3 = || modular(3, 4, 2);
    add("Z3^2:Z2", GroupRecipe::matrix_action(3, 2, Cyclic(2), &[&[&[2, 0], &[0, 2]]]), true);
    add("Z3^2:Z4", GroupRecipe::matrix_action(3, 2, Cyclic(4), &[&[&[0, 1], &[2, 0]]]), true);
    add("Z3^2:Z8", GroupRecipe::matrix_action(3, 2, Cyclic(8), &[&[&[0, 1], &[1, 1]]]), true);
    add(
        "Z3^2:Q8",
        GroupRecipe::matrix_action(3, 2, q8(), &[&[&[0, 1], &[2, 0]], &[&[1, 1], &[1, 2]]]),
        true,
    );
    add("Z5^2:Z3", GroupRecipe::matrix_action(5, 2, Cyclic(3), &[&[&[4, 4], &[1, 0]]]), true);
    add("Z5^2:Z4", GroupRecipe::matrix_action(5, 2, Cyclic(4), &[&[&[2, 0], &[0, 2]]]), true);
    add("Z5^2:Z6", GroupRecipe::matrix_action(5, 2, Cyclic(6), &[&[&[1, 1], &[4, 0]]]), true);
    add("Z5^2:Z8", GroupRecipe::matrix_action(5, 2, Cyclic(8), &[&[&[0, 1], &[2, 0]]]), true);
    add(
        "Z5^2:Q8",
        GroupRecipe::matrix_action(5, 2, q8(), &[&[&[0, 1], &[4, 0]], &[&[0, 2], &[2, 0]]]),
        true,
    );
    add("Z5^2:Z12", GroupRecipe::matrix_action(5, 2, Cyclic(12), &[&[&[0, 1], &[1, 2]]]), true);
    add(
        "Z5^2:Dic3",
        GroupRecipe::matrix_action(5, 2, dic3(), &[&[&[4, 4], &[1, 0]], &[&[0, 2], &[2, 0]]]),
        true,
    );
    out
}

/// The default corpus: named constructions followed by every group of order
/// up to `config.enumeration_max`, isomorphic duplicates dropped (the first
/// name wins), restricted to orders up to `config.max_order`.
pub fn default_corpus_entries(config: &CorpusConfig) -> Result<Vec<CorpusEntry>> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut prints: Vec<Fingerprint> = Vec::new();
    let mut push = |group: GroupTable, frob: bool, entries: &mut Vec<CorpusEntry>| {
        let fp = fingerprint(&group);
        let dup = (0..entries.len()).find(|&i| prints[i] == fp && are_isomorphic(&entries[i].group, &group));
        match dup {
            Some(i) => entries[i].expect_frobenius |= frob,
            None => {
                prints.push(fp);
                entries.push(CorpusEntry {
                    group,
                    expect_frobenius: frob,
                });
            }
        }
    };
    for (name, recipe, frob) in named_recipes() {
        match build_capped(&recipe, &name, config.max_order) {
            Ok(g) if g.order() <= config.max_order => push(g, frob, &mut entries),
            Ok(_) | Err(Error::GroupTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    for n in 1..=config.enumeration_max.min(config.max_order) {
        for g in enumerate_all_of_order_capped(n, config.enumeration_max)? {
            push(g, false, &mut entries);
        }
    }
    Ok(entries)
}

pub fn default_corpus(config: &CorpusConfig) -> Result<Vec<GroupTable>> {
    Ok(default_corpus_entries(config)?.into_iter().map(|e| e.group).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_subgroups;
    use crate::structure::{frobenius_decomposition, q8_odd_cyclic_decomposition};
    use crate::subgroup::Subgroup;

    #[test]
    fn default_corpus_shape() {
        let entries = default_corpus_entries(&CorpusConfig::default()).unwrap();
        assert!(entries.len() >= 60, "{}", entries.len());
        assert_eq!(entries.iter().filter(|e| e.group.name() == "S3").count(), 1);
        assert!(entries.iter().all(|e| !e.group.name().starts_with("SmallOrder")));
        for e in entries.iter().filter(|e| e.expect_frobenius) {
            let lat = all_subgroups(&e.group).unwrap();
            assert!(frobenius_decomposition(&lat).is_some(), "{}", e.group.name());
        }
    }

    #[test]
    fn max_order_filter() {
        let config = CorpusConfig {
            max_order: 6,
            ..CorpusConfig::default()
        };
        let corpus = default_corpus(&config).unwrap();
        assert!(corpus.iter().all(|g| g.order() <= 6));
        assert_eq!(corpus.len(), 8);
    }

    #[test]
    fn q8_times_odd_is_redetected() {
        let g = build(&GroupRecipe::direct(GroupRecipe::GeneralizedQuaternion(8), GroupRecipe::Cyclic(3)), "Q8xZ3")
            .unwrap();
        assert_eq!(g.order(), 24);
        let lat = all_subgroups(&g).unwrap();
        let d = q8_odd_cyclic_decomposition(&Subgroup::whole(&g), &lat).unwrap();
        assert_eq!((d.q8_part.order(), d.odd_cyclic_part.order()), (8, 3));
    }
}
