//! Complete subgroup lattices with their conjugacy-class partition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{is_prime, p_part, GroupTable};
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeLimits {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for LatticeLimits {
    fn default() -> Self {
        LatticeLimits {
            max_order: 512,
            max_subgroups: 100_000,
        }
    }
}

/// Every subgroup of a group, sorted by order then by element list.
pub struct SubgroupLattice<'g> {
    group: &'g GroupTable,
    subgroups: Vec<Subgroup<'g>>,
    index: BTreeMap<FixedBitSet, usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

/// [`all_subgroups_with`] under the default limits.
pub fn all_subgroups(group: &GroupTable) -> Result<SubgroupLattice<'_>> {
    all_subgroups_with(group, LatticeLimits::default())
}

/// Enumerates the subgroup lattice: start from the cyclic subgroups and
/// adjoin cyclic generators to every known subgroup until no new subgroup
/// appears. Every subgroup is a join of cyclic subgroups, so this is complete.
pub fn all_subgroups_with(group: &GroupTable, limits: LatticeLimits) -> Result<SubgroupLattice<'_>> {
    if group.order() > limits.max_order {
        return Err(Error::LatticeTooLarge {
            reason: format!("group order {} exceeds cap {}", group.order(), limits.max_order),
        });
    }
    let mut found: Vec<Subgroup<'_>> = Vec::new();
    let mut seen: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();

    let trivial = Subgroup::trivial(group);
    seen.insert(trivial.members().clone(), 0);
    found.push(trivial);
    for x in group.elements() {
        let c = Subgroup::generated(group, &[x]);
        if !seen.contains_key(c.members()) {
            seen.insert(c.members().clone(), found.len());
            found.push(c);
            cyclic_gens.push(x);
        }
    }

    let mut cursor = 1;
    while cursor < found.len() {
        for &c in &cyclic_gens {
            if found[cursor].contains(c) {
                continue;
            }
            let joined = found[cursor].extend(c);
            if seen.contains_key(joined.members()) {
                continue;
            }
            if found.len() >= limits.max_subgroups {
                return Err(Error::LatticeTooLarge {
                    reason: format!("more than {} subgroups", limits.max_subgroups),
                });
            }
            seen.insert(joined.members().clone(), found.len());
            found.push(joined);
        }
        cursor += 1;
    }

    found.sort();
    let index: BTreeMap<FixedBitSet, usize> = found
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members().clone(), i))
        .collect();

    const UNASSIGNED: usize = usize::MAX;
    let mut class_of = alloc::vec![UNASSIGNED; found.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..found.len() {
        if class_of[start] != UNASSIGNED {
            continue;
        }
        let id = classes.len();
        let mut orbit = alloc::vec![start];
        class_of[start] = id;
        let mut i = 0;
        while i < orbit.len() {
            for &g in group.generators() {
                let conj = found[orbit[i]].conjugate(g);
                let j = index[conj.members()];
                if class_of[j] == UNASSIGNED {
                    class_of[j] = id;
                    orbit.push(j);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }

    Ok(SubgroupLattice {
        group,
        subgroups: found,
        index,
        classes,
        class_of,
    })
}

impl<'g> SubgroupLattice<'g> {
    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup<'g> {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup<'_>) -> Option<usize> {
        if !core::ptr::eq(h.group(), self.group) {
            return None;
        }
        self.index.get(h.members()).copied()
    }

    /// Conjugacy classes as sorted lists of lattice indices.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn whole(&self) -> &Subgroup<'g> {
        self.subgroups.last().expect("lattice contains the whole group")
    }

    pub fn trivial(&self) -> &Subgroup<'g> {
        &self.subgroups[0]
    }

    /// Lattice indices of the subgroups contained in `h`.
    pub fn within(&self, h: &Subgroup<'_>) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| self.subgroups[i].order() <= h.order() && self.subgroups[i].members().is_subset(h.members()))
            .collect()
    }

    /// Lattice indices of the normal subgroups: singleton conjugacy classes.
    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| self.classes[self.class_of[i]].len() == 1)
            .collect()
    }

    /// Subgroups whose order is the full `p`-part of `|G|`.
    pub fn sylow_subgroups(&self, p: u64) -> Result<Vec<&Subgroup<'g>>> {
        let order = self.group.order();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(order as u64).is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order });
        }
        let target = p_part(order as u64, p) as usize;
        Ok(self.subgroups.iter().filter(|h| h.order() == target).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn orders(l: &SubgroupLattice<'_>) -> Vec<usize> {
        l.subgroups().iter().map(Subgroup::order).collect()
    }

    #[test]
    fn small_lattices() {
        let z6 = GroupTable::from_generators(&[cyc(6, &[&[0, 1, 2, 3, 4, 5]])], "Z6").unwrap();
        assert_eq!(orders(&all_subgroups(&z6).unwrap()), [1, 2, 3, 6]);

        let s3 = GroupTable::from_generators(&[cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])], "S3").unwrap();
        let l = all_subgroups(&s3).unwrap();
        assert_eq!(orders(&l), [1, 2, 2, 2, 3, 6]);
        assert_eq!(l.conjugacy_classes().len(), 4);
        assert_eq!(l.normal_subgroups().len(), 3);

        let a4 = GroupTable::from_generators(&[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])], "A4").unwrap();
        let l = all_subgroups(&a4).unwrap();
        assert_eq!(orders(&l), [1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        assert_eq!(l.conjugacy_classes().len(), 5);
    }

    #[test]
    fn sylow() {
        let z6 = GroupTable::from_generators(&[cyc(6, &[&[0, 1, 2, 3, 4, 5]])], "Z6").unwrap();
        let l = all_subgroups(&z6).unwrap();
        assert_eq!(l.sylow_subgroups(2).unwrap().len(), 1);
        assert_eq!(
            l.sylow_subgroups(5).unwrap_err(),
            Error::PrimeDoesNotDivide { p: 5, order: 6 }
        );
        assert_eq!(l.sylow_subgroups(4).unwrap_err(), Error::NotPrime(4));

        let s4 = GroupTable::from_generators(&[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])], "S4").unwrap();
        let l = all_subgroups(&s4).unwrap();
        assert_eq!(l.len(), 30);
        let syl = l.sylow_subgroups(2).unwrap();
        assert_eq!(syl.len(), 3);
        assert!(syl.iter().all(|h| h.order() == 8));
        assert_eq!(l.sylow_subgroups(3).unwrap().len(), 4);
    }

    #[test]
    fn caps() {
        let s5 = GroupTable::from_generators(&[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])], "S5").unwrap();
        let tight = LatticeLimits {
            max_order: 100,
            max_subgroups: 100_000,
        };
        assert!(matches!(all_subgroups_with(&s5, tight), Err(Error::LatticeTooLarge { .. })));
        let few = LatticeLimits {
            max_order: 512,
            max_subgroups: 50,
        };
        assert!(matches!(all_subgroups_with(&s5, few), Err(Error::LatticeTooLarge { .. })));
        assert_eq!(all_subgroups(&s5).unwrap().len(), 156);
    }
}
