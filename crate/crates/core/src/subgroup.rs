//! Subgroups as bitsets over a parent table, and the subgroup predicates.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;
use core::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A subgroup of `group`: its members as a bitset plus a generating set.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g GroupTable,
    members: FixedBitSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    pub fn trivial(group: &'g GroupTable) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Subgroup {
            group,
            members,
            elements: alloc::vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole(group: &'g GroupTable) -> Self {
        Self::generated(group, group.generators())
    }

    /// The least subgroup containing `seeds`.
    pub fn generated(group: &'g GroupTable, seeds: &[usize]) -> Self {
        let mut h = Self::trivial(group);
        for &x in seeds {
            if !h.contains(x) {
                h = h.extend(x);
            }
        }
        h
    }

    /// Checks closure of an explicit element set.
    pub fn from_elements(group: &'g GroupTable, elements: &[usize]) -> Result<Self> {
        let n = group.order();
        let mut members = FixedBitSet::with_capacity(n);
        for &x in elements {
            if x >= n {
                return Err(Error::NotContained);
            }
            members.insert(x);
        }
        let h = Self::generated(group, elements);
        if h.members != members {
            return Err(Error::InvalidTable("element set is not closed under the operation".into()));
        }
        Ok(h)
    }

    /// `⟨self, x⟩`, built by adjoining right cosets of `self`.
    pub fn extend(&self, x: usize) -> Self {
        if self.contains(x) {
            return self.clone();
        }
        let g = self.group;
        let mut generators = self.generators.clone();
        generators.push(x);
        let mut members = self.members.clone();
        let mut reps = alloc::vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            for &s in &generators {
                let y = g.mul(reps[i], s);
                if !members.contains(y) {
                    for &r in &self.elements {
                        members.insert(g.mul(r, y));
                    }
                    reps.push(y);
                }
            }
            i += 1;
        }
        let elements = members.ones().collect();
        Subgroup {
            group: g,
            members,
            elements,
            generators,
        }
    }

    fn from_members(group: &'g GroupTable, members: FixedBitSet) -> Self {
        let elements: Vec<usize> = members.ones().collect();
        let mut h = Self::trivial(group);
        for &x in &elements {
            if !h.contains(x) {
                h = h.extend(x);
            }
        }
        debug_assert_eq!(h.members, members);
        h
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Members in ascending index order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        core::ptr::eq(self.group, other.group) && self.members.is_subset(&other.members)
    }

    fn same_parent(&self, other: &Subgroup<'_>) -> Result<()> {
        if core::ptr::eq(self.group, other.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn intersect(&self, other: &Subgroup<'g>) -> Result<Self> {
        self.same_parent(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Self::from_members(self.group, members))
    }

    pub fn join(&self, other: &Subgroup<'g>) -> Result<Self> {
        self.same_parent(other)?;
        let mut h = self.clone();
        for &x in &other.generators {
            if !h.contains(x) {
                h = h.extend(x);
            }
        }
        Ok(h)
    }

    /// `H^g = {g⁻¹ h g : h ∈ H}`.
    pub fn conjugate(&self, g: usize) -> Self {
        let grp = self.group;
        let mut members = FixedBitSet::with_capacity(grp.order());
        for &h in &self.elements {
            members.insert(grp.conjugate(h, g));
        }
        Subgroup {
            group: grp,
            elements: members.ones().collect(),
            members,
            generators: self.generators.iter().map(|&h| grp.conjugate(h, g)).collect(),
        }
    }

    /// `|H^g ∩ H|` without materializing the conjugate.
    fn conjugate_overlap(&self, g: usize) -> usize {
        self.elements
            .iter()
            .filter(|&&h| self.contains(self.group.conjugate(h, g)))
            .count()
    }

    /// `C_G(H)`.
    pub fn centralizer(&self) -> Self {
        let g = self.group;
        let members = g
            .elements()
            .filter(|&x| self.generators.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
            .collect::<FixedBitSet>();
        Self::from_members(g, grown(members, g.order()))
    }

    /// `N_G(H)`.
    pub fn normalizer(&self) -> Self {
        let g = self.group;
        let members = g
            .elements()
            .filter(|&x| self.generators.iter().all(|&h| self.contains(g.conjugate(h, x))))
            .collect::<FixedBitSet>();
        Self::from_members(g, grown(members, g.order()))
    }

    /// Whether every generator of `k` maps `self` into itself by conjugation.
    /// Assumes `self ≤ k`.
    pub fn is_normal_in(&self, k: &Subgroup<'g>) -> bool {
        let g = self.group;
        k.generators
            .iter()
            .all(|&x| self.generators.iter().all(|&h| self.contains(g.conjugate(h, x))))
    }

    pub fn is_normal(&self) -> bool {
        let g = self.group;
        g.generators()
            .iter()
            .all(|&x| self.generators.iter().all(|&h| self.contains(g.conjugate(h, x))))
    }

    /// Least normal subgroup of `k` containing `self`.
    pub fn normal_closure_in(&self, k: &Subgroup<'g>) -> Result<Self> {
        self.same_parent(k)?;
        if !self.members.is_subset(&k.members) {
            return Err(Error::NotContained);
        }
        let g = self.group;
        let mut closure = self.clone();
        let mut next = 0;
        while next < closure.generators.len() {
            let h = closure.generators[next];
            for &x in &k.generators {
                let c = g.conjugate(h, x);
                if !closure.contains(c) {
                    closure = closure.extend(c);
                }
            }
            next += 1;
        }
        Ok(closure)
    }

    /// Descending normal-closure chain `K₀ = G`, `K_{i+1} = ⟨H^{K_i}⟩`;
    /// `H` is subnormal iff the chain stops at `H`.
    pub fn is_subnormal(&self) -> bool {
        self.normal_closure_chain().last().map(Subgroup::order) == Some(self.order())
    }

    /// The chain `G = K₀ > K₁ > …` until it stabilizes.
    pub fn normal_closure_chain(&self) -> Vec<Self> {
        let mut chain = alloc::vec![Subgroup::whole(self.group)];
        loop {
            let k = chain.last().expect("chain starts non-empty");
            let next = self.normal_closure_in(k).expect("H is contained in every chain member");
            if next.order() == k.order() {
                return chain;
            }
            chain.push(next);
        }
    }

    /// `H^g ∩ H ∈ {1, H}` for every `g`, testing one `g` per right coset of `N_G(H)`.
    pub fn is_ti(&self) -> bool {
        if self.order() == 1 || self.is_whole() {
            return true;
        }
        let g = self.group;
        let normalizer = self.normalizer();
        if normalizer.is_whole() {
            return true;
        }
        let mut covered = FixedBitSet::with_capacity(g.order());
        for x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            for &n in &normalizer.elements {
                covered.insert(g.mul(n, x));
            }
            let overlap = self.conjugate_overlap(x);
            if overlap != 1 && overlap != self.order() {
                return false;
            }
        }
        true
    }

    /// `C_G(H) ≤ H`.
    pub fn is_self_centralizing(&self) -> bool {
        let g = self.group;
        g.elements()
            .filter(|x| !self.contains(*x))
            .all(|x| self.generators.iter().any(|&h| g.mul(x, h) != g.mul(h, x)))
    }

    /// Short human-readable description: order and generators, as
    /// permutations when the parent was built from permutations of small
    /// degree, otherwise as element indices.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "order {} <", self.order());
        for (i, &x) in self.generators.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            match self.group.permutation(x).filter(|p| p.degree() <= DESCRIBE_MAX_DEGREE) {
                Some(p) => {
                    let _ = write!(s, "{p}");
                }
                None => {
                    let _ = write!(s, "#{x}");
                }
            }
        }
        s.push('>');
        s
    }
}

const DESCRIBE_MAX_DEGREE: usize = 16;

fn grown(mut set: FixedBitSet, len: usize) -> FixedBitSet {
    set.grow(len);
    set
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl Hash for Subgroup<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By order, then lexicographically by sorted element indices.
impl Ord for Subgroup<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}
