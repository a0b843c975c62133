//! Recognizers for the structural pieces of Frobenius-type classifications.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{p_part, prime_divisors, prime_power_base};
use crate::lattice::SubgroupLattice;
use crate::subgroup::Subgroup;

/// `G = N ⋊ M` with `M` acting fixed-point-freely on `N` by conjugation.
#[derive(Clone, Debug)]
pub struct FrobeniusDecomposition<'g> {
    pub kernel: Subgroup<'g>,
    pub complement: Subgroup<'g>,
    /// `(q, r)` when the kernel is elementary abelian of order `q^r`.
    pub kernel_params: Option<(u64, u32)>,
}

impl FrobeniusDecomposition<'_> {
    pub fn kernel_prime(&self) -> Option<u64> {
        self.kernel_params.map(|(q, _)| q)
    }

    pub fn kernel_rank(&self) -> Option<u32> {
        self.kernel_params.map(|(_, r)| r)
    }
}

/// `H = A × B` with `A ≅ Q8` and `B` cyclic of odd order.
#[derive(Clone, Debug)]
pub struct Q8OddCyclicDecomposition<'g> {
    pub q8_part: Subgroup<'g>,
    pub odd_cyclic_part: Subgroup<'g>,
}

fn generators_commute(a: &Subgroup<'_>, b: &Subgroup<'_>) -> bool {
    let g = a.group();
    a.generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

pub fn is_abelian(h: &Subgroup<'_>) -> bool {
    generators_commute(h, h)
}

pub fn is_cyclic(h: &Subgroup<'_>) -> bool {
    let g = h.group();
    h.elements().iter().any(|&x| g.element_order(x) == h.order())
}

/// A group is nilpotent iff each Sylow subgroup is normal, i.e. iff for
/// every prime `p` the `p`-elements number exactly the `p`-part of the order.
pub fn is_nilpotent(h: &Subgroup<'_>) -> bool {
    let g = h.group();
    let n = h.order() as u64;
    prime_divisors(n).into_iter().all(|p| {
        let p_elements = h
            .elements()
            .iter()
            .filter(|&&x| (g.element_order(x) as u64) == p_part(g.element_order(x) as u64, p))
            .count();
        p_elements as u64 == p_part(n, p)
    })
}

/// Every subgroup of `h` is normal in `h`.
pub fn is_dedekind(h: &Subgroup<'_>, lattice: &SubgroupLattice<'_>) -> bool {
    lattice.within(h).into_iter().all(|i| lattice.get(i).is_normal_in(h))
}

/// `(q, r)` when `h ≅ Z_q^r`, `r ≥ 1`.
pub fn elementary_abelian_params(h: &Subgroup<'_>) -> Option<(u64, u32)> {
    let q = prime_power_base(h.order() as u64)?;
    let g = h.group();
    if !is_abelian(h) || h.elements().iter().any(|&x| x != 0 && g.element_order(x) as u64 != q) {
        return None;
    }
    let mut r = 0;
    let mut n = h.order() as u64;
    while n > 1 {
        n /= q;
        r += 1;
    }
    Some((q, r))
}

fn involutions(h: &Subgroup<'_>) -> usize {
    let g = h.group();
    h.elements().iter().filter(|&&x| g.element_order(x) == 2).count()
}

/// Non-cyclic 2-group of order at least 8 with a unique involution.
pub fn is_generalized_quaternion(h: &Subgroup<'_>) -> bool {
    let n = h.order();
    n >= 8 && n.is_power_of_two() && !is_cyclic(h) && involutions(h) == 1
}

/// Order 8, non-abelian, unique involution: these pin down `Q8`.
pub fn is_q8(h: &Subgroup<'_>) -> bool {
    h.order() == 8 && !is_abelian(h) && involutions(h) == 1
}

pub fn q8_odd_cyclic_decomposition<'g>(
    h: &Subgroup<'g>,
    lattice: &SubgroupLattice<'g>,
) -> Option<Q8OddCyclicDecomposition<'g>> {
    if !h.order().is_multiple_of(8) || (h.order() / 8).is_multiple_of(2) {
        return None;
    }
    let inside = lattice.within(h);
    let odd = h.order() / 8;
    let q8s = inside.iter().map(|&i| lattice.get(i)).filter(|a| is_q8(a));
    for a in q8s {
        for &j in &inside {
            let b = lattice.get(j);
            if b.order() == odd
                && is_cyclic(b)
                && generators_commute(a, b)
                && a.intersect(b).map(|x| x.is_trivial()).unwrap_or(false)
            {
                return Some(Q8OddCyclicDecomposition {
                    q8_part: a.clone(),
                    odd_cyclic_part: b.clone(),
                });
            }
        }
    }
    None
}

/// Lattice indices of the nontrivial normal subgroups with no smaller
/// nontrivial normal subgroup inside them.
pub fn minimal_normal_subgroups(lattice: &SubgroupLattice<'_>) -> Vec<usize> {
    let normals: Vec<usize> = lattice
        .normal_subgroups()
        .into_iter()
        .filter(|&i| !lattice.get(i).is_trivial())
        .collect();
    normals
        .iter()
        .copied()
        .filter(|&i| {
            let n = lattice.get(i);
            !normals
                .iter()
                .any(|&j| j != i && lattice.get(j).order() < n.order() && lattice.get(j).is_subgroup_of(n))
        })
        .collect()
}

/// Whether every non-identity element of `m` fixes no non-identity element
/// of `n` under conjugation. Elements of prime order suffice, since a fixed
/// point of `x` is a fixed point of every power of `x`.
pub fn acts_fixed_point_freely(m: &Subgroup<'_>, n: &Subgroup<'_>) -> bool {
    let g = m.group();
    m.elements()
        .iter()
        .filter(|&&x| x != 0 && prime_power_base(g.element_order(x) as u64) == Some(g.element_order(x) as u64))
        .all(|&x| n.elements().iter().all(|&y| y == 0 || g.conjugate(y, x) != y))
}

/// Searches proper nontrivial normal subgroups `N` for a complement `M`
/// acting fixed-point-freely; the kernel of a Frobenius group is unique.
pub fn frobenius_decomposition<'g>(lattice: &SubgroupLattice<'g>) -> Option<FrobeniusDecomposition<'g>> {
    let order = lattice.group().order();
    for i in lattice.normal_subgroups() {
        let n = lattice.get(i);
        if n.is_trivial() || n.is_whole() {
            continue;
        }
        let target = order / n.order();
        let complement = lattice.subgroups().iter().find(|m| {
            m.order() == target
                && n.intersect(m).map(|x| x.is_trivial()).unwrap_or(false)
                && acts_fixed_point_freely(m, n)
        });
        if let Some(m) = complement {
            return Some(FrobeniusDecomposition {
                kernel: n.clone(),
                complement: m.clone(),
                kernel_params: elementary_abelian_params(n),
            });
        }
    }
    None
}

/// No subgroup strictly between 1 and `n` is normalized by every element of `p1`.
pub fn acts_irreducibly(p1: &Subgroup<'_>, n: &Subgroup<'_>, lattice: &SubgroupLattice<'_>) -> Result<bool> {
    if !core::ptr::eq(p1.group(), n.group()) {
        return Err(Error::ParentMismatch);
    }
    let g = p1.group();
    let normalizes = |l: &Subgroup<'_>| {
        p1.generators()
            .iter()
            .all(|&x| l.generators().iter().all(|&y| l.contains(g.conjugate(y, x))))
    };
    if !normalizes(n) {
        return Err(Error::NotNormalizing);
    }
    Ok(!lattice.within(n).into_iter().any(|i| {
        let l = lattice.get(i);
        !l.is_trivial() && l.order() < n.order() && normalizes(l)
    }))
}

/// `[A, B] ≠ 1`: some `a ∈ A`, `b ∈ B` fail to commute.
pub fn commutator_nontrivial(a: &Subgroup<'_>, b: &Subgroup<'_>) -> Result<bool> {
    if !core::ptr::eq(a.group(), b.group()) {
        return Err(Error::ParentMismatch);
    }
    Ok(!generators_commute(a, b))
}
