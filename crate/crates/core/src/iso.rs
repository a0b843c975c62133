//! Isomorphism testing between small group tables.

use alloc::vec::Vec;

use crate::group::GroupTable;
use crate::subgroup::Subgroup;

/// Cheap isomorphism invariants; unequal fingerprints rule out isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    /// Sorted `(element order, count)` pairs.
    pub order_profile: Vec<(u32, usize)>,
    pub center_size: usize,
    pub abelian: bool,
    pub conjugacy_classes: usize,
}

pub fn fingerprint(g: &GroupTable) -> Fingerprint {
    let mut profile: Vec<(u32, usize)> = Vec::new();
    let mut orders = g.element_orders().to_vec();
    orders.sort_unstable();
    for o in orders {
        match profile.last_mut() {
            Some((last, count)) if *last == o => *count += 1,
            _ => profile.push((o, 1)),
        }
    }
    let mut class_seen = alloc::vec![false; g.order()];
    let mut classes = 0;
    for x in g.elements() {
        if class_seen[x] {
            continue;
        }
        classes += 1;
        for y in g.elements() {
            class_seen[g.conjugate(x, y)] = true;
        }
    }
    Fingerprint {
        order: g.order(),
        order_profile: profile,
        center_size: g.center_size(),
        abelian: g.is_abelian(),
        conjugacy_classes: classes,
    }
}

/// A small generating set: repeatedly adjoin an element of largest order
/// outside the current span.
pub fn greedy_generators(g: &GroupTable) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| (core::cmp::Reverse(g.element_order(x)), x));
    let mut span = Subgroup::trivial(g);
    let mut gens = Vec::new();
    for x in by_order {
        if !span.contains(x) {
            span = span.extend(x);
            gens.push(x);
        }
    }
    gens
}

/// Breadth-first words over `gens`: `(element, parent, generator slot)`.
fn spanning_tree(g: &GroupTable, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut seen = alloc::vec![false; g.order()];
    seen[0] = true;
    let mut tree = alloc::vec![(0, 0, usize::MAX)];
    let mut i = 0;
    while i < tree.len() {
        let x = tree[i].0;
        for (s, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !seen[y] {
                seen[y] = true;
                tree.push((y, x, s));
            }
        }
        i += 1;
    }
    tree
}

/// Extends `gens[s] ↦ images[s]` along the spanning tree and checks it is an
/// injective map compatible with every generator edge, hence an injective
/// homomorphism on `⟨gens⟩`.
fn extend_map(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    images: &[usize],
    tree: &[(usize, usize, usize)],
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = alloc::vec![UNSET; a.order()];
    let mut used = alloc::vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    for &(x, parent, s) in &tree[1..] {
        let y = b.mul(map[parent], images[s]);
        if used[y] {
            return None;
        }
        used[y] = true;
        map[x] = y;
    }
    for &(x, _, _) in tree {
        for (s, &gen) in gens.iter().enumerate() {
            if map[a.mul(x, gen)] != b.mul(map[x], images[s]) {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `a → b` as an index map, if one exists.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let gens = greedy_generators(a);
    let trees: Vec<_> = (0..=gens.len()).map(|k| spanning_tree(a, &gens[..k])).collect();
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &trees, &mut images)
}

fn search(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    trees: &[Vec<(usize, usize, usize)>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend_map(a, b, gens, images, &trees[depth])?;
        return (trees[depth].len() == a.order()).then_some(map);
    }
    let want = a.element_order(gens[depth]);
    for y in b.elements() {
        if b.element_order(y) != want {
            continue;
        }
        images.push(y);
        if extend_map(a, b, &gens[..=depth], images, &trees[depth + 1]).is_some() {
            if let Some(map) = search(a, b, gens, trees, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    find_isomorphism(a, b).is_some()
}
