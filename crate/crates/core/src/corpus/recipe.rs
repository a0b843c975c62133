use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_MAX_ORDER};
use crate::perm::Permutation;

/// A product of powers of a group's recorded generators, read left to right:
/// `[(0, 2), (1, -1)]` is `g₀² g₁⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    /// `g₀^e₀ g₁^e₁ …`, the usual way to write an element of an abelian group.
    pub fn exponents(exps: &[i64]) -> Self {
        Word(exps.iter().copied().enumerate().filter(|&(_, e)| e != 0).collect())
    }

    fn evaluate(&self, g: &GroupTable) -> Result<usize> {
        let mut acc = 0;
        for &(slot, e) in &self.0 {
            let &x = g
                .generators()
                .get(slot)
                .ok_or_else(|| Error::InvalidAction(format!("no kernel generator #{slot}")))?;
            let ord = g.element_order(x) as i64;
            acc = g.mul(acc, g.pow(x, e.rem_euclid(ord) as u64));
        }
        Ok(acc)
    }
}

/// How to construct a corpus group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRecipe {
    Cyclic(usize),
    /// Symmetries of the `n`-gon, order `2n`.
    Dihedral(usize),
    /// `⟨a, b | a^{2n} = 1, b² = aⁿ, b⁻¹ab = a⁻¹⟩` of the given order `4n`, `n ≥ 2`.
    GeneralizedQuaternion(usize),
    ElementaryAbelian { p: usize, rank: usize },
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<GroupRecipe>, Box<GroupRecipe>),
    /// `N ⋊ M`. `action[s][t]` is the image of kernel generator `t` under
    /// acting generator `s`, as a word in the kernel generators.
    SemidirectProduct {
        kernel: Box<GroupRecipe>,
        acting: Box<GroupRecipe>,
        action: Vec<Vec<Word>>,
    },
    FromGenerators(Vec<Permutation>),
}

impl GroupRecipe {
    pub fn direct(a: GroupRecipe, b: GroupRecipe) -> Self {
        GroupRecipe::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn semidirect(kernel: GroupRecipe, acting: GroupRecipe, action: Vec<Vec<Word>>) -> Self {
        GroupRecipe::SemidirectProduct {
            kernel: Box::new(kernel),
            acting: Box::new(acting),
            action,
        }
    }

    /// `Z_q^r ⋊ M`, each acting generator given as an `r × r` matrix over
    /// `F_q` acting on column vectors.
    pub fn matrix_action(q: usize, r: usize, acting: GroupRecipe, matrices: &[&[&[i64]]]) -> Self {
        let kernel = if r == 1 {
            GroupRecipe::Cyclic(q)
        } else {
            GroupRecipe::ElementaryAbelian { p: q, rank: r }
        };
        let action = matrices
            .iter()
            .map(|m| (0..r).map(|col| Word::exponents(&(0..r).map(|row| m[row][col]).collect::<Vec<_>>())).collect())
            .collect();
        GroupRecipe::semidirect(kernel, acting, action)
    }
}

pub fn build(recipe: &GroupRecipe, name: &str) -> Result<GroupTable> {
    build_capped(recipe, name, DEFAULT_MAX_ORDER)
}

pub fn build_capped(recipe: &GroupRecipe, name: &str, max_order: usize) -> Result<GroupTable> {
    match recipe {
        GroupRecipe::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::InvalidRecipe("cyclic group of order 0".into()));
            }
            let cycle: Vec<usize> = (0..*n).collect();
            let gens = if *n == 1 {
                Vec::new()
            } else {
                alloc::vec![Permutation::from_cycles(*n, &[&cycle])?]
            };
            GroupTable::from_generators_capped(&gens, name, max_order)
        }
        GroupRecipe::Dihedral(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidRecipe("dihedral group of a 0-gon".into()));
            }
            // r^i s^j ↦ i + n j
            let rule = move |x: usize, y: usize| {
                let (i, j) = (x % n, x / n);
                let (k, l) = (y % n, y / n);
                let rot = if j == 0 { i + k } else { i + n - k };
                (rot % n) + n * ((j + l) % 2)
            };
            from_rule(2 * n, rule, &[1 % (2 * n), n], name, max_order)
        }
        GroupRecipe::GeneralizedQuaternion(order) => {
            let order = *order;
            if order < 8 || order % 4 != 0 {
                return Err(Error::InvalidRecipe(format!("generalized quaternion order {order}")));
            }
            let m = order / 2;
            // a^i b^j ↦ i + m j
            let rule = move |x: usize, y: usize| {
                let (i, j) = (x % m, x / m);
                let (k, l) = (y % m, y / m);
                if j == 0 {
                    (i + k) % m + m * l
                } else if l == 0 {
                    (i + m - k) % m + m
                } else {
                    (i + m - k + m / 2) % m
                }
            };
            from_rule(order, rule, &[1, m], name, max_order)
        }
        GroupRecipe::ElementaryAbelian { p, rank } => {
            let (p, rank) = (*p, *rank);
            if p < 2 || rank == 0 {
                return Err(Error::InvalidRecipe(format!("elementary abelian {p}^{rank}")));
            }
            let degree = p * rank;
            let gens = (0..rank)
                .map(|i| {
                    let cycle: Vec<usize> = (i * p..(i + 1) * p).collect();
                    Permutation::from_cycles(degree, &[&cycle])
                })
                .collect::<Result<Vec<_>>>()?;
            GroupTable::from_generators_capped(&gens, name, max_order)
        }
        GroupRecipe::Symmetric(n) => {
            let n = *n;
            let gens = match n {
                0 => return Err(Error::InvalidRecipe("symmetric group on 0 points".into())),
                1 => Vec::new(),
                2 => alloc::vec![Permutation::from_cycles(2, &[&[0, 1]])?],
                _ => {
                    let cycle: Vec<usize> = (0..n).collect();
                    alloc::vec![
                        Permutation::from_cycles(n, &[&cycle])?,
                        Permutation::from_cycles(n, &[&[0, 1]])?,
                    ]
                }
            };
            GroupTable::from_generators_capped(&gens, name, max_order)
        }
        GroupRecipe::Alternating(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidRecipe("alternating group on 0 points".into()));
            }
            let gens = (2..n)
                .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
                .collect::<Result<Vec<_>>>()?;
            GroupTable::from_generators_capped(&gens, name, max_order)
        }
        GroupRecipe::DirectProduct(a, b) => {
            let a = build_capped(a, "A", max_order)?;
            let b = build_capped(b, "B", max_order)?;
            check_product_order(&a, &b, max_order)?;
            let nb = b.order();
            let rule = |x: usize, y: usize| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
            let gens = product_generators(&a, &b);
            from_rule(a.order() * nb, rule, &gens, name, max_order)
        }
        GroupRecipe::SemidirectProduct { kernel, acting, action } => {
            let n = build_capped(kernel, "N", max_order)?;
            let m = build_capped(acting, "M", max_order)?;
            check_product_order(&n, &m, max_order)?;
            let alpha = action_table(&n, &m, action)?;
            let nm = m.order();
            let nn = n.order();
            let rule = |x: usize, y: usize| {
                let (n1, m1) = (x / nm, x % nm);
                let (n2, m2) = (y / nm, y % nm);
                n.mul(n1, alpha[m1 * nn + n2]) * nm + m.mul(m1, m2)
            };
            let gens = product_generators(&n, &m);
            from_rule(nn * nm, rule, &gens, name, max_order)
        }
        GroupRecipe::FromGenerators(gens) => GroupTable::from_generators_capped(gens, name, max_order),
    }
}

fn check_product_order(a: &GroupTable, b: &GroupTable, max_order: usize) -> Result<()> {
    if a.order() * b.order() > max_order {
        return Err(Error::GroupTooLarge { limit: max_order });
    }
    Ok(())
}

fn product_generators(a: &GroupTable, b: &GroupTable) -> Vec<usize> {
    let nb = b.order();
    a.generators()
        .iter()
        .map(|&g| g * nb)
        .chain(b.generators().iter().copied())
        .collect()
}

/// Realizes a multiplication rule on `0..order` (identity 0) through the
/// right regular permutations of `gens`, then closes them.
fn from_rule(
    order: usize,
    rule: impl Fn(usize, usize) -> usize,
    gens: &[usize],
    name: &str,
    max_order: usize,
) -> Result<GroupTable> {
    let perms = gens
        .iter()
        .filter(|&&g| g != 0)
        .map(|&g| Permutation::from_images((0..order).map(|x| rule(x, g) as u32).collect()))
        .collect::<Result<Vec<_>>>()?;
    let table = GroupTable::from_generators_capped(&perms, name, max_order)?;
    if table.order() != order {
        return Err(Error::InvalidRecipe(format!(
            "construction closed to order {} instead of {order}",
            table.order()
        )));
    }
    Ok(table)
}

/// `alpha[m * |N| + x]` = image of `x` under the automorphism attached to `m`.
fn action_table(n: &GroupTable, m: &GroupTable, action: &[Vec<Word>]) -> Result<Vec<usize>> {
    let ngens = n.generators();
    if action.len() != m.generators().len() {
        return Err(Error::InvalidAction(format!(
            "{} acting generator(s) but {} image list(s)",
            m.generators().len(),
            action.len()
        )));
    }
    let nn = n.order();
    let kernel_tree = spanning_tree(n, ngens);
    let mut gen_autos = Vec::with_capacity(action.len());
    for (s, images) in action.iter().enumerate() {
        if images.len() != ngens.len() {
            return Err(Error::InvalidAction(format!(
                "acting generator #{s}: {} image(s) for {} kernel generator(s)",
                images.len(),
                ngens.len()
            )));
        }
        let images = images.iter().map(|w| w.evaluate(n)).collect::<Result<Vec<_>>>()?;
        gen_autos.push(extend_to_automorphism(n, ngens, &images, &kernel_tree, s)?);
    }

    // α_{m·s} = α_m ∘ α_s, checked on every edge of the acting group's Cayley graph.
    let nm = m.order();
    const UNSET: usize = usize::MAX;
    let mut alpha = alloc::vec![UNSET; nm * nn];
    for (x, slot) in alpha[..nn].iter_mut().enumerate() {
        *slot = x;
    }
    let mut assigned = alloc::vec![false; nm];
    assigned[0] = true;
    let mut queue = alloc::vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, &g) in m.generators().iter().enumerate() {
            let y = m.mul(x, g);
            let composed: Vec<usize> = (0..nn).map(|k| alpha[x * nn + gen_autos[s][k]]).collect();
            if assigned[y] {
                if alpha[y * nn..(y + 1) * nn] != composed[..] {
                    return Err(Error::InvalidAction(
                        "generator images do not define a homomorphism from the acting group".into(),
                    ));
                }
            } else {
                alpha[y * nn..(y + 1) * nn].copy_from_slice(&composed);
                assigned[y] = true;
                queue.push(y);
            }
        }
        i += 1;
    }
    Ok(alpha)
}

fn spanning_tree(g: &GroupTable, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut seen = alloc::vec![false; g.order()];
    seen[0] = true;
    let mut tree = alloc::vec![(0, 0, 0)];
    let mut i = 0;
    while i < tree.len() {
        let x = tree[i].0;
        for (t, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !seen[y] {
                seen[y] = true;
                tree.push((y, x, t));
            }
        }
        i += 1;
    }
    tree
}

fn extend_to_automorphism(
    n: &GroupTable,
    gens: &[usize],
    images: &[usize],
    tree: &[(usize, usize, usize)],
    slot: usize,
) -> Result<Vec<usize>> {
    let mut map = alloc::vec![0usize; n.order()];
    for &(x, parent, t) in &tree[1..] {
        map[x] = n.mul(map[parent], images[t]);
    }
    for &(x, _, _) in tree {
        for (t, &g) in gens.iter().enumerate() {
            if map[n.mul(x, g)] != n.mul(map[x], images[t]) {
                return Err(Error::InvalidAction(format!(
                    "images under acting generator #{slot} do not extend to a homomorphism of the kernel"
                )));
            }
        }
    }
    let mut hit = alloc::vec![false; n.order()];
    for &y in &map {
        if hit[y] {
            return Err(Error::InvalidAction(format!(
                "acting generator #{slot} does not induce a bijection of the kernel"
            )));
        }
        hit[y] = true;
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::structure::{is_cyclic, is_generalized_quaternion};
    use crate::subgroup::Subgroup;

    #[test]
    fn families() {
        let z7 = build(&GroupRecipe::Cyclic(7), "Z7").unwrap();
        assert_eq!(z7.order(), 7);
        assert!(z7.is_abelian() && is_cyclic(&Subgroup::whole(&z7)));
        assert_eq!(build(&GroupRecipe::Cyclic(1), "Z1").unwrap().order(), 1);
        for n in 1..=12 {
            assert_eq!(build(&GroupRecipe::Dihedral(n), "D").unwrap().order(), 2 * n);
        }
        for order in [8, 12, 16, 32] {
            let q = build(&GroupRecipe::GeneralizedQuaternion(order), "Q").unwrap();
            assert_eq!(q.order(), order);
            assert_eq!(q.element_orders().iter().filter(|&&o| o == 2).count(), 1);
            assert_eq!(is_generalized_quaternion(&Subgroup::whole(&q)), order.is_power_of_two());
        }
        assert_eq!(build(&GroupRecipe::Symmetric(4), "S4").unwrap().order(), 24);
        assert_eq!(build(&GroupRecipe::Alternating(5), "A5").unwrap().order(), 60);
        assert_eq!(build(&GroupRecipe::ElementaryAbelian { p: 3, rank: 2 }, "E9").unwrap().order(), 9);
    }

    #[test]
    fn frobenius_of_order_21() {
        let r = GroupRecipe::semidirect(
            GroupRecipe::Cyclic(7),
            GroupRecipe::Cyclic(3),
            alloc::vec![alloc::vec![Word::exponents(&[2])]],
        );
        let g = build(&r, "Z7:Z3").unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
    }

    #[test]
    fn invalid_actions_are_rejected() {
        // x -> 3x has order 6 mod 7, not a homomorphism from Z3
        let r = GroupRecipe::semidirect(
            GroupRecipe::Cyclic(7),
            GroupRecipe::Cyclic(3),
            alloc::vec![alloc::vec![Word::exponents(&[3])]],
        );
        assert!(matches!(build(&r, "bad"), Err(Error::InvalidAction(_))));
        // x -> 0 is not bijective
        let r = GroupRecipe::semidirect(
            GroupRecipe::Cyclic(7),
            GroupRecipe::Cyclic(3),
            alloc::vec![alloc::vec![Word::exponents(&[0])]],
        );
        assert!(matches!(build(&r, "bad"), Err(Error::InvalidAction(_))));
        // Z4 -> Z4 sending the generator to its square is not an automorphism
        let r = GroupRecipe::semidirect(
            GroupRecipe::Cyclic(4),
            GroupRecipe::Cyclic(2),
            alloc::vec![alloc::vec![Word::exponents(&[2])]],
        );
        assert!(matches!(build(&r, "bad"), Err(Error::InvalidAction(_))));
        let r = GroupRecipe::semidirect(GroupRecipe::Cyclic(7), GroupRecipe::Cyclic(3), alloc::vec![]);
        assert!(matches!(build(&r, "bad"), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn trivial_action_is_the_direct_product() {
        let semi = GroupRecipe::semidirect(
            GroupRecipe::Cyclic(3),
            GroupRecipe::Symmetric(3),
            alloc::vec![alloc::vec![Word::exponents(&[1])], alloc::vec![Word::exponents(&[1])]],
        );
        let direct = GroupRecipe::direct(GroupRecipe::Cyclic(3), GroupRecipe::Symmetric(3));
        let a = build(&semi, "x").unwrap();
        let b = build(&direct, "x").unwrap();
        assert_eq!(a.order(), 18);
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }

    #[test]
    fn product_caps() {
        let r = GroupRecipe::direct(GroupRecipe::Symmetric(5), GroupRecipe::Symmetric(4));
        assert_eq!(build_capped(&r, "big", 2000).unwrap_err(), Error::GroupTooLarge { limit: 2000 });
    }

    #[test]
    fn dihedral_three_is_symmetric_three() {
        let d3 = build(&GroupRecipe::Dihedral(3), "D3").unwrap();
        let s3 = build(&GroupRecipe::Symmetric(3), "S3").unwrap();
        assert!(are_isomorphic(&d3, &s3));
    }
}
