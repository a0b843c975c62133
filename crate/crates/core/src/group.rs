//! Concrete finite groups as dense multiplication tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the order of a group produced by generator closure.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Orders up to this bound get an exhaustive associativity check.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 256;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite group on the element indices `0..order`, identity at index 0.
///
/// Immutable once built; `mul`, `inv` and element orders are precomputed.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    element_orders: Vec<u32>,
    generators: Vec<usize>,
    permutations: Vec<Permutation>,
    name: String,
    provenance: String,
}

impl GroupTable {
    /// Closure of `gens` under composition, with the default order cap.
    pub fn from_generators(gens: &[Permutation], name: &str) -> Result<Self> {
        Self::from_generators_capped(gens, name, DEFAULT_MAX_ORDER)
    }

    /// Closure of `gens` under composition. Elements are numbered in
    /// breadth-first order from the identity, trying generators in the
    /// given order, so the same input always yields the same table.
    pub fn from_generators_capped(gens: &[Permutation], name: &str, max_order: usize) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Ok(Self::trivial(name));
        };
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        let k = gens.len();
        let mut elements = alloc::vec![Permutation::identity(degree)];
        let mut index: BTreeMap<Permutation, usize> = BTreeMap::new();
        index.insert(elements[0].clone(), 0);
        // right_gen[x * k + s] = index of x * gens[s]
        let mut right_gen: Vec<u32> = Vec::new();
        // parent[j] = (p, s) with element j = element p * gens[s]
        let mut parent: Vec<(u32, u32)> = alloc::vec![(0, 0)];

        let mut cursor = 0;
        while cursor < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let prod = elements[cursor].then(g);
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= max_order {
                            return Err(Error::GroupTooLarge { limit: max_order });
                        }
                        index.insert(prod.clone(), id);
                        elements.push(prod);
                        parent.push((cursor as u32, s as u32));
                        id
                    }
                };
                right_gen.push(id as u32);
            }
            cursor += 1;
        }

        let n = elements.len();
        let mut mul = alloc::vec![0u32; n * n];
        for i in 0..n {
            mul[i * n] = i as u32;
        }
        for j in 1..n {
            let (p, s) = parent[j];
            for i in 0..n {
                let ip = mul[i * n + p as usize] as usize;
                mul[i * n + j] = right_gen[ip * k + s as usize];
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let provenance = {
            let mut s = format!("closure of {k} permutation(s) of degree {degree}:");
            for g in gens {
                s.push(' ');
                s.push_str(&format!("{g}"));
            }
            s
        };
        let mut table = Self::assemble(n, mul, generators, name.into(), provenance);
        table.permutations = elements;
        Ok(table)
    }

    pub fn trivial(name: &str) -> Self {
        Self::assemble(1, alloc::vec![0], Vec::new(), name.into(), "trivial group".into())
    }

    /// Wraps an explicit Cayley table after checking the group axioms.
    /// Index 0 must be the identity.
    pub fn from_table(order: usize, mul: Vec<u32>, name: &str, provenance: &str) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for order {order}",
                order * order
            )));
        }
        for i in 0..order {
            if mul[i * order] as usize != i || mul[i] as usize != i {
                return Err(Error::InvalidTable("index 0 is not a two-sided identity".into()));
            }
        }
        for i in 0..order {
            let mut row = alloc::vec![false; order];
            let mut col = alloc::vec![false; order];
            for j in 0..order {
                let r = mul[i * order + j] as usize;
                let c = mul[j * order + i] as usize;
                if r >= order || c >= order || row[r] || col[c] {
                    return Err(Error::InvalidTable("table is not a Latin square".into()));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        let mut generators = Vec::new();
        let mut span = alloc::vec![false; order];
        span[0] = true;
        let mut span_list = alloc::vec![0usize];
        for x in 0..order {
            if span[x] {
                continue;
            }
            generators.push(x);
            // re-close the span under all chosen generators
            let mut cursor = 0;
            while cursor < span_list.len() {
                let y = span_list[cursor];
                for &g in &generators {
                    let z = mul[y * order + g] as usize;
                    if !span[z] {
                        span[z] = true;
                        span_list.push(z);
                    }
                }
                cursor += 1;
            }
            if !span[x] {
                span[x] = true;
                span_list.push(x);
            }
        }
        let table = Self::assemble(order, mul, generators, name.into(), provenance.into());
        table.check_associativity()?;
        Ok(table)
    }

    fn assemble(order: usize, mul: Vec<u32>, generators: Vec<usize>, name: String, provenance: String) -> Self {
        let mut inv = alloc::vec![0u32; order];
        for i in 0..order {
            for j in 0..order {
                if mul[i * order + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        let mut table = GroupTable {
            order,
            mul,
            inv,
            element_orders: Vec::new(),
            generators,
            permutations: Vec::new(),
            name,
            provenance,
        };
        table.element_orders = (0..order).map(|x| table.compute_order(x) as u32).collect();
        table
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Checks associativity: every triple for small orders, a fixed
    /// pseudo-random sample of triples above that.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (next(), next(), next());
                if bad(a, b, c) {
                    return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ · x · g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.element_orders[x] as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders[x] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    /// Element indices of the generating set recorded at construction.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The permutation an element came from, for groups built by closure.
    pub fn permutation(&self, x: usize) -> Option<&Permutation> {
        self.permutations.get(x)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.permutations.iter().position(|q| q == p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// The right regular representation of element `g`: `x ↦ x · g`.
    pub fn right_regular(&self, g: usize) -> Permutation {
        let images = (0..self.order).map(|x| self.mul(x, g) as u32).collect();
        Permutation::from_images(images).expect("table rows are bijections")
    }

    pub fn center_size(&self) -> usize {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .count()
    }
}

/// Strictly increasing list of the primes dividing `n`.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(p)` when `n` is a power `p^k` with `k ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(degree, &[c]).unwrap()
    }

    fn s3() -> GroupTable {
        GroupTable::from_generators(&[cyc(3, &[0, 1, 2]), cyc(3, &[0, 1])], "S3").unwrap()
    }

    #[test]
    fn closure_orders() {
        let z3 = GroupTable::from_generators(&[cyc(3, &[0, 1, 2])], "Z3").unwrap();
        assert_eq!(z3.order(), 3);
        assert_eq!(s3().order(), 6);
        let trivial = GroupTable::from_generators(&[], "1").unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.identity(), 0);
    }

    #[test]
    fn closure_respects_cap() {
        let gens = [cyc(5, &[0, 1, 2, 3, 4]), cyc(5, &[0, 1])];
        assert_eq!(
            GroupTable::from_generators_capped(&gens, "S5", 100).unwrap_err(),
            Error::GroupTooLarge { limit: 100 }
        );
        assert_eq!(GroupTable::from_generators_capped(&gens, "S5", 120).unwrap().order(), 120);
    }

    #[test]
    fn mismatched_degrees() {
        let err = GroupTable::from_generators(&[cyc(3, &[0, 1]), cyc(4, &[0, 1])], "x").unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn s3_conjugation() {
        let g = s3();
        let (r, t) = (g.generators()[0], g.generators()[1]);
        assert_eq!(g.element_order(r), 3);
        assert_eq!(g.element_order(t), 2);
        let c = g.conjugate(t, r);
        assert_eq!(g.permutation(c).unwrap(), &cyc(3, &[1, 2]));
        assert_eq!(g.index_of(&cyc(3, &[1, 2])), Some(c));
        assert_eq!(g.conjugate(0, r), 0);
    }

    #[test]
    fn tables_are_groups() {
        let g = s3();
        g.check_associativity().unwrap();
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.mul(g.inv(x), x), 0);
            assert_eq!(g.order() % g.element_order(x), 0);
        }
    }

    #[test]
    fn from_table_rejects_non_groups() {
        // Latin square with identity that is not associative (order 5 loop)
        let rows: [[u32; 5]; 5] = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let mul = rows.iter().flatten().copied().collect();
        assert!(GroupTable::from_table(5, mul, "loop", "").is_err());
        assert!(GroupTable::from_table(2, alloc::vec![0, 1, 1, 1], "x", "").is_err());
    }

    #[test]
    fn from_table_roundtrip() {
        let g = s3();
        let mul: Vec<u32> = (0..36).map(|k| g.mul(k / 6, k % 6) as u32).collect();
        let h = GroupTable::from_table(6, mul, "S3", "table").unwrap();
        assert_eq!(h.element_orders(), g.element_orders());
        let span = crate::subgroup::Subgroup::generated(&h, h.generators());
        assert_eq!(span.order(), 6);
    }

    #[test]
    fn primes() {
        assert!(prime_divisors(1).is_empty());
        assert_eq!(prime_divisors(12), [2, 3]);
        assert_eq!(prime_divisors(168), [2, 3, 7]);
        assert_eq!(p_part(168, 2), 8);
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert!(is_prime(11) && !is_prime(1) && !is_prime(9));
    }
}
