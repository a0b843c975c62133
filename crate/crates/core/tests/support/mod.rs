//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls the engine's lattice, isomorphism or enumeration code.
//!
//! Group tables: a second table search fills cells in order of
//! `max(row, col)`, uses the least number heuristic (only one
//! never-mentioned element is ever tried), checks associativity on every
//! fully known triple, and identifies isomorphic tables by a brute-force
//! canonical form.
//!
//! Subgroups: every subset closed under multiplication, found by an
//! include/exclude walk over the elements in index order.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tisub_core::GroupTable;

const UNKNOWN: usize = usize::MAX;

struct Oracle {
    n: usize,
    t: Vec<usize>,
    cells: Vec<(usize, usize)>,
    found: BTreeSet<Vec<usize>>,
}

impl Oracle {
    fn new(n: usize) -> Self {
        let mut t = vec![UNKNOWN; n * n];
        for x in 0..n {
            t[x] = x;
            t[x * n] = x;
        }
        let mut cells = Vec::new();
        for k in 1..n {
            for j in 1..k {
                cells.push((k, j));
                cells.push((j, k));
            }
            cells.push((k, k));
        }
        Oracle {
            n,
            t,
            cells,
            found: BTreeSet::new(),
        }
    }

    fn get(&self, x: usize, y: usize) -> usize {
        if x == UNKNOWN || y == UNKNOWN {
            UNKNOWN
        } else {
            self.t[x * self.n + y]
        }
    }

    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let l = self.get(self.get(a, b), c);
        let r = self.get(a, self.get(b, c));
        l == UNKNOWN || r == UNKNOWN || l == r
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        for z in 0..n {
            if !self.triple_ok(x, y, z) || !self.triple_ok(z, x, y) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.get(a, b) == x && !self.triple_ok(a, b, y) {
                    return false;
                }
                if self.get(a, b) == y && !self.triple_ok(x, a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, depth: usize, mentioned: usize) {
        let n = self.n;
        if depth == self.cells.len() {
            self.found.insert(canonical_form(n, &self.t));
            return;
        }
        let (x, y) = self.cells[depth];
        let mentioned = mentioned.max(x.max(y));
        let limit = (mentioned + 1).min(n - 1);
        for v in 0..=limit {
            let row_clash = (0..n).any(|j| self.t[x * n + j] == v);
            let col_clash = (0..n).any(|i| self.t[i * n + y] == v);
            if row_clash || col_clash {
                continue;
            }
            self.t[x * n + y] = v;
            if self.consistent(x, y) {
                self.search(depth + 1, mentioned.max(v));
            }
            self.t[x * n + y] = UNKNOWN;
        }
    }
}

fn generated(n: usize, t: &[usize], gens: &[usize]) -> Vec<usize> {
    // BFS labels: order[i] is the element that gets label i
    let mut seen = vec![false; n];
    let mut order = vec![0];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &g in gens {
            let y = t[order[i] * n + g];
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
        i += 1;
    }
    order
}

/// Least relabeled table over all BFS labelings from a generating tuple of
/// the smallest possible length.
pub fn canonical_form(n: usize, t: &[usize]) -> Vec<usize> {
    for k in 0..=n {
        let mut best: Option<Vec<usize>> = None;
        let mut tuple = vec![0usize; k];
        loop {
            let order = generated(n, t, &tuple);
            if order.len() == n {
                let mut label = vec![0; n];
                for (i, &x) in order.iter().enumerate() {
                    label[x] = i;
                }
                let mut form = vec![0; n * n];
                for a in 0..n {
                    for b in 0..n {
                        form[label[a] * n + label[b]] = label[t[a * n + b]];
                    }
                }
                if best.as_ref().is_none_or(|b| form < *b) {
                    best = Some(form);
                }
            }
            let mut pos = 0;
            while pos < k {
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
        if let Some(b) = best {
            return b;
        }
    }
    unreachable!("the whole group generates itself")
}

pub fn oracle_forms(n: usize) -> BTreeSet<Vec<usize>> {
    let mut o = Oracle::new(n);
    o.search(0, 0);
    o.found
}

pub fn table_of(g: &GroupTable) -> Vec<usize> {
    let n = g.order();
    (0..n * n).map(|i| g.mul(i / n, i % n)).collect()
}

/// Every subgroup as a sorted element list.
pub fn naive_subgroups(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut chosen = vec![false; n];
    chosen[0] = true;
    let mut out = BTreeSet::new();
    subsets(g, 1, &mut chosen, &mut out);
    out
}

fn subsets(g: &GroupTable, x: usize, chosen: &mut Vec<bool>, out: &mut BTreeSet<Vec<usize>>) {
    let n = g.order();
    if x == n {
        let members: Vec<usize> = (0..n).filter(|&i| chosen[i]).collect();
        if members.iter().all(|&a| members.iter().all(|&b| chosen[g.mul(a, b)])) {
            out.insert(members);
        }
        return;
    }
    // decided elements are 0..x; a product landing there must agree
    let forced = (1..x).any(|a| chosen[a] && (1..x).any(|b| chosen[b] && g.mul(a, b) == x));
    if !forced {
        subsets(g, x + 1, chosen, out);
    }
    chosen[x] = true;
    let closed_so_far = (0..=x).filter(|&a| chosen[a]).all(|a| {
        [g.mul(a, x), g.mul(x, a)].iter().all(|&p| p > x || chosen[p])
    });
    if closed_so_far {
        subsets(g, x + 1, chosen, out);
    }
    chosen[x] = false;
}

/// Cross-module predicate laws for one group; returns a description of each violation.
pub fn predicate_violations(g: &GroupTable) -> Vec<String> {
    use tisub_core::structure::{frobenius_decomposition, is_nilpotent};
    use tisub_core::{all_subgroups, prime_divisors, Subgroup};

    let mut bad = Vec::new();
    let lattice = all_subgroups(g).unwrap();
    let name = g.name();
    let mut all_subnormal = true;
    for h in lattice.subgroups() {
        let (normal, subnormal, ti, sc) = (h.is_normal(), h.is_subnormal(), h.is_ti(), h.is_self_centralizing());
        all_subnormal &= subnormal;
        if normal && !subnormal {
            bad.push(format!("{name}: normal but not subnormal: {}", h.describe()));
        }
        if normal && !ti {
            bad.push(format!("{name}: normal but not TI: {}", h.describe()));
        }
        for &x in g.generators() {
            let k = h.conjugate(x);
            if (k.is_ti(), k.is_subnormal(), k.is_self_centralizing()) != (ti, subnormal, sc) {
                bad.push(format!("{name}: predicates change under conjugation of {}", h.describe()));
            }
        }
    }
    if is_nilpotent(&Subgroup::whole(g)) != all_subnormal {
        bad.push(format!("{name}: nilpotent does not match every subgroup subnormal"));
    }
    for p in prime_divisors(g.order() as u64) {
        let sylows = lattice.sylow_subgroups(p).unwrap();
        let count = sylows.len() as u64;
        let index = g.order() as u64 / sylows[0].order() as u64;
        if count % p != 1 || !index.is_multiple_of(count) {
            bad.push(format!("{name}: {count} Sylow {p}-subgroups"));
        }
    }
    if let Some(d) = frobenius_decomposition(&lattice) {
        if (d.kernel.order() - 1) % d.complement.order() != 0 {
            bad.push(format!("{name}: complement order does not divide |kernel| - 1"));
        }
    }
    bad
}
