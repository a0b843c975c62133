use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::iso::{are_isomorphic, fingerprint, Fingerprint};

/// Largest order `enumerate_all_of_order` accepts by default.
pub const ENUMERATION_MAX_ORDER: usize = 12;

const UNKNOWN: u16 = u16::MAX;

/// Every group of order `n` up to isomorphism, found by exhaustive Cayley
/// table search. Orders above [`ENUMERATION_MAX_ORDER`] are refused.
pub fn enumerate_all_of_order(n: usize) -> Result<Vec<GroupTable>> {
    enumerate_all_of_order_capped(n, ENUMERATION_MAX_ORDER)
}

pub fn enumerate_all_of_order_capped(n: usize, max: usize) -> Result<Vec<GroupTable>> {
    if n == 0 || n > max {
        return Err(Error::EnumerationOrder { order: n, max });
    }
    let mut found: Vec<(Fingerprint, GroupTable)> = Vec::new();
    let mut divisors: Vec<usize> = (1..=n).filter(|m| n.is_multiple_of(*m)).collect();
    divisors.reverse();
    for m in divisors {
        let Some(mut search) = Search::new(n, m) else { continue };
        search.run(&mut |table| {
            let name = format!("SmallOrder{n}_{}", found.len() + 1);
            let provenance = format!("exhaustive table search, order {n}, largest element order {m}");
            let g = GroupTable::from_table(n, table.iter().map(|&v| v as u32).collect(), &name, &provenance)
                .expect("search emits only verified group tables");
            let fp = fingerprint(&g);
            if !found.iter().any(|(f, h)| *f == fp && are_isomorphic(h, &g)) {
                found.push((fp, g));
            }
        });
    }
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

/// Table search with a fixed element `a` of order `m`: label `j*m + i`
/// stands for `a^i t_j`, which pins down the rows of every power of `a`.
/// Completed tables must be associative and have no element of order above `m`.
struct Search {
    n: usize,
    m: usize,
    table: Vec<u16>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    trail: Vec<usize>,
}

impl Search {
    fn new(n: usize, m: usize) -> Option<Self> {
        let mut s = Search {
            n,
            m,
            table: alloc::vec![UNKNOWN; n * n],
            row_used: alloc::vec![false; n * n],
            col_used: alloc::vec![false; n * n],
            trail: Vec::new(),
        };
        for x in 0..n {
            if !(s.assign(0, x, x) && s.assign(x, 0, x)) {
                return None;
            }
        }
        for i in 1..m {
            for y in 1..n {
                let (j, l) = (y / m, y % m);
                if !s.assign(i, y, j * m + (i + l) % m) {
                    return None;
                }
            }
        }
        s.trail.clear();
        s.powers_ok().then_some(s)
    }

    /// False once some element is known to have order above `m`.
    fn powers_ok(&self) -> bool {
        (1..self.n).all(|x| {
            let mut p = x;
            for _ in 1..self.m {
                match self.get(p, x) {
                    Some(0) => return true,
                    Some(q) => p = q,
                    None => return true,
                }
            }
            false
        })
    }

    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.table[x * self.n + y];
        (v != UNKNOWN).then_some(v as usize)
    }

    fn set_raw(&mut self, x: usize, y: usize, v: usize) {
        let n = self.n;
        if self.table[x * n + y] == UNKNOWN {
            self.table[x * n + y] = v as u16;
            self.row_used[x * n + v] = true;
            self.col_used[y * n + v] = true;
            self.trail.push(x * n + y);
        }
    }

    fn undo_to(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            let v = self.table[cell] as usize;
            let (x, y) = (cell / n, cell % n);
            self.row_used[x * n + v] = false;
            self.col_used[y * n + v] = false;
            self.table[cell] = UNKNOWN;
        }
    }

    /// Assigns `(x, y) = v` and everything associativity forces from it.
    fn assign(&mut self, x: usize, y: usize, v: usize) -> bool {
        let n = self.n;
        let mut queue = alloc::vec![(x, y, v)];
        while let Some((x, y, v)) = queue.pop() {
            match self.get(x, y) {
                Some(u) if u == v => continue,
                Some(_) => return false,
                None => {}
            }
            if self.row_used[x * n + v] || self.col_used[y * n + v] {
                return false;
            }
            self.set_raw(x, y, v);
            // (x y) z = x (y z)
            for z in 0..n {
                let Some(yz) = self.get(y, z) else { continue };
                if !Self::require(self, (v, z), (x, yz), &mut queue) {
                    return false;
                }
            }
            // (w x) y = w (x y)
            for w in 0..n {
                let Some(wx) = self.get(w, x) else { continue };
                if !Self::require(self, (wx, y), (w, v), &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn require(&self, a: (usize, usize), b: (usize, usize), queue: &mut Vec<(usize, usize, usize)>) -> bool {
        match (self.get(a.0, a.1), self.get(b.0, b.1)) {
            (Some(p), Some(q)) => p == q,
            (Some(p), None) => {
                queue.push((b.0, b.1, p));
                true
            }
            (None, Some(q)) => {
                queue.push((a.0, a.1, q));
                true
            }
            (None, None) => true,
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[u16])) {
        let Some(cell) = self.table.iter().position(|&v| v == UNKNOWN) else {
            if self.is_valid() {
                emit(&self.table);
            }
            return;
        };
        let (x, y) = (cell / self.n, cell % self.n);
        for v in 0..self.n {
            if self.row_used[x * self.n + v] || self.col_used[y * self.n + v] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y, v) && self.powers_ok() {
                self.run(emit);
            }
            self.undo_to(mark);
        }
    }

    fn is_valid(&self) -> bool {
        let n = self.n;
        let t = |x: usize, y: usize| self.table[x * n + y] as usize;
        for x in 0..n {
            for y in 0..n {
                let xy = t(x, y);
                for z in 0..n {
                    if t(xy, z) != t(x, t(y, z)) {
                        return false;
                    }
                }
            }
        }
        (0..n).all(|x| {
            let mut p = x;
            for _ in 0..self.m {
                if p == 0 {
                    return true;
                }
                p = t(p, x);
            }
            false
        })
    }
}
