//! HLT coset enumeration over the trivial subgroup.
//!
//! Column `2g` holds the action of generator `g`, column `2g+1` that of its inverse.
//! Coincidences are processed with a union-find forest and a merge queue.

use super::presentation::Presentation;
use crate::error::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// Default coset budget.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

struct CosetTable {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

#[inline]
fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl CosetTable {
    fn new(cols: usize, max_cosets: usize) -> Self {
        CosetTable { cols, table: vec![UNDEF; cols], parent: vec![0], max_cosets, queue: Vec::new() }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32> {
        if self.len() >= self.max_cosets {
            return Err(Error::CosetBudgetExceeded(self.max_cosets));
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.set(g, x, UNDEF);
                let xi = inv_col(x);
                if self.get(d, xi) == g {
                    self.set(d, xi, UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.get(mu, x) != UNDEF {
                    let t = self.get(mu, x);
                    self.merge(nu, t);
                } else if self.get(nu, xi) != UNDEF {
                    let t = self.get(nu, xi);
                    self.merge(mu, t);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, xi, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: u32, w: &[usize]) -> Result<()> {
        let r = w.len();
        if r == 0 {
            return Ok(());
        }
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = r;
        loop {
            while i < r && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == r {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            while j > i && self.get(b, inv_col(w[j - 1])) != UNDEF {
                b = self.get(b, inv_col(w[j - 1]));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup and returns, for each generator, its
/// permutation of the (compacted) cosets. Coset 0 is the trivial coset.
pub fn enumerate_cosets(pres: &Presentation, max_cosets: usize) -> Result<Vec<Vec<u32>>> {
    let ngens = pres.gen_names.len();
    let cols = 2 * ngens;
    let relators: Vec<Vec<usize>> = pres
        .relators
        .iter()
        .map(|w| {
            w.iter()
                .flat_map(|&(g, e)| {
                    let col = if e > 0 { 2 * g } else { 2 * g + 1 };
                    std::iter::repeat_n(col, e.unsigned_abs() as usize)
                })
                .collect()
        })
        .collect();

    let mut t = CosetTable::new(cols, max_cosets.max(1));
    let mut alpha = 0u32;
    while (alpha as usize) < t.len() {
        if t.alive(alpha) {
            for rel in &relators {
                t.scan_and_fill(alpha, rel)?;
                if !t.alive(alpha) {
                    break;
                }
            }
            if t.alive(alpha) {
                for x in 0..cols {
                    if t.get(alpha, x) == UNDEF {
                        t.define(alpha, x)?;
                    }
                }
            }
        }
        alpha += 1;
    }

    let live: Vec<u32> = (0..t.len() as u32).filter(|&c| t.alive(c)).collect();
    let mut index = vec![UNDEF; t.len()];
    for (i, &c) in live.iter().enumerate() {
        index[c as usize] = i as u32;
    }
    let mut perms = vec![Vec::with_capacity(live.len()); ngens];
    for &c in &live {
        for (g, perm) in perms.iter_mut().enumerate() {
            let d = t.get(c, 2 * g);
            if d == UNDEF || index[d as usize] == UNDEF {
                return Err(Error::IncompleteEnumeration);
            }
            perm.push(index[d as usize]);
        }
    }
    Ok(perms)
}
