//! Finite groups as fully tabulated objects.
//!
//! Element 0 is always the identity. Groups built from permutations (including coset
//! tables) are indexed in breadth-first order from the identity, multiplying on the
//! right by the generators in declaration order, so element `i` is the shortlex-least
//! positive word reaching it. That order is the coordinate order of every vector in
//! the group algebra.

mod presentation;
mod presets;
mod todd_coxeter;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

pub(crate) use presentation::Cursor;
pub use presentation::{concat_words, format_word, invert_word, Presentation, Word};
pub use presets::{preset, PresetKind, G48_PRESENTATION, G64C_PRESENTATION, G64_PRESENTATION, PRESET_ORDER_CAP};
pub use todd_coxeter::{enumerate_cosets, DEFAULT_MAX_COSETS};

use crate::error::{Error, Result};

/// Largest order for which associativity is checked exhaustively at construction.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 200;

/// Hard cap on tabulated group orders (the table is quadratic in the order).
pub const MAX_GROUP_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    words: Vec<Word>,
    gen_names: Vec<String>,
    generators: Vec<usize>,
}

impl Group {
    /// Closes the given permutations (acting on the right) under composition.
    pub fn from_permutations(
        name: impl Into<String>,
        gen_names: Vec<String>,
        perms: &[Vec<u32>],
        cap: usize,
    ) -> Result<Group> {
        assert_eq!(gen_names.len(), perms.len());
        let degree = perms.first().map_or(0, Vec::len);
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elems = vec![identity.clone()];
        let mut words: Vec<Word> = vec![Vec::new()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        let mut generators = vec![0; perms.len()];
        let mut first_pass = true;
        while let Some(i) = queue.pop_front() {
            for (g, p) in perms.iter().enumerate() {
                let prod: Vec<u32> = elems[i].iter().map(|&x| p[x as usize]).collect();
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len();
                        if j >= cap {
                            return Err(Error::OrderCapExceeded(cap + 1));
                        }
                        index.insert(prod.clone(), j);
                        elems.push(prod);
                        words.push(concat_words(&words[i], &[(g, 1)]));
                        queue.push_back(j);
                        j
                    }
                };
                if first_pass {
                    generators[g] = j;
                }
            }
            first_pass = false;
        }
        let n = elems.len();
        let mut mult = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod: Vec<u32> = elems[i].iter().map(|&x| elems[j][x as usize]).collect();
                mult[i * n + j] = index[&prod] as u32;
            }
        }
        Group::from_parts(name.into(), mult, words, gen_names, generators)
    }

    /// Runs coset enumeration and tabulates the resulting regular representation.
    pub fn from_presentation(name: impl Into<String>, pres: &Presentation, max_cosets: usize) -> Result<Group> {
        let perms = enumerate_cosets(pres, max_cosets)?;
        let n = perms.first().map_or(1, Vec::len);
        if n > MAX_GROUP_ORDER {
            return Err(Error::OrderCapExceeded(n));
        }
        if perms.is_empty() {
            return Group::from_permutations(name, Vec::new(), &[], 1);
        }
        Group::from_permutations(name, pres.gen_names.clone(), &perms, MAX_GROUP_ORDER)
    }

    fn from_parts(
        name: String,
        mult: Vec<u32>,
        words: Vec<Word>,
        gen_names: Vec<String>,
        generators: Vec<usize>,
    ) -> Result<Group> {
        let n = words.len();
        let mut inv = vec![0u32; n];
        for i in 0..n {
            inv[i] = (0..n)
                .find(|&j| mult[i * n + j] == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("element {i} has no inverse")))? as u32;
        }
        let mut elem_order = vec![0u32; n];
        for (i, o) in elem_order.iter_mut().enumerate() {
            let mut x = i;
            let mut t = 1;
            while x != 0 {
                x = mult[x * n + i] as usize;
                t += 1;
                if t > n + 1 {
                    return Err(Error::InvalidGroup(format!("element {i} has no finite order")));
                }
            }
            *o = t as u32;
        }
        let g = Group { name, order: n, mult, inv, elem_order, words, gen_names, generators };
        g.verify()?;
        Ok(g)
    }

    /// Checks the group axioms on the table; associativity only up to order 200.
    pub fn verify(&self) -> Result<()> {
        let n = self.order;
        let bad = |m: String| Err(Error::InvalidGroup(m));
        let mut seen = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                seen[self.mul(i, j)] = i * n + j + 1;
            }
            if seen.iter().any(|&s| s <= i * n) {
                return bad(format!("row {i} is not a permutation"));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                seen[self.mul(i, j)] = j;
            }
            if seen.iter().any(|&s| s != j) {
                return bad(format!("column {j} is not a permutation"));
            }
        }
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return bad("element 0 is not the identity".into());
            }
            if self.mul(i, self.inv(i)) != 0 {
                return bad(format!("bad inverse for {i}"));
            }
            if !n.is_multiple_of(self.elem_order[i] as usize) {
                return bad(format!("order of {i} does not divide {n}"));
            }
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    let ij = self.mul(i, j);
                    for k in 0..n {
                        if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                            return bad(format!("({i}{j}){k} != {i}({j}{k})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
        let (n, m) = (g.order, h.order);
        let order = n * m;
        if order > MAX_GROUP_ORDER {
            return Err(Error::OrderCapExceeded(order));
        }
        let mut mult = vec![0u32; order * order];
        for a in 0..order {
            let (a1, a2) = (a / m, a % m);
            for b in 0..order {
                let (b1, b2) = (b / m, b % m);
                mult[a * order + b] = (g.mul(a1, b1) * m + h.mul(a2, b2)) as u32;
            }
        }
        let shift = g.gen_names.len();
        let words = (0..order)
            .map(|a| {
                let right: Word = h.words[a % m].iter().map(|&(x, e)| (x + shift, e)).collect();
                concat_words(&g.words[a / m], &right)
            })
            .collect();
        let mut gen_names = g.gen_names.clone();
        for name in &h.gen_names {
            let mut candidate = name.clone();
            let mut k = 2;
            while gen_names.contains(&candidate) {
                candidate = format!("{name}_{k}");
                k += 1;
            }
            gen_names.push(candidate);
        }
        let mut generators: Vec<usize> = g.generators.iter().map(|&x| x * m).collect();
        generators.extend(h.generators.iter().copied());
        let name = format!("product({},{})", g.name, h.name);
        Group::from_parts(name, mult, words, gen_names, generators)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    /// Renames the generators; labels follow automatically.
    pub fn with_generator_names(mut self, names: Vec<String>) -> Group {
        assert_eq!(names.len(), self.gen_names.len());
        self.gen_names = names;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.order + j] as usize
    }

    /// Row `i` of the multiplication table: `j ↦ g_i g_j`.
    #[inline]
    pub fn mul_row(&self, i: usize) -> &[u32] {
        &self.mult[i * self.order..(i + 1) * self.order]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn elem_order(&self, i: usize) -> usize {
        self.elem_order[i] as usize
    }

    pub fn elem_orders(&self) -> Vec<usize> {
        self.elem_order.iter().map(|&o| o as usize).collect()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Canonical word label of element `i`, e.g. `a^6*c`.
    pub fn label(&self, i: usize) -> String {
        format_word(&self.words[i], &self.gen_names)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|i| self.label(i)).collect()
    }

    pub fn pow(&self, i: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(i) } else { i };
        let mut acc = 0;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Evaluates a word in the generators.
    pub fn eval_word(&self, w: &[(usize, i32)]) -> usize {
        w.iter().fold(0, |acc, &(g, e)| self.mul(acc, self.pow(self.generators[g], e as i64)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut elems = vec![0];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), x), by)
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let conj: Vec<usize> = gens
            .iter()
            .flat_map(|&x| (0..self.order).map(move |g| (x, g)))
            .map(|(x, g)| self.conjugate(x, g))
            .collect();
        self.subgroup(&conj)
    }

    /// Largest normal subgroup of order prime to `p`.
    pub fn largest_normal_p_prime_subgroup(&self, p: usize) -> Vec<usize> {
        let mut gens = Vec::new();
        for x in 0..self.order {
            if !self.elem_order(x).is_multiple_of(p) {
                let nc = self.normal_closure(&[x]);
                if !nc.len().is_multiple_of(p) {
                    gens.push(x);
                }
            }
        }
        self.subgroup(&gens)
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        p_part(self.order, p) == self.order
    }

    /// `(p-nilpotent, cyclic Sylow p-subgroup)`: the p′-elements are closed under
    /// multiplication, and some element has order `|G|_p`. Both vacuous when p ∤ |G|.
    pub fn is_p_nilpotent_cyclic_sylow(&self, p: usize) -> (bool, bool) {
        let n = self.order;
        if !n.is_multiple_of(p) {
            return (true, true);
        }
        let pp = p_part(n, p);
        let cyclic = self.elem_order.iter().any(|&o| o as usize == pp);
        let coprime: Vec<usize> = (0..n).filter(|&i| !self.elem_order(i).is_multiple_of(p)).collect();
        let mut member = vec![false; n];
        for &i in &coprime {
            member[i] = true;
        }
        let closed = coprime.iter().all(|&i| coprime.iter().all(|&j| member[self.mul(i, j)]));
        (closed, cyclic)
    }

    /// Text dump: `order n`, the table rows, then `labels` and one label per line.
    pub fn dump(&self) -> String {
        let n = self.order;
        let mut s = format!("order {n}\n");
        for i in 0..n {
            let row: Vec<String> = self.mul_row(i).iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s.push_str("labels\n");
        for l in self.labels() {
            let _ = writeln!(s, "{l}");
        }
        s
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut x = n;
    let mut pp = 1;
    while x.is_multiple_of(p) && x > 0 {
        x /= p;
        pp *= p;
    }
    pp
}
