//! The group algebra KG.
//!
//! Elements are coefficient vectors indexed by the group's canonical element order.
//! Ideals are [`Subspace`]s whose left/right closure has been checked against the
//! group generators.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{Cursor, Group};
use crate::linalg::{axpy, Echelon, Matrix, Subspace};

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

/// Closure flags of a subspace of KG, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealSide {
    None,
    Left,
    Right,
    TwoSided,
}

impl IdealSide {
    fn from_flags(left: bool, right: bool) -> IdealSide {
        match (left, right) {
            (true, true) => IdealSide::TwoSided,
            (true, false) => IdealSide::Left,
            (false, true) => IdealSide::Right,
            (false, false) => IdealSide::None,
        }
    }

    pub fn is_right(self) -> bool {
        matches!(self, IdealSide::Right | IdealSide::TwoSided)
    }

    pub fn is_left(self) -> bool {
        matches!(self, IdealSide::Left | IdealSide::TwoSided)
    }

    pub fn has(self, side: Side) -> bool {
        match side {
            Side::Left => self.is_left(),
            Side::Right => self.is_right(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IdealSide::None => "none",
            IdealSide::Left => "left",
            IdealSide::Right => "right",
            IdealSide::TwoSided => "two-sided",
        }
    }

    pub fn parse(s: &str) -> Option<IdealSide> {
        Some(match s {
            "none" => IdealSide::None,
            "left" => IdealSide::Left,
            "right" => IdealSide::Right,
            "two-sided" | "twosided" | "both" => IdealSide::TwoSided,
            _ => return None,
        })
    }
}

/// A subspace of KG together with its verified closure flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubspace {
    space: Subspace,
    side: IdealSide,
}

impl IdealSubspace {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn side(&self) -> IdealSide {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

/// An element `Σ a_g g` of a particular [`GroupAlgebra`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    algebra: u64,
    coeffs: Vec<u8>,
}

impl Element {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.coeffs
    }

    /// Number of group elements with a nonzero coefficient.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug)]
struct AlgebraInner {
    id: u64,
    group: Arc<Group>,
    field: Field,
}

/// KG for a tabulated group and a finite field. Cloning shares the context.
#[derive(Debug, Clone)]
pub struct GroupAlgebra(Arc<AlgebraInner>);

impl PartialEq for GroupAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for GroupAlgebra {}

impl GroupAlgebra {
    pub fn new(group: impl Into<Arc<Group>>, field: &Field) -> GroupAlgebra {
        GroupAlgebra(Arc::new(AlgebraInner {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            group: group.into(),
            field: field.clone(),
        }))
    }

    pub fn group(&self) -> &Group {
        &self.0.group
    }

    pub fn group_arc(&self) -> &Arc<Group> {
        &self.0.group
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    /// `|G|`, the dimension of KG.
    pub fn dim(&self) -> usize {
        self.0.group.order()
    }

    /// Whether KG is a local algebra: G is a p-group with p = char K.
    pub fn is_local(&self) -> bool {
        self.group().is_p_group(self.field().characteristic() as usize)
    }

    fn wrap(&self, coeffs: Vec<u8>) -> Element {
        Element { algebra: self.0.id, coeffs }
    }

    fn own(&self, a: &Element) -> Result<()> {
        if a.algebra == self.0.id {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn from_coeffs(&self, coeffs: Vec<u8>) -> Result<Element> {
        if coeffs.len() != self.dim() || coeffs.iter().any(|&c| c as u32 >= self.field().order()) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.wrap(coeffs))
    }

    pub fn zero(&self) -> Element {
        self.wrap(vec![0; self.dim()])
    }

    pub fn one(&self) -> Element {
        self.basis(0)
    }

    /// The group element `g_i` as an algebra element.
    pub fn basis(&self, i: usize) -> Element {
        let mut c = vec![0; self.dim()];
        c[i] = 1;
        self.wrap(c)
    }

    /// `σ = Σ_{g∈G} g`.
    pub fn sigma(&self) -> Element {
        self.wrap(vec![1; self.dim()])
    }

    /// `Σ_{h∈H} h` for a subset of group elements.
    pub fn subset_sum(&self, elems: &[usize]) -> Element {
        let mut c = vec![0; self.dim()];
        for &h in elems {
            c[h] = 1;
        }
        self.wrap(c)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        let f = self.field();
        Ok(self.wrap(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect()))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        let f = self.field();
        Ok(self.wrap(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect()))
    }

    pub fn scale(&self, c: u8, a: &Element) -> Element {
        let f = self.field();
        self.wrap(a.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Convolution product `ab = Σ_g (Σ_h a_h b_{h⁻¹g}) g`.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        Ok(self.wrap(self.mul_raw(&a.coeffs, &b.coeffs)))
    }

    pub(crate) fn mul_raw(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let g = self.group();
        let f = self.field();
        let mut out = vec![0u8; a.len()];
        let b_support: Vec<(usize, u8)> = b.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
        for (h, &ah) in a.iter().enumerate() {
            if ah == 0 {
                continue;
            }
            let row = g.mul_row(h);
            let mul = f.mul_row(ah);
            for &(j, bj) in &b_support {
                let k = row[j] as usize;
                out[k] = f.add(out[k], mul[bj as usize]);
            }
        }
        out
    }

    /// `v·g_i` as a coefficient vector.
    pub(crate) fn right_translate(&self, v: &[u8], i: usize) -> Vec<u8> {
        let g = self.group();
        let mut out = vec![0u8; v.len()];
        for (h, &c) in v.iter().enumerate() {
            out[g.mul(h, i)] = c;
        }
        out
    }

    /// `g_i·v` as a coefficient vector.
    pub(crate) fn left_translate(&self, i: usize, v: &[u8]) -> Vec<u8> {
        let row = self.group().mul_row(i);
        let mut out = vec![0u8; v.len()];
        for (h, &c) in v.iter().enumerate() {
            out[row[h] as usize] = c;
        }
        out
    }

    pub(crate) fn translate(&self, v: &[u8], i: usize, side: Side) -> Vec<u8> {
        match side {
            Side::Right => self.right_translate(v, i),
            Side::Left => self.left_translate(i, v),
        }
    }

    /// The antiautomorphism `g ↦ g⁻¹` extended linearly.
    pub fn hat(&self, a: &Element) -> Element {
        self.wrap(self.hat_raw(&a.coeffs))
    }

    pub(crate) fn hat_raw(&self, a: &[u8]) -> Vec<u8> {
        let g = self.group();
        let mut out = vec![0u8; a.len()];
        for (i, &c) in a.iter().enumerate() {
            out[g.inv(i)] = c;
        }
        out
    }

    /// Matrix of `a ↦ v·a` (left) or `a ↦ a·v` (right) on coordinate columns.
    pub fn reg_matrix(&self, v: &Element, side: Side) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for (r, row) in self.reg_rows(&v.coeffs, side).into_iter().enumerate() {
            for (c, x) in row.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    /// Rows of the regular matrix: for `Left`, `L_v[r][j] = v_{g_r g_j⁻¹}`; for `Right`,
    /// `R_v[r][j] = v_{g_j⁻¹ g_r}`.
    fn reg_rows(&self, v: &[u8], side: Side) -> Vec<Vec<u8>> {
        let g = self.group();
        let n = self.dim();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|j| match side {
                        Side::Left => v[g.mul(r, g.inv(j))],
                        Side::Right => v[g.mul(g.inv(j), r)],
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks closure flags of an arbitrary subspace by generator translation.
    pub fn ideal(&self, space: Subspace) -> Result<IdealSubspace> {
        if space.ambient_dim() != self.dim() || space.field() != self.field() {
            return Err(Error::AmbientMismatch);
        }
        let closed = |side: Side| {
            let ech = space.echelon();
            space.vectors().all(|v| {
                self.group().generators().iter().all(|&g| {
                    let mut w = self.translate(v, g, side);
                    ech.reduce(&mut w);
                    w.iter().all(|&x| x == 0)
                })
            })
        };
        let side = IdealSide::from_flags(closed(Side::Left), closed(Side::Right));
        Ok(IdealSubspace { space, side })
    }

    pub fn full_ideal(&self) -> IdealSubspace {
        IdealSubspace { space: Subspace::full(self.field(), self.dim()), side: IdealSide::TwoSided }
    }

    pub fn zero_ideal(&self) -> IdealSubspace {
        IdealSubspace { space: Subspace::zero(self.field(), self.dim()), side: IdealSide::TwoSided }
    }

    /// Dimension of `vKG` (right) or `KGv` (left), stopping early once `target` is reached.
    pub(crate) fn principal_dim(&self, v: &[u8], side: Side, target: usize) -> usize {
        let mut ech = Echelon::new(self.field(), self.dim());
        for g in 0..self.dim() {
            ech.insert(self.translate(v, g, side));
            if ech.rank() >= target {
                break;
            }
        }
        ech.rank()
    }

    pub(crate) fn principal_space(&self, v: &[u8], side: Side) -> Subspace {
        let mut ech = Echelon::new(self.field(), self.dim());
        for g in 0..self.dim() {
            ech.insert(self.translate(v, g, side));
        }
        ech.into_subspace()
    }

    /// `vKG` for `Right`, `KGv` for `Left`.
    pub fn principal_ideal(&self, v: &Element, side: Side) -> Result<IdealSubspace> {
        self.own(v)?;
        self.ideal(self.principal_space(&v.coeffs, side))
    }

    /// `ann_r(v) = {a : va = 0}` or `ann_l(v) = {a : av = 0}`.
    pub fn annihilator_of(&self, v: &Element, side: Side) -> Result<IdealSubspace> {
        self.own(v)?;
        Ok(self.annihilator_raw(std::iter::once(v.coeffs.as_slice()), side))
    }

    /// Right (resp. left) annihilator of a subspace: the common kernel of the regular
    /// matrices of its basis vectors.
    pub fn annihilator(&self, s: &Subspace, side: Side) -> IdealSubspace {
        self.annihilator_raw(s.vectors(), side)
    }

    fn annihilator_raw<'a>(&self, vectors: impl Iterator<Item = &'a [u8]>, side: Side) -> IdealSubspace {
        let n = self.dim();
        let mut ech = Echelon::new(self.field(), n);
        'outer: for v in vectors {
            // ann_r(v) is the kernel of a ↦ va, ann_l(v) that of a ↦ av
            let op = match side {
                Side::Right => Side::Left,
                Side::Left => Side::Right,
            };
            for row in self.reg_rows(v, op) {
                ech.insert(row);
                if ech.rank() == n {
                    break 'outer;
                }
            }
        }
        self.ideal(ech.kernel()).expect("annihilator lies in KG")
    }

    /// `{a : Σ a_g = 0}`, spanned by `g − e`.
    pub fn augmentation_ideal(&self) -> IdealSubspace {
        let f = self.field();
        let n = self.dim();
        let vectors = (1..n).map(|g| {
            let mut v = vec![0u8; n];
            v[0] = f.neg(1);
            v[g] = 1;
            v
        });
        IdealSubspace { space: Subspace::span(f, n, vectors), side: IdealSide::TwoSided }
    }

    /// `span{m·(h − e) : m ∈ M, h ∈ H}` (right) or `span{(h − e)·m}` (left) for a subset
    /// `H` of group elements. With `H = G` this is `M·ω` for the augmentation ideal ω.
    pub(crate) fn times_augmentation(&self, m: &Subspace, subgroup: &[usize], side: Side) -> Subspace {
        let f = self.field();
        let mut ech = Echelon::new(f, self.dim());
        for v in m.vectors() {
            for &h in subgroup {
                if h == 0 {
                    continue;
                }
                let mut w = self.translate(v, h, side);
                axpy(f, &mut w, f.neg(1), v);
                ech.insert(w);
            }
        }
        ech.into_subspace()
    }

    /// `span{ab : a ∈ A, b ∈ B}`.
    pub fn ideal_product(&self, a: &Subspace, b: &Subspace) -> Result<IdealSubspace> {
        let mut ech = Echelon::new(self.field(), self.dim());
        for x in a.vectors() {
            for y in b.vectors() {
                ech.insert(self.mul_raw(x, y));
            }
        }
        self.ideal(ech.into_subspace())
    }

    /// `J^r` for the augmentation ideal J of a p-group algebra in characteristic p.
    pub fn radical_power(&self, r: usize) -> Result<IdealSubspace> {
        let p = self.field().characteristic() as usize;
        let n = self.dim();
        if !self.group().is_p_group(p) {
            let is_prime_power = (2..=n).find(|d| n.is_multiple_of(*d)).is_none_or(|q| self.group().is_p_group(q));
            return Err(if is_prime_power { Error::CharMismatch } else { Error::NotAPGroup });
        }
        let all: Vec<usize> = (0..n).collect();
        let mut power = Subspace::full(self.field(), n);
        for _ in 0..r {
            if power.dim() == 0 {
                break;
            }
            power = self.times_augmentation(&power, &all, Side::Right);
        }
        Ok(IdealSubspace { space: power, side: IdealSide::TwoSided })
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        self.mul_raw(&e.coeffs, &e.coeffs) == e.coeffs
    }

    /// Uniformly random coefficients.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let q = self.field().order();
        self.wrap((0..self.dim()).map(|_| rng.gen_range(0..q) as u8).collect())
    }

    /// Exactly `weight` nonzero coefficients at uniformly chosen positions.
    pub fn random_sparse<R: Rng + ?Sized>(&self, rng: &mut R, weight: usize) -> Element {
        let n = self.dim();
        let q = self.field().order();
        let mut c = vec![0u8; n];
        for pos in sample(rng, n, weight.min(n)) {
            c[pos] = rng.gen_range(1..q) as u8;
        }
        self.wrap(c)
    }

    /// Uniform element of a subspace, as a random combination of its basis.
    pub(crate) fn random_in<R: Rng + ?Sized>(&self, rng: &mut R, s: &Subspace) -> Vec<u8> {
        let f = self.field();
        let mut v = vec![0u8; self.dim()];
        for b in s.vectors() {
            let c = rng.gen_range(0..f.order()) as u8;
            axpy(f, &mut v, c, b);
        }
        v
    }

    /// Parses `term (('+'|'-') term)*` with `term ::= [int ['*']] [word]`, where words
    /// use the group's generator names and the integer is a field element encoding.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let g = self.group();
        let f = self.field();
        let mut cur = Cursor::new(text);
        let mut out = vec![0u8; self.dim()];
        let mut negate = false;
        if cur.eat('-') {
            negate = true;
        }
        loop {
            let mut coeff = 1u8;
            let mut has_scalar = false;
            if cur.peek_digit() {
                let c = cur.integer()?;
                if c < 0 || c as u32 >= f.order() {
                    return Err(cur.error("field element"));
                }
                coeff = c as u8;
                has_scalar = true;
                cur.eat('*');
            }
            let elem = match cur.peek() {
                Some(c) if c.is_ascii_alphabetic() => g.eval_word(&cur.word(g.gen_names())?),
                _ if has_scalar => 0,
                _ => return Err(cur.error("term")),
            };
            if negate {
                coeff = f.neg(coeff);
            }
            out[elem] = f.add(out[elem], coeff);
            if cur.eat('+') {
                negate = false;
            } else if cur.eat('-') {
                negate = true;
            } else if cur.at_end() {
                break;
            } else {
                return Err(cur.error("'+', '-' or end of input"));
            }
        }
        Ok(self.wrap(out))
    }

    /// Inverse of [`parse_element`](Self::parse_element), terms in element order.
    pub fn format_element(&self, a: &Element) -> String {
        format_coeffs(self.group(), &a.coeffs)
    }
}

pub fn format_coeffs(g: &Group, coeffs: &[u8]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => g.label(i),
            _ => format!("{c}*{}", g.label(i)),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::preset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(g: &str, q: u32) -> GroupAlgebra {
        GroupAlgebra::new(preset(g).unwrap(), &Field::of_order(q).unwrap())
    }

    #[test]
    fn mul_examples() {
        let a = alg("c2", 2);
        let x = a.parse_element("1 + a").unwrap();
        assert!(a.mul(&x, &x).unwrap().is_zero());

        let s3 = alg("s3", 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v = s3.random_element(&mut rng);
        assert_eq!(s3.mul(&s3.one(), &v).unwrap(), v);
        let total = v.coeffs().iter().fold(0u8, |acc, &c| s3.field().add(acc, c));
        assert_eq!(s3.mul(&s3.sigma(), &v).unwrap(), s3.scale(total, &s3.sigma()));
    }

    #[test]
    fn context_mismatch() {
        let a = alg("c2", 2);
        let b = alg("c2", 2);
        assert_eq!(a.mul(&a.one(), &b.one()), Err(Error::ContextMismatch));
    }

    #[test]
    fn hat_examples() {
        let a = alg("s3", 2);
        assert_eq!(a.hat(&a.one()), a.one());
        for g in 0..6 {
            assert_eq!(a.hat(&a.basis(g)), a.basis(a.group().inv(g)));
        }
    }

    #[test]
    fn reg_matrix_examples() {
        let a = alg("d8", 3);
        let id = Matrix::identity(a.field(), 8);
        assert_eq!(a.reg_matrix(&a.one(), Side::Left), id);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let v = a.random_element(&mut rng);
            let w = a.random_element(&mut rng);
            let x = a.random_element(&mut rng);
            let lv = a.reg_matrix(&v, Side::Left);
            assert_eq!(lv.mul_vec(x.coeffs()), a.mul(&v, &x).unwrap().coeffs());
            let rv = a.reg_matrix(&v, Side::Right);
            assert_eq!(rv.mul_vec(x.coeffs()), a.mul(&x, &v).unwrap().coeffs());
            let sum = a.add(&v, &w).unwrap();
            assert_eq!(a.reg_matrix(&sum, Side::Left), lv.add(&a.reg_matrix(&w, Side::Left)).unwrap());
        }
        // a group element gives a permutation matrix
        let g = a.reg_matrix(&a.basis(3), Side::Left);
        for c in 0..8 {
            assert_eq!((0..8).filter(|&r| g.get(r, c) == 1).count(), 1);
        }
    }

    #[test]
    fn principal_examples() {
        let a = alg("a4", 2);
        assert_eq!(a.principal_ideal(&a.one(), Side::Right).unwrap().dim(), 12);
        let s = a.principal_ideal(&a.sigma(), Side::Right).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(a.ideal(s.space().clone()).unwrap().side(), IdealSide::TwoSided);
    }

    #[test]
    fn annihilator_examples() {
        let a = alg("s3", 3);
        assert_eq!(a.annihilator_of(&a.zero(), Side::Right).unwrap().dim(), 6);
        assert_eq!(a.annihilator_of(&a.one(), Side::Right).unwrap().dim(), 0);
        let ann = a.annihilator_of(&a.sigma(), Side::Right).unwrap();
        assert_eq!(ann.space(), a.augmentation_ideal().space());
        assert_eq!(ann.dim(), 5);
    }

    #[test]
    fn augmentation_examples() {
        let c2 = alg("c2", 2);
        let j = c2.augmentation_ideal();
        assert_eq!(j.dim(), 1);
        assert!(j.space().contains_vector(&[1, 1]));
        let v = alg("klein4", 2);
        let j = v.augmentation_ideal();
        let g = v.parse_element("a - 1").unwrap();
        let h = v.parse_element("b - 1").unwrap();
        let gen = v.principal_ideal(&g, Side::Right).unwrap().into_space();
        let sum = gen.sum(v.principal_ideal(&h, Side::Right).unwrap().space()).unwrap();
        assert_eq!(&sum, j.space());
        assert_eq!(j.dim(), 3);
        assert_eq!(alg("s3", 5).augmentation_ideal().dim(), 5);
    }

    #[test]
    fn radical_power_dims() {
        let dims = |g: &str, q: u32, upto: usize| -> Vec<usize> {
            let a = alg(g, q);
            (0..=upto).map(|r| a.radical_power(r).unwrap().dim()).collect()
        };
        assert_eq!(dims("klein4", 2, 3), vec![4, 3, 1, 0]);
        assert_eq!(dims("c4", 2, 4), vec![4, 3, 2, 1, 0]);
        assert_eq!(dims("ea(3,2)", 3, 5), vec![9, 8, 6, 3, 1, 0]);
        assert_eq!(alg("s3", 2).radical_power(1), Err(Error::NotAPGroup));
        assert_eq!(alg("c4", 3).radical_power(1), Err(Error::CharMismatch));
    }

    #[test]
    fn element_parse_and_format() {
        let a = alg("g48", 3);
        let v = a.parse_element("1+2b+a^3b^2+2a^3+2a^3b^3+2c^2b^3+c^2ab^3").unwrap();
        assert_eq!(v.weight(), 7);
        let text = a.format_element(&v);
        assert_eq!(a.parse_element(&text).unwrap(), v);
        assert_eq!(a.parse_element("0").unwrap(), a.zero());
        assert_eq!(a.parse_element("2").unwrap(), a.scale(2, &a.one()));
        assert!(matches!(a.parse_element("3*a"), Err(Error::Parse { .. })));
        assert!(matches!(a.parse_element("a + z"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(a.parse_element("a +"), Err(Error::Parse { .. })));
    }

    #[test]
    fn written_order_is_preserved_in_words() {
        let a = alg("g64", 2);
        let x = a.parse_element("a*c*b*d").unwrap();
        let y = a.parse_element("abcd").unwrap();
        assert_eq!(x, y);
    }
}
