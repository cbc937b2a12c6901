//! Dense linear algebra over GF(q).
//!
//! Subspaces are always stored by their reduced row-echelon basis, so two subspaces are
//! equal exactly when their bases are equal entry-wise.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;

/// A row-major matrix over a finite field. Entries are canonical element encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u8>]) -> Result<Matrix> {
        let q = field.order() as u8;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols || r.iter().any(|&x| x as u32 >= q as u32) {
                return Err(Error::MatrixFormat("row length or entry out of range".into()));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// `self · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[u8]) -> Vec<u8> {
        assert_eq!(x.len(), self.cols);
        let f = &self.field;
        (0..self.rows).map(|r| self.row(r).iter().zip(x).fold(0u8, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::AmbientMismatch);
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom so the shape
    /// is unchanged.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut ech = Echelon::new(&self.field, self.cols);
        for r in self.row_vectors() {
            ech.insert(r.to_vec());
        }
        let rank = ech.rank();
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols);
        for (i, row) in ech.into_rows().into_iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(&row);
        }
        (out, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Kernel `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let mut ech = Echelon::new(&self.field, self.cols);
        for r in self.row_vectors() {
            ech.insert(r.to_vec());
        }
        ech.kernel()
    }

    /// Text form: header `rows cols q`, then one line of space-separated encodings per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.field.order());
        for r in self.row_vectors() {
            let line: Vec<String> = r.iter().map(u8::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parses the text form. The header's `q` must match `field`.
    pub fn from_text(field: &Field, text: &str) -> Result<Matrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::MatrixFormat("missing header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::MatrixFormat(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols, q] = nums[..] else {
            return Err(Error::MatrixFormat(format!("bad header {header:?}")));
        };
        if q != field.order() as usize {
            return Err(Error::FieldMismatch);
        }
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = lines.next().ok_or_else(|| Error::MatrixFormat("missing row".into()))?;
            let before = data.len();
            for t in line.split_whitespace() {
                let v: usize = t.parse().map_err(|_| Error::MatrixFormat(format!("bad entry {t:?}")))?;
                if v >= q {
                    return Err(Error::MatrixFormat(format!("entry {v} out of range")));
                }
                data.push(v as u8);
            }
            if data.len() - before != cols {
                return Err(Error::MatrixFormat("row length mismatch".into()));
            }
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }
}

/// `dst += c · src` over the field.
#[inline]
pub(crate) fn axpy(field: &Field, dst: &mut [u8], c: u8, src: &[u8]) {
    if c == 0 {
        return;
    }
    if field.order() == 2 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
        return;
    }
    let mul = field.mul_row(c);
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = field.add(*d, mul[s as usize]);
        }
    }
}

#[inline]
pub(crate) fn scale(field: &Field, v: &mut [u8], c: u8) {
    let mul = field.mul_row(c);
    for x in v.iter_mut() {
        *x = mul[*x as usize];
    }
}

/// Incremental reduced row-echelon basis. Rows are kept fully reduced against each other.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: &Field, cols: usize) -> Echelon {
        Echelon { field: field.clone(), cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis in place.
    pub(crate) fn reduce(&self, v: &mut [u8]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                axpy(&self.field, v, self.field.neg(c), row);
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut v: Vec<u8>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[pc]).unwrap();
        scale(&self.field, &mut v, inv);
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                axpy(&self.field, row, self.field.neg(c), &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<u8>> {
        self.rows
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        let mut basis = Matrix::zeros(&self.field, self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            basis.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(r);
        }
        Subspace { basis, pivots: self.pivots }
    }

    /// Kernel of the matrix whose row space this is.
    pub(crate) fn kernel(&self) -> Subspace {
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Echelon::new(f, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![0u8; self.cols];
            x[free] = 1;
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                x[pc] = f.neg(row[free]);
            }
            out.insert(x);
        }
        out.into_subspace()
    }
}

/// A subspace of K^n held by its RREF basis (no zero rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, n), pivots: Vec::new() }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Span of the given vectors.
    pub fn span<I, V>(field: &Field, n: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u8>>,
    {
        let mut ech = Echelon::new(field, n);
        for v in vectors {
            ech.insert(v.into());
        }
        ech.into_subspace()
    }

    pub fn row_space(m: &Matrix) -> Subspace {
        Subspace::span(m.field(), m.cols(), m.row_vectors().map(<[u8]>::to_vec))
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[u8]> {
        self.basis.row_vectors()
    }

    pub(crate) fn echelon(&self) -> Echelon {
        Echelon {
            field: self.field().clone(),
            cols: self.ambient_dim(),
            rows: self.vectors().map(<[u8]>::to_vec).collect(),
            pivots: self.pivots.clone(),
        }
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.field() != other.field() {
            Err(Error::AmbientMismatch)
        } else {
            Ok(())
        }
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.echelon().reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut ech = self.echelon();
        for v in other.vectors() {
            ech.insert(v.to_vec());
        }
        Ok(ech.into_subspace())
    }

    /// `A ∩ B` computed as `(A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        self.orthogonal().sum(&other.orthogonal()).map(|s| s.orthogonal())
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal(&self) -> Subspace {
        self.echelon().kernel()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        let ech = self.echelon();
        Ok(other.vectors().all(|v| {
            let mut w = v.to_vec();
            ech.reduce(&mut w);
            w.iter().all(|&x| x == 0)
        }))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }
}
