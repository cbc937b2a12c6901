//! Arithmetic in GF(p^m) for small prime powers.
//!
//! Elements are encoded as integers `0..q` via `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`,
//! where `c_i` are the coefficients of the polynomial representative. This encoding is
//! the canonical element order used by every enumeration in the crate, and it is also
//! the integer form accepted by the matrix and element text formats.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 256;

/// A validated finite field with precomputed operation tables.
#[derive(Debug)]
pub struct FieldDescriptor {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldDescriptor {}

/// Shared handle to a [`FieldDescriptor`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field(Arc<FieldDescriptor>);

impl Deref for Field {
    type Target = FieldDescriptor;
    fn deref(&self) -> &FieldDescriptor {
        &self.0
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Built-in moduli, constant coefficient first.
fn builtin_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (2, 4) => Some(vec![1, 1, 0, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        _ => None,
    }
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| (a as u64 * x as u64) % p as u64 == 1).unwrap_or(0)
}

/// Remainder of `a` modulo monic-or-not nonzero `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod_p(*b.last().expect("nonzero divisor"), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bc) in b.iter().enumerate() {
            let sub = (factor as u64 * bc as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

/// Whether `f` (monic, degree m) has no monic factor of degree 1..=m/2 over GF(p).
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m <= 1 {
        return m == 1;
    }
    for deg in 1..=m / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut x = low;
            for _ in 0..deg {
                g.push((x % p as u64) as u32);
                x /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `m`.
fn first_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for low in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut x = low;
        for _ in 0..m {
            f.push((x % p as u64) as u32);
            x /= p as u64;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(p^m). Without a modulus the built-in table is used for q ≤ 16 and the
    /// lexicographically first monic irreducible polynomial otherwise.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::ReducibleModulus(modulus.map(<[u32]>::to_vec).unwrap_or_default()));
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q > MAX_FIELD_SIZE {
            return Err(Error::UnsupportedSize(q));
        }
        let modulus = match modulus {
            Some(f) => {
                let ok = f.len() == m as usize + 1
                    && f.last() == Some(&1)
                    && f.iter().all(|&c| c < p)
                    && is_irreducible(f, p);
                if !ok {
                    return Err(Error::ReducibleModulus(f.to_vec()));
                }
                f.to_vec()
            }
            None => builtin_modulus(p, m).unwrap_or_else(|| first_irreducible(p, m)),
        };
        let q = q as u32;
        let mut desc = FieldDescriptor {
            p,
            m,
            q,
            modulus,
            add: vec![0; (q * q) as usize],
            mul: vec![0; (q * q) as usize],
            neg: vec![0; q as usize],
            inv: vec![0; q as usize],
        };
        desc.build_tables();
        Ok(Field(Arc::new(desc)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Field of size `q` with the default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q as u64).ok_or(Error::NonPrime(q as u64))?;
        Field::new(p as u32, m, None)
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|v| FieldElement { field: self.clone(), value: v as u8 }).collect()
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::BadFieldSpec(format!("element {value} out of range")));
        }
        Ok(FieldElement { field: self.clone(), value: value as u8 })
    }

    /// Text form `GF(q)[c0,c1,...]`.
    pub fn spec(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        if self.m == 1 {
            format!("GF({})", self.q)
        } else {
            format!("GF({})[{}]", self.q, coeffs.join(","))
        }
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = 0;
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
        m += 1;
    }
    (x == 1).then_some((p, m))
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `GF(q)`, `GF(p^m)` and either with a `[c0,...,cm]` modulus suffix.
    fn from_str(s: &str) -> Result<Field> {
        let bad = || Error::BadFieldSpec(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = t.strip_prefix("GF(").or_else(|| t.strip_prefix("gf(")).ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let size = &rest[..close];
        let tail = &rest[close + 1..];
        let (p, m) = match size.split_once('^') {
            Some((p, m)) => (p.parse::<u64>().map_err(|_| bad())?, m.parse::<u32>().map_err(|_| bad())?),
            None => {
                let q: u64 = size.parse().map_err(|_| bad())?;
                if q > MAX_FIELD_SIZE {
                    return Err(Error::UnsupportedSize(q));
                }
                prime_power(q).ok_or(Error::NonPrime(q))?
            }
        };
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let modulus = if tail.is_empty() {
            None
        } else {
            let inner = tail.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
            let coeffs = inner.split(',').map(|c| c.parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
            Some(coeffs)
        };
        Field::new(p as u32, m, modulus.as_deref())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Polynomial coefficients of an encoded element, constant first.
    pub fn coeffs(&self, a: u8) -> Vec<u32> {
        let mut x = a as u32;
        (0..self.m)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> u8 {
        coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c) as u8
    }

    fn build_tables(&mut self) {
        let (p, m, q) = (self.p, self.m as usize, self.q as usize);
        let polys: Vec<Vec<u32>> = (0..q).map(|a| self.coeffs(a as u8)).collect();
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = (0..m).map(|i| (polys[a][i] + polys[b][i]) % p).collect();
                self.add[a * q + b] = self.encode(&sum);

                let mut prod = vec![0u32; 2 * m];
                for i in 0..m {
                    for j in 0..m {
                        prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
                    }
                }
                let mut r = poly_rem(&prod, &self.modulus, p);
                r.resize(m, 0);
                self.mul[a * q + b] = self.encode(&r);
            }
        }
        for a in 0..q {
            self.neg[a] = (0..q).find(|&b| self.add[a * q + b] == 0).unwrap() as u8;
            self.inv[a] = if a == 0 { 0 } else { (1..q).find(|&b| self.mul[a * q + b] == 1).unwrap() as u8 };
        }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        let bi = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Row of the multiplication table for `a`, indexed by the other operand.
    #[inline]
    pub(crate) fn mul_row(&self, a: u8) -> &[u8] {
        let q = self.q as usize;
        &self.mul[a as usize * q..(a as usize + 1) * q]
    }
}

/// An element bound to its field; arithmetic checks that both operands agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u8,
}

impl FieldElement {
    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field.0, &other.field.0) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u8) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<Field> {
        [2, 3, 4, 5, 7, 8, 9, 11, 13, 16].iter().map(|&q| Field::of_order(q).unwrap()).collect()
    }

    #[test]
    fn create_examples() {
        let f2 = Field::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.order(), 4);
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(f3.order(), 3);
    }

    #[test]
    fn create_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NonPrime(4));
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(_))));
        assert!(matches!(Field::new(2, 9, None), Err(Error::UnsupportedSize(512))));
    }

    #[test]
    fn gf4_root_check_by_evaluation() {
        // x^2+x+1 at x=0 and x=1 over GF(2)
        for x in 0..2u32 {
            assert_ne!((x * x + x + 1) % 2, 0);
        }
    }

    #[test]
    fn arith_examples() {
        let f2 = Field::prime(2).unwrap();
        let one = f2.element(1).unwrap();
        assert_eq!(one.mul(&one).unwrap().value(), 1);

        let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let x = f4.element(2).unwrap();
        // x*x = x+1, encoded as 1 + 1*2 = 3
        assert_eq!(x.mul(&x).unwrap().coeffs(), vec![1, 1]);

        let f5 = Field::prime(5).unwrap();
        let prod = f5.element(3).unwrap().mul(&f5.element(4).unwrap()).unwrap();
        assert_eq!(prod.value(), 2);
    }

    #[test]
    fn arith_errors() {
        let f3 = Field::prime(3).unwrap();
        let f5 = Field::prime(5).unwrap();
        let a = f3.element(1).unwrap();
        let z = f3.element(0).unwrap();
        assert_eq!(a.div(&z).unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.add(&f5.element(1).unwrap()).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn enumeration_order() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.elements().iter().map(|e| e.value()).collect::<Vec<_>>(), [0, 1]);
        let f4 = Field::of_order(4).unwrap();
        let coeffs: Vec<Vec<u32>> = f4.elements().iter().map(|e| e.coeffs()).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        for f in small_fields() {
            let mut vals: Vec<u8> = f.elements().iter().map(|e| e.value()).collect();
            vals.dedup();
            assert_eq!(vals.len(), f.order() as usize);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let q = f.order() as u8;
            for a in 0..q {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let p = f.characteristic() as u64;
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn builtin_moduli() {
        assert_eq!(Field::of_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::of_order(9).unwrap().modulus(), &[1, 0, 1]);
        let f25 = Field::of_order(25).unwrap();
        assert!(is_irreducible(f25.modulus(), 5));
    }

    #[test]
    fn spec_roundtrip() {
        let f: Field = "GF(4)[1,1,1]".parse().unwrap();
        assert_eq!(f.spec(), "GF(4)[1,1,1]");
        let g: Field = "GF(2^3)".parse().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!("GF(5)".parse::<Field>().unwrap().spec(), "GF(5)");
        assert!("GF(6)".parse::<Field>().is_err());
        assert!("GF(4)[1,0,1]".parse::<Field>().is_err());
        assert!("F(4)".parse::<Field>().is_err());
    }
}
