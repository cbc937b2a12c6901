//! Named groups: `c<n>`, `d<2n>`, `s<n>`, `a4`, `q8`, `klein4`, `ea(p,m)`,
//! `product(x,y)` and the shipped presentations `g64`, `g64c`, `g48`.

use super::presentation::Presentation;
use super::{Group, DEFAULT_MAX_COSETS};
use crate::error::{Error, Result};
use crate::field::is_prime;

/// Order cap for preset construction.
pub const PRESET_ORDER_CAP: usize = 200;

/// Four-generator presentation intended for the binary [64,32,12] code. These
/// relations define a group of order 256.
pub const G64_PRESENTATION: &str = include_str!("../../data/g64.txt");
/// The same presentation with the extra relation `d^2=a^6b`, which cuts it down to
/// order 64. This quotient is the one on which `u` yields [64,32,12].
pub const G64C_PRESENTATION: &str = include_str!("../../data/g64c.txt");
/// (C4 × C4) ⋊ C3, used for the ternary [48,15,18] code.
pub const G48_PRESENTATION: &str = include_str!("../../data/g48.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresetKind {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    ElemAbelian(usize, usize),
    Product(Box<PresetKind>, Box<PresetKind>),
    Presentation(&'static str, &'static str),
}

impl PresetKind {
    pub fn parse(spec: &str) -> Result<PresetKind> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        let unknown = || Error::UnknownPreset(spec.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        if let Some(args) = call_args(&s, &["product"]) {
            let (a, b) = split_top_comma(args).ok_or_else(unknown)?;
            return Ok(PresetKind::Product(Box::new(Self::parse(a)?), Box::new(Self::parse(b)?)));
        }
        if let Some(args) = call_args(&s, &["ea", "elem_abelian"]) {
            let (p, m) = args.split_once(',').ok_or_else(unknown)?;
            return Ok(PresetKind::ElemAbelian(num(p)?, num(m)?));
        }
        if let Some(n) = call_args(&s, &["cyclic"]) {
            return Ok(PresetKind::Cyclic(num(n)?));
        }
        if let Some(n) = call_args(&s, &["dihedral"]) {
            return Ok(PresetKind::Dihedral(num(n)?));
        }
        if let Some(n) = call_args(&s, &["symmetric"]) {
            return Ok(PresetKind::Symmetric(num(n)?));
        }
        Ok(match s.as_str() {
            "klein4" | "v4" => PresetKind::ElemAbelian(2, 2),
            "q8" => PresetKind::Quaternion,
            "a4" => PresetKind::Alternating(4),
            "a5" => PresetKind::Alternating(5),
            "g64" => PresetKind::Presentation("g64", G64_PRESENTATION),
            "g64c" => PresetKind::Presentation("g64c", G64C_PRESENTATION),
            "g48" => PresetKind::Presentation("g48", G48_PRESENTATION),
            _ => {
                let (head, tail) = s.split_at(1.min(s.len()));
                let n = num(tail)?;
                match head {
                    "c" => PresetKind::Cyclic(n),
                    "d" => PresetKind::Dihedral(n),
                    "s" => PresetKind::Symmetric(n),
                    _ => return Err(unknown()),
                }
            }
        })
    }

    pub fn build(&self) -> Result<Group> {
        let g = match self {
            PresetKind::Cyclic(n) => {
                let n = *n;
                check_cap(n)?;
                if n == 0 {
                    return Err(Error::UnknownPreset("c0".into()));
                }
                let perm: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
                Group::from_permutations(format!("c{n}"), vec!["a".into()], &[perm], PRESET_ORDER_CAP)?
            }
            PresetKind::Dihedral(order) => {
                let order = *order;
                check_cap(order)?;
                if order < 4 || order % 2 != 0 {
                    return Err(Error::UnknownPreset(format!("d{order}")));
                }
                let n = order / 2;
                let pres: Presentation = format!("<r,s | r^{n}=s^2=1, srs=r^{}>", n - 1).parse()?;
                Group::from_presentation(format!("d{order}"), &pres, DEFAULT_MAX_COSETS)?
            }
            PresetKind::Symmetric(n) => {
                let n = *n;
                if !(1..=5).contains(&n) {
                    return Err(Error::OrderCapExceeded((1..=n).product()));
                }
                let perms: Vec<Vec<u32>> = (0..n.saturating_sub(1))
                    .map(|i| {
                        let mut p: Vec<u32> = (0..n as u32).collect();
                        p.swap(i, i + 1);
                        p
                    })
                    .collect();
                let names = (1..n).map(|i| format!("s{i}")).collect();
                if perms.is_empty() {
                    Group::from_permutations(format!("s{n}"), Vec::new(), &[], 1)?
                } else {
                    Group::from_permutations(format!("s{n}"), names, &perms, PRESET_ORDER_CAP)?
                }
            }
            PresetKind::Alternating(n) => {
                let n = *n;
                if !(3..=5).contains(&n) {
                    return Err(Error::UnknownPreset(format!("a{n}")));
                }
                let perms: Vec<Vec<u32>> = (0..n - 2)
                    .map(|i| {
                        let mut p: Vec<u32> = (0..n as u32).collect();
                        p[i] = i as u32 + 1;
                        p[i + 1] = i as u32 + 2;
                        p[i + 2] = i as u32;
                        p
                    })
                    .collect();
                let names = (1..n - 1).map(|i| format!("t{i}")).collect();
                Group::from_permutations(format!("a{n}"), names, &perms, PRESET_ORDER_CAP)?
            }
            PresetKind::Quaternion => {
                let pres: Presentation = "<i,j | i^4=1, i^2=j^2, jij^3=i^3>".parse()?;
                Group::from_presentation("q8", &pres, DEFAULT_MAX_COSETS)?
            }
            PresetKind::ElemAbelian(p, m) => {
                let (p, m) = (*p, *m);
                if !is_prime(p as u64) {
                    return Err(Error::NonPrime(p as u64));
                }
                let order = p.checked_pow(m as u32).unwrap_or(usize::MAX);
                check_cap(order)?;
                let cp = PresetKind::Cyclic(p).build()?;
                if m == 0 {
                    return Ok(PresetKind::Cyclic(1).build()?.with_name(format!("ea({p},0)")));
                }
                let mut g = cp.clone();
                for _ in 1..m {
                    g = Group::direct_product(&g, &cp)?;
                }
                let names: Vec<String> = (0..m).map(letter_name).collect();
                g.with_generator_names(names).with_name(format!("ea({p},{m})"))
            }
            PresetKind::Product(a, b) => {
                let (ga, gb) = (a.build()?, b.build()?);
                check_cap(ga.order() * gb.order())?;
                Group::direct_product(&ga, &gb)?
            }
            PresetKind::Presentation(name, text) => {
                let pres: Presentation = text.parse()?;
                Group::from_presentation(*name, &pres, DEFAULT_MAX_COSETS)?
            }
        };
        Ok(g)
    }
}

fn letter_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("x{i}")
    }
}

fn check_cap(order: usize) -> Result<()> {
    if order > PRESET_ORDER_CAP {
        Err(Error::OrderCapExceeded(order))
    } else {
        Ok(())
    }
}

fn call_args<'a>(s: &'a str, names: &[&str]) -> Option<&'a str> {
    names.iter().find_map(|n| s.strip_prefix(n)?.strip_prefix('(')?.strip_suffix(')'))
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Builds a named group; see the module docs for the accepted names.
pub fn preset(spec: &str) -> Result<Group> {
    let g = PresetKind::parse(spec)?.build()?;
    Ok(g)
}
