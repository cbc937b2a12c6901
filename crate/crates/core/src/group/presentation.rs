//! Finite presentations `<a,b | a^2=b^3=1, ab=ba>` and a small cursor shared with the
//! algebra-element parser.

use std::str::FromStr;

use crate::error::{Error, Result};

/// A group word: `(generator index, nonzero exponent)` pairs read left to right.
pub type Word = Vec<(usize, i32)>;

pub fn invert_word(w: &[(usize, i32)]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Concatenates and merges adjacent powers of the same generator.
pub fn concat_words(a: &[(usize, i32)], b: &[(usize, i32)]) -> Word {
    let mut out: Word = a.to_vec();
    for &(g, e) in b {
        match out.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

/// Renders a word with generator names, `*`-separated; the empty word is `1`.
pub fn format_word(w: &[(usize, i32)], names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{}", names[g], e) })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub gen_names: Vec<String>,
    /// Each relator is `lhs · rhs⁻¹` for one expanded relation.
    pub relators: Vec<Word>,
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    pub(crate) fn error(&self, expected: &str) -> Error {
        Error::Parse { position: self.pos, expected: expected.to_string() }
    }

    pub(crate) fn identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || (i > 0 && (c.is_ascii_digit() || c == '_'))))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.error("generator name"));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    /// Optionally signed decimal integer.
    pub(crate) fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = self.rest();
        let neg = rest.starts_with('-');
        let digits = rest[neg as usize..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("integer"));
        }
        let end = neg as usize + digits;
        let v: i64 = rest[..end].parse().map_err(|_| self.error("integer"))?;
        self.pos += end;
        Ok(v)
    }

    pub(crate) fn peek_digit(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    /// Longest generator name that prefixes the remaining input, for juxtaposed words.
    fn generator(&mut self, names: &[String]) -> Result<usize> {
        self.skip_ws();
        let rest = self.rest();
        let best = names.iter().enumerate().filter(|(_, n)| rest.starts_with(n.as_str())).max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(i)
            }
            None if rest.starts_with(|c: char| c.is_ascii_alphabetic()) => {
                let id = self.identifier()?;
                Err(Error::UnknownGenerator(id))
            }
            None => Err(self.error("generator")),
        }
    }

    /// `word ::= item ('*'? item)* | '1'`, `item ::= gen ('^' int)?`.
    pub(crate) fn word(&mut self, names: &[String]) -> Result<Word> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        loop {
            let g = self.generator(names)?;
            let e = if self.eat('^') { self.integer()? } else { 1 };
            if e != 0 {
                w = concat_words(&w, &[(g, e as i32)]);
            }
            let star = self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => continue,
                _ if star => return Err(self.error("generator")),
                _ => return Ok(w),
            }
        }
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Presentation> {
        let mut cur = Cursor::new(text);
        cur.expect('<')?;
        let mut gen_names = Vec::new();
        loop {
            let name = cur.identifier()?;
            if gen_names.contains(&name) {
                return Err(cur.error("distinct generator name"));
            }
            gen_names.push(name);
            if !cur.eat(',') {
                break;
            }
        }
        let mut relators = Vec::new();
        if cur.eat('|') {
            loop {
                let mut chain = vec![cur.word(&gen_names)?];
                cur.expect('=')?;
                chain.push(cur.word(&gen_names)?);
                while cur.eat('=') {
                    chain.push(cur.word(&gen_names)?);
                }
                let last = invert_word(chain.last().unwrap());
                for lhs in &chain[..chain.len() - 1] {
                    relators.push(concat_words(lhs, &last));
                }
                if !cur.eat(',') {
                    break;
                }
            }
        }
        cur.expect('>')?;
        if !cur.at_end() {
            return Err(cur.error("end of input"));
        }
        Ok(Presentation { gen_names, relators })
    }
}
