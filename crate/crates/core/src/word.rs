//! Canonical generators and freely reduced words over them.
//!
//! Words render as dot-separated letters with optional exponents:
//! `a1.c10`, `d1^3`, `c10^-1.e1`. The empty word renders as `1`. Parsing also
//! accepts parenthesized groups with an exponent, e.g. `(c10.e1^-1)^3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("bad generator name {0:?}")]
    BadGenerator(String),
    #[error("bad word syntax near {0:?}")]
    Syntax(String),
    #[error("generator {0} does not belong to the signature")]
    UnknownGenerator(Gen),
}

/// A canonical generator. Indices `i` are 1-based; the reflection index `j`
/// runs over `0..=s_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X(u32),
    C(u32, u32),
    E(u32),
    A(u32),
    B(u32),
    D(u32),
}

impl Gen {
    /// Reflections and glide reflections reverse orientation.
    pub fn reverses_orientation(self) -> bool {
        matches!(self, Gen::C(..) | Gen::D(_))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::X(i) => write!(f, "x{i}"),
            Gen::C(i, j) if i < 10 && j < 10 => write!(f, "c{i}{j}"),
            Gen::C(i, j) => write!(f, "c{i}_{j}"),
            Gen::E(i) => write!(f, "e{i}"),
            Gen::A(i) => write!(f, "a{i}"),
            Gen::B(i) => write!(f, "b{i}"),
            Gen::D(i) => write!(f, "d{i}"),
        }
    }
}

impl FromStr for Gen {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadGenerator(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |t: &str| -> Result<u32, WordError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match kind {
            'x' => Ok(Gen::X(num(rest)?)),
            'e' => Ok(Gen::E(num(rest)?)),
            'a' => Ok(Gen::A(num(rest)?)),
            'b' => Ok(Gen::B(num(rest)?)),
            'd' => Ok(Gen::D(num(rest)?)),
            'c' => {
                if let Some((i, j)) = rest.split_once('_') {
                    Ok(Gen::C(num(i)?, num(j)?))
                } else if rest.len() == 2 {
                    Ok(Gen::C(num(&rest[..1])?, num(&rest[1..])?))
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Gen {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A freely reduced word: adjacent letters have distinct generators and
/// every exponent is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: Gen) -> Self {
        Word {
            letters: vec![(g, 1)],
        }
    }

    pub fn power(g: Gen, e: i64) -> Self {
        Word::from_letters([(g, e)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Product of single generators.
    pub fn from_gens(gens: impl IntoIterator<Item = Gen>) -> Self {
        Word::from_letters(gens.into_iter().map(|g| (g, 1)))
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `g^e`, merging with the last letter when possible.
    pub fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self · g · self⁻¹`.
    pub fn conjugating(&self, g: &Word) -> Word {
        self.mul(g).mul(&self.inverse())
    }

    /// Sum of |exponent| over all letters.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Exponent-sum parity of orientation-reversing letters: `-1` if odd.
    pub fn character(&self) -> i8 {
        let odd = self
            .letters
            .iter()
            .filter(|(g, _)| g.reverses_orientation())
            .map(|&(_, e)| e.unsigned_abs())
            .sum::<u64>()
            % 2
            == 1;
        if odd {
            -1
        } else {
            1
        }
    }

    /// Replaces each generator by a word.
    pub fn substitute(&self, f: &mut impl FnMut(Gen) -> Word) -> Word {
        let mut w = Word::identity();
        for &(g, e) in &self.letters {
            w = w.mul(&f(g).pow(e));
        }
        w
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.letters.iter().map(|l| l.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" || compact.is_empty() {
            return Ok(Word::identity());
        }
        let mut pos = 0;
        let w = parse_product(compact.as_bytes(), &mut pos)?;
        if pos != compact.len() {
            return Err(WordError::Syntax(compact[pos..].to_string()));
        }
        Ok(w)
    }
}

fn parse_product(b: &[u8], pos: &mut usize) -> Result<Word, WordError> {
    let mut w = parse_factor(b, pos)?;
    while *pos < b.len() && (b[*pos] == b'.' || b[*pos] == b'*') {
        *pos += 1;
        w = w.mul(&parse_factor(b, pos)?);
    }
    Ok(w)
}

fn parse_factor(b: &[u8], pos: &mut usize) -> Result<Word, WordError> {
    let near = |p: usize| WordError::Syntax(String::from_utf8_lossy(&b[p.min(b.len())..]).into());
    let base = if b.get(*pos) == Some(&b'(') {
        *pos += 1;
        let w = parse_product(b, pos)?;
        if b.get(*pos) != Some(&b')') {
            return Err(near(*pos));
        }
        *pos += 1;
        w
    } else {
        let start = *pos;
        while *pos < b.len() && (b[*pos].is_ascii_alphanumeric() || b[*pos] == b'_') {
            *pos += 1;
        }
        if start == *pos {
            return Err(near(start));
        }
        let name = std::str::from_utf8(&b[start..*pos]).unwrap();
        if name == "1" {
            Word::identity()
        } else {
            Word::gen(name.parse()?)
        }
    };
    if b.get(*pos) == Some(&b'^') {
        *pos += 1;
        let start = *pos;
        if b.get(*pos) == Some(&b'-') {
            *pos += 1;
        }
        while *pos < b.len() && b[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let e: i64 = std::str::from_utf8(&b[start..*pos])
            .unwrap()
            .parse()
            .map_err(|_| near(start))?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
