//! Permutations of `{1..n}` with a fixed left-to-right product.
//!
//! `p.then(&q)` (also written `p * q` through [`Perm::compose`]) applies `p`
//! first and `q` second. Every evaluator in the crate multiplies words in this
//! order, so a word `w = y1 y2 .. yk` maps to `img(y1).then(img(y2))...`.
//! Internally points are 0-based; serialization is 1-based.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image array is not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("cycle notation: {0}")]
    CycleSyntax(String),
}

/// A permutation stored by its (0-based) image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds from a 0-based image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds from a 1-based image array such as `[2,1,4,3]`.
    pub fn from_one_based(images: &[u32]) -> Result<Self, PermError> {
        if images.contains(&0) {
            return Err(PermError::NotBijection(images.len()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// Builds from disjoint-or-not cycles over 1-based points; cycles are
    /// multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        let mut p = Perm::identity(degree);
        for cyc in cycles {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || b == 0 || a as usize > degree || b as usize > degree {
                    return Err(PermError::CycleSyntax(format!(
                        "point out of range in {cyc:?}"
                    )));
                }
                images[(a - 1) as usize] = b - 1;
            }
            let c = Perm::from_images(images)
                .map_err(|_| PermError::CycleSyntax(format!("repeated point in {cyc:?}")))?;
            p = p.then(&c);
        }
        Ok(p)
    }

    /// Parses cycle notation like `(1 2)(3,4,5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::CycleSyntax(format!("expected '(' at {rest:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::CycleSyntax("unclosed cycle".into()))?;
            let body = &rest[1..close];
            let pts = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| PermError::CycleSyntax(format!("bad point {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = rest[close + 1..].trim_start();
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// Checked form of [`Perm::then`].
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `self^-1 * g * self`, i.e. conjugation of `g` by `self` in the
    /// right-action convention: `g^self`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.inverse().then(g).then(self)
    }

    /// Cycle lengths (including fixed points).
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }

    /// Places `self` on points `offset..offset+deg` inside a permutation of
    /// degree `total`, fixing everything else.
    pub fn embed(&self, offset: usize, total: usize) -> Perm {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + j;
        }
        Perm { images }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation, 1-based; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = s;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Perm::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s).unwrap()
    }

    #[test]
    fn left_to_right_composition() {
        let p = c(4, "(1 2)(3 4)");
        let q = c(4, "(1 2 3)");
        assert_eq!(p.then(&q), c(4, "(1 3 4)"));
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(Perm::identity(4).then(&q), q);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let e = Perm::identity(3).compose(&Perm::identity(4));
        assert_eq!(e, Err(PermError::DegreeMismatch(3, 4)));
    }

    #[test]
    fn orders() {
        assert_eq!(c(5, "(1 2 3 4 5)").order(), 5);
        assert_eq!(c(5, "(1 2)(3 4 5)").order(), 6);
        assert_eq!(Perm::identity(7).order(), 1);
    }

    #[test]
    fn one_based_round_trip_and_display() {
        let p = Perm::from_one_based(&[2, 1, 4, 3]).unwrap();
        assert_eq!(p.to_one_based(), vec![2, 1, 4, 3]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert!(Perm::from_one_based(&[1, 1]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[2,1,4,3]");
    }

    #[test]
    fn pow_and_conjugate() {
        let p = c(5, "(1 2 3 4 5)");
        assert_eq!(p.pow(5), Perm::identity(5));
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(7), p.pow(2));
        let t = c(5, "(1 2)");
        // t^p sends p(1) <-> p(2)
        assert_eq!(p.conjugate(&t), c(5, "(2 3)"));
    }
}
