//! Permutation groups given by generators, with a deterministic
//! Schreier–Sims stabilizer chain.
//!
//! Base points are chosen as the smallest point moved by the first strong
//! generator that needs a new level, so identical generator lists always give
//! identical chains.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::Perm;

/// Default cap on permutation degree accepted by group constructors.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator degree {found} differs from group degree {expected}")]
    Degree { expected: usize, found: usize },
    #[error("degree {0} exceeds cap {1}")]
    DegreeCap(usize, usize),
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Perm>,
    /// `transversal[b] = Some(u)` with `base^u = b`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
    /// Schreier generators already sifted, as (orbit index, generator index).
    checked: HashSet<(usize, usize)>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
            checked: HashSet::new(),
        }
    }

    /// Extends the orbit with the current generators, keeping existing
    /// transversal elements untouched.
    fn extend_orbit(&mut self) {
        let mut queue: VecDeque<usize> = self.orbit.iter().copied().collect();
        while let Some(b) = queue.pop_front() {
            for g in &self.gens {
                let c = g.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().then(g);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                    queue.push_back(c);
                }
            }
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    /// Sifts `g` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed all levels).
    fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(lvl.base);
            match &lvl.transversal[b] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }

    /// Adds `g` to the group and restores the chain. Returns `false` if `g`
    /// was already a member.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        let (h, j) = self.sift_from(g, 0);
        if h.is_identity() {
            return false;
        }
        self.insert_strong(h, 0, j);
        self.complete(j);
        true
    }

    /// Adds `h` (which fixes base points `0..from`) as strong generator at
    /// levels `from..=to`, creating a new level when needed.
    fn insert_strong(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = h.first_moved().expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        for lvl in &mut self.levels[from..=to] {
            lvl.gens.push(h.clone());
            lvl.extend_orbit();
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let iu = i as usize;
            let n_orbit = self.levels[iu].orbit.len();
            let n_gens = self.levels[iu].gens.len();
            for oi in 0..n_orbit {
                for gi in 0..n_gens {
                    if self.levels[iu].checked.contains(&(oi, gi)) {
                        continue;
                    }
                    self.levels[iu].checked.insert((oi, gi));
                    let lvl = &self.levels[iu];
                    let b = lvl.orbit[oi];
                    let s = &lvl.gens[gi];
                    let bs = s.apply(b);
                    let ub = lvl.transversal[b].as_ref().unwrap();
                    let ubs = lvl.transversal[bs].as_ref().unwrap();
                    let schreier = ub.then(s).then(&ubs.inverse());
                    let (h, j) = self.sift_from(&schreier, iu + 1);
                    if !h.is_identity() {
                        self.insert_strong(h, iu + 1, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            // orbit or gens may have grown while we were at deeper levels
            if self.levels[iu].orbit.len() != n_orbit || self.levels[iu].gens.len() != n_gens {
                continue 'outer;
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.levels
            .first()
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }
}

/// A permutation group on `{1..degree}` given by generators. The chain is
/// computed once on first use and shared between threads.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        Self::with_cap(degree, generators, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, GroupError> {
        if degree > cap {
            return Err(GroupError::DegreeCap(degree, cap));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::Degree {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::from_generators(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// All elements, by breadth-first closure. Only for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        closure(self.degree, &self.generators)
    }

    /// Smallest subgroup containing `s` and normalised by every generator of
    /// `self`.
    pub fn normal_closure(&self, s: &[Perm]) -> PermGroup {
        let mut chain = StabChain::new(self.degree);
        let mut gens: Vec<Perm> = Vec::new();
        let mut queue: VecDeque<Perm> = VecDeque::new();
        for x in s {
            if chain.add_generator(x) {
                gens.push(x.clone());
                queue.push_back(x.clone());
            }
        }
        while let Some(n) = queue.pop_front() {
            for g in &self.generators {
                let c = g.conjugate(&n);
                if chain.add_generator(&c) {
                    gens.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        let out = PermGroup::new(self.degree, gens).expect("same degree");
        let _ = out.chain.set(chain);
        out
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in gens.iter().skip(i + 1) {
                comms.push(commutator(a, b));
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Is `sub` normalised by every generator of `self`?
    pub fn normalises(&self, sub: &PermGroup) -> bool {
        self.generators
            .iter()
            .all(|g| sub.generators.iter().all(|n| sub.contains(&g.conjugate(n))))
    }
}

/// `[a,b] = a^-1 b^-1 a b`.
pub fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// Breadth-first closure of a generating set.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Direct product of several groups acting on the disjoint union of their
/// domains, with the per-factor embeddings.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    pub offsets: Vec<usize>,
    pub degrees: Vec<usize>,
}

impl DirectProduct {
    pub fn new(factors: &[&PermGroup]) -> Self {
        let degrees: Vec<usize> = factors.iter().map(|f| f.degree()).collect();
        let mut offsets = Vec::with_capacity(factors.len());
        let mut total = 0;
        for d in &degrees {
            offsets.push(total);
            total += d;
        }
        let gens = factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| {
                let off = offsets[i];
                f.generators().iter().map(move |g| g.embed(off, total))
            })
            .collect();
        DirectProduct {
            group: PermGroup::with_cap(total, gens, usize::MAX).expect("degrees agree"),
            offsets,
            degrees,
        }
    }

    pub fn total_degree(&self) -> usize {
        self.group.degree()
    }

    /// Image of an element of factor `i`.
    pub fn embed(&self, i: usize, p: &Perm) -> Perm {
        p.embed(self.offsets[i], self.total_degree())
    }

    /// Tuple `(p_0, p_1, ..)` as a single permutation.
    pub fn tuple(&self, parts: &[Perm]) -> Perm {
        let total = self.total_degree();
        let mut images = Vec::with_capacity(total);
        for (i, p) in parts.iter().enumerate() {
            let off = self.offsets[i] as u32;
            images.extend(p.images().iter().map(|&j| j + off));
        }
        Perm::from_images(images).expect("disjoint blocks")
    }
}

/// `(Q x Q) ⋊ C2` acting on two copies of Q's domain, the C2 swapping them.
#[derive(Clone, Debug)]
pub struct WreathC2 {
    pub group: PermGroup,
    base_degree: usize,
}

impl WreathC2 {
    pub fn new(q: &PermGroup) -> Self {
        let n = q.degree();
        let mut gens: Vec<Perm> = q.generators().iter().map(|g| g.embed(0, 2 * n)).collect();
        let swap = Self::swap_perm(n);
        gens.push(swap);
        WreathC2 {
            group: PermGroup::with_cap(2 * n, gens, usize::MAX).expect("degrees agree"),
            base_degree: n,
        }
    }

    fn swap_perm(n: usize) -> Perm {
        let images = (0..2 * n as u32)
            .map(|i| {
                if (i as usize) < n {
                    i + n as u32
                } else {
                    i - n as u32
                }
            })
            .collect();
        Perm::from_images(images).expect("swap")
    }

    pub fn swap(&self) -> Perm {
        Self::swap_perm(self.base_degree)
    }

    /// `(q1, q2; 0)`.
    pub fn pair(&self, q1: &Perm, q2: &Perm) -> Perm {
        let n = self.base_degree;
        q1.embed(0, 2 * n).then(&q2.embed(n, 2 * n))
    }

    /// `(q1, q2; 1) = (q1, q2; 0) · swap`.
    pub fn pair_swapped(&self, q1: &Perm, q2: &Perm) -> Perm {
        self.pair(q1, q2).then(&self.swap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(deg: usize, s: &str) -> Perm {
        Perm::parse_cycles(deg, s).unwrap()
    }

    fn group(deg: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(deg, gens.iter().map(|g| c(deg, g)).collect()).unwrap()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(group(5, &["(1 2 3 4 5)", "(1 2)"]).order(), 120);
        assert_eq!(group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).order(), 4);
        assert_eq!(PermGroup::trivial(3).order(), 1);
        assert_eq!(group(5, &["(1 2 3)", "(3 4 5)"]).order(), 60);
    }

    #[test]
    fn membership() {
        let a4 = group(4, &["(1 2 3)", "(2 3 4)"]);
        assert!(a4.contains(&c(4, "(1 2)(3 4)")));
        assert!(!a4.contains(&c(4, "(1 2)")));
    }

    #[test]
    fn normal_closures() {
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        assert_eq!(s3.normal_closure(&[c(3, "(1 2 3)")]).order(), 3);
        assert_eq!(s3.normal_closure(&[Perm::identity(3)]).order(), 1);
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = s4.normal_closure(&[c(4, "(1 2)(3 4)")]);
        assert_eq!(v4.order(), 4);
        assert!(s4.normalises(&v4));
    }

    #[test]
    fn derived_and_perfect() {
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(a5.is_perfect());
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        assert_eq!(s4.derived_subgroup().order(), 12);
        assert!(!s4.is_perfect());
        let c2 = group(2, &["(1 2)"]);
        assert_eq!(c2.derived_subgroup().order(), 1);
    }

    #[test]
    fn products_and_wreath() {
        let c2 = group(2, &["(1 2)"]);
        let c3 = group(3, &["(1 2 3)"]);
        let c4 = group(4, &["(1 2 3 4)"]);
        let d3 = group(3, &["(1 2 3)", "(1 2)"]);
        assert_eq!(DirectProduct::new(&[&c2, &c2]).group.order(), 4);
        assert_eq!(DirectProduct::new(&[&d3, &c4]).group.order(), 24);
        assert_eq!(DirectProduct::new(&[&d3]).group.order(), 6);
        assert_eq!(WreathC2::new(&c2).group.order(), 8);
        assert_eq!(WreathC2::new(&PermGroup::trivial(1)).group.order(), 2);
        let w = WreathC2::new(&c3);
        assert_eq!(w.group.order(), 18);
        assert_eq!(w.swap().order(), 2);
        let q = c(3, "(1 2 3)");
        let e = Perm::identity(3);
        // swap conjugation exchanges the coordinates
        assert_eq!(w.swap().conjugate(&w.pair(&q, &e)), w.pair(&e, &q));
    }
}
