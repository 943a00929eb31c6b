//! Checkers on finite groups generated by involution chains, as they arise
//! from regular maps and string polytopes.
//!
//! An [`InvolutionSystem`] `C_0, …, C_{s−1}` with `order(C_{i−1}C_i) = n_i`
//! is a quotient of the NEC group `(0;+;[-];{(n_1,…,n_s)})`. Its kernel has
//! orientation-reversing elements exactly when the identity is a word of odd
//! length in the `C_i`, i.e. when the even-word subgroup is everything.

use std::collections::{HashMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::normalize;
use crate::cert::Certificate;
use crate::group::{GroupError, PermGroup};
use crate::hom::Homomorphism;
use crate::perm::{Perm, PermError};
use crate::signature::NecSignature;
use crate::word::{Gen, Word};

/// Largest group order for exhaustive element searches.
pub const SEARCH_BOUND: u128 = 10_000;

#[derive(Debug, Error)]
pub enum MapsError {
    #[error("cannot read group file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed group file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("generators[{index}]: {source}")]
    Perm { index: usize, source: PermError },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("empty generator list")]
    Empty,
    #[error("{field}: {detail}")]
    Invariant { field: String, detail: String },
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("route inapplicable: {0}")]
    Inapplicable(String),
    #[error("group order {0} exceeds search bound {SEARCH_BOUND}")]
    Bound(u128),
}

fn invariant(field: impl Into<String>, detail: impl Into<String>) -> MapsError {
    MapsError::Invariant {
        field: field.into(),
        detail: detail.into(),
    }
}

/// On-disk group description. Generators are 1-based image arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    pub roles: Vec<String>,
    pub declared_links: Vec<u32>,
    #[serde(default)]
    pub metadata: serde_json::Value,
}

#[derive(Debug, Clone)]
pub struct InvolutionSystem {
    pub group: PermGroup,
    pub involutions: Vec<Perm>,
    pub links: Vec<u32>,
}

impl InvolutionSystem {
    /// `links[i−1]` is the order of `C_{i−1}C_i`, and the last entry that of
    /// `C_{s−1}C_0`.
    pub fn new(involutions: Vec<Perm>, links: Vec<u32>) -> Result<Self, MapsError> {
        let s = involutions.len();
        if s == 0 {
            return Err(MapsError::Empty);
        }
        if s < 2 {
            return Err(invariant(
                "generators",
                "at least two involutions are required",
            ));
        }
        if links.len() != s {
            return Err(invariant(
                "declared_links",
                format!("{} entries for {} involutions", links.len(), s),
            ));
        }
        for (i, c) in involutions.iter().enumerate() {
            if c.order() != 2 {
                return Err(invariant(
                    format!("C{i}"),
                    format!("order {}, expected 2", c.order()),
                ));
            }
        }
        for i in 1..=s {
            let o = involutions[i - 1].then(&involutions[i % s]).order();
            if o != links[i - 1] as u64 {
                return Err(invariant(
                    format!("declared_links[{}]", i - 1),
                    format!(
                        "order(C{}C{}) is {o}, declared {}",
                        i - 1,
                        i % s,
                        links[i - 1]
                    ),
                ));
            }
        }
        let group = PermGroup::new(involutions[0].degree(), involutions.clone())?;
        Ok(InvolutionSystem {
            group,
            involutions,
            links,
        })
    }

    pub fn len(&self) -> usize {
        self.involutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.involutions.is_empty()
    }

    /// The NEC signature this system is a quotient of.
    pub fn signature(&self) -> NecSignature {
        let links: Vec<String> = self.links.iter().map(|n| n.to_string()).collect();
        format!("(0;+;[-];{{({})}})", links.join(","))
            .parse()
            .expect("link periods at least 2")
    }

    /// `c_{1i} ↦ C_i`, `c_{1s} ↦ C_0`, `e_1 ↦ 1`.
    pub fn homomorphism(&self) -> Homomorphism {
        let s = self.len() as u32;
        let n = self.group.degree();
        Homomorphism::from_fn(self.signature(), n, |g| match g {
            Gen::C(1, j) if j < s => self.involutions[j as usize].clone(),
            Gen::C(1, _) => self.involutions[0].clone(),
            _ => Perm::identity(n),
        })
        .expect("images for every generator")
    }

    /// `X_i = C_{i−1}C_i` for `i < s` and `X_s = C_{s−1}C_0`, with `Z = C_0`
    /// when it lies in the group they generate.
    pub fn rotations(&self) -> RotationSystem {
        let s = self.len();
        let xs: Vec<Perm> = (1..=s)
            .map(|i| self.involutions[i - 1].then(&self.involutions[i % s]))
            .collect();
        let mut sys = RotationSystem::new(xs, self.links.clone(), None)
            .expect("rotations of a valid involution system");
        if sys.group.contains(&self.involutions[0]) {
            sys.z = Some(self.involutions[0].clone());
        }
        sys
    }

    /// String condition for polytopes: generators that are not adjacent in
    /// the linear order commute. The intersection condition is not checked.
    pub fn is_string(&self) -> bool {
        let c = &self.involutions;
        (0..c.len()).all(|i| (i + 2..c.len()).all(|j| c[i].then(&c[j]) == c[j].then(&c[i])))
    }
}

#[derive(Debug, Clone)]
pub struct RotationSystem {
    pub group: PermGroup,
    pub elements: Vec<Perm>,
    pub orders: Vec<u32>,
    pub z: Option<Perm>,
}

impl RotationSystem {
    pub fn new(elements: Vec<Perm>, orders: Vec<u32>, z: Option<Perm>) -> Result<Self, MapsError> {
        if elements.is_empty() {
            return Err(MapsError::Empty);
        }
        if orders.len() != elements.len() {
            return Err(invariant(
                "declared_links",
                format!("{} entries for {} elements", orders.len(), elements.len()),
            ));
        }
        for (i, (x, &n)) in elements.iter().zip(&orders).enumerate() {
            if x.order() != n as u64 {
                return Err(invariant(
                    format!("X{}", i + 1),
                    format!("order {}, declared {n}", x.order()),
                ));
            }
        }
        let degree = elements[0].degree();
        let product = elements
            .iter()
            .fold(Perm::identity(degree), |acc, x| acc.then(x));
        if !product.is_identity() {
            return Err(invariant("generators", "X1⋯Xs is not the identity"));
        }
        let group = PermGroup::new(degree, elements.clone())?;
        if let Some(z) = &z {
            if !group.contains(z) {
                return Err(invariant("Z", "not in the group generated by the X_i"));
            }
        }
        Ok(RotationSystem {
            group,
            elements,
            orders,
            z,
        })
    }
}

impl RotationSystem {
    /// The chain `C_i = Z X_1 ⋯ X_i`, `0 ≤ i < s`, whose consecutive products
    /// recover the `X_i` when every `C_i` is an involution.
    pub fn involution_system(&self, z: &Perm) -> Result<InvolutionSystem, MapsError> {
        let mut chain = vec![z.clone()];
        for x in &self.elements[..self.elements.len() - 1] {
            let next = chain.last().expect("nonempty").then(x);
            chain.push(next);
        }
        InvolutionSystem::new(chain, self.orders.clone())
    }
}

#[derive(Debug, Clone)]
pub enum GroupSystem {
    Involutions(InvolutionSystem),
    Rotations(RotationSystem),
}

/// Parses and validates a group file.
pub fn parse_group_file(text: &str) -> Result<GroupSystem, MapsError> {
    let file: GroupFile = serde_json::from_str(text)?;
    if file.generators.is_empty() {
        return Err(MapsError::Empty);
    }
    if file.roles.len() != file.generators.len() {
        return Err(invariant(
            "roles",
            format!(
                "{} roles for {} generators",
                file.roles.len(),
                file.generators.len()
            ),
        ));
    }
    let mut perms = Vec::new();
    for (index, g) in file.generators.iter().enumerate() {
        if g.len() != file.degree {
            return Err(invariant(
                format!("generators[{index}]"),
                format!("length {}, degree {}", g.len(), file.degree),
            ));
        }
        perms.push(Perm::from_one_based(g).map_err(|source| MapsError::Perm { index, source })?);
    }
    let expect = |prefix: &str, from: usize| -> Result<(), MapsError> {
        for (i, role) in file.roles.iter().enumerate() {
            if *role != format!("{prefix}{}", i + from) {
                return Err(invariant(
                    format!("roles[{i}]"),
                    format!("expected {prefix}{}, found {role}", i + from),
                ));
            }
        }
        Ok(())
    };
    if file.roles[0].starts_with('C') {
        expect("C", 0)?;
        Ok(GroupSystem::Involutions(InvolutionSystem::new(
            perms,
            file.declared_links,
        )?))
    } else {
        let z = match file.roles.iter().position(|r| r == "Z") {
            Some(i) if i + 1 == file.roles.len() => perms.pop(),
            Some(i) => return Err(invariant(format!("roles[{i}]"), "Z must come last")),
            None => None,
        };
        let roles = &file.roles[..perms.len()];
        for (i, role) in roles.iter().enumerate() {
            if *role != format!("X{}", i + 1) {
                return Err(invariant(
                    format!("roles[{i}]"),
                    format!("expected X{}, found {role}", i + 1),
                ));
            }
        }
        Ok(GroupSystem::Rotations(RotationSystem::new(
            perms,
            file.declared_links,
            z,
        )?))
    }
}

pub fn ingest_group(path: impl AsRef<Path>) -> Result<GroupSystem, MapsError> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

type State = (Perm, bool);

/// Shortest word in `letters` with an odd number of flagged letters that
/// evaluates to the identity, as a list of letter indices. Searches at most
/// `bound` group elements.
pub fn parity_bfs(degree: usize, letters: &[(Perm, bool)], bound: usize) -> Option<Vec<usize>> {
    let start = (Perm::identity(degree), false);
    let mut parent: HashMap<State, Option<(State, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for (i, (p, odd)) in letters.iter().enumerate() {
            let next = (state.0.then(p), state.1 ^ odd);
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((state.clone(), i)));
            if next.1 && next.0.is_identity() {
                let mut path = Vec::new();
                let mut cur = next;
                while let Some(Some((prev, i))) = parent.get(&cur) {
                    path.push(*i);
                    cur = prev.clone();
                }
                path.reverse();
                return Some(path);
            }
            if parent.len() > 2 * bound {
                return None;
            }
            queue.push_back(next);
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct OddIdentityReport {
    pub holds: bool,
    pub group_order: u128,
    pub even_order: u128,
    /// Over `c_{10}, …, c_{1,s−1}`, standing for `C_0, …, C_{s−1}`.
    pub witness: Option<Word>,
}

impl OddIdentityReport {
    /// Certificate for the system's homomorphism, when a witness exists.
    pub fn certificate(&self, sys: &InvolutionSystem) -> Option<Certificate> {
        let w = self.witness.as_ref()?;
        Some(Certificate::build(
            &sys.homomorphism(),
            "odd-identity",
            Some(w),
            false,
            Vec::new(),
        ))
    }
}

/// Decides the odd identity word criterion by the index of the even-word
/// subgroup, and extracts a witness for groups of order at most
/// [`SEARCH_BOUND`].
pub fn odd_identity_check(sys: &InvolutionSystem) -> OddIdentityReport {
    let c = &sys.involutions;
    let evens: Vec<Perm> = c[1..].iter().map(|ci| c[0].then(ci)).collect();
    let even = PermGroup::new(sys.group.degree(), evens).expect("same degree");
    let group_order = sys.group.order();
    let even_order = even.order();
    let holds = even_order == group_order;
    let witness = (holds && group_order <= SEARCH_BOUND)
        .then(|| {
            let letters: Vec<(Perm, bool)> = c.iter().map(|p| (p.clone(), true)).collect();
            parity_bfs(sys.group.degree(), &letters, group_order as usize)
        })
        .flatten()
        .map(|path| Word::from_gens(path.into_iter().map(|i| Gen::C(1, i as u32))));
    OddIdentityReport {
        holds,
        group_order,
        even_order,
        witness,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryReport {
    /// `None` when the group is too large to search.
    pub holds: Option<bool>,
    pub z: Option<Perm>,
    /// Elements `Z` with every prefix of order exactly 2.
    pub exact_count: usize,
    /// Elements `Z` with every prefix of order at most 2.
    pub relaxed_count: usize,
    pub message: String,
}

/// Searches for `Z` with `Z X_1 ⋯ X_i` an involution for `0 ≤ i < s`.
pub fn corollary_check(sys: &RotationSystem) -> CorollaryReport {
    let order = sys.group.order();
    if order > SEARCH_BOUND {
        return CorollaryReport {
            holds: None,
            z: None,
            exact_count: 0,
            relaxed_count: 0,
            message: format!("undecided at bound: |G| = {order} exceeds {SEARCH_BOUND}"),
        };
    }
    let s = sys.elements.len();
    let prefix_orders = |z: &Perm| {
        let mut cur = z.clone();
        let mut out = Vec::with_capacity(s);
        for i in 0..s {
            out.push(cur.order());
            if i + 1 < s {
                cur = cur.then(&sys.elements[i]);
            }
        }
        out
    };
    let (mut exact_count, mut relaxed_count, mut z) = (0, 0, None);
    let mut candidates = sys.group.elements();
    candidates.sort();
    if let Some(given) = &sys.z {
        candidates.retain(|p| p != given);
        candidates.insert(0, given.clone());
    }
    for cand in candidates {
        let orders = prefix_orders(&cand);
        if orders.iter().all(|&o| o <= 2) {
            relaxed_count += 1;
            if orders.iter().all(|&o| o == 2) {
                exact_count += 1;
                z.get_or_insert(cand);
            }
        }
    }
    CorollaryReport {
        holds: Some(exact_count > 0),
        z,
        exact_count,
        relaxed_count,
        message: format!("{exact_count} elements with exact involution prefixes, {relaxed_count} allowing the identity"),
    }
}

fn full_triple(sys: &InvolutionSystem) -> Result<(u32, u32), MapsError> {
    if sys.len() != 3 {
        return Err(MapsError::Precondition(format!(
            "three involutions required, found {}",
            sys.len()
        )));
    }
    let l = &sys.links;
    if l[0] != 2 || !l[2].is_multiple_of(2) || l[2] < 4 {
        return Err(MapsError::Precondition(format!(
            "links ({},{},{}) are not of the form (2,m,2n) with n ≥ 2",
            l[0], l[1], l[2]
        )));
    }
    Ok((l[1], l[2] / 2))
}

#[derive(Debug, Clone, Serialize)]
pub struct HemiReport {
    pub s: u32,
    pub n: u32,
    pub n_generators: Vec<Perm>,
    pub normal: bool,
    pub n_order: u128,
    pub quotient_order: u128,
    pub signature: Option<String>,
    pub certificate: Option<Certificate>,
    pub certified: bool,
    pub message: String,
}

/// Builds `N = ⟨C'_j⟩`, `C'_j = (C_1C_2)^{−j} C_0 (C_1C_2)^j`, and when
/// `|G/N| = 2s` certifies `(0;+;[-];{(n,…,n)})` through `N`.
pub fn hemi_construction(sys: &InvolutionSystem) -> Result<HemiReport, MapsError> {
    let (s, n) = full_triple(sys)?;
    let c = &sys.involutions;
    let x = c[1].then(&c[2]);
    if x.order() != s as u64 {
        return Err(MapsError::Precondition(format!(
            "order(C1C2) is {}, declared {s}",
            x.order()
        )));
    }
    let gens: Vec<Perm> = (0..s as i64)
        .map(|j| x.pow(-j).then(&c[0]).then(&x.pow(j)))
        .collect();
    let sub = PermGroup::new(sys.group.degree(), gens.clone())?;
    let normal = sys.group.normalises(&sub);
    let n_order = sub.order();
    let quotient_order = sys.group.order() / n_order;
    let mut report = HemiReport {
        s,
        n,
        n_generators: gens.clone(),
        normal,
        n_order,
        quotient_order,
        signature: None,
        certificate: None,
        certified: false,
        message: String::new(),
    };
    if quotient_order != 2 * s as u128 {
        report.message = format!(
            "|G/N| = {quotient_order}, not 2s = {}: construction inapplicable",
            2 * s
        );
        return Ok(report);
    }
    let inner = InvolutionSystem::new(gens, vec![n; s as usize])?;
    report.signature = Some(inner.signature().to_string());
    let odd = odd_identity_check(&inner);
    match odd.certificate(&inner) {
        Some(mut cert) => {
            cert.recipe = "hemi".into();
            report.certified = matches!(cert.verify(), Ok(v) if v.pass);
            report.message = if report.certified {
                "certificate verified".into()
            } else {
                "certificate rejected".into()
            };
            report.certificate = Some(cert);
        }
        None if odd.holds => report.message = "no witness extracted within the search bound".into(),
        None => {
            report.message = format!(
                "witness check fails: the even-word subgroup of N has index {}, so no odd word is trivial",
                odd.group_order / odd.even_order
            )
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectReport {
    pub m: u32,
    pub n: u32,
    pub signature: String,
    /// Over `x_1` and `c_{10}`, standing for `C_1C_2` and `C_0`.
    pub witness: Word,
    pub certificate: Certificate,
    pub certified: bool,
}

/// For perfect `G`, finds a word in `x = C_1C_2` and `c = C_0` with an odd
/// number of `c` that is trivial, and certifies `(0;+;[m];{(n)})`.
pub fn perfect_route_check(sys: &InvolutionSystem) -> Result<PerfectReport, MapsError> {
    let (m, n) = full_triple(sys)?;
    if !sys.group.is_perfect() {
        return Err(MapsError::Inapplicable(format!(
            "group of order {} is not perfect",
            sys.group.order()
        )));
    }
    let order = sys.group.order();
    if order > SEARCH_BOUND {
        return Err(MapsError::Bound(order));
    }
    let c = &sys.involutions;
    let x = c[1].then(&c[2]);
    let letters = [
        (x.clone(), false),
        (x.inverse(), false),
        (c[0].clone(), true),
    ];
    let path = parity_bfs(sys.group.degree(), &letters, order as usize)
        .ok_or_else(|| MapsError::Inapplicable("no odd word in x and c is trivial".into()))?;
    let witness = Word::from_letters(path.into_iter().map(|i| match i {
        0 => (Gen::X(1), 1),
        1 => (Gen::X(1), -1),
        _ => (Gen::C(1, 0), 1),
    }));
    let signature: NecSignature = format!("(0;+;[{m}];{{({n})}})")
        .parse()
        .expect("valid periods");
    let xi = x.inverse();
    let images = [
        (Gen::X(1), x.clone()),
        (Gen::C(1, 0), c[0].clone()),
        (Gen::C(1, 1), xi.then(&c[0]).then(&x)),
        (Gen::E(1), xi),
    ];
    let h = Homomorphism::new(signature.clone(), sys.group.degree(), images)
        .expect("images for every generator");
    let (h, normalized) = normalize(h);
    let certificate = Certificate::build(&h, "perfect", Some(&witness), normalized, Vec::new());
    let certified = matches!(certificate.verify(), Ok(v) if v.pass);
    Ok(PerfectReport {
        m,
        n,
        signature: signature.to_string(),
        witness,
        certificate,
        certified,
    })
}
