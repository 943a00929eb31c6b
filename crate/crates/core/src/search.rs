//! Bounded, seeded search for finite quotients with exact element orders.
//!
//! Every routine tries a small lookup table first, then structured families
//! (dihedral, abelian, affine), then random permutations. Nothing is trusted:
//! each result is re-checked with exact element orders before it is returned.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use thiserror::Error;

use crate::hom::{combine, Homomorphism};
use crate::perm::Perm;
use crate::signature::{NecSignature, Sign};
use crate::targets::{cyclic, dihedral};
use crate::word::Gen;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search exhausted for {0}")]
    Exhausted(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("affine quotient collapses at N={0}")]
    Collapse(usize),
}

/// Search bounds and seed. Identical contexts give identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchContext {
    pub seed: u64,
    pub max_degree: usize,
    pub max_attempts: u64,
}

impl Default for SearchContext {
    fn default() -> Self {
        SearchContext {
            seed: 0,
            max_degree: 16,
            max_attempts: 1_000_000,
        }
    }
}

impl SearchContext {
    pub fn with_seed(seed: u64) -> Self {
        SearchContext {
            seed,
            ..Default::default()
        }
    }

    /// A generator keyed by the request, so separate requests do not share
    /// a random stream.
    fn rng(&self, salt: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in salt.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

#[derive(Debug, Deserialize)]
struct LookupEntry {
    degree: usize,
    images: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
struct LookupFile {
    polygon: HashMap<String, LookupEntry>,
    reflection: HashMap<String, LookupEntry>,
}

/// Small known solutions, keyed by sorted period tuple.
#[derive(Debug, Default)]
pub struct Lookup {
    pub polygon: HashMap<Vec<u32>, Vec<Perm>>,
    pub reflection: HashMap<Vec<u32>, Vec<Perm>>,
}

/// The shipped table; entries that fail re-verification are dropped.
pub fn lookup() -> &'static Lookup {
    static TABLE: OnceLock<Lookup> = OnceLock::new();
    TABLE.get_or_init(|| {
        let file: LookupFile =
            serde_json::from_str(include_str!("../data/lookup.json")).expect("lookup.json");
        let mut table = Lookup::default();
        let decode = |e: &LookupEntry| -> Option<Vec<Perm>> {
            e.images
                .iter()
                .map(|a| {
                    Perm::from_one_based(a)
                        .ok()
                        .filter(|p| p.degree() == e.degree)
                })
                .collect()
        };
        let key =
            |k: &str| -> Vec<u32> { k.split(',').filter_map(|t| t.trim().parse().ok()).collect() };
        for (k, e) in &file.polygon {
            let key = key(k);
            if let Some(ps) = decode(e).filter(|ps| is_polygon_solution(&key, ps)) {
                table.polygon.insert(key, ps);
            }
        }
        for (k, e) in &file.reflection {
            let key = key(k);
            if let Some(ps) = decode(e).filter(|ps| is_reflection_solution(&key, ps)) {
                table.reflection.insert(key, ps);
            }
        }
        table
    })
}

/// `order(X_i) = m_i` and `X_1⋯X_r = 1`.
pub fn is_polygon_solution(periods: &[u32], xs: &[Perm]) -> bool {
    if xs.len() != periods.len() || xs.is_empty() {
        return false;
    }
    let exact = xs.iter().zip(periods).all(|(x, &m)| x.order() == m as u64);
    let prod = xs.iter().skip(1).fold(xs[0].clone(), |acc, x| acc.then(x));
    exact && prod.is_identity()
}

/// Involutions with `order(C_{i-1}C_i) = n_i` cyclically.
pub fn is_reflection_solution(links: &[u32], cs: &[Perm]) -> bool {
    let s = links.len();
    if cs.len() != s || s < 3 {
        return false;
    }
    cs.iter().all(|c| c.order() == 2)
        && (0..s).all(|i| cs[i].then(&cs[(i + 1) % s]).order() == links[i] as u64)
}

/// Rearranges a triangle solution for orders `key` into one for `target`
/// using rotations and the reversal `(X3⁻¹, X2⁻¹, X1⁻¹)`.
fn arrange_polygon(sol: &[Perm], target: &[u32]) -> Option<Vec<Perm>> {
    let rev: Vec<Perm> = sol.iter().rev().map(|p| p.inverse()).collect();
    for base in [sol.to_vec(), rev] {
        for t in 0..3 {
            let cand: Vec<Perm> = (0..3).map(|k| base[(t + k) % 3].clone()).collect();
            if is_polygon_solution(target, &cand) {
                return Some(cand);
            }
        }
    }
    None
}

fn arrange_reflection(sol: &[Perm], target: &[u32]) -> Option<Vec<Perm>> {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
        [1, 0, 2],
    ];
    ORDERS.iter().find_map(|o| {
        let cand: Vec<Perm> = o.iter().map(|&i| sol[i].clone()).collect();
        is_reflection_solution(target, &cand).then_some(cand)
    })
}

fn sorted(v: &[u32]) -> Vec<u32> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

/// Elements `X_1..X_r` with exact orders `m_i` and trivial product.
pub fn find_polygon_quotient(
    periods: &[u32],
    ctx: &SearchContext,
) -> Result<Vec<Perm>, SearchError> {
    let r = periods.len();
    if r < 2 {
        return Err(SearchError::Unsupported(format!(
            "polygon quotient with r={r}"
        )));
    }
    if r == 2 {
        if periods[0] != periods[1] {
            return Err(SearchError::Exhausted(format!(
                "{periods:?}: X2 = X1⁻¹ forces equal orders"
            )));
        }
        let w = cyclic(periods[0] as usize);
        return Ok(vec![w.clone(), w.inverse()]);
    }
    if r == 3 {
        let key = sorted(periods);
        if let Some(sol) = lookup().polygon.get(&key) {
            if let Some(a) = arrange_polygon(sol, periods) {
                return Ok(a);
            }
        }
        for sol in structured_triangles(&key) {
            if let Some(a) = arrange_polygon(&sol, periods) {
                return Ok(a);
            }
        }
    }
    random_polygon(periods, ctx)
}

/// Dihedral solutions of `(2,2,n)` and abelian ones of `(a, b, lcm(a,b))`.
fn structured_triangles(key: &[u32]) -> Vec<Vec<Perm>> {
    let mut out = Vec::new();
    let (a, b, c) = (key[0], key[1], key[2]);
    if a == 2 && b == 2 {
        let (u, v) = dihedral(c as usize);
        let x3 = u.then(&v).inverse();
        out.push(vec![u, v, x3]);
    }
    for (p, q, l) in [(a, b, c), (a, c, b), (b, c, a)] {
        if p.lcm(&q) == l {
            let (wp, wq) = (cyclic(p as usize), cyclic(q as usize));
            let n = wp.degree() + wq.degree();
            let x1 = wp.embed(0, n);
            let x2 = wq.embed(wp.degree(), n);
            let x3 = x1.then(&x2).inverse();
            out.push(vec![x1, x2, x3]);
        }
    }
    out
}

/// Smallest degree carrying an element of order `m`.
fn min_degree(m: u32) -> usize {
    if m == 1 {
        return 1;
    }
    let mut m = m;
    let mut d = 0;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut q = 1;
            while m.is_multiple_of(p) {
                m /= p;
                q *= p;
            }
            d += q as usize;
        }
        p += 1;
    }
    d
}

/// Cycle types of degree `d` with parts dividing `m` and lcm exactly `m`.
fn cycle_types(d: usize, m: u32) -> Vec<Vec<usize>> {
    let divisors: Vec<usize> = (1..=m as usize)
        .filter(|k| (m as usize).is_multiple_of(*k))
        .collect();
    let mut out = Vec::new();
    fn rec(
        rem: usize,
        max_idx: usize,
        divs: &[usize],
        cur: &mut Vec<usize>,
        m: u32,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem == 0 {
            let l = cur.iter().fold(1u32, |acc, &x| acc.lcm(&(x as u32)));
            if l == m {
                out.push(cur.clone());
            }
            return;
        }
        for i in (0..=max_idx).rev() {
            let p = divs[i];
            if p <= rem {
                cur.push(p);
                rec(rem - p, i, divs, cur, m, out);
                cur.pop();
            }
        }
    }
    rec(
        d,
        divisors.len() - 1,
        &divisors,
        &mut Vec::new(),
        m,
        &mut out,
    );
    out
}

/// A random permutation of the given cycle type.
fn random_of_type(d: usize, ty: &[usize], rng: &mut ChaCha8Rng) -> Perm {
    let mut pts: Vec<u32> = (0..d as u32).collect();
    pts.shuffle(rng);
    let mut images: Vec<u32> = (0..d as u32).collect();
    let mut k = 0;
    for &len in ty {
        for t in 0..len {
            images[pts[k + t] as usize] = pts[k + (t + 1) % len];
        }
        k += len;
    }
    Perm::from_images(images).expect("cycle type")
}

struct TypeSampler {
    cache: HashMap<(usize, u32), Vec<Vec<usize>>>,
}

impl TypeSampler {
    fn new() -> Self {
        TypeSampler {
            cache: HashMap::new(),
        }
    }

    fn sample(&mut self, d: usize, m: u32, rng: &mut ChaCha8Rng) -> Option<Perm> {
        let types = self
            .cache
            .entry((d, m))
            .or_insert_with(|| cycle_types(d, m));
        let ty = types.choose(rng)?.clone();
        Some(random_of_type(d, &ty, rng))
    }
}

/// Runs `attempt` over degrees `lo..=max_degree` in blocks, up to the
/// attempt budget.
fn degree_sweep<T>(
    lo: usize,
    ctx: &SearchContext,
    what: &str,
    mut attempt: impl FnMut(usize) -> Option<T>,
) -> Result<T, SearchError> {
    const BLOCK: u64 = 400;
    let lo = lo.max(2);
    if lo > ctx.max_degree {
        return Err(SearchError::Exhausted(format!("{what}: needs degree {lo}")));
    }
    let mut used = 0u64;
    while used < ctx.max_attempts {
        for d in lo..=ctx.max_degree {
            for _ in 0..BLOCK {
                if let Some(t) = attempt(d) {
                    return Ok(t);
                }
                used += 1;
                if used >= ctx.max_attempts {
                    return Err(SearchError::Exhausted(what.to_string()));
                }
            }
        }
    }
    Err(SearchError::Exhausted(what.to_string()))
}

fn random_polygon(periods: &[u32], ctx: &SearchContext) -> Result<Vec<Perm>, SearchError> {
    let what = format!("polygon {periods:?}");
    let mut rng = ctx.rng(&what);
    let mut types = TypeSampler::new();
    let lo = periods.iter().map(|&m| min_degree(m)).max().unwrap_or(2);
    let r = periods.len();
    degree_sweep(lo, ctx, &what, |d| {
        let mut xs = Vec::with_capacity(r);
        let mut prod = Perm::identity(d);
        for &m in &periods[..r - 1] {
            let x = types.sample(d, m, &mut rng)?;
            prod = prod.then(&x);
            xs.push(x);
        }
        let last = prod.inverse();
        if last.order() != periods[r - 1] as u64 {
            return None;
        }
        xs.push(last);
        is_polygon_solution(periods, &xs).then_some(xs)
    })
}

/// Involutions `C_0..C_{s-1}`; for `s ∈ {0, 1}` a single involution
/// generating `C2`.
pub fn find_reflection_cycle_quotient(
    links: &[u32],
    ctx: &SearchContext,
) -> Result<Vec<Perm>, SearchError> {
    let s = links.len();
    match s {
        0 | 1 => return Ok(vec![Perm::from_images(vec![1, 0]).expect("transposition")]),
        2 => return Err(SearchError::Unsupported("reflection cycle with s=2".into())),
        _ => {}
    }
    if s == 3 {
        let key = sorted(links);
        if let Some(sol) = lookup().reflection.get(&key) {
            if let Some(a) = arrange_reflection(sol, links) {
                return Ok(a);
            }
        }
        if key[0] == 2 && key[1] == 2 {
            // D_n × C2: (u,1), (1,t), (v,1)
            let (u, v) = dihedral(key[2] as usize);
            let n = u.degree() + 2;
            let t = Perm::from_images(vec![1, 0])
                .expect("transposition")
                .embed(u.degree(), n);
            let sol = vec![u.embed(0, n), t, v.embed(0, n)];
            if let Some(a) = arrange_reflection(&sol, links) {
                return Ok(a);
            }
        }
        if matches!(key.as_slice(), [2, 3, 6] | [2, 4, 4] | [3, 3, 3]) {
            for n in 3..=12 {
                if let Ok(sol) = euclidean_affine_quotient(links, n) {
                    return Ok(sol);
                }
            }
        }
    }
    random_reflection(links, ctx)
}

fn random_involution(d: usize, rng: &mut ChaCha8Rng) -> Perm {
    let k = rng.gen_range(1..=d / 2);
    let mut ty = vec![2; k];
    ty.extend(std::iter::repeat_n(1, d - 2 * k));
    random_of_type(d, &ty, rng)
}

fn random_reflection(links: &[u32], ctx: &SearchContext) -> Result<Vec<Perm>, SearchError> {
    let what = format!("reflection cycle {links:?}");
    let mut rng = ctx.rng(&what);
    let s = links.len();
    let lo = links.iter().map(|&n| min_degree(n)).max().unwrap_or(2);
    degree_sweep(lo, ctx, &what, |d| {
        let mut cs = vec![random_involution(d, &mut rng)];
        for i in 1..s {
            let prev = cs[i - 1].clone();
            let next = (0..64)
                .map(|_| random_involution(d, &mut rng))
                .find(|c| prev.then(c).order() == links[i - 1] as u64)?;
            cs.push(next);
        }
        is_reflection_solution(links, &cs).then_some(cs)
    })
}

/// Three affine reflections of `(Z/N)²` whose products realize a Euclidean
/// triangle type, ordered so that `order(C_{i-1}C_i) = links[i-1]`.
pub fn euclidean_affine_quotient(links: &[u32], n: usize) -> Result<Vec<Perm>, SearchError> {
    if n < 3 {
        return Err(SearchError::Unsupported(format!("N={n} is below 3")));
    }
    let key = sorted(links);
    let ni = n as i64;
    let md = |a: i64| a.rem_euclid(ni);
    type Map = fn(i64, i64) -> (i64, i64);
    let maps: [Map; 3] = match key.as_slice() {
        [2, 4, 4] => [|x, y| (y, x), |x, y| (x, -y), |x, y| (1 - x, y)],
        [3, 3, 3] => [
            |p, q| (p + q, -q),
            |p, q| (-p, p + q),
            |p, q| (1 - q, 1 - p),
        ],
        [2, 3, 6] => [|p, q| (p + q, -q), |p, q| (q, p), |p, q| (1 - p - q, q)],
        _ => {
            return Err(SearchError::Unsupported(format!(
                "{links:?} is not a Euclidean type"
            )))
        }
    };
    let perms: Vec<Perm> = maps
        .iter()
        .map(|f| {
            let images = (0..ni * ni)
                .map(|k| {
                    let (x, y) = f(k / ni, k % ni);
                    (md(x) * ni + md(y)) as u32
                })
                .collect();
            Perm::from_images(images).expect("affine bijection")
        })
        .collect();
    arrange_reflection(&perms, links).ok_or(SearchError::Collapse(n))
}

/// Maps the listed generators and sends the rest to the identity.
pub fn sparse_hom(sig: &NecSignature, degree: usize, assigned: &[(Gen, Perm)]) -> Homomorphism {
    let map: HashMap<Gen, Perm> = assigned.iter().cloned().collect();
    Homomorphism::from_fn(sig.clone(), degree, |g| {
        map.get(&g)
            .cloned()
            .unwrap_or_else(|| Perm::identity(degree))
    })
    .expect("generators of the signature")
}

/// `x_i ↦ w` and `e_j ↦ w⁻¹` in `C_m`, everything else trivial.
pub fn period_factor(sig: &NecSignature, i: u32, compensator: Gen) -> Homomorphism {
    let m = sig.proper_periods[i as usize - 1] as usize;
    let w = cyclic(m);
    sparse_hom(
        sig,
        w.degree(),
        &[(Gen::X(i), w.clone()), (compensator, w.inverse())],
    )
}

/// Cycle `i` (with `s_i = 0` or `s_i ≥ 3`) onto its reflection quotient,
/// `c_{is} ↦ C_0`, `e_i ↦ 1`.
pub fn cycle_factor(sig: &NecSignature, i: u32, cs: &[Perm]) -> Homomorphism {
    let s = sig.cycles[i as usize - 1].len() as u32;
    let mut assigned: Vec<(Gen, Perm)> = (0..s)
        .map(|j| (Gen::C(i, j), cs[j as usize].clone()))
        .collect();
    assigned.push((Gen::C(i, s), cs[0].clone()));
    sparse_hom(sig, cs[0].degree(), &assigned)
}

/// A cycle `(n)` onto `D_{2n}`: `c_i0 ↦ u`, `c_i1 ↦ vuv`, `e_i, e_j ↦ v`.
pub fn tau_factor(sig: &NecSignature, i: u32, compensator: Gen) -> Homomorphism {
    let n = sig.cycles[i as usize - 1].links[0] as usize;
    let (u, v) = dihedral(2 * n);
    sparse_hom(
        sig,
        u.degree(),
        &[
            (Gen::C(i, 0), u.clone()),
            (Gen::C(i, 1), v.then(&u).then(&v)),
            (Gen::E(i), v.clone()),
            (compensator, v.clone()),
        ],
    )
}

/// A cycle `(n1, n2)` onto `D_{2n1n2}` with `ρ = uv`: `e_i ↦ ρ^{n2−n1}`,
/// `e_j ↦ ρ^{n1−n2}`, `c_i0 ↦ uρ^{2n2}`, `c_i1 ↦ u`, `c_i2 ↦ uρ^{2n1}`.
pub fn psi_factor(sig: &NecSignature, i: u32, compensator: Gen) -> Homomorphism {
    let links = &sig.cycles[i as usize - 1].links;
    let (n1, n2) = (links[0] as i64, links[1] as i64);
    let (u, v) = dihedral((2 * n1 * n2) as usize);
    let rho = u.then(&v);
    sparse_hom(
        sig,
        u.degree(),
        &[
            (Gen::E(i), rho.pow(n2 - n1)),
            (compensator, rho.pow(n1 - n2)),
            (Gen::C(i, 0), u.then(&rho.pow(2 * n2))),
            (Gen::C(i, 1), u.clone()),
            (Gen::C(i, 2), u.then(&rho.pow(2 * n1))),
        ],
    )
}

/// For `(0;+;[m_1..m_r];{(n_1..n_s)})` with `s ∈ {1, 2}`: random `X_i` of
/// exact orders and involutions `C_j`, with `E = (X_1⋯X_r)⁻¹` and
/// `C_s = E C_0 E⁻¹` forced by the relators.
pub fn joint_single_cycle(
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Homomorphism, SearchError> {
    let links = sig.cycles[0].links.clone();
    let s = links.len();
    let r = sig.r();
    if r == 0 || !(1..=2).contains(&s) || sig.k() != 1 {
        return Err(SearchError::Unsupported(format!("joint search on {sig}")));
    }
    let what = format!("joint {sig}");
    let mut rng = ctx.rng(&what);
    let mut types = TypeSampler::new();
    let lo = sig
        .proper_periods
        .iter()
        .chain(links.iter())
        .map(|&m| min_degree(m))
        .max()
        .unwrap_or(2);
    let found = degree_sweep(lo, ctx, &what, |d| {
        let mut xs = Vec::with_capacity(r);
        let mut prod = Perm::identity(d);
        for &m in &sig.proper_periods {
            let x = types.sample(d, m, &mut rng)?;
            prod = prod.then(&x);
            xs.push(x);
        }
        let e = prod.inverse();
        let c0 = random_involution(d, &mut rng);
        let mut cs = vec![c0.clone()];
        if s == 2 {
            let c1 = (0..32)
                .map(|_| random_involution(d, &mut rng))
                .find(|c| c0.then(c).order() == links[0] as u64)?;
            cs.push(c1);
        }
        let cs_last = e.then(&c0).then(&e.inverse());
        if cs[s - 1].then(&cs_last).order() != links[s - 1] as u64 {
            return None;
        }
        cs.push(cs_last);
        Some((d, xs, e, cs))
    })?;
    let (d, xs, e, cs) = found;
    let mut assigned: Vec<(Gen, Perm)> = xs
        .into_iter()
        .enumerate()
        .map(|(i, x)| (Gen::X(i as u32 + 1), x))
        .collect();
    assigned.push((Gen::E(1), e));
    for (j, c) in cs.into_iter().enumerate() {
        assigned.push((Gen::C(1, j as u32), c));
    }
    let h = sparse_hom(sig, d, &assigned);
    if h.verify_relators().pass && h.torsion_report().pass() {
        Ok(h)
    } else {
        Err(SearchError::Exhausted(what))
    }
}

/// A torsion-free-kernel quotient of a signature `(0;+;[..];{..})`, assembled
/// as a product of one factor per proper period and per period cycle.
pub fn find_full_quotient(
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Homomorphism, SearchError> {
    if sig.genus != 0 || sig.sign != Sign::Plus {
        return Err(SearchError::Unsupported(format!(
            "{sig} is not of the form (0;+;..)"
        )));
    }
    if let Some(h) = lookup_full(sig) {
        return Ok(h);
    }
    let k = sig.k();
    if k == 0 {
        let xs = find_polygon_quotient(&sig.proper_periods, ctx)?;
        let assigned: Vec<(Gen, Perm)> = xs
            .iter()
            .enumerate()
            .map(|(i, x)| (Gen::X(i as u32 + 1), x.clone()))
            .collect();
        return Ok(sparse_hom(sig, xs[0].degree(), &assigned));
    }
    if k == 1 && (1..=2).contains(&sig.cycles[0].len()) {
        return joint_single_cycle(sig, ctx);
    }
    let mut factors = Vec::new();
    for i in 1..=sig.r() as u32 {
        factors.push(period_factor(sig, i, Gen::E(1)));
    }
    for (idx, c) in sig.cycles.iter().enumerate() {
        let i = idx as u32 + 1;
        let other = Gen::E(if i == 1 { 2 } else { 1 });
        match c.len() {
            1 => factors.push(tau_factor(sig, i, other)),
            2 => factors.push(psi_factor(sig, i, other)),
            _ => {
                let cs = find_reflection_cycle_quotient(&c.links, ctx)?;
                factors.push(cycle_factor(sig, i, &cs));
            }
        }
    }
    let refs: Vec<&Homomorphism> = factors.iter().collect();
    let h = combine(&refs).expect("same signature");
    if h.verify_relators().pass && h.torsion_report().pass() {
        Ok(h)
    } else {
        Err(SearchError::Exhausted(format!("assembly for {sig}")))
    }
}

/// The two named small cases: `{(2,2,2,2)}` and `[2,2];{(-)}`.
fn lookup_full(sig: &NecSignature) -> Option<Homomorphism> {
    let u = Perm::from_one_based(&[2, 1, 4, 3]).ok()?;
    let v = Perm::from_one_based(&[3, 4, 1, 2]).ok()?;
    let one = Perm::identity(4);
    let text = sig.to_string();
    let assigned = match text.as_str() {
        "(0;+;[-];{(2,2,2,2)})" => vec![
            (Gen::C(1, 0), u.clone()),
            (Gen::C(1, 1), v.clone()),
            (Gen::C(1, 2), u.clone()),
            (Gen::C(1, 3), v.clone()),
            (Gen::C(1, 4), u.clone()),
            (Gen::E(1), one),
        ],
        "(0;+;[2,2];{(-)})" => vec![
            (Gen::X(1), v.clone()),
            (Gen::X(2), u.clone()),
            (Gen::E(1), u.then(&v)),
            (Gen::C(1, 0), u.clone()),
            (Gen::C(1, 1), u.clone()),
        ],
        _ => return None,
    };
    let h = sparse_hom(sig, 4, &assigned);
    (h.verify_relators().pass && h.torsion_report().pass()).then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> SearchContext {
        SearchContext::with_seed(7)
    }

    #[test]
    fn lookup_entries_survive_verification() {
        let t = lookup();
        assert_eq!(t.polygon.len(), 4);
        assert_eq!(t.reflection.len(), 4);
    }

    #[test]
    fn polygon_examples() {
        let xs = find_polygon_quotient(&[2, 3, 3], &ctx()).unwrap();
        assert_eq!(xs[0].to_string(), "(1 2)(3 4)");
        assert_eq!(xs[1].to_string(), "(1 2 3)");
        assert_eq!(xs[2].to_string(), "(1 4 3)");
        let xs = find_polygon_quotient(&[2, 2, 2], &ctx()).unwrap();
        assert!(is_polygon_solution(&[2, 2, 2], &xs));
        let xs = find_polygon_quotient(&[3, 3, 5], &ctx()).unwrap();
        assert!(is_polygon_solution(&[3, 3, 5], &xs));
        assert!(xs[0].degree() <= 16);
        let xs = find_polygon_quotient(&[3, 2, 7], &ctx()).unwrap();
        assert!(is_polygon_solution(&[3, 2, 7], &xs));
    }

    #[test]
    fn deterministic_per_seed() {
        let a = find_polygon_quotient(&[4, 5, 6, 3], &ctx()).unwrap();
        let b = find_polygon_quotient(&[4, 5, 6, 3], &ctx()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn reflection_examples() {
        let cs = find_reflection_cycle_quotient(&[3, 3, 3], &ctx()).unwrap();
        assert_eq!(cs[0].degree(), 3);
        assert!(is_reflection_solution(&[3, 3, 3], &cs));
        let cs = find_reflection_cycle_quotient(&[2, 2, 2], &ctx()).unwrap();
        assert_eq!(cs[0].degree(), 4);
        assert_eq!(
            find_reflection_cycle_quotient(&[], &ctx()).unwrap()[0].order(),
            2
        );
        assert!(find_reflection_cycle_quotient(&[2, 3], &ctx()).is_err());
        for links in [[2, 2, 5], [4, 2, 2], [3, 4, 5]] {
            let cs = find_reflection_cycle_quotient(&links, &ctx()).unwrap();
            assert!(is_reflection_solution(&links, &cs), "{links:?}");
        }
        let cs = find_reflection_cycle_quotient(&[2, 2, 2, 2, 3], &ctx()).unwrap();
        assert!(is_reflection_solution(&[2, 2, 2, 2, 3], &cs));
    }

    #[test]
    fn affine_types() {
        for links in [[2, 4, 4], [4, 2, 4], [3, 3, 3], [2, 3, 6], [6, 3, 2]] {
            let cs = euclidean_affine_quotient(&links, 4)
                .or_else(|_| euclidean_affine_quotient(&links, 6))
                .unwrap();
            assert!(is_reflection_solution(&links, &cs), "{links:?}");
        }
        assert!(euclidean_affine_quotient(&[2, 4, 4], 1).is_err());
    }

    #[test]
    fn full_quotients() {
        for text in [
            "(0;+;[-];{(2,2,2,2)})",
            "(0;+;[2,2];{(-)})",
            "(0;+;[2,3];{(2,2,2)})",
            "(0;+;[3];{(2,2)})",
        ] {
            let sig: NecSignature = text.parse().unwrap();
            let h = find_full_quotient(&sig, &ctx()).unwrap();
            assert!(h.verify_relators().pass, "{text}");
            assert!(h.torsion_report().pass(), "{text}");
        }
    }

    #[test]
    fn cycle_type_enumeration() {
        assert_eq!(cycle_types(4, 2), vec![vec![2, 2], vec![2, 1, 1]]);
        assert_eq!(min_degree(6), 5);
        assert_eq!(min_degree(7), 7);
    }
}
