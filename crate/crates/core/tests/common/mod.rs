//! Brute-force oracles and fixtures shared by the integration tests.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use fenchel::group::PermGroup;
use fenchel::maps::{ingest_group, GroupSystem, InvolutionSystem};
use fenchel::perm::Perm;
use fenchel::signature::{Classification, NecSignature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn perm(n: usize, cycles: &str) -> Perm {
    Perm::parse_cycles(n, cycles).unwrap()
}

/// Every element reachable from the identity by right multiplication.
pub fn closure_oracle(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Perfect iff the subgroup generated by all commutators of all elements is
/// the whole group.
pub fn perfect_oracle(degree: usize, gens: &[Perm]) -> bool {
    let elems: Vec<Perm> = closure_oracle(degree, gens).into_iter().collect();
    let mut comms = HashSet::new();
    for a in &elems {
        for b in &elems {
            comms.insert(a.inverse().then(&b.inverse()).then(a).then(b));
        }
    }
    let comms: Vec<Perm> = comms.into_iter().collect();
    closure_oracle(degree, &comms).len() == elems.len()
}

/// Whether some odd-length word in the involutions is trivial, by closure
/// over (element, parity) pairs.
pub fn parity_oracle(degree: usize, involutions: &[Perm]) -> bool {
    let start = (Perm::identity(degree), false);
    let mut seen = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some((g, odd)) = stack.pop() {
        for c in involutions {
            let next = (g.then(c), !odd);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    seen.contains(&(Perm::identity(degree), true))
}

pub fn symmetric(n: usize) -> PermGroup {
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    PermGroup::new(n, vec![Perm::from_images(cycle).unwrap(), perm(n, "(1 2)")]).unwrap()
}

pub fn alternating(n: usize) -> PermGroup {
    let gens: Vec<Perm> = (3..=n).map(|k| perm(n, &format!("(1 2 {k})"))).collect();
    PermGroup::new(n, gens).unwrap()
}

pub fn dihedral(n: usize) -> PermGroup {
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let flip: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(
        n,
        vec![
            Perm::from_images(cycle).unwrap(),
            Perm::from_images(flip).unwrap(),
        ],
    )
    .unwrap()
}

/// `PSL(2,q)` on the projective line, `q` prime.
pub fn psl2(q: u32) -> PermGroup {
    let inf = q;
    let t: Vec<u32> = (0..=q)
        .map(|x| if x == inf { inf } else { (x + 1) % q })
        .collect();
    let inv = |x: u32| (1..q).find(|y| x * y % q == 1).unwrap();
    let w: Vec<u32> = (0..=q)
        .map(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                (q - inv(x)) % q
            }
        })
        .collect();
    PermGroup::new(
        q as usize + 1,
        vec![Perm::from_images(t).unwrap(), Perm::from_images(w).unwrap()],
    )
    .unwrap()
}

pub fn corpus_groups() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for n in 2..=7 {
        out.push((format!("S{n}"), symmetric(n)));
    }
    for n in 3..=7 {
        out.push((format!("A{n}"), alternating(n)));
    }
    for n in 3..=12 {
        out.push((format!("D{n}"), dihedral(n)));
    }
    for q in [5, 7, 11, 13] {
        out.push((format!("PSL(2,{q})"), psl2(q)));
    }
    out.push((
        "C2^3".into(),
        PermGroup::new(
            6,
            vec![perm(6, "(1 2)"), perm(6, "(3 4)"), perm(6, "(5 6)")],
        )
        .unwrap(),
    ));
    out.push((
        "C2 wr C3".into(),
        PermGroup::new(6, vec![perm(6, "(1 2)"), perm(6, "(1 3 5)(2 4 6)")]).unwrap(),
    ));
    for (name, sys) in file_systems() {
        out.push((name, sys.group));
    }
    out
}

pub fn file_systems() -> Vec<(String, InvolutionSystem)> {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/groups");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .filter_map(|p| match ingest_group(&p).unwrap() {
            GroupSystem::Involutions(s) => {
                Some((p.file_stem().unwrap().to_string_lossy().into_owned(), s))
            }
            GroupSystem::Rotations(_) => None,
        })
        .collect()
}

/// All involution triples of `g` generating `g`, with whatever link orders
/// they have.
pub fn involution_triples(g: &PermGroup) -> Vec<InvolutionSystem> {
    let mut invs: Vec<Perm> = g
        .elements()
        .into_iter()
        .filter(|x| x.order() == 2)
        .collect();
    invs.sort();
    let mut out = Vec::new();
    for a in &invs {
        for b in &invs {
            for c in &invs {
                let links = vec![
                    a.then(b).order() as u32,
                    b.then(c).order() as u32,
                    c.then(a).order() as u32,
                ];
                if links.contains(&1) {
                    continue;
                }
                let sys =
                    InvolutionSystem::new(vec![a.clone(), b.clone(), c.clone()], links).unwrap();
                if sys.group.order() == g.order() {
                    out.push(sys);
                }
            }
        }
    }
    out
}

/// First generating S4 triple with `order(C0C1), order(C1C2), order(C2C0)`
/// equal to `links`.
pub fn s4_triple(links: [u32; 3]) -> Option<InvolutionSystem> {
    involution_triples(&symmetric(4))
        .into_iter()
        .find(|s| s.links == links)
}

fn list(xs: &[u32]) -> String {
    if xs.is_empty() {
        "-".into()
    } else {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Random signature text with small parameters.
pub fn random_signature(rng: &mut ChaCha8Rng, max_period: u32) -> NecSignature {
    let minus = rng.gen_bool(0.3);
    let g = if minus {
        rng.gen_range(1..=3)
    } else {
        rng.gen_range(0..=2)
    };
    let r = rng.gen_range(0..=3);
    let mut periods: Vec<u32> = (0..r).map(|_| rng.gen_range(2..=max_period)).collect();
    periods.sort();
    let k = if minus {
        rng.gen_range(0..=2)
    } else {
        rng.gen_range(1..=2)
    };
    let cycles: Vec<String> = (0..k)
        .map(|_| {
            let s = rng.gen_range(0..=4);
            let links: Vec<u32> = (0..s)
                .map(|_| rng.gen_range(2..=max_period.min(5)))
                .collect();
            format!("({})", list(&links))
        })
        .collect();
    let cycles = if cycles.is_empty() {
        "-".into()
    } else {
        cycles.join(",")
    };
    format!(
        "({g};{};[{}];{{{cycles}}})",
        if minus { "-" } else { "+" },
        list(&periods)
    )
    .parse()
    .unwrap()
}

/// `count` random signatures that are admissible proper NEC signatures.
pub fn random_admissible(seed: u64, count: usize, max_period: u32) -> Vec<NecSignature> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let s = random_signature(&mut rng, max_period);
        if s.classify() == Classification::AdmissibleProperNec {
            out.push(s);
        }
    }
    out
}
