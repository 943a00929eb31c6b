//! Signatures `(g;+;..)` with `g > 0`.
//!
//! When `μ > 2g` the torsion part is itself hyperbolic and its quotient is
//! lifted with `a_1 ↦ C_10`. Otherwise the signature is one of a short list
//! of shapes, each with an explicit small target in which
//! `a_1, c_10 ↦ u` and the remaining `a_i, b_i ↦ 1` (except in (l), (m)).

use super::{blocks, id, lift, normalize, word, CatalogError, Instance};
use crate::hom::{combine, Homomorphism};
use crate::perm::Perm;
use crate::search::{
    find_full_quotient, find_reflection_cycle_quotient, period_factor, sparse_hom, SearchContext,
};
use crate::signature::{NecSignature, Rational};
use crate::targets::{cyclic, dihedral};
use crate::word::Gen;

fn shape(sig: &NecSignature) -> Option<char> {
    let links: Vec<&[u32]> = sig.cycles.iter().map(|c| c.links.as_slice()).collect();
    let p = sig.proper_periods.as_slice();
    let case = match (p, links.as_slice()) {
        ([], [[], []]) => 'a',
        ([2, 2], [[]]) => 'b',
        ([2], [[2, 2]]) => 'c',
        ([2], [[_]]) => 'd',
        ([3], [[3]]) => 'e',
        ([3], [[2]]) => 'f',
        ([4], [[2]]) => 'g',
        ([_], [[]]) => 'h',
        ([], [[2, 2, 2, 2]]) => 'i',
        ([], [[_, _, _]]) => 'j',
        ([], [[]]) => 'k',
        ([], [[_, _]]) => 'l',
        ([], [[_]]) => 'm',
        _ => return None,
    };
    Some(case)
}

pub(super) fn recipe(sig: &NecSignature) -> &'static str {
    let torsion_area = sig.area() - Rational::from_integer(2 * sig.genus as i128);
    if torsion_area > Rational::from_integer(0) {
        return "4.5/mu>2g";
    }
    match shape(sig) {
        Some('a') => "4.5/a",
        Some('b') => "4.5/b",
        Some('c') => "4.5/c",
        Some('d') => "4.5/d",
        Some('e') => "4.5/e",
        Some('f') => "4.5/f",
        Some('g') => "4.5/g",
        Some('h') => "4.5/h",
        Some('i') => "4.5/i",
        Some('j') => "4.5/j",
        Some('k') => "4.5/k",
        Some('l') => "4.5/l",
        Some('m') => "4.5/m",
        _ => "4.5/mu>2g",
    }
}

fn p(deg: usize, cycles: &str) -> Perm {
    Perm::parse_cycles(deg, cycles).expect("static permutation")
}

pub(super) fn instantiate(
    rid: &str,
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Instance, CatalogError> {
    if recipe(sig) != rid {
        return Err(CatalogError::Mismatch {
            recipe: rid.into(),
            signature: sig.to_string(),
        });
    }
    if rid == "4.5/mu>2g" {
        return torsion_lift(sig, ctx);
    }
    let w = word("a1.c10");
    let links = |j: usize| sig.cycles[0].links[j] as i64;
    // (degree, u, other images); a_1 and c_10 go to u.
    let (u, rest): (Perm, Vec<(Gen, Perm)>) = match rid {
        "4.5/a" => {
            let u = p(2, "(1 2)");
            (u.clone(), vec![(Gen::C(2, 0), u)])
        }
        "4.5/b" => {
            let (u, v) = dihedral(2);
            (
                u.clone(),
                vec![
                    (Gen::X(1), v.clone()),
                    (Gen::X(2), u.clone()),
                    (Gen::E(1), u.then(&v)),
                ],
            )
        }
        "4.5/c" => {
            let (u, v) = dihedral(2);
            let rest = vec![
                (Gen::X(1), u.clone()),
                (Gen::E(1), u.clone()),
                (Gen::C(1, 1), v),
                (Gen::C(1, 2), u.clone()),
            ];
            (u, rest)
        }
        "4.5/d" => {
            let (u, v) = dihedral(2 * links(0) as usize);
            let rest = vec![
                (Gen::X(1), v.clone()),
                (Gen::E(1), v.clone()),
                (Gen::C(1, 1), v.then(&u).then(&v)),
            ];
            (u, rest)
        }
        "4.5/e" | "4.5/f" => {
            let (u, v) = if rid == "4.5/e" {
                (p(4, "(1 2)"), p(4, "(2 3 4)"))
            } else {
                (p(4, "(1 2)(3 4)"), p(4, "(1 2 3)"))
            };
            let vi = v.inverse();
            let rest = vec![
                (Gen::X(1), vi.clone()),
                (Gen::E(1), v.clone()),
                (Gen::C(1, 1), vi.then(&u).then(&v)),
            ];
            (u, rest)
        }
        "4.5/g" => {
            let (u, v) = (p(4, "(2 4)"), p(4, "(1 2 3 4)"));
            let rest = vec![
                (Gen::X(1), v.inverse()),
                (Gen::E(1), v.clone()),
                (Gen::C(1, 1), u.then(&v.pow(2))),
            ];
            (u, rest)
        }
        "4.5/h" => {
            let m = sig.proper_periods[0] as usize;
            let (t, c) = (p(2, "(1 2)"), cyclic(m));
            let u = blocks(&[&t, &id(m)]);
            let v = blocks(&[&id(2), &c]);
            (u, vec![(Gen::X(1), v.clone()), (Gen::E(1), v.inverse())])
        }
        "4.5/i" => {
            let (u, v) = dihedral(2);
            let rest = vec![
                (Gen::C(1, 1), v.clone()),
                (Gen::C(1, 2), u.clone()),
                (Gen::C(1, 3), v),
                (Gen::C(1, 4), u.clone()),
            ];
            (u, rest)
        }
        "4.5/j" => {
            let cs = find_reflection_cycle_quotient(&sig.cycles[0].links, ctx)?;
            let (u, v, w) = (cs[0].clone(), cs[1].clone(), cs[2].clone());
            (
                u.clone(),
                vec![(Gen::C(1, 1), v), (Gen::C(1, 2), w), (Gen::C(1, 3), u)],
            )
        }
        "4.5/k" => (p(2, "(1 2)"), vec![]),
        "4.5/l" => {
            let (n1, n2) = (links(0), links(1));
            let (u, v) = dihedral((4 * n1 * n2) as usize);
            let rho = u.then(&v);
            let rest = vec![
                (Gen::B(1), rho.pow(n2 - n1)),
                (Gen::E(1), rho.pow(2 * (n1 - n2))),
                (Gen::C(1, 1), u.then(&rho.pow(4 * n2))),
                (Gen::C(1, 2), rho.pow(4 * (n1 - n2)).then(&u)),
            ];
            (u, rest)
        }
        "4.5/m" => {
            let (u, v) = dihedral(4 * links(0) as usize);
            let rho = u.then(&v);
            let rest = vec![
                (Gen::B(1), rho.clone()),
                (Gen::E(1), rho.pow(-2)),
                (Gen::C(1, 1), u.then(&rho.pow(4))),
            ];
            (u, rest)
        }
        _ => unreachable!("dispatch covers every id"),
    };
    let mut assigned = vec![(Gen::A(1), u.clone()), (Gen::C(1, 0), u.clone())];
    assigned.extend(rest);
    let h = sparse_hom(sig, u.degree(), &assigned);
    let (h, normalized) = normalize(h);
    let mut inst = Instance::new(rid, h, w);
    if normalized {
        inst.normalized = true;
        inst = inst.note("images of x1 and e1 inverted to satisfy c11 = e1 c10 e1^-1");
    }
    Ok(inst)
}

/// `a_1 ↦ C_10` on top of a quotient of the torsion part. A single cycle
/// with one or two link periods falls back to the (l)/(m) style factor for
/// the cycle combined with one cyclic factor per proper period.
fn torsion_lift(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let rid = "4.5/mu>2g";
    match find_full_quotient(&sig.torsion_part(), ctx) {
        Ok(h0) => {
            let a1 = h0.image(Gen::C(1, 0)).clone();
            Ok(Instance::new(
                rid,
                lift(sig, &h0, &[(Gen::A(1), a1)]),
                word("a1.c10"),
            ))
        }
        Err(e) if sig.k() == 1 && (1..=2).contains(&sig.cycles[0].len()) => {
            let mut factors: Vec<Homomorphism> = (1..=sig.r() as u32)
                .map(|i| period_factor(sig, i, Gen::E(1)))
                .collect();
            factors.push(handle_factor(sig));
            let refs: Vec<&Homomorphism> = factors.iter().collect();
            let h = combine(&refs).expect("same signature");
            Ok(Instance::new(rid, h, word("a1.c10")).note(format!(
                "joint search failed ({e}); used product of factors"
            )))
        }
        Err(e) => Err(e.into()),
    }
}

/// The (l)/(m) images for the cycle alone, ignoring proper periods.
fn handle_factor(sig: &NecSignature) -> Homomorphism {
    let links = &sig.cycles[0].links;
    let (u, v) = match links.len() {
        1 => dihedral(4 * links[0] as usize),
        _ => dihedral(4 * (links[0] * links[1]) as usize),
    };
    let rho = u.then(&v);
    let mut assigned = vec![(Gen::A(1), u.clone()), (Gen::C(1, 0), u.clone())];
    if links.len() == 1 {
        assigned.extend([
            (Gen::B(1), rho.clone()),
            (Gen::E(1), rho.pow(-2)),
            (Gen::C(1, 1), u.then(&rho.pow(4))),
        ]);
    } else {
        let (n1, n2) = (links[0] as i64, links[1] as i64);
        assigned.extend([
            (Gen::B(1), rho.pow(n2 - n1)),
            (Gen::E(1), rho.pow(2 * (n1 - n2))),
            (Gen::C(1, 1), u.then(&rho.pow(4 * n2))),
            (Gen::C(1, 2), rho.pow(4 * (n1 - n2)).then(&u)),
        ]);
    }
    sparse_hom(sig, u.degree(), &assigned)
}
