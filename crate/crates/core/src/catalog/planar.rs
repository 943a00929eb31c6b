//! Signatures `(0;+;[m_1..m_r];{C_1..C_k})`.
//!
//! With at least two cycles that are empty or have three or more link
//! periods, a product of one factor per cycle and one for the proper
//! periods works. With a single cycle, the ten solved shapes are realized
//! directly; everything else is reported open.

use serde::Serialize;

use super::{blocks, id, word, CatalogError, Dispatch, Instance};
use crate::hom::{combine, Homomorphism};
use crate::perm::Perm;
use crate::search::{
    cycle_factor, find_polygon_quotient, find_reflection_cycle_quotient, psi_factor, sparse_hom,
    tau_factor, SearchContext,
};
use crate::signature::{NecSignature, Sign};
use crate::targets::{cyclic, dihedral};
use crate::word::{Gen, Word};

const QUESTION: &str = "several period cycles with fewer than two empty or long (s ≥ 3) cycles";

/// Smallest `t` such that the cycle read from position `t` starts `(2,2,..)`.
fn rotation_to_22(links: &[u32]) -> Option<usize> {
    let s = links.len();
    (0..s).find(|&t| links[t] == 2 && links[(t + 1) % s] == 2)
}

fn first_even(periods: &[u32]) -> Option<usize> {
    periods.iter().position(|m| m % 2 == 0)
}

pub(super) fn dispatch(sig: &NecSignature) -> Dispatch {
    let p = sig.cycle_params();
    if p.k0 + p.k3 >= 2 {
        return Dispatch::Recipe {
            id: "4.6/pipeline".into(),
        };
    }
    if sig.k() >= 2 {
        return Dispatch::Open {
            rows: Vec::new(),
            reason: QUESTION.into(),
        };
    }
    match table1(sig) {
        Some(id) => Dispatch::Recipe { id: id.into() },
        None => Dispatch::Open {
            rows: table2_matches(sig),
            reason: "single period cycle outside the solved shapes".into(),
        },
    }
}

fn table1(sig: &NecSignature) -> Option<&'static str> {
    let links = sig.cycles[0].links.as_slice();
    let m = sig.proper_periods.as_slice();
    let r = m.len();
    let s = links.len();
    let id = match s {
        0 => "T1/1",
        1 if links[0] % 2 == 1 && links[0] > 2 && m.iter().all(|&x| x == 2) => "T1/2",
        1 => return None,
        2 if links == [2, 2] => "T1/3",
        2 if links[0] == links[1] && r >= 3 && first_even(m).is_some() => "T1/4",
        2 => return None,
        _ => {
            let adjacent = rotation_to_22(links).is_some();
            match r {
                _ if adjacent && r >= 2 => "T1/5",
                0 if adjacent && s >= 4 => "T1/6",
                1 if adjacent && s == 3 => {
                    let n3 = sig.cycles[0].rotated(rotation_to_22(links)?).links[2];
                    if m[0].is_multiple_of(2) || n3.is_multiple_of(2) {
                        "T1/7"
                    } else {
                        return None;
                    }
                }
                1 if adjacent => "T1/8",
                _ if r >= 2 && first_even(m).is_some() => "T1/9",
                1 if m[0] % 4 == 2 => "T1/10",
                _ => return None,
            }
        }
    };
    Some(id)
}

/// Rows of the unresolved-case table matching a single-cycle signature.
pub fn table2_matches(sig: &NecSignature) -> Vec<usize> {
    if sig.genus != 0 || sig.sign != Sign::Plus || sig.k() != 1 {
        return Vec::new();
    }
    let links = sig.cycles[0].links.as_slice();
    let m = sig.proper_periods.as_slice();
    let (r, s) = (m.len(), links.len());
    let all_odd = m.iter().all(|x| x % 2 == 1);
    let adjacent = s >= 3 && rotation_to_22(links).is_some();
    let mut rows = Vec::new();
    if s == 1 && !(m.iter().all(|&x| x == 2) && links[0] % 2 == 1) {
        rows.push(1);
    }
    if s == 2 && links[0] != links[1] {
        rows.push(2);
    }
    if s == 2 && links[0] == links[1] && links[0] > 2 && (r == 1 || r == 2 || (r >= 3 && all_odd)) {
        rows.push(3);
    }
    if s == 3 && r == 0 && links.iter().all(|&n| n > 2) {
        rows.push(4);
    }
    if s == 3 && r == 1 && m[0] % 2 == 1 {
        if let Some(t) = rotation_to_22(links) {
            if sig.cycles[0].rotated(t).links[2] % 2 == 1 {
                rows.push(5);
            }
        }
    }
    if s >= 3 && !adjacent {
        rows.push(6);
    }
    if s >= 3 && r == 1 && m[0] % 4 != 2 {
        rows.push(7);
    }
    if s >= 3 && r >= 2 && all_odd {
        rows.push(8);
    }
    rows
}

pub(super) fn instantiate(
    rid: &str,
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Instance, CatalogError> {
    let matches = match dispatch(sig) {
        Dispatch::Recipe { id } => id == rid,
        _ => false,
    };
    if !matches {
        return Err(CatalogError::Mismatch {
            recipe: rid.into(),
            signature: sig.to_string(),
        });
    }
    match rid {
        "4.6/pipeline" => pipeline(sig, ctx),
        "T1/1" => case1(sig, ctx),
        "T1/2" => Ok(case2(sig)),
        "T1/3" => case3(sig, ctx),
        "T1/4" => case4(sig, ctx),
        "T1/5" | "T1/6" | "T1/7" | "T1/8" => rotated(rid, sig, ctx),
        "T1/9" => case9(sig, ctx),
        "T1/10" => case10(sig, ctx),
        _ => Err(CatalogError::Mismatch {
            recipe: rid.into(),
            signature: sig.to_string(),
        }),
    }
}

fn x(i: usize) -> Gen {
    Gen::X(i as u32 + 1)
}

fn c(j: usize) -> Gen {
    Gen::C(1, j as u32)
}

/// `G_[m_1..m_r,2]`: the `X_i` followed by the involution `X_{r+1}`.
fn polygon_with_involution(
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Vec<Perm>, CatalogError> {
    let mut periods = sig.proper_periods.clone();
    periods.push(2);
    Ok(find_polygon_quotient(&periods, ctx)?)
}

fn build(rid: &str, sig: &NecSignature, assigned: Vec<(Gen, Perm)>, witness: &str) -> Instance {
    let degree = assigned[0].1.degree();
    Instance::new(rid, sparse_hom(sig, degree, &assigned), word(witness))
}

fn case1(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let xs = polygon_with_involution(sig, ctx)?;
    let r = sig.r();
    let mut a: Vec<(Gen, Perm)> = (0..r).map(|i| (x(i), xs[i].clone())).collect();
    a.push((Gen::E(1), xs[r].clone()));
    a.push((c(0), xs[r].clone()));
    Ok(build("T1/1", sig, a, "e1.c10"))
}

/// Dihedral target with reflections `x_i ↦ uρ^{α_i}`; `α_1 = .. = α_{r−1} = 0`
/// and `α_r` solves the long relator. The printed `e_1 ↦ ρ^{(n+1)/2}` is tried
/// first, then its inverse, then the reflections `uρ^{±(n+1)/2}` needed when
/// `r` is odd.
fn case2(sig: &NecSignature) -> Instance {
    let n = sig.cycles[0].links[0] as i64;
    let r = sig.r();
    let (u, v) = dihedral(n as usize);
    let rho = u.then(&v);
    let k = (n + 1) / 2;
    let candidates = [
        rho.pow(k),
        rho.pow(-k),
        u.then(&rho.pow(k)),
        u.then(&rho.pow(-k)),
    ];
    for (which, e) in candidates.iter().enumerate() {
        for alpha in 0..n {
            let mut a: Vec<(Gen, Perm)> = (0..r - 1).map(|i| (x(i), u.clone())).collect();
            a.push((x(r - 1), u.then(&rho.pow(alpha))));
            a.extend([(Gen::E(1), e.clone()), (c(0), u.clone()), (c(1), v.clone())]);
            let h = sparse_hom(sig, u.degree(), &a);
            if h.verify_relators().pass {
                let mut inst = Instance::new("T1/2", h, word("x1.c10"));
                inst.notes.push(format!("alpha = (0,..,0,{alpha})"));
                if which > 0 {
                    inst.normalized = true;
                    inst.notes.push(match which {
                        1 => "e1 mapped to the inverse rotation".to_string(),
                        _ => "r odd: e1 mapped to the reflection u(uv)^((n+1)/2)".to_string(),
                    });
                }
                return inst;
            }
        }
    }
    // Unreachable for valid input: the reflection candidates always solve it.
    Instance::new("T1/2", Homomorphism::trivial(sig.clone()), word("x1.c10"))
}

fn case3(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let t = Perm::from_images(vec![1, 0]).expect("transposition");
    let r = sig.r();
    if r == 1 {
        let xs = find_polygon_quotient(&[2, sig.proper_periods[0], 3], ctx)?;
        let h = xs[0].degree();
        let lift = |p: &Perm| blocks(&[p, &id(2)]);
        let e = xs[1].inverse();
        let a = vec![
            (x(0), lift(&xs[1])),
            (Gen::E(1), lift(&e)),
            (c(0), lift(&xs[0])),
            (c(1), blocks(&[&id(h), &t])),
            (c(2), lift(&e.then(&xs[0]).then(&xs[1]))),
        ];
        return Ok(build("T1/3", sig, a, "(c10.e1^-1)^3").note("r = 1 branch"));
    }
    let xs = polygon_with_involution(sig, ctx)?;
    let h = xs[0].degree();
    let lift = |p: &Perm| blocks(&[p, &id(2)]);
    let u = blocks(&[&id(h), &t]);
    let mut a: Vec<(Gen, Perm)> = (0..r).map(|i| (x(i), lift(&xs[i]))).collect();
    a.extend([
        (Gen::E(1), lift(&xs[r])),
        (c(0), u.clone()),
        (c(1), lift(&xs[r])),
        (c(2), u),
    ]);
    Ok(build("T1/3", sig, a, "e1.c11").note("r ≥ 2 branch"))
}

fn case4(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let xs = find_polygon_quotient(&sig.proper_periods, ctx)?;
    let t = first_even(&sig.proper_periods).expect("an even period");
    let (u, v) = dihedral(sig.cycles[0].links[0] as usize);
    let hd = xs[0].degree();
    let right = |p: &Perm| blocks(&[&id(hd), p]);
    let mut a: Vec<(Gen, Perm)> = xs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let q = if i == t { u.clone() } else { id(u.degree()) };
            (x(i), blocks(&[p, &q]))
        })
        .collect();
    a.extend([
        (Gen::E(1), right(&u)),
        (c(0), right(&u)),
        (c(1), right(&v)),
        (c(2), right(&u)),
    ]);
    Ok(build("T1/4", sig, a, "e1.c10").note(format!("even period at x{}", t + 1)))
}

/// Cases whose cycle must start `(2,2,..)`: solve on the rotated signature
/// and transport back.
fn rotated(rid: &str, sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let t = rotation_to_22(&sig.cycles[0].links).expect("adjacent link periods 2");
    let rsig = NecSignature::new(
        0,
        Sign::Plus,
        sig.proper_periods.clone(),
        vec![sig.cycles[0].rotated(t)],
    )
    .expect("rotation keeps validity");
    let inner = match rid {
        "T1/5" => case5(&rsig, ctx)?,
        "T1/6" => case6(&rsig, ctx, None)?,
        "T1/7" => case7(&rsig),
        _ => {
            let m = rsig.proper_periods[0] as usize;
            case6(&rsig, ctx, Some(m))?
        }
    };
    if t == 0 {
        return Ok(inner);
    }
    let mut out = transport(sig, t, &inner);
    out.notes.push(format!("cycle read from position {t}"));
    Ok(out)
}

/// Moves a construction for the cycle rotated by `t` back to `sig`, using
/// `c'_j = c_{t+j}` for `j ≤ s−t` and `c'_{s−t+j} = e c_j e⁻¹`.
pub(crate) fn transport(sig: &NecSignature, t: usize, inner: &Instance) -> Instance {
    let s = sig.cycles[0].len();
    let h = &inner.hom;
    let e = h.image(Gen::E(1)).clone();
    let ei = e.inverse();
    let hom = Homomorphism::from_fn(sig.clone(), h.degree(), |g| match g {
        Gen::C(1, j) if j as usize >= t => h.image(c(j as usize - t)).clone(),
        Gen::C(1, j) => ei.then(h.image(c(s - t + j as usize))).then(&e),
        other => h.image(other).clone(),
    })
    .expect("same generator set");
    let ew = Word::gen(Gen::E(1));
    let witness = inner.witness.substitute(&mut |g| match g {
        Gen::C(1, j) if (j as usize) <= s - t => Word::gen(c(j as usize + t)),
        Gen::C(1, j) => ew.conjugating(&Word::gen(c(j as usize - (s - t)))),
        other => Word::gen(other),
    });
    Instance {
        recipe: inner.recipe.clone(),
        hom,
        witness,
        normalized: inner.normalized,
        notes: inner.notes.clone(),
    }
}

fn case5(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let r = sig.r();
    let s = sig.cycles[0].len();
    let xs = polygon_with_involution(sig, ctx)?;
    let cs = find_reflection_cycle_quotient(&sig.cycles[0].links, ctx)?;
    let (hd, jd) = (xs[0].degree(), cs[0].degree());
    let left = |p: &Perm| blocks(&[p, &id(jd)]);
    let right = |p: &Perm| blocks(&[&id(hd), p]);
    let mut a: Vec<(Gen, Perm)> = (0..r).map(|i| (x(i), left(&xs[i]))).collect();
    a.extend([
        (Gen::E(1), left(&xs[r])),
        (c(0), right(&cs[0])),
        (c(1), left(&xs[r])),
        (c(s), right(&cs[0])),
    ]);
    for (i, ci) in cs.iter().enumerate().take(s).skip(2) {
        a.push((c(i), right(ci)));
    }
    Ok(build("T1/5", sig, a, "e1.c11"))
}

/// Case 6, or case 8 when `cyclic` carries the proper period.
fn case6(
    sig: &NecSignature,
    ctx: &SearchContext,
    cyclic_period: Option<usize>,
) -> Result<Instance, CatalogError> {
    let links = &sig.cycles[0].links;
    let s = links.len();
    let mut reduced = vec![2];
    reduced.extend(&links[2..]);
    let ds = find_reflection_cycle_quotient(&reduced, ctx)?;
    // C_i = ds[i-1] for 1 ≤ i ≤ s-1.
    let cc = |i: usize| ds[i - 1].clone();
    let (rid, w) = match cyclic_period {
        Some(m) => ("T1/8", cyclic(m)),
        None => ("T1/6", id(1)),
    };
    let jd = ds[0].degree();
    let left = |p: &Perm| blocks(&[p, &id(w.degree())]);
    let right = |p: &Perm| blocks(&[&id(jd), p]);
    let mut a = vec![
        (c(0), left(&cc(1))),
        (c(s), left(&cc(1))),
        (c(1), left(&cc(1).then(&cc(2)))),
    ];
    for i in 2..s {
        a.push((c(i), left(&cc(i))));
    }
    if cyclic_period.is_some() {
        a.push((x(0), right(&w)));
        a.push((Gen::E(1), right(&w.inverse())));
    }
    Ok(build(rid, sig, a, "c10.c11.c12"))
}

fn case7(sig: &NecSignature) -> Instance {
    let m = sig.proper_periods[0] as usize;
    let n3 = sig.cycles[0].links[2] as usize;
    let (u, v) = dihedral(n3);
    let w = cyclic(m);
    let dd = u.degree();
    let left = |p: &Perm| blocks(&[p, &id(m)]);
    let right = |p: &Perm| blocks(&[&id(dd), p]);
    let (c11, witness, branch) = if m.is_multiple_of(2) {
        (
            right(&w.pow(m as i64 / 2)),
            format!("e1^{}.c11", m / 2),
            "m even branch",
        )
    } else {
        (
            left(&u.then(&v).pow(n3 as i64 / 2)),
            format!("(c10.c12)^{}.c11", n3 / 2),
            "n3 even branch",
        )
    };
    let a = vec![
        (x(0), right(&w)),
        (Gen::E(1), right(&w.inverse())),
        (c(0), left(&u)),
        (c(3), left(&u)),
        (c(1), c11),
        (c(2), left(&v)),
    ];
    let mut inst = build("T1/7", sig, a, &witness);
    inst.notes.push(branch.into());
    inst
}

fn case9(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let r = sig.r();
    let s = sig.cycles[0].len();
    let t = first_even(&sig.proper_periods).expect("an even period");
    let xs = polygon_with_involution(sig, ctx)?;
    let cs = find_reflection_cycle_quotient(&sig.cycles[0].links, ctx)?;
    let jd = cs[0].degree();
    let mut a: Vec<(Gen, Perm)> = (0..r)
        .map(|i| {
            let q = if i == t { cs[0].clone() } else { id(jd) };
            (x(i), blocks(&[&xs[i], &q]))
        })
        .collect();
    let z = &xs[r];
    a.push((Gen::E(1), blocks(&[z, &cs[0]])));
    for (i, ci) in cs.iter().enumerate() {
        a.push((c(i), blocks(&[z, ci])));
    }
    a.push((c(s), blocks(&[z, &cs[0]])));
    Ok(build("T1/9", sig, a, "e1.c10").note(format!("even period at x{}", t + 1)))
}

fn case10(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let m = sig.proper_periods[0] as usize;
    let s = sig.cycles[0].len();
    let cs = find_reflection_cycle_quotient(&sig.cycles[0].links, ctx)?;
    let w = cyclic(m);
    let half = w.pow(m as i64 / 2);
    let x1 = blocks(&[&w, &cs[0]]);
    let mut a = vec![(x(0), x1.clone()), (Gen::E(1), x1.inverse())];
    for (i, ci) in cs.iter().enumerate() {
        a.push((c(i), blocks(&[&half, ci])));
    }
    a.push((c(s), blocks(&[&half, &cs[0]])));
    Ok(build("T1/10", sig, a, &format!("e1^{}.c10", m / 2)))
}

/// Product of one factor per cycle and one for the proper periods. The
/// first two empty or long cycles `p < q` carry the witness `c_p0 e_p`.
fn pipeline(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let long: Vec<usize> = sig
        .cycles
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_empty() || c.len() >= 3)
        .map(|(i, _)| i + 1)
        .collect();
    let (p, q) = (long[0] as u32, long[1] as u32);
    let cp = &sig.cycles[p as usize - 1];
    let sp = cp.len() as u32;
    let cs_p = find_reflection_cycle_quotient(&cp.links, ctx)?;
    let c0 = cs_p[0].clone();

    let mut factors = Vec::new();
    let mut a: Vec<(Gen, Perm)> = (0..sp)
        .map(|j| (Gen::C(p, j), cs_p[j as usize].clone()))
        .collect();
    a.extend([
        (Gen::C(p, sp), c0.clone()),
        (Gen::E(p), c0.clone()),
        (Gen::E(q), c0.clone()),
    ]);
    factors.push(sparse_hom(sig, c0.degree(), &a));

    for (idx, cyc) in sig.cycles.iter().enumerate() {
        let i = idx as u32 + 1;
        if i == p {
            continue;
        }
        factors.push(match cyc.len() {
            1 => tau_factor(sig, i, Gen::E(q)),
            2 => psi_factor(sig, i, Gen::E(q)),
            _ => cycle_factor(sig, i, &find_reflection_cycle_quotient(&cyc.links, ctx)?),
        });
    }

    let jd = c0.degree();
    let with_cycle = |xs: [&Perm; 3]| -> Homomorphism {
        // x_1 (and x_2) from H, cycle p from G_(p), e_q ↦ (X, C_0).
        let hd = xs[0].degree();
        let right = |q: &Perm| blocks(&[&id(hd), q]);
        let mut a: Vec<(Gen, Perm)> = (0..sp)
            .map(|j| (Gen::C(p, j), right(&cs_p[j as usize])))
            .collect();
        a.push((Gen::C(p, sp), right(&c0)));
        a.push((Gen::E(p), right(&c0)));
        a.push((Gen::E(q), blocks(&[xs[2], &c0])));
        a.push((Gen::X(1), blocks(&[xs[0], &id(jd)])));
        if sig.r() == 2 {
            a.push((Gen::X(2), blocks(&[xs[1], &id(jd)])));
        }
        sparse_hom(sig, hd + jd, &a)
    };
    match sig.r() {
        0 => {}
        1 => {
            let (u, v) = dihedral(sig.proper_periods[0] as usize);
            let vu = v.then(&u);
            factors.push(with_cycle([&u.then(&v), &v, &vu]));
        }
        2 => {
            let m = &sig.proper_periods;
            let xs = find_polygon_quotient(&[m[0], m[1], 2], ctx)?;
            factors.push(with_cycle([&xs[0], &xs[1], &xs[2]]));
        }
        _ => {
            let xs = find_polygon_quotient(&sig.proper_periods, ctx)?;
            let a: Vec<(Gen, Perm)> = xs
                .iter()
                .enumerate()
                .map(|(i, p)| (x(i), p.clone()))
                .collect();
            factors.push(sparse_hom(sig, xs[0].degree(), &a));
        }
    }
    let refs: Vec<&Homomorphism> = factors.iter().collect();
    let h = combine(&refs).expect("same signature");
    let witness = Word::from_gens([Gen::C(p, 0), Gen::E(p)]);
    let mut inst = Instance::new("4.6/pipeline", h, witness);
    if (p, q) != (1, 2) {
        inst.notes.push(format!("witness cycles p={p}, q={q}"));
    }
    Ok(inst)
}

/// One row of the solved or unresolved single-cycle tables.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub row: usize,
    pub cycle: &'static str,
    pub periods: &'static str,
    pub recipe: Option<&'static str>,
    pub example: &'static str,
}

pub fn table1_rows() -> Vec<TableRow> {
    let rows = [
        ("(-)", "any", "(0;+;[2,3];{(-)})"),
        ("(n), n odd > 2", "[2,..,2]", "(0;+;[2,2];{(3)})"),
        ("(2,2)", "any", "(0;+;[3];{(2,2)})"),
        ("(n,n)", "r ≥ 3, some m_i even", "(0;+;[2,2,2];{(3,3)})"),
        ("(2,2,n_3,..,n_s), s ≥ 3", "r ≥ 2", "(0;+;[2,2];{(2,2,2)})"),
        ("(2,2,n_3,..,n_s), s ≥ 4", "r = 0", "(0;+;[-];{(2,2,2,3)})"),
        ("(2,2,n_3), n_3 or m_1 even", "r = 1", "(0;+;[2];{(2,2,3)})"),
        ("(2,2,n_3,..,n_s), s ≥ 4", "r = 1", "(0;+;[2];{(2,2,2,2)})"),
        (
            "any, s ≥ 3",
            "r ≥ 2, some m_i even",
            "(0;+;[2,3];{(3,3,3)})",
        ),
        ("any, s ≥ 3", "r = 1, m_1 ≡ 2 mod 4", "(0;+;[2];{(3,3,3)})"),
    ];
    const IDS: [&str; 10] = [
        "T1/1", "T1/2", "T1/3", "T1/4", "T1/5", "T1/6", "T1/7", "T1/8", "T1/9", "T1/10",
    ];
    rows.iter()
        .enumerate()
        .map(|(i, &(cycle, periods, example))| TableRow {
            row: i + 1,
            cycle,
            periods,
            recipe: Some(IDS[i]),
            example,
        })
        .collect()
}

pub fn table2_rows() -> Vec<TableRow> {
    let rows = [
        ("(n)", "any except [2,..,2] with n odd", "(0;+;[3];{(4)})"),
        ("(n_1,n_2), n_1 ≠ n_2", "any", "(0;+;[2,3];{(2,3)})"),
        (
            "(n,n), n > 2",
            "r ∈ {1,2}, or r ≥ 3 all m_i odd",
            "(0;+;[3];{(3,3)})",
        ),
        ("s = 3, all n_i > 2", "r = 0", "(0;+;[-];{(3,3,4)})"),
        (
            "(2,2,n_3), n_3 odd",
            "r = 1, m_1 odd",
            "(0;+;[3];{(2,2,3)})",
        ),
        ("s ≥ 3, no adjacent (2,2)", "any", "(0;+;[-];{(2,3,2,3)})"),
        ("s ≥ 3", "r = 1, m_1 ≢ 2 mod 4", "(0;+;[3];{(2,3,4)})"),
        ("s ≥ 3", "r ≥ 2, all m_i odd", "(0;+;[3,3];{(2,3,4)})"),
    ];
    rows.iter()
        .enumerate()
        .map(|(i, &(cycle, periods, example))| TableRow {
            row: i + 1,
            cycle,
            periods,
            recipe: None,
            example,
        })
        .collect()
}
