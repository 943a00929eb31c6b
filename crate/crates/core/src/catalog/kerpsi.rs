//! The index-two subgroup `ker ψ` of a non-orientable signature with one
//! period cycle, where `ψ` sends every reflection to the generator of `C2`.
//!
//! For `Γ = (g;−;[m_1..m_r];{(n_1..n_s)})` the kernel has signature
//! `(2g;−;[m_1..m_r,n_1..n_s,m_r..m_1];{-})` with generators
//!
//! * `d'_i = d_{g+1−i}⁻¹` and `d'_{g+i} = c_0 d_i c_0`,
//! * `x'_i = c_0 x_i c_0`, `x'_{r+j} = c_{j−1} c_j`, `x'_{r+s+i} = x_{r+1−i}⁻¹`.
//!
//! A homomorphism `κ` of the kernel induces `Φ: Γ → G ≀ C2` with
//! `Φ(y) = (κ(y), κ(c_0 y c_0))` on `ker ψ` and `Φ(c_0)` the swap.

use crate::group::WreathC2;
use crate::hom::Homomorphism;
use crate::perm::Perm;
use crate::signature::{NecSignature, PeriodCycle, Sign};
use crate::word::{Gen, Word};

/// Generators of `ker ψ` written over `Γ`.
#[derive(Debug, Clone)]
pub struct KerPsiDictionary {
    pub source: NecSignature,
    pub signature: NecSignature,
    pub entries: Vec<(Gen, Word)>,
}

impl KerPsiDictionary {
    pub fn expression(&self, g: Gen) -> Option<&Word> {
        self.entries.iter().find(|(h, _)| *h == g).map(|(_, w)| w)
    }

    /// Rewrites a word over the kernel generators as a word over `Γ`.
    pub fn lift(&self, w: &Word) -> Word {
        w.substitute(&mut |g| self.expression(g).cloned().expect("kernel generator"))
    }
}

fn single_cycle(sig: &NecSignature) -> Option<&PeriodCycle> {
    (sig.sign == Sign::Minus && sig.k() == 1).then(|| &sig.cycles[0])
}

/// `None` unless the signature has sign `−`, exactly one period cycle and
/// `r + s > 0`.
pub fn kerpsi_dictionary(sig: &NecSignature) -> Option<KerPsiDictionary> {
    let cycle = single_cycle(sig)?;
    let (g, r, s) = (sig.genus, sig.r() as u32, cycle.len() as u32);
    if r + s == 0 {
        return None;
    }
    let mut periods = sig.proper_periods.clone();
    periods.extend(&cycle.links);
    periods.extend(sig.proper_periods.iter().rev());
    let target = NecSignature::new(2 * g, Sign::Minus, periods, Vec::new()).expect("valid periods");

    let mut entries = Vec::new();
    for i in 1..=g {
        entries.push((Gen::D(i), Word::power(Gen::D(g + 1 - i), -1)));
    }
    for i in 1..=g {
        entries.push((
            Gen::D(g + i),
            Word::from_gens([Gen::C(1, 0), Gen::D(i), Gen::C(1, 0)]),
        ));
    }
    for i in 1..=r {
        entries.push((
            Gen::X(i),
            Word::from_gens([Gen::C(1, 0), Gen::X(i), Gen::C(1, 0)]),
        ));
    }
    for j in 1..=s {
        entries.push((
            Gen::X(r + j),
            Word::from_gens([Gen::C(1, j - 1), Gen::C(1, j)]),
        ));
    }
    for i in 1..=r {
        entries.push((Gen::X(r + s + i), Word::power(Gen::X(r + 1 - i), -1)));
    }
    Some(KerPsiDictionary {
        source: sig.clone(),
        signature: target,
        entries,
    })
}

/// `P_j = x'_{r+1} ⋯ x'_{r+j}`, which equals `c_0 c_j` in `Γ`.
fn prefix(r: u32, j: u32) -> Word {
    Word::from_gens((1..=j).map(|t| Gen::X(r + t)))
}

/// `c_0 · gen · c_0` written over the kernel generators.
pub fn c0_conjugate_rewrite(dict: &KerPsiDictionary, gen: Gen) -> Option<Word> {
    let g = dict.source.genus;
    let r = dict.source.r() as u32;
    let s = dict.source.cycles[0].len() as u32;
    match gen {
        Gen::D(i) if (1..=g).contains(&i) => Some(Word::power(Gen::D(2 * g + 1 - i), -1)),
        Gen::D(i) if (g + 1..=2 * g).contains(&i) => Some(Word::power(Gen::D(2 * g + 1 - i), -1)),
        Gen::X(i) if (1..=r).contains(&i) => Some(Word::power(Gen::X(2 * r + s + 1 - i), -1)),
        Gen::X(i) if (r + 1..=r + s).contains(&i) => {
            let j = i - r;
            Some(prefix(r, j - 1).mul(&prefix(r, j).inverse()))
        }
        Gen::X(i) if (r + s + 1..=2 * r + s).contains(&i) => {
            Some(Word::power(Gen::X(2 * r + s + 1 - i), -1))
        }
        _ => None,
    }
}

/// Writes `y` and `c_0 y c_0` over the kernel generators for each even
/// generator `y` of `Γ`.
fn even_rewrite(dict: &KerPsiDictionary, y: Gen) -> (Word, Word) {
    let g = dict.source.genus;
    let r = dict.source.r() as u32;
    let s = dict.source.cycles[0].len() as u32;
    let plain = |y: Gen| match y {
        Gen::D(i) => Word::power(Gen::D(g + 1 - i), -1),
        Gen::X(i) => Word::power(Gen::X(2 * r + s + 1 - i), -1),
        _ => unreachable!("even generator"),
    };
    let conj = |y: Gen| match y {
        Gen::D(i) => Word::gen(Gen::D(g + i)),
        Gen::X(i) => Word::gen(Gen::X(i)),
        _ => unreachable!("even generator"),
    };
    match y {
        Gen::E(1) => {
            // e = (d_1² ⋯ d_g² x_1 ⋯ x_r)⁻¹
            let mut base = Word::identity();
            for i in 1..=g {
                base.push(Gen::D(i), 2);
            }
            for i in 1..=r {
                base.push(Gen::X(i), 1);
            }
            let e = base.inverse();
            (
                e.substitute(&mut |y| plain(y)),
                e.substitute(&mut |y| conj(y)),
            )
        }
        y => (plain(y), conj(y)),
    }
}

/// The homomorphism `Φ: Γ → G ≀ C2` induced by `κ: ker ψ → G`.
pub fn induce_index2(dict: &KerPsiDictionary, kappa: &Homomorphism) -> Homomorphism {
    let wreath = WreathC2::new(&kappa.image_group());
    let k = |w: &Word| -> Perm { kappa.evaluate(w).expect("kernel word") };
    let r = dict.source.r() as u32;
    Homomorphism::from_fn(dict.source.clone(), 2 * kappa.degree(), |y| match y {
        Gen::C(1, 0) => wreath.swap(),
        Gen::C(1, j) => {
            let p = prefix(r, j);
            wreath.pair_swapped(&k(&p.inverse()), &k(&p))
        }
        _ => {
            let (a, b) = even_rewrite(dict, y);
            wreath.pair(&k(&a), &k(&b))
        }
    })
    .expect("images for every generator")
}
