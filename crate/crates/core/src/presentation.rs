//! Canonical presentation of an NEC group and its orientation character.

use serde::Serialize;

use crate::signature::{NecSignature, Sign};
use crate::word::{Gen, Word, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorKind {
    Torsion,
    ReflectionSquare,
    Link,
    Conjugation,
    Long,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub kind: RelatorKind,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Gen>,
    pub relators: Vec<Relator>,
}

/// Generators in canonical order: `a_i, b_i` (or `d_i`), `x_i`, then for each
/// cycle `c_i0..c_is`, `e_i`.
pub fn generators(sig: &NecSignature) -> Vec<Gen> {
    let mut gens = Vec::new();
    for i in 1..=sig.genus {
        match sig.sign {
            Sign::Plus => {
                gens.push(Gen::A(i));
                gens.push(Gen::B(i));
            }
            Sign::Minus => gens.push(Gen::D(i)),
        }
    }
    for i in 1..=sig.r() as u32 {
        gens.push(Gen::X(i));
    }
    for (i, c) in sig.cycles.iter().enumerate() {
        let i = i as u32 + 1;
        for j in 0..=c.len() as u32 {
            gens.push(Gen::C(i, j));
        }
        gens.push(Gen::E(i));
    }
    gens
}

/// Whether `g` is one of the canonical generators of `sig`.
pub fn has_generator(sig: &NecSignature, g: Gen) -> bool {
    let in_range = |i: u32, n: usize| i >= 1 && i as usize <= n;
    match g {
        Gen::A(i) | Gen::B(i) => sig.sign == Sign::Plus && in_range(i, sig.genus as usize),
        Gen::D(i) => sig.sign == Sign::Minus && in_range(i, sig.genus as usize),
        Gen::X(i) => in_range(i, sig.r()),
        Gen::E(i) => in_range(i, sig.k()),
        Gen::C(i, j) => in_range(i, sig.k()) && j as usize <= sig.cycles[i as usize - 1].len(),
    }
}

/// The long relator `([a1,b1]..[ag,bg] | d1²..dg²) x1..xr e1..ek`, with
/// `[u,v] = u⁻¹v⁻¹uv`.
pub fn long_relator(sig: &NecSignature) -> Word {
    let mut w = Word::identity();
    for i in 1..=sig.genus {
        match sig.sign {
            Sign::Plus => {
                w = w.mul(&Word::from_letters([
                    (Gen::A(i), -1),
                    (Gen::B(i), -1),
                    (Gen::A(i), 1),
                    (Gen::B(i), 1),
                ]));
            }
            Sign::Minus => w.push(Gen::D(i), 2),
        }
    }
    for i in 1..=sig.r() as u32 {
        w.push(Gen::X(i), 1);
    }
    for i in 1..=sig.k() as u32 {
        w.push(Gen::E(i), 1);
    }
    w
}

pub fn canonical_presentation(sig: &NecSignature) -> Presentation {
    let mut relators = Vec::new();
    for (i, &m) in sig.proper_periods.iter().enumerate() {
        relators.push(Relator {
            kind: RelatorKind::Torsion,
            word: Word::power(Gen::X(i as u32 + 1), m as i64),
        });
    }
    for (i, c) in sig.cycles.iter().enumerate() {
        let i = i as u32 + 1;
        let s = c.len() as u32;
        for j in 0..=s {
            relators.push(Relator {
                kind: RelatorKind::ReflectionSquare,
                word: Word::power(Gen::C(i, j), 2),
            });
        }
        for j in 1..=s {
            let n = c.links[j as usize - 1] as i64;
            relators.push(Relator {
                kind: RelatorKind::Link,
                word: Word::from_gens([Gen::C(i, j - 1), Gen::C(i, j)]).pow(n),
            });
        }
        // c_is · (e_i c_i0 e_i⁻¹)⁻¹
        let conj = Word::gen(Gen::E(i)).conjugating(&Word::gen(Gen::C(i, 0)));
        relators.push(Relator {
            kind: RelatorKind::Conjugation,
            word: Word::gen(Gen::C(i, s)).mul(&conj.inverse()),
        });
    }
    relators.push(Relator {
        kind: RelatorKind::Long,
        word: long_relator(sig),
    });
    Presentation {
        generators: generators(sig),
        relators,
    }
}

/// `ω(w) ∈ {+1, −1}`: `−1` iff the reflections and glide reflections occur
/// an odd number of times.
pub fn orientation_character(sig: &NecSignature, w: &Word) -> Result<i8, WordError> {
    if let Some(g) = w.generators().find(|&g| !has_generator(sig, g)) {
        return Err(WordError::UnknownGenerator(g));
    }
    Ok(w.character())
}
