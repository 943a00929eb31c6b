//! Homomorphisms from a canonical NEC presentation into permutation groups,
//! and the checks that certify their kernels.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::PermGroup;
use crate::perm::Perm;
use crate::presentation::{canonical_presentation, generators, has_generator, RelatorKind};
use crate::signature::{
    kernel_surface_data, riemann_hurwitz, KernelSurface, NecSignature, Rational,
};
use crate::word::{Gen, Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("no image for generator {0}")]
    MissingImage(Gen),
    #[error("generator {0} does not belong to the signature")]
    ExtraImage(Gen),
    #[error("image of {gen} has degree {found}, expected {expected}")]
    Degree {
        gen: Gen,
        expected: usize,
        found: usize,
    },
    #[error("homomorphisms are over different signatures")]
    SignatureMismatch,
    #[error("nothing to combine")]
    Empty,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// An assignment of permutations to the canonical generators of a signature.
/// Whether it respects the relators is a separate check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    signature: NecSignature,
    degree: usize,
    images: BTreeMap<Gen, Perm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorRow {
    pub kind: String,
    pub relator: Word,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorReport {
    pub pass: bool,
    pub rows: Vec<RelatorRow>,
}

impl RelatorReport {
    pub fn failing(&self) -> impl Iterator<Item = &RelatorRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionRow {
    pub source: String,
    pub required: u64,
    pub achieved: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub rows: Vec<TorsionRow>,
}

impl TorsionReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub word: Word,
    pub character: i8,
    pub image_is_identity: bool,
    pub pass: bool,
}

impl Homomorphism {
    pub fn new(
        signature: NecSignature,
        degree: usize,
        images: impl IntoIterator<Item = (Gen, Perm)>,
    ) -> Result<Self, HomError> {
        let images: BTreeMap<Gen, Perm> = images.into_iter().collect();
        for (&g, p) in &images {
            if !has_generator(&signature, g) {
                return Err(HomError::ExtraImage(g));
            }
            if p.degree() != degree {
                return Err(HomError::Degree {
                    gen: g,
                    expected: degree,
                    found: p.degree(),
                });
            }
        }
        if let Some(g) = generators(&signature)
            .into_iter()
            .find(|g| !images.contains_key(g))
        {
            return Err(HomError::MissingImage(g));
        }
        Ok(Homomorphism {
            signature,
            degree,
            images,
        })
    }

    /// Builds from a function on generators.
    pub fn from_fn(
        signature: NecSignature,
        degree: usize,
        mut f: impl FnMut(Gen) -> Perm,
    ) -> Result<Self, HomError> {
        let gens = generators(&signature);
        let images: Vec<(Gen, Perm)> = gens.into_iter().map(|g| (g, f(g))).collect();
        Homomorphism::new(signature, degree, images)
    }

    /// The map sending every generator to the identity.
    pub fn trivial(signature: NecSignature) -> Self {
        Homomorphism::from_fn(signature, 1, |_| Perm::identity(1)).expect("trivial map")
    }

    /// The orientation character as a map onto `C2 = ⟨(1 2)⟩`.
    pub fn orientation(signature: NecSignature) -> Self {
        let t = Perm::from_images(vec![1, 0]).expect("transposition");
        Homomorphism::from_fn(signature, 2, |g| {
            if g.reverses_orientation() {
                t.clone()
            } else {
                Perm::identity(2)
            }
        })
        .expect("orientation map")
    }

    pub fn signature(&self) -> &NecSignature {
        &self.signature
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: Gen) -> &Perm {
        &self.images[&g]
    }

    pub fn images(&self) -> &BTreeMap<Gen, Perm> {
        &self.images
    }

    /// Replaces the image of one generator.
    pub fn set_image(&mut self, g: Gen, p: Perm) {
        assert!(self.images.contains_key(&g) && p.degree() == self.degree);
        self.images.insert(g, p);
    }

    pub fn evaluate(&self, w: &Word) -> Result<Perm, WordError> {
        let mut acc = Perm::identity(self.degree);
        for &(g, e) in w.letters() {
            let p = self.images.get(&g).ok_or(WordError::UnknownGenerator(g))?;
            acc = acc.then(&p.pow(e));
        }
        Ok(acc)
    }

    /// The subgroup of the target generated by the images.
    pub fn image_group(&self) -> PermGroup {
        PermGroup::with_cap(
            self.degree,
            self.images.values().cloned().collect(),
            usize::MAX,
        )
        .expect("images share the degree")
    }

    /// `|im φ|`, which is the index of the kernel.
    pub fn image_order(&self) -> u128 {
        self.image_group().order()
    }

    pub fn verify_relators(&self) -> RelatorReport {
        let rows: Vec<RelatorRow> = canonical_presentation(&self.signature)
            .relators
            .into_iter()
            .map(|r| {
                let pass = self
                    .evaluate(&r.word)
                    .map(|p| p.is_identity())
                    .unwrap_or(false);
                RelatorRow {
                    kind: relator_kind_name(r.kind).to_string(),
                    relator: r.word,
                    pass,
                }
            })
            .collect();
        RelatorReport {
            pass: rows.iter().all(|r| r.pass),
            rows,
        }
    }

    /// Exact orders of the images of `x_i`, `c_ij` and `c_{ij-1}c_ij`. When
    /// every row passes, no conjugate of a canonical finite subgroup meets
    /// the kernel nontrivially, so the kernel is torsion-free.
    pub fn torsion_report(&self) -> TorsionReport {
        let mut rows = Vec::new();
        for (i, &m) in self.signature.proper_periods.iter().enumerate() {
            let g = Gen::X(i as u32 + 1);
            rows.push(row(g.to_string(), m as u64, self.image(g).order()));
        }
        for (i, c) in self.signature.cycles.iter().enumerate() {
            let i = i as u32 + 1;
            for j in 0..=c.len() as u32 {
                let g = Gen::C(i, j);
                rows.push(row(g.to_string(), 2, self.image(g).order()));
            }
            for j in 1..=c.len() as u32 {
                let (a, b) = (Gen::C(i, j - 1), Gen::C(i, j));
                let p = self.image(a).then(self.image(b));
                rows.push(row(
                    format!("{a}.{b}"),
                    c.links[j as usize - 1] as u64,
                    p.order(),
                ));
            }
        }
        TorsionReport { rows }
    }

    /// Passes iff `w` maps to the identity and reverses orientation.
    pub fn check_witness(&self, w: &Word) -> WitnessCheck {
        let character = w.character();
        let image_is_identity = self.evaluate(w).map(|p| p.is_identity()).unwrap_or(false);
        WitnessCheck {
            word: w.clone(),
            character,
            image_is_identity,
            pass: image_is_identity && character == -1,
        }
    }

    pub fn kernel_surface(&self, orientable: bool) -> KernelSurface {
        kernel_surface_data(self.signature.area(), self.image_order(), orientable)
    }

    pub fn kernel_area(&self) -> Rational {
        riemann_hurwitz(self.signature.area(), self.image_order())
    }
}

fn row(source: String, required: u64, achieved: u64) -> TorsionRow {
    TorsionRow {
        source,
        required,
        achieved,
        pass: required == achieved,
    }
}

pub fn relator_kind_name(k: RelatorKind) -> &'static str {
    match k {
        RelatorKind::Torsion => "torsion",
        RelatorKind::ReflectionSquare => "reflection",
        RelatorKind::Link => "link",
        RelatorKind::Conjugation => "conjugation",
        RelatorKind::Long => "long",
    }
}

/// Product map `Γ → G_1 × .. × G_t`; its kernel is the intersection of the
/// factor kernels.
pub fn combine(hs: &[&Homomorphism]) -> Result<Homomorphism, HomError> {
    let first = hs.first().ok_or(HomError::Empty)?;
    if hs.iter().any(|h| h.signature != first.signature) {
        return Err(HomError::SignatureMismatch);
    }
    let degree: usize = hs.iter().map(|h| h.degree).sum();
    let images = first.images.keys().map(|&g| {
        let mut v = Vec::with_capacity(degree);
        let mut off = 0u32;
        for h in hs {
            v.extend(h.image(g).images().iter().map(|&j| j + off));
            off += h.degree as u32;
        }
        (g, Perm::from_images(v).expect("block permutation"))
    });
    let images: Vec<_> = images.collect();
    Homomorphism::new(first.signature.clone(), degree, images)
}

/// `h × ω`: the kernel consists of the orientation-preserving elements of
/// `ker h`.
pub fn orientable_refinement(h: &Homomorphism) -> Homomorphism {
    let omega = Homomorphism::orientation(h.signature.clone());
    combine(&[h, &omega]).expect("same signature")
}
