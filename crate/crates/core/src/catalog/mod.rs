//! Explicit constructions keyed by signature shape.
//!
//! [`recipe_for`] picks the most specific construction for a signature (or
//! reports it open / not applicable), [`instantiate`] realizes it as a
//! homomorphism with a witness word, and [`certify`] runs the whole pipeline
//! and re-verifies the result.

mod genus;
pub mod kerpsi;
mod nonorientable;
mod planar;

use serde::Serialize;
use thiserror::Error;

use crate::cert::Certificate;
use crate::hom::{orientable_refinement, Homomorphism};
use crate::perm::Perm;
use crate::presentation::canonical_presentation;
use crate::search::{SearchContext, SearchError};
use crate::signature::{Classification, NecSignature, Sign};
use crate::word::{Gen, Word};

pub use kerpsi::{c0_conjugate_rewrite, induce_index2, kerpsi_dictionary, KerPsiDictionary};
pub use planar::{table1_rows, table2_rows, TableRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("recipe {recipe} does not apply to {signature}")]
    Mismatch { recipe: String, signature: String },
    #[error("recipe {recipe} failed verification on {signature}: {detail}")]
    Verification {
        recipe: String,
        signature: String,
        detail: String,
    },
}

/// Result of dispatch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Dispatch {
    Recipe {
        id: String,
    },
    /// Not covered by any construction; `rows` lists the matching rows of
    /// the unresolved-case table (empty for several period cycles).
    Open {
        rows: Vec<usize>,
        reason: String,
    },
    NotApplicable {
        classification: Classification,
    },
}

/// A realized construction: the homomorphism and its kernel witness.
#[derive(Debug, Clone)]
pub struct Instance {
    pub recipe: String,
    pub hom: Homomorphism,
    pub witness: Word,
    pub normalized: bool,
    pub notes: Vec<String>,
}

impl Instance {
    fn new(recipe: &str, hom: Homomorphism, witness: Word) -> Self {
        Instance {
            recipe: recipe.to_string(),
            hom,
            witness,
            normalized: false,
            notes: Vec::new(),
        }
    }

    fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub fn certificate(&self) -> Certificate {
        Certificate::build(
            &self.hom,
            &self.recipe,
            Some(&self.witness),
            self.normalized,
            self.notes.clone(),
        )
    }
}

pub fn recipe_for(sig: &NecSignature) -> Dispatch {
    let class = sig.classify();
    if class != Classification::AdmissibleProperNec {
        return Dispatch::NotApplicable {
            classification: class,
        };
    }
    let id = match sig.sign {
        Sign::Minus => nonorientable::recipe(sig),
        Sign::Plus if sig.genus > 0 => genus::recipe(sig),
        Sign::Plus => return planar::dispatch(sig),
    };
    Dispatch::Recipe { id: id.to_string() }
}

/// Realizes a recipe on a signature and checks it.
pub fn instantiate(
    recipe: &str,
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Instance, CatalogError> {
    let inst =
        if recipe.starts_with("4.2/") || recipe.starts_with("4.3/") || recipe.starts_with("4.4/") {
            nonorientable::instantiate(recipe, sig, ctx)?
        } else if recipe.starts_with("4.5/") {
            genus::instantiate(recipe, sig, ctx)?
        } else {
            planar::instantiate(recipe, sig, ctx)?
        };
    check(&inst, sig)?;
    Ok(inst)
}

fn check(inst: &Instance, sig: &NecSignature) -> Result<(), CatalogError> {
    let fail = |detail: String| CatalogError::Verification {
        recipe: inst.recipe.clone(),
        signature: sig.to_string(),
        detail,
    };
    let rel = inst.hom.verify_relators();
    if let Some(r) = rel.failing().next() {
        return Err(fail(format!("relator {} fails", r.relator)));
    }
    if let Some(r) = inst.hom.torsion_report().rows.iter().find(|r| !r.pass) {
        return Err(fail(format!(
            "{} has order {} not {}",
            r.source, r.achieved, r.required
        )));
    }
    let w = inst.hom.check_witness(&inst.witness);
    if !w.pass {
        return Err(fail(format!(
            "witness {} does not lie in the kernel",
            inst.witness
        )));
    }
    Ok(())
}

/// Outcome of the full certify pipeline.
#[derive(Debug, Clone)]
pub enum Outcome {
    Certified(Box<Certificate>),
    Open { rows: Vec<usize>, reason: String },
    NotApplicable(Classification),
    SearchFailed(String),
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Certified(_) => "certified",
            Outcome::Open { .. } => "open_table2",
            Outcome::NotApplicable(Classification::NonHyperbolic) => "non_hyperbolic",
            Outcome::NotApplicable(_) => "fuchsian",
            Outcome::SearchFailed(_) => "search_failed",
        }
    }
}

/// Dispatch, instantiate, build the certificate and re-verify it.
pub fn certify(sig: &NecSignature, ctx: &SearchContext) -> Outcome {
    match recipe_for(sig) {
        Dispatch::NotApplicable { classification } => Outcome::NotApplicable(classification),
        Dispatch::Open { rows, reason } => Outcome::Open { rows, reason },
        Dispatch::Recipe { id } => match instantiate(&id, sig, ctx) {
            Ok(inst) => {
                let cert = inst.certificate();
                match cert.verify() {
                    Ok(v) if v.pass => Outcome::Certified(Box::new(cert)),
                    Ok(v) => Outcome::SearchFailed(format!(
                        "certificate rejected: {}",
                        v.failures.join("; ")
                    )),
                    Err(e) => Outcome::SearchFailed(e.to_string()),
                }
            }
            Err(e) => Outcome::SearchFailed(e.to_string()),
        },
    }
}

/// Certificate for the kernel of `h × ω`, which consists of
/// orientation-preserving elements. Requires exact torsion orders in `h`.
pub fn orientable_surface_kernel(h: &Homomorphism, recipe: &str) -> Certificate {
    let refined = orientable_refinement(h);
    Certificate::build(
        &refined,
        &format!("{recipe}+orientation"),
        None,
        false,
        Vec::new(),
    )
}

/// Tries the printed images first, then the standard repairs of the
/// conjugation convention `c_is = e_i c_i0 e_i⁻¹`: inverting every image,
/// inverting only the `e_i`, and finally recomputing `c_is` from `e_i`.
/// Returns the first variant that satisfies every relator, and whether it
/// differs from the printed one.
pub(crate) fn normalize(h: Homomorphism) -> (Homomorphism, bool) {
    if h.verify_relators().pass {
        return (h, false);
    }
    let sig = h.signature().clone();
    let gens = canonical_presentation(&sig).generators;
    let invert_all = {
        let mut g = h.clone();
        for &x in &gens {
            let p = g.image(x).inverse();
            g.set_image(x, p);
        }
        g
    };
    let invert_e = {
        let mut g = h.clone();
        for i in 1..=sig.k() as u32 {
            let p = g.image(Gen::E(i)).inverse();
            g.set_image(Gen::E(i), p);
        }
        g
    };
    let recompute = {
        let mut g = h.clone();
        for (i, c) in sig.cycles.iter().enumerate() {
            let i = i as u32 + 1;
            let e = g.image(Gen::E(i)).clone();
            let c0 = g.image(Gen::C(i, 0)).clone();
            g.set_image(Gen::C(i, c.len() as u32), e.then(&c0).then(&e.inverse()));
        }
        g
    };
    for cand in [invert_all, invert_e, recompute] {
        if cand.verify_relators().pass {
            return (cand, true);
        }
    }
    (h, false)
}

/// Concatenates block permutations into one acting on the disjoint union.
pub(crate) fn blocks(parts: &[&Perm]) -> Perm {
    let mut images = Vec::new();
    let mut off = 0u32;
    for p in parts {
        images.extend(p.images().iter().map(|&j| j + off));
        off += p.degree() as u32;
    }
    Perm::from_images(images).expect("block permutation")
}

pub(crate) fn id(n: usize) -> Perm {
    Perm::identity(n)
}

pub(crate) fn word(text: &str) -> Word {
    text.parse().expect("static witness word")
}

/// Extends a homomorphism of a signature sharing generator names: listed
/// generators take the given images, the rest follow `base` or go to the
/// identity.
pub(crate) fn lift(sig: &NecSignature, base: &Homomorphism, extra: &[(Gen, Perm)]) -> Homomorphism {
    let n = base.degree();
    Homomorphism::from_fn(sig.clone(), n, |g| {
        extra
            .iter()
            .find(|(h, _)| *h == g)
            .map(|(_, p)| p.clone())
            .or_else(|| base.images().get(&g).cloned())
            .unwrap_or_else(|| Perm::identity(n))
    })
    .expect("images for every generator")
}
