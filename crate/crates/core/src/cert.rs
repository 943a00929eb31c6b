//! Certificates (`fenchel-cert/1`) and their independent re-verification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hom::{HomError, Homomorphism, TorsionRow, WitnessCheck};
use crate::perm::Perm;
use crate::signature::{parse_signature, rational_to_string, NecSignature, SignatureError};
use crate::word::{Gen, Word};

pub const SCHEMA: &str = "fenchel-cert/1";

#[derive(Debug, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed certificate: {0}")]
    Signature(#[from] SignatureError),
    #[error("malformed certificate: {0}")]
    Images(#[from] HomError),
    #[error("malformed certificate: {0}")]
    Other(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageEntry {
    pub gen: Gen,
    pub perm: Perm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    pub degree: usize,
    pub images: Vec<ImageEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorSummary {
    pub pass: bool,
    pub checked: usize,
    pub failing: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelData {
    pub kind: String,
    pub mu: String,
    pub orientable: bool,
    pub genus: Option<i128>,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub signature: String,
    pub mu: String,
    pub recipe: String,
    pub composition: String,
    pub convention_normalized: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub target: Target,
    pub image_order: String,
    pub relators: RelatorSummary,
    pub torsion: Vec<TorsionRow>,
    pub witness: Option<WitnessCheck>,
    pub kernel: KernelData,
}

/// Outcome of re-verification; `failures` names every check that did not
/// reproduce or did not pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Everything a certificate states, computed from a homomorphism.
struct Computed {
    relators: RelatorSummary,
    torsion: Vec<TorsionRow>,
    image_order: u128,
    witness: Option<WitnessCheck>,
    kernel: KernelData,
}

fn compute(h: &Homomorphism, witness: Option<&Word>) -> Computed {
    let rel = h.verify_relators();
    let image_order = h.image_order();
    let orientable = witness.is_none();
    let surface = h.kernel_surface(orientable);
    Computed {
        relators: RelatorSummary {
            pass: rel.pass,
            checked: rel.rows.len(),
            failing: rel.failing().map(|r| r.relator.clone()).collect(),
        },
        torsion: h.torsion_report().rows,
        image_order,
        witness: witness.map(|w| h.check_witness(w)),
        kernel: KernelData {
            kind: if orientable {
                "orientable_surface".into()
            } else {
                "non_orientable_surface".into()
            },
            mu: rational_to_string(&h.kernel_area()),
            orientable,
            genus: surface.genus,
            consistent: surface.consistent,
        },
    }
}

impl Certificate {
    /// Builds a certificate for `h`. With a witness word the kernel is
    /// certified non-orientable; without one, the kernel must consist of
    /// orientation-preserving elements, which `verify` checks directly.
    pub fn build(
        h: &Homomorphism,
        recipe: &str,
        witness: Option<&Word>,
        convention_normalized: bool,
        notes: Vec<String>,
    ) -> Certificate {
        let c = compute(h, witness);
        Certificate {
            schema: SCHEMA.into(),
            signature: h.signature().to_string(),
            mu: rational_to_string(&h.signature().area()),
            recipe: recipe.into(),
            composition: "left-to-right".into(),
            convention_normalized,
            notes,
            target: Target {
                degree: h.degree(),
                images: h
                    .images()
                    .iter()
                    .map(|(&gen, perm)| ImageEntry {
                        gen,
                        perm: perm.clone(),
                    })
                    .collect(),
            },
            image_order: c.image_order.to_string(),
            relators: c.relators,
            torsion: c.torsion,
            witness: c.witness,
            kernel: c.kernel,
        }
    }

    pub fn signature(&self) -> Result<NecSignature, CertError> {
        Ok(parse_signature(&self.signature)?)
    }

    pub fn homomorphism(&self) -> Result<Homomorphism, CertError> {
        let sig = self.signature()?;
        let images = self.target.images.iter().map(|e| (e.gen, e.perm.clone()));
        Ok(Homomorphism::new(sig, self.target.degree, images)?)
    }

    pub fn index(&self) -> u128 {
        self.image_order.parse().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Certificate, CertError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Recomputes every check from the signature, the raw images and the
    /// witness word alone.
    pub fn verify(&self) -> Result<Verdict, CertError> {
        let mut failures = Vec::new();
        if self.schema != SCHEMA {
            failures.push(format!("schema: expected {SCHEMA}"));
        }
        if self.composition != "left-to-right" {
            failures.push("composition: unsupported convention".into());
        }
        let h = self.homomorphism()?;
        let sig = h.signature().clone();
        if self.mu != rational_to_string(&sig.area()) {
            failures.push("mu: does not match the signature area".into());
        }
        let witness = self.witness.as_ref().map(|w| &w.word);
        let c = compute(&h, witness);
        if !c.relators.pass {
            let names: Vec<String> = c.relators.failing.iter().map(|w| w.to_string()).collect();
            failures.push(format!("relators: {} fail", names.join(", ")));
        }
        if c.relators != self.relators {
            failures.push("relators: stored result does not reproduce".into());
        }
        for r in c.torsion.iter().filter(|r| !r.pass) {
            failures.push(format!(
                "torsion: {} has order {}, required {}",
                r.source, r.achieved, r.required
            ));
        }
        if c.torsion != self.torsion {
            failures.push("torsion: stored rows do not reproduce".into());
        }
        if c.image_order.to_string() != self.image_order {
            failures.push(format!(
                "image_order: stored {}, recomputed {}",
                self.image_order, c.image_order
            ));
        }
        match &c.witness {
            Some(w) => {
                if !w.pass {
                    failures.push(format!(
                        "witness: {} has character {} and image_is_identity={}",
                        w.word, w.character, w.image_is_identity
                    ));
                }
            }
            None => {
                let refined = crate::hom::orientable_refinement(&h).image_order();
                if refined != c.image_order {
                    failures.push(
                        "witness: absent, but the kernel contains orientation-reversing elements"
                            .into(),
                    );
                }
            }
        }
        if c.witness != self.witness {
            failures.push("witness: stored check does not reproduce".into());
        }
        if !c.kernel.consistent {
            failures.push("kernel: genus is not integral or below the minimum".into());
        }
        if c.kernel != self.kernel {
            failures.push("kernel: stored surface data does not reproduce".into());
        }
        Ok(Verdict {
            pass: failures.is_empty(),
            failures,
        })
    }
}
