//! Catalog-wide checks: sampled sweep, witnesses, kernel intersections and
//! the index-two kernel dictionary.

mod common;

use std::collections::BTreeSet;

use fenchel::catalog::{
    c0_conjugate_rewrite, certify, induce_index2, kerpsi_dictionary, orientable_surface_kernel,
    Outcome,
};
use fenchel::cert::Certificate;
use fenchel::hom::{combine, Homomorphism};
use fenchel::presentation::{canonical_presentation, generators};
use fenchel::search::SearchContext;
use fenchel::signature::NecSignature;
use fenchel::word::{Gen, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn nondecreasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in nondecreasing(len - 1, lo, hi) {
        for v in *p.last().unwrap_or(&lo)..=hi {
            let mut q = p.clone();
            q.push(v);
            out.push(q);
        }
    }
    out
}

fn sequences(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in sequences(len - 1, lo, hi) {
        for v in lo..=hi {
            let mut q = p.clone();
            q.push(v);
            out.push(q);
        }
    }
    out
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

fn certificate(s: &str) -> Certificate {
    match certify(&s.parse().unwrap(), &SearchContext::default()) {
        Outcome::Certified(c) => *c,
        o => panic!("{s}: {}", o.status()),
    }
}

/// Every signature with at most one period cycle with small parameters either certifies with
/// an orientation-reversing kernel witness or is reported open or excluded.
#[test]
fn sampled_sweep() {
    let ctx = SearchContext::with_seed(1);
    let mut recipes = BTreeSet::new();
    let mut failures = Vec::new();
    for (g, sign) in [(0, "+"), (1, "+"), (1, "-"), (2, "-")] {
        for r in 0..=2 {
            for m in nondecreasing(r, 2, 5) {
                let mut cycles = vec!["-".to_string()];
                for s in 0..=3 {
                    cycles.extend(sequences(s, 2, 4).iter().map(|l| format!("({})", list(l))));
                }
                for cycle in &cycles {
                    let text = format!("({g};{sign};[{}];{{{cycle}}})", list(&m));
                    let sig: NecSignature = text.parse().unwrap();
                    match certify(&sig, &ctx) {
                        Outcome::Certified(c) => {
                            let w = c.witness.as_ref().expect("witness");
                            assert_eq!(w.character, -1, "{text}");
                            assert!(w.pass && c.kernel.consistent, "{text}");
                            recipes.insert(c.recipe.split('/').next().unwrap().to_string());
                        }
                        Outcome::SearchFailed(e) => failures.push(format!("{text}: {e}")),
                        _ => {}
                    }
                }
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    for family in ["4.2", "4.3", "4.5", "T1"] {
        assert!(recipes.contains(family), "{family} never used: {recipes:?}");
    }
}

#[test]
fn witness_character_for_every_recipe_family() {
    for s in [
        "(2;-;[3,4,5];{-})",
        "(3;-;[-];{-})",
        "(2;-;[-];{(-)})",
        "(1;-;[3];{(4)})",
        "(1;-;[2];{(-),(-)})",
        "(2;+;[3];{(2)})",
        "(1;+;[-];{(2,3,6)})",
        "(0;+;[2,2];{(5)})",
        "(0;+;[2];{(-),(2,2,2)})",
    ] {
        let c = certificate(s);
        assert_eq!(c.witness.unwrap().character, -1, "{s}");
    }
}

#[test]
fn combined_kernel_order() {
    for s in [
        "(1;+;[4];{(2)})",
        "(0;+;[2,3];{(-)})",
        "(1;-;[-];{(2,2,2)})",
    ] {
        let c = certificate(s);
        let h = c.homomorphism().unwrap();
        let omega = Homomorphism::orientation(h.signature().clone());
        let both = combine(&[&h, &omega]).unwrap();
        let (a, b, ab) = (h.image_order(), omega.image_order(), both.image_order());
        assert_eq!((a * b) % ab, 0, "{s}");
        assert!(ab % a == 0 && ab % b == 0, "{s}");
        let w = c.witness.unwrap().word;
        let other = Homomorphism::trivial(h.signature().clone());
        let with_trivial = combine(&[&h, &other]).unwrap();
        assert!(
            h.check_witness(&w).pass && with_trivial.check_witness(&w).pass,
            "{s}"
        );
    }
}

#[test]
fn orientation_preserving_kernel_certificates() {
    let c = certificate("(1;+;[4];{(2)})");
    let h = c.homomorphism().unwrap();
    let oc = orientable_surface_kernel(&h, &c.recipe);
    let v = oc.verify().unwrap();
    assert!(v.pass, "{:?}", v.failures);
    assert!(oc.kernel.orientable);
    assert_eq!(oc.index(), 2 * c.index());
}

/// Conjugates of torsion generators by random words keep their exact order
/// in the image, for certificates with small image.
#[test]
fn torsion_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in [
        "(0;+;[2,3];{(-)})",
        "(1;+;[4];{(2)})",
        "(0;+;[3];{(2,2)})",
        "(1;-;[2,3];{-})",
    ] {
        let c = certificate(s);
        if c.index() > 500 {
            continue;
        }
        let h = c.homomorphism().unwrap();
        let gens = generators(h.signature());
        for row in &c.torsion {
            let t: Word = row.source.parse().unwrap();
            for _ in 0..200 {
                let w = Word::from_letters(
                    (0..rng.gen_range(0..8))
                        .map(|_| (gens[rng.gen_range(0..gens.len())], rng.gen_range(-2..=2))),
                );
                let conj = w.mul(&t).mul(&w.inverse());
                assert_eq!(
                    h.evaluate(&conj).unwrap().order(),
                    row.required,
                    "{s}: {}",
                    row.source
                );
            }
        }
    }
}

/// The kernel relators written over Γ hold under certified homomorphisms of
/// Γ, and conjugating by c10 agrees with the rewrite dictionary.
#[test]
fn kernel_relations_under_random_homomorphisms() {
    let sigs: Vec<NecSignature> = common::random_admissible(77, 400, 6)
        .into_iter()
        .filter(|s| kerpsi_dictionary(s).is_some())
        .take(20)
        .collect();
    assert_eq!(sigs.len(), 20);
    for (i, s) in sigs.iter().enumerate() {
        let h = match certify(s, &SearchContext::with_seed(i as u64)) {
            Outcome::Certified(c) => c.homomorphism().unwrap(),
            o => panic!("{s}: {}", o.status()),
        };
        let dict = kerpsi_dictionary(s).unwrap();
        for rel in canonical_presentation(&dict.signature).relators {
            let lifted = dict.lift(&rel.word);
            assert!(
                h.evaluate(&lifted).unwrap().is_identity(),
                "{s}: {}",
                rel.word
            );
        }
        let c0 = Word::gen(Gen::C(1, 0));
        for (g, expr) in &dict.entries {
            let rewritten = c0_conjugate_rewrite(&dict, *g).unwrap();
            let direct = c0.mul(expr).mul(&c0);
            assert_eq!(
                h.evaluate(&direct).unwrap(),
                h.evaluate(&dict.lift(&rewritten)).unwrap(),
                "{s}: {g}"
            );
        }
    }
}

#[test]
fn induced_map_respects_relators() {
    let s: NecSignature = "(1;-;[3];{(2,3)})".parse().unwrap();
    let dict = kerpsi_dictionary(&s).unwrap();
    let kappa = certificate(&dict.signature.to_string())
        .homomorphism()
        .unwrap();
    let phi = induce_index2(&dict, &kappa);
    assert!(phi.verify_relators().pass);
    assert!(phi.torsion_report().rows.iter().all(|r| r.pass));
}
