//! Signatures with sign `−`.

use super::{kerpsi, lift, word, CatalogError, Instance};
use crate::perm::Perm;
use crate::search::{find_full_quotient, find_polygon_quotient, sparse_hom, SearchContext};
use crate::signature::NecSignature;
use crate::word::{Gen, Word};

pub(super) fn recipe(sig: &NecSignature) -> &'static str {
    match sig.k() {
        0 => match sig.r() {
            0 => "4.2/r=0",
            1 => "4.2/r=1",
            2 => "4.2/r=2",
            _ => "4.2/r≥3",
        },
        1 if sig.r() == 0 && sig.cycles[0].is_empty() => "4.3/r=s=0",
        1 => "4.3/induced",
        2 if sig.r() == 0 && sig.cycles.iter().all(|c| c.is_empty()) => "4.4/k=2-empty",
        _ => "4.4/torsion-part",
    }
}

fn transposition() -> Perm {
    Perm::from_images(vec![1, 0]).expect("transposition")
}

pub(super) fn instantiate(
    id: &str,
    sig: &NecSignature,
    ctx: &SearchContext,
) -> Result<Instance, CatalogError> {
    if recipe(sig) != id {
        return Err(CatalogError::Mismatch {
            recipe: id.into(),
            signature: sig.to_string(),
        });
    }
    let t = transposition();
    let inst = match id {
        "4.2/r≥3" => {
            let xs = find_polygon_quotient(&sig.proper_periods, ctx)?;
            let assigned: Vec<(Gen, Perm)> = xs
                .iter()
                .enumerate()
                .map(|(i, x)| (Gen::X(i as u32 + 1), x.clone()))
                .collect();
            Instance::new(id, sparse_hom(sig, xs[0].degree(), &assigned), word("d1"))
        }
        "4.2/r=2" => {
            let p = &sig.proper_periods;
            let xs = find_polygon_quotient(&[p[0], p[1], 3], ctx)?;
            let assigned = [
                (Gen::X(1), xs[0].clone()),
                (Gen::X(2), xs[1].clone()),
                (Gen::D(1), xs[0].then(&xs[1])),
            ];
            Instance::new(id, sparse_hom(sig, xs[0].degree(), &assigned), word("d1^3"))
        }
        "4.2/r=1" => {
            let xs = find_polygon_quotient(&[3, 3, sig.proper_periods[0]], ctx)?;
            let (u, v) = (&xs[0], &xs[1]);
            let assigned = [
                (Gen::D(1), u.clone()),
                (Gen::D(2), v.clone()),
                (Gen::X(1), v.then(u)),
            ];
            Instance::new(id, sparse_hom(sig, u.degree(), &assigned), word("d1^3"))
        }
        "4.2/r=0" => {
            let assigned = [(Gen::D(1), t.clone()), (Gen::D(2), t.inverse())];
            Instance::new(id, sparse_hom(sig, 2, &assigned), word("d3"))
        }
        "4.3/r=s=0" => Instance::new(id, sparse_hom(sig, 2, &[(Gen::C(1, 0), t)]), word("d1")),
        "4.3/induced" => induced(sig, ctx)?,
        "4.4/k=2-empty" => {
            let assigned = [(Gen::C(1, 0), t.clone()), (Gen::C(2, 0), t)];
            Instance::new(id, sparse_hom(sig, 2, &assigned), word("d1"))
        }
        _ => {
            let h0 = find_full_quotient(&sig.torsion_part(), ctx)?;
            Instance::new(id, lift(sig, &h0, &[]), word("d1"))
        }
    };
    Ok(inst)
}

/// Induces from a quotient of `ker ψ`, realized by the `k = 0` recipes.
fn induced(sig: &NecSignature, ctx: &SearchContext) -> Result<Instance, CatalogError> {
    let dict = kerpsi::kerpsi_dictionary(sig).expect("sign − with one nonempty cycle data");
    let inner_id = recipe(&dict.signature);
    let inner = instantiate(inner_id, &dict.signature, ctx)?;
    let phi = kerpsi::induce_index2(&dict, &inner.hom);
    let witness: Word = dict.lift(&inner.witness);
    Ok(Instance::new("4.3/induced", phi, witness).note(format!(
        "induced from {} on {} with witness {}",
        inner_id, dict.signature, inner.witness
    )))
}
