//! Group-file corpus checks against brute-force oracles.

use std::path::PathBuf;

use fenchel::maps::{
    corollary_check, hemi_construction, ingest_group, odd_identity_check, parity_bfs,
    perfect_route_check, GroupSystem, InvolutionSystem, MapsError,
};
use fenchel::perm::Perm;

fn corpus() -> Vec<(String, GroupSystem)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/groups");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let sys = ingest_group(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, sys)
        })
        .collect()
}

fn involution_systems() -> Vec<(String, InvolutionSystem)> {
    corpus()
        .into_iter()
        .filter_map(|(n, s)| match s {
            GroupSystem::Involutions(s) => Some((n, s)),
            GroupSystem::Rotations(_) => None,
        })
        .collect()
}

/// Reachable (element, parity) states by plain closure, without the
/// shortest-word bookkeeping.
fn oracle_odd_identity(sys: &InvolutionSystem) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![(Perm::identity(sys.group.degree()), false)];
    while let Some((g, odd)) = stack.pop() {
        if !seen.insert((g.clone(), odd)) {
            continue;
        }
        for c in &sys.involutions {
            stack.push((g.then(c), !odd));
        }
    }
    seen.contains(&(Perm::identity(sys.group.degree()), true))
}

#[test]
fn odd_identity_matches_parity_closure() {
    for (name, sys) in involution_systems() {
        if sys.group.order() > 200 {
            continue;
        }
        let r = odd_identity_check(&sys);
        assert_eq!(r.holds, oracle_odd_identity(&sys), "{name}");
        if let Some(w) = &r.witness {
            assert_eq!(w.length() % 2, 1, "{name}");
            assert!(
                sys.homomorphism().evaluate(w).unwrap().is_identity(),
                "{name}"
            );
        }
    }
}

/// An odd identity word gives `Z = C_0`; conversely a `Z` gives the chain
/// `Z X_1 ⋯ X_i`, which has an odd identity word in `⟨X⟩`. The chain need not
/// be the one the rotations came from.
#[test]
fn odd_identity_agrees_with_corollary() {
    let mut disagreements = Vec::new();
    for (name, sys) in involution_systems() {
        let odd = odd_identity_check(&sys).holds;
        let rot = sys.rotations();
        let cor = corollary_check(&rot);
        if odd {
            assert_eq!(cor.holds, Some(true), "{name}");
        }
        if let Some(z) = &cor.z {
            let chain = rot.involution_system(z).unwrap();
            assert!(odd_identity_check(&chain).holds, "{name}");
        }
        if Some(odd) != cor.holds {
            disagreements.push(name);
        }
    }
    // The octahedron's rotation group is the hemi-octahedron's full group.
    assert_eq!(disagreements, ["b3_octahedron"]);
}

#[test]
fn expected_verdicts() {
    let by_name: std::collections::HashMap<_, _> = involution_systems().into_iter().collect();
    assert!(!odd_identity_check(&by_name["s3_reflections"]).holds);
    assert!(odd_identity_check(&by_name["s4_hemioctahedron"]).holds);
    assert!(!odd_identity_check(&by_name["b3_octahedron"]).holds);
    let v4 = odd_identity_check(&by_name["v4"]);
    assert_eq!(v4.holds, oracle_odd_identity(&by_name["v4"]));
}

#[test]
fn orientable_map_has_no_hemi_certificate() {
    let sys = involution_systems()
        .into_iter()
        .find(|(n, _)| n == "b3_octahedron")
        .unwrap()
        .1;
    let r = hemi_construction(&sys).unwrap();
    assert_eq!(r.quotient_order, 6);
    assert!(r.certificate.is_none());
    assert!(r.message.contains("witness check fails"));
}

#[test]
fn perfect_route_on_psl2_11() {
    let sys = involution_systems()
        .into_iter()
        .find(|(n, _)| n == "psl2_11")
        .unwrap()
        .1;
    assert!(sys.group.is_perfect());
    let r = perfect_route_check(&sys).unwrap();
    assert_eq!(r.signature, "(0;+;[5];{(3)})");
    assert!(r.certified);
    assert!(r.certificate.verify().unwrap().pass);
    let torsion: Vec<u64> = r.certificate.torsion.iter().map(|t| t.achieved).collect();
    assert!(torsion.contains(&5) && torsion.contains(&3), "{torsion:?}");
}

#[test]
fn perfect_route_rejects_abelian() {
    let sys = involution_systems()
        .into_iter()
        .find(|(n, _)| n == "v4")
        .unwrap()
        .1;
    assert!(matches!(
        perfect_route_check(&sys),
        Err(MapsError::Precondition(_) | MapsError::Inapplicable(_))
    ));
}

#[test]
fn parity_bfs_finds_shortest() {
    let t = Perm::parse_cycles(2, "(1 2)").unwrap();
    assert_eq!(parity_bfs(2, &[(t, true)], 10), None);
    let id = Perm::identity(1);
    assert_eq!(parity_bfs(1, &[(id, true)], 10), Some(vec![0]));
}
