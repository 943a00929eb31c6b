//! Certified torsion-free normal subgroups of NEC groups.
//!
//! A signature is parsed into [`signature::NecSignature`], matched against a
//! catalog of explicit constructions, and each construction is realized as a
//! homomorphism into a permutation group. The kernel is then certified by
//! direct computation: relators, exact torsion orders, an orientation-reversing
//! witness word and Riemann–Hurwitz integrality.

pub mod catalog;
pub mod cert;
pub mod group;
pub mod hom;
pub mod maps;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod search;
pub mod signature;
pub mod targets;
pub mod word;
