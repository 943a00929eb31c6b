//! Named finite target groups realized as permutation groups.
//!
//! `dihedral(n)` returns involutions `u, v` with `uv` of order exactly `n`,
//! so `⟨u, v⟩` has order `2n`.

use thiserror::Error;

use crate::group::{DirectProduct, PermGroup, WreathC2};
use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError {
    #[error("{0}: defining orders not realized")]
    Orders(String),
    #[error("{0}")]
    Group(#[from] crate::group::GroupError),
}

/// Rotation `i ↦ i+1` on `m` points.
pub fn cyclic(m: usize) -> Perm {
    let m = m.max(1);
    Perm::from_images((0..m as u32).map(|i| (i + 1) % m as u32).collect()).expect("rotation")
}

/// Involutions `u: i ↦ −i`, `v: i ↦ 1−i` on `Z/n`, so `uv` is `i ↦ i+1`.
/// Small cases use the Klein four-group (`n = 2`) and `C2` (`n = 1`).
pub fn dihedral(n: usize) -> (Perm, Perm) {
    match n {
        0 | 1 => {
            let t = Perm::from_images(vec![1, 0]).expect("transposition");
            (t.clone(), t)
        }
        2 => (
            Perm::from_one_based(&[2, 1, 4, 3]).expect("perm"),
            Perm::from_one_based(&[3, 4, 1, 2]).expect("perm"),
        ),
        _ => {
            let n32 = n as u32;
            let u = (0..n32).map(|i| (n32 - i) % n32).collect();
            let v = (0..n32).map(|i| (n32 + 1 - i) % n32).collect();
            (
                Perm::from_images(u).expect("reflection"),
                Perm::from_images(v).expect("reflection"),
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupTag {
    Cyclic(usize),
    /// `⟨u, v | u² = v² = (uv)^n⟩`.
    Dihedral(usize),
    DirectProduct(Vec<GroupTag>),
    WreathC2(Box<GroupTag>),
    Explicit,
}

/// A target group with its distinguished generators, checked on creation.
#[derive(Debug, Clone)]
pub struct FiniteGroupSpec {
    pub tag: GroupTag,
    pub group: PermGroup,
    pub named: Vec<Perm>,
}

impl FiniteGroupSpec {
    pub fn cyclic(m: usize) -> Result<Self, TargetError> {
        let w = cyclic(m);
        let group = PermGroup::new(w.degree(), vec![w.clone()])?;
        if w.order() != m.max(1) as u64 || group.order() != m.max(1) as u128 {
            return Err(TargetError::Orders(format!("C{m}")));
        }
        Ok(FiniteGroupSpec {
            tag: GroupTag::Cyclic(m),
            group,
            named: vec![w],
        })
    }

    pub fn dihedral(n: usize) -> Result<Self, TargetError> {
        let (u, v) = dihedral(n);
        let group = PermGroup::new(u.degree(), vec![u.clone(), v.clone()])?;
        let ok = u.order() == 2
            && v.order() == 2
            && u.then(&v).order() == n.max(1) as u64
            && group.order() == 2 * n.max(1) as u128;
        if !ok {
            return Err(TargetError::Orders(format!("D{n}")));
        }
        Ok(FiniteGroupSpec {
            tag: GroupTag::Dihedral(n),
            group,
            named: vec![u, v],
        })
    }

    pub fn explicit(degree: usize, perms: Vec<Perm>) -> Result<Self, TargetError> {
        let group = PermGroup::new(degree, perms.clone())?;
        Ok(FiniteGroupSpec {
            tag: GroupTag::Explicit,
            group,
            named: perms,
        })
    }

    /// Named elements of each factor are embedded in order.
    pub fn direct_product(specs: &[&FiniteGroupSpec]) -> Result<Self, TargetError> {
        let groups: Vec<&PermGroup> = specs.iter().map(|s| &s.group).collect();
        let dp = DirectProduct::new(&groups);
        let expected: u128 = specs.iter().map(|s| s.group.order()).product();
        if dp.group.order() != expected {
            return Err(TargetError::Orders("direct product".into()));
        }
        let named = specs
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.named.iter().map(|p| dp.embed(i, p)).collect::<Vec<_>>())
            .collect();
        Ok(FiniteGroupSpec {
            tag: GroupTag::DirectProduct(specs.iter().map(|s| s.tag.clone()).collect()),
            group: dp.group,
            named,
        })
    }

    /// Named elements: the base generators in the first copy, then the swap.
    pub fn wreath_c2(spec: &FiniteGroupSpec) -> Result<Self, TargetError> {
        let w = WreathC2::new(&spec.group);
        let q = spec.group.order();
        if w.group.order() != 2 * q * q {
            return Err(TargetError::Orders("wreath product".into()));
        }
        let n = spec.group.degree();
        let mut named: Vec<Perm> = spec.named.iter().map(|p| p.embed(0, 2 * n)).collect();
        named.push(w.swap());
        Ok(FiniteGroupSpec {
            tag: GroupTag::WreathC2(Box::new(spec.tag.clone())),
            group: w.group,
            named,
        })
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }
}
