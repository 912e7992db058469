//! The group H = ⟨ξ_x, ξ_y⟩ ⋊ ⟨σ⟩ ≅ (ℤ/3)² ⋊ ℤ/2 acting on C₄ × C₄.
//!
//! Elements are stored in the normal form σᵏ ξ_xⁱ ξ_yʲ. The only rule needed
//! to multiply is ξ_xⁱξ_yʲ σ = σ ξ_xʲξ_yⁱ, i.e. moving σ left swaps the two
//! exponents. On C₄ × C₄,
//!
//! ```text
//! σᵏ ξ_xⁱ ξ_yʲ (x, y) = (ξⁱx, ξʲy)      if k = 0
//!                     = (ξʲy, ξⁱx)      if k = 1
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::is_prime;
use crate::curve::FreeActionCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("fixed-locus classification needs a certificate that ξ acts freely on C₄")]
    PreconditionUnverified,
    #[error("the identity fixes every point")]
    IdentityElement,
    #[error("subgroup is not normal in H")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("{q}^{rank} does not fit in 64 bits")]
    Overflow { q: u64, rank: u32 },
}

/// σᵏ ξ_xⁱ ξ_yʲ with k ∈ {0,1}, i, j ∈ {0,1,2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElem {
    k: u8,
    i: u8,
    j: u8,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem { k: 0, i: 0, j: 0 };
    pub const SIGMA: GroupElem = GroupElem { k: 1, i: 0, j: 0 };
    pub const XI_X: GroupElem = GroupElem { k: 0, i: 1, j: 0 };
    pub const XI_Y: GroupElem = GroupElem { k: 0, i: 0, j: 1 };
    pub const XI_XY: GroupElem = GroupElem { k: 0, i: 1, j: 1 };

    /// Reduces the exponents into normal form.
    pub fn new(k: i64, i: i64, j: i64) -> Self {
        Self {
            k: k.rem_euclid(2) as u8,
            i: i.rem_euclid(3) as u8,
            j: j.rem_euclid(3) as u8,
        }
    }

    /// hᵢ = σ ξ_xⁱ ξ_y^(3−i).
    pub fn involution(i: i64) -> Self {
        Self::new(1, i, 3 - i)
    }

    pub fn exponents(self) -> (u8, u8, u8) {
        (self.k, self.i, self.j)
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    pub fn compose(self, other: GroupElem) -> GroupElem {
        let (i, j) = if other.k == 1 { (self.j, self.i) } else { (self.i, self.j) };
        GroupElem::new(
            (self.k + other.k) as i64,
            (i + other.i) as i64,
            (j + other.j) as i64,
        )
    }

    pub fn inverse(self) -> GroupElem {
        // (σ ξ_xⁱ ξ_yʲ)⁻¹ = ξ_y⁻ʲ ξ_x⁻ⁱ σ = σ ξ_x⁻ʲ ξ_y⁻ⁱ
        if self.k == 0 {
            GroupElem::new(0, -(self.i as i64), -(self.j as i64))
        } else {
            GroupElem::new(1, -(self.j as i64), -(self.i as i64))
        }
    }

    pub fn pow(self, n: u32) -> GroupElem {
        (0..n).fold(Self::IDENTITY, |acc, _| acc.compose(self))
    }

    pub fn order(self) -> u32 {
        (1..=18).find(|&n| self.pow(n).is_identity()).expect("|H| = 18")
    }

    /// Acts on a pair (x, y), where `xi(p, e)` applies ξᵉ to a point of C₄.
    pub fn act_on_pair<T, X>(self, x: &T, y: &T, xi: X) -> (T, T)
    where
        X: Fn(&T, u8) -> T,
    {
        if self.k == 0 {
            (xi(x, self.i), xi(y, self.j))
        } else {
            (xi(y, self.j), xi(x, self.i))
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut parts = Vec::new();
        if self.k == 1 {
            parts.push("s".to_string());
        }
        if self.i > 0 {
            parts.push(format!("xi_x^{}", self.i));
        }
        if self.j > 0 {
            parts.push(format!("xi_y^{}", self.j));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// All 18 elements in normal-form order.
pub fn elements() -> Vec<GroupElem> {
    let mut out = Vec::with_capacity(18);
    for k in 0..2 {
        for i in 0..3 {
            for j in 0..3 {
                out.push(GroupElem::new(k, i, j));
            }
        }
    }
    out
}

/// Fixed locus of a nontrivial element on C₄ × C₄.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FixedLocus {
    Empty,
    /// Γᵢ = {(x, ξⁱx)}.
    Graph(u8),
}

/// Requires a freeness certificate: without it the k = 0 case is open.
pub fn classify_fixed_locus(
    g: GroupElem,
    freeness: Option<&FreeActionCertificate>,
) -> Result<FixedLocus, GroupError> {
    freeness.ok_or(GroupError::PreconditionUnverified)?;
    if g.is_identity() {
        return Err(GroupError::IdentityElement);
    }
    Ok(if g.k == 1 && (g.i + g.j) % 3 == 0 { FixedLocus::Graph(g.i) } else { FixedLocus::Empty })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupDescriptor {
    pub generators: Vec<GroupElem>,
    pub elements: BTreeSet<GroupElem>,
    pub order: usize,
    pub index: usize,
    pub normal: bool,
    pub abelian: bool,
}

impl SubgroupDescriptor {
    pub fn contains(&self, g: GroupElem) -> bool {
        self.elements.contains(&g)
    }
}

/// Closure of the generators, with normality decided by conjugating by all
/// 18 elements.
pub fn subgroup(gens: &[GroupElem]) -> SubgroupDescriptor {
    let mut elems: BTreeSet<GroupElem> = BTreeSet::from([GroupElem::IDENTITY]);
    let mut frontier: Vec<GroupElem> = vec![GroupElem::IDENTITY];
    while let Some(h) = frontier.pop() {
        for &g in gens {
            let next = h.compose(g);
            if elems.insert(next) {
                frontier.push(next);
            }
        }
    }
    let normal = elements().into_iter().all(|c| {
        elems
            .iter()
            .all(|&h| elems.contains(&c.compose(h).compose(c.inverse())))
    });
    let abelian = elems
        .iter()
        .all(|&a| elems.iter().all(|&b| a.compose(b) == b.compose(a)));
    let order = elems.len();
    SubgroupDescriptor {
        generators: gens.to_vec(),
        elements: elems,
        order,
        index: 18 / order,
        normal,
        abelian,
    }
}

/// Nontrivial elements with a fixed point on `points` × `points`, by
/// exhaustive search.
pub fn elements_with_fixed_points<T, X>(points: &[T], xi: X) -> Vec<GroupElem>
where
    T: PartialEq,
    X: Fn(&T, u8) -> T,
{
    elements()
        .into_iter()
        .filter(|g| !g.is_identity())
        .filter(|g| {
            points.iter().any(|x| {
                points.iter().any(|y| {
                    let (gx, gy) = g.act_on_pair(x, y, &xi);
                    gx == *x && gy == *y
                })
            })
        })
        .collect()
}

/// Element-order profile of H/N, as {order: count}.
pub fn quotient_order_profile(n: &SubgroupDescriptor) -> Result<BTreeMap<u32, usize>, GroupError> {
    if !n.normal {
        return Err(GroupError::NotNormal);
    }
    let mut seen: BTreeSet<BTreeSet<GroupElem>> = BTreeSet::new();
    let mut profile = BTreeMap::new();
    for g in elements() {
        let coset: BTreeSet<GroupElem> = n.elements.iter().map(|&h| g.compose(h)).collect();
        if !seen.insert(coset) {
            continue;
        }
        let order = (1..=18).find(|&m| n.contains(g.pow(m))).expect("finite");
        *profile.entry(order).or_insert(0) += 1;
    }
    Ok(profile)
}

/// H/N ≅ S₃, recognised by the order profile {1:1, 2:3, 3:2}.
pub fn quotient_is_s3(n: &SubgroupDescriptor) -> Result<bool, GroupError> {
    let profile = quotient_order_profile(n)?;
    Ok(profile == BTreeMap::from([(1, 1), (2, 3), (3, 2)]))
}

fn checked_power(q: u64, rank: u32) -> Result<u64, GroupError> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    if rank == 0 {
        return Err(GroupError::ZeroRank);
    }
    q.checked_pow(rank).ok_or(GroupError::Overflow { q, rank })
}

/// Number of subgroups of order q in (ℤ/q)^rank: (q^rank − 1)/(q − 1).
pub fn count_order_q_subgroups(q: u64, rank: u32) -> Result<u64, GroupError> {
    Ok((checked_power(q, rank)? - 1) / (q - 1))
}

/// The same count by listing every cyclic subgroup generated by a nonzero
/// vector of (ℤ/q)^rank.
pub fn enumerate_order_q_subgroups(q: u64, rank: u32) -> Result<u64, GroupError> {
    let size = checked_power(q, rank)?;
    let digits = |mut v: u64| -> Vec<u64> {
        (0..rank)
            .map(|_| {
                let d = v % q;
                v /= q;
                d
            })
            .collect()
    };
    let mut subgroups: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    for v in 1..size {
        let gen = digits(v);
        let mut members: Vec<Vec<u64>> = (1..q)
            .map(|c| gen.iter().map(|&x| x * c % q).collect())
            .collect();
        members.sort();
        subgroups.insert(members);
    }
    Ok(subgroups.len() as u64)
}
