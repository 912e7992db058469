use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::curve::{ci_genus, etale_quotient_genus, h0_of_dk};

use super::lattice::{blowdown_pushforward, SymmetricSquareClasses};
use super::numerics::{
    adjunction_kd, chi_top, double_cover_k2, free_quotient_invariants, noether_chi, pushpull_selfint,
    solve_z2, stratified_euler, CoverKind, CoverMap, PushPullMode, SurfaceInvariants,
};
use super::LedgerError;

/// q(S) = 2 is imported from the classification of surfaces with p_g = q ≥ 3.
pub const IMPORTED_IRREGULARITY: i64 = 2;

/// Lower bound on h¹(S, T_S) from deformations of the Albanese map;
/// imported, not recomputed.
pub const DEFORMATION_RANK_LOWER_BOUND: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SurfaceClass {
    Z,
    R,
    KS,
    DS,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceClass::Z => "Z",
            SurfaceClass::R => "R",
            SurfaceClass::KS => "K_S",
            SurfaceClass::DS => "D_S",
        })
    }
}

/// Symmetric table of derived intersection numbers on S.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairingTable {
    entries: BTreeMap<(SurfaceClass, SurfaceClass), i64>,
}

impl PairingTable {
    fn key(a: SurfaceClass, b: SurfaceClass) -> (SurfaceClass, SurfaceClass) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Records a·b; re-recording a different value is an error.
    pub fn record(&mut self, a: SurfaceClass, b: SurfaceClass, value: i64) -> Result<(), LedgerError> {
        let key = Self::key(a, b);
        match self.entries.get(&key) {
            Some(&old) if old != value => Err(LedgerError::PairingConflict {
                pair: format!("{a}.{b}"),
                old,
                new: value,
            }),
            _ => {
                self.entries.insert(key, value);
                Ok(())
            }
        }
    }

    pub fn get(&self, a: SurfaceClass, b: SurfaceClass) -> Result<i64, LedgerError> {
        self.entries
            .get(&Self::key(a, b))
            .copied()
            .ok_or_else(|| LedgerError::MissingPairing(format!("{a}.{b}")))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SurfaceClass, SurfaceClass, i64)> + '_ {
        self.entries.iter().map(|(&(a, b), &v)| (a, b, v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerCheck {
    pub name: &'static str,
    pub value: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeLedger {
    pub theta_sq: i64,
    pub e_sq: i64,
    pub x_sq: i64,
    pub x_dot_e: i64,
    pub d_b_dot_e: i64,
    pub d_b_sq: i64,
    /// D_B² from v*D_B = 2Δ on C₂ × C₂.
    pub d_b_sq_double_cover: i64,
    pub pushforward_d_b: String,
    pub pushforward_is_four_theta: bool,
    pub relations_consistent: bool,
}

pub fn derive_lattice_ledger() -> Result<LatticeLedger, LedgerError> {
    let b = SymmetricSquareClasses::new();
    let pushed = blowdown_pushforward(&b.blowup, &b.d_b)?;
    let g2 = etale_quotient_genus(ci_genus(2, 3)?, 3)?;
    let diagonal_sq = chi_top(g2);
    Ok(LatticeLedger {
        theta_sq: b.theta.self_intersection(),
        e_sq: b.e.self_intersection(),
        x_sq: b.x.self_intersection(),
        x_dot_e: b.x.pair(&b.e)?,
        d_b_dot_e: b.d_b.pair(&b.e)?,
        d_b_sq: b.d_b.self_intersection(),
        d_b_sq_double_cover: pushpull_selfint(diagonal_sq, 2, PushPullMode::Branch)?,
        pushforward_is_four_theta: pushed == b.theta.scale(4),
        pushforward_d_b: pushed.to_string(),
        relations_consistent: b.relation_defect().is_zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceLedger {
    pub c4_genus: i64,
    pub c2_genus: i64,
    pub product: SurfaceInvariants,
    pub t: SurfaceInvariants,
    pub gamma_sq: i64,
    pub sigma_sq: i64,
    pub d_s_sq: i64,
    pub r_sq: i64,
    pub k_dot_d_s: i64,
    pub s: SurfaceInvariants,
    /// Z·R via the projection formula, E·β⁎R = E·D_B.
    pub zr: i64,
    /// Points of R over E, one per Weierstrass point of C₂.
    pub zr_upstairs: i64,
    pub projection_formula_holds: bool,
    pub z_sq: i64,
    /// K_S·R by linearity (ZR + R²) and by adjunction on R.
    pub k_dot_r: i64,
    pub k_dot_r_adjunction: i64,
    pub section2: Vec<LedgerCheck>,
    #[serde(skip)]
    pub pairings: PairingTable,
}

impl SurfaceLedger {
    pub fn section2_check(&self, name: &str) -> Option<&LedgerCheck> {
        self.section2.iter().find(|c| c.name == name)
    }
}

pub fn triple_cover_map() -> CoverMap {
    CoverMap::new("beta", 3, CoverKind::TripleSimplyBranched, &[("R", 2)]).expect("positive degree")
}

/// The full derivation from C₄ through T to S.
pub fn derive_surface_ledger() -> Result<SurfaceLedger, LedgerError> {
    let c4_genus = ci_genus(2, 3)?;
    let c2_genus = etale_quotient_genus(c4_genus, 3)?;
    let product = free_quotient_invariants(c4_genus, 1)?;
    let t = free_quotient_invariants(c4_genus, 3)?;

    // Γᵢ is the graph of an automorphism of C₄, so Γᵢ² = 2 − 2g(C₄).
    let gamma_sq = chi_top(c4_genus);
    let sigma_sq = pushpull_selfint(gamma_sq, 3, PushPullMode::Etale)?;
    let d_s_sq = pushpull_selfint(sigma_sq, 2, PushPullMode::Branch)?;
    let r_sq = pushpull_selfint(sigma_sq + sigma_sq, 2, PushPullMode::UnramifiedImage)?;

    // D_S ≅ Σ₀ and R ≅ Σ₁ ≅ Σ₂ all have the genus of C₂.
    let k_dot_d_s = adjunction_kd(c2_genus, d_s_sq);
    let k2 = double_cover_k2(t.k2, d_s_sq, k_dot_d_s)?;
    let sigma_chi = chi_top(c2_genus);
    let c2 = stratified_euler(t.c2, &[sigma_chi; 3], &[sigma_chi, sigma_chi], 2)?;
    let chi = noether_chi(k2, c2)?;
    let q = IMPORTED_IRREGULARITY;
    let s = SurfaceInvariants { k2, c2, chi, p_g: chi - 1 + q, q };

    let lattice = derive_lattice_ledger()?;
    let zr = lattice.d_b_dot_e;
    let zr_upstairs = 2 * c2_genus + 2;
    let beta = triple_cover_map();
    let z_sq = solve_z2(k2, zr, r_sq);

    let mut pairings = PairingTable::default();
    use SurfaceClass::*;
    pairings.record(DS, DS, d_s_sq)?;
    pairings.record(KS, DS, k_dot_d_s)?;
    pairings.record(KS, KS, k2)?;
    pairings.record(R, R, r_sq)?;
    pairings.record(Z, R, zr)?;
    pairings.record(Z, Z, z_sq)?;
    let k_dot_r = zr + r_sq;
    pairings.record(KS, R, k_dot_r)?;
    pairings.record(KS, Z, z_sq + zr)?;

    let section2 = section2_degree_ledger(&pairings, c2_genus)?;

    Ok(SurfaceLedger {
        c4_genus,
        c2_genus,
        product,
        t,
        gamma_sq,
        sigma_sq,
        d_s_sq,
        r_sq,
        k_dot_d_s,
        s,
        zr,
        zr_upstairs,
        projection_formula_holds: beta.projection_formula_holds(zr_upstairs, zr),
        z_sq,
        k_dot_r,
        k_dot_r_adjunction: adjunction_kd(c2_genus, r_sq),
        section2,
        pairings,
    })
}

/// Degree checks on R and Z and the bounds pinning h¹(S, T_S).
pub fn section2_degree_ledger(pairings: &PairingTable, genus_r: i64) -> Result<Vec<LedgerCheck>, LedgerError> {
    use SurfaceClass::*;
    let r2 = pairings.get(R, R)?;
    let zr = pairings.get(Z, R)?;
    let z2 = pairings.get(Z, Z)?;
    let k2 = pairings.get(KS, KS)?;

    let normal_degree = 2 * r2;
    let z_degree = -zr - z2;
    let h0_kr = h0_of_dk(genus_r, 1)?;
    let upper = h0_kr + 1;
    let lower = DEFORMATION_RANK_LOWER_BOUND;
    let canonical_sq = z2 + 2 * zr + r2;

    Ok(vec![
        LedgerCheck { name: "normal_bundle_degree_on_R", value: normal_degree, holds: normal_degree < 0 },
        LedgerCheck { name: "degree_on_Z", value: z_degree, holds: z_degree < 0 },
        LedgerCheck { name: "h0_canonical_R", value: h0_kr, holds: h0_kr == genus_r },
        LedgerCheck { name: "h1_tangent", value: upper, holds: lower == upper },
        LedgerCheck { name: "canonical_square_rederived", value: canonical_sq, holds: canonical_sq == k2 },
    ])
}
